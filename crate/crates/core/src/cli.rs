//! Command-line front end.
//!
//! Every command prints exactly one JSON verdict line on standard output and
//! exits with 0 (accept/success), 1 (reject/failure) or 2 (invalid input).
//! Human-readable progress goes to standard error.

use crate::arrangement::{enumerate_cells, random_simple_arrangement};
use crate::document::{ArrangementPayload, Document, Payload};
use crate::embed::scale_embed;
use crate::error::Error;
use crate::extract::extract_description;
use crate::pipeline::{gadget_solver_config, run_pipeline};
use crate::plot;
use crate::reduction::build_gd;
use crate::solver::{solve_realization, SolveOutcome, SolverConfig};
use crate::witness::{interval_to_radius, verify, Geometry, Points};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hudg", version, about = "Hyperbolic unit disk graph toolkit")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GeometryArg {
    Euclidean,
    Hyperbolic,
}

impl From<GeometryArg> for Geometry {
    fn from(g: GeometryArg) -> Self {
        match g {
            GeometryArg::Euclidean => Geometry::Euclidean,
            GeometryArg::Hyperbolic => Geometry::Hyperboloid,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Random simple line arrangement.
    GenArrangement {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Combinatorial description (cell sign vectors) of an arrangement.
    Cells {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Gadget graph of a description.
    Reduce {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a realization certificate against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        realization: PathBuf,
    },
    /// Search for a realization.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        geometry: GeometryArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        restarts: Option<usize>,
        #[arg(long)]
        max_iters: Option<usize>,
        /// Slack relative to the threshold.
        #[arg(long)]
        margin: Option<f64>,
        #[arg(long)]
        init_spread: Option<f64>,
        #[arg(long)]
        step_init: Option<f64>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Move a Euclidean realization into the hyperbolic plane.
    Embed {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        realization: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Recover the description from a hyperbolic gadget realization.
    Extract {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        realization: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run every step end to end and compare descriptions.
    Pipeline {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write every intermediate document here.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Render a document as SVG.
    Plot {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Graph supplying vertex roles for realization plots.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::GenArrangement { .. } => "gen-arrangement",
            Command::Cells { .. } => "cells",
            Command::Reduce { .. } => "reduce",
            Command::Verify { .. } => "verify",
            Command::Solve { .. } => "solve",
            Command::Embed { .. } => "embed",
            Command::Extract { .. } => "extract",
            Command::Pipeline { .. } => "pipeline",
            Command::Plot { .. } => "plot",
        }
    }
}

/// Outcome of a command that ran to completion.
struct Verdict {
    code: i32,
    body: Value,
}

impl Verdict {
    fn ok(body: Value) -> Self {
        Self { code: EXIT_OK, body }
    }

    fn reject(body: Value) -> Self {
        Self { code: EXIT_REJECT, body }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Infeasible { .. }
        | Error::EmbedFailed(_)
        | Error::SolverFailed(_) | Error::DegeneratePair(_) | Error::RetriesExhausted(_) => {
            EXIT_REJECT
        }
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let name = cli.command.name();
    let (code, mut body) = match execute(cli.command) {
        Ok(v) => (v.code, v.body),
        Err(e) => (exit_code(&e), json!({ "status": "error", "error": e.to_string() })),
    };
    if let Value::Object(map) = &mut body {
        map.insert("command".into(), Value::from(name));
    }
    println!("{body}");
    code
}

fn load(path: &Path) -> crate::Result<Document> {
    Document::load(path)
}

fn execute(cmd: Command) -> crate::Result<Verdict> {
    match cmd {
        Command::GenArrangement { n, seed, out } => {
            let lines = random_simple_arrangement(n, seed)?;
            Document::new(Payload::Arrangement(ArrangementPayload { lines }))
                .with_meta("seed", seed)
                .with_meta("source", "gen-arrangement")
                .save(&out)?;
            Ok(Verdict::ok(json!({ "status": "success", "lines": n, "out": out })))
        }
        Command::Cells { input, out } => {
            let lines = load(&input)?.into_lines()?;
            let cells = enumerate_cells(&lines)?;
            let count = cells.description.len();
            Document::new(Payload::Description(cells.description)).with_meta("source", "cells").save(&out)?;
            Ok(Verdict::ok(json!({ "status": "success", "lines": lines.len(), "cells": count, "out": out })))
        }
        Command::Reduce { input, out } => {
            let d = load(&input)?.into_description()?;
            let g = build_gd(&d)?;
            let body = json!({
                "status": "success",
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "out": out,
            });
            Document::new(Payload::Graph(g)).with_meta("source", "reduce").save(&out)?;
            Ok(Verdict::ok(body))
        }
        Command::Verify { graph, realization } => {
            let g = load(&graph)?.into_graph()?;
            let r = load(&realization)?.into_realization()?;
            let iv = verify(&g, &r)?;
            let mut body = json!({
                "geometry": r.geometry(),
                "interval": iv,
                "distance_interval": iv.to_distance(),
            });
            let accepted = iv.is_feasible() && r.threshold.map_or(true, |t| iv.admits(t));
            body["status"] = Value::from(if accepted { "accept" } else { "reject" });
            if let Some(t) = r.threshold {
                body["threshold"] = json!(t);
                body["threshold_admitted"] = json!(iv.admits(t));
            }
            if iv.is_feasible() {
                body["suggested_threshold"] = json!(interval_to_radius(&iv)?);
            }
            Ok(if accepted { Verdict::ok(body) } else { Verdict::reject(body) })
        }
        Command::Solve { graph, geometry, seed, restarts, max_iters, margin, init_spread, step_init, out } => {
            let g = load(&graph)?.into_graph()?;
            let base = SolverConfig::default();
            let cfg = SolverConfig {
                seed,
                restarts: restarts.unwrap_or(base.restarts),
                max_iters: max_iters.unwrap_or(base.max_iters),
                margin: margin.unwrap_or(base.margin),
                init_spread: init_spread.unwrap_or(base.init_spread),
                step_init: step_init.unwrap_or(base.step_init),
                verbose: true,
            };
            match solve_realization(&g, geometry.into(), &cfg)? {
                SolveOutcome::Success(s) => {
                    let body = json!({
                        "status": "success",
                        "restart": s.restart,
                        "iterations": s.iterations,
                        "interval": s.interval,
                        "threshold": s.realization.threshold,
                        "out": out,
                    });
                    Document::new(Payload::Realization(s.realization))
                        .with_meta("seed", seed)
                        .with_meta("source", "solve")
                        .save(&out)?;
                    Ok(Verdict::ok(body))
                }
                SolveOutcome::Failure(f) => Ok(Verdict::reject(json!({
                    "status": "failure",
                    "best_penalty": f.best_penalty,
                    "restarts": f.restart_penalties.len(),
                    "note": "search failure is not evidence of non-realizability",
                }))),
            }
        }
        Command::Embed { graph, realization, out } => {
            let g = load(&graph)?.into_graph()?;
            let r = load(&realization)?.into_realization()?;
            let Points::Euclidean(points) = &r.points else {
                return Err(Error::Invalid("embed needs a Euclidean realization".into()));
            };
            let t = match r.threshold {
                Some(t) => t,
                None => interval_to_radius(&verify(&g, &r)?)?,
            };
            let e = scale_embed(&g, points, t)?;
            let body = json!({
                "status": "success",
                "scale": e.scale,
                "halvings": e.halvings,
                "interval": e.interval,
                "threshold": e.realization.threshold,
                "out": out,
            });
            Document::new(Payload::Realization(e.realization)).with_meta("source", "embed").save(&out)?;
            Ok(Verdict::ok(body))
        }
        Command::Extract { graph, realization, out } => {
            let g = load(&graph)?.into_graph()?;
            let r = load(&realization)?.into_realization()?;
            let Points::Hyperboloid(points) = &r.points else {
                return Err(Error::Invalid("extract needs a hyperboloid realization".into()));
            };
            let d = extract_description(&g, points)?;
            let cells: Vec<String> = d.cells().map(|v| v.to_string()).collect();
            let body = json!({ "status": "success", "lines": d.n(), "cells": cells, "out": out });
            Document::new(Payload::Description(d)).with_meta("source", "extract").save(&out)?;
            Ok(Verdict::ok(body))
        }
        Command::Pipeline { n, seed, out_dir } => {
            let report = run_pipeline(n, seed, &gadget_solver_config(seed))?;
            eprintln!("step 1  arrangement: {n} lines (seed {seed})");
            eprintln!("step 2  cells: {}", report.description.len());
            eprintln!(
                "step 3  gadget graph: {} vertices, {} edges",
                report.graph.vertex_count(),
                report.graph.edge_count()
            );
            eprintln!(
                "step 4  euclidean realization: restart {}, interval [{:.6}, {:.6})",
                report.euclidean.restart, report.euclidean.interval.lo, report.euclidean.interval.hi
            );
            eprintln!(
                "step 5  hyperbolic embedding: scale {} after {} halvings, form interval [{:.9}, {:.9})",
                report.embedding.scale,
                report.embedding.halvings,
                report.hyperbolic_interval.lo,
                report.hyperbolic_interval.hi
            );
            eprintln!("step 6  recovered description equal: {}", report.round_trip());
            if let Some(dir) = out_dir {
                std::fs::create_dir_all(&dir).map_err(|e| Error::Invalid(format!("cannot create {}: {e}", dir.display())))?;
                let docs = [
                    ("arrangement.json", Payload::Arrangement(ArrangementPayload { lines: report.lines.clone() })),
                    ("description.json", Payload::Description(report.description.clone())),
                    ("graph.json", Payload::Graph(report.graph.clone())),
                    ("euclidean.json", Payload::Realization(report.euclidean.realization.clone())),
                    ("hyperbolic.json", Payload::Realization(report.embedding.realization.clone())),
                    ("recovered.json", Payload::Description(report.recovered.clone())),
                ];
                for (file, payload) in docs {
                    Document::new(payload).with_meta("seed", seed).with_meta("source", "pipeline").save(&dir.join(file))?;
                }
            }
            let body = json!({
                "status": if report.round_trip() { "success" } else { "failure" },
                "lines": n,
                "seed": seed,
                "cells": report.description.len(),
                "vertices": report.graph.vertex_count(),
                "edges": report.graph.edge_count(),
                "embed_scale": report.embedding.scale,
                "hyperbolic_interval": report.hyperbolic_interval,
                "round_trip": report.round_trip(),
            });
            Ok(if report.round_trip() { Verdict::ok(body) } else { Verdict::reject(body) })
        }
        Command::Plot { input, out, graph } => {
            let doc = load(&input)?;
            let g = graph.map(|p| load(&p).and_then(Document::into_graph)).transpose()?;
            let svg = plot::render(&doc, g.as_ref())?;
            std::fs::write(&out, svg).map_err(|e| Error::Invalid(format!("cannot write {}: {e}", out.display())))?;
            Ok(Verdict::ok(json!({ "status": "success", "kind": doc.payload.kind(), "out": out })))
        }
    }
}
