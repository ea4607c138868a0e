//! Writes SVG figures for every stage of one pipeline run.

use hudg::document::{ArrangementPayload, Document, Payload};
use hudg::pipeline::{gadget_solver_config, run_pipeline};
use hudg::plot::render;
use std::path::PathBuf;

fn main() -> hudg::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| std::env::temp_dir().join("hudg-figures"));
    std::fs::create_dir_all(&dir).map_err(|e| hudg::Error::Invalid(e.to_string()))?;
    let r = run_pipeline(3, 1, &gadget_solver_config(1))?;
    let docs = [
        ("arrangement", Payload::Arrangement(ArrangementPayload { lines: r.lines.clone() })),
        ("description", Payload::Description(r.description.clone())),
        ("graph", Payload::Graph(r.graph.clone())),
        ("euclidean", Payload::Realization(r.euclidean.realization.clone())),
        ("hyperbolic", Payload::Realization(r.embedding.realization.clone())),
    ];
    for (name, payload) in docs {
        let svg = render(&Document::new(payload), Some(&r.graph))?;
        let path = dir.join(format!("{name}.svg"));
        std::fs::write(&path, svg).map_err(|e| hudg::Error::Invalid(e.to_string()))?;
        println!("{}", path.display());
    }
    Ok(())
}
