//! End-to-end run: arrangement → cells → gadget graph → Euclidean realization
//! → hyperbolic embedding → certificate check → recovered description.

use crate::arrangement::{enumerate_cells, random_simple_arrangement, CombinatorialDescription, OrientedLine};
use crate::embed::{scale_embed, Embedding};
use crate::error::{Error, Result};
use crate::extract::extract_description;
use crate::graph::LabeledGraph;
use crate::reduction::build_gd;
use crate::solver::{solve_realization, Solution, SolveOutcome, SolverConfig};
use crate::witness::{verify_hudg, Geometry, Points, ThresholdInterval};

/// Solver settings for gadget graphs. Their realizations are tight (the
/// achievable slack is well under 1% of the threshold for four lines), so
/// the slack target is lower than the general default.
pub fn gadget_solver_config(seed: u64) -> SolverConfig {
    SolverConfig { seed, restarts: 50, max_iters: 3000, margin: 0.005, ..SolverConfig::default() }
}

#[derive(Debug, Clone)]
pub struct PipelineReport {
    pub lines: Vec<OrientedLine>,
    pub description: CombinatorialDescription,
    pub graph: LabeledGraph,
    pub euclidean: Solution,
    pub embedding: Embedding,
    pub hyperbolic_interval: ThresholdInterval,
    pub recovered: CombinatorialDescription,
}

impl PipelineReport {
    pub fn round_trip(&self) -> bool {
        self.recovered == self.description
    }
}

/// Runs every step for `n` random lines; any failing step aborts with its error.
pub fn run_pipeline(n: usize, seed: u64, cfg: &SolverConfig) -> Result<PipelineReport> {
    let lines = random_simple_arrangement(n, seed)?;
    let description = enumerate_cells(&lines)?.description;
    let graph = build_gd(&description)?;
    let euclidean = match solve_realization(&graph, Geometry::Euclidean, cfg)? {
        SolveOutcome::Success(s) => s,
        SolveOutcome::Failure(f) => return Err(Error::SolverFailed(f.best_penalty)),
    };
    let Points::Euclidean(points) = &euclidean.realization.points else {
        unreachable!("Euclidean solve returns Euclidean points")
    };
    let t = euclidean.realization.threshold.expect("solver sets a threshold");
    let embedding = scale_embed(&graph, points, t)?;
    let Points::Hyperboloid(hyp) = &embedding.realization.points else {
        unreachable!("embedding returns hyperboloid points")
    };
    let hyperbolic_interval = verify_hudg(&graph, hyp)?;
    if !hyperbolic_interval.is_feasible() {
        return Err(Error::Infeasible { lo: hyperbolic_interval.lo, hi: hyperbolic_interval.hi });
    }
    let recovered = extract_description(&graph, hyp)?;
    Ok(PipelineReport { lines, description, graph, euclidean, embedding, hyperbolic_interval, recovered })
}
