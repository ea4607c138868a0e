//! The six-leaf star: hyperbolic realizations are easy, Euclidean ones never appear.

use hudg::solver::{solve_realization, SolveOutcome, SolverConfig};
use hudg::{Geometry, LabeledGraph};

fn main() -> hudg::Result<()> {
    let g = LabeledGraph::star(6);
    let cfg = SolverConfig { restarts: 100, ..SolverConfig::default() };
    match solve_realization(&g, Geometry::Euclidean, &cfg)? {
        SolveOutcome::Success(_) => println!("euclidean: unexpected success"),
        SolveOutcome::Failure(f) => {
            let worst = f.restart_penalties.iter().cloned().fold(0.0, f64::max);
            println!("euclidean: {} restarts, penalty in [{:.3e}, {worst:.3e}]", f.restart_penalties.len(), f.best_penalty);
        }
    }
    if let SolveOutcome::Success(s) = solve_realization(&g, Geometry::Hyperboloid, &SolverConfig::default())? {
        let d = s.interval.to_distance();
        println!("hyperbolic: restart {}, {} iterations, interval [{:.4}, {:.4})", s.restart, s.iterations, d.lo, d.hi);
        println!("{}", serde_json::to_string_pretty(&s.realization).expect("serializable"));
    }
    Ok(())
}
