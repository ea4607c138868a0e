//! Reads the arrangement back off a hyperbolic realization of its gadget graph.

use hudg::extract::{bisector, extract_description, side_of};
use hudg::pipeline::{gadget_solver_config, run_pipeline};
use hudg::{Points, Role};

fn main() -> hudg::Result<()> {
    let report = run_pipeline(3, 2, &gadget_solver_config(2))?;
    let Points::Hyperboloid(pts) = &report.embedding.realization.points else { unreachable!() };
    let g = &report.graph;
    let idx = g.role_index();
    for i in 0..3 {
        let w = bisector(&pts[idx[&Role::A(i)]], &pts[idx[&Role::B(i)]])?;
        let l = w.klein_line();
        let signs: String = (0..report.description.len()).map(|j| side_of(&w, &pts[idx[&Role::C(j)]]).symbol()).collect();
        println!("bisector {}: klein {:+.4}x {:+.4}y {:+.4} = 0, cells {signs}", i + 1, l.a(), l.b(), l.c());
    }
    let recovered = extract_description(g, pts)?;
    for (a, b) in report.description.cells().zip(recovered.cells()) {
        println!("  {a}  {b}");
    }
    println!("identical: {}", recovered == report.description);
    Ok(())
}
