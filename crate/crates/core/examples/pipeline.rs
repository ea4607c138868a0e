//! Runs the whole chain for a few arrangements: lines, cells, gadget graph,
//! Euclidean solve, hyperbolic embedding, bisector extraction.

use hudg::pipeline::{gadget_solver_config, run_pipeline};

fn main() {
    for (n, seed) in [(2, 0), (3, 1), (4, 2), (3, 5)] {
        match run_pipeline(n, seed, &gadget_solver_config(seed)) {
            Ok(r) => println!(
                "n = {n} seed = {seed}: {} cells, {} vertices, {} edges, restart {}, scale {}, round trip {}",
                r.description.len(),
                r.graph.vertex_count(),
                r.graph.edge_count(),
                r.euclidean.restart,
                r.embedding.scale,
                r.round_trip()
            ),
            Err(e) => println!("n = {n} seed = {seed}: {e}"),
        }
    }
}
