//! Builds the gadget graph of a three-line arrangement and prints its adjacency.

use hudg::arrangement::{enumerate_cells, random_simple_arrangement};
use hudg::reduction::build_gd;

fn main() -> hudg::Result<()> {
    let d = enumerate_cells(&random_simple_arrangement(3, 1)?)?.description;
    let g = build_gd(&d)?;
    println!("{} vertices, {} edges", g.vertex_count(), g.edge_count());
    let cells: Vec<_> = d.cells().collect();
    for v in 0..g.vertex_count() {
        let row: String = (0..g.vertex_count()).map(|u| if g.has_edge(u, v) { '#' } else { '.' }).collect();
        let note = match g.role(v) {
            hudg::Role::C(j) => format!("  {}", cells[j]),
            _ => String::new(),
        };
        println!("{:>3} {row}{note}", g.role(v).to_string());
    }
    Ok(())
}
