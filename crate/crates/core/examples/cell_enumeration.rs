//! Enumerates the cells of a random simple arrangement.

use hudg::arrangement::{enumerate_cells, random_simple_arrangement, simple_cell_count};

fn main() -> hudg::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let lines = random_simple_arrangement(n, 7)?;
    for (i, l) in lines.iter().enumerate() {
        println!("line {}: {:+.4}x {:+.4}y {:+.4} = 0", i + 1, l.a(), l.b(), l.c());
    }
    let cells = enumerate_cells(&lines)?;
    println!("{} cells (expected {})", cells.description.len(), simple_cell_count(n));
    for (v, p) in &cells.representatives {
        println!("  {v}  at ({:+.3}, {:+.3})", p.x, p.y);
    }
    Ok(())
}
