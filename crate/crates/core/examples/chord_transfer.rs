//! Moves an arrangement into the Klein disk and back.

use hudg::arrangement::{chords_to_euclidean, enumerate_cells, euclidean_to_chords, random_simple_arrangement};

fn main() -> hudg::Result<()> {
    let lines = random_simple_arrangement(5, 3)?;
    let chords = euclidean_to_chords(&lines)?;
    for (i, c) in chords.chords().iter().enumerate() {
        println!("chord {}: ({:+.4}, {:+.4}) -> ({:+.4}, {:+.4})", i + 1, c.p.x, c.p.y, c.q.x, c.q.y);
    }
    let back = chords_to_euclidean(&chords)?;
    let before = enumerate_cells(&lines)?.description;
    let after = enumerate_cells(&back)?.description;
    println!("{} cells before, {} after, identical: {}", before.len(), after.len(), before == after);
    Ok(())
}
