//! Shrinks a Euclidean unit disk realization into the hyperbolic plane.

use hudg::embed::scale_embed;
use hudg::witness::verify_udg;
use hudg::{LabeledGraph, Point2};

fn main() -> hudg::Result<()> {
    // 5×5 unit grid: neighbours at distance 1, diagonals at √2.
    let pts: Vec<Point2> = (0..25).map(|k| Point2::new((k % 5) as f64, (k / 5) as f64)).collect();
    let mut edges = Vec::new();
    for u in 0..25 {
        for v in u + 1..25 {
            if pts[u].dist(pts[v]) <= 1.0 + 1e-9 {
                edges.push((u, v));
            }
        }
    }
    let g = LabeledGraph::plain(25, edges)?;

    let euclid = verify_udg(&g, &pts)?;
    println!("Euclidean interval [{}, {})", euclid.lo, euclid.hi);
    for t in [1.05, 1.2, 1.4] {
        let e = scale_embed(&g, &pts, t)?;
        let d = e.interval.to_distance();
        println!(
            "t = {t}: scale {} after {} halvings, hyperbolic threshold {:.6} in [{:.6}, {:.6})",
            e.scale,
            e.halvings,
            e.realization.threshold.unwrap_or(f64::NAN),
            d.lo,
            d.hi
        );
    }
    Ok(())
}
