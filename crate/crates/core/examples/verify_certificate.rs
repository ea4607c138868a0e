//! Checks the six-leaf star certificate and sweeps thresholds across it.

use hudg::hypgeo::{HPoint, PolarPoint};
use hudg::witness::{interval_to_radius, threshold_edges, verify_hudg};
use hudg::{LabeledGraph, Points};
use std::collections::BTreeSet;

fn main() -> hudg::Result<()> {
    let g = LabeledGraph::star(6);
    let mut pts = vec![HPoint::ORIGIN];
    for k in 0..6 {
        pts.push(PolarPoint::new(2.0, (60.0 * k as f64).to_radians())?.to_hyperboloid());
    }
    let iv = verify_hudg(&g, &pts)?;
    let d = iv.to_distance();
    println!("form interval     [{}, {})", iv.lo, iv.hi);
    println!("distance interval [{}, {})", d.lo, d.hi);
    println!("suggested radius  {}", interval_to_radius(&iv)?);

    let want: BTreeSet<_> = g.edges().collect();
    let points = Points::Hyperboloid(pts);
    for t in [1.5, 1.99, 2.0, 2.4, 2.7, 2.72, 3.5] {
        let ok = threshold_edges(&points, t)? == want;
        println!("t = {t:<5} admitted {:<5} reproduces star {ok}", iv.admits(t));
    }
    Ok(())
}
