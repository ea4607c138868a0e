#![allow(dead_code)]

use hudg::hypgeo::{HPoint, PolarPoint};
use hudg::{LabeledGraph, Point2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_hpoint(rng: &mut ChaCha8Rng, max_r: f64) -> HPoint {
    PolarPoint::new(rng.gen_range(0.0..max_r), rng.gen_range(0.0..std::f64::consts::TAU))
        .unwrap()
        .to_hyperboloid()
}

pub fn polar(r: f64, deg: f64) -> HPoint {
    PolarPoint::new(r, deg.to_radians()).unwrap().to_hyperboloid()
}

/// Origin plus six leaves at polar (2, k·60°).
pub fn star_certificate() -> Vec<HPoint> {
    let mut pts = vec![HPoint::ORIGIN];
    pts.extend((0..6).map(|k| polar(2.0, 60.0 * k as f64)));
    pts
}

/// Threshold graph of random points in a square: a unit disk graph by construction.
pub fn random_udg(rng: &mut ChaCha8Rng, n: usize, side: f64) -> (LabeledGraph, Vec<Point2>) {
    let pts: Vec<Point2> = (0..n)
        .map(|_| Point2::new(rng.gen_range(0.0..side), rng.gen_range(0.0..side)))
        .collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if pts[u].dist(pts[v]) <= 1.0 {
                edges.push((u, v));
            }
        }
    }
    (LabeledGraph::plain(n, edges).unwrap(), pts)
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> LabeledGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    LabeledGraph::plain(n, edges).unwrap()
}
