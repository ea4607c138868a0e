mod common;

use common::{random_hpoint, random_udg, rng, star_certificate};
use hudg::hypgeo::{hyp_distance, minkowski_b};
use hudg::witness::{interval_to_radius, threshold_edges, verify_hudg, verify_udg, Space};
use hudg::{LabeledGraph, Point2, Points};
use rand::Rng;
use std::collections::BTreeSet;

/// The interval recomputed over arccosh distances instead of the form.
fn distance_interval(g: &LabeledGraph, pts: &[hudg::HPoint]) -> (f64, f64) {
    let (mut lo, mut hi) = (0.0f64, f64::INFINITY);
    for (u, v, adjacent) in g.pairs() {
        let d = hyp_distance(&pts[u], &pts[v]).unwrap();
        if adjacent {
            lo = lo.max(d);
        } else {
            hi = hi.min(d);
        }
    }
    (lo, hi)
}

#[test]
fn form_and_distance_verdicts_agree() {
    let mut rng = rng(11);
    let mut accepted = 0;
    for k in 0..100 {
        let n = rng.gen_range(2..10);
        let pts: Vec<_> = (0..n).map(|_| random_hpoint(&mut rng, 3.0)).collect();
        // Half the instances are threshold graphs (accepted), half are perturbed.
        let t = rng.gen_range(0.5..4.0);
        let mut edges: BTreeSet<_> = threshold_edges(&Points::Hyperboloid(pts.clone()), t).unwrap();
        if k % 2 == 1 {
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v {
                let e = (u.min(v), u.max(v));
                if !edges.remove(&e) {
                    edges.insert(e);
                }
            }
        }
        let g = LabeledGraph::plain(n, edges).unwrap();
        let form = verify_hudg(&g, &pts).unwrap();
        let (lo, hi) = distance_interval(&g, &pts);
        assert_eq!(form.is_feasible(), lo < hi, "instance {k}");
        accepted += form.is_feasible() as usize;
    }
    assert!(accepted >= 50);
}

#[test]
fn accepted_thresholds_reproduce_edges() {
    let mut rng = rng(12);
    for _ in 0..100 {
        let n = rng.gen_range(2..10);
        let pts: Vec<_> = (0..n).map(|_| random_hpoint(&mut rng, 3.0)).collect();
        let t0 = rng.gen_range(0.5..4.0);
        let points = Points::Hyperboloid(pts.clone());
        let edges = threshold_edges(&points, t0).unwrap();
        let g = LabeledGraph::plain(n, edges.clone()).unwrap();
        let iv = verify_hudg(&g, &pts).unwrap();
        assert!(iv.is_feasible());
        let d = iv.to_distance();
        let hi = if d.hi.is_finite() { d.hi } else { d.lo + 5.0 };
        for k in 0..10 {
            let t = d.lo + (hi - d.lo) * (k as f64 + 0.5) / 10.0;
            if iv.admits(t) {
                assert_eq!(threshold_edges(&points, t).unwrap(), edges);
            }
        }
        let r = interval_to_radius(&iv).unwrap();
        assert!(iv.admits(r));
        assert_eq!(threshold_edges(&points, r).unwrap(), edges);
    }
}

#[test]
fn euclidean_scaling_invariance() {
    let mut rng = rng(13);
    for _ in 0..50 {
        let n = rng.gen_range(3..12);
        let (g, pts) = random_udg(&mut rng, n, 3.0);
        let iv = verify_udg(&g, &pts).unwrap();
        let lambda = rng.gen_range(0.01..100.0);
        let scaled: Vec<Point2> = pts.iter().map(|&p| p * lambda).collect();
        let jv = verify_udg(&g, &scaled).unwrap();
        assert_eq!(iv.is_feasible(), jv.is_feasible());
        assert!((jv.lo - lambda * iv.lo).abs() <= 1e-9 * lambda.max(1.0) * (1.0 + iv.lo));
        if iv.hi.is_finite() {
            assert!((jv.hi - lambda * iv.hi).abs() <= 1e-9 * lambda.max(1.0) * (1.0 + iv.hi));
        }
    }
}

#[test]
fn star_certificate_matches_direct_evaluation() {
    let pts = star_certificate();
    let iv = verify_hudg(&LabeledGraph::star(6), &pts).unwrap();
    assert_eq!(iv.space, Space::BilinearForm);
    assert!((iv.lo - minkowski_b(&pts[0], &pts[1])).abs() <= 1e-12);
    assert!((iv.hi - minkowski_b(&pts[1], &pts[2])).abs() <= 1e-12);
    let c2 = 2f64.cosh();
    let s2 = 2f64.sinh();
    assert!((iv.lo - c2).abs() <= 1e-6);
    assert!((iv.hi - (c2 * c2 - s2 * s2 / 2.0)).abs() <= 1e-6);
}
