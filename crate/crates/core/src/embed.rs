//! Euclidean unit disk realizations reinterpreted in the hyperbolic plane.
//!
//! Polar coordinates about the centroid are reused as hyperbolic polar
//! coordinates after shrinking everything by a factor `s`. For small `s` the
//! hyperbolic plane is locally almost Euclidean, so adjacencies survive. The
//! scale is found by halving from `s = 1`, with every candidate checked by the
//! exact certificate verifier.

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::hypgeo::{HPoint, PolarPoint};
use crate::plane::{centroid, Point2};
use crate::witness::{verify_hudg, verify_udg, Realization, ThresholdInterval};

pub const MAX_HALVINGS: u32 = 64;

#[derive(Debug, Clone)]
pub struct Embedding {
    /// Hyperboloid realization with threshold `scale · t`.
    pub realization: Realization,
    pub scale: f64,
    pub halvings: u32,
    /// Form-space interval of the accepted realization.
    pub interval: ThresholdInterval,
}

/// Hyperbolic points at polar `(s · r, θ)` where `(r, θ)` are the Euclidean
/// polar coordinates about `center`.
pub fn polar_reinterpret(points: &[Point2], center: Point2, s: f64) -> Vec<HPoint> {
    points
        .iter()
        .map(|&p| {
            let d = p - center;
            PolarPoint::new(s * d.norm(), d.y.atan2(d.x))
                .expect("finite nonnegative radius")
                .to_hyperboloid()
        })
        .collect()
}

/// Embeds a Euclidean realization of `g` with threshold `t` into the hyperbolic plane.
pub fn scale_embed(g: &LabeledGraph, points: &[Point2], t: f64) -> Result<Embedding> {
    let euclid = verify_udg(g, points)?;
    if !euclid.admits(t) {
        return Err(Error::Invalid(format!(
            "threshold {t} is not inside the Euclidean interval [{}, {})",
            euclid.lo, euclid.hi
        )));
    }
    let center = centroid(points);
    let mut s = 1.0;
    for halvings in 0..=MAX_HALVINGS {
        let hyp = polar_reinterpret(points, center, s);
        let iv = verify_hudg(g, &hyp)?;
        let c = (s * t).cosh();
        if iv.lo < c && c < iv.hi {
            return Ok(Embedding {
                realization: Realization::hyperboloid(hyp, Some(s * t)),
                scale: s,
                halvings,
                interval: iv,
            });
        }
        s *= 0.5;
    }
    Err(Error::EmbedFailed(MAX_HALVINGS))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::{threshold_edges, Points};

    #[test]
    fn single_vertex() {
        let g = LabeledGraph::plain(1, []).unwrap();
        let e = scale_embed(&g, &[Point2::new(3.0, 4.0)], 1.0).unwrap();
        assert_eq!(e.scale, 1.0);
        let Points::Hyperboloid(p) = &e.realization.points else { panic!() };
        assert_eq!(p[0], HPoint::ORIGIN);
    }

    #[test]
    fn k2_accepted_immediately() {
        let g = LabeledGraph::complete(2);
        let e = scale_embed(&g, &[Point2::new(0.0, 0.0), Point2::new(1.0, 0.0)], 1.2).unwrap();
        assert_eq!(e.halvings, 0);
        assert_eq!(e.realization.threshold, Some(1.2));
    }

    #[test]
    fn unit_square_cycle() {
        let g = LabeledGraph::cycle(4);
        let sq = [Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(1.0, 1.0), Point2::new(0.0, 1.0)];
        let e = scale_embed(&g, &sq, 1.2).unwrap();
        assert!(e.scale <= 1.0);
        let t = e.realization.threshold.unwrap();
        let edges = threshold_edges(&e.realization.points, t).unwrap();
        assert_eq!(edges, g.edges().collect());
    }

    #[test]
    fn rejects_threshold_outside_interval() {
        let g = LabeledGraph::path(3);
        let pts = [Point2::new(0.0, 0.0), Point2::new(1.0, 0.0), Point2::new(2.0, 0.0)];
        assert!(scale_embed(&g, &pts, 2.5).is_err());
        assert!(scale_embed(&g, &pts, 0.5).is_err());
    }

    #[test]
    fn collocated_points_map_to_origin() {
        let g = LabeledGraph::complete(2);
        let pts = [Point2::new(1.0, 1.0), Point2::new(1.0, 1.0)];
        let e = scale_embed(&g, &pts, 0.5).unwrap();
        let Points::Hyperboloid(p) = &e.realization.points else { panic!() };
        assert!(p.iter().all(|q| *q == HPoint::ORIGIN));
    }
}
