//! Certificate verification for (hyperbolic) unit disk graphs.
//!
//! A realization places one point per vertex. It certifies the graph when
//! some threshold separates every edge (separation at most the threshold)
//! from every non-edge (separation above it), which happens exactly when the
//! largest edge separation is below the smallest non-edge separation. For
//! hyperboloid points the comparison runs on the Minkowski form itself: it is
//! polynomial in the coordinates, and `arccosh` is monotone, so no
//! transcendental function is needed to decide.

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::hypgeo::{arccosh, hyp_distance, minkowski_b, HPoint};
use crate::plane::Point2;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Geometry {
    Euclidean,
    Hyperboloid,
}

impl std::fmt::Display for Geometry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Geometry::Euclidean => "euclidean",
            Geometry::Hyperboloid => "hyperboloid",
        })
    }
}

impl std::str::FromStr for Geometry {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euclidean" => Ok(Geometry::Euclidean),
            "hyperboloid" | "hyperbolic" => Ok(Geometry::Hyperboloid),
            other => Err(Error::Invalid(format!("unknown geometry {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Points {
    Euclidean(Vec<Point2>),
    Hyperboloid(Vec<HPoint>),
}

impl Points {
    pub fn len(&self) -> usize {
        match self {
            Points::Euclidean(p) => p.len(),
            Points::Hyperboloid(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn geometry(&self) -> Geometry {
        match self {
            Points::Euclidean(_) => Geometry::Euclidean,
            Points::Hyperboloid(_) => Geometry::Hyperboloid,
        }
    }

    /// Separation (distance) between points `u` and `v`.
    pub fn distance(&self, u: usize, v: usize) -> Result<f64> {
        match self {
            Points::Euclidean(p) => Ok(p[u].dist(p[v])),
            Points::Hyperboloid(p) => hyp_distance(&p[u], &p[v]),
        }
    }
}

/// Point placement for a graph, with an optional distance threshold.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawRealization", into = "RawRealization")]
pub struct Realization {
    pub points: Points,
    pub threshold: Option<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawRealization {
    geometry: Geometry,
    points: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    threshold: Option<f64>,
}

impl TryFrom<RawRealization> for Realization {
    type Error = Error;
    fn try_from(r: RawRealization) -> Result<Self> {
        let arity = |want: usize, p: &Vec<f64>| {
            if p.len() == want {
                Ok(())
            } else {
                Err(Error::Invalid(format!("{} point needs {want} coordinates, got {}", r.geometry, p.len())))
            }
        };
        let points = match r.geometry {
            Geometry::Euclidean => Points::Euclidean(
                r.points
                    .iter()
                    .map(|p| arity(2, p).map(|_| Point2::new(p[0], p[1])))
                    .collect::<Result<_>>()?,
            ),
            Geometry::Hyperboloid => Points::Hyperboloid(
                r.points
                    .iter()
                    .map(|p| arity(3, p).and_then(|_| HPoint::new(p[0], p[1], p[2])))
                    .collect::<Result<_>>()?,
            ),
        };
        if let Some(t) = r.threshold {
            if !(t >= 0.0 && t.is_finite()) {
                return Err(Error::Invalid(format!("threshold must be finite and nonnegative, got {t}")));
            }
        }
        Ok(Realization { points, threshold: r.threshold })
    }
}

impl From<Realization> for RawRealization {
    fn from(r: Realization) -> Self {
        let geometry = r.points.geometry();
        let points = match r.points {
            Points::Euclidean(p) => p.into_iter().map(|q| vec![q.x, q.y]).collect(),
            Points::Hyperboloid(p) => p.into_iter().map(|q| q.coords().to_vec()).collect(),
        };
        RawRealization { geometry, points, threshold: r.threshold }
    }
}

impl Realization {
    pub fn euclidean(points: Vec<Point2>, threshold: Option<f64>) -> Self {
        Self { points: Points::Euclidean(points), threshold }
    }

    pub fn hyperboloid(points: Vec<HPoint>, threshold: Option<f64>) -> Self {
        Self { points: Points::Hyperboloid(points), threshold }
    }

    pub fn geometry(&self) -> Geometry {
        self.points.geometry()
    }
}

/// Which quantity the endpoints of a [`ThresholdInterval`] measure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Space {
    Distance,
    BilinearForm,
}

/// `[lo, hi)`: `lo` is the largest edge separation, `hi` the smallest
/// non-edge separation. Any threshold `t` with `lo ≤ t < hi` reproduces the
/// graph; feasible iff `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThresholdInterval {
    pub lo: f64,
    #[serde(with = "infinite_as_null")]
    pub hi: f64,
    pub space: Space,
}

mod infinite_as_null {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_infinite() {
            s.serialize_none()
        } else {
            s.serialize_f64(*v)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::INFINITY))
    }
}

impl ThresholdInterval {
    pub fn is_feasible(&self) -> bool {
        self.lo < self.hi
    }

    /// The same interval with endpoints as distances.
    pub fn to_distance(&self) -> ThresholdInterval {
        match self.space {
            Space::Distance => *self,
            Space::BilinearForm => ThresholdInterval {
                lo: arccosh(self.lo.max(1.0)),
                hi: if self.hi.is_finite() { arccosh(self.hi.max(1.0)) } else { f64::INFINITY },
                space: Space::Distance,
            },
        }
    }

    /// Whether a distance threshold `t` reproduces the graph.
    pub fn admits(&self, t: f64) -> bool {
        match self.space {
            Space::Distance => self.lo <= t && t < self.hi,
            Space::BilinearForm => {
                let c = t.cosh();
                self.lo <= c && c < self.hi
            }
        }
    }

    /// Width in distance units.
    pub fn distance_width(&self) -> f64 {
        let d = self.to_distance();
        d.hi - d.lo
    }
}

fn check_arity(g: &LabeledGraph, points: usize) -> Result<()> {
    if g.vertex_count() != points {
        return Err(Error::Arity { vertices: g.vertex_count(), points });
    }
    Ok(())
}

fn separation_interval(
    g: &LabeledGraph,
    edgeless_lo: f64,
    space: Space,
    mut sep: impl FnMut(usize, usize) -> f64,
) -> ThresholdInterval {
    let mut lo = edgeless_lo;
    let mut hi = f64::INFINITY;
    for (u, v, adjacent) in g.pairs() {
        let s = sep(u, v);
        if adjacent {
            lo = lo.max(s);
        } else {
            hi = hi.min(s);
        }
    }
    ThresholdInterval { lo, hi, space }
}

/// Hyperbolic certificate check on the Minkowski form: `O(|V|²)` form
/// evaluations, no transcendental functions.
pub fn verify_hudg(g: &LabeledGraph, points: &[HPoint]) -> Result<ThresholdInterval> {
    check_arity(g, points.len())?;
    Ok(separation_interval(g, 1.0, Space::BilinearForm, |u, v| minkowski_b(&points[u], &points[v])))
}

/// Like [`verify_hudg`] on raw coordinates; off-sheet points are rejected
/// before any comparison.
pub fn verify_hudg_raw(g: &LabeledGraph, coords: &[[f64; 3]]) -> Result<ThresholdInterval> {
    let points = coords
        .iter()
        .map(|&[x, y, z]| HPoint::new(x, y, z))
        .collect::<Result<Vec<_>>>()?;
    verify_hudg(g, &points)
}

pub fn verify_udg(g: &LabeledGraph, points: &[Point2]) -> Result<ThresholdInterval> {
    check_arity(g, points.len())?;
    Ok(separation_interval(g, 0.0, Space::Distance, |u, v| points[u].dist(points[v])))
}

/// Dispatches on the realization's geometry.
pub fn verify(g: &LabeledGraph, r: &Realization) -> Result<ThresholdInterval> {
    match &r.points {
        Points::Euclidean(p) => verify_udg(g, p),
        Points::Hyperboloid(p) => verify_hudg(g, p),
    }
}

/// A distance threshold strictly inside a feasible interval.
///
/// Form space uses the geometric mean of the endpoints, distance space the
/// arithmetic mean. An unbounded interval gets `cosh t = 2·lo` (form) or
/// `t = 2·lo` (distance, `1` when `lo = 0`).
pub fn interval_to_radius(iv: &ThresholdInterval) -> Result<f64> {
    if !iv.is_feasible() {
        return Err(Error::Infeasible { lo: iv.lo, hi: iv.hi });
    }
    let t = match (iv.space, iv.hi.is_finite()) {
        (Space::BilinearForm, true) => arccosh((iv.lo * iv.hi).sqrt()),
        (Space::BilinearForm, false) => arccosh(2.0 * iv.lo),
        (Space::Distance, true) => 0.5 * (iv.lo + iv.hi),
        (Space::Distance, false) => {
            if iv.lo > 0.0 {
                2.0 * iv.lo
            } else {
                1.0
            }
        }
    };
    Ok(t)
}

/// Edges `(u, v)`, `u < v`, whose separation is at most `t`.
pub fn threshold_edges(points: &Points, t: f64) -> Result<BTreeSet<(usize, usize)>> {
    let n = points.len();
    let mut edges = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if points.distance(u, v)? <= t {
                edges.insert((u, v));
            }
        }
    }
    Ok(edges)
}
