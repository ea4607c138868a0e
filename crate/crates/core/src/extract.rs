//! Recovering a line arrangement from a hyperbolic realization of a gadget graph.
//!
//! Line `i` is the perpendicular bisector of `a_i` and `b_i`. On the
//! hyperboloid, `d(p, a) = d(p, b)` iff `B(p, a) = B(p, b)` because `arccosh`
//! is monotone, i.e. iff `B(p, a − b) = 0`: the bisector is the intersection
//! of the sheet with a plane through the origin of ℝ³.

use crate::arrangement::{CombinatorialDescription, OrientedLine, Sign, SignVector};
use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, Role};
use crate::hypgeo::{hyp_distance, minkowski_b_raw, HPoint};
use crate::witness::verify_hudg;

/// Minimum hyperbolic distance between the two points defining a bisector.
pub const DEGENERACY_GAP: f64 = 1e-7;
/// `|B(p, w)|` at or below this counts as "on the bisector".
pub const ZERO_BAND: f64 = 1e-9;

/// Hyperbolic line `{p : B(p, w) = 0}`; the negative side is nearer to `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BisectorLine {
    w: [f64; 3],
}

impl BisectorLine {
    pub fn normal(&self) -> [f64; 3] {
        self.w
    }

    /// The line as a chord of the Klein disk, same orientation.
    pub fn klein_line(&self) -> OrientedLine {
        let [wx, wy, wz] = self.w;
        OrientedLine::new(-wx, -wy, wz).expect("bisector of distinct on-sheet points has a spatial part")
    }
}

pub fn bisector(a: &HPoint, b: &HPoint) -> Result<BisectorLine> {
    let d = hyp_distance(a, b)?;
    if !(d > DEGENERACY_GAP) {
        return Err(Error::DegeneratePair(d));
    }
    let (a, b) = (a.coords(), b.coords());
    Ok(BisectorLine { w: [a[0] - b[0], a[1] - b[1], a[2] - b[2]] })
}

/// `−` on the `a` side (`B(p, a) < B(p, b)` means `p` is closer to `a`).
pub fn side_of(line: &BisectorLine, p: &HPoint) -> Sign {
    Sign::of(minkowski_b_raw(p.coords(), line.w), ZERO_BAND)
}

/// Reads the combinatorial description off a realization of a gadget graph.
///
/// Cell vertex `c_j` gets sign vector `(side_of(ℓ_i, c_j))_i`; the result is
/// the set of those vectors.
pub fn extract_description(g: &LabeledGraph, points: &[HPoint]) -> Result<CombinatorialDescription> {
    let (n, m) = g
        .gadget_shape()
        .ok_or_else(|| Error::InvalidGraph("graph does not have the a/b/c gadget roles".into()))?;
    let iv = verify_hudg(g, points)?;
    if !iv.is_feasible() {
        return Err(Error::Infeasible { lo: iv.lo, hi: iv.hi });
    }
    let idx = g.role_index();
    let lines = (0..n)
        .map(|i| bisector(&points[idx[&Role::A(i)]], &points[idx[&Role::B(i)]]))
        .collect::<Result<Vec<_>>>()?;
    let mut cells = Vec::with_capacity(m);
    for j in 0..m {
        let c = &points[idx[&Role::C(j)]];
        let v: Vec<Sign> = lines.iter().map(|l| side_of(l, c)).collect();
        if v.contains(&Sign::Zero) {
            return Err(Error::Degenerate(format!("cell vertex c{} lies on a bisector", j + 1)));
        }
        cells.push(SignVector::new(v));
    }
    CombinatorialDescription::new(n, cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypgeo::PolarPoint;

    fn polar(r: f64, deg: f64) -> HPoint {
        PolarPoint::new(r, deg.to_radians()).unwrap().to_hyperboloid()
    }

    #[test]
    fn symmetric_pair_bisector_contains_origin() {
        let l = bisector(&polar(1.0, 0.0), &polar(1.0, 180.0)).unwrap();
        assert!(minkowski_b_raw(HPoint::ORIGIN.coords(), l.normal()).abs() < 1e-15);
        assert_eq!(side_of(&l, &HPoint::ORIGIN), Sign::Zero);
    }

    #[test]
    fn diagonal_bisector() {
        let (s, c) = (1f64.sinh(), 1f64.cosh());
        let a = HPoint::new(s, 0.0, c).unwrap();
        let b = HPoint::new(0.0, s, c).unwrap();
        let l = bisector(&a, &b).unwrap();
        assert_eq!(l.normal(), [s, -s, 0.0]);
        for r in [0.0, 0.3, 1.0, 4.0] {
            let p = polar(r, 45.0);
            assert!(minkowski_b_raw(p.coords(), l.normal()).abs() < 1e-9 * p.z().powi(2));
        }
    }

    #[test]
    fn coincident_pair_rejected() {
        let a = polar(1.0, 20.0);
        assert!(matches!(bisector(&a, &a), Err(Error::DegeneratePair(_))));
    }

    #[test]
    fn sides_of_endpoints_and_midpoint() {
        let a = polar(0.8, 30.0);
        let b = polar(1.7, 250.0);
        let l = bisector(&a, &b).unwrap();
        assert_eq!(side_of(&l, &a), Sign::Minus);
        assert_eq!(side_of(&l, &b), Sign::Plus);
        assert_eq!(side_of(&l, &HPoint::midpoint(&a, &b)), Sign::Zero);
    }

    #[test]
    fn single_line_gadget() {
        // a1, b1, c1 (cell "-"), c2 (cell "+") on the x-axis.
        let g = LabeledGraph::new(
            vec![Role::A(0), Role::B(0), Role::C(0), Role::C(1)],
            [(0, 2), (1, 3), (2, 3)],
        )
        .unwrap();
        let pts = [polar(1.0, 180.0), polar(1.0, 0.0), polar(0.3, 180.0), polar(0.3, 0.0)];
        let d = extract_description(&g, &pts).unwrap();
        let got: Vec<_> = d.cells().map(|v| v.to_string()).collect();
        assert_eq!(got, ["-", "+"]);
    }

    #[test]
    fn non_gadget_graph_rejected() {
        let g = LabeledGraph::complete(2);
        assert!(extract_description(&g, &[HPoint::ORIGIN, polar(1.0, 0.0)]).is_err());
    }
}
