//! Models of the hyperbolic plane.
//!
//! The hyperboloid model is canonical: every hyperbolic position in this crate
//! is an [`HPoint`] on the forward sheet `z² − x² − y² = 1, z > 0`. The
//! Beltrami–Klein disk ([`KPoint`]) and native polar coordinates
//! ([`PolarPoint`]) only appear at conversion boundaries.
//!
//! Distances go through the Minkowski bilinear form, which is polynomial in
//! the coordinates; `arccosh` is applied only when an actual distance is
//! needed, and since it is monotone any comparison can be done on the form.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

/// Tolerance on `|Q(p) − 1|`, relative to `max(1, z²)`.
pub const ON_SHEET_TOLERANCE: f64 = 1e-9;

/// Point on the forward sheet of the hyperboloid.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "[f64; 3]", into = "[f64; 3]")]
pub struct HPoint {
    x: f64,
    y: f64,
    z: f64,
}

/// Point of the Beltrami–Klein model, strictly inside the unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KPoint {
    x: f64,
    y: f64,
}

/// Hyperbolic polar coordinates about the origin `(0, 0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarPoint {
    r: f64,
    theta: f64,
}

/// The Minkowski quadratic form `z² − x² − y²` on raw coordinates.
pub fn quadratic_form(x: f64, y: f64, z: f64) -> f64 {
    z * z - x * x - y * y
}

fn sheet_residual(x: f64, y: f64, z: f64) -> f64 {
    (quadratic_form(x, y, z) - 1.0).abs() / (z * z).max(1.0)
}

impl HPoint {
    pub const ORIGIN: HPoint = HPoint { x: 0.0, y: 0.0, z: 1.0 };

    /// Validates on-sheet and forward-sheet membership.
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self> {
        let residual = sheet_residual(x, y, z);
        if !(z > 0.0) || !(residual <= ON_SHEET_TOLERANCE) {
            return Err(Error::OffSheet { x, y, z, residual });
        }
        Ok(Self { x, y, z })
    }

    /// Lifts `(x, y)` onto the sheet by solving for `z`. Always valid.
    pub fn lift(x: f64, y: f64) -> Self {
        Self { x, y, z: (1.0 + x * x + y * y).sqrt() }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn coords(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    pub fn to_klein(&self) -> KPoint {
        KPoint { x: self.x / self.z, y: self.y / self.z }
    }

    pub fn to_polar(&self) -> PolarPoint {
        // asinh of the spatial norm is accurate near the origin, where
        // arccosh(z) loses half the digits.
        let r = self.x.hypot(self.y).asinh();
        PolarPoint::new(r, self.y.atan2(self.x)).expect("asinh of a norm is nonnegative")
    }

    /// Rotation about the z-axis, an isometry fixing the origin.
    pub fn rotate(&self, angle: f64) -> HPoint {
        let (s, c) = angle.sin_cos();
        HPoint { x: c * self.x - s * self.y, y: s * self.x + c * self.y, z: self.z }
    }

    /// Point at hyperbolic distance `dist` from `self` in direction `angle`,
    /// measured in the frame obtained by moving the origin onto `self` along
    /// the ray from the origin.
    pub fn offset(&self, dist: f64, angle: f64) -> HPoint {
        let here = self.to_polar();
        // Start at distance `dist` from the origin, boost by `here.r` along +x,
        // then rotate into place.
        let p = PolarPoint { r: dist, theta: 0.0 }.to_hyperboloid().rotate(angle);
        let (sh, ch) = (here.r.sinh(), here.r.cosh());
        let boosted = HPoint { x: ch * p.x + sh * p.z, y: p.y, z: sh * p.x + ch * p.z };
        boosted.rotate(here.theta)
    }

    /// Midpoint of the geodesic segment between two points.
    pub fn midpoint(a: &HPoint, b: &HPoint) -> HPoint {
        let (x, y, z) = (a.x + b.x, a.y + b.y, a.z + b.z);
        let s = quadratic_form(x, y, z).sqrt();
        HPoint { x: x / s, y: y / s, z: z / s }
    }
}

impl TryFrom<[f64; 3]> for HPoint {
    type Error = Error;
    fn try_from([x, y, z]: [f64; 3]) -> Result<Self> {
        HPoint::new(x, y, z)
    }
}

impl From<HPoint> for [f64; 3] {
    fn from(p: HPoint) -> Self {
        p.coords()
    }
}

impl KPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(x * x + y * y < 1.0) {
            return Err(Error::OutsideDisk { x, y });
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// Central projection onto the sheet: `(x, y, 1) / √(1 − x² − y²)`.
    pub fn to_hyperboloid(&self) -> HPoint {
        let s = 1.0 / (1.0 - self.x * self.x - self.y * self.y).sqrt();
        HPoint { x: self.x * s, y: self.y * s, z: s }
    }
}

impl PolarPoint {
    /// `theta` is normalized into `[0, 2π)`.
    pub fn new(r: f64, theta: f64) -> Result<Self> {
        if !(r >= 0.0) || !r.is_finite() || !theta.is_finite() {
            return Err(Error::Invalid(format!("polar point needs finite r >= 0, got ({r}, {theta})")));
        }
        Ok(Self { r, theta: normalize_angle(theta) })
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    /// `(sinh r · cos θ, sinh r · sin θ, cosh r)`.
    pub fn to_hyperboloid(&self) -> HPoint {
        let sh = self.r.sinh();
        let (s, c) = self.theta.sin_cos();
        HPoint { x: sh * c, y: sh * s, z: self.r.cosh() }
    }
}

/// Maps an angle into `[0, 2π)`.
pub fn normalize_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly TAU for tiny negative inputs.
    if t >= TAU {
        0.0
    } else {
        t
    }
}

/// Tag naming one of the supported models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Hyperboloid,
    Klein,
    Polar,
}

/// A point in any of the supported models.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelPoint {
    Hyperboloid(HPoint),
    Klein(KPoint),
    Polar(PolarPoint),
}

impl ModelPoint {
    pub fn model(&self) -> Model {
        match self {
            ModelPoint::Hyperboloid(_) => Model::Hyperboloid,
            ModelPoint::Klein(_) => Model::Klein,
            ModelPoint::Polar(_) => Model::Polar,
        }
    }

    pub fn to_hyperboloid(&self) -> HPoint {
        match self {
            ModelPoint::Hyperboloid(p) => *p,
            ModelPoint::Klein(k) => k.to_hyperboloid(),
            ModelPoint::Polar(p) => p.to_hyperboloid(),
        }
    }
}

/// Converts `p` into the model `to`, routing through the hyperboloid.
///
/// The target invariants are re-checked, so a Klein result that rounds onto
/// the boundary circle is reported as an error rather than returned.
pub fn convert(p: ModelPoint, to: Model) -> Result<ModelPoint> {
    if p.model() == to {
        return Ok(p);
    }
    let h = p.to_hyperboloid();
    HPoint::new(h.x, h.y, h.z)?;
    Ok(match to {
        Model::Hyperboloid => ModelPoint::Hyperboloid(h),
        Model::Klein => {
            let k = h.to_klein();
            ModelPoint::Klein(KPoint::new(k.x, k.y)?)
        }
        Model::Polar => ModelPoint::Polar(h.to_polar()),
    })
}

/// Minkowski bilinear form `u_z v_z − u_x v_x − u_y v_y`.
pub fn minkowski_b(u: &HPoint, v: &HPoint) -> f64 {
    u.z * v.z - u.x * v.x - u.y * v.y
}

/// Same form on raw vectors (used for bisector normals, which are not on-sheet).
pub fn minkowski_b_raw(u: [f64; 3], v: [f64; 3]) -> f64 {
    u[2] * v[2] - u[0] * v[0] - u[1] * v[1]
}

/// `arccosh` for a bilinear-form value, clamping tiny undershoots to 1.
///
/// `scale` is the magnitude of the products that formed `b`; the allowed
/// undershoot is relative to it.
pub fn form_to_distance(b: f64, scale: f64) -> Result<f64> {
    if b < 1.0 - ON_SHEET_TOLERANCE * scale.max(1.0) || b.is_nan() {
        return Err(Error::Domain(b));
    }
    Ok(arccosh(b.max(1.0)))
}

/// `ln(x + √(x² − 1))`, evaluated as `ln1p((x−1) + √((x−1)(x+1)))` so values
/// just above 1 keep their precision. Requires `x ≥ 1`.
pub fn arccosh(x: f64) -> f64 {
    let t = x - 1.0;
    (t + (t * (x + 1.0)).sqrt()).ln_1p()
}

/// Hyperbolic distance between two on-sheet points.
pub fn hyp_distance(u: &HPoint, v: &HPoint) -> Result<f64> {
    form_to_distance(minkowski_b(u, v), u.z * v.z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn polar(r: f64, deg: f64) -> HPoint {
        PolarPoint::new(r, deg.to_radians()).unwrap().to_hyperboloid()
    }

    #[test]
    fn form_examples() {
        let o = HPoint::ORIGIN;
        assert_eq!(minkowski_b(&o, &o), 1.0);
        let p = HPoint::new(1f64.sinh(), 0.0, 1f64.cosh()).unwrap();
        assert!((minkowski_b(&o, &p) - 1.5430806348152437).abs() < 1e-15);
        // cosh²2 − sinh²2 · cos 60°
        let b = minkowski_b(&polar(2.0, 0.0), &polar(2.0, 60.0));
        let oracle = 2f64.cosh().powi(2) - 2f64.sinh().powi(2) * 0.5;
        assert!((b - oracle).abs() < 1e-12);
        assert!((b - 7.577058209004121).abs() < 1e-12);
    }

    #[test]
    fn distance_examples() {
        let o = HPoint::ORIGIN;
        assert_eq!(hyp_distance(&o, &o).unwrap(), 0.0);
        let p = HPoint::new(1f64.sinh(), 0.0, 1f64.cosh()).unwrap();
        assert!((hyp_distance(&o, &p).unwrap() - 1.0).abs() < 1e-14);
        let d = hyp_distance(&polar(2.0, 0.0), &polar(2.0, 60.0)).unwrap();
        assert!((d - 2.713888980148613).abs() < 1e-12);
    }

    #[test]
    fn conversion_examples() {
        let h = convert(ModelPoint::Klein(KPoint::new(0.0, 0.0).unwrap()), Model::Hyperboloid).unwrap();
        assert_eq!(h.to_hyperboloid(), HPoint::ORIGIN);

        let h = PolarPoint::new(1.0, 0.0).unwrap().to_hyperboloid();
        assert!((h.x() - 1.1752011936438014).abs() < 1e-15);
        assert_eq!(h.y(), 0.0);
        assert!((h.z() - 1.5430806348152437).abs() < 1e-15);

        let k = h.to_klein();
        assert!((k.x() - 0.7615941559557649).abs() < 1e-15);
        assert_eq!(k.y(), 0.0);
        let back = k.to_hyperboloid();
        assert!((back.x() - h.x()).abs() < 1e-12 && (back.z() - h.z()).abs() < 1e-12);
    }

    #[test]
    fn rejects_invalid_points() {
        assert!(matches!(KPoint::new(1.0, 0.0), Err(Error::OutsideDisk { .. })));
        assert!(matches!(KPoint::new(0.8, 0.7), Err(Error::OutsideDisk { .. })));
        assert!(matches!(HPoint::new(0.0, 0.0, 2.0), Err(Error::OffSheet { .. })));
        assert!(matches!(HPoint::new(0.0, 0.0, -1.0), Err(Error::OffSheet { .. })));
        assert!(PolarPoint::new(-0.1, 0.0).is_err());
    }

    #[test]
    fn domain_error_below_one() {
        assert!(matches!(form_to_distance(0.5, 1.0), Err(Error::Domain(_))));
        // Within tolerance: clamped.
        assert_eq!(form_to_distance(1.0 - 1e-12, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn arccosh_matches_std() {
        for &x in &[1.0, 1.0 + 1e-14, 1.0 + 1e-6, 1.5, 10.0, 1e8] {
            let a = arccosh(x);
            let b = f64::acosh(x);
            assert!((a - b).abs() <= 1e-12 * b.max(1e-4), "{x}: {a} vs {b}");
        }
    }

    #[test]
    fn polar_normalizes_angle() {
        let p = PolarPoint::new(1.0, -PI / 2.0).unwrap();
        assert!((p.theta() - 1.5 * PI).abs() < 1e-15);
        assert_eq!(PolarPoint::new(1.0, -1e-300).unwrap().theta(), 0.0);
    }

    #[test]
    fn offset_hits_requested_distance() {
        let c = polar(1.3, 40.0);
        for k in 0..8 {
            let q = c.offset(0.7, k as f64 * 0.8);
            assert!((hyp_distance(&c, &q).unwrap() - 0.7).abs() < 1e-12);
        }
    }

    #[test]
    fn midpoint_is_equidistant() {
        let a = polar(1.0, 10.0);
        let b = polar(2.5, 200.0);
        let m = HPoint::midpoint(&a, &b);
        let (da, db) = (hyp_distance(&m, &a).unwrap(), hyp_distance(&m, &b).unwrap());
        assert!((da - db).abs() < 1e-12);
        assert!((da + db - hyp_distance(&a, &b).unwrap()).abs() < 1e-12);
    }
}
