use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Sub};

/// A point (or vector) in the Euclidean plane.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const ORIGIN: Point2 = Point2 { x: 0.0, y: 0.0 };

    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Point2) -> f64 {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, other: Point2) -> f64 {
        self.x * other.y - self.y * other.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, other: Point2) -> f64 {
        (self - other).norm()
    }

    pub fn normalized(self) -> Point2 {
        self * (1.0 / self.norm())
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([x, y]: [f64; 2]) -> Self {
        Self { x, y }
    }
}

impl From<Point2> for [f64; 2] {
    fn from(p: Point2) -> Self {
        [p.x, p.y]
    }
}

impl Add for Point2 {
    type Output = Point2;
    fn add(self, o: Point2) -> Point2 {
        Point2::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for Point2 {
    type Output = Point2;
    fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.x - o.x, self.y - o.y)
    }
}

impl Mul<f64> for Point2 {
    type Output = Point2;
    fn mul(self, s: f64) -> Point2 {
        Point2::new(self.x * s, self.y * s)
    }
}

/// Centroid of a nonempty point set; the origin for an empty one.
pub fn centroid(points: &[Point2]) -> Point2 {
    if points.is_empty() {
        return Point2::ORIGIN;
    }
    let sum = points.iter().fold(Point2::ORIGIN, |acc, &p| acc + p);
    sum * (1.0 / points.len() as f64)
}

/// Smallest disk enclosing `points`, as (center, radius).
///
/// Iterative form of Welzl's algorithm; expected linear time on shuffled
/// input, quadratic worst case on adversarial order, which is fine for the
/// few dozen intersection points an arrangement produces.
pub fn min_enclosing_disk(points: &[Point2]) -> (Point2, f64) {
    const SLACK: f64 = 1e-12;
    let inside = |c: Point2, r: f64, p: Point2| p.dist(c) <= r * (1.0 + SLACK) + SLACK;
    match points.len() {
        0 => return (Point2::ORIGIN, 0.0),
        1 => return (points[0], 0.0),
        _ => {}
    }
    let mut c = points[0];
    let mut r = 0.0;
    for i in 1..points.len() {
        if inside(c, r, points[i]) {
            continue;
        }
        c = points[i];
        r = 0.0;
        for j in 0..i {
            if inside(c, r, points[j]) {
                continue;
            }
            c = (points[i] + points[j]) * 0.5;
            r = points[i].dist(c);
            for k in 0..j {
                if inside(c, r, points[k]) {
                    continue;
                }
                if let Some(cc) = circumcenter(points[i], points[j], points[k]) {
                    c = cc;
                    r = points[i].dist(c);
                }
            }
        }
    }
    (c, r)
}

fn circumcenter(a: Point2, b: Point2, c: Point2) -> Option<Point2> {
    let ab = b - a;
    let ac = c - a;
    let d = 2.0 * ab.cross(ac);
    if d.abs() < 1e-300 {
        return None;
    }
    let ab2 = ab.dot(ab);
    let ac2 = ac.dot(ac);
    let ux = (ac.y * ab2 - ab.y * ac2) / d;
    let uy = (ab.x * ac2 - ac.x * ab2) / d;
    Some(a + Point2::new(ux, uy))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enclosing_disk_of_square() {
        let pts = [
            Point2::new(0.0, 0.0),
            Point2::new(2.0, 0.0),
            Point2::new(2.0, 2.0),
            Point2::new(0.0, 2.0),
            Point2::new(1.0, 1.2),
        ];
        let (c, r) = min_enclosing_disk(&pts);
        assert!(c.dist(Point2::new(1.0, 1.0)) < 1e-12);
        assert!((r - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn enclosing_disk_contains_all() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let pts: Vec<Point2> = (0..rng.gen_range(1..30))
                .map(|_| Point2::new(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0)))
                .collect();
            let (c, r) = min_enclosing_disk(&pts);
            // Minimal: some point sits on the boundary.
            let far = pts.iter().map(|p| p.dist(c)).fold(0.0, f64::max);
            assert!(far <= r + 1e-9);
            assert!((far - r).abs() < 1e-9);
        }
    }
}
