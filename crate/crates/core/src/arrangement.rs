//! Oriented line arrangements in the Euclidean plane and their combinatorics.
//!
//! A line `a·x + b·y + c = 0` splits the plane into a negative and a positive
//! open half-plane. Recording the side of a point for every line gives its
//! sign vector; the sign vectors of the faces (cells) of a simple arrangement
//! form its combinatorial description. Chords of the unit disk carry the same
//! description when read as lines of the Beltrami–Klein model, which is how an
//! arrangement moves between the Euclidean and the hyperbolic plane.

use crate::error::{Error, Result};
use crate::plane::{min_enclosing_disk, Point2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

/// Values with magnitude at most this (after normalization) count as "on the line".
pub const ZERO_BAND: f64 = 1e-9;
/// Minimum `|cross(n_i, n_j)|` for two lines to count as non-parallel.
pub const PARALLEL_TOLERANCE: f64 = 1e-9;
/// Minimum gap between intersection points, relative to their diameter.
pub const VERTEX_TOLERANCE: f64 = 1e-7;
/// Inflation applied to the disk enclosing all intersections.
pub const MARGIN_FACTOR: f64 = 1.25;
/// Tolerance for chord endpoints lying on the unit circle.
pub const CIRCLE_TOLERANCE: f64 = 1e-9;

const MAX_RETRIES: u32 = 100;

/// Oriented line `{p : a·pₓ + b·p_y + c = 0}` with `a² + b² = 1`; the positive
/// side is where the expression is positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawLine", into = "RawLine")]
pub struct OrientedLine {
    a: f64,
    b: f64,
    c: f64,
}

#[derive(Serialize, Deserialize)]
struct RawLine {
    a: f64,
    b: f64,
    c: f64,
}

impl TryFrom<RawLine> for OrientedLine {
    type Error = Error;
    fn try_from(r: RawLine) -> Result<Self> {
        OrientedLine::new(r.a, r.b, r.c)
    }
}

impl From<OrientedLine> for RawLine {
    fn from(l: OrientedLine) -> Self {
        RawLine { a: l.a, b: l.b, c: l.c }
    }
}

impl OrientedLine {
    /// Normalizes so that `a² + b² = 1`; positive rescaling keeps the orientation.
    pub fn new(a: f64, b: f64, c: f64) -> Result<Self> {
        let norm = a.hypot(b);
        if !(norm > 0.0) || !norm.is_finite() || !c.is_finite() {
            return Err(Error::ZeroNormal);
        }
        Ok(Self { a: a / norm, b: b / norm, c: c / norm })
    }

    /// Line through `p` and `q`, with the positive side to the left of `p → q`.
    pub fn through(p: Point2, q: Point2) -> Result<Self> {
        let d = q - p;
        Self::new(-d.y, d.x, d.y * p.x - d.x * p.y)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn normal(&self) -> Point2 {
        Point2::new(self.a, self.b)
    }

    /// Unit direction with the positive side on its left.
    pub fn direction(&self) -> Point2 {
        Point2::new(self.b, -self.a)
    }

    /// Signed distance of `p` from the line.
    pub fn eval(&self, p: Point2) -> f64 {
        self.a * p.x + self.b * p.y + self.c
    }

    pub fn side(&self, p: Point2) -> Sign {
        Sign::of(self.eval(p), ZERO_BAND)
    }

    /// Foot of the perpendicular from the origin.
    pub fn foot(&self) -> Point2 {
        self.normal() * -self.c
    }

    pub fn intersect(&self, other: &OrientedLine) -> Option<Point2> {
        let det = self.normal().cross(other.normal());
        if det.abs() <= PARALLEL_TOLERANCE {
            return None;
        }
        let x = (self.b * other.c - other.b * self.c) / det;
        let y = (other.a * self.c - self.a * other.c) / det;
        Some(Point2::new(x, y))
    }

    pub fn reversed(&self) -> OrientedLine {
        OrientedLine { a: -self.a, b: -self.b, c: -self.c }
    }
}

/// Side of a point relative to an oriented line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Minus,
    Zero,
    Plus,
}

impl Sign {
    pub fn of(value: f64, band: f64) -> Sign {
        if value > band {
            Sign::Plus
        } else if value < -band {
            Sign::Minus
        } else {
            Sign::Zero
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Zero => Sign::Zero,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Zero => '0',
            Sign::Plus => '+',
        }
    }
}

/// Per-line side labels of a point. Orders lexicographically with `− < 0 < +`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct SignVector(Vec<Sign>);

impl SignVector {
    pub fn new(signs: Vec<Sign>) -> Self {
        Self(signs)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Sign {
        self.0[i]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    pub fn is_zero_free(&self) -> bool {
        !self.0.contains(&Sign::Zero)
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.symbol()))
    }
}

impl FromStr for SignVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|ch| match ch {
                '-' => Ok(Sign::Minus),
                '0' => Ok(Sign::Zero),
                '+' => Ok(Sign::Plus),
                other => Err(Error::InvalidDescription(format!("unexpected sign symbol {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(SignVector)
    }
}

impl TryFrom<String> for SignVector {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SignVector> for String {
    fn from(v: SignVector) -> Self {
        v.to_string()
    }
}

/// Number of cells of a simple arrangement of `n` lines.
pub fn simple_cell_count(n: usize) -> usize {
    1 + n * (n + 1) / 2
}

/// The set of cell sign vectors of an arrangement of `n` lines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawDescription")]
pub struct CombinatorialDescription {
    n: usize,
    cells: BTreeSet<SignVector>,
}

#[derive(Deserialize)]
struct RawDescription {
    n: usize,
    cells: Vec<SignVector>,
}

impl TryFrom<RawDescription> for CombinatorialDescription {
    type Error = Error;
    fn try_from(r: RawDescription) -> Result<Self> {
        let count = r.cells.len();
        let cells: BTreeSet<_> = r.cells.into_iter().collect();
        if cells.len() != count {
            return Err(Error::InvalidDescription("duplicate cell vectors".into()));
        }
        CombinatorialDescription::new(r.n, cells)
    }
}

impl CombinatorialDescription {
    /// Checks that every vector has length `n` and no zero entry.
    pub fn new(n: usize, cells: impl IntoIterator<Item = SignVector>) -> Result<Self> {
        let cells: BTreeSet<_> = cells.into_iter().collect();
        for v in &cells {
            if v.len() != n {
                return Err(Error::InvalidDescription(format!(
                    "vector {v} has length {} but the arrangement has {n} lines",
                    v.len()
                )));
            }
            if !v.is_zero_free() {
                return Err(Error::InvalidDescription(format!("cell vector {v} contains a zero")));
            }
        }
        Ok(Self { n, cells })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Cells in canonical (lexicographic, `−` before `+`) order.
    pub fn cells(&self) -> impl ExactSizeIterator<Item = &SignVector> + '_ {
        self.cells.iter()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, v: &SignVector) -> bool {
        self.cells.contains(v)
    }

    /// True when the cell count matches a simple arrangement.
    pub fn is_simple(&self) -> bool {
        self.cells.len() == simple_cell_count(self.n)
    }
}

/// Output of [`enumerate_cells`]: the description plus a witness point per cell.
#[derive(Debug, Clone)]
pub struct CellDecomposition {
    pub description: CombinatorialDescription,
    /// One interior point per cell, in the description's canonical order.
    pub representatives: Vec<(SignVector, Point2)>,
}

pub fn sign_vector(lines: &[OrientedLine], p: Point2) -> SignVector {
    SignVector(lines.iter().map(|l| l.side(p)).collect())
}

fn intersection_points(lines: &[OrientedLine]) -> Option<Vec<Point2>> {
    let mut pts = Vec::with_capacity(lines.len() * lines.len().saturating_sub(1) / 2);
    for (i, li) in lines.iter().enumerate() {
        for lj in &lines[i + 1..] {
            pts.push(li.intersect(lj)?);
        }
    }
    Some(pts)
}

fn diameter(points: &[Point2]) -> f64 {
    let mut d: f64 = 0.0;
    for (i, p) in points.iter().enumerate() {
        for q in &points[i + 1..] {
            d = d.max(p.dist(*q));
        }
    }
    d
}

/// No two lines parallel and all pairwise intersections distinct.
pub fn is_simple(lines: &[OrientedLine]) -> bool {
    let Some(pts) = intersection_points(lines) else {
        return false;
    };
    let min_gap = VERTEX_TOLERANCE * diameter(&pts);
    for (i, p) in pts.iter().enumerate() {
        for q in &pts[i + 1..] {
            if !(p.dist(*q) > min_gap) {
                return false;
            }
        }
    }
    true
}

/// Enumerates the cells of a simple arrangement.
///
/// Candidate points are placed in each of the four wedges around every
/// vertex (along the angle bisectors of the two crossing lines, at half the
/// distance to the nearest other line) plus a ring of far-away points. Cells
/// are convex, so the mean of all candidates landing in a cell is used as its
/// representative.
pub fn enumerate_cells(lines: &[OrientedLine]) -> Result<CellDecomposition> {
    let n = lines.len();
    if n == 0 {
        return Err(Error::Degenerate("empty arrangement".into()));
    }
    let mut candidates = Vec::new();
    if n == 1 {
        let l = &lines[0];
        candidates.push(l.foot() + l.normal());
        candidates.push(l.foot() - l.normal());
    } else {
        if !is_simple(lines) {
            return Err(Error::Degenerate("arrangement is not simple".into()));
        }
        let pts = intersection_points(lines).expect("simple arrangements have all intersections");
        let (center, radius) = min_enclosing_disk(&pts);
        let scale = radius.max(1.0);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                let v = pts[k];
                k += 1;
                let nearest = lines
                    .iter()
                    .enumerate()
                    .filter(|&(idx, _)| idx != i && idx != j)
                    .map(|(_, l)| l.eval(v).abs())
                    .fold(scale, f64::min);
                let step = 0.5 * nearest;
                let (ui, uj) = (lines[i].direction(), lines[j].direction());
                for (si, sj) in [(1.0, 1.0), (1.0, -1.0), (-1.0, 1.0), (-1.0, -1.0)] {
                    let dir = ui * si + uj * sj;
                    candidates.push(v + dir.normalized() * step);
                }
            }
        }
        let far = 2.0 * scale + center.norm();
        let ring = 4 * n;
        for s in 0..ring {
            let phi = std::f64::consts::TAU * (s as f64 + 0.5) / ring as f64;
            candidates.push(center + Point2::new(phi.cos(), phi.sin()) * far);
        }
    }

    let mut found: BTreeMap<SignVector, (Point2, usize)> = BTreeMap::new();
    for p in candidates {
        let v = sign_vector(lines, p);
        if v.is_zero_free() {
            let e = found.entry(v).or_insert((Point2::ORIGIN, 0));
            e.0 = e.0 + p;
            e.1 += 1;
        }
    }
    let expected = simple_cell_count(n);
    if found.len() != expected {
        return Err(Error::Degenerate(format!(
            "found {} cells, a simple arrangement of {n} lines has {expected}",
            found.len()
        )));
    }
    let representatives: Vec<_> = found
        .into_iter()
        .map(|(v, (sum, count))| (v, sum * (1.0 / count as f64)))
        .collect();
    let description = CombinatorialDescription::new(n, representatives.iter().map(|(v, _)| v.clone()))?;
    Ok(CellDecomposition { description, representatives })
}

/// Seeded generator of simple arrangements of `n` lines.
///
/// Each line has a uniform direction, passes within distance 1 of the origin
/// and gets a random orientation. Draws are repeated until the simplicity
/// predicate and the cell count both hold.
pub fn random_simple_arrangement(n: usize, seed: u64) -> Result<Vec<OrientedLine>> {
    if n == 0 {
        return Err(Error::Invalid("arrangement needs at least one line".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_RETRIES {
        let lines: Vec<_> = (0..n)
            .map(|_| {
                let phi: f64 = rng.gen_range(0.0..std::f64::consts::PI);
                let offset: f64 = rng.gen_range(-1.0..1.0);
                let sign = if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
                OrientedLine::new(sign * phi.cos(), sign * phi.sin(), sign * offset)
                    .expect("unit normal")
            })
            .collect();
        if (n == 1 || is_simple(&lines)) && enumerate_cells(&lines).is_ok() {
            return Ok(lines);
        }
    }
    Err(Error::RetriesExhausted(MAX_RETRIES))
}

/// Oriented chord of the unit disk; the positive side is left of `p → q`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Chord {
    pub p: Point2,
    pub q: Point2,
}

impl Chord {
    /// Supporting line, read in disk coordinates (a Klein-model line).
    pub fn supporting_line(&self) -> Result<OrientedLine> {
        OrientedLine::through(self.p, self.q)
    }

    fn same_as(&self, other: &Chord) -> bool {
        let close = |a: Point2, b: Point2| a.dist(b) <= CIRCLE_TOLERANCE;
        (close(self.p, other.p) && close(self.q, other.q)) || (close(self.p, other.q) && close(self.q, other.p))
    }
}

/// Arrangement of chords of the unit disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Chord>", into = "Vec<Chord>")]
pub struct ChordArrangement {
    chords: Vec<Chord>,
}

impl TryFrom<Vec<Chord>> for ChordArrangement {
    type Error = Error;
    fn try_from(chords: Vec<Chord>) -> Result<Self> {
        ChordArrangement::new(chords)
    }
}

impl From<ChordArrangement> for Vec<Chord> {
    fn from(c: ChordArrangement) -> Self {
        c.chords
    }
}

impl ChordArrangement {
    pub fn new(chords: Vec<Chord>) -> Result<Self> {
        for (i, ch) in chords.iter().enumerate() {
            for p in [ch.p, ch.q] {
                if (p.norm() - 1.0).abs() > CIRCLE_TOLERANCE {
                    return Err(Error::InconsistentChords(format!(
                        "chord {i} endpoint ({}, {}) is not on the unit circle",
                        p.x, p.y
                    )));
                }
            }
            if ch.p.dist(ch.q) <= CIRCLE_TOLERANCE {
                return Err(Error::InconsistentChords(format!("chord {i} has coincident endpoints")));
            }
            if chords[..i].iter().any(|other| other.same_as(ch)) {
                return Err(Error::InconsistentChords(format!("chord {i} duplicates an earlier chord")));
            }
        }
        Ok(Self { chords })
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }
}

/// Similarity taking a disk of the plane onto the unit disk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskFrame {
    pub center: Point2,
    pub radius: f64,
}

impl DiskFrame {
    pub fn to_disk(&self, p: Point2) -> Point2 {
        (p - self.center) * (1.0 / self.radius)
    }

    pub fn from_disk(&self, p: Point2) -> Point2 {
        p * self.radius + self.center
    }

    pub fn map_line(&self, l: &OrientedLine) -> OrientedLine {
        let c = (l.eval(self.center)) / self.radius;
        OrientedLine::new(l.a, l.b, c).expect("normal unchanged")
    }
}

/// Disk strictly enclosing every intersection of a simple arrangement.
///
/// A single line has no intersections; the frame is then the unit disk
/// centered at the line's closest point to the origin.
pub fn enclosing_frame(lines: &[OrientedLine]) -> Result<DiskFrame> {
    match lines.len() {
        0 => Err(Error::Degenerate("empty arrangement".into())),
        1 => Ok(DiskFrame { center: lines[0].foot(), radius: 1.0 }),
        _ => {
            if !is_simple(lines) {
                return Err(Error::Degenerate("arrangement is not simple".into()));
            }
            let pts = intersection_points(lines).expect("simple");
            let (center, radius) = min_enclosing_disk(&pts);
            let radius = if radius > 0.0 { MARGIN_FACTOR * radius } else { 1.0 };
            Ok(DiskFrame { center, radius })
        }
    }
}

/// Maps a simple arrangement into the unit disk and clips every line to a chord.
pub fn euclidean_to_chords(lines: &[OrientedLine]) -> Result<ChordArrangement> {
    euclidean_to_chords_with_frame(lines).map(|(chords, _)| chords)
}

/// Like [`euclidean_to_chords`], also returning the frame that was used.
pub fn euclidean_to_chords_with_frame(lines: &[OrientedLine]) -> Result<(ChordArrangement, DiskFrame)> {
    let frame = enclosing_frame(lines)?;
    let chords = lines
        .iter()
        .map(|l| {
            let m = frame.map_line(l);
            let half = (1.0 - m.c * m.c).sqrt();
            let (f, u) = (m.foot(), m.direction());
            Chord { p: f - u * half, q: f + u * half }
        })
        .collect();
    Ok((ChordArrangement::new(chords)?, frame))
}

fn chords_cross(a: &Chord, b: &Chord) -> bool {
    let da = a.q - a.p;
    let db = b.q - b.p;
    let s1 = da.cross(b.p - a.p);
    let s2 = da.cross(b.q - a.p);
    let s3 = db.cross(a.p - b.p);
    let s4 = db.cross(a.q - b.p);
    s1 * s2 < 0.0 && s3 * s4 < 0.0
}

/// Extends every chord to its supporting line, keeping orientation.
///
/// Requires every pair of chords to cross inside the disk, so that no new
/// intersection appears outside it.
pub fn chords_to_euclidean(chords: &ChordArrangement) -> Result<Vec<OrientedLine>> {
    let lines = chords
        .chords
        .iter()
        .map(Chord::supporting_line)
        .collect::<Result<Vec<_>>>()?;
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if !chords_cross(&chords.chords[i], &chords.chords[j]) {
                return Err(Error::Degenerate(format!("chords {i} and {j} do not cross inside the disk")));
            }
            match lines[i].intersect(&lines[j]) {
                Some(x) if x.norm() <= 1.0 + CIRCLE_TOLERANCE => {}
                _ => {
                    return Err(Error::InconsistentChords(format!(
                        "chords {i} and {j} cross but their supporting lines meet outside the closed disk"
                    )))
                }
            }
        }
    }
    Ok(lines)
}
