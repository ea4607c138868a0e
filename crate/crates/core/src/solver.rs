//! Numerical realization search.
//!
//! Realizability of a graph as a (hyperbolic) unit disk graph is hard to
//! decide exactly, so this module only searches: it minimizes a squared-hinge
//! penalty over vertex positions and the threshold with plain gradient
//! descent from seeded random starts. Every candidate is re-checked by the
//! exact verifier before it is returned. A failed search is not evidence that
//! no realization exists.

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::hypgeo::{arccosh, PolarPoint};
use crate::plane::Point2;
use crate::witness::{verify, Geometry, Points, Realization, ThresholdInterval};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};

#[derive(Debug, Clone, PartialEq)]
pub struct SolverConfig {
    pub seed: u64,
    pub restarts: usize,
    /// Gradient steps per restart.
    pub max_iters: usize,
    /// Slack target relative to the threshold: edges at most `t − margin·t`,
    /// non-edges at least `t + margin·t`.
    pub margin: f64,
    /// Radius of the initial placement disk (Euclidean) or bound on the
    /// initial polar radius (hyperbolic).
    pub init_spread: f64,
    pub step_init: f64,
    /// Print one line per restart to standard error.
    pub verbose: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            restarts: 20,
            max_iters: 4000,
            margin: 0.05,
            init_spread: 2.0,
            step_init: 0.1,
            verbose: false,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts < 1 {
            return Err(Error::Invalid("restarts must be at least 1".into()));
        }
        if !(self.margin > 0.0) || !(self.init_spread > 0.0) || !(self.step_init > 0.0) {
            return Err(Error::Invalid("margin, init_spread and step_init must be positive".into()));
        }
        Ok(())
    }
}

/// `Σ_E max(0, d − t + m)² + Σ_{non-E} max(0, t + m − d)²`.
///
/// Zero exactly when every edge has separation at most `t − m` and every
/// non-edge at least `t + m`.
pub fn penalty(g: &LabeledGraph, points: &Points, t: f64, margin: f64) -> Result<f64> {
    if g.vertex_count() != points.len() {
        return Err(Error::Arity { vertices: g.vertex_count(), points: points.len() });
    }
    let mut total = 0.0;
    for (u, v, adjacent) in g.pairs() {
        let d = points.distance(u, v)?;
        let h = if adjacent { d - t + margin } else { t + margin - d };
        if h > 0.0 {
            total += h * h;
        }
    }
    Ok(total)
}

/// Penalty value and its partial derivatives.
#[derive(Debug, Clone, PartialEq)]
pub struct PenaltyGradient {
    pub value: f64,
    /// With respect to the flat coordinate vector (see [`params_to_points`]).
    pub coords: Vec<f64>,
    pub t: f64,
    pub margin: f64,
}

/// Flat parameters: `[x, y, …]` for Euclidean, `[r, θ, …]` (hyperbolic polar)
/// for hyperboloid geometry. Negative radii are read as reflections.
pub fn params_to_points(geometry: Geometry, coords: &[f64]) -> Points {
    let pairs = coords.chunks_exact(2);
    match geometry {
        Geometry::Euclidean => Points::Euclidean(pairs.map(|c| Point2::new(c[0], c[1])).collect()),
        Geometry::Hyperboloid => Points::Hyperboloid(
            pairs
                .map(|c| {
                    let (r, th) = if c[0] < 0.0 { (-c[0], c[1] + PI) } else { (c[0], c[1]) };
                    PolarPoint::new(r, th).expect("finite parameters").to_hyperboloid()
                })
                .collect(),
        ),
    }
}

/// Distance between two vertices and its gradient with respect to
/// `(param_u0, param_u1, param_v0, param_v1)`.
fn distance_with_grad(geometry: Geometry, u: &[f64], v: &[f64]) -> (f64, [f64; 4]) {
    match geometry {
        Geometry::Euclidean => {
            let (dx, dy) = (u[0] - v[0], u[1] - v[1]);
            let d = dx.hypot(dy);
            if d < 1e-300 {
                return (d, [0.0; 4]);
            }
            let (gx, gy) = (dx / d, dy / d);
            (d, [gx, gy, -gx, -gy])
        }
        Geometry::Hyperboloid => {
            let (r1, r2) = (u[0], v[0]);
            let delta = u[1] - v[1];
            let (sh1, ch1, sh2, ch2) = (r1.sinh(), r1.cosh(), r2.sinh(), r2.cosh());
            let (sd, cd) = delta.sin_cos();
            let c = ch1 * ch2 - sh1 * sh2 * cd;
            let c = c.max(1.0);
            let d = arccosh(c);
            let sinh_d = ((c - 1.0) * (c + 1.0)).sqrt();
            if sinh_d < 1e-12 {
                return (d, [0.0; 4]);
            }
            let dr1 = (sh1 * ch2 - ch1 * sh2 * cd) / sinh_d;
            let dr2 = (ch1 * sh2 - sh1 * ch2 * cd) / sinh_d;
            let dth = sh1 * sh2 * sd / sinh_d;
            (d, [dr1, dth, dr2, -dth])
        }
    }
}

/// Analytic gradient of [`penalty`] over flat parameters.
pub fn penalty_gradient(
    g: &LabeledGraph,
    geometry: Geometry,
    coords: &[f64],
    t: f64,
    margin: f64,
) -> Result<PenaltyGradient> {
    if coords.len() != 2 * g.vertex_count() {
        return Err(Error::Arity { vertices: g.vertex_count(), points: coords.len() / 2 });
    }
    let mut out = PenaltyGradient { value: 0.0, coords: vec![0.0; coords.len()], t: 0.0, margin: 0.0 };
    for (u, v, adjacent) in g.pairs() {
        let (pu, pv) = (&coords[2 * u..2 * u + 2], &coords[2 * v..2 * v + 2]);
        let (d, dd) = distance_with_grad(geometry, pu, pv);
        let (h, sign) = if adjacent { (d - t + margin, 1.0) } else { (t + margin - d, -1.0) };
        if h <= 0.0 {
            continue;
        }
        out.value += h * h;
        let k = 2.0 * h * sign;
        out.coords[2 * u] += k * dd[0];
        out.coords[2 * u + 1] += k * dd[1];
        out.coords[2 * v] += k * dd[2];
        out.coords[2 * v + 1] += k * dd[3];
        out.t -= k;
        out.margin += 2.0 * h;
    }
    Ok(out)
}

/// Successful search: the realization passed the exact verifier.
#[derive(Debug, Clone)]
pub struct Solution {
    pub realization: Realization,
    /// Interval reported by the exact verifier.
    pub interval: ThresholdInterval,
    pub restart: usize,
    pub iterations: usize,
}

/// Search exhausted. Diagnostic only; not a non-realizability certificate.
#[derive(Debug, Clone)]
pub struct SolveFailure {
    /// Smallest scale-free penalty `penalty / t²` reached.
    pub best_penalty: f64,
    /// Smallest scale-free penalty reached by each restart.
    pub restart_penalties: Vec<f64>,
}

#[derive(Debug, Clone)]
pub enum SolveOutcome {
    Success(Solution),
    Failure(SolveFailure),
}

impl SolveOutcome {
    pub fn solution(&self) -> Option<&Solution> {
        match self {
            SolveOutcome::Success(s) => Some(s),
            SolveOutcome::Failure(_) => None,
        }
    }
}

/// Scale-free objective `P(x, t, κt) / t²` and its gradient.
fn objective(g: &LabeledGraph, geometry: Geometry, x: &[f64], t: f64, kappa: f64) -> Result<(f64, Vec<f64>, f64)> {
    let pg = penalty_gradient(g, geometry, x, t, kappa * t)?;
    let t2 = t * t;
    let grad_x = pg.coords.into_iter().map(|v| v / t2).collect();
    let grad_t = (pg.t + kappa * pg.margin) / t2 - 2.0 * pg.value / (t2 * t);
    Ok((pg.value / t2, grad_x, grad_t))
}

/// Exact check with the target slack: `t` admitted and width ≥ `κ·t`.
fn certify(g: &LabeledGraph, geometry: Geometry, x: &[f64], t: f64, kappa: f64) -> Result<Option<(Realization, ThresholdInterval)>> {
    let r = Realization { points: params_to_points(geometry, x), threshold: Some(t) };
    let iv = verify(g, &r)?;
    let ok = iv.is_feasible() && iv.admits(t) && iv.distance_width() >= kappa * t * (1.0 - 1e-6);
    Ok(ok.then_some((r, iv)))
}

fn initial_point(geometry: Geometry, spread: f64, rng: &mut ChaCha8Rng) -> [f64; 2] {
    match geometry {
        Geometry::Euclidean => {
            let r = spread * rng.gen::<f64>().sqrt();
            let phi = rng.gen_range(0.0..TAU);
            [r * phi.cos(), r * phi.sin()]
        }
        Geometry::Hyperboloid => [rng.gen_range(0.0..spread), rng.gen_range(0.0..TAU)],
    }
}

const CHECK_EVERY: usize = 10;
const HISTORY: usize = 10;

/// Limited-memory BFGS state: the last few `(s, y)` pairs.
#[derive(Default)]
struct Lbfgs {
    pairs: std::collections::VecDeque<(Vec<f64>, Vec<f64>, f64)>,
}

impl Lbfgs {
    fn push(&mut self, s: Vec<f64>, y: Vec<f64>) {
        let sy = dot(&s, &y);
        // Curvature condition; skipping keeps the implicit Hessian positive definite.
        if sy <= 1e-12 * dot(&y, &y).sqrt() * dot(&s, &s).sqrt() {
            return;
        }
        if self.pairs.len() == HISTORY {
            self.pairs.pop_front();
        }
        self.pairs.push_back((s, y, 1.0 / sy));
    }

    /// Two-loop recursion: returns `H · grad`.
    fn apply(&self, grad: &[f64]) -> Vec<f64> {
        let mut q = grad.to_vec();
        let mut alphas = Vec::with_capacity(self.pairs.len());
        for (s, y, rho) in self.pairs.iter().rev() {
            let a = rho * dot(s, &q);
            axpy(-a, y, &mut q);
            alphas.push(a);
        }
        if let Some((s, y, _)) = self.pairs.back() {
            let gamma = dot(s, y) / dot(y, y);
            q.iter_mut().for_each(|v| *v *= gamma);
        }
        for ((s, y, rho), a) in self.pairs.iter().zip(alphas.into_iter().rev()) {
            let b = rho * dot(y, &q);
            axpy(a - b, s, &mut q);
        }
        q
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn axpy(a: f64, x: &[f64], y: &mut [f64]) {
    y.iter_mut().zip(x).for_each(|(yi, xi)| *yi += a * xi);
}

/// One restart: L-BFGS over `(coords, t)` with Armijo backtracking.
/// Returns the certified realization (if any), the iteration count and the
/// best objective value seen.
fn descend(
    g: &LabeledGraph,
    geometry: Geometry,
    cfg: &SolverConfig,
    mut x: Vec<f64>,
    mut t: f64,
) -> Result<(Option<(Realization, ThresholdInterval)>, usize, f64)> {
    let kappa = cfg.margin;
    let eval = |z: &[f64]| -> Result<(f64, Vec<f64>)> {
        let (xs, t) = z.split_at(z.len() - 1);
        let (f, mut grad, gt) = objective(g, geometry, xs, t[0], kappa)?;
        grad.push(gt);
        Ok((f, grad))
    };
    x.push(t);
    let mut z = x;
    let (mut f, mut grad) = eval(&z)?;
    let mut memory = Lbfgs::default();
    let mut first = true;
    for iter in 0..cfg.max_iters {
        if f == 0.0 || iter % CHECK_EVERY == 0 {
            t = z[z.len() - 1];
            if let Some(found) = certify(g, geometry, &z[..z.len() - 1], t, kappa)? {
                return Ok((Some(found), iter, f));
            }
            if f == 0.0 {
                break;
            }
        }
        let mut dir = memory.apply(&grad);
        let mut slope = -dot(&dir, &grad);
        if !(slope < 0.0) {
            memory = Lbfgs::default();
            dir = grad.clone();
            slope = -dot(&grad, &grad);
        }
        let mut step = if first { cfg.step_init / dot(&grad, &grad).sqrt().max(1e-300) } else { 1.0 };
        let mut accepted = None;
        while step > 1e-20 {
            let mut cand = z.clone();
            axpy(-step, &dir, &mut cand);
            if cand[cand.len() - 1] > 0.0 {
                let (cf, cg) = eval(&cand)?;
                if cf <= f + 1e-4 * step * slope {
                    accepted = Some((cand, cf, cg));
                    break;
                }
            }
            step *= 0.5;
        }
        let Some((cand, cf, cg)) = accepted else { break };
        let s: Vec<f64> = cand.iter().zip(&z).map(|(a, b)| a - b).collect();
        let y: Vec<f64> = cg.iter().zip(&grad).map(|(a, b)| a - b).collect();
        memory.push(s, y);
        first = false;
        let stalled = f - cf <= 1e-16 * f;
        (z, f, grad) = (cand, cf, cg);
        if stalled {
            break;
        }
    }
    t = z[z.len() - 1];
    let found = certify(g, geometry, &z[..z.len() - 1], t, kappa)?;
    Ok((found, cfg.max_iters, f))
}

/// Searches for a realization of `g` in the given geometry.
///
/// Deterministic for a fixed configuration: restart `k` draws from its own
/// ChaCha stream `(seed, k)`.
pub fn solve_realization(g: &LabeledGraph, geometry: Geometry, cfg: &SolverConfig) -> Result<SolveOutcome> {
    cfg.validate()?;
    let n = g.vertex_count();
    if n == 0 {
        return Err(Error::Invalid("cannot realize an empty graph".into()));
    }
    let mut restart_penalties = Vec::with_capacity(cfg.restarts);
    for restart in 0..cfg.restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(restart as u64);
        let x: Vec<f64> = (0..n).flat_map(|_| initial_point(geometry, cfg.init_spread, &mut rng)).collect();
        let t = initial_threshold(geometry, &x);
        let (found, iterations, best) = descend(g, geometry, cfg, x, t)?;
        if let Some((realization, interval)) = found {
            if cfg.verbose {
                eprintln!("restart {restart}: success after {iterations} iterations");
            }
            return Ok(SolveOutcome::Success(Solution { realization, interval, restart, iterations }));
        }
        if cfg.verbose {
            eprintln!("restart {restart}: best scaled penalty {best:.3e}");
        }
        restart_penalties.push(best);
    }
    let best_penalty = restart_penalties.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(SolveOutcome::Failure(SolveFailure { best_penalty, restart_penalties }))
}

fn initial_threshold(geometry: Geometry, x: &[f64]) -> f64 {
    let points = params_to_points(geometry, x);
    let n = points.len();
    if n < 2 {
        return 1.0;
    }
    let mut sum = 0.0;
    for u in 0..n {
        for v in u + 1..n {
            sum += points.distance(u, v).unwrap_or(0.0);
        }
    }
    let mean = sum / (n * (n - 1) / 2) as f64;
    if mean > 0.0 {
        mean
    } else {
        1.0
    }
}
