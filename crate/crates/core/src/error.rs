use thiserror::Error;

/// Errors raised across the geometry, arrangement and certificate layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("point ({x}, {y}, {z}) is not on the forward hyperboloid sheet (|Q - 1| = {residual:e})")]
    OffSheet { x: f64, y: f64, z: f64, residual: f64 },

    #[error("point ({x}, {y}) lies outside the open unit disk")]
    OutsideDisk { x: f64, y: f64 },

    #[error("bilinear form value {0} is below 1: points are not genuinely on-sheet")]
    Domain(f64),

    #[error("invalid line: normal vector (a, b) must be nonzero")]
    ZeroNormal,

    #[error("degenerate arrangement: {0}")]
    Degenerate(String),

    #[error("inconsistent chord arrangement: {0}")]
    InconsistentChords(String),

    #[error("invalid combinatorial description: {0}")]
    InvalidDescription(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("arity mismatch: graph has {vertices} vertices but {points} points were given")]
    Arity { vertices: usize, points: usize },

    #[error("infeasible threshold interval [{lo}, {hi})")]
    Infeasible { lo: f64, hi: f64 },

    #[error("degenerate bisector: points are {0:e} apart")]
    DegeneratePair(f64),

    #[error("embedding failed after {0} halvings")]
    EmbedFailed(u32),

    #[error("no realization found (best scaled penalty {0:.3e}); search failure is not a proof that none exists")]
    SolverFailed(f64),

    #[error("generator gave up after {0} retries")]
    RetriesExhausted(u32),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
