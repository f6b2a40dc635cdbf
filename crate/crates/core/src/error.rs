//! Error type shared by all modules.
//!
//! Values are reported as `f64` regardless of the working scalar type so
//! that messages stay Display-able without threading generic bounds around.

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Angle outside the closed chart range [0, π].
    #[error("chi = {chi} outside the chart range [0, pi]")]
    ChiOutsideChart { chi: f64 },

    /// Evaluation requested at or beyond the cot/csc² poles. Endpoint
    /// evaluation is a hard error, never ±inf.
    #[error("chi endpoint pole: chi = {chi} must lie strictly inside (0, pi)")]
    ChiEndpoint { chi: f64 },

    /// Angle outside a stated range (theta or phi).
    #[error("{name} = {value} outside [{lo}, {hi})")]
    AngleOutsideRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    /// Flat-space radius exceeds the sphere radius R = 1/√κ.
    #[error("radius {r} exceeds the sphere radius {radius}")]
    RadiusExceedsSphere { r: f64, radius: f64 },

    /// A parameter failed its positivity/finiteness invariant.
    #[error("invalid parameter {name} = {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    /// Quantum-number branching rule violated (l ≤ K, |m| ≤ l).
    #[error("quantum numbers K={k}, l={l}, m={m} violate the branching rules")]
    InvalidQuantumNumbers { k: u32, l: u32, m: i32 },

    /// Grid smaller than the supported minimum.
    #[error("chi grid needs at least {min} interior points, got {n_points}")]
    GridTooSmall { n_points: usize, min: usize },

    /// A sampled function contained a non-finite entry.
    #[error("non-finite sample at grid index {index}")]
    NonFiniteSample { index: usize },

    /// Sample vector length does not match the grid.
    #[error("sample length {got} does not match grid size {expected}")]
    LengthMismatch { expected: usize, got: usize },

    /// No grid nodes inside the requested residual window.
    #[error("window [{lo}, {hi}] contains no grid nodes")]
    EmptyWindow { lo: f64, hi: f64 },

    /// More eigenvalues requested than the discretization supports.
    #[error("n_levels = {n_levels} exceeds n_points/4 = {max} (discretization trustworthy only for low levels)")]
    TooManyLevels { n_levels: usize, max: usize },

    /// Eigen-iteration failed the residual acceptance check.
    #[error("eigenpair {index} failed convergence: residual {residual:e} > bound {bound:e}")]
    EigenConvergence {
        index: usize,
        residual: f64,
        bound: f64,
    },

    /// Quadrature self-estimate exceeded the configured tolerances.
    #[error("quadrature tolerance not met: achieved {achieved:e}, required {required:e}")]
    QuadratureTolerance { achieved: f64, required: f64 },

    /// QuadratureConfig invariant violated.
    #[error("invalid quadrature config: {name} = {value}")]
    InvalidQuadratureConfig { name: &'static str, value: f64 },

    /// Momentum grid invariant violated.
    #[error("invalid momentum grid: {reason}")]
    InvalidMomentumGrid { reason: &'static str },

    /// Per-node failure while mapping an evaluator over a momentum grid.
    #[error("propagator evaluation failed at q = {q}")]
    PropagatorNode {
        q: f64,
        #[source]
        source: Box<Error>,
    },
}
