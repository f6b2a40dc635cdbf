//! Trigonometric Rosen-Morse potential as an angular function on the
//! hypersphere S³.
//!
//! The interaction `-2G√κ cot χ + κ (ħ²/2μ) l(l+1) csc²χ` lives on the
//! three-dimensional surface of constant positive curvature κ = 1/R²
//! embedded in four-dimensional Euclidean space. This crate provides:
//!
//! * [`geometry`] — the (χ, θ, φ) chart of S³ and hemisphere bookkeeping,
//! * [`potentials`] — position-space evaluation of the cot interaction and
//!   the centrifugal barrier,
//! * [`operators`] — the discretized angular Laplace-Beltrami operator,
//!   harmonicity checks for cot χ, and the bound-state solver for the
//!   one-dimensional S-equation with its SO(4) degeneracy report,
//! * [`momentum`] — the hemisphere Fourier transform of the cot term to
//!   momentum space by panel quadrature, cross-validated against the
//!   closed-form propagator `c · 2 sin²(x/2) / x²` with `x = |q|/(ħ√κ)`.
//!
//! All numerics are generic over the scalar type through the [`Real`]
//! trait; concrete `f64` aliases are exported at the crate root.
//!
//! Every evaluator is a pure function of its inputs and every public type
//! is `Send + Sync` (for `Send + Sync` scalars), so concurrent use needs
//! no coordination; curve and report generation keep their outputs in
//! input order.

// validation guards are written as `!(x > 0)` so that NaN fails them
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

pub mod error;
pub mod geometry;
pub mod momentum;
pub mod operators;
pub mod potentials;
pub mod richardson;

pub use error::{Error, Result};
pub use geometry::{chi_from_radius, radius_from_chi, x4_from_chi, Curvature, Hemisphere, SpherePoint};
pub use momentum::{
    closed_form_propagator, closed_form_shape, hemisphere_fourier, propagator_curve,
    sign_convention_audit, uv_ir_limits, MomentumGrid, PropagatorCurve, PropagatorMode,
    QuadratureConfig, SignConventionReport, UvIrReport,
};
pub use operators::{
    apply_radial_laplacian, degeneracy_report, degeneracy_report_extrapolated,
    degeneracy_report_extrapolated_with_depth, degeneracy_report_with_depth,
    harmonicity_residual, harmonicity_residual_in, psi_from_s, solve_spectrum,
    solve_spectrum_extrapolated, ChiGrid, DegeneracyReport, DegeneracyRow, KQuantumNumbers,
    SpectrumResult,
};
pub use potentials::{centrifugal_barrier, cot_term, rosen_morse, PhysicalParams, PotentialSample};

/// Floating point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Real for T where
    T: Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

/// Shorthand for embedding an `f64` literal into the working scalar type.
#[inline]
pub(crate) fn lit<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("f64 literal representable in scalar type")
}

// Concrete aliases for the common double-precision instantiation.
pub type Curvature64 = Curvature<f64>;
pub type SpherePoint64 = SpherePoint<f64>;
pub type PhysicalParams64 = PhysicalParams<f64>;
pub type ChiGrid64 = ChiGrid<f64>;
pub type SpectrumResult64 = SpectrumResult<f64>;
pub type MomentumGrid64 = MomentumGrid<f64>;
pub type QuadratureConfig64 = QuadratureConfig<f64>;
pub type PropagatorCurve64 = PropagatorCurve<f64>;

// Single-precision aliases for the value types that make sense there.
pub type Curvature32 = Curvature<f32>;
pub type SpherePoint32 = SpherePoint<f32>;
pub type PhysicalParams32 = PhysicalParams<f32>;
