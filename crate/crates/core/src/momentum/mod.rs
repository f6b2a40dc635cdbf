//! Momentum-space transform of the cot interaction: hemisphere Fourier
//! quadrature, the closed-form propagator, and their cross-validation.

mod propagator;
mod quadrature;

pub use propagator::{
    closed_form_propagator, closed_form_shape, hemisphere_fourier, propagator_curve,
    sign_convention_audit, uv_ir_limits, MomentumGrid, PropagatorCurve, PropagatorMode,
    SignConventionReport, UvIrReport,
};
pub use quadrature::{integrate_panels, sinc, QuadratureConfig};
