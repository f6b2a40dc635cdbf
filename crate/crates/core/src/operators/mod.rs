//! Discretized angular Laplace-Beltrami / K² operator on S³ and the
//! bound-state eigen-solver for the one-dimensional S-equation.

mod grid;
mod laplacian;
mod spectrum;
mod tridiagonal;

pub use grid::ChiGrid;
pub use laplacian::{apply_radial_laplacian, harmonicity_residual, harmonicity_residual_in};
pub use spectrum::{
    assemble_s_equation, degeneracy_report, degeneracy_report_extrapolated,
    degeneracy_report_extrapolated_with_depth, degeneracy_report_with_depth, psi_from_s,
    solve_spectrum, solve_spectrum_extrapolated, DegeneracyReport, DegeneracyRow,
    KQuantumNumbers, SpectrumResult,
};
pub use tridiagonal::SymmetricTridiagonal;
