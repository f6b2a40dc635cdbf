//! Position-space evaluation of the trigonometric Rosen-Morse potential.
//!
//! The canonical form is
//!
//! ```text
//! V(χ) = -2 G √κ cot χ + κ (ħ²/2μ) l(l+1) / sin²χ
//! ```
//!
//! with zero additive constant. The cot term is the interaction proper and
//! is odd about the equator; the csc² term is the centrifugal barrier on
//! S³ and is even. Evaluation at χ ∈ {0, π} is a hard error, never ±inf:
//! silent infinities poison quadrature and eigen-solvers downstream.

use crate::error::{Error, Result};
use crate::geometry::Curvature;
use crate::{lit, Real};

/// Physical inputs of the S³ problem.
///
/// Units: `hbar` carries action, `mu` mass, and the coupling `g` carries
/// energy·length so that G√κ is an energy. The legacy coupling B is the
/// derived quantity [`Self::b_coupling`]; the matching length d is the
/// sphere radius R = 1/√κ.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams<T> {
    hbar: T,
    mu: T,
    g: T,
    curvature: Curvature<T>,
    l: u32,
}

impl<T: Real> PhysicalParams<T> {
    /// ħ > 0, μ > 0; G may be zero or negative but must be finite.
    pub fn new(hbar: T, mu: T, g: T, curvature: Curvature<T>, l: u32) -> Result<Self> {
        if !(hbar > T::zero()) || !hbar.is_finite() {
            return Err(Error::InvalidParameter {
                name: "hbar",
                value: hbar.to_f64().unwrap_or(f64::NAN),
            });
        }
        if !(mu > T::zero()) || !mu.is_finite() {
            return Err(Error::InvalidParameter {
                name: "mu",
                value: mu.to_f64().unwrap_or(f64::NAN),
            });
        }
        if !g.is_finite() {
            return Err(Error::InvalidParameter {
                name: "G",
                value: g.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self {
            hbar,
            mu,
            g,
            curvature,
            l,
        })
    }

    /// Natural units ħ = 1, 2μ = 1, κ = 1, G = 1, l = 0. With these the
    /// propagator constant c equals 2 and x = q, so closed-form values are
    /// eyeball-checkable.
    pub fn natural() -> Self {
        Self {
            hbar: T::one(),
            mu: lit(0.5),
            g: T::one(),
            curvature: Curvature::unit(),
            l: 0,
        }
    }

    pub fn hbar(&self) -> T {
        self.hbar
    }

    pub fn mu(&self) -> T {
        self.mu
    }

    pub fn coupling(&self) -> T {
        self.g
    }

    pub fn curvature(&self) -> &Curvature<T> {
        &self.curvature
    }

    pub fn kappa(&self) -> T {
        self.curvature.kappa()
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Same parameters with a different angular momentum.
    pub fn with_l(&self, l: u32) -> Self {
        Self { l, ..*self }
    }

    /// Same parameters with a different coupling.
    pub fn with_coupling(&self, g: T) -> Result<Self> {
        Self::new(self.hbar, self.mu, g, self.curvature, self.l)
    }

    /// ħ²/(2μ).
    pub fn kinetic_scale(&self) -> T {
        self.hbar * self.hbar / (self.mu + self.mu)
    }

    /// Derived coupling B = G√κ (an energy).
    pub fn b_coupling(&self) -> T {
        self.g * self.curvature.sqrt_kappa()
    }

    /// Propagator constant c = 2G·2μ/(ħ²κ).
    pub fn c(&self) -> T {
        let two = lit::<T>(2.0);
        two * self.g * (self.mu + self.mu) / (self.hbar * self.hbar * self.kappa())
    }

    /// Dimensionless momentum x = |q|/(ħ√κ).
    pub fn dimensionless_momentum(&self, q: T) -> T {
        q / (self.hbar * self.curvature.sqrt_kappa())
    }
}

/// One evaluated point of the potential.
///
/// Construction enforces the sampling invariant: the value is finite for
/// χ strictly inside (0, π), and for l > 0 the endpoints (where the
/// value would diverge) are unreachable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialSample<T> {
    pub chi: T,
    pub value: T,
}

impl<T: Real> PotentialSample<T> {
    pub fn new(chi: T, p: &PhysicalParams<T>) -> Result<Self> {
        Ok(Self {
            chi,
            value: rosen_morse(chi, p)?,
        })
    }
}

fn check_interior<T: Real>(chi: T) -> Result<()> {
    if chi > T::zero() && chi < T::PI() {
        Ok(())
    } else {
        Err(Error::ChiEndpoint {
            chi: chi.to_f64().unwrap_or(f64::NAN),
        })
    }
}

/// Evaluation never returns ±inf: a value that overflows the scalar type
/// (possible only within ~1e-154 of a pole in f64) reports as an endpoint
/// error instead.
fn finite_or_endpoint<T: Real>(value: T, chi: T) -> Result<T> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::ChiEndpoint {
            chi: chi.to_f64().unwrap_or(f64::NAN),
        })
    }
}

fn cot_term_unchecked<T: Real>(chi: T, p: &PhysicalParams<T>) -> T {
    let two = lit::<T>(2.0);
    -two * p.b_coupling() * chi.cos() / chi.sin()
}

fn barrier_unchecked<T: Real>(chi: T, p: &PhysicalParams<T>) -> T {
    if p.l() == 0 {
        return T::zero();
    }
    let ll = lit::<T>((p.l() as f64) * (p.l() as f64 + 1.0));
    let s = chi.sin();
    p.kappa() * p.kinetic_scale() * ll / (s * s)
}

/// Interaction term -2G√κ cot χ, equal to -2G√κ · x₄/|r| in Cartesian form.
pub fn cot_term<T: Real>(chi: T, p: &PhysicalParams<T>) -> Result<T> {
    check_interior(chi)?;
    finite_or_endpoint(cot_term_unchecked(chi, p), chi)
}

/// Centrifugal barrier κ (ħ²/2μ) l(l+1) csc²χ on S³; identically zero for l = 0.
pub fn centrifugal_barrier<T: Real>(chi: T, p: &PhysicalParams<T>) -> Result<T> {
    check_interior(chi)?;
    finite_or_endpoint(barrier_unchecked(chi, p), chi)
}

/// Full trigonometric Rosen-Morse potential, the exact pointwise sum of
/// [`cot_term`] and [`centrifugal_barrier`].
pub fn rosen_morse<T: Real>(chi: T, p: &PhysicalParams<T>) -> Result<T> {
    check_interior(chi)?;
    finite_or_endpoint(cot_term_unchecked(chi, p) + barrier_unchecked(chi, p), chi)
}
