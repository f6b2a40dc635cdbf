//! Charts and conversions for S³ embedded in E₄.
//!
//! The sphere is parametrized by the second polar angle χ ∈ [0, π] with
//! |r| = R sin χ and x₄ = R cos χ, so that x₄² + |r|² = R². χ is the
//! canonical coordinate everywhere in this crate; radius-based entry
//! points exist only as conversions.

use crate::error::{Error, Result};
use crate::Real;

/// Constant positive curvature κ = 1/R² of the hypersphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Curvature<T> {
    kappa: T,
}

impl<T: Real> Curvature<T> {
    /// κ must be strictly positive and finite (units 1/length²).
    pub fn new(kappa: T) -> Result<Self> {
        if !(kappa > T::zero()) || !kappa.is_finite() {
            return Err(Error::InvalidParameter {
                name: "kappa",
                value: kappa.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { kappa })
    }

    /// Unit curvature, R = 1.
    pub fn unit() -> Self {
        Self { kappa: T::one() }
    }

    pub fn kappa(&self) -> T {
        self.kappa
    }

    pub fn sqrt_kappa(&self) -> T {
        self.kappa.sqrt()
    }

    /// Hyper-radius R = 1/√κ.
    pub fn radius(&self) -> T {
        self.kappa.sqrt().recip()
    }
}

/// Northern (χ ≤ π/2, x₄ ≥ 0) or Southern (χ ≥ π/2, x₄ ≤ 0) hemisphere.
///
/// The equator χ = π/2 classifies as Northern by convention; the boundary
/// has measure zero and leaves every integral unaffected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Hemisphere {
    Northern,
    Southern,
}

impl Hemisphere {
    pub fn from_chi<T: Real>(chi: T) -> Result<Self> {
        check_chart_range(chi)?;
        if chi <= T::FRAC_PI_2() {
            Ok(Hemisphere::Northern)
        } else {
            Ok(Hemisphere::Southern)
        }
    }

    /// χ-range covered by this hemisphere.
    pub fn chi_range<T: Real>(&self) -> (T, T) {
        match self {
            Hemisphere::Northern => (T::zero(), T::FRAC_PI_2()),
            Hemisphere::Southern => (T::FRAC_PI_2(), T::PI()),
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Hemisphere::Northern => "northern",
            Hemisphere::Southern => "southern",
        }
    }
}

/// A point of S³ in the (χ, θ, φ) chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpherePoint<T> {
    chi: T,
    theta: T,
    phi: T,
}

impl<T: Real> SpherePoint<T> {
    /// Requires χ ∈ [0, π], θ ∈ [0, π], φ ∈ [0, 2π).
    pub fn new(chi: T, theta: T, phi: T) -> Result<Self> {
        check_chart_range(chi)?;
        if !(theta >= T::zero() && theta <= T::PI()) {
            return Err(Error::AngleOutsideRange {
                name: "theta",
                value: theta.to_f64().unwrap_or(f64::NAN),
                lo: 0.0,
                hi: std::f64::consts::PI,
            });
        }
        let two_pi = T::PI() + T::PI();
        if !(phi >= T::zero() && phi < two_pi) {
            return Err(Error::AngleOutsideRange {
                name: "phi",
                value: phi.to_f64().unwrap_or(f64::NAN),
                lo: 0.0,
                hi: std::f64::consts::TAU,
            });
        }
        Ok(Self { chi, theta, phi })
    }

    pub fn chi(&self) -> T {
        self.chi
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    pub fn phi(&self) -> T {
        self.phi
    }

    /// |r| = R sin χ.
    pub fn radius(&self, curvature: &Curvature<T>) -> T {
        self.chi.sin() / curvature.sqrt_kappa()
    }

    /// x₄ = R cos χ.
    pub fn x4(&self, curvature: &Curvature<T>) -> T {
        self.chi.cos() / curvature.sqrt_kappa()
    }

    pub fn hemisphere(&self) -> Hemisphere {
        if self.chi <= T::FRAC_PI_2() {
            Hemisphere::Northern
        } else {
            Hemisphere::Southern
        }
    }
}

fn check_chart_range<T: Real>(chi: T) -> Result<()> {
    if chi >= T::zero() && chi <= T::PI() {
        Ok(())
    } else {
        Err(Error::ChiOutsideChart {
            chi: chi.to_f64().unwrap_or(f64::NAN),
        })
    }
}

/// |r| = R sin χ = sin χ / √κ, for χ ∈ [0, π].
pub fn radius_from_chi<T: Real>(chi: T, curvature: &Curvature<T>) -> Result<T> {
    check_chart_range(chi)?;
    Ok(chi.sin() / curvature.sqrt_kappa())
}

/// x₄ = R cos χ = cos χ / √κ, for χ ∈ [0, π].
pub fn x4_from_chi<T: Real>(chi: T, curvature: &Curvature<T>) -> Result<T> {
    check_chart_range(chi)?;
    Ok(chi.cos() / curvature.sqrt_kappa())
}

/// χ = arcsin(|r|/R) on the chosen hemisphere branch.
///
/// Northern returns arcsin(r√κ) ∈ [0, π/2]; Southern returns π − arcsin(r√κ).
/// Requires 0 ≤ r ≤ R; a flat-space radius beyond the sphere radius has no
/// preimage.
pub fn chi_from_radius<T: Real>(
    r: T,
    curvature: &Curvature<T>,
    hemisphere: Hemisphere,
) -> Result<T> {
    if !(r >= T::zero()) || !r.is_finite() {
        return Err(Error::InvalidParameter {
            name: "r",
            value: r.to_f64().unwrap_or(f64::NAN),
        });
    }
    let radius = curvature.radius();
    if r > radius {
        return Err(Error::RadiusExceedsSphere {
            r: r.to_f64().unwrap_or(f64::NAN),
            radius: radius.to_f64().unwrap_or(f64::NAN),
        });
    }
    // r ≤ R guarantees the ratio is ≤ 1 up to rounding; clamp the last ulp
    // so asin never sees an argument above 1.
    let ratio = (r * curvature.sqrt_kappa()).min(T::one());
    let northern = ratio.asin();
    Ok(match hemisphere {
        Hemisphere::Northern => northern,
        Hemisphere::Southern => T::PI() - northern,
    })
}
