//! Richardson extrapolation over paired grids and observed-order estimates.
//!
//! The second-order discretizations in this crate satisfy
//! `f(h) = f* + C h² + O(h⁴)`; two grids eliminate the leading term
//! without assuming an exact refinement ratio.

use crate::Real;

/// Eliminate the leading h² error term from a coarse/fine pair.
///
/// Returns `(h_c² f_f - h_f² f_c) / (h_c² - h_f²)`; exact for
/// `f(h) = f* + C h²`.
pub fn extrapolate_h2<T: Real>(f_coarse: T, h_coarse: T, f_fine: T, h_fine: T) -> T {
    let hc2 = h_coarse * h_coarse;
    let hf2 = h_fine * h_fine;
    (hc2 * f_fine - hf2 * f_coarse) / (hc2 - hf2)
}

/// Observed convergence order from two error (or residual) magnitudes:
/// `ln(e_c/e_f) / ln(h_c/h_f)`.
pub fn observed_order<T: Real>(e_coarse: T, h_coarse: T, e_fine: T, h_fine: T) -> T {
    (e_coarse / e_fine).ln() / (h_coarse / h_fine).ln()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn exact_on_quadratic_model() {
        // f(h) = 3 + 5 h^2
        let f = |h: f64| 3.0 + 5.0 * h * h;
        let (hc, hf) = (0.1, 0.0503);
        assert_relative_eq!(
            extrapolate_h2(f(hc), hc, f(hf), hf),
            3.0,
            max_relative = 1e-12
        );
    }

    #[test]
    fn order_of_quadratic_errors() {
        let e = |h: f64| 7.0 * h * h;
        let (hc, hf) = (0.2, 0.1);
        assert_relative_eq!(observed_order(e(hc), hc, e(hf), hf), 2.0, max_relative = 1e-12);
    }
}
