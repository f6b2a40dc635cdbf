//! Property-based invariants across the library modules.

use proptest::prelude::*;
use rmprop_core::{
    centrifugal_barrier, chi_from_radius, closed_form_propagator, cot_term, hemisphere_fourier,
    radius_from_chi, rosen_morse, x4_from_chi, Curvature, Hemisphere, PhysicalParams,
    QuadratureConfig, SpherePoint,
};
use std::f64::consts::{FRAC_PI_2, PI, TAU};

fn curvature_strategy() -> impl Strategy<Value = f64> {
    prop_oneof![0.01f64..100.0, Just(1.0), Just(0.25), Just(4.0)]
}

fn params(g: f64, kappa: f64, l: u32) -> PhysicalParams<f64> {
    PhysicalParams::new(1.0, 0.5, g, Curvature::new(kappa).unwrap(), l).unwrap()
}

proptest! {
    #[test]
    fn embedding_identity(
        chi in 0.0..PI,
        theta in 0.0..PI,
        phi in 0.0..TAU,
        kappa in curvature_strategy(),
    ) {
        let c = Curvature::new(kappa).unwrap();
        let p = SpherePoint::new(chi, theta, phi).unwrap();
        let r = p.radius(&c);
        let x4 = p.x4(&c);
        let rr = c.radius() * c.radius();
        prop_assert!((x4 * x4 + r * r - rr).abs() <= 8.0 * f64::EPSILON * rr);
    }

    #[test]
    fn chart_round_trip_northern(
        chi in 0.0..FRAC_PI_2 - 1e-3,
        kappa in curvature_strategy(),
    ) {
        // the sin chart is flat at the equator, so double precision cannot
        // resolve chi closer to pi/2 than ~1e-4; the margin keeps the
        // 1e-12 absolute round-trip achievable
        let c = Curvature::new(kappa).unwrap();
        let r = radius_from_chi(chi, &c).unwrap();
        let back = chi_from_radius(r, &c, Hemisphere::Northern).unwrap();
        prop_assert!((back - chi).abs() < 1e-12, "chi={chi} back={back}");
    }

    #[test]
    fn chart_round_trip_southern(
        chi in FRAC_PI_2 + 1e-3..PI,
        kappa in curvature_strategy(),
    ) {
        let c = Curvature::new(kappa).unwrap();
        let r = radius_from_chi(chi, &c).unwrap();
        let back = chi_from_radius(r, &c, Hemisphere::Southern).unwrap();
        prop_assert!((back - chi).abs() < 1e-12, "chi={chi} back={back}");
    }

    #[test]
    fn hemisphere_sign_consistency(chi in 0.0..PI, kappa in curvature_strategy()) {
        prop_assume!((chi - FRAC_PI_2).abs() > 1e-12);
        let c = Curvature::new(kappa).unwrap();
        let x4 = x4_from_chi(chi, &c).unwrap();
        match Hemisphere::from_chi(chi).unwrap() {
            Hemisphere::Northern => prop_assert!(x4 > 0.0),
            Hemisphere::Southern => prop_assert!(x4 < 0.0),
        }
    }

    #[test]
    fn cot_term_antisymmetric_about_equator(
        chi in 0.01..PI - 0.01,
        g in -3.0f64..3.0,
        kappa in curvature_strategy(),
    ) {
        let p = params(g, kappa, 0);
        let a = cot_term(chi, &p).unwrap();
        let b = cot_term(PI - chi, &p).unwrap();
        prop_assert!((a + b).abs() <= 1e-12 * (1.0 + a.abs()), "a={a} b={b}");
    }

    #[test]
    fn barrier_symmetric_about_equator(
        chi in 0.01..PI - 0.01,
        kappa in curvature_strategy(),
        l in 1u32..5,
    ) {
        let p = params(1.0, kappa, l);
        let a = centrifugal_barrier(chi, &p).unwrap();
        let b = centrifugal_barrier(PI - chi, &p).unwrap();
        prop_assert!((a - b).abs() <= 1e-11 * a.abs());
    }

    #[test]
    fn potential_decomposition_exact(
        chi in 0.001..PI - 0.001,
        g in -3.0f64..3.0,
        kappa in curvature_strategy(),
        l in 0u32..4,
    ) {
        let p = params(g, kappa, l);
        let whole = rosen_morse(chi, &p).unwrap();
        let parts = cot_term(chi, &p).unwrap() + centrifugal_barrier(chi, &p).unwrap();
        prop_assert_eq!(whole, parts);
    }

    #[test]
    fn cartesian_identity_tight(chi in 0.05..PI - 0.05, kappa in curvature_strategy()) {
        let p = params(1.0, kappa, 0);
        let via_chart = -2.0 * p.b_coupling() * x4_from_chi(chi, p.curvature()).unwrap()
            / radius_from_chi(chi, p.curvature()).unwrap();
        let direct = cot_term(chi, &p).unwrap();
        let scale = direct.abs().max(1e-3);
        prop_assert!((direct - via_chart).abs() <= 1e-13 * scale.max(1.0) + 1e-13 * direct.abs());
    }

    #[test]
    fn closed_form_bounded_by_half_c(q in 0.0f64..1e4, g in 0.01f64..5.0, kappa in curvature_strategy()) {
        let p = params(g, kappa, 0);
        let c = p.c();
        let v = closed_form_propagator(q, &p).unwrap();
        prop_assert!(v.is_finite());
        prop_assert!(v >= 0.0 && v <= c / 2.0 * (1.0 + 1e-15));
        // Coulomb-like envelope past the first lobe
        let x = p.dimensionless_momentum(q);
        if x >= PI {
            prop_assert!(v <= 2.0 * c / (x * x) * (1.0 + 1e-12));
        }
    }

    #[test]
    fn quadrature_matches_closed_form_randomized(
        x in 1e-3f64..50.0,
        g in 0.1f64..3.0,
    ) {
        let p = params(g, 1.0, 0);
        let cfg = QuadratureConfig::default();
        let quad = hemisphere_fourier(x, &p, Hemisphere::Northern, &cfg).unwrap();
        let cf = closed_form_propagator(x, &p).unwrap();
        prop_assert!((quad - cf).abs() <= 1e-8f64.max(1e-7 * cf.abs()));
        let south = hemisphere_fourier(x, &p, Hemisphere::Southern, &cfg).unwrap();
        prop_assert!((quad + south).abs() <= 2.0 * cfg.abs_tol());
    }
}

#[test]
fn round_trip_is_exact_at_the_equator() {
    // sin(pi/2) evaluates to exactly 1 in f64, so the equator itself
    // round-trips bit-exactly on the Northern branch
    let c = Curvature::new(1.0).unwrap();
    let r = radius_from_chi(FRAC_PI_2, &c).unwrap();
    assert_eq!(r, 1.0);
    assert_eq!(
        chi_from_radius(r, &c, Hemisphere::Northern).unwrap(),
        FRAC_PI_2
    );
}

#[test]
fn zeros_at_multiples_of_two_pi() {
    let p = PhysicalParams::<f64>::natural();
    let c = p.c();
    for n in 1..=5 {
        let q = 2.0 * PI * n as f64;
        let v = closed_form_propagator(q, &p).unwrap();
        assert!(v.abs() < 1e-14 * c, "n={n}: {v}");
    }
}

#[test]
fn oracle_equivalence_on_log_grid() {
    // 100 log-spaced x in [1e-3, 50]
    let p = PhysicalParams::<f64>::natural();
    let cfg = QuadratureConfig::default();
    let (lo, hi) = (1e-3f64.ln(), 50f64.ln());
    for i in 0..100 {
        let x = (lo + (hi - lo) * i as f64 / 99.0).exp();
        let quad = hemisphere_fourier(x, &p, Hemisphere::Northern, &cfg).unwrap();
        let cf = closed_form_propagator(x, &p).unwrap();
        let tol = 1e-8f64.max(1e-7 * cf.abs());
        assert!((quad - cf).abs() <= tol, "x={x}: |{quad} - {cf}| > {tol}");
        let south = hemisphere_fourier(x, &p, Hemisphere::Southern, &cfg).unwrap();
        assert!((quad + south).abs() <= 2e-8, "mirror violation at x={x}");
    }
}
