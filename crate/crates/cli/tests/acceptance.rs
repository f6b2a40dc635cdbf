//! Acceptance suite: one test per criterion, each printing a PASS line
//! with the measured figure once its assertions hold. Run with
//! `cargo test -p rmprop --test acceptance -- --nocapture` to see the
//! lines for passing criteria.

use rmprop_core::richardson::observed_order;
use rmprop_core::{
    closed_form_propagator, degeneracy_report, degeneracy_report_extrapolated,
    harmonicity_residual_in, hemisphere_fourier, sign_convention_audit,
    solve_spectrum_extrapolated, ChiGrid, Hemisphere, PhysicalParams, QuadratureConfig,
};
use std::f64::consts::PI;
use std::process::{Command, Output};

fn natural() -> PhysicalParams<f64> {
    PhysicalParams::natural()
}

fn rmprop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rmprop"))
        .args(args)
        .output()
        .expect("spawn rmprop")
}

/// 100 log-spaced dimensionless momenta in [1e-3, 50].
fn log_grid() -> Vec<f64> {
    let (lo, hi) = (1e-3f64.ln(), 50f64.ln());
    (0..100)
        .map(|i| (lo + (hi - lo) * i as f64 / 99.0).exp())
        .collect()
}

#[test]
fn criterion_1_closed_form_anchors() {
    let p = natural();
    let c = p.c();
    assert_eq!(c, 2.0);
    // Pi(0) = 1 exactly through the analytic limit branch
    assert_eq!(closed_form_propagator(0.0, &p).unwrap(), 1.0);
    // Pi(pi hbar sqrt(kappa)) = 4/pi^2 within 1e-14
    let at_pi = closed_form_propagator(PI, &p).unwrap();
    assert!(
        (at_pi - 4.0 / (PI * PI)).abs() <= 1e-14,
        "Pi(pi) = {at_pi}"
    );
    // zeros at x = 2 pi n within 1e-14 c for n = 1..5
    let mut worst = 0.0f64;
    for n in 1..=5 {
        let v = closed_form_propagator(2.0 * PI * n as f64, &p).unwrap().abs();
        worst = worst.max(v);
        assert!(v <= 1e-14 * c, "zero at n={n}: {v}");
    }
    println!(
        "acceptance 1 (closed-form anchors): PASS — Pi(0)=1 exact, |Pi(pi)-4/pi^2| = {:.2e}, worst zero = {:.2e}",
        (at_pi - 4.0 / (PI * PI)).abs(),
        worst
    );
}

#[test]
fn criterion_2_quadrature_matches_closed_form_with_documented_sign() {
    let p = natural();
    let cfg = QuadratureConfig::default();
    let mut worst = 0.0f64;
    for &x in &log_grid() {
        let quad = hemisphere_fourier(x, &p, Hemisphere::Northern, &cfg).unwrap();
        let cf = closed_form_propagator(x, &p).unwrap();
        let err = (quad - cf).abs();
        assert!(
            err <= 1e-8f64.max(1e-7 * cf.abs()),
            "x={x}: error {err}"
        );
        worst = worst.max(err);
    }

    // the sign convention is fixed by the audit and shipped as a doc
    let report = sign_convention_audit(&p, &cfg, 1.0).unwrap();
    assert!((report.magnitude_ratio - 1.0).abs() <= 1e-6);
    assert!(!report.raw_sign_matches_closed_form);
    let rendered = report.render();
    let doc_path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/sign_convention.md");
    if std::env::var_os("RMPROP_REGEN_DOCS").is_some() {
        std::fs::write(doc_path, &rendered).unwrap();
    }
    let committed = std::fs::read_to_string(doc_path)
        .expect("docs/sign_convention.md missing; regenerate with RMPROP_REGEN_DOCS=1");
    assert_eq!(committed, rendered, "audit doc out of sync with the library");

    println!(
        "acceptance 2 (quadrature vs closed form): PASS — max |err| = {worst:.2e}, sign audit documented"
    );
}

#[test]
fn criterion_3_mirror_antisymmetry() {
    let p = natural();
    let cfg = QuadratureConfig::default();
    let mut worst = 0.0f64;
    for &x in &log_grid() {
        let north = hemisphere_fourier(x, &p, Hemisphere::Northern, &cfg).unwrap();
        let south = hemisphere_fourier(x, &p, Hemisphere::Southern, &cfg).unwrap();
        let miss = (north + south).abs();
        assert!(miss <= 2e-8, "x={x}: north+south = {miss:e}");
        worst = worst.max(miss);
    }
    println!("acceptance 3 (mirror antisymmetry): PASS — max |north+south| = {worst:.2e}");
}

#[test]
fn criterion_4_uv_envelope_and_decay() {
    let p = natural();
    let c = p.c();
    // sup over x in [20, 200] of x^2 Pi(x) <= 2c + 1e-12
    let mut sup = 0.0f64;
    for i in 0..=20000 {
        let x = 20.0 + 180.0 * i as f64 / 20000.0;
        let v = x * x * closed_form_propagator(x, &p).unwrap();
        sup = sup.max(v);
        assert!(v <= 2.0 * c + 1e-12, "x={x}: x^2 Pi = {v}");
    }
    let far = closed_form_propagator(1e6, &p).unwrap();
    assert!(far < 1e-11 * c, "Pi(1e6) = {far}");
    println!(
        "acceptance 4 (Coulomb-like UV envelope): PASS — sup x^2 Pi = {sup:.15} <= {}, Pi(1e6) = {far:.2e}",
        2.0 * c
    );
}

#[test]
fn criterion_5_harmonicity_order() {
    let (lo, hi) = (0.1, PI - 0.1);
    let sizes = [200usize, 400, 800];
    let mut residuals = Vec::new();
    let mut spacings = Vec::new();
    for &n in &sizes {
        let grid = ChiGrid::<f64>::new(n).unwrap();
        residuals.push(harmonicity_residual_in(&grid, lo, hi).unwrap());
        spacings.push(grid.h());
    }
    assert!(residuals[0] > residuals[1] && residuals[1] > residuals[2]);
    let final_order = observed_order(residuals[1], spacings[1], residuals[2], spacings[2]);
    let overall_order = observed_order(residuals[0], spacings[0], residuals[2], spacings[2]);
    assert!(final_order >= 1.9, "final order {final_order}");
    assert!(overall_order >= 1.9, "overall order {overall_order}");
    println!(
        "acceptance 5 (cot chi harmonicity): PASS — residuals {:.3e}/{:.3e}/{:.3e}, final order {final_order:.3}, overall {overall_order:.3}",
        residuals[0], residuals[1], residuals[2]
    );
}

#[test]
fn criterion_6_free_spectrum() {
    let free = natural().with_coupling(0.0).unwrap();
    let l0 = solve_spectrum_extrapolated(&free, 800, 5).unwrap().eigenvalues;
    let mut worst = 0.0f64;
    for (i, e) in l0.iter().enumerate() {
        let exact = ((i + 1) * (i + 1)) as f64;
        let rel = (e - exact).abs() / exact;
        assert!(rel <= 1e-3, "level {}: {e} vs {exact}", i + 1);
        worst = worst.max(rel);
    }
    let l1 = solve_spectrum_extrapolated(&free.with_l(1), 800, 1)
        .unwrap()
        .eigenvalues[0];
    let rel = (l1 - l0[1]).abs() / l0[1];
    assert!(rel <= 1e-3, "l=1 lowest {l1} vs l=0 second {}", l0[1]);
    println!(
        "acceptance 6 (free spectrum n^2): PASS — worst rel error {worst:.2e}, l=1 vs l=0 offset {rel:.2e}"
    );
}

#[test]
fn criterion_7_so4_degeneracy_under_interaction() {
    let p = natural();
    // extrapolated spreads at n_points = 1600
    let report = degeneracy_report_extrapolated(&p, 3, 1600).unwrap();
    let max_spread = report.max_spread();
    assert!(max_spread < 1e-3, "max extrapolated spread {max_spread}");

    // raw spreads shrink by >= 3.5x per doubling over three doublings
    let sizes = [200usize, 400, 800, 1600];
    let raw: Vec<_> = sizes
        .iter()
        .map(|&n| degeneracy_report(&p, 3, &ChiGrid::new(n).unwrap()).unwrap())
        .collect();
    let mut worst_ratio = f64::INFINITY;
    for n in 2..=4u32 {
        for w in raw.windows(2) {
            let ratio = w[0].spread_for(n).unwrap() / w[1].spread_for(n).unwrap();
            assert!(ratio >= 3.5, "n={n}: doubling ratio {ratio}");
            worst_ratio = worst_ratio.min(ratio);
        }
    }
    println!(
        "acceptance 7 (SO(4) degeneracy, K(K+2) alone): PASS — max spread {max_spread:.2e}, worst doubling ratio {worst_ratio:.3}"
    );
}

#[test]
fn criterion_8_fig1_surface_shape() {
    let out = rmprop(&["fig1", "--kappa-list", "0.5,1,2"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header, ["kappa", "q", "Pi"]);

    let mut intercepts = Vec::new();
    let mut rows_by_kappa: std::collections::BTreeMap<u64, Vec<(f64, f64)>> =
        std::collections::BTreeMap::new();
    for line in lines {
        let cells: Vec<f64> = line.split(',').map(|c| c.parse().unwrap()).collect();
        let (kappa, q, pi) = (cells[0], cells[1], cells[2]);
        assert!(pi.is_finite(), "non-finite surface entry");
        if q == 0.0 {
            intercepts.push((kappa, pi));
        }
        rows_by_kappa.entry(kappa.to_bits()).or_default().push((q, pi));
    }
    // q = 0 intercepts proportional to 1/kappa: {2, 1, 0.5}
    assert_eq!(intercepts, vec![(0.5, 2.0), (1.0, 1.0), (2.0, 0.5)]);

    // first zeros along q = 2 pi hbar sqrt(kappa): exact at the analytic
    // location, and the emitted curve dips accordingly near it
    for kappa in [0.5f64, 1.0, 2.0] {
        let p = PhysicalParams::new(
            1.0,
            0.5,
            1.0,
            rmprop_core::Curvature::new(kappa).unwrap(),
            0,
        )
        .unwrap();
        let q0 = 2.0 * PI * kappa.sqrt();
        let exact = closed_form_propagator(q0, &p).unwrap();
        assert!(exact <= 1e-14 * p.c(), "kappa={kappa}: Pi(2 pi sqrt(k)) = {exact}");
        let rows = &rows_by_kappa[&kappa.to_bits()];
        let near_zero = rows
            .iter()
            .filter(|(q, _)| (q - q0).abs() <= 0.26)
            .map(|(_, pi)| pi.abs())
            .fold(f64::INFINITY, f64::min);
        assert!(
            near_zero <= 0.01 * p.c(),
            "kappa={kappa}: no dip near q = {q0} (min {near_zero})"
        );
    }
    println!(
        "acceptance 8 (surface shape): PASS — intercepts (2, 1, 0.5), zeros on q = 2 pi sqrt(kappa), all entries finite"
    );
}

#[test]
fn criterion_9_cli_determinism() {
    let a = rmprop(&["propagator", "--verify"]);
    let b = rmprop(&["propagator", "--verify"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout, "stdout differs between identical runs");
    println!(
        "acceptance 9 (CLI determinism): PASS — two runs, byte-identical stdout ({} bytes)",
        a.stdout.len()
    );
}
