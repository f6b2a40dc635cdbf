//! Bound-state solver for the S-equation
//!
//! ```text
//! [ -κ (ħ²/2μ) d²/dχ² + V(χ) ] S(χ) = E S(χ),   S(0) = S(π) = 0,
//! ```
//!
//! with V the full trigonometric Rosen-Morse potential, plus the SO(4)
//! degeneracy report that aligns levels of the l = 0..K problems by the
//! principal quantum number n = K + 1.
//!
//! Two eigenvalue conventions coexist in the angular problem. All spectra
//! reported here are S-equation eigenvalues: for G = 0 they equal
//! κ(ħ²/2μ)(K+1)², which is the bare K² eigenvalue κ(ħ²/2μ)K(K+2) shifted
//! by the constant κ(ħ²/2μ) picked up in the ψ ↔ S substitution. The
//! offset is asserted in the tests, never silently mixed.

use super::grid::ChiGrid;
use super::tridiagonal::SymmetricTridiagonal;
use crate::error::{Error, Result};
use crate::potentials::{rosen_morse, PhysicalParams};
use crate::richardson::extrapolate_h2;
use crate::Real;

/// Quantum numbers of a |K l m⟩ state of the SO(4) ⊃ SO(3) ⊃ SO(2) chain.
///
/// m is bookkeeping only: the radial problem is m-independent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KQuantumNumbers {
    k: u32,
    l: u32,
    m: i32,
}

impl KQuantumNumbers {
    /// Branching rules: l = 0..K and m = -l..+l.
    pub fn new(k: u32, l: u32, m: i32) -> Result<Self> {
        if l > k || m.unsigned_abs() > l {
            return Err(Error::InvalidQuantumNumbers { k, l, m });
        }
        Ok(Self { k, l, m })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn m(&self) -> i32 {
        self.m
    }

    /// Principal quantum number n = K + 1.
    pub fn n(&self) -> u32 {
        self.k + 1
    }

    /// K² eigenvalue K(K+2).
    pub fn casimir(&self) -> u32 {
        self.k * (self.k + 2)
    }
}

/// Sorted eigenvalues of the S-equation with grid metadata.
#[derive(Debug, Clone)]
pub struct SpectrumResult<T> {
    /// Ascending S-equation eigenvalues.
    pub eigenvalues: Vec<T>,
    pub params: PhysicalParams<T>,
    /// Grid the eigenvalues were computed on (the fine grid when
    /// extrapolated).
    pub grid: ChiGrid<T>,
    /// `Some((n_coarse, n_fine))` when the values are Richardson
    /// extrapolated over that grid pair.
    pub extrapolation: Option<(usize, usize)>,
}

impl<T: Real> SpectrumResult<T> {
    pub fn extrapolated(&self) -> bool {
        self.extrapolation.is_some()
    }
}

/// Assemble the symmetric tridiagonal discretization of the S-equation.
pub fn assemble_s_equation<T: Real>(
    p: &PhysicalParams<T>,
    grid: &ChiGrid<T>,
) -> Result<SymmetricTridiagonal<T>> {
    let n = grid.n_points();
    let h = grid.h();
    let t = p.kappa() * p.kinetic_scale();
    let kin = t / (h * h);
    let mut diag = Vec::with_capacity(n);
    for chi in grid.nodes() {
        let v = rosen_morse(chi, p)?;
        if !v.is_finite() {
            return Err(Error::NonFiniteSample {
                index: diag.len(),
            });
        }
        diag.push(kin + kin + v);
    }
    SymmetricTridiagonal::new(diag, vec![-kin; n - 1])
}

fn check_levels(n_levels: usize, n_points: usize) -> Result<()> {
    let max = n_points / 4;
    if n_levels == 0 || n_levels > max {
        return Err(Error::TooManyLevels { n_levels, max });
    }
    Ok(())
}

/// Lowest `n_levels` S-equation eigenvalues on a single grid.
///
/// The discretization is trustworthy only for low levels, so
/// `n_levels <= n_points/4` is required.
pub fn solve_spectrum<T: Real>(
    p: &PhysicalParams<T>,
    grid: &ChiGrid<T>,
    n_levels: usize,
) -> Result<SpectrumResult<T>> {
    check_levels(n_levels, grid.n_points())?;
    let matrix = assemble_s_equation(p, grid)?;
    let eigenvalues = matrix.lowest_eigenvalues(n_levels)?;
    Ok(SpectrumResult {
        eigenvalues,
        params: *p,
        grid: *grid,
        extrapolation: None,
    })
}

/// Lowest `n_levels` eigenvalues, Richardson extrapolated over the paired
/// grids (n_points, 2·n_points).
pub fn solve_spectrum_extrapolated<T: Real>(
    p: &PhysicalParams<T>,
    n_points: usize,
    n_levels: usize,
) -> Result<SpectrumResult<T>> {
    let coarse = ChiGrid::new(n_points)?;
    let fine = ChiGrid::new(2 * n_points)?;
    check_levels(n_levels, n_points)?;
    let ec = solve_spectrum(p, &coarse, n_levels)?.eigenvalues;
    let ef = solve_spectrum(p, &fine, n_levels)?.eigenvalues;
    let eigenvalues = ec
        .iter()
        .zip(&ef)
        .map(|(&c, &f)| extrapolate_h2(c, coarse.h(), f, fine.h()))
        .collect();
    Ok(SpectrumResult {
        eigenvalues,
        params: *p,
        grid: fine,
        extrapolation: Some((n_points, 2 * n_points)),
    })
}

/// ψ(χ_j) = sin(χ_j) · S(χ_j) on the grid nodes.
pub fn psi_from_s<T: Real>(s: &[T], grid: &ChiGrid<T>) -> Result<Vec<T>> {
    if s.len() != grid.n_points() {
        return Err(Error::LengthMismatch {
            expected: grid.n_points(),
            got: s.len(),
        });
    }
    if let Some(index) = s.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFiniteSample { index });
    }
    Ok(grid
        .nodes()
        .zip(s)
        .map(|(chi, &v)| chi.sin() * v)
        .collect())
}

/// One aligned level of the degeneracy table.
#[derive(Debug, Clone, Copy)]
pub struct DegeneracyRow<T> {
    pub l: u32,
    /// 1-based level index k within the l-problem.
    pub level_index: usize,
    /// Principal quantum number the level aligns to, n = l + k.
    pub n: u32,
    pub eigenvalue: T,
}

/// SO(4) degeneracy table: levels of the l = 0..K_max problems aligned by
/// n = l + k, with the max relative spread across l for each n.
#[derive(Debug, Clone)]
pub struct DegeneracyReport<T> {
    /// Rows ordered by (l, level_index).
    pub rows: Vec<DegeneracyRow<T>>,
    /// (n, relative spread) ascending in n up to the alignment depth.
    /// Spread is (max - min)/|mean| across the l-values contributing to
    /// that n; zero when only one l contributes.
    pub spreads: Vec<(u32, T)>,
    pub params: PhysicalParams<T>,
    pub n_points: usize,
    pub extrapolated: bool,
}

impl<T: Real> DegeneracyReport<T> {
    /// Spread for a given principal quantum number.
    pub fn spread_for(&self, n: u32) -> Option<T> {
        self.spreads.iter().find(|(m, _)| *m == n).map(|(_, s)| *s)
    }

    pub fn max_spread(&self) -> T {
        self.spreads
            .iter()
            .map(|(_, s)| *s)
            .fold(T::zero(), T::max)
    }
}

fn build_report<T: Real, F>(
    p: &PhysicalParams<T>,
    k_max: u32,
    n_max: u32,
    n_points: usize,
    extrapolated: bool,
    mut solve: F,
) -> Result<DegeneracyReport<T>>
where
    F: FnMut(&PhysicalParams<T>, usize) -> Result<Vec<T>>,
{
    if n_max < k_max + 1 {
        return Err(Error::InvalidParameter {
            name: "n_max",
            value: n_max as f64,
        });
    }
    let mut rows = Vec::new();
    for l in 0..=k_max {
        let levels = (n_max - l) as usize;
        let pl = p.with_l(l);
        let eigenvalues = solve(&pl, levels)?;
        for (idx, &eigenvalue) in eigenvalues.iter().enumerate() {
            let level_index = idx + 1;
            rows.push(DegeneracyRow {
                l,
                level_index,
                n: l + level_index as u32,
                eigenvalue,
            });
        }
    }

    let mut spreads = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let vals: Vec<T> = rows
            .iter()
            .filter(|r| r.n == n)
            .map(|r| r.eigenvalue)
            .collect();
        let spread = if vals.len() < 2 {
            T::zero()
        } else {
            let lo = vals.iter().cloned().fold(T::infinity(), T::min);
            let hi = vals.iter().cloned().fold(T::neg_infinity(), T::max);
            let mean = vals.iter().fold(T::zero(), |a, &b| a + b)
                / T::from_usize(vals.len()).unwrap();
            (hi - lo) / mean.abs().max(T::epsilon())
        };
        spreads.push((n, spread));
    }

    Ok(DegeneracyReport {
        rows,
        spreads,
        params: *p,
        n_points,
        extrapolated,
    })
}

fn check_k_max(k_max: u32) -> Result<()> {
    if k_max < 1 {
        return Err(Error::InvalidParameter {
            name: "K_max",
            value: k_max as f64,
        });
    }
    Ok(())
}

/// Degeneracy report on a single grid (no extrapolation). The levels of
/// each l-problem are aligned by n = l + k following the K ≥ l branching
/// rule; the table reaches down to n = K_max + 1.
pub fn degeneracy_report<T: Real>(
    p: &PhysicalParams<T>,
    k_max: u32,
    grid: &ChiGrid<T>,
) -> Result<DegeneracyReport<T>> {
    degeneracy_report_with_depth(p, k_max, grid, k_max + 1)
}

/// [`degeneracy_report`] extended past n = K_max + 1: levels are aligned
/// up to the principal quantum number `n_max >= K_max + 1`.
pub fn degeneracy_report_with_depth<T: Real>(
    p: &PhysicalParams<T>,
    k_max: u32,
    grid: &ChiGrid<T>,
    n_max: u32,
) -> Result<DegeneracyReport<T>> {
    check_k_max(k_max)?;
    build_report(p, k_max, n_max, grid.n_points(), false, |pl, levels| {
        Ok(solve_spectrum(pl, grid, levels)?.eigenvalues)
    })
}

/// Degeneracy report with Richardson extrapolation over (n_points, 2·n_points).
pub fn degeneracy_report_extrapolated<T: Real>(
    p: &PhysicalParams<T>,
    k_max: u32,
    n_points: usize,
) -> Result<DegeneracyReport<T>> {
    degeneracy_report_extrapolated_with_depth(p, k_max, n_points, k_max + 1)
}

/// [`degeneracy_report_extrapolated`] with an explicit alignment depth.
pub fn degeneracy_report_extrapolated_with_depth<T: Real>(
    p: &PhysicalParams<T>,
    k_max: u32,
    n_points: usize,
    n_max: u32,
) -> Result<DegeneracyReport<T>> {
    check_k_max(k_max)?;
    build_report(p, k_max, n_max, n_points, true, |pl, levels| {
        Ok(solve_spectrum_extrapolated(pl, n_points, levels)?.eigenvalues)
    })
}
