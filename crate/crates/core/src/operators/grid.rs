//! Uniform interior grid of the polar angle χ.

use crate::error::{Error, Result};
use crate::Real;

/// Minimum number of interior points for which the discretization is
/// supported at all.
pub const MIN_POINTS: usize = 16;

/// Uniform interior grid χ_j = j·h, j = 1..n_points, with h = π/(n_points+1).
///
/// Endpoints are excluded: Dirichlet data lives off-grid as zero ghost
/// values, and the cot/csc² poles are never sampled.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChiGrid<T> {
    n_points: usize,
    h: T,
}

impl<T: Real> ChiGrid<T> {
    pub fn new(n_points: usize) -> Result<Self> {
        if n_points < MIN_POINTS {
            return Err(Error::GridTooSmall {
                n_points,
                min: MIN_POINTS,
            });
        }
        let h = T::PI() / T::from_usize(n_points + 1).unwrap();
        Ok(Self { n_points, h })
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    /// Spacing h = π/(n_points + 1).
    pub fn h(&self) -> T {
        self.h
    }

    /// Node χ_{i+1} = (i+1)·h for the zero-based storage index i.
    pub fn node(&self, i: usize) -> T {
        debug_assert!(i < self.n_points);
        T::from_usize(i + 1).unwrap() * self.h
    }

    pub fn nodes(&self) -> impl Iterator<Item = T> + '_ {
        (0..self.n_points).map(move |i| self.node(i))
    }

    /// Sample a function at every node.
    pub fn sample<F: FnMut(T) -> T>(&self, f: F) -> Vec<T> {
        self.nodes().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn nodes_are_strictly_interior_and_uniform() {
        let grid = ChiGrid::<f64>::new(17).unwrap();
        let nodes: Vec<f64> = grid.nodes().collect();
        assert_eq!(nodes.len(), 17);
        assert!(nodes[0] > 0.0 && nodes[16] < PI);
        for w in nodes.windows(2) {
            assert!((w[1] - w[0] - grid.h()).abs() < 1e-15);
        }
        // grid with odd n_points puts a node at pi/2 exactly when (n+1)/2
        // is an integer index; 17+1 = 18, node 9h = pi/2
        assert!((grid.node(8) - PI / 2.0).abs() < 1e-15);
    }

    #[test]
    fn too_small_rejected() {
        assert!(matches!(
            ChiGrid::<f64>::new(15),
            Err(Error::GridTooSmall { .. })
        ));
    }
}
