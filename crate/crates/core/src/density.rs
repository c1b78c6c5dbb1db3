use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::Grid1D;

/// Position-representation density matrix `rho(x_i, x_j)` on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    grid: Grid1D,
    values: DMatrix<Complex64>,
}

impl DensityMatrix {
    pub fn new(grid: Grid1D, values: DMatrix<Complex64>) -> Result<Self> {
        let n = grid.len();
        if values.nrows() != n || values.ncols() != n {
            return Err(Error::argument(format!(
                "density matrix is {}x{} on a grid of {n} points",
                values.nrows(),
                values.ncols()
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn grid(&self) -> &Grid1D {
        &self.grid
    }

    pub fn values(&self) -> &DMatrix<Complex64> {
        &self.values
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.values[(i, j)]
    }

    /// `max |rho - rho^dagger|` entrywise.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.grid.len();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.values[(i, j)] - self.values[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Trapezoid `int rho(x, x) dx` (real part).
    pub fn trace(&self) -> f64 {
        (0..self.grid.len())
            .map(|i| self.grid.weight(i) * self.values[(i, i)].re)
            .sum()
    }

    /// `sqrt(w_i) rho_ij sqrt(w_j)` with trapezoid weights, hermitized. Its
    /// eigenvalues approximate those of the continuum operator.
    pub fn weighted_operator(&self) -> DMatrix<Complex64> {
        let n = self.grid.len();
        let sw: Vec<f64> = (0..n).map(|i| self.grid.weight(i).sqrt()).collect();
        DMatrix::from_fn(n, n, |i, j| {
            let h = 0.5 * (self.values[(i, j)] + self.values[(j, i)].conj());
            h * (sw[i] * sw[j])
        })
    }

    /// Ascending eigenvalues of [`Self::weighted_operator`].
    pub fn eigenvalues(&self) -> Vec<f64> {
        let mut ev: Vec<f64> = self
            .weighted_operator()
            .symmetric_eigenvalues()
            .iter()
            .copied()
            .collect();
        ev.sort_by(f64::total_cmp);
        ev
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues()[0]
    }

    /// `Tr(rho^2) / Tr(rho)^2`.
    pub fn purity(&self) -> f64 {
        let m = self.weighted_operator();
        let tr2: f64 = m.iter().map(|z| z.norm_sqr()).sum();
        let tr = self.trace();
        tr2 / (tr * tr)
    }

    /// `<psi|rho|psi> / Tr(rho)` for a reference state sampled on the same grid.
    pub fn fidelity_with(&self, psi: &[Complex64]) -> Result<f64> {
        let n = self.grid.len();
        if psi.len() != n {
            return Err(Error::argument(
                "reference state sampled on a different grid",
            ));
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..n {
            let wi = self.grid.weight(i);
            for j in 0..n {
                acc += psi[i].conj() * self.values[(i, j)] * psi[j] * (wi * self.grid.weight(j));
            }
        }
        Ok(acc.re / self.trace())
    }
}
