use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{integrate_1d, Grid1D};

/// Default tolerance on `int |psi|^2 dx = 1`.
pub const NORM_TOLERANCE: f64 = 1e-6;

/// Complex samples `psi(x)` on a uniform position grid (`hbar = m = 1`).
#[derive(Debug, Clone, PartialEq)]
pub struct WaveFunction {
    grid: Grid1D,
    values: Vec<Complex64>,
}

impl WaveFunction {
    pub fn new(grid: Grid1D, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::argument(format!(
                "wavefunction: {} samples for a grid of {} points",
                values.len(),
                grid.len()
            )));
        }
        Ok(Self { grid, values })
    }

    pub fn from_fn(grid: Grid1D, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        let values = grid.points().map(f).collect();
        Self::new(grid, values)
    }

    pub fn grid(&self) -> &Grid1D {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Trapezoid `int |psi|^2 dx`.
    pub fn norm_sqr(&self) -> f64 {
        let dens: Vec<f64> = self.values.iter().map(|z| z.norm_sqr()).collect();
        integrate_1d(&dens, &self.grid).expect("sizes checked at construction")
    }

    pub fn require_normalized(&self, tol: f64) -> Result<()> {
        let n = self.norm_sqr();
        if (n - 1.0).abs() > tol {
            Err(Error::Precondition(format!(
                "wavefunction norm is {n}, expected 1 within {tol}"
            )))
        } else {
            Ok(())
        }
    }

    pub fn normalized(mut self) -> Result<Self> {
        let n = self.norm_sqr();
        if n.is_nan() || n <= 0.0 {
            return Err(Error::Precondition(
                "cannot normalize a zero wavefunction".into(),
            ));
        }
        let s = n.sqrt().recip();
        self.values.iter_mut().for_each(|z| *z *= s);
        Ok(self)
    }

    /// `phi(p) = (2 pi)^{-1/2} int psi(x) exp(-ipx) dx` at each point of `p_grid`,
    /// by direct trapezoid sums.
    pub fn momentum_amplitudes(&self, p_grid: &Grid1D) -> Vec<Complex64> {
        let norm = (2.0 * PI).sqrt().recip();
        p_grid
            .points()
            .map(|p| {
                let mut acc = Complex64::new(0.0, 0.0);
                for (i, (x, psi)) in self.grid.points().zip(&self.values).enumerate() {
                    acc += psi * Complex64::from_polar(self.grid.weight(i), -p * x);
                }
                acc * norm
            })
            .collect()
    }

    /// Momentum-space wavefunction on `p_grid`.
    pub fn to_momentum(&self, p_grid: Grid1D) -> Result<WaveFunction> {
        let values = self.momentum_amplitudes(&p_grid);
        Self::new(p_grid, values)
    }
}
