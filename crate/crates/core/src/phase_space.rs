//! Wigner functions on phase space.
//!
//! Convention: `W(q, p) = 2 int psi*(q+u) psi(q-u) exp(2ipu) du`, so that
//! `int W dq dp = 2 pi` for a normalized state and the ground state is
//! `2 exp(-q^2 - p^2)`. With this normalization the Radon pair
//! `w = (1/2pi) int W delta(X - mu q - nu p)` and its inverse hold with
//! `1/(2pi)` prefactors on both sides.

use crate::error::{Error, Result};
use crate::grid::{integrate_2d, Grid1D};

pub trait WignerFunction: Send + Sync {
    fn wigner(&self, q: f64, p: f64) -> Result<f64>;

    /// Whether `(q, p)` lies inside the region where the function is known.
    /// Closed forms are known everywhere.
    fn contains(&self, _q: f64, _p: f64) -> bool {
        true
    }
}

impl<T: WignerFunction + ?Sized> WignerFunction for &T {
    fn wigner(&self, q: f64, p: f64) -> Result<f64> {
        (**self).wigner(q, p)
    }

    fn contains(&self, q: f64, p: f64) -> bool {
        (**self).contains(q, p)
    }
}

/// Wigner function sampled on a `(q, p)` grid.
#[derive(Debug, Clone, PartialEq)]
pub struct WignerField {
    q_grid: Grid1D,
    p_grid: Grid1D,
    /// Row-major, `q` is the slow index.
    values: Vec<f64>,
}

impl WignerField {
    pub fn new(q_grid: Grid1D, p_grid: Grid1D, values: Vec<f64>) -> Result<Self> {
        if values.len() != q_grid.len() * p_grid.len() {
            return Err(Error::argument(format!(
                "Wigner field: {} values for a {}x{} grid",
                values.len(),
                q_grid.len(),
                p_grid.len()
            )));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Data(format!("non-finite Wigner sample {bad}")));
        }
        Ok(Self {
            q_grid,
            p_grid,
            values,
        })
    }

    pub fn sample(w: &impl WignerFunction, q_grid: Grid1D, p_grid: Grid1D) -> Result<Self> {
        let mut values = Vec::with_capacity(q_grid.len() * p_grid.len());
        for q in q_grid.points() {
            for p in p_grid.points() {
                values.push(w.wigner(q, p)?);
            }
        }
        Self::new(q_grid, p_grid, values)
    }

    pub fn q_grid(&self) -> &Grid1D {
        &self.q_grid
    }

    pub fn p_grid(&self) -> &Grid1D {
        &self.p_grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn at(&self, iq: usize, ip: usize) -> f64 {
        self.values[iq * self.p_grid.len() + ip]
    }

    /// `int W dq dp`; `2 pi` for a normalized state.
    pub fn integral(&self) -> Result<f64> {
        integrate_2d(&self.values, &self.q_grid, &self.p_grid)
    }

    pub fn min_value(&self) -> f64 {
        self.values.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

impl WignerFunction for WignerField {
    /// Bilinear interpolation; outside the grid is a domain error.
    fn wigner(&self, q: f64, p: f64) -> Result<f64> {
        let (iq, fq) = self
            .q_grid
            .locate(q)
            .ok_or_else(|| Error::domain(format!("q = {q} outside sampled Wigner field")))?;
        let (ip, fp) = self
            .p_grid
            .locate(p)
            .ok_or_else(|| Error::domain(format!("p = {p} outside sampled Wigner field")))?;
        Ok(
            (1.0 - fq) * ((1.0 - fp) * self.at(iq, ip) + fp * self.at(iq, ip + 1))
                + fq * ((1.0 - fp) * self.at(iq + 1, ip) + fp * self.at(iq + 1, ip + 1)),
        )
    }

    fn contains(&self, q: f64, p: f64) -> bool {
        self.q_grid.contains(q) && self.p_grid.contains(p)
    }
}
