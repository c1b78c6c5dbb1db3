//! Symplectic tomograms `w(X, mu, nu)`: the probability density of the
//! quadrature `X = mu q + nu p`.

use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::grid::Grid1D;

/// Anything that can be evaluated as a tomogram.
///
/// Implementations return `Error::Domain` where the value is undefined rather
/// than guessing; callers propagate those errors.
pub trait Tomogram: Send + Sync {
    fn eval(&self, x: f64, mu: f64, nu: f64) -> Result<f64>;
}

impl<T: Tomogram + ?Sized> Tomogram for &T {
    fn eval(&self, x: f64, mu: f64, nu: f64) -> Result<f64> {
        (**self).eval(x, mu, nu)
    }
}

impl<T: Tomogram + ?Sized> Tomogram for Box<T> {
    fn eval(&self, x: f64, mu: f64, nu: f64) -> Result<f64> {
        (**self).eval(x, mu, nu)
    }
}

impl<T: Tomogram + ?Sized> Tomogram for Arc<T> {
    fn eval(&self, x: f64, mu: f64, nu: f64) -> Result<f64> {
        (**self).eval(x, mu, nu)
    }
}

/// Wraps a closure as a tomogram; handy for synthetic inputs.
pub struct FnTomogram<F>(pub F);

impl<F> Tomogram for FnTomogram<F>
where
    F: Fn(f64, f64, f64) -> Result<f64> + Send + Sync,
{
    fn eval(&self, x: f64, mu: f64, nu: f64) -> Result<f64> {
        (self.0)(x, mu, nu)
    }
}

/// A one-parameter family `w(X, mu, nu, t)`, e.g. an evolved tomogram.
pub trait TimeTomogram: Send + Sync {
    fn eval_at(&self, x: f64, mu: f64, nu: f64, t: f64) -> Result<f64>;
}

pub(crate) fn require_direction(mu: f64, nu: f64) -> Result<()> {
    if mu == 0.0 && nu == 0.0 {
        Err(Error::domain("tomogram is undefined at (mu, nu) = (0, 0)"))
    } else if !(mu.is_finite() && nu.is_finite()) {
        Err(Error::argument(format!("non-finite frame ({mu}, {nu})")))
    } else {
        Ok(())
    }
}

/// Tomogram sampled on an optical grid `(X, theta)` with `theta` in `[0, pi]`.
///
/// Other frames are reached through `w(X, mu, nu) = w(X/r, cos t, sin t)/r`
/// with `r = |(mu, nu)|`, and `w(X, -mu, -nu) = w(-X, mu, nu)`. Values are
/// bilinear in `(X, theta)`; points outside the sampled box are domain errors.
#[derive(Debug, Clone)]
pub struct SampledTomogram {
    x_grid: Grid1D,
    theta_grid: Grid1D,
    /// Row-major, `theta` is the slow index.
    values: Vec<f64>,
}

impl SampledTomogram {
    pub fn new(x_grid: Grid1D, theta_grid: Grid1D, values: Vec<f64>) -> Result<Self> {
        if values.len() != x_grid.len() * theta_grid.len() {
            return Err(Error::argument(format!(
                "sampled tomogram: {} values for a {}x{} grid",
                values.len(),
                theta_grid.len(),
                x_grid.len()
            )));
        }
        if theta_grid.min() < 0.0 || theta_grid.max() > PI + 1e-12 {
            return Err(Error::argument("optical angles must lie in [0, pi]"));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Data(format!("non-finite tomogram sample {bad}")));
        }
        Ok(Self {
            x_grid,
            theta_grid,
            values,
        })
    }

    /// Samples any tomogram on the optical grid.
    pub fn from_tomogram(w: &impl Tomogram, x_grid: Grid1D, theta_grid: Grid1D) -> Result<Self> {
        let mut values = Vec::with_capacity(x_grid.len() * theta_grid.len());
        for theta in theta_grid.points() {
            let (s, c) = theta.sin_cos();
            for x in x_grid.points() {
                values.push(w.eval(x, c, s)?);
            }
        }
        Self::new(x_grid, theta_grid, values)
    }

    pub fn x_grid(&self) -> &Grid1D {
        &self.x_grid
    }

    pub fn theta_grid(&self) -> &Grid1D {
        &self.theta_grid
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    fn at(&self, i_theta: usize, i_x: usize) -> f64 {
        self.values[i_theta * self.x_grid.len() + i_x]
    }
}

impl Tomogram for SampledTomogram {
    fn eval(&self, x: f64, mu: f64, nu: f64) -> Result<f64> {
        require_direction(mu, nu)?;
        let r = mu.hypot(nu);
        let mut theta = nu.atan2(mu);
        let mut xs = x / r;
        if theta < 0.0 {
            theta += PI;
            xs = -xs;
        }
        let (it, ft) = self
            .theta_grid
            .locate(theta)
            .ok_or_else(|| Error::domain(format!("angle {theta} outside sampled range")))?;
        let (ix, fx) = self
            .x_grid
            .locate(xs)
            .ok_or_else(|| Error::domain(format!("X/r = {xs} outside sampled range")))?;
        let v = (1.0 - ft) * ((1.0 - fx) * self.at(it, ix) + fx * self.at(it, ix + 1))
            + ft * ((1.0 - fx) * self.at(it + 1, ix) + fx * self.at(it + 1, ix + 1));
        Ok(v / r)
    }
}
