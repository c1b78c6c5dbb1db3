//! Uniform grids and composite trapezoid quadrature.

use crate::error::{Error, Result};

/// Uniform grid of `n` points spanning `[min, max]` inclusive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    min: f64,
    max: f64,
    n: usize,
}

impl Grid1D {
    pub fn new(min: f64, max: f64, n: usize) -> Result<Self> {
        if !min.is_finite() || !max.is_finite() {
            return Err(Error::argument(format!(
                "grid bounds must be finite, got [{min}, {max}]"
            )));
        }
        if n < 2 {
            return Err(Error::argument(format!(
                "grid needs at least 2 points, got {n}"
            )));
        }
        if max <= min {
            return Err(Error::argument(format!(
                "grid requires max > min, got [{min}, {max}]"
            )));
        }
        Ok(Self { min, max, n })
    }

    /// Grid symmetric about the origin.
    pub fn symmetric(half_width: f64, n: usize) -> Result<Self> {
        Self::new(-half_width, half_width, n)
    }

    pub fn min(&self) -> f64 {
        self.min
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn step(&self) -> f64 {
        (self.max - self.min) / (self.n - 1) as f64
    }

    /// `min + i*h`; the last point is pinned to `max` exactly.
    pub fn point(&self, i: usize) -> f64 {
        debug_assert!(i < self.n);
        if i + 1 == self.n {
            self.max
        } else {
            self.min + i as f64 * self.step()
        }
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.n).map(move |i| self.point(i))
    }

    pub fn to_vec(&self) -> Vec<f64> {
        self.points().collect()
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.min && x <= self.max
    }

    /// Trapezoid weight of node `i`.
    pub fn weight(&self, i: usize) -> f64 {
        let h = self.step();
        if i == 0 || i + 1 == self.n {
            0.5 * h
        } else {
            h
        }
    }

    /// Same span with the step halved (`2n - 1` points).
    pub fn refined(&self) -> Self {
        Self {
            n: 2 * self.n - 1,
            ..*self
        }
    }

    /// Cell index `i` and fractional offset `f in [0,1]` with `x = point(i) + f*h`.
    /// `None` outside the grid.
    pub fn locate(&self, x: f64) -> Option<(usize, f64)> {
        if !self.contains(x) {
            return None;
        }
        let s = (x - self.min) / self.step();
        let i = (s.floor() as usize).min(self.n - 2);
        Some((i, (s - i as f64).clamp(0.0, 1.0)))
    }
}

/// Composite trapezoid rule over `grid`.
pub fn integrate_1d(values: &[f64], grid: &Grid1D) -> Result<f64> {
    if values.len() != grid.len() {
        return Err(Error::argument(format!(
            "integrate_1d: {} samples for a grid of {} points",
            values.len(),
            grid.len()
        )));
    }
    let n = values.len();
    let interior: f64 = values[1..n - 1].iter().sum();
    Ok(grid.step() * (interior + 0.5 * (values[0] + values[n - 1])))
}

/// Iterated trapezoid rule; `values` is row-major with `q` as the slow index.
pub fn integrate_2d(values: &[f64], q_grid: &Grid1D, p_grid: &Grid1D) -> Result<f64> {
    let (nq, np) = (q_grid.len(), p_grid.len());
    if values.len() != nq * np {
        return Err(Error::argument(format!(
            "integrate_2d: {} samples for a {nq}x{np} grid",
            values.len()
        )));
    }
    let rows = values
        .chunks_exact(np)
        .map(|row| integrate_1d(row, p_grid))
        .collect::<Result<Vec<_>>>()?;
    integrate_1d(&rows, q_grid)
}
