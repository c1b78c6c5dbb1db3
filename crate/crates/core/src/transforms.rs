//! The Radon pair between Wigner functions and tomograms, density-matrix
//! reconstruction from a tomogram, and the bridges from wavefunctions.
//!
//! Normalization follows [`crate::phase_space`]: `int W dq dp = 2 pi`.
//!
//! * forward: `w(X, mu, nu) = (1/2pi) int W(q, p) delta(X - mu q - nu p) dq dp`
//! * inverse: `W(q, p) = (1/2pi) int w(X, mu, nu) exp(-i(mu q + nu p - X)) dmu dnu dX`
//! * density matrix: `rho(x, x') = (1/2pi) int w(X, mu, x - x') exp(i(X - mu (x + x')/2)) dX dmu`

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::phase_space::{WignerField, WignerFunction};
use crate::tomogram::{require_direction, Tomogram};
use crate::wavefunction::{WaveFunction, NORM_TOLERANCE};

/// Relative size of the imaginary residue tolerated in reconstructed real
/// quantities before the quadrature is declared inconsistent.
pub const IMAG_RESIDUE_TOL: f64 = 1e-6;

// ---------------------------------------------------------------------------
// Wavefunction -> Wigner

/// Wigner function of a sampled pure state, evaluated on demand.
///
/// `W(q, p) = 2 int psi*(q+u) psi(q-u) exp(2ipu) du`. When `q` sits on the
/// position half-lattice `x_0 + m h/2`, both `q +- u` land on samples and
/// the `u` sum is a plain trapezoid rule (no interpolation). The same holds
/// for `p` on the momentum half-lattice using
/// `W = 2 int phi*(p+v) phi(p-v) exp(-2iqv) dv`. Anywhere else the value is
/// linear in `q` between neighbouring position half-lattice nodes.
#[derive(Debug, Clone)]
pub struct WavefunctionWigner {
    psi: WaveFunction,
    phi: WaveFunction,
}

impl WavefunctionWigner {
    pub fn new(psi: &WaveFunction) -> Result<Self> {
        psi.require_normalized(NORM_TOLERANCE)?;
        let phi = psi.to_momentum(momentum_grid_for(psi.grid())?)?;
        Ok(Self {
            psi: psi.clone(),
            phi,
        })
    }

    pub fn position(&self) -> &WaveFunction {
        &self.psi
    }

    pub fn momentum(&self) -> &WaveFunction {
        &self.phi
    }

    /// Line grids on which [`radon_forward`] never interpolates.
    pub fn line_grids(&self) -> LineGrids {
        LineGrids {
            q: half_lattice(self.psi.grid()),
            p: half_lattice(self.phi.grid()),
        }
    }

    fn lattice_index(grid: &Grid1D, x: f64) -> Option<usize> {
        let half = 0.5 * grid.step();
        let s = (x - grid.min()) / half;
        let m = s.round();
        if m >= 0.0 && m <= 2.0 * (grid.len() - 1) as f64 && (s - m).abs() < 1e-9 {
            Some(m as usize)
        } else {
            None
        }
    }

    /// `2 sum_{a+b=m} conj(f_a) f_b exp(sign * i k (a-b) h) h` over the lattice.
    fn lattice_sum(f: &WaveFunction, m: usize, k: f64, sign: f64) -> f64 {
        let n = f.grid().len();
        let h = f.grid().step();
        let vals = f.values();
        let a_lo = m.saturating_sub(n - 1);
        let a_hi = m.min(n - 1);
        let mut acc = Complex64::new(0.0, 0.0);
        for a in a_lo..=a_hi {
            let b = m - a;
            // u = (a - b) h / 2, and the kernel is exp(2iku) = exp(ik(a-b)h)
            let phase = sign * k * (a as f64 - b as f64) * h;
            acc += vals[a].conj() * vals[b] * Complex64::from_polar(1.0, phase);
        }
        2.0 * h * acc.re
    }

    fn at_position_node(&self, m: usize, p: f64) -> f64 {
        Self::lattice_sum(&self.psi, m, p, 1.0)
    }

    fn at_momentum_node(&self, m: usize, q: f64) -> f64 {
        Self::lattice_sum(&self.phi, m, q, -1.0)
    }
}

impl WignerFunction for WavefunctionWigner {
    fn wigner(&self, q: f64, p: f64) -> Result<f64> {
        let xg = self.psi.grid();
        if let Some(m) = Self::lattice_index(xg, q) {
            return Ok(self.at_position_node(m, p));
        }
        if let Some(m) = Self::lattice_index(self.phi.grid(), p) {
            return Ok(self.at_momentum_node(m, q));
        }
        let lattice = half_lattice(xg);
        let (i, f) = lattice
            .locate(q)
            .ok_or_else(|| Error::domain(format!("q = {q} outside the wavefunction grid")))?;
        Ok((1.0 - f) * self.at_position_node(i, p) + f * self.at_position_node(i + 1, p))
    }

    fn contains(&self, q: f64, p: f64) -> bool {
        self.psi.grid().contains(q) && self.phi.grid().contains(p)
    }
}

fn half_lattice(g: &Grid1D) -> Grid1D {
    g.refined()
}

/// Momentum grid mirroring the position grid's extent and count.
fn momentum_grid_for(g: &Grid1D) -> Result<Grid1D> {
    let half = g.min().abs().max(g.max().abs());
    Grid1D::symmetric(half, g.len())
}

/// Samples the Wigner function of `psi` on a `(q, p)` grid.
pub fn wigner_from_wavefunction(
    psi: &WaveFunction,
    q_grid: Grid1D,
    p_grid: Grid1D,
) -> Result<WignerField> {
    let w = WavefunctionWigner::new(psi)?;
    let rows: Vec<Vec<f64>> = q_grid
        .to_vec()
        .into_par_iter()
        .map(|q| {
            p_grid
                .points()
                .map(|p| w.wigner(q, p))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    WignerField::new(q_grid, p_grid, rows.concat())
}

// ---------------------------------------------------------------------------
// Forward Radon transform

/// Parameter grids for the line integral: `q` is used when `|nu| >= |mu|`,
/// `p` otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LineGrids {
    pub q: Grid1D,
    pub p: Grid1D,
}

impl LineGrids {
    pub fn symmetric(half_width: f64, n: usize) -> Result<Self> {
        let g = Grid1D::symmetric(half_width, n)?;
        Ok(Self { q: g, p: g })
    }

    /// The field's own axes.
    pub fn for_field(field: &WignerField) -> Self {
        Self {
            q: *field.q_grid(),
            p: *field.p_grid(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadonSample {
    pub value: f64,
    /// Some line points fell outside the region where the Wigner function is
    /// known and contributed nothing.
    pub truncated: bool,
}

/// `w(X, mu, nu)` as the line integral of `W` along `mu q + nu p = X`:
/// `(1/(2 pi |nu|)) int W(q, (X - mu q)/nu) dq` for `|nu| >= |mu|`, and
/// `(1/(2 pi |mu|)) int W((X - nu p)/mu, p) dp` otherwise.
pub fn radon_forward(
    w: &impl WignerFunction,
    x: f64,
    mu: f64,
    nu: f64,
    lines: &LineGrids,
) -> Result<RadonSample> {
    require_direction(mu, nu)?;
    let by_q = nu.abs() >= mu.abs();
    let (grid, slope) = if by_q { (&lines.q, nu) } else { (&lines.p, mu) };
    let other = if by_q { mu } else { nu };
    let mut acc = 0.0;
    let mut truncated = false;
    for (i, s) in grid.points().enumerate() {
        let t = (x - other * s) / slope;
        let (q, p) = if by_q { (s, t) } else { (t, s) };
        if !w.contains(q, p) {
            truncated = true;
            continue;
        }
        acc += grid.weight(i) * w.wigner(q, p)?;
    }
    Ok(RadonSample {
        value: acc / (2.0 * PI * slope.abs()),
        truncated,
    })
}

// ---------------------------------------------------------------------------
// Wavefunction -> tomogram

/// Tomogram of a pure state straight from its wavefunction.
///
/// For `|nu| >= |mu|`:
/// `w = (1/(2 pi |nu|)) |int psi(y) exp(i mu y^2/(2 nu) - i X y/nu) dy|^2`.
/// For `|mu| > |nu|` the same kernel is applied to the momentum amplitude,
/// which keeps the chirp resolvable on the grid:
/// `w = (1/(2 pi |mu|)) |int phi(y) exp(-i nu y^2/(2 mu) + i X y/mu) dy|^2`.
#[derive(Debug, Clone)]
pub struct WavefunctionTomogram {
    psi: WaveFunction,
    phi: WaveFunction,
}

impl WavefunctionTomogram {
    pub fn new(psi: &WaveFunction) -> Result<Self> {
        psi.require_normalized(NORM_TOLERANCE)?;
        let phi = psi.to_momentum(momentum_grid_for(psi.grid())?)?;
        Ok(Self {
            psi: psi.clone(),
            phi,
        })
    }

    fn chirp(f: &WaveFunction, quad: f64, lin: f64) -> f64 {
        let g = f.grid();
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, (y, v)) in g.points().zip(f.values()).enumerate() {
            acc += v * Complex64::from_polar(g.weight(i), quad * y * y + lin * y);
        }
        acc.norm_sqr()
    }
}

impl Tomogram for WavefunctionTomogram {
    fn eval(&self, x: f64, mu: f64, nu: f64) -> Result<f64> {
        require_direction(mu, nu)?;
        if nu.abs() >= mu.abs() {
            Ok(Self::chirp(&self.psi, 0.5 * mu / nu, -x / nu) / (2.0 * PI * nu.abs()))
        } else {
            Ok(Self::chirp(&self.phi, -0.5 * nu / mu, x / mu) / (2.0 * PI * mu.abs()))
        }
    }
}

pub fn tomogram_from_wavefunction(psi: &WaveFunction, x: f64, mu: f64, nu: f64) -> Result<f64> {
    WavefunctionTomogram::new(psi)?.eval(x, mu, nu)
}

// ---------------------------------------------------------------------------
// Inverse Radon transform

/// Truncation and damping of the inverse transform.
///
/// The `(mu, nu)` integral runs over `[-cutoff, cutoff]^2` with damping
/// `exp(-regularization (mu^2 + nu^2))`. The `X` integral at frame `(mu, nu)`
/// runs over `|X| <= x_half_width * |(mu, nu)|`: the quadrature `X = mu q + nu p`
/// of a state confined to the phase-space disc of radius `x_half_width`
/// never leaves that window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InverseRadonConfig {
    pub cutoff: f64,
    pub regularization: f64,
    pub x_half_width: f64,
    pub x_count: usize,
    pub mu_count: usize,
    pub nu_count: usize,
}

impl Default for InverseRadonConfig {
    fn default() -> Self {
        Self {
            cutoff: 8.0,
            regularization: 1e-4,
            x_half_width: 10.0,
            x_count: 256,
            mu_count: 256,
            nu_count: 256,
        }
    }
}

impl InverseRadonConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.regularization > 0.0 && self.regularization.is_finite()) {
            return Err(Error::argument(format!(
                "regularization must be > 0, got {}",
                self.regularization
            )));
        }
        if !(self.cutoff > 0.0 && self.cutoff.is_finite()) {
            return Err(Error::argument(format!(
                "cutoff must be > 0, got {}",
                self.cutoff
            )));
        }
        if !(self.x_half_width > 0.0 && self.x_half_width.is_finite()) {
            return Err(Error::argument(format!(
                "X half-width must be > 0, got {}",
                self.x_half_width
            )));
        }
        for (name, n) in [
            ("X", self.x_count),
            ("mu", self.mu_count),
            ("nu", self.nu_count),
        ] {
            if n < 16 {
                return Err(Error::argument(format!(
                    "{name} quadrature needs at least 16 points, got {n}"
                )));
            }
        }
        Ok(())
    }

    /// Every quadrature step halved over the same ranges.
    pub fn refined(&self) -> Self {
        Self {
            x_count: 2 * self.x_count - 1,
            mu_count: 2 * self.mu_count - 1,
            nu_count: 2 * self.nu_count - 1,
            ..*self
        }
    }

    fn y_grid(&self) -> Grid1D {
        Grid1D::symmetric(self.x_half_width, self.x_count).expect("validated")
    }

    fn mu_grid(&self) -> Grid1D {
        Grid1D::symmetric(self.cutoff, self.mu_count).expect("validated")
    }

    fn nu_grid(&self) -> Grid1D {
        Grid1D::symmetric(self.cutoff, self.nu_count).expect("validated")
    }
}

/// `int w(X, mu, nu) exp(iX) dX` over the frame-scaled window, written as
/// `r int w(rY, mu, nu) exp(irY) dY`. At the origin this is the `r -> 0`
/// limit `int w(Y, 1, 0) dY` (homogeneity).
fn characteristic(w: &impl Tomogram, mu: f64, nu: f64, y_grid: &Grid1D) -> Result<Complex64> {
    let r = mu.hypot(nu);
    let mut acc = Complex64::new(0.0, 0.0);
    if r == 0.0 {
        for (i, y) in y_grid.points().enumerate() {
            acc += y_grid.weight(i) * w.eval(y, 1.0, 0.0)?;
        }
        return Ok(acc);
    }
    for (i, y) in y_grid.points().enumerate() {
        let x = r * y;
        acc += Complex64::from_polar(y_grid.weight(i) * w.eval(x, mu, nu)?, x);
    }
    Ok(acc * r)
}

/// Regularized inverse Radon transform with its `(mu, nu)` table precomputed,
/// so that many phase-space points cost one table build.
#[derive(Debug, Clone)]
pub struct InverseRadon {
    mu: Vec<f64>,
    nu: Vec<f64>,
    /// `weights * damping * characteristic / (2 pi)`, row-major in `mu`.
    table: Vec<Complex64>,
}

impl InverseRadon {
    pub fn new(w: &impl Tomogram, cfg: &InverseRadonConfig) -> Result<Self> {
        cfg.validate()?;
        let (mg, ng, yg) = (cfg.mu_grid(), cfg.nu_grid(), cfg.y_grid());
        let mu = mg.to_vec();
        let nu = ng.to_vec();
        let rows: Vec<Vec<Complex64>> = (0..mu.len())
            .into_par_iter()
            .map(|i| {
                let m = mu[i];
                nu.iter()
                    .enumerate()
                    .map(|(j, &n)| {
                        let damp = (-cfg.regularization * (m * m + n * n)).exp();
                        let c = characteristic(w, m, n, &yg)?;
                        Ok(c * (mg.weight(i) * ng.weight(j) * damp / (2.0 * PI)))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            mu,
            nu,
            table: rows.concat(),
        })
    }

    fn finish(z: Complex64, q: f64, p: f64) -> Result<f64> {
        if z.im.abs() > IMAG_RESIDUE_TOL * (1.0 + z.re.abs()) {
            return Err(Error::Numerical(format!(
                "inverse Radon at ({q}, {p}) left imaginary residue {} (real part {})",
                z.im, z.re
            )));
        }
        Ok(z.re)
    }

    /// Reconstructed `W(q, p)`.
    pub fn eval(&self, q: f64, p: f64) -> Result<f64> {
        let n = self.nu.len();
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, &m) in self.mu.iter().enumerate() {
            let row = &self.table[i * n..(i + 1) * n];
            let mut inner = Complex64::new(0.0, 0.0);
            for (c, &v) in row.iter().zip(&self.nu) {
                inner += c * Complex64::from_polar(1.0, -v * p);
            }
            acc += inner * Complex64::from_polar(1.0, -m * q);
        }
        Self::finish(acc, q, p)
    }

    /// Reconstructed `W` on a grid, using the separable kernel.
    pub fn eval_grid(&self, q_grid: Grid1D, p_grid: Grid1D) -> Result<WignerField> {
        let n = self.nu.len();
        let qs = q_grid.to_vec();
        let ps = p_grid.to_vec();
        let q_phase: Vec<Vec<Complex64>> = qs
            .iter()
            .map(|&q| {
                self.mu
                    .iter()
                    .map(|&m| Complex64::from_polar(1.0, -m * q))
                    .collect()
            })
            .collect();
        // columns[jp][i] = sum_j table[i][j] exp(-i nu_j p)
        let columns: Vec<Vec<Complex64>> = ps
            .par_iter()
            .map(|&p| {
                let phase: Vec<Complex64> = self
                    .nu
                    .iter()
                    .map(|&v| Complex64::from_polar(1.0, -v * p))
                    .collect();
                (0..self.mu.len())
                    .map(|i| {
                        let row = &self.table[i * n..(i + 1) * n];
                        row.iter().zip(&phase).map(|(a, b)| a * b).sum()
                    })
                    .collect()
            })
            .collect();
        let mut values = Vec::with_capacity(qs.len() * ps.len());
        for (iq, &q) in qs.iter().enumerate() {
            for (jp, &p) in ps.iter().enumerate() {
                let z: Complex64 = q_phase[iq]
                    .iter()
                    .zip(&columns[jp])
                    .map(|(a, b)| a * b)
                    .sum();
                values.push(Self::finish(z, q, p)?);
            }
        }
        WignerField::new(q_grid, p_grid, values)
    }
}

/// Regularized `W(q, p)` from a tomogram.
pub fn inverse_radon(w: &impl Tomogram, q: f64, p: f64, cfg: &InverseRadonConfig) -> Result<f64> {
    InverseRadon::new(w, cfg)?.eval(q, p)
}

// ---------------------------------------------------------------------------
// Density matrix

/// `rho(x, x')` on `x_grid` from a tomogram.
///
/// The `nu` integral collapses because `<x| exp(-i(mu q + nu p)) |x'>` is
/// `exp(-i mu (x + x')/2) delta(x - x' - nu)`, leaving
/// `rho(x, x') = (1/2pi) int dmu exp(-i mu (x + x')/2) int dX w(X, mu, x - x') exp(iX)`.
/// The `mu` quadrature and damping follow `cfg`.
pub fn density_matrix_from_tomogram(
    w: &impl Tomogram,
    x_grid: Grid1D,
    cfg: &InverseRadonConfig,
) -> Result<DensityMatrix> {
    cfg.validate()?;
    let n = x_grid.len();
    let h = x_grid.step();
    let xs = x_grid.to_vec();
    let (mg, yg) = (cfg.mu_grid(), cfg.y_grid());
    let mu = mg.to_vec();
    // profiles[k][m] for separation nu = (k - (n-1)) h
    let profiles: Vec<Vec<Complex64>> = (0..2 * n - 1)
        .into_par_iter()
        .map(|k| {
            let offset = k as isize - (n as isize - 1);
            let nu = offset as f64 * h;
            mu.iter()
                .enumerate()
                .map(|(m, &mv)| {
                    let damp = (-cfg.regularization * (mv * mv + nu * nu)).exp();
                    let c = characteristic(w, mv, nu, &yg)?;
                    Ok(c * (mg.weight(m) * damp / (2.0 * PI)))
                })
                .collect::<Result<Vec<_>>>()
                .map_err(|e: Error| {
                    let (i, j) = if offset >= 0 {
                        (offset as usize, 0)
                    } else {
                        (0, (-offset) as usize)
                    };
                    e.context(format!(
                        "density matrix element (x, x') = ({}, {})",
                        xs[i], xs[j]
                    ))
                })
        })
        .collect::<Result<_>>()?;
    let rows: Vec<Vec<Complex64>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    let profile = &profiles[i + n - 1 - j];
                    let centre = 0.5 * (xs[i] + xs[j]);
                    profile
                        .iter()
                        .zip(&mu)
                        .map(|(c, &m)| c * Complex64::from_polar(1.0, -m * centre))
                        .sum()
                })
                .collect()
        })
        .collect();
    let matrix = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    DensityMatrix::new(x_grid, matrix)
}
