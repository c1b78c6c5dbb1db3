//! Analytic reference states with closed-form tomograms and Wigner functions.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::phase_space::WignerFunction;
use crate::tomogram::{require_direction, Tomogram};
use crate::wavefunction::WaveFunction;

/// Gaussian phase-space state with mean `(q0, p0)` and covariance
/// `[[var_q, cov_qp], [cov_qp, var_p]]` of the normalized Wigner density.
///
/// Its tomogram is the normal density of `X` with mean `mu q0 + nu p0` and
/// variance `mu^2 var_q + 2 mu nu cov_qp + nu^2 var_p`. Covariances violating
/// `var_q var_p - cov_qp^2 >= 1/4` are accepted; they describe classical
/// phase-space densities that are not quantum states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianState {
    pub q0: f64,
    pub p0: f64,
    pub var_q: f64,
    pub cov_qp: f64,
    pub var_p: f64,
}

impl GaussianState {
    pub fn new(q0: f64, p0: f64, var_q: f64, cov_qp: f64, var_p: f64) -> Result<Self> {
        let det = var_q * var_p - cov_qp * cov_qp;
        if !(var_q > 0.0 && var_p > 0.0 && det > 0.0) {
            return Err(Error::argument(format!(
                "covariance [[{var_q}, {cov_qp}], [{cov_qp}, {var_p}]] is not positive definite"
            )));
        }
        if ![q0, p0].iter().all(|v| v.is_finite()) {
            return Err(Error::argument("non-finite mean"));
        }
        Ok(Self {
            q0,
            p0,
            var_q,
            cov_qp,
            var_p,
        })
    }

    /// Oscillator ground state, `W = 2 exp(-q^2 - p^2)`.
    pub fn ground() -> Self {
        Self {
            q0: 0.0,
            p0: 0.0,
            var_q: 0.5,
            cov_qp: 0.0,
            var_p: 0.5,
        }
    }

    pub fn coherent(q0: f64, p0: f64) -> Self {
        Self {
            q0,
            p0,
            ..Self::ground()
        }
    }

    /// Ground state stretched by `s` in position: `var_q = s^2/2`, `var_p = 1/(2 s^2)`.
    pub fn squeezed(s: f64) -> Result<Self> {
        if !(s > 0.0 && s.is_finite()) {
            return Err(Error::argument(format!(
                "squeeze factor must be positive, got {s}"
            )));
        }
        Self::new(0.0, 0.0, 0.5 * s * s, 0.0, 0.5 / (s * s))
    }

    /// Isotropic Gaussian with `var` in every quadrature; for `var < 1/2`
    /// this beats the uncertainty bound and is not a quantum state.
    pub fn isotropic(var: f64) -> Result<Self> {
        Self::new(0.0, 0.0, var, 0.0, var)
    }

    pub fn mean(&self, mu: f64, nu: f64) -> f64 {
        mu * self.q0 + nu * self.p0
    }

    pub fn variance(&self, mu: f64, nu: f64) -> f64 {
        mu * mu * self.var_q + 2.0 * mu * nu * self.cov_qp + nu * nu * self.var_p
    }

    pub fn is_pure(&self) -> bool {
        ((self.var_q * self.var_p - self.cov_qp * self.cov_qp) - 0.25).abs() < 1e-12
    }

    /// Position wavefunction of an uncorrelated minimum-uncertainty Gaussian.
    pub fn wavefunction(&self, grid: Grid1D) -> Result<WaveFunction> {
        if !self.is_pure() || self.cov_qp != 0.0 {
            return Err(Error::Precondition(
                "only uncorrelated minimum-uncertainty Gaussians have a wavefunction here".into(),
            ));
        }
        let norm = (2.0 * PI * self.var_q).powf(-0.25);
        WaveFunction::from_fn(grid, |x| {
            let d = x - self.q0;
            Complex64::from_polar(norm * (-d * d / (4.0 * self.var_q)).exp(), self.p0 * x)
        })
    }
}

impl Tomogram for GaussianState {
    fn eval(&self, x: f64, mu: f64, nu: f64) -> Result<f64> {
        require_direction(mu, nu)?;
        let var = self.variance(mu, nu);
        let d = x - self.mean(mu, nu);
        Ok((-d * d / (2.0 * var)).exp() / (2.0 * PI * var).sqrt())
    }
}

impl WignerFunction for GaussianState {
    fn wigner(&self, q: f64, p: f64) -> Result<f64> {
        let det = self.var_q * self.var_p - self.cov_qp * self.cov_qp;
        let (dq, dp) = (q - self.q0, p - self.p0);
        let quad =
            (self.var_p * dq * dq - 2.0 * self.cov_qp * dq * dp + self.var_q * dp * dp) / det;
        Ok((-0.5 * quad).exp() / det.sqrt())
    }
}

/// Oscillator number state `|n>`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FockState {
    pub n: u32,
}

impl FockState {
    pub fn new(n: u32) -> Self {
        Self { n }
    }

    /// Normalized Hermite function `psi_n(x)`.
    pub fn hermite_function(&self, x: f64) -> f64 {
        let mut prev = 0.0;
        let mut cur = PI.powf(-0.25) * (-0.5 * x * x).exp();
        for k in 0..self.n {
            let k = k as f64;
            let next = (2.0 / (k + 1.0)).sqrt() * x * cur - (k / (k + 1.0)).sqrt() * prev;
            prev = cur;
            cur = next;
        }
        cur
    }

    pub fn wavefunction(&self, grid: Grid1D) -> Result<WaveFunction> {
        WaveFunction::from_fn(grid, |x| Complex64::new(self.hermite_function(x), 0.0))
    }
}

impl Tomogram for FockState {
    /// Rotation invariance plus homogeneity: `w = psi_n(X/r)^2 / r`.
    fn eval(&self, x: f64, mu: f64, nu: f64) -> Result<f64> {
        require_direction(mu, nu)?;
        let r = mu.hypot(nu);
        let v = self.hermite_function(x / r);
        Ok(v * v / r)
    }
}

impl WignerFunction for FockState {
    /// `2 (-1)^n L_n(2(q^2+p^2)) exp(-(q^2+p^2))`.
    fn wigner(&self, q: f64, p: f64) -> Result<f64> {
        let r2 = q * q + p * p;
        let x = 2.0 * r2;
        let (mut prev, mut cur) = (0.0, 1.0);
        for k in 0..self.n {
            let k = k as f64;
            let next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
            prev = cur;
            cur = next;
        }
        let sign = if self.n.is_multiple_of(2) { 1.0 } else { -1.0 };
        Ok(2.0 * sign * cur * (-r2).exp())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_state_closed_forms() {
        let g = GaussianState::ground();
        assert_eq!(g.wigner(0.0, 0.0).unwrap(), 2.0);
        let w = g.eval(0.0, 1.0, 0.0).unwrap();
        assert!((w - 1.0 / PI.sqrt()).abs() < 1e-15);
        let e = g.eval(1.0, 0.3f64.cos(), 0.3f64.sin()).unwrap();
        assert!((e - (-1.0f64).exp() / PI.sqrt()).abs() < 1e-15);
        assert!(g.is_pure());
        assert!(!GaussianState::isotropic(0.1).unwrap().is_pure());
    }

    #[test]
    fn excited_state_closed_forms() {
        let f = FockState::new(1);
        assert_eq!(f.wigner(0.0, 0.0).unwrap(), -2.0);
        let (q, p) = (0.4, -0.9);
        let r2: f64 = q * q + p * p;
        let expect = 2.0 * (2.0 * r2 - 1.0) * (-r2).exp();
        assert!((f.wigner(q, p).unwrap() - expect).abs() < 1e-15);
        // tomogram 2 X^2/s * gaussian
        let (x, mu, nu) = (0.8, 0.6, 1.1);
        let s: f64 = mu * mu + nu * nu;
        let expect = 2.0 * x * x / s * (-x * x / s).exp() / (PI * s).sqrt();
        assert!((f.eval(x, mu, nu).unwrap() - expect).abs() < 1e-15);
        assert!(FockState::new(0).eval(0.0, 0.0, 0.0).is_err());
    }

    #[test]
    fn bad_covariances_rejected() {
        assert!(GaussianState::new(0.0, 0.0, 1.0, 1.0, 1.0).is_err());
        assert!(GaussianState::new(0.0, 0.0, -1.0, 0.0, 1.0).is_err());
        assert!(GaussianState::squeezed(0.0).is_err());
        assert!(GaussianState::isotropic(0.1)
            .unwrap()
            .wavefunction(Grid1D::symmetric(5.0, 11).unwrap())
            .is_err());
    }
}
