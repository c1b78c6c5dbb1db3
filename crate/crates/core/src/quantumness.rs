//! Certification of tomograms: normalization, homogeneity, the entropic
//! uncertainty relation, and the quantum / classical / neither trichotomy.
//!
//! A tomogram is *quantum* when the operator it reconstructs is positive
//! semidefinite and *classical* when its phase-space function is nonnegative.

use std::f64::consts::{E, PI};
use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{integrate_1d, Grid1D};
use crate::tomogram::Tomogram;
use crate::transforms::{density_matrix_from_tomogram, InverseRadon, InverseRadonConfig};

/// Values below this are treated as zero in `-w ln w`.
pub const ENTROPY_CUTOFF: f64 = 1e-300;
/// Negative tomogram values beyond this are data errors, not round-off.
pub const NEGATIVITY_TOLERANCE: f64 = 1e-12;
/// Slack on the entropic bound.
pub const ENTROPY_SLACK: f64 = 1e-6;

/// `ln(pi e)`, the lower bound on the entropy sum of conjugate frames.
pub fn entropy_bound() -> f64 {
    (PI * E).ln()
}

/// `|int w(X, mu, nu) dX - 1|` over `x_range`.
pub fn check_normalization(w: &impl Tomogram, mu: f64, nu: f64, x_range: &Grid1D) -> Result<f64> {
    let vals = x_range
        .points()
        .map(|x| w.eval(x, mu, nu))
        .collect::<Result<Vec<_>>>()?;
    Ok((integrate_1d(&vals, x_range)? - 1.0).abs())
}

/// Largest `|lambda w(lambda X, lambda mu, lambda nu) - w(X, mu, nu)|` over `samples`.
pub fn check_homogeneity(
    w: &impl Tomogram,
    samples: &[(f64, f64, f64)],
    lambda: f64,
) -> Result<f64> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::argument(format!(
            "homogeneity scale must be > 0, got {lambda}"
        )));
    }
    samples.iter().try_fold(0.0f64, |worst, &(x, mu, nu)| {
        let scaled = w.eval(lambda * x, lambda * mu, lambda * nu)?;
        Ok(worst.max((lambda * scaled - w.eval(x, mu, nu)?).abs()))
    })
}

fn entropy_in_frame(w: &impl Tomogram, mu: f64, nu: f64, x_range: &Grid1D) -> Result<f64> {
    let vals = x_range
        .points()
        .map(|x| {
            let v = w.eval(x, mu, nu)?;
            if v < -NEGATIVITY_TOLERANCE {
                Err(Error::Data(format!(
                    "negative tomogram value {v} at (X, mu, nu) = ({x}, {mu}, {nu})"
                )))
            } else if v < ENTROPY_CUTOFF {
                Ok(0.0)
            } else {
                Ok(-v * v.ln())
            }
        })
        .collect::<Result<Vec<_>>>()?;
    integrate_1d(&vals, x_range)
}

/// Differential entropy `-int w ln w dX` in the optical frame `(cos t, sin t)`.
pub fn tomographic_entropy(w: &impl Tomogram, theta: f64, x_range: &Grid1D) -> Result<f64> {
    let (s, c) = theta.sin_cos();
    entropy_in_frame(w, c, s, x_range)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropicCheck {
    pub sum: f64,
    pub bound: f64,
    pub satisfied: bool,
}

/// Entropies in the conjugate frames `(cos t, sin t)` and `(sin t, -cos t)`,
/// summed and compared with `ln(pi e)`.
pub fn entropic_quantumness(
    w: &impl Tomogram,
    theta: f64,
    x_range: &Grid1D,
) -> Result<EntropicCheck> {
    let (s, c) = theta.sin_cos();
    let sum = entropy_in_frame(w, c, s, x_range)? + entropy_in_frame(w, s, -c, x_range)?;
    let bound = entropy_bound();
    Ok(EntropicCheck {
        sum,
        bound,
        satisfied: sum >= bound - ENTROPY_SLACK,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Both,
    Quantum,
    Classical,
    Neither,
}

impl Verdict {
    pub fn from_tests(quantum: bool, classical: bool) -> Self {
        match (quantum, classical) {
            (true, true) => Verdict::Both,
            (true, false) => Verdict::Quantum,
            (false, true) => Verdict::Classical,
            (false, false) => Verdict::Neither,
        }
    }

    pub fn is_quantum(self) -> bool {
        matches!(self, Verdict::Both | Verdict::Quantum)
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Verdict::Both | Verdict::Classical)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Both => "both",
            Verdict::Quantum => "quantum",
            Verdict::Classical => "classical",
            Verdict::Neither => "neither",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Everything [`classify_state`] needs besides the tomogram.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassifyConfig {
    pub inverse: InverseRadonConfig,
    /// Position grid for the density matrix.
    pub rho_grid: Grid1D,
    /// Phase-space points (both axes) where the Wigner function is scanned.
    pub scan_grid: Grid1D,
    /// Relative to the largest eigenvalue magnitude.
    pub rho_tolerance: f64,
    /// Absolute; absorbs the ringing of the regularized inverse.
    pub wigner_tolerance: f64,
    pub theta: f64,
    pub entropy_grid: Grid1D,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        Self {
            inverse: InverseRadonConfig::default(),
            rho_grid: Grid1D::symmetric(5.0, 64).expect("valid"),
            scan_grid: Grid1D::symmetric(4.0, 41).expect("valid"),
            rho_tolerance: 1e-6,
            wigner_tolerance: 1e-4,
            theta: 0.0,
            entropy_grid: Grid1D::symmetric(10.0, 2001).expect("valid"),
        }
    }
}

impl ClassifyConfig {
    /// Every quadrature and sampling step halved.
    pub fn refined(&self) -> Self {
        Self {
            inverse: self.inverse.refined(),
            rho_grid: self.rho_grid.refined(),
            scan_grid: self.scan_grid.refined(),
            entropy_grid: self.entropy_grid.refined(),
            ..*self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuantumnessReport {
    /// At the optical frame `theta`.
    pub normalization_error: f64,
    /// `lambda = 2` over a fixed set of sample points.
    pub homogeneity_error: f64,
    pub entropy_sum: f64,
    pub entropy_bound: f64,
    pub entropy_satisfied: bool,
    pub rho_min_eigenvalue: f64,
    /// Scaled tolerance actually applied to `rho_min_eigenvalue`.
    pub rho_tolerance: f64,
    pub wigner_min_value: f64,
    pub verdict: Verdict,
}

const HOMOGENEITY_SAMPLES: [(f64, f64, f64); 6] = [
    (0.0, 1.0, 0.0),
    (0.5, 0.0, 1.0),
    (-0.7, 0.6, 0.8),
    (1.3, -0.4, 1.1),
    (0.2, 1.5, -0.5),
    (-1.9, 0.9, 0.3),
];

/// Runs every check on `w` and classifies it.
pub fn classify_state(w: &impl Tomogram, cfg: &ClassifyConfig) -> Result<QuantumnessReport> {
    let (s, c) = cfg.theta.sin_cos();
    let normalization_error =
        check_normalization(w, c, s, &cfg.entropy_grid).map_err(|e| e.context("normalization"))?;
    let homogeneity_error =
        check_homogeneity(w, &HOMOGENEITY_SAMPLES, 2.0).map_err(|e| e.context("homogeneity"))?;
    let entropic =
        entropic_quantumness(w, cfg.theta, &cfg.entropy_grid).map_err(|e| e.context("entropy"))?;

    let (rho, wigner) = rayon::join(
        || {
            density_matrix_from_tomogram(w, cfg.rho_grid, &cfg.inverse)
                .map_err(|e| e.context("density matrix"))
        },
        || {
            InverseRadon::new(w, &cfg.inverse)
                .and_then(|inv| inv.eval_grid(cfg.scan_grid, cfg.scan_grid))
                .map_err(|e| e.context("Wigner scan"))
        },
    );
    let eig = rho?.eigenvalues();
    let scale = eig
        .iter()
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(f64::MIN_POSITIVE);
    let rho_min_eigenvalue = eig.first().copied().unwrap_or(0.0);
    let rho_tolerance = cfg.rho_tolerance * scale;
    let wigner_min_value = wigner?.min_value();

    let verdict = Verdict::from_tests(
        rho_min_eigenvalue >= -rho_tolerance,
        wigner_min_value >= -cfg.wigner_tolerance,
    );
    Ok(QuantumnessReport {
        normalization_error,
        homogeneity_error,
        entropy_sum: entropic.sum,
        entropy_bound: entropic.bound,
        entropy_satisfied: entropic.satisfied,
        rho_min_eigenvalue,
        rho_tolerance,
        wigner_min_value,
        verdict,
    })
}
