//! Tomogram evolution at equal times for free motion and the harmonic
//! oscillator. Both flows only relabel `(mu, nu)`:
//!
//! * free: `dw/dt - mu dw/dnu = 0`, so `w(X, mu, nu, t) = w0(X, mu, nu + mu t)`;
//! * oscillator: `dw/dt - mu dw/dnu + nu dw/dmu = 0`, so
//!   `w(X, mu, nu, t) = w0(X, mu cos t - nu sin t, mu sin t + nu cos t)`,
//!   which is the canonical action of `SymplecticMatrix::rotation(t)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::symplectic::SymplecticMatrix;
use crate::tomogram::{TimeTomogram, Tomogram};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvolutionKind {
    Free,
    Oscillator,
}

impl EvolutionKind {
    /// Labels at time `t` of the initial tomogram's argument.
    pub fn relabel(self, mu: f64, nu: f64, t: f64) -> (f64, f64) {
        match self {
            EvolutionKind::Free => (mu, nu + mu * t),
            EvolutionKind::Oscillator => {
                let (s, c) = t.sin_cos();
                (mu * c - nu * s, mu * s + nu * c)
            }
        }
    }

    /// The same relabeling as a symplectic matrix.
    pub fn matrix(self, t: f64) -> SymplecticMatrix {
        match self {
            EvolutionKind::Free => SymplecticMatrix::shear(t),
            EvolutionKind::Oscillator => SymplecticMatrix::rotation(t),
        }
    }
}

impl fmt::Display for EvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EvolutionKind::Free => "free",
            EvolutionKind::Oscillator => "oscillator",
        })
    }
}

impl FromStr for EvolutionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "free" => Ok(EvolutionKind::Free),
            "oscillator" => Ok(EvolutionKind::Oscillator),
            other => Err(Error::argument(format!(
                "unsupported dynamics {other:?} (expected \"free\" or \"oscillator\")"
            ))),
        }
    }
}

/// An initial tomogram carried along a flow; evaluable at any time.
#[derive(Debug, Clone)]
pub struct Flow<T> {
    initial: T,
    kind: EvolutionKind,
}

impl<T: Tomogram> Flow<T> {
    pub fn new(initial: T, kind: EvolutionKind) -> Self {
        Self { initial, kind }
    }

    pub fn kind(&self) -> EvolutionKind {
        self.kind
    }

    /// Snapshot at time `t`.
    pub fn at(self, t: f64) -> Result<Evolved<T>> {
        if !t.is_finite() {
            return Err(Error::argument(format!("non-finite evolution time {t}")));
        }
        Ok(Evolved { flow: self, t })
    }
}

impl<T: Tomogram> TimeTomogram for Flow<T> {
    fn eval_at(&self, x: f64, mu: f64, nu: f64, t: f64) -> Result<f64> {
        let (m, n) = self.kind.relabel(mu, nu, t);
        self.initial.eval(x, m, n)
    }
}

/// A flow frozen at one time.
#[derive(Debug, Clone)]
pub struct Evolved<T> {
    flow: Flow<T>,
    t: f64,
}

impl<T: Tomogram> Tomogram for Evolved<T> {
    fn eval(&self, x: f64, mu: f64, nu: f64) -> Result<f64> {
        self.flow.eval_at(x, mu, nu, self.t)
    }
}

pub fn evolve<T: Tomogram>(tomogram: T, kind: EvolutionKind, t: f64) -> Result<Evolved<T>> {
    Flow::new(tomogram, kind).at(t)
}

pub fn evolve_free<T: Tomogram>(tomogram: T, t: f64) -> Result<Evolved<T>> {
    evolve(tomogram, EvolutionKind::Free, t)
}

pub fn evolve_oscillator<T: Tomogram>(tomogram: T, t: f64) -> Result<Evolved<T>> {
    evolve(tomogram, EvolutionKind::Oscillator, t)
}

/// `|dw/dt - mu dw/dnu (+ nu dw/dmu)|` at `(X, mu, nu, t)` by centered
/// differences with step `h`.
pub fn pde_residual(
    w: &impl TimeTomogram,
    kind: EvolutionKind,
    point: (f64, f64, f64, f64),
    h: f64,
) -> Result<f64> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::argument(format!(
            "finite-difference step must be > 0, got {h}"
        )));
    }
    let (x, mu, nu, t) = point;
    let stencil = |e: Result<f64>| {
        e.map_err(|e| e.context(format!("residual stencil around {point:?}, h = {h}")))
    };
    let dt =
        (stencil(w.eval_at(x, mu, nu, t + h))? - stencil(w.eval_at(x, mu, nu, t - h))?) / (2.0 * h);
    let dnu =
        (stencil(w.eval_at(x, mu, nu + h, t))? - stencil(w.eval_at(x, mu, nu - h, t))?) / (2.0 * h);
    let mut r = dt - mu * dnu;
    if kind == EvolutionKind::Oscillator {
        let dmu = (stencil(w.eval_at(x, mu + h, nu, t))? - stencil(w.eval_at(x, mu - h, nu, t))?)
            / (2.0 * h);
        r += nu * dmu;
    }
    Ok(r.abs())
}
