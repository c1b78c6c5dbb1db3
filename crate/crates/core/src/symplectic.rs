//! `Sp(2, R)` frames and their action on tomogram labels.
//!
//! A matrix `[[a, b], [c, d]]` maps the observables `q -> a q + b p`,
//! `p -> c q + d p`. Substituting into `delta(X - mu q - nu p)` shows the
//! tomogram transforms by relabeling with the row vector `(mu, nu)` times the
//! matrix; `X` is untouched.

use crate::error::{Error, Result};
use crate::tomogram::Tomogram;

/// Tolerance on `|det - 1|` for a matrix to count as symplectic.
pub const DET_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymplecticMatrix {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl SymplecticMatrix {
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        let m = Self { a, b, c, d };
        m.check(DET_TOLERANCE)?;
        Ok(m)
    }

    fn check(&self, tol: f64) -> Result<()> {
        if ![self.a, self.b, self.c, self.d]
            .iter()
            .all(|v| v.is_finite())
        {
            return Err(Error::argument(format!(
                "non-finite matrix entries {:?}",
                self.rows()
            )));
        }
        let det = self.det();
        if (det - 1.0).abs() > tol {
            return Err(Error::argument(format!(
                "determinant {det} is not 1 (|det - 1| > {tol:e})"
            )));
        }
        Ok(())
    }

    pub fn identity() -> Self {
        Self {
            a: 1.0,
            b: 0.0,
            c: 0.0,
            d: 1.0,
        }
    }

    /// `[[cos t, sin t], [-sin t, cos t]]`.
    pub fn rotation(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self {
            a: c,
            b: s,
            c: -s,
            d: c,
        }
    }

    /// Free-motion shear `[[1, t], [0, 1]]`: `(mu, nu) -> (mu, nu + mu t)`.
    pub fn shear(t: f64) -> Self {
        Self {
            a: 1.0,
            b: t,
            c: 0.0,
            d: 1.0,
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn d(&self) -> f64 {
        self.d
    }

    pub fn rows(&self) -> [[f64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn det(&self) -> f64 {
        self.a * self.d - self.b * self.c
    }

    /// Largest entrywise difference.
    pub fn distance(&self, other: &Self) -> f64 {
        [
            self.a - other.a,
            self.b - other.b,
            self.c - other.c,
            self.d - other.d,
        ]
        .iter()
        .fold(0.0, |m, v| m.max(v.abs()))
    }

    /// The row vector `(mu, nu)` times this matrix.
    pub fn act(&self, mu: f64, nu: f64) -> (f64, f64) {
        (self.a * mu + self.c * nu, self.b * mu + self.d * nu)
    }
}

/// Reference frame with scaling `s` and angle `theta`: first row
/// `(s cos t, sin t / s)`, completed as rotation after scaling.
pub fn frame_matrix(s: f64, theta: f64) -> Result<SymplecticMatrix> {
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::domain(format!("frame scaling must be > 0, got {s}")));
    }
    if !theta.is_finite() {
        return Err(Error::argument(format!("non-finite frame angle {theta}")));
    }
    let (sn, cs) = theta.sin_cos();
    Ok(SymplecticMatrix {
        a: s * cs,
        b: sn / s,
        c: -s * sn,
        d: cs / s,
    })
}

/// Matrix product `lhs * rhs`.
pub fn compose(lhs: &SymplecticMatrix, rhs: &SymplecticMatrix) -> Result<SymplecticMatrix> {
    lhs.check(DET_TOLERANCE)
        .map_err(|e| e.context("compose lhs"))?;
    rhs.check(DET_TOLERANCE)
        .map_err(|e| e.context("compose rhs"))?;
    let m = SymplecticMatrix {
        a: lhs.a * rhs.a + lhs.b * rhs.c,
        b: lhs.a * rhs.b + lhs.b * rhs.d,
        c: lhs.c * rhs.a + lhs.d * rhs.c,
        d: lhs.c * rhs.b + lhs.d * rhs.d,
    };
    m.check(1e-10)?;
    Ok(m)
}

pub fn inverse(m: &SymplecticMatrix) -> Result<SymplecticMatrix> {
    m.check(DET_TOLERANCE)?;
    Ok(SymplecticMatrix {
        a: m.d,
        b: -m.b,
        c: -m.c,
        d: m.a,
    })
}

/// Tomogram in a transformed frame: `w'(X, mu, nu) = w(X, a mu + c nu, b mu + d nu)`.
///
/// Actions compose right to left:
/// `apply_canonical(apply_canonical(w, m1), m2) == apply_canonical(w, compose(m2, m1))`.
#[derive(Debug, Clone)]
pub struct Canonical<T> {
    base: T,
    matrix: SymplecticMatrix,
}

impl<T> Canonical<T> {
    pub fn matrix(&self) -> &SymplecticMatrix {
        &self.matrix
    }
}

impl<T: Tomogram> Tomogram for Canonical<T> {
    fn eval(&self, x: f64, mu: f64, nu: f64) -> Result<f64> {
        let (m1, m2) = self.matrix.act(mu, nu);
        self.base.eval(x, m1, m2)
    }
}

pub fn apply_canonical<T: Tomogram>(tomogram: T, m: SymplecticMatrix) -> Canonical<T> {
    Canonical {
        base: tomogram,
        matrix: m,
    }
}
