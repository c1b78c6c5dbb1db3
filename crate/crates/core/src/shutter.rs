//! Moshinsky shutter: a plane wave `exp(ikx)` filling `x < 0` behind an
//! absorbing shutter that opens at `t = 0`. Closed forms for the density,
//! the Wigner function and the symplectic tomogram.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::phase_space::WignerFunction;
use crate::specfun::fresnel;
use crate::tomogram::{TimeTomogram, Tomogram};

/// Below this value of `|k - p| |pt - q|` the Wigner function uses its
/// Taylor expansion in place of `sin(z)/z`.
const SINC_SWITCH: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShutterParams {
    pub k: f64,
    pub t: f64,
}

impl ShutterParams {
    pub fn new(k: f64, t: f64) -> Result<Self> {
        if !(k.is_finite() && t.is_finite()) {
            return Err(Error::argument(format!(
                "shutter parameters must be finite, got k={k}, t={t}"
            )));
        }
        Ok(Self { k, t })
    }

    fn require_positive_time(&self) -> Result<()> {
        if self.t > 0.0 {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "shutter solutions need t > 0, got t = {}",
                self.t
            )))
        }
    }
}

/// `|M(x, k, t)|^2 = 1/2 {[1/2 - C(w)]^2 + [1/2 - S(w)]^2}`, `w = (x - kt)/sqrt(2t)`.
pub fn density(x: f64, params: ShutterParams) -> Result<f64> {
    params.require_positive_time()?;
    let w = (x - params.k * params.t) / (2.0 * params.t).sqrt();
    let f = fresnel(w)?;
    let (a, b) = (0.5 - f.c, 0.5 - f.s);
    Ok(0.5 * (a * a + b * b))
}

/// `W = sin{2(pt - q)(k - p)} / (pi (k - p)) * theta(pt - q)`, normalized so
/// that `int W dp` is the position density. `theta(0) = 1/2`.
pub fn wigner(q: f64, p: f64, params: ShutterParams) -> Result<f64> {
    params.require_positive_time()?;
    let a = p * params.t - q;
    if a < 0.0 {
        return Ok(0.0);
    }
    let d = params.k - p;
    let z = 2.0 * a * d;
    let value = if (a * d).abs() < SINC_SWITCH {
        // sin(z)/(pi d) = (2a/pi) sin(z)/z
        2.0 * a / PI * (1.0 - z * z / 6.0 + z.powi(4) / 120.0)
    } else {
        z.sin() / (PI * d)
    };
    Ok(if a == 0.0 { 0.5 * value } else { value })
}

/// `w = (1/(2|mu|)) {[1/2 + C(rho)]^2 + [1/2 + S(rho)]^2}` with
/// `rho = sgn(mu) (k(mu t + nu) - X) / sqrt(2 mu (mu t + nu))`.
///
/// Only defined where `mu (mu t + nu) > 0`. The `sgn(mu)` keeps
/// `w(X, mu, nu) = w(-X, -mu, -nu)` on the `mu < 0` half of that region,
/// where the formula written for `mu > 0` would no longer be the line
/// integral of [`wigner`].
pub fn tomogram(x: f64, mu: f64, nu: f64, params: ShutterParams) -> Result<f64> {
    params.require_positive_time()?;
    let shifted = mu * params.t + nu;
    let product = mu * shifted;
    if product.is_nan() || product <= 0.0 {
        return Err(Error::domain(format!(
            "shutter tomogram needs mu (mu t + nu) > 0, got mu = {mu}, mu t + nu = {shifted}"
        )));
    }
    let rho = mu.signum() * (params.k * shifted - x) / (2.0 * mu * shifted).sqrt();
    let f = fresnel(rho)?;
    let (a, b) = (0.5 + f.c, 0.5 + f.s);
    Ok((a * a + b * b) / (2.0 * mu.abs()))
}

/// The shutter state at fixed `(k, t)` as a tomogram and as a Wigner function
/// in the toolkit convention (`2 pi` times [`wigner`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShutterState {
    pub params: ShutterParams,
}

impl ShutterState {
    pub fn new(k: f64, t: f64) -> Result<Self> {
        let params = ShutterParams::new(k, t)?;
        params.require_positive_time()?;
        Ok(Self { params })
    }
}

impl Tomogram for ShutterState {
    fn eval(&self, x: f64, mu: f64, nu: f64) -> Result<f64> {
        tomogram(x, mu, nu, self.params)
    }
}

impl WignerFunction for ShutterState {
    fn wigner(&self, q: f64, p: f64) -> Result<f64> {
        Ok(2.0 * PI * wigner(q, p, self.params)?)
    }
}

/// Shutter tomogram as a function of time for fixed `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShutterFamily {
    pub k: f64,
}

impl TimeTomogram for ShutterFamily {
    fn eval_at(&self, x: f64, mu: f64, nu: f64, t: f64) -> Result<f64> {
        tomogram(x, mu, nu, ShutterParams::new(self.k, t)?)
    }
}
