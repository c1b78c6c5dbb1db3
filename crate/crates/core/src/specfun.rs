//! Fresnel integrals normalized as `C(w) = sqrt(2/pi) * int_0^w cos(y^2) dy`
//! (and likewise `S` with `sin`), plus a direct quadrature of the Moshinsky
//! function used as an independent oracle for the shutter density.

use std::f64::consts::{FRAC_PI_4, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::quad;

/// Below this |w| the power series is used; above it the continued fraction
/// for the complementary tail.
pub const SERIES_SWITCH: f64 = 1.5;

const SERIES_TOL: f64 = 1e-17;
const CF_TOL: f64 = 1e-16;
const CF_MAX_ITER: usize = 5_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FresnelPair {
    pub c: f64,
    pub s: f64,
}

/// `int_0^w exp(i y^2) dy` by its power series. Accurate for moderate |w|.
pub(crate) fn fresnel_series(w: f64) -> Complex64 {
    let w2 = w * w;
    // term_n = (i w^2)^n / n!, contribution term_n * w / (2n + 1)
    let mut term = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(w, 0.0);
    let mut n = 0u32;
    loop {
        n += 1;
        term *= Complex64::new(0.0, w2 / n as f64);
        let add = term * (w / (2 * n + 1) as f64);
        sum += add;
        if add.norm() <= SERIES_TOL * sum.norm().max(1e-300) || n > 400 {
            break;
        }
    }
    sum
}

/// `int_w^inf exp(i y^2) dy` for `w > 0`, via the Laplace continued fraction
/// of `erfc(exp(-i pi/4) w)` evaluated with the modified Lentz method.
pub(crate) fn fresnel_tail(w: f64) -> Result<Complex64> {
    debug_assert!(w > 0.0);
    let z = Complex64::from_polar(w, -FRAC_PI_4);
    let tiny = Complex64::new(1e-300, 0.0);
    // f = z + (1/2)/(z + (2/2)/(z + (3/2)/(z + ...)))
    let mut f = z;
    let mut c = f;
    let mut d = Complex64::new(0.0, 0.0);
    let mut converged = false;
    for n in 1..=CF_MAX_ITER {
        let a = n as f64 * 0.5;
        d = z + d * a;
        if d.norm() == 0.0 {
            d = tiny;
        }
        c = z + a / c;
        if c.norm() == 0.0 {
            c = tiny;
        }
        d = d.inv();
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).norm() < CF_TOL {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Numerical(format!(
            "Fresnel continued fraction did not converge at w = {w}"
        )));
    }
    // exp(i pi/4) * sqrt(pi)/2 * erfc(z), with erfc(z) = exp(-z^2) / (sqrt(pi) f)
    // and exp(-z^2) = exp(i w^2).
    Ok(Complex64::from_polar(0.5, FRAC_PI_4 + w * w) / f)
}

fn check_finite(w: f64) -> Result<()> {
    if w.is_finite() {
        Ok(())
    } else {
        Err(Error::argument(format!(
            "Fresnel argument must be finite, got {w}"
        )))
    }
}

/// Both Fresnel integrals at once.
pub fn fresnel(w: f64) -> Result<FresnelPair> {
    check_finite(w)?;
    let a = w.abs();
    let integral = if a <= SERIES_SWITCH {
        fresnel_series(a)
    } else {
        Complex64::from_polar(0.5 * PI.sqrt(), FRAC_PI_4) - fresnel_tail(a)?
    };
    let norm = (2.0 / PI).sqrt();
    let sign = if w < 0.0 { -1.0 } else { 1.0 };
    Ok(FresnelPair {
        c: sign * norm * integral.re,
        s: sign * norm * integral.im,
    })
}

pub fn fresnel_c(w: f64) -> Result<f64> {
    fresnel(w).map(|p| p.c)
}

pub fn fresnel_s(w: f64) -> Result<f64> {
    fresnel(w).map(|p| p.s)
}

const CONTOUR_TOL: f64 = 1e-13;
const CONTOUR_SPLIT: f64 = 1.0;

/// Moshinsky function `M(x, k, t) = (i/2pi) int exp(i(kappa x - kappa^2 t/2)) / (kappa - k) dkappa`
/// with the pole taken as `kappa = k - i0`, which makes `M(x, k, 0+) = exp(ikx) theta(-x)`.
///
/// Evaluated by quadrature alone (no Fresnel or error functions): with
/// `kappa = k + v sqrt(2/t)` the integral becomes
/// `M = exp(i(kx - k^2 t/2)) * (1/2 - J/pi)`,
/// `J = int_0^inf sin(beta v)/v * exp(-i v^2) dv`, `beta = (x - kt) sqrt(2/t)`,
/// where the half-residue of the pole gives the `1/2` and the principal value
/// is the symmetric pairing of `+-v`. `J` is integrated on `[0, 1]` directly,
/// then each exponential piece is moved onto its steepest-descent line.
pub fn moshinsky_amplitude(x: f64, k: f64, t: f64) -> Result<Complex64> {
    if t <= 0.0 || !t.is_finite() {
        return Err(Error::domain(format!(
            "Moshinsky function needs t > 0, got t = {t}"
        )));
    }
    if !x.is_finite() || !k.is_finite() {
        return Err(Error::argument("Moshinsky function needs finite x and k"));
    }
    let beta = (x - k * t) * (2.0 / t).sqrt();
    let j = moshinsky_kernel(beta)?;
    let phase = Complex64::from_polar(1.0, k * x - 0.5 * k * k * t);
    Ok(phase * (0.5 - j / PI))
}

/// `int_0^inf sin(beta v)/v exp(-i v^2) dv`.
fn moshinsky_kernel(beta: f64) -> Result<Complex64> {
    let v0 = CONTOUR_SPLIT;
    let near = quad::integrate_complex(
        |v| {
            let sinc = if v == 0.0 { beta } else { (beta * v).sin() / v };
            Complex64::from_polar(sinc, -v * v)
        },
        0.0,
        v0,
        CONTOUR_TOL,
    )?;
    // sin(beta v) = (e^{i beta v} - e^{-i beta v}) / 2i
    let plus = chirp_tail(beta, v0)?;
    let minus = chirp_tail(-beta, v0)?;
    Ok(near + (plus - minus) / Complex64::new(0.0, 2.0))
}

/// `int_{v0}^inf exp(-i v^2 + i g v) / v dv` for `v0 > 0`.
///
/// The real half-line is replaced by a vertical leg from `v0` to the
/// steepest-descent line `v = g/2 + exp(-i pi/4) r` (on which the exponent is
/// `-r^2 + i g^2/4`) and then that line out to infinity. On the vertical leg
/// `|integrand| = exp(y (g - 2 v0)) / |v|` with `v = v0 - i y`, which decays
/// whichever side of the axis the leg goes. The path stays in `Re v >= v0`,
/// so the pole at the origin is never enclosed.
fn chirp_tail(g: f64, v0: f64) -> Result<Complex64> {
    let saddle = 0.5 * g;
    let depth = v0 - saddle;
    // exponent on the leg: y (g - 2 v0) + i (g v0 - v0^2 + y^2)
    let leg = quad::integrate_complex(
        |y| {
            let v = Complex64::new(v0, -y);
            let e = Complex64::from_polar((y * (g - 2.0 * v0)).exp(), v0 * (g - v0) + y * y);
            e / v * Complex64::new(0.0, -1.0)
        },
        0.0,
        depth,
        CONTOUR_TOL,
    )?;
    let dir = Complex64::from_polar(1.0, -FRAC_PI_4);
    let r_start = std::f64::consts::SQRT_2 * depth;
    // e^{-r^2} < 1e-24 beyond r = 7.5
    let r_end = r_start.max(0.0) + 7.5;
    let ray = quad::integrate_complex(
        |r| {
            let v = saddle + dir * r;
            Complex64::from_polar((-r * r).exp(), saddle * saddle) / v * dir
        },
        r_start,
        r_end,
        CONTOUR_TOL,
    )?;
    Ok(leg + ray)
}
