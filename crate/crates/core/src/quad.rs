//! Adaptive Gauss-Kronrod (7/15) quadrature on finite intervals.
//!
//! Only the special-function layer uses adaptive refinement; everything on
//! uniform grids goes through [`crate::grid`].

use num_complex::Complex64;

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_DEPTH: u32 = 60;
const ROUNDOFF: f64 = 50.0 * f64::EPSILON;
const MAX_SEGMENTS: usize = 200_000;

fn kronrod_segment<F>(f: &F, a: f64, b: f64) -> (Complex64, f64)
where
    F: Fn(f64) -> Complex64,
{
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (j, (&x, &w)) in XGK[..7].iter().zip(&WGK[..7]).enumerate() {
        let s = f(c - h * x) + f(c + h * x);
        kron += s * w;
        if j % 2 == 1 {
            gauss += s * WG[j / 2];
        }
    }
    (kron * h, ((kron - gauss) * h).norm())
}

/// Integrates a complex-valued `f` over `[a, b]` to absolute tolerance `tol`.
pub fn integrate_complex<F>(f: F, a: f64, b: f64, tol: f64) -> Result<Complex64>
where
    F: Fn(f64) -> Complex64,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::argument("adaptive quadrature needs finite limits"));
    }
    if a == b {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let mut total = Complex64::new(0.0, 0.0);
    let mut segments = 0usize;
    // Depth-first with an explicit stack keeps the summation order fixed.
    let mut stack = vec![(a, b, tol, 0u32)];
    while let Some((lo, hi, local_tol, depth)) = stack.pop() {
        segments += 1;
        if segments > MAX_SEGMENTS {
            return Err(Error::Numerical(format!(
                "adaptive quadrature on [{a}, {b}] exceeded {MAX_SEGMENTS} segments"
            )));
        }
        let (value, err) = kronrod_segment(&f, lo, hi);
        // Round-off floor: no point bisecting below a few ulps of the segment value.
        if err <= local_tol.max(ROUNDOFF * value.norm()) || depth >= MAX_DEPTH {
            if !value.re.is_finite() || !value.im.is_finite() {
                return Err(Error::Numerical("non-finite integrand".into()));
            }
            total += value;
        } else {
            let mid = 0.5 * (lo + hi);
            stack.push((mid, hi, 0.5 * local_tol, depth + 1));
            stack.push((lo, mid, 0.5 * local_tol, depth + 1));
        }
    }
    Ok(total)
}

/// Real-valued counterpart of [`integrate_complex`].
pub fn integrate_real<F>(f: F, a: f64, b: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    integrate_complex(|x| Complex64::new(f(x), 0.0), a, b, tol).map(|z| z.re)
}
