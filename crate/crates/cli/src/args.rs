//! Flag values that need their own syntax: ranges, phase-space probes.

use std::str::FromStr;

use symtomo::Grid1D;

/// Either a single value or `min:max:count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Axis {
    Point(f64),
    Range(Grid1D),
}

impl Axis {
    pub fn values(&self) -> Vec<f64> {
        match self {
            Axis::Point(v) => vec![*v],
            Axis::Range(g) => g.to_vec(),
        }
    }

    pub fn as_grid(&self) -> Option<Grid1D> {
        match self {
            Axis::Range(g) => Some(*g),
            Axis::Point(_) => None,
        }
    }
}

fn number(s: &str) -> Result<f64, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("not a number: {s:?}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("not a finite number: {s:?}"))
    }
}

impl FromStr for Axis {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [v] => Ok(Axis::Point(number(v)?)),
            [lo, hi, n] => {
                let n: usize = n
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad point count in {s:?}"))?;
                Grid1D::new(number(lo)?, number(hi)?, n)
                    .map(Axis::Range)
                    .map_err(|e| e.to_string())
            }
            _ => Err(format!("expected a number or min:max:count, got {s:?}")),
        }
    }
}

/// `X=<x>,mu=<mu>,nu=<nu>` in any order.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Probe {
    pub x: f64,
    pub mu: f64,
    pub nu: f64,
}

impl FromStr for Probe {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (mut x, mut mu, mut nu) = (None, None, None);
        for field in s.split(',') {
            let (key, value) = field
                .split_once('=')
                .ok_or_else(|| format!("probe field {field:?} is not key=value"))?;
            let slot = match key.trim() {
                "X" | "x" => &mut x,
                "mu" => &mut mu,
                "nu" => &mut nu,
                other => return Err(format!("unknown probe key {other:?} (expected X, mu, nu)")),
            };
            *slot = Some(number(value)?);
        }
        match (x, mu, nu) {
            (Some(x), Some(mu), Some(nu)) => Ok(Probe { x, mu, nu }),
            _ => Err(format!("probe {s:?} needs X, mu and nu")),
        }
    }
}
