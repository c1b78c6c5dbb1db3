//! Builtin analytic states and sampled-file inputs.

use std::path::Path;

use symtomo::shutter::ShutterState;
use symtomo::{
    Error, FockState, GaussianState, Grid1D, SampledTomogram, Tomogram, WignerField, WignerFunction,
};

use crate::CliError;

/// A named analytic state, available both as a tomogram and as a Wigner function.
#[derive(Debug, Clone, Copy)]
pub enum Builtin {
    Gaussian(GaussianState),
    Fock(FockState),
    Shutter(ShutterState),
}

fn params(name: &str, args: Option<&str>, n: usize) -> Result<Vec<f64>, CliError> {
    let raw = args.unwrap_or("");
    let vals: Vec<f64> = if raw.is_empty() {
        Vec::new()
    } else {
        raw.split(',')
            .map(|v| {
                v.trim()
                    .parse::<f64>()
                    .map_err(|_| CliError::Input(format!("state {name}: bad number {v:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    if vals.len() != n {
        return Err(CliError::Input(format!(
            "state {name} takes {n} parameter(s), got {}",
            vals.len()
        )));
    }
    Ok(vals)
}

impl Builtin {
    /// `ground`, `excited1`, `coherent:q0,p0`, `squeezed:s`, `subheisenberg:var`, `shutter:k,t`.
    pub fn parse(spec: &str) -> Result<Self, CliError> {
        let (name, args) = match spec.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (spec, None),
        };
        Ok(match name {
            "ground" => {
                params(name, args, 0)?;
                Builtin::Gaussian(GaussianState::ground())
            }
            "excited1" => {
                params(name, args, 0)?;
                Builtin::Fock(FockState::new(1))
            }
            "coherent" => {
                let v = params(name, args, 2)?;
                Builtin::Gaussian(GaussianState::coherent(v[0], v[1]))
            }
            "squeezed" => Builtin::Gaussian(GaussianState::squeezed(params(name, args, 1)?[0])?),
            "subheisenberg" => {
                Builtin::Gaussian(GaussianState::isotropic(params(name, args, 1)?[0])?)
            }
            "shutter" => {
                let v = params(name, args, 2)?;
                Builtin::Shutter(ShutterState::new(v[0], v[1])?)
            }
            other => return Err(CliError::Input(format!("unknown state {other:?}"))),
        })
    }
}

impl Tomogram for Builtin {
    fn eval(&self, x: f64, mu: f64, nu: f64) -> symtomo::Result<f64> {
        match self {
            Builtin::Gaussian(s) => s.eval(x, mu, nu),
            Builtin::Fock(s) => s.eval(x, mu, nu),
            Builtin::Shutter(s) => s.eval(x, mu, nu),
        }
    }
}

impl WignerFunction for Builtin {
    fn wigner(&self, q: f64, p: f64) -> symtomo::Result<f64> {
        match self {
            Builtin::Gaussian(s) => s.wigner(q, p),
            Builtin::Fock(s) => s.wigner(q, p),
            Builtin::Shutter(s) => s.wigner(q, p),
        }
    }
}

/// Reads a long-format CSV with the given three column names; the first two
/// columns must enumerate a uniform grid, first column slow.
fn read_grid_csv(path: &Path, columns: [&str; 3]) -> Result<(Grid1D, Grid1D, Vec<f64>), CliError> {
    let shown = path.display();
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| CliError::Input(format!("{shown}: {e}")))?;
    let header = reader
        .headers()
        .map_err(|e| CliError::Input(format!("{shown}: {e}")))?;
    if header.iter().collect::<Vec<_>>() != columns {
        return Err(CliError::Input(format!(
            "{shown}: expected header {}, got {}",
            columns.join(","),
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut rows = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::Input(format!("{shown}: {e}")))?;
        let mut vals = [0.0; 3];
        for (k, v) in vals.iter_mut().enumerate() {
            let cell = record.get(k).unwrap_or("");
            *v = cell.parse().map_err(|_| {
                CliError::Input(format!("{shown}: row {}: bad number {cell:?}", line + 2))
            })?;
        }
        rows.push(vals);
    }
    let axis = |k: usize| -> Vec<f64> {
        let mut v: Vec<f64> = Vec::new();
        for r in &rows {
            if !v.iter().any(|&u| u == r[k]) {
                v.push(r[k]);
            }
        }
        v
    };
    let slow = axis(0);
    let fast = axis(1);
    let grid = |v: &[f64], name: &str| -> Result<Grid1D, CliError> {
        let g = Grid1D::new(
            v.first().copied().unwrap_or(0.0),
            v.last().copied().unwrap_or(0.0),
            v.len(),
        )
        .map_err(|e| CliError::Input(format!("{shown}: column {name}: {e}")))?;
        let tol = 1e-9 * g.step();
        if v.iter()
            .enumerate()
            .any(|(i, &x)| (x - g.point(i)).abs() > tol)
        {
            return Err(CliError::Input(format!(
                "{shown}: column {name} is not a uniform ascending grid"
            )));
        }
        Ok(g)
    };
    let (gs, gf) = (grid(&slow, columns[0])?, grid(&fast, columns[1])?);
    if rows.len() != gs.len() * gf.len() {
        return Err(CliError::Input(format!(
            "{shown}: {} rows do not fill a {}x{} grid",
            rows.len(),
            gs.len(),
            gf.len()
        )));
    }
    for (i, r) in rows.iter().enumerate() {
        if r[0] != slow[i / gf.len()] || r[1] != fast[i % gf.len()] {
            return Err(CliError::Input(format!(
                "{shown}: row {} out of order ({} slow, {} fast)",
                i + 2,
                columns[0],
                columns[1]
            )));
        }
    }
    Ok((gs, gf, rows.iter().map(|r| r[2]).collect()))
}

pub fn read_wigner_field(path: &Path) -> Result<WignerField, CliError> {
    let (q, p, v) = read_grid_csv(path, ["q", "p", "value"])?;
    WignerField::new(q, p, v).map_err(|e| data_error(path, e))
}

pub fn read_tomogram(path: &Path) -> Result<SampledTomogram, CliError> {
    let (theta, x, v) = read_grid_csv(path, ["theta", "X", "value"])?;
    SampledTomogram::new(x, theta, v).map_err(|e| data_error(path, e))
}

fn data_error(path: &Path, e: Error) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}
