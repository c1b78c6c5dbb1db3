//! Output files of one run and their manifest.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::CliError;

pub const MANIFEST: &str = "manifest.json";

/// One CSV cell. Floats use the shortest representation that round-trips.
pub enum Cell {
    Num(f64),
    Bool(bool),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Num(v) => format!("{v:?}"),
            Cell::Bool(v) => v.to_string(),
        }
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Manifest<'a> {
    command: &'a str,
    parameters: &'a BTreeMap<String, String>,
    toolkit_version: &'static str,
    checksums: &'a BTreeMap<String, String>,
}

pub struct Run {
    dir: PathBuf,
    command: &'static str,
    parameters: BTreeMap<String, String>,
    checksums: BTreeMap<String, String>,
}

fn io_error(path: &Path, e: impl std::fmt::Display) -> CliError {
    CliError::Input(format!("{}: {e}", path.display()))
}

impl Run {
    pub fn new(
        dir: &Path,
        command: &'static str,
        parameters: BTreeMap<String, String>,
    ) -> Result<Self, CliError> {
        fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
        Ok(Self {
            dir: dir.to_path_buf(),
            command,
            parameters,
            checksums: BTreeMap::new(),
        })
    }

    fn write(&mut self, name: &str, bytes: &[u8]) -> Result<PathBuf, CliError> {
        let path = self.dir.join(name);
        fs::write(&path, bytes).map_err(|e| io_error(&path, e))?;
        self.checksums
            .insert(name.to_string(), hex::encode(Sha256::digest(bytes)));
        Ok(path)
    }

    /// Writes `<command>.csv`; returns the rendered text.
    pub fn csv(&mut self, header: &[&str], rows: &[Vec<Cell>]) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let fail = |e: csv::Error| CliError::Input(format!("CSV encoding: {e}"));
        w.write_record(header).map_err(fail)?;
        for row in rows {
            w.write_record(row.iter().map(Cell::render)).map_err(fail)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| CliError::Input(format!("CSV encoding: {e}")))?;
        self.write(&format!("{}.csv", self.command), &bytes)?;
        Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
    }

    /// Writes `<command>.json`; returns the rendered text.
    pub fn json(&mut self, value: &impl Serialize) -> Result<String, CliError> {
        let mut text = serde_json::to_string_pretty(value)
            .map_err(|e| CliError::Input(format!("JSON encoding: {e}")))?;
        text.push('\n');
        self.write(&format!("{}.json", self.command), text.as_bytes())?;
        Ok(text)
    }

    pub fn finish(self) -> Result<(), CliError> {
        let manifest = Manifest {
            command: self.command,
            parameters: &self.parameters,
            toolkit_version: env!("CARGO_PKG_VERSION"),
            checksums: &self.checksums,
        };
        let mut text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
        text.push('\n');
        let path = self.dir.join(MANIFEST);
        fs::write(&path, text).map_err(|e| io_error(&path, e))
    }
}
