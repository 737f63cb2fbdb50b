//! Run configuration: what to solve, with which parameters, and where the
//! table goes.

use std::path::{Path, PathBuf};

use ssfd::solver::ParamError;
use ssfd::SolverParams;
use ssfd_problems::SuiteError;
use thiserror::Error;

/// Environment variable naming a default parameter file.
pub const PARAMS_ENV: &str = "SSFD_PARAMS";

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error(transparent)]
    Suite(#[from] SuiteError),
    #[error("{path}:{line}: {source}")]
    ParamLine { path: String, line: usize, source: ParamError },
    #[error("{path}:{line}: expected `key = value`, got `{text}`")]
    Syntax { path: String, line: usize, text: String },
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("bad initial point `{0}`: expected comma-separated numbers")]
    BadPoint(String),
    #[error("initial point has {got} entries but {problem} has n = {expected}")]
    PointDimension { problem: String, expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selector {
    Problem(String),
    Suite(String),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub selector: Selector,
    pub x0: Option<Vec<f64>>,
    pub params: SolverParams,
    pub format: Format,
    pub strict: bool,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(selector: Selector) -> Self {
        RunConfig {
            selector,
            x0: None,
            params: SolverParams::default(),
            format: Format::Markdown,
            strict: false,
            out: None,
        }
    }
}

/// Parses `key = value` lines. Blank lines and everything after `#` are
/// ignored. `origin` only labels error messages.
pub fn parse_params_text(text: &str, origin: &str) -> Result<Vec<(usize, String, String)>, ConfigError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return Err(ConfigError::Syntax { path: origin.to_string(), line: i + 1, text: line.to_string() });
        };
        let (k, v) = (k.trim(), v.trim());
        if k.is_empty() || v.is_empty() {
            return Err(ConfigError::Syntax { path: origin.to_string(), line: i + 1, text: line.to_string() });
        }
        out.push((i + 1, k.to_string(), v.to_string()));
    }
    Ok(out)
}

/// Applies a parameter file on top of `params`.
pub fn apply_params_text(params: &mut SolverParams, text: &str, origin: &str) -> Result<(), ConfigError> {
    for (line, k, v) in parse_params_text(text, origin)? {
        params
            .set(&k, &v)
            .map_err(|source| ConfigError::ParamLine { path: origin.to_string(), line, source })?;
    }
    Ok(())
}

pub fn apply_params_file(params: &mut SolverParams, path: &Path) -> Result<(), ConfigError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io { path: shown.clone(), source })?;
    apply_params_text(params, &text, &shown)
}

/// Builds the parameter set: defaults, then the file given explicitly or
/// through [`PARAMS_ENV`], then the `key=value` overrides in order. The
/// result is validated.
pub fn resolve_params(
    file: Option<&Path>,
    env_file: Option<&Path>,
    overrides: &[(String, String)],
) -> Result<SolverParams, ConfigError> {
    let mut params = SolverParams::default();
    if let Some(path) = file.or(env_file) {
        apply_params_file(&mut params, path)?;
    }
    for (k, v) in overrides {
        params.set(k, v)?;
    }
    params.validate()?;
    Ok(params)
}

pub fn parse_point(text: &str) -> Result<Vec<f64>, ConfigError> {
    let bad = || ConfigError::BadPoint(text.to_string());
    let v: Vec<f64> = text
        .split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    if v.iter().any(|x| !x.is_finite()) {
        return Err(bad());
    }
    Ok(v)
}
