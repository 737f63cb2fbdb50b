//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use ssfd::model::check_gradients;
use ssfd_problems::{find_case, suite};

use crate::config::{parse_point, resolve_params, ConfigError, Format, RunConfig, Selector, PARAMS_ENV};
use crate::regression::regression_check;
use crate::run::run;
use crate::table::{emit_table, format_point};

/// Largest gradient discrepancy `check-gradients` accepts.
pub const GRADIENT_TOL: f64 = 1e-5;

#[derive(Debug, Parser)]
#[command(name = "ssfd", version, about = "Strongly sub-feasible direction solver and benchmark harness")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one problem from its published starts or from --x0.
    Solve {
        #[arg(long)]
        problem: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Solve every case of a suite: hs, hs-extended, svanberg, svanberg-full, toy or all.
    Suite {
        #[arg(long)]
        suite: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Compare analytic gradients with central differences.
    CheckGradients {
        #[arg(long)]
        problem: String,
        /// Check at this point instead of the published starts.
        #[arg(long)]
        x0: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Comma-separated starting point.
    #[arg(long)]
    pub x0: Option<String>,
    /// Parameter file of `key = value` lines; defaults to $SSFD_PARAMS.
    #[arg(long)]
    pub params: Option<PathBuf>,
    /// Single parameter override, repeatable; applied after the file.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub set: Vec<String>,
    #[arg(long, value_enum, default_value = "markdown")]
    pub format: Format,
    /// Write the table here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Check every row against its reference value; exit 1 on any failure.
    #[arg(long)]
    pub strict: bool,
    #[arg(long)]
    pub max_iter: Option<usize>,
    /// Stopping threshold on the QP direction norm.
    #[arg(long)]
    pub tol: Option<f64>,
}

fn build_config(selector: Selector, common: &CommonArgs, env_params: Option<PathBuf>) -> Result<RunConfig, String> {
    let mut overrides = Vec::new();
    for s in &common.set {
        let (k, v) = s.split_once('=').ok_or_else(|| format!("--set expects KEY=VALUE, got `{s}`"))?;
        overrides.push((k.trim().to_string(), v.trim().to_string()));
    }
    if let Some(n) = common.max_iter {
        overrides.push(("max_iter".into(), n.to_string()));
    }
    if let Some(t) = common.tol {
        overrides.push(("tol_d0".into(), format!("{t:e}")));
    }
    let params =
        resolve_params(common.params.as_deref(), env_params.as_deref(), &overrides).map_err(|e| e.to_string())?;
    let x0 = common.x0.as_deref().map(parse_point).transpose().map_err(|e| e.to_string())?;
    Ok(RunConfig { selector, x0, params, format: common.format, strict: common.strict, out: common.out.clone() })
}

fn cases_for(selector: &Selector) -> Result<Vec<ssfd_problems::BenchmarkCase>, ConfigError> {
    Ok(match selector {
        Selector::Problem(name) => vec![find_case(name)?],
        Selector::Suite(name) => suite(name)?,
    })
}

fn run_and_emit(config: RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let rows = match run(&config) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let text = match emit_table(&rows, config.format) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    match &config.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                let _ = writeln!(stderr, "error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => {
            let _ = stdout.write_all(text.as_bytes());
        }
    }
    if !config.strict {
        return 0;
    }
    let cases = cases_for(&config.selector).expect("selector resolved once already");
    let summary = regression_check(&rows, &cases);
    let _ = writeln!(stderr, "{summary}");
    if summary.passed() {
        0
    } else {
        1
    }
}

fn gradients(problem: &str, x0: Option<&str>, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let case = match find_case(problem) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return 2;
        }
    };
    let points = match x0 {
        Some(text) => match parse_point(text) {
            Ok(p) => vec![p],
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                return 2;
            }
        },
        None => case.initial_points.iter().map(|s| s.x0.clone()).collect(),
    };
    let mut code = 0;
    for x in &points {
        match check_gradients(case.problem.as_ref(), x) {
            Ok(err) => {
                let ok = err <= GRADIENT_TOL;
                let tag = if ok { "ok" } else { "FAIL" };
                let _ = writeln!(stdout, "{tag} {} at {}: max relative error {err:.3e}", case.name(), format_point(x));
                if !ok {
                    code = 1;
                }
            }
            Err(e) => {
                let _ = writeln!(stdout, "FAIL {} at {}: {e}", case.name(), format_point(x));
                code = 1;
            }
        }
    }
    code
}

/// Runs a parsed command line and returns the process exit code: 0 on
/// success, 1 when a strict check or a gradient check fails, 2 on
/// configuration errors.
pub fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let env_params = std::env::var_os(PARAMS_ENV).map(PathBuf::from);
    match cli.command {
        Command::Solve { problem, common } => match build_config(Selector::Problem(problem), &common, env_params) {
            Ok(cfg) => run_and_emit(cfg, stdout, stderr),
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                2
            }
        },
        Command::Suite { suite, common } => match build_config(Selector::Suite(suite), &common, env_params) {
            Ok(cfg) => run_and_emit(cfg, stdout, stderr),
            Err(e) => {
                let _ = writeln!(stderr, "error: {e}");
                2
            }
        },
        Command::CheckGradients { problem, x0 } => gradients(&problem, x0.as_deref(), stdout, stderr),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> (i32, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("ssfd").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = execute(cli, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn solve_toy_json() {
        let (code, out, _) = exec(&["solve", "--problem", "toy-quad2", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v[0]["prob"], "toy-quad2");
        assert_eq!(v[0]["status"], "KktPoint");
    }

    #[test]
    fn strict_exit_code_follows_regression_check() {
        let (code, _, err) = exec(&["solve", "--problem", "toy-box3", "--strict"]);
        assert_eq!(code, 0, "{err}");
        assert!(err.contains("1 of 1 rows passed"));
        // one iteration cannot reach the optimum from the origin
        let (code, _, err) = exec(&["solve", "--problem", "toy-box3", "--strict", "--max-iter", "1"]);
        assert_eq!(code, 1, "{err}");
        assert!(err.contains("FAIL toy-box3"));
    }

    #[test]
    fn bad_flags_exit_two() {
        assert_eq!(exec(&["solve", "--problem", "toy-quad1", "--set", "bogus=1"]).0, 2);
        assert_eq!(exec(&["solve", "--problem", "toy-quad1", "--tol=-1"]).0, 2);
        assert_eq!(exec(&["solve", "--problem", "nope"]).0, 2);
        assert_eq!(exec(&["solve", "--problem", "toy-quad1", "--x0", "1,2"]).0, 2);
    }

    #[test]
    fn check_gradients_reports_each_start() {
        let (code, out, _) = exec(&["check-gradients", "--problem", "hs033"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().filter(|l| l.starts_with("ok hs033")).count(), 2);
    }

    #[test]
    fn out_file() {
        let path = std::env::temp_dir().join(format!("ssfd-out-{}.csv", std::process::id()));
        let p = path.to_str().unwrap();
        let (code, out, _) = exec(&["solve", "--problem", "toy-linear1", "--format", "csv", "--out", p]);
        assert_eq!((code, out.as_str()), (0, ""));
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("prob,n,m,x0,"));
        std::fs::remove_file(&path).unwrap();
    }
}
