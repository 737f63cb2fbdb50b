//! Solving a selection of benchmark cases into result rows.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use ssfd::{solve, SolveReport, SolveStatus, SolverParams};
use ssfd_problems::{find_case, suite, BenchmarkCase};

use crate::config::{ConfigError, RunConfig, Selector};

/// One line of a results table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRow {
    pub prob: String,
    pub n: usize,
    pub m: usize,
    pub x0: Vec<f64>,
    pub nio: usize,
    pub nii: usize,
    pub ni: usize,
    pub nf0: u64,
    pub nf: u64,
    #[serde(with = "nullable_f64")]
    pub fv: f64,
    pub cpu_seconds: f64,
    pub n_cycle1: usize,
    pub n_cycle2: usize,
    pub status: SolveStatus,
}

impl ResultRow {
    pub fn from_report(case: &BenchmarkCase, x0: &[f64], r: &SolveReport) -> Self {
        ResultRow {
            prob: case.name().to_string(),
            n: case.problem.n(),
            m: case.problem.m(),
            x0: x0.to_vec(),
            nio: r.nio,
            nii: r.nii,
            ni: r.ni,
            nf0: r.nf0,
            nf: r.nf,
            fv: r.fv,
            cpu_seconds: r.wall_time_seconds,
            n_cycle1: r.n_cycle1,
            n_cycle2: r.n_cycle2,
            status: r.status,
        }
    }
}

/// JSON has no NaN; a non-finite FV (only possible on failed runs) is
/// written as `null` and read back as NaN.
mod nullable_f64 {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}

/// A case together with the starting points to run it from.
#[derive(Debug, Clone)]
pub struct Job {
    pub case: BenchmarkCase,
    pub x0: Vec<f64>,
}

/// Expands the selector into jobs, one per (case, starting point). An
/// explicit `x0` replaces the published starts.
pub fn jobs(config: &RunConfig) -> Result<Vec<Job>, ConfigError> {
    let cases = match &config.selector {
        Selector::Problem(name) => vec![find_case(name)?],
        Selector::Suite(name) => suite(name)?,
    };
    let mut out = Vec::new();
    for case in cases {
        match &config.x0 {
            Some(x0) => {
                if x0.len() != case.problem.n() {
                    return Err(ConfigError::PointDimension {
                        problem: case.name().to_string(),
                        expected: case.problem.n(),
                        got: x0.len(),
                    });
                }
                out.push(Job { case, x0: x0.clone() });
            }
            None => {
                for s in case.initial_points.clone() {
                    out.push(Job { case: case.clone(), x0: s.x0 });
                }
            }
        }
    }
    Ok(out)
}

/// Solves one job. Setup errors (a parameter set that fails validation, a
/// non-finite start) become a row with the matching status and no iterations.
pub fn run_job(job: &Job, params: &SolverParams) -> (ResultRow, Option<SolveReport>) {
    match solve(job.case.problem.as_ref(), &job.x0, params) {
        Ok(r) => (ResultRow::from_report(&job.case, &job.x0, &r), Some(r)),
        Err(e) => {
            let row = ResultRow {
                prob: job.case.name().to_string(),
                n: job.case.problem.n(),
                m: job.case.problem.m(),
                x0: job.x0.clone(),
                nio: 0,
                nii: 0,
                ni: 0,
                nf0: 0,
                nf: 0,
                fv: f64::NAN,
                cpu_seconds: 0.0,
                n_cycle1: 0,
                n_cycle2: 0,
                status: e.status(),
            };
            (row, None)
        }
    }
}

/// Solves every job in parallel; the result keeps the input order.
pub fn run_jobs(jobs: &[Job], params: &SolverParams) -> Vec<(ResultRow, Option<SolveReport>)> {
    jobs.par_iter().map(|j| run_job(j, params)).collect()
}

pub fn run(config: &RunConfig) -> Result<Vec<ResultRow>, ConfigError> {
    let jobs = jobs(config)?;
    Ok(run_jobs(&jobs, &config.params).into_iter().map(|(row, _)| row).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hs_suite_has_fourteen_rows() {
        let cfg = RunConfig::new(Selector::Suite("hs".into()));
        assert_eq!(jobs(&cfg).unwrap().len(), 14);
    }

    #[test]
    fn toy_row() {
        let rows = run(&RunConfig::new(Selector::Problem("toy-quad1".into()))).unwrap();
        assert_eq!(rows.len(), 1);
        let r = &rows[0];
        assert_eq!(r.status, SolveStatus::KktPoint);
        assert!(r.fv.abs() <= 1e-8, "fv = {}", r.fv);
        assert_eq!(r.ni, r.nio + r.nii);
        assert_eq!(r.ni, r.n_cycle1 + r.n_cycle2);
    }

    #[test]
    fn x0_override_checks_dimension() {
        let mut cfg = RunConfig::new(Selector::Problem("hs012".into()));
        cfg.x0 = Some(vec![1.0, 2.0, 3.0]);
        assert!(matches!(jobs(&cfg), Err(ConfigError::PointDimension { expected: 2, got: 3, .. })));
        cfg.x0 = Some(vec![1.0, 2.0]);
        let j = jobs(&cfg).unwrap();
        assert_eq!((j.len(), j[0].x0.clone()), (1, vec![1.0, 2.0]));
    }

    #[test]
    fn unknown_selector() {
        assert!(jobs(&RunConfig::new(Selector::Problem("hs999".into()))).is_err());
        assert!(jobs(&RunConfig::new(Selector::Suite("cute".into()))).is_err());
    }

    #[test]
    fn order_is_input_order() {
        let cfg = RunConfig::new(Selector::Suite("toy".into()));
        let names: Vec<String> = run(&cfg).unwrap().into_iter().map(|r| r.prob).collect();
        let want: Vec<String> = jobs(&cfg).unwrap().into_iter().map(|j| j.case.name().to_string()).collect();
        assert_eq!(names, want);
    }
}
