//! Golden-value gate over result rows.

use std::fmt;

use ssfd::SolveStatus;
use ssfd_problems::BenchmarkCase;

use crate::run::ResultRow;
use crate::table::format_fv;

#[derive(Debug, Clone, PartialEq)]
pub struct RowVerdict {
    pub prob: String,
    pub x0: Vec<f64>,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegressionSummary {
    pub verdicts: Vec<RowVerdict>,
    pub n_cycle1: usize,
    pub n_cycle2: usize,
}

impl RegressionSummary {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.passed)
    }
}

impl fmt::Display for RegressionSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.verdicts {
            let tag = if v.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{tag} {} {}: {}", v.prob, crate::table::format_point(&v.x0), v.detail)?;
        }
        let relation = match self.n_cycle1.cmp(&self.n_cycle2) {
            std::cmp::Ordering::Greater => "more",
            std::cmp::Ordering::Less => "fewer",
            std::cmp::Ordering::Equal => "as many",
        };
        writeln!(
            f,
            "cycle I: {}, cycle II: {} ({relation} corrected-direction steps than fallbacks)",
            self.n_cycle1, self.n_cycle2
        )?;
        let failed = self.verdicts.iter().filter(|v| !v.passed).count();
        write!(f, "{} of {} rows passed", self.verdicts.len() - failed, self.verdicts.len())
    }
}

/// Reference value for a row: the matching published start if there is one,
/// otherwise the case optimum.
fn expected_for<'a>(row: &ResultRow, cases: &'a [BenchmarkCase]) -> Option<(&'a BenchmarkCase, Option<f64>)> {
    let case = cases.iter().find(|c| c.name() == row.prob)?;
    let from_start = case.initial_points.iter().find(|s| s.x0 == row.x0).and_then(|s| s.expected_fv);
    Some((case, from_start.or(case.expected_fv)))
}

/// A row fails when its status is not `KktPoint` or its FV misses the
/// reference by more than the case tolerance.
pub fn regression_check(rows: &[ResultRow], cases: &[BenchmarkCase]) -> RegressionSummary {
    let verdicts = rows
        .iter()
        .map(|r| {
            let (passed, detail) = if r.status != SolveStatus::KktPoint {
                (false, format!("status {:?}, fv {}", r.status, format_fv(r.fv)))
            } else {
                match expected_for(r, cases) {
                    None => (false, "no reference case".to_string()),
                    Some((_, None)) => (true, format!("fv {}, no reference value", format_fv(r.fv))),
                    Some((case, Some(want))) => {
                        let delta = r.fv - want;
                        let tol = case.tolerance(want);
                        let ok = delta.abs() <= tol;
                        (
                            ok,
                            format!(
                                "fv {} vs {} (delta {delta:+.3e}, tolerance {tol:.1e})",
                                format_fv(r.fv),
                                format_fv(want)
                            ),
                        )
                    }
                }
            };
            RowVerdict { prob: r.prob.clone(), x0: r.x0.clone(), passed, detail }
        })
        .collect();
    RegressionSummary {
        verdicts,
        n_cycle1: rows.iter().map(|r| r.n_cycle1).sum(),
        n_cycle2: rows.iter().map(|r| r.n_cycle2).sum(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ssfd_problems::find_case;

    fn row(prob: &str, x0: &[f64], fv: f64, status: SolveStatus) -> ResultRow {
        ResultRow {
            prob: prob.into(),
            n: x0.len(),
            m: 0,
            x0: x0.to_vec(),
            nio: 1,
            nii: 2,
            ni: 3,
            nf0: 4,
            nf: 5,
            fv,
            cpu_seconds: 0.0,
            n_cycle1: 2,
            n_cycle2: 1,
            status,
        }
    }

    #[test]
    fn within_tolerance_passes() {
        let cases = vec![find_case("hs035").unwrap()];
        let s = regression_check(&[row("hs035", &[1.0, 2.0, 3.0], 0.11111115, SolveStatus::KktPoint)], &cases);
        assert!(s.passed(), "{s}");
        assert_eq!((s.n_cycle1, s.n_cycle2), (2, 1));
    }

    #[test]
    fn fv_mismatch_fails_with_delta() {
        let cases = vec![find_case("hs035").unwrap()];
        let s = regression_check(&[row("hs035", &[1.0, 2.0, 3.0], 0.2, SolveStatus::KktPoint)], &cases);
        assert!(!s.passed());
        assert!(s.verdicts[0].detail.contains("delta +8.889e-2"), "{}", s.verdicts[0].detail);
    }

    #[test]
    fn bad_status_fails_regardless_of_fv() {
        let cases = vec![find_case("hs035").unwrap()];
        let s = regression_check(&[row("hs035", &[1.0, 2.0, 3.0], 1.0 / 9.0, SolveStatus::LineSearchFailure)], &cases);
        assert!(!s.passed());
        assert!(s.verdicts[0].detail.starts_with("status LineSearchFailure"));
    }

    #[test]
    fn per_start_reference_is_used() {
        let cases = vec![find_case("hs113").unwrap()];
        let second = &cases[0].initial_points[1];
        let want = second.expected_fv.unwrap();
        let s = regression_check(&[row("hs113", &second.x0, want, SolveStatus::KktPoint)], &cases);
        assert!(s.passed(), "{s}");
    }

    #[test]
    fn summary_text() {
        let cases = vec![find_case("hs035").unwrap()];
        let s = regression_check(&[row("hs035", &[1.0, 2.0, 3.0], 1.0 / 9.0, SolveStatus::KktPoint)], &cases);
        let text = s.to_string();
        assert!(text.starts_with("PASS hs035 (1,2,3): fv 1.1111111E-01"));
        assert!(text.ends_with("1 of 1 rows passed"));
        assert!(text.contains("cycle I: 2, cycle II: 1 (more"));
    }
}
