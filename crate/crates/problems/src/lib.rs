//! Benchmark problems for the `ssfd` solver: a Hock-Schittkowski subset,
//! Schittkowski 264, the Svanberg family and a few toy problems with known
//! optima. Every problem carries analytic gradients and the starting points
//! and reference optimal values it is usually reported with.

pub mod algebraic;
pub mod hs;
pub mod svanberg;
pub mod toy;

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use ssfd::Problem;
use thiserror::Error;

pub use svanberg::Svanberg;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SuiteError {
    #[error("no Svanberg instance with n = {n}: {reason}")]
    UnsupportedDimension { n: usize, reason: &'static str },
    #[error("unknown problem `{0}`")]
    UnknownProblem(String),
    #[error("unknown suite `{0}` (expected hs, hs-extended, svanberg, svanberg-full, toy or all)")]
    UnknownSuite(String),
}

/// One published starting point and the objective value reached from it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InitialPoint {
    pub x0: Vec<f64>,
    pub expected_fv: Option<f64>,
}

#[derive(Clone)]
pub struct BenchmarkCase {
    pub problem: Arc<dyn Problem>,
    pub initial_points: Vec<InitialPoint>,
    /// Reference optimum of the case as a whole.
    pub expected_fv: Option<f64>,
    /// An FV matches when `|fv - expected| <= max(fv_abs_tol, fv_rel_tol * |expected|)`.
    pub fv_abs_tol: f64,
    pub fv_rel_tol: f64,
    /// Collection the formulation comes from.
    pub source: String,
}

impl std::fmt::Debug for BenchmarkCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BenchmarkCase")
            .field("problem", &self.problem.name())
            .field("initial_points", &self.initial_points)
            .field("expected_fv", &self.expected_fv)
            .field("source", &self.source)
            .finish()
    }
}

impl BenchmarkCase {
    pub fn name(&self) -> &str {
        self.problem.name()
    }

    pub fn tolerance(&self, expected: f64) -> f64 {
        self.fv_abs_tol.max(self.fv_rel_tol * expected.abs())
    }

    pub fn fv_matches(&self, fv: f64, expected: f64) -> bool {
        (fv - expected).abs() <= self.tolerance(expected)
    }

    pub fn describe(&self) -> ProblemDescription {
        ProblemDescription {
            name: self.name().to_string(),
            n: self.problem.n(),
            m: self.problem.m(),
            initial_points: self.initial_points.clone(),
            expected_fv: self.expected_fv,
            source: self.source.clone(),
        }
    }
}

/// Serializable summary of a case.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemDescription {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub initial_points: Vec<InitialPoint>,
    pub expected_fv: Option<f64>,
    pub source: String,
}

pub fn export_json(cases: &[BenchmarkCase]) -> String {
    let d: Vec<ProblemDescription> = cases.iter().map(BenchmarkCase::describe).collect();
    serde_json::to_string_pretty(&d).expect("descriptions serialize")
}

fn start(x0: &[f64], fv: f64) -> InitialPoint {
    InitialPoint { x0: x0.to_vec(), expected_fv: Some(fv) }
}

fn hs_case(p: algebraic::Algebraic, starts: &[(&[f64], Option<f64>)], source: &str) -> BenchmarkCase {
    let fv = p.fv.expect("collection problems carry a reference value");
    BenchmarkCase {
        initial_points: starts.iter().map(|&(x, reached)| start(x, reached.unwrap_or(fv))).collect(),
        problem: Arc::new(p),
        expected_fv: Some(fv),
        fv_abs_tol: 1e-4,
        fv_rel_tol: 1e-4,
        source: source.to_string(),
    }
}

/// The thirteen small problems from their first published starting point,
/// plus the second start of HS 33: fourteen runs.
pub fn hs_suite() -> Vec<BenchmarkCase> {
    let mut cases = hs_extended_suite();
    for c in &mut cases {
        let keep = if c.name() == "hs033" { 2 } else { 1 };
        c.initial_points.truncate(keep);
    }
    cases
}

/// [`hs_suite`] with the further starts of HS 43, HS 113 and S264, seventeen
/// runs. A start carries its own value where the published run stopped
/// somewhere other than the case optimum.
pub fn hs_extended_suite() -> Vec<BenchmarkCase> {
    const HS: &str = "Hock-Schittkowski";
    vec![
        hs_case(hs::hs012(), &[(&[6.0, 6.0], None)], HS),
        hs_case(hs::hs029(), &[(&[-4.0, -4.0, -4.0], None)], HS),
        hs_case(hs::hs031(), &[(&[2.0, 4.0, 7.0], None)], HS),
        hs_case(hs::hs033(), &[(&[2.0, 4.0, 6.0], None), (&[1.0, 4.0, 6.0], None)], HS),
        hs_case(hs::hs034(), &[(&[2.0, 2.0, 2.0], None)], HS),
        hs_case(hs::hs035(), &[(&[1.0, 2.0, 3.0], None)], HS),
        hs_case(hs::hs043(), &[(&[-10.0, 2.0, -8.0, 5.0], None), (&[0.0, 2.0, 2.0, 4.0], None)], HS),
        hs_case(hs::hs044(), &[(&[-20.0, -20.0, -20.0, -20.0], None)], HS),
        hs_case(hs::hs066(), &[(&[0.0, 0.0, 100.0], None)], HS),
        hs_case(hs::hs076(), &[(&[1.0, 2.0, 3.0, 4.0], None)], HS),
        hs_case(hs::hs100(), &[(&[0.0, 3.0, -3.0, 3.0, 0.0, 1.0, 0.0], None)], HS),
        hs_case(
            hs::hs113(),
            &[
                (&[4.0, 10.0, 10.0, 2.0, 0.0, 11.0, 4.0, 0.0, 12.0, 10.0], None),
                (&[0.0, 2.0, 9.0, 5.0, 0.0, 1.0, 9.0, 8.0, -10.0, 10.0], Some(24.306585)),
            ],
            HS,
        ),
        hs_case(hs::s264(), &[(&[8.0, -5.0, 6.0, -4.0], None), (&[0.0, 0.0, 0.0, 10.0], None)], "Schittkowski"),
    ]
}

/// Published (constant starting value, optimal value) pairs per dimension.
fn svanberg_references(n: usize) -> &'static [(f64, f64)] {
    match n {
        10 => &[(0.0, 15.731517), (10.0, 15.731517), (-10.0, 15.731517)],
        20 => &[(10.0, 32.427932), (-10.0, 32.427932)],
        30 => &[(0.0, 49.142526), (10.0, 49.142526), (-10.0, 49.142526)],
        40 => &[(10.0, 65.861140), (-10.0, 65.861140)],
        50 => &[(0.0, 82.581912), (10.0, 82.581915), (-10.0, 82.581912)],
        80 => &[(0.0, 132.749819), (10.0, 132.749820), (5.0, 132.749824)],
        100 => &[(0.0, 166.197172), (10.0, 166.197173), (5.0, 166.197178)],
        150 => &[(10.0, 249.818369), (5.0, 249.818369)],
        200 => &[(10.0, 333.441310), (5.0, 333.441310)],
        250 => &[(2.0, 417.064989), (3.0, 417.064989)],
        _ => &[],
    }
}

/// Dimensions with published reference values.
pub const SVANBERG_DIMENSIONS: [usize; 10] = [10, 20, 30, 40, 50, 80, 100, 150, 200, 250];

/// The `n`-variable Svanberg problem with every published start for that `n`.
///
/// Without reference data the case starts from the origin and has no
/// expected value; `strict` turns that situation into an error.
pub fn svanberg(n: usize, strict: bool) -> Result<BenchmarkCase, SuiteError> {
    let p = Svanberg::new(n)
        .ok_or(SuiteError::UnsupportedDimension { n, reason: "the formulation needs an even n >= 10" })?;
    let refs = svanberg_references(n);
    if refs.is_empty() && strict {
        return Err(SuiteError::UnsupportedDimension { n, reason: "no reference value is known" });
    }
    let initial_points = if refs.is_empty() {
        vec![InitialPoint { x0: vec![0.0; n], expected_fv: None }]
    } else {
        refs.iter().map(|&(v, fv)| start(&vec![v; n], fv)).collect()
    };
    Ok(BenchmarkCase {
        problem: Arc::new(p),
        expected_fv: refs.first().map(|r| r.1),
        initial_points,
        fv_abs_tol: 1e-3,
        fv_rel_tol: 0.0,
        source: "CUTE".to_string(),
    })
}

/// Svanberg n = 10, 30, 50 from the origin and from (10, ..., 10).
pub fn svanberg_suite() -> Vec<BenchmarkCase> {
    [10, 30, 50]
        .iter()
        .map(|&n| {
            let mut c = svanberg(n, true).expect("reference dimension");
            c.initial_points.retain(|s| s.x0[0] == 0.0 || s.x0[0] == 10.0);
            c
        })
        .collect()
}

/// Every published Svanberg instance and start.
pub fn svanberg_full_suite() -> Vec<BenchmarkCase> {
    SVANBERG_DIMENSIONS.iter().map(|&n| svanberg(n, true).expect("reference dimension")).collect()
}

fn toy_case(p: algebraic::Algebraic, x0: &[f64]) -> BenchmarkCase {
    let fv = p.fv.expect("toy problems have known optima");
    BenchmarkCase {
        initial_points: vec![start(x0, fv)],
        problem: Arc::new(p),
        expected_fv: Some(fv),
        fv_abs_tol: 1e-5,
        fv_rel_tol: 0.0,
        source: "closed form".to_string(),
    }
}

pub fn toy_suite() -> Vec<BenchmarkCase> {
    vec![
        toy_case(toy::quad1(), &[5.0]),
        toy_case(toy::quad2(), &[0.0, 0.0]),
        toy_case(toy::linear1(), &[-5.0]),
        toy_case(toy::circle(), &[3.0, 3.0]),
        toy_case(toy::box3(), &[0.0, 0.0, 0.0]),
    ]
}

pub fn suite(name: &str) -> Result<Vec<BenchmarkCase>, SuiteError> {
    match name {
        "hs" => Ok(hs_suite()),
        "hs-extended" => Ok(hs_extended_suite()),
        "svanberg" => Ok(svanberg_suite()),
        "svanberg-full" => Ok(svanberg_full_suite()),
        "toy" => Ok(toy_suite()),
        "all" => Ok(hs_suite().into_iter().chain(svanberg_suite()).chain(toy_suite()).collect()),
        other => Err(SuiteError::UnknownSuite(other.to_string())),
    }
}

/// Looks a case up by name. HS numbers may be written with or without
/// leading zeros (`hs12`, `HS012`); Svanberg instances as `svanberg-<n>`.
pub fn find_case(name: &str) -> Result<BenchmarkCase, SuiteError> {
    let key = name.trim().to_ascii_lowercase();
    if let Some(rest) = key.strip_prefix("svanberg-") {
        let n = rest.parse::<usize>().map_err(|_| SuiteError::UnknownProblem(name.to_string()))?;
        return svanberg(n, false);
    }
    let canonical = |prefix: &str, digits: &str| -> Option<String> {
        digits.parse::<u32>().ok().map(|v| format!("{prefix}{v:03}"))
    };
    let wanted = if let Some(d) = key.strip_prefix("hs") {
        canonical("hs", d)
    } else if let Some(d) = key.strip_prefix('s') {
        canonical("s", d)
    } else {
        Some(key.clone())
    };
    let wanted = wanted.ok_or_else(|| SuiteError::UnknownProblem(name.to_string()))?;
    hs_extended_suite()
        .into_iter()
        .chain(toy_suite())
        .find(|c| c.name() == wanted)
        .ok_or_else(|| SuiteError::UnknownProblem(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hs_suite_shape() {
        let s = hs_suite();
        assert_eq!(s.len(), 13);
        assert_eq!(s.iter().map(|c| c.initial_points.len()).sum::<usize>(), 14);
        assert_eq!(hs_extended_suite().iter().map(|c| c.initial_points.len()).sum::<usize>(), 17);
        let nm: Vec<(usize, usize)> = s.iter().map(|c| (c.problem.n(), c.problem.m())).collect();
        assert_eq!(
            nm,
            vec![(2, 1), (3, 1), (3, 7), (3, 6), (3, 8), (3, 4), (4, 3), (4, 10), (3, 8), (4, 7), (7, 4), (10, 8), (4, 3)]
        );
        for c in &s {
            for p in &c.initial_points {
                assert_eq!(p.x0.len(), c.problem.n());
            }
        }
    }

    #[test]
    fn reference_values() {
        let hs12 = find_case("hs12").unwrap();
        assert_eq!(hs12.expected_fv, Some(-30.0));
        let hs113 = find_case("HS113").unwrap();
        assert_eq!(hs113.initial_points[0].x0, vec![4.0, 10.0, 10.0, 2.0, 0.0, 11.0, 4.0, 0.0, 12.0, 10.0]);
        assert_eq!(hs113.expected_fv, Some(24.306209));
        let s10 = svanberg(10, true).unwrap();
        assert_eq!(s10.initial_points[0], start(&[0.0; 10], 15.731517));
        let s50 = svanberg(50, true).unwrap();
        assert_eq!(s50.initial_points[0].expected_fv, Some(82.581912));
        let s100 = svanberg(100, true).unwrap();
        let five = s100.initial_points.iter().find(|p| p.x0[0] == 5.0).unwrap();
        assert_eq!(five.expected_fv, Some(166.197178));
    }

    #[test]
    fn svanberg_dimension_errors() {
        assert!(matches!(svanberg(9, false), Err(SuiteError::UnsupportedDimension { n: 9, .. })));
        assert!(matches!(svanberg(12, true), Err(SuiteError::UnsupportedDimension { n: 12, .. })));
        let loose = svanberg(12, false).unwrap();
        assert_eq!(loose.expected_fv, None);
        assert_eq!(loose.problem.m(), 36);
    }

    #[test]
    fn lookup_and_suites() {
        assert_eq!(find_case("s264").unwrap().name(), "s264");
        assert_eq!(find_case("toy-circle").unwrap().name(), "toy-circle");
        assert!(matches!(find_case("hs999"), Err(SuiteError::UnknownProblem(_))));
        assert!(matches!(suite("nope"), Err(SuiteError::UnknownSuite(_))));
        assert_eq!(suite("svanberg").unwrap().iter().map(|c| c.initial_points.len()).sum::<usize>(), 6);
        assert_eq!(suite("all").unwrap().len(), 13 + 3 + 5);
    }

    #[test]
    fn tolerance_rule() {
        let c = find_case("hs100").unwrap();
        assert!((c.tolerance(682.56637) - 0.068256637).abs() < 1e-12);
        assert_eq!(c.tolerance(0.11111111), 1e-4);
        assert!(!c.fv_matches(0.2, 0.1111111));
    }

    #[test]
    fn json_export_round_trip() {
        let cases = toy_suite();
        let text = export_json(&cases);
        let back: Vec<ProblemDescription> = serde_json::from_str(&text).unwrap();
        assert_eq!(back.len(), 5);
        assert_eq!(back[1].name, "toy-quad2");
        assert_eq!(back[1].expected_fv, Some(0.5));
        assert_eq!(back[4].m, 6);
    }
}
