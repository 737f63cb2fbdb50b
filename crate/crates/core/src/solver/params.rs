use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ParamError {
    #[error("parameter {name} = {value} violates {rule}")]
    OutOfRange { name: &'static str, value: f64, rule: &'static str },
    #[error("unknown parameter key `{0}`")]
    UnknownKey(String),
    #[error("cannot parse value `{value}` for `{key}`")]
    BadValue { key: String, value: String },
}

/// Tuning constants of the iteration.
///
/// Field names follow the role each constant plays; the doc on each field
/// gives the admissible range enforced by [`SolverParams::validate`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverParams {
    /// Armijo fraction of the fallback search along the combined direction, in (0, 1).
    pub gamma: f64,
    /// Backtracking ratio of the fallback search, in (0, 1).
    pub eta: f64,
    /// Exponent and tilting fraction of the combined direction, 0 < theta < sigma.
    pub theta: f64,
    /// Exponent applied to the violation in both linear systems, theta < sigma < 1.
    pub sigma: f64,
    /// Violation exponent in the correction acceptance test, in (0, sigma).
    pub varrho: f64,
    /// Weight of the violation term in the correction acceptance test, > 0.
    pub xi: f64,
    /// Weight of the norm term in the correction acceptance test, > 0.
    pub zeta: f64,
    /// Armijo fraction of the search along the corrected direction, in (0, 0.5).
    pub alpha: f64,
    /// Objective-increase allowance while infeasible, > 1.
    pub rho: f64,
    /// Norm exponent in the correction acceptance test, > 2.
    pub delta: f64,
    /// Norm exponent in the correction system, in (2, 3).
    pub tau: f64,
    /// The corrected search gives up once the trial step drops below this, in (0, 1).
    pub ls_epsilon: f64,
    /// Stop when `‖d0‖ < tol_d0` at a feasible point.
    pub tol_d0: f64,
    pub max_iter: usize,
    pub max_step5_backtracks: usize,
    /// Seed each QP with the previous working set.
    pub warm_start: bool,
}

impl Default for SolverParams {
    fn default() -> Self {
        SolverParams {
            gamma: 0.5,
            eta: 0.5,
            theta: 0.4,
            sigma: 0.6,
            varrho: 0.4,
            xi: 1.0,
            zeta: 0.2,
            alpha: 0.3,
            rho: 1.5,
            delta: 3.0,
            tau: 2.5,
            ls_epsilon: 0.125,
            tol_d0: 1e-6,
            max_iter: 1000,
            max_step5_backtracks: 60,
            warm_start: true,
        }
    }
}

/// Keys accepted by [`SolverParams::set`].
pub const PARAM_KEYS: &[&str] = &[
    "gamma",
    "eta",
    "theta",
    "sigma",
    "varrho",
    "xi",
    "zeta",
    "alpha",
    "rho",
    "delta",
    "tau",
    "ls_epsilon",
    "tol_d0",
    "max_iter",
    "max_step5_backtracks",
    "warm_start",
];

fn open_unit(name: &'static str, v: f64) -> Result<(), ParamError> {
    if v > 0.0 && v < 1.0 {
        Ok(())
    } else {
        Err(ParamError::OutOfRange { name, value: v, rule: "0 < value < 1" })
    }
}

impl SolverParams {
    pub fn validate(&self) -> Result<(), ParamError> {
        open_unit("gamma", self.gamma)?;
        open_unit("eta", self.eta)?;
        open_unit("ls_epsilon", self.ls_epsilon)?;
        open_unit("sigma", self.sigma)?;
        let check = |ok: bool, name, value, rule| {
            if ok {
                Ok(())
            } else {
                Err(ParamError::OutOfRange { name, value, rule })
            }
        };
        check(self.theta > 0.0 && self.theta < self.sigma, "theta", self.theta, "0 < theta < sigma")?;
        check(self.varrho > 0.0 && self.varrho < self.sigma, "varrho", self.varrho, "0 < varrho < sigma")?;
        check(self.xi > 0.0, "xi", self.xi, "xi > 0")?;
        check(self.zeta > 0.0, "zeta", self.zeta, "zeta > 0")?;
        check(self.alpha > 0.0 && self.alpha < 0.5, "alpha", self.alpha, "0 < alpha < 0.5")?;
        check(self.rho > 1.0, "rho", self.rho, "rho > 1")?;
        check(self.delta > 2.0, "delta", self.delta, "delta > 2")?;
        check(self.tau > 2.0 && self.tau < 3.0, "tau", self.tau, "2 < tau < 3")?;
        check(self.tol_d0 > 0.0, "tol_d0", self.tol_d0, "tol_d0 > 0")?;
        check(self.max_iter >= 1, "max_iter", self.max_iter as f64, "max_iter >= 1")?;
        check(
            self.max_step5_backtracks >= 1,
            "max_step5_backtracks",
            self.max_step5_backtracks as f64,
            "max_step5_backtracks >= 1",
        )?;
        Ok(())
    }

    /// Sets one field from its textual form. Does not validate ranges.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ParamError> {
        let bad = || ParamError::BadValue { key: key.to_string(), value: value.to_string() };
        let real = || value.trim().parse::<f64>().map_err(|_| bad());
        let count = || value.trim().parse::<usize>().map_err(|_| bad());
        match key {
            "gamma" => self.gamma = real()?,
            "eta" => self.eta = real()?,
            "theta" => self.theta = real()?,
            "sigma" => self.sigma = real()?,
            "varrho" => self.varrho = real()?,
            "xi" => self.xi = real()?,
            "zeta" => self.zeta = real()?,
            "alpha" => self.alpha = real()?,
            "rho" => self.rho = real()?,
            "delta" => self.delta = real()?,
            "tau" => self.tau = real()?,
            "ls_epsilon" | "epsilon" => self.ls_epsilon = real()?,
            "tol_d0" | "tol" => self.tol_d0 = real()?,
            "max_iter" => self.max_iter = count()?,
            "max_step5_backtracks" => self.max_step5_backtracks = count()?,
            "warm_start" => {
                self.warm_start = match value.trim() {
                    "true" | "1" | "yes" => true,
                    "false" | "0" | "no" => false,
                    _ => return Err(bad()),
                }
            }
            _ => return Err(ParamError::UnknownKey(key.to_string())),
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        let p = SolverParams::default();
        p.validate().unwrap();
        assert_eq!(p.ls_epsilon, 0.5f64.powi(3));
    }

    #[test]
    fn interval_violations_rejected() {
        let mut p = SolverParams { theta: 0.7, ..Default::default() };
        assert!(matches!(p.validate(), Err(ParamError::OutOfRange { name: "theta", .. })));
        p = SolverParams { tau: 3.0, ..Default::default() };
        assert!(matches!(p.validate(), Err(ParamError::OutOfRange { name: "tau", .. })));
        p = SolverParams { alpha: 0.5, ..Default::default() };
        assert!(p.validate().is_err());
        p = SolverParams { rho: 1.0, ..Default::default() };
        assert!(p.validate().is_err());
        p = SolverParams { varrho: 0.6, ..Default::default() };
        assert!(p.validate().is_err());
    }

    #[test]
    fn set_by_key() {
        let mut p = SolverParams::default();
        p.set("sigma", "0.7").unwrap();
        p.set("max_iter", "12").unwrap();
        p.set("warm_start", "false").unwrap();
        assert_eq!((p.sigma, p.max_iter, p.warm_start), (0.7, 12, false));
        assert_eq!(p.set("bogus", "1"), Err(ParamError::UnknownKey("bogus".into())));
        assert!(matches!(p.set("eta", "abc"), Err(ParamError::BadValue { .. })));
        for key in PARAM_KEYS {
            let value = if *key == "warm_start" { "true" } else { "2" };
            p.set(key, value).unwrap();
        }
    }
}
