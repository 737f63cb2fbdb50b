//! The two backtracking searches. Constraints are evaluated first at each
//! trial; the objective only when every constraint test passes. A trial point
//! where some function is not finite is rejected like any other failing trial.

use crate::model::{Evaluator, ModelError};

use super::classify::{pow0, Classification};
use super::params::SolverParams;

/// Accepted trial with the function values computed there.
#[derive(Debug, Clone, PartialEq)]
pub struct Accepted {
    pub t: f64,
    pub x: Vec<f64>,
    pub f0: f64,
    pub fvals: Vec<f64>,
    pub trials: usize,
}

enum Probe {
    Accept(Accepted),
    Reject,
}

/// Tests one trial `x + t d`: `f_j <= plus_bound` on violated constraints,
/// `f_j <= 0` on satisfied ones, then `f0 <= f0_bound`.
fn probe(
    ev: &mut Evaluator<'_>,
    x: &[f64],
    d: &[f64],
    t: f64,
    cls: &Classification,
    plus_bound: f64,
    f0_bound: f64,
    trials: usize,
) -> Result<Probe, ModelError> {
    let xt: Vec<f64> = x.iter().zip(d).map(|(a, b)| a + t * b).collect();
    let fvals = match ev.constraints(&xt) {
        Ok(v) => v,
        Err(ModelError::NonFiniteValue { .. }) => return Ok(Probe::Reject),
        Err(e) => return Err(e),
    };
    if cls.plus.iter().any(|&j| !(fvals[j] <= plus_bound)) || cls.minus.iter().any(|&j| !(fvals[j] <= 0.0)) {
        return Ok(Probe::Reject);
    }
    let f0 = match ev.objective(&xt) {
        Ok(v) => v,
        Err(ModelError::NonFiniteValue { .. }) => return Ok(Probe::Reject),
        Err(e) => return Err(e),
    };
    if !(f0 <= f0_bound) {
        return Ok(Probe::Reject);
    }
    Ok(Probe::Accept(Accepted { t, x: xt, f0, fvals, trials }))
}

/// Search along the corrected direction over `t = 1, 1/2, 1/4, ...`, giving up
/// once the next trial would fall below `ls_epsilon`.
#[allow(clippy::too_many_arguments)]
pub fn line_search_step3(
    ev: &mut Evaluator<'_>,
    x: &[f64],
    f0x: f64,
    cls: &Classification,
    d: &[f64],
    g0d0: f64,
    d0_norm: f64,
    p: &SolverParams,
) -> Result<Option<Accepted>, ModelError> {
    let phi = cls.phi;
    let shift = pow0(d0_norm, p.tau) + pow0(phi, p.sigma);
    let allowance = p.rho * (1.0 - p.alpha) * pow0(phi, p.theta);
    let mut t = 1.0;
    let mut trials = 0;
    while t >= p.ls_epsilon {
        trials += 1;
        let plus_bound = phi - p.alpha * t * shift;
        let f0_bound = f0x + p.alpha * t * g0d0 + allowance * t;
        if let Probe::Accept(a) = probe(ev, x, d, t, cls, plus_bound, f0_bound, trials)? {
            return Ok(Some(a));
        }
        t *= 0.5;
    }
    Ok(None)
}

/// Search along the combined direction over `t = 1, η, η², ...`; `None` after
/// `max_step5_backtracks` rejected trials.
#[allow(clippy::too_many_arguments)]
pub fn line_search_step5(
    ev: &mut Evaluator<'_>,
    x: &[f64],
    f0x: f64,
    cls: &Classification,
    q: &[f64],
    g0q: f64,
    beta: f64,
    d0_norm: f64,
    p: &SolverParams,
) -> Result<Option<Accepted>, ModelError> {
    let phi = cls.phi;
    let shift = beta * (d0_norm + pow0(phi, p.sigma));
    let allowance = p.rho * (1.0 - p.gamma) * pow0(phi, p.theta);
    let mut t = 1.0;
    for trials in 1..=p.max_step5_backtracks {
        let plus_bound = phi - p.gamma * t * shift;
        let f0_bound = f0x + p.gamma * t * g0q + allowance * t;
        if let Probe::Accept(a) = probe(ev, x, q, t, cls, plus_bound, f0_bound, trials)? {
            return Ok(Some(a));
        }
        t *= p.eta;
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::Problem;
    use crate::solver::classify::classify;

    /// 1-D objective `kind` with the constraint `x - c`.
    struct OneD {
        kind: u8,
        c: f64,
    }

    impl Problem for OneD {
        fn name(&self) -> &str {
            "1d"
        }
        fn n(&self) -> usize {
            1
        }
        fn m(&self) -> usize {
            1
        }
        fn objective(&self, x: &[f64]) -> f64 {
            match self.kind {
                0 => x[0] * x[0],
                1 => -x[0],
                _ => 7.0,
            }
        }
        fn objective_grad(&self, x: &[f64], g: &mut [f64]) {
            g[0] = match self.kind {
                0 => 2.0 * x[0],
                1 => -1.0,
                _ => 0.0,
            };
        }
        fn constraint(&self, _j: usize, x: &[f64]) -> f64 {
            x[0] - self.c
        }
        fn constraint_grad(&self, _j: usize, _x: &[f64], g: &mut [f64]) {
            g[0] = 1.0;
        }
    }

    fn run3(p: &OneD, x: f64, d: f64, g0d0: f64) -> (Option<Accepted>, u64) {
        let mut ev = Evaluator::new(p);
        let cls = classify(&[p.constraint(0, &[x])]);
        let r = line_search_step3(&mut ev, &[x], p.objective(&[x]), &cls, &[d], g0d0, d.abs(), &SolverParams::default())
            .unwrap();
        (r, ev.counters.nf)
    }

    #[test]
    fn step3_unit_step() {
        let (a, _) = run3(&OneD { kind: 0, c: 10.0 }, 1.0, -1.0, -2.0);
        let a = a.unwrap();
        assert_eq!((a.t, a.x[0], a.f0), (1.0, 0.0, 0.0));
    }

    #[test]
    fn step3_backtracks_to_quarter() {
        let (a, _) = run3(&OneD { kind: 0, c: 10.0 }, 1.0, -3.0, -6.0);
        let a = a.unwrap();
        assert_eq!((a.t, a.trials), (0.25, 3));
    }

    #[test]
    fn step3_exhausts_after_four_trials() {
        // x = 0 sits on f1 = x, every trial pushes it positive
        let (a, nf) = run3(&OneD { kind: 1, c: 0.0 }, 0.0, 1.0, -1.0);
        assert!(a.is_none());
        assert_eq!(nf, 4);
    }

    fn run5(p: &OneD, x: f64, q: f64, g0q: f64, beta: f64, d0_norm: f64) -> Accepted {
        let mut ev = Evaluator::new(p);
        let cls = classify(&[p.constraint(0, &[x])]);
        line_search_step5(&mut ev, &[x], p.objective(&[x]), &cls, &[q], g0q, beta, d0_norm, &SolverParams::default())
            .unwrap()
            .unwrap()
    }

    #[test]
    fn step5_examples() {
        let p = OneD { kind: 0, c: 10.0 };
        assert_eq!(run5(&p, 1.0, -1.0, -2.0, 1.0, 1.0).t, 1.0);
        assert_eq!(run5(&p, 1.0, -3.0, -6.0, 1.0, 1.0).t, 0.25);
        // infeasible start, constant objective: f1(x) = 1, f1(x + q) = -1
        let p = OneD { kind: 2, c: 0.0 };
        let a = run5(&p, 1.0, -2.0, 0.0, 1.0, 1.0);
        assert_eq!((a.t, a.fvals[0]), (1.0, -1.0));
    }

    #[test]
    fn step5_failure_after_cap() {
        let p = OneD { kind: 1, c: 0.0 };
        let mut ev = Evaluator::new(&p);
        let cls = classify(&[0.0]);
        let params = SolverParams { max_step5_backtracks: 5, ..Default::default() };
        let r = line_search_step5(&mut ev, &[0.0], 0.0, &cls, &[1.0], -1.0, 1.0, 1.0, &params).unwrap();
        assert!(r.is_none());
        assert_eq!(ev.counters.nf, 5);
    }
}
