use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{cholesky, dot, norm2, LinalgError, Matrix};
use crate::model::{Evaluator, ModelError, Problem};
use crate::qp::{solve_qp, solve_qp_warm, verify_kkt, QpError};

use super::bfgs::{bfgs_update, UpdateKind};
use super::classify::{classify, pow0, Classification};
use super::directions::{
    build_qp, check_corrected_descent, combine_q, compute_beta, compute_ftilde, kkt_stop_test, SaddleSystem,
};
use super::line_search::{line_search_step3, line_search_step5, Accepted};
use super::params::{ParamError, SolverParams};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("QP subproblem failed: {0}")]
    Qp(#[from] QpError),
    #[error("saddle system is degenerate: {0}")]
    Degenerate(#[from] LinalgError),
    #[error("no acceptable step after {trials} trials along the combined direction")]
    LineSearchFailure { trials: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolveStatus {
    KktPoint,
    MaxIterations,
    LineSearchFailure,
    DegenerateSystem,
    QpFailure,
    /// A function or gradient was not finite at an accepted point.
    EvaluationFailure,
}

impl SolveError {
    pub fn status(&self) -> SolveStatus {
        match self {
            SolveError::Qp(_) => SolveStatus::QpFailure,
            SolveError::Degenerate(_) => SolveStatus::DegenerateSystem,
            SolveError::LineSearchFailure { .. } => SolveStatus::LineSearchFailure,
            SolveError::Params(_) | SolveError::Model(_) => SolveStatus::EvaluationFailure,
        }
    }
}

/// Which path an iteration took: `I` accepted the corrected direction,
/// `II` fell back to the combined direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cycle {
    I,
    II,
}

/// Telemetry of one accepted iteration, including the quantities the
/// invariant checks are phrased in.
///
/// Slacks are `bound - value`, so a negative slack is a violation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IterationRecord {
    pub k: usize,
    pub phi: f64,
    pub f0: f64,
    pub d0_norm: f64,
    pub g0_norm: f64,
    pub cycle: Cycle,
    pub t: f64,
    pub trials: usize,
    pub step_norm: f64,
    pub corrected_descent_ok: bool,
    pub qp_iterations: usize,
    pub qp_kkt_residual: f64,
    pub n_shifted_active: usize,
    pub v_min_pivot: f64,
    pub sle_correction_residual: f64,
    pub sle_feasible_residual: Option<f64>,
    /// `max |g_jᵀd̃ + ‖d0‖ + φ^σ|` over `f̄_j = 0`.
    pub dtilde_active_defect: Option<f64>,
    pub beta: Option<f64>,
    pub beta_bound_slack: Option<f64>,
    pub q_descent_slack: Option<f64>,
    pub q_active_slack: Option<f64>,
    pub bfgs: UpdateKind,
    /// Cholesky check of the matrix carried into the next iteration.
    pub b_next_spd: bool,
    /// Every constraint satisfied before the step is still satisfied after it.
    pub satisfied_kept: bool,
    pub phi_next: f64,
    pub f0_next: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub problem: String,
    pub status: SolveStatus,
    pub message: Option<String>,
    pub x_final: Vec<f64>,
    pub fv: f64,
    pub phi_final: f64,
    pub ni: usize,
    pub nio: usize,
    pub nii: usize,
    pub nf0: u64,
    pub nf: u64,
    pub ng0: u64,
    pub ng: u64,
    pub n_cycle1: usize,
    pub n_cycle2: usize,
    pub wall_time_seconds: f64,
    pub warnings: Vec<String>,
    pub trace: Vec<IterationRecord>,
}

/// Current iterate with everything evaluated there.
#[derive(Debug, Clone)]
pub struct IterateState {
    pub k: usize,
    pub x: Vec<f64>,
    pub b: Matrix,
    pub f0: f64,
    pub fvals: Vec<f64>,
    pub cls: Classification,
    pub g0: Vec<f64>,
    pub jac: Matrix,
    pub working_set: Vec<usize>,
}

pub enum StepOutcome {
    Converged,
    Advanced(Box<IterationRecord>),
}

pub struct Solver<'a> {
    ev: Evaluator<'a>,
    params: SolverParams,
    state: IterateState,
    warnings: Vec<String>,
}

impl<'a> Solver<'a> {
    pub fn new(problem: &'a dyn Problem, x0: &[f64], params: SolverParams) -> Result<Self, SolveError> {
        params.validate()?;
        let mut ev = Evaluator::new(problem);
        let fvals = ev.constraints(x0)?;
        let f0 = ev.objective(x0)?;
        let g0 = ev.objective_grad(x0)?;
        let jac = ev.constraint_grads(x0)?;
        let cls = classify(&fvals);
        let state = IterateState {
            k: 0,
            x: x0.to_vec(),
            b: Matrix::identity(x0.len()),
            f0,
            fvals,
            cls,
            g0,
            jac,
            working_set: Vec::new(),
        };
        Ok(Solver { ev, params, state, warnings: Vec::new() })
    }

    pub fn state(&self) -> &IterateState {
        &self.state
    }

    pub fn evaluator(&self) -> &Evaluator<'a> {
        &self.ev
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// One pass of the method from the current iterate.
    pub fn step(&mut self) -> Result<StepOutcome, SolveError> {
        let p = self.params.clone();
        let st = &self.state;
        let phi = st.cls.phi;

        let qp = build_qp(&st.b, &st.g0, &st.jac, &st.cls.fbar)?;
        let sol = if p.warm_start { solve_qp_warm(&qp, &st.working_set)? } else { solve_qp(&qp)? };
        let d0 = sol.d0.clone();
        let d0_norm = norm2(&d0);
        if kkt_stop_test(d0_norm, phi, p.tol_d0) {
            return Ok(StepOutcome::Converged);
        }
        let qp_kkt_residual = verify_kkt(&qp, &sol);

        let ftilde = compute_ftilde(&mut self.ev, &st.x, &d0, &st.fvals, &st.jac)?;
        let sys = SaddleSystem::new(&st.b, &st.jac, &st.cls.fbar, &d0)?;
        let corr = sys.solve_correction(d0_norm, phi, &ftilde, &p);
        let d: Vec<f64> = d0.iter().zip(&corr.d).map(|(a, b)| a + b).collect();
        let g0d0 = dot(&st.g0, &d0);
        let corrected_descent_ok = check_corrected_descent(g0d0, d0_norm, norm2(&d), phi, &p);

        let mut accepted: Option<(Accepted, Cycle, Vec<f64>)> = None;
        if corrected_descent_ok {
            if let Some(a) = line_search_step3(&mut self.ev, &st.x, st.f0, &st.cls, &d, g0d0, d0_norm, &p)? {
                accepted = Some((a, Cycle::I, d));
            }
        }

        let mut sle_feasible_residual = None;
        let mut dtilde_active_defect = None;
        let mut beta_out = None;
        let mut beta_bound_slack = None;
        let mut q_descent_slack = None;
        let mut q_active_slack = None;
        let (acc, cycle, dir) = match accepted {
            Some(v) => v,
            None => {
                let feas = sys.solve_feasible(d0_norm, phi, p.sigma);
                let shift = d0_norm + pow0(phi, p.sigma);
                sle_feasible_residual = Some(feas.rel_residual);
                dtilde_active_defect = st
                    .cls
                    .active
                    .iter()
                    .map(|&j| (dot(st.jac.row(j), &feas.d) + shift).abs())
                    .fold(None, |acc: Option<f64>, v| Some(acc.map_or(v, |a| a.max(v))));
                let beta = compute_beta(g0d0, dot(&st.g0, &feas.d), phi, p.theta);
                let q = combine_q(&d0, &feas.d, beta);
                let g0q = dot(&st.g0, &q);
                beta_out = Some(beta);
                beta_bound_slack = Some(p.theta * g0d0 + pow0(phi, p.theta) - g0q);
                q_descent_slack = Some(-0.5 * p.theta * st.b.quad_form(&d0) + pow0(phi, p.theta) - g0q);
                q_active_slack = st
                    .cls
                    .active
                    .iter()
                    .map(|&j| -beta * shift - dot(st.jac.row(j), &q))
                    .fold(None, |acc: Option<f64>, v| Some(acc.map_or(v, |a| a.min(v))));
                match line_search_step5(&mut self.ev, &st.x, st.f0, &st.cls, &q, g0q, beta, d0_norm, &p)? {
                    Some(a) => (a, Cycle::II, q),
                    None => return Err(SolveError::LineSearchFailure { trials: p.max_step5_backtracks }),
                }
            }
        };

        let g0_next = self.ev.objective_grad(&acc.x)?;
        let jac_next = self.ev.constraint_grads(&acc.x)?;
        let s: Vec<f64> = acc.x.iter().zip(&st.x).map(|(a, b)| a - b).collect();
        let lag_next = lagrangian_grad(&g0_next, &jac_next, &sol.lambda);
        let lag_now = lagrangian_grad(&st.g0, &st.jac, &sol.lambda);
        let y: Vec<f64> = lag_next.iter().zip(&lag_now).map(|(a, b)| a - b).collect();
        let (b_next, bfgs) = bfgs_update(&st.b, &s, &y);
        if bfgs == UpdateKind::Rejected {
            self.warnings.push(format!("iteration {}: quasi-Newton update not positive definite, matrix kept", st.k));
        }
        let b_next_spd = cholesky(&b_next).is_ok();
        let cls_next = classify(&acc.fvals);
        let satisfied_kept = st.cls.minus.iter().all(|&j| acc.fvals[j] <= 0.0);

        let record = IterationRecord {
            k: st.k,
            phi,
            f0: st.f0,
            d0_norm,
            g0_norm: norm2(&st.g0),
            cycle,
            t: acc.t,
            trials: acc.trials,
            step_norm: acc.t * norm2(&dir),
            corrected_descent_ok,
            qp_iterations: sol.iterations,
            qp_kkt_residual,
            n_shifted_active: st.cls.active.len(),
            v_min_pivot: sys.factorization().min_pivot(),
            sle_correction_residual: corr.rel_residual,
            sle_feasible_residual,
            dtilde_active_defect,
            beta: beta_out,
            beta_bound_slack,
            q_descent_slack,
            q_active_slack,
            bfgs,
            b_next_spd,
            satisfied_kept,
            phi_next: cls_next.phi,
            f0_next: acc.f0,
        };

        self.state = IterateState {
            k: st.k + 1,
            x: acc.x,
            b: b_next,
            f0: acc.f0,
            fvals: acc.fvals,
            cls: cls_next,
            g0: g0_next,
            jac: jac_next,
            working_set: sol.active,
        };
        Ok(StepOutcome::Advanced(Box::new(record)))
    }
}

fn lagrangian_grad(g0: &[f64], jac: &Matrix, lambda: &[f64]) -> Vec<f64> {
    let mut g = g0.to_vec();
    for (j, &l) in lambda.iter().enumerate() {
        if l != 0.0 {
            crate::linalg::axpy(l, jac.row(j), &mut g);
        }
    }
    g
}

/// Runs the method from `x0` with `B0 = I` until a KKT point is detected, the
/// iteration cap is hit or a step fails.
///
/// Setup problems (invalid parameters, wrong dimension, non-finite values at
/// `x0`) are returned as errors; failures during the iteration are reported
/// through [`SolveReport::status`].
pub fn solve(problem: &dyn Problem, x0: &[f64], params: &SolverParams) -> Result<SolveReport, SolveError> {
    let start = Instant::now();
    let mut solver = Solver::new(problem, x0, params.clone())?;
    let mut trace = Vec::new();
    let (status, message) = loop {
        if trace.len() >= params.max_iter {
            break (SolveStatus::MaxIterations, None);
        }
        match solver.step() {
            Ok(StepOutcome::Converged) => break (SolveStatus::KktPoint, None),
            Ok(StepOutcome::Advanced(r)) => trace.push(*r),
            Err(e) => break (e.status(), Some(e.to_string())),
        }
    };
    let wall_time_seconds = start.elapsed().as_secs_f64();
    let nio = trace.iter().filter(|r| r.phi > 0.0).count();
    let n_cycle1 = trace.iter().filter(|r| r.cycle == Cycle::I).count();
    let st = solver.state();
    let c = solver.evaluator().counters;
    Ok(SolveReport {
        problem: problem.name().to_string(),
        status,
        message,
        x_final: st.x.clone(),
        fv: st.f0,
        phi_final: st.cls.phi,
        ni: trace.len(),
        nio,
        nii: trace.len() - nio,
        nf0: c.nf0,
        nf: c.nf,
        ng0: c.ng0,
        ng: c.ng,
        n_cycle1,
        n_cycle2: trace.len() - n_cycle1,
        wall_time_seconds,
        warnings: solver.warnings().to_vec(),
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `min x²  s.t.  x - 10 <= 0`.
    struct Parabola;
    impl Problem for Parabola {
        fn name(&self) -> &str {
            "parabola"
        }
        fn n(&self) -> usize {
            1
        }
        fn m(&self) -> usize {
            1
        }
        fn objective(&self, x: &[f64]) -> f64 {
            x[0] * x[0]
        }
        fn objective_grad(&self, x: &[f64], g: &mut [f64]) {
            g[0] = 2.0 * x[0];
        }
        fn constraint(&self, _j: usize, x: &[f64]) -> f64 {
            x[0] - 10.0
        }
        fn constraint_grad(&self, _j: usize, _x: &[f64], g: &mut [f64]) {
            g[0] = 1.0;
        }
    }

    #[test]
    fn parabola_from_five() {
        let r = solve(&Parabola, &[5.0], &SolverParams::default()).unwrap();
        assert_eq!(r.status, SolveStatus::KktPoint);
        assert!(r.x_final[0].abs() < 1e-6);
        assert!(r.fv.abs() <= 1e-8);
        assert_eq!(r.ni, r.nio + r.nii);
        assert_eq!(r.nio, 0);
    }

    #[test]
    fn starting_at_solution_converges_without_steps() {
        let r = solve(&Parabola, &[0.0], &SolverParams::default()).unwrap();
        assert_eq!(r.status, SolveStatus::KktPoint);
        assert_eq!(r.ni, 0);
        assert!(r.trace.is_empty());
    }

    #[test]
    fn infeasible_start_enters_feasible_set() {
        let r = solve(&Parabola, &[25.0], &SolverParams::default()).unwrap();
        assert_eq!(r.status, SolveStatus::KktPoint);
        assert!(r.nio >= 1);
        assert!(r.fv.abs() <= 1e-8);
    }

    #[test]
    fn cycle_bookkeeping() {
        let r = solve(&Parabola, &[5.0], &SolverParams::default()).unwrap();
        for rec in &r.trace {
            match rec.cycle {
                Cycle::I => assert!(rec.beta.is_none()),
                Cycle::II => assert!(rec.beta.is_some()),
            }
        }
    }

    #[test]
    fn iteration_cap() {
        let params = SolverParams { max_iter: 1, ..Default::default() };
        let r = solve(&Parabola, &[25.0], &params).unwrap();
        assert_eq!(r.status, SolveStatus::MaxIterations);
        assert_eq!(r.ni, 1);
    }

    #[test]
    fn setup_errors() {
        assert!(matches!(
            solve(&Parabola, &[1.0, 2.0], &SolverParams::default()),
            Err(SolveError::Model(ModelError::Dimension { .. }))
        ));
        let bad = SolverParams { sigma: 1.5, ..Default::default() };
        assert!(matches!(solve(&Parabola, &[1.0], &bad), Err(SolveError::Params(_))));
    }
}
