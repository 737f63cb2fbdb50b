//! Problem abstraction and counted evaluation.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModelError {
    #[error("non-finite {what} at the evaluation point")]
    NonFiniteValue { what: String },
    #[error("point has dimension {got}, problem has n = {expected}")]
    Dimension { expected: usize, got: usize },
}

/// An inequality-constrained program `min f0(x)  s.t.  f_j(x) <= 0`.
///
/// Constraint indices are zero-based. Implementations must be deterministic
/// and free of side effects; gradients are analytic.
pub trait Problem: Send + Sync {
    fn name(&self) -> &str;
    fn n(&self) -> usize;
    fn m(&self) -> usize;

    fn objective(&self, x: &[f64]) -> f64;
    fn objective_grad(&self, x: &[f64], grad: &mut [f64]);
    fn constraint(&self, j: usize, x: &[f64]) -> f64;
    fn constraint_grad(&self, j: usize, x: &[f64], grad: &mut [f64]);

    /// Reference optimal value, when one is known.
    fn known_fv(&self) -> Option<f64> {
        None
    }

    fn default_x0(&self) -> Vec<f64> {
        vec![0.0; self.n()]
    }
}

/// Evaluation counts for one solver run.
///
/// `nf` counts individual constraint-function evaluations, so evaluating all
/// constraints at one point adds `m`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalCounters {
    pub nf0: u64,
    pub nf: u64,
    pub ng0: u64,
    pub ng: u64,
}

/// Counting front end over a [`Problem`].
pub struct Evaluator<'a> {
    problem: &'a dyn Problem,
    pub counters: EvalCounters,
}

impl<'a> Evaluator<'a> {
    pub fn new(problem: &'a dyn Problem) -> Self {
        Evaluator { problem, counters: EvalCounters::default() }
    }

    pub fn problem(&self) -> &'a dyn Problem {
        self.problem
    }

    fn check_dim(&self, x: &[f64]) -> Result<(), ModelError> {
        if x.len() != self.problem.n() {
            return Err(ModelError::Dimension { expected: self.problem.n(), got: x.len() });
        }
        Ok(())
    }

    pub fn objective(&mut self, x: &[f64]) -> Result<f64, ModelError> {
        self.check_dim(x)?;
        self.counters.nf0 += 1;
        let v = self.problem.objective(x);
        if !v.is_finite() {
            return Err(ModelError::NonFiniteValue { what: "objective".into() });
        }
        Ok(v)
    }

    /// All constraint values `(f_1(x), ..., f_m(x))`.
    pub fn constraints(&mut self, x: &[f64]) -> Result<Vec<f64>, ModelError> {
        self.check_dim(x)?;
        let m = self.problem.m();
        self.counters.nf += m as u64;
        let vals: Vec<f64> = (0..m).map(|j| self.problem.constraint(j, x)).collect();
        if let Some(j) = vals.iter().position(|v| !v.is_finite()) {
            return Err(ModelError::NonFiniteValue { what: format!("constraint {j}") });
        }
        Ok(vals)
    }

    pub fn objective_grad(&mut self, x: &[f64]) -> Result<Vec<f64>, ModelError> {
        self.check_dim(x)?;
        self.counters.ng0 += 1;
        let mut g = vec![0.0; x.len()];
        self.problem.objective_grad(x, &mut g);
        if !crate::linalg::all_finite(&g) {
            return Err(ModelError::NonFiniteValue { what: "objective gradient".into() });
        }
        Ok(g)
    }

    /// Constraint Jacobian, one row per constraint.
    pub fn constraint_grads(&mut self, x: &[f64]) -> Result<crate::linalg::Matrix, ModelError> {
        self.check_dim(x)?;
        let (n, m) = (self.problem.n(), self.problem.m());
        self.counters.ng += m as u64;
        let mut jac = crate::linalg::Matrix::zeros(m, n);
        for j in 0..m {
            self.problem.constraint_grad(j, x, jac.row_mut(j));
        }
        if !jac.is_finite() {
            return Err(ModelError::NonFiniteValue { what: "constraint gradient".into() });
        }
        Ok(jac)
    }
}

/// Largest relative discrepancy between analytic gradients and central
/// differences over the objective and every constraint.
///
/// The step for coordinate `i` is `1e-6 * (1 + |x_i|)`. For each function the
/// error is `‖g - g_fd‖∞ / max(1, ‖g_fd‖∞)`.
pub fn check_gradients(p: &dyn Problem, x: &[f64]) -> Result<f64, ModelError> {
    let n = p.n();
    if x.len() != n {
        return Err(ModelError::Dimension { expected: n, got: x.len() });
    }
    let mut worst = 0.0f64;
    let mut analytic = vec![0.0; n];
    let mut fd = vec![0.0; n];
    let mut xp = x.to_vec();
    for j in 0..=p.m() {
        let eval = |z: &[f64]| if j == 0 { p.objective(z) } else { p.constraint(j - 1, z) };
        if j == 0 {
            p.objective_grad(x, &mut analytic);
        } else {
            p.constraint_grad(j - 1, x, &mut analytic);
        }
        for i in 0..n {
            let h = 1e-6 * (1.0 + x[i].abs());
            xp[i] = x[i] + h;
            let fp = eval(&xp);
            xp[i] = x[i] - h;
            let fm = eval(&xp);
            xp[i] = x[i];
            fd[i] = (fp - fm) / (2.0 * h);
        }
        let what = if j == 0 { "objective".to_string() } else { format!("constraint {}", j - 1) };
        if !crate::linalg::all_finite(&fd) || !crate::linalg::all_finite(&analytic) {
            return Err(ModelError::NonFiniteValue { what });
        }
        let err = crate::linalg::norm_inf(&crate::linalg::sub(&analytic, &fd));
        worst = worst.max(err / crate::linalg::norm_inf(&fd).max(1.0));
    }
    Ok(worst)
}
