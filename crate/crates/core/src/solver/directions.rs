//! Search directions: the QP subproblem, the shared saddle system and the
//! convex combination used when the corrected step is rejected.

use crate::linalg::{dot, lu_factor, norm2, LinalgError, LuFactorization, Matrix};
use crate::model::{Evaluator, ModelError};
use crate::qp::{QpError, QpProblem};

use super::classify::pow0;
use super::params::SolverParams;

/// QP with constraints `f̄_j + g_jᵀd <= 0` for every constraint.
pub fn build_qp(b: &Matrix, g0: &[f64], jac: &Matrix, fbar: &[f64]) -> Result<QpProblem, QpError> {
    QpProblem::new(b.clone(), g0.to_vec(), jac.clone(), fbar.to_vec())
}

pub fn kkt_stop_test(d0_norm: f64, phi: f64, tol_d0: f64) -> bool {
    d0_norm < tol_d0 && phi == 0.0
}

/// `[[B, N], [Nᵀ, -D]]` where the columns of `N` are the constraint gradients
/// and `D_j = |f̄_j| (|f̄_j + g_jᵀd0| + ‖d0‖)`.
pub fn assemble_v(b: &Matrix, jac: &Matrix, fbar: &[f64], d0: &[f64]) -> Matrix {
    let n = b.rows();
    let m = jac.rows();
    let d0_norm = norm2(d0);
    let mut v = Matrix::zeros(n + m, n + m);
    for i in 0..n {
        for k in 0..n {
            v[(i, k)] = b[(i, k)];
        }
    }
    for j in 0..m {
        let g = jac.row(j);
        for i in 0..n {
            v[(i, n + j)] = g[i];
            v[(n + j, i)] = g[i];
        }
        let fb = fbar[j];
        v[(n + j, n + j)] = if fb == 0.0 { 0.0 } else { -fb.abs() * ((fb + dot(g, d0)).abs() + d0_norm) };
    }
    v
}

/// Solution of one saddle-system solve.
#[derive(Debug, Clone, PartialEq)]
pub struct SleSolution {
    pub d: Vec<f64>,
    pub h: Vec<f64>,
    /// `‖V (d; h) - rhs‖ / (1 + ‖rhs‖)`.
    pub rel_residual: f64,
}

/// The saddle matrix of one iteration with its factorization.
pub struct SaddleSystem {
    v: Matrix,
    lu: LuFactorization,
    n: usize,
}

impl SaddleSystem {
    pub fn new(b: &Matrix, jac: &Matrix, fbar: &[f64], d0: &[f64]) -> Result<Self, LinalgError> {
        let v = assemble_v(b, jac, fbar, d0);
        let lu = lu_factor(&v)?;
        Ok(SaddleSystem { v, lu, n: b.rows() })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.v
    }

    pub fn factorization(&self) -> &LuFactorization {
        &self.lu
    }

    /// Solves with right-hand side `(0; tail)`.
    pub fn solve_tail(&self, tail: &[f64]) -> SleSolution {
        let mut rhs = vec![0.0; self.n];
        rhs.extend_from_slice(tail);
        let mut z = self.lu.solve(&rhs);
        let r = self.v.mul_vec(&z);
        let res: f64 = r.iter().zip(&rhs).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
        let h = z.split_off(self.n);
        SleSolution { d: z, h, rel_residual: res / (1.0 + norm2(&rhs)) }
    }

    /// Feasible direction `d̃` from the tail `-(‖d0‖ + φ^σ) 1`.
    pub fn solve_feasible(&self, d0_norm: f64, phi: f64, sigma: f64) -> SleSolution {
        let m = self.v.rows() - self.n;
        let c = d0_norm + pow0(phi, sigma);
        self.solve_tail(&vec![-c; m])
    }

    /// Correction `d1` from the tail `-(‖d0‖^τ + φ^σ) 1 - F̃`.
    pub fn solve_correction(&self, d0_norm: f64, phi: f64, ftilde: &[f64], p: &SolverParams) -> SleSolution {
        let c = pow0(d0_norm, p.tau) + pow0(phi, p.sigma);
        let tail: Vec<f64> = ftilde.iter().map(|f| -c - f).collect();
        self.solve_tail(&tail)
    }
}

/// `F̃_j = f_j(x + d0) - f_j(x) - g_jᵀd0`, evaluating every constraint once.
pub fn compute_ftilde(
    ev: &mut Evaluator<'_>,
    x: &[f64],
    d0: &[f64],
    fvals: &[f64],
    jac: &Matrix,
) -> Result<Vec<f64>, ModelError> {
    let xt: Vec<f64> = x.iter().zip(d0).map(|(a, b)| a + b).collect();
    let ft = ev.constraints(&xt)?;
    Ok((0..fvals.len()).map(|j| ft[j] - fvals[j] - dot(jac.row(j), d0)).collect())
}

/// Acceptance test for the corrected direction `d = d0 + d1`.
pub fn check_corrected_descent(g0d0: f64, d0_norm: f64, d_norm: f64, phi: f64, p: &SolverParams) -> bool {
    let norm_term = (-pow0(d0_norm, p.delta)).min(-pow0(d_norm, p.delta));
    g0d0 <= p.zeta * norm_term + p.xi * pow0(phi, p.varrho)
}

/// Weight of `d̃` in the combined direction.
pub fn compute_beta(g0d0: f64, g0dtilde: f64, phi: f64, theta: f64) -> f64 {
    if g0dtilde <= g0d0 {
        return 1.0;
    }
    let denom = g0dtilde - g0d0;
    if denom < 1e-14 * (1.0 + g0d0.abs()) {
        return 1.0;
    }
    let beta = ((theta - 1.0) * g0d0 + pow0(phi, theta)) / denom;
    beta.clamp(0.0, 1.0)
}

/// `(1 - β) d0 + β d̃`.
pub fn combine_q(d0: &[f64], dtilde: &[f64], beta: f64) -> Vec<f64> {
    d0.iter().zip(dtilde).map(|(a, b)| (1.0 - beta) * a + beta * b).collect()
}
