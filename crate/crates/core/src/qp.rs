//! Strictly convex inequality-constrained QP
//!
//! ```text
//!     minimize    g0ᵀd + ½ dᵀB d
//!     subject to  f̄_j + g_jᵀd <= 0,   j = 1..m
//! ```
//!
//! with `B` symmetric positive definite and every `f̄_j <= 0`, so that `d = 0`
//! is feasible. Solved by a primal active-set method on the transformed
//! variable `u = Lᵀd` (`B = L Lᵀ`), where the objective becomes a shifted
//! least-distance problem and the reduced systems are Gram matrices of the
//! transformed constraint normals. The Gram Cholesky factor is extended by one
//! row when a constraint enters the working set and rebuilt when one leaves.

use thiserror::Error;

use crate::linalg::{
    self, cholesky, dot, lu_factor, norm2, norm_inf, solve_lower, solve_lower_transpose, Matrix,
};

/// Multipliers below this are reported as exactly zero.
pub const MULTIPLIER_CLAMP: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QpError {
    #[error("inconsistent QP dimensions: {0}")]
    Dimension(String),
    #[error("Hessian is not symmetric (asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("Hessian is not positive definite")]
    NotPositiveDefinite,
    #[error("constraint offset {index} is {value:e} > 0; d = 0 must be feasible")]
    OriginInfeasible { index: usize, value: f64 },
    #[error("active-set iteration cap {0} reached")]
    MaxActiveSetIterations(usize),
    #[error("numerical breakdown in the reduced system: {0}")]
    NumericalBreakdown(String),
}

/// Data of one QP instance.
#[derive(Debug, Clone)]
pub struct QpProblem {
    /// `n x n` SPD matrix.
    pub hessian: Matrix,
    /// Linear term (the objective gradient).
    pub g0: Vec<f64>,
    /// `m x n`, row `j` is the constraint normal `g_j`.
    pub normals: Matrix,
    /// Offsets `f̄_j`, all `<= 0`.
    pub offsets: Vec<f64>,
}

impl QpProblem {
    pub fn new(
        hessian: Matrix,
        g0: Vec<f64>,
        normals: Matrix,
        offsets: Vec<f64>,
    ) -> Result<Self, QpError> {
        let n = g0.len();
        if hessian.rows() != n || hessian.cols() != n {
            return Err(QpError::Dimension(format!(
                "hessian is {}x{}, gradient has length {n}",
                hessian.rows(),
                hessian.cols()
            )));
        }
        if normals.cols() != n || normals.rows() != offsets.len() {
            return Err(QpError::Dimension(format!(
                "normals are {}x{}, {} offsets, n = {n}",
                normals.rows(),
                normals.cols(),
                offsets.len()
            )));
        }
        let asym = hessian.asymmetry();
        if asym > 1e-12 * (1.0 + hessian.max_abs()) {
            return Err(QpError::NotSymmetric(asym));
        }
        if let Some((index, &value)) = offsets.iter().enumerate().find(|(_, v)| !(**v <= 0.0)) {
            return Err(QpError::OriginInfeasible { index, value });
        }
        Ok(QpProblem { hessian, g0, normals, offsets })
    }

    pub fn n(&self) -> usize {
        self.g0.len()
    }

    pub fn m(&self) -> usize {
        self.offsets.len()
    }

    pub fn objective(&self, d: &[f64]) -> f64 {
        dot(&self.g0, d) + 0.5 * self.hessian.quad_form(d)
    }

    /// `f̄_j + g_jᵀd` for every constraint.
    pub fn constraint_values(&self, d: &[f64]) -> Vec<f64> {
        let mut r = self.normals.mul_vec(d);
        for (ri, fb) in r.iter_mut().zip(&self.offsets) {
            *ri += fb;
        }
        r
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QpSolution {
    pub d0: Vec<f64>,
    /// One multiplier per constraint, zero outside `active`.
    pub lambda: Vec<f64>,
    /// Working set at termination, ascending.
    pub active: Vec<usize>,
    pub kkt_residual: f64,
    pub iterations: usize,
}

/// Largest violation among stationarity (Euclidean norm of the Lagrangian
/// gradient), primal feasibility, multiplier sign and complementarity.
pub fn verify_kkt(p: &QpProblem, s: &QpSolution) -> f64 {
    let mut grad = p.hessian.mul_vec(&s.d0);
    linalg::axpy(1.0, &p.g0, &mut grad);
    for (j, &lj) in s.lambda.iter().enumerate() {
        if lj != 0.0 {
            linalg::axpy(lj, p.normals.row(j), &mut grad);
        }
    }
    let mut worst = norm2(&grad);
    for (r, &lj) in p.constraint_values(&s.d0).iter().zip(&s.lambda) {
        worst = worst.max(r.max(0.0)).max((-lj).max(0.0)).max((lj * r).abs());
    }
    worst
}

/// Cold-start solve by the dual method.
pub fn solve_qp(p: &QpProblem) -> Result<QpSolution, QpError> {
    dual_active_set(p)
}

/// Solve starting from a guessed working set (typically the previous
/// iteration's).
///
/// The guess seeds a primal active-set iteration when the equality-constrained
/// minimizer on it is feasible. Otherwise, or when that iteration fails or
/// ends inaccurate, the cold dual solve is used.
pub fn solve_qp_warm(p: &QpProblem, warm: &[usize]) -> Result<QpSolution, QpError> {
    if !warm.is_empty() {
        if let Ok(Some(s)) = primal_from_warm(p, warm) {
            if s.kkt_residual <= WARM_ACCEPT_RTOL * (1.0 + norm2(&p.g0)) {
                return Ok(s);
            }
        }
    }
    dual_active_set(p)
}

/// A warm-started solution is kept only if its KKT residual is below this,
/// relative to `1 + ‖g0‖`.
const WARM_ACCEPT_RTOL: f64 = 1e-10;

/// Shared tail of both methods: clamp tiny multipliers, polish, and report
/// the working constraints that are active or carry weight.
fn finish(p: &QpProblem, working: &[usize], d0: Vec<f64>, mut lambda: Vec<f64>, iterations: usize) -> QpSolution {
    for v in lambda.iter_mut() {
        if *v < MULTIPLIER_CLAMP {
            *v = 0.0;
        }
    }
    let mut sol = QpSolution { d0, lambda, active: Vec::new(), kkt_residual: 0.0, iterations };
    sol.kkt_residual = verify_kkt(p, &sol);
    polish(p, working, &mut sol);
    let residuals = p.constraint_values(&sol.d0);
    let mut active: Vec<usize> =
        working.iter().copied().filter(|&j| sol.lambda[j] > 0.0 || residuals[j] >= -1e-10).collect();
    active.sort_unstable();
    sol.active = active;
    sol
}

/// Goldfarb-Idnani dual active-set method.
///
/// In the form `cᵢᵀd >= bᵢ` with `cᵢ = -g_i`, `bᵢ = f̄_i`. Starts at the
/// unconstrained minimizer and repeatedly adds the most violated constraint
/// (violation scaled by `‖g_i‖`), dropping active constraints whose
/// multipliers would turn negative. `J` holds `L⁻ᵀ Q` and `R` the triangular
/// factor with `Jᵀ N_A = [R; 0]`, both maintained by Givens rotations.
fn dual_active_set(p: &QpProblem) -> Result<QpSolution, QpError> {
    let n = p.n();
    let m = p.m();
    let l = cholesky(&p.hessian).map_err(|_| QpError::NotPositiveDefinite)?;

    // J = L⁻ᵀ, stored by columns
    let mut jcols: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            solve_lower_transpose(&l, &e)
        })
        .collect();
    let mut r: Vec<Vec<f64>> = Vec::new(); // r[k] = column k, length k + 1
    let mut active: Vec<usize> = Vec::new();
    let mut u: Vec<f64> = Vec::new();

    let mut x = solve_lower_transpose(&l, &solve_lower(&l, &p.g0));
    x.iter_mut().for_each(|v| *v = -*v);

    let gnorm: Vec<f64> = (0..m).map(|j| norm2(p.normals.row(j))).collect();
    let max_iter = 50 * (n + m) + 50;
    let mut iterations = 0;

    loop {
        // most violated constraint, scaled
        let vals = p.constraint_values(&x);
        let xnorm = norm2(&x);
        let mut chosen: Option<(usize, f64)> = None;
        for j in 0..m {
            if active.contains(&j) || gnorm[j] == 0.0 {
                continue;
            }
            let tol = 1e-13 * (1.0 + p.offsets[j].abs() + gnorm[j] * xnorm);
            if vals[j] > tol {
                let score = vals[j] / gnorm[j];
                if chosen.map_or(true, |(_, best)| score > best) {
                    chosen = Some((j, score));
                }
            }
        }
        let Some((pc, _)) = chosen else { break };
        let np: Vec<f64> = p.normals.row(pc).iter().map(|v| -v).collect();
        let bp = p.offsets[pc];
        let mut u_plus = 0.0;

        loop {
            iterations += 1;
            if iterations > max_iter {
                return Err(QpError::MaxActiveSetIterations(max_iter));
            }
            let q = active.len();
            let d: Vec<f64> = jcols.iter().map(|c| dot(c, &np)).collect();
            let mut z = vec![0.0; n];
            for k in q..n {
                linalg::axpy(d[k], &jcols[k], &mut z);
            }
            // R rdir = d[..q]
            let mut rdir = d[..q].to_vec();
            for k in (0..q).rev() {
                let mut s = rdir[k];
                for t in k + 1..q {
                    s -= r[t][k] * rdir[t];
                }
                rdir[k] = s / r[k][k];
            }
            let mut t1 = f64::INFINITY;
            let mut drop_at = None;
            for k in 0..q {
                if rdir[k] > 0.0 {
                    let ratio = u[k] / rdir[k];
                    if ratio < t1 {
                        t1 = ratio;
                        drop_at = Some(k);
                    }
                }
            }
            let d_tail2: f64 = d[q..].iter().map(|v| v * v).sum();
            let d_all2: f64 = d.iter().map(|v| v * v).sum();
            let dependent = d_tail2 <= 1e-24 * d_all2;
            let sp = dot(&np, &x) - bp;
            let t2 = if dependent { f64::INFINITY } else { (-sp).max(0.0) / dot(&z, &np) };
            let t = t1.min(t2);
            if !t.is_finite() {
                return Err(QpError::NumericalBreakdown(format!(
                    "constraint {pc} cannot be satisfied together with the active set"
                )));
            }
            if !dependent {
                linalg::axpy(t, &z, &mut x);
            }
            for k in 0..q {
                u[k] -= t * rdir[k];
            }
            u_plus += t;
            if t2 <= t1 {
                // full step: pc joins the active set
                let mut dd = d;
                for k in (q + 1..n).rev() {
                    let (a, b) = (dd[k - 1], dd[k]);
                    if b == 0.0 {
                        continue;
                    }
                    let h = a.hypot(b);
                    let (c, s) = (a / h, b / h);
                    dd[k - 1] = h;
                    dd[k] = 0.0;
                    rotate_columns(&mut jcols, k - 1, k, c, s);
                }
                r.push(dd[..=q].to_vec());
                active.push(pc);
                u.push(u_plus);
                break;
            }
            let k = drop_at.expect("finite partial step has a blocking multiplier");
            drop_constraint(&mut r, &mut jcols, k);
            active.remove(k);
            u.remove(k);
        }
    }

    let mut lambda = vec![0.0; m];
    for (k, &j) in active.iter().enumerate() {
        lambda[j] = u[k];
    }
    Ok(finish(p, &active, x, lambda, iterations))
}

/// `(J_a, J_b) <- (c J_a + s J_b, -s J_a + c J_b)`.
fn rotate_columns(jcols: &mut [Vec<f64>], a: usize, b: usize, c: f64, s: f64) {
    let (lo, hi) = jcols.split_at_mut(b);
    for (x, y) in lo[a].iter_mut().zip(hi[0].iter_mut()) {
        let (xa, yb) = (*x, *y);
        *x = c * xa + s * yb;
        *y = -s * xa + c * yb;
    }
}

/// Removes column `k` of `R` and restores triangularity.
fn drop_constraint(r: &mut Vec<Vec<f64>>, jcols: &mut [Vec<f64>], k: usize) {
    r.remove(k);
    // columns k.. now carry one extra subdiagonal entry
    for col in k..r.len() {
        let (a, b) = (r[col][col], r[col][col + 1]);
        let h = a.hypot(b);
        if h == 0.0 {
            r[col].pop();
            continue;
        }
        let (c, s) = (a / h, b / h);
        for cc in col..r.len() {
            let (x, y) = (r[cc][col], r[cc][col + 1]);
            r[cc][col] = c * x + s * y;
            r[cc][col + 1] = -s * x + c * y;
        }
        r[col].pop();
        rotate_columns(jcols, col, col + 1, c, s);
    }
}

fn primal_from_warm(p: &QpProblem, warm: &[usize]) -> Result<Option<QpSolution>, QpError> {
    let n = p.n();
    let m = p.m();
    let l = cholesky(&p.hessian).map_err(|_| QpError::NotPositiveDefinite)?;

    let z = solve_lower(&l, &p.g0);
    let mut y = Matrix::zeros(m, n);
    for j in 0..m {
        let yj = solve_lower(&l, p.normals.row(j));
        y.row_mut(j).copy_from_slice(&yj);
    }
    let rhs: Vec<f64> = p.offsets.iter().map(|f| -f).collect();
    let ynorm: Vec<f64> = (0..m).map(|j| norm2(y.row(j))).collect();

    let Some((mut u, mut ws)) = warm_start_point(&y, &z, &rhs, warm) else {
        return Ok(None);
    };

    let max_iter = 50 * (n + m);
    let zscale = 1.0 + norm_inf(&z);
    let mut iterations = 0;
    let mu = loop {
        if iterations >= max_iter {
            return Err(QpError::MaxActiveSetIterations(max_iter));
        }
        iterations += 1;

        let w: Vec<f64> = u.iter().zip(&z).map(|(a, b)| a + b).collect();
        let mu = ws.multipliers(&y, &w);
        let mut step: Vec<f64> = w.iter().map(|v| -v).collect();
        for (k, &j) in ws.idx.iter().enumerate() {
            linalg::axpy(-mu[k], y.row(j), &mut step);
        }
        let step_norm = norm2(&step);

        if norm_inf(&step) <= 1e-13 * (1.0 + norm_inf(&w)) {
            // Stationary on the current working set.
            let drop = mu
                .iter()
                .zip(&ws.idx)
                .filter(|(v, _)| **v < -MULTIPLIER_CLAMP * zscale)
                .min_by(|a, b| a.0.total_cmp(b.0).then(a.1.cmp(b.1)))
                .map(|(_, &j)| j);
            match drop {
                None => break mu,
                Some(j) => {
                    ws.remove(j, &y)?;
                    continue;
                }
            }
        }

        let mut alpha = 1.0;
        let mut blocking = None;
        for j in 0..m {
            if ws.contains(j) {
                continue;
            }
            let a = dot(y.row(j), &step);
            if a > 1e-14 * step_norm * ynorm[j] {
                let slack = (rhs[j] - dot(y.row(j), &u)).max(0.0);
                let ratio = slack / a;
                if ratio < alpha {
                    alpha = ratio;
                    blocking = Some(j);
                }
            }
        }
        linalg::axpy(alpha, &step, &mut u);
        if let Some(j) = blocking {
            ws.add(j, &y)?;
        }
    };

    let d0 = solve_lower_transpose(&l, &u);
    let mut lambda = vec![0.0; m];
    for (k, &j) in ws.idx.iter().enumerate() {
        lambda[j] = mu[k];
    }
    Ok(Some(finish(p, &ws.idx, d0, lambda, iterations)))
}

/// Re-solves the equality-constrained KKT system on the final working set in
/// the original coordinates and keeps the result if it is at least as accurate.
fn polish(p: &QpProblem, working: &[usize], sol: &mut QpSolution) {
    let n = p.n();
    let k = working.len();
    let mut kkt = Matrix::zeros(n + k, n + k);
    for i in 0..n {
        kkt.row_mut(i)[..n].copy_from_slice(p.hessian.row(i));
    }
    for (r, &j) in working.iter().enumerate() {
        for (c, &v) in p.normals.row(j).iter().enumerate() {
            kkt[(n + r, c)] = v;
            kkt[(c, n + r)] = v;
        }
    }
    let Ok(lu) = lu_factor(&kkt) else { return };
    let mut rhs: Vec<f64> = p.g0.iter().map(|v| -v).collect();
    rhs.extend(working.iter().map(|&j| -p.offsets[j]));
    let x = lu.solve(&rhs);
    if !linalg::all_finite(&x) {
        return;
    }
    let mut lambda = vec![0.0; p.m()];
    for (r, &j) in working.iter().enumerate() {
        let v = x[n + r];
        if v < -MULTIPLIER_CLAMP * (1.0 + norm_inf(&p.g0)) {
            return;
        }
        lambda[j] = if v < MULTIPLIER_CLAMP { 0.0 } else { v };
    }
    let cand = QpSolution {
        d0: x[..n].to_vec(),
        lambda,
        active: Vec::new(),
        kkt_residual: 0.0,
        iterations: sol.iterations,
    };
    let res = verify_kkt(p, &cand);
    if res <= sol.kkt_residual {
        sol.d0 = cand.d0;
        sol.lambda = cand.lambda;
        sol.kkt_residual = res;
    }
}

/// Equality-constrained minimizer over the guessed working set; usable only
/// if it satisfies every constraint.
fn warm_start_point(
    y: &Matrix,
    z: &[f64],
    rhs: &[f64],
    warm: &[usize],
) -> Option<(Vec<f64>, WorkingSet)> {
    let mut idx: Vec<usize> = warm.iter().copied().filter(|&j| j < y.rows()).collect();
    idx.sort_unstable();
    idx.dedup();
    if idx.is_empty() || idx.len() > y.cols() {
        return None;
    }
    let mut ws = WorkingSet::default();
    for &j in &idx {
        ws.add(j, y).ok()?;
    }
    // S mu = -Y_W z - b_W ;  u = -z - Y_Wᵀ mu
    let t: Vec<f64> = ws.idx.iter().map(|&j| -dot(y.row(j), z) - rhs[j]).collect();
    let mu = ws.solve_gram(&t);
    let mut u: Vec<f64> = z.iter().map(|v| -v).collect();
    for (k, &j) in ws.idx.iter().enumerate() {
        linalg::axpy(-mu[k], y.row(j), &mut u);
    }
    let feasible = (0..y.rows()).all(|j| dot(y.row(j), &u) <= rhs[j] + 1e-12 * (1.0 + rhs[j].abs()));
    feasible.then_some((u, ws))
}

/// Working set with a lower Cholesky factor of its Gram matrix `Y_W Y_Wᵀ`.
#[derive(Debug, Default)]
struct WorkingSet {
    idx: Vec<usize>,
    /// Row `k` holds the first `k + 1` entries of row `k` of the factor.
    chol: Vec<Vec<f64>>,
}

impl WorkingSet {
    fn contains(&self, j: usize) -> bool {
        self.idx.contains(&j)
    }

    fn add(&mut self, j: usize, y: &Matrix) -> Result<(), QpError> {
        let yj = y.row(j);
        let col: Vec<f64> = self.idx.iter().map(|&i| dot(y.row(i), yj)).collect();
        let mut r = col;
        for k in 0..r.len() {
            let s = dot(&self.chol[k][..k], &r[..k]);
            r[k] = (r[k] - s) / self.chol[k][k];
        }
        let yy = dot(yj, yj);
        let d2 = yy - dot(&r, &r);
        if !(d2 > 1e-14 * yy) {
            return Err(QpError::NumericalBreakdown(format!(
                "constraint {j} is linearly dependent on the working set"
            )));
        }
        r.push(d2.sqrt());
        self.chol.push(r);
        self.idx.push(j);
        Ok(())
    }

    fn remove(&mut self, j: usize, y: &Matrix) -> Result<(), QpError> {
        let keep: Vec<usize> = self.idx.iter().copied().filter(|&i| i != j).collect();
        self.idx.clear();
        self.chol.clear();
        for i in keep {
            self.add(i, y)?;
        }
        Ok(())
    }

    fn solve_gram(&self, b: &[f64]) -> Vec<f64> {
        let k = b.len();
        let mut x = b.to_vec();
        for i in 0..k {
            let s = dot(&self.chol[i][..i], &x[..i]);
            x[i] = (x[i] - s) / self.chol[i][i];
        }
        for i in (0..k).rev() {
            x[i] /= self.chol[i][i];
            let xi = x[i];
            for t in 0..i {
                x[t] -= self.chol[i][t] * xi;
            }
        }
        x
    }

    /// Multipliers of the equality-constrained step problem at `w = u + z`.
    fn multipliers(&self, y: &Matrix, w: &[f64]) -> Vec<f64> {
        let t: Vec<f64> = self.idx.iter().map(|&j| -dot(y.row(j), w)).collect();
        self.solve_gram(&t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(b: Matrix, g0: &[f64], normals: &[&[f64]], offsets: &[f64]) -> QpProblem {
        QpProblem::new(b, g0.to_vec(), Matrix::from_rows(normals), offsets.to_vec()).unwrap()
    }

    #[test]
    fn origin_optimal_when_gradient_vanishes() {
        let p = qp(Matrix::identity(2), &[0.0, 0.0], &[&[1.0, 1.0]], &[-10.0]);
        let s = solve_qp(&p).unwrap();
        assert_eq!(s.d0, vec![0.0, 0.0]);
        assert_eq!(s.lambda, vec![0.0]);
        assert!(s.active.is_empty());
    }

    #[test]
    fn active_bound_gets_unit_multiplier() {
        // -d1 <= 0 with gradient (1, 0): stationarity (1,0) + 1 * (-1, 0) = 0
        let p = qp(Matrix::identity(2), &[1.0, 0.0], &[&[-1.0, 0.0]], &[0.0]);
        let s = solve_qp(&p).unwrap();
        assert!(norm_inf(&s.d0) < 1e-15);
        assert!((s.lambda[0] - 1.0).abs() < 1e-14);
        assert_eq!(s.active, vec![0]);
        assert!(s.kkt_residual < 1e-12);
    }

    #[test]
    fn unconstrained_minimizer_when_feasible() {
        let p = qp(Matrix::identity(2), &[1.0, 1.0], &[&[1.0, 1.0]], &[-10.0]);
        let s = solve_qp(&p).unwrap();
        assert!((s.d0[0] + 1.0).abs() < 1e-14 && (s.d0[1] + 1.0).abs() < 1e-14);
        assert_eq!(s.lambda, vec![0.0]);
    }

    #[test]
    fn verify_kkt_detects_perturbations() {
        let p = qp(Matrix::identity(2), &[1.0, 0.0], &[&[-1.0, 0.0]], &[0.0]);
        let exact = QpSolution {
            d0: vec![0.0, 0.0],
            lambda: vec![1.0],
            active: vec![0],
            kkt_residual: 0.0,
            iterations: 0,
        };
        assert!(verify_kkt(&p, &exact) <= 1e-12);

        let mut shifted = exact.clone();
        shifted.d0 = vec![0.1, 0.0];
        assert!(verify_kkt(&p, &shifted) >= 0.09);

        let mut negative = exact.clone();
        negative.lambda = vec![-1.0];
        assert!(verify_kkt(&p, &negative) >= 1.0);
    }

    #[test]
    fn rejects_bad_input() {
        let asym = Matrix::from_rows(&[[1.0, 0.5], [0.0, 1.0]]);
        let err = QpProblem::new(asym, vec![0.0; 2], Matrix::zeros(0, 2), vec![]).unwrap_err();
        assert!(matches!(err, QpError::NotSymmetric(_)));

        let err = QpProblem::new(
            Matrix::identity(2),
            vec![0.0; 2],
            Matrix::from_rows(&[[1.0, 0.0]]),
            vec![0.5],
        )
        .unwrap_err();
        assert!(matches!(err, QpError::OriginInfeasible { index: 0, .. }));

        let indefinite = Matrix::from_rows(&[[1.0, 2.0], [2.0, 1.0]]);
        let p = QpProblem::new(indefinite, vec![1.0, 0.0], Matrix::zeros(0, 2), vec![]).unwrap();
        assert_eq!(solve_qp(&p).unwrap_err(), QpError::NotPositiveDefinite);
    }

    #[test]
    fn warm_start_reaches_same_solution() {
        // min ½|d|² + (-2,-2)ᵀd  s.t. d1 <= 0.5, d2 <= 0.5, d1 + d2 <= 3
        let p = qp(
            Matrix::identity(2),
            &[-2.0, -2.0],
            &[&[1.0, 0.0], &[0.0, 1.0], &[1.0, 1.0]],
            &[-0.5, -0.5, -3.0],
        );
        let cold = solve_qp(&p).unwrap();
        assert_eq!(cold.active, vec![0, 1]);
        for guess in [&[0usize, 1][..], &[2], &[0], &[1, 2], &[7]] {
            let warm = solve_qp_warm(&p, guess).unwrap();
            assert!(norm_inf(&linalg::sub(&warm.d0, &cold.d0)) < 1e-12, "guess {guess:?}");
            assert_eq!(warm.active, cold.active);
        }
    }

    #[test]
    fn tie_breaking_adds_lowest_index() {
        // Two identical blocking constraints; only the first may enter.
        let p = qp(Matrix::identity(1), &[-1.0], &[&[1.0], &[1.0]], &[-0.5, -0.5]);
        let s = solve_qp(&p).unwrap();
        assert_eq!(s.active, vec![0]);
        assert!((s.d0[0] - 0.5).abs() < 1e-15);
        assert!((s.lambda[0] - 0.5).abs() < 1e-14 && s.lambda[1] == 0.0);
    }
}
