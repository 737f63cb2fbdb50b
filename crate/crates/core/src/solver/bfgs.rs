use serde::{Deserialize, Serialize};

use crate::linalg::{cholesky, dot, norm2, Matrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum UpdateKind {
    /// Plain BFGS with the true gradient difference.
    Standard,
    /// Powell damping replaced `y` by a blend with `Bs`.
    Damped,
    /// Step too short; matrix kept.
    Skipped,
    /// Result failed the Cholesky check; matrix kept.
    Rejected,
}

pub const SKIP_STEP_NORM: f64 = 1e-14;

/// Powell-damped BFGS update of `b` along `s` with gradient difference `y`.
pub fn bfgs_update(b: &Matrix, s: &[f64], y: &[f64]) -> (Matrix, UpdateKind) {
    if norm2(s) < SKIP_STEP_NORM {
        return (b.clone(), UpdateKind::Skipped);
    }
    let bs = b.mul_vec(s);
    let c = dot(s, &bs);
    let ys = dot(y, s);
    let (ybar, kind) = if ys >= 0.2 * c {
        (y.to_vec(), UpdateKind::Standard)
    } else {
        let psi = 0.8 * c / (c - ys);
        let yb: Vec<f64> = y.iter().zip(&bs).map(|(yi, bi)| psi * yi + (1.0 - psi) * bi).collect();
        (yb, UpdateKind::Damped)
    };
    let ybs = dot(&ybar, s);
    if !(c > 0.0) || !(ybs > 0.0) {
        return (b.clone(), UpdateKind::Rejected);
    }
    let n = s.len();
    let mut out = Matrix::zeros(n, n);
    for i in 0..n {
        for k in 0..=i {
            let v = b[(i, k)] - bs[i] * bs[k] / c + ybar[i] * ybar[k] / ybs;
            out[(i, k)] = v;
            out[(k, i)] = v;
        }
    }
    if !out.is_finite() || cholesky(&out).is_err() {
        return (b.clone(), UpdateKind::Rejected);
    }
    (out, kind)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_fixed_by_consistent_pair() {
        let (b, kind) = bfgs_update(&Matrix::identity(2), &[1.0, 0.0], &[1.0, 0.0]);
        assert_eq!(b, Matrix::identity(2));
        assert_eq!(kind, UpdateKind::Standard);
    }

    #[test]
    fn damped_negative_curvature() {
        let (b, kind) = bfgs_update(&Matrix::identity(2), &[1.0, 0.0], &[-1.0, 0.0]);
        assert_eq!(kind, UpdateKind::Damped);
        assert!((b[(0, 0)] - 0.2).abs() < 1e-15);
        assert_eq!((b[(0, 1)], b[(1, 0)], b[(1, 1)]), (0.0, 0.0, 1.0));
    }

    #[test]
    fn zero_step_skips() {
        let b0 = Matrix::from_rows(&[[2.0, 0.5], [0.5, 1.0]]);
        let (b, kind) = bfgs_update(&b0, &[0.0, 0.0], &[1.0, 1.0]);
        assert_eq!(b, b0);
        assert_eq!(kind, UpdateKind::Skipped);
    }

    #[test]
    fn secant_equation_holds() {
        let b0 = Matrix::from_rows(&[[2.0, 0.5], [0.5, 1.0]]);
        let s = [0.3, -0.7];
        let y = [1.0, 0.2];
        let (b, kind) = bfgs_update(&b0, &s, &y);
        assert_eq!(kind, UpdateKind::Standard);
        let bs = b.mul_vec(&s);
        assert!((bs[0] - y[0]).abs() < 1e-14 && (bs[1] - y[1]).abs() < 1e-14);
    }
}
