//! Per-iteration checks of the properties the method guarantees in exact
//! arithmetic, evaluated on the recorded telemetry.

use super::iterate::{Cycle, IterationRecord, SolveReport};

/// QP optimality, relative to `1 + ‖g0‖`.
pub const QP_KKT_RTOL: f64 = 1e-8;
/// Saddle-system residual, relative to `1 + ‖rhs‖`.
pub const SLE_RTOL: f64 = 1e-9;
/// `g_jᵀd̃ = -‖d0‖ - φ^σ` on the shifted-active set.
pub const DTILDE_TOL: f64 = 1e-9;
/// Slack allowed in the descent inequalities of the combined direction.
pub const DESCENT_SLACK: f64 = 1e-10;

/// Violations of the per-iteration invariants, one message each.
pub fn iteration_violations(r: &IterationRecord) -> Vec<String> {
    let mut out = Vec::new();
    let k = r.k;
    if !(r.qp_kkt_residual <= QP_KKT_RTOL * (1.0 + r.g0_norm)) {
        out.push(format!("k={k}: QP KKT residual {:e}", r.qp_kkt_residual));
    }
    if !(r.sle_correction_residual <= SLE_RTOL) {
        out.push(format!("k={k}: correction system residual {:e}", r.sle_correction_residual));
    }
    if let Some(v) = r.sle_feasible_residual {
        if !(v <= SLE_RTOL) {
            out.push(format!("k={k}: feasible-direction system residual {v:e}"));
        }
    }
    if let Some(v) = r.dtilde_active_defect {
        if !(v <= DTILDE_TOL) {
            out.push(format!("k={k}: active rows of the feasible direction off by {v:e}"));
        }
    }
    if r.cycle == Cycle::II {
        match r.beta {
            Some(b) if (0.0..=1.0).contains(&b) => {}
            other => out.push(format!("k={k}: beta {other:?} outside [0, 1]")),
        }
        for (what, slack) in [
            ("tilted descent bound", r.beta_bound_slack),
            ("quadratic descent bound", r.q_descent_slack),
            ("active constraint decrease", r.q_active_slack),
        ] {
            if let Some(s) = slack {
                if !(s >= -DESCENT_SLACK) {
                    out.push(format!("k={k}: {what} violated by {:e}", -s));
                }
            }
        }
    }
    if !r.b_next_spd {
        out.push(format!("k={k}: next quasi-Newton matrix not positive definite"));
    }
    if !r.satisfied_kept {
        out.push(format!("k={k}: a satisfied constraint became violated"));
    }
    out
}

/// Whole-run properties: the violation measure decreases strictly while
/// positive and never returns once zero, and the objective does not increase
/// after the first feasible iterate.
pub fn run_violations(report: &SolveReport) -> Vec<String> {
    let mut out = Vec::new();
    let mut feasible = false;
    for r in &report.trace {
        if feasible {
            if r.phi_next != 0.0 {
                out.push(format!("k={}: left the feasible set (phi = {:e})", r.k, r.phi_next));
            }
            if !(r.f0_next <= r.f0) {
                out.push(format!("k={}: objective increased from {} to {}", r.k, r.f0, r.f0_next));
            }
        } else if r.phi > 0.0 && r.phi_next > 0.0 && !(r.phi_next < r.phi) {
            out.push(format!("k={}: violation did not decrease ({:e} -> {:e})", r.k, r.phi, r.phi_next));
        }
        feasible = feasible || r.phi_next == 0.0 || r.phi == 0.0;
    }
    out
}
