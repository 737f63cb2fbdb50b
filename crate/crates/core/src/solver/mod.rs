//! The method of strongly sub-feasible directions.
//!
//! Each iteration solves one always-feasible QP for `d0`, forms a correction
//! from a saddle system that is factored once, and tries the corrected step
//! with a short backtracking search. If that fails it solves the same system
//! with a second right-hand side, tilts `d0` toward the resulting feasible
//! direction and backtracks along the combination. The matrix `B` is kept
//! positive definite by a damped BFGS update on the Lagrangian.

mod bfgs;
mod classify;
mod directions;
pub mod invariants;
mod iterate;
mod line_search;
mod params;

pub use bfgs::{bfgs_update, UpdateKind, SKIP_STEP_NORM};
pub use classify::{classify, Classification};
pub use directions::{
    assemble_v, build_qp, check_corrected_descent, combine_q, compute_beta, compute_ftilde, kkt_stop_test,
    SaddleSystem, SleSolution,
};
pub use iterate::{
    solve, Cycle, IterateState, IterationRecord, SolveError, SolveReport, SolveStatus, Solver, StepOutcome,
};
pub use line_search::{line_search_step3, line_search_step5, Accepted};
pub use params::{ParamError, SolverParams, PARAM_KEYS};
