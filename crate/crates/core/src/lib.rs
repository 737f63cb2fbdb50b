//! Solver for smooth nonlinear programs with inequality constraints
//!
//! ```text
//!     minimize    f0(x)
//!     subject to  f_j(x) <= 0,   j = 1..m
//! ```
//!
//! The iteration may start anywhere. Each step solves one always-feasible
//! strictly convex QP and one or two linear systems that share a single
//! saddle-point matrix, then performs an arc-free line search that uses the
//! objective itself as merit function. The number of satisfied constraints
//! never decreases, and once an iterate is feasible all later iterates stay
//! feasible.
//!
//! Crate layout:
//!
//! * [`linalg`]: dense matrices, partial-pivoted LU, Cholesky.
//! * [`qp`]: primal active-set solver for the direction-finding QP.
//! * [`model`]: the [`Problem`](model::Problem) trait, evaluation counters,
//!   finite-difference gradient checks.
//! * [`solver`]: the iteration itself ([`solve`](solver::solve)).

pub mod linalg;
pub mod model;
pub mod qp;
pub mod solver;

pub use model::{EvalCounters, Problem};
pub use solver::{solve, SolveReport, SolveStatus, SolverParams};
