//! Small problems with optima known in closed form.

use crate::algebraic::{bounds, Algebraic};

fn quad1_f(x: &[f64]) -> f64 {
    x[0] * x[0]
}
fn quad1_df(x: &[f64], g: &mut [f64]) {
    g[0] = 2.0 * x[0];
}
fn quad1_c(_j: usize, x: &[f64]) -> f64 {
    10.0 - x[0]
}
fn quad1_dc(_j: usize, _x: &[f64], g: &mut [f64]) {
    g[0] = -1.0;
}

fn quad2_f(x: &[f64]) -> f64 {
    (x[0] - 2.0).powi(2) + (x[1] - 1.0).powi(2)
}
fn quad2_df(x: &[f64], g: &mut [f64]) {
    g[0] = 2.0 * (x[0] - 2.0);
    g[1] = 2.0 * (x[1] - 1.0);
}
fn quad2_c(_j: usize, x: &[f64]) -> f64 {
    2.0 - x[0] - x[1]
}
fn quad2_dc(_j: usize, _x: &[f64], g: &mut [f64]) {
    g.copy_from_slice(&[-1.0, -1.0]);
}

fn linear1_f(x: &[f64]) -> f64 {
    x[0]
}
fn linear1_df(_x: &[f64], g: &mut [f64]) {
    g[0] = 1.0;
}
fn linear1_c(_j: usize, x: &[f64]) -> f64 {
    x[0]
}
fn linear1_dc(_j: usize, _x: &[f64], g: &mut [f64]) {
    g[0] = 1.0;
}

fn circle_f(x: &[f64]) -> f64 {
    x[0] + x[1]
}
fn circle_df(_x: &[f64], g: &mut [f64]) {
    g.copy_from_slice(&[1.0, 1.0]);
}
fn circle_c(_j: usize, x: &[f64]) -> f64 {
    2.0 - x[0] * x[0] - x[1] * x[1]
}
fn circle_dc(_j: usize, x: &[f64], g: &mut [f64]) {
    g.copy_from_slice(&[-2.0 * x[0], -2.0 * x[1]]);
}

fn box3_f(x: &[f64]) -> f64 {
    (x[0] - 1.0).powi(2) + (x[1] + 2.0).powi(2) + (x[2] - 3.0).powi(2)
}
fn box3_df(x: &[f64], g: &mut [f64]) {
    g.copy_from_slice(&[2.0 * (x[0] - 1.0), 2.0 * (x[1] + 2.0), 2.0 * (x[2] - 3.0)]);
}
fn no_c(_j: usize, _x: &[f64]) -> f64 {
    unreachable!("bounds only")
}
fn no_dc(_j: usize, _x: &[f64], _g: &mut [f64]) {
    unreachable!("bounds only")
}

/// `min x²  s.t.  x <= 10`; optimum 0 at 0.
pub fn quad1() -> Algebraic {
    Algebraic {
        name: "toy-quad1",
        n: 1,
        general: 1,
        f: quad1_f,
        df: quad1_df,
        c: quad1_c,
        dc: quad1_dc,
        bounds: vec![],
        fv: Some(0.0),
    }
}

/// `min (x1-2)² + (x2-1)²  s.t.  x1 + x2 <= 2`; optimum 0.5 at (1.5, 0.5).
pub fn quad2() -> Algebraic {
    Algebraic {
        name: "toy-quad2",
        n: 2,
        general: 1,
        f: quad2_f,
        df: quad2_df,
        c: quad2_c,
        dc: quad2_dc,
        bounds: vec![],
        fv: Some(0.5),
    }
}

/// `min x  s.t.  x >= 0`; optimum 0 at 0.
pub fn linear1() -> Algebraic {
    Algebraic {
        name: "toy-linear1",
        n: 1,
        general: 1,
        f: linear1_f,
        df: linear1_df,
        c: linear1_c,
        dc: linear1_dc,
        bounds: vec![],
        fv: Some(0.0),
    }
}

/// `min x1 + x2  s.t.  x1² + x2² <= 2`; optimum -2 at (-1, -1).
pub fn circle() -> Algebraic {
    Algebraic {
        name: "toy-circle",
        n: 2,
        general: 1,
        f: circle_f,
        df: circle_df,
        c: circle_c,
        dc: circle_dc,
        bounds: vec![],
        fv: Some(-2.0),
    }
}

/// Distance to (1, -2, 3) over the box `[-1, 1]³`; optimum 5 at (1, -1, 1).
pub fn box3() -> Algebraic {
    Algebraic {
        name: "toy-box3",
        n: 3,
        general: 0,
        f: box3_f,
        df: box3_df,
        c: no_c,
        dc: no_dc,
        bounds: bounds(&[(Some(-1.0), Some(1.0)); 3]),
        fv: Some(5.0),
    }
}
