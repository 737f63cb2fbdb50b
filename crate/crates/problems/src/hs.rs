//! Hock-Schittkowski problems 12, 29, 31, 33, 34, 35, 43, 44, 66, 76, 100,
//! 113 and Schittkowski problem 264.
//!
//! Each function below is the collection's statement with constraints in
//! `c_j(x) >= 0` form; simple bounds are listed separately and appended as
//! inequality constraints.

use crate::algebraic::{bounds, Algebraic, Bound};

fn put(g: &mut [f64], v: &[f64]) {
    g.copy_from_slice(v);
}

// HS 12

fn hs12_f(x: &[f64]) -> f64 {
    0.5 * x[0] * x[0] + x[1] * x[1] - x[0] * x[1] - 7.0 * x[0] - 7.0 * x[1]
}
fn hs12_df(x: &[f64], g: &mut [f64]) {
    put(g, &[x[0] - x[1] - 7.0, 2.0 * x[1] - x[0] - 7.0]);
}
fn hs12_c(_j: usize, x: &[f64]) -> f64 {
    25.0 - 4.0 * x[0] * x[0] - x[1] * x[1]
}
fn hs12_dc(_j: usize, x: &[f64], g: &mut [f64]) {
    put(g, &[-8.0 * x[0], -2.0 * x[1]]);
}

// HS 29

fn hs29_f(x: &[f64]) -> f64 {
    -x[0] * x[1] * x[2]
}
fn hs29_df(x: &[f64], g: &mut [f64]) {
    put(g, &[-x[1] * x[2], -x[0] * x[2], -x[0] * x[1]]);
}
fn hs29_c(_j: usize, x: &[f64]) -> f64 {
    48.0 - x[0] * x[0] - 2.0 * x[1] * x[1] - 4.0 * x[2] * x[2]
}
fn hs29_dc(_j: usize, x: &[f64], g: &mut [f64]) {
    put(g, &[-2.0 * x[0], -4.0 * x[1], -8.0 * x[2]]);
}

// HS 31

fn hs31_f(x: &[f64]) -> f64 {
    9.0 * x[0] * x[0] + x[1] * x[1] + 9.0 * x[2] * x[2]
}
fn hs31_df(x: &[f64], g: &mut [f64]) {
    put(g, &[18.0 * x[0], 2.0 * x[1], 18.0 * x[2]]);
}
fn hs31_c(_j: usize, x: &[f64]) -> f64 {
    x[0] * x[1] - 1.0
}
fn hs31_dc(_j: usize, x: &[f64], g: &mut [f64]) {
    put(g, &[x[1], x[0], 0.0]);
}

// HS 33

fn hs33_f(x: &[f64]) -> f64 {
    (x[0] - 1.0) * (x[0] - 2.0) * (x[0] - 3.0) + x[2]
}
fn hs33_df(x: &[f64], g: &mut [f64]) {
    put(g, &[3.0 * x[0] * x[0] - 12.0 * x[0] + 11.0, 0.0, 1.0]);
}
fn hs33_c(j: usize, x: &[f64]) -> f64 {
    let r = x[0] * x[0] + x[1] * x[1];
    match j {
        0 => x[2] * x[2] - r,
        _ => r + x[2] * x[2] - 4.0,
    }
}
fn hs33_dc(j: usize, x: &[f64], g: &mut [f64]) {
    match j {
        0 => put(g, &[-2.0 * x[0], -2.0 * x[1], 2.0 * x[2]]),
        _ => put(g, &[2.0 * x[0], 2.0 * x[1], 2.0 * x[2]]),
    }
}

// HS 34 and HS 66 share their constraints

fn hs34_f(x: &[f64]) -> f64 {
    -x[0]
}
fn hs34_df(_x: &[f64], g: &mut [f64]) {
    put(g, &[-1.0, 0.0, 0.0]);
}
fn exp_chain_c(j: usize, x: &[f64]) -> f64 {
    match j {
        0 => x[1] - x[0].exp(),
        _ => x[2] - x[1].exp(),
    }
}
fn exp_chain_dc(j: usize, x: &[f64], g: &mut [f64]) {
    match j {
        0 => put(g, &[-x[0].exp(), 1.0, 0.0]),
        _ => put(g, &[0.0, -x[1].exp(), 1.0]),
    }
}
fn hs66_f(x: &[f64]) -> f64 {
    0.2 * x[2] - 0.8 * x[0]
}
fn hs66_df(_x: &[f64], g: &mut [f64]) {
    put(g, &[-0.8, 0.0, 0.2]);
}

// HS 35

fn hs35_f(x: &[f64]) -> f64 {
    9.0 - 8.0 * x[0] - 6.0 * x[1] - 4.0 * x[2]
        + 2.0 * x[0] * x[0]
        + 2.0 * x[1] * x[1]
        + x[2] * x[2]
        + 2.0 * x[0] * x[1]
        + 2.0 * x[0] * x[2]
}
fn hs35_df(x: &[f64], g: &mut [f64]) {
    put(
        g,
        &[
            -8.0 + 4.0 * x[0] + 2.0 * x[1] + 2.0 * x[2],
            -6.0 + 4.0 * x[1] + 2.0 * x[0],
            -4.0 + 2.0 * x[2] + 2.0 * x[0],
        ],
    );
}
fn hs35_c(_j: usize, x: &[f64]) -> f64 {
    3.0 - x[0] - x[1] - 2.0 * x[2]
}
fn hs35_dc(_j: usize, _x: &[f64], g: &mut [f64]) {
    put(g, &[-1.0, -1.0, -2.0]);
}

// HS 43 (Rosen-Suzuki); S 264 differs only in the second constant

fn hs43_f(x: &[f64]) -> f64 {
    x[0] * x[0] + x[1] * x[1] + 2.0 * x[2] * x[2] + x[3] * x[3] - 5.0 * x[0] - 5.0 * x[1] - 21.0 * x[2]
        + 7.0 * x[3]
}
fn hs43_df(x: &[f64], g: &mut [f64]) {
    put(g, &[2.0 * x[0] - 5.0, 2.0 * x[1] - 5.0, 4.0 * x[2] - 21.0, 2.0 * x[3] + 7.0]);
}
fn rosen_suzuki_c(j: usize, x: &[f64], second: f64) -> f64 {
    let (a, b, c, d) = (x[0], x[1], x[2], x[3]);
    match j {
        0 => 8.0 - a * a - b * b - c * c - d * d - a + b - c + d,
        1 => second - a * a - 2.0 * b * b - c * c - 2.0 * d * d + a + d,
        _ => 5.0 - 2.0 * a * a - b * b - c * c - 2.0 * a + b + d,
    }
}
fn hs43_c(j: usize, x: &[f64]) -> f64 {
    rosen_suzuki_c(j, x, 10.0)
}
fn s264_c(j: usize, x: &[f64]) -> f64 {
    rosen_suzuki_c(j, x, 9.0)
}
fn hs43_dc(j: usize, x: &[f64], g: &mut [f64]) {
    let (a, b, c, d) = (x[0], x[1], x[2], x[3]);
    match j {
        0 => put(g, &[-2.0 * a - 1.0, -2.0 * b + 1.0, -2.0 * c - 1.0, -2.0 * d + 1.0]),
        1 => put(g, &[-2.0 * a + 1.0, -4.0 * b, -2.0 * c, -4.0 * d + 1.0]),
        _ => put(g, &[-4.0 * a - 2.0, -2.0 * b + 1.0, -2.0 * c, 1.0]),
    }
}

// HS 44

fn hs44_f(x: &[f64]) -> f64 {
    x[0] - x[1] - x[2] - x[0] * x[2] + x[0] * x[3] + x[1] * x[2] - x[1] * x[3]
}
fn hs44_df(x: &[f64], g: &mut [f64]) {
    put(g, &[1.0 - x[2] + x[3], -1.0 + x[2] - x[3], -1.0 - x[0] + x[1], x[0] - x[1]]);
}
const HS44_ROWS: [([f64; 4], f64); 6] = [
    ([1.0, 2.0, 0.0, 0.0], 8.0),
    ([4.0, 1.0, 0.0, 0.0], 12.0),
    ([3.0, 4.0, 0.0, 0.0], 12.0),
    ([0.0, 0.0, 2.0, 1.0], 8.0),
    ([0.0, 0.0, 1.0, 2.0], 8.0),
    ([0.0, 0.0, 1.0, 1.0], 5.0),
];
fn hs44_c(j: usize, x: &[f64]) -> f64 {
    let (a, rhs) = HS44_ROWS[j];
    rhs - a.iter().zip(x).map(|(ai, xi)| ai * xi).sum::<f64>()
}
fn hs44_dc(j: usize, _x: &[f64], g: &mut [f64]) {
    let (a, _) = HS44_ROWS[j];
    for (gi, ai) in g.iter_mut().zip(a) {
        *gi = -ai;
    }
}

// HS 76

fn hs76_f(x: &[f64]) -> f64 {
    x[0] * x[0] + 0.5 * x[1] * x[1] + x[2] * x[2] + 0.5 * x[3] * x[3] - x[0] * x[2] + x[2] * x[3] - x[0]
        - 3.0 * x[1]
        + x[2]
        - x[3]
}
fn hs76_df(x: &[f64], g: &mut [f64]) {
    put(g, &[2.0 * x[0] - x[2] - 1.0, x[1] - 3.0, 2.0 * x[2] - x[0] + x[3] + 1.0, x[3] + x[2] - 1.0]);
}
fn hs76_c(j: usize, x: &[f64]) -> f64 {
    match j {
        0 => 5.0 - x[0] - 2.0 * x[1] - x[2] - x[3],
        1 => 4.0 - 3.0 * x[0] - x[1] - 2.0 * x[2] + x[3],
        _ => x[1] + 4.0 * x[2] - 1.5,
    }
}
fn hs76_dc(j: usize, _x: &[f64], g: &mut [f64]) {
    match j {
        0 => put(g, &[-1.0, -2.0, -1.0, -1.0]),
        1 => put(g, &[-3.0, -1.0, -2.0, 1.0]),
        _ => put(g, &[0.0, 1.0, 4.0, 0.0]),
    }
}

// HS 100

fn hs100_f(x: &[f64]) -> f64 {
    (x[0] - 10.0).powi(2)
        + 5.0 * (x[1] - 12.0).powi(2)
        + x[2].powi(4)
        + 3.0 * (x[3] - 11.0).powi(2)
        + 10.0 * x[4].powi(6)
        + 7.0 * x[5] * x[5]
        + x[6].powi(4)
        - 4.0 * x[5] * x[6]
        - 10.0 * x[5]
        - 8.0 * x[6]
}
fn hs100_df(x: &[f64], g: &mut [f64]) {
    put(
        g,
        &[
            2.0 * (x[0] - 10.0),
            10.0 * (x[1] - 12.0),
            4.0 * x[2].powi(3),
            6.0 * (x[3] - 11.0),
            60.0 * x[4].powi(5),
            14.0 * x[5] - 4.0 * x[6] - 10.0,
            4.0 * x[6].powi(3) - 4.0 * x[5] - 8.0,
        ],
    );
}
fn hs100_c(j: usize, x: &[f64]) -> f64 {
    match j {
        0 => 127.0 - 2.0 * x[0] * x[0] - 3.0 * x[1].powi(4) - x[2] - 4.0 * x[3] * x[3] - 5.0 * x[4],
        1 => 282.0 - 7.0 * x[0] - 3.0 * x[1] - 10.0 * x[2] * x[2] - x[3] + x[4],
        2 => 196.0 - 23.0 * x[0] - x[1] * x[1] - 6.0 * x[5] * x[5] + 8.0 * x[6],
        _ => -4.0 * x[0] * x[0] - x[1] * x[1] + 3.0 * x[0] * x[1] - 2.0 * x[2] * x[2] - 5.0 * x[5] + 11.0 * x[6],
    }
}
fn hs100_dc(j: usize, x: &[f64], g: &mut [f64]) {
    match j {
        0 => put(g, &[-4.0 * x[0], -12.0 * x[1].powi(3), -1.0, -8.0 * x[3], -5.0, 0.0, 0.0]),
        1 => put(g, &[-7.0, -3.0, -20.0 * x[2], -1.0, 1.0, 0.0, 0.0]),
        2 => put(g, &[-23.0, -2.0 * x[1], 0.0, 0.0, 0.0, -12.0 * x[5], 8.0]),
        _ => put(g, &[-8.0 * x[0] + 3.0 * x[1], -2.0 * x[1] + 3.0 * x[0], -4.0 * x[2], 0.0, 0.0, -5.0, 11.0]),
    }
}

// HS 113

fn hs113_f(x: &[f64]) -> f64 {
    x[0] * x[0] + x[1] * x[1] + x[0] * x[1] - 14.0 * x[0] - 16.0 * x[1]
        + (x[2] - 10.0).powi(2)
        + 4.0 * (x[3] - 5.0).powi(2)
        + (x[4] - 3.0).powi(2)
        + 2.0 * (x[5] - 1.0).powi(2)
        + 5.0 * x[6] * x[6]
        + 7.0 * (x[7] - 11.0).powi(2)
        + 2.0 * (x[8] - 10.0).powi(2)
        + (x[9] - 7.0).powi(2)
        + 45.0
}
fn hs113_df(x: &[f64], g: &mut [f64]) {
    put(
        g,
        &[
            2.0 * x[0] + x[1] - 14.0,
            2.0 * x[1] + x[0] - 16.0,
            2.0 * (x[2] - 10.0),
            8.0 * (x[3] - 5.0),
            2.0 * (x[4] - 3.0),
            4.0 * (x[5] - 1.0),
            10.0 * x[6],
            14.0 * (x[7] - 11.0),
            4.0 * (x[8] - 10.0),
            2.0 * (x[9] - 7.0),
        ],
    );
}
fn hs113_c(j: usize, x: &[f64]) -> f64 {
    match j {
        0 => 105.0 - 4.0 * x[0] - 5.0 * x[1] + 3.0 * x[6] - 9.0 * x[7],
        1 => -10.0 * x[0] + 8.0 * x[1] + 17.0 * x[6] - 2.0 * x[7],
        2 => 8.0 * x[0] - 2.0 * x[1] - 5.0 * x[8] + 2.0 * x[9] + 12.0,
        3 => -3.0 * (x[0] - 2.0).powi(2) - 4.0 * (x[1] - 3.0).powi(2) - 2.0 * x[2] * x[2] + 7.0 * x[3] + 120.0,
        4 => -5.0 * x[0] * x[0] - 8.0 * x[1] - (x[2] - 6.0).powi(2) + 2.0 * x[3] + 40.0,
        5 => -0.5 * (x[0] - 8.0).powi(2) - 2.0 * (x[1] - 4.0).powi(2) - 3.0 * x[4] * x[4] + x[5] + 30.0,
        6 => -x[0] * x[0] - 2.0 * (x[1] - 2.0).powi(2) + 2.0 * x[0] * x[1] - 14.0 * x[4] + 6.0 * x[5],
        _ => 3.0 * x[0] - 6.0 * x[1] - 12.0 * (x[8] - 8.0).powi(2) + 7.0 * x[9],
    }
}
fn hs113_dc(j: usize, x: &[f64], g: &mut [f64]) {
    g.fill(0.0);
    match j {
        0 => {
            g[0] = -4.0;
            g[1] = -5.0;
            g[6] = 3.0;
            g[7] = -9.0;
        }
        1 => {
            g[0] = -10.0;
            g[1] = 8.0;
            g[6] = 17.0;
            g[7] = -2.0;
        }
        2 => {
            g[0] = 8.0;
            g[1] = -2.0;
            g[8] = -5.0;
            g[9] = 2.0;
        }
        3 => {
            g[0] = -6.0 * (x[0] - 2.0);
            g[1] = -8.0 * (x[1] - 3.0);
            g[2] = -4.0 * x[2];
            g[3] = 7.0;
        }
        4 => {
            g[0] = -10.0 * x[0];
            g[1] = -8.0;
            g[2] = -2.0 * (x[2] - 6.0);
            g[3] = 2.0;
        }
        5 => {
            g[0] = -(x[0] - 8.0);
            g[1] = -4.0 * (x[1] - 4.0);
            g[4] = -6.0 * x[4];
            g[5] = 1.0;
        }
        6 => {
            g[0] = -2.0 * x[0] + 2.0 * x[1];
            g[1] = -4.0 * (x[1] - 2.0) + 2.0 * x[0];
            g[4] = -14.0;
            g[5] = 6.0;
        }
        _ => {
            g[0] = 3.0;
            g[1] = -6.0;
            g[8] = -24.0 * (x[8] - 8.0);
            g[9] = 7.0;
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn make(
    name: &'static str,
    n: usize,
    general: usize,
    f: fn(&[f64]) -> f64,
    df: fn(&[f64], &mut [f64]),
    c: fn(usize, &[f64]) -> f64,
    dc: fn(usize, &[f64], &mut [f64]),
    b: Vec<Bound>,
    fv: f64,
) -> Algebraic {
    Algebraic { name, n, general, f, df, c, dc, bounds: b, fv: Some(fv) }
}

const NONNEG: (Option<f64>, Option<f64>) = (Some(0.0), None);

pub fn hs012() -> Algebraic {
    make("hs012", 2, 1, hs12_f, hs12_df, hs12_c, hs12_dc, vec![], -30.0)
}

pub fn hs029() -> Algebraic {
    make("hs029", 3, 1, hs29_f, hs29_df, hs29_c, hs29_dc, vec![], -22.627417)
}

pub fn hs031() -> Algebraic {
    let b = bounds(&[(Some(-10.0), Some(10.0)), (Some(1.0), Some(10.0)), (Some(-10.0), Some(1.0))]);
    make("hs031", 3, 1, hs31_f, hs31_df, hs31_c, hs31_dc, b, 6.0)
}

pub fn hs033() -> Algebraic {
    let b = bounds(&[NONNEG, NONNEG, (Some(0.0), Some(5.0))]);
    make("hs033", 3, 2, hs33_f, hs33_df, hs33_c, hs33_dc, b, -4.5857864)
}

fn exp_chain_bounds() -> Vec<Bound> {
    bounds(&[(Some(0.0), Some(100.0)), (Some(0.0), Some(100.0)), (Some(0.0), Some(10.0))])
}

pub fn hs034() -> Algebraic {
    make("hs034", 3, 2, hs34_f, hs34_df, exp_chain_c, exp_chain_dc, exp_chain_bounds(), -0.83403245)
}

pub fn hs035() -> Algebraic {
    let b = bounds(&[NONNEG, NONNEG, NONNEG]);
    make("hs035", 3, 1, hs35_f, hs35_df, hs35_c, hs35_dc, b, 0.11111111)
}

pub fn hs043() -> Algebraic {
    make("hs043", 4, 3, hs43_f, hs43_df, hs43_c, hs43_dc, vec![], -44.0)
}

pub fn hs044() -> Algebraic {
    let b = bounds(&[NONNEG; 4]);
    make("hs044", 4, 6, hs44_f, hs44_df, hs44_c, hs44_dc, b, -15.0)
}

pub fn hs066() -> Algebraic {
    make("hs066", 3, 2, hs66_f, hs66_df, exp_chain_c, exp_chain_dc, exp_chain_bounds(), 0.51816327)
}

pub fn hs076() -> Algebraic {
    let b = bounds(&[NONNEG; 4]);
    make("hs076", 4, 3, hs76_f, hs76_df, hs76_c, hs76_dc, b, -4.6818182)
}

pub fn hs100() -> Algebraic {
    make("hs100", 7, 4, hs100_f, hs100_df, hs100_c, hs100_dc, vec![], 682.56637)
}

pub fn hs113() -> Algebraic {
    make("hs113", 10, 8, hs113_f, hs113_df, hs113_c, hs113_dc, vec![], 24.306209)
}

pub fn s264() -> Algebraic {
    make("s264", 4, 3, hs43_f, hs43_df, s264_c, hs43_dc, vec![], -43.987578)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ssfd::Problem;

    #[test]
    fn bound_encoding_order_and_sign() {
        let p = hs031();
        assert_eq!(p.m(), 7);
        let x = [0.5, 12.0, 2.0];
        // lower then upper for each variable, after the one general constraint
        let vals: Vec<f64> = (1..7).map(|j| p.constraint(j, &x)).collect();
        assert_eq!(vals, vec![-10.5, -9.5, -11.0, 2.0, -12.0, 1.0]);
        let mut g = [9.0; 3];
        p.constraint_grad(1, &x, &mut g);
        assert_eq!(g, [-1.0, 0.0, 0.0]);
        p.constraint_grad(6, &x, &mut g);
        assert_eq!(g, [0.0, 0.0, 1.0]);
    }

    #[test]
    fn general_constraints_are_negated() {
        let p = hs012();
        // c(6, 6) = 25 - 144 - 36
        assert_eq!(p.constraint(0, &[6.0, 6.0]), 155.0);
        let mut g = [0.0; 2];
        p.constraint_grad(0, &[6.0, 6.0], &mut g);
        assert_eq!(g, [48.0, 12.0]);
    }
}
