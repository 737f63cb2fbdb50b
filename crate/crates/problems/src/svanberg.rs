//! Svanberg's structural-design problem, as distributed with CUTE (SVANBERG).
//!
//! For even `n`, with one-based indices:
//!
//! ```text
//!     f(x)  = Σ_{i odd} (1 + 2i/n) / (1 + x_i) + Σ_{i even} (5 - 3i/n) / (1 - x_i)
//!     c_k(x) = Σ_{o=-4..4} e_{k,o}(x_{k+o}) - (10 + 5k/n) <= 0,   k = 1..n
//!     -0.8 <= x_i <= 0.8
//! ```
//!
//! where neighbour indices wrap around and `e_{k,o}` is `1/(1+x)` or
//! `1/(1-x)` following a fixed pattern over the offsets for odd `k` and the
//! complementary pattern for even `k`. Bounds follow the general constraints,
//! lower before upper per variable, giving `m = 3n`.

use ssfd::Problem;

/// `true` selects `1/(1-x)`; offsets -4..=4 for odd constraint indices.
const ODD_PATTERN: [bool; 9] = [false, true, true, false, true, true, false, true, false];

pub const BOUND: f64 = 0.8;

#[derive(Debug, Clone)]
pub struct Svanberg {
    n: usize,
    name: String,
}

impl Svanberg {
    /// `n` must be even and at least 10.
    pub fn new(n: usize) -> Option<Self> {
        if n < 10 || n % 2 != 0 {
            return None;
        }
        Some(Svanberg { n, name: format!("svanberg-{n}") })
    }

    fn term(&self, k: usize, o: usize) -> (usize, bool) {
        // k is zero-based here, so odd one-based k means even zero-based
        let var = (k + self.n + o - 4) % self.n;
        let p = ODD_PATTERN[o];
        (var, if k % 2 == 0 { p } else { !p })
    }
}

impl Problem for Svanberg {
    fn name(&self) -> &str {
        &self.name
    }

    fn n(&self) -> usize {
        self.n
    }

    fn m(&self) -> usize {
        3 * self.n
    }

    fn objective(&self, x: &[f64]) -> f64 {
        let n = self.n as f64;
        x.iter()
            .enumerate()
            .map(|(i0, &xi)| {
                let i = (i0 + 1) as f64;
                if i0 % 2 == 0 {
                    (1.0 + 2.0 * i / n) / (1.0 + xi)
                } else {
                    (5.0 - 3.0 * i / n) / (1.0 - xi)
                }
            })
            .sum()
    }

    fn objective_grad(&self, x: &[f64], grad: &mut [f64]) {
        let n = self.n as f64;
        for (i0, (g, &xi)) in grad.iter_mut().zip(x).enumerate() {
            let i = (i0 + 1) as f64;
            *g = if i0 % 2 == 0 {
                -(1.0 + 2.0 * i / n) / ((1.0 + xi) * (1.0 + xi))
            } else {
                (5.0 - 3.0 * i / n) / ((1.0 - xi) * (1.0 - xi))
            };
        }
    }

    fn constraint(&self, j: usize, x: &[f64]) -> f64 {
        let n = self.n;
        if j < n {
            let mut s = 0.0;
            for o in 0..9 {
                let (v, minus) = self.term(j, o);
                s += if minus { 1.0 / (1.0 - x[v]) } else { 1.0 / (1.0 + x[v]) };
            }
            s - (10.0 + 5.0 * (j + 1) as f64 / n as f64)
        } else {
            let b = j - n;
            let v = b / 2;
            if b % 2 == 0 {
                -BOUND - x[v]
            } else {
                x[v] - BOUND
            }
        }
    }

    fn constraint_grad(&self, j: usize, x: &[f64], grad: &mut [f64]) {
        grad.fill(0.0);
        let n = self.n;
        if j < n {
            for o in 0..9 {
                let (v, minus) = self.term(j, o);
                grad[v] += if minus {
                    1.0 / ((1.0 - x[v]) * (1.0 - x[v]))
                } else {
                    -1.0 / ((1.0 + x[v]) * (1.0 + x[v]))
                };
            }
        } else {
            let b = j - n;
            grad[b / 2] = if b % 2 == 0 { -1.0 } else { 1.0 };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_rules() {
        assert!(Svanberg::new(8).is_none());
        assert!(Svanberg::new(11).is_none());
        let p = Svanberg::new(10).unwrap();
        assert_eq!((p.n(), p.m(), p.name()), (10, 30, "svanberg-10"));
    }

    #[test]
    fn origin_values() {
        let p = Svanberg::new(10).unwrap();
        let x = vec![0.0; 10];
        // odd i: 1 + 2i/10, even i: 5 - 3i/10
        let expected: f64 = (1..=10).map(|i| if i % 2 == 1 { 1.0 + 0.2 * i as f64 } else { 5.0 - 0.3 * i as f64 }).sum();
        assert!((p.objective(&x) - expected).abs() < 1e-14);
        // nine unit terms minus (10 + k/2)
        assert!((p.constraint(0, &x) - (9.0 - 10.5)).abs() < 1e-14);
        assert!((p.constraint(9, &x) - (9.0 - 15.0)).abs() < 1e-14);
        assert_eq!(p.constraint(10, &x), -0.8);
        assert_eq!(p.constraint(11, &x), -0.8);
    }

    #[test]
    fn patterns_alternate() {
        let p = Svanberg::new(10).unwrap();
        for o in 0..9 {
            assert_ne!(p.term(0, o).1, p.term(1, o).1);
            assert_eq!(p.term(0, o).1, p.term(2, o).1);
        }
        assert_eq!(p.term(0, 0).0, 6);
        assert_eq!(p.term(9, 8).0, 3);
    }
}
