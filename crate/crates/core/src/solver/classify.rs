use serde::{Deserialize, Serialize};

/// Split of the constraints at one point.
///
/// `minus` holds satisfied constraints (`f_j <= 0`), `plus` the violated
/// ones, `phi` the largest violation (zero when feasible) and `fbar` the
/// shifted values whose zeros form `active`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub minus: Vec<usize>,
    pub plus: Vec<usize>,
    pub phi: f64,
    pub fbar: Vec<f64>,
    pub active: Vec<usize>,
}

pub fn classify(fvals: &[f64]) -> Classification {
    let phi = fvals.iter().fold(0.0f64, |acc, &v| acc.max(v));
    let mut minus = Vec::new();
    let mut plus = Vec::new();
    let mut fbar = Vec::with_capacity(fvals.len());
    for (j, &v) in fvals.iter().enumerate() {
        if v <= 0.0 {
            minus.push(j);
            fbar.push(v);
        } else {
            plus.push(j);
            fbar.push(v - phi);
        }
    }
    let active = fbar.iter().enumerate().filter(|(_, &v)| v == 0.0).map(|(j, _)| j).collect();
    Classification { minus, plus, phi, fbar, active }
}

/// `base^e` with `0^e = 0` for positive exponents.
pub(crate) fn pow0(base: f64, e: f64) -> f64 {
    if base == 0.0 {
        0.0
    } else {
        base.powf(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_signs() {
        let c = classify(&[-1.0, 0.0, 2.0, 5.0]);
        assert_eq!(c.minus, vec![0, 1]);
        assert_eq!(c.plus, vec![2, 3]);
        assert_eq!(c.phi, 5.0);
        assert_eq!(c.fbar, vec![-1.0, 0.0, -3.0, 0.0]);
        assert_eq!(c.active, vec![1, 3]);
    }

    #[test]
    fn strictly_feasible() {
        let c = classify(&[-1.0, -2.0]);
        assert_eq!(c.minus, vec![0, 1]);
        assert!(c.plus.is_empty());
        assert_eq!(c.phi, 0.0);
        assert_eq!(c.fbar, vec![-1.0, -2.0]);
        assert!(c.active.is_empty());
    }

    #[test]
    fn boundary_point() {
        let c = classify(&[0.0, 0.0]);
        assert_eq!(c.phi, 0.0);
        assert_eq!(c.fbar, vec![0.0, 0.0]);
        assert_eq!(c.active, vec![0, 1]);
    }

    #[test]
    fn zero_power() {
        assert_eq!(pow0(0.0, 0.4), 0.0);
        assert_eq!(pow0(1.0, 0.6), 1.0);
    }
}
