use ssfd::Problem;

/// Simple bound on one variable, encoded as an ordinary inequality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bound {
    pub var: usize,
    pub value: f64,
    pub upper: bool,
}

/// Bounds in variable order, lower before upper.
pub fn bounds(spec: &[(Option<f64>, Option<f64>)]) -> Vec<Bound> {
    let mut out = Vec::new();
    for (var, &(lo, hi)) in spec.iter().enumerate() {
        if let Some(value) = lo {
            out.push(Bound { var, value, upper: false });
        }
        if let Some(value) = hi {
            out.push(Bound { var, value, upper: true });
        }
    }
    out
}

/// Closed-form test problem as listed in the collections: general
/// constraints in `c_j(x) >= 0` form followed by simple bounds.
///
/// Internally `f_j = -c_j` for the general constraints, `l - x_i` for a lower
/// bound and `x_i - u` for an upper bound.
pub struct Algebraic {
    pub name: &'static str,
    pub n: usize,
    pub general: usize,
    pub f: fn(&[f64]) -> f64,
    pub df: fn(&[f64], &mut [f64]),
    pub c: fn(usize, &[f64]) -> f64,
    pub dc: fn(usize, &[f64], &mut [f64]),
    pub bounds: Vec<Bound>,
    pub fv: Option<f64>,
}

impl Problem for Algebraic {
    fn name(&self) -> &str {
        self.name
    }

    fn n(&self) -> usize {
        self.n
    }

    fn m(&self) -> usize {
        self.general + self.bounds.len()
    }

    fn objective(&self, x: &[f64]) -> f64 {
        (self.f)(x)
    }

    fn objective_grad(&self, x: &[f64], grad: &mut [f64]) {
        (self.df)(x, grad)
    }

    fn constraint(&self, j: usize, x: &[f64]) -> f64 {
        if j < self.general {
            return -(self.c)(j, x);
        }
        let b = self.bounds[j - self.general];
        if b.upper {
            x[b.var] - b.value
        } else {
            b.value - x[b.var]
        }
    }

    fn constraint_grad(&self, j: usize, x: &[f64], grad: &mut [f64]) {
        if j < self.general {
            (self.dc)(j, x, grad);
            grad.iter_mut().for_each(|g| *g = -*g);
            return;
        }
        let b = self.bounds[j - self.general];
        grad.fill(0.0);
        grad[b.var] = if b.upper { 1.0 } else { -1.0 };
    }

    fn known_fv(&self) -> Option<f64> {
        self.fv
    }
}
