//! Real bivariate polynomials on a monomial grid, plus the complex expansion
//! helpers used to realify rational identities in z = x + iy.

use num_complex::Complex64;

use crate::poly::ComplexPoly;

const PRUNE_TOL: f64 = 1e-12;

/// Real polynomial in two variables; `coeffs[i][j]` multiplies x^i y^j.
/// Trailing zero rows and columns are pruned.
#[derive(Debug, Clone, PartialEq)]
pub struct BivarPoly {
    coeffs: Vec<Vec<f64>>,
}

impl BivarPoly {
    pub fn new(coeffs: Vec<Vec<f64>>) -> Self {
        let mut p = BivarPoly { coeffs };
        p.prune();
        p
    }

    pub fn zero() -> Self {
        BivarPoly { coeffs: vec![vec![0.0]] }
    }

    pub fn constant(c: f64) -> Self {
        BivarPoly { coeffs: vec![vec![c]] }
    }

    fn prune(&mut self) {
        let maxmag = self.max_coeff();
        let tol = PRUNE_TOL * maxmag;
        // Rectangularize first.
        let width = self.coeffs.iter().map(|r| r.len()).max().unwrap_or(1);
        for row in &mut self.coeffs {
            row.resize(width, 0.0);
        }
        while self.coeffs.len() > 1
            && self.coeffs.last().unwrap().iter().all(|c| c.abs() <= tol)
        {
            self.coeffs.pop();
        }
        let mut width = self.coeffs[0].len();
        while width > 1 && self.coeffs.iter().all(|r| r[width - 1].abs() <= tol) {
            width -= 1;
        }
        for row in &mut self.coeffs {
            row.truncate(width);
        }
    }

    pub fn coeffs(&self) -> &[Vec<f64>] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize, j: usize) -> f64 {
        self.coeffs.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0.0)
    }

    pub fn degree_x(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn degree_y(&self) -> usize {
        self.coeffs[0].len() - 1
    }

    pub fn total_degree(&self) -> usize {
        let mut d = 0;
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if c.abs() > 0.0 {
                    d = d.max(i + j);
                }
            }
        }
        d
    }

    pub fn max_coeff(&self) -> f64 {
        self.coeffs
            .iter()
            .flat_map(|r| r.iter())
            .map(|c| c.abs())
            .fold(0.0, f64::max)
    }

    pub fn is_zero(&self) -> bool {
        self.max_coeff() == 0.0
    }

    pub fn eval(&self, x: f64, y: f64) -> f64 {
        let mut acc = 0.0;
        for row in self.coeffs.iter().rev() {
            let mut ry = 0.0;
            for c in row.iter().rev() {
                ry = ry * y + c;
            }
            acc = acc * x + ry;
        }
        acc
    }

    /// Sum of |c_ij| |x|^i |y|^j: the natural residual scale at (x, y).
    pub fn eval_scale(&self, x: f64, y: f64) -> f64 {
        let ax = x.abs();
        let ay = y.abs();
        let mut acc = 0.0;
        let mut xp = 1.0;
        for row in &self.coeffs {
            let mut yp = 1.0;
            for c in row {
                acc += c.abs() * xp * yp;
                yp *= ay;
            }
            xp *= ax;
        }
        acc.max(self.max_coeff())
    }

    /// Evaluation at complex arguments (used for certificates R(u, v)).
    pub fn eval_complex(&self, u: Complex64, v: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for row in self.coeffs.iter().rev() {
            let mut rv = Complex64::new(0.0, 0.0);
            for c in row.iter().rev() {
                rv = rv * v + c;
            }
            acc = acc * u + rv;
        }
        acc
    }

    pub fn partial_x(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero();
        }
        let out: Vec<Vec<f64>> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, row)| row.iter().map(|c| c * i as f64).collect())
            .collect();
        Self::new(out)
    }

    pub fn partial_y(&self) -> Self {
        let out: Vec<Vec<f64>> = self
            .coeffs
            .iter()
            .map(|row| {
                if row.len() == 1 {
                    vec![0.0]
                } else {
                    row.iter().enumerate().skip(1).map(|(j, c)| c * j as f64).collect()
                }
            })
            .collect();
        Self::new(out)
    }

    /// Coefficients of the univariate polynomial in y obtained by fixing x.
    pub fn y_coeffs_at(&self, x: f64) -> Vec<f64> {
        let width = self.coeffs[0].len();
        let mut out = vec![0.0; width];
        for j in 0..width {
            let mut acc = 0.0;
            for row in self.coeffs.iter().rev() {
                acc = acc * x + row[j];
            }
            out[j] = acc;
        }
        out
    }

    /// Exact division by y; requires every monomial to carry a positive power
    /// of y (up to pruning dust).
    pub fn div_y(&self) -> Self {
        let out: Vec<Vec<f64>> = self
            .coeffs
            .iter()
            .map(|row| if row.len() == 1 { vec![0.0] } else { row[1..].to_vec() })
            .collect();
        Self::new(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let rows = self.coeffs.len().max(other.coeffs.len());
        let cols = self.coeffs[0].len().max(other.coeffs[0].len());
        let mut out = vec![vec![0.0; cols]; rows];
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                out[i][j] += c;
            }
        }
        for (i, row) in other.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                out[i][j] += c;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .map(|row| row.iter().map(|c| c * s).collect())
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let rows = self.coeffs.len() + other.coeffs.len() - 1;
        let cols = self.coeffs[0].len() + other.coeffs[0].len() - 1;
        let mut out = vec![vec![0.0; cols]; rows];
        for (i, ra) in self.coeffs.iter().enumerate() {
            for (j, a) in ra.iter().enumerate() {
                if *a == 0.0 {
                    continue;
                }
                for (k, rb) in other.coeffs.iter().enumerate() {
                    for (l, b) in rb.iter().enumerate() {
                        out[i + k][j + l] += a * b;
                    }
                }
            }
        }
        Self::new(out)
    }
}

/// Complex-coefficient bivariate polynomial; internal scaffolding for
/// realification.
#[derive(Debug, Clone)]
pub(crate) struct CBivar {
    pub coeffs: Vec<Vec<Complex64>>,
}

impl CBivar {
    fn zero() -> Self {
        CBivar { coeffs: vec![vec![Complex64::new(0.0, 0.0)]] }
    }

    fn add_assign_scaled(&mut self, other: &CBivar, s: Complex64) {
        let rows = self.coeffs.len().max(other.coeffs.len());
        let cols = self.coeffs[0].len().max(other.coeffs[0].len());
        let mut out = vec![vec![Complex64::new(0.0, 0.0); cols]; rows];
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                out[i][j] += c;
            }
        }
        for (i, row) in other.coeffs.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                out[i][j] += c * s;
            }
        }
        self.coeffs = out;
    }

    pub fn mul(&self, other: &CBivar) -> CBivar {
        let rows = self.coeffs.len() + other.coeffs.len() - 1;
        let cols = self.coeffs[0].len() + other.coeffs[0].len() - 1;
        let mut out = vec![vec![Complex64::new(0.0, 0.0); cols]; rows];
        for (i, ra) in self.coeffs.iter().enumerate() {
            for (j, a) in ra.iter().enumerate() {
                if a.norm() == 0.0 {
                    continue;
                }
                for (k, rb) in other.coeffs.iter().enumerate() {
                    for (l, b) in rb.iter().enumerate() {
                        out[i + k][j + l] += a * b;
                    }
                }
            }
        }
        CBivar { coeffs: out }
    }

    pub fn real_part(&self) -> BivarPoly {
        BivarPoly::new(
            self.coeffs
                .iter()
                .map(|row| row.iter().map(|c| c.re).collect())
                .collect(),
        )
    }

    pub fn imag_part(&self) -> BivarPoly {
        BivarPoly::new(
            self.coeffs
                .iter()
                .map(|row| row.iter().map(|c| c.im).collect())
                .collect(),
        )
    }
}

/// Expands p(x + iy) (or conj-coefficients p(x - iy) when `conjugate`) over
/// the real monomials x^i y^j with complex coefficients.
pub(crate) fn expand_in_xy(p: &ComplexPoly, conjugate: bool) -> CBivar {
    // z = x + iy or x - iy as a CBivar.
    let i_unit = if conjugate {
        Complex64::new(0.0, -1.0)
    } else {
        Complex64::new(0.0, 1.0)
    };
    let z = CBivar {
        coeffs: vec![
            vec![Complex64::new(0.0, 0.0), i_unit],
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
        ],
    };
    let mut power = CBivar { coeffs: vec![vec![Complex64::new(1.0, 0.0)]] };
    let mut acc = CBivar::zero();
    for (k, &c) in p.coeffs().iter().enumerate() {
        let coeff = if conjugate { c.conj() } else { c };
        if k > 0 {
            power = power.mul(&z);
        }
        if coeff.norm() > 0.0 {
            acc.add_assign_scaled(&power, coeff);
        }
    }
    acc
}
