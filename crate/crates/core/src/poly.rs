//! Dense complex-coefficient univariate polynomials: arithmetic, evaluation,
//! and a validated root finder (Aberth-Ehrlich with multiplicity clustering).

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Relative tolerance for dropping trailing coefficient dust.
pub const COEFF_PRUNE_TOL: f64 = 1e-12;
/// Radius for merging root approximations into one root with summed multiplicity.
pub const ROOT_CLUSTER_RADIUS: f64 = 1e-7;
/// Residual bound for a validated root: |p(r)| < tol * coefficient scale at r.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-8;

const EPS: f64 = f64::EPSILON;

/// Dense univariate polynomial over the complex numbers, coefficients in
/// ascending powers. The leading coefficient of a nonzero polynomial is
/// guaranteed to exceed the pruning tolerance; the zero polynomial is the
/// single coefficient 0.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = ComplexPoly { coeffs };
        p.prune();
        p
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        ComplexPoly { coeffs: vec![Complex64::new(0.0, 0.0)] }
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        ComplexPoly { coeffs: vec![c] }
    }

    /// The identity polynomial z.
    pub fn identity() -> Self {
        ComplexPoly { coeffs: vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)] }
    }

    /// Monic product of (z - r_i)^{m_i}, scaled by `lead`.
    pub fn from_roots(roots: &[(Complex64, usize)], lead: Complex64) -> Self {
        let mut p = Self::constant(lead);
        for &(r, m) in roots {
            let lin = ComplexPoly::new(vec![-r, Complex64::new(1.0, 0.0)]);
            for _ in 0..m {
                p = p.mul(&lin);
            }
        }
        p
    }

    fn prune(&mut self) {
        let maxmag = self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        let tol = COEFF_PRUNE_TOL * maxmag;
        while self.coeffs.len() > 1 {
            if self.coeffs.last().unwrap().norm() <= tol {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        if self.coeffs.is_empty() {
            self.coeffs.push(Complex64::new(0.0, 0.0));
        }
        if self.coeffs.len() == 1 && self.coeffs[0].norm() == 0.0 {
            self.coeffs[0] = Complex64::new(0.0, 0.0);
        }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].norm() == 0.0
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn leading(&self) -> Complex64 {
        *self.coeffs.last().unwrap()
    }

    pub fn max_coeff_mag(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Sum of |c_k| |z|^k, the natural scale for evaluation residuals.
    pub fn eval_scale(&self, z: Complex64) -> f64 {
        let r = z.norm();
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * r + c.norm();
        }
        acc
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Self::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero();
        }
        let out: Vec<Complex64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as f64)
            .collect();
        Self::new(out)
    }

    /// Coefficient-wise conjugation: p*(z) = conj(p(conj(z))).
    pub fn conj_coeffs(&self) -> Self {
        ComplexPoly { coeffs: self.coeffs.iter().map(|c| c.conj()).collect() }
    }

    /// w^d * p(1/w): the chart companion at infinity, padded to degree `d`.
    /// Requires d >= deg p.
    pub fn reverse(&self, d: usize) -> Self {
        assert!(d >= self.degree());
        let mut out = vec![Complex64::new(0.0, 0.0); d + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[d - k] = c;
        }
        Self::new(out)
    }

    /// Synthetic division by (z - r); the remainder is discarded.
    pub fn deflate(&self, r: Complex64) -> Self {
        let n = self.coeffs.len();
        if n <= 1 {
            return Self::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); n - 1];
        let mut carry = self.coeffs[n - 1];
        for k in (0..n - 1).rev() {
            out[k] = carry;
            carry = self.coeffs[k] + carry * r;
        }
        Self::new(out)
    }

    /// All roots with multiplicities, validated against the residual contract:
    /// every returned root r satisfies |p(r)| <= tol * (sum_k |c_k||r|^k), and
    /// approximations within the cluster radius are merged with summed
    /// multiplicity. Roots are sorted by (re, im).
    pub fn roots(&self) -> Result<Vec<(Complex64, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_constant() {
            return Ok(Vec::new());
        }

        // Exact handling of the root at zero: strip low-order dust.
        let maxmag = self.max_coeff_mag();
        let tol = COEFF_PRUNE_TOL * maxmag;
        let mut low = 0;
        while low < self.coeffs.len() - 1 && self.coeffs[low].norm() <= tol {
            low += 1;
        }
        let deflated = ComplexPoly::new(self.coeffs[low..].to_vec());

        let mut out: Vec<(Complex64, usize)> = Vec::new();
        if low > 0 {
            out.push((Complex64::new(0.0, 0.0), low));
        }
        if deflated.degree() > 0 {
            let raw = aberth(&deflated.coeffs);
            let clustered = cluster_roots(&raw, &deflated);
            out.extend(clustered);
        }
        out.sort_by(|a, b| {
            a.0.re
                .partial_cmp(&b.0.re)
                .unwrap()
                .then(a.0.im.partial_cmp(&b.0.im).unwrap())
        });
        Ok(out)
    }

    /// Residual contract check for a claimed root.
    pub fn root_residual_ok(&self, r: Complex64) -> bool {
        self.eval(r).norm() <= ROOT_RESIDUAL_TOL * self.eval_scale(r).max(self.max_coeff_mag())
    }
}

/// Aberth-Ehrlich simultaneous iteration. Input must have nonzero leading and
/// constant coefficients (zero roots pre-stripped); returns one approximation
/// per root, unclustered.
fn aberth(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<Complex64> = coeffs.iter().map(|&c| c / lead).collect();
    if n == 1 {
        return vec![-monic[0]];
    }
    if n == 2 {
        // Stable quadratic formula.
        let b = monic[1];
        let c = monic[0];
        let disc = (b * b - 4.0 * c).sqrt();
        let q = if (b + disc).norm() >= (b - disc).norm() { -(b + disc) / 2.0 } else { -(b - disc) / 2.0 };
        let r1 = q;
        let r2 = if q.norm() > 0.0 { c / q } else { -b - q };
        return vec![r1, r2];
    }

    let p = ComplexPoly { coeffs: monic.clone() };
    let dp = p.derivative();

    // Initial guesses on a circle between the geometric-mean and Cauchy radii.
    let cauchy = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let inner = monic[0].norm().powf(1.0 / n as f64).max(1e-12);
    let radius = (inner * cauchy).sqrt().min(cauchy);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.437;
            radius * Complex64::new(theta.cos(), theta.sin())
        })
        .collect();

    let max_iter = 400;
    for _ in 0..max_iter {
        let mut done = true;
        for i in 0..n {
            let pv = p.eval(z[i]);
            if pv.norm() <= 1e-15 * p.eval_scale(z[i]) {
                continue;
            }
            let dv = dp.eval(z[i]);
            let newton = if dv.norm() > 0.0 {
                pv / dv
            } else {
                // Nudge off an exact critical point.
                Complex64::new(1e-8, 1e-8)
            };
            let mut rep = Complex64::new(0.0, 0.0);
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d.norm() > 0.0 {
                        rep += 1.0 / d;
                    }
                }
            }
            let denom = 1.0 - newton * rep;
            let delta = if denom.norm() > 1e-290 { newton / denom } else { newton };
            z[i] -= delta;
            if delta.norm() > 1e-14 * (1.0 + z[i].norm()) {
                done = false;
            }
        }
        if done {
            break;
        }
    }
    z
}

/// Merge raw root approximations into (root, multiplicity) clusters.
///
/// An m-fold root leaves the Aberth approximations on a ring of radius
/// roughly (eps * scale / |p^(m)/m!|)^(1/m) around the true root, whose
/// centroid recovers the root to far higher accuracy. Clustering is top-down:
/// group generously, accept a fused group only when it passes residual and
/// ring-geometry validation, and otherwise split at successively tighter
/// radii down to the strict contract radius. Multiple roots are resolved
/// against neighbors separated by at least ~1e-4 * scale; closer structure is
/// below what f64 evaluation can distinguish.
fn cluster_roots(raw: &[Complex64], p: &ComplexPoly) -> Vec<(Complex64, usize)> {
    fn centroid(members: &[Complex64]) -> Complex64 {
        members.iter().sum::<Complex64>() / members.len() as f64
    }

    fn single_linkage(members: &[Complex64], radius: f64) -> Vec<Vec<Complex64>> {
        let n = members.len();
        let mut group = (0..n).collect::<Vec<usize>>();
        fn find(g: &mut Vec<usize>, i: usize) -> usize {
            if g[i] != i {
                let r = find(g, g[i]);
                g[i] = r;
            }
            g[i]
        }
        for i in 0..n {
            for j in i + 1..n {
                let scale = 1.0f64.max(members[i].norm()).max(members[j].norm());
                if (members[i] - members[j]).norm() <= radius * scale {
                    let (a, b) = (find(&mut group, i), find(&mut group, j));
                    if a != b {
                        group[a] = b;
                    }
                }
            }
        }
        let mut out: Vec<Vec<Complex64>> = Vec::new();
        let mut labels: Vec<usize> = Vec::new();
        for i in 0..n {
            let r = find(&mut group, i);
            match labels.iter().position(|&l| l == r) {
                Some(k) => out[k].push(members[i]),
                None => {
                    labels.push(r);
                    out.push(vec![members[i]]);
                }
            }
        }
        out
    }

    /// Linkage radius generous enough to capture an m-ring.
    fn link_radius(m: usize) -> f64 {
        25.0 * EPS.powf(1.0 / m.min(8) as f64)
    }

    /// Validate the hypothesis that `members` are the ring of one m-fold root.
    fn fuse_ok(members: &[Complex64], p: &ComplexPoly) -> Option<Complex64> {
        let m = members.len();
        let mut center = centroid(members);
        if m == 1 {
            return Some(center);
        }
        let scale = 1.0f64.max(center.norm());
        // Predicted ring radius from the local m-th derivative.
        let mut dprev = p.clone();
        let mut dm = p.derivative();
        let mut fact = 1.0;
        for k in 2..=m {
            dprev = dm.clone();
            dm = dm.derivative();
            fact *= k as f64;
        }
        let lead = (dm.eval(center).norm() / fact).max(1e-300);
        let noise = EPS * p.eval_scale(center).max(p.max_coeff_mag());
        let rho_pred = (noise / lead).powf(1.0 / m as f64);
        let allow = (25.0 * rho_pred).max(ROOT_CLUSTER_RADIUS * scale);
        if members.iter().any(|z| (z - center).norm() > allow) {
            return None;
        }
        // An m-fold root is a simple root of the (m-1)-th derivative; Newton
        // there recovers it to machine precision where the centroid cannot.
        let mut polished = center;
        for _ in 0..40 {
            let dv = dm.eval(polished);
            if dv.norm() == 0.0 {
                break;
            }
            let step = dprev.eval(polished) / dv;
            polished -= step;
            if step.norm() <= 1e-15 * (1.0 + polished.norm()) {
                break;
            }
        }
        if (polished - center).norm() <= allow {
            center = polished;
        }
        // A genuine ring spreads its members in angle; tight sub-pairs do not.
        if m >= 3 {
            let mut angles: Vec<f64> = members
                .iter()
                .map(|z| {
                    let d = z - center;
                    d.im.atan2(d.re)
                })
                .collect();
            angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut min_gap = f64::INFINITY;
            for k in 0..m {
                let next = if k + 1 == m {
                    angles[0] + 2.0 * std::f64::consts::PI
                } else {
                    angles[k + 1]
                };
                min_gap = min_gap.min(next - angles[k]);
            }
            if min_gap < std::f64::consts::PI / (2.0 * m as f64) {
                return None;
            }
        }
        if p.eval(center).norm() <= 1e4 * noise {
            Some(center)
        } else {
            None
        }
    }

    fn refine(members: Vec<Complex64>, p: &ComplexPoly, out: &mut Vec<(Complex64, usize)>) {
        let m = members.len();
        if m == 1 {
            out.push((members[0], 1));
            return;
        }
        if let Some(center) = fuse_ok(&members, p) {
            out.push((center, m));
            return;
        }
        for mh in (2..m).rev() {
            let subs = single_linkage(&members, link_radius(mh));
            if subs.len() > 1 {
                for s in subs {
                    refine(s, p, out);
                }
                return;
            }
        }
        let subs = single_linkage(&members, ROOT_CLUSTER_RADIUS);
        if subs.len() > 1 {
            for s in subs {
                refine(s, p, out);
            }
        } else {
            // Inseparable at the contract radius: merge unconditionally.
            out.push((centroid(&members), m));
        }
    }

    let mut out = Vec::new();
    for group in single_linkage(raw, link_radius(raw.len())) {
        refine(group, p, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn find_root(roots: &[(Complex64, usize)], target: Complex64) -> Option<usize> {
        roots
            .iter()
            .find(|(r, _)| (r - target).norm() < 1e-6)
            .map(|(_, m)| *m)
    }

    #[test]
    fn roots_of_z_squared_minus_one() {
        let p = ComplexPoly::from_real(&[-1.0, 0.0, 1.0]);
        let roots = p.roots().unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(find_root(&roots, c(1.0, 0.0)), Some(1));
        assert_eq!(find_root(&roots, c(-1.0, 0.0)), Some(1));
    }

    #[test]
    fn double_root_clusters() {
        // (z-1)^2
        let p = ComplexPoly::from_real(&[1.0, -2.0, 1.0]);
        let roots = p.roots().unwrap();
        assert_eq!(roots.len(), 1);
        assert_eq!(find_root(&roots, c(1.0, 0.0)), Some(2));
    }

    #[test]
    fn chebyshev_like_cubic() {
        // 4z^3 - 3z = z(4z^2 - 3); verified by substitution.
        let p = ComplexPoly::from_real(&[0.0, -3.0, 0.0, 4.0]);
        let roots = p.roots().unwrap();
        assert_eq!(roots.iter().map(|(_, m)| m).sum::<usize>(), 3);
        let s = 3.0f64.sqrt() / 2.0;
        assert_eq!(find_root(&roots, c(0.0, 0.0)), Some(1));
        assert_eq!(find_root(&roots, c(s, 0.0)), Some(1));
        assert_eq!(find_root(&roots, c(-s, 0.0)), Some(1));
        for (r, _) in &roots {
            assert!(p.root_residual_ok(*r));
        }
    }

    #[test]
    fn triple_root_fuses() {
        // (z-1)^3: the Aberth ring has radius ~eps^(1/3); ring fusion must merge it.
        let p = ComplexPoly::from_real(&[-1.0, 3.0, -3.0, 1.0]);
        let roots = p.roots().unwrap();
        assert_eq!(roots.len(), 1, "got {roots:?}");
        let (r, m) = roots[0];
        assert_eq!(m, 3);
        assert!((r - c(1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn nearby_distinct_roots_stay_distinct() {
        // Two double roots 0.1 apart must not fuse into a quadruple.
        let a = c(1.0, 0.0);
        let b = c(1.1, 0.0);
        let p = ComplexPoly::from_roots(&[(a, 2), (b, 2)], c(1.0, 0.0));
        let roots = p.roots().unwrap();
        assert_eq!(roots.len(), 2, "got {roots:?}");
        assert_eq!(find_root(&roots, a), Some(2));
        assert_eq!(find_root(&roots, b), Some(2));
    }

    #[test]
    fn zero_polynomial_errors() {
        let p = ComplexPoly::zero();
        assert!(matches!(p.roots(), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn monomial_roots_are_exact() {
        // 2z^3 has a triple zero, recovered by low-order stripping.
        let p = ComplexPoly::from_real(&[0.0, 0.0, 0.0, 2.0]);
        let roots = p.roots().unwrap();
        assert_eq!(roots, vec![(c(0.0, 0.0), 3)]);
    }

    #[test]
    fn residual_contract_on_random_polys() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let deg = rng.gen_range(1..=8);
            let coeffs: Vec<Complex64> = (0..=deg)
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let p = ComplexPoly::new(coeffs);
            if p.degree() == 0 {
                continue;
            }
            let roots = p.roots().unwrap();
            assert_eq!(roots.iter().map(|(_, m)| m).sum::<usize>(), p.degree());
            for (r, _) in &roots {
                assert!(p.root_residual_ok(*r), "residual violated for {r}");
            }
        }
    }

    #[test]
    fn deflate_divides_out_linear_factor() {
        let p = ComplexPoly::from_roots(&[(c(2.0, 0.0), 1), (c(-1.0, 0.5), 1)], c(3.0, 0.0));
        let q = p.deflate(c(2.0, 0.0));
        assert_eq!(q.degree(), 1);
        assert!(q.eval(c(-1.0, 0.5)).norm() < 1e-12);
    }
}
