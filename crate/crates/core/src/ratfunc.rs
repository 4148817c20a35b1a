//! Reduced rational functions on the Riemann sphere.
//!
//! A `RatFunc` is a quotient of two `ComplexPoly` with no common root, the
//! scalar ambiguity fixed by making the largest-magnitude coefficient across
//! numerator and denominator equal to one. Infinity is handled exclusively
//! through the chart w = 1/z.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::{ComplexPoly, ROOT_CLUSTER_RADIUS};
use crate::sphere::SpherePoint;

/// Tolerance for matching a query point against a computed root cluster.
const ROOT_MATCH_RADIUS: f64 = 1e-5;
/// Relative threshold deciding the vanishing order of chart numerators.
const ORDER_TOL: f64 = 1e-8;

#[derive(Debug, Clone)]
pub struct RatFunc {
    num: ComplexPoly,
    den: ComplexPoly,
}

impl RatFunc {
    /// Builds a rational function, reducing common roots numerically and
    /// normalizing the coefficient pair.
    pub fn new(num: ComplexPoly, den: ComplexPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (num, den) = reduce(num, den)?;
        Ok(Self::from_reduced(num, den))
    }

    /// Constructor for pairs already known to share no root (compositions,
    /// chart companions, conjugations). Only prunes and normalizes.
    pub(crate) fn from_reduced(num: ComplexPoly, den: ComplexPoly) -> Self {
        let mut f = RatFunc { num, den };
        f.normalize();
        f
    }

    pub fn from_poly(p: ComplexPoly) -> Self {
        Self::from_reduced(p, ComplexPoly::one())
    }

    /// The identity map z.
    pub fn identity() -> Self {
        Self::from_poly(ComplexPoly::identity())
    }

    /// Parses (num, den) given as [re, im] coefficient pairs in ascending powers.
    pub fn from_coeff_pairs(num: &[[f64; 2]], den: &[[f64; 2]]) -> Result<Self> {
        let mk = |cs: &[[f64; 2]]| {
            ComplexPoly::new(cs.iter().map(|c| Complex64::new(c[0], c[1])).collect())
        };
        Self::new(mk(num), mk(den))
    }

    /// Divides both polynomials by the first coefficient (numerator first,
    /// ascending powers) whose magnitude is within relative 1e-9 of the
    /// maximum. Near-ties are broken by position so that proportional pairs
    /// normalize identically regardless of rounding noise.
    fn normalize(&mut self) {
        let max_mag = self
            .num
            .coeffs()
            .iter()
            .chain(self.den.coeffs())
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        if max_mag == 0.0 {
            return;
        }
        let pivot = self
            .num
            .coeffs()
            .iter()
            .chain(self.den.coeffs())
            .find(|c| c.norm() >= max_mag * (1.0 - 1e-9))
            .copied()
            .expect("max exists");
        let inv = 1.0 / pivot;
        self.num = self.num.scale(inv);
        self.den = self.den.scale(inv);
    }

    pub fn num(&self) -> &ComplexPoly {
        &self.num
    }

    pub fn den(&self) -> &ComplexPoly {
        &self.den
    }

    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree())
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Evaluation on the sphere; returns infinity where the denominator vanishes.
    pub fn evaluate(&self, z: SpherePoint) -> SpherePoint {
        match z {
            SpherePoint::Finite(z) => {
                let nv = self.num.eval(z);
                let dv = self.den.eval(z);
                if dv.norm() == 0.0 {
                    if nv.norm() == 0.0 {
                        // Cannot happen in reduced form; fall back to a limit probe.
                        let dz = Complex64::new(1e-7, 1e-7);
                        return self.evaluate(SpherePoint::Finite(z + dz));
                    }
                    SpherePoint::Infinity
                } else {
                    SpherePoint::from_complex(nv / dv)
                }
            }
            SpherePoint::Infinity => {
                let d = self.degree();
                let a = self.num.coeffs().get(d).copied().unwrap_or_default();
                let b = self.den.coeffs().get(d).copied().unwrap_or_default();
                if b.norm() == 0.0 {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::from_complex(a / b)
                }
            }
        }
    }

    /// Finite-point evaluation convenience; poles map to a huge value folded
    /// to infinity by `SpherePoint::from_complex` on the caller side.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let dv = self.den.eval(z);
        if dv.norm() == 0.0 {
            return Complex64::new(f64::INFINITY, 0.0);
        }
        self.num.eval(z) / dv
    }

    /// Composition f ∘ g. Compositions of reduced functions are reduced, so
    /// the result skips root matching.
    pub fn compose(&self, g: &RatFunc) -> Result<RatFunc> {
        if self.is_constant() || g.is_constant() {
            return Err(Error::ConstantInput);
        }
        let m = self.degree();
        // Powers of g's numerator and denominator up to m.
        let mut ng_pow = Vec::with_capacity(m + 1);
        let mut dg_pow = Vec::with_capacity(m + 1);
        ng_pow.push(ComplexPoly::one());
        dg_pow.push(ComplexPoly::one());
        for k in 1..=m {
            ng_pow.push(ng_pow[k - 1].mul(&g.num));
            dg_pow.push(dg_pow[k - 1].mul(&g.den));
        }
        let substitute = |p: &ComplexPoly| {
            let mut acc = ComplexPoly::zero();
            for (k, &c) in p.coeffs().iter().enumerate() {
                if c.norm() > 0.0 {
                    acc = acc.add(&ng_pow[k].mul(&dg_pow[m - k]).scale(c));
                }
            }
            acc
        };
        Ok(RatFunc::from_reduced(substitute(&self.num), substitute(&self.den)))
    }

    /// Derivative, reduced using the known pole structure: for a pole of order
    /// k the Wronskian vanishes to order k-1, so the reduced derivative is
    /// W / (den * radical(den)) with those factors deflated from W.
    pub fn derivative(&self) -> RatFunc {
        let w = self.wronskian();
        if w.is_zero() {
            return RatFunc::from_poly(ComplexPoly::zero());
        }
        if self.den.is_constant() {
            return RatFunc::from_reduced(w, self.den.mul(&self.den));
        }
        let poles = self.den.roots().expect("nonzero denominator");
        let mut w_red = w;
        let mut den_new = self.den.clone();
        for &(p, k) in &poles {
            for _ in 0..k.saturating_sub(1) {
                w_red = w_red.deflate(p);
            }
            den_new = den_new.mul(&ComplexPoly::new(vec![-p, Complex64::new(1.0, 0.0)]));
        }
        RatFunc::from_reduced(w_red, den_new)
    }

    /// num' * den - num * den', unreduced. Its roots are exactly the finite
    /// critical points, with order one less than the local multiplicity.
    pub fn wronskian(&self) -> ComplexPoly {
        self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()))
    }

    /// The chart companion g(w) = f(1/w); reduced by construction.
    pub fn chart_at_infinity(&self) -> RatFunc {
        let d = self.degree();
        RatFunc::from_reduced(self.num.reverse(d), self.den.reverse(d))
    }

    /// Critical points with local multiplicities, including infinity via its
    /// chart. Degree-1 maps have none. The Riemann-Hurwitz identity
    /// sum(mult - 1) = 2 deg - 2 holds for the returned set.
    pub fn critical_points(&self) -> Result<Vec<(SpherePoint, usize)>> {
        if self.is_constant() {
            return Err(Error::ConstantInput);
        }
        let mut out = Vec::new();
        let w = self.wronskian();
        if !w.is_zero() && w.degree() > 0 {
            for (r, m) in w.roots()? {
                out.push((SpherePoint::Finite(r), m + 1));
            }
        } else if !w.is_zero() {
            // Constant nonzero Wronskian: no finite critical points.
        }
        let inf_ord = self.order_at_infinity_of_wronskian();
        if inf_ord >= 1 {
            out.push((SpherePoint::Infinity, inf_ord + 1));
        }
        Ok(out)
    }

    /// Vanishing order at w = 0 of the chart companion's Wronskian.
    fn order_at_infinity_of_wronskian(&self) -> usize {
        let g = self.chart_at_infinity();
        let wg = g.wronskian();
        if wg.is_zero() {
            return 0;
        }
        let scale = wg.max_coeff_mag();
        let mut ord = 0;
        for c in wg.coeffs() {
            if c.norm() <= ORDER_TOL * scale {
                ord += 1;
            } else {
                break;
            }
        }
        ord.min(wg.degree())
    }

    /// The set of critical values, deduplicated chordally.
    pub fn critical_values(&self) -> Result<Vec<SpherePoint>> {
        let mut vals: Vec<SpherePoint> = Vec::new();
        for (c, _) in self.critical_points()? {
            let v = self.evaluate(c);
            if !vals.iter().any(|u| u.chordal(&v) < 1e-6) {
                vals.push(v);
            }
        }
        Ok(vals)
    }

    /// Local multiplicity of the map at a point (1 at regular points).
    pub fn multiplicity_at(&self, z0: SpherePoint) -> Result<usize> {
        if self.is_constant() {
            return Err(Error::ConstantInput);
        }
        match z0 {
            SpherePoint::Infinity => self.chart_at_infinity().multiplicity_at(SpherePoint::finite(0.0, 0.0)),
            SpherePoint::Finite(z) => {
                let v = self.evaluate(z0);
                let q = match v {
                    SpherePoint::Infinity => self.den.clone(),
                    SpherePoint::Finite(v) => self.num.sub(&self.den.scale(v)),
                };
                if q.is_zero() {
                    return Err(Error::ConstantInput);
                }
                let scale = 1.0f64.max(z.norm());
                let mult = q
                    .roots()?
                    .into_iter()
                    .filter(|(r, _)| (r - z).norm() <= ROOT_MATCH_RADIUS * scale)
                    .map(|(_, m)| m)
                    .max()
                    .unwrap_or(1);
                Ok(mult)
            }
        }
    }

    /// Coefficient-conjugate companion f*: f*(z) = conj(f(conj(z))).
    pub fn conjugate_coeffs(&self) -> RatFunc {
        RatFunc::from_reduced(self.num.conj_coeffs(), self.den.conj_coeffs())
    }

    /// True iff, after rotating the pivot coefficient to the positive real
    /// axis, every coefficient is real within `tol`. For a function that is a
    /// unimodular multiple of a real-coefficient one, any near-maximal pivot
    /// gives the same verdict.
    pub fn is_real_coefficient(&self, tol: f64) -> bool {
        let max_mag = self
            .num
            .coeffs()
            .iter()
            .chain(self.den.coeffs())
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        if max_mag == 0.0 {
            return true;
        }
        let pivot = self
            .num
            .coeffs()
            .iter()
            .chain(self.den.coeffs())
            .find(|c| c.norm() >= max_mag * (1.0 - 1e-9))
            .copied()
            .expect("max exists");
        let inv = 1.0 / pivot;
        self.num
            .coeffs()
            .iter()
            .chain(self.den.coeffs())
            .all(|c| (c * inv).im.abs() < tol)
    }

    /// Reciprocal 1/f.
    pub fn recip(&self) -> Result<RatFunc> {
        if self.num.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFunc::from_reduced(self.den.clone(), self.num.clone()))
    }

    /// Product, fully reduced.
    pub fn mul(&self, other: &RatFunc) -> Result<RatFunc> {
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// All finite zeros and poles; the natural scale reference for boxes and
    /// chart-switch radii.
    pub fn finite_zeros_and_poles(&self) -> Vec<Complex64> {
        let mut pts = Vec::new();
        for p in [&self.num, &self.den] {
            if !p.is_zero() && p.degree() > 0 {
                if let Ok(rs) = p.roots() {
                    pts.extend(rs.into_iter().map(|(r, _)| r));
                }
            }
        }
        pts
    }

    /// Coefficient-wise comparison of normalized representations.
    pub fn approx_eq(&self, other: &RatFunc, tol: f64) -> bool {
        let cmp = |a: &ComplexPoly, b: &ComplexPoly| {
            a.degree() == b.degree()
                && a.coeffs()
                    .iter()
                    .zip(b.coeffs())
                    .all(|(x, y)| (x - y).norm() <= tol)
        };
        cmp(&self.num, &other.num) && cmp(&self.den, &other.den)
    }
}

impl std::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let fmt_poly = |p: &ComplexPoly| {
            p.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| c.norm() > 1e-13)
                .map(|(k, c)| {
                    let coeff = if c.im.abs() < 1e-13 * (1.0 + c.re.abs()) {
                        format!("{:.6}", c.re)
                    } else {
                        format!("({:.6}{:+.6}i)", c.re, c.im)
                    };
                    match k {
                        0 => coeff,
                        1 => format!("{coeff} z"),
                        _ => format!("{coeff} z^{k}"),
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ")
        };
        let num = if self.num.is_zero() { "0".to_string() } else { fmt_poly(&self.num) };
        if self.den.is_constant() && (self.den.coeffs()[0] - Complex64::new(1.0, 0.0)).norm() < 1e-13 {
            write!(f, "{num}")
        } else {
            write!(f, "({num}) / ({})", fmt_poly(&self.den))
        }
    }
}

/// Root-matched numerical reduction of a fraction.
fn reduce(num: ComplexPoly, den: ComplexPoly) -> Result<(ComplexPoly, ComplexPoly)> {
    if num.is_zero() {
        return Ok((ComplexPoly::zero(), ComplexPoly::one()));
    }
    if num.is_constant() || den.is_constant() {
        return Ok((num, den));
    }
    let nroots = num.roots()?;
    let droots = den.roots()?;
    let mut num_out = num;
    let mut den_out = den;
    let mut used = vec![false; droots.len()];
    for &(rn, mn) in &nroots {
        let scale = 1.0f64.max(rn.norm());
        let mut best: Option<(usize, f64)> = None;
        for (j, &(rd, _)) in droots.iter().enumerate() {
            if used[j] {
                continue;
            }
            let d = (rn - rd).norm();
            if d <= ROOT_CLUSTER_RADIUS * scale && best.map_or(true, |(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        if let Some((j, _)) = best {
            used[j] = true;
            let (rd, md) = droots[j];
            let k = mn.min(md);
            let c = (rn + rd) / 2.0;
            for _ in 0..k {
                num_out = num_out.deflate(c);
                den_out = den_out.deflate(c);
            }
        }
    }
    if den_out.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok((num_out, den_out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn t2() -> RatFunc {
        RatFunc::from_poly(ComplexPoly::from_real(&[-1.0, 0.0, 2.0]))
    }

    /// (z + 1/z)/2 = (z^2+1)/(2z)
    fn joukowski() -> RatFunc {
        RatFunc::new(
            ComplexPoly::from_real(&[1.0, 0.0, 1.0]),
            ComplexPoly::from_real(&[0.0, 2.0]),
        )
        .unwrap()
    }

    #[test]
    fn evaluate_basics() {
        let f = t2();
        let v = f.evaluate(SpherePoint::finite(0.0, 0.0));
        assert!(v.chordal(&SpherePoint::finite(-1.0, 0.0)) < 1e-12);
        assert!(f.evaluate(SpherePoint::Infinity).is_infinity());

        let j = joukowski();
        let v = j.evaluate(SpherePoint::finite(0.0, 1.0));
        assert!(v.chordal(&SpherePoint::finite(0.0, 0.0)) < 1e-12);
        // Pole at the origin.
        assert!(j.evaluate(SpherePoint::finite(0.0, 0.0)).is_infinity());
    }

    #[test]
    fn reduction_cancels_common_factor() {
        // (z^2 - 1)/(z - 1) = z + 1
        let f = RatFunc::new(
            ComplexPoly::from_real(&[-1.0, 0.0, 1.0]),
            ComplexPoly::from_real(&[-1.0, 1.0]),
        )
        .unwrap();
        assert_eq!(f.degree(), 1);
        let v = f.evaluate(SpherePoint::finite(3.0, 0.0));
        assert!(v.chordal(&SpherePoint::finite(4.0, 0.0)) < 1e-9);
    }

    #[test]
    fn normalization_fixes_scalar() {
        let f = RatFunc::new(
            ComplexPoly::from_real(&[0.0, 5.0]),
            ComplexPoly::from_real(&[5.0]),
        )
        .unwrap();
        let maxmag = f
            .num()
            .coeffs()
            .iter()
            .chain(f.den().coeffs())
            .map(|c| c.norm())
            .fold(0.0, f64::max);
        assert!((maxmag - 1.0).abs() < 1e-15);
    }

    #[test]
    fn compose_degree_multiplicative_and_pointwise() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            let mk = |rng: &mut rand_chacha::ChaCha8Rng| {
                let dn = rng.gen_range(1..=4);
                let dd = rng.gen_range(0..=4usize);
                loop {
                    let num = ComplexPoly::new(
                        (0..=dn).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect(),
                    );
                    let den = ComplexPoly::new(
                        (0..=dd).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect(),
                    );
                    if den.is_zero() {
                        continue;
                    }
                    let f = RatFunc::new(num, den).unwrap();
                    if f.degree() >= 1 {
                        return f;
                    }
                }
            };
            let f = mk(&mut rng);
            let g = mk(&mut rng);
            let h = f.compose(&g).unwrap();
            assert_eq!(h.degree(), f.degree() * g.degree());
            for _ in 0..5 {
                let z = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
                let lhs = h.evaluate(SpherePoint::Finite(z));
                let rhs = f.evaluate(g.evaluate(SpherePoint::Finite(z)));
                assert!(lhs.chordal(&rhs) < 1e-6, "composition mismatch at {z}");
            }
        }
    }

    #[test]
    fn compose_with_identity() {
        let f = joukowski();
        let h = f.compose(&RatFunc::identity()).unwrap();
        assert!(h.approx_eq(&f, 1e-12));
    }

    #[test]
    fn derivative_matches_finite_differences() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let fs = vec![t2(), joukowski()];
        for f in fs {
            let df = f.derivative();
            for _ in 0..10 {
                let z = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
                if f.den().eval(z).norm() < 1e-3 {
                    continue;
                }
                let h = 1e-5;
                let fd = (f.eval(z + c(h, 0.0)) - f.eval(z - c(h, 0.0))) / (2.0 * h);
                let dv = df.eval(z);
                assert!((fd - dv).norm() <= 1e-6 * (1.0 + dv.norm()), "at {z}: fd={fd} dv={dv}");
            }
        }
    }

    #[test]
    fn derivative_closed_forms() {
        // T2' = 4z
        let d = t2().derivative();
        assert!(d.approx_eq(&RatFunc::from_poly(ComplexPoly::from_real(&[0.0, 4.0])), 1e-12));
        // (1/z)' = -1/z^2
        let inv = RatFunc::new(ComplexPoly::one(), ComplexPoly::identity()).unwrap();
        let d = inv.derivative();
        let want = RatFunc::new(
            ComplexPoly::from_real(&[-1.0]),
            ComplexPoly::from_real(&[0.0, 0.0, 1.0]),
        )
        .unwrap();
        assert!(d.approx_eq(&want, 1e-12));
        // ((z+1/z)/2)' = (z^2-1)/(2z^2)
        let d = joukowski().derivative();
        let want = RatFunc::new(
            ComplexPoly::from_real(&[-1.0, 0.0, 1.0]),
            ComplexPoly::from_real(&[0.0, 0.0, 2.0]),
        )
        .unwrap();
        assert!(d.approx_eq(&want, 1e-10));
    }

    #[test]
    fn critical_points_of_chebyshev_t2() {
        let cps = t2().critical_points().unwrap();
        assert_eq!(cps.len(), 2);
        let finite = cps.iter().find(|(p, _)| !p.is_infinity()).unwrap();
        assert!(finite.0.chordal(&SpherePoint::finite(0.0, 0.0)) < 1e-9);
        assert_eq!(finite.1, 2);
        let inf = cps.iter().find(|(p, _)| p.is_infinity()).unwrap();
        assert_eq!(inf.1, 2);
    }

    #[test]
    fn critical_points_of_joukowski() {
        // Critical points +-1 with multiplicity 2; the simple poles 0, inf are not critical.
        let cps = joukowski().critical_points().unwrap();
        assert_eq!(cps.len(), 2);
        for (p, m) in &cps {
            assert_eq!(*m, 2);
            assert!(!p.is_infinity());
            let z = p.to_complex().unwrap();
            assert!((z.norm() - 1.0).abs() < 1e-9 && z.im.abs() < 1e-9);
        }
    }

    #[test]
    fn critical_values_examples() {
        // T3: {-1, 1, inf}
        let t3 = RatFunc::from_poly(ComplexPoly::from_real(&[0.0, -3.0, 0.0, 4.0]));
        let cvs = t3.critical_values().unwrap();
        assert_eq!(cvs.len(), 3);
        for target in [SpherePoint::finite(1.0, 0.0), SpherePoint::finite(-1.0, 0.0), SpherePoint::Infinity] {
            assert!(cvs.iter().any(|v| v.chordal(&target) < 1e-8));
        }
        // z^2: {0, inf}
        let sq = RatFunc::from_poly(ComplexPoly::from_real(&[0.0, 0.0, 1.0]));
        let cvs = sq.critical_values().unwrap();
        assert_eq!(cvs.len(), 2);
        // Joukowski: {1, -1}
        let cvs = joukowski().critical_values().unwrap();
        assert_eq!(cvs.len(), 2);
        for v in cvs {
            let z = v.to_complex().unwrap();
            assert!((z.norm() - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn riemann_hurwitz_on_random_functions() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..40 {
            let dn = rng.gen_range(1..=5);
            let dd = rng.gen_range(0..=5usize);
            let num = ComplexPoly::new(
                (0..=dn).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect(),
            );
            let den = ComplexPoly::new(
                (0..=dd).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect(),
            );
            if den.is_zero() || num.is_zero() {
                continue;
            }
            let f = match RatFunc::new(num, den) {
                Ok(f) if f.degree() >= 1 => f,
                _ => continue,
            };
            let n = f.degree();
            let total: usize = f
                .critical_points()
                .unwrap()
                .iter()
                .map(|(_, m)| m - 1)
                .sum();
            assert_eq!(total, 2 * n - 2, "RH failed for degree {n}");
        }
    }

    #[test]
    fn multiplicity_at_examples() {
        assert_eq!(t2().multiplicity_at(SpherePoint::finite(0.0, 0.0)).unwrap(), 2);
        assert_eq!(t2().multiplicity_at(SpherePoint::finite(0.5, 0.0)).unwrap(), 1);
        assert_eq!(joukowski().multiplicity_at(SpherePoint::finite(1.0, 0.0)).unwrap(), 2);
        // Simple pole of the Joukowski map at the origin.
        assert_eq!(joukowski().multiplicity_at(SpherePoint::finite(0.0, 0.0)).unwrap(), 1);
        assert_eq!(t2().multiplicity_at(SpherePoint::Infinity).unwrap(), 2);
    }

    #[test]
    fn conjugate_coeffs_examples() {
        let f = t2();
        assert!(f.conjugate_coeffs().approx_eq(&f, 1e-15));

        let iz = RatFunc::from_poly(ComplexPoly::new(vec![c(0.0, 0.0), c(0.0, 1.0)]));
        let want = RatFunc::from_poly(ComplexPoly::new(vec![c(0.0, 0.0), c(0.0, -1.0)]));
        assert!(iz.conjugate_coeffs().approx_eq(&want, 1e-15));

        // (z-i)/(z+i) -> (z+i)/(z-i)
        let f = RatFunc::new(
            ComplexPoly::new(vec![c(0.0, -1.0), c(1.0, 0.0)]),
            ComplexPoly::new(vec![c(0.0, 1.0), c(1.0, 0.0)]),
        )
        .unwrap();
        let want = RatFunc::new(
            ComplexPoly::new(vec![c(0.0, 1.0), c(1.0, 0.0)]),
            ComplexPoly::new(vec![c(0.0, -1.0), c(1.0, 0.0)]),
        )
        .unwrap();
        assert!(f.conjugate_coeffs().approx_eq(&want, 1e-15));
    }

    #[test]
    fn conjugate_coeffs_is_involution() {
        let f = RatFunc::new(
            ComplexPoly::new(vec![c(0.3, -0.2), c(1.0, 0.5), c(-0.7, 0.1)]),
            ComplexPoly::new(vec![c(1.0, 0.0), c(0.0, 2.0)]),
        )
        .unwrap();
        let g = f.conjugate_coeffs().conjugate_coeffs();
        assert!(f.approx_eq(&g, 0.0));
    }

    #[test]
    fn conjugate_coeffs_probe_identity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let f = RatFunc::new(
            ComplexPoly::new(vec![c(0.3, -0.2), c(1.0, 0.5), c(-0.7, 0.1)]),
            ComplexPoly::new(vec![c(1.0, 0.0), c(0.0, 2.0)]),
        )
        .unwrap();
        let fstar = f.conjugate_coeffs();
        for _ in 0..20 {
            let z = c(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let lhs = fstar.eval(z);
            let rhs = f.eval(z.conj()).conj();
            assert!((lhs - rhs).norm() < 1e-9 * (1.0 + rhs.norm()));
        }
    }

    #[test]
    fn is_real_coefficient_examples() {
        let t5 = {
            // T5 = 16z^5 - 20z^3 + 5z
            RatFunc::from_poly(ComplexPoly::from_real(&[0.0, 5.0, 0.0, -20.0, 0.0, 16.0]))
        };
        assert!(t5.is_real_coefficient(1e-9));

        let isq = RatFunc::from_poly(ComplexPoly::new(vec![c(0.0, 0.0), c(0.0, 0.0), c(0.0, 1.0)]));
        assert!(!isq.is_real_coefficient(1e-9));

        // (z^2 - 1)/(2z)
        let f = RatFunc::new(
            ComplexPoly::from_real(&[-1.0, 0.0, 1.0]),
            ComplexPoly::from_real(&[0.0, 2.0]),
        )
        .unwrap();
        assert!(f.is_real_coefficient(1e-9));

        // A complex-rotated real function is still real-coefficient up to phase.
        let rot = c(0.6, 0.8);
        let g = RatFunc::from_reduced(f.num().scale(rot), f.den().scale(rot));
        assert!(g.is_real_coefficient(1e-9));
    }
}
