//! Named maps: Moebius transformations, the Cayley transform, Chebyshev and
//! circle Belyi families, Blaschke products, and the conjugation dictionary
//! between circle-preserving maps and real-coefficient maps.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::ratfunc::RatFunc;
use crate::sphere::SpherePoint;

/// Chordal tolerance for membership of critical values in {-1, 1, inf}.
pub const BELYI_TOL: f64 = 1e-8;
/// Tolerance for the sampled circle-image test.
pub const CIRCLE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// A Moebius transformation (az + b)/(cz + d) with ad - bc != 0.
#[derive(Debug, Clone, Copy)]
pub struct Moebius {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

impl Moebius {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        if (a * d - b * c).norm() <= 1e-12 {
            return Err(Error::DegenerateMoebius);
        }
        Ok(Moebius { a, b, c, d })
    }

    pub fn identity() -> Self {
        Moebius {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
            c: Complex64::new(0.0, 0.0),
            d: Complex64::new(1.0, 0.0),
        }
    }

    pub fn inverse(&self) -> Self {
        Moebius { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn apply(&self, z: SpherePoint) -> SpherePoint {
        match z {
            SpherePoint::Finite(z) => {
                let den = self.c * z + self.d;
                if den.norm() == 0.0 {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::from_complex((self.a * z + self.b) / den)
                }
            }
            SpherePoint::Infinity => {
                if self.c.norm() == 0.0 {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::from_complex(self.a / self.c)
                }
            }
        }
    }

    pub fn as_ratfunc(&self) -> RatFunc {
        RatFunc::from_reduced(
            ComplexPoly::new(vec![self.b, self.a]),
            ComplexPoly::new(vec![self.d, self.c]),
        )
    }
}

/// The Cayley transformation C(z) = (z + i)/(z - i), carrying the extended
/// real line to the unit circle.
pub fn cayley() -> Moebius {
    Moebius::new(
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, 1.0),
        Complex64::new(1.0, 0.0),
        Complex64::new(0.0, -1.0),
    )
    .expect("Cayley is nondegenerate")
}

/// C^{-1}(z) = i(z + 1)/(z - 1).
pub fn cayley_inverse() -> Moebius {
    cayley().inverse()
}

/// A Moebius transformation of the unit circle to itself:
/// (az + b)/(conj(b) z + conj(a)) with |a| != |b|.
#[derive(Debug, Clone, Copy)]
pub struct CircleMoebius {
    a: Complex64,
    b: Complex64,
}

impl CircleMoebius {
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        if (a.norm() - b.norm()).abs() <= 1e-12 {
            return Err(Error::DegenerateMoebius);
        }
        Ok(CircleMoebius { a, b })
    }

    pub fn as_moebius(&self) -> Moebius {
        Moebius { a: self.a, b: self.b, c: self.b.conj(), d: self.a.conj() }
    }

    pub fn as_ratfunc(&self) -> RatFunc {
        self.as_moebius().as_ratfunc()
    }
}

/// The Chebyshev polynomial sign * T_n as a rational function, built from the
/// recurrence T_{k+1} = 2z T_k - T_{k-1}.
pub fn chebyshev(n: usize, sign: Sign) -> Result<RatFunc> {
    if n == 0 {
        return Err(Error::ConstantInput);
    }
    let mut prev = ComplexPoly::one();
    let mut cur = ComplexPoly::identity();
    let two_z = ComplexPoly::from_real(&[0.0, 2.0]);
    for _ in 1..n {
        let next = two_z.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    Ok(RatFunc::from_poly(cur.scale(Complex64::new(sign.factor(), 0.0))))
}

/// The circle Belyi function sign * (z^n + 1/z^n)/2.
pub fn circle_belyi(n: usize, sign: Sign) -> Result<RatFunc> {
    if n == 0 {
        return Err(Error::ConstantInput);
    }
    let mut num = vec![Complex64::new(0.0, 0.0); 2 * n + 1];
    num[0] = Complex64::new(sign.factor(), 0.0);
    num[2 * n] = Complex64::new(sign.factor(), 0.0);
    let mut den = vec![Complex64::new(0.0, 0.0); n + 1];
    den[n] = Complex64::new(2.0, 0.0);
    Ok(RatFunc::from_reduced(ComplexPoly::new(num), ComplexPoly::new(den)))
}

/// A Blaschke factor (z - a)/(1 - conj(a) z); requires |a| < 1.
pub fn blaschke_factor(a: Complex64) -> Result<RatFunc> {
    if a.norm() >= 1.0 {
        return Err(Error::Numerical(format!("Blaschke zero {a} is not inside the unit disk")));
    }
    RatFunc::new(
        ComplexPoly::new(vec![-a, Complex64::new(1.0, 0.0)]),
        ComplexPoly::new(vec![Complex64::new(1.0, 0.0), -a.conj()]),
    )
}

/// Finite Blaschke product c * prod (z - a_i)/(1 - conj(a_i) z), |c| = 1.
pub fn blaschke_product(zeros: &[Complex64], c: Complex64) -> Result<RatFunc> {
    let mut num = ComplexPoly::constant(c);
    let mut den = ComplexPoly::one();
    for &a in zeros {
        if a.norm() >= 1.0 {
            return Err(Error::Numerical(format!("Blaschke zero {a} is not inside the unit disk")));
        }
        num = num.mul(&ComplexPoly::new(vec![-a, Complex64::new(1.0, 0.0)]));
        den = den.mul(&ComplexPoly::new(vec![Complex64::new(1.0, 0.0), -a.conj()]));
    }
    RatFunc::new(num, den)
}

/// Quotient of finite Blaschke products with the given zeros of the numerator
/// and denominator parts.
pub fn blaschke_quotient(zeros: &[Complex64], poles_of: &[Complex64], c: Complex64) -> Result<RatFunc> {
    let b1 = blaschke_product(zeros, c)?;
    let b2 = blaschke_product(poles_of, Complex64::new(1.0, 0.0))?;
    b1.mul(&b2.recip()?)
}

/// True iff every critical value lies chordally within `BELYI_TOL` of
/// {-1, 1, inf}. Degree-1 maps are vacuously Belyi.
pub fn is_belyi(f: &RatFunc) -> bool {
    if f.is_constant() {
        return false;
    }
    let targets = [
        SpherePoint::finite(-1.0, 0.0),
        SpherePoint::finite(1.0, 0.0),
        SpherePoint::Infinity,
    ];
    match f.critical_values() {
        Ok(vals) => vals
            .iter()
            .all(|v| targets.iter().any(|t| v.chordal(t) < BELYI_TOL)),
        Err(_) => false,
    }
}

/// Sampled test that f maps the unit circle to itself: |f(e^{i theta})| = 1
/// within `CIRCLE_TOL` at 4 deg f + 1 equispaced angles, enough to decide the
/// underlying rational identity.
pub fn is_circle_to_circle(f: &RatFunc) -> bool {
    let n = 4 * f.degree() + 1;
    for k in 0..n {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        let z = Complex64::new(theta.cos(), theta.sin());
        let v = f.eval(z);
        if !v.is_finite() || (v.norm() - 1.0).abs() > CIRCLE_TOL {
            return false;
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CayleyDirection {
    /// C^{-1} ∘ f ∘ C: carries circle-preserving maps to real-coefficient maps.
    ToRealLine,
    /// C ∘ f ∘ C^{-1}: the inverse dictionary.
    ToCircle,
}

/// Conjugation by the Cayley transform in either direction.
pub fn conjugate_by_cayley(f: &RatFunc, direction: CayleyDirection) -> Result<RatFunc> {
    let c = cayley().as_ratfunc();
    let ci = cayley_inverse().as_ratfunc();
    match direction {
        CayleyDirection::ToRealLine => ci.compose(f)?.compose(&c),
        CayleyDirection::ToCircle => c.compose(f)?.compose(&ci),
    }
}

/// Searches the unit circle for a rotation c such that f1 and f2(cz) have no
/// common critical points. Requires that 0 and infinity are not critical
/// points of f2 (arrange with a `CircleMoebius` first).
pub fn rotation_search(f1: &RatFunc, f2: &RatFunc) -> Result<Complex64> {
    if f1.degree() < 2 || f2.degree() < 2 {
        return Err(Error::Numerical("rotation_search requires both degrees >= 2".into()));
    }
    let crit2 = f2.critical_points()?;
    let zero = SpherePoint::finite(0.0, 0.0);
    for (p, _) in &crit2 {
        if p.is_infinity() || p.chordal(&zero) < 1e-6 {
            return Err(Error::RotationPrecondition);
        }
    }
    let crit1: Vec<SpherePoint> = f1.critical_points()?.into_iter().map(|(p, _)| p).collect();
    let crit2: Vec<Complex64> = crit2
        .into_iter()
        .map(|(p, _)| p.to_complex().expect("finite by precondition"))
        .collect();

    // Critical points of f2(cz) are the rotated set crit2 / c.
    let score = |theta: f64| -> f64 {
        let c = Complex64::new(theta.cos(), theta.sin());
        let mut min = f64::INFINITY;
        for p1 in &crit1 {
            for p2 in &crit2 {
                min = min.min(p1.chordal(&SpherePoint::from_complex(p2 / c)));
            }
        }
        min
    };

    let mut best_theta = 0.0;
    let mut best = -1.0;
    let coarse = 360;
    for k in 0..coarse {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / coarse as f64;
        let s = score(theta);
        if s > best {
            best = s;
            best_theta = theta;
        }
    }
    let mut width = 2.0 * std::f64::consts::PI / coarse as f64;
    for _ in 0..2 {
        for k in 0..36 {
            let theta = best_theta - width / 2.0 + width * k as f64 / 35.0;
            let s = score(theta);
            if s > best {
                best = s;
                best_theta = theta;
            }
        }
        width /= 10.0;
    }
    if best > 1e-6 {
        Ok(Complex64::new(best_theta.cos(), best_theta.sin()))
    } else {
        Err(Error::RotationNotFound)
    }
}

/// Finds a circle-preserving Moebius transformation m such that neither 0 nor
/// infinity is a critical point of f ∘ m; deterministic for a fixed seed.
pub fn circle_moebius_avoiding(f: &RatFunc, seed: u64) -> Result<CircleMoebius> {
    use rand::{Rng, SeedableRng};
    let crit: Vec<SpherePoint> = f.critical_points()?.into_iter().map(|(p, _)| p).collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..200 {
        let a = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let b = Complex64::new(rng.gen_range(-0.4..0.4), rng.gen_range(-0.4..0.4));
        let Ok(m) = CircleMoebius::new(a, b) else { continue };
        // Critical points of f ∘ m are m^{-1}(crit f); 0 and inf are excluded
        // iff m(0) and m(inf) avoid crit f.
        let m0 = m.as_moebius().apply(SpherePoint::finite(0.0, 0.0));
        let minf = m.as_moebius().apply(SpherePoint::Infinity);
        let clear = crit
            .iter()
            .all(|p| p.chordal(&m0) > 1e-3 && p.chordal(&minf) > 1e-3);
        if clear {
            return Ok(m);
        }
    }
    Err(Error::RotationNotFound)
}
