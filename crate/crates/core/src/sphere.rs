//! Points on the Riemann sphere and the chordal metric.

use num_complex::Complex64;

/// A point of the extended complex plane: a finite value or the point at infinity.
#[derive(Debug, Clone, Copy)]
pub enum SpherePoint {
    Finite(Complex64),
    Infinity,
}

/// Magnitude beyond which a finite value is indistinguishable from infinity
/// for chordal purposes.
const INF_CUTOFF: f64 = 1e140;

impl SpherePoint {
    pub fn finite(re: f64, im: f64) -> Self {
        SpherePoint::Finite(Complex64::new(re, im))
    }

    /// Builds a sphere point, folding non-finite or astronomically large values into infinity.
    pub fn from_complex(z: Complex64) -> Self {
        if z.re.is_finite() && z.im.is_finite() && z.norm_sqr() < INF_CUTOFF {
            SpherePoint::Finite(z)
        } else {
            SpherePoint::Infinity
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, SpherePoint::Infinity)
    }

    pub fn to_complex(&self) -> Option<Complex64> {
        match self {
            SpherePoint::Finite(z) => Some(*z),
            SpherePoint::Infinity => None,
        }
    }

    /// Embedding into the unit sphere in R^3 (stereographic from the north pole).
    /// The chordal distance is the Euclidean distance between embeddings.
    pub fn embed(&self) -> [f64; 3] {
        match self {
            SpherePoint::Infinity => [0.0, 0.0, 1.0],
            SpherePoint::Finite(z) => {
                let n = z.norm_sqr();
                if n > 1.0 {
                    // Work in the w = 1/z chart to avoid overflow.
                    let w = z.conj() / n; // = 1/z
                    let m = w.norm_sqr();
                    let d = 1.0 + m;
                    [2.0 * w.re / d, -2.0 * w.im / d, (1.0 - m) / d]
                } else {
                    let d = 1.0 + n;
                    [2.0 * z.re / d, 2.0 * z.im / d, (n - 1.0) / d]
                }
            }
        }
    }

    /// Chordal (spherical) distance; bounded by 2.
    pub fn chordal(&self, other: &SpherePoint) -> f64 {
        let a = self.embed();
        let b = other.embed();
        let dx = a[0] - b[0];
        let dy = a[1] - b[1];
        let dz = a[2] - b[2];
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// Chordal distance between two finite complex values.
pub fn chordal(a: Complex64, b: Complex64) -> f64 {
    SpherePoint::from_complex(a).chordal(&SpherePoint::from_complex(b))
}

/// Chordal distance from a value to the extended real line R ∪ {inf}.
///
/// Upper bound realized by the nearer of the real part and infinity; exact
/// enough for the tolerances used here (both candidates are on the line).
pub fn chordal_to_real_line(w: &SpherePoint) -> f64 {
    match w {
        SpherePoint::Infinity => 0.0,
        SpherePoint::Finite(z) => {
            let to_re = w.chordal(&SpherePoint::Finite(Complex64::new(z.re, 0.0)));
            let to_inf = w.chordal(&SpherePoint::Infinity);
            to_re.min(to_inf)
        }
    }
}
