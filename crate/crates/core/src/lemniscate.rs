//! Intersections of rational lemniscates |P1| = |P2| = 1: realification,
//! resultant elimination, bound checks, and degenerate-pair detection.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::bivar::{expand_in_xy, BivarPoly};
use crate::error::{Error, Result};
use crate::poly::ComplexPoly;
use crate::ratfunc::RatFunc;

/// Residual bound for a validated intersection point: ||P_i(z)| - 1| < this.
pub const RESIDUAL_TOL: f64 = 1e-8;
/// Points closer than this are one intersection.
pub const DEDUP_RADIUS: f64 = 1e-6;

/// Number of intersection points, or infinite in the shared-component case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntersectionCount {
    Finite(usize),
    Infinite,
}

/// Validated intersections of two lemniscates, with the bound data of the
/// underlying pair.
#[derive(Debug, Clone)]
pub struct IntersectionReport {
    pub points: Vec<Complex64>,
    pub count: IntersectionCount,
    /// (n1 + n2)^2
    pub bound_quadratic: usize,
    /// 2 n1 n2, attained by worst-case pairs.
    pub bound_sharp: usize,
    pub degenerate: bool,
    /// Per point: max of ||P1| - 1|, ||P2| - 1|.
    pub residuals: Vec<f64>,
    pub degrees: (usize, usize),
}

#[derive(Debug, Clone, Copy)]
pub struct BoundCheck {
    pub within_quadratic: bool,
    pub within_sharp: bool,
}

/// Realification of |P(z)| = 1: F(x, y) = |num(x+iy)|^2 - |den(x+iy)|^2,
/// which vanishes exactly on the lemniscate. Total degree <= 2 deg P.
pub fn realify(p: &RatFunc) -> BivarPoly {
    let n = expand_in_xy(p.num(), false);
    let nc = expand_in_xy(p.num(), true);
    let d = expand_in_xy(p.den(), false);
    let dc = expand_in_xy(p.den(), true);
    n.mul(&nc).real_part().add(&d.mul(&dc).real_part().scale(-1.0))
}

/// Outcome of the shared elimination core.
pub(crate) enum SystemOutcome {
    /// The two curves share a component; the solution set is infinite.
    Degenerate,
    /// Finite candidate solutions (polished on the bivariate pair).
    Points(Vec<(f64, f64)>),
}

/// Solves F1 = F2 = 0 for real (x, y) by eliminating y with an interpolated
/// Sylvester resultant, back-substituting, and polishing with damped Newton.
/// `span` scales both variables for conditioning; it must generously cover
/// the solution range so that the scaled solutions lie near the unit box,
/// where the sampled determinants keep a bounded dynamic range.
pub(crate) fn solve_system(f1: &BivarPoly, f2: &BivarPoly, span: f64) -> Result<SystemOutcome> {
    if f1.is_zero() || f2.is_zero() {
        return Ok(SystemOutcome::Degenerate);
    }
    // Work in (s, t) = (x, y) / span with unit-normalized coefficients.
    let scale_xy = |f: &BivarPoly| -> BivarPoly {
        let scaled = BivarPoly::new(
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, c)| c * span.powi((i + j) as i32))
                        .collect()
                })
                .collect(),
        );
        scaled.scale(1.0 / scaled.max_coeff())
    };
    let g1 = scale_xy(f1);
    let g2 = scale_xy(f2);
    let m1 = g1.degree_y();
    let m2 = g2.degree_y();

    let mut candidates_s: Vec<f64> = Vec::new();
    if m1 == 0 && m2 == 0 {
        // Both curves are unions of vertical lines; a shared real line means
        // an infinite intersection, otherwise there is none.
        let r1 = real_roots_of_x_poly(&g1)?;
        let r2 = real_roots_of_x_poly(&g2)?;
        for a in &r1 {
            if r2.iter().any(|b| (a - b).abs() < 1e-6) {
                return Ok(SystemOutcome::Degenerate);
            }
        }
        return Ok(SystemOutcome::Points(Vec::new()));
    } else if m1 == 0 || m2 == 0 {
        let lines = real_roots_of_x_poly(if m1 == 0 { &g1 } else { &g2 })?;
        candidates_s.extend(lines);
    } else {
        // Degeneracy test: a common component would put (almost) every fiber
        // point of curve 1 onto curve 2. Sample fibers at fixed pseudo-random
        // abscissae; a shared real component hits essentially all informative
        // samples, a proper intersection only a measure-zero set. This stays
        // reliable where a threshold on resultant values cannot (conjugate
        // symmetry squares the resultant, making honest values arbitrarily
        // small).
        if fibers_land_on_other(&g1, &g2)? || fibers_land_on_other(&g2, &g1)? {
            return Ok(SystemOutcome::Degenerate);
        }

        // Row-normalized Sylvester resultant in y, sampled densely in s. Row
        // normalization keeps the determinant scale at O(1) regardless of
        // leading-coefficient collapse, so the root search is scale-free.
        let det_at = |s: f64| -> f64 {
            let a = g1.y_coeffs_at(s);
            let b = g2.y_coeffs_at(s);
            sylvester_det_normalized(&a, m1, &b, m2)
        };
        let dbound = m1 * g2.degree_x() + m2 * g1.degree_x();
        let n = (8 * dbound).max(600);
        let lo = -1.05;
        let hi = 1.05;
        let values: Vec<f64> = (0..=n)
            .map(|k| det_at(lo + (hi - lo) * k as f64 / n as f64))
            .collect();
        let vmax = values.iter().map(|v| v.abs()).fold(0.0, f64::max).max(1e-300);
        // Sign changes: bisection. Non-crossing zeros (even multiplicity):
        // refine small local minima of |det|.
        let step = (hi - lo) / n as f64;
        for k in 0..n {
            let s0 = lo + step * k as f64;
            let (va, vb) = (values[k], values[k + 1]);
            if va == 0.0 {
                candidates_s.push(s0);
                continue;
            }
            if va * vb < 0.0 {
                let (mut a, mut b) = (s0, s0 + step);
                let mut fa = va;
                for _ in 0..60 {
                    let m = 0.5 * (a + b);
                    let fm = det_at(m);
                    if fa * fm <= 0.0 {
                        b = m;
                    } else {
                        a = m;
                        fa = fm;
                    }
                }
                candidates_s.push(0.5 * (a + b));
            }
        }
        for k in 1..n {
            let v = values[k].abs();
            if v <= values[k - 1].abs()
                && v <= values[k + 1].abs()
                && v <= 1e-4 * vmax
                && values[k - 1] * values[k + 1] > 0.0
            {
                // Ternary search for the minimum of |det|.
                let (mut a, mut b) = (lo + step * (k - 1) as f64, lo + step * (k + 1) as f64);
                for _ in 0..100 {
                    let m1p = a + (b - a) / 3.0;
                    let m2p = b - (b - a) / 3.0;
                    if det_at(m1p).abs() <= det_at(m2p).abs() {
                        b = m2p;
                    } else {
                        a = m1p;
                    }
                }
                candidates_s.push(0.5 * (a + b));
            }
        }
    }

    // Back-substitute each candidate line s = const.
    let mut pts: Vec<(f64, f64)> = Vec::new();
    let g1x = g1.partial_x();
    let g1y = g1.partial_y();
    let g2x = g2.partial_x();
    let g2y = g2.partial_y();
    for s in candidates_s {
        if !s.is_finite() || s.abs() > 20.0 {
            continue;
        }
        let fib1 = g1.y_coeffs_at(s);
        let fib2 = g2.y_coeffs_at(s);
        let sc = |g: &BivarPoly| g.max_coeff() * 1.0f64.max(s.abs()).powi(g.degree_x() as i32);
        let z1 = fib1.iter().all(|c| c.abs() <= 1e-10 * sc(&g1));
        let z2 = fib2.iter().all(|c| c.abs() <= 1e-10 * sc(&g2));
        if z1 && z2 {
            // Shared vertical line: infinitely many common points.
            return Ok(SystemOutcome::Degenerate);
        }
        let fiber = if z1 { &fib2 } else { &fib1 };
        let poly = ComplexPoly::from_real(fiber);
        if poly.is_zero() || poly.degree() == 0 {
            continue;
        }
        for (t, _) in poly.roots()? {
            if t.im.abs() > 1e-4 * (1.0 + t.norm()) {
                continue;
            }
            if let Some((xs, ys)) = newton2(&g1, &g2, &g1x, &g1y, &g2x, &g2y, s, t.re) {
                pts.push((xs * span, ys * span));
            }
        }
    }
    Ok(SystemOutcome::Points(pts))
}

/// Shared-component probe: sample the real points of curve `a` along fixed
/// low-discrepancy vertical lines and test whether they lie on curve `b`.
/// A common real component makes essentially every informative sample land
/// on `b`; a proper (finite) intersection only hits a measure-zero set of
/// abscissae. Both polynomials are expected in unit-box scaling.
fn fibers_land_on_other(a: &BivarPoly, b: &BivarPoly) -> Result<bool> {
    let mut informative = 0usize;
    let mut hits = 0usize;
    for j in 0..41 {
        let frac = (j as f64 * 0.618_033_988_749_894_9).fract();
        let s = -1.02 + 2.04 * frac;
        let fiber = ComplexPoly::from_real(&a.y_coeffs_at(s));
        if fiber.is_zero() || fiber.degree() == 0 {
            continue;
        }
        let mut any_real = false;
        let mut any_hit = false;
        for (t, _) in fiber.roots()? {
            if t.im.abs() > 1e-5 * (1.0 + t.norm()) {
                continue;
            }
            any_real = true;
            if b.eval(s, t.re).abs() <= 1e-7 * b.eval_scale(s, t.re) {
                any_hit = true;
            }
        }
        if any_real {
            informative += 1;
            if any_hit {
                hits += 1;
            }
        }
    }
    Ok(informative >= 6 && hits as f64 >= 0.9 * informative as f64)
}

fn real_roots_of_x_poly(g: &BivarPoly) -> Result<Vec<f64>> {
    let coeffs: Vec<f64> = g.coeffs().iter().map(|row| row[0]).collect();
    let p = ComplexPoly::from_real(&coeffs);
    if p.is_zero() || p.degree() == 0 {
        return Ok(Vec::new());
    }
    Ok(p.roots()?
        .into_iter()
        .filter(|(r, _)| r.im.abs() <= 1e-6 * (1.0 + r.norm()))
        .map(|(r, _)| r.re)
        .collect())
}

/// Row-normalized Sylvester determinant of two univariate real polynomials
/// given by ascending coefficients padded to formal degrees m1 and m2. Row
/// normalization divides out the Hadamard scale, so the result is O(1) and
/// vanishes exactly where the resultant does.
fn sylvester_det_normalized(a: &[f64], m1: usize, b: &[f64], m2: usize) -> f64 {
    let size = m1 + m2;
    if size == 0 {
        return 1.0;
    }
    let mut mat = DMatrix::<f64>::zeros(size, size);
    for row in 0..m2 {
        for k in 0..=m1 {
            mat[(row, row + k)] = a.get(m1 - k).copied().unwrap_or(0.0);
        }
    }
    for row in 0..m1 {
        for k in 0..=m2 {
            mat[(m2 + row, row + k)] = b.get(m2 - k).copied().unwrap_or(0.0);
        }
    }
    for r in 0..size {
        let norm = mat.row(r).norm();
        if norm < 1e-300 {
            return 0.0;
        }
        for c in 0..size {
            mat[(r, c)] /= norm;
        }
    }
    mat.lu().determinant()
}

/// Damped 2x2 Newton on a bivariate pair; halves the step while the residual
/// grows, up to 50 iterations.
#[allow(clippy::too_many_arguments)]
fn newton2(
    f1: &BivarPoly,
    f2: &BivarPoly,
    f1x: &BivarPoly,
    f1y: &BivarPoly,
    f2x: &BivarPoly,
    f2y: &BivarPoly,
    x0: f64,
    y0: f64,
) -> Option<(f64, f64)> {
    let (mut x, mut y) = (x0, y0);
    let res = |x: f64, y: f64| {
        let a = f1.eval(x, y);
        let b = f2.eval(x, y);
        (a * a + b * b).sqrt()
    };
    let mut r = res(x, y);
    for _ in 0..50 {
        let a = f1.eval(x, y);
        let b = f2.eval(x, y);
        let j11 = f1x.eval(x, y);
        let j12 = f1y.eval(x, y);
        let j21 = f2x.eval(x, y);
        let j22 = f2y.eval(x, y);
        let det = j11 * j22 - j12 * j21;
        if det.abs() < 1e-300 {
            break;
        }
        let dx = (a * j22 - b * j12) / det;
        let dy = (b * j11 - a * j21) / det;
        let mut lambda = 1.0;
        let mut improved = false;
        for _ in 0..8 {
            let (nx, ny) = (x - lambda * dx, y - lambda * dy);
            let nr = res(nx, ny);
            if nr < r {
                x = nx;
                y = ny;
                r = nr;
                improved = true;
                break;
            }
            lambda /= 2.0;
        }
        if !improved {
            break;
        }
        if (lambda * dx).hypot(lambda * dy) < 1e-15 * (1.0 + x.abs() + y.abs()) {
            break;
        }
    }
    let ok = f1.eval(x, y).abs() <= 1e-9 * f1.eval_scale(x, y)
        && f2.eval(x, y).abs() <= 1e-9 * f2.eval_scale(x, y);
    ok.then_some((x, y))
}

/// True iff the two point sets have equal size and pair up bijectively
/// within `tol` (greedy nearest matching).
pub fn points_match(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for p in a {
        let mut best: Option<(usize, f64)> = None;
        for (j, q) in b.iter().enumerate() {
            if used[j] {
                continue;
            }
            let d = (p - q).norm();
            if best.map_or(true, |(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        match best {
            Some((j, d)) if d <= tol => used[j] = true,
            _ => return false,
        }
    }
    true
}

fn sort_dedup(points: &mut Vec<Complex64>) {
    points.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    let mut out: Vec<Complex64> = Vec::new();
    for p in points.iter() {
        if !out.iter().any(|q| (p - q).norm() < DEDUP_RADIUS) {
            out.push(*p);
        }
    }
    *points = out;
}

fn lemniscate_residual(p: &RatFunc, z: Complex64) -> f64 {
    let v = p.eval(z);
    if v.is_finite() {
        (v.norm() - 1.0).abs()
    } else {
        f64::INFINITY
    }
}

/// Solution span: all intersections of bounded lemniscates lie well inside
/// a few multiples of the root/pole extent.
fn span_for(p1: &RatFunc, p2: &RatFunc) -> f64 {
    let mut m: f64 = 1.0;
    for p in [p1, p2] {
        for r in p.finite_zeros_and_poles() {
            m = m.max(r.norm());
        }
    }
    2.0 + 2.0 * m
}

/// Intersection points of the lemniscates |P1| = 1 and |P2| = 1.
///
/// Degeneracy (an identically vanishing resultant, the signature of a common
/// inner factor P_i = B_i ∘ U) is reported rather than solved. Lemniscates
/// passing through infinity are first moved by a rotation of the sphere.
pub fn intersect(p1: &RatFunc, p2: &RatFunc) -> Result<IntersectionReport> {
    if p1.is_constant() || p2.is_constant() {
        return Err(Error::ConstantInput);
    }
    let n1 = p1.degree();
    let n2 = p2.degree();

    // Pre-check: if a lemniscate passes through infinity, rotate the sphere.
    let at_inf = |p: &RatFunc| match p.evaluate(crate::sphere::SpherePoint::Infinity) {
        crate::sphere::SpherePoint::Finite(v) => (v.norm() - 1.0).abs(),
        crate::sphere::SpherePoint::Infinity => f64::INFINITY,
    };
    if at_inf(p1) < 1e-9 || at_inf(p2) < 1e-9 {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(90);
        for _ in 0..50 {
            let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let psi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let t: f64 = rng.gen_range(0.2..1.4);
            let a = Complex64::new(t.cos() * phi.cos(), t.cos() * phi.sin());
            let b = Complex64::new(t.sin() * psi.cos(), t.sin() * psi.sin());
            let Ok(sigma) = crate::maps::Moebius::new(a, b, -b.conj(), a.conj()) else {
                continue;
            };
            let q1 = p1.compose(&sigma.as_ratfunc())?;
            let q2 = p2.compose(&sigma.as_ratfunc())?;
            if at_inf(&q1) > 1e-6 && at_inf(&q2) > 1e-6 {
                let inner = intersect(&q1, &q2)?;
                if inner.degenerate {
                    return Ok(IntersectionReport { degrees: (n1, n2), ..inner });
                }
                // Map solutions back; intersections that sat at infinity
                // leave the report.
                let mut points = Vec::new();
                for w in inner.points {
                    match sigma.apply(crate::sphere::SpherePoint::Finite(w)) {
                        crate::sphere::SpherePoint::Finite(z) if z.norm() < 1e8 => {
                            let r = lemniscate_residual(p1, z).max(lemniscate_residual(p2, z));
                            if r < RESIDUAL_TOL {
                                points.push(z);
                            }
                        }
                        _ => {}
                    }
                }
                sort_dedup(&mut points);
                let residuals = points
                    .iter()
                    .map(|&z| lemniscate_residual(p1, z).max(lemniscate_residual(p2, z)))
                    .collect();
                return Ok(IntersectionReport {
                    count: IntersectionCount::Finite(points.len()),
                    points,
                    bound_quadratic: (n1 + n2) * (n1 + n2),
                    bound_sharp: 2 * n1 * n2,
                    degenerate: false,
                    residuals,
                    degrees: (n1, n2),
                });
            }
        }
        return Err(Error::Numerical(
            "no sphere rotation moved the lemniscates off infinity".into(),
        ));
    }

    let f1 = realify(p1);
    let f2 = realify(p2);
    let span = span_for(p1, p2);
    match solve_system(&f1, &f2, span)? {
        SystemOutcome::Degenerate => Ok(IntersectionReport {
            points: Vec::new(),
            count: IntersectionCount::Infinite,
            bound_quadratic: (n1 + n2) * (n1 + n2),
            bound_sharp: 2 * n1 * n2,
            degenerate: true,
            residuals: Vec::new(),
            degrees: (n1, n2),
        }),
        SystemOutcome::Points(raw) => {
            let mut points: Vec<Complex64> = raw
                .into_iter()
                .map(|(x, y)| Complex64::new(x, y))
                .filter(|&z| {
                    lemniscate_residual(p1, z).max(lemniscate_residual(p2, z)) < RESIDUAL_TOL
                })
                .collect();
            sort_dedup(&mut points);
            let residuals: Vec<f64> = points
                .iter()
                .map(|&z| lemniscate_residual(p1, z).max(lemniscate_residual(p2, z)))
                .collect();
            Ok(IntersectionReport {
                count: IntersectionCount::Finite(points.len()),
                points,
                bound_quadratic: (n1 + n2) * (n1 + n2),
                bound_sharp: 2 * n1 * n2,
                degenerate: false,
                residuals,
                degrees: (n1, n2),
            })
        }
    }
}

/// Bound verdicts for a finite intersection report.
pub fn check_bounds(r: &IntersectionReport) -> Result<BoundCheck> {
    match r.count {
        IntersectionCount::Infinite => Err(Error::InfiniteIntersection),
        IntersectionCount::Finite(c) => Ok(BoundCheck {
            within_quadratic: c <= r.bound_quadratic,
            within_sharp: c <= r.bound_sharp,
        }),
    }
}

/// Independent subdivision oracle: scan a covering square, keep cells where
/// both residuals are below a gradient-scaled threshold, refine recursively,
/// then Newton-polish on (|P1|^2 - 1, |P2|^2 - 1) directly. No resultants.
pub fn oracle_intersect(p1: &RatFunc, p2: &RatFunc, grid: usize) -> Result<Vec<Complex64>> {
    if p1.is_constant() || p2.is_constant() {
        return Err(Error::ConstantInput);
    }
    let d1 = p1.derivative();
    let d2 = p2.derivative();

    let resid = |p: &RatFunc, z: Complex64| lemniscate_residual(p, z);
    let keep = |cell: Complex64, half: f64| -> bool {
        let diag = 2.0 * half * std::f64::consts::SQRT_2;
        let pts = [
            cell,
            cell + Complex64::new(half, half),
            cell + Complex64::new(-half, half),
            cell + Complex64::new(half, -half),
            cell + Complex64::new(-half, -half),
        ];
        for (p, dp) in [(p1, &d1), (p2, &d2)] {
            let mut min_r = f64::INFINITY;
            let mut max_g: f64 = 0.0;
            for &z in &pts {
                min_r = min_r.min(resid(p, z));
                let g = dp.eval(z).norm();
                if g.is_finite() {
                    max_g = max_g.max(g);
                }
            }
            if min_r > 1.5 * diag * max_g + 1e-12 {
                return false;
            }
        }
        true
    };

    let base_span = span_for(p1, p2);
    let mut span = base_span;
    let mut cells: Vec<(Complex64, f64)>;
    loop {
        let half0 = span / grid as f64;
        cells = Vec::new();
        for i in 0..grid {
            for j in 0..grid {
                let x = -span + (2 * i + 1) as f64 * half0;
                let y = -span + (2 * j + 1) as f64 * half0;
                let c = Complex64::new(x, y);
                if keep(c, half0) {
                    cells.push((c, half0));
                }
            }
        }
        // Grow the box while candidates touch its boundary.
        let touches = cells
            .iter()
            .any(|(c, h)| c.re.abs() + h >= span - 1e-12 || c.im.abs() + h >= span - 1e-12);
        if !touches || span > 64.0 * base_span {
            break;
        }
        span *= 2.0;
    }

    let target_half = 5e-4;
    while cells.first().map_or(false, |(_, h)| *h > target_half) && cells.len() < 400_000 {
        let mut next = Vec::with_capacity(cells.len() * 2);
        for (c, h) in cells {
            let nh = h / 2.0;
            for dx in [-nh, nh] {
                for dy in [-nh, nh] {
                    let cc = c + Complex64::new(dx, dy);
                    if keep(cc, nh) {
                        next.push((cc, nh));
                    }
                }
            }
        }
        cells = next;
    }

    // Newton on g = (|P1|^2 - 1, |P2|^2 - 1); the Jacobian rows are
    // (2 Re(conj(h) h'), -2 Im(conj(h) h')).
    let polish = |z0: Complex64| -> Option<Complex64> {
        let g = |z: Complex64| -> Option<(f64, f64)> {
            let a = p1.eval(z);
            let b = p2.eval(z);
            if !a.is_finite() || !b.is_finite() {
                return None;
            }
            Some((a.norm_sqr() - 1.0, b.norm_sqr() - 1.0))
        };
        let mut z = z0;
        let (mut ra, mut rb) = g(z)?;
        let mut r = ra.hypot(rb);
        for _ in 0..60 {
            let c1 = p1.eval(z).conj() * d1.eval(z);
            let c2 = p2.eval(z).conj() * d2.eval(z);
            let (j11, j12) = (2.0 * c1.re, -2.0 * c1.im);
            let (j21, j22) = (2.0 * c2.re, -2.0 * c2.im);
            let det = j11 * j22 - j12 * j21;
            if !det.is_finite() || det.abs() < 1e-300 {
                return None;
            }
            let dx = (ra * j22 - rb * j12) / det;
            let dy = (rb * j11 - ra * j21) / det;
            let mut lambda = 1.0;
            let mut improved = false;
            for _ in 0..8 {
                let nz = z - Complex64::new(lambda * dx, lambda * dy);
                if let Some((na, nb)) = g(nz) {
                    let nr = na.hypot(nb);
                    if nr < r {
                        z = nz;
                        ra = na;
                        rb = nb;
                        r = nr;
                        improved = true;
                        break;
                    }
                }
                lambda /= 2.0;
            }
            if !improved || r < 1e-15 {
                break;
            }
        }
        (resid(p1, z).max(resid(p2, z)) < RESIDUAL_TOL).then_some(z)
    };

    let mut points: Vec<Complex64> = cells.into_iter().filter_map(|(c, _)| polish(c)).collect();
    sort_dedup(&mut points);
    Ok(points)
}
