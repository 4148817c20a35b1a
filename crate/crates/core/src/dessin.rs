//! Dessins d'enfants: the support of a Belyi function traced by numerical
//! continuation as a bicolored graph, classification into segment / circle /
//! other, and Hausdorff comparison of supports on the sphere.

use std::collections::HashMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::maps::is_belyi;
use crate::ratfunc::RatFunc;
use crate::sphere::SpherePoint;

/// Default continuation step in the parameter t.
pub const DEFAULT_TRACE_STEP: f64 = 1e-3;
/// Default on-curve tolerance for traced samples.
pub const DEFAULT_TRACE_TOL: f64 = 1e-8;

/// Vertex colors: white lies over -1, black over +1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    White,
    Black,
}

#[derive(Debug, Clone)]
pub struct Vertex {
    pub position: SpherePoint,
    pub color: Color,
    /// Local multiplicity of beta at the vertex = number of incident edges.
    pub valency: usize,
}

/// Coordinate chart of a polyline sample: the plane, or w = 1/z near infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    Z,
    W,
}

#[derive(Debug, Clone)]
pub struct Edge {
    /// Chart-tagged samples from the white end to the black end.
    pub polyline: Vec<(Chart, Complex64)>,
    /// (white vertex index, black vertex index)
    pub endpoints: (usize, usize),
    /// The beta^{-1}(0) point this edge grew from.
    pub seed: SpherePoint,
}

#[derive(Debug, Clone)]
pub struct DessinGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub beta: RatFunc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DessinClass {
    Segment,
    Circle,
    Other,
}

impl std::fmt::Display for DessinClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DessinClass::Segment => write!(f, "Segment"),
            DessinClass::Circle => write!(f, "Circle"),
            DessinClass::Other => write!(f, "Other"),
        }
    }
}

/// Vertices of the dessin: white over -1 (roots of num + den), black over +1
/// (roots of num - den), with infinity included through its chart.
pub fn vertices(beta: &RatFunc) -> Result<Vec<Vertex>> {
    if !is_belyi(beta) {
        return Err(Error::NotBelyi);
    }
    let mut out = Vec::new();
    for (color, target) in [(Color::White, -1.0), (Color::Black, 1.0)] {
        let p = beta.num().sub(&beta.den().scale(Complex64::new(target, 0.0)));
        if p.is_zero() {
            return Err(Error::ConstantInput);
        }
        if p.degree() > 0 {
            for (r, m) in p.roots()? {
                out.push(Vertex { position: SpherePoint::Finite(r), color, valency: m });
            }
        }
        let v_inf = beta.evaluate(SpherePoint::Infinity);
        if v_inf.chordal(&SpherePoint::finite(target, 0.0)) < crate::maps::BELYI_TOL
            && !out.iter().any(|v| v.position.is_infinity())
        {
            out.push(Vertex {
                position: SpherePoint::Infinity,
                color,
                valency: beta.multiplicity_at(SpherePoint::Infinity)?,
            });
        }
    }
    Ok(out)
}

/// Continuation data for one chart.
struct ChartFns {
    f: RatFunc,
    df: RatFunc,
}

struct Tracer {
    charts: [ChartFns; 2], // [Z, W]
    vertices: Vec<Vertex>,
    r_out: f64,
    r_in: f64,
    step: f64,
    corr_tol: f64,
}

impl Tracer {
    fn fns(&self, chart: Chart) -> &ChartFns {
        match chart {
            Chart::Z => &self.charts[0],
            Chart::W => &self.charts[1],
        }
    }

    /// Sphere point of a chart coordinate.
    fn sphere(&self, chart: Chart, z: Complex64) -> SpherePoint {
        match chart {
            Chart::Z => SpherePoint::from_complex(z),
            Chart::W => {
                if z.norm() == 0.0 {
                    SpherePoint::Infinity
                } else {
                    SpherePoint::from_complex(1.0 / z)
                }
            }
        }
    }

    /// Chart coordinate of a vertex, if representable there.
    fn to_chart(&self, p: &SpherePoint, chart: Chart) -> Option<Complex64> {
        match (chart, p) {
            (Chart::Z, SpherePoint::Finite(z)) => Some(*z),
            (Chart::Z, SpherePoint::Infinity) => None,
            (Chart::W, SpherePoint::Finite(z)) => {
                if z.norm() == 0.0 {
                    None
                } else {
                    Some(1.0 / z)
                }
            }
            (Chart::W, SpherePoint::Infinity) => Some(Complex64::new(0.0, 0.0)),
        }
    }

    fn nearest_vertex(&self, chart: Chart, z: Complex64, color: Color) -> (usize, f64) {
        let sp = self.sphere(chart, z);
        let mut best = (usize::MAX, f64::INFINITY);
        for (i, v) in self.vertices.iter().enumerate() {
            if v.color != color {
                continue;
            }
            let d = v.position.chordal(&sp);
            if d < best.1 {
                best = (i, d);
            }
        }
        best
    }

    /// Newton corrector for f(z) = t in the given chart.
    fn correct(&self, chart: Chart, z0: Complex64, t: f64) -> Option<Complex64> {
        let fns = self.fns(chart);
        let mut z = z0;
        for _ in 0..30 {
            let v = fns.f.eval(z) - Complex64::new(t, 0.0);
            if !v.is_finite() {
                return None;
            }
            if v.norm() <= self.corr_tol {
                return Some(z);
            }
            let d = fns.df.eval(z);
            if !d.is_finite() || d.norm() < 1e-300 {
                return None;
            }
            z -= v / d;
        }
        let v = fns.f.eval(z) - Complex64::new(t, 0.0);
        (v.is_finite() && v.norm() <= self.corr_tol).then_some(z)
    }

    /// One continuation run from a seed toward t = sign (+1: black, -1: white).
    /// Returns the samples after the seed and the index of the end vertex.
    fn run(
        &self,
        seed_chart: Chart,
        seed: Complex64,
        sign: f64,
    ) -> Result<(Vec<(Chart, Complex64)>, usize)> {
        let color = if sign > 0.0 { Color::Black } else { Color::White };
        let mut chart = seed_chart;
        let mut z = seed;
        let mut t = 0.0f64;
        let mut h = self.step;
        let mut samples = Vec::new();
        let seed_sphere = self.sphere(seed_chart, seed);
        let stall = |t: f64| Error::TraceStall {
            seed: seed_sphere.to_complex().unwrap_or(Complex64::new(f64::INFINITY, 0.0)),
            t,
        };

        for _ in 0..2_000_000 {
            // Arrival: land exactly on the vertex once t is exhausted.
            if t.abs() >= 1.0 - 1e-6 {
                let (vi, _) = self.nearest_vertex(chart, z, color);
                let v = &self.vertices[vi];
                if let Some(vz) = self.to_chart(&v.position, chart) {
                    // Multiplicity-aware Newton on f = sign.
                    let fns = self.fns(chart);
                    let m = v.valency as f64;
                    let mut zz = z;
                    for _ in 0..80 {
                        let val = fns.f.eval(zz) - Complex64::new(sign, 0.0);
                        let d = fns.df.eval(zz);
                        if !val.is_finite() || !d.is_finite() || d.norm() < 1e-300 {
                            break;
                        }
                        let stepv = m * val / d;
                        zz -= stepv;
                        if stepv.norm() < 1e-15 * (1.0 + zz.norm()) {
                            break;
                        }
                    }
                    if (zz - vz).norm() <= 1e-6 * (1.0 + vz.norm()) {
                        samples.push((chart, vz));
                        return Ok((samples, vi));
                    }
                }
            }

            // Predictor in t for moderate t, arclength near the ends where
            // 1/f' blows up.
            let fns = self.fns(chart);
            let d = fns.df.eval(z);
            if !d.is_finite() || d.norm() < 1e-300 {
                return Err(stall(t));
            }
            let dzdt = 1.0 / d;
            let (z_pred, t_new) = if t.abs() <= 0.9 {
                let dt = sign * h.min(1.0 - t.abs());
                (z + dzdt * dt, t + dt)
            } else {
                let (_, vdist) = self.nearest_vertex(chart, z, color);
                let ds = h.min(0.5 * vdist + 1e-9);
                let u = dzdt / dzdt.norm();
                let dt = sign * ds * d.norm();
                let t_next = if (t + dt).abs() > 1.0 { sign } else { t + dt };
                (z + u * sign * ds, t_next)
            };

            match self.correct(chart, z_pred, t_new) {
                Some(zc) => {
                    z = zc;
                    t = t_new;
                    samples.push((chart, z));
                    h = (h * 1.4).min(self.step);
                    // Chart switching with hysteresis.
                    match chart {
                        Chart::Z => {
                            if z.norm() > self.r_out {
                                z = 1.0 / z;
                                chart = Chart::W;
                            }
                        }
                        Chart::W => {
                            if z.norm() > 1.0 / self.r_in {
                                z = 1.0 / z;
                                chart = Chart::Z;
                            }
                        }
                    }
                }
                None => {
                    h /= 2.0;
                    if h < 1e-12 {
                        return Err(stall(t));
                    }
                }
            }
        }
        Err(stall(t))
    }
}

/// Traces the full support beta^{-1}([-1, 1]) by continuation from the
/// beta^{-1}(0) seeds, one edge per seed, two runs per edge.
pub fn trace_support(beta: &RatFunc, step: f64, tol: f64) -> Result<DessinGraph> {
    if !is_belyi(beta) {
        return Err(Error::NotBelyi);
    }
    let verts = vertices(beta)?;
    let g = beta.chart_at_infinity();
    let mut scale: f64 = 1.0;
    for r in beta.finite_zeros_and_poles() {
        scale = scale.max(r.norm());
    }
    for v in &verts {
        if let Some(z) = v.position.to_complex() {
            scale = scale.max(z.norm());
        }
    }
    let tracer = Tracer {
        charts: [
            ChartFns { df: beta.derivative(), f: beta.clone() },
            ChartFns { df: g.derivative(), f: g },
        ],
        vertices: verts,
        r_out: 10.0 * scale,
        r_in: 5.0 * scale,
        step,
        corr_tol: (tol * 1e-3).clamp(1e-14, 1e-9),
    };

    // Seeds: the deg(beta) simple preimages of 0.
    let mut seeds: Vec<(Chart, Complex64)> = Vec::new();
    if beta.num().degree() > 0 {
        for (r, m) in beta.num().roots()? {
            for _ in 0..m {
                seeds.push((Chart::Z, r));
            }
        }
    }
    seeds.sort_by(|a, b| {
        a.1.re
            .partial_cmp(&b.1.re)
            .unwrap()
            .then(a.1.im.partial_cmp(&b.1.im).unwrap())
    });
    if beta.num().degree() < beta.degree() {
        // Infinity is a zero of beta; seed it in the w chart.
        seeds.push((Chart::W, Complex64::new(0.0, 0.0)));
    }

    let mut edges = Vec::with_capacity(seeds.len());
    for (chart, seed) in seeds {
        let (plus, black_idx) = tracer.run(chart, seed, 1.0)?;
        let (minus, white_idx) = tracer.run(chart, seed, -1.0)?;
        let mut polyline: Vec<(Chart, Complex64)> = minus.into_iter().rev().collect();
        polyline.push((chart, seed));
        polyline.extend(plus);
        edges.push(Edge {
            polyline,
            endpoints: (white_idx, black_idx),
            seed: tracer.sphere(chart, seed),
        });
    }
    Ok(DessinGraph { vertices: tracer.vertices, edges, beta: beta.clone() })
}

/// Classification by the traced incidence structure: a simple path of
/// valencies <= 2 is a segment, a single cycle of valency-2 vertices is a
/// circle, anything else (a star, several components) is other.
pub fn classify(g: &DessinGraph) -> DessinClass {
    let nv = g.vertices.len();
    let ne = g.edges.len();
    if nv == 0 || ne == 0 {
        return DessinClass::Other;
    }
    let mut deg = vec![0usize; nv];
    let mut uf: Vec<usize> = (0..nv).collect();
    fn find(uf: &mut Vec<usize>, i: usize) -> usize {
        if uf[i] != i {
            let r = find(uf, uf[i]);
            uf[i] = r;
        }
        uf[i]
    }
    for e in &g.edges {
        let (a, b) = e.endpoints;
        deg[a] += 1;
        deg[b] += 1;
        let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
        if ra != rb {
            uf[ra] = rb;
        }
    }
    let root = find(&mut uf, 0);
    let connected = (0..nv).all(|i| find(&mut uf, i) == root);
    if !connected || deg.iter().any(|&d| d == 0 || d > 2) {
        return DessinClass::Other;
    }
    if ne + 1 == nv && deg.iter().filter(|&&d| d == 1).count() == 2 {
        DessinClass::Segment
    } else if ne == nv && deg.iter().all(|&d| d == 2) {
        DessinClass::Circle
    } else {
        DessinClass::Other
    }
}

/// Embedded 3D samples of a graph's polylines, keeping runs per edge.
fn embedded_polylines(g: &DessinGraph) -> Vec<Vec<[f64; 3]>> {
    g.edges
        .iter()
        .map(|e| {
            e.polyline
                .iter()
                .map(|(chart, z)| match chart {
                    Chart::Z => SpherePoint::from_complex(*z).embed(),
                    Chart::W => {
                        let m = z.norm_sqr();
                        let d = 1.0 + m;
                        [2.0 * z.re / d, -2.0 * z.im / d, (1.0 - m) / d]
                    }
                })
                .collect()
        })
        .collect()
}

fn dist2(a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let dx = a[0] - b[0];
    let dy = a[1] - b[1];
    let dz = a[2] - b[2];
    dx * dx + dy * dy + dz * dz
}

fn point_segment_dist2(p: &[f64; 3], a: &[f64; 3], b: &[f64; 3]) -> f64 {
    let ab = [b[0] - a[0], b[1] - a[1], b[2] - a[2]];
    let ap = [p[0] - a[0], p[1] - a[1], p[2] - a[2]];
    let denom = ab[0] * ab[0] + ab[1] * ab[1] + ab[2] * ab[2];
    if denom == 0.0 {
        return dist2(p, a);
    }
    let s = ((ap[0] * ab[0] + ap[1] * ab[1] + ap[2] * ab[2]) / denom).clamp(0.0, 1.0);
    let q = [a[0] + s * ab[0], a[1] + s * ab[1], a[2] + s * ab[2]];
    dist2(p, &q)
}

/// Grid-hashed nearest-sample lookup on the unit sphere.
struct SampleGrid {
    cell: f64,
    map: HashMap<(i32, i32, i32), Vec<(usize, usize)>>,
}

impl SampleGrid {
    fn build(polylines: &[Vec<[f64; 3]>], cell: f64) -> Self {
        let mut map: HashMap<(i32, i32, i32), Vec<(usize, usize)>> = HashMap::new();
        for (ei, run) in polylines.iter().enumerate() {
            for (si, p) in run.iter().enumerate() {
                let key = (
                    (p[0] / cell).floor() as i32,
                    (p[1] / cell).floor() as i32,
                    (p[2] / cell).floor() as i32,
                );
                map.entry(key).or_default().push((ei, si));
            }
        }
        SampleGrid { cell, map }
    }

    /// Nearest sample by expanding cube shells; keeps expanding until the
    /// found distance is certified against the searched radius.
    fn nearest(&self, p: &[f64; 3], polylines: &[Vec<[f64; 3]>]) -> (usize, usize) {
        let base = (
            (p[0] / self.cell).floor() as i32,
            (p[1] / self.cell).floor() as i32,
            (p[2] / self.cell).floor() as i32,
        );
        let mut best: Option<((usize, usize), f64)> = None;
        let mut radius = 0i32;
        loop {
            for dx in -radius..=radius {
                for dy in -radius..=radius {
                    for dz in -radius..=radius {
                        if dx.abs().max(dy.abs()).max(dz.abs()) != radius {
                            continue;
                        }
                        if let Some(v) = self.map.get(&(base.0 + dx, base.1 + dy, base.2 + dz)) {
                            for &(ei, si) in v {
                                let d = dist2(p, &polylines[ei][si]);
                                if best.map_or(true, |(_, bd)| d < bd) {
                                    best = Some(((ei, si), d));
                                }
                            }
                        }
                    }
                }
            }
            if let Some((hit, d2)) = best {
                // Certified once no closer point can hide outside the shells.
                let safe = radius as f64 * self.cell;
                if d2.sqrt() <= safe {
                    return hit;
                }
            }
            radius += 1;
            if radius > 400 {
                return best.expect("nonempty polylines").0;
            }
        }
    }
}

/// One-sided distance: sup over samples of `a` of the distance to the
/// polylines of `b` (point-to-segment, chordal metric via embedding).
fn one_sided(a: &[Vec<[f64; 3]>], b: &[Vec<[f64; 3]>], grid: &SampleGrid) -> f64 {
    let mut sup: f64 = 0.0;
    for run in a {
        for p in run {
            let (ei, si) = grid.nearest(p, b);
            let run_b = &b[ei];
            let lo = si.saturating_sub(3);
            let hi = (si + 3).min(run_b.len() - 1);
            let mut d2 = dist2(p, &run_b[si]);
            for k in lo..hi {
                d2 = d2.min(point_segment_dist2(p, &run_b[k], &run_b[k + 1]));
            }
            sup = sup.max(d2.sqrt());
        }
    }
    sup
}

/// Symmetric Hausdorff distance between two traced supports under the
/// chordal metric, measured sample-to-polyline.
pub fn support_distance(g1: &DessinGraph, g2: &DessinGraph) -> f64 {
    let a = embedded_polylines(g1);
    let b = embedded_polylines(g2);
    let cell = 0.02;
    let ga = SampleGrid::build(&a, cell);
    let gb = SampleGrid::build(&b, cell);
    one_sided(&a, &b, &gb).max(one_sided(&b, &a, &ga))
}

/// Traces both functions at the default step and compares supports within
/// `tol`.
pub fn supports_equal(b1: &RatFunc, b2: &RatFunc, tol: f64) -> Result<bool> {
    let g1 = trace_support(b1, DEFAULT_TRACE_STEP, DEFAULT_TRACE_TOL)?;
    let g2 = trace_support(b2, DEFAULT_TRACE_STEP, DEFAULT_TRACE_TOL)?;
    Ok(support_distance(&g1, &g2) < tol)
}

/// Support equality at the default tolerance of 10 x the trace step, the
/// discretization error budget.
pub fn supports_equal_default(b1: &RatFunc, b2: &RatFunc) -> Result<bool> {
    supports_equal(b1, b2, 10.0 * DEFAULT_TRACE_STEP)
}

/// CSV export of the traced polylines: edge_index, chart, x, y.
pub fn polylines_csv(g: &DessinGraph) -> String {
    let mut out = String::from("edge_index,chart,x,y\n");
    for (i, e) in g.edges.iter().enumerate() {
        for (chart, z) in &e.polyline {
            let c = match chart {
                Chart::Z => "z",
                Chart::W => "w",
            };
            out.push_str(&format!("{i},{c},{:.6},{:.6}\n", z.re, z.im));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::{chebyshev, circle_belyi, Sign};
    use crate::poly::ComplexPoly;

    fn t(n: usize) -> RatFunc {
        chebyshev(n, Sign::Plus).unwrap()
    }

    fn cb(n: usize) -> RatFunc {
        circle_belyi(n, Sign::Plus).unwrap()
    }

    fn trace(beta: &RatFunc) -> DessinGraph {
        trace_support(beta, DEFAULT_TRACE_STEP, DEFAULT_TRACE_TOL).unwrap()
    }

    /// Max chordal distance from traced samples to the segment [-1, 1].
    fn sup_dist_to_segment(g: &DessinGraph) -> f64 {
        let mut sup: f64 = 0.0;
        for e in &g.edges {
            for (chart, z) in &e.polyline {
                assert_eq!(*chart, Chart::Z, "segment dessins stay in the plane");
                let nearest = Complex64::new(z.re.clamp(-1.0, 1.0), 0.0);
                sup = sup.max(crate::sphere::chordal(*z, nearest));
            }
        }
        sup
    }

    fn sup_dist_to_unit_circle(g: &DessinGraph) -> f64 {
        let mut sup: f64 = 0.0;
        for e in &g.edges {
            for (chart, z) in &e.polyline {
                assert_eq!(*chart, Chart::Z);
                sup = sup.max(crate::sphere::chordal(*z, z / z.norm()));
            }
        }
        sup
    }

    #[test]
    fn vertices_of_t2() {
        let vs = vertices(&t(2)).unwrap();
        assert_eq!(vs.len(), 3);
        let whites: Vec<_> = vs.iter().filter(|v| v.color == Color::White).collect();
        let blacks: Vec<_> = vs.iter().filter(|v| v.color == Color::Black).collect();
        assert_eq!(whites.len(), 1);
        assert_eq!(whites[0].valency, 2);
        assert!(whites[0].position.chordal(&SpherePoint::finite(0.0, 0.0)) < 1e-9);
        assert_eq!(blacks.len(), 2);
        for b in blacks {
            assert_eq!(b.valency, 1);
        }
    }

    #[test]
    fn vertices_of_joukowski() {
        let vs = vertices(&cb(1)).unwrap();
        assert_eq!(vs.len(), 2);
        for v in &vs {
            assert_eq!(v.valency, 2);
            let z = v.position.to_complex().unwrap();
            match v.color {
                Color::Black => assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-9),
                Color::White => assert!((z - Complex64::new(-1.0, 0.0)).norm() < 1e-9),
            }
        }
    }

    #[test]
    fn vertices_of_cubic_star() {
        // 2z^3 - 1: white triple at 0, three simple black vertices.
        let f = RatFunc::from_poly(ComplexPoly::from_real(&[-1.0, 0.0, 0.0, 2.0]));
        let vs = vertices(&f).unwrap();
        let whites: Vec<_> = vs.iter().filter(|v| v.color == Color::White).collect();
        assert_eq!(whites.len(), 1);
        assert_eq!(whites[0].valency, 3);
        let blacks: Vec<_> = vs.iter().filter(|v| v.color == Color::Black).collect();
        assert_eq!(blacks.len(), 3);
    }

    #[test]
    fn vertices_reject_non_belyi() {
        let sq = RatFunc::from_poly(ComplexPoly::from_real(&[0.0, 0.0, 1.0]));
        assert!(matches!(vertices(&sq), Err(Error::NotBelyi)));
    }

    #[test]
    fn valency_bookkeeping() {
        for beta in [t(2), t(3), t(4), cb(1), cb(2)] {
            let vs = vertices(&beta).unwrap();
            let deg = beta.degree();
            let white: usize =
                vs.iter().filter(|v| v.color == Color::White).map(|v| v.valency).sum();
            let black: usize =
                vs.iter().filter(|v| v.color == Color::Black).map(|v| v.valency).sum();
            assert_eq!(white, deg);
            assert_eq!(black, deg);
        }
    }

    #[test]
    fn trace_t2_is_the_segment() {
        let g = trace(&t(2));
        assert_eq!(g.edges.len(), 2);
        assert!(sup_dist_to_segment(&g) < 1e-6);
        assert_eq!(classify(&g), DessinClass::Segment);
        // Path -1 -- 0 -- 1: ends of each edge have opposite colors.
        assert_eq!(g.vertices.len(), 3);
        for e in &g.edges {
            assert!(g.vertices[e.endpoints.0].color == Color::White);
            assert!(g.vertices[e.endpoints.1].color == Color::Black);
        }
    }

    #[test]
    fn trace_chebyshev_family() {
        for n in 1..=5 {
            let g = trace(&t(n));
            assert_eq!(g.edges.len(), n, "T_{n} edge count");
            assert!(sup_dist_to_segment(&g) < 1e-6, "T_{n} support");
            assert_eq!(classify(&g), DessinClass::Segment, "T_{n} class");
        }
    }

    #[test]
    fn trace_circle_family() {
        for n in 1..=3 {
            let g = trace(&cb(n));
            assert_eq!(g.edges.len(), 2 * n, "circle {n} edge count");
            assert!(sup_dist_to_unit_circle(&g) < 1e-6, "circle {n} support");
            assert_eq!(classify(&g), DessinClass::Circle, "circle {n} class");
        }
    }

    #[test]
    fn trace_star_is_other() {
        let f = RatFunc::from_poly(ComplexPoly::from_real(&[-1.0, 0.0, 0.0, 2.0]));
        let g = trace(&f);
        assert_eq!(g.edges.len(), 3);
        assert_eq!(classify(&g), DessinClass::Other);
    }

    #[test]
    fn traced_samples_stay_on_the_support() {
        for beta in [t(3), cb(2)] {
            let g = trace(&beta);
            let ginf = beta.chart_at_infinity();
            for e in &g.edges {
                for (chart, z) in &e.polyline {
                    let v = match chart {
                        Chart::Z => beta.eval(*z),
                        Chart::W => ginf.eval(*z),
                    };
                    assert!(v.im.abs() < 1e-8, "imaginary part {v}");
                    assert!((-1.0 - 1e-8..=1.0 + 1e-8).contains(&v.re), "real part {v}");
                }
            }
        }
    }

    #[test]
    fn support_distance_examples() {
        let g2 = trace(&t(2));
        let g3 = trace(&t(3));
        assert!(support_distance(&g2, &g3) < 1e-6);
        assert!(support_distance(&g2, &g2) == 0.0);
        let gc = trace(&cb(1));
        assert!(support_distance(&g2, &gc) > 0.4);
    }

    #[test]
    fn supports_equal_examples() {
        assert!(supports_equal_default(&t(2), &t(5)).unwrap());
        assert!(supports_equal_default(&cb(1), &cb(3)).unwrap());
        let mixed = t(2).compose(&cb(1)).unwrap();
        assert!(!supports_equal_default(&t(2), &mixed).unwrap());
    }

    #[test]
    fn support_is_stable_under_chebyshev_postcomposition() {
        let beta = t(2);
        for n in [2, 3] {
            let composed = t(n).compose(&beta).unwrap();
            assert!(supports_equal_default(&beta, &composed).unwrap(), "T_{n} ∘ T_2");
        }
    }

    #[test]
    fn polyline_csv_has_header_and_rows() {
        let g = trace(&t(2));
        let csv = polylines_csv(&g);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "edge_index,chart,x,y");
        assert!(lines.count() > 100);
    }
}
