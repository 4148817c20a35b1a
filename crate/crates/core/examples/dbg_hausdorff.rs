use dessin_core::dessin::*;
use dessin_core::maps::{chebyshev, Sign};
use num_complex::Complex64;

fn embed(z: Complex64) -> [f64; 3] {
    dessin_core::sphere::SpherePoint::from_complex(z).embed()
}
fn d2(a: &[f64;3], b: &[f64;3]) -> f64 {
    (a[0]-b[0]).powi(2) + (a[1]-b[1]).powi(2) + (a[2]-b[2]).powi(2)
}
fn pseg(p: &[f64;3], a: &[f64;3], b: &[f64;3]) -> f64 {
    let ab = [b[0]-a[0], b[1]-a[1], b[2]-a[2]];
    let ap = [p[0]-a[0], p[1]-a[1], p[2]-a[2]];
    let den = ab[0]*ab[0]+ab[1]*ab[1]+ab[2]*ab[2];
    if den == 0.0 { return d2(p, a); }
    let s = ((ap[0]*ab[0]+ap[1]*ab[1]+ap[2]*ab[2])/den).clamp(0.0, 1.0);
    d2(p, &[a[0]+s*ab[0], a[1]+s*ab[1], a[2]+s*ab[2]])
}

fn main() {
    let g2 = trace_support(&chebyshev(2, Sign::Plus).unwrap(), 1e-3, 1e-8).unwrap();
    let g3 = trace_support(&chebyshev(3, Sign::Plus).unwrap(), 1e-3, 1e-8).unwrap();
    // brute-force symmetric hausdorff point-to-segment
    let runs = |g: &DessinGraph| -> Vec<Vec<[f64;3]>> {
        g.edges.iter().map(|e| e.polyline.iter().map(|(_, z)| embed(*z)).collect()).collect()
    };
    let a = runs(&g2);
    let b = runs(&g3);
    let one = |xs: &Vec<Vec<[f64;3]>>, ys: &Vec<Vec<[f64;3]>>| -> (f64, [f64;3]) {
        let mut sup = (0.0, [0.0;3]);
        for run in xs {
            for p in run {
                let mut best = f64::INFINITY;
                for run_b in ys {
                    for k in 0..run_b.len()-1 {
                        best = best.min(pseg(p, &run_b[k], &run_b[k+1]));
                    }
                }
                if best > sup.0 { sup = (best, *p); }
            }
        }
        (sup.0.sqrt(), sup.1)
    };
    let (dab, pab) = one(&a, &b);
    let (dba, pba) = one(&b, &a);
    println!("brute hausdorff: a->b {:.3e} at {:?}", dab, pab);
    println!("                 b->a {:.3e} at {:?}", dba, pba);
    println!("grid-accel support_distance: {:.3e}", support_distance(&g2, &g3));
}
