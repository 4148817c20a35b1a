use dessin_core::poly::ComplexPoly;
use dessin_core::ratfunc::RatFunc;
use dessin_core::lemniscate::*;

fn main() {
    let p1 = RatFunc::from_poly(ComplexPoly::from_real(&[0.033786, 0.536500, -0.402773, -0.784430]));
    let p2 = RatFunc::from_poly(ComplexPoly::from_real(&[-0.632074/0.687601, -0.460050/0.687601, -0.272704/0.687601, 1.0/0.687601]));
    let r = intersect(&p1, &p2).unwrap();
    println!("intersect: {:?}", r.points);
    let o = oracle_intersect(&p1, &p2, 48).unwrap();
    println!("oracle:    {:?}", o);
    let f1 = realify(&p1);
    let f2 = realify(&p2);
    println!("F1 deg_x {} deg_y {}; F2 deg_x {} deg_y {}", f1.degree_x(), f1.degree_y(), f2.degree_x(), f2.degree_y());
    for z in &o {
        println!("  oracle pt {z}: F1 = {:.3e} F2 = {:.3e}", f1.eval(z.re, z.im), f2.eval(z.re, z.im));
    }
}
