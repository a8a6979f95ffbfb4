use hankel_fcc::specfun::*;
use num_complex::Complex64;

#[test]
fn dbg_h0() {
    let z = Complex64::new(10.0, 10.0);
    let h0 = h0_scaled(z).unwrap();
    let r = Complex64::new(0.079_527_749_800_243_59, -0.195_277_242_491_667_39);
    println!("h0  = {h0:.17e}");
    println!("ref = {r:.17e}");
    println!("rel = {:.3e}", (h0 - r).norm() / r.norm());
}
