//! Bessel functions J0, Y0 and the Hankel function H0^(1) for complex
//! arguments off the negative real axis, plus the phase-extracted
//! h0(z) = exp(-iz) H0^(1)(z).
//!
//! Ascending series (double-double accumulation) below |z| = 16, Hankel
//! asymptotic expansion above. The series cancellation grows like
//! e^|z|/(pi |z|); double-double keeps it harmless up to the crossover,
//! where the asymptotic optimal-truncation error is already ~1e-14.

use crate::dd::{square_c64, Cdd, Dd};
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::{FRAC_PI_4, PI};

/// Euler-Mascheroni constant.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Series/asymptotic crossover radius.
pub(crate) const CROSSOVER: f64 = 16.0;

fn check_domain(z: Complex64) -> Result<()> {
    if z.re == 0.0 && z.im == 0.0 {
        return Err(Error::Domain("argument z = 0 (logarithmic singularity)".into()));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::Domain(format!(
            "argument {z} on the negative real branch cut"
        )));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain("non-finite argument".into()));
    }
    Ok(())
}

/// Ascending series accumulated in double-double: returns (J0, Y0) as Cdd
/// so callers needing the cancelling combination J0 + i Y0 can form it
/// before rounding to f64. Valid for |z| up to ~30.
fn j0y0_series_dd(z: Complex64) -> (Cdd, Cdd) {
    let neg_z2q = {
        let q = square_c64(z).div_f64(4.0);
        Cdd { re: q.re.neg(), im: q.im.neg() }
    };
    let mut term = Cdd::ONE;
    let mut j0 = Cdd::ONE;
    let mut s = Cdd::ZERO;
    let mut h = Dd::ZERO;
    for k in 1..=90u32 {
        term = term.mul(neg_z2q).div_f64((k as f64) * (k as f64));
        j0 = j0.add(term);
        h = h.add(Dd::recip_int(k));
        s = s.sub(term.mul_dd(h));
        if term.norm_approx() * (1.0 + h.hi)
            < 1e-36 * (j0.norm_approx() + s.norm_approx()) + 1e-300
        {
            break;
        }
    }
    let ln_term = (z / 2.0).ln() + EULER_GAMMA;
    let y0 = Cdd {
        re: j0.re.mul_f64(ln_term.re).sub(j0.im.mul_f64(ln_term.im)).add(s.re),
        im: j0.re.mul_f64(ln_term.im).add(j0.im.mul_f64(ln_term.re)).add(s.im),
    };
    let y0 = Cdd {
        re: y0.re.mul_f64(2.0 / PI),
        im: y0.im.mul_f64(2.0 / PI),
    };
    (j0, y0)
}

/// H0^(1)(z) = J0 + i Y0 formed in double-double (the combination cancels
/// ~e^{Im z} digits for Im z > 0).
fn hankel_series_dd(z: Complex64) -> Complex64 {
    let (j0, y0) = j0y0_series_dd(z);
    Cdd {
        re: j0.re.sub(y0.im),
        im: j0.im.add(y0.re),
    }
    .to_c64()
}

pub(crate) fn j0y0_series(z: Complex64) -> (Complex64, Complex64) {
    let (j0, y0) = j0y0_series_dd(z);
    (j0.to_c64(), y0.to_c64())
}

/// Route to the series also in a wedge around the negative real axis where
/// the asymptotic expansion loses accuracy (Stokes-line neighbourhood).
fn use_series(z: Complex64) -> bool {
    let r = z.norm();
    r <= CROSSOVER || (r <= 28.0 && z.im.atan2(z.re).abs() > 2.0)
}

/// Asymptotic sum S(z) = sum_k i^k a_k z^{-k} with optimal truncation,
/// split into even part P and odd part iQ so callers can form J0/Y0.
fn asymptotic_pq(z: Complex64) -> (Complex64, Complex64) {
    let i_over_z = Complex64::new(0.0, 1.0) / z;
    let mut term = Complex64::new(1.0, 0.0);
    let mut p = term;
    let mut iq = Complex64::new(0.0, 0.0);
    let mut prev = f64::MAX;
    for k in 0..30u32 {
        let factor = -((2 * k + 1) as f64).powi(2) / (8.0 * (k + 1) as f64);
        term = term * i_over_z * factor;
        let m = term.norm();
        if m >= prev {
            break;
        }
        prev = m;
        if k % 2 == 0 {
            iq += term;
        } else {
            p += term;
        }
        if m < 1e-18 {
            break;
        }
    }
    (p, Complex64::new(0.0, -1.0) * iq)
}

/// (J0, Y0) by the Hankel asymptotic expansion, |z| > ~13.
pub(crate) fn j0y0_asymptotic(z: Complex64) -> (Complex64, Complex64) {
    let (p, q) = asymptotic_pq(z);
    if z.im == 0.0 {
        // real path: keeps imaginary parts exactly zero
        let x = z.re;
        let sq = (2.0 / (PI * x)).sqrt();
        let chi = x - FRAC_PI_4;
        let (sc, cc) = chi.sin_cos();
        let j = sq * (p.re * cc - q.re * sc);
        let y = sq * (p.re * sc + q.re * cc);
        (Complex64::new(j, 0.0), Complex64::new(y, 0.0))
    } else {
        let sq = (2.0 / (PI * z)).sqrt();
        let chi = z - FRAC_PI_4;
        let (sc, cc) = (chi.sin(), chi.cos());
        (sq * (p * cc - q * sc), sq * (p * sc + q * cc))
    }
}

/// Bessel functions of the first and second kind of order zero.
///
/// Relative accuracy better than 1e-12 for |z| <= 1e4 away from the
/// negative real axis. For real positive z the imaginary parts are
/// exactly zero.
pub fn j0y0(z: Complex64) -> Result<(Complex64, Complex64)> {
    check_domain(z)?;
    if use_series(z) {
        Ok(j0y0_series(z))
    } else {
        Ok(j0y0_asymptotic(z))
    }
}

/// Hankel function of the first kind of order zero, H0^(1)(z) = J0 + i Y0.
pub fn hankel1_0(z: Complex64) -> Result<Complex64> {
    check_domain(z)?;
    if use_series(z) {
        Ok(hankel_series_dd(z))
    } else {
        // H0 = sqrt(2/(pi z)) e^{i(z - pi/4)} S(z); one-sided exponential
        let (p, q) = asymptotic_pq(z);
        let s = p + Complex64::new(0.0, 1.0) * q;
        let sq = (2.0 / (PI * z)).sqrt();
        Ok(sq * (Complex64::new(0.0, 1.0) * (z - FRAC_PI_4)).exp() * s)
    }
}

/// Phase-extracted Hankel function h0(z) = e^{-iz} H0^(1)(z).
///
/// The exponential is fused with the asymptotic expansion so the result
/// stays representable for large positive Im z.
pub fn h0_scaled(z: Complex64) -> Result<Complex64> {
    check_domain(z)?;
    if use_series(z) {
        let h = hankel_series_dd(z);
        Ok(h * (Complex64::new(0.0, -1.0) * z).exp())
    } else {
        let (p, q) = asymptotic_pq(z);
        let s = p + Complex64::new(0.0, 1.0) * q;
        let sq = (2.0 / (PI * z)).sqrt();
        let e = Complex64::from_polar(1.0, -FRAC_PI_4);
        Ok(sq * e * s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQRT_2_OVER_PI: f64 = 0.797_884_560_802_865_4;

    #[test]
    fn rejects_origin_and_cut() {
        assert!(j0y0(Complex64::new(0.0, 0.0)).is_err());
        assert!(j0y0(Complex64::new(-1.0, 0.0)).is_err());
        assert!(hankel1_0(Complex64::new(0.0, 0.0)).is_err());
        assert!(j0y0(Complex64::new(-1.0, 0.5)).is_ok());
    }

    #[test]
    fn unit_argument_reference() {
        let (j, y) = j0y0(Complex64::new(1.0, 0.0)).unwrap();
        assert!((j.re - 0.765_197_686_557_966_6).abs() < 1e-14);
        assert!((y.re - 0.088_256_964_215_676_96).abs() < 1e-14);
        assert_eq!(j.im, 0.0);
        assert_eq!(y.im, 0.0);
    }

    #[test]
    fn moderate_argument_reference() {
        // series region upper end
        let (j, y) = j0y0(Complex64::new(14.5, 0.0)).unwrap();
        assert!((j.re - 0.087_544_868_010_376_22).abs() < 1e-13);
        assert!((y.re - 0.190_301_891_187_844_52).abs() < 1e-13);
    }

    #[test]
    fn complex_argument_reference() {
        let (j, y) = j0y0(Complex64::new(2.0, 3.0)).unwrap();
        let jr = Complex64::new(-0.469_517_192_044_070_2, -4.313_788_409_468_922_4);
        let yr = Complex64::new(4.327_021_968_290_545_5, -0.484_995_114_389_850_05);
        assert!((j - jr).norm() / jr.norm() < 1e-13);
        assert!((y - yr).norm() / yr.norm() < 1e-13);
    }

    #[test]
    fn large_argument_asymptotic_form() {
        let z = 50.0;
        let (j, y) = j0y0(Complex64::new(z, 0.0)).unwrap();
        let amp = (2.0 / (PI * z)).sqrt();
        assert!((j.re - amp * (z - FRAC_PI_4).cos()).abs() < 1e-3);
        assert!((y.re - amp * (z - FRAC_PI_4).sin()).abs() < 1e-3);
        // and against reference values
        assert!((j.re - 0.055_812_327_669_251_815).abs() < 1e-14);
        assert!((y.re + 0.098_064_995_470_077_08).abs() < 1e-14);
    }

    #[test]
    fn hankel_magnitude_at_100() {
        let h = hankel1_0(Complex64::new(100.0, 0.0)).unwrap();
        let scaled = h.norm() * (PI * 100.0 / 2.0).sqrt();
        assert!((scaled - 1.0).abs() < 1e-3);
    }

    #[test]
    fn hankel_decays_on_positive_imaginary_axis() {
        let h = hankel1_0(Complex64::new(0.0, 200.0)).unwrap();
        assert!(h.norm() < 1e-80);
        assert!(h.norm() > 0.0);
    }

    #[test]
    fn h0_definition_consistency() {
        let z = Complex64::new(10.0, 10.0);
        let h0 = h0_scaled(z).unwrap();
        let direct = hankel1_0(z).unwrap() * (Complex64::new(0.0, -1.0) * z).exp();
        assert!((h0 - direct).norm() / direct.norm() < 1e-10);
        // frozen reference
        let r = Complex64::new(0.079_527_749_800_243_59, -0.195_277_242_491_667_39);
        assert!((h0 - r).norm() / r.norm() < 1e-13);
    }

    #[test]
    fn h0_unit_argument() {
        let h0 = h0_scaled(Complex64::new(1.0, 0.0)).unwrap();
        let want = hankel1_0(Complex64::new(1.0, 0.0)).unwrap()
            * (Complex64::new(0.0, -1.0)).exp();
        assert!((h0 - want).norm() < 1e-14);
    }

    #[test]
    fn h0_lemma_bound_at_200() {
        let h0 = h0_scaled(Complex64::new(200.0, 0.0)).unwrap();
        assert!(h0.norm() <= 1.05 / 200.0f64.sqrt());
    }

    #[test]
    fn crossover_branch_consistency() {
        // both branches agree on a ring around the crossover radius
        let mut worst: f64 = 0.0;
        for k in 0..40 {
            let r = CROSSOVER * (0.8 + 0.45 * (k as f64) / 39.0);
            let th = PI * 0.9 * ((k % 8) as f64) / 8.0;
            let z = Complex64::from_polar(r, th);
            let (js, ys) = j0y0_series(z);
            let (ja, ya) = j0y0_asymptotic(z);
            worst = worst.max((js - ja).norm() / ja.norm().max(1e-300));
            worst = worst.max((ys - ya).norm() / ya.norm().max(1e-300));
        }
        assert!(worst < 1e-10, "crossover mismatch {worst:.3e}");
    }

    #[test]
    fn envelope_invariant() {
        // |h0(x) sqrt(x) - sqrt(2/pi) e^{-i pi/4}| <= 0.2/x on [10, 1e4]
        let target = Complex64::from_polar(SQRT_2_OVER_PI, -FRAC_PI_4);
        for k in 0..=50 {
            let x = 10.0 * (1e3f64).powf(k as f64 / 50.0);
            let h0 = h0_scaled(Complex64::new(x, 0.0)).unwrap();
            let dev = (h0 * x.sqrt() - target).norm();
            assert!(dev <= 0.2 / x, "x={x}: dev={dev:.3e} > {:.3e}", 0.2 / x);
        }
    }

    #[test]
    fn real_arguments_stay_real() {
        for &x in &[0.3, 1.0, 7.0, 13.0, 21.0, 400.0] {
            let (j, y) = j0y0(Complex64::new(x, 0.0)).unwrap();
            assert_eq!(j.im, 0.0);
            assert_eq!(y.im, 0.0);
        }
    }
}
