//! Minimal double-double arithmetic for the Bessel ascending series.
//!
//! The series for J0/Y0 suffers cancellation of size ~e^{|z|}/(pi |z|) relative
//! to the result; accumulating in ~32 significant digits keeps the crossover
//! region (|z| up to ~30) at full double accuracy.

use num_complex::Complex64;

#[derive(Clone, Copy, Debug, Default)]
pub struct Dd {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(other.neg())
    }

    #[inline]
    pub fn neg(self) -> Dd {
        Dd { hi: -self.hi, lo: -self.lo }
    }

    #[inline]
    pub fn mul(self, other: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let (p, e) = two_prod(self.hi, x);
        let e = e + self.lo * x;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    #[inline]
    pub fn div_f64(self, d: f64) -> Dd {
        let q1 = self.hi / d;
        let (p, e) = two_prod(q1, d);
        let r = ((self.hi - p) - e + self.lo) / d;
        let (hi, lo) = quick_two_sum(q1, r);
        Dd { hi, lo }
    }

    /// 1/k as a double-double, k a small positive integer.
    #[inline]
    pub fn recip_int(k: u32) -> Dd {
        Dd::ONE.div_f64(k as f64)
    }

    #[inline]
    pub fn abs(self) -> f64 {
        self.hi.abs()
    }
}

/// Complex number with double-double components.
#[derive(Clone, Copy, Debug, Default)]
pub struct Cdd {
    pub re: Dd,
    pub im: Dd,
}

impl Cdd {
    pub const ZERO: Cdd = Cdd { re: Dd::ZERO, im: Dd::ZERO };
    pub const ONE: Cdd = Cdd { re: Dd::ONE, im: Dd::ZERO };

    #[inline]
    pub fn from_c64(z: Complex64) -> Cdd {
        Cdd { re: Dd::from_f64(z.re), im: Dd::from_f64(z.im) }
    }

    #[inline]
    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn add(self, o: Cdd) -> Cdd {
        Cdd { re: self.re.add(o.re), im: self.im.add(o.im) }
    }

    #[inline]
    pub fn sub(self, o: Cdd) -> Cdd {
        Cdd { re: self.re.sub(o.re), im: self.im.sub(o.im) }
    }

    #[inline]
    pub fn mul(self, o: Cdd) -> Cdd {
        Cdd {
            re: self.re.mul(o.re).sub(self.im.mul(o.im)),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    #[inline]
    pub fn mul_dd(self, d: Dd) -> Cdd {
        Cdd { re: self.re.mul(d), im: self.im.mul(d) }
    }

    #[inline]
    pub fn div_f64(self, d: f64) -> Cdd {
        Cdd { re: self.re.div_f64(d), im: self.im.div_f64(d) }
    }

    #[inline]
    pub fn norm_approx(self) -> f64 {
        self.re.hi.abs() + self.im.hi.abs()
    }
}

/// Exact complex square of a plain f64 complex, as Cdd.
pub fn square_c64(z: Complex64) -> Cdd {
    // re^2 - im^2 and 2 re im, each with exact low parts
    let (p1, e1) = two_prod(z.re, z.re);
    let (p2, e2) = two_prod(z.im, z.im);
    let re = Dd { hi: p1, lo: e1 }.sub(Dd { hi: p2, lo: e2 });
    let (p3, e3) = two_prod(2.0 * z.re, z.im);
    Cdd { re, im: Dd { hi: p3, lo: e3 } }
}
