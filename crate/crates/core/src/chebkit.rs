//! Clenshaw-Curtis grids, DCT-I transforms and the fast Hermite-type
//! interpolation solvers.
//!
//! `interp_p1` builds the degree-(2s+nu+1) interpolant on [0,1] matching
//! values at the mapped Clenshaw-Curtis points and derivatives of order
//! 1..=s at both endpoints; `interp_p2` builds the degree-(3s+nu+1)
//! interpolant on [-1,1] additionally matching derivatives at the midpoint
//! (nu must be odd so 0 is a grid point). Both reduce to one inverse DCT-I,
//! an index-folding pass and a small dense solve.

use crate::error::{Error, Result};
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

/// Expansion domain of a Chebyshev coefficient vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// T_n(x) on [-1, 1]
    Standard,
    /// T_n(2x - 1) on [0, 1]
    Shifted,
}

/// Chebyshev expansion coefficients with their domain tag.
#[derive(Debug, Clone)]
pub struct ChebCoeffs {
    pub coeffs: Vec<Complex64>,
    pub domain: Domain,
}

/// Interpolation data: samples at the nu+2 Clenshaw-Curtis points (mapped
/// to the target domain) plus derivative values of order 0..=s at the
/// endpoints and, for `interp_p2`, at the midpoint.
#[derive(Debug, Clone)]
pub struct HermiteData {
    /// f at the CC points in grid order (c_0 = 1 first).
    pub samples: Vec<Complex64>,
    /// derivatives (f, f', ..., f^(s)) at the left domain endpoint (0 or -1).
    pub left_derivs: Vec<Complex64>,
    /// derivatives at the right domain endpoint (1).
    pub right_derivs: Vec<Complex64>,
    /// derivatives at the midpoint, used by `interp_p2` only.
    pub mid_derivs: Vec<Complex64>,
}

/// Clenshaw-Curtis points c_n = cos(n pi/(nu+1)), n = 0..=nu+1,
/// strictly decreasing from 1 to -1 with exact antisymmetry.
pub fn cc_points(nu: usize) -> Vec<f64> {
    assert!(nu >= 1, "cc_points requires nu >= 1");
    let len = nu + 2;
    let mut c = vec![0.0; len];
    for n in 0..len {
        if 2 * n < len - 1 {
            c[n] = (n as f64 * PI / (nu + 1) as f64).cos();
        }
    }
    c[0] = 1.0;
    for n in 0..len {
        if 2 * n > len - 1 {
            c[n] = -c[len - 1 - n];
        } else if 2 * n == len - 1 {
            c[n] = 0.0;
        }
    }
    c
}

fn fft_plan(len: usize) -> Arc<dyn Fft<f64>> {
    static PLANS: OnceLock<Mutex<HashMap<usize, Arc<dyn Fft<f64>>>>> = OnceLock::new();
    let plans = PLANS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = plans.lock().unwrap();
    guard
        .entry(len)
        .or_insert_with(|| FftPlanner::new().plan_fft_forward(len))
        .clone()
}

/// The double-primed cosine sum: (S u)_n = sum''_k u_k cos(n k pi/(nu+1)),
/// endpoint terms halved, computed by an even-extension FFT.
fn cosine_sum(u: &[Complex64]) -> Vec<Complex64> {
    let len = u.len();
    assert!(len >= 2);
    let m = 2 * (len - 1);
    let mut v = vec![Complex64::new(0.0, 0.0); m];
    v[..len].copy_from_slice(u);
    for k in 1..len - 1 {
        v[m - k] = u[k];
    }
    fft_plan(m).process(&mut v);
    v.truncate(len);
    v.iter_mut().for_each(|x| *x *= 0.5);
    v
}

/// Inverse DCT-I: (2/(nu+1)) sum''_k u_k cos(n k pi/(nu+1)).
/// Takes grid samples to (pre-fold) Chebyshev coefficients.
pub fn idct1(u: &[Complex64]) -> Vec<Complex64> {
    let scale = 2.0 / (u.len() - 1) as f64;
    let mut out = cosine_sum(u);
    out.iter_mut().for_each(|x| *x *= scale);
    out
}

/// Forward DCT-I, the exact inverse of [`idct1`].
pub fn dct1(u: &[Complex64]) -> Vec<Complex64> {
    cosine_sum(u)
}

/// T_n^(j) at +1 or -1 via the closed-form factorial formula.
fn deriv_at_one(n: usize, j: usize, sign_minus: bool) -> f64 {
    if j > n {
        return 0.0;
    }
    if n == 0 {
        return if j == 0 { 1.0 } else { 0.0 };
    }
    let parity = if sign_minus && (n + j) % 2 == 1 { -1.0 } else { 1.0 };
    if j == 0 {
        return parity;
    }
    // n (n+j-1)!/(n-j)! * 2^j j!/(2j)!, an integer; exact in u128 for the
    // sizes the interpolation systems use, f64 beyond
    let mut num: u128 = n as u128;
    let mut overflow = false;
    for i in 0..(2 * j - 1) {
        let f = (n + j - 1 - i) as u128;
        match num.checked_mul(f) {
            Some(v) => num = v,
            None => {
                overflow = true;
                break;
            }
        }
    }
    if !overflow {
        let mut pow: u128 = 1 << j;
        for i in 2..=j {
            pow *= i as u128;
        }
        if let Some(v) = num.checked_mul(pow) {
            let mut fact2j: u128 = 1;
            for i in 2..=2 * j {
                fact2j *= i as u128;
            }
            return parity * (v / fact2j) as f64;
        }
    }
    // float fallback
    let mut val = n as f64;
    for i in 0..(2 * j - 1) {
        val *= (n + j - 1 - i) as f64;
    }
    val *= 2f64.powi(j as i32);
    for i in 2..=j {
        val *= i as f64;
    }
    for i in 2..=2 * j {
        val /= i as f64;
    }
    parity * val
}

/// T_n^(j) at 0 via the Leibniz-corrected recurrence
/// T_{n+1}^(j)(0) = 2j T_n^(j-1)(0) - T_{n-1}^(j)(0).
fn deriv_at_zero(n: usize, j: usize) -> f64 {
    if j > n {
        return 0.0;
    }
    // rows[jj][k] = T_k^(jj)(0), built for jj = 0..=j, k = 0..=n
    let mut prev: Vec<i128> = (0..=n)
        .map(|k| match k % 4 {
            0 => 1,
            2 => -1,
            _ => 0,
        })
        .collect();
    for jj in 1..=j {
        let mut cur = vec![0i128; n + 1];
        if n >= 1 {
            cur[1] = if jj == 1 { 1 } else { 0 };
        }
        for k in 1..n {
            cur[k + 1] = 2 * jj as i128 * prev[k] - cur[k - 1];
        }
        prev = cur;
    }
    prev[n] as f64
}

/// j-th derivative of T_n at a point in {-1, 0, +1}.
pub fn cheb_deriv_value(n: usize, j: usize, point: i8) -> f64 {
    match point {
        1 => deriv_at_one(n, j, false),
        -1 => deriv_at_one(n, j, true),
        0 => deriv_at_zero(n, j),
        _ => panic!("cheb_deriv_value point must be -1, 0 or +1"),
    }
}

/// Dense complex LU solve with partial pivoting (small auxiliary systems).
fn dense_solve(mut a: Vec<Vec<Complex64>>, mut b: Vec<Complex64>) -> Result<Vec<Complex64>> {
    let n = b.len();
    for col in 0..n {
        let (piv, pmax) = (col..n)
            .map(|r| (r, a[r][col].norm()))
            .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap())
            .unwrap();
        if pmax == 0.0 || !pmax.is_finite() {
            return Err(Error::Singular(format!(
                "auxiliary interpolation system singular at column {col}"
            )));
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
            let t = b[col];
            b[r] -= f * t;
        }
    }
    for col in (0..n).rev() {
        let mut acc = b[col];
        for c in col + 1..n {
            acc -= a[col][c] * b[c];
        }
        b[col] = acc / a[col][col];
    }
    Ok(b)
}

fn check_interp_pre(samples: usize, s: usize, nu: usize, factor: usize) -> Result<()> {
    if s > 8 {
        return Err(Error::Domain(format!(
            "derivative order s={s} > 8 (factorial growth makes it meaningless in f64)"
        )));
    }
    if nu < 1.max(factor * s) {
        return Err(Error::Domain(format!("nu={nu} violates nu >= max(1, {factor}s)")));
    }
    if samples != nu + 2 {
        return Err(Error::Domain(format!(
            "expected {} samples, got {samples}",
            nu + 2
        )));
    }
    Ok(())
}

fn fold(pcheck: &[Complex64], tail: &[Complex64], width: usize) -> Vec<Complex64> {
    let nu = pcheck.len() - 2;
    let mut p = Vec::with_capacity(nu + 2 + tail.len());
    p.push(0.5 * pcheck[0]);
    for n in 1..=nu {
        let mut v = pcheck[n];
        if n + width > nu {
            // p_n = pcheck_n - p_{2 nu - n + 2}; tail[m] holds p_{nu+2+m}
            v -= tail[nu - n];
        }
        p.push(v);
    }
    p.push(0.5 * pcheck[nu + 1]);
    p.extend_from_slice(tail);
    p
}

/// Hermite interpolation with endpoint derivatives on the shifted domain [0,1].
///
/// Returns the coefficients of the unique degree-(2s+nu+1) polynomial matching
/// the nu+2 samples and derivative orders 1..=s at both endpoints.
pub fn interp_p1(data: &HermiteData, s: usize, nu: usize) -> Result<ChebCoeffs> {
    check_interp_pre(data.samples.len(), s, nu, 2)?;
    if s > 0 && (data.left_derivs.len() < s + 1 || data.right_derivs.len() < s + 1) {
        return Err(Error::Domain("derivative data shorter than s+1".into()));
    }
    let pcheck = idct1(&data.samples);
    let tail = if s == 0 {
        Vec::new()
    } else {
        // unknowns q_n = p_{nu+1+n}, n = 1..=2s; equations j = 1..=s at both ends
        let mut a = vec![vec![Complex64::new(0.0, 0.0); 2 * s]; 2 * s];
        let mut rhs = vec![Complex64::new(0.0, 0.0); 2 * s];
        for j in 1..=s {
            let conds: [(i8, &[Complex64]); 2] =
                [(1, &data.right_derivs), (-1, &data.left_derivs)];
            for (row, (pt, derivs)) in conds.into_iter().enumerate() {
                let r = 2 * (j - 1) + row;
                for n in 1..=2 * s {
                    a[r][n - 1] = Complex64::new(
                        cheb_deriv_value(nu + 1 + n, j, pt) - cheb_deriv_value(nu + 1 - n, j, pt),
                        0.0,
                    );
                }
                let mut acc = derivs[j] / 2f64.powi(j as i32);
                for (k, &pk) in pcheck.iter().enumerate() {
                    let w = if k == 0 || k == nu + 1 { 0.5 } else { 1.0 };
                    acc -= w * pk * cheb_deriv_value(k, j, pt);
                }
                rhs[r] = acc;
            }
        }
        dense_solve(a, rhs)?
    };
    Ok(ChebCoeffs {
        coeffs: fold(&pcheck, &tail, 2 * s),
        domain: Domain::Shifted,
    })
}

/// Hermite interpolation with endpoint and midpoint derivatives on [-1,1].
///
/// nu must be odd so that 0 is a Clenshaw-Curtis point. Returns coefficients
/// of the unique degree-(3s+nu+1) interpolant.
pub fn interp_p2(data: &HermiteData, s: usize, nu: usize) -> Result<ChebCoeffs> {
    if nu % 2 == 0 {
        return Err(Error::Domain(format!("interp_p2 requires odd nu, got {nu}")));
    }
    check_interp_pre(data.samples.len(), s, nu, 3)?;
    if s > 0
        && (data.left_derivs.len() < s + 1
            || data.right_derivs.len() < s + 1
            || data.mid_derivs.len() < s + 1)
    {
        return Err(Error::Domain("derivative data shorter than s+1".into()));
    }
    let pcheck = idct1(&data.samples);
    let tail = if s == 0 {
        Vec::new()
    } else {
        let mut a = vec![vec![Complex64::new(0.0, 0.0); 3 * s]; 3 * s];
        let mut rhs = vec![Complex64::new(0.0, 0.0); 3 * s];
        for j in 1..=s {
            let conds: [(i8, &[Complex64]); 3] = [
                (-1, &data.left_derivs),
                (0, &data.mid_derivs),
                (1, &data.right_derivs),
            ];
            for (row, (pt, derivs)) in conds.into_iter().enumerate() {
                let r = 3 * (j - 1) + row;
                for n in 1..=3 * s {
                    a[r][n - 1] = Complex64::new(
                        cheb_deriv_value(nu + 1 + n, j, pt) - cheb_deriv_value(nu + 1 - n, j, pt),
                        0.0,
                    );
                }
                let mut acc = derivs[j];
                for (k, &pk) in pcheck.iter().enumerate() {
                    let w = if k == 0 || k == nu + 1 { 0.5 } else { 1.0 };
                    acc -= w * pk * cheb_deriv_value(k, j, pt);
                }
                rhs[r] = acc;
            }
        }
        dense_solve(a, rhs)?
    };
    Ok(ChebCoeffs {
        coeffs: fold(&pcheck, &tail, 3 * s),
        domain: Domain::Standard,
    })
}

/// Clenshaw evaluation of a Chebyshev expansion at a complex point.
pub fn eval_cheb(c: &ChebCoeffs, x: Complex64) -> Complex64 {
    let t = match c.domain {
        Domain::Standard => x,
        Domain::Shifted => 2.0 * x - Complex64::new(1.0, 0.0),
    };
    clenshaw(&c.coeffs, t)
}

/// Clenshaw recurrence for sum_k a_k T_k(t).
pub fn clenshaw(a: &[Complex64], t: Complex64) -> Complex64 {
    let mut b1 = Complex64::new(0.0, 0.0);
    let mut b2 = Complex64::new(0.0, 0.0);
    for &ak in a.iter().rev() {
        let b0 = 2.0 * t * b1 - b2 + ak;
        b2 = b1;
        b1 = b0;
    }
    b1 - t * b2
}

/// Coefficients of the derivative expansion; the shifted domain picks up
/// the chain-rule factor 2.
pub fn differentiate(c: &ChebCoeffs) -> ChebCoeffs {
    let a = &c.coeffs;
    let n = a.len();
    if n <= 1 {
        return ChebCoeffs {
            coeffs: vec![Complex64::new(0.0, 0.0)],
            domain: c.domain,
        };
    }
    let mut b = vec![Complex64::new(0.0, 0.0); n + 1];
    for k in (1..n).rev() {
        b[k - 1] = b[k + 1] + 2.0 * k as f64 * a[k];
    }
    b[0] *= 0.5;
    b.truncate(n - 1);
    let scale = match c.domain {
        Domain::Standard => 1.0,
        Domain::Shifted => 2.0,
    };
    b.iter_mut().for_each(|x| *x *= scale);
    ChebCoeffs { coeffs: b, domain: c.domain }
}
