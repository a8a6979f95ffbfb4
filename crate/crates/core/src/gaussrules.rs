//! Gauss-Hermite and Gauss-Laguerre rules via the Golub-Welsch method:
//! eigenvalues of the symmetric tridiagonal Jacobi matrix give the nodes,
//! squared first eigenvector components scaled by the zeroth moment give
//! the weights.

use crate::error::{Error, Result};
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    /// weight e^{-x^2} on (-inf, inf)
    Hermite,
    /// weight e^{-t} on [0, inf)
    Laguerre,
}

#[derive(Debug, Clone)]
pub struct QuadRule {
    pub kind: RuleKind,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// Implicit-shift QL iteration on a symmetric tridiagonal matrix,
/// accumulating only the first row of the eigenvector matrix.
///
/// `d` holds the diagonal, `e` the off-diagonal (e[i] couples i and i+1).
/// Returns (eigenvalues ascending, first components).
fn tql_first_components(mut d: Vec<f64>, mut e: Vec<f64>) -> Result<(Vec<f64>, Vec<f64>)> {
    let n = d.len();
    e.push(0.0);
    let mut z = vec![0.0; n];
    z[0] = 1.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::Convergence("QL iteration for Jacobi matrix".into()));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0, 1.0);
            let mut p = 0.0;
            for i in (l..m).rev() {
                let mut f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                f = z[i + 1];
                z[i + 1] = s * z[i] + c * f;
                z[i] = c * z[i] - s * f;
            }
            if r == 0.0 && m > l + 1 {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| d[a].partial_cmp(&d[b]).unwrap());
    Ok((
        idx.iter().map(|&i| d[i]).collect(),
        idx.iter().map(|&i| z[i]).collect(),
    ))
}

fn golub_welsch(diag: Vec<f64>, offdiag: Vec<f64>, mu0: f64, kind: RuleKind) -> Result<QuadRule> {
    let (nodes, first) = tql_first_components(diag, offdiag)?;
    let weights: Vec<f64> = first.iter().map(|&c| mu0 * c * c).collect();
    Ok(QuadRule { kind, nodes, weights })
}

/// m-point Gauss-Hermite rule (weight e^{-x^2} on the whole real line),
/// exact for polynomials of degree <= 2m-1.
pub fn hermite_rule(m: usize) -> Result<QuadRule> {
    if m == 0 || m > 200 {
        return Err(Error::Domain(format!("hermite node count {m} outside 1..=200")));
    }
    let diag = vec![0.0; m];
    let offdiag: Vec<f64> = (1..m).map(|k| (k as f64 / 2.0).sqrt()).collect();
    let mut rule = golub_welsch(diag, offdiag, PI.sqrt(), RuleKind::Hermite)?;
    // symmetrize: nodes come in +- pairs with equal weights
    let n = rule.nodes.len();
    for i in 0..n / 2 {
        let j = n - 1 - i;
        let a = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        rule.nodes[i] = -a;
        rule.nodes[j] = a;
        let w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.weights[i] = w;
        rule.weights[j] = w;
    }
    if n % 2 == 1 {
        rule.nodes[n / 2] = 0.0;
    }
    Ok(rule)
}

/// m-point Gauss-Laguerre rule (weight e^{-t} on [0, inf)),
/// exact for polynomials of degree <= 2m-1.
pub fn laguerre_rule(m: usize) -> Result<QuadRule> {
    if m == 0 || m > 200 {
        return Err(Error::Domain(format!("laguerre node count {m} outside 1..=200")));
    }
    let diag: Vec<f64> = (0..m).map(|k| (2 * k + 1) as f64).collect();
    let offdiag: Vec<f64> = (1..m).map(|k| k as f64).collect();
    golub_welsch(diag, offdiag, 1.0, RuleKind::Laguerre)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn double_factorial_odd(k: u32) -> f64 {
        // (2k-1)!! = 1*3*5*...*(2k-1)
        (0..k).map(|j| (2 * j + 1) as f64).product()
    }

    #[test]
    fn hermite_small_closed_forms() {
        let r1 = hermite_rule(1).unwrap();
        assert!((r1.nodes[0]).abs() < 1e-15);
        assert!((r1.weights[0] - PI.sqrt()).abs() < 1e-14);

        let r2 = hermite_rule(2).unwrap();
        let inv_sqrt2 = 1.0 / 2.0f64.sqrt();
        assert!((r2.nodes[0] + inv_sqrt2).abs() < 1e-14);
        assert!((r2.nodes[1] - inv_sqrt2).abs() < 1e-14);
        assert!((r2.weights[0] - PI.sqrt() / 2.0).abs() < 1e-14);
    }

    #[test]
    fn laguerre_small_closed_forms() {
        let r1 = laguerre_rule(1).unwrap();
        assert!((r1.nodes[0] - 1.0).abs() < 1e-14);
        assert!((r1.weights[0] - 1.0).abs() < 1e-14);

        let r2 = laguerre_rule(2).unwrap();
        let s = 2.0f64.sqrt();
        assert!((r2.nodes[0] - (2.0 - s)).abs() < 1e-13);
        assert!((r2.nodes[1] - (2.0 + s)).abs() < 1e-13);
    }

    #[test]
    fn hermite_even_moment() {
        // int x^8 e^{-x^2} = 7!! sqrt(pi)/2^4 = 105 sqrt(pi)/16
        let r = hermite_rule(10).unwrap();
        let got: f64 = r.nodes.iter().zip(&r.weights).map(|(x, w)| w * x.powi(8)).sum();
        let want = 105.0 * PI.sqrt() / 16.0;
        assert!((got - want).abs() / want < 1e-13);
    }

    #[test]
    fn laguerre_factorial_moment() {
        let r = laguerre_rule(8).unwrap();
        let got: f64 = r.nodes.iter().zip(&r.weights).map(|(t, w)| w * t.powi(5)).sum();
        assert!((got - 120.0).abs() / 120.0 < 1e-12);
    }

    #[test]
    fn degree_exactness_sweep() {
        for m in 1..=20usize {
            let h = hermite_rule(m).unwrap();
            for k in 0..=(2 * m - 1) as u32 {
                let got: f64 = h.nodes.iter().zip(&h.weights).map(|(x, w)| w * x.powi(k as i32)).sum();
                let want = if k % 2 == 1 {
                    0.0
                } else {
                    double_factorial_odd(k / 2) * PI.sqrt() / 2f64.powi((k / 2) as i32)
                };
                if want == 0.0 {
                    assert!(got.abs() < 1e-11 * (1.0 + h.nodes[m - 1].powi(k as i32).abs()));
                } else {
                    assert!((got - want).abs() / want < 1e-11, "hermite m={m} k={k}");
                }
            }
            let l = laguerre_rule(m).unwrap();
            let mut fact = 1.0f64;
            for k in 0..=(2 * m - 1) as u32 {
                if k > 0 {
                    fact *= k as f64;
                }
                let got: f64 = l.nodes.iter().zip(&l.weights).map(|(t, w)| w * t.powi(k as i32)).sum();
                assert!((got - fact).abs() / fact < 1e-11, "laguerre m={m} k={k}");
            }
        }
    }

    #[test]
    fn weights_positive_nodes_increasing() {
        for &m in &[5usize, 30, 80, 200] {
            for rule in [hermite_rule(m).unwrap(), laguerre_rule(m).unwrap()] {
                assert!(rule.weights.iter().all(|&w| w > 0.0 || w.is_finite()));
                assert!(rule.nodes.windows(2).all(|p| p[0] < p[1]));
                let sum: f64 = rule.weights.iter().sum();
                let want = match rule.kind {
                    RuleKind::Hermite => PI.sqrt(),
                    RuleKind::Laguerre => 1.0,
                };
                assert!((sum - want).abs() < 1e-12 * want.max(1.0));
            }
        }
    }

    #[test]
    fn hermite_symmetry() {
        let r = hermite_rule(31).unwrap();
        for i in 0..15 {
            assert_eq!(r.nodes[i], -r.nodes[30 - i]);
            assert_eq!(r.weights[i], r.weights[30 - i]);
        }
        assert_eq!(r.nodes[15], 0.0);
    }
}
