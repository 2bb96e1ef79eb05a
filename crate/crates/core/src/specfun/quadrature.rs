use serde::{Deserialize, Serialize};

use super::gamma::ln_gamma;
use super::poly::check_alpha;
use crate::error::{Error, Result};
use crate::numerics::SymTriMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum QuadratureKind {
    /// Weight `e^(-x^2)` on the real line.
    GaussHermite,
    /// Weight `x^alpha e^(-x)` on `(0, inf)`.
    GaussGeneralizedLaguerre { alpha: f64 },
    /// Unit weight on `[-1, 1]`.
    GaussLegendre,
}

/// Nodes (ascending) and positive weights of an N-point Gauss rule.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    kind: QuadratureKind,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn kind(&self) -> QuadratureKind {
        self.kind
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `sum_i w_i f(x_i)`, i.e. the rule applied to `f` against its weight.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// Three-term recurrence of the orthonormal family:
/// `b_{k+1} p_{k+1} = (x - a_k) p_k - b_k p_{k-1}`, `p_0 = 1/sqrt(mu0)`.
struct Jacobi {
    a: Vec<f64>,
    // b[k] couples p_{k-1} and p_k; b[0] is unused
    b: Vec<f64>,
    mu0: f64,
}

impl Jacobi {
    /// Returns `(p_n(x), p_n'(x), sum_{k<n} p_k(x)^2)`.
    fn eval(&self, n: usize, x: f64) -> (f64, f64, f64) {
        let mut p_prev = 0.0;
        let mut p = 1.0 / self.mu0.sqrt();
        let mut d_prev = 0.0;
        let mut d = 0.0;
        let mut sum_sq = 0.0;
        for k in 0..n {
            sum_sq += p * p;
            let bk = if k == 0 { 0.0 } else { self.b[k] };
            let b_next = self.b[k + 1];
            let p_next = ((x - self.a[k]) * p - bk * p_prev) / b_next;
            let d_next = ((x - self.a[k]) * d + p - bk * d_prev) / b_next;
            p_prev = p;
            p = p_next;
            d_prev = d;
            d = d_next;
        }
        (p, d, sum_sq)
    }

    fn rule(&self, n: usize, kind: QuadratureKind) -> Result<QuadratureRule> {
        let m = SymTriMatrix::new(self.a[..n].to_vec(), self.b[1..n].to_vec())?;
        let mut nodes = m.eigenvalues_lowest(n)?;
        let mut weights = Vec::with_capacity(n);
        for x in nodes.iter_mut() {
            // bisection leaves a few ulps; Newton on p_n polishes the root
            for _ in 0..3 {
                let (p, d, _) = self.eval(n, *x);
                if d == 0.0 || !p.is_finite() {
                    break;
                }
                let step = p / d;
                if step.abs() > 1e-8 * (1.0 + x.abs()) {
                    break;
                }
                *x -= step;
                if step.abs() <= f64::EPSILON * x.abs() {
                    break;
                }
            }
            let (_, _, sum_sq) = self.eval(n, *x);
            weights.push(1.0 / sum_sq);
        }
        Ok(QuadratureRule {
            kind,
            nodes,
            weights,
        })
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ParameterDomain(
            "a Gauss rule needs at least one node".into(),
        ))
    } else {
        Ok(())
    }
}

/// N-point Gauss–Hermite rule.
pub fn gauss_hermite(n: usize) -> Result<QuadratureRule> {
    check_n(n)?;
    let jac = Jacobi {
        a: vec![0.0; n + 1],
        b: (0..=n).map(|k| (k as f64 / 2.0).sqrt()).collect(),
        mu0: std::f64::consts::PI.sqrt(),
    };
    let mut rule = jac.rule(n, QuadratureKind::GaussHermite)?;
    symmetrize(&mut rule);
    Ok(rule)
}

/// N-point generalized Gauss–Laguerre rule with `alpha > -1`.
pub fn gauss_generalized_laguerre(n: usize, alpha: f64) -> Result<QuadratureRule> {
    check_n(n)?;
    check_alpha(alpha)?;
    let jac = Jacobi {
        a: (0..=n).map(|k| 2.0 * k as f64 + 1.0 + alpha).collect(),
        b: (0..=n)
            .map(|k| (k as f64 * (k as f64 + alpha)).sqrt())
            .collect(),
        mu0: ln_gamma(alpha + 1.0)?.exp(),
    };
    jac.rule(n, QuadratureKind::GaussGeneralizedLaguerre { alpha })
}

/// N-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> Result<QuadratureRule> {
    check_n(n)?;
    let jac = Jacobi {
        a: vec![0.0; n + 1],
        b: (0..=n)
            .map(|k| {
                let k = k as f64;
                k / (4.0 * k * k - 1.0).sqrt()
            })
            .collect(),
        mu0: 2.0,
    };
    let mut rule = jac.rule(n, QuadratureKind::GaussLegendre)?;
    symmetrize(&mut rule);
    Ok(rule)
}

// Even weight functions: enforce exact mirror symmetry of the rule.
fn symmetrize(rule: &mut QuadratureRule) {
    let n = rule.nodes.len();
    for i in 0..n / 2 {
        let j = n - 1 - i;
        let x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        let w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.nodes[i] = -x;
        rule.nodes[j] = x;
        rule.weights[i] = w;
        rule.weights[j] = w;
    }
    if n % 2 == 1 {
        rule.nodes[n / 2] = 0.0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn small_rules() {
        let r = gauss_hermite(1).unwrap();
        assert_eq!(r.nodes(), &[0.0]);
        assert!((r.weights()[0] - PI.sqrt()).abs() < 1e-15);
        let r = gauss_hermite(2).unwrap();
        assert!((r.nodes()[1] - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((r.weights()[0] - PI.sqrt() / 2.0).abs() < 1e-15);
        let r = gauss_generalized_laguerre(1, 0.0).unwrap();
        assert!((r.nodes()[0] - 1.0).abs() < 1e-15 && (r.weights()[0] - 1.0).abs() < 1e-15);
        let r = gauss_generalized_laguerre(2, 0.0).unwrap();
        assert!((r.nodes()[0] - (2.0 - 2f64.sqrt())).abs() < 1e-15);
        assert!((r.nodes()[1] - (2.0 + 2f64.sqrt())).abs() < 1e-14);
    }

    #[test]
    fn zeroth_moments() {
        for n in [5, 32, 64, 100] {
            let s: f64 = gauss_hermite(n).unwrap().weights().iter().sum();
            assert!((s / PI.sqrt() - 1.0).abs() < 1e-13, "hermite {n}");
            for alpha in [-0.7, 0.0, 0.5, 3.25] {
                let r = gauss_generalized_laguerre(n, alpha).unwrap();
                let s: f64 = r.weights().iter().sum();
                let g = ln_gamma(alpha + 1.0).unwrap().exp();
                assert!((s / g - 1.0).abs() < 1e-12, "laguerre {n} {alpha}");
                assert!(r.nodes()[0] > 0.0);
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(gauss_hermite(0).is_err());
        assert!(gauss_generalized_laguerre(4, -1.0).is_err());
    }
}
