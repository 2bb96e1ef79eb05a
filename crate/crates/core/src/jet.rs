//! Truncated Taylor expansions ("jets") of complex functions of a real
//! variable, and analytic functions that can be queried for them.
//!
//! A jet of order `K` at a point `x0` stores `f(x0), f'(x0), ..., f^(K)(x0)`,
//! i.e. the derivatives themselves rather than Taylor coefficients. Products
//! follow the Leibniz rule, so every operation is exact up to rounding at the
//! truncation order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_complex::{Complex, Complex64};
use num_traits::Zero;

use crate::dd::Dd;
use crate::error::{Error, Result};

/// Complex double-double scalar used for jet coefficients.
pub type C2 = Complex<Dd>;

/// Converts a complex `f64` to the jet scalar.
pub fn c2(z: Complex64) -> C2 {
    Complex::new(Dd::from(z.re), Dd::from(z.im))
}

fn c2_real(x: Dd) -> C2 {
    Complex::new(x, Dd::ZERO)
}

fn to_c64(z: C2) -> Complex64 {
    Complex64::new(z.re.to_f64(), z.im.to_f64())
}

fn binomial_row(k: usize) -> Vec<f64> {
    let mut row = vec![1.0; k + 1];
    for j in 1..k {
        row[j] = row[j - 1] * (k - j + 1) as f64 / j as f64;
    }
    row
}

/// Value and derivatives up to a fixed order at one expansion point.
#[derive(Clone, PartialEq)]
pub struct Jet {
    coeffs: Vec<C2>,
}

impl fmt::Debug for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.coeffs.iter().map(|c| to_c64(*c)))
            .finish()
    }
}

impl Jet {
    pub fn from_coeffs(coeffs: Vec<C2>) -> Self {
        assert!(!coeffs.is_empty(), "a jet holds at least the value");
        Jet { coeffs }
    }

    pub fn from_c64(coeffs: &[Complex64]) -> Self {
        Jet::from_coeffs(coeffs.iter().map(|&z| c2(z)).collect())
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Jet::from_coeffs(coeffs.iter().map(|&x| c2_real(Dd::from(x))).collect())
    }

    pub fn zero(order: usize) -> Self {
        Jet {
            coeffs: vec![C2::zero(); order + 1],
        }
    }

    pub fn constant(order: usize, c: Complex64) -> Self {
        let mut j = Jet::zero(order);
        j.coeffs[0] = c2(c);
        j
    }

    /// The identity function `x` expanded at `x0`.
    pub fn variable(x0: f64, order: usize) -> Self {
        let mut j = Jet::zero(order);
        j.coeffs[0] = c2_real(Dd::from(x0));
        if order >= 1 {
            j.coeffs[1] = c2_real(Dd::ONE);
        }
        j
    }

    /// `|x|^q` at `x0 != 0`; the k-th derivative is `q(q-1)...(q-k+1) |x|^q / x^k`.
    pub fn abs_pow(x0: f64, q: f64, order: usize) -> Result<Self> {
        Self::power_law(x0, q, order, false)
    }

    /// `sign(x) |x|^q` at `x0 != 0`.
    pub fn signed_abs_pow(x0: f64, q: f64, order: usize) -> Result<Self> {
        Self::power_law(x0, q, order, true)
    }

    fn power_law(x0: f64, q: f64, order: usize, odd: bool) -> Result<Self> {
        if x0 == 0.0 {
            return Err(Error::SingularPoint {
                x: x0,
                what: "power of |x| expanded at the origin",
            });
        }
        // |x0|^q depends only on |x0|, so f(-x0) and f(x0) share their rounding.
        let mut value = Dd::from(x0.abs()).powf(q);
        if odd && x0 < 0.0 {
            value = -value;
        }
        let inv = Dd::from(x0).recip();
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut falling = Dd::ONE;
        let mut inv_pow = Dd::ONE;
        for k in 0..=order {
            coeffs.push(c2_real(falling * value * inv_pow));
            falling *= Dd::from(q - k as f64);
            inv_pow *= inv;
        }
        Ok(Jet { coeffs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C2] {
        &self.coeffs
    }

    /// Value at the expansion point, rounded to `f64`.
    pub fn value(&self) -> Complex64 {
        to_c64(self.coeffs[0])
    }

    /// The `k`-th derivative rounded to `f64`.
    pub fn derivative_value(&self, k: usize) -> Complex64 {
        to_c64(self.coeffs[k])
    }

    pub fn to_c64_vec(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|&c| to_c64(c)).collect()
    }

    /// Jet of `f'`, one order shorter.
    pub fn derivative(&self) -> Result<Self> {
        if self.coeffs.len() < 2 {
            return Err(Error::ParameterDomain(
                "cannot differentiate a jet of order 0".into(),
            ));
        }
        Ok(Jet {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        let n = (order + 1).min(self.coeffs.len());
        Jet {
            coeffs: self.coeffs[..n].to_vec(),
        }
    }

    /// Given the jet of `f` at `-x0`, returns the jet of `x -> f(-x)` at `x0`.
    pub fn reflect(&self) -> Self {
        Jet {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| if k % 2 == 1 { -c } else { c })
                .collect(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        let c = c2(c);
        Jet {
            coeffs: self.coeffs.iter().map(|&v| v * c).collect(),
        }
    }

    pub fn scale_real(&self, c: f64) -> Self {
        let c = Dd::from(c);
        Jet {
            coeffs: self.coeffs.iter().map(|&v| v * c).collect(),
        }
    }

    pub fn exp(&self) -> Self {
        let n = self.coeffs.len();
        let mut h = vec![C2::zero(); n];
        let v = self.coeffs[0];
        // exp(u + iv) = e^u (cos v + i sin v); the phase stays in f64 since
        // every exponent used here is real.
        let mag = v.re.exp();
        let phase = v.im.to_f64();
        h[0] = if phase == 0.0 {
            c2_real(mag)
        } else {
            Complex::new(mag * phase.cos(), mag * phase.sin())
        };
        // h' = f' h  =>  h^(k) = sum_j C(k-1, j) f^(j+1) h^(k-1-j)
        for k in 1..n {
            let row = binomial_row(k - 1);
            let mut acc = C2::zero();
            for j in 0..k {
                acc = acc + self.coeffs[j + 1] * h[k - 1 - j] * Dd::from(row[j]);
            }
            h[k] = acc;
        }
        Jet { coeffs: h }
    }

    fn zip_with(&self, rhs: &Jet, f: impl Fn(C2, C2) -> C2) -> Jet {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        Jet {
            coeffs: (0..n).map(|k| f(self.coeffs[k], rhs.coeffs[k])).collect(),
        }
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, rhs: &Jet) -> Jet {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        &self + &rhs
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, rhs: &Jet) -> Jet {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Sub for Jet {
    type Output = Jet;
    fn sub(self, rhs: Jet) -> Jet {
        &self - &rhs
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

/// Leibniz rule: `(fg)^(k) = sum_j C(k, j) f^(j) g^(k-j)`.
impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Jet) -> Jet {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            let row = binomial_row(k);
            let mut acc = C2::zero();
            for j in 0..=k {
                acc = acc + self.coeffs[j] * rhs.coeffs[k - j] * Dd::from(row[j]);
            }
            out.push(acc);
        }
        Jet { coeffs: out }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        &self * &rhs
    }
}

impl Mul<f64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        self.scale_real(rhs)
    }
}

impl Mul<f64> for &Jet {
    type Output = Jet;
    fn mul(self, rhs: f64) -> Jet {
        self.scale_real(rhs)
    }
}

type Evaluator = dyn Fn(f64, usize) -> Result<Jet> + Send + Sync;

/// A function of one real variable that can be expanded to any order at any
/// admissible point (all of the real line, except possibly `x = 0`).
#[derive(Clone)]
pub struct AnalyticFunction {
    eval: Arc<Evaluator>,
}

impl fmt::Debug for AnalyticFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("AnalyticFunction")
    }
}

impl AnalyticFunction {
    pub fn new(f: impl Fn(f64, usize) -> Result<Jet> + Send + Sync + 'static) -> Self {
        AnalyticFunction { eval: Arc::new(f) }
    }

    /// Jet of order `order` at `x`.
    pub fn jet(&self, x: f64, order: usize) -> Result<Jet> {
        let j = (self.eval)(x, order)?;
        debug_assert_eq!(j.order(), order, "evaluator returned the wrong order");
        Ok(j)
    }

    /// Value at `x`.
    pub fn eval(&self, x: f64) -> Result<Complex64> {
        Ok(self.jet(x, 0)?.value())
    }

    /// `alpha f + beta g`.
    pub fn linear_combination(
        alpha: Complex64,
        f: &AnalyticFunction,
        beta: Complex64,
        g: &AnalyticFunction,
    ) -> AnalyticFunction {
        let (f, g) = (f.clone(), g.clone());
        AnalyticFunction::new(move |x, k| Ok(f.jet(x, k)?.scale(alpha) + g.jet(x, k)?.scale(beta)))
    }
}
