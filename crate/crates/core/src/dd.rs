//! Double-double real arithmetic (about 32 significant digits).
//!
//! Jets are carried in this precision: the deformed operators multiply by
//! `|x|^(-2a-2)` near the origin, and evaluating them on wavefunctions in
//! plain `f64` loses all significance there.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Rem, Sub, SubAssign};

use num_traits::{Num, One, Zero};

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

const LN2: Dd = Dd {
    hi: std::f64::consts::LN_2,
    lo: 2.319_046_813_846_299_6e-17,
};

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
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

    pub const fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Builds a value from a leading part and a correction term.
    pub fn from_parts(hi: f64, lo: f64) -> Self {
        let (hi, lo) = two_sum(hi, lo);
        Dd { hi, lo }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite()
    }

    pub fn abs(self) -> Self {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    pub fn recip(self) -> Self {
        Dd::ONE / self
    }

    /// Multiplies by `2^k` exactly.
    fn ldexp(self, k: i32) -> Self {
        let s = 2f64.powi(k);
        Dd {
            hi: self.hi * s,
            lo: self.lo * s,
        }
    }

    pub fn sqrt(self) -> Self {
        if self.hi <= 0.0 {
            return if self.hi == 0.0 {
                Dd::ZERO
            } else {
                Dd::from_f64(f64::NAN)
            };
        }
        let y = Dd::from_f64(self.hi.sqrt());
        // one Newton step on y^2 = x doubles the number of correct digits
        y + (self - y * y) / (y + y)
    }

    pub fn exp(self) -> Self {
        if self.hi > 709.78 {
            return Dd::from_f64(f64::INFINITY);
        }
        if self.hi < -745.2 {
            return Dd::ZERO;
        }
        let k = (self.hi / LN2.hi).round();
        let r = self - LN2 * Dd::from_f64(k);
        // exp(r) = (1 + s)^(2^9) with s = expm1(r / 2^9)
        let t = r.ldexp(-9);
        let mut term = t;
        let mut s = t;
        for i in 2..=14 {
            term = term * t / Dd::from_f64(i as f64);
            s += term;
            if term.hi.abs() < 1e-34 {
                break;
            }
        }
        for _ in 0..9 {
            s = s + s + s * s;
        }
        let e = Dd::ONE + s;
        let k = k as i32;
        // split the scaling so that 2^k itself never overflows or underflows
        if k > 1000 {
            e.ldexp(1000).ldexp(k - 1000)
        } else if k < -1000 {
            e.ldexp(-1000).ldexp(k + 1000)
        } else {
            e.ldexp(k)
        }
    }

    pub fn ln(self) -> Self {
        if self.hi <= 0.0 {
            return Dd::from_f64(if self.hi == 0.0 {
                f64::NEG_INFINITY
            } else {
                f64::NAN
            });
        }
        let mut y = Dd::from_f64(self.hi.ln());
        for _ in 0..2 {
            y = y + self * (-y).exp() - Dd::ONE;
        }
        y
    }

    /// `self^q` for positive `self`.
    pub fn powf(self, q: f64) -> Self {
        if q == 0.0 {
            return Dd::ONE;
        }
        (self.ln() * Dd::from_f64(q)).exp()
    }

    pub fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Dd::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd::from_f64(x)
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e} + {:e}", self.hi, self.lo)
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            o => o,
        }
    }
}

impl Neg for Dd {
    type Output = Dd;
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Add for Dd {
    type Output = Dd;
    fn add(self, rhs: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Mul for Dd {
    type Output = Dd;
    fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + (self.hi * rhs.lo + self.lo * rhs.hi);
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Dd::from_f64(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Dd::from_f64(q2);
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo } + Dd::from_f64(q3)
    }
}

impl Rem for Dd {
    type Output = Dd;
    fn rem(self, rhs: Dd) -> Dd {
        let q = (self / rhs).to_f64().trunc();
        self - rhs * Dd::from_f64(q)
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    fn mul(self, rhs: f64) -> Dd {
        self * Dd::from_f64(rhs)
    }
}

impl AddAssign for Dd {
    fn add_assign(&mut self, rhs: Dd) {
        *self = *self + rhs;
    }
}

impl SubAssign for Dd {
    fn sub_assign(&mut self, rhs: Dd) {
        *self = *self - rhs;
    }
}

impl MulAssign for Dd {
    fn mul_assign(&mut self, rhs: Dd) {
        *self = *self * rhs;
    }
}

impl Zero for Dd {
    fn zero() -> Self {
        Dd::ZERO
    }
    fn is_zero(&self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }
}

impl One for Dd {
    fn one() -> Self {
        Dd::ONE
    }
}

impl Num for Dd {
    type FromStrRadixErr = num_traits::ParseFloatError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        f64::from_str_radix(s, radix).map(Dd::from_f64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // 40-digit references computed with mpmath.
    const E: (f64, f64) = (2.718281828459045, 1.4456468917292502e-16);
    const LN10: (f64, f64) = (2.302585092994046, -2.1707562233822494e-16);
    const SQRT2: (f64, f64) = (1.4142135623730951, -9.667293313452913e-17);

    fn close(x: Dd, r: (f64, f64), tol: f64) {
        let d = (x - Dd::from_parts(r.0, r.1)).to_f64().abs();
        assert!(d <= tol * r.0.abs(), "{x} vs {r:?}: diff {d:e}");
    }

    #[test]
    fn transcendental_constants() {
        close(Dd::ONE.exp(), E, 1e-30);
        close(Dd::from(10.0).ln(), LN10, 1e-30);
        close(Dd::from(2.0).sqrt(), SQRT2, 1e-30);
        close(Dd::from(2.0).powf(0.5), SQRT2, 1e-30);
    }

    #[test]
    fn exp_ln_round_trip() {
        for &v in &[1e-3, 0.37, 1.0, 7.5, 123.25, 1e6] {
            let x = Dd::from(v);
            let back = x.ln().exp();
            assert!(((back - x) / x).to_f64().abs() < 1e-29, "{v}");
        }
    }

    #[test]
    fn extreme_exponents() {
        assert_eq!(Dd::from(-800.0).exp(), Dd::ZERO);
        let small = Dd::from(-700.0).exp().to_f64();
        assert!((small / (-700f64).exp() - 1.0).abs() < 1e-13);
        assert!(!Dd::from(800.0).exp().is_finite());
    }

    #[test]
    fn division_is_inverse_of_multiplication() {
        let a = Dd::from_parts(3.0, 1e-17);
        let b = Dd::from(7.0);
        let q = a / b;
        assert!(((q * b - a) / a).to_f64().abs() < 1e-31);
        assert_eq!(Dd::from(3.0).powi(-2) * Dd::from(9.0), Dd::ONE);
    }
}
