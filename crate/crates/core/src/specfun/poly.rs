use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// Scalars the three-term recurrences can run over (`f64`, jets).
pub trait RecurrenceScalar:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Mul<f64, Output = Self>
{
}

impl<T> RecurrenceScalar for T where
    T: Clone + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Mul<f64, Output = T>
{
}

/// Physicists' Hermite polynomial `H_n(x)`.
pub fn hermite(n: usize, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * x;
    for k in 1..n {
        // fused form of 2x H_k - 2k H_{k-1}
        let next = (2.0 * x).mul_add(cur, -2.0 * k as f64 * prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `H_n` evaluated over any ring-like scalar; `one` is its multiplicative unit.
pub fn hermite_with<T: RecurrenceScalar>(n: usize, x: &T, one: T) -> T {
    if n == 0 {
        return one;
    }
    let mut prev = one;
    let mut cur = x.clone() * 2.0;
    for k in 1..n {
        // H_{k+1} = 2x H_k - 2k H_{k-1}
        let next = x.clone() * cur.clone() * 2.0 - prev * (2.0 * k as f64);
        prev = cur;
        cur = next;
    }
    cur
}

/// Generalized Laguerre polynomial `L_m^(alpha)(x)`, `alpha > -1`.
pub fn laguerre(m: usize, alpha: f64, x: f64) -> Result<f64> {
    check_alpha(alpha)?;
    Ok(laguerre_with(m, alpha, &x, 1.0))
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > -1.0 {
        Ok(())
    } else {
        Err(Error::ParameterDomain(format!(
            "Laguerre parameter must exceed -1, got {alpha}"
        )))
    }
}

/// `L_m^(alpha)` over a generic scalar. No domain check on `alpha`.
pub fn laguerre_with<T: RecurrenceScalar>(m: usize, alpha: f64, x: &T, one: T) -> T {
    if m == 0 {
        return one;
    }
    let mut prev = one.clone();
    let mut cur = one.clone() * (1.0 + alpha) - x.clone();
    for k in 1..m {
        let kf = k as f64;
        let next = ((one.clone() * (2.0 * kf + 1.0 + alpha) - x.clone()) * cur.clone()
            - prev * (kf + alpha))
            * (1.0 / (kf + 1.0));
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_values() {
        assert_eq!(hermite(0, 0.7), 1.0);
        assert_eq!(hermite(2, 1.0), 2.0);
        assert_eq!(hermite(3, 0.5), -5.0);
        assert_eq!(laguerre(0, 0.5, 2.0).unwrap(), 1.0);
        assert_eq!(laguerre(1, 0.5, 1.0).unwrap(), 0.5);
        assert!((laguerre(2, -0.5, 0.0).unwrap() - 0.375).abs() < 1e-15);
    }

    #[test]
    fn laguerre_rejects_alpha_at_or_below_minus_one() {
        assert!(matches!(
            laguerre(2, -1.0, 0.3),
            Err(Error::ParameterDomain(_))
        ));
        assert!(laguerre(2, -1.5, 0.3).is_err());
    }
}
