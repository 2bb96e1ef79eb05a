use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use super::params::{Family, OscillatorParams, SolutionExponents, StateIndex};
use super::xi_of_x;
use crate::error::{Error, Result};
use crate::jet::{AnalyticFunction, Jet};
use crate::specfun::{hermite, hermite_with, laguerre_with, ln_gamma};

enum Poly {
    Hermite(usize),
    Laguerre(usize, f64),
}

/// `psi = sign * exp(ln_c) * |lambda0 x|^power * [x] * e^(-xi^2/2) * poly`,
/// where the bracketed `x` is present for odd parabose states.
struct Shape {
    ln_c: f64,
    sign: f64,
    power: f64,
    times_x: bool,
    poly: Poly,
}

fn shape(params: &OscillatorParams, state: StateIndex) -> Result<Shape> {
    let a = params.a();
    let s = a + 1.0;
    let ln_l = params.lambda0().ln();
    match state.family {
        Family::CanonicalDeformed => {
            let n = state.n as f64;
            let ln_c = 0.25 * (s / PI).ln() + 0.5 * (ln_l - n * LN_2 - ln_gamma(n + 1.0)?);
            Ok(Shape {
                ln_c,
                sign: 1.0,
                power: a / 2.0,
                times_x: false,
                poly: Poly::Hermite(state.n),
            })
        }
        Family::Parabose => {
            let g = params.parabose_shift();
            let e = SolutionExponents::new(params, Family::Parabose);
            let m = state.radial_index();
            let mf = m as f64;
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            if state.parity() == 0 {
                let alpha = e.alpha_even.unwrap_or_default();
                let ln_c = 0.5 * (0.5 - g / s) * s.ln()
                    + 0.5 * (ln_l + ln_gamma(mf + 1.0)? - ln_gamma(mf + alpha + 1.0)?);
                Ok(Shape {
                    ln_c,
                    sign,
                    power: (a + 2.0 * g) / 2.0,
                    times_x: false,
                    poly: Poly::Laguerre(m, alpha),
                })
            } else {
                let alpha = e.alpha_odd.unwrap_or_default();
                let ln_c = -0.5 * (0.5 + g / s) * s.ln()
                    + 0.5 * (3.0 * ln_l + ln_gamma(mf + 1.0)? - ln_gamma(mf + alpha + 1.0)?);
                Ok(Shape {
                    ln_c,
                    sign,
                    power: (3.0 * a + 2.0 * g) / 2.0,
                    times_x: true,
                    poly: Poly::Laguerre(m, alpha),
                })
            }
        }
    }
}

/// Normalization constant `C_n` (with the `(-1)^m` sign for parabose states).
pub fn normalization(params: &OscillatorParams, state: StateIndex) -> Result<f64> {
    let sh = shape(params, state)?;
    Ok(sh.sign * sh.ln_c.exp())
}

/// Leading power of `|x|` of `psi_n` at the origin; negative values mean the
/// state diverges there (while staying square integrable).
pub fn boundary_exponent(params: &OscillatorParams, state: StateIndex) -> f64 {
    let a = params.a();
    let g = params.parabose_shift();
    match (state.family, state.parity()) {
        (Family::CanonicalDeformed, 0) => a / 2.0,
        (Family::CanonicalDeformed, _) => a / 2.0 + a + 1.0,
        (Family::Parabose, 0) => (a + 2.0 * g) / 2.0,
        (Family::Parabose, _) => (3.0 * a + 2.0 * g) / 2.0 + 1.0,
    }
}

/// `psi_n(x)`, assembled in the log domain.
pub fn wavefunction(params: &OscillatorParams, state: StateIndex, x: f64) -> Result<f64> {
    let sh = shape(params, state)?;
    if x == 0.0 {
        let p = boundary_exponent(params, state);
        let odd = state.parity() == 1;
        return if p < 0.0 {
            Err(Error::SingularPoint {
                x,
                what: "wavefunction diverges at the origin",
            })
        } else if p > 0.0 || odd {
            Ok(0.0)
        } else {
            let poly = match sh.poly {
                Poly::Hermite(n) => hermite(n, 0.0),
                Poly::Laguerre(m, alpha) => laguerre_with(m, alpha, &0.0, 1.0),
            };
            Ok(sh.sign * sh.ln_c.exp() * poly)
        };
    }
    let xi = xi_of_x(params, x);
    let poly = match sh.poly {
        Poly::Hermite(n) => hermite(n, xi),
        Poly::Laguerre(m, alpha) => laguerre_with(m, alpha, &(xi * xi), 1.0),
    };
    if poly == 0.0 {
        return Ok(0.0);
    }
    let ln_l = params.lambda0().ln();
    let ln_ax = ln_l + x.abs().ln();
    let mut ln_psi = sh.ln_c + sh.power * ln_ax - 0.5 * xi * xi + poly.abs().ln();
    let mut sign = sh.sign * poly.signum();
    if sh.times_x {
        // x = sign(x) |lambda0 x| / lambda0
        ln_psi += ln_ax - ln_l;
        sign *= x.signum();
    }
    Ok(sign * ln_psi.exp())
}

/// Jet of `psi_n` at `x != 0`, carried in double-double precision.
///
/// Every factor is built from `|x|` and sign-tracked odd powers, so the jets
/// at `x` and `-x` are exact mirror images of each other.
pub fn wavefunction_jet(
    params: &OscillatorParams,
    state: StateIndex,
    x: f64,
    order: usize,
) -> Result<Jet> {
    let sh = shape(params, state)?;
    let a = params.a();
    let l0 = params.lambda0();
    let one = Jet::constant(order, Complex64::new(1.0, 0.0));
    let xi =
        Jet::signed_abs_pow(x, a + 1.0, order)?.scale_real(l0.powf(a + 1.0) / (a + 1.0).sqrt());
    let t = &xi * &xi;
    let gauss = (&t * -0.5).exp();
    let pre = if sh.times_x {
        Jet::signed_abs_pow(x, sh.power + 1.0, order)?.scale_real(l0.powf(sh.power))
    } else {
        Jet::abs_pow(x, sh.power, order)?.scale_real(l0.powf(sh.power))
    };
    let poly = match sh.poly {
        Poly::Hermite(n) => hermite_with(n, &xi, one),
        Poly::Laguerre(m, alpha) => laguerre_with(m, alpha, &t, one),
    };
    Ok((&(&pre * &gauss) * &poly).scale_real(sh.sign * sh.ln_c.exp()))
}

/// `psi_n` as an [`AnalyticFunction`] (undefined at the origin).
pub fn wavefunction_function(params: &OscillatorParams, state: StateIndex) -> AnalyticFunction {
    let p = *params;
    AnalyticFunction::new(move |x, k| wavefunction_jet(&p, state, x, k))
}
