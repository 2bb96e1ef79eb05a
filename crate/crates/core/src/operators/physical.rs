use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::OperatorSpec;
use crate::jet::{AnalyticFunction, Jet};
use crate::model::OscillatorParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Statistics {
    Canonical,
    Parabose,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

const I: Complex64 = Complex64::new(0.0, 1.0);

fn re(v: f64) -> Complex64 {
    Complex64::new(v, 0.0)
}

/// `c * sign(x)^odd * |x|^q`.
fn power_law(name: &str, c: f64, q: f64, odd: bool) -> OperatorSpec {
    OperatorSpec::multiplication(name, move |x, k| {
        let j = if odd {
            Jet::signed_abs_pow(x, q, k)?
        } else {
            Jet::abs_pow(x, q, k)?
        };
        Ok(j.scale_real(c))
    })
}

/// `x~ = M(x)^(1/2) x = sqrt(m0) lambda0^a |x|^a x`.
pub fn op_position_tilde(params: &OscillatorParams) -> OperatorSpec {
    let a = params.a();
    let c = params.m0().sqrt() * params.lambda0().powf(a);
    power_law("x~", c, a + 1.0, true)
}

/// `p~`: canonical or with the reflection term `-(gamma-1/2)/x R`.
pub fn op_momentum_tilde(params: &OscillatorParams, statistics: Statistics) -> OperatorSpec {
    let a = params.a();
    // -i hbar / (lambda0^a sqrt(m0))
    let c = -I * params.hbar() / (params.lambda0().powf(a) * params.m0().sqrt());
    let kinetic = power_law("|x|^-a", 1.0, -a, false).compose(&OperatorSpec::derivative());
    let ordering = power_law("x|x|^(-a-2)", -a / 2.0, -a - 1.0, true);
    let mut p = kinetic.plus(&ordering);
    if statistics == Statistics::Parabose {
        let g = params.parabose_shift();
        let refl =
            power_law("x|x|^(-a-2)", -g, -a - 1.0, true).compose(&OperatorSpec::reflection());
        p = p.plus(&refl);
    }
    p.scaled(c)
}

/// `a+-  = (sqrt(omega/hbar) x~ -+ i p~ / sqrt(omega hbar)) / sqrt 2`.
pub fn op_ladder(params: &OscillatorParams, statistics: Statistics, sign: Sign) -> OperatorSpec {
    let w = params.omega();
    let hb = params.hbar();
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let p_coeff = match sign {
        Sign::Plus => -I,
        Sign::Minus => I,
    } * (s / (w * hb).sqrt());
    OperatorSpec::linear(
        &op_position_tilde(params),
        re(s * (w / hb).sqrt()),
        &op_momentum_tilde(params, statistics),
        p_coeff,
    )
}

/// Hamiltonian assembled from the ladder operators.
///
/// Parabose: `(hbar omega / 2)(a+ a- + a- a+)`. Canonical:
/// `hbar omega (a+ a- + (1+a)/2)`; the zero-point constant is `(1+a)/2`
/// rather than `1/2`, since `hbar omega a+ a-` differs from the kinetic plus
/// potential form by exactly `-hbar omega (1+a)/2`.
pub fn op_hamiltonian(params: &OscillatorParams, statistics: Statistics) -> OperatorSpec {
    let hw = params.hbar() * params.omega();
    let up = op_ladder(params, statistics, Sign::Plus);
    let down = op_ladder(params, statistics, Sign::Minus);
    match statistics {
        Statistics::Canonical => up
            .compose(&down)
            .plus(&OperatorSpec::identity().scaled_real((1.0 + params.a()) / 2.0))
            .scaled_real(hw),
        Statistics::Parabose => up
            .compose(&down)
            .plus(&down.compose(&up))
            .scaled_real(hw / 2.0),
    }
}

/// `p~^2 / 2 + omega^2 x~^2 / 2`.
pub fn op_hamiltonian_schrodinger(
    params: &OscillatorParams,
    statistics: Statistics,
) -> OperatorSpec {
    let p = op_momentum_tilde(params, statistics);
    let x = op_position_tilde(params);
    OperatorSpec::linear(
        &p.compose(&p),
        re(0.5),
        &x.compose(&x),
        re(0.5 * params.omega().powi(2)),
    )
}

/// The same Hamiltonian written out as a second-order differential operator:
/// `-(hbar^2 / 2 m0) lambda0^(-2a) [ |x|^(-2a) f'' - 2a x|x|^(-2a-2) f'
///  + c0 |x|^(-2a-2) f + (a+1) g |x|^(-2a-2) f(-x) ] + V f`
/// with `g = gamma - 1/2` (zero for canonical) and `c0 = a(3a+2)/4 - g^2`.
pub fn op_hamiltonian_expanded(params: &OscillatorParams, statistics: Statistics) -> OperatorSpec {
    let a = params.a();
    let g = match statistics {
        Statistics::Canonical => 0.0,
        Statistics::Parabose => params.parabose_shift(),
    };
    let k = -params.hbar().powi(2) / (2.0 * params.m0()) * params.lambda0().powf(-2.0 * a);
    let d = OperatorSpec::derivative();
    let mut h = power_law("|x|^-2a", k, -2.0 * a, false)
        .compose(&d.compose(&d))
        .plus(&power_law("x|x|^(-2a-2)", -2.0 * a * k, -2.0 * a - 1.0, true).compose(&d))
        .plus(&power_law(
            "|x|^(-2a-2)",
            k * (a * (3.0 * a + 2.0) / 4.0 - g * g),
            -2.0 * a - 2.0,
            false,
        ));
    if g != 0.0 {
        h = h.plus(
            &power_law("|x|^(-2a-2)", k * (a + 1.0) * g, -2.0 * a - 2.0, false)
                .compose(&OperatorSpec::reflection()),
        );
    }
    let v = 0.5 * params.m0() * params.omega().powi(2) * params.lambda0().powf(2.0 * a);
    h.plus(&power_law("V", v, 2.0 * a + 2.0, false))
}

/// `f -> f(-x)`.
pub fn op_reflection() -> OperatorSpec {
    OperatorSpec::reflection()
}

/// Multiplication by `M(x)^nu`.
pub fn op_mass_power(params: &OscillatorParams, nu: f64) -> OperatorSpec {
    let a = params.a();
    let c = (params.m0() * params.lambda0().powf(2.0 * a)).powf(nu);
    power_law("M^nu", c, 2.0 * a * nu, false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

/// A labelled test function.
#[derive(Clone, Debug)]
pub struct BatteryFunction {
    pub label: &'static str,
    pub parity: Parity,
    pub f: AnalyticFunction,
}

fn gauss(u: &Jet, width: f64) -> Jet {
    (&(u * u) * (-1.0 / width)).exp()
}

/// Six smooth test functions: two even, two odd and two without parity.
pub fn battery() -> Vec<BatteryFunction> {
    let one = |k| Jet::constant(k, re(1.0));
    vec![
        BatteryFunction {
            label: "exp(-x^2/2)",
            parity: Parity::Even,
            f: AnalyticFunction::new(|x, k| Ok(gauss(&Jet::variable(x, k), 2.0))),
        },
        BatteryFunction {
            label: "(1+x^2) exp(-x^2)",
            parity: Parity::Even,
            f: AnalyticFunction::new(move |x, k| {
                let u = Jet::variable(x, k);
                Ok(&(&one(k) + &(&u * &u)) * &gauss(&u, 1.0))
            }),
        },
        BatteryFunction {
            label: "x exp(-x^2/2)",
            parity: Parity::Odd,
            f: AnalyticFunction::new(|x, k| {
                let u = Jet::variable(x, k);
                Ok(&u * &gauss(&u, 2.0))
            }),
        },
        BatteryFunction {
            label: "x^3 exp(-x^2/2)",
            parity: Parity::Odd,
            f: AnalyticFunction::new(|x, k| {
                let u = Jet::variable(x, k);
                Ok(&(&(&u * &u) * &u) * &gauss(&u, 2.0))
            }),
        },
        BatteryFunction {
            label: "exp(-(x-0.7)^2)",
            parity: Parity::Mixed,
            f: AnalyticFunction::new(|x, k| Ok(gauss(&Jet::variable(x - 0.7, k), 1.0))),
        },
        BatteryFunction {
            label: "(1+ix) exp(-(x+0.4)^2/2)",
            parity: Parity::Mixed,
            f: AnalyticFunction::new(move |x, k| {
                let u = Jet::variable(x, k);
                let lin = &one(k) + &u.scale(Complex64::new(0.0, 1.0));
                Ok(&lin * &gauss(&Jet::variable(x + 0.4, k), 2.0))
            }),
        },
    ]
}
