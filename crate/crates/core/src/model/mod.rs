//! Closed-form physics of the two oscillator families.

mod params;
mod wavefunction;

pub use params::{Family, OscillatorParams, SolutionExponents, StateIndex};
pub use wavefunction::{
    boundary_exponent, normalization, wavefunction, wavefunction_function, wavefunction_jet,
};

use crate::error::{Error, Result};

/// `M(x) = m0 (lambda0^2 x^2)^a`.
pub fn mass(params: &OscillatorParams, x: f64) -> Result<f64> {
    let a = params.a();
    if x == 0.0 {
        return if a < 0.0 {
            Err(Error::SingularPoint {
                x,
                what: "mass diverges at the origin for a < 0",
            })
        } else if a == 0.0 {
            Ok(params.m0())
        } else {
            Ok(0.0)
        };
    }
    let l = params.lambda0() * x.abs();
    Ok(params.m0() * l.powf(2.0 * a))
}

/// `V(x) = (m0 omega^2 / 2) (lambda0^2 x^2)^a x^2`.
pub fn potential(params: &OscillatorParams, x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let a = params.a();
    let l = params.lambda0() * x.abs();
    0.5 * params.m0() * params.omega().powi(2) * l.powf(2.0 * a) * x * x
}

/// `xi = lambda0^(a+1) |x|^a x / sqrt(a+1)`.
pub fn xi_of_x(params: &OscillatorParams, x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let a = params.a();
    let l = params.lambda0() * x.abs();
    x.signum() * l.powf(a + 1.0) / (a + 1.0).sqrt()
}

/// Inverse of [`xi_of_x`].
pub fn x_of_xi(params: &OscillatorParams, xi: f64) -> f64 {
    if xi == 0.0 {
        return 0.0;
    }
    let a = params.a();
    xi.signum() * ((a + 1.0).sqrt() * xi.abs()).powf(1.0 / (a + 1.0)) / params.lambda0()
}

/// `E_n`; for the parabose family this is `(a+1) hbar omega (n + 1/2) + hbar omega (gamma - 1/2)`.
pub fn energy(params: &OscillatorParams, state: StateIndex) -> f64 {
    let base = params.level_spacing() * (state.n as f64 + 0.5);
    match state.family {
        Family::CanonicalDeformed => base,
        Family::Parabose => base + params.hbar() * params.omega() * params.parabose_shift(),
    }
}

/// Even parabose level `n = 2m` as `(a+1) hbar omega (2m + 1 + alpha_even)`.
pub fn energy_even_sector(params: &OscillatorParams, m: usize) -> f64 {
    let e = SolutionExponents::new(params, Family::Parabose);
    params.level_spacing() * (2.0 * m as f64 + 1.0 + e.alpha_even.unwrap_or_default())
}

/// Odd parabose level `n = 2m+1` as `(a+1) hbar omega (2m + 1 + alpha_odd)`.
pub fn energy_odd_sector(params: &OscillatorParams, m: usize) -> f64 {
    let e = SolutionExponents::new(params, Family::Parabose);
    params.level_spacing() * (2.0 * m as f64 + 1.0 + e.alpha_odd.unwrap_or_default())
}
