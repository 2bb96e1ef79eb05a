use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Physical constants, deformation `a` and parabose parameter `gamma`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OscillatorParams {
    m0: f64,
    omega: f64,
    hbar: f64,
    a: f64,
    gamma: f64,
    lambda0: f64,
}

impl OscillatorParams {
    pub fn new(m0: f64, omega: f64, hbar: f64, a: f64, gamma: f64) -> Result<Self> {
        for (name, v) in [("m0", m0), ("omega", omega), ("hbar", hbar)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::ParameterDomain(format!(
                    "{name} must be a finite positive number, got {v}"
                )));
            }
        }
        if !(a > -1.0 && a.is_finite()) {
            return Err(Error::ParameterDomain(format!(
                "deformation a must satisfy a > -1, got {a}"
            )));
        }
        if !(gamma >= 0.5 && gamma.is_finite()) {
            return Err(Error::ParameterDomain(format!(
                "parabose parameter gamma must satisfy gamma >= 1/2, got {gamma}"
            )));
        }
        Ok(OscillatorParams {
            m0,
            omega,
            hbar,
            a,
            gamma,
            lambda0: (m0 * omega / hbar).sqrt(),
        })
    }

    /// `m0 = omega = hbar = 1`.
    pub fn units(a: f64, gamma: f64) -> Result<Self> {
        Self::new(1.0, 1.0, 1.0, a, gamma)
    }

    pub fn m0(&self) -> f64 {
        self.m0
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// `sqrt(m0 omega / hbar)`.
    pub fn lambda0(&self) -> f64 {
        self.lambda0
    }

    /// `gamma - 1/2`, the strength of the reflection term.
    pub fn parabose_shift(&self) -> f64 {
        self.gamma - 0.5
    }

    /// Level spacing `(a+1) hbar omega`.
    pub fn level_spacing(&self) -> f64 {
        (self.a + 1.0) * self.hbar * self.omega
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    CanonicalDeformed,
    Parabose,
}

/// Global quantum number of a stationary state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StateIndex {
    pub family: Family,
    pub n: usize,
}

impl StateIndex {
    pub fn new(family: Family, n: usize) -> Self {
        StateIndex { family, n }
    }

    /// Parabose state `n = 2m + parity`.
    pub fn parabose(parity: usize, m: usize) -> Self {
        assert!(parity < 2, "parity is 0 or 1");
        StateIndex::new(Family::Parabose, 2 * m + parity)
    }

    /// `n mod 2`; also the parity of canonical states.
    pub fn parity(&self) -> usize {
        self.n % 2
    }

    /// `floor(n / 2)`.
    pub fn radial_index(&self) -> usize {
        self.n / 2
    }
}

/// Constants of the solved ansatz `|x|^A e^(B xi^2) * polynomial`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionExponents {
    /// Boundary exponent of the even solution, in powers of `xi`.
    pub a_even: f64,
    /// Gaussian exponent, always -1/2.
    pub b: f64,
    pub alpha_even: Option<f64>,
    pub alpha_odd: Option<f64>,
}

impl SolutionExponents {
    pub fn new(params: &OscillatorParams, family: Family) -> Self {
        let a = params.a();
        match family {
            Family::CanonicalDeformed => SolutionExponents {
                a_even: a / (2.0 * (a + 1.0)),
                b: -0.5,
                alpha_even: None,
                alpha_odd: None,
            },
            Family::Parabose => {
                let two_g = 2.0 * params.parabose_shift();
                let alpha_even = (two_g / (a + 1.0) - 1.0) / 2.0;
                SolutionExponents {
                    a_even: (a + two_g) / (2.0 * (a + 1.0)),
                    b: -0.5,
                    alpha_even: Some(alpha_even),
                    alpha_odd: Some(alpha_even + 1.0),
                }
            }
        }
    }
}
