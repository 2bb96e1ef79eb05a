use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{potential, OscillatorParams};

/// Which operator is discretized.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sector {
    /// Whole line, canonical-deformed Hamiltonian.
    Full,
    /// Half line, parabose Hamiltonian with `R = +1`.
    ParaboseEven,
    /// Half line, parabose Hamiltonian with `R = -1`.
    ParaboseOdd,
}

/// Uniform cell-centred grid in the mass-adapted coordinate
/// `q = lambda0^a |x|^a x / (a+1)`, in which `dq = sqrt(M/m0) dx`.
///
/// `Full` covers `[-L, L]` with `n` cells (`n` even, so no node sits on the
/// origin); the half-line sectors cover `[0, L]` with `n` cells.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub half_width: f64,
    pub n: usize,
}

impl GridSpec {
    pub fn new(half_width: f64, n: usize) -> Result<Self> {
        if !(half_width > 0.0 && half_width.is_finite()) {
            return Err(Error::Construction(format!(
                "grid half-width must be positive, got {half_width}"
            )));
        }
        if n < 16 {
            return Err(Error::Construction(format!(
                "need at least 16 nodes, got {n}"
            )));
        }
        Ok(GridSpec { half_width, n })
    }

    pub fn step(&self, sector: Sector) -> f64 {
        match sector {
            Sector::Full => 2.0 * self.half_width / self.n as f64,
            _ => self.half_width / self.n as f64,
        }
    }

    /// Node positions in `q`.
    pub fn q_nodes(&self, sector: Sector) -> Result<Vec<f64>> {
        let h = self.step(sector);
        match sector {
            Sector::Full => {
                if self.n % 2 == 1 {
                    return Err(Error::Construction(
                        "a whole-line grid needs an even node count to avoid the origin".into(),
                    ));
                }
                let half = self.n / 2;
                // built from the positive half and mirrored, so the set is exactly symmetric
                let pos: Vec<f64> = (0..half).map(|i| (i as f64 + 0.5) * h).collect();
                Ok(pos
                    .iter()
                    .rev()
                    .map(|q| -q)
                    .chain(pos.iter().copied())
                    .collect())
            }
            _ => Ok((0..self.n).map(|i| (i as f64 + 0.5) * h).collect()),
        }
    }
}

/// `x` with `q(x) = q`.
pub fn x_of_q(params: &OscillatorParams, q: f64) -> f64 {
    let s = params.a() + 1.0;
    let l = params.lambda0();
    q.signum() * (s * q.abs() * l).powf(1.0 / s) / l
}

/// A discretized Hamiltonian reduced to standard symmetric form.
#[derive(Clone, Debug)]
pub struct AssembledHamiltonian {
    pub matrix: crate::numerics::SymTriMatrix,
    /// Diagonal metric of the generalized problem before the congruence
    /// (cell masses of the weight `q^(2 sigma)`; all `h` on the whole line).
    pub metric: Vec<f64>,
    pub x_nodes: Vec<f64>,
}

// (b^p - a^p) / p for 0 <= a < b, without cancellation
fn power_increment(a: f64, b: f64, p: f64) -> f64 {
    if a == 0.0 {
        return b.powf(p) / p;
    }
    let l = ((b - a) / a).ln_1p();
    let c = p * l;
    let ratio = if c.abs() < 1e-300 { l } else { c.exp_m1() / p };
    a.powf(p) * ratio
}

/// Kinetic plus potential energy on the grid.
///
/// On the whole line the kinetic term becomes `-(hbar^2/2 m0) d^2/dq^2`,
/// discretized with the three-point stencil and Dirichlet walls. In a
/// parabose sector the reflection is replaced by its eigenvalue and the
/// operator takes the weighted Sturm–Liouville form
/// `-(hbar^2/2 m0) q^(-2s) (q^(2s) u')'` with `s = (gamma-1/2)/(a+1)` (even)
/// or `s + 1` (odd, `u = psi / q`). Cell masses and face fluxes of the
/// weight are integrated exactly, the origin gets the natural no-flux
/// condition and the outer wall a Dirichlet one.
pub fn assemble_hamiltonian(
    params: &OscillatorParams,
    grid: &GridSpec,
    sector: Sector,
) -> Result<AssembledHamiltonian> {
    let q = grid.q_nodes(sector)?;
    let h = grid.step(sector);
    let n = q.len();
    let kin = params.hbar().powi(2) / (2.0 * params.m0());
    let x_nodes: Vec<f64> = q.iter().map(|&qi| x_of_q(params, qi)).collect();
    if x_nodes.iter().any(|&x| x == 0.0 || !x.is_finite()) {
        return Err(Error::Construction("grid node maps onto the origin".into()));
    }
    let v: Vec<f64> = x_nodes.iter().map(|&x| potential(params, x)).collect();

    let (diag, off, metric) = match sector {
        Sector::Full => {
            let d = v.iter().map(|vi| 2.0 * kin / (h * h) + vi).collect();
            let e = vec![-kin / (h * h); n - 1];
            (d, e, vec![h; n])
        }
        Sector::ParaboseEven | Sector::ParaboseOdd => {
            let mut s = params.parabose_shift() / (params.a() + 1.0);
            if sector == Sector::ParaboseOdd {
                s += 1.0;
            }
            let p_w = 2.0 * s + 1.0;
            let w: Vec<f64> = (0..n)
                .map(|i| power_increment(i as f64 * h, (i + 1) as f64 * h, p_w))
                .collect();
            // harmonic face coefficient h / int_{q_i}^{q_i+1} q^(-2s) dq
            let flux: Vec<f64> = (0..n - 1)
                .map(|i| h / power_increment(q[i], q[i + 1], 1.0 - 2.0 * s))
                .collect();
            let wall = grid.half_width.powf(2.0 * s) / (0.5 * h);
            let mut k = vec![0.0; n];
            for i in 0..n - 1 {
                k[i] += flux[i] / h;
                k[i + 1] += flux[i] / h;
            }
            k[n - 1] += wall;
            let d = (0..n).map(|i| kin * k[i] / w[i] + v[i]).collect();
            let e = (0..n - 1)
                .map(|i| -kin * (flux[i] / h) / (w[i] * w[i + 1]).sqrt())
                .collect();
            (d, e, w)
        }
    };
    Ok(AssembledHamiltonian {
        matrix: crate::numerics::SymTriMatrix::new(diag, off)?,
        metric,
        x_nodes,
    })
}
