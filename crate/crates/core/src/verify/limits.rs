use serde::{Deserialize, Serialize};

use super::{Sampling, VerificationReport};
use crate::model::{energy, wavefunction, Family, OscillatorParams, StateIndex};
use crate::specfun::hermite;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LimitTolerances {
    pub wavefunction: f64,
    pub energy: f64,
    pub cross_family: f64,
}

impl Default for LimitTolerances {
    fn default() -> Self {
        LimitTolerances {
            wavefunction: 1e-13,
            energy: 1e-15,
            cross_family: 1e-12,
        }
    }
}

/// Textbook oscillator eigenfunction, written out directly.
fn textbook(params: &OscillatorParams, n: usize, x: f64) -> f64 {
    let l = params.lambda0();
    let fact: f64 = (1..=n).map(|k| 2.0 * k as f64).product();
    (l / std::f64::consts::PI).powf(0.25) / fact.sqrt()
        * (-0.5 * (l * x).powi(2)).exp()
        * hermite(n, l * x)
}

fn with(base: &OscillatorParams, a: f64, gamma: f64) -> OscillatorParams {
    OscillatorParams::new(base.m0(), base.omega(), base.hbar(), a, gamma)
        .expect("limit parameters are in range")
}

/// Reduction to the undeformed oscillators and to the canonical family.
///
/// Physical constants are taken from `base`; `a_values` are the deformations
/// used for the parabose-to-canonical comparison and `gammas` the parabose
/// parameters used for the undeformed parabose energies.
pub fn suite_limits(
    base: &OscillatorParams,
    a_values: &[f64],
    gammas: &[f64],
    n_max: usize,
    sampling: &Sampling,
    tol: &LimitTolerances,
) -> VerificationReport {
    let mut r = VerificationReport::new("limits");
    let points = sampling.points();
    let hw = base.hbar() * base.omega();

    let p0 = with(base, 0.0, 0.5);
    let mut wave_dev = 0.0f64;
    let mut energy_dev = 0.0f64;
    let mut failure = None;
    for n in 0..=n_max {
        let s = StateIndex::new(Family::CanonicalDeformed, n);
        let mut top = 0.0f64;
        let mut dev = 0.0f64;
        for &x in &points {
            let t = textbook(&p0, n, x);
            match wavefunction(&p0, s, x) {
                Ok(v) => dev = dev.max((v - t).abs()),
                Err(e) => failure = Some(e.to_string()),
            }
            top = top.max(t.abs());
        }
        wave_dev = wave_dev.max(dev / top);
        let e = energy(&p0, s);
        energy_dev = energy_dev.max((e - hw * (n as f64 + 0.5)).abs() / e);
    }
    let prov = "undeformed oscillator: Hermite functions and hbar omega (n + 1/2)";
    match failure {
        Some(msg) => r.fail(
            "a = 0 wavefunctions vs textbook",
            tol.wavefunction,
            prov,
            msg,
        ),
        None => {
            r.check(
                format!("a = 0 wavefunctions vs textbook, n <= {n_max}"),
                wave_dev,
                tol.wavefunction,
                prov,
            );
        }
    }
    r.check(
        "a = 0 energies vs hbar omega (n + 1/2)",
        energy_dev,
        tol.energy,
        prov,
    );

    for &gamma in gammas {
        let p = with(base, 0.0, gamma);
        let dev = (0..=n_max)
            .map(|n| {
                let e = energy(&p, StateIndex::new(Family::Parabose, n));
                (e - hw * (n as f64 + gamma)).abs() / e
            })
            .fold(0.0, f64::max);
        r.check(
            format!("a = 0, gamma = {gamma}: parabose energies vs hbar omega (n + gamma)"),
            dev,
            tol.energy,
            "undeformed parabose spectrum hbar omega (n + gamma)",
        );
    }

    let prov = "gamma = 1/2 parabose states coincide with the canonical ones";
    for &a in a_values {
        let p = with(base, a, 0.5);
        let mut worst = 0.0f64;
        let mut failure = None;
        for n in 0..=n_max {
            let c = StateIndex::new(Family::CanonicalDeformed, n);
            let b = StateIndex::new(Family::Parabose, n);
            let pairs: Vec<(f64, f64)> = match points
                .iter()
                .map(|&x| Ok((wavefunction(&p, c, x)?, wavefunction(&p, b, x)?)))
                .collect::<crate::Result<Vec<_>>>()
            {
                Ok(v) => v,
                Err(e) => {
                    failure = Some(e.to_string());
                    break;
                }
            };
            // global phase fixed by the sign at the first positive point
            let first = points.iter().position(|&x| x > 0.0).unwrap_or(0);
            let flip = if (pairs[first].0 >= 0.0) == (pairs[first].1 >= 0.0) {
                1.0
            } else {
                -1.0
            };
            let top = pairs.iter().map(|q| q.0.abs()).fold(0.0, f64::max);
            let dev = pairs
                .iter()
                .map(|q| (q.0 - flip * q.1).abs())
                .fold(0.0, f64::max);
            worst = worst.max(dev / top);
        }
        let label = format!("a = {a}: gamma = 1/2 parabose vs canonical, n <= {n_max}");
        match failure {
            Some(msg) => r.fail(label, tol.cross_family, prov, msg),
            None => {
                r.check(label, worst, tol.cross_family, prov);
            }
        }
    }
    r
}
