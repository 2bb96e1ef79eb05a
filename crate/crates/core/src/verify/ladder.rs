use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::residual::statistics_of;
use super::{Sampling, VerificationReport};
use crate::model::{wavefunction, wavefunction_function, Family, OscillatorParams, StateIndex};
use crate::operators::{op_ladder, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LadderTolerances {
    /// Relative spread of `(a+ psi_n) / psi_(n+1)` across points.
    pub spread: f64,
    /// `max |a- psi_0| / max |psi_0|`.
    pub annihilation: f64,
}

impl Default for LadderTolerances {
    fn default() -> Self {
        LadderTolerances {
            spread: 1e-9,
            annihilation: 1e-12,
        }
    }
}

/// Half-width of the window in which a sign change of `psi_(n+1)` makes a
/// point too close to a node for the ratio.
const NODE_GUARD: f64 = 1e-3;

/// Measures how the raising operator maps states onto each other.
///
/// The ratios `(a+ psi_n)(x) / psi_(n+1)(x)` are recorded as measurements;
/// only their constancy is judged. Undeformed canonical ratios are also
/// compared with `sqrt(n+1)`.
pub fn suite_ladder(
    params: &OscillatorParams,
    family: Family,
    n_max: usize,
    sampling: &Sampling,
    tol: &LadderTolerances,
) -> VerificationReport {
    let mut r = VerificationReport::new("ladder");
    let stats = statistics_of(family);
    let up = op_ladder(params, stats, Sign::Plus);
    let down = op_ladder(params, stats, Sign::Minus);
    let points = sampling.points();

    let psi0 = wavefunction_function(params, StateIndex::new(family, 0));
    let prov = "ground state is annihilated by the lowering operator";
    let lowered = down.apply(&psi0);
    let mut top = 0.0f64;
    let mut worst = 0.0f64;
    let mut failure = None;
    for &x in &points {
        match (psi0.eval(x), lowered.eval(x)) {
            (Ok(v), Ok(w)) => {
                top = top.max(v.norm());
                worst = worst.max(w.norm());
            }
            (Err(e), _) | (_, Err(e)) => failure = Some(e.to_string()),
        }
    }
    match failure {
        Some(m) => r.fail("a- psi_0 = 0", tol.annihilation, prov, m),
        None => {
            r.check(
                "max |a- psi_0| / max |psi_0|",
                worst / top,
                tol.annihilation,
                prov,
            );
        }
    }

    let undeformed = params.a() == 0.0 && params.parabose_shift() == 0.0;
    for n in 0..n_max {
        let label = format!("n = {n}");
        let next = StateIndex::new(family, n + 1);
        let raised = up.apply(&wavefunction_function(params, StateIndex::new(family, n)));
        let mut ratios: Vec<Complex64> = Vec::new();
        let mut parity_dev = 0.0f64;
        let mut scale = 0.0f64;
        let mut failure = None;
        for &x in &points {
            let res = (|| -> crate::Result<()> {
                let v = raised.eval(x)?;
                let mirror = raised.eval(-x)?;
                let sign = if (n + 1) % 2 == 0 { 1.0 } else { -1.0 };
                parity_dev = parity_dev.max((mirror - v * sign).norm());
                scale = scale.max(v.norm());
                let target = wavefunction(params, next, x)?;
                let near_node = wavefunction(params, next, x - NODE_GUARD)?.signum()
                    != wavefunction(params, next, x + NODE_GUARD)?.signum();
                if !near_node && target.abs() > 1e-280 {
                    ratios.push(v / target);
                }
                Ok(())
            })();
            if let Err(e) = res {
                failure = Some(e.to_string());
                break;
            }
        }
        if let Some(m) = failure {
            r.fail(
                format!("{label}: ladder ratio"),
                tol.spread,
                "raising operator",
                m,
            );
            continue;
        }
        let prov = "raising operator maps psi_n onto a multiple of psi_(n+1)";
        if ratios.len() < 20 {
            r.fail(
                format!("{label}: ladder ratio"),
                tol.spread,
                prov,
                format!("only {} usable sample points", ratios.len()),
            );
        } else {
            let mean = ratios.iter().sum::<Complex64>() / ratios.len() as f64;
            let spread = ratios.iter().map(|z| (z - mean).norm()).fold(0.0, f64::max) / mean.norm();
            r.check(
                format!("{label}: relative spread of (a+ psi_n) / psi_(n+1)"),
                spread,
                tol.spread,
                prov,
            );
            r.measure(format!("{label}: (a+ psi_n) / psi_(n+1)"), mean.re);
            if undeformed {
                let expect = (n as f64 + 1.0).sqrt();
                r.check(
                    format!("{label}: ratio vs sqrt(n+1)"),
                    (mean.re - expect).abs() / expect,
                    tol.spread,
                    "undeformed ladder coefficient sqrt(n+1)",
                );
            }
        }
        r.check(
            format!("{label}: a+ psi_n has parity (-1)^(n+1)"),
            parity_dev / scale,
            tol.spread,
            "raising operator flips parity",
        );
    }
    r
}
