use super::{Sampling, VerificationReport};
use crate::model::{energy, wavefunction_function, Family, OscillatorParams, StateIndex};
use crate::operators::{op_hamiltonian, op_hamiltonian_schrodinger, OperatorSpec, Statistics};

pub(crate) fn statistics_of(family: Family) -> Statistics {
    match family {
        Family::CanonicalDeformed => Statistics::Canonical,
        Family::Parabose => Statistics::Parabose,
    }
}

/// `max |H psi - E psi| / max |E psi|` over the sample points, or `None`
/// together with the error message if evaluation failed.
fn relative_residual(
    h: &OperatorSpec,
    params: &OscillatorParams,
    state: StateIndex,
    points: &[f64],
) -> std::result::Result<f64, String> {
    let f = wavefunction_function(params, state);
    let e = energy(params, state);
    let mut num = 0.0f64;
    let mut den = 0.0f64;
    for &x in points {
        let psi = f.eval(x).map_err(|e| e.to_string())?;
        let hpsi = h.apply_at(&f, x).map_err(|e| e.to_string())?;
        num = num.max((hpsi - psi * e).norm());
        den = den.max((psi * e).norm());
    }
    Ok(num / den)
}

/// Residual of the stationary Schrödinger equation for states `0..=n_max`,
/// both with the ladder-built Hamiltonian and with `p~^2/2 + omega^2 x~^2/2`.
pub fn suite_schrodinger_residual(
    params: &OscillatorParams,
    family: Family,
    n_max: usize,
    sampling: &Sampling,
    tol: f64,
) -> VerificationReport {
    let mut r = VerificationReport::new("schrodinger_residual");
    let stats = statistics_of(family);
    let points = sampling.points();
    let forms = [
        ("ladder form", op_hamiltonian(params, stats)),
        (
            "kinetic + potential form",
            op_hamiltonian_schrodinger(params, stats),
        ),
    ];
    let prov = match family {
        Family::CanonicalDeformed => {
            "deformed Hermite solution of the position-dependent-mass equation"
        }
        Family::Parabose => "Laguerre solutions of the even and odd parabose sector equations",
    };
    for n in 0..=n_max {
        let state = StateIndex::new(family, n);
        for (name, h) in &forms {
            let label = format!("n = {n}, {name}");
            match relative_residual(h, params, state, &points) {
                Ok(v) => {
                    r.check(label, v, tol, prov);
                }
                Err(msg) => r.fail(label, tol, prov, msg),
            }
        }
    }
    r
}
