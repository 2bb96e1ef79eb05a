use num_complex::Complex64;

use super::{Sampling, VerificationReport};
use crate::model::OscillatorParams;
use crate::operators::{
    battery, op_hamiltonian, op_ladder, op_mass_power, op_momentum_tilde, op_position_tilde,
    op_reflection, BatteryFunction, OperatorSpec, Parity, Sign, Statistics,
};

/// `sum_i parts_i f = rhs f`; residual relative to the largest single term.
/// Commutators are kept split as `AB - BA` so that term is visible.
struct Identity {
    label: String,
    parts: Vec<(f64, OperatorSpec)>,
    rhs: OperatorSpec,
    provenance: &'static str,
    only: Option<Parity>,
    /// Natural size of the identity relative to `|f|`; keeps the relative
    /// residual meaningful when every term vanishes (e.g. `a- psi_0`).
    scale: f64,
}

fn relative(
    id: &Identity,
    f: &BatteryFunction,
    points: &[f64],
) -> std::result::Result<f64, String> {
    let terms: Vec<_> = id
        .parts
        .iter()
        .map(|(c, op)| (*c, op.apply(&f.f)))
        .collect();
    let rhs = id.rhs.apply(&f.f);
    let mut num = 0.0f64;
    let mut den = 0.0f64;
    for &x in points {
        den = den.max(id.scale * f.f.eval(x).map_err(|e| e.to_string())?.norm());
        let mut lhs = Complex64::new(0.0, 0.0);
        for (c, t) in &terms {
            let v = t.eval(x).map_err(|e| e.to_string())?;
            den = den.max(v.norm());
            lhs += v * *c;
        }
        let w = rhs.eval(x).map_err(|e| e.to_string())?;
        den = den.max(w.norm());
        num = num.max((lhs - w).norm());
    }
    Ok(if den == 0.0 { num } else { num / den })
}

fn split(a: &OperatorSpec, b: &OperatorSpec) -> Vec<(f64, OperatorSpec)> {
    vec![(1.0, a.compose(b)), (-1.0, b.compose(a))]
}

fn split_anti(a: &OperatorSpec, b: &OperatorSpec) -> Vec<(f64, OperatorSpec)> {
    vec![(1.0, a.compose(b)), (1.0, b.compose(a))]
}

/// Commutation relations of the deformed algebra on the six-function battery.
pub fn suite_algebra(
    params: &OscillatorParams,
    statistics: Statistics,
    sampling: &Sampling,
    tol: f64,
) -> VerificationReport {
    let mut r = VerificationReport::new("algebra");
    let a = params.a();
    let hb = params.hbar();
    let hw = hb * params.omega();
    let g = match statistics {
        Statistics::Canonical => 0.0,
        Statistics::Parabose => params.parabose_shift(),
    };
    let x = op_position_tilde(params);
    let p = op_momentum_tilde(params, statistics);
    let up = op_ladder(params, statistics, Sign::Plus);
    let down = op_ladder(params, statistics, Sign::Minus);
    let h = op_hamiltonian(params, statistics);
    let refl = op_reflection();
    let one = OperatorSpec::identity();
    let i = Complex64::new(0.0, 1.0);

    // 1 + a + 2g R
    let deformed_unit = one.scaled_real(1.0 + a).plus(&refl.scaled_real(2.0 * g));
    let mut ids = vec![
        Identity {
            label: "[p~, x~] = -i hbar (1 + a + (2 gamma - 1) R)".into(),
            parts: split(&p, &x),
            rhs: deformed_unit.scaled(-i * hb),
            provenance: "deformed position-momentum commutator",
            only: None,
            scale: hb * (1.0 + a),
        },
        Identity {
            label: "[a-, a+] = 1 + a + (2 gamma - 1) R".into(),
            parts: split(&down, &up),
            rhs: deformed_unit.clone(),
            provenance: "deformed ladder commutator",
            only: None,
            scale: 1.0 + a,
        },
        Identity {
            label: "[H, a+] = hbar omega (1 + a) a+".into(),
            parts: split(&h, &up),
            rhs: up.scaled_real(hw * (1.0 + a)),
            provenance: "deformed Hamiltonian-ladder commutator",
            only: None,
            scale: hw * (1.0 + a),
        },
        Identity {
            label: "[H, a-] = -hbar omega (1 + a) a-".into(),
            parts: split(&h, &down),
            rhs: down.scaled_real(-hw * (1.0 + a)),
            provenance: "deformed Hamiltonian-ladder commutator",
            only: None,
            scale: hw * (1.0 + a),
        },
    ];
    for nu in [0.5, -0.25] {
        ids.push(Identity {
            label: format!("[R, M^{nu}] = 0"),
            parts: split(&refl, &op_mass_power(params, nu)),
            rhs: one.scaled_real(0.0),
            provenance: "evenness of the mass law under reflection",
            only: None,
            scale: 0.0,
        });
    }
    if statistics == Statistics::Parabose {
        for (name, op) in [("a+", &up), ("a-", &down)] {
            ids.push(Identity {
                label: format!("{{R, {name}}} = 0"),
                parts: split_anti(&refl, op),
                rhs: one.scaled_real(0.0),
                provenance: "ladder operators are odd under reflection",
                only: None,
                scale: 1.0,
            });
        }
        for (parity, sgn) in [(Parity::Even, 1.0), (Parity::Odd, -1.0)] {
            let c = 1.0 + a + sgn * 2.0 * g;
            ids.push(Identity {
                label: format!("[a-, a+] = {c} on {parity:?} functions"),
                parts: split(&down, &up),
                rhs: one.scaled_real(c),
                provenance: "deformed ladder commutator on a parity eigenfunction",
                only: Some(parity),
                scale: c.abs(),
            });
        }
    }
    let points = sampling.points();
    for id in &ids {
        for f in battery() {
            if id.only.is_some_and(|p| p != f.parity) {
                continue;
            }
            let label = format!("{} on {}", id.label, f.label);
            match relative(id, &f, &points) {
                Ok(v) => {
                    r.check(label, v, tol, id.provenance);
                }
                Err(msg) => r.fail(label, tol, id.provenance, msg),
            }
        }
    }
    r
}
