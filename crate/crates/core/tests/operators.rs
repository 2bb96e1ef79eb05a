use num_complex::Complex64;
use pdmosc_core::jet::{AnalyticFunction, Jet};
use pdmosc_core::model::*;
use pdmosc_core::operators::*;
use pdmosc_core::specfun::gauss_legendre;
use proptest::prelude::*;

const I: Complex64 = Complex64::new(0.0, 1.0);

fn units(a: f64, g: f64) -> OscillatorParams {
    OscillatorParams::units(a, g).unwrap()
}

fn gaussian() -> AnalyticFunction {
    AnalyticFunction::new(|x, k| {
        let u = Jet::variable(x, k);
        Ok((&(&u * &u) * -0.5).exp())
    })
}

fn poly_jet(c: &[i64], x0: i64, order: usize) -> Vec<i64> {
    // derivatives of sum c_j x^j at x0, exact in integers
    let mut d = c.to_vec();
    let mut out = Vec::new();
    for _ in 0..=order {
        out.push(d.iter().rev().fold(0i64, |acc, &v| acc * x0 + v));
        d = d
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, &v)| j as i64 * v)
            .collect();
        if d.is_empty() {
            d.push(0);
        }
    }
    out
}

#[test]
fn leibniz_rule_is_exact_on_integer_polynomials() {
    let p = [3i64, -2, 5, 1];
    let q = [-1i64, 4, 0, 2, -3];
    let prod: Vec<i64> = {
        let mut r = vec![0i64; p.len() + q.len() - 1];
        for (i, a) in p.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                r[i + j] += a * b;
            }
        }
        r
    };
    for x0 in [-2i64, 0, 3] {
        let order = 7;
        let jp = Jet::from_real(
            &poly_jet(&p, x0, order)
                .iter()
                .map(|&v| v as f64)
                .collect::<Vec<_>>(),
        );
        let jq = Jet::from_real(
            &poly_jet(&q, x0, order)
                .iter()
                .map(|&v| v as f64)
                .collect::<Vec<_>>(),
        );
        let got = (&jp * &jq).to_c64_vec();
        let want = poly_jet(&prod, x0, order);
        for k in 0..=order {
            assert_eq!(got[k].re, want[k] as f64, "x0={x0} k={k}");
        }
    }
}

#[test]
fn position_tilde_examples() {
    let p = units(2.0, 0.5);
    let one = AnalyticFunction::new(|_, k| Ok(Jet::constant(k, Complex64::new(1.0, 0.0))));
    let v = op_position_tilde(&p).apply_at(&one, 0.5).unwrap();
    assert!((v.re - 0.125).abs() < 1e-16);
    let p0 = units(0.0, 0.5);
    let v = op_position_tilde(&p0).apply_at(&gaussian(), 1.3).unwrap();
    assert!((v.re - 1.3 * (-0.845f64).exp()).abs() < 1e-15);
}

#[test]
fn momentum_examples() {
    let p0 = units(0.0, 0.5);
    let x: f64 = 0.9;
    let f = (-0.5 * x * x).exp();
    let v = op_momentum_tilde(&p0, Statistics::Canonical)
        .apply_at(&gaussian(), x)
        .unwrap();
    assert!((v - I * x * f).norm() < 1e-15);
    // gamma - 1/2 = 1: extra i f(x) / x on an even function
    let p = units(0.0, 1.5);
    let w = op_momentum_tilde(&p, Statistics::Parabose)
        .apply_at(&gaussian(), x)
        .unwrap();
    assert!((w - v - I * f / x).norm() < 1e-15);
    assert!(op_momentum_tilde(&p, Statistics::Parabose).parity_action());
    assert!(!op_momentum_tilde(&p, Statistics::Canonical).parity_action());
    assert!(op_momentum_tilde(&p, Statistics::Canonical)
        .apply_at(&gaussian(), 0.0)
        .is_err());
}

#[test]
fn undeformed_raising_maps_ground_state_to_first() {
    let p = units(0.0, 0.5);
    let up = op_ladder(&p, Statistics::Canonical, Sign::Plus);
    let psi0 = wavefunction_function(&p, StateIndex::new(Family::CanonicalDeformed, 0));
    let psi1 = StateIndex::new(Family::CanonicalDeformed, 1);
    for x in [-2.0, -0.3, 0.7, 1.8] {
        let v = up.apply_at(&psi0, x).unwrap();
        assert!((v.re - wavefunction(&p, psi1, x).unwrap()).abs() < 1e-12);
        assert!(v.im.abs() < 1e-15);
    }
}

#[test]
fn lowering_annihilates_ground_state() {
    for (a, g, st, fam) in [
        (2.0, 0.5, Statistics::Canonical, Family::CanonicalDeformed),
        (-0.6, 1.5, Statistics::Parabose, Family::Parabose),
    ] {
        let p = units(a, g);
        let psi0 = wavefunction_function(&p, StateIndex::new(fam, 0));
        let down = op_ladder(&p, st, Sign::Minus);
        for x in [-0.3, 0.3, -1.1, 1.1, 2.6] {
            let v = down.apply_at(&psi0, x).unwrap();
            assert!(
                v.norm() < 1e-12 * psi0.eval(x).unwrap().norm(),
                "a={a} x={x}"
            );
        }
    }
}

#[test]
fn hamiltonian_ground_state_examples() {
    let cases = [
        (
            2.0,
            0.5,
            Statistics::Canonical,
            Family::CanonicalDeformed,
            1.5,
        ),
        (0.0, 1.5, Statistics::Parabose, Family::Parabose, 1.5),
    ];
    for (a, g, st, fam, e0) in cases {
        let p = units(a, g);
        let psi0 = wavefunction_function(&p, StateIndex::new(fam, 0));
        let h = op_hamiltonian(&p, st);
        assert_eq!(h.derivative_budget(), 2);
        for i in 0..20 {
            let x = -3.0 + 0.31 * i as f64;
            let psi = psi0.eval(x).unwrap();
            let v = h.apply_at(&psi0, x).unwrap();
            assert!(
                (v - psi * e0).norm() <= 1e-10 * (psi * e0).norm(),
                "a={a} x={x}"
            );
        }
    }
}

#[test]
fn three_hamiltonian_routes_agree_on_the_battery() {
    for (a, g) in [(-0.6, 1.5), (0.0, 0.5), (2.0, 1.0)] {
        let p = units(a, g);
        for st in [Statistics::Canonical, Statistics::Parabose] {
            let h1 = op_hamiltonian(&p, st);
            let h2 = op_hamiltonian_schrodinger(&p, st);
            let h3 = op_hamiltonian_expanded(&p, st);
            for f in battery() {
                for x in [-2.2, -0.9, -0.05, 0.2, 0.75, 1.4, 2.9, 3.3, -1.6, 0.01] {
                    let (u, v, w) = (
                        h1.apply_at(&f.f, x).unwrap(),
                        h2.apply_at(&f.f, x).unwrap(),
                        h3.apply_at(&f.f, x).unwrap(),
                    );
                    let s = u.norm().max(1e-3);
                    assert!((u - v).norm() < 1e-10 * s, "{st:?} {} x={x}", f.label);
                    assert!((u - w).norm() < 1e-10 * s, "{st:?} {} x={x}", f.label);
                }
            }
        }
    }
}

#[test]
fn commutator_examples() {
    let p = units(2.0, 0.5);
    let c = commutator(
        &op_ladder(&p, Statistics::Canonical, Sign::Minus),
        &op_ladder(&p, Statistics::Canonical, Sign::Plus),
    );
    for f in battery() {
        for x in [-2.0, -1.0, -0.5, 0.25, 0.6, 1.0, 1.5, 2.0, 2.5, 3.0] {
            let v = c.apply_at(&f.f, x).unwrap();
            let want = f.f.eval(x).unwrap() * 3.0;
            assert!(
                (v - want).norm() < 1e-10 * want.norm().max(1e-2),
                "{} {x}",
                f.label
            );
        }
    }
    let q = units(2.0, 1.5);
    let c = commutator(
        &op_ladder(&q, Statistics::Parabose, Sign::Minus),
        &op_ladder(&q, Statistics::Parabose, Sign::Plus),
    );
    for f in battery() {
        let k = match f.parity {
            Parity::Even => 5.0,
            Parity::Odd => 1.0,
            Parity::Mixed => continue,
        };
        for x in [-1.5, 0.4, 1.2] {
            let v = c.apply_at(&f.f, x).unwrap();
            assert!(
                (v - f.f.eval(x).unwrap() * k).norm() < 1e-10,
                "{} {x}",
                f.label
            );
        }
    }
}

#[test]
fn reflection_examples() {
    let r = op_reflection();
    for f in battery() {
        let rr = r.compose(&r).apply(&f.f);
        let once = r.apply(&f.f);
        for x in [-1.7, 0.2, 2.4] {
            assert!((rr.eval(x).unwrap() - f.f.eval(x).unwrap()).norm() < 1e-15);
            let s = match f.parity {
                Parity::Even => 1.0,
                Parity::Odd => -1.0,
                Parity::Mixed => continue,
            };
            assert!((once.eval(x).unwrap() - f.f.eval(x).unwrap() * s).norm() < 1e-15);
        }
    }
}

#[test]
fn jets_are_consistent_across_orders() {
    let p = units(-0.6, 1.0);
    let h = op_hamiltonian(&p, Statistics::Parabose).apply(&battery()[5].f);
    for x in [-0.8, 1.3] {
        let low = h.jet(x, 0).unwrap().value();
        let high = h.jet(x, 3).unwrap();
        assert_eq!(high.order(), 3);
        assert!((high.value() - low).norm() < 1e-14 * low.norm());
    }
}

// <g, A f> over the real line by Gauss–Legendre on panels graded towards the
// origin, where the deformed coefficients are not smooth.
fn inner(g: &AnalyticFunction, af: &AnalyticFunction) -> Complex64 {
    let rule = gauss_legendre(24).unwrap();
    let mut edges = vec![12.0];
    while *edges.last().unwrap() > 1e-12 {
        let e = *edges.last().unwrap();
        edges.push(if e > 1.0 { e - 1.0 } else { e * 0.5 });
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for w in edges.windows(2) {
        let (hi, lo) = (w[0], w[1]);
        let (mid, half) = (0.5 * (hi + lo), 0.5 * (hi - lo));
        for (t, wt) in rule.nodes().iter().zip(rule.weights()) {
            for x in [mid + half * t, -(mid + half * t)] {
                acc += g.eval(x).unwrap().conj() * af.eval(x).unwrap() * (wt * half);
            }
        }
    }
    acc
}

#[test]
fn momentum_is_hermitian_on_functions_vanishing_at_the_origin() {
    let f = AnalyticFunction::new(|x, k| {
        let u = Jet::variable(x, k);
        let v = Jet::variable(x - 0.3, k);
        let u2 = &u * &u;
        Ok(&(&u2 * &u2) * &(&(&v * &v) * -1.0).exp())
    });
    let g = AnalyticFunction::new(|x, k| {
        let u = Jet::variable(x, k);
        let v = Jet::variable(x + 0.2, k);
        let u2 = &u * &u;
        let lin = &Jet::constant(k, Complex64::new(1.0, 0.0)) + &u.scale(I);
        Ok(&(&(&u2 * &u2) * &lin) * &(&(&v * &v) * -0.5).exp())
    });
    for (a, gm) in [(-0.6, 1.0), (0.0, 1.5), (2.0, 1.5)] {
        let p = units(a, gm);
        for st in [Statistics::Canonical, Statistics::Parabose] {
            let op = op_momentum_tilde(&p, st);
            let lhs = inner(&g, &op.apply(&f));
            let rhs = inner(&op.apply(&g), &f);
            let scale = lhs.norm().max(rhs.norm());
            assert!(
                (lhs - rhs).norm() < 1e-9 * scale,
                "a={a} {st:?}: {lhs} vs {rhs}"
            );
        }
    }
}

proptest! {
    #[test]
    fn operators_are_linear(alpha_re in -2.0f64..2.0, beta_im in -2.0f64..2.0, x in 0.05f64..3.0, s in prop::bool::ANY) {
        let x = if s { x } else { -x };
        let p = units(2.0, 1.5);
        let alpha = Complex64::new(alpha_re, 0.3);
        let beta = Complex64::new(0.7, beta_im);
        let fs = battery();
        let combo = AnalyticFunction::linear_combination(alpha, &fs[4].f, beta, &fs[1].f);
        for op in [op_position_tilde(&p), op_ladder(&p, Statistics::Parabose, Sign::Plus), op_hamiltonian(&p, Statistics::Parabose)] {
            let l = op.apply_at(&combo, x).unwrap();
            let r = op.apply_at(&fs[4].f, x).unwrap() * alpha + op.apply_at(&fs[1].f, x).unwrap() * beta;
            prop_assert!((l - r).norm() <= 1e-14 * (1.0 + r.norm()));
        }
    }
}
