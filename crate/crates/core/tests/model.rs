use approx::assert_relative_eq;
use pdmosc_core::model::*;
use pdmosc_core::specfun::gauss_hermite;
use pdmosc_core::verify::gram_matrix;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

const AS: [f64; 3] = [-0.6, 0.0, 2.0];
const GAMMAS: [f64; 3] = [0.5, 1.0, 1.5];

fn units(a: f64, g: f64) -> OscillatorParams {
    OscillatorParams::units(a, g).unwrap()
}

#[test]
fn ground_state_normalization_by_quadrature() {
    // |psi_0|^2 dx = C^2 e^{-xi^2} dxi / (sqrt(a+1) lambda0) for a = 2, units
    let p = units(2.0, 0.5);
    let r = gauss_hermite(40).unwrap();
    let s = StateIndex::new(Family::CanonicalDeformed, 0);
    let norm2 = r.integrate(|xi| {
        let x = x_of_xi(&p, xi);
        let dxi = 3f64.sqrt() * x.abs().powi(2);
        if x == 0.0 {
            0.0
        } else {
            wavefunction(&p, s, x).unwrap().powi(2) * (xi * xi).exp() / dxi
        }
    });
    let c = normalization(&p, s).unwrap();
    assert_relative_eq!(
        c / norm2.sqrt(),
        0.988_536_809_535_102_7,
        max_relative = 1e-13
    );
    assert_relative_eq!(c, (3.0 / PI).powf(0.25), max_relative = 1e-15);
}

#[test]
fn wavefunction_against_direct_evaluation() {
    // a second path: plain products, no logarithms
    let p = units(2.0, 0.5);
    let s = StateIndex::new(Family::CanonicalDeformed, 0);
    let direct = (3.0 / PI).powf(0.25) * 1f64.powf(0.5) * (-1.0f64 / 6.0).exp();
    assert!((wavefunction(&p, s, 1.0).unwrap() - direct).abs() < 1e-13);
    assert!((direct - 0.836_778_343_653_138_2).abs() < 1e-15);
}

#[test]
fn parity_of_all_states() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for a in AS {
        for g in GAMMAS {
            let p = units(a, g);
            for fam in [Family::CanonicalDeformed, Family::Parabose] {
                for n in 0..10 {
                    let s = StateIndex::new(fam, n);
                    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
                    for _ in 0..50 {
                        let x: f64 = rng.gen_range(0.01..4.0);
                        let (u, v) = (
                            wavefunction(&p, s, x).unwrap(),
                            wavefunction(&p, s, -x).unwrap(),
                        );
                        assert!((v - sign * u).abs() < 1e-12 * (1.0 + u.abs()));
                    }
                }
            }
        }
    }
}

#[test]
fn equidistant_levels() {
    for a in AS {
        for g in GAMMAS {
            let p = units(a, g);
            for fam in [Family::CanonicalDeformed, Family::Parabose] {
                for n in 0..50 {
                    let e0 = energy(&p, StateIndex::new(fam, n));
                    let e1 = energy(&p, StateIndex::new(fam, n + 1));
                    // rounding of the levels themselves, relative to their size
                    assert!(
                        ((e1 - e0) - (a + 1.0)).abs() <= 1e-15 * e1,
                        "a={a} g={g} n={n}"
                    );
                }
            }
        }
    }
}

#[test]
fn sector_energy_forms_agree_with_unified_formula() {
    for a in AS {
        for g in GAMMAS {
            let p = units(a, g);
            for m in 0..20 {
                let e = energy(&p, StateIndex::parabose(0, m));
                assert_relative_eq!(energy_even_sector(&p, m), e, max_relative = 1e-15);
                let o = energy(&p, StateIndex::parabose(1, m));
                assert_relative_eq!(energy_odd_sector(&p, m), o, max_relative = 1e-15);
            }
        }
    }
}

#[test]
fn every_state_is_normalized() {
    for a in AS {
        for g in GAMMAS {
            let p = units(a, g);
            for fam in [Family::CanonicalDeformed, Family::Parabose] {
                let gram = gram_matrix(&p, fam, 12, 64).unwrap();
                for (n, row) in gram.iter().enumerate() {
                    assert!((row[n] - 1.0).abs() < 1e-11, "a={a} g={g} {fam:?} n={n}");
                }
            }
        }
    }
}

#[test]
fn half_gamma_parabose_equals_canonical() {
    for a in AS {
        let p = units(a, 0.5);
        for n in 0..10 {
            let c = StateIndex::new(Family::CanonicalDeformed, n);
            let b = StateIndex::new(Family::Parabose, n);
            for x in [-3.2, -0.7, 0.05, 0.4, 1.9] {
                let (u, v) = (
                    wavefunction(&p, c, x).unwrap(),
                    wavefunction(&p, b, x).unwrap(),
                );
                assert!((u - v).abs() < 1e-12 * (1.0 + u.abs()), "a={a} n={n} x={x}");
            }
        }
    }
}

#[test]
fn xi_is_strictly_increasing() {
    for a in [-0.9, -0.6, 0.0, 2.0, 5.0] {
        let p = units(a, 0.5);
        let xs: Vec<f64> = (0..1000).map(|i| -5.0 + 10.0 * i as f64 / 999.0).collect();
        assert!(xs.windows(2).all(|w| xi_of_x(&p, w[0]) < xi_of_x(&p, w[1])));
    }
}

#[test]
fn high_states_do_not_overflow() {
    let p = units(2.0, 1.5);
    for fam in [Family::CanonicalDeformed, Family::Parabose] {
        for n in [30, 60, 90] {
            let s = StateIndex::new(fam, n);
            assert!(normalization(&p, s).unwrap().is_finite());
            for x in [0.3, 1.5, 2.5] {
                assert!(wavefunction(&p, s, x).unwrap().is_finite());
            }
        }
    }
}

#[test]
fn singular_origin_is_an_error() {
    let p = units(-0.6, 0.5);
    let r = wavefunction(&p, StateIndex::new(Family::CanonicalDeformed, 0), 0.0);
    assert!(matches!(r, Err(pdmosc_core::Error::SingularPoint { .. })));
    assert!(boundary_exponent(&p, StateIndex::new(Family::CanonicalDeformed, 0)) < 0.0);
    // gamma large enough lifts the even parabose state to zero at the origin
    let q = units(-0.6, 1.5);
    assert_eq!(
        wavefunction(&q, StateIndex::parabose(0, 1), 0.0).unwrap(),
        0.0
    );
}

proptest! {
    #[test]
    fn xi_round_trip(a in -0.95f64..6.0, x in -8.0f64..8.0, l in 0.2f64..5.0) {
        let p = OscillatorParams::new(l * l, 1.0, 1.0, a, 0.5).unwrap();
        let back = x_of_xi(&p, xi_of_x(&p, x));
        prop_assert!((back - x).abs() <= 1e-12 * x.abs().max(1e-300));
    }

    #[test]
    fn potential_is_even_and_non_negative(a in -0.95f64..6.0, x in -8.0f64..8.0) {
        let p = units(a, 0.5);
        prop_assert_eq!(potential(&p, x), potential(&p, -x));
        prop_assert!(potential(&p, x) >= 0.0);
    }
}
