use pdmosc_core::model::{energy, Family, OscillatorParams, StateIndex};
use pdmosc_core::numerics::*;
use pdmosc_core::Error;
use proptest::prelude::*;

fn units(a: f64, g: f64) -> OscillatorParams {
    OscillatorParams::units(a, g).unwrap()
}

fn lowest(p: &OscillatorParams, s: Sector, half_width: f64, n: usize, k: usize) -> Vec<f64> {
    let g = GridSpec::new(half_width, n).unwrap();
    assemble_hamiltonian(p, &g, s)
        .unwrap()
        .matrix
        .eigenvalues_lowest(k)
        .unwrap()
}

#[test]
fn harmonic_grid_examples() {
    let p = units(0.0, 0.5);
    let fine = lowest(&p, Sector::Full, 10.0, 2000, 5);
    let coarse = lowest(&p, Sector::Full, 10.0, 1000, 5);
    // the three-point stencil is low by exactly h^2/32 on the ground state
    assert!((fine[0] - 0.5 + 1e-4 / 32.0).abs() < 1e-9);
    for n in 0..5 {
        let r = (4.0 * fine[n] - coarse[n]) / 3.0;
        assert!((r - (n as f64 + 0.5)).abs() < 1e-6, "{n}: {r}");
    }
}

#[test]
fn deformed_ground_state_with_extrapolation() {
    let p = units(2.0, 0.5);
    let coarse = lowest(&p, Sector::Full, 6.0, 2000, 1)[0];
    let fine = lowest(&p, Sector::Full, 6.0, 4000, 1)[0];
    assert!(((4.0 * fine - coarse) / 3.0 - 1.5).abs() < 1e-5);
    assert!((fine - 1.5).abs() < 1e-5);
}

#[test]
fn converged_spectrum_examples() {
    let s = converge_spectrum(&units(-0.6, 0.5), Sector::Full, 4, 1e-7).unwrap();
    for (v, want) in s.values.iter().zip([0.2, 0.6, 1.0, 1.4]) {
        assert!((v - want).abs() < 1e-5);
    }
    let s = converge_spectrum(&units(2.0, 1.0), Sector::ParaboseEven, 3, 1e-6).unwrap();
    for (v, want) in s.values.iter().zip([2.0, 8.0, 14.0]) {
        assert!((v - want).abs() < 1e-4);
    }
}

#[test]
fn error_estimates_bound_canonical_errors() {
    for a in [-0.6, 0.0, 2.0] {
        let p = units(a, 0.5);
        let s = converge_spectrum(&p, Sector::Full, 8, 1e-7).unwrap();
        for (n, (v, est)) in s.values.iter().zip(&s.error_estimates).enumerate() {
            let exact = energy(&p, StateIndex::new(Family::CanonicalDeformed, n));
            assert!(
                (v - exact).abs() <= *est,
                "a={a} n={n}: err {:e} est {est:e}",
                (v - exact).abs()
            );
        }
    }
}

#[test]
fn tolerance_below_floor_is_rejected() {
    let r = converge_spectrum(&units(0.0, 0.5), Sector::Full, 2, 1e-9);
    assert!(matches!(r, Err(Error::ParameterDomain(_))));
}

#[test]
fn sector_gaps_approach_level_spacing() {
    for (a, g) in [(-0.6, 1.0), (0.0, 1.5), (2.0, 1.5)] {
        let p = units(a, g);
        for s in [Sector::ParaboseEven, Sector::ParaboseOdd] {
            let mut prev = f64::INFINITY;
            for n in [200, 400, 800, 1600] {
                let e = lowest(&p, s, 8.0 / (a + 1.0).sqrt(), n, 4);
                let dev = e
                    .windows(2)
                    .map(|w| ((w[1] - w[0]) - 2.0 * (a + 1.0)).abs())
                    .fold(0.0, f64::max);
                assert!(dev < prev, "a={a} g={g} {s:?} n={n}");
                prev = dev;
            }
            assert!(prev < 1e-3);
        }
    }
}

#[test]
fn assembled_matrix_and_reflection_invariance() {
    let p = units(-0.6, 0.5);
    let g = GridSpec::new(7.0, 400).unwrap();
    let h = assemble_hamiltonian(&p, &g, Sector::Full).unwrap();
    let d = h.matrix.diag().to_vec();
    let e = h.matrix.offdiag().to_vec();
    // relabel x -> -x
    let mut dr = d.clone();
    dr.reverse();
    let mut er = e.clone();
    er.reverse();
    assert_eq!(dr, d);
    let flipped = SymTriMatrix::new(dr, er).unwrap();
    let a = h.matrix.eigenvalues_lowest(6).unwrap();
    let b = flipped.eigenvalues_lowest(6).unwrap();
    for (u, v) in a.iter().zip(&b) {
        assert!((u - v).abs() <= 1e-12 * u.abs());
    }
    assert!(h.x_nodes.iter().all(|&x| x != 0.0));
}

#[test]
fn sturm_count_is_consistent_with_bisection() {
    let p = units(2.0, 1.5);
    let g = GridSpec::new(5.0, 300).unwrap();
    let m = assemble_hamiltonian(&p, &g, Sector::ParaboseOdd)
        .unwrap()
        .matrix;
    let e = m.eigenvalues_lowest(10).unwrap();
    for (i, w) in e.windows(2).enumerate() {
        let mid = 0.5 * (w[0] + w[1]);
        assert_eq!(m.sturm_count(mid), i + 1);
    }
}

proptest! {
    #[test]
    fn random_matrices_match_trace_and_count(
        diag in prop::collection::vec(-5.0f64..5.0, 2..40),
        seed in 0u64..1000,
    ) {
        let n = diag.len();
        let off: Vec<f64> = (0..n - 1).map(|i| ((seed as f64 + i as f64) * 0.7).sin()).collect();
        let m = SymTriMatrix::new(diag.clone(), off).unwrap();
        let e = m.eigenvalues();
        prop_assert!(e.windows(2).all(|w| w[0] <= w[1]));
        let trace: f64 = diag.iter().sum();
        let sum: f64 = e.iter().sum();
        prop_assert!((trace - sum).abs() < 1e-10 * (1.0 + trace.abs()));
        let (lo, hi) = m.gershgorin();
        prop_assert!(e[0] >= lo - 1e-12 && e[n - 1] <= hi + 1e-12);
    }
}
