use pdmosc_core::model::{Family, OscillatorParams};
use pdmosc_core::numerics::Sector;
use pdmosc_core::operators::Statistics;
use pdmosc_core::verify::*;

fn units(a: f64, g: f64) -> OscillatorParams {
    OscillatorParams::units(a, g).unwrap()
}

#[test]
fn reports_are_byte_identical_for_equal_seeds() {
    let s = Sampling {
        seed: Some(42),
        ..Sampling::default()
    };
    let p = units(2.0, 1.5);
    let a = suite_schrodinger_residual(&p, Family::Parabose, 3, &s, 1e-8).to_json();
    let b = suite_schrodinger_residual(&p, Family::Parabose, 3, &s, 1e-8).to_json();
    assert_eq!(a, b);
    let c = suite_ladder(&p, Family::Parabose, 3, &s, &LadderTolerances::default()).to_json();
    let d = suite_ladder(&p, Family::Parabose, 3, &s, &LadderTolerances::default()).to_json();
    assert_eq!(c, d);
}

#[test]
fn orthonormality_examples() {
    assert!(
        suite_orthonormality(&units(0.0, 0.5), Family::CanonicalDeformed, 12, 64, 1e-12)
            .overall_pass
    );
    assert!(
        suite_orthonormality(&units(2.0, 0.5), Family::CanonicalDeformed, 12, 64, 1e-12)
            .overall_pass
    );
    assert!(suite_orthonormality(&units(-0.6, 1.5), Family::Parabose, 12, 64, 1e-11).overall_pass);
    let bad = suite_orthonormality(&units(0.0, 0.5), Family::CanonicalDeformed, 12, 12, 1e-12);
    assert!(!bad.overall_pass);
}

#[test]
fn residual_examples() {
    let s = Sampling::default();
    assert!(
        suite_schrodinger_residual(&units(0.0, 0.5), Family::CanonicalDeformed, 8, &s, 1e-11)
            .overall_pass
    );
    assert!(
        suite_schrodinger_residual(&units(2.0, 0.5), Family::CanonicalDeformed, 8, &s, 1e-9)
            .overall_pass
    );
    assert!(
        suite_schrodinger_residual(&units(-0.6, 1.5), Family::Parabose, 8, &s, 1e-8).overall_pass
    );
}

#[test]
fn algebra_examples() {
    let s = Sampling::default().with_per_side(5);
    let r = suite_algebra(&units(2.0, 0.5), Statistics::Canonical, &s, 1e-10);
    assert!(r.overall_pass, "{:#?}", r.failures().collect::<Vec<_>>());
    let r = suite_algebra(&units(2.0, 1.5), Statistics::Parabose, &s, 1e-10);
    assert!(r.overall_pass, "{:#?}", r.failures().collect::<Vec<_>>());
    assert!(r.cases.iter().any(|c| c.label.starts_with("{R, a+}")));
}

#[test]
fn spectrum_floor_is_reported_as_a_case() {
    let r = suite_spectrum_vs_oracle(&units(2.0, 0.5), Sector::Full, 4, 1e-9);
    assert!(!r.overall_pass);
    let msg = r.cases[0].message.as_deref().unwrap();
    assert!(msg.contains("tolerance beyond oracle capability"));
}

#[test]
fn spectrum_examples() {
    assert!(suite_spectrum_vs_oracle(&units(0.0, 0.5), Sector::Full, 8, 1e-6).overall_pass);
    assert!(suite_spectrum_vs_oracle(&units(2.0, 0.5), Sector::Full, 4, 1e-5).overall_pass);
    let r = suite_spectrum_parabose(&units(-0.6, 1.0), 4, 1e-4);
    assert!(r.overall_pass);
    assert!(r
        .cases
        .iter()
        .any(|c| c.label.starts_with("merged spectrum")));
}

#[test]
fn limit_and_ladder_examples() {
    let s = Sampling::default();
    let r = suite_limits(
        &units(0.0, 0.5),
        &[-0.6, 2.0],
        &[1.0, 1.5],
        9,
        &s,
        &LimitTolerances::default(),
    );
    assert!(r.overall_pass, "{:#?}", r.failures().collect::<Vec<_>>());
    let r = suite_ladder(
        &units(0.0, 0.5),
        Family::CanonicalDeformed,
        6,
        &s,
        &LadderTolerances::default(),
    );
    assert!(r.overall_pass);
    assert!(r.cases.iter().any(|c| c.label.contains("sqrt(n+1)")));
    let r = suite_ladder(
        &units(2.0, 0.5),
        Family::CanonicalDeformed,
        4,
        &s,
        &LadderTolerances::default(),
    );
    assert!(r.overall_pass);
    assert_eq!(r.measurements.len(), 4);
}

#[test]
fn every_case_has_provenance() {
    let s = Sampling::default().with_per_side(4);
    let p = units(-0.6, 1.0);
    for r in [
        suite_algebra(&p, Statistics::Parabose, &s, 1e-9),
        suite_orthonormality(&p, Family::Parabose, 4, 16, 1e-11),
    ] {
        assert!(r.cases.iter().all(|c| !c.provenance.is_empty()));
        assert_eq!(r.overall_pass, r.cases.iter().all(|c| c.pass));
    }
}
