use super::VerificationReport;
use crate::model::{energy, Family, OscillatorParams, StateIndex};
use crate::numerics::{converge_spectrum, Sector};

/// Tightest tolerance the whole-line oracle is trusted for.
pub const CANONICAL_ORACLE_FLOOR: f64 = 1e-6;
/// Tightest tolerance the half-line parabose oracle is trusted for.
pub const PARABOSE_ORACLE_FLOOR: f64 = 1e-4;

const PROV_CANONICAL: &str = "equidistant deformed spectrum (a+1) hbar omega (n + 1/2)";
const PROV_EVEN: &str =
    "even parabose levels (a+1) hbar omega (2m + 1/2) + hbar omega (gamma - 1/2)";
const PROV_ODD: &str = "odd parabose levels (a+1) hbar omega (2m + 3/2) + hbar omega (gamma - 1/2)";

fn floor_of(sector: Sector) -> f64 {
    match sector {
        Sector::Full => CANONICAL_ORACLE_FLOOR,
        _ => PARABOSE_ORACLE_FLOOR,
    }
}

fn analytic(params: &OscillatorParams, sector: Sector, j: usize) -> f64 {
    match sector {
        Sector::Full => energy(params, StateIndex::new(Family::CanonicalDeformed, j)),
        Sector::ParaboseEven => energy(params, StateIndex::parabose(0, j)),
        Sector::ParaboseOdd => energy(params, StateIndex::parabose(1, j)),
    }
}

fn provenance(sector: Sector) -> &'static str {
    match sector {
        Sector::Full => PROV_CANONICAL,
        Sector::ParaboseEven => PROV_EVEN,
        Sector::ParaboseOdd => PROV_ODD,
    }
}

/// Oracle values of one sector, or `None` after recording why not.
fn oracle_levels(
    r: &mut VerificationReport,
    params: &OscillatorParams,
    sector: Sector,
    k: usize,
    tol: f64,
) -> Option<Vec<f64>> {
    let prov = provenance(sector);
    if tol < floor_of(sector) {
        r.fail(
            format!("{sector:?}: requested tolerance {tol:e}"),
            tol,
            prov,
            format!(
                "tolerance beyond oracle capability (floor {:e} for this sector)",
                floor_of(sector)
            ),
        );
        return None;
    }
    match converge_spectrum(params, sector, k, (tol / 10.0).max(1e-8)) {
        Ok(s) => {
            for j in 0..k {
                let exact = analytic(params, sector, j);
                r.check(
                    format!("{sector:?} level {j}: |oracle - exact| / exact"),
                    ((s.values[j] - exact) / exact).abs(),
                    tol,
                    prov,
                );
                r.measure(format!("{sector:?} level {j} oracle"), s.values[j]);
                r.measure(
                    format!("{sector:?} level {j} error estimate"),
                    s.error_estimates[j],
                );
            }
            r.measure(format!("{sector:?} final cells"), s.grid.n as f64);
            Some(s.values)
        }
        Err(e) => {
            r.fail(format!("{sector:?} oracle"), tol, prov, e.to_string());
            None
        }
    }
}

/// Lowest `k` levels of one sector against the closed-form energies.
pub fn suite_spectrum_vs_oracle(
    params: &OscillatorParams,
    sector: Sector,
    k: usize,
    tol: f64,
) -> VerificationReport {
    let mut r = VerificationReport::new("spectrum_vs_oracle");
    oracle_levels(&mut r, params, sector, k, tol);
    r
}

/// Both parabose sectors with `k` levels each, plus the uniform spacing of
/// the interleaved spectrum.
pub fn suite_spectrum_parabose(
    params: &OscillatorParams,
    k: usize,
    tol: f64,
) -> VerificationReport {
    let mut r = VerificationReport::new("spectrum_parabose");
    let even = oracle_levels(&mut r, params, Sector::ParaboseEven, k, tol);
    let odd = oracle_levels(&mut r, params, Sector::ParaboseOdd, k, tol);
    if let (Some(e), Some(o)) = (even, odd) {
        let merged: Vec<f64> = e.iter().zip(&o).flat_map(|(a, b)| [*a, *b]).collect();
        let gap = params.level_spacing();
        let worst = merged
            .windows(2)
            .map(|w| ((w[1] - w[0]) - gap).abs() / gap)
            .fold(0.0, f64::max);
        r.check(
            "merged spectrum: max |gap - (a+1) hbar omega| / ((a+1) hbar omega)",
            worst,
            tol,
            "equidistant levels across both parities",
        );
    }
    r
}
