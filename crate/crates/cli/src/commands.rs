//! The spectrum, wavefunction, potential and verify commands.

use pdmosc_core::model::{
    boundary_exponent, energy, mass, potential, wavefunction, Family, OscillatorParams, StateIndex,
};
use pdmosc_core::numerics::{converge_spectrum, Sector};
use pdmosc_core::operators::Statistics;
use pdmosc_core::verify::{
    suite_algebra, suite_ladder, suite_limits, suite_orthonormality, suite_schrodinger_residual,
    suite_spectrum_parabose, suite_spectrum_vs_oracle, LadderTolerances, LimitTolerances, Sampling,
    VerificationReport,
};
use serde_json::{json, Value};

use crate::config::{
    Format, OutArgs, PotentialArgs, SpectrumArgs, Suite, VerifyArgs, WavefunctionArgs,
};
use crate::output::{emit, to_json_string, Cell, Svg, Table};
use crate::CliError;

pub fn family_name(f: Family) -> &'static str {
    match f {
        Family::CanonicalDeformed => "canonical",
        Family::Parabose => "parabose",
    }
}

pub fn parameters_json(p: &OscillatorParams, family: Family) -> Value {
    json!({
        "m0": p.m0(),
        "omega": p.omega(),
        "hbar": p.hbar(),
        "a": p.a(),
        "gamma": p.gamma(),
        "family": family_name(family),
    })
}

fn document(
    command: &str,
    p: &OscillatorParams,
    family: Family,
    table: &Table,
    extra: Value,
) -> Value {
    let mut v = json!({
        "command": command,
        "parameters": parameters_json(p, family),
        "columns": table.units_json(),
        "rows": table.to_json_rows(),
    });
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    v
}

fn write_table(
    out: &OutArgs,
    command: &str,
    p: &OscillatorParams,
    family: Family,
    table: &Table,
    extra: Value,
    svg: impl FnOnce() -> Result<String, CliError>,
) -> Result<(), CliError> {
    let text = match out.format {
        Format::Csv => table.to_csv()?,
        Format::Json => to_json_string(&document(command, p, family, table, extra)),
        Format::Svg => svg()?,
    };
    emit(out.out.as_deref(), &text)
}

fn no_svg(command: &str) -> Result<String, CliError> {
    Err(CliError::Config(format!(
        "--format svg is not available for `{command}`; use csv or json"
    )))
}

/// Analytic levels `n = 0..levels`, with oracle columns when requested.
pub fn cmd_spectrum(args: &SpectrumArgs) -> Result<bool, CliError> {
    let p = args.phys.params()?;
    let family = args.phys.family();
    if args.levels == 0 {
        return Err(CliError::Config("--levels must be at least 1".into()));
    }
    if args.out.format == Format::Svg {
        no_svg("spectrum")?;
    }
    let states: Vec<StateIndex> = (0..args.levels)
        .map(|n| StateIndex::new(family, n))
        .collect();
    let exact: Vec<f64> = states.iter().map(|&s| energy(&p, s)).collect();

    let mut cols = vec![("n", "n"), ("parity", "parity"), ("energy", "E (energy)")];
    let mut oracle: Vec<Option<(f64, f64)>> = vec![None; states.len()];
    if args.oracle {
        let tol = args.tol.unwrap_or(match family {
            Family::CanonicalDeformed => 1e-6,
            Family::Parabose => 1e-4,
        });
        if !(tol >= 1e-8) {
            return Err(CliError::Config(format!(
                "--tol {tol:e} is below what the finite-difference oracle can resolve (1e-8)"
            )));
        }
        cols.extend([
            ("oracle", "E_oracle (energy)"),
            ("oracle_error_estimate", "oracle error estimate (relative)"),
            ("deviation", "|E_oracle - E| / E (relative)"),
        ]);
        let sectors: Vec<(Sector, usize, usize)> = match family {
            Family::CanonicalDeformed => vec![(Sector::Full, 0, 1)],
            Family::Parabose => vec![(Sector::ParaboseEven, 0, 2), (Sector::ParaboseOdd, 1, 2)],
        };
        for (sector, first, stride) in sectors {
            let k = (args.levels + stride - 1 - first) / stride;
            if k == 0 {
                continue;
            }
            let s = converge_spectrum(&p, sector, k, (tol / 10.0).max(1e-8))?;
            for j in 0..k {
                oracle[first + j * stride] = Some((s.values[j], s.error_estimates[j]));
            }
        }
    }
    let mut t = Table::new(&cols);
    for (i, s) in states.iter().enumerate() {
        let mut row = vec![
            Cell::from(s.n),
            Cell::from(s.parity()),
            Cell::from(exact[i]),
        ];
        if let Some((v, err)) = oracle[i] {
            row.extend([
                v.into(),
                err.into(),
                ((v - exact[i]) / exact[i]).abs().into(),
            ]);
        }
        t.push(row);
    }
    write_table(&args.out, "spectrum", &p, family, &t, json!({}), || {
        no_svg("spectrum")
    })?;
    Ok(true)
}

/// Replaces `x = 0` by a small positive offset when `singular(0)`; warns once.
fn offset_origin(xs: &mut [f64], what: &str) {
    let step = if xs.len() > 1 {
        (xs[xs.len() - 1] - xs[0]) / (xs.len() - 1) as f64
    } else {
        1.0
    };
    for x in xs.iter_mut() {
        if *x == 0.0 {
            *x = 1e-3 * step;
            eprintln!(
                "warning: {what} is singular at x = 0; sampled at x = {} instead",
                *x
            );
        }
    }
}

fn trapezoid(xs: &[f64], ys: &[f64]) -> f64 {
    xs.windows(2)
        .zip(ys.windows(2))
        .map(|(x, y)| 0.5 * (x[1] - x[0]) * (y[0] + y[1]))
        .sum()
}

fn line_plot(xs: &[f64], ys: &[f64], x_label: &str, y_label: &str, title: &str) -> String {
    let finite = ys.iter().copied().filter(|v| v.is_finite());
    let lo = finite.clone().fold(f64::INFINITY, f64::min).min(0.0);
    let mut hi = finite.fold(f64::NEG_INFINITY, f64::max).max(0.0);
    if hi <= lo {
        hi = lo + 1.0;
    }
    let pad = 0.05 * (hi - lo);
    let mut svg = Svg::new(
        480.0,
        360.0,
        (xs[0], xs[xs.len() - 1]),
        (lo - pad, hi + pad),
    );
    svg.axes(x_label, y_label);
    let pts: Vec<(f64, f64)> = xs
        .iter()
        .zip(ys)
        .filter(|p| p.1.is_finite())
        .map(|(&x, &y)| (x, y))
        .collect();
    svg.polyline(&pts, "steelblue");
    svg.text(240.0, 24.0, "middle", title);
    svg.finish()
}

/// Samples of `psi_n(x)` and `psi_n(-x)` with a trapezoid norm as a diagnostic.
pub fn cmd_wavefunction(args: &WavefunctionArgs) -> Result<bool, CliError> {
    let p = args.phys.params()?;
    let family = args.phys.family();
    let state = StateIndex::new(family, args.n);
    let mut xs = args.sample.grid()?;
    if boundary_exponent(&p, state) < 0.0 && state.parity() == 0 {
        offset_origin(&mut xs, &format!("psi_{}", args.n));
    }
    let psi: Vec<f64> = xs
        .iter()
        .map(|&x| wavefunction(&p, state, x))
        .collect::<Result<_, _>>()?;
    let mirror: Vec<f64> = xs
        .iter()
        .map(|&x| wavefunction(&p, state, -x))
        .collect::<Result<_, _>>()?;
    let density: Vec<f64> = psi.iter().map(|v| v * v).collect();
    let norm = trapezoid(&xs, &density);
    eprintln!(
        "trapezoid norm over [{}, {}]: {norm:.6} (diagnostic only)",
        args.sample.xmin, args.sample.xmax
    );

    let mut t = Table::new(&[
        ("x", "x (length)"),
        ("psi", "psi(x) (length^-1/2)"),
        ("psi_reflected", "psi(-x) (length^-1/2)"),
    ]);
    for i in 0..xs.len() {
        t.push(vec![xs[i].into(), psi[i].into(), mirror[i].into()]);
    }
    let extra = json!({
        "n": args.n,
        "parity": if state.parity() == 0 { "even" } else { "odd" },
        "energy": energy(&p, state),
        "diagnostics": { "trapezoid_norm": norm },
    });
    write_table(&args.out, "wavefunction", &p, family, &t, extra, || {
        Ok(line_plot(
            &xs,
            &psi,
            "x",
            "psi",
            &format!(
                "psi_{} ({}, a = {}, gamma = {})",
                args.n,
                family_name(family),
                p.a(),
                p.gamma()
            ),
        ))
    })?;
    Ok(true)
}

/// Samples of `V(x)` and `M(x)`.
pub fn cmd_potential(args: &PotentialArgs) -> Result<bool, CliError> {
    let p = args.phys.params()?;
    let family = args.phys.family();
    let mut xs = args.sample.grid()?;
    if p.a() < 0.0 {
        offset_origin(&mut xs, "the mass");
    }
    let v: Vec<f64> = xs.iter().map(|&x| potential(&p, x)).collect();
    let m: Vec<f64> = xs.iter().map(|&x| mass(&p, x)).collect::<Result<_, _>>()?;
    let mut t = Table::new(&[
        ("x", "x (length)"),
        ("potential", "V(x) (energy)"),
        ("mass", "M(x) (mass)"),
    ]);
    for i in 0..xs.len() {
        t.push(vec![xs[i].into(), v[i].into(), m[i].into()]);
    }
    write_table(&args.out, "potential", &p, family, &t, json!({}), || {
        Ok(line_plot(
            &xs,
            &v,
            "x",
            "V",
            &format!("V(x), a = {}", p.a()),
        ))
    })?;
    Ok(true)
}

fn statistics(family: Family) -> Statistics {
    match family {
        Family::CanonicalDeformed => Statistics::Canonical,
        Family::Parabose => Statistics::Parabose,
    }
}

/// Runs the selected suites with the acceptance tolerances unless overridden.
pub fn run_suites(
    p: &OscillatorParams,
    family: Family,
    suite: Suite,
    tol: Option<f64>,
    n: Option<usize>,
    levels: Option<usize>,
    seed: Option<u64>,
) -> Result<VerificationReport, CliError> {
    if let Some(t) = tol {
        if !(t > 0.0) || !t.is_finite() {
            return Err(CliError::Config(format!(
                "--tol must be positive and finite (got {t})"
            )));
        }
    }
    let sampling = Sampling {
        seed,
        ..Sampling::default()
    };
    let canonical = family == Family::CanonicalDeformed;
    let want = |s: Suite| suite == Suite::All || suite == s;
    let mut parts = Vec::new();
    if want(Suite::Orthonormality) {
        let tol = tol.unwrap_or(1e-11);
        parts.push(suite_orthonormality(p, family, n.unwrap_or(12), 64, tol));
    }
    if want(Suite::Residual) {
        let tol = tol.unwrap_or(if canonical { 1e-9 } else { 1e-8 });
        parts.push(suite_schrodinger_residual(
            p,
            family,
            n.unwrap_or(8),
            &sampling,
            tol,
        ));
    }
    if want(Suite::Algebra) {
        parts.push(suite_algebra(
            p,
            statistics(family),
            &sampling,
            tol.unwrap_or(1e-9),
        ));
    }
    if want(Suite::Spectrum) {
        if canonical {
            let default = if p.a() == 0.0 { 1e-6 } else { 1e-5 };
            parts.push(suite_spectrum_vs_oracle(
                p,
                Sector::Full,
                levels.unwrap_or(8),
                tol.unwrap_or(default),
            ));
        } else {
            parts.push(suite_spectrum_parabose(
                p,
                levels.unwrap_or(4),
                tol.unwrap_or(1e-4),
            ));
        }
    }
    if want(Suite::Limits) {
        let t = match tol {
            Some(t) => LimitTolerances {
                wavefunction: t,
                energy: t,
                cross_family: t,
            },
            None => LimitTolerances::default(),
        };
        let mut a_values = vec![-0.6, 0.0, 2.0];
        if !a_values.contains(&p.a()) {
            a_values.push(p.a());
        }
        let mut gammas = vec![1.0, 1.5];
        if p.gamma() > 0.5 && !gammas.contains(&p.gamma()) {
            gammas.push(p.gamma());
        }
        parts.push(suite_limits(
            p,
            &a_values,
            &gammas,
            n.unwrap_or(8),
            &sampling,
            &t,
        ));
    }
    if want(Suite::Ladder) {
        let t = LadderTolerances {
            spread: tol.unwrap_or(LadderTolerances::default().spread),
            ..LadderTolerances::default()
        };
        parts.push(suite_ladder(p, family, n.unwrap_or(8), &sampling, &t));
    }
    let name = format!("{suite:?}").to_lowercase();
    Ok(VerificationReport::merge(name, parts))
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<bool, CliError> {
    let p = args.phys.params()?;
    let family = args.phys.family();
    let report = run_suites(
        &p,
        family,
        args.suite,
        args.tol,
        args.n,
        args.levels,
        args.seed,
    )?;
    let text = match args.out.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => {
            let mut t = Table::new(&[
                ("label", "label"),
                ("measured", "measured"),
                ("tolerance", "tolerance"),
                ("pass", "pass"),
                ("provenance", "provenance"),
                ("message", "message"),
            ]);
            for c in &report.cases {
                t.push(vec![
                    c.label.as_str().into(),
                    c.measured.into(),
                    c.tolerance.into(),
                    if c.pass { "true" } else { "false" }.into(),
                    c.provenance.as_str().into(),
                    c.message.as_deref().map_or(Cell::Empty, Cell::from),
                ]);
            }
            t.to_csv()?
        }
        Format::Svg => no_svg("verify")?,
    };
    emit(args.out.out.as_deref(), &text)?;
    let failed = report.failures().count();
    eprintln!(
        "{}: {} cases, {} failed",
        report.suite,
        report.cases.len(),
        failed
    );
    for c in report.failures() {
        eprintln!(
            "  FAIL {}: {:e} > {:e}{}",
            c.label,
            c.measured,
            c.tolerance,
            c.message
                .as_deref()
                .map(|m| format!(" ({m})"))
                .unwrap_or_default()
        );
    }
    Ok(report.overall_pass)
}
