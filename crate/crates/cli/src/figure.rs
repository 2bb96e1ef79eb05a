//! Potential and level panels over a 3 x 3 grid of deformation and parabose parameters.

use std::fs;

use pdmosc_core::model::{energy, potential, Family, OscillatorParams, StateIndex};
use serde_json::json;

use crate::commands::parameters_json;
use crate::config::{FigureArgs, Format};
use crate::output::{to_json_string, write_file, Cell, Svg, Table};
use crate::CliError;

/// Columns of the panel grid.
pub const A_VALUES: [f64; 3] = [-0.6, 0.0, 2.0];
/// Rows of the panel grid.
pub const GAMMAS: [f64; 3] = [0.5, 1.0, 1.5];

const BISECTION_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct Level {
    pub n: usize,
    pub energy: f64,
    /// Classical turning points, `V(x) = E`.
    pub x_left: f64,
    pub x_right: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Panel {
    pub letter: char,
    pub params: OscillatorParams,
    pub family: Family,
    pub ceiling: f64,
    pub x_max: f64,
    pub samples: Vec<(f64, f64)>,
    pub levels: Vec<Level>,
}

/// Positive root of `V(x) = e` by bisection; `V` increases on `x > 0`.
pub fn turning_point(p: &OscillatorParams, e: f64) -> f64 {
    if e <= 0.0 {
        return 0.0;
    }
    let mut hi = 1.0;
    while potential(p, hi) < e {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    while hi - lo > BISECTION_TOL * hi.max(1.0) {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if potential(p, mid) < e {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `n` points symmetric about 0; mirrored so that `x[i] == -x[n-1-i]` exactly.
pub fn symmetric_grid(x_max: f64, n: usize) -> Vec<f64> {
    let half = (n - 1) as f64 / 2.0;
    let mut xs: Vec<f64> = (0..n).map(|i| x_max * (i as f64 - half) / half).collect();
    for i in 0..n / 2 {
        xs[n - 1 - i] = -xs[i];
    }
    if n % 2 == 1 {
        xs[n / 2] = 0.0;
    }
    xs
}

pub fn build_panel(args: &FigureArgs, row: usize, col: usize) -> Result<Panel, CliError> {
    let (a, gamma) = (A_VALUES[col], GAMMAS[row]);
    let p = OscillatorParams::new(args.m0, args.omega, args.hbar, a, gamma)
        .map_err(|e| CliError::Config(e.to_string()))?;
    let family = if gamma == 0.5 {
        Family::CanonicalDeformed
    } else {
        Family::Parabose
    };
    let e0 = energy(&p, StateIndex::new(family, 0));
    let ceiling = e0 + args.ceiling * p.level_spacing();
    let count = match args.levels {
        Some(k) => k,
        None => (0..)
            .take_while(|&n| energy(&p, StateIndex::new(family, n)) <= ceiling * (1.0 + 1e-12))
            .count(),
    };
    let levels: Vec<Level> = (0..count)
        .map(|n| {
            let e = energy(&p, StateIndex::new(family, n));
            let x = turning_point(&p, e);
            Level {
                n,
                energy: e,
                x_left: -x,
                x_right: x,
            }
        })
        .collect();
    let x_top = levels
        .last()
        .map_or_else(|| turning_point(&p, ceiling), |l| l.x_right);
    let x_max = (1.0 + args.pad) * x_top;
    let samples = symmetric_grid(x_max, args.samples)
        .into_iter()
        .map(|x| (x, potential(&p, x)))
        .collect();
    Ok(Panel {
        letter: (b'a' + (3 * row + col) as u8) as char,
        params: p,
        family,
        ceiling: ceiling.max(levels.last().map_or(ceiling, |l| l.energy)),
        x_max,
        samples,
        levels,
    })
}

pub fn build_panels(args: &FigureArgs) -> Result<Vec<Panel>, CliError> {
    if args.samples < 3 {
        return Err(CliError::Config("--samples must be at least 3".into()));
    }
    if !(args.ceiling > 0.0) || !(args.pad >= 0.0) {
        return Err(CliError::Config(
            "--ceiling must be positive and --pad non-negative".into(),
        ));
    }
    let mut out = Vec::with_capacity(9);
    for row in 0..3 {
        for col in 0..3 {
            out.push(build_panel(args, row, col)?);
        }
    }
    Ok(out)
}

fn title(panel: &Panel) -> String {
    format!(
        "({}) a = {}, \u{3b3} = {}",
        panel.letter,
        panel.params.a(),
        panel.params.gamma()
    )
}

pub fn panel_table(panel: &Panel) -> Table {
    let mut t = Table::new(&[
        ("record", "record"),
        ("n", "n"),
        ("x", "x (length)"),
        ("potential", "V(x) (energy)"),
        ("energy", "E (energy)"),
        ("x_left", "x_left (length)"),
        ("x_right", "x_right (length)"),
    ]);
    for &(x, v) in &panel.samples {
        t.push(vec![
            "potential".into(),
            Cell::Empty,
            x.into(),
            v.into(),
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
        ]);
    }
    for l in &panel.levels {
        t.push(vec![
            "level".into(),
            l.n.into(),
            Cell::Empty,
            Cell::Empty,
            l.energy.into(),
            l.x_left.into(),
            l.x_right.into(),
        ]);
    }
    t
}

pub fn panel_json(panel: &Panel) -> String {
    let potential: Vec<_> = panel
        .samples
        .iter()
        .map(|&(x, v)| json!({"x": x, "potential": v}))
        .collect();
    let levels: Vec<_> = panel
        .levels
        .iter()
        .map(|l| json!({"n": l.n, "energy": l.energy, "x_left": l.x_left, "x_right": l.x_right}))
        .collect();
    to_json_string(&json!({
        "panel": panel.letter.to_string(),
        "parameters": parameters_json(&panel.params, panel.family),
        "ceiling": panel.ceiling,
        "x_range": [-panel.x_max, panel.x_max],
        "potential": potential,
        "levels": levels,
    }))
}

pub fn panel_svg(panel: &Panel) -> String {
    let top = 1.05 * panel.ceiling;
    let mut svg = Svg::new(400.0, 320.0, (-panel.x_max, panel.x_max), (0.0, top));
    svg.axes("x", "V, E");
    let pts: Vec<(f64, f64)> = panel
        .samples
        .iter()
        .map(|&(x, v)| (x, v.min(2.0 * top)))
        .collect();
    svg.polyline(&pts, "black");
    for l in &panel.levels {
        svg.line((l.x_left, l.energy), (l.x_right, l.energy), "firebrick");
    }
    svg.text(200.0, 24.0, "middle", &title(panel));
    svg.finish()
}

/// Writes `panel_<letter>.csv` (or `.json`) per panel, plus `.svg` for svg output.
pub fn cmd_figure1(args: &FigureArgs) -> Result<bool, CliError> {
    let panels = build_panels(args)?;
    fs::create_dir_all(&args.out)
        .map_err(|e| CliError::Output(args.out.display().to_string(), e))?;
    for panel in &panels {
        let stem = args.out.join(format!("panel_{}", panel.letter));
        match args.format {
            Format::Json => write_file(&stem.with_extension("json"), &panel_json(panel))?,
            Format::Csv | Format::Svg => {
                write_file(&stem.with_extension("csv"), &panel_table(panel).to_csv()?)?
            }
        }
        if args.format == Format::Svg {
            write_file(&stem.with_extension("svg"), &panel_svg(panel))?;
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turning_point_matches_closed_form() {
        for &a in &A_VALUES {
            let p = OscillatorParams::units(a, 0.5).unwrap();
            let e: f64 = 3.7;
            // V = x^(2a+2) / 2 in these units
            let exact = (2.0 * e).powf(1.0 / (2.0 * a + 2.0));
            assert!((turning_point(&p, e) - exact).abs() < 2e-10 * exact.max(1.0));
        }
    }

    #[test]
    fn grid_is_exactly_symmetric() {
        let xs = symmetric_grid(3.3, 11);
        assert_eq!(xs[5], 0.0);
        for i in 0..11 {
            assert_eq!(xs[i], -xs[10 - i]);
        }
        assert_eq!(xs[10], 3.3);
    }
}
