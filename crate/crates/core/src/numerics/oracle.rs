use serde::{Deserialize, Serialize};

use super::grid::{assemble_hamiltonian, GridSpec, Sector};
use crate::error::{Error, Result};
use crate::model::OscillatorParams;

/// Largest cell count on the finest grid.
const MAX_CELLS: usize = 1 << 16;

/// Extrapolated eigenvalues with their error estimates.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergedSpectrum {
    pub values: Vec<f64>,
    pub error_estimates: Vec<f64>,
    /// Final grid: half-width in the mass-adapted coordinate and cell count.
    pub grid: GridSpec,
    /// Per level, whether the h^2 extrapolation was kept.
    pub extrapolated: Vec<bool>,
}

struct Solve {
    values: Vec<f64>,
    floor: f64,
}

fn solve(params: &OscillatorParams, sector: Sector, grid: &GridSpec, k: usize) -> Result<Solve> {
    let hm = assemble_hamiltonian(params, grid, sector)?;
    Ok(Solve {
        values: hm.matrix.eigenvalues_lowest(k)?,
        floor: 8.0 * f64::EPSILON * hm.matrix.norm_inf(),
    })
}

fn grid_for(sector: Sector, half_cells: usize, h: f64) -> Result<GridSpec> {
    let n = match sector {
        Sector::Full => 2 * half_cells,
        _ => half_cells,
    };
    GridSpec::new(half_cells as f64 * h, n)
}

/// Lowest `k` eigenvalues of `sector`, refined until the estimated relative
/// error of each is below `target_tol` (which must be at least 1e-8).
///
/// The box is first widened by factors of 1.25 at a fixed step until the
/// levels no longer feel the wall; then the step is halved repeatedly and
/// successive results are Richardson-extrapolated under an `h^2` error law.
/// Where the observed contraction ratio of the raw differences is more than
/// 30% away from 4, the raw finest value is reported instead.
pub fn converge_spectrum(
    params: &OscillatorParams,
    sector: Sector,
    k: usize,
    target_tol: f64,
) -> Result<ConvergedSpectrum> {
    if !(target_tol >= 1e-8) {
        return Err(Error::ParameterDomain(format!(
            "oracle tolerance must be at least 1e-8, got {target_tol}"
        )));
    }
    if k == 0 {
        return Err(Error::ParameterDomain("need at least one level".into()));
    }
    let l0 = params.lambda0();
    let h0 = 0.05 / l0;
    let min_cells = (4 * k).max(16);
    let mut cells = ((4.0 / l0) / h0).ceil() as usize;
    cells = cells.max(min_cells);

    let rel = |d: f64, v: f64| d.abs() / v.abs().max(f64::MIN_POSITIVE);
    let mut widened = false;
    for _ in 0..40 {
        let a = solve(params, sector, &grid_for(sector, cells, h0)?, k)?;
        let wider = (cells as f64 * 1.25).ceil() as usize;
        let b = solve(params, sector, &grid_for(sector, wider, h0)?, k)?;
        let worst = a
            .values
            .iter()
            .zip(&b.values)
            .map(|(x, y)| rel(x - y, *y))
            .fold(0.0, f64::max);
        if worst < target_tol / 10.0 {
            widened = true;
            break;
        }
        cells = wider;
    }
    if !widened {
        return Err(Error::Construction(
            "box widening did not settle the levels".into(),
        ));
    }

    let mut h = h0;
    let mut raw = vec![solve(params, sector, &grid_for(sector, cells, h)?, k)?];
    let mut best: Vec<f64> = raw[0].values.clone();
    let mut estimate = vec![f64::INFINITY; k];
    let mut extrapolated = vec![false; k];
    loop {
        h *= 0.5;
        cells *= 2;
        let grid = grid_for(sector, cells, h)?;
        if grid.n > MAX_CELLS {
            return Err(Error::NonConvergence { best, estimate });
        }
        raw.push(solve(params, sector, &grid, k)?);
        let m = raw.len();
        if m < 3 {
            continue;
        }
        let (e1, e2, e3) = (&raw[m - 3], &raw[m - 2], &raw[m - 1]);
        let floor = e3.floor;
        let mut done = true;
        for j in 0..k {
            let d_old = e2.values[j] - e1.values[j];
            let d_new = e3.values[j] - e2.values[j];
            let r_old = (4.0 * e2.values[j] - e1.values[j]) / 3.0;
            let r_new = (4.0 * e3.values[j] - e2.values[j]) / 3.0;
            let ratio = d_old / d_new;
            let in_noise = d_new.abs() < 100.0 * floor;
            let h2_law = in_noise || (ratio - 4.0).abs() <= 0.3 * 4.0;
            if h2_law {
                best[j] = r_new;
                estimate[j] = (r_new - r_old).abs() + floor;
            } else {
                best[j] = e3.values[j];
                estimate[j] = d_new.abs() + floor;
            }
            extrapolated[j] = h2_law;
            if estimate[j] > target_tol * best[j].abs() {
                done = false;
            }
        }
        if done {
            return Ok(ConvergedSpectrum {
                values: best,
                error_estimates: estimate,
                grid,
                extrapolated,
            });
        }
    }
}
