use super::VerificationReport;
use crate::error::{Error, Result};
use crate::model::{
    wavefunction, x_of_xi, Family, OscillatorParams, SolutionExponents, StateIndex,
};
use crate::specfun::{gauss_generalized_laguerre, gauss_hermite};

const PROVENANCE_HERMITE: &str = "Hermite orthogonality under the change of variable x -> xi";
const PROVENANCE_LAGUERRE: &str = "Laguerre orthogonality per parity under x -> t = xi^2";

/// `d xi / dx`.
fn dxi_dx(params: &OscillatorParams, x: f64) -> f64 {
    let a = params.a();
    let l = params.lambda0();
    (a + 1.0).sqrt() * l * (l * x.abs()).powf(a)
}

/// Gram matrix of the states `0..=n_max` of `family`.
///
/// The canonical family uses an `n_quad`-point Gauss–Hermite rule in `xi`;
/// the parabose family a generalized Gauss–Laguerre rule in `t = xi^2` for
/// each parity, with cross-parity entries summed over mirrored nodes.
pub fn gram_matrix(
    params: &OscillatorParams,
    family: Family,
    n_max: usize,
    n_quad: usize,
) -> Result<Vec<Vec<f64>>> {
    if n_max < 1 || n_quad <= n_max {
        return Err(Error::ParameterDomain(format!(
            "need n_max >= 1 and more nodes than states (n_max = {n_max}, nodes = {n_quad})"
        )));
    }
    let dim = n_max + 1;
    let mut g = vec![vec![0.0; dim]; dim];
    match family {
        Family::CanonicalDeformed => {
            if n_quad % 2 == 1 {
                return Err(Error::ParameterDomain(
                    "use an even node count so that no node lands on the origin".into(),
                ));
            }
            let rule = gauss_hermite(n_quad)?;
            let mut psi = vec![vec![0.0; rule.len()]; dim];
            let mut scale = vec![0.0; rule.len()];
            for (i, (&xi, &w)) in rule.nodes().iter().zip(rule.weights()).enumerate() {
                let x = x_of_xi(params, xi);
                scale[i] = w * (xi * xi).exp() / dxi_dx(params, x);
                for (n, row) in psi.iter_mut().enumerate() {
                    row[i] = wavefunction(params, StateIndex::new(family, n), x)?;
                }
            }
            for m in 0..dim {
                for n in 0..dim {
                    g[m][n] = (0..rule.len())
                        .map(|i| scale[i] * psi[m][i] * psi[n][i])
                        .sum();
                }
            }
        }
        Family::Parabose => {
            let e = SolutionExponents::new(params, Family::Parabose);
            for parity in 0..2 {
                let alpha = if parity == 0 {
                    e.alpha_even
                } else {
                    e.alpha_odd
                }
                .ok_or_else(|| Error::ParameterDomain("missing Laguerre parameter".into()))?;
                let rule = gauss_generalized_laguerre(n_quad, alpha)?;
                let states: Vec<usize> = (parity..dim).step_by(2).collect();
                let mut psi = vec![vec![0.0; rule.len()]; dim];
                let mut scale = vec![0.0; rule.len()];
                for (i, (&t, &w)) in rule.nodes().iter().zip(rule.weights()).enumerate() {
                    let xi = t.sqrt();
                    let x = x_of_xi(params, xi);
                    // dx = dt / (2 xi xi'(x)), and the integrand is even: factor 2 cancels
                    scale[i] = w * t.exp() * t.powf(-alpha) / (xi * dxi_dx(params, x));
                    for &n in &states {
                        psi[n][i] = wavefunction(params, StateIndex::new(family, n), x)?;
                    }
                }
                for &m in &states {
                    for &n in &states {
                        g[m][n] = (0..rule.len())
                            .map(|i| scale[i] * psi[m][i] * psi[n][i])
                            .sum();
                    }
                }
                if parity == 0 {
                    // opposite-parity products summed at +x and -x
                    for m in (0..dim).step_by(2) {
                        for n in (1..dim).step_by(2) {
                            let mut acc = 0.0;
                            for (i, &t) in rule.nodes().iter().enumerate() {
                                let x = x_of_xi(params, t.sqrt());
                                let sm = StateIndex::new(family, m);
                                let sn = StateIndex::new(family, n);
                                let plus =
                                    wavefunction(params, sm, x)? * wavefunction(params, sn, x)?;
                                let minus =
                                    wavefunction(params, sm, -x)? * wavefunction(params, sn, -x)?;
                                acc += 0.5 * scale[i] * (plus + minus);
                            }
                            g[m][n] = acc;
                            g[n][m] = acc;
                        }
                    }
                }
            }
        }
    }
    Ok(g)
}

/// Largest deviation of the Gram matrix from the identity.
pub fn suite_orthonormality(
    params: &OscillatorParams,
    family: Family,
    n_max: usize,
    n_quad: usize,
    tol: f64,
) -> VerificationReport {
    let mut r = VerificationReport::new("orthonormality");
    let prov = match family {
        Family::CanonicalDeformed => PROVENANCE_HERMITE,
        Family::Parabose => PROVENANCE_LAGUERRE,
    };
    let g = match gram_matrix(params, family, n_max, n_quad) {
        Ok(g) => g,
        Err(e) => {
            r.fail("gram matrix", tol, prov, e.to_string());
            return r;
        }
    };
    let mut same = 0.0f64;
    let mut cross = 0.0f64;
    for (m, row) in g.iter().enumerate() {
        for (n, &v) in row.iter().enumerate() {
            let dev = (v - if m == n { 1.0 } else { 0.0 }).abs();
            if family == Family::Parabose && (m + n) % 2 == 1 {
                cross = cross.max(dev);
            } else {
                same = same.max(dev);
            }
        }
    }
    r.check(
        format!("max |G - I|, n <= {n_max}, {n_quad} nodes"),
        same,
        tol,
        prov,
    );
    if family == Family::Parabose {
        r.check(
            "max |G| across parities",
            cross,
            1e-14,
            "opposite parities are orthogonal by symmetry",
        );
    }
    r
}
