use crate::dd::Dd;
use crate::error::{Error, Result};

// B_{2k} / (2k (2k-1)) for k = 1..8
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

fn half_ln_2pi() -> Dd {
    Dd::from_parts(0.918_938_533_204_672_8, -3.878_294_158_067_241_4e-17)
}

/// `ln Gamma(x)` for `x > 0`.
///
/// Arguments below 10 are shifted up with the recursion; the Stirling series
/// is then summed with its leading terms in double-double so that the result
/// stays accurate to a few ulps even where `ln Gamma` is large.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::ParameterDomain(format!(
            "ln_gamma needs a finite positive argument, got {x}"
        )));
    }
    let mut z = Dd::from(x);
    let mut shift = Dd::ONE;
    while z.hi() < 10.0 {
        shift *= z;
        z += Dd::ONE;
    }
    let zf = z.to_f64();
    let inv2 = 1.0 / (zf * zf);
    let mut series = 0.0;
    let mut p = 1.0 / zf;
    for c in STIRLING {
        series += c * p;
        p *= inv2;
    }
    let main = (z - Dd::from(0.5)) * z.ln() - z + half_ln_2pi() + Dd::from(series) - shift.ln();
    Ok(main.to_f64())
}
