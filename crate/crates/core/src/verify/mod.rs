//! Verification suites turning closed-form claims into pass/fail reports.
//!
//! Every suite takes its tolerances as arguments and reports failures as
//! cases instead of returning early, so one failing claim never hides others.

mod algebra;
mod ladder;
mod limits;
mod orthonormality;
mod report;
mod residual;
mod sampling;
mod spectrum;

pub use algebra::suite_algebra;
pub use ladder::{suite_ladder, LadderTolerances};
pub use limits::{suite_limits, LimitTolerances};
pub use orthonormality::{gram_matrix, suite_orthonormality};
pub use report::{Case, Measurement, VerificationReport};
pub use residual::suite_schrodinger_residual;
pub use sampling::Sampling;
pub use spectrum::{
    suite_spectrum_parabose, suite_spectrum_vs_oracle, CANONICAL_ORACLE_FLOOR,
    PARABOSE_ORACLE_FLOOR,
};
