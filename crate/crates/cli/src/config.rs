use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pdmosc_core::{Family, OscillatorParams};

use crate::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "pdmosc",
    version,
    about = "Position-dependent-mass quantum oscillators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Energy levels, optionally compared with the finite-difference oracle.
    Spectrum(SpectrumArgs),
    /// Samples of a stationary state.
    Wavefunction(WavefunctionArgs),
    /// Samples of the potential and the mass law.
    Potential(PotentialArgs),
    /// The nine potential/level panels for a in {-0.6, 0, 2} and gamma in {0.5, 1, 1.5}.
    Figure1(FigureArgs),
    /// Run verification suites; exit status 0 only if every case passes.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// Canonical for gamma = 1/2, parabose otherwise.
    Auto,
    Canonical,
    Parabose,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Orthonormality,
    Residual,
    Algebra,
    Spectrum,
    Limits,
    Ladder,
}

#[derive(Args, Debug, Clone)]
pub struct PhysArgs {
    /// Deformation parameter, a > -1.
    #[arg(long = "a", default_value_t = 0.0, allow_negative_numbers = true)]
    pub a: f64,
    /// Parabose parameter, gamma >= 1/2.
    #[arg(long, default_value_t = 0.5)]
    pub gamma: f64,
    #[arg(long, default_value_t = 1.0)]
    pub m0: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    #[arg(long, value_enum, default_value_t = FamilyArg::Auto)]
    pub family: FamilyArg,
}

impl PhysArgs {
    pub fn params(&self) -> Result<OscillatorParams, CliError> {
        if !(self.a > -1.0) {
            return Err(CliError::Config(format!(
                "--a must be greater than -1 (got {}); the mass law degenerates at a = -1",
                self.a
            )));
        }
        if !(self.gamma >= 0.5) {
            return Err(CliError::Config(format!(
                "--gamma must be at least 0.5 (got {}); use 0.5 for the canonical family",
                self.gamma
            )));
        }
        OscillatorParams::new(self.m0, self.omega, self.hbar, self.a, self.gamma)
            .map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn family(&self) -> Family {
        match self.family {
            FamilyArg::Canonical => Family::CanonicalDeformed,
            FamilyArg::Parabose => Family::Parabose,
            FamilyArg::Auto if self.gamma == 0.5 => Family::CanonicalDeformed,
            FamilyArg::Auto => Family::Parabose,
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct OutArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file (directory for figure1); stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct SampleArgs {
    #[arg(long, default_value_t = -5.0, allow_negative_numbers = true)]
    pub xmin: f64,
    #[arg(long, default_value_t = 5.0, allow_negative_numbers = true)]
    pub xmax: f64,
    #[arg(long, default_value_t = 201)]
    pub samples: usize,
}

impl SampleArgs {
    pub fn grid(&self) -> Result<Vec<f64>, CliError> {
        if !(self.xmin < self.xmax) || !self.xmin.is_finite() || !self.xmax.is_finite() {
            return Err(CliError::Config(format!(
                "--xmin ({}) must be below --xmax ({})",
                self.xmin, self.xmax
            )));
        }
        if self.samples < 2 {
            return Err(CliError::Config("--samples must be at least 2".into()));
        }
        let step = (self.xmax - self.xmin) / (self.samples - 1) as f64;
        Ok((0..self.samples)
            .map(|i| {
                if i + 1 == self.samples {
                    self.xmax
                } else {
                    self.xmin + step * i as f64
                }
            })
            .collect())
    }
}

#[derive(Args, Debug, Clone)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub phys: PhysArgs,
    #[arg(long, default_value_t = 5)]
    pub levels: usize,
    /// Add oracle eigenvalues and their deviations.
    #[arg(long)]
    pub oracle: bool,
    /// Oracle tolerance (relative).
    #[arg(long)]
    pub tol: Option<f64>,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug, Clone)]
pub struct WavefunctionArgs {
    #[command(flatten)]
    pub phys: PhysArgs,
    #[arg(long, default_value_t = 0)]
    pub n: usize,
    #[command(flatten)]
    pub sample: SampleArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug, Clone)]
pub struct PotentialArgs {
    #[command(flatten)]
    pub phys: PhysArgs,
    #[command(flatten)]
    pub sample: SampleArgs,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Args, Debug, Clone)]
pub struct FigureArgs {
    #[arg(long, default_value_t = 1.0)]
    pub m0: f64,
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,
    #[arg(long, default_value_t = 1.0)]
    pub hbar: f64,
    /// Levels drawn per panel (default: all below the ceiling).
    #[arg(long)]
    pub levels: Option<usize>,
    /// Ceiling above the ground state, in units of (a+1) hbar omega.
    #[arg(long, default_value_t = 8.0)]
    pub ceiling: f64,
    /// Padding of the x-range beyond the outermost turning point.
    #[arg(long, default_value_t = 0.15)]
    pub pad: f64,
    /// Potential samples per panel.
    #[arg(long, default_value_t = 401)]
    pub samples: usize,
    /// csv or json data files; svg writes CSV data plus one SVG per panel.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output directory.
    #[arg(long, default_value = "figure1")]
    pub out: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub phys: PhysArgs,
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    /// Override the tolerance of the selected suites.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Highest state index (default 8; 12 for orthonormality).
    #[arg(long)]
    pub n: Option<usize>,
    /// Levels per oracle sector.
    #[arg(long)]
    pub levels: Option<usize>,
    /// Jitter sample points reproducibly.
    #[arg(long)]
    pub seed: Option<u64>,
    #[command(flatten)]
    pub out: OutArgs,
}
