//! Command-line front end: spectra, wavefunction and potential samples,
//! figure panels and verification reports.

pub mod commands;
pub mod config;
pub mod figure;
pub mod output;

use std::io;

use config::{Cli, Command};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("cannot write {0}: {1}")]
    Output(String, io::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Core(#[from] pdmosc_core::Error),
}

impl CliError {
    /// 2 for configuration and output problems, 1 for computation failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(_) => 1,
            _ => 2,
        }
    }
}

/// Runs one command; `Ok(false)` means a verification case failed.
pub fn run(cli: &Cli) -> Result<bool, CliError> {
    match &cli.command {
        Command::Spectrum(a) => commands::cmd_spectrum(a),
        Command::Wavefunction(a) => commands::cmd_wavefunction(a),
        Command::Potential(a) => commands::cmd_potential(a),
        Command::Figure1(a) => figure::cmd_figure1(a),
        Command::Verify(a) => commands::cmd_verify(a),
    }
}
