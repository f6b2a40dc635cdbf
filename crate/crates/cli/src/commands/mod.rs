//! One module per subcommand.

pub mod fig1;
pub mod harmonic;
pub mod potential;
pub mod propagator;
pub mod spectrum;

use crate::cli::CommonArgs;
use crate::config::{ConfigFile, Format, OutputCfg, ParamsCfg};
use crate::emit::Table;
use crate::error::CliError;

/// Everything a command hands back to `main` for emission.
pub struct CommandOutput {
    /// Serialized JSON object echoing the resolved configuration.
    pub echo: String,
    pub table: Table,
    pub output: OutputCfg,
    /// Lines for stderr (never stdout: stdout carries data only).
    pub diagnostics: Vec<String>,
    /// Threshold failure to report after the table has been emitted.
    pub post: Option<CliError>,
}

/// Resolve the options shared by every subcommand.
pub fn resolve_common(
    args: &CommonArgs,
    file: &mut ConfigFile,
) -> Result<(ParamsCfg, OutputCfg), CliError> {
    let params = ParamsCfg {
        g: file.resolve("G", args.g, 1.0)?,
        kappa: file.resolve("kappa", args.kappa, 1.0)?,
        hbar: file.resolve("hbar", args.hbar, 1.0)?,
        mu: file.resolve("mu", args.mu, 0.5)?,
        l: file.resolve("l", args.l, 0)?,
    };
    let cli_format = args
        .format
        .as_deref()
        .map(|s| s.parse::<Format>().map_err(CliError::Config))
        .transpose()?;
    let format = file.resolve("format", cli_format, Format::Csv)?;
    let out = file.resolve_opt("out", args.out.clone())?;
    Ok((params, OutputCfg { format, out }))
}

/// Validate a hemisphere token.
pub fn parse_hemisphere(raw: &str) -> Result<rmprop_core::Hemisphere, CliError> {
    match raw {
        "north" => Ok(rmprop_core::Hemisphere::Northern),
        "south" => Ok(rmprop_core::Hemisphere::Southern),
        other => Err(CliError::config(format!(
            "hemisphere: expected north or south, got `{other}`"
        ))),
    }
}
