//! Config-file loading and flag/default resolution.
//!
//! Precedence: command-line flags override the optional `key = value`
//! config file, which overrides built-in defaults. No environment
//! variables are consulted, so a resolved run is a pure function of its
//! invocation. Unknown keys in the config file are rejected with the
//! offending key named.

use crate::emit::{fmt_json_f64, json_escape};
use crate::error::CliError;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rmprop_core::{Curvature, PhysicalParams, QuadratureConfig};

/// Flat `key = value` file. Blank lines and `#` comments are ignored.
pub struct ConfigFile {
    entries: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        if let Some(path) = path {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::config(format!("config file {}: {e}", path.display()))
            })?;
            for (lineno, raw) in text.lines().enumerate() {
                let line = raw.split('#').next().unwrap_or("").trim();
                if line.is_empty() {
                    continue;
                }
                let Some((key, value)) = line.split_once('=') else {
                    return Err(CliError::config(format!(
                        "config file {}:{}: expected `key = value`, got `{raw}`",
                        path.display(),
                        lineno + 1
                    )));
                };
                entries.insert(key.trim().to_string(), value.trim().to_string());
            }
        }
        Ok(Self { entries })
    }

    /// Resolve one option: CLI value, else config-file value, else default.
    pub fn resolve<T: FromStr + Clone>(
        &mut self,
        key: &str,
        cli: Option<T>,
        default: T,
    ) -> Result<T, CliError> {
        let file_value = self.entries.remove(key);
        if let Some(v) = cli {
            return Ok(v);
        }
        match file_value {
            Some(raw) => raw
                .parse()
                .map_err(|_| CliError::config(format!("config key {key}: cannot parse `{raw}`"))),
            None => Ok(default),
        }
    }

    /// Same as [`Self::resolve`] but with no default (stays `None`).
    pub fn resolve_opt<T: FromStr>(
        &mut self,
        key: &str,
        cli: Option<T>,
    ) -> Result<Option<T>, CliError> {
        let file_value = self.entries.remove(key);
        if let Some(v) = cli {
            return Ok(Some(v));
        }
        match file_value {
            Some(raw) => raw
                .parse()
                .map(Some)
                .map_err(|_| CliError::config(format!("config key {key}: cannot parse `{raw}`"))),
            None => Ok(None),
        }
    }

    /// Call after all keys were consumed; leftovers are typos.
    pub fn finish(self) -> Result<(), CliError> {
        if let Some(key) = self.entries.keys().next() {
            return Err(CliError::config(format!("unknown config key `{key}`")));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unsupported format `{other}`")),
        }
    }
}

impl Format {
    pub fn as_str(&self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

/// Resolved physical parameters (natural-unit defaults).
#[derive(Debug, Clone, Copy)]
pub struct ParamsCfg {
    pub g: f64,
    pub kappa: f64,
    pub hbar: f64,
    pub mu: f64,
    pub l: u32,
}

impl ParamsCfg {
    pub fn build(&self) -> Result<PhysicalParams<f64>, CliError> {
        let curvature = Curvature::new(self.kappa)?;
        Ok(PhysicalParams::new(
            self.hbar, self.mu, self.g, curvature, self.l,
        )?)
    }

    pub fn echo(&self) -> String {
        format!(
            "{{\"G\":{},\"kappa\":{},\"hbar\":{},\"mu\":{},\"l\":{}}}",
            fmt_json_f64(self.g),
            fmt_json_f64(self.kappa),
            fmt_json_f64(self.hbar),
            fmt_json_f64(self.mu),
            self.l
        )
    }
}

/// Resolved quadrature knobs.
#[derive(Debug, Clone, Copy)]
pub struct QuadCfg {
    pub base_panels: usize,
    pub panels_per_wavelength: usize,
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl QuadCfg {
    pub fn build(&self) -> Result<QuadratureConfig<f64>, CliError> {
        Ok(QuadratureConfig::new(
            self.base_panels,
            self.panels_per_wavelength,
            self.abs_tol,
            self.rel_tol,
        )?)
    }

    pub fn echo(&self) -> String {
        format!(
            "{{\"base_panels\":{},\"panels_per_wavelength\":{},\"abs_tol\":{},\"rel_tol\":{}}}",
            self.base_panels,
            self.panels_per_wavelength,
            fmt_json_f64(self.abs_tol),
            fmt_json_f64(self.rel_tol)
        )
    }
}

/// Resolved output target.
#[derive(Debug, Clone)]
pub struct OutputCfg {
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl OutputCfg {
    pub fn echo(&self) -> String {
        let out = match &self.out {
            Some(p) => format!("\"{}\"", json_escape(&p.to_string_lossy())),
            None => "null".to_string(),
        };
        format!("{{\"format\":\"{}\",\"out\":{}}}", self.format.as_str(), out)
    }
}

/// Assemble the full config echo object for a command.
pub fn config_echo(command: &str, params: &ParamsCfg, output: &OutputCfg, sections: &[(&str, String)]) -> String {
    let mut echo = format!(
        "{{\"command\":\"{}\",\"params\":{},\"output\":{}",
        json_escape(command),
        params.echo(),
        output.echo()
    );
    for (name, body) in sections {
        let _ = write!(echo, ",\"{}\":{}", json_escape(name), body);
    }
    echo.push('}');
    echo
}

/// Parse a comma-separated list, naming the field on failure.
pub fn parse_list<T: FromStr>(raw: &str, field: &str) -> Result<Vec<T>, CliError> {
    raw.split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|_| CliError::config(format!("{field}: cannot parse `{}`", tok.trim())))
        })
        .collect()
}
