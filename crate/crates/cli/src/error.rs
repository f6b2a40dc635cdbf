//! CLI error with the exit-code contract:
//! 2 = config error, 3 = domain error, 4 = verification/threshold failure,
//! 5 = eigen-solver failure. I/O trouble exits 1.

use rmprop_core::Error as CoreError;
use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Domain(String),
    Verification(String),
    Solver(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Config(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Verification(_) => 4,
            CliError::Solver(_) => 5,
        }
    }

    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        CliError::Domain(msg.into())
    }

    fn with_prefix(self, prefix: &str) -> Self {
        match self {
            CliError::Config(m) => CliError::Config(format!("{prefix}{m}")),
            CliError::Domain(m) => CliError::Domain(format!("{prefix}{m}")),
            CliError::Verification(m) => CliError::Verification(format!("{prefix}{m}")),
            CliError::Solver(m) => CliError::Solver(format!("{prefix}{m}")),
            CliError::Io(m) => CliError::Io(format!("{prefix}{m}")),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m)
            | CliError::Domain(m)
            | CliError::Verification(m)
            | CliError::Solver(m)
            | CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::ChiEndpoint { .. }
            | CoreError::ChiOutsideChart { .. }
            | CoreError::AngleOutsideRange { .. }
            | CoreError::RadiusExceedsSphere { .. } => CliError::Domain(e.to_string()),
            CoreError::EigenConvergence { .. } => CliError::Solver(e.to_string()),
            CoreError::QuadratureTolerance { .. } => CliError::Verification(e.to_string()),
            CoreError::PropagatorNode { q, source } => {
                CliError::from(*source).with_prefix(&format!("at q = {q}: "))
            }
            _ => CliError::Config(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
