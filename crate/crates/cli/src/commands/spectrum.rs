//! `rmprop spectrum` — degeneracy table (l, level_index, n, eigenvalue,
//! spread) from the Richardson-extrapolated S-equation solves.

use super::{resolve_common, CommandOutput};
use crate::cli::SpectrumArgs;
use crate::config::{config_echo, ConfigFile};
use crate::emit::{fmt_json_f64, Table, Value};
use crate::error::CliError;
use rmprop_core::degeneracy_report_extrapolated_with_depth;

pub fn run(args: SpectrumArgs) -> Result<CommandOutput, CliError> {
    let mut file = ConfigFile::load(args.common.config.as_deref())?;
    let (params, output) = resolve_common(&args.common, &mut file)?;
    let k_max = file.resolve("k-max", args.k_max, 3u32)?;
    let n_points = file.resolve("n-points", args.n_points, 800usize)?;
    let n_levels = file.resolve("n-levels", args.n_levels, (k_max + 1) as usize)?;
    let spread_tol = file.resolve("spread-tol", args.spread_tol, 1e-3)?;
    file.finish()?;

    if k_max < 1 {
        return Err(CliError::config("k-max must be at least 1"));
    }
    if n_levels < (k_max + 1) as usize {
        return Err(CliError::config(format!(
            "n-levels = {n_levels} too shallow to align K up to {k_max} (need at least {})",
            k_max + 1
        )));
    }
    if n_levels > n_points / 4 {
        return Err(CliError::config(format!(
            "n-levels = {n_levels} exceeds n_points/4 = {} (discretization trustworthy only for low levels)",
            n_points / 4
        )));
    }
    if spread_tol.is_nan() || spread_tol <= 0.0 {
        return Err(CliError::config("spread-tol must be positive"));
    }

    let p = params.build()?;
    let report =
        degeneracy_report_extrapolated_with_depth(&p, k_max, n_points, n_levels as u32)?;

    let mut table = Table::new(vec!["l", "level_index", "n", "eigenvalue", "spread"]);
    for row in &report.rows {
        let spread = report.spread_for(row.n).unwrap_or(0.0);
        table.push(vec![
            Value::Int(row.l as i64),
            Value::Int(row.level_index as i64),
            Value::Int(row.n as i64),
            Value::Float(row.eigenvalue),
            Value::Float(spread),
        ]);
    }

    let max_spread = report.max_spread();
    let diagnostics = vec![format!("max relative spread = {max_spread:e}")];
    let post = if max_spread >= spread_tol {
        Some(CliError::Verification(format!(
            "degeneracy spread {max_spread:e} reached the threshold {spread_tol:e}"
        )))
    } else {
        None
    };

    let options = format!(
        "{{\"k_max\":{},\"n_points\":{},\"n_levels\":{},\"spread_tol\":{}}}",
        k_max,
        n_points,
        n_levels,
        fmt_json_f64(spread_tol)
    );
    Ok(CommandOutput {
        echo: config_echo("spectrum", &params, &output, &[("options", options)]),
        table,
        output,
        diagnostics,
        post,
    })
}
