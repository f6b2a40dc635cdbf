//! `rmprop harmonic` — harmonicity residuals of cot chi and observed
//! convergence orders across a sequence of grids.

use super::{resolve_common, CommandOutput};
use crate::cli::HarmonicArgs;
use crate::config::{config_echo, parse_list, ConfigFile};
use crate::emit::{fmt_json_f64, Table, Value};
use crate::error::CliError;
use rmprop_core::richardson::observed_order;
use rmprop_core::{harmonicity_residual_in, ChiGrid};
use std::f64::consts::PI;

/// Convergence-order acceptance threshold for the final grid pair.
const MIN_FINAL_ORDER: f64 = 1.9;

pub fn run(args: HarmonicArgs) -> Result<CommandOutput, CliError> {
    let mut file = ConfigFile::load(args.common.config.as_deref())?;
    let (params, output) = resolve_common(&args.common, &mut file)?;
    let grids_raw = file.resolve("grids", args.grids.clone(), "200,400,800".to_string())?;
    let window_lo = file.resolve("window-lo", args.window_lo, 0.1)?;
    let window_hi = file.resolve("window-hi", args.window_hi, PI - 0.1)?;
    file.finish()?;

    let grids: Vec<usize> = parse_list(&grids_raw, "grids")?;
    if grids.len() < 2 {
        return Err(CliError::config(
            "grids: need at least two grid sizes to observe a convergence order",
        ));
    }
    if grids.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CliError::config("grids: sizes must be strictly increasing"));
    }
    if !(window_lo > 0.0 && window_lo < window_hi && window_hi < PI) {
        return Err(CliError::config(format!(
            "window-lo/window-hi: need 0 < lo < hi < pi, got [{window_lo}, {window_hi}]"
        )));
    }

    let mut table = Table::new(vec!["n_points", "residual", "observed_order"]);
    let mut residuals: Vec<(usize, f64, f64)> = Vec::new(); // (n, h, residual)
    for &n in &grids {
        let grid = ChiGrid::<f64>::new(n)?;
        let residual = harmonicity_residual_in(&grid, window_lo, window_hi)?;
        residuals.push((n, grid.h(), residual));
    }
    let mut final_order = f64::NAN;
    for (i, &(n, h, residual)) in residuals.iter().enumerate() {
        let order = if i == 0 {
            Value::Missing
        } else {
            let (_, h_prev, r_prev) = residuals[i - 1];
            let order = observed_order(r_prev, h_prev, residual, h);
            final_order = order;
            Value::Float(order)
        };
        table.push(vec![Value::Int(n as i64), Value::Float(residual), order]);
    }

    let diagnostics = vec![format!("final observed order = {final_order}")];
    let post = if final_order >= MIN_FINAL_ORDER {
        None
    } else {
        Some(CliError::Verification(format!(
            "final observed order {final_order} below {MIN_FINAL_ORDER}"
        )))
    };

    let grids_json: Vec<String> = grids.iter().map(|n| n.to_string()).collect();
    let options = format!(
        "{{\"grids\":[{}],\"window_lo\":{},\"window_hi\":{}}}",
        grids_json.join(","),
        fmt_json_f64(window_lo),
        fmt_json_f64(window_hi)
    );
    Ok(CommandOutput {
        echo: config_echo("harmonic", &params, &output, &[("options", options)]),
        table,
        output,
        diagnostics,
        post,
    })
}
