//! `rmprop potential` — position-space table (chi, V, cot_term, barrier).

use super::{resolve_common, CommandOutput};
use crate::cli::PotentialArgs;
use crate::config::{config_echo, ConfigFile};
use crate::emit::{fmt_json_f64, Table, Value};
use crate::error::CliError;
use rmprop_core::{centrifugal_barrier, cot_term, rosen_morse};
use std::f64::consts::PI;

pub fn run(args: PotentialArgs) -> Result<CommandOutput, CliError> {
    let mut file = ConfigFile::load(args.common.config.as_deref())?;
    let (params, output) = resolve_common(&args.common, &mut file)?;
    let chi_min = file.resolve("chi-min", args.chi_min, PI / 64.0)?;
    let chi_max = file.resolve("chi-max", args.chi_max, 63.0 * PI / 64.0)?;
    let chi_steps = file.resolve("chi-steps", args.chi_steps, 63usize)?;
    file.finish()?;

    if chi_steps == 0 {
        return Err(CliError::config("chi-steps must be at least 1"));
    }
    if !(chi_min > 0.0 && chi_max < PI && chi_min <= chi_max) {
        return Err(CliError::domain(format!(
            "chi endpoint: sampled range [{chi_min}, {chi_max}] must lie strictly inside (0, pi)"
        )));
    }

    let p = params.build()?;
    let mut table = Table::new(vec!["chi", "V", "cot_term", "barrier"]);
    for i in 0..chi_steps {
        let chi = if chi_steps == 1 {
            chi_min
        } else {
            chi_min + (chi_max - chi_min) * i as f64 / (chi_steps - 1) as f64
        };
        table.push(vec![
            Value::Float(chi),
            Value::Float(rosen_morse(chi, &p)?),
            Value::Float(cot_term(chi, &p)?),
            Value::Float(centrifugal_barrier(chi, &p)?),
        ]);
    }

    let options = format!(
        "{{\"chi_min\":{},\"chi_max\":{},\"chi_steps\":{}}}",
        fmt_json_f64(chi_min),
        fmt_json_f64(chi_max),
        chi_steps
    );
    Ok(CommandOutput {
        echo: config_echo("potential", &params, &output, &[("options", options)]),
        table,
        output,
        diagnostics: Vec::new(),
        post: None,
    })
}
