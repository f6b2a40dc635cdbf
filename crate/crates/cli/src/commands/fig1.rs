//! `rmprop fig1` — long-format propagator surface Π(q; κ) over a
//! curvature sweep, Northern closed form (or its Southern mirror).

use super::{parse_hemisphere, resolve_common, CommandOutput};
use crate::cli::Fig1Args;
use crate::config::{config_echo, parse_list, ConfigFile};
use crate::emit::{fmt_json_f64, Table, Value};
use crate::error::CliError;
use rmprop_core::{closed_form_propagator, Hemisphere};
use std::f64::consts::PI;

pub fn run(args: Fig1Args) -> Result<CommandOutput, CliError> {
    let mut file = ConfigFile::load(args.common.config.as_deref())?;
    let (params, output) = resolve_common(&args.common, &mut file)?;
    let kappa_list_raw = file.resolve_opt("kappa-list", args.kappa_list.clone())?;
    let q_min = file.resolve("q-min", args.q_min, 0.0)?;
    let q_max = file.resolve("q-max", args.q_max, 8.0 * PI)?;
    let q_steps = file.resolve("q-steps", args.q_steps, 101usize)?;
    let hemisphere_raw = file.resolve(
        "hemisphere",
        args.hemisphere.clone(),
        "north".to_string(),
    )?;
    file.finish()?;

    let hemisphere = parse_hemisphere(&hemisphere_raw)?;
    // --kappa narrows the sweep to a single curvature when no explicit
    // list is given
    let kappas: Vec<f64> = match kappa_list_raw.as_deref() {
        Some(raw) => parse_list(raw, "kappa-list")?,
        None if args.common.kappa.is_some() => vec![params.kappa],
        None => vec![0.25, 0.5, 1.0, 2.0, 4.0],
    };
    if kappas.is_empty() || kappas.iter().any(|k| k.is_nan() || *k <= 0.0 || !k.is_finite()) {
        return Err(CliError::config(
            "kappa-list: curvatures must be positive and finite",
        ));
    }
    if q_steps == 0 {
        return Err(CliError::config("q-steps must be at least 1"));
    }
    if !(q_min >= 0.0 && q_max >= q_min) {
        return Err(CliError::config(format!(
            "q-min/q-max: need 0 <= q_min <= q_max, got [{q_min}, {q_max}]"
        )));
    }

    let sign = match hemisphere {
        Hemisphere::Northern => 1.0,
        Hemisphere::Southern => -1.0,
    };
    let mut table = Table::new(vec!["kappa", "q", "Pi"]);
    for &kappa in &kappas {
        let mut cfg = params;
        cfg.kappa = kappa;
        let p = cfg.build()?;
        for i in 0..q_steps {
            let q = if q_steps == 1 {
                q_min
            } else {
                q_min + (q_max - q_min) * i as f64 / (q_steps - 1) as f64
            };
            let pi_value = sign * closed_form_propagator(q, &p)?;
            table.push(vec![
                Value::Float(kappa),
                Value::Float(q),
                Value::Float(pi_value),
            ]);
        }
    }

    let kappa_json: Vec<String> = kappas.iter().map(|k| fmt_json_f64(*k)).collect();
    let options = format!(
        "{{\"kappa_list\":[{}],\"q_min\":{},\"q_max\":{},\"q_steps\":{},\"hemisphere\":\"{}\"}}",
        kappa_json.join(","),
        fmt_json_f64(q_min),
        fmt_json_f64(q_max),
        q_steps,
        hemisphere_raw
    );
    Ok(CommandOutput {
        echo: config_echo("fig1", &params, &output, &[("options", options)]),
        table,
        output,
        diagnostics: Vec::new(),
        post: None,
    })
}
