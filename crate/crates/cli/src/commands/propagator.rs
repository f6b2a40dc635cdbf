//! `rmprop propagator` — closed-form propagator over a momentum grid,
//! optionally verified against the hemisphere quadrature.

use super::{parse_hemisphere, resolve_common, CommandOutput};
use crate::cli::PropagatorArgs;
use crate::config::{config_echo, ConfigFile, QuadCfg};
use crate::emit::{fmt_json_f64, Table, Value};
use crate::error::CliError;
use rmprop_core::{closed_form_propagator, closed_form_shape, hemisphere_fourier, Hemisphere};
use std::f64::consts::PI;

pub fn run(args: PropagatorArgs) -> Result<CommandOutput, CliError> {
    let mut file = ConfigFile::load(args.common.config.as_deref())?;
    let (params, output) = resolve_common(&args.common, &mut file)?;
    let q_min = file.resolve("q-min", args.q_min, 0.0)?;
    let q_max = file.resolve("q-max", args.q_max, 8.0 * PI)?;
    let q_steps = file.resolve("q-steps", args.q_steps, 101usize)?;
    let verify = file.resolve(
        "verify",
        if args.verify { Some(true) } else { None },
        false,
    )?;
    let hemisphere = file.resolve(
        "hemisphere",
        args.hemisphere.clone(),
        "north".to_string(),
    )?;
    parse_hemisphere(&hemisphere)?;
    let quad = QuadCfg {
        base_panels: file.resolve("base-panels", args.base_panels, 16)?,
        panels_per_wavelength: file.resolve(
            "panels-per-wavelength",
            args.panels_per_wavelength,
            16,
        )?,
        abs_tol: file.resolve("abs-tol", args.abs_tol, 1e-8)?,
        rel_tol: file.resolve("rel-tol", args.rel_tol, 1e-7)?,
    };
    file.finish()?;

    if q_steps == 0 {
        return Err(CliError::config("q-steps must be at least 1"));
    }
    if !(q_min >= 0.0 && q_max >= q_min) {
        return Err(CliError::config(format!(
            "q-min/q-max: need 0 <= q_min <= q_max, got [{q_min}, {q_max}]"
        )));
    }

    let p = params.build()?;
    let cfg = quad.build()?;

    let columns = if verify {
        vec![
            "q", "x", "Pi_closed", "Pi_over_c", "Pi_north", "Pi_south", "abs_err",
        ]
    } else {
        vec!["q", "x", "Pi_closed", "Pi_over_c"]
    };
    let mut table = Table::new(columns);

    let mut max_abs_err = 0.0f64;
    let mut max_mirror = 0.0f64;
    let mut violation = false;
    for i in 0..q_steps {
        let q = if q_steps == 1 {
            q_min
        } else {
            q_min + (q_max - q_min) * i as f64 / (q_steps - 1) as f64
        };
        let x = p.dimensionless_momentum(q);
        let closed = closed_form_propagator(q, &p)?;
        let mut row = vec![
            Value::Float(q),
            Value::Float(x),
            Value::Float(closed),
            Value::Float(closed_form_shape(x)),
        ];
        if verify {
            let north = hemisphere_fourier(q, &p, Hemisphere::Northern, &cfg)?;
            let south = hemisphere_fourier(q, &p, Hemisphere::Southern, &cfg)?;
            let abs_err = (north - closed).abs();
            max_abs_err = max_abs_err.max(abs_err);
            max_mirror = max_mirror.max((north + south).abs());
            if abs_err > quad.abs_tol.max(quad.rel_tol * closed.abs()) {
                violation = true;
            }
            if (north + south).abs() > 2.0 * quad.abs_tol {
                violation = true;
            }
            row.push(Value::Float(north));
            row.push(Value::Float(south));
            row.push(Value::Float(abs_err));
        }
        table.push(row);
    }

    let mut diagnostics = Vec::new();
    let mut post = None;
    if verify {
        diagnostics.push(format!("max abs_err = {max_abs_err:e}"));
        diagnostics.push(format!("max |north + south| = {max_mirror:e}"));
        if violation {
            post = Some(CliError::Verification(format!(
                "quadrature verification exceeded tolerance: max abs_err = {max_abs_err:e}"
            )));
        }
    }

    let options = format!(
        "{{\"q_min\":{},\"q_max\":{},\"q_steps\":{},\"verify\":{},\"hemisphere\":\"{}\"}}",
        fmt_json_f64(q_min),
        fmt_json_f64(q_max),
        q_steps,
        verify,
        hemisphere
    );
    let sections = vec![("quad", quad.echo()), ("options", options)];
    Ok(CommandOutput {
        echo: config_echo("propagator", &params, &output, &sections),
        table,
        output,
        diagnostics,
        post,
    })
}
