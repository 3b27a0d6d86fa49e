//! Subcommand implementations.

use std::fs;
use std::io::Write;

use accrete_core::calibrate::{fit_power_law, MassSample};
use accrete_core::implicit::{integrate_trajectory, TrajectoryRequest};
use accrete_core::scenarios::{preset, Preset};
use accrete_core::{closed, DragLaw, Horizon, Method, Scenario, SolutionSeries, SolverConfig};
use serde::Deserialize;

use crate::output;
use crate::{CliError, CompareArgs, FitArgs, MetricsArgs, ScenarioArgs, SimulateArgs};

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn build_scenario(args: &ScenarioArgs) -> Result<Scenario, CliError> {
    let v0 = args
        .v0
        .ok_or_else(|| usage("--v0 is required (initial velocity in m/s)"))?;
    let inline = [args.m0, args.lambda, args.alpha];
    match (&args.preset, inline.iter().any(Option::is_some)) {
        (Some(_), true) => Err(usage(
            "give either --preset or an inline --m0/--lambda/--alpha scenario, not both",
        )),
        (Some(name), false) => {
            let preset_name: Preset = name.parse()?;
            Ok(preset(preset_name, v0)?)
        }
        (None, _) => {
            let (Some(m0), Some(lambda), Some(alpha)) = (args.m0, args.lambda, args.alpha) else {
                return Err(usage(
                    "an inline scenario needs all of --m0, --lambda, and --alpha \
                     (or use --preset)",
                ));
            };
            let label = args.label.clone().unwrap_or_else(|| "custom".into());
            Ok(Scenario::new(
                m0,
                v0,
                DragLaw::power_law(lambda, alpha)?,
                label,
            )?)
        }
    }
}

/// `simulate` accepts the same keys from a JSON config file; explicit flags
/// win over file values.
#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    preset: Option<String>,
    m0: Option<f64>,
    lambda: Option<f64>,
    alpha: Option<f64>,
    v0: Option<f64>,
    label: Option<String>,
    t_end: Option<f64>,
    x_end: Option<f64>,
    samples: Option<usize>,
    method: Option<String>,
    format: Option<String>,
    output: Option<String>,
}

fn merge_config(args: SimulateArgs) -> Result<SimulateArgs, CliError> {
    let Some(path) = &args.config else {
        return Ok(args);
    };
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read config file {path}: {e}")))?;
    let file: FileConfig =
        serde_json::from_str(&text).map_err(|e| usage(format!("config file {path}: {e}")))?;
    Ok(SimulateArgs {
        scenario: ScenarioArgs {
            preset: args.scenario.preset.or(file.preset),
            m0: args.scenario.m0.or(file.m0),
            lambda: args.scenario.lambda.or(file.lambda),
            alpha: args.scenario.alpha.or(file.alpha),
            v0: args.scenario.v0.or(file.v0),
            label: args.scenario.label.or(file.label),
        },
        t_end: args.t_end.or(file.t_end),
        x_end: args.x_end.or(file.x_end),
        samples: args.samples.or(file.samples),
        method: args.method.or(file.method),
        format: args.format.or(file.format),
        output: args.output.or(file.output),
        config: args.config,
    })
}

fn emit(path: Option<&str>, text: &str) -> Result<(), CliError> {
    match path {
        None => {
            print!("{text}");
            std::io::stdout()
                .flush()
                .map_err(|e| usage(format!("cannot write to standard output: {e}")))
        }
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {path}: {e}"))),
    }
}

fn run_series(
    scenario: Scenario,
    horizon: Horizon,
    samples: usize,
    method: Method,
) -> Result<SolutionSeries, CliError> {
    let cfg = match method {
        Method::Ode => SolverConfig::ode(),
        _ => SolverConfig::quadrature(),
    };
    Ok(integrate_trajectory(&TrajectoryRequest {
        scenario,
        horizon,
        sample_count: samples,
        method,
        cfg,
    })?)
}

pub fn simulate(args: SimulateArgs) -> Result<(), CliError> {
    let args = merge_config(args)?;
    let scenario = build_scenario(&args.scenario)?;
    let horizon = match (args.t_end, args.x_end) {
        (Some(t), None) => Horizon::Time(t),
        (None, Some(x)) => Horizon::Position(x),
        _ => return Err(usage("give exactly one of --t-end or --x-end")),
    };
    let samples = args.samples.unwrap_or(50);
    let method: Method = args.method.as_deref().unwrap_or("closed").parse()?;
    let series = run_series(scenario, horizon, samples, method)?;
    let text = match args.format.as_deref().unwrap_or("csv") {
        "csv" => output::series_csv(&series),
        "json" => output::series_json(&series),
        other => {
            return Err(usage(format!(
                "unknown format '{other}' (expected csv or json)"
            )))
        }
    };
    emit(args.output.as_deref(), &text)
}

pub fn metrics(args: MetricsArgs) -> Result<(), CliError> {
    let scenario = build_scenario(&args.scenario)?;
    let range = closed::max_range(&scenario)?;
    let out = output::MetricsOut {
        doubling_time: closed::doubling_time(&scenario)?,
        doubling_distance: closed::doubling_distance(&scenario)?,
        max_range: if range.is_finite() {
            serde_json::json!(range)
        } else {
            serde_json::json!("infinite")
        },
    };
    emit(None, &output::json_line(&out))
}

pub fn compare(args: CompareArgs) -> Result<(), CliError> {
    if !(args.threshold.is_finite() && args.threshold > 0.0) {
        return Err(usage(format!(
            "threshold must be finite and positive, got {}",
            args.threshold
        )));
    }
    let scenario = build_scenario(&args.scenario)?;
    if scenario.drag.as_power_law().is_none() {
        return Err(usage("compare needs a power-law scenario"));
    }
    let horizon = Horizon::Time(args.t_end);
    let routes = [Method::ClosedForm, Method::ImplicitInversion, Method::Ode];
    let mut series = Vec::new();
    for method in routes {
        series.push(run_series(scenario.clone(), horizon, args.samples, method)?);
    }

    let mut all_ok = true;
    let mut report = String::new();
    for i in 0..routes.len() {
        for j in i + 1..routes.len() {
            let dev = max_relative_deviation(&series[i], &series[j]);
            all_ok &= dev <= args.threshold;
            report.push_str(&format!(
                "{} vs {}: max relative deviation {dev:.3e}\n",
                routes[i], routes[j]
            ));
        }
    }
    report.push_str(&format!(
        "threshold {:e}: {}\n",
        args.threshold,
        if all_ok { "PASS" } else { "FAIL" }
    ));
    emit(None, &report)?;
    if all_ok {
        Ok(())
    } else {
        Err(CliError::CompareFailed)
    }
}

fn max_relative_deviation(a: &SolutionSeries, b: &SolutionSeries) -> f64 {
    let mut worst = 0.0f64;
    for (sa, sb) in a.states.iter().zip(&b.states) {
        for (va, vb) in [(sa.m, sb.m), (sa.x, sb.x), (sa.v, sb.v)] {
            let scale = va.abs().max(vb.abs());
            if scale > 0.0 {
                worst = worst.max((va - vb).abs() / scale);
            }
        }
    }
    worst
}

pub fn fit(args: FitArgs) -> Result<(), CliError> {
    let samples = read_samples(&args.file)?;
    let result = fit_power_law(
        &samples,
        args.m0,
        args.v0,
        (args.init_lambda, args.init_alpha),
    )?;
    let out = output::FitOut {
        lambda: result.lambda,
        alpha: result.alpha,
        rms_residual: result.rms_residual,
        iterations: result.iterations,
        converged: result.converged,
        gradient_norm: result.gradient_norm,
        warning: result.warning.clone(),
    };
    emit(None, &output::json_line(&out))?;
    if result.converged {
        Ok(())
    } else {
        Err(CliError::Solver("fit did not converge".into()))
    }
}

/// Parses a two-column CSV with header `t,m` or `x,m`. Errors carry 1-based
/// line numbers.
fn read_samples(path: &str) -> Result<Vec<MassSample>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or_else(|| usage(format!("{path}: line 1: empty file")))?;
    let time_keyed = match header.trim_end_matches('\r') {
        "t,m" => true,
        "x,m" => false,
        other => {
            return Err(usage(format!(
                "{path}: line 1: expected header 't,m' or 'x,m', got '{other}'"
            )))
        }
    };
    let mut samples = Vec::new();
    for (idx, line) in lines {
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let mut fields = line.split(',');
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(usage(format!(
                "{path}: line {lineno}: expected two comma-separated values"
            )));
        };
        let independent: f64 = a.trim().parse().map_err(|_| {
            usage(format!(
                "{path}: line {lineno}: cannot parse '{a}' as a number"
            ))
        })?;
        let mass: f64 = b.trim().parse().map_err(|_| {
            usage(format!(
                "{path}: line {lineno}: cannot parse '{b}' as a number"
            ))
        })?;
        samples.push(if time_keyed {
            MassSample::at_time(independent, mass)
        } else {
            MassSample::at_position(independent, mass)
        });
    }
    Ok(samples)
}
