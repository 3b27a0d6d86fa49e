//! Rendering of series and result objects. All numeric text is
//! locale-independent and byte-deterministic.

use accrete_core::SolutionSeries;
use serde::Serialize;

/// 17 significant digits: enough to round-trip any f64 exactly.
pub fn fmt17(value: f64) -> String {
    format!("{value:.16e}")
}

/// CSV with header `t,x,m,v`, comma separators, `\n` line endings.
pub fn series_csv(series: &SolutionSeries) -> String {
    let mut out = String::from("t,x,m,v\n");
    for s in &series.states {
        out.push_str(&fmt17(s.t));
        out.push(',');
        out.push_str(&fmt17(s.x));
        out.push(',');
        out.push_str(&fmt17(s.m));
        out.push(',');
        out.push_str(&fmt17(s.v));
        out.push('\n');
    }
    out
}

#[derive(Serialize)]
struct StateOut {
    t: f64,
    x: f64,
    m: f64,
    v: f64,
}

#[derive(Serialize)]
struct SeriesOut<'a> {
    label: &'a str,
    method: String,
    states: Vec<StateOut>,
}

pub fn series_json(series: &SolutionSeries) -> String {
    let out = SeriesOut {
        label: &series.scenario.label,
        method: series.method.to_string(),
        states: series
            .states
            .iter()
            .map(|s| StateOut {
                t: s.t,
                x: s.x,
                m: s.m,
                v: s.v,
            })
            .collect(),
    };
    let mut text = serde_json::to_string_pretty(&out).expect("series serializes");
    text.push('\n');
    text
}

#[derive(Serialize)]
pub struct MetricsOut {
    pub doubling_time: f64,
    pub doubling_distance: f64,
    /// A number, or the string "infinite" when there is no finite range.
    pub max_range: serde_json::Value,
}

#[derive(Serialize)]
pub struct FitOut {
    pub lambda: f64,
    pub alpha: f64,
    pub rms_residual: f64,
    pub iterations: usize,
    pub converged: bool,
    pub gradient_norm: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

pub fn json_line<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("value serializes");
    text.push('\n');
    text
}
