//! Report serialization: JSON with floats rounded to 15 significant digits,
//! and the fixed-column CSV rendering.

use serde::Serializer;

use super::BoundReport;
use crate::expansion::{ratio_string, Rational};

pub const CSV_COLUMNS: [&str; 12] = [
    "graph_id",
    "n",
    "d",
    "h_edge",
    "h_vertex",
    "lambda2",
    "lambda_min",
    "lower_bound",
    "upper_bound",
    "applicable",
    "pass_lower",
    "pass_upper",
];

/// Rounds to 15 significant digits.
pub fn sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.14e}").parse().expect("formatted float parses")
}

pub fn ser_f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(sig15(*x))
}

pub fn ser_opt_f64<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => s.serialize_some(&sig15(*v)),
        None => s.serialize_none(),
    }
}

pub fn ser_f64_vec<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|&x| sig15(x)))
}

pub fn ser_opt_ratio<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_some(&ratio_string(r)),
        None => s.serialize_none(),
    }
}

fn cell_f64(x: Option<f64>) -> String {
    x.map(|v| sig15(v).to_string()).unwrap_or_default()
}

fn cell_bool(x: Option<bool>) -> String {
    x.map(|b| b.to_string()).unwrap_or_default()
}

pub fn reports_to_csv(reports: &[BoundReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_COLUMNS).expect("in-memory write");
    for r in reports {
        w.write_record([
            r.graph_id.clone(),
            r.n.to_string(),
            r.d.to_string(),
            r.h_edge.as_ref().map(ratio_string).unwrap_or_default(),
            r.h_vertex.as_ref().map(ratio_string).unwrap_or_default(),
            cell_f64(Some(r.lambda2)),
            cell_f64(Some(r.lambda_min)),
            cell_f64(r.lower_bound),
            cell_f64(r.upper_bound),
            r.applicable.to_string(),
            cell_bool(r.pass_lower),
            cell_bool(r.pass_upper),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("csv is utf-8")
}

pub fn report_to_json(report: &BoundReport) -> String {
    serde_json::to_string_pretty(report).expect("report serializes")
}

pub fn reports_to_json(reports: &[BoundReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}
