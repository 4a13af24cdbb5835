//! Table rendering: CSV, JSON and LaTeX tabular bodies.
//!
//! Rationals always cross the boundary as `p/q` strings, never floats.
//! Symbolic-x tables render the polynomial coefficients as rational
//! strings by ascending degree.

use polybe::algebra::Poly;
use polybe::families::{TableValues, ValueTable};

fn poly_coeff_list(p: &Poly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".to_string()];
    }
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

pub fn csv(table: &ValueTable) -> String {
    let mut lines = Vec::new();
    match &table.values {
        TableValues::Scalar(values) => {
            lines.push("n,value".to_string());
            for (n, v) in values.iter().enumerate() {
                lines.push(format!("{},{}", n, v));
            }
        }
        TableValues::Symbolic(values) => {
            lines.push("n,value".to_string());
            for (n, p) in values.iter().enumerate() {
                lines.push(format!("{},{}", n, poly_coeff_list(p).join(" ")));
            }
        }
        TableValues::Grid(grid) => {
            lines.push("n,m,value".to_string());
            for (n, row) in grid.iter().enumerate() {
                for (m, v) in row.iter().enumerate() {
                    lines.push(format!("{},{},{}", n, m, v));
                }
            }
        }
    }
    lines.join("\n")
}

pub fn json(table: &ValueTable) -> String {
    use serde_json::{json, Value};
    let values: Vec<Value> = match &table.values {
        TableValues::Scalar(values) => values
            .iter()
            .enumerate()
            .map(|(n, v)| json!({"n": n, "value": v.to_string()}))
            .collect(),
        TableValues::Symbolic(values) => values
            .iter()
            .enumerate()
            .map(|(n, p)| json!({"n": n, "coeffs": poly_coeff_list(p)}))
            .collect(),
        TableValues::Grid(grid) => grid
            .iter()
            .enumerate()
            .flat_map(|(n, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(m, v)| json!({"n": n, "m": m, "value": v.to_string()}))
                    .collect::<Vec<Value>>()
            })
            .collect(),
    };
    let doc = json!({
        "family": table.spec.tag.as_str(),
        "k": table.spec.k.to_string(),
        "n_max": table.spec.n_max,
        "values": values,
    });
    serde_json::to_string_pretty(&doc).expect("serialization is infallible")
}

/// Tabular body only (no preamble), for pasting into a document.
pub fn latex(table: &ValueTable) -> String {
    let mut lines = Vec::new();
    match &table.values {
        TableValues::Scalar(values) => {
            for (n, v) in values.iter().enumerate() {
                lines.push(format!("{} & ${}$ \\\\", n, v));
            }
        }
        TableValues::Symbolic(values) => {
            for (n, p) in values.iter().enumerate() {
                lines.push(format!("{} & ${}$ \\\\", n, p));
            }
        }
        TableValues::Grid(grid) => {
            for (n, row) in grid.iter().enumerate() {
                for (m, v) in row.iter().enumerate() {
                    lines.push(format!("{} & {} & ${}$ \\\\", n, m, v));
                }
            }
        }
    }
    lines.join("\n")
}
