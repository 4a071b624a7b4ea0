//! Output rendering shared by the subcommands.

use clap::ValueEnum;
use fiblucas_matrix::linalg::{rational_string, IntMatrix, Polynomial, RatMatrix};
use num_bigint::BigInt;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Csv,
    Markdown,
}

/// Quotes a CSV field when it contains a delimiter, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn csv_line(fields: &[String]) -> String {
    fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",")
}

pub fn markdown_table(headers: &[String], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&format!("| {} |\n", headers.join(" | ")));
    out.push_str(&format!("|{}\n", " --- |".repeat(headers.len())));
    for row in rows {
        out.push_str(&format!("| {} |\n", row.join(" | ")));
    }
    out
}

/// `[[3, 12], [1, 14]]`
pub fn int_matrix_string(m: &IntMatrix) -> String {
    bracketed(m.order(), |i, j| m.get(i, j).to_string())
}

/// `[[7/15, -2/5], [-1/30, 1/10]]`
pub fn rat_matrix_string(m: &RatMatrix) -> String {
    bracketed(m.order(), |i, j| rational_string(m.get(i, j)))
}

fn bracketed(n: usize, mut cell: impl FnMut(usize, usize) -> String) -> String {
    let rows: Vec<String> = (0..n)
        .map(|i| {
            let cells: Vec<String> = (0..n).map(|j| cell(i, j)).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}

/// Big integers serialize as decimal strings, never as JSON numbers.
pub fn int_json(v: &BigInt) -> Value {
    Value::String(v.to_string())
}

pub fn int_matrix_json(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.order())
            .map(|i| Value::Array((0..m.order()).map(|j| int_json(m.get(i, j))).collect()))
            .collect(),
    )
}

pub fn rat_matrix_json(m: &RatMatrix) -> Value {
    Value::Array(
        (0..m.order())
            .map(|i| {
                Value::Array(
                    (0..m.order())
                        .map(|j| Value::String(rational_string(m.get(i, j))))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Coefficients ascending in the variable; integral coefficients print bare.
pub fn poly_strings(p: &Polynomial) -> Vec<String> {
    let one = BigInt::from(1);
    p.coeffs()
        .iter()
        .map(|c| {
            if c.denom() == &one {
                c.numer().to_string()
            } else {
                rational_string(c)
            }
        })
        .collect()
}
