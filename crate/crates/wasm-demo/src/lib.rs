//! Browser bindings for exploring the k-Fibonacci / k-Lucas matrix family.
//!
//! Three entry points, each returning a JSON string so the page needs no
//! typed bindings: [`explore`] evaluates every invariant of one matrix,
//! [`sequence_table`] regenerates the determinant/trace/eigenvalue tables,
//! and [`verify`] replays the closed-form-versus-oracle checks on a grid.
//! Errors come back as `{"error": "..."}` documents.
//!
//! All integers are serialized as decimal strings: the values outgrow
//! JavaScript's safe-integer range almost immediately.

use std::str::FromStr;

use wasm_bindgen::prelude::*;

use fiblucas_matrix::bataille::{
    build_matrix, closed_charpoly, closed_det, closed_inverse, closed_trace, decompose, spectrum,
    verify_grid, FamilyParams,
};
use fiblucas_matrix::catalog::{emit_sequence, SequenceId, SequenceKind};
use fiblucas_matrix::linalg::{rational_string, IntMatrix, RatMatrix};
use fiblucas_matrix::Error;

use serde_json::{json, Value};

fn error_doc(err: &Error) -> String {
    json!({ "error": err.to_string() }).to_string()
}

fn int_matrix_value(m: &IntMatrix) -> Value {
    Value::Array(
        (0..m.order())
            .map(|i| {
                Value::Array(
                    (0..m.order()).map(|j| Value::String(m.get(i, j).to_string())).collect(),
                )
            })
            .collect(),
    )
}

fn rat_matrix_value(m: &RatMatrix) -> Value {
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

/// Every invariant of `A(k,n)` in one document.
#[wasm_bindgen]
pub fn explore(k: i32, n: i32) -> String {
    match explore_impl(k, n) {
        Ok(doc) => doc,
        Err(err) => error_doc(&err),
    }
}

fn explore_impl(k: i32, n: i32) -> Result<String, Error> {
    let n = usize::try_from(n)
        .map_err(|_| Error::InvalidParameter(format!("matrix order n must be >= 1, got {n}")))?;
    let p = FamilyParams::new(k as i64, n)?;
    let matrix = build_matrix(&p);
    let form = decompose(&p);
    let s = spectrum(&p)?;
    let inverse = closed_inverse(&p)?;
    let poly = closed_charpoly(&p)?;
    let doc = json!({
        "k": p.k(),
        "n": p.n(),
        "matrix": int_matrix_value(&matrix),
        "v": form.v().iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "det": closed_det(&p)?.to_string(),
        "trace": closed_trace(&p)?.to_string(),
        "lambda1": s.lambda1.to_string(),
        "mult1": s.mult1,
        "lambda2": s.lambda2.to_string(),
        "radius": s.spectral_radius.to_string(),
        "energy": s.energy.to_string(),
        "charpoly": poly.coeffs().iter().map(|c| c.numer().to_string()).collect::<Vec<_>>(),
        "inverse": rat_matrix_value(&inverse),
    });
    Ok(doc.to_string())
}

/// Rows of the det/trace/lambda2 table for `k` in `[k_from, k_to]` and
/// `n` in `[1, n_count]`.
#[wasm_bindgen]
pub fn sequence_table(which: &str, k_from: i32, k_to: i32, n_count: i32) -> String {
    match table_impl(which, k_from, k_to, n_count) {
        Ok(doc) => doc,
        Err(err) => error_doc(&err),
    }
}

fn table_impl(which: &str, k_from: i32, k_to: i32, n_count: i32) -> Result<String, Error> {
    let kind = SequenceKind::from_str(which)?;
    let count = usize::try_from(n_count)
        .ok()
        .filter(|&c| c >= 1)
        .ok_or_else(|| Error::InvalidParameter("term count must be >= 1".into()))?;
    if k_from > k_to {
        return Err(Error::InvalidParameter(format!("inverted k range {k_from}..{k_to}")));
    }
    let mut rows = Vec::new();
    for k in k_from..=k_to {
        let id = SequenceId::new(kind, k as i64)?;
        let terms = emit_sequence(&id, count)?;
        rows.push(json!({
            "k": k,
            "terms": terms.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        }));
    }
    Ok(json!({
        "which": kind.as_str(),
        "first_index": kind.first_index(),
        "rows": rows,
    })
    .to_string())
}

/// Closed-form-versus-oracle verification over an inclusive grid.
#[wasm_bindgen]
pub fn verify(k_from: i32, k_to: i32, n_from: i32, n_to: i32, power_max: i32) -> String {
    match verify_impl(k_from, k_to, n_from, n_to, power_max) {
        Ok(doc) => doc,
        Err(err) => error_doc(&err),
    }
}

fn verify_impl(
    k_from: i32,
    k_to: i32,
    n_from: i32,
    n_to: i32,
    power_max: i32,
) -> Result<String, Error> {
    if k_from > k_to || n_from > n_to {
        return Err(Error::InvalidParameter("inverted range".into()));
    }
    let n_from = usize::try_from(n_from)
        .map_err(|_| Error::InvalidParameter("n range must be nonnegative".into()))?;
    let n_to = usize::try_from(n_to)
        .map_err(|_| Error::InvalidParameter("n range must be nonnegative".into()))?;
    let power_max = u32::try_from(power_max)
        .map_err(|_| Error::InvalidParameter("power max must be nonnegative".into()))?;
    let report = verify_grid(k_from as i64..=k_to as i64, n_from..=n_to, power_max);
    let records: Vec<Value> = report
        .records()
        .iter()
        .map(|r| {
            json!({
                "k": r.k,
                "n": r.n,
                "check": r.check,
                "status": if r.passed() { "pass" } else { "fail" },
                "witness": r.witness,
            })
        })
        .collect();
    Ok(json!({
        "total": report.len(),
        "passed": report.passed_count(),
        "failed": report.len() - report.passed_count(),
        "all_passed": report.all_passed(),
        "records": records,
    })
    .to_string())
}
