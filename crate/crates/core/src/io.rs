//! JSON input with schema errors that point at the offending value, and
//! stable pretty-printed output.

use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::semigroup::{CayleyTable, SemigroupError};
use crate::solution::{PeError, ThetaFamily};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InputError {
    /// `path` is a JSON pointer into the document.
    #[error("schema error at \"{path}\": {message}")]
    Schema { path: String, message: String },
    #[error("cannot read {file}: {message}")]
    Read { file: String, message: String },
    /// Well-formed, but the table is not a semigroup.
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

fn schema(path: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError::Schema { path: path.into(), message: message.into() }
}

pub fn read_json(file: &Path) -> Result<Value, InputError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| InputError::Read { file: file.display().to_string(), message: e.to_string() })?;
    parse_json(&text)
}

pub fn parse_json(text: &str) -> Result<Value, InputError> {
    serde_json::from_str(text).map_err(|e| schema("", format!("invalid JSON: {e}")))
}

fn field<'a>(v: &'a Value, base: &str, key: &str) -> Result<&'a Value, InputError> {
    let obj = v.as_object().ok_or_else(|| schema(base, "expected an object"))?;
    obj.get(key).ok_or_else(|| schema(format!("{base}/{key}"), "missing"))
}

fn index(v: &Value, path: &str) -> Result<usize, InputError> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| schema(path, "expected a non-negative integer"))
}

/// An `order × order` array of entries below `order`.
fn square(v: &Value, path: &str, order: usize) -> Result<Vec<Vec<usize>>, InputError> {
    let rows = v.as_array().ok_or_else(|| schema(path, "expected an array of rows"))?;
    if rows.len() != order {
        return Err(schema(path, format!("expected {order} rows, found {}", rows.len())));
    }
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let p = format!("{path}/{i}");
            let cells = row.as_array().ok_or_else(|| schema(&p, "expected an array"))?;
            if cells.len() != order {
                return Err(schema(&p, format!("expected {order} entries, found {}", cells.len())));
            }
            cells
                .iter()
                .enumerate()
                .map(|(j, c)| {
                    let q = format!("{p}/{j}");
                    let x = index(c, &q)?;
                    if x >= order {
                        return Err(schema(&q, format!("{x} is out of range for order {order}")));
                    }
                    Ok(x)
                })
                .collect()
        })
        .collect()
}

fn order_at(v: &Value, base: &str) -> Result<usize, InputError> {
    let p = format!("{base}/order");
    let n = index(field(v, base, "order")?, &p)?;
    if n == 0 {
        return Err(schema(p, "the carrier must be non-empty"));
    }
    Ok(n)
}

/// `{"order": n, "table": [[..]]}` at `base`.
pub fn table_at(v: &Value, base: &str) -> Result<CayleyTable, InputError> {
    let n = order_at(v, base)?;
    let rows = square(field(v, base, "table")?, &format!("{base}/table"), n)?;
    Ok(crate::semigroup::validate_table(n, &rows)?)
}

pub fn table_from_value(v: &Value) -> Result<CayleyTable, InputError> {
    table_at(v, "")
}

/// `{"order": n, "table": [[..]], "theta": [[..]]}`, shape-checked only: the
/// axioms are left to the caller so that violations can be reported.
pub fn solution_parts(v: &Value) -> Result<(CayleyTable, ThetaFamily), InputError> {
    let n = order_at(v, "")?;
    let table_rows = square(field(v, "", "table")?, "/table", n)?;
    let theta_rows = square(field(v, "", "theta")?, "/theta", n)?;
    let table = crate::semigroup::validate_table(n, &table_rows)?;
    let theta = ThetaFamily::from_rows(&theta_rows).map_err(|e: PeError| schema("/theta", e.to_string()))?;
    Ok((table, theta))
}

/// Typed parameters through serde; errors keep serde's message and point
/// at the document root.
pub fn params<T: DeserializeOwned>(v: &Value) -> Result<T, InputError> {
    T::deserialize(v).map_err(|e| schema("", e.to_string()))
}

/// Pretty JSON with a trailing newline; field order follows declaration
/// order, so output is stable for diffing.
pub fn to_pretty<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("in-memory values serialize");
    s.push('\n');
    s
}
