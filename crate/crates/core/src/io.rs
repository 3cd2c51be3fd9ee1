//! JSON matrix documents.
//!
//! The canonical form is `{"n":N,"d":D,"entries":["p","p/q",…]}` with no
//! whitespace and entries in storage order. Parsing accepts any JSON
//! whitespace and key order but requires every entry token to be canonical.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational};
use crate::tensor::MultiMatrix;

pub fn serialize_matrix(m: &MultiMatrix) -> String {
    let mut out = format!("{{\"n\":{},\"d\":{},\"entries\":[", m.n(), m.d());
    for (k, v) in m.entries().iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push('"');
        out.push_str(&format_rational(v));
        out.push('"');
    }
    out.push_str("]}");
    out
}

pub fn parse_matrix(bytes: &[u8]) -> Result<MultiMatrix> {
    let value: Value = serde_json::from_slice(bytes).map_err(|e| {
        Error::parse(format!("line {}, column {}", e.line(), e.column()), e.to_string())
    })?;
    matrix_from_value(&value, "$")
}

pub(crate) fn matrix_from_value(value: &Value, path: &str) -> Result<MultiMatrix> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::parse(path, "expected a matrix object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "n" | "d" | "entries") {
            return Err(Error::parse(format!("{path}.{key}"), "unexpected field"));
        }
    }
    let dim = |key: &str| -> Result<usize> {
        obj.get(key)
            .ok_or_else(|| Error::parse(path, format!("missing field {key:?}")))?
            .as_u64()
            .and_then(|v| usize::try_from(v).ok())
            .ok_or_else(|| Error::parse(format!("{path}.{key}"), "expected a non-negative integer"))
    };
    let n = dim("n")?;
    let d = dim("d")?;
    let raw = obj
        .get("entries")
        .ok_or_else(|| Error::parse(path, "missing field \"entries\""))?
        .as_array()
        .ok_or_else(|| Error::parse(format!("{path}.entries"), "expected an array"))?;
    let entries = raw
        .iter()
        .enumerate()
        .map(|(k, tok)| {
            let loc = || format!("{path}.entries[{k}]");
            let s = tok
                .as_str()
                .ok_or_else(|| Error::parse(loc(), "expected a string token"))?;
            parse_rational(s).map_err(|msg| Error::parse(loc(), msg))
        })
        .collect::<Result<Vec<_>>>()?;
    MultiMatrix::new(n, d, entries).map_err(|e| match e {
        Error::Shape(msg) => Error::parse(format!("{path}.entries"), msg),
        other => other,
    })
}
