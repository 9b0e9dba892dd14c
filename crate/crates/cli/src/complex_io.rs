//! Simplicial complexes with vertex values.
//!
//! Text form, `#` starting a comment:
//!
//! ```text
//! OFF 3 3
//! 0
//! 1
//! 1/2
//! 2 0 1
//! 2 1 2
//! 2 2 0
//! ```
//!
//! The header gives vertex and simplex counts, then one value per vertex,
//! then each maximal simplex as its size followed by vertex indices. The
//! JSON form is `{"values":["0","1","1/2"],"simplices":[[0,1],[1,2],[2,0]]}`;
//! integer values may be bare numbers.

use serde::Deserialize;
use tamarkin_core::morse::{SimplicialComplex, VertexFunction};
use tamarkin_core::PiRational;

use crate::error::{Failure, Result};
use crate::json::parse_value;

#[derive(Deserialize)]
#[serde(untagged)]
enum Number {
    Text(String),
    Int(i64),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    values: Vec<Number>,
    simplices: Vec<Vec<usize>>,
}

pub fn parse_complex(text: &str) -> Result<(SimplicialComplex, VertexFunction)> {
    let (values, top) = if text.trim_start().starts_with('{') {
        let raw: ComplexJson =
            serde_json::from_str(text).map_err(|e| Failure::input(format!("complex JSON: {e}")))?;
        let values = raw
            .values
            .iter()
            .map(|v| match v {
                Number::Text(s) => parse_value(s),
                Number::Int(k) => Ok(PiRational::from_int(*k)),
            })
            .collect::<Result<Vec<_>>>()?;
        (values, raw.simplices)
    } else {
        parse_off(text)?
    };
    let k = SimplicialComplex::from_maximal(values.len(), &top)?;
    let f = VertexFunction::new(values);
    f.check(&k)?;
    Ok((k, f))
}

fn parse_off(text: &str) -> Result<(Vec<PiRational>, Vec<Vec<usize>>)> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header: Vec<&str> = lines.next().unwrap_or("").split_whitespace().collect();
    let count = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Failure::input(format!("bad count {s:?} in header")))
    };
    let (n, m) = match header.as_slice() {
        ["OFF", n, m] => (count(n)?, count(m)?),
        _ => return Err(Failure::input("expected header `OFF <vertices> <simplices>`")),
    };
    let mut values = Vec::with_capacity(n);
    for k in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Failure::input(format!("missing value for vertex {k}")))?;
        values.push(parse_value(line)?);
    }
    let mut top = Vec::with_capacity(m);
    for k in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Failure::input(format!("missing simplex {k}")))?;
        let nums = line
            .split_whitespace()
            .map(|s| s.parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Failure::input(format!("bad simplex line {line:?}")))?;
        match nums.split_first() {
            Some((&size, rest)) if size == rest.len() && size > 0 => top.push(rest.to_vec()),
            _ => return Err(Failure::input(format!("simplex line {line:?} does not match its size"))),
        }
    }
    if let Some(extra) = lines.next() {
        return Err(Failure::input(format!("unexpected trailing line {extra:?}")));
    }
    Ok((values, top))
}
