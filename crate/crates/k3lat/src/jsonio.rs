//! JSON encodings of exact values.
//!
//! Integers are written as decimal strings so that no precision is lost;
//! on input both strings and JSON integers are accepted. Rationals are
//! written as `"p"` or `"p/q"`.

use k3lat_core::exactmath::parse_rational;
use k3lat_core::{BigInt, BigRational, IntMatrix};
use serde_json::Value;

use crate::error::{CliError, Result};

pub fn int_to_json(n: &BigInt) -> Value {
    Value::String(n.to_string())
}

pub fn rational_to_json(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

pub fn vector_to_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_to_json).collect())
}

pub fn matrix_to_json(m: &IntMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_to_json(m.row(i))).collect())
}

fn bad(what: &str, v: &Value) -> CliError {
    CliError::Input(format!("expected {what}, found `{v}`"))
}

pub fn int_from_json(v: &Value) -> Result<BigInt> {
    match v {
        Value::String(s) => s.trim().parse().map_err(|_| bad("an integer", v)),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse().expect("integral number")),
        _ => Err(bad("an integer", v)),
    }
}

pub fn rational_from_json(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s.trim()).ok_or_else(|| bad("a rational", v)),
        _ => int_from_json(v).map(BigRational::from_integer),
    }
}

pub fn vector_from_json(v: &Value) -> Result<Vec<BigInt>> {
    v.as_array().ok_or_else(|| bad("an array", v))?.iter().map(int_from_json).collect()
}

pub fn vectors_from_json(v: &Value) -> Result<Vec<Vec<BigInt>>> {
    v.as_array().ok_or_else(|| bad("an array of arrays", v))?.iter().map(vector_from_json).collect()
}

pub fn matrix_from_json(v: &Value) -> Result<IntMatrix> {
    Ok(IntMatrix::from_rows(vectors_from_json(v)?)?)
}

pub fn parse(text: &str) -> Result<Value> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn matrix_round_trip() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        let m = IntMatrix::from_rows(vec![vec![big.clone(), BigInt::from(-1)], vec![BigInt::from(0), big]]).unwrap();
        let j = matrix_to_json(&m);
        assert_eq!(j[0][1], json!("-1"));
        assert_eq!(matrix_from_json(&j).unwrap(), m);
        assert_eq!(matrix_from_json(&json!([[1, "2"], [-3, 4]])).unwrap(), IntMatrix::from_i64(&[&[1, 2], &[-3, 4]]));
    }

    #[test]
    fn rejects_malformed() {
        assert!(matrix_from_json(&json!([[1, 2], [3]])).is_err());
        assert!(int_from_json(&json!(1.5)).is_err());
        assert!(int_from_json(&json!("x")).is_err());
        assert_eq!(rational_from_json(&json!("-3/6")).unwrap().to_string(), "-1/2");
    }
}
