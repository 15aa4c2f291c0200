//! JSON helpers shared by the machine-readable outputs.
//!
//! Integers are emitted as JSON numbers of any size; rationals as `"p/q"` strings.

use num_bigint::BigInt;
use serde_json::{Number, Value};

use crate::rational::{format_rational, Rational};

pub fn int(v: &BigInt) -> Value {
    let n: Number = v.to_string().parse().expect("decimal integer is a valid JSON number");
    Value::Number(n)
}

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rationals(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(rational).collect())
}

pub fn usizes(xs: &[usize]) -> Value {
    Value::Array(xs.iter().map(|&x| Value::from(x)).collect())
}
