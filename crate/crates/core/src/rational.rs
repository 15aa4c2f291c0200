//! Exact rationals (`p/q` over big integers) and their text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p/q` or a plain integer. `offset` is added to error positions so
/// callers parsing a larger string can report absolute columns.
pub fn parse_rational(s: &str, offset: usize) -> Result<Rational> {
    let trimmed = s.trim();
    let lead = s.len() - s.trim_start().len();
    let err = |msg: &str| Error::Parse { pos: offset + lead + 1, msg: format!("{msg}: {trimmed:?}") };
    if trimmed.is_empty() {
        return Err(err("empty rational"));
    }
    let (num, den) = match trimmed.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// `p/q`, or `p` when the value is an integer.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

/// True iff `r` is a positive integer.
pub fn is_positive_integer(r: &Rational) -> bool {
    r.is_integer() && r.is_positive()
}

pub fn sign_pow(e: usize) -> Rational {
    if e.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}
