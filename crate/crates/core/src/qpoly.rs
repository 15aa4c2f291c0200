//! Polynomials in one variable `q` with big-integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::Value;

/// Coefficient `k` of `coeffs` multiplies `q^k`; the top stored coefficient is never zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        QPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        QPoly::default()
    }

    pub fn one() -> Self {
        QPoly { coeffs: vec![BigInt::one()] }
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `self += c * q^k * other`, in place.
    pub fn add_scaled_shifted(&mut self, c: &BigInt, k: usize, other: &QPoly) {
        if other.is_zero() || c.is_zero() {
            return;
        }
        if self.coeffs.len() < other.coeffs.len() + k {
            self.coeffs.resize(other.coeffs.len() + k, BigInt::zero());
        }
        for (i, a) in other.coeffs.iter().enumerate() {
            self.coeffs[i + k] += c * a;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coeffs.iter().map(crate::json::int).collect())
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(&BigInt::one(), 0, rhs);
        out
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out.add_scaled_shifted(&-BigInt::one(), 0, rhs);
        out
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::new(coeffs)
    }
}

impl fmt::Display for QPoly {
    /// Ascending powers, e.g. `1 + q^2`, `-1 + q`, `2q - q^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_trailing_zeros() {
        let p = QPoly::from_i64s(&[1, 0, 0]);
        assert_eq!(p, QPoly::one());
        assert_eq!(p.degree(), Some(0));
        assert_eq!(QPoly::from_i64s(&[0, 0]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let a = QPoly::from_i64s(&[-1, 1]);
        let b = QPoly::from_i64s(&[1, 1]);
        assert_eq!(&a * &b, QPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(&a + &b, QPoly::from_i64s(&[0, 2]));
        assert!((&a - &a).is_zero());
        assert_eq!(a.shift(2), QPoly::from_i64s(&[0, 0, -1, 1]));
        assert_eq!(b.eval(&BigInt::from(3)), BigInt::from(4));
        assert_eq!(b.eval_at_one(), BigInt::from(2));
    }

    #[test]
    fn display() {
        assert_eq!(QPoly::from_i64s(&[1, 0, 1]).to_string(), "1 + q^2");
        assert_eq!(QPoly::from_i64s(&[-1, 1]).to_string(), "-1 + q");
        assert_eq!(QPoly::from_i64s(&[0, 2, 0, -1]).to_string(), "2q - q^3");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_i64s(&[1, 1]).to_json().to_string(), "[1,1]");
    }
}
