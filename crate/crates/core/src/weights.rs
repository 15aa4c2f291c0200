//! Weights `λ = (a | b)`, Weyl-dimension products, Goldie rank polynomial values
//! and Bernstein degrees on the two-column cell.
//!
//! Sign convention: Goldie rank polynomials are evaluated at `-a` for dominant `a`,
//! so `goldie_eval(i, a)` means `p_{y_i}(-a)`. Every quantity depends only on
//! differences of coordinates.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::check_index;
use crate::json;
use crate::klpoly::KlOracle;
use crate::rational::{int, is_integer, parse_rational, Rational};
use crate::symgroup::{longest_element, y_index, y_rep, Permutation};
use crate::tableaux::minimal_element;
use crate::{Error, Result};

/// `λ = (a_1, ..., a_n | b_1, ..., b_n)` with integral differences inside each block.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightVector {
    a: Vec<Rational>,
    b: Vec<Rational>,
}

fn integral_differences(v: &[Rational]) -> bool {
    v.iter().all(|x| is_integer(&(x - &v[0])))
}

impl WeightVector {
    pub fn new(a: Vec<Rational>, b: Vec<Rational>) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::DegreeMismatch(a.len(), b.len()));
        }
        if a.is_empty() {
            return Err(Error::Domain("weight of degree 0".into()));
        }
        for (name, v) in [("a", &a), ("b", &b)] {
            if !integral_differences(v) {
                return Err(Error::NotInLattice(format!("{name} has a non-integral difference")));
            }
        }
        Ok(WeightVector { a, b })
    }

    pub fn from_i64s(a: &[i64], b: &[i64]) -> Result<Self> {
        WeightVector::new(a.iter().map(|&x| int(x)).collect(), b.iter().map(|&x| int(x)).collect())
    }

    /// `a = b = (n-1, ..., 1, 0)`.
    pub fn standard(n: usize) -> Self {
        let v: Vec<Rational> = (0..n as i64).rev().map(int).collect();
        WeightVector { a: v.clone(), b: v }
    }

    /// Regular dominant weight with last entries `a_last`, `b_last` and strictly
    /// positive consecutive gaps `a_k - a_{k+1}`, `b_k - b_{k+1}`.
    pub fn from_gaps(a_last: Rational, a_gaps: &[u64], b_last: Rational, b_gaps: &[u64]) -> Result<Self> {
        let build = |last: Rational, gaps: &[u64]| -> Result<Vec<Rational>> {
            if gaps.contains(&0) {
                return Err(Error::NotRegularDominant);
            }
            let mut v = vec![last];
            for &g in gaps.iter().rev() {
                let next = v.last().expect("nonempty") + Rational::from_integer(BigInt::from(g));
                v.push(next);
            }
            v.reverse();
            Ok(v)
        };
        WeightVector::new(build(a_last, a_gaps)?, build(b_last, b_gaps)?)
    }

    pub fn degree(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self) -> &[Rational] {
        &self.a
    }

    pub fn b(&self) -> &[Rational] {
        &self.b
    }

    /// Adds `sa` to every `a_k` and `sb` to every `b_k`.
    pub fn shifted(&self, sa: &Rational, sb: &Rational) -> WeightVector {
        WeightVector { a: self.a.iter().map(|x| x + sa).collect(), b: self.b.iter().map(|x| x + sb).collect() }
    }

    pub fn to_json(&self) -> Value {
        json!({"a": json::rationals(&self.a), "b": json::rationals(&self.b)})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let block = |key: &str| -> Result<Vec<Rational>> {
            v.get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Domain(format!("weight JSON lacks {key:?}")))?
                .iter()
                .map(|x| match x {
                    Value::String(s) => parse_rational(s, 0),
                    Value::Number(n) => parse_rational(&n.to_string(), 0),
                    other => Err(Error::Domain(format!("not a rational: {other}"))),
                })
                .collect()
        };
        WeightVector::new(block("a")?, block("b")?)
    }

    /// Parses `a_1,...,a_n|b_1,...,b_n`, or `2n` comma-separated entries split in half.
    pub fn parse(s: &str) -> Result<Self> {
        let fields = |part: &str, base: usize| -> Result<Vec<Rational>> {
            let mut out = Vec::new();
            let mut offset = base;
            for tok in part.split(',') {
                out.push(parse_rational(tok, offset)?);
                offset += tok.len() + 1;
            }
            Ok(out)
        };
        match s.split_once('|') {
            Some((a, b)) => WeightVector::new(fields(a, 0)?, fields(b, a.len() + 1)?),
            None => {
                let mut all = fields(s, 0)?;
                if all.len() % 2 != 0 {
                    return Err(Error::Parse { pos: s.len(), msg: "odd number of weight entries".into() });
                }
                let b = all.split_off(all.len() / 2);
                WeightVector::new(all, b)
            }
        }
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.a.iter().join(","), self.b.iter().join(","))
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightVector({self})")
    }
}

fn distinct(v: &[Rational]) -> bool {
    v.iter().tuple_combinations().all(|(x, y)| x != y)
}

/// `a_s - a_t` not a negative integer for `s < t`; with integral differences this is `a` weakly decreasing.
fn weakly_decreasing(v: &[Rational]) -> bool {
    v.iter().tuple_combinations().all(|(x, y)| !(x - y).is_negative())
}

pub fn is_regular(lambda: &WeightVector) -> bool {
    distinct(&lambda.a) && distinct(&lambda.b)
}

pub fn is_dominant(lambda: &WeightVector) -> bool {
    weakly_decreasing(&lambda.a) && weakly_decreasing(&lambda.b)
}

fn require_regular_dominant(lambda: &WeightVector) -> Result<()> {
    if is_regular(lambda) && is_dominant(lambda) {
        Ok(())
    } else {
        Err(Error::NotRegularDominant)
    }
}

/// `1! 2! ... k!`.
fn superfactorial(k: usize) -> BigInt {
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    for m in 1..=k {
        fact *= m;
        acc *= &fact;
    }
    acc
}

/// Product of `x_s - x_t` over `s < t`, divided by `1! ... (len-1)!`.
fn normalized_vandermonde<'a>(xs: impl Iterator<Item = &'a Rational> + Clone) -> Rational {
    let len = xs.clone().count();
    // Numerators and denominators are multiplied separately and reduced once at the end.
    let (mut num, mut den) = (BigInt::one(), superfactorial(len.saturating_sub(1)));
    for (x, y) in xs.tuple_combinations() {
        let d = x - y;
        num *= d.numer();
        den *= d.denom();
    }
    Rational::new(num, den)
}

/// `h_L(ν) = ∏_{1 <= s < t <= n-1} (ν_s - ν_t)/(t - s)`; only `ν_1..ν_{n-1}` enter.
pub fn h_l(nu: &[Rational]) -> Rational {
    let m = nu.len().saturating_sub(1);
    normalized_vandermonde(nu[..m].iter())
}

/// `(1/(1!...(n-2)!)) ∏_{s < t; s, t != i} (a_s - a_t)`, equal to `h_L(-y_i a)` and `h_L(x_i a)`.
pub fn weyl_dim(a: &[Rational], i: usize) -> Result<Rational> {
    check_index(i, 1, a.len())?;
    Ok(normalized_vandermonde(a.iter().enumerate().filter(|&(k, _)| k + 1 != i).map(|(_, x)| x)))
}

/// `p_{y_i}(-a) = Σ_{j >= i} (-1)^{j-i} weyl_dim(a, j)`, for `2 <= i <= n`.
pub fn goldie_eval(i: usize, a: &[Rational]) -> Result<Rational> {
    let n = a.len();
    check_index(i, 2, n)?;
    let mut sum = Rational::zero();
    for j in i..=n {
        let term = weyl_dim(a, j)?;
        if (j - i).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Ok(sum)
}

/// `p_{y_i}(-a) = Σ_{j >= i} (-1)^{l(y_j)+l(y_i)} P_{y_j,y_i}(1) h_L(y_j(-a))`, with KL values
/// from `oracle`. Slow; used to cross-check [`goldie_eval`].
pub fn goldie_eval_kl(oracle: &KlOracle, i: usize, a: &[Rational]) -> Result<Rational> {
    let n = a.len();
    check_index(i, 2, n)?;
    let neg: Vec<Rational> = a.iter().map(|x| -x).collect();
    let yi = y_rep(i, n)?;
    let mut sum = Rational::zero();
    for j in i..=n {
        let yj = y_rep(j, n)?;
        let p = oracle.kl_polynomial(&yj, &yi)?.eval_at_one();
        let mut term = Rational::from_integer(p) * h_l(&yj.act(&neg)?);
        if (yj.length() + yi.length()) % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    Ok(sum)
}

/// Indices `(k, l)` with `(w_0 w^{-1})_min = y_k` and `(w_0 w)_min = y_l`, for `w = w_{i,j}`, `i != j`.
pub fn bernstein_indices(w: &Permutation) -> Result<(usize, usize)> {
    let w0 = longest_element(w.degree());
    let find = |u: Permutation| -> Result<usize> {
        let m = minimal_element(&u).map_err(|_| Error::NotMinimalCycle(w.to_string()))?;
        y_index(&m).ok_or_else(|| Error::NotMinimalCycle(w.to_string()))
    };
    let k = find(w0.compose(&w.inverse())?)?;
    let l = find(w0.compose(w)?)?;
    Ok((k, l))
}

/// `c_w(λ) = p_{(w_0 w^{-1})_min}(-a) · p_{(w_0 w)_min}(-b)` for `w` one of the cycles `w_{i,j}`, `i != j`.
pub fn bernstein_c(w: &Permutation, lambda: &WeightVector) -> Result<Rational> {
    if w.degree() != lambda.degree() {
        return Err(Error::DegreeMismatch(w.degree(), lambda.degree()));
    }
    require_regular_dominant(lambda)?;
    let (k, l) = bernstein_indices(w)?;
    Ok(goldie_eval(k, &lambda.a)? * goldie_eval(l, &lambda.b)?)
}

/// `dim F_{i,j} = weyl_dim(a, i) · weyl_dim(b, j)`.
pub fn dim_f(i: usize, j: usize, lambda: &WeightVector) -> Result<Rational> {
    require_regular_dominant(lambda)?;
    Ok(weyl_dim(&lambda.a, i)? * weyl_dim(&lambda.b, j)?)
}

/// `λ_{i,j}`: `a_i` moved to the last `a` slot and `b_j` to the last `b` slot.
pub fn lambda_rearrange(lambda: &WeightVector, i: usize, j: usize) -> Result<WeightVector> {
    let n = lambda.degree();
    check_index(i, 1, n)?;
    check_index(j, 1, n)?;
    let mv = |v: &[Rational], k: usize| {
        let mut out = v.to_vec();
        let x = out.remove(k - 1);
        out.push(x);
        out
    };
    Ok(WeightVector { a: mv(&lambda.a, i), b: mv(&lambda.b, j) })
}

/// `a - w·b`, i.e. `(a_k - b_{w^{-1}(k)})_k`.
pub fn extremal_weight(lambda: &WeightVector, w: &Permutation) -> Result<Vec<Rational>> {
    let wb = w.act(&lambda.b)?;
    Ok(lambda.a.iter().zip(&wb).map(|(x, y)| x - y).collect())
}

fn dot(x: &[Rational], y: &[Rational]) -> Rational {
    x.iter().zip(y).map(|(p, q)| p * q).sum()
}

/// `<a, b> - <a, w·b>`; strictly positive for `w != e` when `λ` is regular dominant.
pub fn rearrangement_gap(lambda: &WeightVector, w: &Permutation) -> Result<Rational> {
    require_regular_dominant(lambda)?;
    let wb = w.act(&lambda.b)?;
    Ok(dot(&lambda.a, &lambda.b) - dot(&lambda.a, &wb))
}
