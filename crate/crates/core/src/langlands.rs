//! Characters `(a, b)` of `C^×`, Langlands parameters as multisets of characters,
//! and the Gelfand-Kirillov dimension classifier.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde_json::{json, Value};

use crate::error::check_index;
use crate::json;
use crate::rational::{int, is_integer, is_positive_integer, parse_rational, ratio, Rational};
use crate::symgroup::Permutation;
use crate::weights::WeightVector;
use crate::{Error, Result};

/// `χ_{a,b}` with `a - b ∈ Z`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    a: Rational,
    b: Rational,
}

impl Character {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if !is_integer(&(&a - &b)) {
            return Err(Error::InvalidCharacter(format!("{a}:{b}")));
        }
        Ok(Character { a, b })
    }

    pub fn from_i64s(a: i64, b: i64) -> Self {
        Character { a: int(a), b: int(b) }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn to_json(&self) -> Value {
        json!([json::rational(&self.a), json::rational(&self.b)])
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.a, self.b)
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// A multiset of characters, stored sorted in decreasing order so that equality is
/// multiset equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LanglandsParameter {
    entries: Vec<Character>,
}

impl LanglandsParameter {
    pub fn new(mut entries: Vec<Character>) -> Self {
        entries.sort_unstable_by(|x, y| y.cmp(x));
        LanglandsParameter { entries }
    }

    pub fn from_i64_pairs(pairs: &[(i64, i64)]) -> Self {
        LanglandsParameter::new(pairs.iter().map(|&(a, b)| Character::from_i64s(a, b)).collect())
    }

    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Character] {
        &self.entries
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.entries.iter().map(Character::to_json).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::InvalidCharacter(v.to_string());
        let rat = |x: &Value| match x {
            Value::String(s) => parse_rational(s, 0),
            Value::Number(n) => parse_rational(&n.to_string(), 0),
            _ => Err(bad()),
        };
        let entries = v
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|pair| match pair.as_array().map(Vec::as_slice) {
                Some([a, b]) => Character::new(rat(a)?, rat(b)?),
                _ => Err(bad()),
            })
            .collect::<Result<_>>()?;
        Ok(LanglandsParameter::new(entries))
    }

    fn without(&self, k: usize) -> LanglandsParameter {
        let mut entries = self.entries.clone();
        entries.remove(k);
        LanglandsParameter { entries }
    }
}

impl fmt::Display for LanglandsParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries.iter().join(";"))
    }
}

impl fmt::Debug for LanglandsParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.entries.iter().map(|c| format!("({c})")).join(","))
    }
}

impl FromStr for LanglandsParameter {
    type Err = Error;

    /// `a:b;a:b;...`, rationals as `p/q` or integers; error positions are 1-based columns.
    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        let mut offset = 0;
        for item in s.split(';') {
            let (a, b) = item
                .split_once(':')
                .ok_or_else(|| Error::Parse { pos: offset + 1, msg: format!("expected a:b, got {item:?}") })?;
            let a = parse_rational(a, offset)?;
            let b = parse_rational(b, offset + item.find(':').expect("split succeeded") + 1)?;
            entries.push(Character::new(a, b)?);
            offset += item.len() + 1;
        }
        Ok(LanglandsParameter::new(entries))
    }
}

/// `a ≻ b` iff `a - b` is a positive integer.
pub fn succ(a: &Rational, b: &Rational) -> bool {
    is_positive_integer(&(a - b))
}

/// Multiplicity free and arrangeable as `a_1 ≻ a_2 ≻ ...` with `b_1 ≻ b_2 ≻ ...`
/// simultaneously. Only the decreasing-`a` arrangement can work, and entries are kept in it.
pub fn is_totally_ordered(gamma: &LanglandsParameter) -> bool {
    gamma.entries.iter().tuple_windows().all(|(x, y)| succ(&x.a, &y.a) && succ(&x.b, &y.b))
}

pub fn is_integral(gamma: &LanglandsParameter) -> bool {
    match gamma.entries.first() {
        None => true,
        Some(first) => gamma.entries.iter().all(|c| is_integer(&(&c.a - &first.a))),
    }
}

/// Gelfand-Kirillov dimension class: `0`, the minimal nonzero value `2n - 2`, or larger.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum GkClass {
    Zero,
    Minimal,
    Larger,
}

impl GkClass {
    /// The exact dimension for `Zero` and `Minimal`; `None` for `Larger`.
    pub fn gk_dim(self, n: usize) -> Option<usize> {
        match self {
            GkClass::Zero => Some(0),
            GkClass::Minimal => Some(2 * n - 2),
            GkClass::Larger => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GkClass::Zero => "Zero",
            GkClass::Minimal => "Minimal",
            GkClass::Larger => "Larger",
        }
    }

    /// `{"class": ..., "gk_dim": ...}`; `Larger` has no `gk_dim` key.
    pub fn to_json(self, n: usize) -> Value {
        match self.gk_dim(n) {
            Some(d) => json!({"class": self.name(), "gk_dim": d}),
            None => json!({"class": self.name()}),
        }
    }
}

impl fmt::Display for GkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn gk_dim_class(gamma: &LanglandsParameter) -> Result<GkClass> {
    let n = gamma.degree();
    if n < 2 {
        return Err(Error::Domain(format!("classifier needs n >= 2, got {n}")));
    }
    if is_totally_ordered(gamma) {
        return Ok(GkClass::Zero);
    }
    if (0..n).any(|k| is_totally_ordered(&gamma.without(k))) {
        return Ok(GkClass::Minimal);
    }
    Ok(GkClass::Larger)
}

/// `γ_{λ,w} = {(a_k, b_{w^{-1}(k)})}`.
pub fn parameter_from(lambda: &WeightVector, w: &Permutation) -> Result<LanglandsParameter> {
    let wb = w.act(lambda.b())?;
    let entries = lambda.a().iter().zip(wb).map(|(a, b)| Character::new(a.clone(), b)).collect::<Result<_>>()?;
    Ok(LanglandsParameter::new(entries))
}

/// `(i_0, j_0) = (i, j-1)` if `i < j`, `(i-1, j)` if `i > j`.
pub fn singular_indices(i: usize, j: usize, n: usize) -> Result<(usize, usize)> {
    check_index(i, 1, n)?;
    check_index(j, 1, n)?;
    match i.cmp(&j) {
        std::cmp::Ordering::Less => Ok((i, j - 1)),
        std::cmp::Ordering::Greater => Ok((i - 1, j)),
        std::cmp::Ordering::Equal => Err(Error::Domain(format!("singular point needs i != j, got {i} = {j}"))),
    }
}

/// The singular weight `λ^0_{i,j}` and parameter `γ^0_{i,j}`: the chain
/// `n/2 - 1, ..., 1 - n/2` with `n/2 - i_0` repeated in `a` and `n/2 - j_0` repeated
/// in `b`, and the diagonal chain plus `(n/2 - i_0, n/2 - j_0)`.
pub fn singular_point(i: usize, j: usize, n: usize) -> Result<(WeightVector, LanglandsParameter)> {
    let (i0, j0) = singular_indices(i, j, n)?;
    let half = ratio(n as i64, 2);
    let at = |k: usize| &half - int(k as i64);
    let block = |k0: usize| -> Vec<Rational> {
        let mut v: Vec<Rational> = (1..n).map(at).collect();
        v.insert(k0, at(k0));
        v
    };
    let lambda = WeightVector::new(block(i0), block(j0))?;
    let mut entries: Vec<Character> = (1..n).map(|k| Character { a: at(k), b: at(k) }).collect();
    entries.push(Character::new(at(i0), at(j0))?);
    Ok((lambda, LanglandsParameter::new(entries)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::w_cycle;
    use crate::weights::{is_dominant, is_regular};
    use proptest::prelude::*;

    fn gp(pairs: &[(i64, i64)]) -> LanglandsParameter {
        LanglandsParameter::from_i64_pairs(pairs)
    }

    /// Exhaustive: some ordering of some `m`-element submultiset forms a ≻-chain in both coordinates.
    fn has_chain_of_size(gamma: &LanglandsParameter, m: usize) -> bool {
        gamma
            .entries()
            .iter()
            .permutations(m)
            .any(|seq| seq.iter().tuple_windows().all(|(x, y)| succ(x.a(), y.a()) && succ(x.b(), y.b())))
    }

    fn brute_class(gamma: &LanglandsParameter) -> GkClass {
        let n = gamma.degree();
        if has_chain_of_size(gamma, n) {
            GkClass::Zero
        } else if has_chain_of_size(gamma, n - 1) {
            GkClass::Minimal
        } else {
            GkClass::Larger
        }
    }

    #[test]
    fn succ_examples() {
        assert!(succ(&int(2), &int(1)));
        assert!(!succ(&int(1), &int(1)));
        assert!(succ(&ratio(1, 2), &ratio(-1, 2)));
        assert!(!succ(&int(1), &ratio(1, 2)));
    }

    #[test]
    fn order_predicates() {
        let diag = gp(&[(2, 2), (1, 1), (0, 0)]);
        assert!(is_totally_ordered(&diag));
        let twisted = gp(&[(2, 1), (1, 2), (0, 0)]);
        assert!(is_integral(&twisted) && !is_totally_ordered(&twisted));
        let half = LanglandsParameter::new(vec![
            Character::from_i64s(0, 0),
            Character::new(ratio(1, 2), ratio(1, 2)).unwrap(),
        ]);
        assert!(!is_integral(&half));
        assert!(!is_totally_ordered(&gp(&[(1, 1), (1, 1)])));
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(gk_dim_class(&gp(&[(2, 2), (1, 1), (0, 0)])).unwrap(), GkClass::Zero);
        assert_eq!(gk_dim_class(&gp(&[(2, 1), (1, 2), (0, 0)])).unwrap(), GkClass::Minimal);
        assert_eq!(gk_dim_class(&gp(&[(1, 0), (1, 0), (0, 1)])).unwrap(), GkClass::Larger);
        assert!(gk_dim_class(&gp(&[(0, 0)])).is_err());
        assert_eq!(GkClass::Minimal.to_json(3).to_string(), r#"{"class":"Minimal","gk_dim":4}"#);
        assert_eq!(GkClass::Larger.gk_dim(3), None);
    }

    #[test]
    fn character_lattice() {
        assert!(matches!(Character::new(int(0), ratio(1, 2)), Err(Error::InvalidCharacter(_))));
    }

    #[test]
    fn parse_and_print() {
        let g: LanglandsParameter = "2:1;1:2;0:0".parse().unwrap();
        assert_eq!(g, gp(&[(0, 0), (1, 2), (2, 1)]));
        assert_eq!(g.to_string(), "2:1;1:2;0:0");
        assert_eq!(g.to_json().to_string(), r#"[["2","1"],["1","2"],["0","0"]]"#);
        assert_eq!(LanglandsParameter::from_json(&g.to_json()).unwrap(), g);
        assert!(matches!("2:1;1".parse::<LanglandsParameter>(), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!("2:1;1:x".parse::<LanglandsParameter>(), Err(Error::Parse { pos: 7, .. })));
        let h: LanglandsParameter = "1/2:-1/2;-1/2:1/2".parse().unwrap();
        assert_eq!(h.degree(), 2);
    }

    #[test]
    fn parameter_examples() {
        let l = WeightVector::standard(3);
        assert_eq!(parameter_from(&l, &Permutation::identity(3)).unwrap(), gp(&[(2, 2), (1, 1), (0, 0)]));
        assert_eq!(parameter_from(&l, &w_cycle(1, 2, 3).unwrap()).unwrap(), gp(&[(2, 1), (1, 2), (0, 0)]));
        let off = WeightVector::new(vec![ratio(1, 2), ratio(-1, 2)], vec![int(1), int(0)]).unwrap();
        assert!(matches!(parameter_from(&off, &Permutation::identity(2)), Err(Error::InvalidCharacter(_))));
    }

    #[test]
    fn classes_over_symmetric_group() {
        for n in 2..=6 {
            let l = WeightVector::standard(n);
            let cycles: std::collections::BTreeSet<Permutation> = (1..=n)
                .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| w_cycle(i, j, n).unwrap()))
                .collect();
            for w in Permutation::all(n) {
                let class = gk_dim_class(&parameter_from(&l, &w).unwrap()).unwrap();
                let expected = if w.is_identity() {
                    GkClass::Zero
                } else if cycles.contains(&w) {
                    GkClass::Minimal
                } else {
                    GkClass::Larger
                };
                assert_eq!(class, expected, "n={n} w={w}");
            }
        }
    }

    #[test]
    fn parameter_injective_for_regular_weights() {
        for n in 2..=5 {
            let l =
                WeightVector::from_gaps(int(0), &vec![2; n - 1], int(3), &(1..n as u64).collect::<Vec<_>>()).unwrap();
            let params: std::collections::HashSet<_> =
                Permutation::all(n).map(|w| parameter_from(&l, &w).unwrap()).collect();
            assert_eq!(params.len(), (1..=n).product::<usize>());
        }
    }

    #[test]
    fn singular_examples() {
        let (l, g) = singular_point(1, 2, 4).unwrap();
        assert_eq!(l, WeightVector::from_i64s(&[1, 1, 0, -1], &[1, 1, 0, -1]).unwrap());
        assert_eq!(g, gp(&[(1, 1), (0, 0), (-1, -1), (1, 1)]));
        for n in (2..=8).step_by(2) {
            for i in 1..=n {
                for j in (1..=n).filter(|&j| j != i) {
                    let (l, g) = singular_point(i, j, n).unwrap();
                    assert!(is_dominant(&l) && !is_regular(&l));
                    assert_eq!(gk_dim_class(&g).unwrap(), GkClass::Minimal);
                }
            }
        }
        assert!(singular_point(2, 2, 4).is_err());
        assert!(singular_point(0, 2, 4).is_err());
    }

    fn arb_param() -> impl Strategy<Value = LanglandsParameter> {
        (2usize..=5)
            .prop_flat_map(|n| prop::collection::vec((0i64..5, 0i64..5), n))
            .prop_map(|pairs| LanglandsParameter::from_i64_pairs(&pairs))
    }

    proptest! {
        #[test]
        fn classifier_matches_brute_force(g in arb_param()) {
            prop_assert_eq!(gk_dim_class(&g).unwrap(), brute_class(&g));
        }
    }
}
