//! Coordinates in the coherent-family space of dimension `(n-1)^2 + 1`.
//!
//! The reference basis is `Ψ̄_{v_{k,l}}` (`2 <= k, l <= n`) together with `Ψ̄_1`; the
//! induced families `Ψ_{i,j}` are given by their coordinates in it. Labels are ordered
//! row-major in `(k, l)` with the trivial family last, in every vector and matrix.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::check_index;
use crate::json;
use crate::langlands::{gk_dim_class, parameter_from, GkClass, LanglandsParameter};
use crate::matrix::IntMatrix;
use crate::rational::Rational;
use crate::symgroup::{bracket_set, v_cycle, Permutation};
use crate::weights::{bernstein_c, is_dominant, is_regular, WeightVector};
use crate::{Error, Result};

/// `Vbar(k, l)` is `Ψ̄_{v_{k,l}}`, `Triv` is `Ψ̄_1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum BasisLabel {
    Vbar(usize, usize),
    Triv,
}

/// `Psi(k, l)` is `Ψ_{k,l}`, `Triv` is `Ψ̄_1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum PsiLabel {
    Psi(usize, usize),
    Triv,
}

/// The `(n-1)^2 + 1` labels `Vbar(2,2), Vbar(2,3), ..., Vbar(n,n), Triv`.
pub fn basis_labels(n: usize) -> Vec<BasisLabel> {
    let mut out: Vec<BasisLabel> = (2..=n).flat_map(|k| (2..=n).map(move |l| BasisLabel::Vbar(k, l))).collect();
    out.push(BasisLabel::Triv);
    out
}

/// The `(n-1)^2 + 1` labels `Psi(2,2), ..., Psi(n,n), Triv`.
pub fn psi_labels(n: usize) -> Vec<PsiLabel> {
    let mut out: Vec<PsiLabel> = (2..=n).flat_map(|k| (2..=n).map(move |l| PsiLabel::Psi(k, l))).collect();
    out.push(PsiLabel::Triv);
    out
}

/// Finitely supported integer coordinates; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct CoherentVector {
    n: usize,
    coords: BTreeMap<BasisLabel, BigInt>,
}

impl CoherentVector {
    pub fn zero(n: usize) -> Self {
        CoherentVector { n, coords: BTreeMap::new() }
    }

    pub fn basis(n: usize, label: BasisLabel) -> Result<Self> {
        let mut v = CoherentVector::zero(n);
        v.add(label, &BigInt::one())?;
        Ok(v)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    fn check_label(&self, label: BasisLabel) -> Result<()> {
        if let BasisLabel::Vbar(k, l) = label {
            check_index(k, 2, self.n)?;
            check_index(l, 2, self.n)?;
        }
        Ok(())
    }

    /// `self[label] += c`.
    pub fn add(&mut self, label: BasisLabel, c: &BigInt) -> Result<()> {
        self.check_label(label)?;
        let entry = self.coords.entry(label).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coords.remove(&label);
        }
        Ok(())
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, c: &BigInt, other: &CoherentVector) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DegreeMismatch(self.n, other.n));
        }
        for (label, x) in &other.coords {
            self.add(*label, &(c * x))?;
        }
        Ok(())
    }

    pub fn get(&self, label: BasisLabel) -> BigInt {
        self.coords.get(&label).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisLabel, &BigInt)> {
        self.coords.iter()
    }

    /// Dense coordinates in [`basis_labels`] order.
    pub fn dense(&self) -> Vec<BigInt> {
        basis_labels(self.n).into_iter().map(|l| self.get(l)).collect()
    }

    /// `{"n":..,"coords":[{"k":..,"l":..,"c":..}],"triv":..}`.
    pub fn to_json(&self) -> Value {
        let coords: Vec<Value> = self
            .coords
            .iter()
            .filter_map(|(label, c)| match label {
                BasisLabel::Vbar(k, l) => Some(json!({"k": k, "l": l, "c": json::int(c)})),
                BasisLabel::Triv => None,
            })
            .collect();
        json!({"n": self.n, "coords": coords, "triv": json::int(&self.get(BasisLabel::Triv))})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Domain(format!("coherent vector JSON: {what}"));
        let int = |x: &Value| -> Result<BigInt> {
            match x {
                Value::Number(num) => num.to_string().parse().map_err(|_| bad("non-integer coefficient")),
                Value::String(s) => s.parse().map_err(|_| bad("non-integer coefficient")),
                _ => Err(bad("non-integer coefficient")),
            }
        };
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing n"))? as usize;
        let mut out = CoherentVector::zero(n);
        for entry in v.get("coords").and_then(Value::as_array).ok_or_else(|| bad("missing coords"))? {
            let idx = |key: &str| entry.get(key).and_then(Value::as_u64).map(|x| x as usize);
            let (k, l) = idx("k").zip(idx("l")).ok_or_else(|| bad("coordinate without k, l"))?;
            out.add(BasisLabel::Vbar(k, l), &int(entry.get("c").ok_or_else(|| bad("coordinate without c"))?)?)?;
        }
        if let Some(t) = v.get("triv") {
            out.add(BasisLabel::Triv, &int(t)?)?;
        }
        Ok(out)
    }
}

impl fmt::Debug for CoherentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoherentVector(n={}, {:?})", self.n, self.coords)
    }
}

/// `Ψ_{i,j} = Σ_{(k,l) ∈ [i]×[j]} Ψ̄_{v_{k,l}} + δ_{i,j} Ψ̄_1`.
pub fn psi_induced(i: usize, j: usize, n: usize) -> Result<CoherentVector> {
    let mut v = CoherentVector::zero(n);
    for k in bracket_set(i, n)? {
        for l in bracket_set(j, n)? {
            v.add(BasisLabel::Vbar(k, l), &BigInt::one())?;
        }
    }
    if i == j {
        v.add(BasisLabel::Triv, &BigInt::one())?;
    }
    Ok(v)
}

fn sign(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `Ψ̄_{v_{i,j}} = Σ_{k >= i, l >= j} (-1)^{k-i+l-j} Ψ_{k,l} + (-1)^{i+j-1}(n - max(i,j) + 1) Ψ̄_1`.
pub fn psibar_in_psi(i: usize, j: usize, n: usize) -> Result<BTreeMap<PsiLabel, BigInt>> {
    check_index(i, 2, n)?;
    check_index(j, 2, n)?;
    let mut out = BTreeMap::new();
    for k in i..=n {
        for l in j..=n {
            out.insert(PsiLabel::Psi(k, l), sign(k - i + l - j));
        }
    }
    let triv = sign(i + j - 1) * BigInt::from(n - i.max(j) + 1);
    out.insert(PsiLabel::Triv, triv);
    Ok(out)
}

/// Substitutes the `Ψ`-coordinates of `psi_induced` into a `Ψ`-expansion.
pub fn expand_psi(n: usize, expansion: &BTreeMap<PsiLabel, BigInt>) -> Result<CoherentVector> {
    let mut v = CoherentVector::zero(n);
    for (label, c) in expansion {
        match *label {
            PsiLabel::Psi(k, l) => v.add_scaled(c, &psi_induced(k, l, n)?)?,
            PsiLabel::Triv => v.add(BasisLabel::Triv, c)?,
        }
    }
    Ok(v)
}

/// Row `r` holds the `Ψ̄`-coordinates of the `r`-th label of [`psi_labels`].
pub fn transition_psi_to_psibar(n: usize) -> Result<IntMatrix> {
    if n < 2 {
        return Err(Error::Domain(format!("transition matrices need n >= 2, got {n}")));
    }
    let rows = psi_labels(n)
        .into_iter()
        .map(|label| match label {
            PsiLabel::Psi(k, l) => psi_induced(k, l, n).map(|v| v.dense()),
            PsiLabel::Triv => CoherentVector::basis(n, BasisLabel::Triv).map(|v| v.dense()),
        })
        .collect::<Result<_>>()?;
    IntMatrix::from_rows(rows)
}

/// Row `r` holds the `Ψ`-coordinates of the `r`-th label of [`basis_labels`].
pub fn transition_psibar_to_psi(n: usize) -> Result<IntMatrix> {
    if n < 2 {
        return Err(Error::Domain(format!("transition matrices need n >= 2, got {n}")));
    }
    let cols = psi_labels(n);
    let rows = basis_labels(n)
        .into_iter()
        .map(|label| {
            let exp = match label {
                BasisLabel::Vbar(k, l) => psibar_in_psi(k, l, n)?,
                BasisLabel::Triv => BTreeMap::from([(PsiLabel::Triv, BigInt::one())]),
            };
            Ok(cols.iter().map(|c| exp.get(c).cloned().unwrap_or_default()).collect())
        })
        .collect::<Result<_>>()?;
    IntMatrix::from_rows(rows)
}

/// Both families `Ψ_{1,j} = Σ_{k>=2} (-1)^k Ψ_{k,j} + (-1)^{j-1} Ψ̄_1` and the transposed
/// relations for `Ψ_{i,1}`, for all `1 <= i, j <= n`, as coordinate identities.
pub fn psi_row_relations(n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::Domain(format!("row relations need n >= 2, got {n}")));
    }
    for m in 1..=n {
        let mut rhs_row = CoherentVector::zero(n);
        let mut rhs_col = CoherentVector::zero(n);
        for k in 2..=n {
            rhs_row.add_scaled(&sign(k), &psi_induced(k, m, n)?)?;
            rhs_col.add_scaled(&sign(k), &psi_induced(m, k, n)?)?;
        }
        rhs_row.add(BasisLabel::Triv, &sign(m - 1))?;
        rhs_col.add(BasisLabel::Triv, &sign(m - 1))?;
        if psi_induced(1, m, n)? != rhs_row || psi_induced(m, 1, n)? != rhs_col {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `{Ψ_{i,j} : 2 <= i, j <= n} ∪ {Ψ̄_1}` is a unimodular basis: the coordinate matrix has determinant ±1.
pub fn basis_check(n: usize) -> Result<bool> {
    let det = transition_psi_to_psibar(n)?.determinant();
    Ok(det == BigInt::one() || det == -BigInt::one())
}

/// `Σ coords[Vbar(k,l)] · c_{v_{k,l}}(λ)`; the trivial family contributes 0.
pub fn degree_functional(vec: &CoherentVector, lambda: &WeightVector) -> Result<Rational> {
    if vec.degree() != lambda.degree() {
        return Err(Error::DegreeMismatch(vec.degree(), lambda.degree()));
    }
    if !(is_regular(lambda) && is_dominant(lambda)) {
        return Err(Error::NotRegularDominant);
    }
    let mut sum = Rational::zero();
    for (label, c) in vec.iter() {
        if let BasisLabel::Vbar(k, l) = *label {
            sum += Rational::from_integer(c.clone()) * bernstein_c(&v_cycle(k, l, vec.degree())?, lambda)?;
        }
    }
    Ok(sum)
}

/// One composition factor: `X̄(γ_{λ,v_{k,l}})` when `cycle` is `Some((k, l))`, else `F_λ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Constituent {
    pub cycle: Option<(usize, usize)>,
    pub parameter: LanglandsParameter,
    pub multiplicity: usize,
    pub class: GkClass,
    /// Bernstein degree `c_{v_{k,l}}(λ)` for the minimal constituents.
    pub bernstein_degree: Option<Rational>,
}

impl Constituent {
    pub fn to_json(&self) -> Value {
        let n = self.parameter.degree();
        let mut v = json!({
            "parameter": self.parameter.to_json(),
            "multiplicity": self.multiplicity,
            "class": self.class.name(),
        });
        let obj = v.as_object_mut().expect("object literal");
        match self.cycle {
            Some((k, l)) => {
                obj.insert("label".into(), json!(format!("v_{k},{l}")));
                obj.insert("k".into(), json!(k));
                obj.insert("l".into(), json!(l));
            }
            None => {
                obj.insert("label".into(), json!("F"));
            }
        }
        if let Some(d) = &self.bernstein_degree {
            obj.insert("bernstein_degree".into(), json::rational(d));
        }
        if let Some(d) = self.class.gk_dim(n) {
            obj.insert("gk_dim".into(), json!(d));
        }
        v
    }
}

/// Composition factors of the module induced at `λ_{i,j}`: one `X̄(γ_{λ,v_{k,l}})` per
/// `(k, l) ∈ [i]×[j]`, plus `F_λ` when `i = j`. Classes come from the classifier.
pub fn composition_series(i: usize, j: usize, lambda: &WeightVector) -> Result<Vec<Constituent>> {
    let n = lambda.degree();
    if !(is_regular(lambda) && is_dominant(lambda)) {
        return Err(Error::NotRegularDominant);
    }
    let mut out = Vec::new();
    for k in bracket_set(i, n)? {
        for l in bracket_set(j, n)? {
            let v = v_cycle(k, l, n)?;
            let parameter = parameter_from(lambda, &v)?;
            out.push(Constituent {
                cycle: Some((k, l)),
                class: gk_dim_class(&parameter)?,
                parameter,
                multiplicity: 1,
                bernstein_degree: Some(bernstein_c(&v, lambda)?),
            });
        }
    }
    if i == j {
        let parameter = parameter_from(lambda, &Permutation::identity(n))?;
        out.push(Constituent {
            cycle: None,
            class: gk_dim_class(&parameter)?,
            parameter,
            multiplicity: 1,
            bernstein_degree: None,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::weights::{dim_f, weyl_dim};

    fn vec_of(n: usize, entries: &[(BasisLabel, i64)]) -> CoherentVector {
        let mut v = CoherentVector::zero(n);
        for (l, c) in entries {
            v.add(*l, &BigInt::from(*c)).unwrap();
        }
        v
    }

    fn psi_map(entries: &[(PsiLabel, i64)]) -> BTreeMap<PsiLabel, BigInt> {
        entries.iter().map(|(l, c)| (*l, BigInt::from(*c))).collect()
    }

    use BasisLabel::{Triv, Vbar};

    #[test]
    fn psi_induced_examples() {
        assert_eq!(psi_induced(1, 1, 3).unwrap(), vec_of(3, &[(Vbar(2, 2), 1), (Triv, 1)]));
        assert_eq!(psi_induced(2, 3, 3).unwrap(), vec_of(3, &[(Vbar(2, 3), 1), (Vbar(3, 3), 1)]));
        assert_eq!(psi_induced(1, 2, 2).unwrap(), vec_of(2, &[(Vbar(2, 2), 1)]));
        assert!(psi_induced(0, 1, 3).is_err());
    }

    #[test]
    fn psibar_examples() {
        assert_eq!(psibar_in_psi(2, 2, 2).unwrap(), psi_map(&[(PsiLabel::Psi(2, 2), 1), (PsiLabel::Triv, -1)]));
        assert_eq!(
            psibar_in_psi(2, 2, 3).unwrap(),
            psi_map(&[
                (PsiLabel::Psi(2, 2), 1),
                (PsiLabel::Psi(2, 3), -1),
                (PsiLabel::Psi(3, 2), -1),
                (PsiLabel::Psi(3, 3), 1),
                (PsiLabel::Triv, -2),
            ])
        );
        assert!(psibar_in_psi(1, 2, 3).is_err());
    }

    #[test]
    fn substitution_recovers_basis() {
        for n in 2..=12 {
            for i in 2..=n {
                for j in 2..=n {
                    let v = expand_psi(n, &psibar_in_psi(i, j, n).unwrap()).unwrap();
                    assert_eq!(v, CoherentVector::basis(n, Vbar(i, j)).unwrap(), "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn transition_matrices_are_inverse() {
        for n in 2..=12 {
            let a = transition_psi_to_psibar(n).unwrap();
            let b = transition_psibar_to_psi(n).unwrap();
            assert_eq!(a.size(), (n - 1) * (n - 1) + 1);
            assert!(a.mul(&b).unwrap().is_identity());
            assert!(b.mul(&a).unwrap().is_identity());
            assert!(psi_row_relations(n).unwrap());
            assert!(basis_check(n).unwrap());
        }
    }

    #[test]
    fn transition_n3() {
        let a = transition_psi_to_psibar(3).unwrap();
        let expected = IntMatrix::from_i64_rows(&[
            &[1, 1, 1, 1, 1],
            &[0, 1, 0, 1, 0],
            &[0, 0, 1, 1, 0],
            &[0, 0, 0, 1, 1],
            &[0, 0, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(a, expected);
    }

    #[test]
    fn degree_functional_matches_dim_f() {
        for n in 2..=6 {
            let l =
                WeightVector::from_gaps(int(1), &(1..n as u64).collect::<Vec<_>>(), int(-2), &vec![3; n - 1]).unwrap();
            for i in 1..=n {
                for j in 1..=n {
                    let d = degree_functional(&psi_induced(i, j, n).unwrap(), &l).unwrap();
                    assert_eq!(d, dim_f(i, j, &l).unwrap());
                    assert_eq!(d, weyl_dim(l.a(), i).unwrap() * weyl_dim(l.b(), j).unwrap());
                }
            }
            let triv = CoherentVector::basis(n, Triv).unwrap();
            assert!(degree_functional(&triv, &l).unwrap().is_zero());
        }
        let l4 = WeightVector::standard(4);
        assert_eq!(degree_functional(&CoherentVector::basis(4, Vbar(3, 3)).unwrap(), &l4).unwrap(), int(4));
    }

    #[test]
    fn composition_examples() {
        let l3 = WeightVector::standard(3);
        let cs = composition_series(1, 1, &l3).unwrap();
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].cycle, Some((2, 2)));
        assert_eq!(cs[0].class, GkClass::Minimal);
        assert_eq!(cs[1].cycle, None);
        assert_eq!(cs[1].class, GkClass::Zero);
        assert!(cs.iter().all(|c| c.multiplicity == 1));

        let l4 = WeightVector::standard(4);
        let cs = composition_series(2, 3, &l4).unwrap();
        assert_eq!(cs.len(), 4);
        assert!(cs.iter().all(|c| c.class == GkClass::Minimal && c.multiplicity == 1));
        let total: Rational = cs.iter().filter_map(|c| c.bernstein_degree.clone()).sum();
        assert_eq!(total, int(9));
    }

    #[test]
    fn json_round_trip() {
        let v = psi_induced(1, 1, 3).unwrap();
        let j = v.to_json();
        assert_eq!(j.to_string(), r#"{"coords":[{"c":1,"k":2,"l":2}],"n":3,"triv":1}"#);
        assert_eq!(CoherentVector::from_json(&j).unwrap(), v);
    }
}
