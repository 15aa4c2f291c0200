//! Skew partitions, outer border strips and the Dyck predicate, and the closed
//! form of the parabolic Kazhdan-Lusztig polynomials of type `q` for the maximal
//! parabolic quotient `S_{n-1} \ S_n`.
//!
//! Boxes are `(row, column)`, 1-based, with level `row + column`. Diagrams are read
//! rotated so that level increases upward: the box directly above `(i, j)` is
//! `(i + 1, j + 1)`, and the horizontal position of `(i, j)` is its content `j - i`
//! (leftmost = smallest content).

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::klpoly::KlOracle;
use crate::matrix::IntMatrix;
use crate::qpoly::QPoly;
use crate::symgroup::{longest_element, longest_parabolic, x_index, x_rep, Permutation};
use crate::tableaux::Partition;
use crate::{Error, Result};

pub type Cell = (usize, usize);

/// A finite set of boxes.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BoxSet(BTreeSet<Cell>);

impl BoxSet {
    pub fn new(cells: impl IntoIterator<Item = Cell>) -> Self {
        BoxSet(cells.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, c: &Cell) -> bool {
        self.0.contains(c)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Cell> {
        self.0.iter()
    }

    pub fn difference(&self, other: &BoxSet) -> BoxSet {
        BoxSet(self.0.difference(&other.0).copied().collect())
    }

    /// Rookwise connected components, each listed in box order.
    pub fn components(&self) -> Vec<BoxSet> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.0 {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some((i, j)) = stack.pop() {
                let nbrs = [(i + 1, j), (i, j + 1), (i.wrapping_sub(1), j), (i, j.wrapping_sub(1))];
                for nb in nbrs {
                    if self.0.contains(&nb) && seen.insert(nb) {
                        comp.insert(nb);
                        stack.push(nb);
                    }
                }
            }
            out.push(BoxSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(|&(i, j)| json!([i, j])).collect())
    }
}

impl fmt::Debug for BoxSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

pub fn level(c: &Cell) -> usize {
    c.0 + c.1
}

fn content(c: &Cell) -> isize {
    c.1 as isize - c.0 as isize
}

/// `outer \ inner` with `inner ⊆ outer`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewPartition {
    outer: Partition,
    inner: Partition,
}

impl SkewPartition {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidPartition(format!("{inner:?} is not contained in {outer:?}")));
        }
        Ok(SkewPartition { outer, inner })
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(outer: &[usize], inner: &[usize]) -> Result<Self> {
        SkewPartition::new(Partition::new(outer.to_vec())?, Partition::new(inner.to_vec())?)
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn boxes(&self) -> BoxSet {
        BoxSet::new(
            (0..self.outer.rows()).flat_map(|r| (self.inner.part(r) + 1..=self.outer.part(r)).map(move |c| (r + 1, c))),
        )
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn to_json(&self) -> Value {
        json!({"outer": self.outer.to_json(), "inner": self.inner.to_json()})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let parts = |key: &str| -> Result<Vec<usize>> {
            v.get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::InvalidPartition(format!("missing {key:?}")))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| Error::InvalidPartition(x.to_string())))
                .collect()
        };
        SkewPartition::from_parts(&parts("outer")?, &parts("inner")?)
    }
}

/// `Ψ(x) = [1^{i_x}]`, `i_x = #{r < n : x^{-1}(r) > r}`, for `x` a minimal coset representative.
pub fn psi_map(x: &Permutation) -> Result<Partition> {
    if x_index(x).is_none() {
        return Err(Error::NotCosetRepresentative(x.to_string()));
    }
    let inv = x.inverse();
    let count = (1..x.degree()).filter(|&r| inv.image(r) > r).count();
    Ok(Partition::column(count))
}

/// Boxes of `eta` with no box of `eta` directly above them.
pub fn outer_border_strip(eta: &BoxSet) -> BoxSet {
    BoxSet::new(eta.iter().copied().filter(|&(i, j)| !eta.contains(&(i + 1, j + 1))))
}

/// Whether a connected border strip is a Dyck cbs: its minimum level is attained at
/// both the leftmost and the rightmost box.
pub fn is_dyck_cbs(theta: &BoxSet) -> Result<bool> {
    if theta.is_empty() || !theta.is_connected() {
        return Err(Error::NotConnectedStrip(format!("{theta:?}")));
    }
    if theta.iter().any(|&(i, j)| theta.contains(&(i + 1, j + 1))) {
        return Err(Error::NotConnectedStrip(format!("{theta:?} has two boxes on one diagonal")));
    }
    let leftmost = theta.iter().min_by_key(|c| content(c)).expect("nonempty");
    let rightmost = theta.iter().max_by_key(|c| content(c)).expect("nonempty");
    let min_level = theta.iter().map(level).min().expect("nonempty");
    Ok(level(leftmost) == min_level && level(rightmost) == min_level)
}

/// Dyck predicate on an arbitrary box set (closed under the skew-shape operations used here).
pub fn is_dyck_boxes(eta: &BoxSet) -> bool {
    if eta.is_empty() {
        return true;
    }
    let comps = eta.components();
    if comps.len() > 1 {
        return comps.iter().all(is_dyck_boxes);
    }
    let theta = outer_border_strip(eta);
    if !theta.is_connected() || !is_dyck_cbs(&theta).unwrap_or(false) {
        return false;
    }
    is_dyck_boxes(&eta.difference(&theta))
}

pub fn is_dyck(eta: &SkewPartition) -> bool {
    is_dyck_boxes(&eta.boxes())
}

/// `dp(∅) = 0`, `dp(η) = c(θ) + dp(η \ θ)` with `θ` the outer border strip.
pub fn depth_boxes(eta: &BoxSet) -> usize {
    let mut eta = eta.clone();
    let mut dp = 0;
    while !eta.is_empty() {
        let theta = outer_border_strip(&eta);
        dp += theta.components().len();
        eta = eta.difference(&theta);
    }
    dp
}

pub fn depth(eta: &SkewPartition) -> usize {
    depth_boxes(&eta.boxes())
}

/// Successive outer border strips `θ, θ^(1), ...` of `eta`, outermost first.
pub fn strip_layers(eta: &BoxSet) -> Vec<BoxSet> {
    let mut eta = eta.clone();
    let mut layers = Vec::new();
    while !eta.is_empty() {
        let theta = outer_border_strip(&eta);
        eta = eta.difference(&theta);
        layers.push(theta);
    }
    layers
}

fn coset_index(x: &Permutation) -> Result<usize> {
    x_index(x).ok_or_else(|| Error::NotCosetRepresentative(x.to_string()))
}

/// `P^{L,q}_{u,v}(q)`: `q^{(|η| - dp(η))/2}` if `η = Ψ(v) \ Ψ(u)` is Dyck, else 0;
/// zero when `u ≰ v`.
pub fn parabolic_kl_q(u: &Permutation, v: &Permutation) -> Result<QPoly> {
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch(u.degree(), v.degree()));
    }
    coset_index(u)?;
    coset_index(v)?;
    let (pu, pv) = (psi_map(u)?, psi_map(v)?);
    if !pv.contains(&pu) {
        return Ok(QPoly::zero());
    }
    let eta = SkewPartition::new(pv, pu)?.boxes();
    if !is_dyck_boxes(&eta) {
        return Ok(QPoly::zero());
    }
    let dp = depth_boxes(&eta);
    assert!(eta.len() >= dp && (eta.len() - dp).is_multiple_of(2), "Dyck skew partition with odd |η| - dp(η): {eta:?}");
    Ok(QPoly::monomial((eta.len() - dp) / 2))
}

/// `P^{L,-1}_{u,v}(q) = P_{w_L u, w_L v}(q)`.
pub fn parabolic_kl_minus(oracle: &KlOracle, u: &Permutation, v: &Permutation) -> Result<QPoly> {
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch(u.degree(), v.degree()));
    }
    coset_index(u)?;
    coset_index(v)?;
    let wl = longest_parabolic(u.degree());
    oracle.kl_polynomial(&wl.compose(u)?, &wl.compose(v)?)
}

/// `(P^{L,q}_{x_j,x_i}(1))_{i,j = 1..n}` (0-based in the result).
pub fn jordan_matrix(n: usize) -> Result<IntMatrix> {
    if n < 2 {
        return Err(Error::Domain(format!("jordan matrix needs n >= 2, got {n}")));
    }
    let xs = (1..=n).map(|i| x_rep(i, n)).collect::<Result<Vec<_>>>()?;
    let mut m = IntMatrix::zeros(n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, parabolic_kl_q(&xs[j], &xs[i])?.eval_at_one());
        }
    }
    Ok(m)
}

/// `x* = w_L x w_0`.
pub fn star(x: &Permutation) -> Result<Permutation> {
    let n = x.degree();
    longest_parabolic(n).compose(x)?.compose(&longest_element(n))
}

/// Checks, as polynomial identities over all `u, v` in the chain `x_1 > ... > x_n`,
///
/// `δ_{u,v} = Σ_x (-1)^{l(u)+l(x)} P^{L,-1}_{u,x}(q) P^{L,q}_{v*,x*}(q)`,
///
/// together with `x_i* = x_{n+1-i}`.
pub fn deodhar_inversion_check(oracle: &KlOracle, n: usize) -> Result<bool> {
    if n < 1 {
        return Err(Error::Domain("n must be positive".into()));
    }
    let xs = (1..=n).map(|i| x_rep(i, n)).collect::<Result<Vec<_>>>()?;
    let stars = xs.iter().map(star).collect::<Result<Vec<_>>>()?;
    for (i, s) in stars.iter().enumerate() {
        if *s != xs[n - 1 - i] {
            return Ok(false);
        }
    }
    let minus: Vec<Vec<QPoly>> = xs
        .iter()
        .map(|u| xs.iter().map(|x| parabolic_kl_minus(oracle, u, x)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    for (a, u) in xs.iter().enumerate() {
        for (b, _) in xs.iter().enumerate() {
            let mut sum = QPoly::zero();
            for (c, x) in xs.iter().enumerate() {
                let sign = if (u.length() + x.length()) % 2 == 0 { BigInt::from(1) } else { BigInt::from(-1) };
                let q_part = parabolic_kl_q(&stars[b], &stars[c])?;
                let term = &minus[a][c] * &q_part;
                sum.add_scaled_shifted(&sign, 0, &term);
            }
            let expected = if a == b { QPoly::one() } else { QPoly::zero() };
            if sum != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Entries of `m` off the diagonal and superdiagonal, for diagnostics.
pub fn off_bidiagonal_nonzeros(m: &IntMatrix) -> Vec<(usize, usize)> {
    let n = m.size();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| j != i && j != i + 1 && !m.get(i, j).is_zero())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn skew(outer: &[usize], inner: &[usize]) -> SkewPartition {
        SkewPartition::from_parts(outer, inner).unwrap()
    }

    #[test]
    fn psi_examples() {
        assert!(psi_map(&x_rep(4, 4).unwrap()).unwrap().is_empty());
        assert_eq!(psi_map(&x_rep(1, 4).unwrap()).unwrap(), Partition::column(3));
        assert_eq!(psi_map(&x_rep(2, 3).unwrap()).unwrap(), Partition::column(1));
        for n in 1..=12 {
            for i in 1..=n {
                assert_eq!(psi_map(&x_rep(i, n).unwrap()).unwrap(), Partition::column(n - i));
            }
        }
        assert!(psi_map(&"2,1,3".parse().unwrap()).is_err());
    }

    #[test]
    fn psi_is_order_preserving() {
        for n in 1..=12 {
            for i in 1..=n {
                for j in 1..=n {
                    let (u, v) = (x_rep(i, n).unwrap(), x_rep(j, n).unwrap());
                    let bruhat = u.bruhat_leq(&v).unwrap();
                    let contained = psi_map(&v).unwrap().contains(&psi_map(&u).unwrap());
                    assert_eq!(bruhat, contained, "n={n} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn figure_two_strip() {
        let eta = skew(&[3, 2], &[]).boxes();
        let theta = outer_border_strip(&eta);
        assert_eq!(theta, BoxSet::new([(1, 2), (1, 3), (2, 1), (2, 2)]));
        assert!(!is_dyck_cbs(&theta).unwrap());
        let single = BoxSet::new([(1, 1)]);
        assert_eq!(outer_border_strip(&single), single);
        assert!(is_dyck_cbs(&single).unwrap());
        let column = skew(&[1, 1], &[]).boxes();
        assert_eq!(outer_border_strip(&column), column);
        assert!(!is_dyck_cbs(&column).unwrap());
    }

    #[test]
    fn disconnected_strip_is_an_error() {
        let eta = skew(&[2, 1], &[1]).boxes();
        assert_eq!(eta.components().len(), 2);
        assert!(matches!(is_dyck_cbs(&eta), Err(Error::NotConnectedStrip(_))));
    }

    #[test]
    fn named_dyck_verdicts() {
        assert!(is_dyck(&skew(&[3, 1], &[2])));
        assert!(!is_dyck(&skew(&[3, 1], &[1])));
        assert!(is_dyck(&skew(&[4, 4, 4, 4], &[1])));
        assert!(!is_dyck(&skew(&[4, 4, 4, 3], &[])));
        assert!(is_dyck(&skew(&[4, 4, 4, 3], &[1])));
        assert!(is_dyck(&skew(&[1], &[])));
        for k in 2..8 {
            assert!(!is_dyck(&skew(&vec![1; k], &[])));
        }
        assert!(is_dyck(&skew(&[], &[])));
    }

    #[test]
    fn depth_examples() {
        assert_eq!(depth(&skew(&[], &[])), 0);
        assert_eq!(depth(&skew(&[1], &[])), 1);
        assert_eq!(depth(&skew(&[3, 2], &[])), 2);
    }

    #[test]
    fn parabolic_q_examples() {
        for n in 2..=9 {
            for i in 1..=n {
                let xi = x_rep(i, n).unwrap();
                assert!(parabolic_kl_q(&xi, &xi).unwrap().is_one());
                for j in 1..=n {
                    let xj = x_rep(j, n).unwrap();
                    let poly = parabolic_kl_q(&xj, &xi).unwrap();
                    if j == i || j == i + 1 {
                        assert!(poly.is_one());
                    } else {
                        assert!(poly.is_zero(), "n={n} i={i} j={j}");
                    }
                }
            }
        }
        assert!(parabolic_kl_q(&"2,1,3".parse().unwrap(), &x_rep(1, 3).unwrap()).is_err());
    }

    #[test]
    fn parabolic_minus_examples() {
        let o = KlOracle::default();
        for n in 2..=5 {
            for i in 1..=n {
                for j in 1..=n {
                    let (xi, xj) = (x_rep(i, n).unwrap(), x_rep(j, n).unwrap());
                    let poly = parabolic_kl_minus(&o, &xj, &xi).unwrap();
                    if j < i {
                        assert!(poly.is_zero());
                    }
                    if j == i {
                        assert!(poly.is_one());
                    }
                }
            }
        }
        assert!(parabolic_kl_minus(&o, &x_rep(2, 3).unwrap(), &x_rep(1, 3).unwrap()).unwrap().is_one());
    }

    #[test]
    fn jordan_examples() {
        assert_eq!(jordan_matrix(2).unwrap(), IntMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]).unwrap());
        for n in 3..=12 {
            let m = jordan_matrix(n).unwrap();
            assert!(off_bidiagonal_nonzeros(&m).is_empty());
            assert!(m.get(0, 2).is_zero());
            for i in 0..n {
                assert_eq!(*m.get(i, i), BigInt::from(1));
                if i + 1 < n {
                    assert_eq!(*m.get(i, i + 1), BigInt::from(1));
                }
            }
        }
        assert!(jordan_matrix(1).is_err());
    }

    #[test]
    fn inversion_small() {
        let o = KlOracle::default();
        for n in 1..=5 {
            assert!(deodhar_inversion_check(&o, n).unwrap(), "n={n}");
        }
    }

    fn arb_skew() -> impl Strategy<Value = SkewPartition> {
        (prop::collection::vec(1usize..=6, 0..=5), prop::collection::vec(0usize..=6, 5)).prop_filter_map(
            "at most 20 boxes",
            |(mut outer, cuts)| {
                outer.sort_unstable_by(|a, b| b.cmp(a));
                let mut inner: Vec<usize> = outer.iter().zip(&cuts).map(|(&o, &c)| c.min(o)).collect();
                inner.sort_unstable_by(|a, b| b.cmp(a));
                for k in 0..inner.len() {
                    inner[k] = inner[k].min(outer[k]);
                }
                while inner.last() == Some(&0) {
                    inner.pop();
                }
                let s = SkewPartition::from_parts(&outer, &inner).ok()?;
                (s.size() <= 20).then_some(s)
            },
        )
    }

    proptest! {
        #[test]
        fn dyck_parity(eta in arb_skew()) {
            let boxes = eta.boxes();
            prop_assert_eq!(boxes.len(), eta.size());
            if is_dyck_boxes(&boxes) {
                prop_assert_eq!((boxes.len() - depth_boxes(&boxes)) % 2, 0);
            }
            let layers = strip_layers(&boxes);
            prop_assert_eq!(layers.iter().map(BoxSet::len).sum::<usize>(), boxes.len());
        }
    }
}
