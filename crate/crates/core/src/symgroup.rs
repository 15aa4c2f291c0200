//! The symmetric group `S_n` in one-line notation, and the distinguished
//! elements attached to the maximal parabolic subgroup `S_{n-1} x S_1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde_json::Value;

use crate::error::check_index;
use crate::{Error, Result};

/// A permutation of `{1, ..., n}`; entry `k - 1` of `images` is `w(k)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty image list".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Simple reflection `s_k = (k k+1)`, `1 <= k < n`.
    pub fn simple(k: usize, n: usize) -> Result<Self> {
        if k == 0 || k >= n {
            return Err(Error::IndexOutOfRange { index: k, n });
        }
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(k - 1, k);
        Ok(Permutation { images })
    }

    /// All of `S_n` in lexicographic order of one-line notation.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (1..=n).permutations(n).map(|images| Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(k)` for `1 <= k <= n`.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { images: inv }
    }

    /// `self * other`, i.e. `k -> self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        same_degree(self, other)?;
        Ok(Permutation { images: other.images.iter().map(|&v| self.images[v - 1]).collect() })
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        (0..w.len()).map(|s| (s + 1..w.len()).filter(|&t| w[s] > w[t]).count()).sum()
    }

    /// Bruhat order via the rank-matrix criterion:
    /// `u <= v` iff `#{s <= p : u(s) >= q} <= #{s <= p : v(s) >= q}` for all `p, q`.
    pub fn bruhat_leq(&self, other: &Permutation) -> Result<bool> {
        same_degree(self, other)?;
        let n = self.degree();
        let mut cu = vec![0usize; n + 2];
        let mut cv = vec![0usize; n + 2];
        for p in 0..n {
            for c in &mut cu[1..=self.images[p]] {
                *c += 1;
            }
            for c in &mut cv[1..=other.images[p]] {
                *c += 1;
            }
            if (1..=n).any(|q| cu[q] > cv[q]) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `(w.v)_k = v_{w^{-1}(k)}`: the entry in slot `k` moves to slot `w(k)`.
    pub fn act<T: Clone>(&self, v: &[T]) -> Result<Vec<T>> {
        if v.len() != self.degree() {
            return Err(Error::DegreeMismatch(self.degree(), v.len()));
        }
        let inv = self.inverse();
        Ok(inv.images.iter().map(|&s| v[s - 1].clone()).collect())
    }

    /// True iff `s_k w < w`, i.e. `k + 1` appears before `k` in one-line notation.
    pub fn has_left_descent(&self, k: usize) -> bool {
        let inv = self.inverse();
        inv.image(k) > inv.image(k + 1)
    }

    pub fn to_json(&self) -> Value {
        crate::json::usizes(&self.images)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::InvalidPermutation(v.to_string()))?;
        let images = arr
            .iter()
            .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| Error::InvalidPermutation(v.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images)
    }
}

fn same_degree(u: &Permutation, v: &Permutation) -> Result<()> {
    if u.degree() != v.degree() {
        Err(Error::DegreeMismatch(u.degree(), v.degree()))
    } else {
        Ok(())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.images.iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Comma-separated one-line notation, e.g. `"2,3,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut images = Vec::new();
        let mut pos = 0;
        for tok in s.split(',') {
            let t = tok.trim();
            let v: usize = t.parse().map_err(|_| Error::Parse {
                pos: pos + 1 + (tok.len() - tok.trim_start().len()),
                msg: format!("expected a positive integer, found {t:?}"),
            })?;
            images.push(v);
            pos += tok.len() + 1;
        }
        Permutation::new(images)
    }
}

pub fn compose(u: &Permutation, v: &Permutation) -> Result<Permutation> {
    u.compose(v)
}

pub fn length(w: &Permutation) -> usize {
    w.length()
}

pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    u.bruhat_leq(v)
}

/// `w_0 = [n, n-1, ..., 1]`.
pub fn longest_element(n: usize) -> Permutation {
    Permutation { images: (1..=n).rev().collect() }
}

/// `w_L = [n-1, ..., 1, n]`, the longest element of `S_{n-1}`.
pub fn longest_parabolic(n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..n).rev().collect();
    images.push(n);
    Permutation { images }
}

/// The cycle `(i i-1 ... j)` when `i > j`, `(i i+1 ... j)` when `i < j`, identity when `i = j`.
pub fn w_cycle(i: usize, j: usize, n: usize) -> Result<Permutation> {
    check_index(i, 1, n)?;
    check_index(j, 1, n)?;
    let mut images: Vec<usize> = (1..=n).collect();
    if i < j {
        for k in i..j {
            images[k - 1] = k + 1;
        }
        images[j - 1] = i;
    } else if i > j {
        for k in j + 1..=i {
            images[k - 1] = k - 1;
        }
        images[j - 1] = i;
    }
    Ok(Permutation { images })
}

/// `v_{i,j} = w_{i-1,j}` if `i <= j`, `w_{i,j-1}` if `i > j`, for `2 <= i, j <= n`.
pub fn v_cycle(i: usize, j: usize, n: usize) -> Result<Permutation> {
    check_index(i, 2, n)?;
    check_index(j, 2, n)?;
    if i <= j {
        w_cycle(i - 1, j, n)
    } else {
        w_cycle(i, j - 1, n)
    }
}

/// Minimal length representative `x_i` of `S_{n-1} \ S_n`: fixes `1..i-1`,
/// sends `i -> n` and `k -> k-1` for `k > i`.
pub fn x_rep(i: usize, n: usize) -> Result<Permutation> {
    check_index(i, 1, n)?;
    let images = (1..=n)
        .map(|k| match k.cmp(&i) {
            std::cmp::Ordering::Less => k,
            std::cmp::Ordering::Equal => n,
            std::cmp::Ordering::Greater => k - 1,
        })
        .collect();
    Ok(Permutation { images })
}

/// Maximal length representative `y_i = w_L x_i`.
pub fn y_rep(i: usize, n: usize) -> Result<Permutation> {
    longest_parabolic(n).compose(&x_rep(i, n)?)
}

/// Index `i` with `x_rep(i, n) == x`, if any.
pub fn x_index(x: &Permutation) -> Option<usize> {
    let n = x.degree();
    // x_i is determined by x_i(i) = n
    let i = x.images.iter().position(|&v| v == n)? + 1;
    (x_rep(i, n).ok()? == *x).then_some(i)
}

/// Index `i` with `y_rep(i, n) == y`, if any.
pub fn y_index(y: &Permutation) -> Option<usize> {
    let n = y.degree();
    x_index(&longest_parabolic(n).compose(y).ok()?)
}

/// `[i] = {i, i+1} ∩ {2, ..., n}`.
pub fn bracket_set(i: usize, n: usize) -> Result<BTreeSet<usize>> {
    check_index(i, 1, n)?;
    Ok([i, i + 1].into_iter().filter(|&k| (2..=n).contains(&k)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(compose(&p("2,1,3"), &p("1,3,2")).unwrap(), p("2,3,1"));
        let w = p("3,1,4,2");
        assert_eq!(w.compose(&Permutation::identity(4)).unwrap(), w);
        let x1 = x_rep(1, 3).unwrap();
        let x3 = x_rep(3, 3).unwrap();
        assert_eq!(x1.inverse().compose(&x3).unwrap(), p("2,3,1"));
        assert_eq!(x1.inverse().compose(&x3).unwrap(), w_cycle(1, 3, 3).unwrap());
        assert!(matches!(compose(&p("1,2"), &p("1,2,3")), Err(Error::DegreeMismatch(2, 3))));
    }

    #[test]
    fn lengths() {
        assert_eq!(p("1,2,3").length(), 0);
        assert_eq!(p("3,2,1").length(), 3);
        for n in 1..=8 {
            for i in 1..=n {
                assert_eq!(x_rep(i, n).unwrap().length(), n - i);
            }
            assert_eq!(longest_element(n).length(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn bruhat_examples() {
        let w = p("3,1,2");
        assert!(Permutation::identity(3).bruhat_leq(&w).unwrap());
        assert!(!p("2,1,3").bruhat_leq(&p("1,3,2")).unwrap());
        assert!(!p("1,3,2").bruhat_leq(&p("2,1,3")).unwrap());
        for n in 1..=7 {
            assert!(x_rep(n, n).unwrap().bruhat_leq(&x_rep(1, n).unwrap()).unwrap());
        }
    }

    #[test]
    fn longest_elements() {
        assert_eq!(longest_element(3), p("3,2,1"));
        assert_eq!(longest_parabolic(4), p("3,2,1,4"));
        assert_eq!(longest_parabolic(2), p("1,2"));
        assert_eq!(longest_parabolic(1), p("1"));
    }

    #[test]
    fn cycles() {
        assert_eq!(w_cycle(1, 3, 3).unwrap(), p("2,3,1"));
        assert_eq!(w_cycle(3, 1, 3).unwrap(), p("3,1,2"));
        assert!(w_cycle(2, 2, 5).unwrap().is_identity());
        assert!(w_cycle(0, 2, 5).is_err());
        assert!(w_cycle(1, 6, 5).is_err());
        for n in 2..=6 {
            for i in 1..n {
                assert_eq!(w_cycle(i, i + 1, n).unwrap(), w_cycle(i + 1, i, n).unwrap());
            }
            for i in 1..=n {
                for j in 1..=n {
                    assert_eq!(w_cycle(i, j, n).unwrap().inverse(), w_cycle(j, i, n).unwrap());
                }
            }
        }
    }

    #[test]
    fn v_cycles() {
        for n in 2..=6 {
            assert_eq!(v_cycle(2, 2, n).unwrap(), w_cycle(1, 2, n).unwrap());
            let mut vs = BTreeSet::new();
            for k in 2..=n {
                for l in 2..=n {
                    assert_eq!(v_cycle(k, l, n).unwrap().inverse(), v_cycle(l, k, n).unwrap());
                    vs.insert(v_cycle(k, l, n).unwrap());
                }
            }
            let ws: BTreeSet<_> = (1..=n)
                .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| w_cycle(i, j, n).unwrap()))
                .collect();
            assert_eq!(vs, ws);
            assert_eq!(vs.len(), (n - 1) * (n - 1));
        }
        assert_eq!(v_cycle(3, 2, 4).unwrap(), w_cycle(3, 1, 4).unwrap());
        assert!(v_cycle(1, 2, 4).is_err());
    }

    #[test]
    fn coset_representatives() {
        assert_eq!(x_rep(2, 4).unwrap(), p("1,4,2,3"));
        for n in 1..=7 {
            assert!(x_rep(n, n).unwrap().is_identity());
            let w0 = longest_element(n);
            let wl = longest_parabolic(n);
            assert_eq!(x_rep(1, n).unwrap(), wl.compose(&w0).unwrap());
            for i in 1..=n {
                assert_eq!(x_index(&x_rep(i, n).unwrap()), Some(i));
                assert_eq!(y_index(&y_rep(i, n).unwrap()), Some(i));
            }
        }
        assert_eq!(x_index(&p("2,1,3")), None);
    }

    #[test]
    fn brackets() {
        assert_eq!(bracket_set(1, 5).unwrap(), BTreeSet::from([2]));
        assert_eq!(bracket_set(3, 5).unwrap(), BTreeSet::from([3, 4]));
        assert_eq!(bracket_set(5, 5).unwrap(), BTreeSet::from([5]));
        assert!(bracket_set(6, 5).is_err());
    }

    #[test]
    fn action_convention() {
        // (w.b)_k = b_{w^{-1}(k)}
        let w = p("2,1,3");
        assert_eq!(w.act(&[2, 1, 0]).unwrap(), vec![1, 2, 0]);
        let x = x_rep(2, 4).unwrap();
        assert_eq!(x.act(&['a', 'b', 'c', 'd']).unwrap(), vec!['a', 'c', 'd', 'b']);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match "1, x,3".parse::<Permutation>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!("1,1".parse::<Permutation>().is_err());
        assert_eq!(p("2,3,1").to_string(), "2,3,1");
    }
}
