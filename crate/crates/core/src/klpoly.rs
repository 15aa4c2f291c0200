//! R-polynomials and Kazhdan-Lusztig polynomials of `S_n` by the classical
//! recursion, plus the signed cell matrix on the chain `y_1 > ... > y_n`.
//!
//! For a left descent `s` of `w` (`sw < w`, `v = sw`):
//!
//! ```text
//! P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v} - sum_{z < v, sz < z} mu(z,v) q^{(l(w)-l(z))/2} P_{x,z}
//! ```
//!
//! with `c = 1` if `sx < x` and `c = 0` otherwise. The pivot is always the smallest
//! such `s`. Values are memoized per `w` as the whole vector `(P_{x,w})_x`, indexed by
//! the lexicographic rank of `x`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::matrix::IntMatrix;
use crate::qpoly::QPoly;
use crate::symgroup::{y_rep, Permutation};
use crate::{Error, Result};

pub const DEFAULT_MAX_N: usize = 6;
/// Stored polynomials across all memo tables. `S_6` in full needs `720^2 ≈ 5.2e5`.
pub const DEFAULT_MAX_ENTRIES: usize = 4_000_000;

/// Memoizing KL/R-polynomial oracle. Shareable across threads: lookups take a read
/// lock, and two threads racing on the same entry both compute it and the first
/// insert wins (the values are identical).
pub struct KlOracle {
    max_n: usize,
    max_entries: usize,
    entries: AtomicUsize,
    tables: RwLock<HashMap<usize, Arc<DegreeTable>>>,
}

struct DegreeTable {
    perms: Vec<Permutation>,
    lengths: Vec<u32>,
    /// `left_mul[k][x]` = rank of `s_{k+1} x`.
    left_mul: Vec<Vec<u32>>,
    rows: RwLock<HashMap<u32, Arc<Vec<QPoly>>>>,
    r_memo: RwLock<HashMap<(u32, u32), QPoly>>,
}

/// Lexicographic rank of a permutation among all of `S_n`.
pub fn lex_rank(w: &Permutation) -> usize {
    let im = w.images();
    let n = im.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = im[i + 1..].iter().filter(|&&v| v < im[i]).count();
        rank = rank * (n - i) + smaller;
    }
    rank
}

impl DegreeTable {
    fn build(n: usize) -> Self {
        let perms: Vec<Permutation> = Permutation::all(n).collect();
        let lengths = perms.iter().map(|w| w.length() as u32).collect();
        let left_mul = (1..n)
            .map(|k| {
                perms
                    .iter()
                    .map(|x| {
                        let images: Vec<usize> = x
                            .images()
                            .iter()
                            .map(|&v| {
                                if v == k {
                                    k + 1
                                } else if v == k + 1 {
                                    k
                                } else {
                                    v
                                }
                            })
                            .collect();
                        lex_rank(&Permutation::new(images).expect("swap of values")) as u32
                    })
                    .collect()
            })
            .collect();
        DegreeTable { perms, lengths, left_mul, rows: RwLock::default(), r_memo: RwLock::default() }
    }

    fn len(&self, x: u32) -> u32 {
        self.lengths[x as usize]
    }

    fn s(&self, k: usize, x: u32) -> u32 {
        self.left_mul[k][x as usize]
    }

    fn left_descent(&self, w: u32) -> Option<usize> {
        (0..self.left_mul.len()).find(|&k| self.len(self.s(k, w)) < self.len(w))
    }
}

impl Default for KlOracle {
    fn default() -> Self {
        KlOracle::new(DEFAULT_MAX_N, DEFAULT_MAX_ENTRIES)
    }
}

impl KlOracle {
    pub fn new(max_n: usize, max_entries: usize) -> Self {
        KlOracle { max_n, max_entries, entries: AtomicUsize::new(0), tables: RwLock::default() }
    }

    /// Process-wide oracle with the default bounds.
    pub fn global() -> &'static KlOracle {
        static GLOBAL: OnceLock<KlOracle> = OnceLock::new();
        GLOBAL.get_or_init(KlOracle::default)
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Number of memoized polynomials currently held.
    pub fn entries(&self) -> usize {
        self.entries.load(Ordering::Relaxed)
    }

    pub fn supports(&self, n: usize) -> bool {
        n <= self.max_n
    }

    fn table(&self, n: usize) -> Result<Arc<DegreeTable>> {
        if n > self.max_n {
            return Err(Error::ResourceLimit(format!("KL oracle bound is n <= {}, requested n = {n}", self.max_n)));
        }
        if let Some(t) = self.tables.read().unwrap().get(&n) {
            return Ok(t.clone());
        }
        let built = Arc::new(DegreeTable::build(n));
        Ok(self.tables.write().unwrap().entry(n).or_insert(built).clone())
    }

    fn charge(&self, count: usize) -> Result<()> {
        let before = self.entries.fetch_add(count, Ordering::Relaxed);
        if before + count > self.max_entries {
            self.entries.fetch_sub(count, Ordering::Relaxed);
            return Err(Error::ResourceLimit(format!("KL memo table would exceed {} entries", self.max_entries)));
        }
        Ok(())
    }

    fn pair(&self, u: &Permutation, v: &Permutation) -> Result<(Arc<DegreeTable>, u32, u32)> {
        if u.degree() != v.degree() {
            return Err(Error::DegreeMismatch(u.degree(), v.degree()));
        }
        let t = self.table(u.degree())?;
        Ok((t, lex_rank(u) as u32, lex_rank(v) as u32))
    }

    /// `(P_{x,w})_x` for all `x`, indexed by [`lex_rank`] of `x`.
    pub fn kl_column(&self, w: &Permutation) -> Result<Arc<Vec<QPoly>>> {
        let t = self.table(w.degree())?;
        self.row(&t, lex_rank(w) as u32)
    }

    fn row(&self, t: &DegreeTable, w: u32) -> Result<Arc<Vec<QPoly>>> {
        if let Some(r) = t.rows.read().unwrap().get(&w) {
            return Ok(r.clone());
        }
        let size = t.perms.len();
        if self.entries() + size > self.max_entries {
            return Err(Error::ResourceLimit(format!("KL memo table would exceed {} entries", self.max_entries)));
        }
        let row = match t.left_descent(w) {
            None => {
                let mut r = vec![QPoly::zero(); size];
                r[w as usize] = QPoly::one();
                r
            }
            Some(k) => {
                let v = t.s(k, w);
                let row_v = self.row(t, v)?;
                let lw = t.len(w);
                let lv = t.len(v);
                let mut corrections = Vec::new();
                for z in 0..size as u32 {
                    let lz = t.len(z);
                    if lz >= lv || (lv - lz).is_multiple_of(2) || t.len(t.s(k, z)) > lz {
                        continue;
                    }
                    let mu = row_v[z as usize].coeff(((lv - lz - 1) / 2) as usize);
                    if !mu.is_zero() {
                        corrections.push((-mu, ((lw - lz) / 2) as usize, self.row(t, z)?));
                    }
                }
                let one = BigInt::one();
                (0..size as u32)
                    .map(|x| {
                        let sx = t.s(k, x);
                        let c = usize::from(t.len(sx) < t.len(x));
                        let mut p = QPoly::zero();
                        p.add_scaled_shifted(&one, 1 - c, &row_v[sx as usize]);
                        p.add_scaled_shifted(&one, c, &row_v[x as usize]);
                        for (neg_mu, shift, row_z) in &corrections {
                            p.add_scaled_shifted(neg_mu, *shift, &row_z[x as usize]);
                        }
                        p
                    })
                    .collect()
            }
        };
        let mut rows = t.rows.write().unwrap();
        if let Some(existing) = rows.get(&w) {
            return Ok(existing.clone());
        }
        self.charge(size)?;
        let row = Arc::new(row);
        rows.insert(w, row.clone());
        Ok(row)
    }

    /// Kazhdan-Lusztig polynomial `P_{u,v}(q)`; zero unless `u <= v`.
    pub fn kl_polynomial(&self, u: &Permutation, v: &Permutation) -> Result<QPoly> {
        let (t, u, v) = self.pair(u, v)?;
        Ok(self.row(&t, v)?[u as usize].clone())
    }

    /// `mu(u, v)`: the coefficient of `q^{(l(v)-l(u)-1)/2}` in `P_{u,v}`, zero when that is not an integer power.
    pub fn mu(&self, u: &Permutation, v: &Permutation) -> Result<BigInt> {
        let (lu, lv) = (u.length(), v.length());
        if lu >= lv || (lv - lu) % 2 == 0 {
            return Ok(BigInt::zero());
        }
        Ok(self.kl_polynomial(u, v)?.coeff((lv - lu - 1) / 2))
    }

    /// R-polynomial `R_{u,v}(q)`; zero unless `u <= v`.
    pub fn r_polynomial(&self, u: &Permutation, v: &Permutation) -> Result<QPoly> {
        let (t, u, v) = self.pair(u, v)?;
        self.r(&t, u, v)
    }

    fn r(&self, t: &DegreeTable, u: u32, v: u32) -> Result<QPoly> {
        if u == v {
            return Ok(QPoly::one());
        }
        if let Some(p) = t.r_memo.read().unwrap().get(&(u, v)) {
            return Ok(p.clone());
        }
        let value = if !t.perms[u as usize].bruhat_leq(&t.perms[v as usize])? {
            QPoly::zero()
        } else {
            let k = t.left_descent(v).expect("v > u is not the identity");
            let sv = t.s(k, v);
            let su = t.s(k, u);
            if t.len(su) < t.len(u) {
                self.r(t, su, sv)?
            } else {
                // (q - 1) R_{u,sv} + q R_{su,sv}
                let a = self.r(t, u, sv)?;
                let b = self.r(t, su, sv)?;
                let mut p = a.shift(1);
                p.add_scaled_shifted(&-BigInt::one(), 0, &a);
                p.add_scaled_shifted(&BigInt::one(), 1, &b);
                p
            }
        };
        self.charge(1)?;
        t.r_memo.write().unwrap().insert((u, v), value.clone());
        Ok(value)
    }

    /// `(L_y : M_x) = (-1)^{l(x)+l(y)} P_{x,y}(1)`.
    pub fn verma_multiplicity(&self, y: &Permutation, x: &Permutation) -> Result<BigInt> {
        let value = self.kl_polynomial(x, y)?.eval_at_one();
        Ok(if (x.length() + y.length()).is_multiple_of(2) { value } else { -value })
    }

    /// `((-1)^{l(y_j)+l(y_i)} P_{y_j,y_i}(1))_{i,j = 1..n}` (0-based in the result).
    pub fn cell_kl_matrix(&self, n: usize) -> Result<IntMatrix> {
        if n == 0 {
            return Err(Error::Domain("cell matrix needs n >= 1".into()));
        }
        let ys = (1..=n).map(|i| y_rep(i, n)).collect::<Result<Vec<_>>>()?;
        let mut m = IntMatrix::zeros(n);
        for (i, yi) in ys.iter().enumerate() {
            for (j, yj) in ys.iter().enumerate() {
                m.set(i, j, self.verma_multiplicity(yi, yj)?);
            }
        }
        Ok(m)
    }
}

pub fn r_polynomial(u: &Permutation, v: &Permutation) -> Result<QPoly> {
    KlOracle::global().r_polynomial(u, v)
}

pub fn kl_polynomial(u: &Permutation, v: &Permutation) -> Result<QPoly> {
    KlOracle::global().kl_polynomial(u, v)
}

pub fn verma_multiplicity(y: &Permutation, x: &Permutation) -> Result<BigInt> {
    KlOracle::global().verma_multiplicity(y, x)
}

pub fn cell_kl_matrix(n: usize) -> Result<IntMatrix> {
    KlOracle::global().cell_kl_matrix(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::longest_element;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn ranks_follow_enumeration_order() {
        for n in 1..=5 {
            for (i, w) in Permutation::all(n).enumerate() {
                assert_eq!(lex_rank(&w), i);
            }
        }
    }

    #[test]
    fn r_polynomial_examples() {
        let o = KlOracle::default();
        let w = p("2,3,1");
        assert!(o.r_polynomial(&w, &w).unwrap().is_one());
        assert!(o.r_polynomial(&p("2,1,3"), &p("1,3,2")).unwrap().is_zero());
        let s = Permutation::simple(1, 3).unwrap();
        assert_eq!(o.r_polynomial(&Permutation::identity(3), &s).unwrap(), QPoly::from_i64s(&[-1, 1]));
    }

    #[test]
    fn kl_examples() {
        let o = KlOracle::default();
        let w = p("3,1,4,2");
        assert!(o.kl_polynomial(&w, &w).unwrap().is_one());
        assert_eq!(o.kl_polynomial(&Permutation::identity(4), &p("3,4,1,2")).unwrap(), QPoly::from_i64s(&[1, 1]));
        assert_eq!(o.kl_polynomial(&Permutation::identity(4), &p("4,2,3,1")).unwrap(), QPoly::from_i64s(&[1, 1]));
        for u in Permutation::all(3) {
            for v in Permutation::all(3) {
                let kl = o.kl_polynomial(&u, &v).unwrap();
                if u.bruhat_leq(&v).unwrap() {
                    assert!(kl.is_one(), "P_{{{u},{v}}} = {kl}");
                } else {
                    assert!(kl.is_zero());
                }
            }
        }
    }

    #[test]
    fn verma_examples() {
        let o = KlOracle::default();
        let s = p("2,1");
        assert_eq!(o.verma_multiplicity(&s, &Permutation::identity(2)).unwrap(), BigInt::from(-1));
        assert_eq!(o.verma_multiplicity(&s, &s).unwrap(), BigInt::one());
        for n in 1..=5 {
            let w0 = longest_element(n);
            for x in Permutation::all(n) {
                let sign = if (x.length() + w0.length()).is_multiple_of(2) { 1 } else { -1 };
                assert_eq!(o.verma_multiplicity(&w0, &x).unwrap(), BigInt::from(sign));
            }
        }
    }

    #[test]
    fn cell_matrix_examples() {
        let o = KlOracle::default();
        assert_eq!(o.cell_kl_matrix(2).unwrap(), IntMatrix::from_i64_rows(&[&[1, -1], &[0, 1]]).unwrap());
        assert_eq!(
            o.cell_kl_matrix(3).unwrap(),
            IntMatrix::from_i64_rows(&[&[1, -1, 1], &[0, 1, -1], &[0, 0, 1]]).unwrap()
        );
    }

    #[test]
    fn bounds_are_enforced() {
        let o = KlOracle::new(4, 1_000_000);
        let w = Permutation::identity(5);
        assert!(matches!(o.kl_polynomial(&w, &w), Err(Error::ResourceLimit(_))));
        assert!(matches!(o.kl_polynomial(&p("1,2"), &p("1,2,3")), Err(Error::DegreeMismatch(2, 3))));
        let tiny = KlOracle::new(6, 100);
        assert!(matches!(tiny.kl_polynomial(&w, &longest_element(5)), Err(Error::ResourceLimit(_))));
    }
}
