//! Robinson-Schensted correspondence, Kazhdan-Lusztig left/right cells in type A,
//! and the double cell attached to the two-column shape `[2, 1^{n-2}]`.

use std::collections::BTreeSet;
use std::fmt;

use serde_json::Value;

use crate::symgroup::{longest_element, w_cycle, Permutation};
use crate::{Error, Result};

/// A partition as a weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The column `[1^k]`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Row `i` (0-based) length, zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.rows() <= self.rows() && (0..other.rows()).all(|i| other.part(i) <= self.part(i))
    }

    pub fn to_json(&self) -> Value {
        crate::json::usizes(&self.parts)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.parts)
    }
}

/// A standard Young tableau, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |why: &str| Error::InvalidTableau(format!("{why}: {rows:?}"));
        if rows.iter().any(|r| r.is_empty()) {
            return Err(bad("empty row"));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(bad("row lengths increase"));
        }
        if rows.iter().any(|r| r.windows(2).any(|p| p[0] >= p[1])) {
            return Err(bad("row not increasing"));
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(lower, upper)| lower <= upper) {
                return Err(bad("column not increasing"));
            }
        }
        let mut entries: Vec<usize> = rows.iter().flatten().copied().collect();
        entries.sort_unstable();
        if entries.iter().enumerate().any(|(i, &e)| e != i + 1) {
            return Err(bad("entries are not 1..n"));
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition { parts: self.rows.iter().map(Vec::len).collect() }
    }

    /// Column `c` (0-based), top to bottom.
    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows.iter().filter_map(|r| r.get(c).copied()).collect()
    }

    fn position(&self, value: usize) -> Option<(usize, usize)> {
        self.rows.iter().enumerate().find_map(|(r, row)| row.iter().position(|&v| v == value).map(|c| (r, c)))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.rows.iter().map(|r| crate::json::usizes(r)).collect())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::InvalidTableau(v.to_string());
        let rows = v
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|e| e.as_u64().map(|e| e as usize).ok_or_else(bad))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        StandardTableau::new(rows)
    }
}

impl fmt::Debug for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Row-insertion Robinson-Schensted: returns `(P(w), Q(w))` for the word `w(1), ..., w(n)`.
pub fn rs(w: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (step, &letter) in w.images().iter().enumerate() {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == p.len() {
                p.push(vec![x]);
                q.push(vec![step + 1]);
                break;
            }
            match p[r].iter().position(|&y| y > x) {
                Some(c) => {
                    x = std::mem::replace(&mut p[r][c], x);
                    r += 1;
                }
                None => {
                    p[r].push(x);
                    q[r].push(step + 1);
                    break;
                }
            }
        }
    }
    (StandardTableau { rows: p }, StandardTableau { rows: q })
}

/// Inverse of [`rs`] by reverse bumping.
pub fn rs_inverse(p: &StandardTableau, q: &StandardTableau) -> Result<Permutation> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch);
    }
    let n = p.size();
    let mut rows = p.rows.clone();
    let mut images = vec![0; n];
    for step in (1..=n).rev() {
        let (mut r, c) = q.position(step).expect("standard tableau holds every entry");
        debug_assert_eq!(c + 1, rows[r].len());
        let mut x = rows[r].pop().expect("corner exists");
        if rows[r].is_empty() {
            rows.pop();
        }
        while r > 0 {
            r -= 1;
            let row = &mut rows[r];
            let c = row.iter().rposition(|&y| y < x).expect("column strictness");
            x = std::mem::replace(&mut row[c], x);
        }
        images[step - 1] = x;
    }
    Permutation::new(images)
}

/// `x ~_L y` iff `Q(x) = Q(y)`.
pub fn left_cell_equiv(x: &Permutation, y: &Permutation) -> Result<bool> {
    same_degree(x, y)?;
    Ok(rs(x).1 == rs(y).1)
}

/// `x ~_R y` iff `P(x) = P(y)`.
pub fn right_cell_equiv(x: &Permutation, y: &Permutation) -> Result<bool> {
    same_degree(x, y)?;
    Ok(rs(x).0 == rs(y).0)
}

fn same_degree(x: &Permutation, y: &Permutation) -> Result<()> {
    if x.degree() != y.degree() {
        return Err(Error::DegreeMismatch(x.degree(), y.degree()));
    }
    Ok(())
}

/// The shape `[2, 1^{n-2}]`.
pub fn two_column_shape(n: usize) -> Partition {
    let mut parts = vec![1; n.saturating_sub(1)];
    if let Some(first) = parts.first_mut() {
        *first = 2;
    }
    Partition { parts }
}

/// The double cell `{w_0 w_{i,j} : i != j}` as a set. It has `(n-1)^2` elements,
/// since `w_{i,i+1} = w_{i+1,i}`.
pub fn two_column_cell(n: usize) -> Result<BTreeSet<Permutation>> {
    if n < 2 {
        return Err(Error::Domain(format!("two-column cell needs n >= 2, got {n}")));
    }
    let w0 = longest_element(n);
    let mut cell = BTreeSet::new();
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            cell.insert(w0.compose(&w_cycle(i, j, n)?)?);
        }
    }
    Ok(cell)
}

/// The insertion tableau of a minimal element: columns `1..n-1` and `n`.
pub fn canonical_two_column_tableau(n: usize) -> StandardTableau {
    let mut rows: Vec<Vec<usize>> = (1..n).map(|k| vec![k]).collect();
    rows[0].push(n);
    StandardTableau { rows }
}

/// The unique minimal element of the left cell of `w` inside the two-column cell.
pub fn minimal_element(w: &Permutation) -> Result<Permutation> {
    let n = w.degree();
    let (p, q) = rs(w);
    if n < 2 || p.shape() != two_column_shape(n) {
        return Err(Error::NotInTwoColumnCell(w.to_string()));
    }
    rs_inverse(&canonical_two_column_tableau(n), &q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::{v_cycle, y_rep};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn tab(rows: &[&[usize]]) -> StandardTableau {
        StandardTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn rs_examples() {
        let (pt, qt) = rs(&Permutation::identity(4));
        assert_eq!(pt, tab(&[&[1, 2, 3, 4]]));
        assert_eq!(qt, tab(&[&[1, 2, 3, 4]]));
        let (pt, qt) = rs(&p("2,3,1"));
        assert_eq!(pt, tab(&[&[1, 3], &[2]]));
        assert_eq!(qt, tab(&[&[1, 2], &[3]]));
    }

    #[test]
    fn lemma_tableaux_for_n3() {
        let w = longest_element(3).compose(&w_cycle(1, 2, 3).unwrap()).unwrap();
        let (pt, qt) = rs(&w);
        assert_eq!(pt.column(1), vec![3]);
        assert_eq!(qt.column(1), vec![2]);
    }

    #[test]
    fn inverse_examples() {
        let col = tab(&[&[1], &[2], &[3], &[4]]);
        assert_eq!(rs_inverse(&col, &col).unwrap(), longest_element(4));
        let a = tab(&[&[1, 3], &[2]]);
        let b = tab(&[&[1, 2, 3]]);
        assert_eq!(rs_inverse(&a, &b), Err(Error::ShapeMismatch));
        let w = rs_inverse(&a, &a).unwrap();
        assert_eq!(w, w.inverse());
    }

    #[test]
    fn round_trip_exhaustive() {
        for n in 1..=6 {
            for w in Permutation::all(n) {
                let (pt, qt) = rs(&w);
                assert_eq!(pt.shape(), qt.shape());
                assert_eq!(qt, rs(&w.inverse()).0);
                assert_eq!(rs_inverse(&pt, &qt).unwrap(), w);
            }
        }
    }

    #[test]
    fn cell_relations() {
        let w = p("3,1,2,4");
        assert!(left_cell_equiv(&w, &w).unwrap());
        let w0 = longest_element(3);
        let a = w0.compose(&w_cycle(1, 3, 3).unwrap()).unwrap();
        let b = w0.compose(&w_cycle(2, 3, 3).unwrap()).unwrap();
        assert!(left_cell_equiv(&a, &b).unwrap());
        for x in Permutation::all(4) {
            for y in Permutation::all(4) {
                assert_eq!(right_cell_equiv(&x, &y).unwrap(), left_cell_equiv(&x.inverse(), &y.inverse()).unwrap());
            }
        }
        assert!(left_cell_equiv(&p("1,2"), &p("1,2,3")).is_err());
    }

    #[test]
    fn two_column_cell_sizes() {
        let c2 = two_column_cell(2).unwrap();
        assert_eq!(c2.into_iter().collect::<Vec<_>>(), vec![Permutation::identity(2)]);
        for n in 3..=7 {
            let cell = two_column_cell(n).unwrap();
            assert_eq!(cell.len(), (n - 1) * (n - 1));
            assert!(cell.iter().all(|w| rs(w).0.shape() == two_column_shape(n)));
            let right: BTreeSet<_> = (1..=n)
                .flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| (i, j)))
                .map(|(i, j)| w_cycle(i, j, n).unwrap().compose(&longest_element(n)).unwrap())
                .collect();
            assert_eq!(cell, right);
        }
        assert!(two_column_cell(1).is_err());
    }

    #[test]
    fn minimal_element_examples() {
        let w0 = longest_element(3);
        let a = w0.compose(&w_cycle(1, 2, 3).unwrap()).unwrap();
        assert_eq!(minimal_element(&a).unwrap(), y_rep(2, 3).unwrap());
        let b = w0.compose(&w_cycle(3, 1, 3).unwrap()).unwrap();
        assert_eq!(minimal_element(&b).unwrap(), y_rep(2, 3).unwrap());
        for n in 2..=7 {
            let w0 = longest_element(n);
            for i in 2..=n {
                for j in 2..=n {
                    let w = w0.compose(&v_cycle(i, j, n).unwrap()).unwrap();
                    assert_eq!(minimal_element(&w).unwrap(), y_rep(j, n).unwrap());
                }
            }
        }
        assert!(matches!(minimal_element(&p("1,2,3")), Err(Error::NotInTwoColumnCell(_))));
    }

    #[test]
    fn tableau_validation() {
        assert!(StandardTableau::new(vec![vec![1, 2], vec![3]]).is_ok());
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2, 4]]).is_ok());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!(StandardTableau::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Partition::new(vec![1, 2]).is_err());
        assert_eq!(tab(&[&[1, 3], &[2]]).to_json().to_string(), "[[1,3],[2]]");
    }
}
