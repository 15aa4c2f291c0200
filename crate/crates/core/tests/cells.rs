//! Robinson-Schensted and the two-column cell, checked exhaustively.

use std::collections::BTreeSet;

use gkmin::symgroup::{longest_element, v_cycle, w_cycle, y_index, y_rep};
use gkmin::tableaux::{minimal_element, rs, rs_inverse, two_column_cell, two_column_shape};
use gkmin::Permutation;

#[test]
fn rs_of_inverse_swaps_tableaux() {
    for n in 1..=6 {
        for w in Permutation::all(n) {
            let (p, q) = rs(&w);
            let (pi, qi) = rs(&w.inverse());
            assert_eq!((pi, qi), (q.clone(), p.clone()));
            assert_eq!(rs_inverse(&p, &q).unwrap(), w);
        }
    }
}

#[test]
fn cell_is_the_two_column_shape_class() {
    for n in 2..=7 {
        let by_shape: BTreeSet<Permutation> =
            Permutation::all(n).filter(|w| rs(w).0.shape() == two_column_shape(n)).collect();
        assert_eq!(two_column_cell(n).unwrap(), by_shape, "n={n}");
    }
}

#[test]
fn minimal_elements_follow_the_table() {
    for n in 2..=7 {
        let w0 = longest_element(n);
        let mut minima = BTreeSet::new();
        for i in 1..=n {
            for j in (1..=n).filter(|&j| j != i) {
                let m = minimal_element(&w0.compose(&w_cycle(i, j, n).unwrap()).unwrap()).unwrap();
                let expected = if i < j { j } else { j + 1 };
                assert_eq!(y_index(&m), Some(expected), "n={n} i={i} j={j}");
                minima.insert(m);
            }
        }
        for i in 2..=n {
            for j in 2..=n {
                let m = minimal_element(&w0.compose(&v_cycle(i, j, n).unwrap()).unwrap()).unwrap();
                assert_eq!(y_index(&m), Some(j));
            }
        }
        let ys: BTreeSet<Permutation> = (2..=n).map(|i| y_rep(i, n).unwrap()).collect();
        assert_eq!(minima, ys);
    }
}
