//! `gkmin verify`: independent checks grouped in suites, run in parallel and
//! reported in a fixed order.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::Instant;

use clap::ValueEnum;
use gkmin::coherent::{
    basis_check, composition_series, degree_functional, expand_psi, psi_induced, psi_row_relations, psibar_in_psi,
    transition_psi_to_psibar, transition_psibar_to_psi, BasisLabel, CoherentVector,
};
use gkmin::dyckpar::{
    deodhar_inversion_check, is_dyck, is_dyck_cbs, jordan_matrix, outer_border_strip, parabolic_kl_minus,
    parabolic_kl_q, psi_map, SkewPartition,
};
use gkmin::langlands::{gk_dim_class, parameter_from, singular_point, succ, GkClass, LanglandsParameter};
use gkmin::rational::{int, ratio, Rational};
use gkmin::symgroup::{
    bracket_set, longest_element, longest_parabolic, v_cycle, w_cycle, x_index, x_rep, y_index, y_rep,
};
use gkmin::tableaux::{minimal_element, rs, rs_inverse, two_column_cell, two_column_shape};
use gkmin::weights::{
    bernstein_c, dim_f, goldie_eval, goldie_eval_kl, h_l, is_dominant, is_regular, rearrangement_gap, weyl_dim,
    WeightVector,
};
use gkmin::{Error, KlOracle, Permutation, QPoly, Result};
use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

/// Exhaustive enumeration of `S_n` is used up to this degree; beyond it, samples.
const EXHAUSTIVE_MAX_N: usize = 6;
const PERM_SAMPLES: usize = 500;
const WEIGHT_SAMPLES: usize = 20;
/// Degree of the random multisets compared against the brute-force classifier.
const BRUTE_FORCE_DEGREE: usize = 5;
const BRUTE_FORCE_SAMPLES: usize = 300;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Suite {
    Symgroup,
    Tableaux,
    Kl,
    Dyck,
    Weights,
    Langlands,
    Coherent,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Symgroup => "symgroup",
            Suite::Tableaux => "tableaux",
            Suite::Kl => "kl",
            Suite::Dyck => "dyck",
            Suite::Weights => "weights",
            Suite::Langlands => "langlands",
            Suite::Coherent => "coherent",
            Suite::All => "all",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    ResourceLimit,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::ResourceLimit => "resource_limit",
        }
    }
}

pub struct CheckResult {
    pub suite: &'static str,
    pub id: &'static str,
    pub status: Status,
    pub witness: Option<String>,
}

pub struct Report {
    pub suite: Suite,
    pub n: usize,
    pub seed: u64,
    pub oracle_max_n: usize,
    pub checks: Vec<CheckResult>,
    pub wall_time_ms: u128,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| matches!(c.status, Status::Pass | Status::Skipped))
    }

    pub fn has_resource_error(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::ResourceLimit)
    }

    fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = json!({"suite": c.suite, "id": c.id, "status": c.status.name()});
                if let Some(w) = &c.witness {
                    v["witness"] = json!(w);
                }
                v
            })
            .collect();
        json!({
            "suite": self.suite.name(),
            "n": self.n,
            "seed": self.seed,
            "oracle_max_n": self.oracle_max_n,
            "checks": checks,
            "summary": {
                "pass": self.count(Status::Pass),
                "fail": self.count(Status::Fail),
                "skipped": self.count(Status::Skipped),
                "resource_limit": self.count(Status::ResourceLimit),
            },
            "wall_time_ms": self.wall_time_ms as u64,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("suite,id,status,witness\n");
        for c in &self.checks {
            let witness = c.witness.as_deref().unwrap_or("").replace('"', "\"\"");
            s.push_str(&format!("{},{},{},\"{}\"\n", c.suite, c.id, c.status.name(), witness));
        }
        s
    }
}

struct Ctx<'a> {
    n: usize,
    oracle: &'a KlOracle,
    rng_seed: u64,
}

impl Ctx<'_> {
    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.rng_seed)
    }

    fn perms(&self) -> Vec<Permutation> {
        if self.n <= EXHAUSTIVE_MAX_N {
            Permutation::all(self.n).collect()
        } else {
            let mut rng = self.rng();
            (0..PERM_SAMPLES).map(|_| random_perm(&mut rng, self.n)).collect()
        }
    }

    fn weights(&self) -> Vec<WeightVector> {
        let mut rng = self.rng();
        std::iter::once(WeightVector::standard(self.n))
            .chain((1..WEIGHT_SAMPLES).map(|_| random_weight(&mut rng, self.n)))
            .collect()
    }
}

/// `Ok(None)` on success, `Ok(Some(witness))` on failure.
type Outcome = Result<Option<String>>;

struct Check {
    suite: Suite,
    id: &'static str,
    needs_kl: bool,
    run: fn(&Ctx) -> Outcome,
}

macro_rules! ensure {
    ($cond:expr, $($witness:tt)*) => {
        if !$cond {
            return Ok(Some(format!($($witness)*)));
        }
    };
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffled identity")
}

/// Regular dominant with `a_k - b_m` integral, so every `γ_{λ,w}` is a parameter.
fn random_weight(rng: &mut ChaCha8Rng, n: usize) -> WeightVector {
    let oa = ratio(rng.gen_range(-12i64..=12), rng.gen_range(1i64..=3));
    let ob = &oa + int(rng.gen_range(-5i64..=5));
    let ga: Vec<u64> = (1..n).map(|_| rng.gen_range(1u64..=6)).collect();
    let gb: Vec<u64> = (1..n).map(|_| rng.gen_range(1u64..=6)).collect();
    WeightVector::from_gaps(oa, &ga, ob, &gb).expect("positive gaps")
}

fn cycles(n: usize) -> Result<BTreeSet<Permutation>> {
    (1..=n).flat_map(|i| (1..=n).filter(move |&j| j != i).map(move |j| w_cycle(i, j, n))).collect()
}

fn sign(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

// symgroup

fn coset_identities(c: &Ctx) -> Outcome {
    let n = c.n;
    let wl = longest_parabolic(n);
    ensure!(x_rep(1, n)? == wl.compose(&longest_element(n))?, "x_1 != w_L w_0");
    for i in 1..=n {
        let xi = x_rep(i, n)?;
        ensure!(xi.length() == n - i, "l(x_{i}) = {}", xi.length());
        ensure!(y_rep(i, n)?.length() == (n - 1) * (n - 2) / 2 + n - i, "l(y_{i})");
        ensure!(x_index(&xi) == Some(i), "x_index(x_{i})");
        for j in 1..=n {
            let w = xi.inverse().compose(&x_rep(j, n)?)?;
            ensure!(w == w_cycle(i, j, n)?, "x_{i}^-1 x_{j} = {w}");
        }
    }
    Ok(None)
}

fn cycle_lengths(c: &Ctx) -> Outcome {
    let n = c.n;
    for i in 1..=n {
        for j in 1..=n {
            let w = w_cycle(i, j, n)?;
            ensure!(w.length() == i.abs_diff(j), "l(w_{i},{j}) = {}", w.length());
        }
        if i < n {
            ensure!(w_cycle(i, i + 1, n)? == w_cycle(i + 1, i, n)?, "w_{i},{} != w_{},{i}", i + 1, i + 1);
        }
    }
    for i in 2..=n {
        for j in 2..=n {
            let expected = if i <= j { w_cycle(i - 1, j, n)? } else { w_cycle(i, j - 1, n)? };
            ensure!(v_cycle(i, j, n)? == expected, "v_{i},{j}");
        }
    }
    Ok(None)
}

/// Tableau criterion: `u <= v` iff each sorted prefix of `u` is bounded entrywise by that of `v`.
fn bruhat_by_prefixes(u: &Permutation, v: &Permutation) -> bool {
    (1..=u.degree()).all(|k| {
        let mut a = u.images()[..k].to_vec();
        let mut b = v.images()[..k].to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a.iter().zip(&b).all(|(x, y)| x <= y)
    })
}

fn bruhat_criteria(c: &Ctx) -> Outcome {
    let perms = c.perms();
    let pairs: Vec<(usize, usize)> = if c.n <= 5 {
        (0..perms.len()).flat_map(|i| (0..perms.len()).map(move |j| (i, j))).collect()
    } else {
        let mut rng = c.rng();
        (0..20 * PERM_SAMPLES).map(|_| (rng.gen_range(0..perms.len()), rng.gen_range(0..perms.len()))).collect()
    };
    for (i, j) in pairs {
        let (u, v) = (&perms[i], &perms[j]);
        ensure!(u.bruhat_leq(v)? == bruhat_by_prefixes(u, v), "u={u} v={v}");
    }
    Ok(None)
}

fn length_symmetries(c: &Ctx) -> Outcome {
    let w0 = longest_element(c.n);
    for w in c.perms() {
        ensure!(w.length() == w.inverse().length(), "l(w^-1) for w={w}");
        ensure!(w0.compose(&w)?.length() == w0.length() - w.length(), "l(w_0 w) for w={w}");
        ensure!(w.bruhat_leq(&w0)? && Permutation::identity(c.n).bruhat_leq(&w)?, "e <= w <= w_0 for w={w}");
    }
    Ok(None)
}

// tableaux

fn rs_bijection(c: &Ctx) -> Outcome {
    for w in c.perms() {
        let (p, q) = rs(&w);
        ensure!(p.shape() == q.shape(), "shapes differ for w={w}");
        ensure!(rs_inverse(&p, &q)? == w, "round trip for w={w}");
        ensure!(rs(&w.inverse()) == (q, p), "inverse symmetry for w={w}");
    }
    Ok(None)
}

fn cell_shape(c: &Ctx) -> Outcome {
    let cell = two_column_cell(c.n)?;
    ensure!(cell.len() == (c.n - 1) * (c.n - 1), "cell has {} elements", cell.len());
    for w in &cell {
        ensure!(rs(w).0.shape() == two_column_shape(c.n), "shape of {w}");
    }
    Ok(None)
}

fn minimal_elements(c: &Ctx) -> Outcome {
    let n = c.n;
    let w0 = longest_element(n);
    let mut minima = BTreeSet::new();
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            let m = minimal_element(&w0.compose(&w_cycle(i, j, n)?)?)?;
            let expected = if i < j { j } else { j + 1 };
            ensure!(y_index(&m) == Some(expected), "i={i} j={j} min={m}");
            minima.insert(m);
        }
    }
    let ys: BTreeSet<Permutation> = (2..=n).map(|i| y_rep(i, n)).collect::<Result<_>>()?;
    ensure!(minima == ys, "minimal elements {minima:?}");
    Ok(None)
}

// kl

fn y_chain_values(c: &Ctx) -> Outcome {
    let n = c.n;
    for i in 1..=n {
        for j in i..=n {
            let p = c.oracle.kl_polynomial(&y_rep(j, n)?, &y_rep(i, n)?)?;
            ensure!(p.eval_at_one().is_one(), "P_(y_{j},y_{i}) = {p}");
        }
    }
    Ok(None)
}

fn bar_shift(p: &QPoly, d: usize) -> QPoly {
    let mut coeffs = vec![BigInt::zero(); d + 1];
    for (k, x) in p.coeffs().iter().enumerate() {
        coeffs[d - k] = x.clone();
    }
    QPoly::new(coeffs)
}

fn kl_r_identity(c: &Ctx) -> Outcome {
    let n = c.n;
    let all: Vec<Permutation> = Permutation::all(n).collect();
    let ys: Vec<Permutation> = (1..=n).map(|i| y_rep(i, n)).collect::<Result<_>>()?;
    for w in &ys {
        for x in ys.iter().filter(|x| x.bruhat_leq(w).unwrap_or(false)) {
            let p = c.oracle.kl_polynomial(x, w)?;
            let lhs = &bar_shift(&p, w.length() - x.length()) - &p;
            let mut rhs = QPoly::zero();
            for y in all.iter().filter(|y| *y != x) {
                if x.bruhat_leq(y)? && y.bruhat_leq(w)? {
                    rhs = &rhs + &(&c.oracle.r_polynomial(x, y)? * &c.oracle.kl_polynomial(y, w)?);
                }
            }
            ensure!(lhs == rhs, "x={x} w={w}");
        }
    }
    Ok(None)
}

fn verma_longest(c: &Ctx) -> Outcome {
    let w0 = longest_element(c.n);
    for x in Permutation::all(c.n) {
        let m = c.oracle.verma_multiplicity(&w0, &x)?;
        ensure!(m == sign(x.length() + w0.length()).into(), "(L_w0 : M_{x}) = {m}");
    }
    Ok(None)
}

fn cell_matrix_inverse(c: &Ctx) -> Outcome {
    let m = c.oracle.cell_kl_matrix(c.n)?;
    ensure!(m.is_upper_triangular(), "cell matrix not upper triangular");
    let prod = m.mul(&jordan_matrix(c.n)?)?;
    ensure!(prod.is_identity(), "product {prod:?}");
    Ok(None)
}

// dyck

fn jordan_block(c: &Ctx) -> Outcome {
    let m = jordan_matrix(c.n)?;
    for i in 0..c.n {
        for j in 0..c.n {
            let expected = i64::from(j == i || j == i + 1);
            ensure!(*m.get(i, j) == expected.into(), "entry ({},{}) = {}", i + 1, j + 1, m.get(i, j));
        }
    }
    Ok(None)
}

fn psi_order(c: &Ctx) -> Outcome {
    let n = c.n;
    for i in 1..=n {
        for j in 1..=n {
            let (u, v) = (x_rep(i, n)?, x_rep(j, n)?);
            let contained = psi_map(&v)?.contains(&psi_map(&u)?);
            ensure!(u.bruhat_leq(&v)? == contained, "x_{i}, x_{j}");
        }
    }
    Ok(None)
}

fn dyck_chain(c: &Ctx) -> Outcome {
    let n = c.n;
    for i in 1..=n {
        for j in i..=n {
            let eta = SkewPartition::new(psi_map(&x_rep(i, n)?)?, psi_map(&x_rep(j, n)?)?)?;
            ensure!(is_dyck(&eta) == (j - i <= 1), "eta(x_{j}, x_{i})");
            let p = parabolic_kl_q(&x_rep(j, n)?, &x_rep(i, n)?)?;
            ensure!(p.is_zero() || p.eval_at_one().is_one(), "P^q(x_{j}, x_{i}) = {p}");
        }
    }
    Ok(None)
}

fn named_verdicts(_: &Ctx) -> Outcome {
    let cases: [(&[usize], &[usize], bool); 5] = [
        (&[3, 1], &[2], true),
        (&[3, 1], &[1], false),
        (&[4, 4, 4, 4], &[1], true),
        (&[4, 4, 4, 3], &[], false),
        (&[4, 4, 4, 3], &[1], true),
    ];
    for (outer, inner, expected) in cases {
        ensure!(is_dyck(&SkewPartition::from_parts(outer, inner)?) == expected, "{outer:?} \\ {inner:?}");
    }
    let strip = outer_border_strip(&SkewPartition::from_parts(&[3, 2], &[])?.boxes());
    ensure!(!is_dyck_cbs(&strip)?, "strip of [3,2]");
    Ok(None)
}

fn deodhar_inversion(c: &Ctx) -> Outcome {
    ensure!(deodhar_inversion_check(c.oracle, c.n)?, "inversion identity fails");
    Ok(None)
}

fn parabolic_minus_triangular(c: &Ctx) -> Outcome {
    let n = c.n;
    for i in 1..=n {
        for j in 1..=n {
            let p = parabolic_kl_minus(c.oracle, &x_rep(j, n)?, &x_rep(i, n)?)?;
            ensure!(j >= i || p.is_zero(), "P^-1(x_{j}, x_{i}) = {p}");
            ensure!(j != i || p.is_one(), "P^-1(x_{i}, x_{i}) = {p}");
        }
    }
    Ok(None)
}

// weights

fn alternating_identity(c: &Ctx) -> Outcome {
    let n = c.n;
    for lambda in c.weights() {
        let neg: Vec<Rational> = lambda.a().iter().map(|x| -x).collect();
        let mut sum = Rational::zero();
        for i in 1..=n {
            let h = h_l(&y_rep(i, n)?.act(&neg)?);
            ensure!(h == weyl_dim(lambda.a(), i)?, "h_L(-y_{i} a) for {lambda}");
            if i % 2 == 0 {
                sum += h;
            } else {
                sum -= h;
            }
        }
        ensure!(sum.is_zero(), "alternating sum {sum} for {lambda}");
    }
    Ok(None)
}

fn goldie_reconstruction(c: &Ctx) -> Outcome {
    let n = c.n;
    for lambda in c.weights() {
        let a = lambda.a();
        ensure!(weyl_dim(a, 1)? == goldie_eval(2, a)?, "i=1 for {lambda}");
        ensure!(weyl_dim(a, n)? == goldie_eval(n, a)?, "i=n for {lambda}");
        for i in 2..n {
            ensure!(weyl_dim(a, i)? == goldie_eval(i, a)? + goldie_eval(i + 1, a)?, "i={i} for {lambda}");
        }
    }
    Ok(None)
}

fn degree_identity(c: &Ctx) -> Outcome {
    let n = c.n;
    for lambda in c.weights() {
        let mut table = BTreeMap::new();
        for k in 2..=n {
            for l in 2..=n {
                let b = bernstein_c(&v_cycle(k, l, n)?, &lambda)?;
                ensure!(b.is_positive(), "c_v({k},{l}) = {b} for {lambda}");
                table.insert((k, l), b);
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                let mut sum = Rational::zero();
                for k in bracket_set(i, n)? {
                    for l in bracket_set(j, n)? {
                        sum += &table[&(k, l)];
                    }
                }
                let d = dim_f(i, j, &lambda)?;
                ensure!(d.is_integer() && d == sum, "i={i} j={j} dim={d} sum={sum} for {lambda}");
            }
        }
    }
    Ok(None)
}

fn goldie_kl_sum(c: &Ctx) -> Outcome {
    for lambda in c.weights().iter().take(3) {
        for i in 2..=c.n {
            ensure!(goldie_eval(i, lambda.a())? == goldie_eval_kl(c.oracle, i, lambda.a())?, "i={i} for {lambda}");
        }
    }
    Ok(None)
}

fn gap_positive(c: &Ctx) -> Outcome {
    let lambda = c.weights().pop().expect("nonempty");
    for w in c.perms() {
        let gap = rearrangement_gap(&lambda, &w)?;
        ensure!(gap.is_positive() == !w.is_identity(), "gap {gap} for w={w} and {lambda}");
    }
    Ok(None)
}

fn offset_invariance(c: &Ctx) -> Outcome {
    let n = c.n;
    for lambda in c.weights().iter().take(5) {
        let moved = lambda.shifted(&ratio(7, 3), &ratio(-5, 2));
        for i in 1..=n {
            for j in 1..=n {
                ensure!(dim_f(i, j, lambda)? == dim_f(i, j, &moved)?, "dim F({i},{j}) for {lambda}");
            }
        }
        for i in 2..=n {
            ensure!(goldie_eval(i, lambda.a())? == goldie_eval(i, moved.a())?, "p_y{i} for {lambda}");
        }
    }
    Ok(None)
}

// langlands

fn classifier_over_sn(c: &Ctx) -> Outcome {
    let cyc = cycles(c.n)?;
    let mut rng = c.rng();
    let lambdas = [WeightVector::standard(c.n), random_weight(&mut rng, c.n)];
    let mut perms = c.perms();
    perms.extend(cyc.iter().cloned());
    for lambda in &lambdas {
        for w in &perms {
            let class = gk_dim_class(&parameter_from(lambda, w)?)?;
            let expected = if w.is_identity() {
                GkClass::Zero
            } else if cyc.contains(w) {
                GkClass::Minimal
            } else {
                GkClass::Larger
            };
            ensure!(class == expected, "w={w} lambda={lambda} class={class}");
        }
    }
    Ok(None)
}

/// Whether some `m` of the entries, in some order, form a chain under `succ` in both coordinates.
fn has_chain(gamma: &LanglandsParameter, m: usize) -> bool {
    gamma
        .entries()
        .iter()
        .permutations(m)
        .any(|seq| seq.windows(2).all(|p| succ(p[0].a(), p[1].a()) && succ(p[0].b(), p[1].b())))
}

fn classifier_brute_force(c: &Ctx) -> Outcome {
    let mut rng = c.rng();
    let m = BRUTE_FORCE_DEGREE.min(c.n);
    for _ in 0..BRUTE_FORCE_SAMPLES {
        let pairs: Vec<(i64, i64)> = (0..m).map(|_| (rng.gen_range(0..5), rng.gen_range(0..5))).collect();
        let gamma = LanglandsParameter::from_i64_pairs(&pairs);
        let brute = if has_chain(&gamma, m) {
            GkClass::Zero
        } else if has_chain(&gamma, m - 1) {
            GkClass::Minimal
        } else {
            GkClass::Larger
        };
        ensure!(gk_dim_class(&gamma)? == brute, "gamma={gamma}");
    }
    Ok(None)
}

fn singular_points(c: &Ctx) -> Outcome {
    let n = c.n;
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            let (lambda, gamma) = singular_point(i, j, n)?;
            ensure!(is_dominant(&lambda) && !is_regular(&lambda), "i={i} j={j} lambda={lambda}");
            ensure!(gk_dim_class(&gamma)? == GkClass::Minimal, "i={i} j={j} gamma={gamma}");
        }
    }
    Ok(None)
}

fn parameter_injective(c: &Ctx) -> Outcome {
    let lambda = c.weights().pop().expect("nonempty");
    let perms: Vec<Permutation> = c.perms().into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    let mut seen = HashSet::new();
    for w in &perms {
        ensure!(seen.insert(parameter_from(&lambda, w)?), "collision at w={w} for {lambda}");
    }
    Ok(None)
}

// coherent

fn transition_inverse(c: &Ctx) -> Outcome {
    let a = transition_psi_to_psibar(c.n)?;
    let b = transition_psibar_to_psi(c.n)?;
    ensure!(a.mul(&b)?.is_identity() && b.mul(&a)?.is_identity(), "matrices are not inverse");
    Ok(None)
}

fn psibar_substitution(c: &Ctx) -> Outcome {
    let n = c.n;
    for i in 2..=n {
        for j in 2..=n {
            let v = expand_psi(n, &psibar_in_psi(i, j, n)?)?;
            ensure!(v == CoherentVector::basis(n, BasisLabel::Vbar(i, j))?, "i={i} j={j}: {v:?}");
        }
    }
    Ok(None)
}

fn row_relations(c: &Ctx) -> Outcome {
    ensure!(psi_row_relations(c.n)?, "row relations fail");
    Ok(None)
}

fn basis_determinant(c: &Ctx) -> Outcome {
    ensure!(basis_check(c.n)?, "det = {}", transition_psi_to_psibar(c.n)?.determinant());
    Ok(None)
}

fn degree_functional_check(c: &Ctx) -> Outcome {
    let n = c.n;
    for lambda in c.weights().iter().take(5) {
        let triv = CoherentVector::basis(n, BasisLabel::Triv)?;
        ensure!(degree_functional(&triv, lambda)?.is_zero(), "trivial family for {lambda}");
        for i in 1..=n {
            for j in 1..=n {
                let d = degree_functional(&psi_induced(i, j, n)?, lambda)?;
                let expected = weyl_dim(lambda.a(), i)? * weyl_dim(lambda.b(), j)?;
                ensure!(d == expected, "i={i} j={j} for {lambda}");
            }
        }
    }
    Ok(None)
}

fn composition_check(c: &Ctx) -> Outcome {
    let n = c.n;
    let lambda = c.weights().pop().expect("nonempty");
    for i in 1..=n {
        for j in 1..=n {
            let series = composition_series(i, j, &lambda)?;
            let mut total = Rational::zero();
            for part in &series {
                ensure!(part.multiplicity == 1, "i={i} j={j} multiplicity");
                let expected = if part.cycle.is_some() { GkClass::Minimal } else { GkClass::Zero };
                ensure!(part.class == expected, "i={i} j={j} {:?} class {}", part.cycle, part.class);
                total += part.bernstein_degree.clone().unwrap_or_default();
            }
            ensure!(series.iter().any(|p| p.cycle.is_none()) == (i == j), "i={i} j={j} finite-dimensional factor");
            ensure!(total == dim_f(i, j, &lambda)?, "i={i} j={j} degree total {total}");
        }
    }
    Ok(None)
}

fn checks() -> Vec<Check> {
    let c = |suite, id, needs_kl, run| Check { suite, id, needs_kl, run };
    vec![
        c(Suite::Symgroup, "coset-identities", false, coset_identities),
        c(Suite::Symgroup, "cycle-lengths", false, cycle_lengths),
        c(Suite::Symgroup, "bruhat-prefix-criterion", false, bruhat_criteria),
        c(Suite::Symgroup, "length-symmetries", false, length_symmetries),
        c(Suite::Tableaux, "rs-bijection", false, rs_bijection),
        c(Suite::Tableaux, "two-column-cell", false, cell_shape),
        c(Suite::Tableaux, "minimal-elements", false, minimal_elements),
        c(Suite::Kl, "y-chain-values", true, y_chain_values),
        c(Suite::Kl, "kl-r-identity", true, kl_r_identity),
        c(Suite::Kl, "verma-longest", true, verma_longest),
        c(Suite::Kl, "cell-matrix-inverse", true, cell_matrix_inverse),
        c(Suite::Dyck, "jordan-block", false, jordan_block),
        c(Suite::Dyck, "psi-order", false, psi_order),
        c(Suite::Dyck, "dyck-chain", false, dyck_chain),
        c(Suite::Dyck, "named-verdicts", false, named_verdicts),
        c(Suite::Dyck, "inversion-formula", true, deodhar_inversion),
        c(Suite::Dyck, "parabolic-minus-triangular", true, parabolic_minus_triangular),
        c(Suite::Weights, "alternating-identity", false, alternating_identity),
        c(Suite::Weights, "goldie-reconstruction", false, goldie_reconstruction),
        c(Suite::Weights, "degree-identity", false, degree_identity),
        c(Suite::Weights, "goldie-kl-sum", true, goldie_kl_sum),
        c(Suite::Weights, "rearrangement-gap", false, gap_positive),
        c(Suite::Weights, "offset-invariance", false, offset_invariance),
        c(Suite::Langlands, "classifier-over-sn", false, classifier_over_sn),
        c(Suite::Langlands, "classifier-brute-force", false, classifier_brute_force),
        c(Suite::Langlands, "singular-points", false, singular_points),
        c(Suite::Langlands, "parameter-injective", false, parameter_injective),
        c(Suite::Coherent, "transition-inverse", false, transition_inverse),
        c(Suite::Coherent, "psibar-substitution", false, psibar_substitution),
        c(Suite::Coherent, "row-relations", false, row_relations),
        c(Suite::Coherent, "basis-determinant", false, basis_determinant),
        c(Suite::Coherent, "degree-functional", false, degree_functional_check),
        c(Suite::Coherent, "composition-series", false, composition_check),
    ]
}

pub fn run(n: usize, suite: Suite, seed: u64, oracle: &KlOracle) -> Report {
    let start = Instant::now();
    let selected: Vec<(usize, Check)> =
        checks().into_iter().enumerate().filter(|(_, c)| suite == Suite::All || c.suite == suite).collect();
    let results = selected
        .par_iter()
        .map(|(idx, check)| {
            let (status, witness) = if check.needs_kl && !oracle.supports(n) {
                (Status::Skipped, Some(format!("n = {n} exceeds the KL oracle bound {}", oracle.max_n())))
            } else {
                let ctx = Ctx { n, oracle, rng_seed: seed.wrapping_add(*idx as u64) };
                match (check.run)(&ctx) {
                    Ok(None) => (Status::Pass, None),
                    Ok(Some(w)) => (Status::Fail, Some(w)),
                    Err(e @ Error::ResourceLimit(_)) => (Status::ResourceLimit, Some(e.to_string())),
                    Err(e) => (Status::Fail, Some(format!("error: {e}"))),
                }
            };
            CheckResult { suite: check.suite.name(), id: check.id, status, witness }
        })
        .collect();
    Report { suite, n, seed, oracle_max_n: oracle.max_n(), checks: results, wall_time_ms: start.elapsed().as_millis() }
}
