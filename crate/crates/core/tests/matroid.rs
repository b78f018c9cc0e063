//! The union-rank formula against brute force, and the disjoint-bases lemma.
//!
//! Both quantities depend on a matrix only through its column matroid, so
//! the exhaustive check runs over the distinct column matroids of all
//! `3 x c` matrices over `F_2` (`c <= 5`); matrices with fewer rows have the
//! same matroids as their zero-padded `3 x c` versions.

mod common;

use std::collections::BTreeMap;

use kneserlab_core::algebra::{Matrix, Subspace};
use kneserlab_core::matroid::{have_disjoint_bases, ColumnMatroid, Subset};
use kneserlab_core::{PrimeField, F2, F3};
use proptest::prelude::*;

use common::{random_subspace, rng};

fn matrix_from_columns(codes: &[u8]) -> Matrix<F2> {
    let rows: Vec<Vec<i64>> = (0..3)
        .map(|r| codes.iter().map(|&c| i64::from(c >> r & 1)).collect())
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Matrix::from_ints(codes.len(), &refs).unwrap()
}

/// One representative matroid per distinct rank function.
fn distinct_matroids(c: usize) -> Vec<(ColumnMatroid<F2>, Vec<usize>)> {
    let mut seen = BTreeMap::new();
    for code in 0..8u32.pow(c as u32) {
        let cols: Vec<u8> = (0..c).map(|i| (code >> (3 * i) & 7) as u8).collect();
        let m = ColumnMatroid::new(matrix_from_columns(&cols)).unwrap();
        let ranks: Vec<usize> = (0..1u64 << c).map(|s| m.rank(s).unwrap()).collect();
        seen.entry(ranks).or_insert(m);
    }
    seen.into_iter().map(|(r, m)| (m, r)).collect()
}

/// `max |I₁ ∪ I₂|` over independent `I₁, I₂ ⊆ K`, for every `K`.
fn brute_union(c: usize, r1: &[usize], r2: &[usize]) -> Vec<usize> {
    let full = 1usize << c;
    let indep = |r: &[usize]| -> Vec<usize> { (0..full).filter(|&s| r[s] == s.count_ones() as usize).collect() };
    let (i1, i2) = (indep(r1), indep(r2));
    let mut best = vec![0usize; full];
    for &a in &i1 {
        for &b in &i2 {
            let u = a | b;
            best[u] = best[u].max(u.count_ones() as usize);
        }
    }
    // push maxima up to supersets
    for bit in 0..c {
        for s in 0..full {
            if s >> bit & 1 == 1 {
                best[s] = best[s].max(best[s ^ 1 << bit]);
            }
        }
    }
    best
}

#[test]
fn union_rank_formula_matches_brute_force_exhaustively() {
    let expected_classes = [2, 5, 16, 66, 342];
    for c in 1..=5 {
        let ms = distinct_matroids(c);
        assert_eq!(ms.len(), expected_classes[c - 1], "matroid classes on {c} columns");
        for (m1, r1) in &ms {
            for (m2, r2) in &ms {
                let brute = brute_union(c, r1, r2);
                for k in 0..1u64 << c {
                    assert_eq!(m1.union_rank(m2, k).unwrap(), brute[k as usize]);
                }
            }
        }
    }
}

fn disjoint_pair<F: PrimeField>(r: &mut rand_chacha::ChaCha8Rng, n: usize, a: usize, b: usize) -> (Subspace<F>, Subspace<F>) {
    loop {
        let u = random_subspace::<F>(r, n, a);
        let w = random_subspace::<F>(r, n, b);
        if u.intersection_dim(&w).unwrap() == 0 {
            return (u, w);
        }
    }
}

#[test]
fn disjoint_subspaces_have_disjoint_bases() {
    let mut r = rng(11);
    let mut checked = 0;
    for trial in 0..1000usize {
        let n = 2 + trial % 6;
        let a = 1 + trial / 6 % (n - 1);
        let b = 1 + trial / 36 % (n - a);
        let ok = if trial % 2 == 0 {
            let (u, w) = disjoint_pair::<F2>(&mut r, n, a, b);
            have_disjoint_bases(&ColumnMatroid::of_subspace(&u).unwrap(), &ColumnMatroid::of_subspace(&w).unwrap())
        } else {
            let (u, w) = disjoint_pair::<F3>(&mut r, n, a, b);
            have_disjoint_bases(&ColumnMatroid::of_subspace(&u).unwrap(), &ColumnMatroid::of_subspace(&w).unwrap())
        };
        assert!(ok.unwrap(), "n = {n}, dims {a} + {b}");
        checked += 1;
    }
    assert_eq!(checked, 1000);
}

#[test]
fn meeting_subspaces_can_fail() {
    let u = Subspace::<F2>::span_ints(3, &[&[1, 0, 0]]).unwrap();
    let m = ColumnMatroid::of_subspace(&u).unwrap();
    assert!(!have_disjoint_bases(&m, &m).unwrap());
}

proptest! {
    #[test]
    fn rank_is_submodular_and_bounded(cols in prop::collection::vec(0u8..8, 1..=6), a in any::<u64>(), b in any::<u64>()) {
        let m = ColumnMatroid::new(matrix_from_columns(&cols)).unwrap();
        let g = m.ground();
        let (a, b): (Subset, Subset) = (a & g, b & g);
        let r = |s| m.rank(s).unwrap();
        prop_assert!(r(a | b) + r(a & b) <= r(a) + r(b));
        prop_assert!(r(a) <= a.count_ones() as usize);
        prop_assert!(r(a & b) <= r(a));
        prop_assert_eq!(r(0), 0);
    }
}
