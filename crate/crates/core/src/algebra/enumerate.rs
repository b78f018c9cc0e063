use std::collections::BTreeSet;

use crate::algebra::form::Form;
use crate::algebra::subspace::Subspace;
use crate::field::PrimeField;

/// Gaussian binomial coefficient `[n k]_q`.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// All `k`-dimensional subspaces of `F_p^d`, each once, sorted in canonical
/// (row-major RREF) order. There are `[d k]_p` of them.
pub fn enumerate_subspaces<F: PrimeField>(d: usize, k: usize) -> Vec<Subspace<F>> {
    assert!(k <= d, "cannot have a {k}-subspace of a {d}-space");
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(k);
    pivot_sets(d, k, 0, &mut pivots, &mut |pivots| {
        emit_with_pivots(d, pivots, &mut out);
    });
    out.sort_unstable();
    out
}

fn pivot_sets(d: usize, k: usize, start: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if acc.len() == k {
        f(acc);
        return;
    }
    let remaining = k - acc.len();
    for c in start..=d - remaining {
        acc.push(c);
        pivot_sets(d, k, c + 1, acc, f);
        acc.pop();
    }
}

fn emit_with_pivots<F: PrimeField>(d: usize, pivots: &[usize], out: &mut Vec<Subspace<F>>) {
    let k = pivots.len();
    let mut is_pivot = vec![false; d];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = pivots
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| {
            let is_pivot = &is_pivot;
            (p + 1..d).filter(move |&c| !is_pivot[c]).map(move |c| r * d + c)
        })
        .collect();
    let mut base = vec![F::zero(); k * d];
    for (r, &p) in pivots.iter().enumerate() {
        base[r * d + p] = F::one();
    }
    let elems: Vec<F> = F::elements().collect();
    let mut counter = vec![0usize; free.len()];
    loop {
        let mut entries = base.clone();
        for (slot, &pos) in free.iter().enumerate() {
            entries[pos] = elems[counter[slot]];
        }
        out.push(Subspace::from_rref_unchecked(d, k, entries));
        // odometer
        let mut i = 0;
        loop {
            if i == counter.len() {
                return;
            }
            counter[i] += 1;
            if counter[i] < elems.len() {
                break;
            }
            counter[i] = 0;
            i += 1;
        }
    }
}

/// All totally singular (quadratic) or totally isotropic (bilinear)
/// `k`-subspaces of the form, sorted canonically.
///
/// Built level by level: a singular `(j+1)`-space is `U + ⟨p⟩` with `U`
/// singular of dimension `j` and `p` a singular vector orthogonal to `U`.
/// Returns an empty list when `k` exceeds the Witt index.
pub fn enumerate_singular_subspaces<F: PrimeField>(form: &Form<F>, k: usize) -> Vec<Subspace<F>> {
    let d = form.dim();
    if k == 0 {
        return vec![Subspace::zero(d)];
    }
    let points: Vec<Subspace<F>> = enumerate_subspaces::<F>(d, 1)
        .into_iter()
        .filter(|p| form.is_singular_vector(p.row(0)))
        .collect();
    let mut level: Vec<Subspace<F>> = points.clone();
    for _ in 1..k {
        let mut next = BTreeSet::new();
        for u in &level {
            for p in &points {
                let v = p.row(0);
                if u.basis().all(|b| form.polar(b, v).is_zero()) && !u.contains_vector(v) {
                    next.insert(u.sum(p).expect("same ambient"));
                }
            }
        }
        level = next.into_iter().collect();
        if level.is_empty() {
            break;
        }
    }
    level
}

/// Filter-based reference enumeration, used to cross-check
/// [`enumerate_singular_subspaces`].
pub fn enumerate_singular_subspaces_by_filter<F: PrimeField>(
    form: &Form<F>,
    k: usize,
) -> Vec<Subspace<F>> {
    enumerate_subspaces::<F>(form.dim(), k)
        .into_iter()
        .filter(|u| form.is_totally_singular(u).expect("same ambient"))
        .collect()
}
