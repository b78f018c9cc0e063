//! Sparse exterior algebra over `F_p` and the Plücker map.
//!
//! A basis blade `e_M = e_{i_1} ∧ … ∧ e_{i_m}` (`i_1 < … < i_m`) is keyed by
//! the bitmask of `M`, so ambient dimensions up to 64 are supported.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::algebra::{rank_in_place, rref_in_place, Subspace};
use crate::error::{usage, Error, Result};
use crate::field::PrimeField;

pub type Blade = u64;

/// Bitmask of an index set (0-based indices).
pub fn blade(indices: &[usize]) -> Blade {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

pub fn blade_indices(b: Blade) -> Vec<usize> {
    (0..64).filter(|i| b >> i & 1 == 1).collect()
}

/// `(-1)^k` where `k` counts pairs `(i ∈ a, j ∈ b)` with `i > j`: the sign
/// of the shuffle that sorts `e_a ∧ e_b` into `e_{a ∪ b}`.
fn merge_sign_is_negative(a: Blade, b: Blade) -> bool {
    let mut inversions = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        inversions += (a >> j >> 1).count_ones();
        rest &= rest - 1;
    }
    inversions % 2 == 1
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multivector<F> {
    ambient: usize,
    terms: BTreeMap<Blade, F>,
}

impl<F: PrimeField> Multivector<F> {
    pub fn zero(ambient: usize) -> Self {
        assert!(ambient <= 64, "exterior algebra supports ambient dimension up to 64");
        Multivector {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(ambient: usize, c: F) -> Self {
        let mut m = Self::zero(ambient);
        m.add_term(0, c);
        m
    }

    /// The basis blade `e_M`.
    pub fn basis_blade(ambient: usize, indices: &[usize]) -> Self {
        let mut m = Self::zero(ambient);
        m.add_term(blade(indices), F::one());
        m
    }

    /// A grade-1 element from coordinates.
    pub fn from_vector(v: &[F]) -> Self {
        let mut m = Self::zero(v.len());
        for (i, &c) in v.iter().enumerate() {
            m.add_term(1 << i, c);
        }
        m
    }

    fn add_term(&mut self, b: Blade, c: F) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b).or_insert_with(F::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, F)> + '_ {
        self.terms.iter().map(|(&b, &c)| (b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The common grade of all terms, `None` for zero or mixed grades.
    pub fn grade(&self) -> Option<usize> {
        let mut grades = self.terms.keys().map(|b| b.count_ones() as usize);
        let g = grades.next()?;
        grades.all(|h| h == g).then_some(g)
    }

    /// Coefficient of `e_S`; `indices` must be strictly increasing.
    pub fn coefficient(&self, indices: &[usize]) -> F {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        self.coefficient_of(blade(indices))
    }

    pub fn coefficient_of(&self, b: Blade) -> F {
        self.terms.get(&b).copied().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, c: F) -> Self {
        let mut m = Self::zero(self.ambient);
        for (b, x) in self.terms() {
            m.add_term(b, x * c);
        }
        m
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        let mut out = Self::zero(self.ambient);
        for (a, x) in self.terms() {
            for (b, y) in other.terms() {
                if a & b != 0 {
                    continue;
                }
                let c = x * y;
                out.add_term(a | b, if merge_sign_is_negative(a, b) { -c } else { c });
            }
        }
        Ok(out)
    }
}

/// `ψ(U)`: the wedge of the canonical (RREF) basis rows of `U`.
pub fn plucker<F: PrimeField>(u: &Subspace<F>) -> Result<Multivector<F>> {
    if u.is_zero() {
        return Err(usage("the Plücker map is undefined on the zero subspace"));
    }
    let mut rows = u.basis();
    let first = Multivector::from_vector(rows.next().expect("nonzero"));
    rows.try_fold(first, |acc, r| acc.wedge(&Multivector::from_vector(r)))
}

pub fn wedge<F: PrimeField>(a: &Multivector<F>, b: &Multivector<F>) -> Result<Multivector<F>> {
    a.wedge(b)
}

pub fn coefficient<F: PrimeField>(m: &Multivector<F>, indices: &[usize]) -> F {
    m.coefficient(indices)
}

/// Whether `m` lies in the linear span of `generators`, by comparing ranks
/// of the coefficient matrices with and without `m`.
pub fn span_membership<F: PrimeField>(m: &Multivector<F>, generators: &[Multivector<F>]) -> bool {
    if m.is_zero() {
        return true;
    }
    let support: Vec<Blade> = generators
        .iter()
        .chain(std::iter::once(m))
        .flat_map(|g| g.terms.keys().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let col = |b: &Blade| support.binary_search(b).expect("in support");
    let cols = support.len();
    let fill = |rows: &[&Multivector<F>]| {
        let mut data = vec![F::zero(); rows.len() * cols];
        for (i, g) in rows.iter().enumerate() {
            for (b, c) in g.terms() {
                data[i * cols + col(&b)] = c;
            }
        }
        data
    };
    let gens: Vec<&Multivector<F>> = generators.iter().collect();
    let mut without = fill(&gens);
    let r0 = rank_in_place(&mut without, gens.len(), cols);
    let mut with_m = gens.clone();
    with_m.push(m);
    let mut with = fill(&with_m);
    let r1 = rank_in_place(&mut with, with_m.len(), cols);
    r0 == r1
}

/// The span of a fixed list of multivectors, row-reduced once so that many
/// membership queries are cheap.
#[derive(Clone, Debug)]
pub struct BladeSpan<F> {
    support: Vec<Blade>,
    /// Reduced rows over `support`, with their pivot columns.
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: PrimeField> BladeSpan<F> {
    pub fn new(generators: &[Multivector<F>]) -> Self {
        let support: Vec<Blade> = generators
            .iter()
            .flat_map(|g| g.terms.keys().copied())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let cols = support.len();
        let mut data = vec![F::zero(); generators.len() * cols];
        for (i, g) in generators.iter().enumerate() {
            for (b, c) in g.terms() {
                data[i * cols + support.binary_search(&b).expect("in support")] = c;
            }
        }
        let pivots = rref_in_place(&mut data, generators.len(), cols);
        let rows = pivots
            .iter()
            .enumerate()
            .map(|(i, &p)| (p, data[i * cols..(i + 1) * cols].to_vec()))
            .collect();
        BladeSpan { support, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, m: &Multivector<F>) -> bool {
        let mut v = vec![F::zero(); self.support.len()];
        for (b, c) in m.terms() {
            match self.support.binary_search(&b) {
                Ok(i) => v[i] = c,
                Err(_) => return false,
            }
        }
        for (p, row) in &self.rows {
            let c = v[*p];
            if !c.is_zero() {
                for (x, &r) in v.iter_mut().zip(row) {
                    *x -= c * r;
                }
            }
        }
        v.iter().all(|x| x.is_zero())
    }
}

impl<F: PrimeField> Add for &Multivector<F> {
    type Output = Multivector<F>;

    fn add(self, rhs: Self) -> Multivector<F> {
        assert_eq!(self.ambient, rhs.ambient, "ambient mismatch");
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(b, c);
        }
        out
    }
}

impl<F: PrimeField> Neg for &Multivector<F> {
    type Output = Multivector<F>;

    fn neg(self) -> Multivector<F> {
        self.scale(-F::one())
    }
}

impl<F: PrimeField> Sub for &Multivector<F> {
    type Output = Multivector<F>;

    fn sub(self, rhs: Self) -> Multivector<F> {
        self + &(-rhs)
    }
}

impl<F: PrimeField> fmt::Debug for Multivector<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (b, c)) in self.terms().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let idx: Vec<String> = blade_indices(b).iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "{c}·e{{{}}}", idx.join(","))?;
        }
        Ok(())
    }
}
