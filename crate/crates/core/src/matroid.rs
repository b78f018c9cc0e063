//! Column matroids of matrices over `F_p` and the matroid-union rank formula.
//!
//! Subsets of the ground set `{0, …, n-1}` are bitmasks.

use crate::algebra::{rank_in_place, Matrix, Subspace};
use crate::error::{usage, Result};
use crate::field::PrimeField;

pub type Subset = u64;

/// Largest `|K|` for which [`ColumnMatroid::union_rank`] enumerates all
/// `2^|K|` subsets.
pub const MAX_UNION_GROUND: usize = 20;

pub fn subset_of(indices: &[usize]) -> Subset {
    indices.iter().fold(0, |m, &i| m | (1 << i))
}

pub fn subset_members(s: Subset) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| s >> i & 1 == 1)
}

/// The matroid on the columns of a matrix: `r(S)` is the rank of the
/// column submatrix on `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnMatroid<F> {
    matrix: Matrix<F>,
}

impl<F: PrimeField> ColumnMatroid<F> {
    pub fn new(matrix: Matrix<F>) -> Result<Self> {
        if matrix.cols() > 64 {
            return Err(usage("column matroids support at most 64 columns"));
        }
        Ok(ColumnMatroid { matrix })
    }

    /// `M_U`: the column matroid of a basis-rows matrix of `U`. Any basis
    /// gives the same matroid; the RREF one is used.
    pub fn of_subspace(u: &Subspace<F>) -> Result<Self> {
        Self::new(u.to_matrix())
    }

    pub fn ground_size(&self) -> usize {
        self.matrix.cols()
    }

    pub fn ground(&self) -> Subset {
        if self.ground_size() == 64 {
            u64::MAX
        } else {
            (1 << self.ground_size()) - 1
        }
    }

    fn check_subset(&self, s: Subset) -> Result<()> {
        if s & !self.ground() != 0 {
            return Err(usage(format!(
                "subset {s:#b} has elements outside the ground set of size {}",
                self.ground_size()
            )));
        }
        Ok(())
    }

    pub fn rank(&self, s: Subset) -> Result<usize> {
        self.check_subset(s)?;
        Ok(self.rank_unchecked(s))
    }

    fn rank_unchecked(&self, s: Subset) -> usize {
        let cols: Vec<usize> = subset_members(s).collect();
        if cols.is_empty() {
            return 0;
        }
        // rank of the transpose: one row per selected column
        let rows = self.matrix.rows();
        let mut data = Vec::with_capacity(cols.len() * rows);
        for &c in &cols {
            data.extend((0..rows).map(|r| self.matrix.get(r, c)));
        }
        rank_in_place(&mut data, cols.len(), rows)
    }

    pub fn is_independent(&self, s: Subset) -> Result<bool> {
        Ok(self.rank(s)? == s.count_ones() as usize)
    }

    /// Rank of the union matroid on `K`:
    /// `min over L ⊆ K of |K \ L| + r₁(L) + r₂(L)`.
    pub fn union_rank(&self, other: &Self, k: Subset) -> Result<usize> {
        if self.ground_size() != other.ground_size() {
            return Err(usage(format!(
                "ground sets differ: {} vs {}",
                self.ground_size(),
                other.ground_size()
            )));
        }
        self.check_subset(k)?;
        if k.count_ones() as usize > MAX_UNION_GROUND {
            return Err(usage(format!(
                "union rank enumerates all subsets of K; |K| must be at most {MAX_UNION_GROUND}"
            )));
        }
        let mut best = k.count_ones() as usize;
        // iterate all submasks of k
        let mut l = k;
        loop {
            let value = (k & !l).count_ones() as usize
                + self.rank_unchecked(l)
                + other.rank_unchecked(l);
            best = best.min(value);
            if l == 0 {
                break;
            }
            l = (l - 1) & k;
        }
        Ok(best)
    }

    /// All bases, as bitmasks in increasing numeric order.
    pub fn bases(&self) -> Vec<Subset> {
        let n = self.ground_size();
        let r = self.rank_unchecked(self.ground());
        let mut out = Vec::new();
        let mut pick = Vec::with_capacity(r);
        choose(n, r, 0, &mut pick, &mut |s| {
            let mask = subset_of(s);
            if self.rank_unchecked(mask) == r {
                out.push(mask);
            }
        });
        out.sort_unstable();
        out
    }

    /// Whether the two matroids have disjoint bases, i.e. the union rank of
    /// the whole ground set is `r₁(N) + r₂(N)`.
    pub fn have_disjoint_bases(&self, other: &Self) -> Result<bool> {
        let full = self.ground();
        let union = self.union_rank(other, full)?;
        Ok(union == self.rank_unchecked(full) + other.rank_unchecked(full))
    }
}

fn choose(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if acc.len() == k {
        f(acc);
        return;
    }
    for i in start..=n - (k - acc.len()) {
        acc.push(i);
        choose(n, k, i + 1, acc, f);
        acc.pop();
    }
}

pub fn rank<F: PrimeField>(m: &ColumnMatroid<F>, s: Subset) -> Result<usize> {
    m.rank(s)
}

pub fn union_rank<F: PrimeField>(a: &ColumnMatroid<F>, b: &ColumnMatroid<F>, k: Subset) -> Result<usize> {
    a.union_rank(b, k)
}

pub fn bases<F: PrimeField>(m: &ColumnMatroid<F>) -> Vec<Subset> {
    m.bases()
}

pub fn have_disjoint_bases<F: PrimeField>(a: &ColumnMatroid<F>, b: &ColumnMatroid<F>) -> Result<bool> {
    a.have_disjoint_bases(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F2, F3};

    fn identity(n: usize) -> ColumnMatroid<F2> {
        ColumnMatroid::new(Matrix::identity(n)).unwrap()
    }

    #[test]
    fn rank_examples() {
        let m = identity(3);
        assert_eq!(m.rank(subset_of(&[0, 1])).unwrap(), 2);
        assert_eq!(m.rank(0).unwrap(), 0);
        let m = ColumnMatroid::<F2>::new(Matrix::from_ints(3, &[&[1, 1, 0], &[0, 1, 1]]).unwrap()).unwrap();
        assert_eq!(m.rank(0b111).unwrap(), 2);
        assert!(m.rank(0b1000).is_err());
    }

    #[test]
    fn union_rank_examples() {
        let m = identity(3);
        assert_eq!(m.union_rank(&m, 0b111).unwrap(), 3);
        assert_eq!(m.union_rank(&m, 0).unwrap(), 0);

        let u = Subspace::<F2>::span_ints(3, &[&[1, 1, 0]]).unwrap();
        let w = Subspace::<F2>::span_ints(3, &[&[0, 1, 1]]).unwrap();
        let (mu, mw) = (ColumnMatroid::of_subspace(&u).unwrap(), ColumnMatroid::of_subspace(&w).unwrap());
        assert_eq!(mu.union_rank(&mw, 0b111).unwrap(), 2);

        let small = ColumnMatroid::<F2>::new(Matrix::identity(2)).unwrap();
        assert!(m.union_rank(&small, 0b11).is_err());
    }

    #[test]
    fn bases_examples() {
        assert_eq!(identity(2).bases(), vec![0b11]);
        let m = ColumnMatroid::<F2>::new(Matrix::from_ints(2, &[&[1, 1]]).unwrap()).unwrap();
        assert_eq!(m.bases(), vec![0b01, 0b10]);
        let u = ColumnMatroid::of_subspace(&Subspace::<F2>::coordinate(3, [0, 1])).unwrap();
        assert_eq!(u.bases(), vec![0b011]);
    }

    #[test]
    fn disjoint_bases_examples() {
        let m = identity(2);
        assert!(!m.have_disjoint_bases(&m).unwrap());
        let u = ColumnMatroid::of_subspace(&Subspace::<F3>::coordinate(3, [0])).unwrap();
        let w = ColumnMatroid::of_subspace(&Subspace::<F3>::span_ints(3, &[&[1, 1, 0]]).unwrap()).unwrap();
        assert!(u.have_disjoint_bases(&w).unwrap());
    }
}
