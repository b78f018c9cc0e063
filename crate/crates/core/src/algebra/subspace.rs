use std::fmt;

use crate::algebra::matrix::{rank_in_place, rref_in_place, Matrix};
use crate::error::{Error, Result};
use crate::field::PrimeField;

/// A subspace of `F_p^d`, stored as its reduced row echelon basis.
///
/// The RREF basis is unique, so two `Subspace` values describe the same
/// subspace exactly when they are equal, and the derived ordering
/// (ambient, dimension, then entries row-major) is the canonical vertex
/// order used throughout the crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace<F> {
    ambient: usize,
    dim: usize,
    entries: Vec<F>,
}

impl<F: PrimeField> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            dim: 0,
            entries: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, 0..ambient)
    }

    /// `⟨e_j : j ∈ coords⟩` (0-based coordinates).
    pub fn coordinate(ambient: usize, coords: impl IntoIterator<Item = usize>) -> Self {
        let rows: Vec<Vec<F>> = coords
            .into_iter()
            .map(|j| unit_vector(ambient, j))
            .collect();
        Self::span(ambient, &rows).expect("unit vectors have the right length")
    }

    /// Canonical span of a list of vectors of length `ambient`.
    pub fn span(ambient: usize, rows: &[Vec<F>]) -> Result<Self> {
        Ok(Self::from_matrix(Matrix::from_rows(ambient, rows)?))
    }

    /// Integer convenience wrapper around [`Subspace::span`].
    pub fn span_ints(ambient: usize, rows: &[&[i64]]) -> Result<Self> {
        Ok(Self::from_matrix(Matrix::from_ints(ambient, rows)?))
    }

    /// Row space of `m` in canonical form.
    pub fn from_matrix(m: Matrix<F>) -> Self {
        let (rows, cols) = (m.rows(), m.cols());
        let mut data = m.into_flat();
        let dim = rref_in_place(&mut data, rows, cols).len();
        data.truncate(dim * cols);
        Subspace {
            ambient: cols,
            dim,
            entries: data,
        }
    }

    /// Wraps a buffer that is already in RREF with no zero rows.
    pub(crate) fn from_rref_unchecked(ambient: usize, dim: usize, entries: Vec<F>) -> Self {
        debug_assert_eq!(entries.len(), ambient * dim);
        Subspace {
            ambient,
            dim,
            entries,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.entries[i * self.ambient..(i + 1) * self.ambient]
    }

    pub fn basis(&self) -> impl Iterator<Item = &[F]> + '_ {
        (0..self.dim).map(move |i| self.row(i))
    }

    /// Flat row-major basis entries.
    pub fn entries(&self) -> &[F] {
        &self.entries
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_flat(self.dim, self.ambient, self.entries.clone())
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis()
            .map(|r| r.iter().position(|x| !x.is_zero()).expect("no zero rows"))
            .collect()
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        Ok(())
    }

    /// `U + W`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut data = Vec::with_capacity(self.entries.len() + other.entries.len());
        data.extend_from_slice(&self.entries);
        data.extend_from_slice(&other.entries);
        Ok(Self::from_matrix(Matrix::from_flat(
            self.dim + other.dim,
            self.ambient,
            data,
        )))
    }

    /// `dim(U + W)` without building the sum.
    pub fn sum_dim(&self, other: &Self) -> Result<usize> {
        self.check_ambient(other)?;
        let mut data = Vec::with_capacity(self.entries.len() + other.entries.len());
        data.extend_from_slice(&self.entries);
        data.extend_from_slice(&other.entries);
        Ok(rank_in_place(&mut data, self.dim + other.dim, self.ambient))
    }

    /// `dim(U ∩ W)` via the modular law.
    pub fn intersection_dim(&self, other: &Self) -> Result<usize> {
        Ok(self.dim + other.dim - self.sum_dim(other)?)
    }

    /// `U ∩ W`, computed as the annihilator of `U° + W°`.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        if self == other {
            return Ok(self.clone());
        }
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// `{v : v·u = 0 for all u ∈ U}` under the standard dot product.
    pub fn annihilator(&self) -> Self {
        let d = self.ambient;
        let pivots = self.pivots();
        let mut is_pivot = vec![false; d];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::with_capacity(d - self.dim);
        for f in (0..d).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); d];
            v[f] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -self.row(r)[f];
            }
            rows.push(v);
        }
        Self::span(d, &rows).expect("rows have ambient length")
    }

    pub fn contains_vector(&self, v: &[F]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        // Reduce v against the RREF basis; it lies in U iff nothing is left.
        let mut w = v.to_vec();
        for (r, p) in self.pivots().into_iter().enumerate() {
            let f = w[p];
            if !f.is_zero() {
                for (wj, &bj) in w.iter_mut().zip(self.row(r)) {
                    *wj -= f * bj;
                }
            }
        }
        w.iter().all(|x| x.is_zero())
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis().all(|r| other.contains_vector(r))
    }

    /// True when every basis vector is a standard unit vector, i.e. the
    /// subspace is spanned by a subset of the coordinate frame.
    pub fn is_coordinate(&self) -> bool {
        self.basis()
            .all(|r| r.iter().filter(|x| !x.is_zero()).count() == 1)
    }

    /// Coordinates of a coordinate subspace, `None` otherwise.
    pub fn coordinate_support(&self) -> Option<Vec<usize>> {
        self.is_coordinate().then(|| self.pivots())
    }

    /// Treats `self` as a subspace of `F^k` written in the coordinates of
    /// the basis of `target` (`k = dim target`) and returns its image in the
    /// ambient space of `target`.
    pub fn embed_in(&self, target: &Subspace<F>) -> Result<Self> {
        if self.ambient != target.dim {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: target.dim,
            });
        }
        let m = self.to_matrix().mul(&target.to_matrix())?;
        Ok(Self::from_matrix(m))
    }
}

pub fn unit_vector<F: PrimeField>(ambient: usize, j: usize) -> Vec<F> {
    let mut v = vec![F::zero(); ambient];
    v[j] = F::one();
    v
}

impl<F: PrimeField> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, row) in self.basis().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            for x in row {
                write!(f, "{x}")?;
            }
        }
        write!(f, "⟩≤F{}^{}", F::CHARACTERISTIC, self.ambient)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F2, F3};

    #[test]
    fn identity_is_already_canonical() {
        let u = Subspace::<F2>::span_ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(u, Subspace::full(3));
        assert_eq!(u.dim(), 3);
    }

    #[test]
    fn pivot_normalization_over_f2() {
        let u = Subspace::<F2>::span_ints(3, &[&[1, 1, 0], &[0, 1, 0]]).unwrap();
        assert_eq!(u, Subspace::coordinate(3, [0, 1]));
        assert_eq!(u.row(0), &[F2::new(1), F2::new(0), F2::new(0)]);
    }

    #[test]
    fn rref_over_f3_by_hand() {
        // 2e1+e3 = 2(e1+2e3) mod 3, so the two rows span a line.
        let u = Subspace::<F3>::span_ints(3, &[&[2, 0, 1], &[1, 0, 2]]).unwrap();
        assert_eq!(u.dim(), 1);
        assert_eq!(u, Subspace::span_ints(3, &[&[1, 0, 2]]).unwrap());
    }

    #[test]
    fn intersection_examples() {
        let u = Subspace::<F2>::coordinate(4, [0, 1]);
        let w = Subspace::<F2>::coordinate(4, [1, 2]);
        assert_eq!(u.intersect(&w).unwrap(), Subspace::coordinate(4, [1]));
        assert_eq!(u.intersect(&u).unwrap(), u);

        let u = Subspace::<F3>::span_ints(4, &[&[1, 1, 0, 0], &[0, 0, 1, 0]]).unwrap();
        let w = Subspace::<F3>::coordinate(4, [0, 1]);
        assert_eq!(
            u.intersect(&w).unwrap(),
            Subspace::span_ints(4, &[&[1, 1, 0, 0]]).unwrap()
        );
    }

    #[test]
    fn sum_examples() {
        let e1 = Subspace::<F2>::coordinate(3, [0]);
        let e2 = Subspace::<F2>::coordinate(3, [1]);
        assert_eq!(e1.sum(&e2).unwrap(), Subspace::coordinate(3, [0, 1]));
        assert_eq!(e1.sum(&Subspace::zero(3)).unwrap(), e1);

        let a = Subspace::<F2>::span_ints(3, &[&[1, 1, 0]]).unwrap();
        let b = Subspace::<F2>::span_ints(3, &[&[0, 1, 1]]).unwrap();
        let s = a.sum(&b).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains_vector(&crate::field::vector(&[1, 0, 1])));
    }

    #[test]
    fn ambient_mismatch_is_reported() {
        let a = Subspace::<F2>::zero(3);
        let b = Subspace::<F2>::zero(4);
        assert_eq!(
            a.intersect(&b).unwrap_err(),
            Error::AmbientMismatch { left: 3, right: 4 }
        );
        assert!(a.sum(&b).is_err());
    }

    #[test]
    fn annihilator_dimension_and_duality() {
        let u = Subspace::<F3>::span_ints(5, &[&[1, 2, 0, 1, 0], &[0, 1, 1, 0, 2]]).unwrap();
        let a = u.annihilator();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.annihilator(), u);
        assert_eq!(Subspace::<F3>::full(4).annihilator(), Subspace::zero(4));
    }
}
