use crate::error::{usage, Result};
use crate::field::PrimeField;

/// Dense row-major matrix over a prime field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: PrimeField> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Builds a matrix from explicit rows; all rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: &[Vec<F>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(usage(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Matrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Integer convenience constructor; entries are reduced mod p.
    pub fn from_ints(cols: usize, rows: &[&[i64]]) -> Result<Self> {
        let rows: Vec<Vec<F>> = rows.iter().map(|r| crate::field::vector(r)).collect();
        Self::from_rows(cols, &rows)
    }

    pub fn from_flat(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn as_slice(&self) -> &[F] {
        &self.data
    }

    pub fn into_flat(self) -> Vec<F> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[F]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn get(&self, i: usize, j: usize) -> F {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: F) {
        self.data[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(usage(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    /// Keeps only the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out.set(i, jj, self.get(i, j));
            }
        }
        out
    }

    /// Brings the matrix to reduced row echelon form in place and returns
    /// the pivot columns. Zero rows end up at the bottom.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        rref_in_place(&mut self.data, self.rows, self.cols)
    }

    pub fn rank(&self) -> usize {
        let mut scratch = self.data.clone();
        rank_in_place(&mut scratch, self.rows, self.cols)
    }
}

/// Reduced row echelon form of a flat row-major buffer.
pub(crate) fn rref_in_place<F: PrimeField>(data: &mut [F], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !data[i * cols + c].is_zero()) else {
            continue;
        };
        if pr != r {
            for j in 0..cols {
                data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = data[r * cols + c].inv();
        for j in c..cols {
            data[r * cols + j] *= inv;
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = data[i * cols + c];
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = data[r * cols + j];
                data[i * cols + j] -= f * v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank by forward elimination only; destroys the buffer.
pub(crate) fn rank_in_place<F: PrimeField>(data: &mut [F], rows: usize, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !data[i * cols + c].is_zero()) else {
            continue;
        };
        if pr != r {
            for j in c..cols {
                data.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = data[r * cols + c].inv();
        for i in r + 1..rows {
            let f = data[i * cols + c] * inv;
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = data[r * cols + j];
                data[i * cols + j] -= f * v;
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F2, F3};

    #[test]
    fn rref_of_identity_is_identity() {
        let mut m = Matrix::<F2>::identity(3);
        assert_eq!(m.row_reduce(), vec![0, 1, 2]);
        assert_eq!(m, Matrix::identity(3));
    }

    #[test]
    fn ragged_rows_rejected() {
        let err = Matrix::<F3>::from_ints(3, &[&[1, 0, 0], &[1, 0]]).unwrap_err();
        assert!(matches!(err, crate::Error::Usage(_)));
    }

    #[test]
    fn rank_matches_rref_pivots() {
        let m = Matrix::<F3>::from_ints(4, &[&[1, 2, 0, 1], &[2, 1, 0, 2], &[0, 0, 1, 1]]).unwrap();
        let mut r = m.clone();
        assert_eq!(r.row_reduce().len(), m.rank());
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn multiply_and_transpose() {
        let a = Matrix::<F3>::from_ints(2, &[&[1, 2], &[0, 1]]).unwrap();
        let b = a.mul(&a.transpose()).unwrap();
        // [[1,2],[0,1]] * [[1,0],[2,1]] = [[5,2],[2,1]] = [[2,2],[2,1]] mod 3
        assert_eq!(b, Matrix::from_ints(2, &[&[2, 2], &[2, 1]]).unwrap());
        assert!(a.mul(&Matrix::zeros(3, 1)).is_err());
    }
}
