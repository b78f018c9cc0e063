use serde::{Deserialize, Serialize};

use crate::algebra::matrix::{rank_in_place, Matrix};
use crate::algebra::subspace::Subspace;
use crate::error::{usage, Error, Result};
use crate::field::PrimeField;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    Symmetric,
    Alternating,
    /// `gram` holds the upper-triangular coefficients of `Q`.
    Quadratic,
}

/// A bilinear or quadratic form on `F_p^d`.
///
/// For a quadratic form `Q` the polar form `b(x,y) = Q(x+y) - Q(x) - Q(y)`
/// has Gram matrix `G + Gᵀ`; this is what `perp` uses, in every
/// characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form<F> {
    kind: FormKind,
    gram: Matrix<F>,
    polar: Matrix<F>,
    radical_dim: usize,
}

impl<F: PrimeField> Form<F> {
    pub fn new(kind: FormKind, gram: Matrix<F>) -> Result<Self> {
        let d = gram.rows();
        if gram.cols() != d {
            return Err(usage(format!("gram matrix must be square, got {}x{}", d, gram.cols())));
        }
        for i in 0..d {
            for j in 0..d {
                let (a, b) = (gram.get(i, j), gram.get(j, i));
                let ok = match kind {
                    FormKind::Symmetric => a == b,
                    FormKind::Alternating => a == -b && (i != j || a.is_zero()),
                    FormKind::Quadratic => i <= j || a.is_zero(),
                };
                if !ok {
                    return Err(usage(format!(
                        "gram entry ({i},{j}) violates the {kind:?} shape"
                    )));
                }
            }
        }
        let polar = match kind {
            FormKind::Quadratic => {
                let t = gram.transpose();
                let mut p = gram.clone();
                for i in 0..d {
                    for j in 0..d {
                        p.set(i, j, gram.get(i, j) + t.get(i, j));
                    }
                }
                p
            }
            _ => gram.clone(),
        };
        let radical_dim = d - polar.rank();
        Ok(Form {
            kind,
            gram,
            polar,
            radical_dim,
        })
    }

    /// `Q(x) = x_1 x_1' + … + x_n x_n'` on `F^{2n}` with coordinates ordered
    /// `1, 1', 2, 2', …`: hyperbolic pair `i` sits at coordinates `2i-2, 2i-1`.
    pub fn hyperbolic(n: usize) -> Self {
        let mut g = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            g.set(2 * i, 2 * i + 1, F::one());
        }
        Self::new(FormKind::Quadratic, g).expect("standard form")
    }

    /// The hyperbolic form plus an anisotropic coordinate:
    /// `Q(x) = x_1 x_2 + x_3 x_4 + … + x_{2n-1} x_{2n} - x_{2n+1}^2`.
    pub fn parabolic(n: usize) -> Self {
        let mut g = Matrix::zeros(2 * n + 1, 2 * n + 1);
        for i in 0..n {
            g.set(2 * i, 2 * i + 1, F::one());
        }
        g.set(2 * n, 2 * n, -F::one());
        Self::new(FormKind::Quadratic, g).expect("standard form")
    }

    /// `f(x,y) = Σ x_{2i-1} y_{2i} - x_{2i} y_{2i-1}` on `F^{2n}`.
    pub fn symplectic(n: usize) -> Self {
        let mut g = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            g.set(2 * i, 2 * i + 1, F::one());
            g.set(2 * i + 1, 2 * i, -F::one());
        }
        Self::new(FormKind::Alternating, g).expect("standard form")
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix<F> {
        &self.gram
    }

    pub fn polar_matrix(&self) -> &Matrix<F> {
        &self.polar
    }

    pub fn radical_dim(&self) -> usize {
        self.radical_dim
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical_dim == 0
    }

    /// The polar (bilinear) form `b(x, y)`.
    pub fn polar(&self, x: &[F], y: &[F]) -> F {
        bilinear(&self.polar, x, y)
    }

    /// `Q(x)` for a quadratic form, `b(x, x)` for a bilinear one.
    pub fn value(&self, x: &[F]) -> F {
        bilinear(&self.gram, x, x)
    }

    pub fn is_singular_vector(&self, x: &[F]) -> bool {
        self.value(x).is_zero()
    }

    fn check_ambient(&self, u: &Subspace<F>) -> Result<()> {
        if u.ambient() != self.dim() {
            return Err(Error::AmbientMismatch {
                left: u.ambient(),
                right: self.dim(),
            });
        }
        Ok(())
    }

    /// Whether the form vanishes identically on `U`.
    pub fn is_totally_singular(&self, u: &Subspace<F>) -> Result<bool> {
        self.check_ambient(u)?;
        let rows: Vec<&[F]> = u.basis().collect();
        for (i, a) in rows.iter().enumerate() {
            if !self.is_singular_vector(a) {
                return Ok(false);
            }
            for b in &rows[i + 1..] {
                if !self.polar(a, b).is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `U^⊥ = {v : b(v, u) = 0 for all u ∈ U}`.
    pub fn perp(&self, u: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_ambient(u)?;
        if !self.is_nondegenerate() {
            return Err(Error::DegenerateForm {
                radical_dim: self.radical_dim,
            });
        }
        // b(v, u) = v · (u Bᵀ)
        let images = u.to_matrix().mul(&self.polar.transpose())?;
        Ok(Subspace::from_matrix(images).annihilator())
    }

    /// Rows `u_i B` for the basis of `U`; the pairing with `W` is then a
    /// plain dot product against the basis rows of `W`.
    pub fn polar_images(&self, u: &Subspace<F>) -> Matrix<F> {
        u.to_matrix()
            .mul(&self.polar)
            .expect("ambient checked by caller")
    }

    /// Rank of the matrix `[b(u_i, w_j)]`. For `dim U = dim W = k` and a
    /// nondegenerate form, `U^⊥ ∩ W = 0` exactly when this rank is `k`.
    pub fn pairing_rank(&self, u: &Subspace<F>, w: &Subspace<F>) -> Result<usize> {
        self.check_ambient(u)?;
        self.check_ambient(w)?;
        Ok(pairing_rank_with(&self.polar_images(u), w))
    }
}

/// Rank of `[⟨img_i, w_j⟩]` where `img` holds precomputed polar images.
pub(crate) fn pairing_rank_with<F: PrimeField>(images: &Matrix<F>, w: &Subspace<F>) -> usize {
    let (r, c) = (images.rows(), w.dim());
    let mut data = Vec::with_capacity(r * c);
    for i in 0..r {
        let a = images.row(i);
        for b in w.basis() {
            data.push(dot(a, b));
        }
    }
    rank_in_place(&mut data, r, c)
}

pub(crate) fn dot<F: PrimeField>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .fold(F::zero(), |acc, (&x, &y)| acc + x * y)
}

fn bilinear<F: PrimeField>(m: &Matrix<F>, x: &[F], y: &[F]) -> F {
    let mut acc = F::zero();
    for (i, &xi) in x.iter().enumerate() {
        if xi.is_zero() {
            continue;
        }
        acc += xi * dot(m.row(i), y);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::vector;
    use crate::{F2, F3};

    #[test]
    fn shape_validation() {
        let bad = Matrix::<F3>::from_ints(2, &[&[0, 1], &[1, 0]]).unwrap();
        assert!(Form::new(FormKind::Alternating, bad.clone()).is_err());
        assert!(Form::new(FormKind::Symmetric, bad.clone()).is_ok());
        assert!(Form::new(FormKind::Quadratic, bad).is_err());
        let diag = Matrix::<F3>::from_ints(2, &[&[1, 0], &[0, 0]]).unwrap();
        assert!(Form::new(FormKind::Alternating, diag).is_err());
    }

    #[test]
    fn hyperbolic_perp_of_first_basis_vector() {
        let q = Form::<F2>::hyperbolic(4);
        let e1 = Subspace::coordinate(8, [0]);
        // everything except e_1'
        let expected = Subspace::coordinate(8, (0..8).filter(|&j| j != 1));
        assert_eq!(q.perp(&e1).unwrap(), expected);
        assert_eq!(q.perp(&Subspace::full(8)).unwrap(), Subspace::zero(8));
    }

    #[test]
    fn symplectic_perp_example() {
        let f = Form::<F3>::symplectic(3);
        let u = Subspace::coordinate(6, [0, 2]);
        assert_eq!(f.perp(&u).unwrap(), Subspace::coordinate(6, [0, 2, 4, 5]));
    }

    #[test]
    fn totally_singular_examples() {
        let q = Form::<F2>::hyperbolic(4);
        // ⟨e_1, e_2⟩ in the 1,1',2,2' labeling sits at coordinates 0 and 2
        assert!(q.is_totally_singular(&Subspace::coordinate(8, [0, 2])).unwrap());
        assert!(!q.is_totally_singular(&Subspace::coordinate(8, [0, 1])).unwrap());

        let b3 = Form::<F3>::parabolic(3);
        let v = Subspace::span(7, &[vector(&[0, 0, 1, 1, 0, 0, 1])]).unwrap();
        assert!(b3.is_totally_singular(&v).unwrap());
    }

    #[test]
    fn degenerate_polar_form_in_char_two() {
        let b3 = Form::<F2>::parabolic(3);
        assert_eq!(b3.radical_dim(), 1);
        assert_eq!(
            b3.perp(&Subspace::coordinate(7, [0])).unwrap_err(),
            Error::DegenerateForm { radical_dim: 1 }
        );
        assert!(Form::<F3>::parabolic(3).is_nondegenerate());
    }

    #[test]
    fn pairing_rank_agrees_with_perp_route() {
        let q = Form::<F2>::hyperbolic(4);
        let l = Subspace::coordinate(8, [0, 2]);
        let m = Subspace::coordinate(8, [1, 3]);
        assert_eq!(q.pairing_rank(&l, &m).unwrap(), 2);
        assert_eq!(q.perp(&l).unwrap().intersection_dim(&m).unwrap(), 0);
        let m2 = Subspace::coordinate(8, [1, 4]);
        assert_eq!(q.pairing_rank(&l, &m2).unwrap(), 1);
    }
}
