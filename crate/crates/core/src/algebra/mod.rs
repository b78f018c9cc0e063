//! Linear algebra over prime fields: canonical subspaces, forms and their
//! polar geometry, and enumeration of (totally singular) subspaces.

mod enumerate;
mod form;
mod matrix;
mod subspace;

pub use enumerate::{
    enumerate_singular_subspaces, enumerate_singular_subspaces_by_filter, enumerate_subspaces,
    gaussian_binomial,
};
pub use form::{Form, FormKind};
pub use matrix::Matrix;
pub use subspace::{unit_vector, Subspace};

pub(crate) use form::pairing_rank_with;
pub(crate) use matrix::{rank_in_place, rref_in_place};

use crate::error::Result;
use crate::field::PrimeField;

/// Canonical row space of a matrix.
pub fn rref<F: PrimeField>(m: &Matrix<F>) -> Subspace<F> {
    Subspace::from_matrix(m.clone())
}

pub fn intersect<F: PrimeField>(u: &Subspace<F>, w: &Subspace<F>) -> Result<Subspace<F>> {
    u.intersect(w)
}

pub fn sum<F: PrimeField>(u: &Subspace<F>, w: &Subspace<F>) -> Result<Subspace<F>> {
    u.sum(w)
}

pub fn perp<F: PrimeField>(u: &Subspace<F>, form: &Form<F>) -> Result<Subspace<F>> {
    form.perp(u)
}

pub fn is_totally_singular<F: PrimeField>(u: &Subspace<F>, form: &Form<F>) -> Result<bool> {
    form.is_totally_singular(u)
}
