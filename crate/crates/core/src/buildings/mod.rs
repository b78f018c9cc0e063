//! Kneser graphs of the classical buildings over `F_p`, realized on
//! subspaces, flags, and totally singular subspaces, together with the
//! coordinate apartment `Σ`.
//!
//! | family | model |
//! |---|---|
//! | `A_{n,i}` | `i`-subspaces of `F^{n+1}` |
//! | `A_{n,J}` | flags of `F^{n+1}` with dimensions `J`, opposite in general position |
//! | `B_{n,k}` | t.s. `k`-spaces of `x_1x_2 + … + x_{2n-1}x_{2n} - x_{2n+1}²` (odd `p`) |
//! | `C_{n,k}` | t.i. `k`-spaces of the standard symplectic form |
//! | `D_{n,k}` | t.s. `k`-spaces of the hyperbolic form, maximal ones split by class |
//! | `G_{2,1}` | points of the `B_3` quadric |

mod geometry;
mod kneser;
mod notation;
mod spec;

pub use geometry::{GeometricObject, Geometry};
pub use kneser::{build, KneserGraph};
pub use notation::{format_object, format_subspace, format_vector, parse_object, parse_vector};
pub use spec::{parse_types, BuildingSpec, DClass, Family};

use crate::error::{Error, Result};
use crate::field::PrimeField;

fn spec_for<F: PrimeField>(family: Family, n: usize, types: &[usize]) -> Result<BuildingSpec> {
    BuildingSpec::new(family, n, F::CHARACTERISTIC, types)
}

/// `A_{n,i}`: `i`-subspaces of `F^{n+1}`, adjacent when disjoint. Larger `i`
/// are accepted and use the dual (annihilator) relation.
pub fn build_projective_kneser<F: PrimeField>(n: usize, i: usize) -> Result<KneserGraph<F>> {
    build(&spec_for::<F>(Family::A, n, &[i])?)
}

/// Flags of a self-opposite type `J` of `A_n`.
pub fn build_flag_kneser_a<F: PrimeField>(n: usize, types: &[usize]) -> Result<KneserGraph<F>> {
    let spec = spec_for::<F>(Family::A, n, types)?;
    if !spec.is_self_opposite() {
        return Err(Error::InvalidSpec(format!(
            "{}: flag type set J must be self-opposite (J = {{n+1-j : j in J}})",
            spec.label()
        )));
    }
    build(&spec)
}

/// Flags of any type `J` of `A_n`, adjacent when in general position. This
/// is the opposition relation `Pw₀P` for every `J`; it is needed for the
/// non-self-opposite types that appear when varying `J`.
pub fn build_flag_kneser_general_position<F: PrimeField>(
    n: usize,
    types: &[usize],
) -> Result<KneserGraph<F>> {
    let spec = spec_for::<F>(Family::A, n, types)?;
    Ok(KneserGraph::from_geometry(Geometry::new(&spec)?))
}

/// Totally singular `k`-subspaces of the `B`, `C` or `D` polar space of rank
/// `n`. For `D` with `k = n` the selector picks the class (default `Plus`).
pub fn build_polar_kneser<F: PrimeField>(
    family: Family,
    n: usize,
    k: usize,
    class: Option<DClass>,
) -> Result<KneserGraph<F>> {
    let types = match family {
        Family::B | Family::C => vec![k],
        Family::D if k == n => match class.unwrap_or(DClass::Plus) {
            DClass::Plus => vec![n],
            DClass::Minus => vec![n - 1],
        },
        Family::D if n >= 1 && k == n - 1 => vec![n - 1, n],
        Family::D => vec![k],
        _ => {
            return Err(Error::InvalidSpec(format!(
                "{family} is not a polar family"
            )))
        }
    };
    if k == 0 || k > n {
        return Err(Error::InvalidSpec(format!(
            "k = {k} exceeds the Witt index {n} of {family}_{n}"
        )));
    }
    build(&spec_for::<F>(family, n, &types)?)
}

/// Totally singular planes of the `D_4` hyperbolic space (`D_{4,{3,4}}`).
pub fn build_d4_planes<F: PrimeField>() -> Result<KneserGraph<F>> {
    build(&spec_for::<F>(Family::D, 4, &[3, 4])?)
}

/// `G_{2,1}`: the Kneser graphs of the generalized hexagon points and of the
/// `B_3` points coincide, so this is the `B_{3,1}` graph relabelled.
pub fn g2_points<F: PrimeField>() -> Result<KneserGraph<F>> {
    build(&spec_for::<F>(Family::G, 2, &[1])?)
}
