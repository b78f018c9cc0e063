//! Human-readable vectors such as `e1+e3-e5` or `e1'+2e3`.
//!
//! For `D` the coordinates are the hyperbolic pairs `1, 1', 2, 2', …`; every
//! other family numbers coordinates `1..=d`.

use crate::error::{usage, Result};
use crate::field::PrimeField;

use super::geometry::GeometricObject;
use super::spec::{BuildingSpec, Family};
use crate::algebra::Subspace;

fn coordinate_name(family: Family, c: usize) -> String {
    if family == Family::D {
        format!("e{}{}", c / 2 + 1, if c % 2 == 1 { "'" } else { "" })
    } else {
        format!("e{}", c + 1)
    }
}

pub fn format_vector<F: PrimeField>(family: Family, v: &[F]) -> String {
    let mut out = String::new();
    for (c, &x) in v.iter().enumerate() {
        let s = x.signed_value();
        if s == 0 {
            continue;
        }
        let sign = if s < 0 { "-" } else if out.is_empty() { "" } else { "+" };
        let mag = s.unsigned_abs();
        let coef = if mag == 1 { String::new() } else { mag.to_string() };
        out.push_str(&format!("{sign}{coef}{}", coordinate_name(family, c)));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn format_subspace<F: PrimeField>(family: Family, u: &Subspace<F>) -> String {
    let rows: Vec<String> = u.basis().map(|r| format_vector(family, r)).collect();
    format!("⟨{}⟩", rows.join(", "))
}

pub fn format_object<F: PrimeField>(family: Family, obj: &GeometricObject<F>) -> String {
    let parts: Vec<String> = obj.members().iter().map(|m| format_subspace(family, m)).collect();
    if parts.len() == 1 {
        parts.into_iter().next().expect("one member")
    } else {
        format!("({})", parts.join(" < "))
    }
}

/// Parses `e1+e3-e5`, `2e1 - e2'` and the like into a coordinate vector.
pub fn parse_vector<F: PrimeField>(family: Family, ambient: usize, text: &str) -> Result<Vec<F>> {
    let bad = |why: &str| usage(format!("cannot parse vector {text:?}: {why}"));
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty"));
    }
    let mut v = vec![F::zero(); ambient];
    let mut rest = compact.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let mut sign = 1i64;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if !first {
            return Err(bad("expected + or -"));
        }
        first = false;
        let digits = rest.chars().take_while(char::is_ascii_digit).count();
        let coef: i64 = if digits == 0 { 1 } else { rest[..digits].parse().map_err(|_| bad("coefficient"))? };
        rest = rest[digits..].strip_prefix('e').ok_or_else(|| bad("expected e<index>"))?;
        let digits = rest.chars().take_while(char::is_ascii_digit).count();
        let index: usize = rest[..digits].parse().map_err(|_| bad("index"))?;
        rest = &rest[digits..];
        let primed = if let Some(r) = rest.strip_prefix('\'') {
            rest = r;
            true
        } else {
            false
        };
        if index == 0 {
            return Err(bad("indices start at 1"));
        }
        let c = match (family, primed) {
            (Family::D, p) => 2 * (index - 1) + usize::from(p),
            (_, false) => index - 1,
            (_, true) => return Err(bad("primed indices are only used for D")),
        };
        if c >= ambient {
            return Err(bad("index outside the ambient space"));
        }
        v[c] += F::from_i64(sign * coef);
    }
    Ok(v)
}

/// Parses an object given as its members, each a list of spanning vectors.
pub fn parse_object<F: PrimeField>(spec: &BuildingSpec, members: &[Vec<String>]) -> Result<GeometricObject<F>> {
    let d = spec.ambient_dim();
    let subspaces = members
        .iter()
        .map(|rows| {
            let vs = rows
                .iter()
                .map(|r| parse_vector::<F>(spec.family, d, r))
                .collect::<Result<Vec<_>>>()?;
            Subspace::span(d, &vs)
        })
        .collect::<Result<Vec<_>>>()?;
    GeometricObject::flag(subspaces)
}
