//! Anti-drift check between the geometric Kneser adjacency and the abstract
//! coset graph `W/X`: every coset representative is sent to a coordinate
//! object of the apartment, and adjacency must agree pair by pair.
//!
//! Frame labeling of a coset `wX`:
//!
//! * `A_n`, type `J`: the flag `(⟨e_{w(1)}, …, e_{w(j)}⟩)_{j ∈ J}`;
//! * `B_n`, `C_n`, `D_n` with `J = {k}`: `⟨e_{w(1)}, …, e_{w(k)}⟩`, where the
//!   signed index `+i` is the coordinate `i` and `-i` is `i'`;
//! * `D_n`, `J = {n-1, n}`: `w(1..n-1)`; `J = {n}`: `w(1..n)`;
//!   `J = {n-1}`: `w(1..n-1)` together with `-w(n)`.

use serde::{Deserialize, Serialize};

use crate::algebra::Subspace;
use crate::buildings::{BuildingSpec, Family, GeometricObject, Geometry};
use crate::coxeter::{coset_kneser, weyl_group, WeylElement, WeylType};
use crate::error::{usage, Result};
use crate::field::PrimeField;

/// Outcome of comparing the two apartment graphs for one spec.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossValidation {
    pub spec: BuildingSpec,
    pub label: String,
    pub cosets: usize,
    pub frame_objects: usize,
    pub edges: usize,
    pub mismatch: Option<Mismatch>,
}

impl CrossValidation {
    pub fn matches(&self) -> bool {
        self.mismatch.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Mismatch {
    /// The labeling is not a bijection onto the frame objects.
    Labeling { detail: String },
    /// Cosets `a < b` (in quotient order) disagree on adjacency.
    Adjacency {
        a: usize,
        b: usize,
        coset_a: Vec<i8>,
        coset_b: Vec<i8>,
        geometric: bool,
        coset: bool,
    },
}

fn coordinate_of(kind: WeylType, i: i8) -> usize {
    let a = i.unsigned_abs() as usize - 1;
    match kind {
        WeylType::A => a,
        _ => 2 * a + usize::from(i < 0),
    }
}

/// The apartment object labelled by the coset of `w`.
pub fn frame_label<F: PrimeField>(spec: &BuildingSpec, w: &WeylElement) -> Result<GeometricObject<F>> {
    let kind = WeylType::of_family(spec.family)?;
    let n = spec.rank;
    let d = spec.ambient_dim();
    let span = |signed: Vec<i8>| Subspace::coordinate(d, signed.into_iter().map(|i| coordinate_of(kind, i)));
    let prefix = |k: usize| w.images()[..k].to_vec();
    if kind == WeylType::A {
        let members = spec.types.iter().map(|&j| span(prefix(j))).collect();
        return GeometricObject::flag(members);
    }
    let signed = match (spec.family, spec.types.as_slice()) {
        (Family::D, [a, b]) if *a == n - 1 && *b == n => prefix(n - 1),
        (Family::D, [k]) if *k == n => prefix(n),
        (Family::D, [k]) if *k == n - 1 => {
            let mut s = prefix(n - 1);
            s.push(-w.images()[n - 1]);
            s
        }
        (_, [k]) => prefix(*k),
        _ => return Err(usage(format!("{}: no frame labeling for this type", spec.label()))),
    };
    Ok(GeometricObject::single(span(signed)))
}

/// Compares the geometric apartment graph of `spec` with the coset graph.
pub fn cross_validate<F: PrimeField>(spec: &BuildingSpec) -> Result<CrossValidation> {
    let geometry = Geometry::<F>::new(spec)?;
    let group = weyl_group(WeylType::of_family(spec.family)?, spec.rank)?;
    let quotient = coset_kneser(&group, &spec.types)?;
    let frame = geometry.frame_objects();
    let labels: Vec<GeometricObject<F>> = quotient
        .cosets()
        .iter()
        .map(|w| frame_label(spec, w))
        .collect::<Result<_>>()?;

    let mut report = CrossValidation {
        spec: spec.clone(),
        label: spec.label(),
        cosets: quotient.len(),
        frame_objects: frame.len(),
        edges: quotient.graph().edge_count(),
        mismatch: None,
    };
    let mut sorted = labels.clone();
    sorted.sort();
    if sorted != frame {
        let detail = match sorted.iter().find(|o| frame.binary_search(o).is_err()) {
            Some(o) => format!("coset label {o:?} is not a frame object"),
            None => format!("{} cosets vs {} frame objects", sorted.len(), frame.len()),
        };
        report.mismatch = Some(Mismatch::Labeling { detail });
        return Ok(report);
    }
    let n = labels.len();
    report.mismatch = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find_map(|(a, b)| {
            let geometric = geometry.adjacent(&labels[a], &labels[b]);
            let coset = quotient.graph().is_adjacent(a, b);
            (geometric != coset).then(|| Mismatch::Adjacency {
                a,
                b,
                coset_a: quotient.cosets()[a].images().to_vec(),
                coset_b: quotient.cosets()[b].images().to_vec(),
                geometric,
                coset,
            })
        });
    Ok(report)
}

/// Every implemented cell with rank at most 4 and `p ∈ {2, 3}`: all type
/// sets of `A_1 … A_4`, single types of `B`/`C` (type `B` at `p = 2` is
/// checked through its `C` model, which has the same Weyl group), and the
/// `D_3`, `D_4` types with a model.
pub fn cross_validation_grid() -> Vec<BuildingSpec> {
    let mut cells = Vec::new();
    for p in [2, 3] {
        for n in 1..=4usize {
            for mask in 1u32..1 << n {
                let j: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                cells.push(BuildingSpec::new(Family::A, n, p, &j));
            }
        }
        for n in 2..=4 {
            for k in 1..=n {
                let b = if p == 2 { Family::C } else { Family::B };
                cells.push(BuildingSpec::new(b, n, p, &[k]));
                if p != 2 {
                    cells.push(BuildingSpec::new(Family::C, n, p, &[k]));
                }
            }
        }
        for n in 3..=4 {
            let mut types: Vec<Vec<usize>> = (1..=n - 2).map(|k| vec![k]).collect();
            types.extend([vec![n], vec![n - 1], vec![n - 1, n]]);
            for j in types {
                cells.push(BuildingSpec::new(Family::D, n, p, &j));
            }
        }
    }
    cells.into_iter().map(|c| c.expect("grid cells are valid")).collect()
}
