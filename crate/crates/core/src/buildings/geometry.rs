use std::fmt;

use crate::algebra::{
    enumerate_singular_subspaces, enumerate_subspaces, pairing_rank_with, Form, Matrix, Subspace,
};
use crate::error::{usage, Error, Result};
use crate::field::PrimeField;
use crate::graph::Graph;

use super::spec::{BuildingSpec, DClass, Family};

/// A vertex of a Kneser graph: a flag of nested subspaces, listed by
/// increasing dimension (a single subspace when `|J| = 1`).
///
/// The derived order (lexicographic over members) is the canonical vertex
/// order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeometricObject<F> {
    members: Vec<Subspace<F>>,
}

impl<F: PrimeField> GeometricObject<F> {
    pub fn single(u: Subspace<F>) -> Self {
        GeometricObject { members: vec![u] }
    }

    /// A flag `U_1 < U_2 < …`; members may be given in any order.
    pub fn flag(mut members: Vec<Subspace<F>>) -> Result<Self> {
        if members.is_empty() {
            return Err(usage("a flag needs at least one member"));
        }
        members.sort_by_key(|m| m.dim());
        for w in members.windows(2) {
            if w[0].dim() == w[1].dim() || !w[0].is_subspace_of(&w[1]) {
                return Err(usage(format!("flag members are not properly nested: {:?} / {:?}", w[0], w[1])));
            }
        }
        Ok(GeometricObject { members })
    }

    pub fn members(&self) -> &[Subspace<F>] {
        &self.members
    }

    /// The largest member.
    pub fn top(&self) -> &Subspace<F> {
        self.members.last().expect("nonempty")
    }

    pub fn dims(&self) -> Vec<usize> {
        self.members.iter().map(Subspace::dim).collect()
    }

    pub fn is_coordinate(&self) -> bool {
        self.members.iter().all(Subspace::is_coordinate)
    }
}

impl<F: PrimeField> fmt::Debug for GeometricObject<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [single] = self.members.as_slice() {
            return single.fmt(f);
        }
        f.debug_list().entries(&self.members).finish()
    }
}

#[derive(Clone, Debug)]
enum Model<F> {
    /// `i`-subspaces of `F^{d}`.
    Projective { ambient: usize, dim: usize },
    /// Flags of `F^{d}` with the given member dimensions, adjacent in general position.
    Flags { ambient: usize, dims: Vec<usize> },
    /// Totally singular `k`-subspaces of a nondegenerate form.
    Polar {
        form: Form<F>,
        k: usize,
        witt: usize,
        class: Option<DClass>,
        /// Coordinates spanning the apartment frame (excludes the anisotropic one).
        frame: usize,
    },
}

/// The concrete geometry behind a [`BuildingSpec`]: vertex enumeration,
/// adjacency, and the coordinate apartment.
#[derive(Clone, Debug)]
pub struct Geometry<F> {
    spec: BuildingSpec,
    model: Model<F>,
}

impl<F: PrimeField> Geometry<F> {
    /// Builds the model for any valid spec. Flag types of `A_n` that are not
    /// self-opposite are accepted here, with general-position adjacency.
    pub fn new(spec: &BuildingSpec) -> Result<Self> {
        if spec.p != F::CHARACTERISTIC {
            return Err(usage(format!(
                "spec is over F_{} but the field type is F_{}",
                spec.p,
                F::CHARACTERISTIC
            )));
        }
        let n = spec.rank;
        let model = match spec.family {
            Family::A if spec.types.len() == 1 => Model::Projective {
                ambient: n + 1,
                dim: spec.types[0],
            },
            Family::A => Model::Flags {
                ambient: n + 1,
                dims: spec.types.clone(),
            },
            family => {
                let (k, class) = spec.polar_shape()?.expect("polar family");
                let (form, rank) = match family {
                    Family::B => (Form::parabolic(n), n),
                    Family::G => (Form::parabolic(3), 3),
                    Family::C => (Form::symplectic(n), n),
                    Family::D => (Form::hyperbolic(n), n),
                    Family::A => unreachable!(),
                };
                if !form.is_nondegenerate() {
                    return Err(Error::DegenerateForm {
                        radical_dim: form.radical_dim(),
                    });
                }
                Model::Polar {
                    form,
                    k,
                    witt: rank,
                    class,
                    frame: 2 * rank,
                }
            }
        };
        Ok(Geometry {
            spec: spec.clone(),
            model,
        })
    }

    pub fn spec(&self) -> &BuildingSpec {
        &self.spec
    }

    pub fn ambient_dim(&self) -> usize {
        self.spec.ambient_dim()
    }

    /// The form of a polar geometry.
    pub fn form(&self) -> Option<&Form<F>> {
        match &self.model {
            Model::Polar { form, .. } => Some(form),
            _ => None,
        }
    }

    /// Member dimensions of a vertex.
    pub fn object_dims(&self) -> Vec<usize> {
        match &self.model {
            Model::Projective { dim, .. } => vec![*dim],
            Model::Flags { dims, .. } => dims.clone(),
            Model::Polar { k, .. } => vec![*k],
        }
    }

    /// All vertices in canonical order.
    pub fn vertices(&self) -> Vec<GeometricObject<F>> {
        let mut out: Vec<GeometricObject<F>> = match &self.model {
            Model::Projective { ambient, dim } => enumerate_subspaces::<F>(*ambient, *dim)
                .into_iter()
                .map(GeometricObject::single)
                .collect(),
            Model::Flags { ambient, dims } => flags_of_type::<F>(*ambient, dims)
                .into_iter()
                .map(|members| GeometricObject { members })
                .collect(),
            Model::Polar { form, k, class, .. } => enumerate_singular_subspaces(form, *k)
                .into_iter()
                .filter(|u| class.is_none_or(|c| self.d_class(u) == c))
                .map(GeometricObject::single)
                .collect(),
        };
        out.sort();
        out
    }

    /// Maximal totally singular subspaces of a hyperbolic quadric split by
    /// the parity of `dim(A ∩ ⟨e_1, …, e_n⟩)`.
    pub fn d_class(&self, u: &Subspace<F>) -> DClass {
        let n = self.spec.rank;
        let reference = Subspace::coordinate(2 * n, (0..n).map(|i| 2 * i));
        let meet = u.intersection_dim(&reference).expect("same ambient");
        if meet % 2 == n % 2 {
            DClass::Plus
        } else {
            DClass::Minus
        }
    }

    /// Whether `obj` is a vertex of this geometry.
    pub fn is_vertex(&self, obj: &GeometricObject<F>) -> bool {
        let d = self.ambient_dim();
        if obj.dims() != self.object_dims() || obj.members.iter().any(|m| m.ambient() != d) {
            return false;
        }
        if !obj.members.windows(2).all(|w| w[0].is_subspace_of(&w[1])) {
            return false;
        }
        match &self.model {
            Model::Polar { form, class, .. } => {
                let u = obj.top();
                form.is_totally_singular(u).unwrap_or(false)
                    && class.is_none_or(|c| self.d_class(u) == c)
            }
            _ => true,
        }
    }

    /// Kneser adjacency of two vertices.
    pub fn adjacent(&self, a: &GeometricObject<F>, b: &GeometricObject<F>) -> bool {
        match &self.model {
            Model::Projective { ambient, dim } => projective_opposite(a.top(), b.top(), *ambient, *dim),
            Model::Flags { ambient, .. } => general_position(a, b, *ambient),
            Model::Polar { form, k, .. } => {
                if self.odd_d_maximal() {
                    a.top().intersection_dim(b.top()).expect("same ambient") == 1
                } else {
                    form.pairing_rank(a.top(), b.top()).expect("same ambient") == *k
                }
            }
        }
    }

    /// `D_n` maximal subspaces with `n` odd: two members of one class are
    /// never disjoint, and the opposition-type relation is `dim(A ∩ B) = 1`.
    fn odd_d_maximal(&self) -> bool {
        matches!(self.model, Model::Polar { class: Some(_), .. }) && self.spec.rank % 2 == 1
    }

    /// The Kneser graph on `vertices`, with per-vertex data precomputed.
    pub fn adjacency_graph(&self, vertices: &[GeometricObject<F>]) -> Graph {
        let n = vertices.len();
        match &self.model {
            Model::Projective { ambient, dim } if 2 * dim > *ambient => {
                let ann: Vec<Subspace<F>> = vertices.iter().map(|v| v.top().annihilator()).collect();
                let want = 2 * (ambient - dim);
                Graph::from_predicate(n, |i, j| ann[i].sum_dim(&ann[j]).expect("same ambient") == want)
            }
            Model::Polar { form, k, .. } if !self.odd_d_maximal() => {
                let images: Vec<Matrix<F>> = vertices.iter().map(|v| form.polar_images(v.top())).collect();
                Graph::from_predicate(n, |i, j| pairing_rank_with(&images[i], vertices[j].top()) == *k)
            }
            _ => Graph::from_predicate(n, |i, j| self.adjacent(&vertices[i], &vertices[j])),
        }
    }

    /// Adjacency decided the slow way, via explicit perps and intersections.
    /// Used to cross-check [`Geometry::adjacency_graph`].
    pub fn adjacent_by_perp(&self, a: &GeometricObject<F>, b: &GeometricObject<F>) -> bool {
        match &self.model {
            Model::Polar { form, .. } if !self.odd_d_maximal() => {
                let p = form.perp(a.top()).expect("nondegenerate");
                p.intersect(b.top()).expect("same ambient").is_zero()
            }
            _ => self.adjacent(a, b),
        }
    }

    /// Whether `obj` lies in the coordinate apartment: every member is
    /// spanned by frame vectors (for `B`, not using the anisotropic one).
    pub fn in_apartment(&self, obj: &GeometricObject<F>) -> bool {
        let frame = match &self.model {
            Model::Polar { frame, .. } => *frame,
            _ => self.ambient_dim(),
        };
        obj.members.iter().all(|m| {
            m.coordinate_support()
                .is_some_and(|s| s.iter().all(|&c| c < frame))
        })
    }

    /// The vertices of the coordinate apartment, constructed directly from
    /// coordinate index sets (canonical order).
    pub fn frame_objects(&self) -> Vec<GeometricObject<F>> {
        let d = self.ambient_dim();
        let mut out: Vec<GeometricObject<F>> = match &self.model {
            Model::Projective { dim, .. } => subsets(d, *dim)
                .into_iter()
                .map(|s| GeometricObject::single(coordinate(d, s)))
                .collect(),
            Model::Flags { dims, .. } => coordinate_chains(d, dims)
                .into_iter()
                .map(|chain| GeometricObject {
                    members: chain.into_iter().map(|s| coordinate(d, s)).collect(),
                })
                .collect(),
            Model::Polar { k, witt, class, .. } => {
                let mut objs = Vec::new();
                for pairs in subsets(*witt, *k) {
                    let chosen: Vec<usize> = members(pairs).collect();
                    for signs in 0u64..1 << k {
                        let mask = chosen
                            .iter()
                            .enumerate()
                            .fold(0u64, |m, (b, &i)| m | 1 << (2 * i + (signs >> b & 1) as usize));
                        let u = coordinate(d, mask);
                        if class.is_none_or(|c| self.d_class(&u) == c) {
                            objs.push(GeometricObject::single(u));
                        }
                    }
                }
                objs
            }
        };
        out.sort();
        out
    }
}

fn members(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |i| mask >> i & 1 == 1)
}

fn coordinate<F: PrimeField>(d: usize, mask: u64) -> Subspace<F> {
    Subspace::coordinate(d, members(mask))
}

/// All `k`-subsets of `{0..n-1}` as bitmasks.
fn subsets(n: usize, k: usize) -> Vec<u64> {
    (0u64..1 << n).filter(|s| s.count_ones() as usize == k).collect()
}

/// Chains `S_1 ⊂ S_2 ⊂ …` of coordinate sets with `|S_a| = dims[a]`.
fn coordinate_chains(d: usize, dims: &[usize]) -> Vec<Vec<u64>> {
    let Some((&top, rest)) = dims.split_last() else {
        return vec![vec![]];
    };
    let mut out = Vec::new();
    for s in subsets(d, top) {
        for mut chain in coordinate_chains(d, rest) {
            if chain.last().is_none_or(|&c| c & !s == 0) {
                chain.push(s);
                out.push(chain);
            }
        }
    }
    out
}

/// All flags of the given (increasing) dimensions in `F^d`: choose the top
/// member, then embed the flags of the remaining dimensions inside it.
fn flags_of_type<F: PrimeField>(d: usize, dims: &[usize]) -> Vec<Vec<Subspace<F>>> {
    let Some((&top, rest)) = dims.split_last() else {
        return vec![vec![]];
    };
    let inner = flags_of_type::<F>(top, rest);
    let mut out = Vec::new();
    for w in enumerate_subspaces::<F>(d, top) {
        for flag in &inner {
            let mut members: Vec<Subspace<F>> = flag
                .iter()
                .map(|m| m.embed_in(&w).expect("dimensions match"))
                .collect();
            members.push(w.clone());
            out.push(members);
        }
    }
    out
}

/// Opposition of `i`-subspaces of `F^d`: disjointness when `2i ≤ d`, and
/// disjointness of the annihilators (i.e. `A + B = F^d`) otherwise.
fn projective_opposite<F: PrimeField>(a: &Subspace<F>, b: &Subspace<F>, d: usize, i: usize) -> bool {
    if 2 * i <= d {
        a.sum_dim(b).expect("same ambient") == 2 * i
    } else {
        a.annihilator().intersect(&b.annihilator()).expect("same ambient").is_zero()
    }
}

/// `dim(F_a ∩ G_b) = max(0, a + b - d)` for all member pairs.
fn general_position<F: PrimeField>(f: &GeometricObject<F>, g: &GeometricObject<F>, d: usize) -> bool {
    f.members.iter().all(|x| {
        g.members.iter().all(|y| {
            x.intersection_dim(y).expect("same ambient") == (x.dim() + y.dim()).saturating_sub(d)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{F2, F3};

    fn geometry<F: PrimeField>(family: Family, n: usize, j: &[usize]) -> Geometry<F> {
        Geometry::new(&BuildingSpec::new(family, n, F::CHARACTERISTIC, j).unwrap()).unwrap()
    }

    #[test]
    fn field_must_match_spec() {
        let spec = BuildingSpec::new(Family::A, 2, 3, &[1]).unwrap();
        assert!(Geometry::<F2>::new(&spec).is_err());
    }

    #[test]
    fn flag_counts() {
        assert_eq!(geometry::<F2>(Family::A, 2, &[1, 2]).vertices().len(), 21);
        assert_eq!(geometry::<F2>(Family::A, 3, &[1, 3]).vertices().len(), 105);
        let g = geometry::<F2>(Family::A, 3, &[1, 2]);
        let v = g.vertices();
        assert_eq!(v.len(), 15 * 7);
        assert!(v.iter().all(|f| g.is_vertex(f)));
    }

    #[test]
    fn frame_objects_are_the_apartment_vertices() {
        let cases: Vec<Geometry<F2>> = vec![
            geometry(Family::A, 3, &[2]),
            geometry(Family::A, 2, &[1, 2]),
            geometry(Family::C, 3, &[2]),
            geometry(Family::D, 4, &[4]),
            geometry(Family::D, 3, &[2, 3]),
        ];
        for g in cases {
            let from_vertices: Vec<_> = g.vertices().into_iter().filter(|v| g.in_apartment(v)).collect();
            assert_eq!(from_vertices, g.frame_objects(), "{}", g.spec().label());
        }
    }

    #[test]
    fn b_frame_excludes_the_anisotropic_coordinate() {
        let g = geometry::<F3>(Family::B, 3, &[1]);
        let frame = g.frame_objects();
        assert_eq!(frame.len(), 6);
        let e7 = GeometricObject::single(Subspace::coordinate(7, [6]));
        assert!(!g.is_vertex(&e7));
        assert!(!g.in_apartment(&e7));
    }

    #[test]
    fn d_classes_split_evenly() {
        let g = geometry::<F2>(Family::D, 4, &[4]);
        let h = geometry::<F2>(Family::D, 4, &[3]);
        assert_eq!(g.vertices().len(), 135);
        assert_eq!(h.vertices().len(), 135);
        assert_eq!(g.frame_objects().len(), 8);
        let a0 = GeometricObject::single(Subspace::coordinate(8, [0, 2, 4, 6]));
        assert!(g.is_vertex(&a0));
        assert!(!h.is_vertex(&a0));
    }

    #[test]
    fn projective_duality_matches_general_position() {
        // lines of F^3 = hyperplanes: opposite iff distinct
        let g = geometry::<F2>(Family::A, 2, &[2]);
        let v = g.vertices();
        let graph = g.adjacency_graph(&v);
        assert_eq!(graph.regular_degree(), Some(6));
    }

    #[test]
    fn prepared_adjacency_matches_direct() {
        let g = geometry::<F3>(Family::C, 2, &[2]);
        let v = g.vertices();
        let graph = g.adjacency_graph(&v);
        for i in 0..v.len() {
            for j in 0..v.len() {
                if i != j {
                    assert_eq!(graph.is_adjacent(i, j), g.adjacent_by_perp(&v[i], &v[j]));
                }
            }
        }
    }

    #[test]
    fn flag_nesting_is_checked() {
        let a = Subspace::<F2>::coordinate(3, [0]);
        let b = Subspace::<F2>::coordinate(3, [1, 2]);
        assert!(GeometricObject::flag(vec![a.clone(), b]).is_err());
        let c = Subspace::<F2>::coordinate(3, [0, 2]);
        let f = GeometricObject::flag(vec![c, a]).unwrap();
        assert_eq!(f.dims(), vec![1, 2]);
    }
}
