//! Weyl groups of types `A`, `B` and `D` as (signed) permutations, the
//! coset-level Kneser graphs on `W/X` with `X = ⟨R \ J⟩`, and the maps
//! between them when `J` grows.
//!
//! Diagram nodes are numbered `1..=n`. Generators:
//!
//! * `A_n`: `s_j = (j, j+1)` acting on `{1, …, n+1}`;
//! * `B_n`: `s_j = (j, j+1)` for `j < n`, and `s_n` flips the sign of `n`;
//! * `D_n`: `s_j = (j, j+1)` for `j < n`, and `s_n : n-1 ↦ -n, n ↦ -(n-1)`.
//!
//! `C_n` has the Weyl group of `B_n`.

mod element;

pub use element::WeylElement;

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::buildings::Family;
use crate::error::{usage, Error, Result};
use crate::graph::Graph;

/// Largest rank for which groups are enumerated in full.
pub const MAX_WEYL_RANK: usize = 5;

/// The Weyl-group type behind a diagram family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeylType {
    A,
    B,
    D,
}

impl WeylType {
    pub fn of_family(family: Family) -> Result<Self> {
        match family {
            Family::A => Ok(WeylType::A),
            Family::B | Family::C => Ok(WeylType::B),
            Family::D => Ok(WeylType::D),
            Family::G => Err(usage("exceptional Weyl groups are not implemented")),
        }
    }
}

/// A finite Weyl group with all elements enumerated.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    kind: WeylType,
    rank: usize,
    generators: Vec<WeylElement>,
    /// Sorted by `(length, images)`.
    elements: Vec<WeylElement>,
    lengths: Vec<usize>,
    index: HashMap<WeylElement, usize>,
}

/// Enumerates `W(kind_n)` by breadth-first search on the Cayley graph, which
/// also yields the Coxeter length of every element.
pub fn weyl_group(kind: WeylType, n: usize) -> Result<Arc<WeylGroup>> {
    let min = match kind {
        WeylType::A => 1,
        WeylType::B => 2,
        WeylType::D => 3,
    };
    if n < min {
        return Err(usage(format!("{kind:?}_{n}: rank must be at least {min}")));
    }
    if n > MAX_WEYL_RANK {
        return Err(usage(format!(
            "{kind:?}_{n}: full enumeration is limited to rank {MAX_WEYL_RANK}"
        )));
    }
    let m = if kind == WeylType::A { n + 1 } else { n };
    let generators: Vec<WeylElement> = (1..=n).map(|j| generator(kind, m, j)).collect();

    let identity = WeylElement::identity(m);
    let mut length: HashMap<WeylElement, usize> = HashMap::from([(identity.clone(), 0)]);
    let mut queue = VecDeque::from([identity]);
    while let Some(w) = queue.pop_front() {
        let l = length[&w];
        for s in &generators {
            let ws = w.compose(s);
            if !length.contains_key(&ws) {
                length.insert(ws.clone(), l + 1);
                queue.push_back(ws);
            }
        }
    }
    let mut elements: Vec<(usize, WeylElement)> = length.into_iter().map(|(w, l)| (l, w)).collect();
    elements.sort();
    let lengths = elements.iter().map(|(l, _)| *l).collect();
    let elements: Vec<WeylElement> = elements.into_iter().map(|(_, w)| w).collect();
    let index = elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    Ok(Arc::new(WeylGroup {
        kind,
        rank: n,
        generators,
        elements,
        lengths,
        index,
    }))
}

fn generator(kind: WeylType, m: usize, j: usize) -> WeylElement {
    let mut images: Vec<i8> = (1..=m as i8).collect();
    let n = if kind == WeylType::A { m - 1 } else { m };
    if j < n || kind == WeylType::A {
        images.swap(j - 1, j);
    } else if kind == WeylType::B {
        images[n - 1] = -images[n - 1];
    } else {
        images[n - 2] = -(n as i8);
        images[n - 1] = -(n as i8 - 1);
    }
    WeylElement::from_images_unchecked(images)
}

impl WeylGroup {
    pub fn kind(&self) -> WeylType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Elements sorted by length, then by image list.
    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    /// `s_j` for diagram node `j` (1-based).
    pub fn generator(&self, j: usize) -> &WeylElement {
        &self.generators[j - 1]
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        self.lengths[self.index[w]]
    }

    pub fn longest_element(&self) -> &WeylElement {
        self.elements.last().expect("nonempty")
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.kind {
            WeylType::A => n * (n + 1) / 2,
            WeylType::B => n * n,
            WeylType::D => n * (n - 1),
        }
    }

    /// Elements of the standard parabolic subgroup `⟨R \ J⟩`, in group order.
    pub fn parabolic(&self, types: &[usize]) -> Result<Vec<usize>> {
        let gens = self.complement_generators(types)?;
        let mut seen = FixedBitSet::with_capacity(self.order());
        let id = self.index[&WeylElement::identity(self.degree())];
        seen.insert(id);
        let mut queue = VecDeque::from([id]);
        while let Some(i) = queue.pop_front() {
            for s in &gens {
                let k = self.index[&self.elements[i].compose(s)];
                if !seen.put(k) {
                    queue.push_back(k);
                }
            }
        }
        Ok(seen.ones().collect())
    }

    fn complement_generators(&self, types: &[usize]) -> Result<Vec<WeylElement>> {
        if let Some(&bad) = types.iter().find(|&&j| j == 0 || j > self.rank) {
            return Err(usage(format!("node {bad} is not in 1..={}", self.rank)));
        }
        Ok((1..=self.rank)
            .filter(|j| !types.contains(j))
            .map(|j| self.generator(j).clone())
            .collect())
    }

    /// Size of the permuted set.
    pub fn degree(&self) -> usize {
        self.elements[0].degree()
    }

    /// Whether `w₀` normalizes `R \ J`, i.e. `J^{w₀} = J`.
    pub fn is_self_opposite(&self, types: &[usize]) -> Result<bool> {
        let gens = self.complement_generators(types)?;
        let w0 = self.longest_element();
        let set: HashSet<&WeylElement> = gens.iter().collect();
        Ok(gens.iter().all(|s| set.contains(&w0.compose(s).compose(w0))))
    }

    /// The minimal element (by length, then images) of `X w₀ X`.
    pub fn shortest_double_coset(&self, types: &[usize]) -> Result<WeylElement> {
        let x = self.parabolic(types)?;
        let w0 = self.longest_element();
        let mut best: Option<(usize, &WeylElement)> = None;
        for &a in &x {
            let aw0 = self.elements[a].compose(w0);
            for &b in &x {
                let k = self.index[&aw0.compose(&self.elements[b])];
                let cand = (self.lengths[k], &self.elements[k]);
                if best.is_none_or(|b| cand < b) {
                    best = Some(cand);
                }
            }
        }
        Ok(best.expect("X is nonempty").1.clone())
    }
}

pub fn longest_element(w: &WeylGroup) -> WeylElement {
    w.longest_element().clone()
}

pub fn shortest_double_coset(w: &WeylGroup, types: &[usize]) -> Result<WeylElement> {
    w.shortest_double_coset(types)
}

/// The Kneser graph on `W/X`: `wX ∼ vX` iff `v⁻¹w ∈ X w₀ X`.
#[derive(Clone, Debug)]
pub struct ParabolicQuotient {
    group: Arc<WeylGroup>,
    types: Vec<usize>,
    /// Minimal-length coset representatives, in group order.
    cosets: Vec<WeylElement>,
    /// Coset id of each group element.
    coset_of: Vec<usize>,
    subgroup_order: usize,
    graph: Graph,
}

pub fn coset_kneser(group: &Arc<WeylGroup>, types: &[usize]) -> Result<ParabolicQuotient> {
    let mut types = types.to_vec();
    types.sort_unstable();
    types.dedup();
    if types.is_empty() {
        return Err(usage("J = ∅ is degenerate: X = W and the quotient is a single vertex"));
    }
    let x = group.parabolic(&types)?;
    let mut coset_of = vec![usize::MAX; group.order()];
    let mut cosets = Vec::new();
    // elements are sorted by length, so the first unassigned one is the
    // minimal representative of its coset
    for (i, w) in group.elements.iter().enumerate() {
        if coset_of[i] != usize::MAX {
            continue;
        }
        let id = cosets.len();
        cosets.push(w.clone());
        for &k in &x {
            coset_of[group.index[&w.compose(&group.elements[k])]] = id;
        }
    }
    let w0 = group.longest_element();
    let opposite: HashSet<usize> = x
        .iter()
        .map(|&k| coset_of[group.index[&group.elements[k].compose(w0)]])
        .collect();
    let graph = Graph::from_predicate(cosets.len(), |a, b| {
        let rel = cosets[b].inverse().compose(&cosets[a]);
        opposite.contains(&coset_of[group.index[&rel]])
    });
    Ok(ParabolicQuotient {
        group: Arc::clone(group),
        types,
        cosets,
        coset_of,
        subgroup_order: x.len(),
        graph,
    })
}

impl ParabolicQuotient {
    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    pub fn types(&self) -> &[usize] {
        &self.types
    }

    pub fn cosets(&self) -> &[WeylElement] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.cosets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cosets.is_empty()
    }

    pub fn subgroup_order(&self) -> usize {
        self.subgroup_order
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The coset containing `w`.
    pub fn coset_index(&self, w: &WeylElement) -> Option<usize> {
        self.group.index_of(w).map(|i| self.coset_of[i])
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        let (a, b) = (&self.group, &other.group);
        if a.kind != b.kind || a.rank != b.rank {
            return Err(usage(format!(
                "quotients of different groups: {:?}_{} vs {:?}_{}",
                a.kind, a.rank, b.kind, b.rank
            )));
        }
        Ok(())
    }
}

/// `φ : W/X′ → W/X`, `wX′ ↦ wX`, for `J ⊆ J′`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiMap {
    pub map: Vec<usize>,
    /// An edge of the fine graph whose image is not an edge, if any.
    pub violation: Option<(usize, usize)>,
}

impl PhiMap {
    pub fn is_homomorphism(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn phi_map(fine: &ParabolicQuotient, coarse: &ParabolicQuotient) -> Result<PhiMap> {
    fine.same_group(coarse)?;
    if !coarse.types.iter().all(|j| fine.types.contains(j)) {
        return Err(usage(format!(
            "J = {:?} is not contained in J' = {:?}",
            coarse.types, fine.types
        )));
    }
    let map: Vec<usize> = fine
        .cosets
        .iter()
        .map(|w| coarse.coset_index(w).expect("same group"))
        .collect();
    let violation = fine
        .graph
        .edges()
        .find(|&(a, b)| !coarse.graph.is_adjacent(map[a], map[b]));
    Ok(PhiMap { map, violation })
}

/// A vertex `a′` and a neighbour `b` of `φ(a′)` with no neighbour of `a′`
/// over `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftFailure {
    pub fine_vertex: usize,
    pub image: usize,
    pub target: usize,
}

/// Checks that every edge `(φa′, b)` lifts to an edge `(a′, b′)`. Requires
/// `J^{w₀} = J` for the coarse type; otherwise returns
/// [`Error::PreconditionUnmet`].
pub fn check_lifting(
    fine: &ParabolicQuotient,
    coarse: &ParabolicQuotient,
) -> Result<Option<LiftFailure>> {
    if !coarse.group.is_self_opposite(&coarse.types)? {
        return Err(Error::PreconditionUnmet(format!(
            "J = {:?} is not stable under w0",
            coarse.types
        )));
    }
    let phi = phi_map(fine, coarse)?;
    for a in 0..fine.len() {
        let mut reached = FixedBitSet::with_capacity(coarse.len());
        for b in fine.graph.neighbors(a).ones() {
            reached.insert(phi.map[b]);
        }
        let image = phi.map[a];
        if let Some(target) = coarse.graph.neighbors(image).difference(&reached).next() {
            return Ok(Some(LiftFailure {
                fine_vertex: a,
                image,
                target,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{isomorphism_mismatch, petersen, set_kneser};

    fn group(kind: WeylType, n: usize) -> Arc<WeylGroup> {
        weyl_group(kind, n).unwrap()
    }

    #[test]
    fn group_orders() {
        assert_eq!(group(WeylType::A, 3).order(), 24);
        assert_eq!(group(WeylType::B, 3).order(), 48);
        assert_eq!(group(WeylType::D, 4).order(), 192);
        assert_eq!(group(WeylType::B, 5).order(), 3840);
        assert!(weyl_group(WeylType::A, 6).is_err());
    }

    #[test]
    fn longest_elements() {
        let w0 = group(WeylType::A, 3).longest_element().clone();
        assert_eq!(w0.images(), &[4, 3, 2, 1]);
        for (kind, n) in [(WeylType::B, 3), (WeylType::D, 4)] {
            let g = group(kind, n);
            let w0 = g.longest_element();
            assert_eq!(w0.images(), &[-1, -2, -3, -4][..n]);
            assert_eq!(g.length(w0), g.positive_root_count());
        }
        // D_3: w0 is not central
        let g = group(WeylType::D, 3);
        assert_eq!(g.longest_element().images(), &[-1, -2, 3]);
    }

    #[test]
    fn longest_element_is_an_involution_and_descends_everywhere() {
        for (kind, n) in [(WeylType::A, 4), (WeylType::B, 4), (WeylType::D, 4), (WeylType::D, 5)] {
            let g = group(kind, n);
            let w0 = g.longest_element();
            assert!(w0.compose(w0).is_identity());
            for s in g.generators() {
                assert!(g.length(&w0.compose(s)) < g.length(w0));
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let g = group(WeylType::A, 3);
        let q = coset_kneser(&g, &[2]).unwrap();
        assert_eq!(q.len(), 6);
        assert_eq!(q.len() * q.subgroup_order(), g.order());
        assert_eq!(q.graph().regular_degree(), Some(1));

        let q = coset_kneser(&group(WeylType::A, 4), &[2]).unwrap();
        assert_eq!(q.len(), 10);
        assert_eq!(q.graph().regular_degree(), Some(3));
        assert_eq!(q.graph().edge_count(), petersen().edge_count());

        let q = coset_kneser(&group(WeylType::A, 2), &[1, 2]).unwrap();
        assert_eq!(q.len(), 6);
        assert_eq!(q.graph().regular_degree(), Some(1));
        assert!(coset_kneser(&g, &[]).is_err());
    }

    #[test]
    fn type_a_quotient_is_set_kneser() {
        for n in 1..=4 {
            let g = group(WeylType::A, n);
            for i in (1..=n).filter(|i| 2 * i <= n + 1) {
                let q = coset_kneser(&g, &[i]).unwrap();
                let (subsets, k) = set_kneser(n + 1, i);
                // coset wX ↦ {w(1), …, w(i)}
                let label: Vec<u64> = q
                    .cosets()
                    .iter()
                    .map(|w| w.images()[..i].iter().fold(0u64, |m, &x| m | 1 << (x - 1)))
                    .collect();
                let map: Vec<usize> = label
                    .iter()
                    .map(|s| subsets.binary_search(s).unwrap())
                    .collect();
                assert_eq!(isomorphism_mismatch(q.graph(), &k, &map), None, "n={n} i={i}");
            }
        }
    }

    #[test]
    fn type_a_quotient_beyond_half_is_dual() {
        let g = group(WeylType::A, 3);
        let q = coset_kneser(&g, &[3]).unwrap();
        let full = 0b1111u64;
        let label = |w: &WeylElement| w.images()[..3].iter().fold(0u64, |m, &x| m | 1 << (x - 1));
        for a in 0..q.len() {
            for b in a + 1..q.len() {
                let union = label(&q.cosets()[a]) | label(&q.cosets()[b]);
                assert_eq!(q.graph().is_adjacent(a, b), union == full);
            }
        }
    }

    #[test]
    fn phi_and_lifting() {
        let g = group(WeylType::A, 3);
        let chambers = coset_kneser(&g, &[1, 2, 3]).unwrap();
        for j in [&[2][..], &[1, 3]] {
            let coarse = coset_kneser(&g, j).unwrap();
            assert!(phi_map(&chambers, &coarse).unwrap().is_homomorphism());
            assert_eq!(check_lifting(&chambers, &coarse).unwrap(), None);
        }
        let fine = coset_kneser(&g, &[1, 3]).unwrap();
        let coarse = coset_kneser(&g, &[1]).unwrap();
        assert!(phi_map(&fine, &coarse).unwrap().is_homomorphism());
        // J = {1} is not self-opposite in A_3
        assert!(matches!(
            check_lifting(&fine, &coarse),
            Err(Error::PreconditionUnmet(_))
        ));
        assert!(phi_map(&coarse, &fine).is_err());

        let same = phi_map(&fine, &fine).unwrap();
        assert_eq!(same.map, (0..fine.len()).collect::<Vec<_>>());
        assert_eq!(check_lifting(&chambers, &chambers).unwrap(), None);
    }

    #[test]
    fn shortest_double_cosets() {
        let g = group(WeylType::A, 3);
        assert_eq!(&g.shortest_double_coset(&[1, 2, 3]).unwrap(), g.longest_element());
        assert!(g.shortest_double_coset(&[]).unwrap().is_identity());
        assert_eq!(
            g.shortest_double_coset(&[1, 2]).unwrap(),
            g.shortest_double_coset(&[2]).unwrap()
        );
        assert_ne!(
            g.shortest_double_coset(&[1, 2, 3]).unwrap(),
            g.shortest_double_coset(&[2]).unwrap()
        );
    }

    #[test]
    fn self_opposition_matches_diagram_symmetry() {
        let a3 = group(WeylType::A, 3);
        assert!(a3.is_self_opposite(&[2]).unwrap());
        assert!(a3.is_self_opposite(&[1, 3]).unwrap());
        assert!(!a3.is_self_opposite(&[1, 2]).unwrap());
        let d3 = group(WeylType::D, 3);
        assert!(!d3.is_self_opposite(&[3]).unwrap());
        assert!(d3.is_self_opposite(&[2, 3]).unwrap());
        let d4 = group(WeylType::D, 4);
        assert!(d4.is_self_opposite(&[4]).unwrap());
    }
}
