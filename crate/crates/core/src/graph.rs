//! Simple undirected graphs with bit-vector adjacency rows.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        Self::from_predicate(n, |_, _| true)
    }

    /// Builds the graph with `i ~ j` iff `adjacent(i, j)`, evaluating the
    /// predicate once per unordered pair `i < j`. Rows are filled in
    /// parallel.
    pub fn from_predicate(n: usize, adjacent: impl Fn(usize, usize) -> bool + Sync) -> Self {
        let upper: Vec<Vec<usize>> = (0..n)
            .into_par_iter()
            .map(|i| (i + 1..n).filter(|&j| adjacent(i, j)).collect())
            .collect();
        let mut g = Self::empty(n);
        for (i, js) in upper.into_iter().enumerate() {
            for j in js {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (i, j) in edges {
            g.add_edge(i, j);
        }
        g
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert_ne!(i, j, "loops are not allowed");
        self.rows[i].insert(j);
        self.rows[j].insert(i);
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn is_adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.ones().filter(move |&j| j > i).map(move |j| (i, j)))
    }

    /// Common valency, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.rows.first().map_or(0, |r| r.count_ones(..));
        self.rows.iter().all(|r| r.count_ones(..) == d).then_some(d)
    }

    /// The subgraph induced on `vertices`, relabelled `0..vertices.len()` in
    /// the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_predicate(vertices.len(), |a, b| self.is_adjacent(vertices[a], vertices[b]))
    }

    pub fn complement(&self) -> Graph {
        let n = self.vertex_count();
        Graph::from_predicate(n, |a, b| !self.is_adjacent(a, b))
    }

    /// Checks symmetry and irreflexivity of the stored rows.
    pub fn is_simple(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| {
            !r.contains(i) && r.ones().all(|j| self.rows[j].contains(i))
        })
    }

    /// Whether no two members of `set` are adjacent.
    pub fn is_coclique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(a, &x)| set[a + 1..].iter().all(|&y| !self.is_adjacent(x, y)))
    }

    /// Whether `set` is a coclique that no further vertex can join.
    pub fn is_maximal_coclique(&self, set: &[usize]) -> bool {
        if !self.is_coclique(set) {
            return false;
        }
        let mut covered = FixedBitSet::with_capacity(self.vertex_count());
        for &x in set {
            covered.insert(x);
            covered.union_with(&self.rows[x]);
        }
        covered.count_ones(..) == self.vertex_count()
    }
}

/// Set-Kneser graph `K(n, k)`: `k`-subsets of `{0..n-1}` (as bitmasks, in
/// increasing numeric order), adjacent when disjoint.
pub fn set_kneser(n: usize, k: usize) -> (Vec<u64>, Graph) {
    let subsets: Vec<u64> = (0u64..1 << n).filter(|s| s.count_ones() as usize == k).collect();
    let g = Graph::from_predicate(subsets.len(), |a, b| subsets[a] & subsets[b] == 0);
    (subsets, g)
}

/// Petersen graph as `K(5, 2)`.
pub fn petersen() -> Graph {
    set_kneser(5, 2).1
}

/// Checks whether `map` (a bijection `a -> b` on vertex indices) is an
/// isomorphism; returns the first pair where adjacency differs.
pub fn isomorphism_mismatch(a: &Graph, b: &Graph, map: &[usize]) -> Option<(usize, usize)> {
    if a.vertex_count() != b.vertex_count() || map.len() != a.vertex_count() {
        return Some((usize::MAX, usize::MAX));
    }
    let mut seen = FixedBitSet::with_capacity(b.vertex_count());
    for &m in map {
        if m >= b.vertex_count() || seen.put(m) {
            return Some((usize::MAX, usize::MAX));
        }
    }
    let n = a.vertex_count();
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| a.is_adjacent(i, j) != b.is_adjacent(map[i], map[j]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_is_cubic_on_ten_vertices() {
        let p = petersen();
        assert_eq!(p.vertex_count(), 10);
        assert_eq!(p.regular_degree(), Some(3));
        assert_eq!(p.edge_count(), 15);
        assert!(p.is_simple());
    }

    #[test]
    fn kneser_4_2_is_a_perfect_matching() {
        let (_, g) = set_kneser(4, 2);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.regular_degree(), Some(1));
    }

    #[test]
    fn maximal_coclique_check() {
        let g = Graph::from_edges(3, [(0, 1)]);
        assert!(g.is_maximal_coclique(&[0, 2]));
        assert!(!g.is_maximal_coclique(&[2]));
        assert!(!g.is_coclique(&[0, 1]));
    }

    #[test]
    fn isomorphism_check() {
        let a = Graph::from_edges(3, [(0, 1)]);
        let b = Graph::from_edges(3, [(1, 2)]);
        assert_eq!(isomorphism_mismatch(&a, &b, &[1, 2, 0]), None);
        assert!(isomorphism_mismatch(&a, &b, &[0, 1, 2]).is_some());
    }
}
