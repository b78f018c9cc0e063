//! Exact maximum coclique by branch and bound: a maximum clique search in
//! the complement, bounded by a greedy colouring of the candidate set.

use std::collections::BTreeMap;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::buildings::KneserGraph;
use crate::error::{usage, Result};
use crate::field::PrimeField;
use crate::graph::Graph;

use super::common_non_neighbors;

/// Search-tree nodes allowed before giving up with bounds.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxCoclique {
    /// Size of `witness`: the exact maximum when `exact`, else a lower bound.
    pub size: usize,
    pub witness: Vec<usize>,
    pub exact: bool,
    pub upper_bound: usize,
    pub nodes: u64,
}

struct Search<'a> {
    /// Non-neighbours of each vertex (excluding itself).
    free: Vec<FixedBitSet>,
    graph: &'a Graph,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Search<'_> {
    /// Greedy colouring of `p` into cliques of the graph (cocliques of the
    /// complement). Returns vertices in colouring order with their colour
    /// numbers, which are nondecreasing.
    fn colour(&self, p: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut left = p.clone();
        let mut out = Vec::with_capacity(p.count_ones(..));
        let mut colour = 0;
        while !left.is_clear() {
            colour += 1;
            let mut class = left.clone();
            while let Some(v) = class.minimum() {
                class.remove(v);
                class.intersect_with(self.graph.neighbors(v));
                left.remove(v);
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, mut p: FixedBitSet) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let order = self.colour(&p);
        for &(v, colour) in order.iter().rev() {
            if self.current.len() + colour <= self.best.len() || self.exhausted {
                return;
            }
            self.current.push(v);
            let mut next = p.clone();
            next.intersect_with(&self.free[v]);
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            p.remove(v);
        }
    }
}

fn search(graph: &Graph, candidates: FixedBitSet, budget: u64) -> MaxCoclique {
    let n = graph.vertex_count();
    let free: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut f = FixedBitSet::with_capacity(n);
            f.insert_range(..);
            f.difference_with(graph.neighbors(v));
            f.remove(v);
            f
        })
        .collect();
    let mut s = Search {
        free,
        graph,
        best: Vec::new(),
        current: Vec::new(),
        nodes: 0,
        budget,
        exhausted: false,
    };
    let root_bound = s.colour(&candidates).last().map_or(0, |&(_, c)| c);
    if !candidates.is_clear() {
        s.expand(candidates);
    }
    let mut witness = s.best;
    witness.sort_unstable();
    MaxCoclique {
        size: witness.len(),
        exact: !s.exhausted,
        upper_bound: if s.exhausted { root_bound } else { witness.len() },
        witness,
        nodes: s.nodes,
    }
}

/// Maximum coclique of `Γ`.
pub fn max_coclique<F: PrimeField>(g: &KneserGraph<F>, budget: u64) -> MaxCoclique {
    max_coclique_of(g.graph(), budget)
}

/// Maximum coclique of an arbitrary graph.
pub fn max_coclique_of(graph: &Graph, budget: u64) -> MaxCoclique {
    let mut all = FixedBitSet::with_capacity(graph.vertex_count());
    all.insert_range(..);
    search(graph, all, budget)
}

/// Largest coclique containing the coclique `base`: `base` plus a maximum
/// coclique of its common non-neighbours.
pub fn max_coclique_extending<F: PrimeField>(
    g: &KneserGraph<F>,
    base: &[usize],
    budget: u64,
) -> Result<MaxCoclique> {
    let graph = g.graph();
    if !graph.is_coclique(base) {
        return Err(usage("the base set is not a coclique"));
    }
    let mut candidates = common_non_neighbors(graph, base);
    for &b in base {
        candidates.remove(b);
    }
    let mut r = search(graph, candidates, budget);
    r.witness.extend_from_slice(base);
    r.witness.sort_unstable();
    r.size += base.len();
    r.upper_bound += base.len();
    Ok(r)
}

/// How many maximal cocliques of each size a graph has.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocliqueProfile {
    pub sizes: BTreeMap<usize, u64>,
    /// False when the node budget ran out; `sizes` is then partial.
    pub complete: bool,
    pub nodes: u64,
}

impl CocliqueProfile {
    /// Size of the largest maximal coclique that is not of maximum size.
    pub fn second_largest(&self) -> Option<usize> {
        self.sizes.keys().rev().nth(1).copied()
    }
}

/// Enumerates all maximal cocliques of a graph of any order (Bron–Kerbosch
/// with pivoting on the complement) and tallies their sizes.
pub fn maximal_coclique_profile(graph: &Graph, budget: u64) -> CocliqueProfile {
    struct Walk<'a> {
        graph: &'a Graph,
        sizes: BTreeMap<usize, u64>,
        nodes: u64,
        budget: u64,
    }
    impl Walk<'_> {
        fn non_neighbours(&self, v: usize, set: &FixedBitSet) -> FixedBitSet {
            let mut out = set.clone();
            out.difference_with(self.graph.neighbors(v));
            out.remove(v);
            out
        }

        fn run(&mut self, depth: usize, p: FixedBitSet, mut x: FixedBitSet) -> bool {
            self.nodes += 1;
            if self.nodes > self.budget {
                return false;
            }
            if p.is_clear() {
                if x.is_clear() {
                    *self.sizes.entry(depth).or_default() += 1;
                }
                return true;
            }
            let pivot = p
                .union(&x)
                .max_by_key(|&u| p.count_ones(..) - p.intersection(self.graph.neighbors(u)).count() - usize::from(p.contains(u)))
                .expect("P is nonempty");
            let mut p = p;
            let candidates: Vec<usize> = p.ones().filter(|&v| v == pivot || self.graph.is_adjacent(v, pivot)).collect();
            for v in candidates {
                let (np, nx) = (self.non_neighbours(v, &p), self.non_neighbours(v, &x));
                if !self.run(depth + 1, np, nx) {
                    return false;
                }
                p.remove(v);
                x.insert(v);
            }
            true
        }
    }
    let n = graph.vertex_count();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut walk = Walk {
        graph,
        sizes: BTreeMap::new(),
        nodes: 0,
        budget,
    };
    let complete = walk.run(0, all, FixedBitSet::with_capacity(n));
    CocliqueProfile {
        sizes: walk.sizes,
        complete,
        nodes: walk.nodes,
    }
}
