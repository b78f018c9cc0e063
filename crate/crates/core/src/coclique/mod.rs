//! Cocliques of `Σ` and `Γ`: enumeration of the maximal cocliques of the
//! apartment, the common-nonneighbour set `D`, and the unique coclique
//! extension check.
//!
//! `(Γ, Σ)` has the property when for every maximal coclique `C` of `Σ` the
//! set `D` of vertices nonadjacent to all of `C` is itself a coclique.

mod fixtures;
mod instrument;
mod search;

pub use fixtures::{
    a_flags_witnesses, embedded_golden, parse_golden, verify_nonexample, Fixture, FixtureReport,
    Golden, GoldenCase,
};
pub use instrument::{
    is_coclique_extension, project_flags, span_check, span_check_all, ExtensionReport,
};
pub use search::{
    max_coclique, max_coclique_extending, max_coclique_of, maximal_coclique_profile, CocliqueProfile,
    MaxCoclique, DEFAULT_NODE_BUDGET,
};

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::buildings::{format_object, BuildingSpec, KneserGraph};
use crate::error::{usage, Result};
use crate::field::PrimeField;
use crate::graph::Graph;

/// Largest `|Σ|` handled by exhaustive enumeration.
pub const MAX_SIGMA: usize = 64;

/// All maximal cocliques of `Σ`, as sorted lists of vertex indices of `Γ`,
/// in lexicographic order.
pub fn maximal_cocliques_sigma<F: PrimeField>(g: &KneserGraph<F>) -> Result<Vec<Vec<usize>>> {
    let sigma = g.sigma();
    let local = maximal_cocliques(&g.sigma_graph())?;
    Ok(local
        .into_iter()
        .map(|c| c.into_iter().map(|i| sigma[i]).collect())
        .collect())
}

/// All maximal cocliques of a graph on at most 64 vertices, found as the
/// maximal cliques of the complement (Bron–Kerbosch with pivoting), sorted
/// lexicographically.
pub fn maximal_cocliques(graph: &Graph) -> Result<Vec<Vec<usize>>> {
    let n = graph.vertex_count();
    if n > MAX_SIGMA {
        return Err(usage(format!(
            "the apartment has {n} vertices; exhaustive enumeration supports at most {MAX_SIGMA} (use sampling mode)"
        )));
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let non_adjacent: Vec<u64> = (0..n)
        .map(|v| {
            let row = graph.neighbors(v).ones().fold(0u64, |m, u| m | 1 << u);
            all & !row & !(1 << v)
        })
        .collect();
    let mut out = Vec::new();
    bron_kerbosch(&non_adjacent, 0, all, 0, &mut out);
    let mut lists: Vec<Vec<usize>> = out.into_iter().map(mask_members).collect();
    lists.sort();
    Ok(lists)
}

fn mask_members(m: u64) -> Vec<usize> {
    (0..64).filter(|i| m >> i & 1 == 1).collect()
}

fn bron_kerbosch(nbr: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    // pivot maximizing |P ∩ N(u)| over u ∈ P ∪ X
    let mut best = (0, u32::MAX);
    let mut px = p | x;
    while px != 0 {
        let u = px.trailing_zeros() as usize;
        px &= px - 1;
        let c = (p & nbr[u]).count_ones();
        if best.1 == u32::MAX || c > best.1 {
            best = (u, c);
        }
    }
    let mut candidates = p & !nbr[best.0];
    while candidates != 0 {
        let v = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let bit = 1u64 << v;
        bron_kerbosch(nbr, r | bit, p & nbr[v], x & nbr[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// `D(C)`: the vertices nonadjacent to every member of `C`. Contains `C`.
pub fn extension_set<F: PrimeField>(g: &KneserGraph<F>, c: &[usize]) -> Result<FixedBitSet> {
    if !g.graph().is_coclique(c) {
        return Err(usage("the given vertex set is not a coclique"));
    }
    Ok(common_non_neighbors(g.graph(), c))
}

pub(crate) fn common_non_neighbors(graph: &Graph, c: &[usize]) -> FixedBitSet {
    let n = graph.vertex_count();
    let mut d = FixedBitSet::with_capacity(n);
    d.insert_range(..);
    for &v in c {
        d.difference_with(graph.neighbors(v));
    }
    d
}

/// Lexicographically least adjacent pair `x < y` inside `set`.
pub(crate) fn first_edge_within(graph: &Graph, set: &FixedBitSet) -> Option<(usize, usize)> {
    set.ones().find_map(|x| {
        graph
            .neighbors(x)
            .intersection(set)
            .find(|&y| y > x)
            .map(|y| (x, y))
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum CheckMode {
    /// Every maximal coclique of `Σ`.
    All,
    /// `count` random greedy maximal cocliques, reproducible from `seed`.
    Sample { count: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
}

/// A vertex as written in reports: index, readable form and RREF rows of
/// each member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub index: usize,
    pub notation: String,
    pub basis: Vec<Vec<Vec<u32>>>,
}

pub fn vertex_record<F: PrimeField>(g: &KneserGraph<F>, index: usize) -> VertexRecord {
    let obj = g.vertex(index);
    VertexRecord {
        index,
        notation: format_object(g.spec().family, obj),
        basis: obj
            .members()
            .iter()
            .map(|m| m.basis().map(|r| r.iter().map(|x| x.value()).collect()).collect())
            .collect(),
    }
}

/// A certified failure: `C` is a maximal coclique of `Σ`, and `x ∼ y` are
/// both nonadjacent to all of `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub coclique: Vec<VertexRecord>,
    pub x: VertexRecord,
    pub y: VertexRecord,
}

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UcepReport {
    pub schema: u32,
    pub spec: BuildingSpec,
    pub label: String,
    pub verdict: Verdict,
    pub vertices: usize,
    pub sigma: usize,
    pub cocliques_checked: usize,
    pub violating_cocliques: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
}

impl UcepReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// Random greedy maximal cocliques of `Σ` (as vertex indices of `Γ`),
/// deduplicated and sorted.
pub fn sample_maximal_cocliques<F: PrimeField>(g: &KneserGraph<F>, count: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order = g.sigma().to_vec();
    let mut found = std::collections::BTreeSet::new();
    for _ in 0..count {
        order.shuffle(&mut rng);
        let mut blocked = FixedBitSet::with_capacity(g.vertex_count());
        let mut c = Vec::new();
        for &v in &order {
            if !blocked.contains(v) {
                c.push(v);
                blocked.union_with(g.graph().neighbors(v));
            }
        }
        c.sort_unstable();
        found.insert(c);
    }
    found.into_iter().collect()
}

/// Decides the unique coclique extension property over the chosen maximal
/// cocliques of `Σ`. The verdict and witness do not depend on scheduling:
/// the witness is the least violating coclique in lexicographic order, with
/// its least adjacent pair.
pub fn check_ucep<F: PrimeField>(g: &KneserGraph<F>, mode: CheckMode) -> Result<UcepReport> {
    let (cocliques, seed) = match mode {
        CheckMode::All => (maximal_cocliques_sigma(g)?, None),
        CheckMode::Sample { count, seed } => (sample_maximal_cocliques(g, count, seed), Some(seed)),
    };
    let graph = g.graph();
    let violations: Vec<Option<(usize, usize)>> = cocliques
        .par_iter()
        .map(|c| first_edge_within(graph, &common_non_neighbors(graph, c)))
        .collect();
    let violating = violations.iter().filter(|v| v.is_some()).count();
    let witness = violations
        .iter()
        .zip(&cocliques)
        .find_map(|(v, c)| v.map(|(x, y)| (c, x, y)))
        .map(|(c, x, y)| Witness {
            coclique: c.iter().map(|&i| vertex_record(g, i)).collect(),
            x: vertex_record(g, x),
            y: vertex_record(g, y),
        });
    Ok(UcepReport {
        schema: REPORT_SCHEMA,
        spec: g.spec().clone(),
        label: g.spec().label(),
        verdict: if witness.is_some() { Verdict::Fails } else { Verdict::Holds },
        vertices: g.vertex_count(),
        sigma: g.sigma().len(),
        cocliques_checked: cocliques.len(),
        violating_cocliques: violating,
        witness,
        seed,
        elapsed_ms: 0,
    })
}

/// Re-checks a witness against the graph: `C` is a maximal coclique of `Σ`,
/// `x ∼ y`, and both lie in `D(C)`.
pub fn witness_is_valid<F: PrimeField>(g: &KneserGraph<F>, w: &Witness) -> bool {
    let c: Vec<usize> = w.coclique.iter().map(|r| r.index).collect();
    let local: Option<Vec<usize>> = c.iter().map(|v| g.sigma().binary_search(v).ok()).collect();
    let Some(local) = local else {
        return false;
    };
    let d = common_non_neighbors(g.graph(), &c);
    g.sigma_graph().is_maximal_coclique(&local)
        && g.is_adjacent(w.x.index, w.y.index)
        && d.contains(w.x.index)
        && d.contains(w.y.index)
}
