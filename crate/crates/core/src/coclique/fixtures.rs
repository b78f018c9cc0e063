//! The four counterexample families, each checked from its literal witness
//! vectors. Only the apartment and the adjacency predicate are needed, so the
//! flag family stays cheap for larger `n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::buildings::{format_object, parse_object, BuildingSpec, Family, GeometricObject, Geometry};
use crate::error::{usage, Error, Result};
use crate::field::PrimeField;
use crate::graph::Graph;
use crate::with_prime_field;

const EMBEDDED_GOLDEN: &str = include_str!("../../fixtures/nonexamples.json");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Fixture {
    B3_2,
    C3_3,
    D4_34,
    /// Flags of type `{i, n-i}` in `F^n`, that is `A_{n-1,{i,n-i}}`.
    AFlags { n: usize, i: usize },
}

impl Fixture {
    /// The cases run by default, each at its standard characteristic.
    pub fn defaults() -> [Fixture; 4] {
        [Fixture::B3_2, Fixture::C3_3, Fixture::D4_34, Fixture::AFlags { n: 5, i: 2 }]
    }

    pub fn default_p(self) -> u32 {
        match self {
            Fixture::B3_2 | Fixture::C3_3 => 3,
            Fixture::D4_34 | Fixture::AFlags { .. } => 2,
        }
    }

    /// The graph the fixture lives in, at characteristic `p`.
    pub fn spec(self, p: u32) -> Result<BuildingSpec> {
        let pre = |why: String| Err(Error::PreconditionUnmet(format!("{self}: {why}")));
        match self {
            Fixture::B3_2 | Fixture::C3_3 if p.is_multiple_of(2) => return pre(format!("needs odd p, got {p}")),
            Fixture::D4_34 if p != 2 => return pre(format!("needs p = 2, got {p}")),
            Fixture::AFlags { n, i } if i < 2 || 2 * i >= n => {
                return pre(format!("needs 2 <= i < n/2, got n = {n}, i = {i}"))
            }
            _ => {}
        }
        match self {
            Fixture::B3_2 => BuildingSpec::new(Family::B, 3, p, &[2]),
            Fixture::C3_3 => BuildingSpec::new(Family::C, 3, p, &[3]),
            Fixture::D4_34 => BuildingSpec::new(Family::D, 4, p, &[3, 4]),
            Fixture::AFlags { n, i } => BuildingSpec::new(Family::A, n - 1, p, &[i, n - i]),
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fixture::B3_2 => f.write_str("B3_2"),
            Fixture::C3_3 => f.write_str("C3_3"),
            Fixture::D4_34 => f.write_str("D4_34"),
            Fixture::AFlags { n, i } => write!(f, "A_flags({n},{i})"),
        }
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t {
            "B3_2" => return Ok(Fixture::B3_2),
            "C3_3" => return Ok(Fixture::C3_3),
            "D4_34" => return Ok(Fixture::D4_34),
            _ => {}
        }
        let bad = || usage(format!("unknown fixture {s:?}: expected B3_2, C3_3, D4_34 or A_flags(n,i)"));
        let args = t
            .strip_prefix("A_flags(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let (n, i) = args.split_once(',').ok_or_else(bad)?;
        Ok(Fixture::AFlags {
            n: n.trim().parse().map_err(|_| bad())?,
            i: i.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// An object written as its members, each a list of spanning vectors.
pub type ObjectText = Vec<Vec<String>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenCase {
    pub case: String,
    pub family: Family,
    pub rank: usize,
    pub types: Vec<usize>,
    pub p: u32,
    pub witnesses: Vec<ObjectText>,
    /// An explicit maximal coclique of `Σ`; searched for when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coclique: Option<Vec<ObjectText>>,
    /// Expected number of apartment vertices adjacent to a witness.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bad_sigma_vertices: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Golden {
    pub schema: u32,
    pub cases: Vec<GoldenCase>,
}

impl Golden {
    pub fn case(&self, name: &str) -> Option<&GoldenCase> {
        self.cases.iter().find(|c| c.case == name)
    }
}

pub fn parse_golden(text: &str) -> Result<Golden> {
    let integrity = |assertion: String| Error::FixtureIntegrity {
        case: "golden file".into(),
        assertion,
    };
    let golden: Golden = serde_json::from_str(text).map_err(|e| integrity(format!("unreadable: {e}")))?;
    if golden.schema != 1 {
        return Err(integrity(format!("unknown schema {}", golden.schema)));
    }
    Ok(golden)
}

/// The golden file shipped with the crate.
pub fn embedded_golden() -> Golden {
    parse_golden(EMBEDDED_GOLDEN).expect("embedded golden file is valid")
}

/// The flags `F = (A, B)` and `F′ = (A′, B′)` of type `{i, n-i}` in `F^n`,
/// with `u = e1+e2` and `v = e1+en`:
/// `A = ⟨u, e3..e(i+1)⟩`, `B = ⟨u, e3..e(n-i), en⟩`,
/// `A′ = ⟨v, e(n-1)..e(n-i+1)⟩`, `B′ = ⟨v, e(n-1)..e(i+2), e2⟩`.
pub fn a_flags_witnesses(n: usize, i: usize) -> [ObjectText; 2] {
    let e = |j: usize| format!("e{j}");
    let u = "e1+e2".to_string();
    let v = format!("e1+e{n}");
    let with = |head: &String, rest: Vec<String>| std::iter::once(head.clone()).chain(rest).collect::<Vec<_>>();
    let a = with(&u, (3..=i + 1).map(e).collect());
    let b = with(&u, (3..=n - i).map(e).chain([e(n)]).collect());
    let a2 = with(&v, (n - i + 1..n).rev().map(e).collect());
    let b2 = with(&v, (i + 2..n).rev().map(e).chain([e(2)]).collect());
    [vec![a, b], vec![a2, b2]]
}

/// A witness as it appears in a report: the literal vectors and the
/// canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureVertex {
    pub literal: ObjectText,
    pub notation: String,
    pub basis: Vec<Vec<Vec<u32>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CocliqueSource {
    Literal,
    Searched,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureReport {
    pub case: String,
    pub spec: BuildingSpec,
    pub label: String,
    pub witnesses: [FixtureVertex; 2],
    /// The maximal coclique `C` of `Σ` with both witnesses in `D(C)`.
    pub coclique: Vec<String>,
    pub coclique_source: CocliqueSource,
    pub sigma: usize,
    /// Apartment vertices adjacent to at least one witness.
    pub bad_sigma_vertices: usize,
    pub bad_sigma_edges: usize,
    pub certified: bool,
}

fn record<F: PrimeField>(family: Family, literal: &ObjectText, obj: &GeometricObject<F>) -> FixtureVertex {
    FixtureVertex {
        literal: literal.clone(),
        notation: format_object(family, obj),
        basis: obj
            .members()
            .iter()
            .map(|m| m.basis().map(|r| r.iter().map(|x| x.value()).collect()).collect())
            .collect(),
    }
}

/// Certifies a counterexample at characteristic `p`: both witnesses are
/// vertices, they are adjacent, and some maximal coclique `C` of `Σ` has
/// both of them in `D(C)`. Any failed assertion is a fixture-integrity
/// error.
pub fn verify_nonexample(fixture: Fixture, p: u32, golden: &Golden) -> Result<FixtureReport> {
    let spec = fixture.spec(p)?;
    with_prime_field!(p, F => verify_in::<F>(fixture, spec, golden))?
}

fn verify_in<F: PrimeField>(fixture: Fixture, spec: BuildingSpec, golden: &Golden) -> Result<FixtureReport> {
    let name = fixture.to_string();
    let fail = |assertion: String| Error::FixtureIntegrity {
        case: name.clone(),
        assertion,
    };
    let entry = golden.case(&name);
    let generated = match fixture {
        Fixture::AFlags { n, i } => Some(a_flags_witnesses(n, i)),
        _ => None,
    };
    let texts: Vec<ObjectText> = match (entry, &generated) {
        (Some(c), _) => {
            if (c.family, c.rank, &c.types) != (spec.family, spec.rank, &spec.types) {
                return Err(fail(format!(
                    "golden entry describes {}_{} with types {:?}, expected {}",
                    c.family,
                    c.rank,
                    c.types,
                    spec.label()
                )));
            }
            c.witnesses.clone()
        }
        (None, Some(g)) => g.to_vec(),
        (None, None) => return Err(fail("no golden entry".into())),
    };
    if texts.len() != 2 {
        return Err(fail(format!("expected 2 witnesses, found {}", texts.len())));
    }

    let geometry = Geometry::<F>::new(&spec)?;
    let parse = |t: &ObjectText, what: &str| {
        parse_object::<F>(&spec, t).map_err(|e| fail(format!("{what} {t:?} does not parse: {e}")))
    };
    let x = parse(&texts[0], "witness")?;
    let y = parse(&texts[1], "witness")?;
    if let Some(g) = &generated {
        if (parse(&g[0], "generated")?, parse(&g[1], "generated")?) != (x.clone(), y.clone()) {
            return Err(fail("golden witnesses differ from the generated flags".into()));
        }
    }
    for (obj, t) in [(&x, &texts[0]), (&y, &texts[1])] {
        if !geometry.is_vertex(obj) {
            return Err(fail(format!("witness {t:?} is not a vertex of {}", spec.label())));
        }
    }
    if !geometry.adjacent(&x, &y) {
        return Err(fail("the witnesses are not adjacent".into()));
    }

    let sigma = geometry.frame_objects();
    let sigma_graph = geometry.adjacency_graph(&sigma);
    let bad: Vec<usize> = (0..sigma.len())
        .filter(|&s| geometry.adjacent(&sigma[s], &x) || geometry.adjacent(&sigma[s], &y))
        .collect();
    let bad_edges = sigma_graph.induced(&bad).edge_count();
    if let Some(expected) = entry.and_then(|c| c.bad_sigma_vertices) {
        if bad.len() != expected {
            return Err(fail(format!(
                "{} apartment vertices are adjacent to a witness, expected {expected}",
                bad.len()
            )));
        }
    }

    let literal = entry.and_then(|c| c.coclique.as_ref());
    let (coclique, source) = match literal {
        Some(objs) => {
            let mut local = Vec::new();
            for t in objs {
                let obj = parse(t, "coclique member")?;
                let idx = sigma
                    .iter()
                    .position(|s| *s == obj)
                    .ok_or_else(|| fail(format!("coclique member {t:?} is not in the apartment")))?;
                local.push(idx);
            }
            local.sort_unstable();
            if !sigma_graph.is_maximal_coclique(&local) {
                return Err(fail("the given C is not a maximal coclique of the apartment".into()));
            }
            if let Some(&s) = local.iter().find(|s| bad.contains(s)) {
                return Err(fail(format!(
                    "coclique member {} is adjacent to a witness",
                    format_object(spec.family, &sigma[s])
                )));
            }
            (local, CocliqueSource::Literal)
        }
        None => (
            compatible_coclique(&sigma_graph, &bad)
                .ok_or_else(|| fail("no maximal coclique of the apartment avoids both witnesses".into()))?,
            CocliqueSource::Searched,
        ),
    };

    Ok(FixtureReport {
        case: name.clone(),
        label: spec.label(),
        witnesses: [
            record(spec.family, &texts[0], &x),
            record(spec.family, &texts[1], &y),
        ],
        coclique: coclique.iter().map(|&s| format_object(spec.family, &sigma[s])).collect(),
        coclique_source: source,
        sigma: sigma.len(),
        bad_sigma_vertices: bad.len(),
        bad_sigma_edges: bad_edges,
        certified: true,
        spec,
    })
}

/// A maximal coclique of `Σ` disjoint from `bad`. Every bad vertex must
/// then be dominated by a member, so the search branches over dominators for
/// the bad vertices and fills the rest greedily in canonical order.
fn compatible_coclique(sigma: &Graph, bad: &[usize]) -> Option<Vec<usize>> {
    fn extend(sigma: &Graph, bad: &[usize], chosen: &mut Vec<usize>) -> Option<Vec<usize>> {
        let open = bad
            .iter()
            .find(|&&b| chosen.iter().all(|&c| !sigma.is_adjacent(b, c)));
        let Some(&b) = open else {
            let mut c = chosen.clone();
            for v in 0..sigma.vertex_count() {
                if !bad.contains(&v) && c.iter().all(|&u| u != v && !sigma.is_adjacent(u, v)) {
                    c.push(v);
                }
            }
            c.sort_unstable();
            return Some(c);
        };
        for d in sigma.neighbors(b).ones() {
            if bad.contains(&d) || chosen.contains(&d) || chosen.iter().any(|&c| sigma.is_adjacent(c, d)) {
                continue;
            }
            chosen.push(d);
            let found = extend(sigma, bad, chosen);
            chosen.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }
    extend(sigma, bad, &mut Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_names_round_trip() {
        for f in Fixture::defaults() {
            assert_eq!(f.to_string().parse::<Fixture>().unwrap(), f);
        }
        assert_eq!("A_flags(7, 3)".parse::<Fixture>().unwrap(), Fixture::AFlags { n: 7, i: 3 });
        assert!("E8".parse::<Fixture>().is_err());
    }

    #[test]
    fn generated_flags_at_five_two() {
        let [f, f2] = a_flags_witnesses(5, 2);
        assert_eq!(f, vec![vec!["e1+e2", "e3"], vec!["e1+e2", "e3", "e5"]]);
        assert_eq!(f2, vec![vec!["e1+e5", "e4"], vec!["e1+e5", "e4", "e2"]]);
    }

    #[test]
    fn default_fixtures_certify() {
        let golden = embedded_golden();
        for f in Fixture::defaults() {
            let r = verify_nonexample(f, f.default_p(), &golden).unwrap();
            assert!(r.certified, "{f}");
        }
        let r = verify_nonexample(Fixture::AFlags { n: 5, i: 2 }, 2, &golden).unwrap();
        assert_eq!((r.bad_sigma_vertices, r.bad_sigma_edges), (4, 0));
    }

    #[test]
    fn larger_flag_case_without_golden_entry() {
        for (n, i) in [(6, 2), (7, 3)] {
            let r = verify_nonexample(Fixture::AFlags { n, i }, 2, &embedded_golden()).unwrap();
            assert_eq!(r.coclique_source, CocliqueSource::Searched);
            assert_eq!((r.bad_sigma_vertices, r.bad_sigma_edges), (4, 0), "A_flags({n},{i})");
        }
    }

    #[test]
    fn characteristic_preconditions() {
        let golden = embedded_golden();
        assert!(matches!(
            verify_nonexample(Fixture::B3_2, 2, &golden),
            Err(Error::PreconditionUnmet(_))
        ));
        assert!(matches!(
            verify_nonexample(Fixture::D4_34, 3, &golden),
            Err(Error::PreconditionUnmet(_))
        ));
    }

    #[test]
    fn corrupted_golden_is_an_integrity_error() {
        assert!(matches!(parse_golden("{"), Err(Error::FixtureIntegrity { .. })));
        let mut golden = embedded_golden();
        golden.cases[0].witnesses[1] = vec![vec!["e2".into(), "e5".into()]];
        assert!(matches!(
            verify_nonexample(Fixture::B3_2, 3, &golden),
            Err(Error::FixtureIntegrity { .. })
        ));
    }
}
