use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::SUPPORTED_PRIMES;

/// Diagram family of the building.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    /// Only `G_{2,1}`, realized through the points of the `B_3` polar space.
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "G" => Ok(Family::G),
            other => Err(Error::InvalidSpec(format!("unknown family {other:?}"))),
        }
    }
}

/// Which of the two classes of maximal totally singular subspaces of a
/// hyperbolic quadric. `Plus` is the class of `⟨e_1, …, e_n⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DClass {
    Plus,
    Minus,
}

/// A Kneser graph `X_{n,J}` over `F_p`: diagram family, rank `n`, prime,
/// and the type set `J` (diagram nodes, 1-based, sorted).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BuildingSpec {
    pub family: Family,
    pub rank: usize,
    pub p: u32,
    pub types: Vec<usize>,
}

impl BuildingSpec {
    pub fn new(family: Family, rank: usize, p: u32, types: &[usize]) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidSpec(msg));
        if !SUPPORTED_PRIMES.contains(&p) {
            return Err(Error::UnsupportedPrime(p));
        }
        let min_rank = match family {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            Family::G => 2,
        };
        if rank < min_rank {
            return invalid(format!("{family}_n requires n >= {min_rank}, got {rank}"));
        }
        if family == Family::G && rank != 2 {
            return invalid(format!("only G_2 is supported, got G_{rank}"));
        }
        let mut j = types.to_vec();
        j.sort_unstable();
        j.dedup();
        if j.is_empty() {
            return invalid("type set J must be nonempty".into());
        }
        if let Some(&bad) = j.iter().find(|&&t| t == 0 || t > rank) {
            return invalid(format!("type {bad} is not a node of {family}_{rank}"));
        }
        if matches!(family, Family::B | Family::G) && p == 2 {
            return invalid(format!(
                "{family} requires odd p: the polar form of the parabolic quadric is degenerate in characteristic 2 (use family C)"
            ));
        }
        let spec = BuildingSpec {
            family,
            rank,
            p,
            types: j,
        };
        spec.polar_shape()?;
        Ok(spec)
    }

    /// `X_{n,i}` or `X_{n,{i,j,…}}`.
    pub fn label(&self) -> String {
        let j = if self.types.len() == 1 {
            self.types[0].to_string()
        } else {
            let parts: Vec<String> = self.types.iter().map(|t| t.to_string()).collect();
            format!("{{{}}}", parts.join(","))
        };
        format!("{}_{{{},{}}}", self.family, self.rank, j)
    }

    /// The opposition involution `j ↦ j^{w₀}` on diagram nodes.
    pub fn opposite_node(&self, j: usize) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n + 1 - j,
            Family::D if n % 2 == 1 && j >= n - 1 => 2 * n - 1 - j,
            _ => j,
        }
    }

    pub fn is_self_opposite(&self) -> bool {
        let mut opp: Vec<usize> = self.types.iter().map(|&j| self.opposite_node(j)).collect();
        opp.sort_unstable();
        opp == self.types
    }

    /// Kneser adjacency within one type of flags is only defined here for
    /// self-opposite `J`; single types of `A_n` use the disjointness /
    /// duality reduction instead.
    pub fn require_kneser_defined(&self) -> Result<()> {
        if self.family == Family::A && self.types.len() > 1 && !self.is_self_opposite() {
            return Err(Error::InvalidSpec(format!(
                "{}: flag type set J must be self-opposite (J = {{n+1-j : j in J}})",
                self.label()
            )));
        }
        Ok(())
    }

    /// Dimension of the ambient vector space of the geometric model.
    pub fn ambient_dim(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B => 2 * self.rank + 1,
            Family::C | Family::D => 2 * self.rank,
            Family::G => 7,
        }
    }

    /// For polar families: subspace dimension `k` and the D-class selector.
    pub(crate) fn polar_shape(&self) -> Result<Option<(usize, Option<DClass>)>> {
        let n = self.rank;
        let j = self.types.as_slice();
        let unsupported = || {
            Err(Error::InvalidSpec(format!(
                "{}: only single types (and {{n-1,n}} for D) are implemented for polar families",
                self.label()
            )))
        };
        Ok(match self.family {
            Family::A => None,
            Family::B | Family::C => match j {
                [k] => Some((*k, None)),
                _ => return unsupported(),
            },
            Family::G => match j {
                [1] => Some((1, None)),
                _ => {
                    return Err(Error::InvalidSpec(
                        "only G_{2,1} (points of the generalized hexagon) is implemented".into(),
                    ))
                }
            },
            Family::D => match j {
                [k] if *k <= n - 2 => Some((*k, None)),
                [k] if *k == n => Some((n, Some(DClass::Plus))),
                [k] if *k == n - 1 => Some((n, Some(DClass::Minus))),
                [a, b] if *a == n - 1 && *b == n => Some((n - 1, None)),
                _ => return unsupported(),
            },
        })
    }
}

impl fmt::Display for BuildingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over F_{}", self.label(), self.p)
    }
}

/// Parses a comma-separated type set such as `"1,3"`.
pub fn parse_types(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidSpec(format!("bad type {t:?} in {s:?}")))
        })
        .collect()
}
