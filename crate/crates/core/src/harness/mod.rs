//! Executable checks of the chordality theorems for powers and line-graph
//! squares, corpus runs with deterministic reports, and obstruction mining.

mod certificate;
mod checks;
mod mine;
mod report;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use certificate::{Certificate, Counterexample, Fact, Target};
pub use checks::{check_theorem, check_theorem_observed, simple_cycles_by_length, Observation};
pub use mine::{mine_obstructions, MineTarget};
pub use report::{
    verify_corpus, verify_graphs, CorpusRun, GraphVerdicts, RatioCount, TheoremReport,
    TheoremSummary, VerdictTag, SCHEMA_VERSION,
};

/// One claim checked by the harness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TheoremId {
    DiameterComplete,
    Duchet,
    LsEquiv,
    LsClosed,
    NoTwoConsec,
    BpSufficient,
    Flotow,
    NewSufficient,
    FlowerEquiv,
    LineCycle,
    LgCycleBound,
    Cameron,
    SproutEquiv,
    LgSquareEquiv,
}

/// Whether a claim is a biconditional or has a hypothesis that may fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    Equivalence,
    Implication,
}

/// Largest inputs a check accepts. `max_size` bounds the edge count where
/// the check works on the line graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub max_order: usize,
    pub max_size: Option<usize>,
}

impl Bound {
    pub fn admits(&self, g: &Graph) -> bool {
        g.order() <= self.max_order && self.max_size.is_none_or(|m| g.size() <= m)
    }
}

struct Entry {
    id: TheoremId,
    name: &'static str,
    kind: ClaimKind,
    bound: Bound,
    statement: &'static str,
}

const fn order(n: usize) -> Bound {
    Bound {
        max_order: n,
        max_size: None,
    }
}

const fn order_size(n: usize, m: usize) -> Bound {
    Bound {
        max_order: n,
        max_size: Some(m),
    }
}

const TABLE: [Entry; 14] = [
    Entry {
        id: TheoremId::DiameterComplete,
        name: "DIAMETER_COMPLETE",
        kind: ClaimKind::Equivalence,
        bound: order(8),
        statement: "All components of G^k are complete graphs if and only if k >= dm(G).",
    },
    Entry {
        id: TheoremId::Duchet,
        name: "DUCHET",
        kind: ClaimKind::Implication,
        bound: order(8),
        statement: "If G^k is chordal, so is G^{k+2}.",
    },
    Entry {
        id: TheoremId::LsEquiv,
        name: "LS_EQUIV",
        kind: ClaimKind::Implication,
        bound: order(8),
        statement: "For chordal G, G^2 is chordal if and only if G does not contain an unsuspended sunflower of size at least 4.",
    },
    Entry {
        id: TheoremId::LsClosed,
        name: "LS_CLOSED",
        kind: ClaimKind::Implication,
        bound: order(8),
        statement: "If G is chordal without unsuspended sunflowers, then every G^k is chordal and does not contain any unsuspended sunflower.",
    },
    Entry {
        id: TheoremId::NoTwoConsec,
        name: "NO_TWO_CONSEC",
        kind: ClaimKind::Implication,
        bound: order(8),
        statement: "For a hole C of G^k and r <= k/2, G^r cannot contain two consecutive edges of C and contains at most l/2 of its edges.",
    },
    Entry {
        id: TheoremId::BpSufficient,
        name: "BP_SUFFICIENT",
        kind: ClaimKind::Implication,
        bound: order(12),
        statement: "If G does not contain an induced K_{1,3}, an induced P5+a or an induced cycle of length at least 6, then G^2 is chordal.",
    },
    Entry {
        id: TheoremId::Flotow,
        name: "FLOTOW",
        kind: ClaimKind::Implication,
        bound: order(12),
        statement: "If G is chordal and does not contain an induced claw, then G^2 is chordal.",
    },
    Entry {
        id: TheoremId::NewSufficient,
        name: "NEW_SUFFICIENT",
        kind: ClaimKind::Implication,
        bound: order(12),
        statement: "If G is claw-free, has no induced cycle of length at least 5 and any induced F_4 in G is suspended, then G^2 is chordal.",
    },
    Entry {
        id: TheoremId::FlowerEquiv,
        name: "FLOWER_EQUIV",
        kind: ClaimKind::Equivalence,
        bound: order(8),
        statement: "G^2 is chordal if and only if all of its induced flowers of size n >= 4 in G are withered.",
    },
    Entry {
        id: TheoremId::LineCycle,
        name: "LINE_CYCLE",
        kind: ClaimKind::Equivalence,
        bound: order_size(8, 16),
        statement: "G contains a cycle of length l >= 4 if and only if L(G) contains an induced cycle of the same length.",
    },
    Entry {
        id: TheoremId::LgCycleBound,
        name: "LG_CYCLE_BOUND",
        kind: ClaimKind::Implication,
        bound: order_size(8, 16),
        statement: "For f in {4, 5, 6}, if G contains no induced cycles of length l >= f, neither does L(G)^2.",
    },
    Entry {
        id: TheoremId::Cameron,
        name: "CAMERON",
        kind: ClaimKind::Implication,
        bound: order(12),
        statement: "Let G be chordal, then L(G)^2 is chordal.",
    },
    Entry {
        id: TheoremId::SproutEquiv,
        name: "SPROUT_EQUIV",
        kind: ClaimKind::Equivalence,
        bound: order_size(8, 12),
        statement: "L(G)^2 contains an induced cycle of length l >= 4 if and only if G contains an unwithered sprout of size l.",
    },
    Entry {
        id: TheoremId::LgSquareEquiv,
        name: "LG_SQUARE_EQUIV",
        kind: ClaimKind::Equivalence,
        bound: order_size(8, 12),
        statement: "L(G)^2 is chordal if and only if G has no induced cycle of length at least 6 and no fertile sprouts of size 4 and 5.",
    },
];

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::DiameterComplete,
        TheoremId::Duchet,
        TheoremId::LsEquiv,
        TheoremId::LsClosed,
        TheoremId::NoTwoConsec,
        TheoremId::BpSufficient,
        TheoremId::Flotow,
        TheoremId::NewSufficient,
        TheoremId::FlowerEquiv,
        TheoremId::LineCycle,
        TheoremId::LgCycleBound,
        TheoremId::Cameron,
        TheoremId::SproutEquiv,
        TheoremId::LgSquareEquiv,
    ];

    fn entry(self) -> &'static Entry {
        &TABLE[self as usize]
    }

    pub fn name(self) -> &'static str {
        self.entry().name
    }

    pub fn kind(self) -> ClaimKind {
        self.entry().kind
    }

    pub fn bound(self) -> Bound {
        self.entry().bound
    }

    /// The claim in words.
    pub fn statement(self) -> &'static str {
        self.entry().statement
    }

    /// The implications, i.e. the ids whose hypothesis can fail.
    pub fn implications() -> Vec<TheoremId> {
        Self::ALL
            .into_iter()
            .filter(|id| id.kind() == ClaimKind::Implication)
            .collect()
    }

    /// Parses a comma separated list of names, or `all`.
    pub fn parse_list(s: &str) -> Result<Vec<TheoremId>> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(Self::ALL.to_vec());
        }
        let mut ids = s
            .split(',')
            .map(|part| part.trim().parse())
            .collect::<Result<Vec<TheoremId>>>()?;
        ids.sort();
        ids.dedup();
        Ok(ids)
    }
}

/// Checks that the table is consistent: ids in order, distinct names and
/// distinct statements.
pub fn check_table() -> Result<()> {
    for (i, e) in TABLE.iter().enumerate() {
        if e.id as usize != i || TheoremId::ALL[i] != e.id {
            return Err(Error::InternalContradiction(format!(
                "theorem table out of order at {}",
                e.name
            )));
        }
        for f in &TABLE[..i] {
            if f.name == e.name || f.statement == e.statement {
                return Err(Error::InternalContradiction(format!(
                    "{} and {} share a name or statement",
                    f.name, e.name
                )));
            }
        }
    }
    Ok(())
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<TheoremId> {
        let wanted = s.trim().replace('-', "_").to_ascii_uppercase();
        TheoremId::ALL
            .into_iter()
            .find(|id| id.name() == wanted)
            .ok_or_else(|| Error::Syntax {
                line: 0,
                message: format!("unknown theorem {s:?}"),
            })
    }
}

/// Outcome of one claim on one graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Holds,
    /// The hypothesis of an implication fails on this graph.
    Vacuous,
    Counterexample(Box<Counterexample>),
}

impl Verdict {
    pub fn tag(&self) -> VerdictTag {
        match self {
            Verdict::Holds => VerdictTag::Holds,
            Verdict::Vacuous => VerdictTag::Vacuous,
            Verdict::Counterexample(_) => VerdictTag::Counterexample,
        }
    }
}
