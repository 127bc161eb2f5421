use serde::{Deserialize, Serialize};

use super::checks::simple_cycles_by_length;
use super::TheoremId;
use crate::chordality::{
    check_peo, enumerate_induced_cycles_bounded, has_induced_cycle_geq, is_induced_cycle, PeoCheck,
};
use crate::corpus::parse_graph6;
use crate::error::Result;
use crate::graph::Graph;
use crate::patterns::{
    check_sufficient_chordalsq, find_claw, find_fertile_sprout, find_p5a,
    find_unsuspended_sunflower, find_unwithered_flower, FlowerWitness, SproutWitness,
    SunflowerWitness,
};
use crate::witnesses::{verify_flower, verify_sprout, verify_sunflower};

/// A graph derived from the input graph `G`. Line-graph vertices are the
/// edges of `G` in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "of", rename_all = "snake_case")]
pub enum Target {
    Graph,
    Power { k: usize },
    LineGraph,
    LineGraphSquare,
}

impl Target {
    pub fn build(self, g: &Graph) -> Result<Graph> {
        Ok(match self {
            Target::Graph => g.clone(),
            Target::Power { k } => g.power(k)?,
            Target::LineGraph => g.line_graph().lg,
            Target::LineGraphSquare => g.line_graph().lg.square(),
        })
    }
}

/// A fact about `G` that is re-checked by recomputation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "fact", rename_all = "snake_case")]
pub enum Fact {
    /// Every component of `G^k` is a clique.
    ComponentsComplete {
        k: usize,
    },
    /// Any two vertices in the same component are at distance at most `k`.
    DiameterAtMost {
        k: usize,
    },
    ClawFree,
    P5aFree,
    NoInducedCycleAtLeast {
        target: Target,
        f: usize,
    },
    NoInducedCycleOfLength {
        target: Target,
        l: usize,
    },
    NoCycleOfLength {
        l: usize,
    },
    /// The claw / long hole / suspended `F4` test applies.
    SufficientApplicable,
    NoUnwitheredFlower {
        min_size: usize,
        max_size: usize,
    },
    NoUnsuspendedSunflower {
        target: Target,
        min_size: usize,
    },
    NoFertileSprout {
        sizes: Vec<usize>,
    },
}

impl Fact {
    pub fn holds(&self, g: &Graph) -> Result<bool> {
        Ok(match self {
            Fact::ComponentsComplete { k } => {
                let p = g.power(*k)?;
                p.components().into_iter().all(|c| p.is_clique(c))
            }
            Fact::DiameterAtMost { k } => g.diameter()? <= *k,
            Fact::ClawFree => find_claw(g).is_none(),
            Fact::P5aFree => find_p5a(g).is_none(),
            Fact::NoInducedCycleAtLeast { target, f } => {
                has_induced_cycle_geq(&target.build(g)?, *f)?.is_none()
            }
            Fact::NoInducedCycleOfLength { target, l } => {
                let h = target.build(g)?;
                let order = h.order();
                enumerate_induced_cycles_bounded(&h, *l, Some(*l), order)?.is_empty()
            }
            Fact::NoCycleOfLength { l } => !simple_cycles_by_length(g).contains_key(l),
            Fact::SufficientApplicable => check_sufficient_chordalsq(g)?.applicable,
            Fact::NoUnwitheredFlower { min_size, max_size } => {
                for size in *min_size..=*max_size {
                    if find_unwithered_flower(g, size)?.is_some() {
                        return Ok(false);
                    }
                }
                true
            }
            Fact::NoUnsuspendedSunflower { target, min_size } => {
                let h = target.build(g)?;
                for size in *min_size..=h.order() / 2 {
                    if find_unsuspended_sunflower(&h, size)?.is_some() {
                        return Ok(false);
                    }
                }
                true
            }
            Fact::NoFertileSprout { sizes } => {
                for &size in sizes {
                    if find_fertile_sprout(g, size)?.is_some() {
                        return Ok(false);
                    }
                }
                true
            }
        })
    }
}

/// Evidence attached to a counterexample. Each variant is checked on its
/// own by [`Certificate::verify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// An induced cycle of length at least 4 in the target.
    Hole {
        target: Target,
        cycle: Vec<usize>,
    },
    /// A perfect elimination ordering of the target.
    Peo {
        target: Target,
        order: Vec<usize>,
    },
    /// A cycle of `G`, not necessarily induced.
    Cycle {
        cycle: Vec<usize>,
    },
    /// `a` and `b` are connected in `G` at distance more than `k`.
    FarPair {
        a: usize,
        b: usize,
        k: usize,
    },
    /// A hole of `G^k` two of whose consecutive edges, starting at
    /// position `at`, lie in `G^r`.
    ConsecutiveEdges {
        k: usize,
        r: usize,
        cycle: Vec<usize>,
        at: usize,
    },
    /// A hole of `G^k` with more than half of its edges in `G^r`.
    ManyEdges {
        k: usize,
        r: usize,
        cycle: Vec<usize>,
    },
    Flower {
        witness: FlowerWitness,
    },
    Sprout {
        witness: SproutWitness,
    },
    Sunflower {
        target: Target,
        witness: SunflowerWitness,
    },
    Fact {
        fact: Fact,
    },
}

impl Certificate {
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        Ok(match self {
            Certificate::Hole { target, cycle } => {
                cycle.len() >= 4 && is_induced_cycle(&target.build(g)?, cycle)
            }
            Certificate::Peo { target, order } => {
                matches!(check_peo(&target.build(g)?, order), Ok(PeoCheck::Ok))
            }
            Certificate::Cycle { cycle } => is_cycle(g, cycle),
            Certificate::FarPair { a, b, k } => {
                *a < g.order()
                    && *b < g.order()
                    && g.distances().get(*a, *b).is_some_and(|d| d > *k)
            }
            Certificate::ConsecutiveEdges { k, r, cycle, at } => {
                let l = cycle.len();
                let gr = g.power(*r)?;
                l >= 4
                    && *at < l
                    && 2 * r <= *k
                    && is_induced_cycle(&g.power(*k)?, cycle)
                    && gr.has_edge(cycle[*at], cycle[(at + 1) % l])
                    && gr.has_edge(cycle[(at + 1) % l], cycle[(at + 2) % l])
            }
            Certificate::ManyEdges { k, r, cycle } => {
                let l = cycle.len();
                let gr = g.power(*r)?;
                let inside = (0..l)
                    .filter(|&i| gr.has_edge(cycle[i], cycle[(i + 1) % l]))
                    .count();
                l >= 4 && 2 * r <= *k && is_induced_cycle(&g.power(*k)?, cycle) && inside > l / 2
            }
            Certificate::Flower { witness } => verify_flower(g, witness).is_ok(),
            Certificate::Sprout { witness } => verify_sprout(g, witness).is_ok(),
            Certificate::Sunflower { target, witness } => {
                verify_sunflower(&target.build(g)?, witness).is_ok()
            }
            Certificate::Fact { fact } => fact.holds(g)?,
        })
    }
}

fn is_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let l = cycle.len();
    let mut seen = vec![false; g.order()];
    l >= 3
        && cycle
            .iter()
            .all(|&v| v < g.order() && !std::mem::replace(&mut seen[v], true))
        && (0..l).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % l]))
}

/// A graph on which a claim fails, with the evidence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub theorem: TheoremId,
    pub graph6: String,
    /// The exponent involved, for claims about powers.
    pub k: Option<usize>,
    pub detail: String,
    pub certificates: Vec<Certificate>,
}

impl Counterexample {
    /// Decodes the graph and checks every certificate against it.
    pub fn reverify(&self) -> Result<bool> {
        let g = parse_graph6(&self.graph6)?;
        for c in &self.certificates {
            if !c.verify(&g)? {
                return Ok(false);
            }
        }
        Ok(!self.certificates.is_empty())
    }
}
