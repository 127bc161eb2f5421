//! Searches for the structures that decide whether a square or a line-graph
//! square is chordal: claws, the bull (P5+a), `F4`, sunflowers, flowers and
//! sprouts, plus the three-part sufficient condition for chordal squares.
//!
//! Every search is brute force over small graphs and returns its hits in a
//! deterministic order. The witnesses it returns are re-checked by the
//! independent verifiers in [`crate::witnesses`] in the test suite.

mod f4;
mod flower;
mod small;
mod sprout;
mod sufficient;
mod sunflower;

use serde::{Deserialize, Serialize};

use crate::graph::Edge;

pub use f4::find_f4;
pub use flower::{find_flowers, find_unwithered_flower};
pub use small::{find_claw, find_p5a};
pub use sprout::{find_fertile_sprout, find_sprouts, SPROUT_EDGE_BOUND};
pub use sufficient::{check_sufficient_chordalsq, SufficientReport};
pub use sunflower::{find_sunflowers, find_unsuspended_sunflower, SUNFLOWER_ORDER_BOUND};

/// Induced `K_{1,3}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClawWitness {
    pub center: usize,
    pub leaves: [usize; 3],
}

/// Induced path `v1..v5` plus the edge `v2v4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct P5aWitness {
    pub path: [usize; 5],
}

/// Induced `F4`: `u[i]` is adjacent to exactly `w[i-1]` and `w[i]`
/// (indices mod 4) and the `w`s form an induced 4-cycle in that order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct F4Witness {
    pub u: [usize; 4],
    pub w: [usize; 4],
    /// A vertex adjacent to `u1, u3` or to `u2, u4`.
    pub suspended_by: Option<usize>,
}

/// Sunflower: `u[i]` is adjacent to exactly `w[i]` and `w[i+1]` (mod n),
/// the `u`s are pairwise non-adjacent and the `w`s induce a chordal graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SunflowerWitness {
    pub u: Vec<usize>,
    pub w: Vec<usize>,
    /// A vertex adjacent to two non-consecutive `u`s.
    pub suspended_by: Option<usize>,
}

/// Flower of size `u.len()`.
///
/// `cycle` is the defining cycle as a vertex sequence starting at `w[0]`;
/// it contains every `w` in order and every non-pending `u`. A pending `u`
/// sits off the cycle next to a cycle edge `w[i] w[i+1]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlowerWitness {
    pub u: Vec<usize>,
    pub w: Vec<usize>,
    pub cycle: Vec<usize>,
    pub pending: Vec<usize>,
    /// A vertex adjacent to two non-consecutive `u`s.
    pub withered_by: Option<usize>,
}

impl FlowerWitness {
    pub fn size(&self) -> usize {
        self.u.len()
    }
}

/// Sprout of size `u_edges.len()`, the edge analogue of a flower.
///
/// `cycle` lists the cycle's edges in traversal order starting at
/// `w_edges[0]`; it consists of all `w`-edges and all non-pending
/// `u`-edges. Every edge is stored with its smaller endpoint first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SproutWitness {
    pub u_edges: Vec<Edge>,
    pub w_edges: Vec<Edge>,
    pub cycle: Vec<Edge>,
    pub pending: Vec<Edge>,
    /// An edge joining endpoints of two non-consecutive `u`-edges.
    pub infertile_by: Option<Edge>,
}

impl SproutWitness {
    pub fn size(&self) -> usize {
        self.u_edges.len()
    }

    pub fn is_fertile(&self) -> bool {
        self.infertile_by.is_none()
    }
}

/// Are positions `i` and `j` neighbours on a cycle of length `n`?
#[inline]
pub(crate) fn cyclically_adjacent(i: usize, j: usize, n: usize) -> bool {
    (i + 1) % n == j || (j + 1) % n == i
}
