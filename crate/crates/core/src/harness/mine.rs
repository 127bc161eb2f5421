use serde::{Deserialize, Serialize};

use super::checks::target_chordal;
use crate::bitset::VertexSet;
use crate::canon::canonical_form;
use crate::corpus::{generate_up_to, EXHAUSTIVE_ORDER_BOUND};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Which square the miner looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MineTarget {
    /// `G²`
    Square,
    /// `L(G)²`
    LgSquare,
}

/// Minimal obstructions up to `n_max` vertices: graphs whose target square
/// is not chordal while the target square of every proper induced subgraph
/// is. Taking a subgraph can shorten no distance, so the property is not
/// hereditary and all vertex subsets are checked, not only single
/// deletions. The result is sorted by order, then canonical form.
pub fn mine_obstructions(target: MineTarget, n_max: usize) -> Result<Vec<Graph>> {
    if n_max > EXHAUSTIVE_ORDER_BOUND {
        return Err(Error::TooLarge {
            size: n_max,
            bound: EXHAUSTIVE_ORDER_BOUND,
        });
    }
    let line = target == MineTarget::LgSquare;
    let mut out: Vec<(usize, Vec<u8>, Graph)> = Vec::new();
    for g in generate_up_to(n_max, false)? {
        if target_chordal(&g, line) || !is_minimal(&g, line) {
            continue;
        }
        let key = canonical_form(&g)?.as_bytes().to_vec();
        out.push((g.order(), key, g));
    }
    out.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(out.into_iter().map(|(_, _, g)| g).collect())
}

fn is_minimal(g: &Graph, line: bool) -> bool {
    let n = g.order();
    (1u64..(1u64 << n) - 1).all(|mask| {
        let set: VertexSet = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        set.len() < 4 && !line || target_chordal(&g.induced_on(set), line)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;

    #[test]
    fn no_square_obstruction_on_four_vertices() {
        assert!(mine_obstructions(MineTarget::Square, 4).unwrap().is_empty());
    }

    #[test]
    fn no_line_graph_square_obstruction_on_four_vertices() {
        assert!(mine_obstructions(MineTarget::LgSquare, 4)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn c6_is_a_line_graph_square_obstruction() {
        let found = mine_obstructions(MineTarget::LgSquare, 6).unwrap();
        let c6 = Graph::cycle(6);
        assert!(found.iter().any(|g| is_isomorphic(g, &c6).unwrap()));
        for g in &found {
            assert!(!target_chordal(g, true));
        }
    }

    #[test]
    fn refuses_large_orders() {
        assert!(mine_obstructions(MineTarget::Square, 9).is_err());
    }
}
