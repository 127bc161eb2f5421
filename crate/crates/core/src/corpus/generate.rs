use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for exhaustive generation.
pub const EXHAUSTIVE_ORDER_BOUND: usize = 8;

/// One representative of every isomorphism class of graphs on `n` vertices,
/// optionally only the connected ones.
///
/// Classes are grown one edge at a time: every graph with `m + 1` edges
/// arises from one with `m` edges by adding an edge, so adding every
/// missing edge to every class of level `m` and keeping one graph per
/// canonical form yields level `m + 1`. Representatives are the canonical
/// graphs, listed by edge count and then by canonical form.
pub fn generate_all(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    if n > EXHAUSTIVE_ORDER_BOUND {
        return Err(Error::TooLarge {
            size: n,
            bound: EXHAUSTIVE_ORDER_BOUND,
        });
    }
    let start = Graph::empty(n)?;
    let mut level = vec![(canonical_form(&start)?, canonical_graph(&start)?)];
    let mut out = Vec::new();
    let max_edges = n * n.saturating_sub(1) / 2;
    for _ in 0..=max_edges {
        let next = grow(&level)?;
        out.extend(level.into_iter().map(|(_, g)| g));
        level = next;
    }
    if connected_only {
        out.retain(Graph::is_connected);
    }
    Ok(out)
}

/// All classes on `1..=n_max` vertices, smallest order first.
pub fn generate_up_to(n_max: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(generate_all(n, connected_only)?);
    }
    Ok(out)
}

fn grow(level: &[(CanonicalForm, Graph)]) -> Result<Vec<(CanonicalForm, Graph)>> {
    let children: Vec<Vec<(CanonicalForm, Graph)>> = level
        .par_iter()
        .map(|(_, g)| {
            let n = g.order();
            let mut seen = HashSet::new();
            let mut kids = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    if g.has_edge(i, j) {
                        continue;
                    }
                    let h = canonical_graph(&g.with_edges(&[(i, j)])?)?;
                    let form = canonical_form(&h)?;
                    if seen.insert(form.clone()) {
                        kids.push((form, h));
                    }
                }
            }
            Ok(kids)
        })
        .collect::<Result<_>>()?;
    let mut next: Vec<(CanonicalForm, Graph)> = children.into_iter().flatten().collect();
    next.sort_by(|a, b| a.0.cmp(&b.0));
    next.dedup_by(|a, b| a.0 == b.0);
    Ok(next)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Number of classes by brute force: each labelled graph is reduced to
    /// the smallest adjacency bit string over all vertex permutations.
    fn brute_force_classes(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let mut perms = vec![vec![]];
        for k in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p: Vec<usize>| {
                    (0..=k).map(move |pos| {
                        let mut q = p.clone();
                        q.insert(pos, k);
                        q
                    })
                })
                .collect();
        }
        let index = |i: usize, j: usize| {
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            b * (b - 1) / 2 + a
        };
        let mut classes = HashSet::new();
        for mask in 0u32..1 << pairs.len() {
            let min = perms
                .iter()
                .map(|p| {
                    pairs
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| mask >> k & 1 == 1)
                        .fold(0u32, |acc, (_, &(i, j))| acc | 1 << index(p[i], p[j]))
                })
                .min()
                .unwrap();
            classes.insert(min);
        }
        classes.len()
    }

    #[test]
    fn small_counts_match_brute_force() {
        for n in 1..=5 {
            assert_eq!(
                generate_all(n, false).unwrap().len(),
                brute_force_classes(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn counts_up_to_seven() {
        let all: Vec<usize> = (1..=7)
            .map(|n| generate_all(n, false).unwrap().len())
            .collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156, 1044]);
        let connected: Vec<usize> = (1..=7)
            .map(|n| generate_all(n, true).unwrap().len())
            .collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn representatives_are_pairwise_non_isomorphic() {
        let graphs = generate_all(6, false).unwrap();
        let forms: HashSet<CanonicalForm> =
            graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(forms.len(), graphs.len());
    }

    #[test]
    fn deterministic_and_bounded() {
        assert_eq!(
            generate_all(5, false).unwrap(),
            generate_all(5, false).unwrap()
        );
        assert!(generate_all(9, false).is_err());
        assert_eq!(generate_all(0, false).unwrap().len(), 1);
    }
}
