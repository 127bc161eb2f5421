//! Canonical forms for isomorphism rejection.
//!
//! Colour refinement to an equitable ordered partition, then a backtracking
//! search that individualises one vertex of the first non-singleton cell at a
//! time. Every leaf is a vertex ordering; the canonical form is the largest
//! upper-triangle adjacency string over all leaves. Interchangeable twins
//! (`N(a) - b == N(b) - a`) are only branched on once, since swapping them is
//! an automorphism that fixes the current partition.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default order bound for canonical forms and the exhaustive tooling.
pub const CANONICAL_ORDER_BOUND: usize = 12;

/// Relabelling-invariant byte string: order byte followed by the packed
/// upper triangle of the canonically ordered adjacency matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Canonical form of a graph with at most [`CANONICAL_ORDER_BOUND`] vertices.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_form_bounded(g, CANONICAL_ORDER_BOUND)
}

pub fn canonical_form_bounded(g: &Graph, bound: usize) -> Result<CanonicalForm> {
    Ok(canonical_labeling_bounded(g, bound)?.0)
}

/// Canonical form plus the ordering that realises it: `order[i]` is the
/// vertex placed at position `i`.
pub fn canonical_labeling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    canonical_labeling_bounded(g, CANONICAL_ORDER_BOUND)
}

fn canonical_labeling_bounded(g: &Graph, bound: usize) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.order();
    if n > bound {
        return Err(Error::TooLarge { size: n, bound });
    }
    let mut search = Search { g, best: None };
    let start = if n == 0 {
        vec![]
    } else {
        vec![(0..n).collect()]
    };
    search.descend(start);
    let (bits, order) = search.best.unwrap_or_default();
    let mut bytes = vec![n as u8];
    bytes.extend(pack(&bits));
    Ok((CanonicalForm(bytes), order))
}

/// The canonical representative: `g` relabelled by its canonical ordering.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let (_, order) = canonical_labeling(g)?;
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.size() != b.size() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

fn pack(bits: &[bool]) -> Vec<u8> {
    bits.chunks(8)
        .map(|c| {
            c.iter()
                .enumerate()
                .fold(0u8, |acc, (i, &b)| acc | (u8::from(b) << (7 - i)))
        })
        .collect()
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<bool>, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Cells) {
        let cells = refine(self.g, cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(cells.into_iter().flatten().collect());
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&t| twins(self.g, t, v)) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = next[target].iter().copied().filter(|&x| x != v).collect();
            next[target] = vec![v];
            next.insert(target + 1, rest);
            self.descend(next);
        }
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let n = order.len();
        let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for j in 1..n {
            for i in 0..j {
                bits.push(self.g.has_edge(order[i], order[j]));
            }
        }
        match &self.best {
            Some((b, _)) if *b >= bits => {}
            _ => self.best = Some((bits, order)),
        }
    }
}

fn twins(g: &Graph, a: usize, b: usize) -> bool {
    let mut na = g.neighbors(a);
    let mut nb = g.neighbors(b);
    na.remove(b);
    nb.remove(a);
    na == nb
}

/// Splits cells by neighbour counts into each splitter cell until the
/// partition is equitable. New fragments replace the split cell in
/// increasing order of count, so the result depends only on structure.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: VertexSet = cells[s].iter().collect();
            let mut i = 0;
            while i < cells.len() {
                if cells[i].len() > 1 {
                    let mut keyed: Vec<(usize, usize)> = cells[i]
                        .iter()
                        .map(|&v| ((g.neighbors(v) & splitter).len(), v))
                        .collect();
                    keyed.sort_by_key(|&(k, _)| k);
                    if keyed.first().map(|p| p.0) != keyed.last().map(|p| p.0) {
                        let mut parts: Cells = Vec::new();
                        let mut last = usize::MAX;
                        for (k, v) in keyed {
                            if k != last {
                                parts.push(Vec::new());
                                last = k;
                            }
                            parts.last_mut().unwrap().push(v);
                        }
                        let count = parts.len();
                        cells.splice(i..=i, parts);
                        i += count;
                        changed = true;
                        continue;
                    }
                }
                i += 1;
            }
            s += 1;
        }
        if !changed {
            return cells;
        }
    }
}
