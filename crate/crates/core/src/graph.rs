//! The immutable simple-graph value type and the transformations the rest of
//! the crate is built on: distances, powers, line graphs and induced
//! subgraphs.
//!
//! Vertices are dense ids `0..n`. Adjacency is one [`VertexSet`] per vertex,
//! so neighbourhood intersections are a handful of word operations.

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// An unordered vertex pair, always stored with the smaller id first.
pub type Edge = (usize, usize);

/// Normalises a pair so the smaller endpoint comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Simple undirected graph on the vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                size: n,
                bound: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::new(); n],
        })
    }

    /// Builds a graph from a list of vertex pairs. Repeated pairs collapse to
    /// one edge; self-loops and out-of-range ids are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::OutOfRange {
                        vertex: x,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency sets. The caller guarantees symmetry and
    /// irreflexivity.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(i, s)| !s.contains(i) && s.iter().all(|j| j < adj.len() && adj[j].contains(i))));
        Graph { n: adj.len(), adj }
    }

    pub fn complete(n: usize) -> Graph {
        let all = VertexSet::full(n);
        let adj = (0..n)
            .map(|v| {
                let mut s = all;
                s.remove(v);
                s
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).expect("path edges are valid")
    }

    /// The cycle `0-1-..-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).expect("cycle edges are valid")
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edge_list(leaves + 1, &edges).expect("star edges are valid")
    }

    /// Disjoint union, with the vertices of `other` shifted past ours.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        let mut edges = self.edges();
        edges.extend(
            other
                .edges()
                .into_iter()
                .map(|(u, v)| (u + shift, v + shift)),
        );
        Graph::from_edge_list(self.n + other.n, &edges)
    }

    /// Returns a copy with one extra vertex `n` joined to `neighbors`.
    pub fn with_vertex(&self, neighbors: &[usize]) -> Result<Graph> {
        let new = self.n;
        let mut edges = self.edges();
        edges.extend(neighbors.iter().map(|&u| (u, new)));
        Graph::from_edge_list(self.n + 1, &edges)
    }

    /// Returns a copy with the given extra edges.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Graph> {
        let mut edges = self.edges();
        edges.extend_from_slice(extra);
        Graph::from_edge_list(self.n, &edges)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(self.n, perm)?;
        let edges: Vec<_> = self
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::from_edge_list(self.n, &edges)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (set - self.adj[v]).len() == 1)
    }

    pub fn is_stable(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(&set))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertices()).len() == self.n
    }

    /// Vertices reachable from `start` inside `allowed`.
    pub(crate) fn reach(&self, start: usize, allowed: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::new();
            for v in frontier {
                next |= self.adj[v];
            }
            next = (next & allowed) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Shortest path from `from` to `to` using only vertices of `allowed`
    /// (the endpoints are always allowed).
    pub fn shortest_path_within(
        &self,
        from: usize,
        to: usize,
        allowed: VertexSet,
    ) -> Option<Vec<usize>> {
        let mut allowed = allowed;
        allowed.insert(to);
        let mut parent = vec![usize::MAX; self.n];
        let mut seen = VertexSet::singleton(from);
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for u in (self.adj[v] & allowed) - seen {
                seen.insert(u);
                parent[u] = v;
                queue.push_back(u);
            }
        }
        None
    }

    /// Connected components, each listed in increasing id order, components
    /// ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reach(v, left);
            left = left - c;
            out.push(c);
        }
        out
    }

    /// All-pairs hop distances by breadth-first search.
    pub fn distances(&self) -> DistanceMatrix {
        let n = self.n;
        let mut d = vec![DistanceMatrix::UNREACHABLE; n * n];
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            let mut seen = VertexSet::singleton(s);
            let mut frontier = seen;
            let mut level = 0;
            while !frontier.is_empty() {
                level += 1;
                let mut next = VertexSet::new();
                for v in frontier {
                    next |= self.adj[v];
                }
                next = next - seen;
                for v in next {
                    row[v] = level;
                }
                seen |= next;
                frontier = next;
            }
        }
        DistanceMatrix { n, d }
    }

    /// Largest distance inside any component; 0 for edgeless graphs.
    pub fn diameter(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let dist = self.distances();
        let mut best = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if let Some(d) = dist.get(i, j) {
                    best = best.max(d);
                }
            }
        }
        Ok(best)
    }

    /// The `k`-th power: `x ~ y` iff `1 <= dist(x, y) <= k`. Components stay
    /// separate.
    pub fn power(&self, k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::ZeroPower);
        }
        let adj = (0..self.n)
            .map(|s| {
                let mut seen = VertexSet::singleton(s);
                let mut frontier = seen;
                for _ in 0..k {
                    let mut next = VertexSet::new();
                    for v in frontier {
                        next |= self.adj[v];
                    }
                    next = next - seen;
                    if next.is_empty() {
                        break;
                    }
                    seen |= next;
                    frontier = next;
                }
                seen.remove(s);
                seen
            })
            .collect();
        Ok(Graph::from_adjacency(adj))
    }

    /// The square, i.e. `power(2)`.
    pub fn square(&self) -> Graph {
        self.power(2).expect("k = 2 is valid")
    }

    /// Line graph with its vertices in lexicographic order of the edges.
    pub fn line_graph(&self) -> LineGraphMap {
        let edges = self.edges();
        let m = edges.len();
        assert!(m <= MAX_VERTICES, "line graph exceeds vertex capacity");
        // incident[v] = line-graph vertices whose edge touches v
        let mut incident = vec![VertexSet::new(); self.n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            incident[a].insert(i);
            incident[b].insert(i);
        }
        let adj = edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| {
                let mut s = incident[a] | incident[b];
                s.remove(i);
                s
            })
            .collect();
        LineGraphMap {
            lg: Graph::from_adjacency(adj),
            edge_of_vertex: edges,
        }
    }

    /// The subgraph induced by `vertices`, relabelled `0..k` in the order
    /// given, together with the map from new ids back to old ones.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::OutOfRange {
                    vertex: v,
                    order: self.n,
                });
            }
            pos[v] = i;
        }
        let set: VertexSet = vertices.iter().collect();
        let adj = vertices
            .iter()
            .map(|&v| (self.adj[v] & set).iter().map(|u| pos[u]).collect())
            .collect();
        Ok((Graph::from_adjacency(adj), vertices.to_vec()))
    }

    /// Induced subgraph on a set, keeping increasing id order.
    pub fn induced_on(&self, set: VertexSet) -> Graph {
        self.induced_subgraph(&set.to_vec())
            .expect("set members are vertices")
            .0
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.n)
            .map(|v| {
                let mut s = all - self.adj[v];
                s.remove(v);
                s
            })
            .collect();
        Graph::from_adjacency(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

pub(crate) fn check_permutation(n: usize, order: &[usize]) -> Result<()> {
    if order.len() != n {
        return Err(Error::NotAPermutation);
    }
    let mut seen = VertexSet::new();
    for &v in order {
        if v >= n || !seen.insert(v) {
            return Err(Error::NotAPermutation);
        }
    }
    Ok(())
}

/// Hop distances between all vertex pairs.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<usize>,
}

impl DistanceMatrix {
    /// Sentinel stored for pairs in different components.
    pub const UNREACHABLE: usize = usize::MAX;

    /// Distance, or `None` across components.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Option<usize> {
        match self.d[i * self.n + j] {
            DistanceMatrix::UNREACHABLE => None,
            d => Some(d),
        }
    }

    /// Raw entry, [`DistanceMatrix::UNREACHABLE`] across components.
    #[inline]
    pub fn raw(&self, i: usize, j: usize) -> usize {
        self.d[i * self.n + j]
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

impl fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<Option<usize>>> = (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

/// A line graph together with the edge of the base graph each of its
/// vertices stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGraphMap {
    pub lg: Graph,
    pub edge_of_vertex: Vec<Edge>,
}

impl LineGraphMap {
    /// Line-graph vertex of a base-graph edge.
    pub fn vertex_of_edge(&self, e: Edge) -> Option<usize> {
        self.edge_of_vertex.binary_search(&edge(e.0, e.1)).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edge_list_examples() {
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(p4, Graph::path(4));
        let e3 = Graph::from_edge_list(3, &[]).unwrap();
        assert_eq!(e3.size(), 0);
        assert_eq!(e3.order(), 3);
        assert_eq!(Graph::from_edge_list(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(Error::OutOfRange {
                vertex: 2,
                order: 2
            })
        );
        let dup = Graph::from_edge_list(2, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.size(), 1);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(Graph::path(4).distances().get(0, 3), Some(3));
        let k4 = Graph::complete(4).distances();
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(k4.get(i, j), Some(usize::from(i != j)));
            }
        }
        let split = Graph::complete(2)
            .disjoint_union(&Graph::complete(1))
            .unwrap();
        let d = split.distances();
        assert_eq!(d.get(0, 2), None);
        assert_eq!(d.raw(0, 2), DistanceMatrix::UNREACHABLE);
    }

    #[test]
    fn diameter_examples() {
        assert_eq!(Graph::path(5).diameter(), Ok(4));
        let k2k3 = Graph::complete(2)
            .disjoint_union(&Graph::complete(3))
            .unwrap();
        assert_eq!(k2k3.diameter(), Ok(1));
        assert_eq!(Graph::empty(1).unwrap().diameter(), Ok(0));
        assert_eq!(Graph::empty(0).unwrap().diameter(), Err(Error::EmptyGraph));
    }

    #[test]
    fn power_examples() {
        assert_eq!(Graph::cycle(5).power(2).unwrap(), Graph::complete(5));
        assert_eq!(Graph::path(3).power(1).unwrap(), Graph::path(3));
        assert_eq!(Graph::path(3).power(0), Err(Error::ZeroPower));
        // powers never join components
        let g = Graph::path(2).disjoint_union(&Graph::path(2)).unwrap();
        assert_eq!(g.power(5).unwrap(), g);
    }

    #[test]
    fn line_graph_examples() {
        let claw = Graph::line_graph(&Graph::star(3));
        assert_eq!(claw.lg, Graph::complete(3));
        let c5 = Graph::cycle(5).line_graph();
        assert_eq!(c5.lg.order(), 5);
        assert!((0..5).all(|v| c5.lg.degree(v) == 2));
        assert!(c5.lg.is_connected());
        assert_eq!(Graph::path(4).line_graph().lg, Graph::path(3));
        assert_eq!(c5.edge_of_vertex[0], (0, 1));
        assert_eq!(c5.vertex_of_edge((4, 0)), Some(1));
    }

    #[test]
    fn induced_subgraph_examples() {
        let (k3, map) = Graph::complete(4).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(map, vec![0, 1, 2]);
        let (p3, _) = Graph::cycle(5).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(p3, Graph::path(3));
        let (e, _) = Graph::cycle(5).induced_subgraph(&[]).unwrap();
        assert_eq!(e.order(), 0);
        assert!(Graph::cycle(5).induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn components_examples() {
        let k2k3 = Graph::complete(2)
            .disjoint_union(&Graph::complete(3))
            .unwrap();
        let sizes: Vec<_> = k2k3.components().iter().map(VertexSet::len).collect();
        assert_eq!(sizes, vec![2, 3]);
        assert_eq!(Graph::cycle(6).components().len(), 1);
        assert_eq!(Graph::empty(3).unwrap().components().len(), 3);
    }

    #[test]
    fn shortest_path_respects_allowed_set() {
        let c6 = Graph::cycle(6);
        let all = c6.vertices();
        assert_eq!(c6.shortest_path_within(0, 2, all), Some(vec![0, 1, 2]));
        let mut no1 = all;
        no1.remove(1);
        assert_eq!(
            c6.shortest_path_within(0, 2, no1),
            Some(vec![0, 5, 4, 3, 2])
        );
    }
}
