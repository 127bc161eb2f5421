//! Brute-force sprout search.
//!
//! The cycle is walked vertex by vertex starting with the smallest `w`-edge
//! `(a, b)`. After each `w`-edge the walk continues with a pending `u`-edge
//! hanging off the current vertex, or with one or two `u`-edges along the
//! cycle, followed by the next `w`-edge. The walk closes when it returns to
//! `a`.

use super::{cyclically_adjacent, SproutWitness};
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

/// Largest edge count accepted by the sprout search.
pub const SPROUT_EDGE_BOUND: usize = 18;

/// All sprouts of `size` in `g`, each annotated with its smallest
/// infertility edge. A sprout traversed in the two directions is reported
/// once.
pub fn find_sprouts(g: &Graph, size: usize) -> Result<Vec<SproutWitness>> {
    let mut out: Vec<SproutWitness> = Vec::new();
    search(g, size, &mut |s| {
        out.push(s);
        true
    })?;
    out.sort_by(|a, b| key(a).cmp(&key(b)).then_with(|| a.cmp(b)));
    out.dedup_by(|a, b| key(a) == key(b));
    Ok(out)
}

/// First fertile sprout of `size` met by the search.
pub fn find_fertile_sprout(g: &Graph, size: usize) -> Result<Option<SproutWitness>> {
    let mut found = None;
    search(g, size, &mut |s| {
        if s.is_fertile() {
            found = Some(s);
            false
        } else {
            true
        }
    })?;
    Ok(found)
}

type Key = (Vec<Edge>, Vec<Edge>, Vec<Edge>, Vec<Edge>);

fn key(s: &SproutWitness) -> Key {
    let sorted = |v: &[Edge]| {
        let mut v = v.to_vec();
        v.sort_unstable();
        v
    };
    (
        sorted(&s.u_edges),
        sorted(&s.w_edges),
        sorted(&s.pending),
        sorted(&s.cycle),
    )
}

#[derive(Clone, Copy, Debug)]
enum Segment {
    Pending(Edge),
    Single(Edge),
    Double(Edge, Edge),
}

impl Segment {
    fn edges(self) -> impl Iterator<Item = Edge> {
        let (a, b) = match self {
            Segment::Pending(x) | Segment::Single(x) => (x, None),
            Segment::Double(x, y) => (x, Some(y)),
        };
        std::iter::once(a).chain(b)
    }
}

struct Walk<'a> {
    g: &'a Graph,
    size: usize,
    start: usize,
    /// cycle vertices in order, starting with `a` and `b`
    path: Vec<usize>,
    on_path: Vec<bool>,
    w: Vec<Edge>,
    segs: Vec<Segment>,
    placed_u: usize,
    returned: bool,
}

impl Walk<'_> {
    fn fresh(&self, v: usize) -> bool {
        !self.on_path[v]
    }

    fn push(&mut self, v: usize) {
        self.path.push(v);
        self.on_path[v] = true;
    }

    fn pop(&mut self, count: usize) {
        for _ in 0..count {
            let v = self.path.pop().unwrap();
            self.on_path[v] = false;
        }
    }

    /// Records `seg` and either closes the walk or continues with the
    /// `w`-edge `(from, to)`, after pushing the cycle vertices in `via`.
    fn place(
        &mut self,
        seg: Segment,
        via: &[usize],
        next_w: Option<(usize, usize)>,
        emit: &mut dyn FnMut(SproutWitness) -> bool,
    ) -> bool {
        let count = seg.edges().count();
        let total = self.placed_u + count;
        match next_w {
            None if total != self.size => return true,
            Some(_) if total >= self.size => return true,
            _ => {}
        }
        if let Some((from, to)) = next_w {
            if edge(from, to) < self.w[0] {
                return true;
            }
        }
        for &v in via {
            self.push(v);
        }
        self.segs.push(seg);
        self.placed_u = total;
        let ok = match next_w {
            None => match self.finish() {
                Some(s) => emit(s),
                None => true,
            },
            Some((from, to)) => {
                self.w.push(edge(from, to));
                let ok = if to == self.start {
                    self.returned = true;
                    let ok = self.step(emit);
                    self.returned = false;
                    ok
                } else {
                    self.push(to);
                    let ok = self.step(emit);
                    self.pop(1);
                    ok
                };
                self.w.pop();
                ok
            }
        };
        self.placed_u -= count;
        self.segs.pop();
        self.pop(via.len());
        ok
    }

    fn step(&mut self, emit: &mut dyn FnMut(SproutWitness) -> bool) -> bool {
        let g = self.g;
        let cur = *self.path.last().unwrap();
        let a = self.start;
        if self.returned {
            // the last w-edge came back to a: only a pending edge can follow
            for x in g.neighbors(a) {
                if !self.place(Segment::Pending(edge(a, x)), &[], None, emit) {
                    return false;
                }
            }
            return true;
        }
        for z in g.neighbors(cur) {
            if !(self.fresh(z) || z == a && self.path.len() > 2) {
                continue;
            }
            for x in g.neighbors(cur) {
                if x != z && !self.place(Segment::Pending(edge(cur, x)), &[], Some((cur, z)), emit)
                {
                    return false;
                }
            }
        }
        for x in g.neighbors(cur) {
            if x == a && self.path.len() > 2 {
                if !self.place(Segment::Single(edge(cur, a)), &[], None, emit) {
                    return false;
                }
                continue;
            }
            if !self.fresh(x) {
                continue;
            }
            for z in g.neighbors(x) {
                if (self.fresh(z) || z == a) && z != x {
                    let seg = Segment::Single(edge(cur, x));
                    if !self.place(seg, &[x], Some((x, z)), emit) {
                        return false;
                    }
                }
            }
        }
        for x in g.neighbors(cur) {
            if !self.fresh(x) {
                continue;
            }
            for y in g.neighbors(x) {
                let seg = Segment::Double(edge(cur, x), edge(x, y));
                if y == a {
                    if !self.place(seg, &[x], None, emit) {
                        return false;
                    }
                    continue;
                }
                if !self.fresh(y) || y == cur {
                    continue;
                }
                for z in g.neighbors(y) {
                    if (self.fresh(z) || z == a)
                        && z != x
                        && !self.place(seg, &[x, y], Some((y, z)), emit)
                    {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Literal check of the sprout conditions on the closed walk.
    fn finish(&self) -> Option<SproutWitness> {
        let g = self.g;
        let q = self.w.len();
        let path = &self.path;
        let cycle_vertices = path.clone();
        let len = cycle_vertices.len();
        if len < 3 {
            return None;
        }
        let cycle_edges: Vec<Edge> = (0..len)
            .map(|i| edge(cycle_vertices[i], cycle_vertices[(i + 1) % len]))
            .collect();
        let mut on_cycle = cycle_edges.clone();
        on_cycle.sort_unstable();
        on_cycle.dedup();
        if on_cycle.len() != len || self.w.iter().any(|w| on_cycle.binary_search(w).is_err()) {
            return None;
        }

        let mut pending = Vec::new();
        let mut by_segment: Vec<Vec<Edge>> = Vec::new();
        for seg in &self.segs {
            if let Segment::Pending(x) = *seg {
                if on_cycle.binary_search(&x).is_ok() {
                    return None;
                }
                pending.push(x);
            } else if seg.edges().any(|x| on_cycle.binary_search(&x).is_err()) {
                return None;
            }
            by_segment.push(seg.edges().collect());
        }
        let mut u: Vec<Edge> = by_segment.last().unwrap().clone();
        for seg in &by_segment[..q - 1] {
            u.extend(seg);
        }
        let n = u.len();
        let mut all: Vec<Edge> = u.iter().chain(&self.w).copied().collect();
        all.sort_unstable();
        all.dedup();
        if n != self.size || all.len() != n + q {
            return None;
        }

        let meets = |e: Edge, f: Edge| e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1;
        for i in 0..n {
            for j in i + 1..n {
                if !cyclically_adjacent(i, j, n) && meets(u[i], u[j]) {
                    return None;
                }
            }
        }
        for (k, seg) in self.segs.iter().enumerate() {
            let (wi, wj) = (self.w[k], self.w[(k + 1) % q]);
            let shared: Vec<usize> = [wi.0, wi.1]
                .into_iter()
                .filter(|&v| v == wj.0 || v == wj.1)
                .collect();
            let is_pending = matches!(seg, Segment::Pending(_));
            if shared.is_empty() == is_pending {
                return None;
            }
            if is_pending {
                let through = u
                    .iter()
                    .filter(|e| shared.iter().any(|&v| e.0 == v || e.1 == v))
                    .count();
                if through != 1 {
                    return None;
                }
            }
        }
        for i in 0..pending.len() {
            for j in i + 1..pending.len() {
                if meets(pending[i], pending[j]) {
                    return None;
                }
            }
        }

        let infertile_by = g.edges().into_iter().find(|&(x, y)| {
            (0..n).any(|i| {
                (0..n).any(|j| {
                    i != j
                        && !cyclically_adjacent(i, j, n)
                        && (u[i].0 == x || u[i].1 == x)
                        && (u[j].0 == y || u[j].1 == y)
                })
            })
        });
        let mut cycle = Vec::with_capacity(len);
        let first = cycle_edges.iter().position(|&e| e == self.w[0])?;
        for i in 0..len {
            cycle.push(cycle_edges[(first + i) % len]);
        }
        pending.sort_unstable();
        Some(SproutWitness {
            u_edges: u,
            w_edges: self.w.clone(),
            cycle,
            pending,
            infertile_by,
        })
    }
}

fn search(g: &Graph, size: usize, emit: &mut dyn FnMut(SproutWitness) -> bool) -> Result<()> {
    assert!(size >= 3, "sprouts have size at least 3");
    if g.size() > SPROUT_EDGE_BOUND {
        return Err(Error::TooLarge {
            size: g.size(),
            bound: SPROUT_EDGE_BOUND,
        });
    }
    if size + size.div_ceil(2) > g.size() {
        return Ok(());
    }
    for (x, y) in g.edges() {
        for (a, b) in [(x, y), (y, x)] {
            let mut walk = Walk {
                g,
                size,
                start: a,
                path: Vec::new(),
                on_path: vec![false; g.order()],
                w: vec![edge(a, b)],
                segs: Vec::new(),
                placed_u: 0,
                returned: false,
            };
            walk.push(a);
            walk.push(b);
            if !walk.step(emit) {
                return Ok(());
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn c6_sprouts_of_size_4() {
        let g = Graph::cycle(6);
        let found = find_sprouts(&g, 4).unwrap();
        assert_eq!(found.len(), 3);
        assert!(found.iter().all(SproutWitness::is_fertile));
        let s = found
            .iter()
            .find(|s| {
                let mut w = s.w_edges.clone();
                w.sort_unstable();
                w == vec![(0, 5), (2, 3)]
            })
            .unwrap();
        let mut u = s.u_edges.clone();
        u.sort_unstable();
        assert_eq!(u, vec![(0, 1), (1, 2), (3, 4), (4, 5)]);
        assert!(s.pending.is_empty());
        assert_eq!(s.cycle.len(), 6);
        assert_eq!(s.cycle[0], s.w_edges[0]);
    }

    #[test]
    fn c5_with_two_pendant_edges() {
        let g = families::sprout_c5_pendants();
        let found = find_sprouts(&g, 4).unwrap();
        let s = found
            .iter()
            .find(|s| s.w_edges.len() == 3 && s.pending.len() == 2)
            .expect("q = 3 sprout with two pending edges");
        assert!(s.is_fertile());
        assert_eq!(s.pending, vec![(2, 5), (3, 6)]);
    }

    #[test]
    fn too_few_edges() {
        assert!(find_sprouts(&Graph::star(3), 4).unwrap().is_empty());
    }

    #[test]
    fn refuses_too_many_edges() {
        assert!(find_sprouts(&Graph::complete(7), 4).is_err());
    }
}
