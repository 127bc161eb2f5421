//! Brute-force flower search.
//!
//! A flower is walked as a cycle `w1, seg1, w2, seg2, .., wq, segq` starting
//! at its smallest `w`. Each segment is one of
//!
//! * pending: `wi wi+1` is a cycle edge and an off-cycle `u` sees both ends,
//! * single: one `u` on the cycle between `wi` and `wi+1`,
//! * double: two adjacent `u`s on the cycle between them.
//!
//! While growing, a placed vertex that already sees too much cuts the
//! branch; the closed structure is then checked in full before it is
//! reported.

use super::{cyclically_adjacent, FlowerWitness};
use crate::bitset::VertexSet;
use crate::canon::CANONICAL_ORDER_BOUND;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// All flowers of `size` in `g`, each annotated with its smallest withering
/// vertex. A flower traversed in the two directions is reported once.
pub fn find_flowers(g: &Graph, size: usize) -> Result<Vec<FlowerWitness>> {
    let mut out: Vec<FlowerWitness> = Vec::new();
    search(g, size, &mut |f| {
        out.push(f);
        true
    })?;
    out.sort_by(|a, b| key(a).cmp(&key(b)).then_with(|| a.cmp(b)));
    out.dedup_by(|a, b| key(a) == key(b));
    Ok(out)
}

/// First unwithered flower of `size` met by the search.
pub fn find_unwithered_flower(g: &Graph, size: usize) -> Result<Option<FlowerWitness>> {
    let mut found = None;
    search(g, size, &mut |f| {
        if f.withered_by.is_none() {
            found = Some(f);
            false
        } else {
            true
        }
    })?;
    Ok(found)
}

type Key = (Vec<usize>, Vec<usize>, Vec<usize>, Vec<usize>);

fn key(f: &FlowerWitness) -> Key {
    let sorted = |v: &[usize]| {
        let mut v = v.to_vec();
        v.sort_unstable();
        v
    };
    (
        sorted(&f.u),
        sorted(&f.w),
        sorted(&f.pending),
        cycle_normal_form(&f.cycle),
    )
}

fn cycle_normal_form(c: &[usize]) -> Vec<usize> {
    let l = c.len();
    let start = (0..l).min_by_key(|&i| c[i]).unwrap_or(0);
    let mut v = c.to_vec();
    v.rotate_left(start);
    if l > 2 && v[l - 1] < v[1] {
        v[1..].reverse();
    }
    v
}

#[derive(Clone, Copy, Debug)]
enum Segment {
    Pending(usize),
    Single(usize),
    Double(usize, usize),
}

impl Segment {
    fn us(self) -> impl Iterator<Item = usize> {
        let (a, b) = match self {
            Segment::Pending(x) | Segment::Single(x) => (x, None),
            Segment::Double(x, y) => (x, Some(y)),
        };
        std::iter::once(a).chain(b)
    }

    fn count(self) -> usize {
        match self {
            Segment::Double(..) => 2,
            _ => 1,
        }
    }

    /// The `u`s of this segment that see the `w` ending it.
    fn seen_by_end(self) -> VertexSet {
        match self {
            Segment::Pending(x) | Segment::Single(x) => VertexSet::singleton(x),
            Segment::Double(_, y) => VertexSet::singleton(y),
        }
    }
}

struct Walk<'a> {
    g: &'a Graph,
    size: usize,
    w: Vec<usize>,
    segs: Vec<Segment>,
    used: VertexSet,
    uset: VertexSet,
    wset: VertexSet,
    /// u vertices in order of appearance
    order: Vec<usize>,
}

impl Walk<'_> {
    fn placed_u(&self) -> usize {
        self.order.len()
    }

    /// Cheap necessary conditions for placing `x` as a `u` that must see
    /// exactly `sees` among the `w`s placed so far plus `next`.
    fn u_fits(&self, x: usize, sees: VertexSet, next: usize) -> bool {
        if self.used.contains(x) || x == next {
            return false;
        }
        let mut w = self.wset;
        w.insert(next);
        if self.g.neighbors(x) & w != sees {
            return false;
        }
        let mut allowed = VertexSet::new();
        if let (Some(&first), Some(&last)) = (self.order.first(), self.order.last()) {
            allowed.insert(first);
            allowed.insert(last);
        }
        (self.g.neighbors(x) & self.uset).is_subset(&allowed)
    }

    /// `next` as a new `w` may only see the `u`s of the segment before it
    /// that are attached to it.
    fn w_fits(&self, next: usize, seg: Segment) -> bool {
        if self.used.contains(next) || next < self.w[0] || seg.us().any(|x| x == next) {
            return false;
        }
        let us: VertexSet = self.uset | seg.us().collect();
        self.g.neighbors(next) & us == seg.seen_by_end()
    }

    /// Tries `seg` followed by `next`; returns false to stop the search.
    fn try_segment(
        &mut self,
        seg: Segment,
        next: usize,
        emit: &mut dyn FnMut(FlowerWitness) -> bool,
    ) -> bool {
        let closing = next == self.w[0];
        let total = self.placed_u() + seg.count();
        if total > self.size || (closing && total != self.size) {
            return true;
        }
        // another segment must still fit after a non-closing one
        if !closing && total + 1 > self.size {
            return true;
        }
        if !closing && !self.w_fits(next, seg) {
            return true;
        }
        for x in seg.us() {
            self.used.insert(x);
            self.uset.insert(x);
            self.order.push(x);
        }
        self.segs.push(seg);
        let ok = if closing {
            match self.finish() {
                Some(f) => emit(f),
                None => true,
            }
        } else {
            self.w.push(next);
            self.wset.insert(next);
            self.used.insert(next);
            let ok = self.step(emit);
            self.used.remove(next);
            self.wset.remove(next);
            self.w.pop();
            ok
        };
        self.segs.pop();
        for x in seg.us() {
            self.used.remove(x);
            self.uset.remove(x);
            self.order.pop();
        }
        ok
    }

    fn step(&mut self, emit: &mut dyn FnMut(FlowerWitness) -> bool) -> bool {
        let g = self.g;
        let cur = *self.w.last().unwrap();
        let pair = |a: usize, b: usize| VertexSet::singleton(a) | VertexSet::singleton(b);

        for next in g.neighbors(cur) {
            for x in g.neighbors(cur) & g.neighbors(next) {
                if self.u_fits(x, pair(cur, next), next)
                    && !self.try_segment(Segment::Pending(x), next, emit)
                {
                    return false;
                }
            }
        }
        for x in g.neighbors(cur) {
            for next in g.neighbors(x) {
                if next != cur
                    && self.u_fits(x, pair(cur, next), next)
                    && !self.try_segment(Segment::Single(x), next, emit)
                {
                    return false;
                }
            }
        }
        for x in g.neighbors(cur) {
            for y in g.neighbors(x) {
                if y == cur {
                    continue;
                }
                for next in g.neighbors(y) {
                    if next == x || next == cur {
                        continue;
                    }
                    if !self.u_fits(x, VertexSet::singleton(cur), next) {
                        continue;
                    }
                    // y is checked with x in place
                    self.used.insert(x);
                    self.uset.insert(x);
                    self.order.push(x);
                    let fits = y != x && self.u_fits(y, VertexSet::singleton(next), next);
                    self.order.pop();
                    self.uset.remove(x);
                    self.used.remove(x);
                    if fits && !self.try_segment(Segment::Double(x, y), next, emit) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Full check of the closed structure. `u1` is the first `u` of the
    /// closing segment.
    fn finish(&self) -> Option<FlowerWitness> {
        let g = self.g;
        let q = self.w.len();
        let mut cycle = Vec::new();
        let mut sees = Vec::new();
        let mut pending = Vec::new();
        let mut u_by_segment: Vec<Vec<usize>> = Vec::new();
        for (k, seg) in self.segs.iter().enumerate() {
            let a = self.w[k];
            let b = self.w[(k + 1) % q];
            cycle.push(a);
            match *seg {
                Segment::Pending(x) => {
                    pending.push(x);
                    sees.push((x, VertexSet::singleton(a) | VertexSet::singleton(b)));
                }
                Segment::Single(x) => {
                    cycle.push(x);
                    sees.push((x, VertexSet::singleton(a) | VertexSet::singleton(b)));
                }
                Segment::Double(x, y) => {
                    cycle.extend([x, y]);
                    sees.push((x, VertexSet::singleton(a)));
                    sees.push((y, VertexSet::singleton(b)));
                }
            }
            u_by_segment.push(seg.us().collect());
        }
        let n = self.order.len();
        if n != self.size || cycle.len() < 3 {
            return None;
        }
        let all: VertexSet = cycle.iter().chain(&pending).collect();
        if all.len() != cycle.len() + pending.len() {
            return None;
        }
        if sees.iter().any(|&(x, s)| g.neighbors(x) & self.wset != s) {
            return None;
        }
        let mut u: Vec<usize> = u_by_segment.last().unwrap().clone();
        for seg in &u_by_segment[..q - 1] {
            u.extend(seg);
        }
        for i in 0..n {
            for j in i + 1..n {
                if !cyclically_adjacent(i, j, n) && g.has_edge(u[i], u[j]) {
                    return None;
                }
            }
        }
        // a pending u sees exactly its two w's inside the flower
        if pending
            .iter()
            .any(|&p| !g.neighbors(p).is_disjoint(&self.uset))
        {
            return None;
        }
        let withered_by = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| !cyclically_adjacent(i, j, n))
            .filter_map(|(i, j)| (g.neighbors(u[i]) & g.neighbors(u[j])).first())
            .min();
        pending.sort_unstable();
        Some(FlowerWitness {
            u,
            w: self.w.clone(),
            cycle,
            pending,
            withered_by,
        })
    }
}

fn search(g: &Graph, size: usize, emit: &mut dyn FnMut(FlowerWitness) -> bool) -> Result<()> {
    assert!(size >= 3, "flowers have size at least 3");
    if g.order() > CANONICAL_ORDER_BOUND {
        return Err(Error::TooLarge {
            size: g.order(),
            bound: CANONICAL_ORDER_BOUND,
        });
    }
    if size + size.div_ceil(2) > g.order() {
        return Ok(());
    }
    for w1 in 0..g.order() {
        let mut walk = Walk {
            g,
            size,
            w: vec![w1],
            segs: Vec::new(),
            used: VertexSet::singleton(w1),
            uset: VertexSet::new(),
            wset: VertexSet::singleton(w1),
            order: Vec::new(),
        };
        if !walk.step(emit) {
            break;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn c8_has_one_unwithered_flower_of_size_4() {
        let g = Graph::cycle(8);
        let found = find_flowers(&g, 4).unwrap();
        assert_eq!(found.len(), 2);
        let f = found.iter().find(|f| f.w[0] == 1).unwrap();
        assert_eq!(f.w, vec![1, 3, 5, 7]);
        let mut u = f.u.clone();
        u.sort_unstable();
        assert_eq!(u, vec![0, 2, 4, 6]);
        assert!(f.pending.is_empty());
        assert_eq!(f.cycle.len(), 8);
        assert_eq!(f.withered_by, None);
        assert!(find_unwithered_flower(&g, 4).unwrap().is_some());
    }

    #[test]
    fn u1_sees_last_w_and_u2_sees_first_w() {
        let g = Graph::cycle(8);
        for f in find_flowers(&g, 4).unwrap() {
            let q = f.w.len();
            assert!(g.has_edge(f.u[0], f.w[q - 1]));
            assert!(g.has_edge(f.u[1], f.w[0]));
        }
    }

    #[test]
    fn f4_is_an_all_pending_flower() {
        let g = families::f4();
        let found = find_flowers(&g, 4).unwrap();
        let f = found.iter().find(|f| f.pending.len() == 4).unwrap();
        assert_eq!(f.w, vec![4, 5, 6, 7]);
        assert_eq!(f.pending, vec![0, 1, 2, 3]);
        assert_eq!(f.cycle, vec![4, 5, 6, 7]);
        assert_eq!(f.withered_by, None);
    }

    #[test]
    fn suspension_withers_the_f4_flower() {
        let g = families::f4_suspended();
        let found = find_flowers(&g, 4).unwrap();
        let f = found.iter().find(|f| f.pending.len() == 4).unwrap();
        assert_eq!(f.withered_by, Some(8));
        assert!(found.iter().all(|f| f.withered_by.is_some()));
        assert_eq!(find_unwithered_flower(&g, 4).unwrap(), None);
    }

    #[test]
    fn c8_with_a_long_chord_vertex_is_withered() {
        let g = Graph::cycle(8).with_vertex(&[0, 4]).unwrap();
        let f = find_flowers(&g, 4)
            .unwrap()
            .into_iter()
            .find(|f| f.w == vec![1, 3, 5, 7])
            .unwrap();
        assert_eq!(f.withered_by, Some(8));
    }

    #[test]
    fn no_flowers_in_complete_graphs() {
        assert!(find_flowers(&Graph::complete(4), 4).unwrap().is_empty());
        assert!(find_flowers(&Graph::complete(8), 4).unwrap().is_empty());
    }

    #[test]
    fn graphs_beyond_the_bound_are_refused() {
        assert!(find_flowers(&Graph::cycle(13), 4).is_err());
    }
}
