//! Certificate extraction and checking.
//!
//! The extractors follow the constructive direction of the flower and
//! sprout characterisations: a hole of `G²` yields an unwithered flower of
//! `G`, a hole of `L(G)²` a fertile sprout of `G`. The verifiers check a
//! witness condition by condition from its definition and share no code
//! with the searches in [`crate::patterns`].

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::chordality::{chordal, enumerate_induced_cycles_bounded, is_induced_cycle};
use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};
use crate::patterns::{FlowerWitness, SproutWitness, SunflowerWitness};

/// The numbered conditions of the flower and sprout definitions, plus the
/// basic shape of the data and the withering / fertility annotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Condition {
    /// Ids in range, no repeats, `⌈n/2⌉ <= q <= n`.
    Shape,
    I,
    II,
    III,
    IV,
    V,
    VI,
    /// The stored `withered_by` / `infertile_by` annotation is correct.
    Annotation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    pub detail: String,
}

/// Every violated condition; empty when the witness is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub violations: Vec<Violation>,
}

impl Verification {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violates(&self, condition: Condition) -> bool {
        self.violations.iter().any(|v| v.condition == condition)
    }

    fn fail(&mut self, condition: Condition, detail: impl Into<String>) {
        self.violations.push(Violation {
            condition,
            detail: detail.into(),
        });
    }
}

fn is_rotation<T: PartialEq>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len()
        && (a.is_empty()
            || (0..a.len()).any(|r| (0..a.len()).all(|i| a[(r + i) % a.len()] == b[i])))
}

fn non_consecutive(i: usize, j: usize, n: usize) -> bool {
    i != j && (i + 1) % n != j && (j + 1) % n != i
}

/// Smallest vertex adjacent to two non-consecutive `u`s.
pub fn is_withered(g: &Graph, f: &FlowerWitness) -> Option<usize> {
    let n = f.u.len();
    (0..g.order()).find(|&v| {
        let seen: Vec<usize> = (0..n).filter(|&i| g.has_edge(v, f.u[i])).collect();
        seen.iter()
            .any(|&i| seen.iter().any(|&j| non_consecutive(i, j, n)))
    })
}

pub fn verify_flower(g: &Graph, f: &FlowerWitness) -> Verification {
    let mut out = Verification::default();
    let n = f.u.len();
    let q = f.w.len();
    let all: Vec<usize> =
        f.u.iter()
            .chain(&f.w)
            .chain(&f.cycle)
            .chain(&f.pending)
            .copied()
            .collect();
    if let Some(&v) = all.iter().find(|&&v| v >= g.order()) {
        out.fail(Condition::Shape, format!("vertex {v} is not in the graph"));
        return out;
    }
    let uset: VertexSet = f.u.iter().collect();
    let wset: VertexSet = f.w.iter().collect();
    if n < 3 || uset.len() != n || wset.len() != q || !uset.is_disjoint(&wset) {
        out.fail(
            Condition::Shape,
            "U and W must be disjoint lists of distinct vertices, |U| >= 3",
        );
        return out;
    }
    if q < n.div_ceil(2) || q > n {
        out.fail(
            Condition::Shape,
            format!("q = {q} outside [{}, {n}]", n.div_ceil(2)),
        );
    }

    // i) a cycle of g inside U ∪ W through all of W in order
    let c = &f.cycle;
    let len = c.len();
    let cset: VertexSet = c.iter().collect();
    let mut cycle_ok = true;
    if len < 3 || cset.len() != len {
        out.fail(
            Condition::I,
            "the cycle needs at least three distinct vertices",
        );
        cycle_ok = false;
    } else if let Some(i) = (0..len).find(|&i| !g.has_edge(c[i], c[(i + 1) % len])) {
        out.fail(
            Condition::I,
            format!("{} and {} are not adjacent", c[i], c[(i + 1) % len]),
        );
        cycle_ok = false;
    } else if !cset.is_subset(&(uset | wset)) {
        out.fail(Condition::I, "the cycle leaves U ∪ W");
        cycle_ok = false;
    }
    let pos: Vec<Option<usize>> = f.w.iter().map(|w| c.iter().position(|x| x == w)).collect();
    if cycle_ok {
        if pos.iter().any(Option::is_none) {
            out.fail(Condition::I, "some w is not on the cycle");
            cycle_ok = false;
        } else {
            let start = pos[0].unwrap();
            let offsets: Vec<usize> = pos
                .iter()
                .map(|p| (p.unwrap() + len - start) % len)
                .collect();
            if offsets.windows(2).any(|w| w[0] >= w[1]) {
                out.fail(Condition::I, "the cycle does not visit w1..wq in order");
                cycle_ok = false;
            }
        }
    }

    // the cycle path from w_i to w_{i+1}, exclusive
    let segments: Vec<Vec<usize>> = if cycle_ok {
        (0..q)
            .map(|i| {
                let a = pos[i].unwrap();
                let b = pos[(i + 1) % q].unwrap();
                let steps = (b + len - a) % len;
                let steps = if steps == 0 { len } else { steps };
                (1..steps).map(|s| c[(a + s) % len]).collect()
            })
            .collect()
    } else {
        Vec::new()
    };
    let off_cycle: Vec<usize> = f.u.iter().copied().filter(|u| !cset.contains(*u)).collect();
    let pair = |i: usize| VertexSet::singleton(f.w[i]) | VertexSet::singleton(f.w[(i + 1) % q]);
    let flower_set = uset | wset;

    // iii) a cycle edge w_i w_{i+1} carries exactly one pending u
    if cycle_ok {
        for (i, seg) in segments.iter().enumerate() {
            if seg.is_empty() {
                let carried = off_cycle
                    .iter()
                    .filter(|&&u| g.neighbors(u) & flower_set == pair(i))
                    .count();
                if carried != 1 {
                    out.fail(
                        Condition::III,
                        format!(
                            "edge w{} w{} carries {carried} pending vertices",
                            i + 1,
                            (i + 1) % q + 1
                        ),
                    );
                }
            }
        }
    }

    // iv) otherwise one u, or two consecutive u's, between w_i and w_{i+1}
    if cycle_ok {
        for (i, seg) in segments.iter().enumerate() {
            if seg.is_empty() {
                continue;
            }
            let fine = match seg.as_slice() {
                [x] => uset.contains(*x),
                [x, y] => uset.contains(*x) && uset.contains(*y),
                _ => false,
            };
            if !fine {
                out.fail(
                    Condition::IV,
                    format!(
                        "between w{} and w{} the cycle runs through {seg:?}",
                        i + 1,
                        (i + 1) % q + 1
                    ),
                );
            }
        }
    }

    // ii) order of U along the cycle, ends attached to wq and w1, and no
    // edges between non-consecutive u's
    if cycle_ok {
        let mut along: Vec<usize> = Vec::new();
        for (i, seg) in segments.iter().enumerate() {
            if seg.is_empty() {
                along.extend(
                    off_cycle
                        .iter()
                        .filter(|&&u| g.neighbors(u) & wset == pair(i)),
                );
            } else {
                along.extend(seg.iter().filter(|&&x| uset.contains(x)));
            }
        }
        if !is_rotation(&along, &f.u) {
            out.fail(
                Condition::II,
                format!("U along the cycle is {along:?}, listed {:?}", f.u),
            );
        }
    }
    if !g.has_edge(f.u[0], f.w[q - 1]) || !g.has_edge(f.u[1], f.w[0]) {
        out.fail(Condition::II, "u1 must see wq and u2 must see w1");
    }
    for i in 0..n {
        for j in i + 1..n {
            if non_consecutive(i, j, n) && g.has_edge(f.u[i], f.u[j]) {
                out.fail(
                    Condition::II,
                    format!("u{} and u{} are adjacent", i + 1, j + 1),
                );
            }
        }
    }

    // v) pending vertices are independent and everything else is on the cycle
    let mut expected_pending = off_cycle.clone();
    expected_pending.sort_unstable();
    if expected_pending != f.pending {
        out.fail(
            Condition::V,
            format!(
                "off-cycle u's are {expected_pending:?}, listed pending {:?}",
                f.pending
            ),
        );
    }
    let pset: VertexSet = off_cycle.iter().collect();
    if !g.is_stable(pset) {
        out.fail(Condition::V, "two pending vertices are adjacent");
    }

    // vi) no further U–W edges
    if cycle_ok {
        for &u in &f.u {
            let allowed = if cset.contains(u) {
                let i = c.iter().position(|&x| x == u).unwrap();
                (VertexSet::singleton(c[(i + len - 1) % len])
                    | VertexSet::singleton(c[(i + 1) % len]))
                    & wset
            } else {
                match (0..q)
                    .find(|&i| segments[i].is_empty() && g.neighbors(u) & flower_set == pair(i))
                {
                    Some(i) => pair(i),
                    None => VertexSet::new(),
                }
            };
            let extra = (g.neighbors(u) & wset) - allowed;
            if !extra.is_empty() {
                out.fail(
                    Condition::VI,
                    format!("u {u} also sees {:?}", extra.to_vec()),
                );
            }
        }
    }

    let actual = is_withered(g, f);
    let claimed_ok = match f.withered_by {
        None => actual.is_none(),
        Some(v) => {
            v < g.order() && {
                let seen: Vec<usize> = (0..n).filter(|&i| g.has_edge(v, f.u[i])).collect();
                seen.iter()
                    .any(|&i| seen.iter().any(|&j| non_consecutive(i, j, n)))
            }
        }
    };
    if !claimed_ok {
        out.fail(
            Condition::Annotation,
            format!(
                "withered_by is {:?} but the smallest withering vertex is {actual:?}",
                f.withered_by
            ),
        );
    }
    out
}

/// Checks a sunflower: `U` stable (I), `W` chordal (II), `u[i]` adjacent
/// to exactly `w[i]` and `w[i+1]` among the `w`s (III), and the
/// `suspended_by` annotation names the smallest suspending vertex.
pub fn verify_sunflower(g: &Graph, s: &SunflowerWitness) -> Verification {
    let mut out = Verification::default();
    let n = s.u.len();
    if let Some(&v) = s.u.iter().chain(&s.w).find(|&&v| v >= g.order()) {
        out.fail(Condition::Shape, format!("vertex {v} is not in the graph"));
        return out;
    }
    let uset: VertexSet = s.u.iter().collect();
    let wset: VertexSet = s.w.iter().collect();
    if n < 3 || uset.len() != n || s.w.len() != n || wset.len() != n || !uset.is_disjoint(&wset) {
        out.fail(
            Condition::Shape,
            "U and W must be disjoint, of equal size >= 3",
        );
        return out;
    }
    if !g.is_stable(uset) {
        out.fail(Condition::I, "U is not stable");
    }
    if !chordal(&g.induced_on(wset)) {
        out.fail(Condition::II, "W does not induce a chordal graph");
    }
    for i in 0..n {
        for j in 0..n {
            let expected = j == i || j == (i + 1) % n;
            if g.has_edge(s.u[i], s.w[j]) != expected {
                out.fail(
                    Condition::III,
                    format!("u{i} and w{j} break the adjacency pattern"),
                );
            }
        }
    }
    let actual = (0..g.order()).find(|&v| {
        let seen: Vec<usize> = (0..n).filter(|&i| g.has_edge(v, s.u[i])).collect();
        seen.iter()
            .any(|&i| seen.iter().any(|&j| non_consecutive(i, j, n)))
    });
    if actual != s.suspended_by {
        out.fail(
            Condition::Annotation,
            format!(
                "suspended_by is {:?} but the smallest suspending vertex is {actual:?}",
                s.suspended_by
            ),
        );
    }
    out
}

/// The unwithered flower behind a hole of `G²`.
///
/// Consecutive hole vertices that are not adjacent in `g` get the smallest
/// connector `w` whose neighbourhood in the hole is exactly that pair. A `u`
/// between two adjacent connectors leaves the cycle and becomes pending.
pub fn extract_flower(g: &Graph, hole: &[usize]) -> Result<FlowerWitness> {
    let n = hole.len();
    if n < 4 || hole.iter().any(|&v| v >= g.order()) || !is_induced_cycle(&g.square(), hole) {
        return Err(Error::NotAHole(format!("{hole:?} in the square")));
    }
    let uset: VertexSet = hole.iter().collect();
    // connector[i] sits between hole[i] and hole[i+1]
    let mut connector: Vec<Option<usize>> = Vec::with_capacity(n);
    for i in 0..n {
        let (a, b) = (hole[i], hole[(i + 1) % n]);
        if g.has_edge(a, b) {
            connector.push(None);
            continue;
        }
        let exact = VertexSet::singleton(a) | VertexSet::singleton(b);
        let w = (g.neighbors(a) & g.neighbors(b))
            .iter()
            .find(|&w| g.neighbors(w) & uset == exact)
            .ok_or_else(|| {
                Error::InternalContradiction(format!("no connector for hole pair ({a}, {b})"))
            })?;
        connector.push(Some(w));
    }
    let q = connector.iter().flatten().count();
    if q < n.div_ceil(2) {
        return Err(Error::InternalContradiction(format!(
            "only {q} connectors for a hole of length {n}"
        )));
    }

    // walk starting right after the first connector
    let first = connector.iter().position(Option::is_some).unwrap();
    let mut cycle: Vec<usize> = Vec::new();
    let mut w: Vec<usize> = Vec::with_capacity(q);
    let mut segs: Vec<Vec<usize>> = Vec::new();
    let mut pending = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    for step in 0..n {
        let i = (first + 1 + step) % n;
        current.push(hole[i]);
        if let Some(x) = connector[i] {
            segs.push(std::mem::take(&mut current));
            w.push(x);
        }
    }
    // segs[k] lies between w[k-1] and w[k], cyclically
    let wq = w;
    for k in 0..q {
        let before = wq[(k + q - 1) % q];
        let after = wq[k];
        let seg = &segs[k];
        if seg.len() == 1 && g.has_edge(before, after) {
            pending.push(seg[0]);
        }
    }
    let pset: VertexSet = pending.iter().collect();

    // rotate so that w1 is the smallest connector
    let r = (0..q).min_by_key(|&k| wq[k]).unwrap();
    let w_out: Vec<usize> = (0..q).map(|k| wq[(r + k) % q]).collect();
    for k in 0..q {
        let idx = (r + k) % q;
        cycle.push(wq[idx]);
        let seg = &segs[(idx + 1) % q];
        cycle.extend(seg.iter().filter(|u| !pset.contains(**u)));
    }
    // u1 is the first u of the segment closing the cycle at w1
    let mut u_out: Vec<usize> = segs[r].clone();
    for k in 1..q {
        u_out.extend(&segs[(r + k) % q]);
    }
    pending.sort_unstable();
    let mut f = FlowerWitness {
        u: u_out,
        w: w_out,
        cycle,
        pending,
        withered_by: None,
    };
    f.withered_by = is_withered(g, &f);
    let check = verify_flower(g, &f);
    if !check.is_ok() {
        return Err(Error::InternalContradiction(format!(
            "extracted flower fails verification: {:?}",
            check.violations
        )));
    }
    if let Some(v) = f.withered_by {
        return Err(Error::InternalContradiction(format!(
            "extracted flower is withered by {v}"
        )));
    }
    Ok(f)
}

fn meets(e: Edge, f: Edge) -> bool {
    e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1
}

fn shared(e: Edge, f: Edge) -> Option<usize> {
    [e.0, e.1].into_iter().find(|&v| v == f.0 || v == f.1)
}

/// Smallest edge of `g` joining endpoints of two non-consecutive `u`-edges.
pub fn is_infertile(g: &Graph, s: &SproutWitness) -> Option<Edge> {
    let u = &s.u_edges;
    let n = u.len();
    let touches = |e: Edge, x: usize| e.0 == x || e.1 == x;
    g.edges().into_iter().find(|&(x, y)| {
        (0..n).any(|i| {
            (0..n).any(|j| non_consecutive(i, j, n) && touches(u[i], x) && touches(u[j], y))
        })
    })
}

/// Vertex sequence of a cyclic edge sequence, `v[i]` shared by `e[i]` and
/// `e[i+1]`, if the edges really form a simple cycle in that order.
fn cycle_vertices(c: &[Edge]) -> Option<Vec<usize>> {
    let len = c.len();
    if len < 3 {
        return None;
    }
    let v: Vec<usize> = (0..len)
        .map(|i| shared(c[i], c[(i + 1) % len]))
        .collect::<Option<_>>()?;
    let distinct: VertexSet = v.iter().collect();
    if distinct.len() != len {
        return None;
    }
    (0..len)
        .all(|i| edge(v[(i + len - 1) % len], v[i]) == c[i])
        .then_some(v)
}

pub fn verify_sprout(g: &Graph, s: &SproutWitness) -> Verification {
    let mut out = Verification::default();
    let u = &s.u_edges;
    let w = &s.w_edges;
    let n = u.len();
    let q = w.len();
    let everything = u.iter().chain(w).chain(&s.cycle).chain(&s.pending);
    for &(a, b) in everything {
        if a >= b || b >= g.order() || !g.has_edge(a, b) {
            out.fail(
                Condition::Shape,
                format!("({a}, {b}) is not a normalised edge of the graph"),
            );
            return out;
        }
    }
    let mut uw: Vec<Edge> = u.iter().chain(w).copied().collect();
    uw.sort_unstable();
    uw.dedup();
    if n < 3 || uw.len() != n + q {
        out.fail(
            Condition::Shape,
            "U and W must be disjoint lists of distinct edges, |U| >= 3",
        );
        return out;
    }
    if q < n.div_ceil(2) || q > n {
        out.fail(
            Condition::Shape,
            format!("q = {q} outside [{}, {n}]", n.div_ceil(2)),
        );
    }
    let in_u = |e: &Edge| u.contains(e);

    // i) a cycle containing w1..wq in order
    let c = &s.cycle;
    let len = c.len();
    let mut cycle_ok = true;
    if cycle_vertices(c).is_none() {
        out.fail(Condition::I, "the edge sequence is not a simple cycle");
        cycle_ok = false;
    }
    let pos: Vec<Option<usize>> = w.iter().map(|e| c.iter().position(|x| x == e)).collect();
    if cycle_ok {
        if pos.iter().any(Option::is_none) {
            out.fail(Condition::I, "some w-edge is not on the cycle");
            cycle_ok = false;
        } else {
            let start = pos[0].unwrap();
            let offsets: Vec<usize> = pos
                .iter()
                .map(|p| (p.unwrap() + len - start) % len)
                .collect();
            if offsets.windows(2).any(|x| x[0] >= x[1]) {
                out.fail(
                    Condition::I,
                    "the cycle does not run through w1..wq in order",
                );
                cycle_ok = false;
            }
        }
    }
    let segments: Vec<Vec<Edge>> = if cycle_ok {
        (0..q)
            .map(|i| {
                let a = pos[i].unwrap();
                let b = pos[(i + 1) % q].unwrap();
                let steps = (b + len - a) % len;
                let steps = if steps == 0 { len } else { steps };
                (1..steps).map(|k| c[(a + k) % len]).collect()
            })
            .collect()
    } else {
        Vec::new()
    };
    let off_cycle: Vec<Edge> = u.iter().copied().filter(|e| !c.contains(e)).collect();

    // iii) adjacent consecutive w-edges: exactly one u through the shared vertex
    for i in 0..q {
        if let Some(x) = shared(w[i], w[(i + 1) % q]) {
            let through: Vec<&Edge> = u.iter().filter(|e| e.0 == x || e.1 == x).collect();
            if through.len() != 1 {
                out.fail(
                    Condition::III,
                    format!(
                        "{} u-edges pass through the vertex {x} shared by w{} and w{}",
                        through.len(),
                        i + 1,
                        (i + 1) % q + 1
                    ),
                );
            } else if c.contains(through[0]) {
                out.fail(
                    Condition::III,
                    format!("the u-edge {:?} at {x} lies on the cycle", through[0]),
                );
            }
        }
    }

    // iv) disjoint consecutive w-edges: one or two u-edges between them on C
    if cycle_ok {
        for (i, seg) in segments.iter().enumerate() {
            let disjoint = !meets(w[i], w[(i + 1) % q]);
            let fine = (1..=2).contains(&seg.len()) && seg.iter().all(in_u);
            if disjoint && !fine {
                out.fail(
                    Condition::IV,
                    format!(
                        "between w{} and w{} the cycle runs through {seg:?}",
                        i + 1,
                        (i + 1) % q + 1
                    ),
                );
            }
            if !disjoint && !seg.is_empty() {
                out.fail(
                    Condition::IV,
                    format!(
                        "w{} and w{} meet but are not consecutive on the cycle",
                        i + 1,
                        (i + 1) % q + 1
                    ),
                );
            }
        }
    }

    // ii) order of U along C, ends attached to wq and w1, non-consecutive
    // u-edges disjoint
    if cycle_ok {
        let mut along: Vec<Edge> = Vec::new();
        for (i, seg) in segments.iter().enumerate() {
            if seg.is_empty() {
                if let Some(x) = shared(w[i], w[(i + 1) % q]) {
                    along.extend(off_cycle.iter().filter(|e| e.0 == x || e.1 == x));
                }
            } else {
                along.extend(seg.iter().filter(|e| in_u(e)));
            }
        }
        if !is_rotation(&along, u) {
            out.fail(
                Condition::II,
                format!("U along the cycle is {along:?}, listed {u:?}"),
            );
        }
    }
    if !meets(u[0], w[q - 1]) || !meets(u[1], w[0]) {
        out.fail(Condition::II, "u1 must meet wq and u2 must meet w1");
    }
    for i in 0..n {
        for j in i + 1..n {
            if non_consecutive(i, j, n) && meets(u[i], u[j]) {
                out.fail(
                    Condition::II,
                    format!("u{} and u{} share a vertex", i + 1, j + 1),
                );
            }
        }
    }

    // v) pending u-edges pairwise disjoint, the rest on the cycle
    let mut expected = off_cycle.clone();
    expected.sort_unstable();
    if expected != s.pending {
        out.fail(
            Condition::V,
            format!(
                "off-cycle u-edges are {expected:?}, listed pending {:?}",
                s.pending
            ),
        );
    }
    for i in 0..off_cycle.len() {
        for j in i + 1..off_cycle.len() {
            if meets(off_cycle[i], off_cycle[j]) {
                out.fail(
                    Condition::V,
                    format!(
                        "pending {:?} and {:?} share a vertex",
                        off_cycle[i], off_cycle[j]
                    ),
                );
            }
        }
    }

    let actual = is_infertile(g, s);
    let claimed_ok = match s.infertile_by {
        None => actual.is_none(),
        Some((x, y)) => {
            let touches = |e: Edge, v: usize| e.0 == v || e.1 == v;
            g.has_edge(x, y)
                && (0..n).any(|i| {
                    (0..n).any(|j| {
                        non_consecutive(i, j, n)
                            && (touches(u[i], x) && touches(u[j], y)
                                || touches(u[i], y) && touches(u[j], x))
                    })
                })
        }
    };
    if !claimed_ok {
        out.fail(
            Condition::Annotation,
            format!(
                "infertile_by is {:?} but the smallest infertility edge is {actual:?}",
                s.infertile_by
            ),
        );
    }
    out
}

/// The fertile sprout behind a hole of `L(G)²`.
///
/// The hole gives an unwithered flower in the line graph. Its cycle is then
/// re-chosen among the induced cycles of the flower, preferring cycles that
/// keep the most `w`-vertices, and read back as a cycle of `g`; `u`-edges
/// off that cycle become pending. Each candidate is checked with
/// [`verify_sprout`] and the first one that passes is returned.
pub fn extract_sprout(g: &Graph, hole: &[usize]) -> Result<SproutWitness> {
    let map = g.line_graph();
    let lg = &map.lg;
    let n = hole.len();
    if n < 4 || hole.iter().any(|&v| v >= lg.order()) || !is_induced_cycle(&lg.square(), hole) {
        return Err(Error::NotAHole(format!(
            "{hole:?} in the square of the line graph"
        )));
    }
    let flower = extract_flower(lg, hole)?;
    let uset: VertexSet = flower.u.iter().collect();
    let wset: VertexSet = flower.w.iter().collect();
    let core: Vec<usize> = (uset | wset).to_vec();
    let (sub, ids) = lg.induced_subgraph(&core)?;

    let mut candidates: Vec<Vec<usize>> =
        enumerate_induced_cycles_bounded(&sub, 4, None, sub.order())?
            .into_iter()
            .map(|h| h.vertices().iter().map(|&i| ids[i]).collect())
            .collect();
    for (a, b) in sub.edges() {
        for c in (sub.neighbors(a) & sub.neighbors(b))
            .iter()
            .filter(|&c| c > b)
        {
            candidates.push(vec![ids[a], ids[b], ids[c]]);
        }
    }
    candidates.sort_by_key(|z| {
        let on_w = z.iter().filter(|&&v| wset.contains(v)).count();
        (std::cmp::Reverse(on_w), z.clone())
    });

    let to_edge = |v: usize| map.edge_of_vertex[v];
    for z in &candidates {
        if !z.iter().any(|&v| wset.contains(v)) {
            continue;
        }
        let zset: VertexSet = z.iter().collect();
        for reversed in [false, true] {
            let mut seq: Vec<Edge> = z.iter().map(|&v| to_edge(v)).collect();
            if reversed {
                seq.reverse();
            }
            if let Some(s) = sprout_from_cycle(g, &seq, &flower, &zset, &to_edge) {
                return Ok(s);
            }
        }
    }
    Err(Error::InternalContradiction(format!(
        "no cycle of the line-graph flower {flower:?} yields a fertile sprout"
    )))
}

fn sprout_from_cycle(
    g: &Graph,
    seq: &[Edge],
    flower: &FlowerWitness,
    on_z: &VertexSet,
    to_edge: &dyn Fn(usize) -> Edge,
) -> Option<SproutWitness> {
    let w_all: Vec<Edge> = flower.w.iter().map(|&v| to_edge(v)).collect();
    let u_all: Vec<Edge> = flower.u.iter().map(|&v| to_edge(v)).collect();
    let len = seq.len();
    let start = (0..len)
        .filter(|&i| w_all.contains(&seq[i]))
        .min_by_key(|&i| seq[i])?;
    let cycle: Vec<Edge> = (0..len).map(|k| seq[(start + k) % len]).collect();
    let w: Vec<Edge> = cycle
        .iter()
        .copied()
        .filter(|e| w_all.contains(e))
        .collect();
    let q = w.len();
    let pending: Vec<Edge> = flower
        .u
        .iter()
        .filter(|&&v| !on_z.contains(v))
        .map(|&v| to_edge(v))
        .collect();

    let mut segs: Vec<Vec<Edge>> = vec![Vec::new(); q];
    let mut k = 0;
    for e in &cycle[1..] {
        if w_all.contains(e) {
            k += 1;
        } else {
            segs[k].push(*e);
        }
    }
    for (i, seg) in segs.iter_mut().enumerate() {
        if seg.is_empty() {
            let x = shared(w[i], w[(i + 1) % q])?;
            seg.extend(pending.iter().filter(|e| e.0 == x || e.1 == x));
        }
    }
    let mut u: Vec<Edge> = segs[q - 1].clone();
    for seg in &segs[..q - 1] {
        u.extend(seg);
    }
    let mut sorted_u = u.clone();
    sorted_u.sort_unstable();
    let mut expected_u = u_all;
    expected_u.sort_unstable();
    if sorted_u != expected_u {
        return None;
    }
    let mut pending = pending;
    pending.sort_unstable();
    let mut s = SproutWitness {
        u_edges: u,
        w_edges: w,
        cycle,
        pending,
        infertile_by: None,
    };
    s.infertile_by = is_infertile(g, &s);
    (s.infertile_by.is_none() && verify_sprout(g, &s).is_ok()).then_some(s)
}
