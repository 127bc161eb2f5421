//! Chordality recognition with certificates.
//!
//! A chordal graph is answered with a perfect elimination ordering produced
//! by maximum cardinality search; anything else is answered with a hole, an
//! induced cycle of length at least four. Both certificates can be checked
//! without trusting this module: [`check_peo`] and [`is_induced_cycle`].

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::canon::CANONICAL_ORDER_BOUND;
use crate::error::{Error, Result};
use crate::graph::{check_permutation, Graph};

/// An induced cycle of length at least four, stored in normal form: the
/// smallest vertex first, followed by its smaller cycle neighbour.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hole(Vec<usize>);

impl Hole {
    /// Validates `cycle` against `g` and normalises its rotation and
    /// direction.
    pub fn new(g: &Graph, cycle: Vec<usize>) -> Result<Hole> {
        if !is_induced_cycle(g, &cycle) {
            return Err(Error::NotAHole(format!("{cycle:?}")));
        }
        Ok(Hole::normalized(cycle))
    }

    fn normalized(mut cycle: Vec<usize>) -> Hole {
        let l = cycle.len();
        let start = (0..l).min_by_key(|&i| cycle[i]).unwrap_or(0);
        cycle.rotate_left(start);
        if l > 2 && cycle[l - 1] < cycle[1] {
            cycle[1..].reverse();
        }
        Hole(cycle)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Consecutive vertex pairs, closing pair last.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let l = self.0.len();
        (0..l).map(move |i| (self.0[i], self.0[(i + 1) % l]))
    }
}

/// True iff `cycle` lists distinct vertices forming an induced cycle of
/// length at least four: cyclically consecutive vertices adjacent, every
/// other pair non-adjacent.
pub fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let l = cycle.len();
    if l < 4 || cycle.iter().any(|&v| v >= g.order()) {
        return false;
    }
    let set: VertexSet = cycle.iter().collect();
    if set.len() != l {
        return false;
    }
    (0..l).all(|i| {
        let prev = cycle[(i + l - 1) % l];
        let next = cycle[(i + 1) % l];
        let mut expected = VertexSet::singleton(prev);
        expected.insert(next);
        g.neighbors(cycle[i]) & set == expected
    })
}

/// Either a perfect elimination ordering or a hole.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ChordalityCertificate {
    Chordal { peo: Vec<usize> },
    NotChordal { hole: Hole },
}

impl ChordalityCertificate {
    pub fn is_chordal(&self) -> bool {
        matches!(self, ChordalityCertificate::Chordal { .. })
    }

    pub fn hole(&self) -> Option<&Hole> {
        match self {
            ChordalityCertificate::NotChordal { hole } => Some(hole),
            ChordalityCertificate::Chordal { .. } => None,
        }
    }

    /// Re-checks the certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        match self {
            ChordalityCertificate::Chordal { peo } => {
                matches!(check_peo(g, peo), Ok(PeoCheck::Ok))
            }
            ChordalityCertificate::NotChordal { hole } => is_induced_cycle(g, hole.vertices()),
        }
    }
}

/// Outcome of [`check_peo`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeoCheck {
    Ok,
    /// `v` has the non-adjacent later neighbours `x < y`.
    Violation {
        v: usize,
        x: usize,
        y: usize,
    },
}

/// Maximum cardinality search. Returns the elimination ordering, i.e. the
/// reverse of the visiting order. Ties go to the highest id during the
/// visit, so on ties the ordering lists lower ids first.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut weight = vec![0usize; n];
    let mut unvisited = g.vertices();
    let mut visit = Vec::with_capacity(n);
    while !unvisited.is_empty() {
        let v = unvisited
            .iter()
            .max_by_key(|&v| (weight[v], v))
            .expect("non-empty");
        unvisited.remove(v);
        for u in g.neighbors(v) & unvisited {
            weight[u] += 1;
        }
        visit.push(v);
    }
    visit.reverse();
    visit
}

/// Checks whether `order` is a perfect elimination ordering: the neighbours
/// of each vertex that come later in `order` must be pairwise adjacent.
pub fn check_peo(g: &Graph, order: &[usize]) -> Result<PeoCheck> {
    check_permutation(g.order(), order)?;
    let mut later = g.vertices();
    for &v in order {
        later.remove(v);
        let after = g.neighbors(v) & later;
        for x in after {
            let missing = (after - g.neighbors(x)).iter().find(|&y| y > x);
            if let Some(y) = missing {
                return Ok(PeoCheck::Violation { v, x, y });
            }
        }
    }
    Ok(PeoCheck::Ok)
}

/// Decides chordality and returns a certificate either way.
pub fn is_chordal(g: &Graph) -> ChordalityCertificate {
    let peo = mcs_order(g);
    match check_peo(g, &peo).expect("mcs yields a permutation") {
        PeoCheck::Ok => ChordalityCertificate::Chordal { peo },
        PeoCheck::Violation { v, x, y } => {
            let hole = hole_through(g, v, x, y)
                .or_else(|| any_hole(g))
                .expect("a graph without a perfect elimination ordering has a hole");
            ChordalityCertificate::NotChordal { hole }
        }
    }
}

/// Chordality verdict without the certificate.
pub fn chordal(g: &Graph) -> bool {
    check_peo(g, &mcs_order(g)) == Ok(PeoCheck::Ok)
}

/// Hole containing the path `x - v - y`, if the rest of the graph connects
/// `x` to `y` away from `v`'s other neighbours.
fn hole_through(g: &Graph, v: usize, x: usize, y: usize) -> Option<Hole> {
    let mut allowed = g.vertices() - g.closed_neighbors(v);
    allowed.insert(x);
    allowed.insert(y);
    let mut path = g.shortest_path_within(x, y, allowed)?;
    path.insert(0, v);
    Some(Hole::normalized(shortcut_chords(g, path)))
}

/// Every hole has a middle vertex whose cycle neighbours are non-adjacent,
/// so scanning all such triples finds one whenever the graph is not chordal.
fn any_hole(g: &Graph) -> Option<Hole> {
    for v in 0..g.order() {
        let nv = g.neighbors(v);
        for x in nv {
            for y in (nv - g.neighbors(x)).iter().filter(|&y| y > x) {
                if let Some(h) = hole_through(g, v, x, y) {
                    return Some(h);
                }
            }
        }
    }
    None
}

/// Repeatedly replaces the cycle by the shorter side of any chord that keeps
/// the first vertex, until no chord is left.
fn shortcut_chords(g: &Graph, mut cycle: Vec<usize>) -> Vec<usize> {
    'outer: loop {
        let l = cycle.len();
        for i in 0..l {
            for j in i + 2..l {
                if i == 0 && j == l - 1 {
                    continue;
                }
                if g.has_edge(cycle[i], cycle[j]) {
                    // keep the side containing position 0 unless it is a triangle
                    let keep_outer = l - (j - i) + 1 >= 4;
                    cycle = if keep_outer {
                        cycle[..=i].iter().chain(&cycle[j..]).copied().collect()
                    } else {
                        cycle[i..=j].to_vec()
                    };
                    continue 'outer;
                }
            }
        }
        return cycle;
    }
}

/// All induced cycles with `min_len <= length <= max_len`, each once, in
/// normal form and sorted. Graphs above the exhaustive order bound are
/// rejected.
pub fn enumerate_induced_cycles(
    g: &Graph,
    min_len: usize,
    max_len: Option<usize>,
) -> Result<Vec<Hole>> {
    enumerate_induced_cycles_bounded(g, min_len, max_len, CANONICAL_ORDER_BOUND)
}

/// [`enumerate_induced_cycles`] with an explicit order bound, for callers
/// that know the graph is sparse enough (line graphs, for instance).
pub fn enumerate_induced_cycles_bounded(
    g: &Graph,
    min_len: usize,
    max_len: Option<usize>,
    bound: usize,
) -> Result<Vec<Hole>> {
    if g.order() > bound {
        return Err(Error::TooLarge {
            size: g.order(),
            bound,
        });
    }
    let mut out = Vec::new();
    walk_induced_cycles(g, min_len.max(4), max_len, &mut |c| {
        out.push(Hole(c.to_vec()));
        true
    });
    out.sort();
    Ok(out)
}

/// Some induced cycle of length at least `f`, if one exists.
pub fn has_induced_cycle_geq(g: &Graph, f: usize) -> Result<Option<Hole>> {
    let f = f.max(4);
    if f == 4 {
        return Ok(is_chordal(g).hole().cloned());
    }
    let mut found = None;
    walk_induced_cycles(g, f, None, &mut |c| {
        found = Some(Hole(c.to_vec()));
        false
    });
    Ok(found)
}

/// Depth-first extension of chordless paths `s = p0, p1, .., pk` over
/// vertices larger than `s`. Every induced cycle is reported exactly once,
/// already in normal form. The callback returns `false` to stop.
fn walk_induced_cycles(
    g: &Graph,
    min_len: usize,
    max_len: Option<usize>,
    emit: &mut dyn FnMut(&[usize]) -> bool,
) {
    let n = g.order();
    let max_len = max_len.unwrap_or(n).min(n);
    if max_len < min_len {
        return;
    }
    struct Ctx<'a> {
        g: &'a Graph,
        min_len: usize,
        max_len: usize,
        path: Vec<usize>,
    }
    // Returns false once the callback asks to stop.
    fn extend(
        ctx: &mut Ctx<'_>,
        allowed: VertexSet,
        blocked: VertexSet,
        emit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let g = ctx.g;
        let s = ctx.path[0];
        let p1 = ctx.path[1];
        let last = *ctx.path.last().unwrap();
        let k = ctx.path.len();
        for v in (g.neighbors(last) & allowed) - blocked {
            if g.has_edge(v, s) {
                let len = k + 1;
                if len >= ctx.min_len && len <= ctx.max_len && p1 < v {
                    ctx.path.push(v);
                    let go_on = emit(&ctx.path);
                    ctx.path.pop();
                    if !go_on {
                        return false;
                    }
                }
            } else if k + 1 < ctx.max_len {
                ctx.path.push(v);
                // the old last vertex becomes interior; nothing may touch it
                let next_blocked = blocked | g.closed_neighbors(last);
                let ok = extend(ctx, allowed, next_blocked, emit);
                ctx.path.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
    for s in 0..n {
        let allowed = VertexSet::full(n) - VertexSet::full(s + 1);
        for p1 in g.neighbors(s) & allowed {
            let mut ctx = Ctx {
                g,
                min_len,
                max_len,
                path: vec![s, p1],
            };
            // vertices adjacent to s may only appear as the closing vertex,
            // which `extend` checks explicitly
            let blocked = VertexSet::singleton(s) | VertexSet::singleton(p1);
            if !extend(&mut ctx, allowed, blocked, emit) {
                return;
            }
        }
    }
}
