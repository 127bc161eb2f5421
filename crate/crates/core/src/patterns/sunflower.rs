use super::{cyclically_adjacent, SunflowerWitness};
use crate::bitset::VertexSet;
use crate::chordality::chordal;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by the sunflower search.
pub const SUNFLOWER_ORDER_BOUND: usize = 16;

/// All sunflowers of the given size, each annotated with the smallest
/// suspending vertex. Rotations and reflections of the same sunflower are
/// reported once, with `u[0]` the smallest `u` and `u[1] < u[n-1]`.
pub fn find_sunflowers(g: &Graph, size: usize) -> Result<Vec<SunflowerWitness>> {
    let mut out = Vec::new();
    search(g, size, &mut |s| {
        out.push(s);
        true
    })?;
    out.sort_by_key(sort_key);
    Ok(out)
}

/// First unsuspended sunflower of the given size met by the search.
pub fn find_unsuspended_sunflower(g: &Graph, size: usize) -> Result<Option<SunflowerWitness>> {
    let mut found = None;
    search(g, size, &mut |s| {
        if s.suspended_by.is_none() {
            found = Some(s);
            false
        } else {
            true
        }
    })?;
    Ok(found)
}

fn sort_key(s: &SunflowerWitness) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let mut u = s.u.clone();
    let mut w = s.w.clone();
    u.sort_unstable();
    w.sort_unstable();
    (u, w, s.u.clone())
}

fn search(g: &Graph, size: usize, emit: &mut dyn FnMut(SunflowerWitness) -> bool) -> Result<()> {
    assert!(size >= 3, "sunflowers have size at least 3");
    if g.order() > SUNFLOWER_ORDER_BOUND {
        return Err(Error::TooLarge {
            size: g.order(),
            bound: SUNFLOWER_ORDER_BOUND,
        });
    }
    if 2 * size > g.order() {
        return Ok(());
    }
    for first in 0..g.order() {
        let mut u = vec![first];
        if !grow(g, size, &mut u, emit) {
            break;
        }
    }
    Ok(())
}

/// Extends the cyclic `u` sequence; returns false when the caller should stop.
fn grow(
    g: &Graph,
    size: usize,
    u: &mut Vec<usize>,
    emit: &mut dyn FnMut(SunflowerWitness) -> bool,
) -> bool {
    let placed: VertexSet = u.iter().collect();
    if u.len() == size {
        if u[1] > u[size - 1] || !shares_neighbor(g, u[size - 1], u[0]) {
            return true;
        }
        return assign_w(g, u, emit);
    }
    let mut blocked = placed;
    for &x in u.iter() {
        blocked |= g.neighbors(x);
    }
    let last = *u.last().unwrap();
    let candidates = g.vertices() - VertexSet::full(u[0] + 1) - blocked;
    for next in candidates {
        if !shares_neighbor(g, last, next) {
            continue;
        }
        u.push(next);
        let go_on = grow(g, size, u, emit);
        u.pop();
        if !go_on {
            return false;
        }
    }
    true
}

fn shares_neighbor(g: &Graph, a: usize, b: usize) -> bool {
    !(g.neighbors(a) & g.neighbors(b)).is_empty()
}

fn assign_w(g: &Graph, u: &[usize], emit: &mut dyn FnMut(SunflowerWitness) -> bool) -> bool {
    let n = u.len();
    let uset: VertexSet = u.iter().collect();
    // w[i] must see exactly u[i-1] and u[i] among the u's
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let a = u[(i + n - 1) % n];
            let b = u[i];
            let mut exact = VertexSet::singleton(a);
            exact.insert(b);
            (g.neighbors(a) & g.neighbors(b))
                .iter()
                .filter(|&x| g.neighbors(x) & uset == exact)
                .collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return true;
    }
    let suspended_by = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| !cyclically_adjacent(i, j, n))
        .filter_map(|(i, j)| (g.neighbors(u[i]) & g.neighbors(u[j])).first())
        .min();
    let mut w = Vec::with_capacity(n);
    choose(g, u, &candidates, suspended_by, &mut w, emit)
}

fn choose(
    g: &Graph,
    u: &[usize],
    candidates: &[Vec<usize>],
    suspended_by: Option<usize>,
    w: &mut Vec<usize>,
    emit: &mut dyn FnMut(SunflowerWitness) -> bool,
) -> bool {
    let i = w.len();
    if i == candidates.len() {
        let wset: VertexSet = w.iter().collect();
        if wset.len() != w.len() || !chordal(&g.induced_on(wset)) {
            return true;
        }
        return emit(SunflowerWitness {
            u: u.to_vec(),
            w: w.clone(),
            suspended_by,
        });
    }
    for &x in &candidates[i] {
        w.push(x);
        let go_on = choose(g, u, candidates, suspended_by, w, emit);
        w.pop();
        if !go_on {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Independent check of the sunflower definition.
    fn is_sunflower(g: &Graph, s: &SunflowerWitness) -> bool {
        let n = s.u.len();
        let uset: VertexSet = s.u.iter().collect();
        let wset: VertexSet = s.w.iter().collect();
        if uset.len() != n || wset.len() != n || !uset.is_disjoint(&wset) {
            return false;
        }
        if !g.is_stable(uset) || !chordal(&g.induced_on(wset)) {
            return false;
        }
        (0..n).all(|i| (0..n).all(|j| g.has_edge(s.u[i], s.w[j]) == (j == i || j == (i + 1) % n)))
    }

    #[test]
    fn chordal_sunflower_5_has_one_unsuspended_sunflower_of_size_5() {
        let g = families::chordal_sunflower_5();
        let found = find_sunflowers(&g, 5).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].suspended_by, None);
        let mut u = found[0].u.clone();
        let mut w = found[0].w.clone();
        u.sort_unstable();
        w.sort_unstable();
        assert_eq!(u, vec![0, 1, 2, 3, 4]);
        assert_eq!(w, vec![5, 6, 7, 8, 9]);
        assert!(is_sunflower(&g, &found[0]));
    }

    #[test]
    fn suspended_sunflower_of_size_7() {
        let g = families::suspended_sunflower_7();
        let found = find_sunflowers(&g, 7).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].suspended_by, Some(14));
        assert!(is_sunflower(&g, &found[0]));
        assert_eq!(find_unsuspended_sunflower(&g, 7).unwrap(), None);
    }

    /// Brute force over every split of C8 into four `u`s and four `w`s.
    #[test]
    fn c8_hosts_exactly_one_sunflower_of_size_4() {
        let g = Graph::cycle(8);
        let mut brute = Vec::new();
        for mask in 0u32..256 {
            if mask.count_ones() != 4 {
                continue;
            }
            let uset: VertexSet = (0..8).filter(|&i| mask >> i & 1 == 1).collect();
            let wset = g.vertices() - uset;
            if !g.is_stable(uset) {
                continue;
            }
            if wset.iter().all(|w| (g.neighbors(w) & uset).len() == 2) {
                brute.push(uset);
            }
        }
        let found = find_sunflowers(&g, 4).unwrap();
        assert_eq!(found.len(), brute.len());
        assert_eq!(found.len(), 2);
        assert!(found
            .iter()
            .all(|s| s.suspended_by.is_none() && is_sunflower(&g, s)));
    }

    #[test]
    fn too_small_or_too_large() {
        assert!(find_sunflowers(&Graph::cycle(6), 4).unwrap().is_empty());
        assert!(find_sunflowers(&Graph::cycle(17), 4).is_err());
    }
}
