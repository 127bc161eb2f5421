use super::F4Witness;
use crate::bitset::VertexSet;
use crate::chordality::enumerate_induced_cycles;
use crate::error::Result;
use crate::graph::Graph;

/// Every induced `F4`, once per vertex set, each annotated with the
/// smallest suspending vertex if there is one.
pub fn find_f4(g: &Graph) -> Result<Vec<F4Witness>> {
    let mut out = Vec::new();
    // An F4 embedding is determined by its inner induced 4-cycle, listed in
    // normal form, and a choice of one `u` per cycle edge.
    for hole in enumerate_induced_cycles(g, 4, Some(4))? {
        let w: [usize; 4] = hole.vertices().try_into().expect("length 4");
        let wset: VertexSet = w.iter().collect();
        let candidates: Vec<Vec<usize>> = (0..4)
            .map(|i| {
                let a = w[(i + 3) % 4];
                let b = w[i];
                let mut exact = VertexSet::singleton(a);
                exact.insert(b);
                ((g.neighbors(a) & g.neighbors(b)) - wset)
                    .iter()
                    .filter(|&x| g.neighbors(x) & wset == exact)
                    .collect()
            })
            .collect();
        for &u1 in &candidates[0] {
            for &u2 in &candidates[1] {
                for &u3 in &candidates[2] {
                    for &u4 in &candidates[3] {
                        let u = [u1, u2, u3, u4];
                        let uset: VertexSet = u.iter().collect();
                        // candidates of different slots are disjoint already
                        if uset.len() == 4 && g.is_stable(uset) {
                            let suspended_by = ((g.neighbors(u1) & g.neighbors(u3))
                                | (g.neighbors(u2) & g.neighbors(u4)))
                            .first();
                            out.push(F4Witness { u, w, suspended_by });
                        }
                    }
                }
            }
        }
    }
    out.sort_by_key(|f| {
        let mut all: Vec<usize> = f.u.iter().chain(&f.w).copied().collect();
        all.sort_unstable();
        (all, f.w)
    });
    Ok(out)
}
