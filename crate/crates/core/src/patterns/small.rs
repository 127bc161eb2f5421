use super::{ClawWitness, P5aWitness};
use crate::graph::Graph;

/// Lexicographically first induced claw: smallest centre, then smallest
/// leaf triple.
pub fn find_claw(g: &Graph) -> Option<ClawWitness> {
    for c in 0..g.order() {
        let nc = g.neighbors(c);
        for a in nc {
            let rest_a = nc - g.closed_neighbors(a);
            for b in rest_a.iter().filter(|&b| b > a) {
                let rest_b = rest_a - g.closed_neighbors(b);
                if let Some(d) = rest_b.iter().find(|&d| d > b) {
                    return Some(ClawWitness {
                        center: c,
                        leaves: [a, b, d],
                    });
                }
            }
        }
    }
    None
}

/// Some induced P5+a (the bull), reported as `v1..v5` with `v2 < v4`.
pub fn find_p5a(g: &Graph) -> Option<P5aWitness> {
    for v2 in 0..g.order() {
        for v4 in g.neighbors(v2).iter().filter(|&v| v > v2) {
            for v3 in g.neighbors(v2) & g.neighbors(v4) {
                let ends1 = g.neighbors(v2) - g.closed_neighbors(v3) - g.closed_neighbors(v4);
                let ends5 = g.neighbors(v4) - g.closed_neighbors(v3) - g.closed_neighbors(v2);
                for v1 in ends1 {
                    if let Some(v5) = (ends5 - g.closed_neighbors(v1)).first() {
                        return Some(P5aWitness {
                            path: [v1, v2, v3, v4, v5],
                        });
                    }
                }
            }
        }
    }
    None
}
