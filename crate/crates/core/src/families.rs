//! Small named graphs used throughout the docs and tests.

use crate::graph::Graph;

/// The bull: the path `0-1-2-3-4` plus the edge `1-3` (often written P5+a).
pub fn p5a() -> Graph {
    Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 3)]).unwrap()
}

/// `F4`: inner 4-cycle `w1..w4` (ids 4..7) and a stable set `u1..u4`
/// (ids 0..3) with `u_i` adjacent to exactly `w_{i-1}` and `w_i`.
pub fn f4() -> Graph {
    Graph::from_edge_list(
        8,
        &[
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 4),
            (0, 7),
            (0, 4),
            (1, 4),
            (1, 5),
            (2, 5),
            (2, 6),
            (3, 6),
            (3, 7),
        ],
    )
    .unwrap()
}

/// [`f4`] plus vertex 8 adjacent to `u1` and `u3`.
pub fn f4_suspended() -> Graph {
    f4().with_vertex(&[0, 2]).unwrap()
}

/// A chordal graph whose square is not chordal: an unsuspended sunflower of
/// size 5. `u1..u5` are ids 0..4, `w1..w5` ids 5..9; `u_i` is adjacent to
/// `w_{i-1}` and `w_i`, the `w`s form a 5-cycle with chords `w2w4` and
/// `w4w1`.
pub fn chordal_sunflower_5() -> Graph {
    Graph::from_edge_list(
        10,
        &[
            (0, 5),
            (0, 9),
            (1, 5),
            (1, 6),
            (2, 6),
            (2, 7),
            (3, 7),
            (3, 8),
            (4, 8),
            (4, 9),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 5),
            (6, 8),
            (8, 5),
        ],
    )
    .unwrap()
}

/// A sunflower of size 7 suspended by vertex 14. `u1..u7` are ids 0..6 and
/// `w1..w7` ids 7..13; the `w`s form a triangulated 7-gon and vertex 14 is
/// adjacent to `u4` and `u6`.
pub fn suspended_sunflower_7() -> Graph {
    let mut edges = Vec::new();
    for i in 0..7 {
        let w = 7 + i;
        let prev = 7 + (i + 6) % 7;
        edges.push((i, w));
        edges.push((i, prev));
        edges.push((w, 7 + (i + 1) % 7));
    }
    // w1w3, w1w4, w4w7, w4w6
    edges.extend([(7, 9), (7, 10), (10, 13), (10, 12)]);
    edges.extend([(14, 3), (14, 5)]);
    Graph::from_edge_list(15, &edges).unwrap()
}

/// The 5-cycle `0..4` with pendant vertices 5 at 2 and 6 at 3: hosts a
/// fertile sprout of size 4 with three `w`-edges and two pending edges.
pub fn sprout_c5_pendants() -> Graph {
    Graph::cycle(5)
        .with_vertex(&[2])
        .and_then(|g| g.with_vertex(&[3]))
        .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(f4().size(), 12);
        assert_eq!(chordal_sunflower_5().size(), 17);
        assert_eq!(suspended_sunflower_7().size(), 7 * 3 + 4 + 2);
        assert_eq!(p5a().size(), 5);
        assert_eq!(sprout_c5_pendants().size(), 7);
    }
}
