//! The graph6 text format, short form only (at most 62 vertices).
//!
//! A graph on `n` vertices is the character `63 + n` followed by the upper
//! triangle of its adjacency matrix in column order, `(0,1), (0,2), (1,2),
//! (0,3), ..`, packed six bits per character (most significant bit first)
//! and offset by 63. Unused low bits of the last character are zero.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the short form can describe.
pub const GRAPH6_MAX_ORDER: usize = 62;

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let text = line.trim_end_matches(['\n', '\r']);
    let bytes = text.as_bytes();
    for (position, ch) in text.char_indices() {
        if !('?'..='~').contains(&ch) {
            return Err(Error::BadChar { position, ch });
        }
    }
    let Some(&header) = bytes.first() else {
        return Err(Error::Truncated("missing order byte".into()));
    };
    if header == b'~' {
        let order = long_order(bytes)?;
        return Err(Error::TooLarge {
            size: order,
            bound: GRAPH6_MAX_ORDER,
        });
    }
    let n = (header - 63) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < needed {
        return Err(Error::Truncated(format!(
            "{n} vertices need {needed} data characters, found {}",
            body.len()
        )));
    }
    if body.len() > needed {
        return Err(Error::Syntax {
            line: 1,
            message: format!(
                "{} characters after the adjacency data",
                body.len() - needed
            ),
        });
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (pairs..needed * 6).any(bit) {
        return Err(Error::TrailingBitsNonzero);
    }
    Graph::from_edge_list(n, &edges)
}

fn long_order(bytes: &[u8]) -> Result<usize> {
    if bytes.len() < 4 {
        return Err(Error::Truncated("long-form order".into()));
    }
    if bytes[1] == b'~' {
        // eight-byte order; far beyond anything this crate handles
        return Ok(usize::MAX);
    }
    Ok(bytes[1..4]
        .iter()
        .fold(0, |acc, &b| acc << 6 | (b - 63) as usize))
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::TooLarge {
            size: n,
            bound: GRAPH6_MAX_ORDER,
        });
    }
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((63 + n as u8) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}
