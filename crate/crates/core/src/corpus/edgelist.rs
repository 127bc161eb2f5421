//! Plain edge lists: a header line `n m`, then `m` lines `u v`. Anything
//! after `#` on a line is ignored, as are blank lines.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((line, header)) = lines.next() else {
        return Err(Error::Syntax {
            line: 1,
            message: "missing \"n m\" header".into(),
        });
    };
    let [n, m] = numbers(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let [u, v] = numbers(line, l)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::CountMismatch {
            expected: m,
            found: edges.len(),
        });
    }
    Graph::from_edge_list(n, &edges)
}

fn numbers(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Syntax {
            line,
            message: format!("expected two integers, found {:?}", text),
        });
    }
    let parse = |f: &str| {
        f.parse::<usize>().map_err(|_| Error::Syntax {
            line,
            message: format!("not a non-negative integer: {f:?}"),
        })
    };
    Ok([parse(fields[0])?, parse(fields[1])?])
}

pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(
            parse_edge_list("4 3\n0 1\n1 2\n2 3").unwrap(),
            Graph::path(4)
        );
        assert_eq!(parse_edge_list("3 0").unwrap(), Graph::empty(3).unwrap());
        assert_eq!(parse_edge_list("2 1\n0 0"), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a path\n\n4 3  # header\n0 1\n# middle\n1 2\n2 3\n";
        assert_eq!(parse_edge_list(text).unwrap(), Graph::path(4));
    }

    #[test]
    fn errors() {
        assert_eq!(
            parse_edge_list("3 2\n0 1"),
            Err(Error::CountMismatch {
                expected: 2,
                found: 1
            })
        );
        assert!(matches!(
            parse_edge_list(""),
            Err(Error::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x"),
            Err(Error::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 3"),
            Err(Error::OutOfRange {
                vertex: 3,
                order: 3
            })
        ));
    }

    #[test]
    fn round_trip() {
        let g = Graph::cycle(5).with_vertex(&[0, 2]).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }
}
