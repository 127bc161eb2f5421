//! Graphviz output with optional witness highlighting.
//!
//! Highlighted vertices carry a `role` attribute (`u`, `w`, `pending`,
//! `withering`, `hole`) and a colour; highlighted edges likewise.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::graph::{edge, Edge, Graph};
use crate::patterns::{FlowerWitness, SproutWitness, SunflowerWitness};

/// A structure to draw on top of the graph.
#[derive(Clone, Copy, Debug)]
pub enum Highlight<'a> {
    Hole(&'a [usize]),
    Flower(&'a FlowerWitness),
    Sunflower(&'a SunflowerWitness),
    Sprout(&'a SproutWitness),
}

fn colour(role: &str) -> &'static str {
    match role {
        "u" => "red",
        "w" => "blue",
        "pending" => "darkgreen",
        "withering" => "orange",
        _ => "purple",
    }
}

pub fn write_dot(g: &Graph, highlight: Option<Highlight<'_>>) -> String {
    let mut vertex_role: BTreeMap<usize, &str> = BTreeMap::new();
    let mut edge_role: BTreeMap<Edge, &str> = BTreeMap::new();
    match highlight {
        None => {}
        Some(Highlight::Hole(cycle)) => {
            for (i, &v) in cycle.iter().enumerate() {
                vertex_role.insert(v, "hole");
                edge_role.insert(edge(v, cycle[(i + 1) % cycle.len()]), "hole");
            }
        }
        Some(Highlight::Flower(f)) => {
            for &v in &f.w {
                vertex_role.insert(v, "w");
            }
            for &v in &f.u {
                vertex_role.insert(v, "u");
            }
            for &v in &f.pending {
                vertex_role.insert(v, "pending");
            }
            if let Some(v) = f.withered_by {
                vertex_role.insert(v, "withering");
            }
        }
        Some(Highlight::Sunflower(s)) => {
            for &v in &s.w {
                vertex_role.insert(v, "w");
            }
            for &v in &s.u {
                vertex_role.insert(v, "u");
            }
            if let Some(v) = s.suspended_by {
                vertex_role.insert(v, "withering");
            }
        }
        Some(Highlight::Sprout(s)) => {
            for &e in &s.w_edges {
                edge_role.insert(e, "w");
            }
            for &e in &s.u_edges {
                edge_role.insert(e, "u");
            }
            for &e in &s.pending {
                edge_role.insert(e, "pending");
            }
            if let Some(e) = s.infertile_by {
                edge_role.insert(e, "withering");
            }
        }
    }

    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        match vertex_role.get(&v) {
            Some(role) => {
                let _ = writeln!(out, "  {v} [role=\"{role}\", color=\"{}\"];", colour(role));
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        match edge_role.get(&(u, v)) {
            Some(role) => {
                let _ = writeln!(
                    out,
                    "  {u} -- {v} [role=\"{role}\", color=\"{}\", penwidth=2];",
                    colour(role)
                );
            }
            None => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::find_flowers;

    #[test]
    fn triangle() {
        let dot = write_dot(&Graph::complete(3), None);
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(
            dot.lines()
                .filter(|l| l.trim_end().ends_with(';') && !l.contains("--"))
                .count(),
            3
        );
        assert!(dot.starts_with("graph G {"));
    }

    #[test]
    fn empty_graph_is_header_and_footer() {
        assert_eq!(write_dot(&Graph::empty(0).unwrap(), None), "graph G {\n}\n");
    }

    #[test]
    fn flower_roles() {
        let g = Graph::cycle(8);
        let f = find_flowers(&g, 4)
            .unwrap()
            .into_iter()
            .find(|f| f.w[0] == 1)
            .unwrap();
        let dot = write_dot(&g, Some(Highlight::Flower(&f)));
        for w in [1, 3, 5, 7] {
            assert!(dot.contains(&format!("  {w} [role=\"w\"")));
        }
        for u in [0, 2, 4, 6] {
            assert!(dot.contains(&format!("  {u} [role=\"u\"")));
        }
    }
}
