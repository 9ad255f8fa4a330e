//! Plain-text edge lists and Graphviz export.
//!
//! An edge list starts with a header line `n <count>` followed by one
//! whitespace-separated `u v` pair per line, 0-based. Everything after `#` on
//! a line is a comment; blank lines are ignored. The canonical form written by
//! [`to_edge_list`] has no comments and lists each edge once as `u v` with
//! `u < v`, in lexicographic order, every line ending in `\n`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::infinite::Truncation;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_error(line, format!("expected a non-negative integer, found `{token}`")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let Some(count) = n else {
            if tokens.len() != 2 || tokens[0] != "n" {
                return Err(parse_error(line, "expected header `n <count>`"));
            }
            n = Some(parse_index(tokens[1], line)?);
            continue;
        };
        if tokens.len() != 2 {
            return Err(parse_error(line, format!("expected `u v`, found {} fields", tokens.len())));
        }
        let u = parse_index(tokens[0], line)?;
        let v = parse_index(tokens[1], line)?;
        for w in [u, v] {
            if w >= count {
                return Err(parse_error(line, format!("vertex {w} out of range for n = {count}")));
            }
        }
        if u == v {
            return Err(parse_error(line, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    let count = n.ok_or_else(|| parse_error(text.lines().count().max(1), "missing header `n <count>`"))?;
    Graph::from_edges(count, &edges)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn dot_id(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT graph with vertices named by index.
pub fn to_dot(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {} {{\n", dot_id(name));
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// DOT export of a finite window. Nodes carry their oracle ids and BFS
/// distance; the root is drawn doubled.
pub fn truncation_to_dot(t: &Truncation, name: &str) -> String {
    let mut out = format!("graph {} {{\n", dot_id(name));
    let _ = writeln!(out, "  label={};", dot_id(&format!("{name}, radius {}", t.radius)));
    for i in 0..t.n() {
        let shape = if t.distance[i] == 0 { ", shape=doublecircle" } else { "" };
        let _ = writeln!(out, "  v{} [label=\"{}\", distance={}{shape}];", t.global(i), t.global(i), t.distance[i]);
    }
    for (u, v) in t.graph.edges() {
        let _ = writeln!(out, "  v{} -- v{};", t.global(u), t.global(v));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infinite::Family;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# path\nn 3\n0 1 # first\n\n1   2\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn canonical_round_trip() {
        let text = "n 4\n0 1\n0 3\n2 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(to_edge_list(&g), text);
    }

    #[test]
    fn canonicalizes_order() {
        let g = parse_edge_list("n 3\n2 1\n1 0\n0 1\n").unwrap();
        assert_eq!(to_edge_list(&g), "n 3\n0 1\n1 2\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("# only a comment\n", 1),
            ("n x\n", 1),
            ("0 1\n", 1),
            ("n 2\n0 1\n0\n", 3),
            ("n 2\n\n0 2\n", 3),
            ("n 2\n1 1\n", 2),
            ("n 2\n0 -1\n", 2),
            ("n 2\n0 1 1\n", 2),
        ];
        for (text, line) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn empty_graph_header_only() {
        assert_eq!(parse_edge_list("n 0\n").unwrap().n(), 0);
        assert_eq!(to_edge_list(&Graph::empty(2)), "n 2\n");
    }

    #[test]
    fn dot_output() {
        let dot = to_dot(&Graph::path(3), "p3");
        assert_eq!(dot, "graph \"p3\" {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");
    }

    #[test]
    fn truncation_dot_uses_oracle_ids() {
        let t = Family::FanRay.oracle().truncate(1).unwrap();
        let dot = truncation_to_dot(&t, "fanray");
        assert!(dot.contains("v0 [label=\"0\", distance=0, shape=doublecircle]"));
        assert!(dot.contains("v1 -- v2;"));
    }
}
