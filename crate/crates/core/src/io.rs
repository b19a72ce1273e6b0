//! Edge-list and graph6 text formats.
//!
//! Edge lists hold one `u v` pair per line. `#` starts a comment, blank lines
//! are ignored and a `vertices: a b c` line declares labels that may be
//! isolated. Repeated edges in either orientation are collapsed and counted.
//!
//! graph6 follows the standard definition: vertex `i` of the encoding is the
//! `i`-th smallest label of the graph, and decoding labels vertices `1..=n`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex, MAX_VERTICES};

/// Result of parsing an edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedEdgeList {
    pub graph: Graph,
    /// Number of lines that repeated an edge already seen.
    pub duplicate_edges: usize,
}

fn parse_label(token: &str, line: usize, text: &str) -> Result<Vertex> {
    let value: u64 = token.parse().map_err(|_| Error::Malformed {
        line,
        text: text.to_string(),
    })?;
    if value == 0 || value > MAX_VERTICES as u64 {
        return Err(Error::LabelOutOfRange { line, label: value });
    }
    Ok(value as Vertex)
}

pub fn parse_edge_list(text: &str) -> Result<ParsedEdgeList> {
    let mut graph = Graph::new();
    let mut duplicate_edges = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("vertices:") {
            for token in rest.split_whitespace() {
                graph.add_vertex(parse_label(token, line, raw)?)?;
            }
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Malformed {
                line,
                text: raw.to_string(),
            });
        }
        let u = parse_label(tokens[0], line, raw)?;
        let v = parse_label(tokens[1], line, raw)?;
        if u == v {
            return Err(Error::SelfLoop {
                line,
                vertex: u as u32,
            });
        }
        if !graph.add_edge(u, v)? {
            duplicate_edges += 1;
        }
    }
    Ok(ParsedEdgeList {
        graph,
        duplicate_edges,
    })
}

/// Canonical text form: a `vertices:` header only when some vertex is
/// isolated, then sorted `u v` lines with `u < v`.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    if g.vertices().any(|v| g.degree(v) == 0) {
        out.push_str("vertices:");
        for v in g.vertices() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn write_graph6(g: &Graph) -> String {
    let (_, adj) = g.dense();
    let n = adj.len();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | ((adj[j] >> i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("byte {b:#x} outside the printable range")));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::Graph6("graphs beyond 64 vertices are not supported".into()));
        }
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |n, &b| (n << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n > MAX_VERTICES {
        return Err(Error::Graph6(format!("{n} vertices exceeds the 64-vertex limit")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut g = Graph::with_vertices(1..=n as Vertex)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i as Vertex + 1, j as Vertex + 1)?;
            }
            k += 1;
        }
    }
    let padding = expected * 6 - pairs;
    if padding > 0 && (body[expected - 1] - 63) & ((1 << padding) - 1) != 0 {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_simple_list() {
        let p = parse_edge_list("1 2\n1 3").unwrap();
        assert_eq!(p.graph.order(), 3);
        assert_eq!(p.graph.size(), 2);
        assert_eq!(p.duplicate_edges, 0);
    }

    #[test]
    fn duplicate_in_reverse_orientation_is_counted() {
        let p = parse_edge_list("1 2\n2 1").unwrap();
        assert_eq!(p.graph.size(), 1);
        assert_eq!(p.duplicate_edges, 1);
    }

    #[test]
    fn header_comments_and_blanks() {
        let p = parse_edge_list("# a comment\nvertices: 1 2 3 9\n\n1 2 # trailing\n").unwrap();
        assert_eq!(p.graph.order(), 4);
        assert!(p.graph.contains_vertex(9));
        assert_eq!(p.graph.size(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_edge_list("1 2 3"), Err(Error::Malformed { line: 1, .. })));
        assert!(matches!(parse_edge_list("1 x"), Err(Error::Malformed { .. })));
        assert!(matches!(parse_edge_list("1 2\n4 4"), Err(Error::SelfLoop { line: 2, vertex: 4 })));
        assert!(matches!(
            parse_edge_list("1 65"),
            Err(Error::LabelOutOfRange { line: 1, label: 65 })
        ));
        assert!(matches!(parse_edge_list("0 1"), Err(Error::LabelOutOfRange { .. })));
    }

    #[test]
    fn edge_list_writer_is_stable() {
        let g = parse_edge_list("3 1\n2 1\nvertices: 7").unwrap().graph;
        let text = write_edge_list(&g);
        assert_eq!(text, "vertices: 1 2 3 7\n1 2\n1 3\n");
        assert_eq!(write_edge_list(&parse_edge_list(&text).unwrap().graph), text);
        assert_eq!(write_edge_list(&Graph::complete(3)), "1 2\n1 3\n2 3\n");
    }

    // Reference strings from the graph6 format description and common tools.
    #[test]
    fn graph6_known_strings() {
        let mut g = Graph::with_vertices(1..=5).unwrap();
        for (u, v) in [(1, 3), (1, 5), (2, 4), (4, 5)] {
            g.add_edge(u, v).unwrap();
        }
        assert_eq!(write_graph6(&g), "DQc");
        assert_eq!(write_graph6(&Graph::complete(4)), "C~");
        assert_eq!(write_graph6(&Graph::complete(6)), "E~~w");
        assert_eq!(write_graph6(&Graph::new()), "?");
        assert_eq!(parse_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn graph6_large_header() {
        let g = Graph::with_vertices(1..=63).unwrap().with_edge(1, 63).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
        let k64 = Graph::complete(64);
        assert_eq!(parse_graph6(&write_graph6(&k64)).unwrap(), k64);
    }

    #[test]
    fn graph6_rejects_bad_input() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D").is_err());
        assert!(parse_graph6("DQcc").is_err());
        assert!(parse_graph6("Bx").is_err());
    }
}
