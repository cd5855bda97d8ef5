//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n m
//! u v      (m lines, 0-indexed)
//! ```
//!
//! Tokens are whitespace separated and `#` starts a comment anywhere on a line.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn write(graph: &Graph) -> String {
    let edges = graph.edges();
    let mut out = format!("{} {}\n", graph.vertex_count(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.split('#').next().unwrap_or("").trim()))
        .filter(|(_, line)| !line.is_empty());

    let err = |line: usize, message: String| Error::EdgeList { line, message };
    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header".into()))?;
    let [n, m] = parse_pair(header).map_err(|msg| err(header_line, msg))?;

    let mut edges = Vec::with_capacity(m);
    for (line, content) in lines {
        let [u, v] = parse_pair(content).map_err(|msg| err(line, msg))?;
        if edges.len() == m {
            return Err(err(line, format!("more than the declared {m} edges")));
        }
        if u >= n || v >= n {
            return Err(err(line, format!("vertex out of range for n={n}")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(
            text.lines().count().max(1),
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

fn parse_pair(line: &str) -> std::result::Result<[usize; 2], String> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(format!("expected two integers, found {:?}", line));
    }
    let parse = |t: &str| t.parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    Ok([parse(tokens[0])?, parse(tokens[1])?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn writes_sorted_edges() {
        let c4 = generators::cycle(4).unwrap();
        assert_eq!(write(&c4), "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(parse(&write(&c4)).unwrap(), c4);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# K2\n\n2 1 # header\n  1   0\n";
        assert_eq!(parse(text).unwrap(), generators::complete(2));
        assert_eq!(parse("3 0\n").unwrap(), Graph::edgeless(3));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse(""), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse("2 1\n0 2\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse("2 1\n1 1\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse("3 1\n0 1\n1 2\n"), Err(Error::EdgeList { line: 3, .. })));
        assert!(parse("3 2\n0 1\n").is_err());
        assert!(parse("3 x\n").is_err());
        assert!(parse("3 1\n0 1 2\n").is_err());
    }
}
