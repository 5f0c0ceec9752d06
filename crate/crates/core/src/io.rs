//! Plain-text edge lists.
//!
//! One link per line, `i j [w]`, whitespace separated, 0-based node ids.
//! A missing weight means 1.0. Lines starting with `#` are comments,
//! except that `# nodes: n` fixes the node count; without it the count is
//! one more than the largest id seen.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{build_graph, WeightedGraph};

pub fn parse_edge_list(text: &str) -> Result<WeightedGraph> {
    let mut declared: Option<usize> = None;
    let mut links = Vec::new();
    let mut max_id: Option<usize> = None;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(value) = comment.trim().strip_prefix("nodes:") {
                let n = value.trim().parse::<usize>().map_err(|e| Error::Parse {
                    line: line_no,
                    msg: format!("bad node count: {e}"),
                })?;
                declared = Some(n);
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(Error::Parse {
                line: line_no,
                msg: format!("expected 2 or 3 fields, found {}", fields.len()),
            });
        }
        let id = |s: &str| {
            s.parse::<usize>().map_err(|e| Error::Parse {
                line: line_no,
                msg: format!("bad node id {s:?}: {e}"),
            })
        };
        let (i, j) = (id(fields[0])?, id(fields[1])?);
        let w = match fields.get(2) {
            Some(s) => s.parse::<f64>().map_err(|e| Error::Parse {
                line: line_no,
                msg: format!("bad weight {s:?}: {e}"),
            })?,
            None => 1.0,
        };
        max_id = Some(max_id.map_or(i.max(j), |m| m.max(i).max(j)));
        links.push((i, j, w));
    }
    let n = match (declared, max_id) {
        (Some(n), _) => n,
        (None, Some(m)) => m + 1,
        (None, None) => 0,
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    build_graph(n, links)
}

/// Edge list with a `# nodes:` header. Weights use Rust's shortest
/// round-trip formatting, so parsing the output gives the same graph.
pub fn write_edge_list(g: &WeightedGraph) -> String {
    let mut out = String::new();
    writeln!(out, "# nodes: {}", g.node_count()).unwrap();
    for l in g.links() {
        writeln!(out, "{} {} {:?}", l.i, l.j, l.weight).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_weighted_and_unweighted_lines() {
        let g = parse_edge_list("# a comment\n0 1 2.5\n1 2\n\n  2 0 0.25  \n").unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.weight(0, 1), Some(2.5));
        assert_eq!(g.weight(1, 2), Some(1.0));
        assert_eq!(g.weight(0, 2), Some(0.25));
    }

    #[test]
    fn header_adds_isolated_nodes() {
        let g = parse_edge_list("# nodes: 5\n0 1\n").unwrap();
        assert_eq!(g.node_count(), 5);
        assert!(!g.is_connected());
    }

    #[test]
    fn round_trip_is_exact() {
        let g = build_graph(4, [(0, 1, 0.1), (1, 3, 1.0 / 3.0), (2, 3, 7e-12)]).unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_edge_list("0 1\n1 x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                msg: "bad node id \"x\": invalid digit found in string".into()
            }
        );
        assert!(matches!(parse_edge_list("0 1 2 3\n"), Err(Error::Parse { line: 1, .. })));
        assert_eq!(parse_edge_list("# empty\n"), Err(Error::EmptyGraph));
        assert_eq!(parse_edge_list("0 1\n1 0 2\n"), Err(Error::DuplicateLink(0, 1)));
    }
}
