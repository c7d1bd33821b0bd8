//! Plain-text edge-list format.
//!
//! ```text
//! # optional comment lines
//! n m
//! u v        (m lines; u == v records a loop on u)
//! ```
//!
//! Integers are decimal and whitespace separated. Blank lines are ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;
use std::fmt::Write as _;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing header line \"n m\"".into(),
    })?;
    let [n, m] = parse_pair(header_line, header, "header")?;

    let mut g = Graph::empty(n);
    let mut seen = 0usize;
    for (line, body) in lines {
        if seen == m {
            return Err(parse_err(line, format!("more than the {m} declared lines")));
        }
        let [u, v] = parse_pair(line, body, "edge")?;
        for x in [u, v] {
            if x >= n {
                return Err(parse_err(line, format!("vertex {x} out of range for n = {n}")));
            }
        }
        if u == v {
            if g.has_loop(u) {
                return Err(parse_err(line, format!("duplicate loop on {u}")));
            }
            g.add_loop(u).expect("vertex checked");
        } else if g.has_edge(u, v) {
            return Err(parse_err(line, format!("duplicate edge {{{u}, {v}}}")));
        } else {
            g.add_edge(u, v).expect("edge checked");
        }
        seen += 1;
    }
    if seen < m {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("header declares {m} lines but only {seen} follow"),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, body: &str, what: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(
            line,
            format!("malformed {what}: expected two integers, found {:?}", body),
        ));
    }
    let mut out = [0usize; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f
            .parse()
            .map_err(|_| parse_err(line, format!("malformed {what}: {f:?} is not a count")))?;
    }
    Ok(out)
}

fn parse_err(line: usize, message: String) -> Error {
    Error::Parse { line, message }
}

/// Serializes `g` with edges in lexicographic order followed by loops.
pub fn to_edge_list(g: &Graph) -> String {
    let edges: Vec<_> = g.edges().collect();
    write_edge_list(g.n(), &edges, &g.loops().to_vec())
}

/// Serializes an explicit edge sequence, preserving its order.
pub fn write_edge_list(n: usize, edges: &[(usize, usize)], loops: &[usize]) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", n, edges.len() + loops.len()).unwrap();
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    for v in loops {
        writeln!(out, "{v} {v}").unwrap();
    }
    out
}
