//! Plain-text graph formats.
//!
//! Edge list:
//!
//! ```text
//! # comment
//! p <n> <m>
//! e <u> <v>      (exactly m lines, 0 <= u < v < n)
//! ```
//!
//! Hoffman graph (slims `0..s`, fats `s..s+f`; fat-fat edges are rejected):
//!
//! ```text
//! h <s> <f>
//! e <u> <v>
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hoffman::HoffmanGraph;

/// A parsed file in either format.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFile {
    Plain(Graph),
    Hoffman(HoffmanGraph),
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.trim();
        (!line.is_empty() && !line.starts_with('#'))
            .then(|| (i + 1, line.split_ascii_whitespace().collect()))
    })
}

fn numbers<const N: usize>(line: usize, tag: &str, fields: &[&str]) -> Result<[usize; N]> {
    if fields.first() != Some(&tag) || fields.len() != N + 1 {
        return Err(parse_err(
            line,
            format!("expected `{tag}` followed by {N} integers"),
        ));
    }
    let mut out = [0; N];
    for (slot, field) in out.iter_mut().zip(&fields[1..]) {
        *slot = field
            .parse()
            .map_err(|_| parse_err(line, format!("`{field}` is not a nonnegative integer")))?;
    }
    Ok(out)
}

fn edge(line: usize, fields: &[&str], n: usize) -> Result<(usize, usize)> {
    let [u, v] = numbers::<2>(line, "e", fields)?;
    if u >= v {
        return Err(parse_err(
            line,
            format!("edge endpoints must satisfy u < v, got {u} {v}"),
        ));
    }
    if v >= n {
        return Err(parse_err(
            line,
            format!("vertex {v} out of range (n = {n})"),
        ));
    }
    Ok((u, v))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut recs = records(text);
    let (hline, header) = recs
        .next()
        .ok_or_else(|| parse_err(0, "missing `p` header"))?;
    let [n, m] = numbers::<2>(hline, "p", &header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last_line = hline;
    for (line, fields) in recs {
        if edges.len() == m {
            return Err(parse_err(line, format!("more than the declared {m} edges")));
        }
        let e = edge(line, &fields, n)?;
        if !seen.insert(e) {
            return Err(parse_err(line, format!("duplicate edge {} {}", e.0, e.1)));
        }
        edges.push(e);
        last_line = line;
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").expect("writing to a String");
    }
    out
}

pub fn parse_hoffman(text: &str) -> Result<HoffmanGraph> {
    let mut recs = records(text);
    let (hline, header) = recs
        .next()
        .ok_or_else(|| parse_err(0, "missing `h` header"))?;
    let [s, f] = numbers::<2>(hline, "h", &header)?;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line, fields) in recs {
        let (u, v) = edge(line, &fields, s + f)?;
        if u >= s {
            return Err(parse_err(line, format!("fat-fat edge {u} {v}")));
        }
        if !seen.insert((u, v)) {
            return Err(parse_err(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    HoffmanGraph::from_edges(s, f, edges)
}

pub fn write_hoffman(h: &HoffmanGraph) -> String {
    let mut out = format!("h {} {}\n", h.slim_count(), h.fat_count());
    for (u, v) in h.graph().edges() {
        writeln!(out, "e {u} {v}").expect("writing to a String");
    }
    out
}

/// Parses either format, chosen by the header tag.
pub fn parse_any(text: &str) -> Result<GraphFile> {
    match records(text).next() {
        Some((_, fields)) if fields.first() == Some(&"h") => {
            parse_hoffman(text).map(GraphFile::Hoffman)
        }
        _ => parse_edge_list(text).map(GraphFile::Plain),
    }
}
