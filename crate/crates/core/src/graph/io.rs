//! Edge-list and graph6 text formats.
//!
//! Edge lists are UTF-8 lines `u v` with 0-based vertex ids; `#` starts a
//! comment and blank lines are ignored. A line holding a single id declares
//! that vertex without edges, which is how trailing isolated vertices survive
//! a round trip. graph6 follows the usual header-less encoding and supports
//! graphs on at most 62 vertices.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_MAX_N: usize = 62;
const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edges" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(Error::invalid(format!("unknown graph format {other:?}"))),
        }
    }
}

/// Parses `text` in the given format, or guesses it when `format` is `None`:
/// a lone non-numeric token is read as graph6, anything else as an edge list.
pub fn parse_graph(text: &str, format: Option<GraphFormat>) -> Result<Graph> {
    let format = format.unwrap_or_else(|| {
        let first = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .find(|l| !l.is_empty());
        match first {
            Some(line)
                if line.split_whitespace().count() == 1
                    && !line.chars().all(|c| c.is_ascii_digit()) =>
            {
                GraphFormat::Graph6
            }
            _ => GraphFormat::EdgeList,
        }
    });
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut n = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let ids = line
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("expected a vertex id, found {t:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        match ids[..] {
            [v] => n = n.max(v + 1),
            [u, v] => {
                if u == v {
                    return Err(Error::SelfLoop(u));
                }
                n = n.max(u.max(v) + 1);
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected \"u v\", found {line:?}"),
                })
            }
        }
    }
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    if g.n() > 0 && g.degree(g.n() - 1) == 0 {
        let _ = writeln!(out, "{}", g.n() - 1);
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut payload = text.trim();
    if let Some(rest) = payload.strip_prefix(GRAPH6_HEADER) {
        payload = rest.trim_start();
    }
    let bytes = payload.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::Graph6("empty input".into()));
    };
    if first == b'~' {
        return Err(Error::Graph6(format!(
            "long-form size prefix (more than {GRAPH6_MAX_N} vertices) is not supported"
        )));
    }
    if let Some(bad) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::Graph6(format!("byte {bad:#04x} outside the printable range 63..=126")));
    }
    let n = (first - 63) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let data = &bytes[1..];
    if data.len() != expected {
        return Err(Error::Graph6(format!(
            "{n} vertices need {expected} data bytes, found {}",
            data.len()
        )));
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (pairs..expected * 6).any(bit) {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::Graph6(format!("{n} vertices exceeds the supported {GRAPH6_MAX_N}")));
    }
    let mut out = String::with_capacity(2 + n * n / 12);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    Ok(out)
}
