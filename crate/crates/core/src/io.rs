//! Text and JSON formats for oriented graphs.
//!
//! Text: a header line `n m`, then `m` lines `u v`, each an arc `u → v`
//! (or an edge when read as an undirected graph). Blank lines and lines
//! starting with `#` are ignored. JSON: `{"n": 4, "arcs": [[0, 1], ...]}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::{Graph, OrientedGraph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub arcs: Vec<[usize; 2]>,
}

impl From<&OrientedGraph> for GraphJson {
    fn from(g: &OrientedGraph) -> Self {
        Self {
            n: g.order(),
            arcs: g.arcs().map(|(u, v)| [u, v]).collect(),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// A vertex pair tagged with its source line (0 for JSON input).
type LinedPair = (usize, (usize, usize));

/// `(n, pairs)` from either format.
fn parse_pairs(text: &str) -> Result<(usize, Vec<LinedPair>)> {
    if text.trim_start().starts_with('{') {
        let doc: GraphJson = serde_json::from_str(text)
            .map_err(|e| parse_err(e.line(), format!("invalid JSON: {e}")))?;
        let pairs = doc.arcs.iter().map(|&[u, v]| (0, (u, v))).collect();
        return Ok((doc.n, pairs));
    }

    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let [n, m] = parse_two(header, header_line, "header `n m`")?;

    let mut pairs = Vec::with_capacity(m);
    for (line, content) in lines {
        if pairs.len() == m {
            return Err(parse_err(line, format!("more than the {m} declared lines")));
        }
        let [u, v] = parse_two(content, line, "`u v`")?;
        for w in [u, v] {
            if w >= n {
                return Err(parse_err(line, format!("vertex {w} out of range 0..{n}")));
            }
        }
        if u == v {
            return Err(parse_err(line, format!("loop at vertex {u}")));
        }
        pairs.push((line, (u, v)));
    }
    if pairs.len() != m {
        let last = text.lines().count().max(1);
        return Err(parse_err(
            last,
            format!("expected {m} lines after the header, found {}", pairs.len()),
        ));
    }
    Ok((n, pairs))
}

fn parse_two(content: &str, line: usize, what: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(line, format!("expected {what}, got `{content}`")));
    }
    let mut out = [0; 2];
    for (slot, f) in out.iter_mut().zip(&fields) {
        *slot = f
            .parse()
            .map_err(|_| parse_err(line, format!("`{f}` is not a nonnegative integer")))?;
    }
    Ok(out)
}

/// Reads an oriented graph from the text or JSON format.
pub fn parse_oriented(text: &str) -> Result<OrientedGraph> {
    let (n, pairs) = parse_pairs(text)?;
    let mut seen = std::collections::BTreeMap::new();
    for &(line, (u, v)) in &pairs {
        if let Some(prev) = seen.insert((u.min(v), u.max(v)), line) {
            return Err(parse_err(
                line,
                format!("edge {{{u}, {v}}} already given on line {prev}"),
            ));
        }
    }
    OrientedGraph::from_arcs(n, pairs.into_iter().map(|(_, p)| p))
        .map_err(|e| parse_err(0, e.to_string()))
}

/// Reads an undirected graph; each pair is an edge.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let (n, pairs) = parse_pairs(text)?;
    Graph::new(n, pairs.into_iter().map(|(_, p)| p)).map_err(|e| parse_err(0, e.to_string()))
}

pub fn to_text(g: &OrientedGraph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.arc_count());
    for (u, v) in g.arcs() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn to_json(g: &OrientedGraph) -> String {
    serde_json::to_string(&GraphJson::from(g)).expect("plain data serializes")
}
