//! Text formats: graph6, edge lists, vertex sets, and decomposition JSON.
//!
//! Every parser reports the byte offset of the first problem and never
//! panics on malformed input.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use cind::structure::{Attachment, BlockDecomposition, Label};
use cind::{Graph, VertexSet};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest order accepted from text input; keeps allocations bounded.
pub const MAX_ORDER: usize = 10_000;

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("invalid graph6 byte {0:#04x}")]
    InvalidByte(u8),
    #[error("{0} trailing bytes")]
    Trailing(usize),
    #[error("order {0} exceeds the limit of {MAX_ORDER}")]
    TooLarge(u64),
    #[error("expected a non-negative integer, found {0:?}")]
    BadInteger(String),
    #[error("expected two vertices per edge line")]
    BadEdgeLine,
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{0}")]
    Graph(String),
    #[error("padding bits are not zero")]
    NonZeroPadding,
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("{slots} slot pairs for {edges} edges")]
    SlotCount { slots: usize, edges: usize },
}

fn err(offset: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { offset, kind }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    /// graph6 unless the input starts with a digit or `#`.
    #[default]
    Auto,
    Graph6,
    Edgelist,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "auto" => Ok(Format::Auto),
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" => Ok(Format::Edgelist),
            _ => Err(format!("unknown format {s:?} (auto, graph6, edgelist)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Auto => "auto",
            Format::Graph6 => "graph6",
            Format::Edgelist => "edgelist",
        })
    }
}

/// Parses one graph. For graph6 the input is a single line (surrounding
/// whitespace ignored); use [`parse_graphs`] for files with several.
pub fn parse_graph(input: &[u8], format: Format) -> Result<Graph, ParseError> {
    match resolve(input, format) {
        Format::Edgelist => parse_edgelist(input),
        _ => {
            let start = input
                .iter()
                .position(|b| !b.is_ascii_whitespace())
                .unwrap_or(input.len());
            let end = input
                .iter()
                .rposition(|b| !b.is_ascii_whitespace())
                .map_or(start, |p| p + 1);
            decode_graph6(&input[start..end]).map_err(|e| err(e.offset + start, e.kind))
        }
    }
}

/// All graphs in the input: one per non-empty line for graph6, a single
/// graph for edge lists.
pub fn parse_graphs(input: &[u8], format: Format) -> Result<Vec<Graph>, ParseError> {
    match resolve(input, format) {
        Format::Edgelist => Ok(vec![parse_edgelist(input)?]),
        _ => {
            let mut out = Vec::new();
            let mut offset = 0;
            for line in input.split(|&b| b == b'\n') {
                let trimmed = line.strip_suffix(b"\r").unwrap_or(line);
                if !trimmed.iter().all(u8::is_ascii_whitespace) {
                    out.push(parse_graph(trimmed, Format::Graph6).map_err(|e| err(e.offset + offset, e.kind))?);
                }
                offset += line.len() + 1;
            }
            Ok(out)
        }
    }
}

fn resolve(input: &[u8], format: Format) -> Format {
    match format {
        Format::Auto => match input.iter().find(|b| !b.is_ascii_whitespace()) {
            Some(b) if b.is_ascii_digit() || *b == b'#' => Format::Edgelist,
            _ => Format::Graph6,
        },
        f => f,
    }
}

pub fn emit_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Edgelist => emit_edgelist(g),
        _ => encode_graph6(g),
    }
}

/// Decodes one graph6 string, with or without the `>>graph6<<` header.
pub fn decode_graph6(bytes: &[u8]) -> Result<Graph, ParseError> {
    let mut pos = if bytes.starts_with(GRAPH6_HEADER.as_bytes()) {
        GRAPH6_HEADER.len()
    } else {
        0
    };
    let next = |pos: &mut usize| -> Result<u8, ParseError> {
        let b = *bytes
            .get(*pos)
            .ok_or_else(|| err(*pos, ParseErrorKind::UnexpectedEnd))?;
        if !(63..=126).contains(&b) {
            return Err(err(*pos, ParseErrorKind::InvalidByte(b)));
        }
        *pos += 1;
        Ok(b - 63)
    };
    let order_at = pos;
    let first = next(&mut pos)?;
    let n: u64 = if first < 63 {
        first as u64
    } else {
        let second = next(&mut pos)?;
        let groups = if second < 63 {
            pos -= 1;
            3
        } else {
            6
        };
        let mut v = 0u64;
        for _ in 0..groups {
            v = v << 6 | next(&mut pos)? as u64;
        }
        v
    };
    if n > MAX_ORDER as u64 {
        return Err(err(order_at, ParseErrorKind::TooLarge(n)));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &bytes[pos..];
    if data.len() < need {
        return Err(err(bytes.len(), ParseErrorKind::UnexpectedEnd));
    }
    if data.len() > need {
        return Err(err(pos + need, ParseErrorKind::Trailing(data.len() - need)));
    }
    let mut groups = Vec::with_capacity(need);
    for _ in 0..need {
        groups.push(next(&mut pos)?);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if groups[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 && groups[need - 1] & ((1 << (6 - bits % 6)) - 1) != 0 {
        return Err(err(pos - 1, ParseErrorKind::NonZeroPadding));
    }
    Graph::from_edges(n, edges).map_err(|e| err(order_at, ParseErrorKind::Graph(e.to_string())))
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

fn parse_usize(tok: &str, offset: usize) -> Result<usize, ParseError> {
    tok.parse::<usize>()
        .map_err(|_| err(offset, ParseErrorKind::BadInteger(tok.to_string())))
}

/// Tokens of a line with their byte offsets.
fn tokens(line: &str, base: usize) -> impl Iterator<Item = (usize, &str)> {
    line.split_ascii_whitespace()
        .map(move |t| (base + t.as_ptr() as usize - line.as_ptr() as usize, t))
}

/// Edge list: the order on the first line, then one `u v` pair per line,
/// 0-based. Blank lines and lines starting with `#` are skipped.
pub fn parse_edgelist(input: &[u8]) -> Result<Graph, ParseError> {
    let text = std::str::from_utf8(input).map_err(|e| {
        let at = e.valid_up_to();
        err(at, ParseErrorKind::InvalidByte(input[at]))
    })?;
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for raw in text.split('\n') {
        let base = offset;
        offset += raw.len() + 1;
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let toks: Vec<(usize, &str)> = tokens(line, base).collect();
        match n {
            None => {
                let &[(at, tok)] = toks.as_slice() else {
                    return Err(err(base, ParseErrorKind::BadEdgeLine));
                };
                let v = parse_usize(tok, at)?;
                if v > MAX_ORDER {
                    return Err(err(at, ParseErrorKind::TooLarge(v as u64)));
                }
                n = Some(v);
            }
            Some(order) => {
                let &[(au, u), (av, v)] = toks.as_slice() else {
                    return Err(err(base, ParseErrorKind::BadEdgeLine));
                };
                let (u, v) = (parse_usize(u, au)?, parse_usize(v, av)?);
                for (x, at) in [(u, au), (v, av)] {
                    if x >= order {
                        return Err(err(at, ParseErrorKind::VertexOutOfRange { vertex: x, n: order }));
                    }
                }
                edges.push((u, v, base));
            }
        }
    }
    let n = n.ok_or_else(|| err(input.len(), ParseErrorKind::UnexpectedEnd))?;
    let mut g_edges = Vec::with_capacity(edges.len());
    for (u, v, _) in &edges {
        g_edges.push((*u, *v));
    }
    Graph::from_edges(n, g_edges).map_err(|e| {
        // point at the first offending line
        let at = first_bad_edge(&edges).unwrap_or(0);
        err(at, ParseErrorKind::Graph(e.to_string()))
    })
}

fn first_bad_edge(edges: &[(usize, usize, usize)]) -> Option<usize> {
    let mut seen = HashSet::new();
    edges
        .iter()
        .find_map(|&(u, v, at)| (u == v || !seen.insert((u.min(v), u.max(v)))).then_some(at))
}

pub fn emit_edgelist(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Vertices separated by commas and/or whitespace, optionally in braces.
pub fn parse_vertex_set(input: &str, n: usize) -> Result<VertexSet, ParseError> {
    let mut set = VertexSet::new(n);
    let trimmed = input.trim();
    let base = input.len() - input.trim_start().len();
    let (body, base) = match trimmed.strip_prefix('{') {
        Some(rest) => match rest.strip_suffix('}') {
            Some(inner) => (inner, base + 1),
            None => return Err(err(base + trimmed.len(), ParseErrorKind::UnexpectedEnd)),
        },
        None => (trimmed, base),
    };
    let mut offset = base;
    for piece in body.split(|c: char| c == ',' || c.is_ascii_whitespace()) {
        if !piece.is_empty() {
            let v = parse_usize(piece, offset)?;
            if v >= n {
                return Err(err(offset, ParseErrorKind::VertexOutOfRange { vertex: v, n }));
            }
            set.insert(v);
        }
        offset += piece.len() + 1;
    }
    Ok(set)
}

pub fn emit_vertex_set(s: &VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// On-disk shape of a [`BlockDecomposition`]. `slots` may be omitted, in
/// which case every edge takes the lowest free slot at both ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionDoc {
    pub labels: Vec<Label>,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub slots: Option<Vec<[usize; 2]>>,
}

/// Reads decomposition JSON. Only the shape is checked here; use
/// [`BlockDecomposition::validate`] for the structural invariants.
pub fn parse_decomposition(input: &[u8]) -> Result<BlockDecomposition, ParseError> {
    let doc: DecompositionDoc = serde_json::from_slice(input).map_err(|e| {
        let at = json_offset(input, e.line(), e.column());
        err(at, ParseErrorKind::Json(e.to_string()))
    })?;
    let n = doc.labels.len();
    if n > MAX_ORDER {
        return Err(err(0, ParseErrorKind::TooLarge(n as u64)));
    }
    // bound the assembled graph before anything allocates it
    let mut order = 0usize;
    for label in &doc.labels {
        if let Some(k) = label.kind().and_then(|k| k.rungs()) {
            if k > MAX_ORDER {
                return Err(err(0, ParseErrorKind::TooLarge(k as u64)));
            }
        }
        order += label.order();
    }
    if order > MAX_ORDER {
        return Err(err(0, ParseErrorKind::TooLarge(order as u64)));
    }
    for &[u, v] in &doc.edges {
        for x in [u, v] {
            if x >= n {
                return Err(err(0, ParseErrorKind::VertexOutOfRange { vertex: x, n }));
            }
        }
    }
    let tree = Graph::from_edges(n, doc.edges.iter().map(|&[u, v]| (u, v)))
        .map_err(|e| err(0, ParseErrorKind::Graph(e.to_string())))?;
    let Some(slots) = doc.slots else {
        return Ok(BlockDecomposition::with_default_slots(tree, doc.labels));
    };
    if slots.len() != doc.edges.len() {
        return Err(err(
            0,
            ParseErrorKind::SlotCount {
                slots: slots.len(),
                edges: doc.edges.len(),
            },
        ));
    }
    let mut attachments: Vec<Attachment> = doc
        .edges
        .iter()
        .zip(&slots)
        .map(|(&[u, v], &[su, sv])| {
            if u < v {
                Attachment {
                    edge: (u, v),
                    slots: (su, sv),
                }
            } else {
                Attachment {
                    edge: (v, u),
                    slots: (sv, su),
                }
            }
        })
        .collect();
    attachments.sort_by_key(|a| a.edge);
    Ok(BlockDecomposition {
        tree,
        labels: doc.labels,
        attachments,
    })
}

/// Writes decomposition JSON with explicit slots.
pub fn emit_decomposition(dec: &BlockDecomposition) -> String {
    let doc = DecompositionDoc {
        labels: dec.labels.clone(),
        edges: dec.attachments.iter().map(|a| [a.edge.0, a.edge.1]).collect(),
        slots: Some(dec.attachments.iter().map(|a| [a.slots.0, a.slots.1]).collect()),
    };
    serde_json::to_string_pretty(&doc).expect("decomposition serialises")
}

fn json_offset(input: &[u8], line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let mut offset = 0;
    for (i, l) in input.split(|&b| b == b'\n').enumerate() {
        if i + 1 == line {
            return (offset + column.saturating_sub(1)).min(input.len());
        }
        offset += l.len() + 1;
    }
    input.len()
}
