//! graph6 for simple graphs and a small JSON dialect for weighted graphs.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{Graph, WeightedGraph};
use crate::arith::{format_rational, parse_rational};
use crate::error::{Error, Result};

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Size header followed by `bits` packed six to a byte, big-endian, zero padded.
pub(crate) fn encode_graph6_bits(n: usize, bits: &[bool]) -> Vec<u8> {
    let mut out = Vec::with_capacity(8 + bits.len() / 6 + 1);
    encode_size(n, &mut out);
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                byte |= 1 << (5 - i);
            }
        }
        out.push(byte + 63);
    }
    out
}

/// Header-less graph6 encoding.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    String::from_utf8(encode_graph6_bits(n, &bits)).expect("graph6 is ascii")
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

/// Parses graph6, with or without the `>>graph6<<` header. Surrounding
/// whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let lead = text.len() - text.trim_start().len();
    let mut bytes = text.trim().as_bytes();
    let mut base = lead;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base += 10;
    }
    let sextet = |i: usize| -> Result<u8> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
            Some(&b) => Err(parse_err(base + i, format!("byte {b:#04x} outside graph6 range"))),
            None => Err(parse_err(base + i, "unexpected end of input")),
        }
    };
    let (n, mut pos) = match bytes.first() {
        None => return Err(parse_err(base, "empty graph6 string")),
        Some(126) if bytes.get(1) == Some(&126) => {
            let mut n = 0usize;
            for i in 2..8 {
                n = (n << 6) | sextet(i)? as usize;
            }
            (n, 8)
        }
        Some(126) => {
            let mut n = 0usize;
            for i in 1..4 {
                n = (n << 6) | sextet(i)? as usize;
            }
            (n, 4)
        }
        Some(_) => (sextet(0)? as usize, 1),
    };
    let total_bits = n * n.saturating_sub(1) / 2;
    let expected = pos + total_bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(parse_err(
            base + bytes.len().min(expected),
            format!("expected {} bytes for {n} vertices, found {}", expected, bytes.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if bit.is_multiple_of(6) {
                current = sextet(pos)?;
                pos += 1;
            }
            if current >> (5 - bit % 6) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) && current & ((1u8 << (6 - bit % 6)) - 1) != 0 {
        return Err(parse_err(base + pos - 1, "nonzero padding bits"));
    }
    Graph::new(n, edges)
}

#[derive(Serialize, Deserialize)]
struct WeightedJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    loops: Vec<usize>,
    vw: Vec<String>,
    ew: Vec<String>,
    lw: Vec<String>,
}

/// `{"n", "edges", "loops", "vw", "ew", "lw"}` with rationals as `"p/q"`.
pub fn write_weighted_json(w: &WeightedGraph) -> String {
    let mut doc = WeightedJson {
        n: w.vertex_count(),
        edges: Vec::new(),
        loops: Vec::new(),
        vw: w.vertex_weights().iter().map(format_rational).collect(),
        ew: Vec::new(),
        lw: Vec::new(),
    };
    for (&(u, v), weight) in w.weighted_edges() {
        if u == v {
            doc.loops.push(u);
            doc.lw.push(format_rational(weight));
        } else {
            doc.edges.push([u, v]);
            doc.ew.push(format_rational(weight));
        }
    }
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn parse_weighted_json(text: &str) -> Result<WeightedGraph> {
    let doc: WeightedJson = serde_json::from_str(text).map_err(|e| {
        // serde_json reports line/column; convert to a byte offset
        let offset = text.split_inclusive('\n').take(e.line().saturating_sub(1)).map(str::len).sum::<usize>()
            + e.column().saturating_sub(1);
        parse_err(offset, e.to_string())
    })?;
    let field_err = |name: &str, msg: String| parse_err(0, format!("field `{name}`: {msg}"));
    if doc.vw.len() != doc.n {
        return Err(field_err("vw", format!("expected {} weights, found {}", doc.n, doc.vw.len())));
    }
    if doc.ew.len() != doc.edges.len() {
        return Err(field_err("ew", "must be parallel to `edges`".into()));
    }
    if doc.lw.len() != doc.loops.len() {
        return Err(field_err("lw", "must be parallel to `loops`".into()));
    }
    let rat = |name: &str, s: &str| parse_rational(s).map_err(|e| field_err(name, e.to_string()));
    let vw = doc.vw.iter().map(|s| rat("vw", s)).collect::<Result<Vec<_>>>()?;
    let mut edges: Vec<((usize, usize), BigRational)> = Vec::new();
    for ([u, v], s) in doc.edges.iter().zip(&doc.ew) {
        if u == v {
            return Err(field_err("edges", format!("loop ({u},{v}) belongs in `loops`")));
        }
        edges.push(((*u, *v), rat("ew", s)?));
    }
    for (&v, s) in doc.loops.iter().zip(&doc.lw) {
        edges.push(((v, v), rat("lw", s)?));
    }
    WeightedGraph::new(vw, edges)
}
