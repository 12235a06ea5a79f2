//! graph6 and JSON edge-list encodings.
//!
//! graph6: a size prefix followed by the upper triangle of the adjacency
//! matrix in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed
//! six bits per byte with 63 added. An optional `>>graph6<<` header is
//! accepted when parsing.

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn g6_err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        msg: msg.into(),
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    if text.starts_with(HEADER) {
        pos = HEADER.len();
    }
    let end = bytes
        .iter()
        .rposition(|b| !b.is_ascii_whitespace())
        .map_or(0, |i| i + 1);
    let body = &bytes[..end.max(pos)];

    let sextet = |at: usize| -> Result<u64> {
        match body.get(at) {
            None => Err(g6_err(at, "unexpected end of input")),
            Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
            Some(&b) => Err(g6_err(
                at,
                format!("byte {b:#04x} outside the graph6 range 63..=126"),
            )),
        }
    };

    let n = match sextet(pos)? {
        63 => {
            if sextet(pos + 1)? == 63 {
                let n = (0..6).try_fold(0u64, |acc, i| {
                    Ok::<_, Error>((acc << 6) | sextet(pos + 2 + i)?)
                })?;
                pos += 8;
                n
            } else {
                let n = (0..3).try_fold(0u64, |acc, i| {
                    Ok::<_, Error>((acc << 6) | sextet(pos + 1 + i)?)
                })?;
                pos += 4;
                n
            }
        }
        small => {
            pos += 1;
            small
        }
    } as usize;

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != pos + need {
        let at = (pos + need).min(body.len());
        return Err(g6_err(
            at,
            format!(
                "expected {need} data bytes for {n} vertices, found {}",
                body.len() - pos
            ),
        ));
    }
    let mut g = Graph::new(n);
    let mut bit = 0;
    for j in 1..n {
        for i in 0..j {
            let at = pos + bit / 6;
            if sextet(at)? >> (5 - bit % 6) & 1 == 1 {
                g.set(i, j, true);
            }
            bit += 1;
        }
    }
    // padding bits are ignored, as other graph6 readers do
    Ok(g)
}

#[derive(Serialize, Deserialize)]
struct EdgeList {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EdgeList {
            n: self.vertex_count(),
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
        .serialize(s)
    }
}

/// Either an edge list object or a graph6 string.
#[derive(Deserialize)]
#[serde(untagged)]
enum GraphRepr {
    List(EdgeList),
    Graph6(String),
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match GraphRepr::deserialize(d)? {
            GraphRepr::List(el) => {
                Graph::from_edges(el.n, el.edges.into_iter().map(|[u, v]| (u, v)))
            }
            GraphRepr::Graph6(text) => from_graph6(&text),
        }
        .map_err(D::Error::custom)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(g).expect("graphs always serialize")
}

pub fn from_json(text: &str) -> Result<Graph> {
    Ok(serde_json::from_str(text)?)
}

/// Reads either encoding. Content starting with `{` is tried as JSON first;
/// graph6 also uses that byte (n = 60), so a JSON failure falls back.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        match from_json(trimmed) {
            Ok(g) => return Ok(g),
            Err(json_err) => return from_graph6(trimmed.trim_end()).map_err(|_| json_err),
        }
    }
    from_graph6(trimmed.trim_end())
}
