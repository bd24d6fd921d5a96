//! graph6 and JSON edge-list encodings.

use serde::{Deserialize, Serialize};

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// JSON edge-list form `{"n": int, "edges": [[i, j], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl Graph {
    /// graph6 encoding (no header, no trailing newline).
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
        if n <= 62 {
            out.push(n as u8 + 63);
        } else {
            out.push(126);
            out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|b| b as u8 + 63));
        }
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = (acc << 1) | self.has_edge(i, j) as u8;
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
        let text = text.trim_end_matches(['\n', '\r']);
        let text = text.strip_prefix(HEADER).unwrap_or(text);
        let bytes = text.as_bytes();
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(Error::Graph6(format!("byte {b:#04x} outside 63..=126")));
        }
        let (n, body) = match bytes {
            [] => return Err(Error::Graph6("empty string".into())),
            [126, 126, ..] => {
                return Err(Error::Graph6("graphs this large are unsupported".into()))
            }
            [126, rest @ ..] => {
                if rest.len() < 3 {
                    return Err(Error::Graph6("truncated size field".into()));
                }
                let n = rest[..3]
                    .iter()
                    .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
                if n < 63 {
                    return Err(Error::Graph6(format!("non-canonical size field for n={n}")));
                }
                (n, &rest[3..])
            }
            [first, rest @ ..] => ((first - 63) as usize, rest),
        };
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::Graph6(format!(
                "vertex count {n} outside 1..={MAX_VERTICES}"
            )));
        }
        let nbits = n * (n - 1) / 2;
        if body.len() != nbits.div_ceil(6) {
            return Err(Error::Graph6(format!(
                "expected {} data bytes for n={n}, found {}",
                nbits.div_ceil(6),
                body.len()
            )));
        }
        let bit_at = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
        if (nbits..body.len() * 6).any(bit_at) {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
        let mut g = Graph::new(n)?;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bit_at(k) {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.n(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_edge_list(list: &EdgeList) -> Result<Graph> {
        let edges: Vec<(usize, usize)> = list.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(list.n, &edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_edge_list()).expect("edge list serializes")
    }

    pub fn from_json(text: &str) -> Result<Graph> {
        Graph::from_edge_list(&serde_json::from_str(text)?)
    }
}

/// Serialized as its graph6 string.
impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_graph6())
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Graph, D::Error> {
        let text = String::deserialize(d)?;
        Graph::from_graph6(&text).map_err(serde::de::Error::custom)
    }
}
