//! Text formats: graph6, edge lists and labeling documents.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};
use crate::labeling::Labeling;

/// Largest order the short graph6 header can express.
pub const GRAPH6_MAX_ORDER: usize = 62;

/// Upper-triangle pairs in graph6 order: `(0,1), (0,2), (1,2), (0,3), ...`.
fn triangle_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::InstanceTooLarge {
            order: n,
            cap: GRAPH6_MAX_ORDER,
        });
    }
    let mut out = String::with_capacity(1 + (n * n) / 12 + 1);
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for (i, j) in triangle_pairs(n) {
        acc = (acc << 1) | g.has_edge(i, j) as u8;
        filled += 1;
        if filled == 6 {
            out.push((acc + 63) as char);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes = line.trim_end_matches(['\n', '\r']).as_bytes();
    let bad = |msg: String| Error::MalformedGraph6(msg);
    let (&head, body) = bytes.split_first().ok_or_else(|| bad("empty line".into()))?;
    if !(63..=126).contains(&head) {
        return Err(bad(format!("order byte {head} out of range")));
    }
    let n = (head - 63) as usize;
    if n == 0 {
        return Err(bad("order 0".into()));
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(bad(format!("expected {expected} data bytes for order {n}, found {}", body.len())));
    }
    if let Some(c) = body.iter().find(|c| !(63..=126).contains(*c)) {
        return Err(bad(format!("byte {c} out of range")));
    }
    let mut adj = vec![0u64; n];
    for (k, (i, j)) in triangle_pairs(n).enumerate() {
        let chunk = body[k / 6] - 63;
        if (chunk >> (5 - k % 6)) & 1 == 1 {
            adj[i] |= bit(j);
            adj[j] |= bit(i);
        }
    }
    let padding = expected * 6 - bits;
    if padding > 0 && (body[expected - 1] - 63) & ((1 << padding) - 1) != 0 {
        return Err(bad("nonzero padding bits".into()));
    }
    Ok(Graph::from_adjacency(adj))
}

/// Parses `n m` followed by `m` lines `u v` (0-indexed). Blank lines and
/// lines starting with `#` are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let pair = |l: &str| -> Result<(usize, usize)> {
        let nums: Vec<&str> = l.split_whitespace().collect();
        if nums.len() != 2 {
            return Err(Error::Parse(format!("expected two integers, got `{l}`")));
        }
        let p = |s: &str| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad integer `{s}`")));
        Ok((p(nums[0])?, p(nums[1])?))
    };
    let (n, m) = pair(lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?)?;
    let edges: Vec<(usize, usize)> = lines.map(pair).collect::<Result<_>>()?;
    if edges.len() != m {
        return Err(Error::Parse(format!("header announces {m} edges, found {}", edges.len())));
    }
    Ok(Graph::new(n, &edges)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingDocument {
    pub order: usize,
    pub labels: Vec<u32>,
    /// graph6 text or a path to an edge-list file.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
}

impl LabelingDocument {
    pub fn from_labeling(f: &Labeling) -> Self {
        LabelingDocument {
            order: f.graph_order(),
            labels: f.labels().to_vec(),
            graph: None,
        }
    }

    pub fn to_labeling(&self) -> Result<Labeling> {
        if self.labels.len() != self.order {
            return Err(Error::SizeMismatch {
                labels: self.labels.len(),
                order: self.order,
            });
        }
        Ok(Labeling::new(self.labels.clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_strings() {
        assert_eq!(emit_graph6(&Graph::path(2).unwrap()).unwrap(), "A_");
        assert_eq!(emit_graph6(&Graph::complete(4).unwrap()).unwrap(), "C~");
        assert_eq!(emit_graph6(&Graph::cycle(5).unwrap()).unwrap(), "Dhc");
        assert_eq!(parse_graph6("Dhc").unwrap(), Graph::cycle(5).unwrap());
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(matches!(parse_graph6("D?"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6(""), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("A\x20"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6("A`"), Err(Error::MalformedGraph6(_))));
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(parse_edge_list("3 2\n0 1\n1 2").unwrap(), Graph::path(3).unwrap());
        assert!(matches!(
            parse_edge_list("2 1\n0 0"),
            Err(Error::Graph(crate::GraphError::LoopEdge(0)))
        ));
        assert!(matches!(
            parse_edge_list("2 1\n0 5"),
            Err(Error::Graph(crate::GraphError::VertexOutOfRange { vertex: 5, order: 2 }))
        ));
        assert!(matches!(parse_edge_list("3 2\n0 1"), Err(Error::Parse(_))));
    }

    #[test]
    fn labeling_document_length_check() {
        let doc: LabelingDocument = serde_json::from_str(r#"{"order":3,"labels":[0,2]}"#).unwrap();
        assert_eq!(doc.to_labeling(), Err(Error::SizeMismatch { labels: 2, order: 3 }));
    }
}
