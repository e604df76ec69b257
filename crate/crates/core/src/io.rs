//! Graph I/O: graph6 (bit-exact per the format description), a plain
//! edge-list text format (`n m` header then `u v` lines), and JSON helpers.

use crate::error::{CoreError, Result};
use crate::graph::Graph;

/// Encode in graph6. Supports n <= 258047.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        out.push((((n >> 12) & 0x3f) as u8 + 63) as char);
        out.push((((n >> 6) & 0x3f) as u8 + 63) as char);
        out.push(((n & 0x3f) as u8 + 63) as char);
    } else {
        return Err(CoreError::SizeLimit { op: "to_graph6", limit: 258_047, got: n });
    }
    let mut bits: Vec<bool> = Vec::with_capacity(n.saturating_sub(1) * n / 2);
    for j in 1..n as u32 {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                val |= 1 << (5 - i);
            }
        }
        out.push((val + 63) as char);
    }
    Ok(out)
}

/// Decode a graph6 string.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let bytes: Vec<u8> = s.trim().bytes().collect();
    if bytes.is_empty() {
        return Err(CoreError::Parse("empty graph6 string".into()));
    }
    let (n, rest) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(CoreError::Parse("truncated graph6 header".into()));
        }
        if bytes[1] == b'~' {
            return Err(CoreError::Parse("graph6 inputs beyond 258047 vertices unsupported".into()));
        }
        let n = ((bytes[1] as usize - 63) << 12)
            | ((bytes[2] as usize - 63) << 6)
            | (bytes[3] as usize - 63);
        (n, &bytes[4..])
    } else {
        ((bytes[0] as usize).checked_sub(63).ok_or_else(|| {
            CoreError::Parse(format!("invalid graph6 header byte {}", bytes[0]))
        })?, &bytes[1..])
    };
    let need_bits = n * n.saturating_sub(1) / 2;
    let need_bytes = (need_bits + 5) / 6;
    if rest.len() < need_bytes {
        return Err(CoreError::Parse(format!(
            "graph6 body too short: need {need_bytes} bytes, got {}",
            rest.len()
        )));
    }
    let mut bits = Vec::with_capacity(need_bytes * 6);
    for &b in &rest[..need_bytes] {
        let v = b.checked_sub(63).ok_or_else(|| {
            CoreError::Parse(format!("invalid graph6 body byte {b}"))
        })?;
        if v > 63 {
            return Err(CoreError::Parse(format!("invalid graph6 body byte {b}")));
        }
        for i in (0..6).rev() {
            bits.push(v >> i & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n as u32 {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Plain edge-list text: first line `n m`, then one `u v` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(s: &str) -> Result<Graph> {
    let mut lines = s.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| CoreError::Parse("empty edge list".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| CoreError::Parse("bad edge-list header".into()))?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| CoreError::Parse("bad edge-list header".into()))?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: u32 = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| CoreError::Parse(format!("bad edge line: {line}")))?;
        let v: u32 = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| CoreError::Parse(format!("bad edge line: {line}")))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(CoreError::Parse(format!(
            "edge-list header promises {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_known_value() {
        // 5 vertices, edges {02, 04, 13, 34} encodes as "DQc".
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g).unwrap(), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn graph6_roundtrip_various() {
        for g in [
            Graph::empty(0),
            Graph::empty(1),
            Graph::complete(7),
            Graph::cycle(9),
            Graph::path(63),
            Graph::from_edges(70, (1..70).map(|v| (0u32, v as u32))).unwrap(),
        ] {
            let s = to_graph6(&g).unwrap();
            assert_eq!(from_graph6(&s).unwrap(), g, "roundtrip failed for {s}");
        }
    }

    #[test]
    fn edge_list_roundtrip() {
        let g = Graph::from_edges(6, [(0, 5), (2, 3), (1, 4)]).unwrap();
        let s = to_edge_list(&g);
        assert_eq!(from_edge_list(&s).unwrap(), g);
        assert!(from_edge_list("3 2\n0 1\n").is_err()); // edge count mismatch
    }
}
