//! graph6 encoding, as produced by nauty's `geng` and the published
//! vertex-transitive censuses.
//!
//! Layout: a size prefix (`n + 63` for `n <= 62`, otherwise `~` followed by
//! 18 bits in three 6-bit chunks), then the upper triangle of the adjacency
//! matrix read column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), packed
//! big-endian into 6-bit chunks offset by 63 and zero-padded.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    if text.starts_with(HEADER) {
        return Err(Error::MalformedGraph6("header lines are not accepted".into()));
    }
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = if bytes[0] != 126 {
        (usize::from(bytes[0] - 63), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        return Err(Error::MalformedGraph6("8-byte size form exceeds the vertex limit".into()));
    } else if bytes.len() >= 4 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63));
        (n, &bytes[4..])
    } else {
        return Err(Error::MalformedGraph6("truncated size field".into()));
    };
    if n > MAX_VERTICES {
        return Err(Error::MalformedGraph6(format!("{n} vertices exceeds the limit")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let pad = expected * 6 - bits;
    if pad > 0 && (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(Error::MalformedGraph6("nonzero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - 63;
            if chunk >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges)
}
