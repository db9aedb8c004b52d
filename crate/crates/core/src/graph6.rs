//! graph6 codec, restricted to the single-byte header form (`1 <= n <= 62`).
//!
//! A record is one header byte `n + 63` followed by the upper triangle of the
//! adjacency matrix in column order (`x01, x02, x12, x03, ...`), packed
//! big-endian into 6-bit groups, zero-padded, each group offset by 63.

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_GRAPH6_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte 0x{byte:02x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("order {n} is not supported (graph6 records are limited to 1..=62 vertices)")]
    UnsupportedOrder { n: usize },
    #[error("expected {expected} bytes for a graph on {n} vertices, found {found}")]
    Length {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in the final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    let (&header, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte });
        }
    }
    let n = (header - 63) as usize;
    if n == 0 || n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::UnsupportedOrder { n });
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            n,
            expected: expected + 1,
            found: bytes.len(),
        });
    }

    let nbits = n * (n - 1) / 2;
    let mut masks = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = (body[k / 6] - 63) as u64;
            if (group >> (5 - k % 6)) & 1 == 1 {
                masks[i] |= 1 << j;
                masks[j] |= 1 << i;
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[body.len() - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: body.len() });
        }
    }
    Ok(Graph::from_masks_lossy(n, &masks))
}

/// Encodes `g` as a graph6 record (no trailing newline).
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n == 0 || n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::UnsupportedOrder { n });
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
