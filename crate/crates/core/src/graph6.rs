//! graph6 encoding of trees: one graph per line, standard 6-bit ASCII
//! encoding, no header. Upper-triangle adjacency bits are taken column by
//! column (pairs (0,1), (0,2), (1,2), (0,3), ...), packed most significant
//! bit first, padded with zeros to a multiple of six, each group offset by 63.

use crate::error::{Error, Result};
use crate::tree::Tree;

const OFFSET: u8 = 63;

fn parse_error(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6Parse {
        offset,
        message: message.into(),
    }
}

/// Decodes one graph6 line into a [`Tree`]. Trailing newline characters are
/// tolerated; anything else outside the 6-bit alphabet is an error. Inputs
/// that decode to a non-tree graph are rejected with a structural error.
pub fn parse_graph6(text: &str) -> Result<Tree> {
    let bytes: &[u8] = text.trim_end_matches(['\r', '\n']).as_bytes();
    if bytes.is_empty() {
        return Err(parse_error(0, "empty input"));
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(parse_error(
                pos,
                format!("byte {b:#04x} outside the graph6 alphabet 63..=126"),
            ));
        }
    }
    let (n, mut pos) = decode_order(bytes)?;
    if n == 0 {
        return Err(parse_error(0, "graph6 order 0; need at least 1 vertex"));
    }

    let bit_count = n * (n - 1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if bytes.len() - pos < byte_count {
        return Err(parse_error(
            bytes.len(),
            format!(
                "truncated adjacency data: need {byte_count} bytes for order {n}, found {}",
                bytes.len() - pos
            ),
        ));
    }
    if bytes.len() - pos > byte_count {
        return Err(parse_error(
            pos + byte_count,
            "trailing bytes after adjacency data",
        ));
    }

    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    let mut bit_index = 0usize;
    let mut column = 1usize; // pair (row, column), row < column
    let mut row = 0usize;
    while bit_index < bit_count {
        let byte = bytes[pos] - OFFSET;
        for k in 0..6 {
            if bit_index == bit_count {
                if byte & (1 << (5 - k)) != 0 {
                    return Err(parse_error(pos, "nonzero padding bits"));
                }
                continue;
            }
            if byte & (1 << (5 - k)) != 0 {
                edges.push((row, column));
            }
            bit_index += 1;
            row += 1;
            if row == column {
                row = 0;
                column += 1;
            }
        }
        pos += 1;
    }

    Tree::from_edges(n, &edges)
}

fn decode_order(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - OFFSET) as usize, 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        // 36-bit order
        if bytes.len() < 8 {
            return Err(parse_error(bytes.len(), "truncated 36-bit order"));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - OFFSET) as usize;
        }
        Ok((n, 8))
    } else {
        // 18-bit order
        if bytes.len() < 4 {
            return Err(parse_error(bytes.len(), "truncated 18-bit order"));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - OFFSET) as usize;
        }
        if n < 63 {
            return Err(parse_error(1, "18-bit order form used for order < 63"));
        }
        Ok((n, 4))
    }
}

/// Encodes a tree as a graph6 line (no trailing newline).
pub fn write_graph6(tree: &Tree) -> String {
    let n = tree.n();
    let mut out: Vec<u8> = Vec::new();
    encode_order(n, &mut out);

    let bit_count = n * (n - 1) / 2;
    let mut bits = vec![0u8; bit_count.div_ceil(6)];
    for (u, v) in tree.edges() {
        // pair (u, v) with u < v sits at bit position v(v-1)/2 + u
        let idx = v * (v - 1) / 2 + u;
        bits[idx / 6] |= 1 << (5 - idx % 6);
    }
    out.extend(bits.iter().map(|b| b + OFFSET));
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258047 {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + OFFSET);
        out.push(((n >> 6) & 63) as u8 + OFFSET);
        out.push((n & 63) as u8 + OFFSET);
    } else {
        out.push(126);
        out.push(126);
        for shift in (0..36).step_by(6).rev() {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    }
}
