//! graph6 encoding for simple graphs of order at most 62.

use crate::error::Graph6Error;
use crate::graph::MultiGraph;

const BIAS: u8 = 63;
const SHORT_LIMIT: usize = 62;

pub fn encode(g: &MultiGraph) -> Result<String, Graph6Error> {
    if !g.is_simple() {
        return Err(Graph6Error::Multigraph);
    }
    let n = g.order();
    if n > SHORT_LIMIT {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = vec![BIAS + n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.is_adjacent(i, j));
            filled += 1;
            if filled == 6 {
                out.push(BIAS + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(BIAS + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn decode(s: &str) -> Result<MultiGraph, Graph6Error> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    let (&first, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if !(BIAS..=126).contains(&first) {
        return Err(Graph6Error::BadByte(first));
    }
    if first == 126 {
        return Err(Graph6Error::TooLarge(usize::MAX));
    }
    let n = (first - BIAS) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::BadLength {
            expected,
            found: data.len(),
        });
    }
    let mut values = Vec::with_capacity(expected);
    for &b in data {
        if !(BIAS..=126).contains(&b) {
            return Err(Graph6Error::BadByte(b));
        }
        values.push(b - BIAS);
    }
    let bit = |k: usize| values[k / 6] >> (5 - k % 6) & 1 == 1;
    for k in nbits..expected * 6 {
        if bit(k) {
            return Err(Graph6Error::BadPadding);
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(MultiGraph::from_edges(n, &edges)?)
}
