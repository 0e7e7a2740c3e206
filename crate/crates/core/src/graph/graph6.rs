//! graph6 encoding (header-only variant, no sparse6/digraph6).
//!
//! Layout: an order header (`63 + n` for `n ≤ 62`, otherwise `126`
//! followed by three 6-bit groups), then the upper triangle of the
//! adjacency matrix in column order `(0,1),(0,2),(1,2),(0,3),…`, packed
//! six bits per byte with `63` added and zero padding at the end.

use thiserror::Error;

use super::{Graph, GraphError, MAX_VERTICES};

const BIAS: u8 = 63;
const LONG_HEADER: u8 = 126;
const OPTIONAL_PREFIX: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { byte: u8, offset: usize },
    #[error("malformed order header")]
    BadHeader,
    #[error("order {0} exceeds the cap of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("body has {found} bytes, expected {expected}")]
    Truncated { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    Padding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(OPTIONAL_PREFIX).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(BIAS..=LONG_HEADER).contains(&b))
    {
        return Err(Graph6Error::BadByte { byte, offset });
    }

    let (n, body) = match bytes {
        // 8-byte headers only encode orders of 258048 and up.
        [LONG_HEADER, LONG_HEADER, ..] => return Err(Graph6Error::TooLarge(258_048)),
        [LONG_HEADER, a, b, c, body @ ..] => {
            let n = [a, b, c]
                .iter()
                .fold(0usize, |acc, &&x| acc << 6 | usize::from(x - BIAS));
            if n < 63 {
                return Err(Graph6Error::BadHeader);
            }
            (n, body)
        }
        [LONG_HEADER, ..] => return Err(Graph6Error::BadHeader),
        [h, body @ ..] => (usize::from(h - BIAS), body),
        [] => unreachable!("checked non-empty above"),
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    let bit = |k: usize| (body[k / 6] - BIAS) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(Graph6Error::Padding);
    }

    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for row in rows.iter_mut().take(j) {
            if bit(k) {
                *row |= 1 << j;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency_rows(&rows)?)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(BIAS + n as u8);
    } else {
        out.push(LONG_HEADER);
        for shift in [12, 6, 0] {
            out.push(BIAS + ((n >> shift) & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn triangle_encoding() {
        // n = 3 -> 'B'; bits 111 padded to 111000 = 56, 56 + 63 = 'w'.
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(to_graph6(&k3), "Bw");
        assert_eq!(parse_graph6("Bw").unwrap(), k3);
    }

    #[test]
    fn single_vertex_encoding() {
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(to_graph6(&k1), "@");
        assert_eq!(parse_graph6("@").unwrap(), k1);
    }

    #[test]
    fn known_five_vertex_string() {
        // Edges a-c, a-e, b-d, d-e on 5 vertices encode to "DQc".
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn long_header_orders() {
        for n in [62, 63, 64] {
            let g = Graph::complete(n).unwrap();
            let s = to_graph6(&g);
            if n >= 63 {
                assert_eq!(s.as_bytes()[0], LONG_HEADER);
            }
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn accepts_prefix_and_newline() {
        assert_eq!(parse_graph6(">>graph6<<Bw\n").unwrap(), Graph::complete(3).unwrap());
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert!(matches!(parse_graph6("B w"), Err(Graph6Error::BadByte { offset: 1, .. })));
        assert_eq!(parse_graph6("C"), Err(Graph6Error::Truncated { expected: 1, found: 0 }));
        assert_eq!(parse_graph6("Bww"), Err(Graph6Error::Truncated { expected: 1, found: 2 }));
        assert_eq!(parse_graph6("B~"), Err(Graph6Error::Padding));
        assert_eq!(parse_graph6("~?@@"), Err(Graph6Error::TooLarge(65)));
        assert_eq!(parse_graph6("~???"), Err(Graph6Error::BadHeader));
        assert!(matches!(parse_graph6("?"), Err(Graph6Error::Graph(GraphError::NoVertices))));
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..=64, seed in any::<u64>()) {
            let mut state = seed | 1;
            let mut edges = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state & 3 == 0 {
                        edges.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            let s = to_graph6(&g);
            let back = parse_graph6(&s).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(to_graph6(&back), s);
        }
    }
}
