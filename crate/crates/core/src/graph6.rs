//! graph6 encoding (header-less), including the long size forms.

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {0:#x} outside the printable graph6 range")]
    BadByte(u8),
    #[error("graph6 body has {got} bytes, expected {expected}")]
    BadLength { expected: usize, got: usize },
    #[error("graph too large for graph6 ({0} vertices)")]
    TooLarge(usize),
}

fn encode_size(n: usize, out: &mut Vec<u8>) -> Result<(), Graph6Error> {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else if n <= 68_719_476_735 {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        return Err(Graph6Error::TooLarge(n));
    }
    Ok(())
}

/// Encodes `g`; bits are the upper triangle taken column by column.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_size(n, &mut out).expect("graph size fits graph6");
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::BadByte(b));
        }
    }
    let val = |b: u8| (b - 63) as usize;
    let (n, body) = if bytes[0] != 126 {
        (val(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadLength { expected: 4, got: bytes.len() });
        }
        (bytes[1..4].iter().fold(0, |a, &b| a << 6 | val(b)), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(Graph6Error::BadLength { expected: 8, got: bytes.len() });
        }
        (bytes[2..8].iter().fold(0, |a, &b| a << 6 | val(b)), &bytes[8..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::BadLength { expected, got: body.len() });
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = val(body[k / 6]);
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_strings() {
        // reference encodings from the format description
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::complete(2)), "A_");
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(to_graph6(&Graph::petersen()), "IheA@GUAo");
    }

    #[test]
    fn long_size_header() {
        let g = Graph::cycle(63);
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 63, 126]);
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(from_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(from_graph6("D"), Err(Graph6Error::BadLength { expected: 2, got: 0 }));
        assert_eq!(from_graph6("A\u{7f}"), Err(Graph6Error::BadByte(0x7f)));
    }
}
