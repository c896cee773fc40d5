//! graph6 encoding.
//!
//! The header is one byte `n + 63` for `n <= 62`, or `~` followed by three
//! 6-bit groups for `n <= 258047`. The body lists the upper triangle of the
//! adjacency matrix column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte, most significant first, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order representable with the short and medium headers.
pub const MAX_ORDER: usize = 258_047;

const PREFIX: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= MAX_ORDER {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    } else {
        return Err(Error::Capacity(format!(
            "graph6 supports at most {MAX_ORDER} vertices, got {n}"
        )));
    }

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
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Decodes one graph6 record. Surrounding whitespace and a leading
/// `>>graph6<<` marker are accepted; offsets in errors refer to `input`.
pub fn decode(input: &str) -> Result<Graph> {
    let bytes = input.as_bytes();
    let mut pos = bytes.iter().take_while(|b| b.is_ascii_whitespace()).count();
    if input[pos..].starts_with(PREFIX) {
        pos += PREFIX.len();
    }
    let end = bytes.len()
        - bytes[pos..]
            .iter()
            .rev()
            .take_while(|b| b.is_ascii_whitespace())
            .count();
    let body = &bytes[..end];

    let sextet = |at: usize| -> Result<usize> {
        match body.get(at) {
            None => Err(Error::parse(at, "unexpected end of input")),
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(Error::parse(
                at,
                format!("byte 0x{b:02x} outside graph6 range"),
            )),
        }
    };

    let first = sextet(pos)?;
    let n = if first < 63 {
        pos += 1;
        first
    } else {
        if body.get(pos + 1) == Some(&126) {
            return Err(Error::Capacity(format!(
                "8-byte graph6 header at byte {pos}: orders above {MAX_ORDER} are not supported"
            )));
        }
        let n = (sextet(pos + 1)? << 12) | (sextet(pos + 2)? << 6) | sextet(pos + 3)?;
        if n < 63 {
            return Err(Error::parse(
                pos,
                format!("non-canonical long header for n = {n}"),
            ));
        }
        pos += 4;
        n
    };

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let available = body.len() - pos;
    if available < needed {
        return Err(Error::parse(
            body.len(),
            format!("truncated adjacency data: expected {needed} bytes, found {available}"),
        ));
    }
    if available > needed {
        return Err(Error::parse(
            pos + needed,
            "trailing bytes after adjacency data",
        ));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = sextet(pos + k / 6)?;
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
    fn known_encodings() {
        assert_eq!(encode(&Graph::complete(4)).unwrap(), "C~");
        assert_eq!(encode(&Graph::complete(2)).unwrap(), "A_");
        assert_eq!(encode(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(encode(&Graph::empty(0)).unwrap(), "?");
        // edges a-c, a-e, b-d, d-e on five vertices
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn long_header_round_trip() {
        let mut g = Graph::empty(100);
        g.add_edge(0, 99);
        g.add_edge(62, 63);
        let s = encode(&g).unwrap();
        assert!(s.starts_with("~?@c"));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn prefix_and_whitespace_tolerated() {
        assert_eq!(decode(">>graph6<<C~\n").unwrap(), Graph::complete(4));
        assert_eq!(decode("  A_ ").unwrap(), Graph::complete(2));
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert_eq!(
            decode(""),
            Err(Error::Parse {
                offset: 0,
                message: "unexpected end of input".into()
            })
        );
        match decode("C") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match decode("C~~") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("{other:?}"),
        }
        match decode("D\x01c") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("{other:?}"),
        }
        match decode("~~") {
            Err(Error::Capacity(_)) => {}
            other => panic!("{other:?}"),
        }
    }
}
