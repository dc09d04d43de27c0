//! The graph6 text format.
//!
//! Header: `n + 63` as one byte for `n <= 62`, otherwise `126` followed by
//! three bytes carrying `n` in 6-bit big-endian groups. Body: the upper
//! triangle in column-major order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed six bits per byte, high bit first, each byte offset by 63.
//! Unused bits of the last byte must be zero.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn byte_value(b: u8, position: usize) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(Error::parse(
            position,
            format!("byte {b:#04x} is outside the graph6 range 63..=126"),
        ))
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut offset = 0;
    let mut body = text.trim_end_matches(['\n', '\r']);
    if let Some(rest) = body.strip_prefix(HEADER) {
        offset = HEADER.len();
        body = rest;
    }
    let bytes = body.as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(Error::parse(offset, "empty graph6 string"));
    };

    let (n, mut pos) = if first == 126 {
        if bytes.len() < 4 {
            return Err(Error::parse(offset, "truncated long-form order header"));
        }
        if bytes[1] == 126 {
            return Err(Error::parse(
                offset + 1,
                format!("orders above {MAX_VERTICES} are not supported"),
            ));
        }
        let mut n = 0usize;
        for (i, &b) in bytes.iter().enumerate().take(4).skip(1) {
            n = n << 6 | byte_value(b, offset + i)? as usize;
        }
        (n, 4)
    } else {
        (byte_value(first, offset)? as usize, 1)
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::parse(
            offset,
            format!("order {n} outside supported range 1..={MAX_VERTICES}"),
        ));
    }

    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos != nbytes {
        return Err(Error::parse(
            offset + pos,
            format!(
                "expected {nbytes} data bytes for order {n}, found {}",
                bytes.len() - pos
            ),
        ));
    }

    let mut rows = vec![0u64; n];
    let mut bit = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let chunk = byte_value(bytes[pos + bit / 6], offset + pos + bit / 6)?;
            if chunk >> (5 - bit % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
            if bit == nbits {
                break 'outer;
            }
        }
    }
    if nbits % 6 != 0 {
        pos += nbytes - 1;
        let last = byte_value(bytes[pos], offset + pos)?;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::parse(offset + pos, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + n * n / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.adjacent(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_k5() {
        // 'D' = 5 + 63; '~' = 63 -> 111111; '{' = 60 -> 111100 (two pad bits)
        let g = parse_graph6("D~{").unwrap();
        assert_eq!(g, Graph::complete(5).unwrap());
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn single_vertex() {
        assert_eq!(encode_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1).unwrap());
    }

    #[test]
    fn known_encodings() {
        assert_eq!(encode_graph6(&Graph::path(4).unwrap()), "Ch");
        assert_eq!(encode_graph6(&Graph::cycle(5).unwrap()), "Dhc");
        let k64 = encode_graph6(&Graph::complete(64).unwrap());
        assert!(k64.starts_with("~?@?~~"));
        let p63 = encode_graph6(&Graph::path(63).unwrap());
        assert!(p63.starts_with("~??~hCGG"));
        assert_eq!(parse_graph6(&p63).unwrap(), Graph::path(63).unwrap());
    }

    #[test]
    fn accepts_header_and_newline() {
        assert_eq!(
            parse_graph6(">>graph6<<D~{\n").unwrap(),
            Graph::complete(5).unwrap()
        );
    }

    #[test]
    fn malformed_inputs() {
        for bad in ["", "?", "D~", "D~{{", "D~|", "D~\x7f", "~", "~??", "~?A?"] {
            assert!(
                matches!(parse_graph6(bad), Err(Error::Parse { .. })),
                "accepted {bad:?}"
            );
        }
        // padding bit set: '|' = 61 -> 111101
        match parse_graph6("D~|") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 2),
            other => panic!("{other:?}"),
        }
    }
}
