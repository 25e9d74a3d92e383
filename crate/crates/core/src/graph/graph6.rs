//! graph6 encoding: size prefix, then the upper triangle column by column,
//! six bits per printable byte offset by 63.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let six = |b: u8| -> Result<u64> {
        if (63..=126).contains(&b) {
            Ok((b - 63) as u64)
        } else {
            Err(malformed(format!("byte {b} outside 63..=126")))
        }
    };
    match bytes {
        [] => Err(malformed("empty record")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed("truncated 8-byte size prefix"));
            }
            let mut n = 0u64;
            for &b in &rest[..6] {
                n = (n << 6) | six(b)?;
            }
            Ok((n as usize, 8))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated 4-byte size prefix"));
            }
            let mut n = 0u64;
            for &b in &rest[..3] {
                n = (n << 6) | six(b)?;
            }
            Ok((n as usize, 4))
        }
        [b, ..] => Ok((six(*b)? as usize, 1)),
    }
}

/// Parses one graph6 record. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted; sparse6 and digraph6 are rejected.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    match bytes.first() {
        Some(b':') => return Err(malformed("sparse6 records are not supported")),
        Some(b'&') => return Err(malformed("digraph6 records are not supported")),
        _ => {}
    }
    let (n, offset) = decode_size(bytes)?;
    if n == 0 {
        return Err(malformed("order 0 is not supported"));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let nbits = n * (n - 1) / 2;
    let body = &bytes[offset..];
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} data bytes for n={n}, found {}",
            body.len()
        )));
    }
    let mut g = Graph::new(n)?;
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(malformed(format!("byte {byte} outside 63..=126")));
            }
            if ((byte - 63) >> (5 - k % 6)) & 1 == 1 {
                g.set_edge(u, v, true);
            }
            k += 1;
        }
    }
    if nbits % 6 != 0 {
        let last = body[body.len() - 1];
        if !(63..=126).contains(&last) {
            return Err(malformed(format!("byte {last} outside 63..=126")));
        }
        let pad = 6 - nbits % 6;
        if (last - 63) & ((1u8 << pad) - 1) != 0 {
            return Err(malformed("nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes `g` in graph6 (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n) / 12 + 1);
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        acc <<= 6 - k % 6;
        out.push(acc + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_records() {
        let k1 = from_graph6("@").unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let k3 = from_graph6("Bw").unwrap();
        assert_eq!((k3.order(), k3.size()), (3, 3));
        let k4 = from_graph6("C~").unwrap();
        assert_eq!((k4.order(), k4.size()), (4, 6));

        assert_eq!(to_graph6(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(to_graph6(&Graph::new(1).unwrap()), "@");
        assert_eq!(to_graph6(&Graph::complete(4).unwrap()), "C~");
    }

    #[test]
    fn five_vertex_record_from_geng_layout() {
        // A-C, A-E, B-D, D-E
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn header_and_whitespace_are_accepted() {
        assert_eq!(from_graph6(">>graph6<<Bw\n").unwrap().size(), 3);
    }

    #[test]
    fn large_order_prefix() {
        let mut g = Graph::new(100).unwrap();
        g.add_edge(0, 99).unwrap();
        g.add_edge(50, 51).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(from_graph6(""), Err(Error::MalformedGraph6(_))));
        // K3 with one data byte missing
        assert!(matches!(from_graph6("B"), Err(Error::MalformedGraph6(_))));
        // trailing padding bit set: 'x' = 120 = 63 + 57 = 0b111001
        assert!(matches!(from_graph6("Bx"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(from_graph6("B "), Err(Error::MalformedGraph6(_))));
        assert!(matches!(from_graph6("Bw?"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(
            from_graph6(":Fa@x^"),
            Err(Error::MalformedGraph6(_))
        ));
        assert!(matches!(from_graph6("?"), Err(Error::MalformedGraph6(_))));
    }

    #[test]
    fn oversized_order() {
        // n = 600 = 0b001001_011000 -> '~', 63+0, 63+9, 63+24
        let prefix = format!(
            "~{}{}{}",
            63u8 as char,
            (63 + 9) as u8 as char,
            (63 + 24) as u8 as char
        );
        assert!(matches!(
            from_graph6(&prefix),
            Err(Error::OrderTooLarge(600))
        ));
    }

    #[test]
    fn exhaustive_round_trip_small_orders() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
            }
        }
    }
}
