//! graph6 reading and writing.
//!
//! Only the 1-byte (`n < 63`) and 4-byte (`63 <= n < 2^18`) size prefixes are
//! accepted. Adjacency bits follow the upper triangle column by column
//! (`for k in 1..n, for j in 0..k`), six bits per byte, most significant first,
//! each byte offset by 63.

use thiserror::Error;

use super::Graph;

const HEADER: &str = ">>graph6<<";
const MAX_N: usize = 1 << 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty record")]
    Empty,
    #[error("byte {0:#04x} outside the printable range 63..=126")]
    BadByte(u8),
    #[error("vertex count {0} not supported (must be 1 <= n < 2^18)")]
    UnsupportedSize(usize),
    #[error("payload truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{0} unexpected trailing bytes")]
    Trailing(usize),
    #[error("nonzero padding bits")]
    NonzeroPadding,
}

/// Result of a lenient parse: the graph, plus the offset of the last payload
/// byte when its padding bits were nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub graph: Graph,
    pub padding_warning: Option<usize>,
}

fn err(offset: usize, kind: Graph6ErrorKind) -> Graph6Error {
    Graph6Error { offset, kind }
}

/// Strict parse: nonzero padding bits are an error.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    parse_graph6_with(line, true).map(|p| p.graph)
}

pub fn parse_graph6_with(line: &str, strict: bool) -> Result<Parsed, Graph6Error> {
    let line = line.strip_suffix('\n').unwrap_or(line);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (base, body) = match line.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, line.as_bytes()),
    };
    let val = |i: usize| -> Result<usize, Graph6Error> {
        match body.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(err(base + i, Graph6ErrorKind::BadByte(b))),
            None => Err(err(base + i, Graph6ErrorKind::Empty)),
        }
    };

    if body.is_empty() {
        return Err(err(base, Graph6ErrorKind::Empty));
    }
    let first = val(0)?;
    let (n, mut pos) = if first < 63 {
        (first, 1)
    } else {
        if body.len() > 1 && body[1] == 126 {
            // 8-byte form, n >= 2^18
            return Err(err(base, Graph6ErrorKind::UnsupportedSize(MAX_N)));
        }
        let mut n = 0;
        for i in 1..4 {
            if i >= body.len() {
                return Err(err(base + i, Graph6ErrorKind::Truncated { expected: 4, found: body.len() }));
            }
            n = n << 6 | val(i)?;
        }
        (n, 4)
    };
    if n == 0 {
        return Err(err(base, Graph6ErrorKind::UnsupportedSize(0)));
    }

    let pairs = n * (n - 1) / 2;
    let need = pairs.div_ceil(6);
    let payload = &body[pos..];
    if payload.len() < need {
        return Err(err(base + body.len(), Graph6ErrorKind::Truncated { expected: need, found: payload.len() }));
    }
    if payload.len() > need {
        return Err(err(base + pos + need, Graph6ErrorKind::Trailing(payload.len() - need)));
    }

    let mut g = Graph::empty(n);
    let (mut j, mut k) = (0, 1);
    let mut bit = 0;
    let mut padding_warning = None;
    for _ in 0..need {
        let byte = val(pos)?;
        for shift in (0..6).rev() {
            let set = byte >> shift & 1 == 1;
            if bit < pairs {
                if set {
                    g.set_edge(j, k);
                }
                j += 1;
                if j == k {
                    j = 0;
                    k += 1;
                }
            } else if set {
                if strict {
                    return Err(err(base + pos, Graph6ErrorKind::NonzeroPadding));
                }
                padding_warning = Some(base + pos);
            }
            bit += 1;
        }
        pos += 1;
    }
    Ok(Parsed { graph: g, padding_warning })
}

/// graph6 record for `g` under its current labelling, without header or newline.
///
/// Panics on the empty graph or `n >= 2^18`, neither of which has a
/// supported encoding.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!((1..MAX_N).contains(&n), "graph6 output needs 1 <= n < 2^18");
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for k in 1..n {
        for j in 0..k {
            acc = acc << 1 | g.has_edge(j, k) as u8;
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
    fn known_records() {
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6("A_").unwrap(), Graph::complete(2));
        assert_eq!(parse_graph6("Dhc").unwrap(), Graph::cycle(5));
        assert_eq!(parse_graph6("Ch").unwrap(), Graph::path(4));
        assert_eq!(emit_graph6(&Graph::empty(1)), "@");
        assert_eq!(emit_graph6(&Graph::path(4)), "Ch");
        assert_eq!(emit_graph6(&Graph::complete(4)), "C~");
        assert_eq!(emit_graph6(&Graph::empty(4)), "C?");
        assert_eq!(emit_graph6(&Graph::cycle(5)), "Dhc");
        assert_eq!(emit_graph6(&Graph::petersen()), "IheA@GUAo");
    }

    #[test]
    fn header_and_newline_tolerated() {
        assert_eq!(parse_graph6(">>graph6<<Dhc\n").unwrap(), Graph::cycle(5));
        assert_eq!(parse_graph6("A_\r\n").unwrap(), Graph::complete(2));
    }

    #[test]
    fn four_byte_size_prefix() {
        let g = Graph::path(100);
        let s = emit_graph6(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn rejects_malformed_input() {
        let e = parse_graph6("D h").unwrap_err();
        assert_eq!(e.offset, 1);
        assert!(matches!(e.kind, Graph6ErrorKind::BadByte(b' ')));

        let e = parse_graph6("Dh").unwrap_err();
        assert!(matches!(e.kind, Graph6ErrorKind::Truncated { expected: 2, found: 1 }));

        let e = parse_graph6("Dhcc").unwrap_err();
        assert_eq!(e, err(3, Graph6ErrorKind::Trailing(1)));

        // 'd' = 37 = 100101: padding bits of the second byte are 01.
        let e = parse_graph6("Dhd").unwrap_err();
        assert_eq!(e, err(2, Graph6ErrorKind::NonzeroPadding));
        let lenient = parse_graph6_with("Dhd", false).unwrap();
        assert_eq!(lenient.graph, Graph::cycle(5));
        assert_eq!(lenient.padding_warning, Some(2));

        assert!(matches!(parse_graph6("?").unwrap_err().kind, Graph6ErrorKind::UnsupportedSize(0)));
        assert!(matches!(parse_graph6("~~???????").unwrap_err().kind, Graph6ErrorKind::UnsupportedSize(_)));
        assert!(matches!(parse_graph6("").unwrap_err().kind, Graph6ErrorKind::Empty));
        assert_eq!(parse_graph6(">>graph6<<D h").unwrap_err().offset, 11);
    }
}
