//! graph6 reading and writing.
//!
//! The order `n` is a single byte `n + 63` for `n ≤ 62`, or `~` followed by
//! three 6-bit groups for `63 ≤ n < 2^18`. The body packs the upper triangle
//! column by column (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit groups,
//! most significant bit first, each stored as `group + 63`; the final group is
//! zero-padded. Only the shortest header is accepted so that every accepted
//! string re-encodes to itself.

use thiserror::Error;

use super::Graph;

const BIAS: u8 = 63;
const MAX_BYTE: u8 = 126;
/// Exclusive upper bound on the order handled here.
pub const MAX_ORDER: usize = 1 << 18;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("malformed length header at offset {offset}: {reason}")]
    Header { offset: usize, reason: &'static str },
    #[error("truncated body: expected {expected} bytes after the header, found {found} (offset {offset})")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in the final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
}

impl Graph6Error {
    pub fn offset(&self) -> usize {
        match *self {
            Graph6Error::Empty => 0,
            Graph6Error::InvalidByte { offset, .. }
            | Graph6Error::Header { offset, .. }
            | Graph6Error::Truncated { offset, .. }
            | Graph6Error::NonzeroPadding { offset }
            | Graph6Error::TrailingData { offset } => offset,
        }
    }
}

fn group(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (BIAS..=MAX_BYTE).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(Graph6Error::InvalidByte { offset, byte: b }),
        None => Err(Graph6Error::Header {
            offset,
            reason: "extended header needs three bytes after '~'",
        }),
    }
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let first = group(bytes, 0)?;
    let (n, header) = if first != MAX_BYTE - BIAS {
        (first as usize, 1)
    } else {
        if bytes.get(1) == Some(&MAX_BYTE) {
            return Err(Graph6Error::Header {
                offset: 1,
                reason: "orders of 2^18 and above are not supported",
            });
        }
        let n = (1..4).try_fold(0usize, |acc, i| Ok((acc << 6) | group(bytes, i)? as usize))?;
        if n < 63 {
            return Err(Graph6Error::Header {
                offset: 0,
                reason: "non-canonical extended header for an order below 63",
            });
        }
        (n, 4)
    };
    if n == 0 {
        return Err(Graph6Error::Header {
            offset: 0,
            reason: "graph has no vertices",
        });
    }

    let expected = body_len(n);
    let body = &bytes[header..];
    for (i, &b) in body.iter().enumerate().take(expected) {
        if !(BIAS..=MAX_BYTE).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                offset: header + i,
                byte: b,
            });
        }
    }
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData {
            offset: header + expected,
        });
    }
    let bits = n * (n - 1) / 2;
    let pad = expected * 6 - bits;
    if pad > 0 && (body[expected - 1] - BIAS) & ((1u8 << pad) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding {
            offset: header + expected - 1,
        });
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let g = body[k / 6] - BIAS;
            if g & (1 << (5 - k % 6)) != 0 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded edges are simple"))
}

/// Canonical graph6 encoding.
///
/// # Panics
/// If the graph has `2^18` or more vertices.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n < MAX_ORDER, "graph6 writer supports n < 2^18");
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(MAX_BYTE);
        out.extend([12, 6, 0].map(|s| ((n >> s) & 0x3f) as u8 + BIAS));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {source}")]
pub struct Graph6LineError {
    pub line: usize,
    #[source]
    pub source: Graph6Error,
}

/// Parses a file of graph6 strings, one per line. Blank lines, lines starting
/// with `#`, and the optional `>>graph6<<` prefix are skipped. Returns the
/// 1-based line number alongside each graph.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<(usize, Graph)>, Graph6LineError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let mut line = raw.trim();
        if let Some(rest) = line.strip_prefix(">>graph6<<") {
            line = rest;
        }
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph6(line).map_err(|source| Graph6LineError { line: i + 1, source })?;
        out.push((i + 1, g));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn small_known_strings() {
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4, Family::Complete(4).generate().unwrap());
        assert_eq!(write_graph6(&k4), "C~");

        let e5 = parse_graph6("D??").unwrap();
        assert_eq!((e5.order(), e5.size()), (5, 0));

        let k1 = Graph::empty(1).unwrap();
        assert_eq!(write_graph6(&k1), "@");
        assert_eq!(parse_graph6("@").unwrap(), k1);
    }

    #[test]
    fn matches_reference_encodings() {
        // Cross-checked against networkx.to_graph6_bytes.
        assert_eq!(write_graph6(&Family::Petersen.generate().unwrap()), "IheA@GUAo");
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g), "DQc");
    }

    #[test]
    fn extended_header() {
        let g = Family::Cycle(100).generate().unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with("~?@chC"));
        assert_eq!(parse_graph6(&s).unwrap(), g);

        let g63 = Family::Path(63).generate().unwrap();
        let s63 = write_graph6(&g63);
        assert_eq!(&s63[..6], "~??~hC");
        assert_eq!(parse_graph6(&s63).unwrap(), g63);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("C~ "),
            Err(Graph6Error::TrailingData { offset: 2 })
        );
        assert_eq!(
            parse_graph6("C"),
            Err(Graph6Error::Truncated { offset: 1, expected: 1, found: 0 })
        );
        assert_eq!(
            parse_graph6("D?\u{7f}"),
            Err(Graph6Error::InvalidByte { offset: 2, byte: 0x7f })
        );
        // 5 vertices -> 10 bits -> 2 padding bits in the last byte.
        assert_eq!(
            parse_graph6("D?@"),
            Err(Graph6Error::NonzeroPadding { offset: 2 })
        );
        assert!(matches!(parse_graph6("~??C"), Err(Graph6Error::Header { offset: 0, .. })));
        assert!(matches!(parse_graph6("~~??????"), Err(Graph6Error::Header { offset: 1, .. })));
        assert!(matches!(parse_graph6("~?"), Err(Graph6Error::Header { offset: 2, .. })));
        assert!(matches!(parse_graph6("?"), Err(Graph6Error::Header { .. })));
        assert_eq!(parse_graph6(" C~").unwrap_err().offset(), 0);
    }

    #[test]
    fn file_reader_skips_comments() {
        let text = ">>graph6<<C~\n\n# comment\nD??\r\n";
        let gs = parse_graph6_lines(text).unwrap();
        assert_eq!(gs.iter().map(|(l, _)| *l).collect::<Vec<_>>(), vec![1, 4]);
        let err = parse_graph6_lines("C~\nC\n").unwrap_err();
        assert_eq!(err.line, 2);
    }
}
