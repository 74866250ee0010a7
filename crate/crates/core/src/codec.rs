//! Graph text formats: graph6 (primary) and a plain "n m" edge list
//! (secondary). Both are labeled formats; no canonicalization happens
//! here, so parse(emit(g)) reproduces g vertex for vertex.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("graph6: invalid byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("graph6: truncated input, expected {expected} payload bytes after the order field, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6: {extra} unexpected trailing bytes starting at offset {offset}")]
    TrailingBytes { offset: usize, extra: usize },
    #[error("graph6: order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const G6_HEADER: &str = ">>graph6<<";

/// Decode a graph6 line. Accepts the optional `>>graph6<<` prefix and
/// trailing whitespace. Errors carry the absolute byte offset into the
/// original input.
pub fn parse_graph6(text: &str) -> Result<Graph, CodecError> {
    // Only line terminators are forgiven; stray spaces are data errors.
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (body, base) = match trimmed.strip_prefix(G6_HEADER) {
        Some(rest) => (rest.as_bytes(), G6_HEADER.len()),
        None => (trimmed.as_bytes(), 0),
    };
    if body.is_empty() {
        return Err(CodecError::Truncated { expected: 1, found: 0 });
    }

    // Order field: one byte for n <= 62, '~' + 3 bytes for n <= 258047,
    // '~~' + 6 bytes beyond. The long forms always describe graphs over
    // capacity, but decode them anyway so the error names the real order.
    let (n, used) = match body[0] {
        63..=125 => ((body[0] - 63) as usize, 1),
        126 => {
            if body.len() >= 2 && body[1] == 126 {
                let mut n: u64 = 0;
                for (i, &b) in body.iter().enumerate().take(8).skip(2) {
                    if !(63..=126).contains(&b) {
                        return Err(CodecError::InvalidByte { byte: b, offset: base + i });
                    }
                    n = n << 6 | (b - 63) as u64;
                }
                if body.len() < 8 {
                    return Err(CodecError::Truncated { expected: 8, found: body.len() });
                }
                (n as usize, 8)
            } else {
                let mut n: usize = 0;
                for (i, &b) in body.iter().enumerate().take(4).skip(1) {
                    if !(63..=126).contains(&b) {
                        return Err(CodecError::InvalidByte { byte: b, offset: base + i });
                    }
                    n = n << 6 | (b - 63) as usize;
                }
                if body.len() < 4 {
                    return Err(CodecError::Truncated { expected: 4, found: body.len() });
                }
                (n, 4)
            }
        }
        other => return Err(CodecError::InvalidByte { byte: other, offset: base }),
    };
    if n > MAX_VERTICES {
        return Err(CodecError::OrderTooLarge { order: n, max: MAX_VERTICES });
    }

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let payload = &body[used..];
    if payload.len() < expected {
        return Err(CodecError::Truncated { expected, found: payload.len() });
    }
    if payload.len() > expected {
        return Err(CodecError::TrailingBytes {
            offset: base + used + expected,
            extra: payload.len() - expected,
        });
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = payload[bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(CodecError::InvalidByte { byte, offset: base + used + bit / 6 });
            }
            if (byte - 63) >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            bit += 1;
            if bit == bits {
                break 'outer;
            }
        }
    }
    // Validate any pure-padding bytes too (n <= 1 has bits == 0).
    for (i, &byte) in payload.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(CodecError::InvalidByte { byte, offset: base + used + i });
        }
    }
    Ok(g)
}

/// Encode as a single graph6 line (no header, no newline). Total because
/// the graph capacity (32) is far below the single-byte order limit (62).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parse "n m" on the first line followed by m lines "u v" (0-based).
/// Blank lines and duplicate edges are allowed; self-loops are not.
pub fn parse_edge_list(text: &str) -> Result<Graph, CodecError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| CodecError::EdgeList { line: 1, reason: "missing 'n m' header".into() })?;
    let mut it = header.split_whitespace();
    let parse_count = |tok: Option<&str>, what: &str, line: usize| -> Result<usize, CodecError> {
        let tok = tok.ok_or_else(|| CodecError::EdgeList {
            line,
            reason: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| CodecError::EdgeList {
            line,
            reason: format!("cannot parse {what} from {tok:?}"),
        })
    };
    let n = parse_count(it.next(), "vertex count", line_no + 1)?;
    let m = parse_count(it.next(), "edge count", line_no + 1)?;
    if let Some(extra) = it.next() {
        return Err(CodecError::EdgeList {
            line: line_no + 1,
            reason: format!("unexpected token {extra:?} after 'n m' header"),
        });
    }
    if n > MAX_VERTICES {
        return Err(CodecError::EdgeList {
            line: line_no + 1,
            reason: format!("order {n} exceeds the supported maximum of {MAX_VERTICES}"),
        });
    }

    let mut g = Graph::empty(n)?;
    let mut found = 0usize;
    for (idx, line) in lines {
        let line_no = idx + 1;
        if found == m {
            return Err(CodecError::EdgeList {
                line: line_no,
                reason: format!("more than the declared {m} edges"),
            });
        }
        let mut it = line.split_whitespace();
        let u = parse_count(it.next(), "edge endpoint", line_no)?;
        let v = parse_count(it.next(), "edge endpoint", line_no)?;
        if let Some(extra) = it.next() {
            return Err(CodecError::EdgeList {
                line: line_no,
                reason: format!("unexpected token {extra:?} after edge"),
            });
        }
        g.add_edge(u, v).map_err(|e| CodecError::EdgeList { line: line_no, reason: e.to_string() })?;
        found += 1;
    }
    if found < m {
        return Err(CodecError::EdgeList {
            line: text.lines().count(),
            reason: format!("header declared {m} edges, found only {found}"),
        });
    }
    Ok(g)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_known_encodings() {
        // Hand-decoded vectors: '@' is the 1-vertex graph, "A_" a single
        // edge, "A?" two isolated vertices, "?" the order-0 graph.
        assert_eq!(parse_graph6("@").unwrap().order(), 1);
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.edges()), (2, vec![(0, 1)]));
        let e2 = parse_graph6("A?").unwrap();
        assert_eq!((e2.order(), e2.edge_count()), (2, 0));
        assert_eq!(parse_graph6("?").unwrap().order(), 0);
        // "D?{" is the 5-vertex star centered at vertex 4.
        let star = parse_graph6("D?{").unwrap();
        assert_eq!(star.order(), 5);
        assert_eq!(star.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(star.degree(4), 4);
    }

    #[test]
    fn accepts_header_and_trailing_newline() {
        let g = parse_graph6(">>graph6<<A_\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
    }

    #[test]
    fn emits_known_encodings() {
        assert_eq!(emit_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(emit_graph6(&Graph::empty(0).unwrap()), "?");
        assert_eq!(emit_graph6(&Graph::from_edges(2, &[(0, 1)]).unwrap()), "A_");
        assert_eq!(emit_graph6(&Graph::empty(2).unwrap()), "A?");
        let star = Graph::from_edges(5, &[(0, 4), (1, 4), (2, 4), (3, 4)]).unwrap();
        assert_eq!(emit_graph6(&star), "D?{");
    }

    #[test]
    fn round_trips_small_graphs() {
        for (n, edges) in [
            (4, vec![(0, 1), (1, 2), (2, 3)]),
            (6, vec![(0, 1), (1, 2), (2, 0), (3, 4)]),
            (7, vec![]),
            (3, vec![(0, 1), (1, 2), (0, 2)]),
        ] {
            let g = Graph::from_edges(n, &edges).unwrap();
            assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn rejects_malformed_graph6() {
        assert_eq!(
            parse_graph6(""),
            Err(CodecError::Truncated { expected: 1, found: 0 })
        );
        assert_eq!(
            parse_graph6("A"),
            Err(CodecError::Truncated { expected: 1, found: 0 })
        );
        assert_eq!(
            parse_graph6("D?{?"),
            Err(CodecError::TrailingBytes { offset: 3, extra: 1 })
        );
        assert_eq!(
            parse_graph6("A\x20"),
            Err(CodecError::InvalidByte { byte: 0x20, offset: 1 })
        );
        assert_eq!(
            parse_graph6("\x1f"),
            Err(CodecError::InvalidByte { byte: 0x1f, offset: 0 })
        );
        // '~' long form declares 63 vertices: over capacity, not malformed.
        assert_eq!(
            parse_graph6("~??~??"),
            Err(CodecError::OrderTooLarge { order: 63, max: 32 })
        );
        // Offset is absolute even behind the optional header.
        assert_eq!(
            parse_graph6(">>graph6<<\x1f"),
            Err(CodecError::InvalidByte { byte: 0x1f, offset: 10 })
        );
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let text = emit_edge_list(&g);
        assert_eq!(text, "5 3\n0 1\n1 2\n3 4\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
        let e0 = Graph::empty(0).unwrap();
        assert_eq!(parse_edge_list(&emit_edge_list(&e0)).unwrap(), e0);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        assert_eq!(
            parse_edge_list(""),
            Err(CodecError::EdgeList { line: 1, reason: "missing 'n m' header".into() })
        );
        let err = parse_edge_list("3 2\n0 1\n0 x").unwrap_err();
        assert_eq!(
            err,
            CodecError::EdgeList { line: 3, reason: "cannot parse edge endpoint from \"x\"".into() }
        );
        let err = parse_edge_list("3 2\n0 1").unwrap_err();
        assert!(matches!(err, CodecError::EdgeList { .. }));
        let err = parse_edge_list("2 1\n0 1\n1 0").unwrap_err();
        assert_eq!(
            err,
            CodecError::EdgeList { line: 3, reason: "more than the declared 1 edges".into() }
        );
        let err = parse_edge_list("3 1\n1 1").unwrap_err();
        assert_eq!(
            err,
            CodecError::EdgeList {
                line: 2,
                reason: "self-loop at vertex 1 is not allowed in a simple graph".into()
            }
        );
    }
}
