//! graph6 and edge-list readers and writers.
//!
//! graph6 follows the format used by nauty: an optional `>>graph6<<`
//! header, a vertex-count prefix (1, 4 or 8 bytes), then the upper triangle
//! of the adjacency matrix in column order packed six bits per byte, each
//! byte offset by 63.
//!
//! The edge-list format is one `u v` pair per line with 1-based vertices.
//! Blank lines and `#` comments are ignored. An optional first data line
//! holding a single integer fixes the vertex count (needed for isolated
//! vertices); otherwise the count is the largest label seen.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("malformed vertex-count header")]
    BadLength,
    #[error("expected {expected} adjacency bytes, found {found}")]
    WrongBodyLength { expected: usize, found: usize },
    #[error("nonzero padding bits in the last adjacency byte")]
    TrailingBits,
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(ParseError::Empty);
    }
    if let Some((offset, &byte)) = bytes.iter().enumerate().find(|(_, b)| !(63..=126).contains(*b)) {
        return Err(ParseError::BadByte { offset, byte });
    }
    let (n, body) = decode_n(bytes)?;
    let bits128 = n as u128 * (n as u128).saturating_sub(1) / 2;
    if bits128.div_ceil(6) != body.len() as u128 {
        let expected = usize::try_from(bits128.div_ceil(6)).unwrap_or(usize::MAX);
        return Err(ParseError::WrongBodyLength { expected, found: body.len() });
    }
    let bits = bits128 as usize;
    let expected = body.len();
    if !bits.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(ParseError::TrailingBits);
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("graph6 body encodes a simple graph"))
}

fn decode_n(bytes: &[u8]) -> Result<(usize, &[u8]), ParseError> {
    let sextets = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    if bytes[0] != 126 {
        return Ok(((bytes[0] - 63) as usize, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(ParseError::BadLength);
        }
        let n = sextets(&bytes[2..8]);
        if n <= 258_047 {
            return Err(ParseError::BadLength);
        }
        return Ok((n, &bytes[8..]));
    }
    if bytes.len() < 4 {
        return Err(ParseError::BadLength);
    }
    let n = sextets(&bytes[1..4]);
    if n < 63 {
        return Err(ParseError::BadLength);
    }
    Ok((n, &bytes[4..]))
}

/// Encodes without the optional header. The output is canonical: parsing
/// any valid string and re-encoding gives the unique shortest-header form.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_label = 0;
    let mut seen_data = false;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| ParseError::Line { line: line_no, message };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse = |t: &str| t.parse::<usize>().map_err(|_| err(format!("expected a vertex number, found {t:?}")));
        match tokens.as_slice() {
            [count] if !seen_data => {
                declared = Some(parse(count)?);
            }
            [u, v] => {
                let (u, v) = (parse(u)?, parse(v)?);
                if u == 0 || v == 0 {
                    return Err(err("vertices are 1-based".into()));
                }
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")));
                }
                if let Some(n) = declared {
                    if u.max(v) > n {
                        return Err(err(format!("vertex {} exceeds declared count {n}", u.max(v))));
                    }
                }
                max_label = max_label.max(u.max(v));
                edges.push((u - 1, v - 1));
            }
            _ => return Err(err(format!("expected `u v`, found {line:?}"))),
        }
        seen_data = true;
    }
    let n = declared.unwrap_or(max_label);
    Graph::from_edges(n, edges).map_err(|e: GraphError| ParseError::Line { line: 0, message: e.to_string() })
}

/// Writes the vertex count followed by one 1-based edge per line.
pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u + 1, v + 1));
    }
    out
}

/// Accepts either format: text whose first data line contains whitespace or
/// is a bare integer is read as an edge list, anything else as graph6.
pub fn parse_graph_auto(text: &str) -> Result<Graph, ParseError> {
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    match first {
        None => parse_edge_list(""),
        Some(line) if line.starts_with(HEADER) => parse_graph6(line),
        Some(line) if line.contains(char::is_whitespace) || line.parse::<usize>().is_ok() => parse_edge_list(text),
        Some(line) => parse_graph6(line),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn reference_examples() {
        assert_eq!(parse_graph6("@").unwrap(), Graph::empty(1));
        assert_eq!(parse_graph6("A_").unwrap(), named::complete(2));
        assert_eq!(parse_graph6("C~").unwrap(), named::complete(4));
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), named::complete(4));
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0));
        assert_eq!(encode_graph6(&named::petersen()), "IheA@GUAo");
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_graph6(""), Err(ParseError::Empty));
        assert!(matches!(parse_graph6("A "), Err(ParseError::BadByte { offset: 1, .. })));
        // K_2 with a stray padding bit
        assert_eq!(parse_graph6("A`"), Err(ParseError::TrailingBits));
        assert!(matches!(parse_graph6("C"), Err(ParseError::WrongBodyLength { .. })));
        assert_eq!(parse_graph6("~??"), Err(ParseError::BadLength));
        // long form used for a count that fits the short form
        assert_eq!(parse_graph6("~???"), Err(ParseError::BadLength));
    }

    #[test]
    fn long_header_round_trip() {
        let g = named::cycle(70);
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = named::petersen();
        assert_eq!(parse_edge_list(&encode_edge_list(&g)).unwrap(), g);
        let with_isolated = parse_edge_list("5\n1 2\n").unwrap();
        assert_eq!(with_isolated.n(), 5);
        let err = parse_edge_list("1 2\n2 x\n").unwrap_err();
        assert!(matches!(err, ParseError::Line { line: 2, .. }));
        assert!(matches!(parse_edge_list("0 1"), Err(ParseError::Line { line: 1, .. })));
        assert!(matches!(parse_edge_list("3\n1 4"), Err(ParseError::Line { line: 2, .. })));
    }

    #[test]
    fn auto_detection() {
        assert_eq!(parse_graph_auto("C~\n").unwrap(), named::complete(4));
        assert_eq!(parse_graph_auto("# K2\n1 2\n").unwrap(), named::complete(2));
        assert_eq!(parse_graph_auto("1\n").unwrap(), Graph::empty(1));
    }
}
