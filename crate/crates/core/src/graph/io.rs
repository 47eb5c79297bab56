//! graph6 and plain edge-list formats.
//!
//! graph6: one size prefix `N(n)` followed by the upper triangle of the
//! adjacency matrix in column-major order (`x(0,1), x(0,2), x(1,2), x(0,3), ..`),
//! packed six bits per byte with offset 63.

use super::Graph;
use crate::error::{Error, Result};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

fn sextet(bytes: &[u8], pos: usize) -> Result<u64> {
    match bytes.get(pos) {
        None => Err(parse_err(pos, "unexpected end of graph6 data")),
        Some(&b) if (OFFSET..=126).contains(&b) => Ok((b - OFFSET) as u64),
        Some(&b) => Err(parse_err(pos, format!("byte 0x{b:02x} outside the graph6 range 63..=126"))),
    }
}

/// Parses one graph6 line (an optional `>>graph6<<` header and trailing newline are allowed).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut start = 0;
    if text.starts_with(HEADER) {
        start = HEADER.len();
    }
    let body = text[start..].trim_end_matches(['\n', '\r']);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(start, "empty graph6 string"));
    }

    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0u64;
        for i in 1..4 {
            n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, start))?;
        }
        if n < 63 {
            return Err(parse_err(start, format!("long size prefix used for n = {n} < 63")));
        }
        (n as usize, 4)
    } else {
        let mut n = 0u64;
        for i in 2..8 {
            n = (n << 6) | sextet(bytes, i).map_err(|e| shift(e, start))?;
        }
        if n < 258048 {
            return Err(parse_err(start, format!("8-byte size prefix used for n = {n} < 258048")));
        }
        (n as usize, 8)
    };

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if bytes.len() < pos + needed {
        return Err(parse_err(
            start + bytes.len(),
            format!("truncated: n = {n} needs {needed} data bytes, found {}", bytes.len() - pos),
        ));
    }
    if bytes.len() > pos + needed {
        return Err(parse_err(start + pos + needed, "trailing bytes after graph6 data"));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    let mut current = 0u64;
    for j in 1..n {
        for i in 0..j {
            if k.is_multiple_of(6) {
                current = sextet(bytes, pos).map_err(|e| shift(e, start))?;
                pos += 1;
            }
            if current >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let pad_mask = (1u64 << (6 - k % 6)) - 1;
        if current & pad_mask != 0 {
            return Err(parse_err(start + pos - 1, "nonzero padding bits"));
        }
    }
    Graph::from_edge_list(n, &edges)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { offset, message } => Error::Parse { offset: offset + by, message },
        other => other,
    }
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + OFFSET);
    } else if n < 258048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + OFFSET);
        }
    }
    let mut acc = 0u8;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k.is_multiple_of(6) {
                out.push(acc + OFFSET);
                acc = 0;
            }
        }
    }
    if !k.is_multiple_of(6) {
        acc <<= 6 - k % 6;
        out.push(acc + OFFSET);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses `u v` lines; `#` starts a comment; an optional first line `n <count>`
/// fixes the vertex count (otherwise it is one past the largest index seen).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen_data = false;
    let mut offset = 0usize;
    for raw in text.split_inclusive('\n') {
        let line_start = offset;
        offset += raw.len();
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !seen_data && tokens.len() == 2 && tokens[0] == "n" {
            let count = tokens[1]
                .parse()
                .map_err(|_| parse_err(line_start, format!("bad vertex count {:?}", tokens[1])))?;
            n = Some(count);
            seen_data = true;
            continue;
        }
        seen_data = true;
        if tokens.len() != 2 {
            return Err(parse_err(line_start, format!("expected `u v`, found {line:?}")));
        }
        let parse = |t: &str| {
            t.parse::<usize>().map_err(|_| parse_err(line_start, format!("bad vertex index {t:?}")))
        };
        edges.push((parse(tokens[0])?, parse(tokens[1])?));
    }
    let n = n.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edge_list(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Detects the format: anything with whitespace-separated tokens on its first
/// data line is an edge list, otherwise graph6.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .unwrap_or("");
    if first.starts_with(HEADER) || !first.contains(char::is_whitespace) {
        parse_graph6(text.trim())
    } else {
        parse_edge_list(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decodes_k2() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(write_graph6(&g), "A_");
    }

    #[test]
    fn d_question_brace_round_trips() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.n(), 5);
        // 'D'->5, '?'->000000, '{'->111100: x(0,4), x(1,4), x(2,4), x(3,4)
        assert_eq!(g.edges(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(write_graph6(&g), "D?{");
    }

    #[test]
    fn long_size_prefix() {
        let g = Graph::from_edge_list(70, &[(0, 69), (10, 11)]).unwrap();
        let s = write_graph6(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        match parse_graph6("D?") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("A_x") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 2),
            other => panic!("unexpected {other:?}"),
        }
        match parse_graph6("B\x01") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn header_accepted() {
        assert_eq!(parse_graph6(">>graph6<<A_\n").unwrap().edge_count(), 1);
    }

    #[test]
    fn edge_list_with_comments_and_count() {
        let g = parse_edge_list("# path\nn 4\n0 1\n1 2 # middle\n\n").unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edge_count(), 2);
        let h = parse_edge_list("0 1\n1 2\n").unwrap();
        assert_eq!(h.n(), 3);
        assert!(parse_edge_list("0 1 2\n").is_err());
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn format_detection() {
        assert_eq!(parse_graph_text("A_\n").unwrap().n(), 2);
        assert_eq!(parse_graph_text("n 3\n0 1\n").unwrap().n(), 3);
    }
}
