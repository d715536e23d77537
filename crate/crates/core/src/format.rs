//! Text formats: the line-based trigraph format and graph6.
//!
//! The trigraph format starts with a `trigraph <n>` header followed by one
//! `<u> <v> <E|S>` line per strongly adjacent (`E`) or switchable (`S`) pair.
//! Unlisted pairs are strongly antiadjacent. Everything after a `#` is a
//! comment; blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::trigraph::{Adjacency, Trigraph, TrigraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Trigraph { line: usize, source: TrigraphError },
    #[error("missing `trigraph <n>` header")]
    MissingHeader,
    #[error("graph6 string is empty")]
    EmptyGraph6,
    #[error("graph6 byte {byte:#04x} at offset {offset} is outside 63..=126")]
    Graph6Byte { offset: usize, byte: u8 },
    #[error("graph6 string for {n} vertices needs {expected} bytes, got {actual}")]
    Graph6Length { n: usize, expected: usize, actual: usize },
    #[error(transparent)]
    TooLarge(TrigraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, message: message.into() }
}

/// Parses the trigraph text format. Line numbers in errors are 1-based.
pub fn parse_trigraph_text(text: &str) -> Result<Trigraph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["trigraph", n] => n.parse::<usize>().map_err(|_| syntax(header_line, format!("bad vertex count `{n}`")))?,
        _ => return Err(syntax(header_line, "expected `trigraph <n>`")),
    };
    let mut t = Trigraph::new(n).map_err(|source| FormatError::Trigraph { line: header_line, source })?;
    let mut seen = std::collections::HashSet::new();
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        let [u, v, tag] = fields[..] else {
            return Err(syntax(line, "expected `<u> <v> <E|S>`"));
        };
        let vertex = |s: &str| s.parse::<usize>().map_err(|_| syntax(line, format!("bad vertex `{s}`")));
        let (u, v) = (vertex(u)?, vertex(v)?);
        let adjacency = match tag {
            "E" => Adjacency::Strong,
            "S" => Adjacency::Semi,
            _ => return Err(syntax(line, format!("unknown adjacency `{tag}`"))),
        };
        let fail = |source| FormatError::Trigraph { line, source };
        if u >= n || v >= n {
            return Err(fail(TrigraphError::VertexOutOfRange { u, v, n }));
        }
        if u == v {
            return Err(fail(TrigraphError::SelfPair { u, v }));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(fail(TrigraphError::DuplicatePair { u: u.min(v), v: u.max(v) }));
        }
        t.set(u, v, adjacency);
    }
    Ok(t)
}

/// Canonical text form: header, then pairs in lexicographic order.
pub fn to_trigraph_text(t: &Trigraph) -> String {
    let mut out = format!("trigraph {}\n", t.n());
    for (u, v, a) in t.entries() {
        let tag = if a == Adjacency::Strong { 'E' } else { 'S' };
        writeln!(out, "{u} {v} {tag}").expect("writing to a String");
    }
    out
}

/// Decodes a graph6 string (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(s: &str) -> Result<Trigraph, FormatError> {
    let s = s.trim();
    let bytes = s.strip_prefix(">>graph6<<").unwrap_or(s).as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::EmptyGraph6);
    }
    if let Some(offset) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(FormatError::Graph6Byte { offset, byte: bytes[offset] });
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        let (len, width) = if bytes.get(1) == Some(&126) { (8, 6) } else { (4, 3) };
        if bytes.len() < len {
            return Err(FormatError::Graph6Length { n: 0, expected: len, actual: bytes.len() });
        }
        let n = bytes[len - width..len].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[len..])
    };
    let mut t = Trigraph::new(n).map_err(FormatError::TooLarge)?;
    let expected = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if body.len() != expected {
        let header = bytes.len() - body.len();
        return Err(FormatError::Graph6Length { n, expected: expected + header, actual: bytes.len() });
    }
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                t.set(u, v, Adjacency::Strong);
            }
            k += 1;
        }
    }
    Ok(t)
}

/// Encodes the full realization of `t` as graph6.
pub fn to_graph6(t: &Trigraph) -> String {
    let n = t.n();
    let mut bits = Vec::with_capacity(n * n / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(t.is_adjacent(u, v));
        }
    }
    let mut out = String::from((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let byte = chunk.iter().enumerate().fold(0u8, |acc, (i, &b)| acc | (b as u8) << (5 - i));
        out.push((byte + 63) as char);
    }
    out
}
