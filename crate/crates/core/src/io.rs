//! graph6 and plain edge-list text formats.
//!
//! graph6: a size header (`n + 63` for `n ≤ 62`, otherwise `~` followed by three
//! 6-bit groups), then the upper triangle of the adjacency matrix in column order
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits per byte, most significant
//! bit first, each byte offset by 63 and the final byte zero-padded.
//!
//! Edge list: a header line `n m`, then `m` lines `u v`.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    // every byte is in 63..=126
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

/// Parses one graph6 record. An optional `>>graph6<<` prefix and surrounding
/// whitespace are accepted; offsets in errors refer to the trimmed record.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let byte_at = |i: usize| -> Result<u8> {
        let b = *bytes
            .get(i)
            .ok_or_else(|| parse_err(i, "unexpected end of input"))?;
        if !(63..=126).contains(&b) {
            return Err(parse_err(i, format!("byte {b:#04x} outside graph6 range 63..=126")));
        }
        Ok(b - 63)
    };

    let first = byte_at(0)?;
    let (n, mut pos) = if first < 63 {
        (first as usize, 1)
    } else {
        if byte_at(1)? == 63 {
            return Err(Error::Resource(format!(
                "8-byte graph6 size header implies more than {MAX_VERTICES} vertices"
            )));
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = n << 6 | byte_at(i)? as usize;
        }
        if n < 63 {
            return Err(parse_err(0, format!("long size header used for n = {n}")));
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(Error::Resource(format!(
            "graph6 record declares {n} vertices, cap is {MAX_VERTICES}"
        )));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let mut g = Graph::new(n)?;
    let mut k = 0usize;
    'cols: for j in 1..n {
        for i in 0..j {
            let byte = byte_at(pos + k / 6)?;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
            if k == bits {
                break 'cols;
            }
        }
    }
    if bits % 6 != 0 {
        let last = byte_at(pos + body_len - 1)?;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(parse_err(pos + body_len - 1, "nonzero padding bits"));
        }
    }
    pos += body_len;
    if pos != bytes.len() {
        return Err(parse_err(pos, "trailing bytes after graph6 record"));
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line = raw.trim();
        if !line.is_empty() && !line.starts_with('#') {
            lines.push((offset, line));
        }
        offset += raw.len();
    }
    let mut it = lines.into_iter();
    let (off, header) = it.next().ok_or_else(|| parse_err(0, "empty edge list"))?;
    let [n, m] = parse_pair(header, off)?;
    if n > MAX_VERTICES {
        return Err(Error::Resource(format!(
            "edge list declares {n} vertices, cap is {MAX_VERTICES}"
        )));
    }
    let mut g = Graph::new(n)?;
    let mut seen = 0;
    for (off, line) in it {
        let [u, v] = parse_pair(line, off)?;
        if u == v {
            return Err(parse_err(off, format!("self-loop at vertex {u}")));
        }
        if u >= n || v >= n {
            return Err(parse_err(off, format!("edge ({u}, {v}) out of range for n = {n}")));
        }
        if g.has_edge(u, v) {
            return Err(parse_err(off, format!("duplicate edge ({u}, {v})")));
        }
        g.add_edge(u, v)?;
        seen += 1;
    }
    if seen != m {
        return Err(parse_err(text.len(), format!("header declares {m} edges, found {seen}")));
    }
    Ok(g)
}

fn parse_pair(line: &str, offset: usize) -> Result<[usize; 2]> {
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let f = fields
            .next()
            .ok_or_else(|| parse_err(offset, format!("expected two integers in {line:?}")))?;
        f.parse()
            .map_err(|_| parse_err(offset, format!("not a nonnegative integer: {f:?}")))
    };
    let pair = [next()?, next()?];
    if fields.next().is_some() {
        return Err(parse_err(offset, format!("expected two integers in {line:?}")));
    }
    Ok(pair)
}

/// Reads graphs from text: an edge list when the first content line is `n m`,
/// otherwise one graph6 record per nonempty line.
pub fn read_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#'));
    let Some(first) = first else {
        return Err(parse_err(0, "no graph in input"));
    };
    let looks_like_header = {
        let f: Vec<_> = first.split_whitespace().collect();
        f.len() == 2 && f.iter().all(|x| x.bytes().all(|b| b.is_ascii_digit()))
    };
    if looks_like_header {
        return Ok(vec![from_edge_list(text)?]);
    }
    let mut graphs = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        if !raw.trim().is_empty() {
            let g = from_graph6(raw).map_err(|e| match e {
                Error::Parse { offset: o, message } => Error::Parse {
                    offset: offset + o + (raw.len() - raw.trim_start().len()),
                    message,
                },
                other => other,
            })?;
            graphs.push(g);
        }
        offset += raw.len();
    }
    Ok(graphs)
}
