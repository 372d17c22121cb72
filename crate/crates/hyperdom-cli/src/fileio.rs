//! The hypergraph file format.
//!
//! Line 1 holds `n m`; the next `m` lines each hold one edge as
//! space-separated 1-based vertex ids, strictly increasing within the
//! line. Lines whose first non-blank character is `#` are comments and
//! may appear anywhere. A trailing newline is required. [`write`]
//! emits edges in canonical order, so `parse(write(h)) == h` exactly and
//! `write(parse(text)) == text` for canonical comment-free files.

use std::fmt::Write as _;

use hyperdom::Hypergraph;

/// Parse failure: a malformed file, or content that fails hypergraph
/// validation.
#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    #[error("invalid hypergraph: {0}")]
    Semantic(#[from] hyperdom::Error),
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> FileError {
    FileError::Syntax {
        line,
        col,
        msg: msg.into(),
    }
}

pub fn parse(text: &str) -> Result<Hypergraph, FileError> {
    if !text.ends_with('\n') {
        let line = text.lines().count().max(1);
        return Err(syntax(line, 1, "missing trailing newline"));
    }
    let mut content = Vec::new(); // (line_no, line)
    for (i, line) in text.lines().enumerate() {
        if line.trim_start().starts_with('#') {
            continue;
        }
        content.push((i + 1, line));
    }
    let Some(&(header_no, header)) = content.first() else {
        return Err(syntax(1, 1, "missing `n m` header"));
    };
    let mut fields = header.split(' ').filter(|f| !f.is_empty());
    let n: usize = match fields.next() {
        Some(f) => f
            .parse()
            .map_err(|_| syntax(header_no, 1, format!("bad vertex count `{f}`")))?,
        None => return Err(syntax(header_no, 1, "missing vertex count")),
    };
    let m: usize = match fields.next() {
        Some(f) => f
            .parse()
            .map_err(|_| syntax(header_no, 1, format!("bad edge count `{f}`")))?,
        None => return Err(syntax(header_no, 1, "missing edge count")),
    };
    if let Some(extra) = fields.next() {
        return Err(syntax(
            header_no,
            1,
            format!("unexpected `{extra}` after `n m` header"),
        ));
    }

    let edge_lines = &content[1..];
    if edge_lines.len() != m {
        let (line, col) = edge_lines
            .get(m)
            .map(|(l, _)| (*l, 1))
            .unwrap_or((text.lines().count() + 1, 1));
        return Err(syntax(
            line,
            col,
            format!("expected {m} edge lines, found {}", edge_lines.len()),
        ));
    }

    let mut edges: Vec<Vec<usize>> = Vec::with_capacity(m);
    for &(line_no, line) in edge_lines {
        let mut ids: Vec<usize> = Vec::new();
        let mut col = 1;
        for field in line.split(' ') {
            if field.is_empty() {
                col += 1;
                continue;
            }
            let id: usize = field.parse().map_err(|_| {
                syntax(line_no, col, format!("bad vertex id `{field}`"))
            })?;
            if let Some(&last) = ids.last() {
                if id <= last {
                    return Err(syntax(
                        line_no,
                        col,
                        format!("vertex ids must be strictly increasing, got {id} after {last}"),
                    ));
                }
            }
            ids.push(id);
            col += field.len() + 1;
        }
        if ids.is_empty() {
            return Err(syntax(line_no, 1, "empty edge line"));
        }
        edges.push(ids);
    }
    Ok(Hypergraph::new(n, edges)?)
}

pub fn write(h: &Hypergraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", h.vertex_count(), h.edge_count());
    for e in h.edges() {
        let ids: Vec<String> = e.iter().map(|v| v.get().to_string()).collect();
        let _ = writeln!(out, "{}", ids.join(" "));
    }
    out
}
