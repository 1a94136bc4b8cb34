//! Cayley table text format.
//!
//! ```text
//! # comments run to end of line
//! order 3
//! elements e a b      # optional; otherwise symbols are labeled in
//! e a b               # order of first appearance, row by row
//! a b e
//! b e a
//! ```
//!
//! Row `i` and column `i` belong to the `i`-th label. The identity need not
//! come first; it is found by scanning.

use super::{FiniteLoop, LoopError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error(transparent)]
    Loop(#[from] LoopError),
}

struct Line<'a> {
    number: usize,
    tokens: Vec<(usize, &'a str)>,
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, c) in content.char_indices() {
            if c.is_whitespace() {
                if let Some(s) = start.take() {
                    tokens.push((s, &content[s..pos]));
                }
            } else if start.is_none() {
                start = Some(pos);
            }
        }
        if let Some(s) = start {
            tokens.push((s, &content[s..]));
        }
        if !tokens.is_empty() {
            let tokens = tokens
                .into_iter()
                .map(|(byte, t)| (content[..byte].chars().count() + 1, t))
                .collect();
            out.push(Line { number: i + 1, tokens });
        }
    }
    out
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> TableError {
    TableError::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_table(text: &str) -> Result<FiniteLoop, TableError> {
    let lines = tokenize(text);
    let mut it = lines.iter();
    let header = it.next().ok_or_else(|| parse_error(1, 1, "expected `order n`"))?;
    let n = match header.tokens.as_slice() {
        [(_, "order"), (col, value)] => value
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .ok_or_else(|| parse_error(header.number, *col, format!("bad order `{value}`")))?,
        [(col, _), ..] => return Err(parse_error(header.number, *col, "expected `order n`")),
        [] => unreachable!(),
    };
    let mut rest: Vec<&Line> = it.collect();
    let mut labels: Option<Vec<String>> = None;
    if let Some(first) = rest.first() {
        if first.tokens[0].1 == "elements" {
            if first.tokens.len() != n + 1 {
                let col = first.tokens.get(n + 1).map_or(first.tokens.last().unwrap().0, |t| t.0);
                return Err(parse_error(
                    first.number,
                    col,
                    format!("expected {n} element names, found {}", first.tokens.len() - 1),
                ));
            }
            labels = Some(first.tokens[1..].iter().map(|(_, t)| t.to_string()).collect());
            rest.remove(0);
        }
    }
    if rest.len() < n {
        let line = rest.last().map_or(header.number, |l| l.number) + 1;
        return Err(parse_error(line, 1, format!("expected {n} rows, found {}", rest.len())));
    }
    if rest.len() > n {
        let extra = rest[n];
        return Err(parse_error(
            extra.number,
            extra.tokens[0].0,
            "unexpected content after table",
        ));
    }
    let mut rows = Vec::with_capacity(n);
    for line in &rest {
        if line.tokens.len() != n {
            let col = line
                .tokens
                .get(n)
                .map_or_else(|| line.tokens.last().unwrap().0, |t| t.0);
            return Err(parse_error(
                line.number,
                col,
                format!("expected {n} symbols, found {}", line.tokens.len()),
            ));
        }
        rows.push(line.tokens.iter().map(|(_, t)| t.to_string()).collect::<Vec<_>>());
    }
    let labels = labels.unwrap_or_else(|| {
        let mut seen: Vec<String> = Vec::with_capacity(n);
        for sym in rows.iter().flatten() {
            if seen.len() == n {
                break;
            }
            if !seen.contains(sym) {
                seen.push(sym.clone());
            }
        }
        seen
    });
    if labels.len() < n {
        return Err(LoopError::NotLatinSquare {
            axis: super::Axis::Row,
            index: 0,
            symbol: repeated_in(&rows[0]).unwrap_or_default(),
        }
        .into());
    }
    Ok(FiniteLoop::from_symbol_table(&labels, &rows)?)
}

fn repeated_in(row: &[String]) -> Option<String> {
    row.iter()
        .enumerate()
        .find(|(i, s)| row[..*i].contains(s))
        .map(|(_, s)| s.clone())
}

/// Identity row first, labels in index order, single spaces.
pub fn export_table(q: &FiniteLoop) -> String {
    let n = q.order();
    let mut out = format!("order {n}\n");
    for a in 0..n {
        let row: Vec<&str> = (0..n).map(|b| q.label(q.mul(a, b))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
