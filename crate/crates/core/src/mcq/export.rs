//! Text tables of `T1..T4` on basis pairs of a window.
//!
//! ```text
//! kind multiplier-coquasigroup
//! quasigroup Z
//! field Q
//! window 1
//! elements 0 1 -1
//! T1 0 1 -1 1 1
//! ...
//! end
//! ```
//! A line `Ti u w x y c` reads `Ti(δ_u ⊗ δ_w) = c δ_x ⊗ δ_y`.

use std::fmt::Write as _;

use super::{FunctionAlgebra, GaloisMap};
use crate::loops::EnumerableQuasigroup;
use crate::scalar::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum McqExportError {
    #[error("line {line}: {reason}")]
    Syntax { line: usize, reason: String },
    #[error("missing `{0}` header")]
    MissingHeader(&'static str),
    #[error("missing `end`")]
    Truncated,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct McqTables {
    pub quasigroup: String,
    pub field: Field,
    pub window: usize,
    pub elements: Vec<String>,
    pub entries: Vec<(GaloisMap, [String; 4], Scalar)>,
}

impl McqTables {
    pub fn build<Q: EnumerableQuasigroup>(k: &FunctionAlgebra<'_, Q>, n: usize) -> McqTables {
        let q = k.quasigroup();
        let w = q.window(n);
        let mut entries = Vec::new();
        for which in GaloisMap::ALL {
            for u in &w {
                for v in &w {
                    let [x, y] = k.t_basis(which, u, v);
                    let keys = [q.encode(u), q.encode(v), q.encode(&x), q.encode(&y)];
                    entries.push((which, keys, k.field().one()));
                }
            }
        }
        McqTables {
            quasigroup: q.name(),
            field: k.field(),
            window: n,
            elements: w.iter().map(|u| q.encode(u)).collect(),
            entries,
        }
    }

    pub fn lookup(&self, which: GaloisMap, u: &str, w: &str) -> Option<(&str, &str, &Scalar)> {
        self.entries
            .iter()
            .find(|(m, k, _)| *m == which && k[0] == u && k[1] == w)
            .map(|(_, k, c)| (k[2].as_str(), k[3].as_str(), c))
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        writeln!(s, "kind multiplier-coquasigroup").unwrap();
        writeln!(s, "quasigroup {}", self.quasigroup).unwrap();
        writeln!(s, "field {}", self.field).unwrap();
        writeln!(s, "window {}", self.window).unwrap();
        writeln!(s, "elements {}", self.elements.join(" ")).unwrap();
        for (which, k, c) in &self.entries {
            writeln!(s, "{which} {} {} {} {} {c}", k[0], k[1], k[2], k[3]).unwrap();
        }
        s.push_str("end\n");
        s
    }
}

pub fn export_mcq<Q: EnumerableQuasigroup>(k: &FunctionAlgebra<'_, Q>, n: usize) -> String {
    McqTables::build(k, n).render()
}

pub fn parse_mcq(text: &str) -> Result<McqTables, McqExportError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'));
    let mut header = |key: &'static str| -> Result<(usize, String), McqExportError> {
        let (i, l) = lines.next().ok_or(McqExportError::MissingHeader(key))?;
        let rest = l.strip_prefix(key).ok_or(McqExportError::MissingHeader(key))?;
        Ok((i + 1, rest.trim().to_string()))
    };
    let syntax = |line: usize, reason: String| McqExportError::Syntax { line, reason };
    let (i, kind) = header("kind")?;
    if kind != "multiplier-coquasigroup" {
        return Err(syntax(i, format!("unexpected kind `{kind}`")));
    }
    let (_, quasigroup) = header("quasigroup")?;
    let (i, field) = header("field")?;
    let field: Field = field.parse().map_err(|e| syntax(i, format!("{e}")))?;
    let (i, window) = header("window")?;
    let window = window
        .parse()
        .map_err(|_| syntax(i, format!("bad window `{window}`")))?;
    let (_, elements) = header("elements")?;
    let elements: Vec<String> = elements.split_whitespace().map(str::to_string).collect();
    let mut entries = Vec::new();
    for (i, l) in lines {
        let line = i + 1;
        if l.trim() == "end" {
            return Ok(McqTables {
                quasigroup,
                field,
                window,
                elements,
                entries,
            });
        }
        let parts: Vec<&str> = l.split_whitespace().collect();
        if parts.len() != 6 {
            return Err(syntax(line, format!("expected 6 fields, found {}", parts.len())));
        }
        let which = match parts[0] {
            "T1" => GaloisMap::T1,
            "T2" => GaloisMap::T2,
            "T3" => GaloisMap::T3,
            "T4" => GaloisMap::T4,
            other => return Err(syntax(line, format!("unknown map `{other}`"))),
        };
        for key in &parts[1..3] {
            if !elements.iter().any(|e| e == key) {
                return Err(syntax(line, format!("`{key}` is not in the window")));
            }
        }
        let c = field.parse_scalar(parts[5]).map_err(|e| syntax(line, format!("{e}")))?;
        entries.push((which, [1, 2, 3, 4].map(|j| parts[j].to_string()), c));
    }
    Err(McqExportError::Truncated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::loops::{free_group, integers, quaternion8};
    use crate::mcq::function_algebra;

    #[test]
    fn round_trip_and_lookup() {
        let z = integers();
        let k = function_algebra(&z, Field::Rational, 2).unwrap();
        let text = export_mcq(&k, 2);
        let t = parse_mcq(&text).unwrap();
        assert_eq!(t.render(), text);
        assert_eq!(t.elements, ["0", "1", "-1", "2", "-2"]);
        // T1(δ_2 ⊗ δ_-1) = δ_3 ⊗ δ_-1
        assert_eq!(
            t.lookup(GaloisMap::T1, "2", "-1").map(|(x, y, _)| (x, y)),
            Some(("3", "-1"))
        );
        assert_eq!(t.entries.len(), 4 * 25);
    }

    #[test]
    fn free_group_and_finite() {
        let g = free_group(2);
        let k = function_algebra(&g, Field::Rational, 2).unwrap();
        let text = export_mcq(&k, 2);
        assert_eq!(parse_mcq(&text).unwrap().render(), text);
        let q8 = quaternion8();
        let k = function_algebra(&q8, Field::Prime(101), 1).unwrap();
        let t = parse_mcq(&export_mcq(&k, 4)).unwrap();
        assert_eq!(t.elements.len(), 8);
    }

    #[test]
    fn rejects_malformed() {
        assert_eq!(
            parse_mcq("kind table\n").unwrap_err(),
            McqExportError::Syntax {
                line: 1,
                reason: "unexpected kind `table`".into()
            }
        );
        let good = "kind multiplier-coquasigroup\nquasigroup Z\nfield Q\nwindow 0\nelements 0\nT1 0 0 0 0 1\n";
        assert_eq!(parse_mcq(good), Err(McqExportError::Truncated));
        let bad = good.replace("T1 0 0", "T1 5 0");
        assert!(matches!(parse_mcq(&bad), Err(McqExportError::Syntax { line: 6, .. })));
    }
}
