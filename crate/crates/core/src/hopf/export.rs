//! Line-oriented structure-constant format.
//!
//! ```text
//! kind hopf-quasigroup          # or hopf-coquasigroup
//! field rational                # or gf:p
//! dim 2
//! label 0 e
//! label 1 g
//! unit 0 1                      # unit index coefficient
//! product 1 1 0 1               # b_i b_j has coefficient c on b_k: i j k c
//! coproduct 1 1 1 1             # Δ(b_k) has coefficient c on b_i⊗b_j: k i j c
//! counit 0 1                    # ε(b_k) = c
//! antipode 1 1 1                # S(b_src) has coefficient c on b_dst
//! antipode_inverse 1 1 1
//! property associative true     # free-form key/value annotations
//! end
//! ```
//!
//! Only nonzero entries are listed, in increasing index order.

use std::fmt::Write as _;

use super::{HopfError, Parts, StructureConstants};
use crate::scalar::{Field, FieldError, Scalar};
use crate::tensor::{Element, Tensor2};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    HopfQuasigroup,
    HopfCoquasigroup,
}

impl StructureKind {
    fn keyword(self) -> &'static str {
        match self {
            StructureKind::HopfQuasigroup => "hopf-quasigroup",
            StructureKind::HopfCoquasigroup => "hopf-coquasigroup",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExportError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Structure(#[from] HopfError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedStructure {
    pub kind: StructureKind,
    pub structure: StructureConstants,
    pub properties: Vec<(String, String)>,
}

pub fn export_structure(sc: &StructureConstants, kind: StructureKind, properties: &[(String, String)]) -> String {
    let n = sc.dim();
    let mut out = String::new();
    writeln!(out, "kind {}", kind.keyword()).unwrap();
    writeln!(out, "field {}", sc.field()).unwrap();
    writeln!(out, "dim {n}").unwrap();
    for (i, l) in sc.labels().iter().enumerate() {
        writeln!(out, "label {i} {l}").unwrap();
    }
    for (k, c) in sc.unit().iter() {
        writeln!(out, "unit {k} {c}").unwrap();
    }
    for i in 0..n {
        for j in 0..n {
            for (k, c) in sc.product_basis(i, j).iter() {
                writeln!(out, "product {i} {j} {k} {c}").unwrap();
            }
        }
    }
    for k in 0..n {
        for ([i, j], c) in sc.coproduct_basis(k).iter() {
            writeln!(out, "coproduct {k} {i} {j} {c}").unwrap();
        }
    }
    for k in 0..n {
        let c = sc.counit_basis(k);
        if !c.is_zero() {
            writeln!(out, "counit {k} {c}").unwrap();
        }
    }
    for (name, cols) in [("antipode", &sc.antipode), ("antipode_inverse", &sc.antipode_inverse)] {
        for (src, col) in cols.iter().enumerate() {
            for (dst, c) in col.iter() {
                writeln!(out, "{name} {src} {dst} {c}").unwrap();
            }
        }
    }
    for (k, v) in properties {
        writeln!(out, "property {k} {v}").unwrap();
    }
    out.push_str("end\n");
    out
}

pub fn parse_structure(text: &str) -> Result<ParsedStructure, ExportError> {
    let mut kind = None;
    let mut field: Option<Field> = None;
    let mut parts: Option<Parts> = None;
    let mut properties = Vec::new();
    let mut ended = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let err = |message: String| ExportError::Parse { line, message };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if ended {
            return Err(err("content after `end`".into()));
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        let idx = |s: &str, n: usize| -> Result<usize, ExportError> {
            s.parse::<usize>()
                .ok()
                .filter(|&i| i < n)
                .ok_or_else(|| err(format!("bad index `{s}`")))
        };
        let scalar = |s: &str| -> Result<Scalar, ExportError> {
            let f = field.ok_or_else(|| err("`field` must come first".into()))?;
            Ok(f.parse_scalar(s)?)
        };
        let need = |k: usize| -> Result<(), ExportError> {
            if toks.len() == k {
                Ok(())
            } else {
                Err(err(format!("`{}` takes {} arguments", toks[0], k - 1)))
            }
        };
        if toks[0] == "end" {
            need(1)?;
            ended = true;
            continue;
        }
        if !matches!(toks[0], "kind" | "field" | "dim" | "property") && parts.is_none() {
            return Err(err(format!("`{}` before `dim`", toks[0])));
        }
        let n = parts.as_ref().map_or(0, |p| p.labels.len());
        match toks[0] {
            "kind" => {
                need(2)?;
                kind = Some(match toks[1] {
                    "hopf-quasigroup" => StructureKind::HopfQuasigroup,
                    "hopf-coquasigroup" => StructureKind::HopfCoquasigroup,
                    other => return Err(err(format!("unknown kind `{other}`"))),
                });
            }
            "field" => {
                need(2)?;
                field = Some(toks[1].parse()?);
            }
            "dim" => {
                need(2)?;
                let f = field.ok_or_else(|| err("`field` must come before `dim`".into()))?;
                let n: usize = toks[1]
                    .parse()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| err(format!("bad dimension `{}`", toks[1])))?;
                parts = Some(Parts {
                    field: f,
                    labels: (0..n).map(|i| i.to_string()).collect(),
                    product: vec![Element::zero(f, n); n * n],
                    unit: Element::zero(f, n),
                    coproduct: vec![Tensor2::zero(f, n); n],
                    counit: vec![f.zero(); n],
                    antipode: vec![Element::zero(f, n); n],
                    antipode_inverse: vec![Element::zero(f, n); n],
                });
            }
            "label" => {
                need(3)?;
                let i = idx(toks[1], n)?;
                parts.as_mut().unwrap().labels[i] = toks[2].to_string();
            }
            "unit" => {
                need(3)?;
                let (k, c) = (idx(toks[1], n)?, scalar(toks[2])?);
                parts.as_mut().unwrap().unit.add_term(k, &c);
            }
            "product" => {
                need(5)?;
                let (i, j, k) = (idx(toks[1], n)?, idx(toks[2], n)?, idx(toks[3], n)?);
                let c = scalar(toks[4])?;
                parts.as_mut().unwrap().product[i * n + j].add_term(k, &c);
            }
            "coproduct" => {
                need(5)?;
                let (k, i, j) = (idx(toks[1], n)?, idx(toks[2], n)?, idx(toks[3], n)?);
                let c = scalar(toks[4])?;
                parts.as_mut().unwrap().coproduct[k].add_term([i, j], &c);
            }
            "counit" => {
                need(3)?;
                let (k, c) = (idx(toks[1], n)?, scalar(toks[2])?);
                let p = parts.as_mut().unwrap();
                p.counit[k] = &p.counit[k] + &c;
            }
            "antipode" | "antipode_inverse" => {
                need(4)?;
                let (src, dst) = (idx(toks[1], n)?, idx(toks[2], n)?);
                let c = scalar(toks[3])?;
                let p = parts.as_mut().unwrap();
                let cols = if toks[0] == "antipode" {
                    &mut p.antipode
                } else {
                    &mut p.antipode_inverse
                };
                cols[src].add_term(dst, &c);
            }
            "property" => {
                need(3)?;
                properties.push((toks[1].to_string(), toks[2].to_string()));
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }
    let last = text.lines().count();
    let missing = |what: &str| ExportError::Parse {
        line: last,
        message: format!("missing `{what}`"),
    };
    if !ended {
        return Err(missing("end"));
    }
    let kind = kind.ok_or_else(|| missing("kind"))?;
    let parts = parts.ok_or_else(|| missing("dim"))?;
    Ok(ParsedStructure {
        kind,
        structure: StructureConstants::new(parts)?,
        properties,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{group_like_algebra, sweedler};
    use crate::loops::{cyclic, quaternion8};

    #[test]
    fn round_trip() {
        for h in [
            group_like_algebra(&cyclic(2), Field::Rational).unwrap(),
            group_like_algebra(&quaternion8(), Field::Prime(101)).unwrap(),
            sweedler(Field::Rational).unwrap(),
        ] {
            let props = vec![("associative".to_string(), "true".to_string())];
            let text = export_structure(&h, StructureKind::HopfQuasigroup, &props);
            let back = parse_structure(&text).unwrap();
            assert_eq!(back.structure, *h.structure());
            assert_eq!(back.kind, StructureKind::HopfQuasigroup);
            assert_eq!(back.properties, props);
            assert_eq!(export_structure(&back.structure, back.kind, &back.properties), text);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(
            parse_structure("kind nope\n"),
            Err(ExportError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_structure("field rational\nunit 0 1\n"),
            Err(ExportError::Parse { line: 2, .. })
        ));
        assert!(parse_structure("kind hopf-quasigroup\nfield rational\ndim 1\n").is_err());
    }
}
