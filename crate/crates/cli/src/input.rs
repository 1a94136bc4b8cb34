//! Resolving `builtin:` names and Cayley table files.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use hopfq_core::hopf::{group_like_algebra, sweedler, StructureConstants};
use hopfq_core::loops::{cyclic, octonion_loop16, parse_table, quaternion8, symmetric, FiniteLoop};
use hopfq_core::Field;

pub const BUILTINS: &str = "cyclic:N, symmetric:N, quaternion8, octonion16, integers, free:N, sweedler";

pub enum Input {
    Loop(FiniteLoop),
    Integers,
    Free(usize),
    Sweedler,
}

impl Input {
    pub fn parse(source: &str) -> Result<Input> {
        let Some(name) = source.strip_prefix("builtin:") else {
            let text = fs::read_to_string(Path::new(source)).with_context(|| format!("cannot read `{source}`"))?;
            return Ok(Input::Loop(parse_table(&text).with_context(|| source.to_string())?));
        };
        let (head, arg) = match name.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (name, None),
        };
        let number = |lo: usize, hi: usize| -> Result<usize> {
            let a = arg.with_context(|| format!("`{head}` needs a size, as in `{head}:{lo}`"))?;
            match a.parse::<usize>() {
                Ok(n) if (lo..=hi).contains(&n) => Ok(n),
                _ => bail!("`{head}` size must be in {lo}..={hi}, got `{a}`"),
            }
        };
        Ok(match head {
            "cyclic" => Input::Loop(cyclic(number(1, 64)?)),
            "symmetric" => Input::Loop(symmetric(number(1, 5)?)),
            "quaternion8" | "q8" => Input::Loop(quaternion8()),
            "octonion16" | "o16" => Input::Loop(octonion_loop16()),
            "integers" => Input::Integers,
            "free" => Input::Free(number(1, 6)?),
            "sweedler" => Input::Sweedler,
            _ => bail!("unknown builtin `{name}`; known: {BUILTINS}"),
        })
    }

    /// The finite-dimensional algebra: `kQ` for a loop, or Sweedler's.
    pub fn algebra(&self, field: Field) -> Result<StructureConstants> {
        match self {
            Input::Loop(q) => Ok(group_like_algebra(q, field)?.into_structure()),
            Input::Sweedler => Ok(sweedler(field)?.into_structure()),
            _ => bail!("this input has no finite-dimensional algebra; use `mcq`"),
        }
    }
}
