//! Group and function JSON formats, and the group expression grammar.
//!
//! ```text
//! expr := cyclic:N | symmetric:N | dihedral:N | alternating:N | product:expr,expr
//! ```
//!
//! `dihedral:N` has order `2N`. Anything that is not an expression is read as
//! a path to a group JSON file.

use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::GroupFunction;
use crate::group::{Elem, Group, DEFAULT_ELEMENT_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupJson {
    Cayley { order: usize, table: Vec<Vec<usize>> },
    Perm { degree: usize, generators: Vec<Vec<usize>> },
    Spec { expr: String },
}

impl GroupJson {
    pub fn to_group(&self) -> Result<Group> {
        match self {
            GroupJson::Cayley { order, table } => {
                if table.len() != *order {
                    return Err(Error::Validation(format!("declared order {order} but table has {} rows", table.len())));
                }
                Group::from_cayley_table(table)
            }
            GroupJson::Perm { degree, generators } => Group::from_permutations(*degree, generators, DEFAULT_ELEMENT_CAP),
            GroupJson::Spec { expr } => parse_group_spec(expr),
        }
    }

    pub fn from_group(g: &Group) -> GroupJson {
        GroupJson::Cayley { order: g.order(), table: g.table_rows() }
    }
}

/// A group given either inline or as an expression string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupRef {
    Expr(String),
    Json(GroupJson),
}

impl GroupRef {
    pub fn to_group(&self) -> Result<Group> {
        match self {
            GroupRef::Expr(s) => parse_group_spec(s),
            GroupRef::Json(j) => j.to_group(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionJson {
    pub domain: GroupRef,
    pub codomain: GroupRef,
    pub values: Vec<Elem>,
    /// Optional claim that the function is a homomorphism; checked on load by the self-check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub homomorphism: Option<bool>,
}

impl FunctionJson {
    pub fn to_function(&self) -> Result<GroupFunction> {
        let domain = Arc::new(self.domain.to_group()?);
        let codomain = Arc::new(self.codomain.to_group()?);
        GroupFunction::new(&domain, &codomain, self.values.clone())
    }
}

/// Serialises a group as Cayley-table JSON. Output is a pure function of the table.
pub fn group_to_json(g: &Group) -> String {
    serde_json::to_string(&GroupJson::from_group(g)).expect("serialisable")
}

pub fn group_from_json(text: &str) -> Result<Group> {
    let parsed: GroupJson = serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
    parsed.to_group()
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn word(&mut self) -> &str {
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_alphabetic()).unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.err(format!("expected '{c}'"))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let rest = &self.src[self.pos..];
        let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
        if len == 0 {
            return self.err("expected a number");
        }
        let n = rest[..len].parse().or_else(|_| self.err("number too large"))?;
        self.pos += len;
        Ok(n)
    }

    fn expr(&mut self) -> Result<Group> {
        let start = self.pos;
        let word = self.word().to_string();
        self.expect(':')?;
        match word.as_str() {
            "product" => {
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                Ok(Group::direct_product(&a, &b))
            }
            "cyclic" | "symmetric" | "dihedral" | "alternating" => {
                let n = self.number()?;
                let built = match word.as_str() {
                    "cyclic" => Group::cyclic(n),
                    "symmetric" => Group::symmetric(n),
                    "dihedral" => Group::dihedral(n),
                    _ => Group::alternating(n),
                };
                built.map_err(|e| match e {
                    Error::InvalidOrder(_) => Error::Parse { pos: start, msg: format!("{word} needs n >= 1") },
                    other => other,
                })
            }
            _ => Err(Error::Parse { pos: start, msg: format!("unknown group family '{word}'") }),
        }
    }
}

const FAMILIES: &[&str] = &["cyclic:", "symmetric:", "dihedral:", "alternating:", "product:"];

/// Parses a group expression, or loads a JSON file when the input is not one.
pub fn parse_group_spec(spec: &str) -> Result<Group> {
    let spec = spec.trim();
    if !FAMILIES.iter().any(|f| spec.starts_with(f)) && Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| Error::Io(format!("{spec}: {e}")))?;
        return group_from_json(&text);
    }
    let mut p = Parser { src: spec, pos: 0 };
    let g = p.expr()?;
    if p.pos != spec.len() {
        return p.err("trailing input");
    }
    Ok(g)
}

/// Parses a comma-separated list of element indices; the empty string is the empty list.
pub fn parse_elements(list: &str) -> Result<Vec<Elem>> {
    let list = list.trim();
    if list.is_empty() {
        return Ok(vec![]);
    }
    let mut out = vec![];
    let mut pos = 0;
    for part in list.split(',') {
        let v = part.trim().parse().map_err(|_| Error::Parse { pos, msg: format!("'{}' is not an element index", part.trim()) })?;
        out.push(v);
        pos += part.len() + 1;
    }
    Ok(out)
}
