//! The polynomial text format:
//!
//! ```text
//! p 10000019
//! n 2
//! # coefficient, then one exponent per variable
//! 1 0 1
//! 1 1 0
//! ```
//!
//! Terms are rendered in lexicographically increasing order of exponents.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::sparse::SparsePoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyFile {
    pub field: PrimeField,
    pub poly: SparsePoly<u64>,
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn header(lines: &mut impl Iterator<Item = (usize, String)>, key: &str) -> Result<(usize, u64)> {
    let (no, line) = lines
        .next()
        .ok_or_else(|| parse_err(0, format!("missing `{key}` line")))?;
    let mut words = line.split_whitespace();
    if words.next() != Some(key) {
        return Err(parse_err(no, format!("expected `{key} <value>`")));
    }
    let value = words
        .next()
        .and_then(|w| w.parse().ok())
        .ok_or_else(|| parse_err(no, format!("`{key}` needs a nonnegative integer")))?;
    if words.next().is_some() {
        return Err(parse_err(no, "trailing input"));
    }
    Ok((no, value))
}

impl PolyFile {
    pub fn new(field: PrimeField, poly: SparsePoly<u64>) -> Self {
        PolyFile { field, poly }
    }

    /// Parses the text format. Comment lines start with `#`; blank lines are
    /// ignored. Terms may appear in any order but not twice.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim().to_string()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (p_line, p) = header(&mut lines, "p")?;
        let field = PrimeField::new(p).map_err(|e| parse_err(p_line, e.to_string()))?;
        let (n_line, n) = header(&mut lines, "n")?;
        let n = usize::try_from(n).map_err(|_| parse_err(n_line, "too many variables"))?;
        let mut seen = BTreeSet::new();
        let mut terms = Vec::new();
        for (no, line) in lines {
            let mut words = line.split_whitespace();
            let c: u64 = words
                .next()
                .and_then(|w| w.parse().ok())
                .ok_or_else(|| parse_err(no, "bad coefficient"))?;
            if c == 0 || c >= p {
                return Err(parse_err(no, format!("coefficient {c} is not in [1, {p})")));
            }
            let exps = words
                .map(|w| {
                    w.parse::<u32>()
                        .map_err(|_| parse_err(no, format!("bad exponent `{w}`")))
                })
                .collect::<Result<Vec<u32>>>()?;
            if exps.len() != n {
                return Err(parse_err(
                    no,
                    format!("expected {n} exponents, found {}", exps.len()),
                ));
            }
            if !seen.insert(exps.clone()) {
                return Err(parse_err(no, "duplicate exponent vector"));
            }
            terms.push((c, exps));
        }
        let poly = SparsePoly::from_terms(&field, n, terms);
        Ok(PolyFile { field, poly })
    }

    pub fn render(&self) -> String {
        let mut out = format!("p {}\nn {}\n", self.field.modulus(), self.poly.nvars());
        for (c, e) in self.poly.terms() {
            write!(out, "{c}").expect("writing to a String");
            for x in e {
                write!(out, " {x}").expect("writing to a String");
            }
            out.push('\n');
        }
        out
    }

    pub fn read(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }
}
