//! The text and JSON structure-file formats.
//!
//! Text form:
//!
//! ```text
//! elements: e a b c
//! op dot:
//! e a b c
//! a e c b
//! b c e a
//! c b a e
//! op odot:
//! ...
//! e: e
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. The JSON mirror uses
//! the same field names: `{"elements": [..], "op": [{"name": .., "rows": [[..]]}], "e": ..}`.

use std::path::Path;

use esemig_core::{AlgebraError, Group, JoinedStructure, Magma, Semigroup};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedOp {
    pub name: String,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MagmaFile {
    pub elements: Vec<String>,
    pub op: Vec<NamedOp>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<String>,
}

/// Line and column are 1-based; `0` marks a document-level JSON error.
#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens with their 1-based character columns.
fn tokens(s: &str, offset: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    let mut col = offset;
    let mut start_col = 0;
    for (i, ch) in s.char_indices() {
        col += 1;
        match (ch.is_whitespace(), start) {
            (false, None) => {
                start = Some(i);
                start_col = col;
            }
            (true, Some(b)) => {
                out.push((start_col, &s[b..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(b) = start {
        out.push((start_col, &s[b..]));
    }
    out
}

impl MagmaFile {
    pub fn parse_text(src: &str) -> Result<Self, ParseError> {
        let mut lines = src
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l))
            .filter(|(_, l)| {
                let t = l.trim();
                !t.is_empty() && !t.starts_with('#')
            })
            .peekable();
        let last_line = src.lines().count().max(1);

        let (ln, header) = lines
            .next()
            .ok_or_else(|| err(1, 1, "expected `elements:` header"))?;
        let rest = header
            .trim_start()
            .strip_prefix("elements:")
            .ok_or_else(|| err(ln, 1, "expected `elements:` header"))?;
        let offset = header.chars().count() - rest.chars().count();
        let mut elements: Vec<String> = Vec::new();
        for (col, t) in tokens(rest, offset) {
            if elements.iter().any(|e| e == t) {
                return Err(err(ln, col, format!("duplicate element label `{t}`")));
            }
            elements.push(t.to_string());
        }
        if elements.is_empty() {
            return Err(err(ln, header.chars().count() + 1, "no element labels"));
        }
        let n = elements.len();

        let mut ops: Vec<NamedOp> = Vec::new();
        let mut e = None;
        while let Some((ln, line)) = lines.next() {
            let trimmed = line.trim_start();
            let indent = line.chars().count() - trimmed.chars().count();
            if let Some(rest) = trimmed.strip_prefix("op ") {
                let name = rest
                    .trim_end()
                    .strip_suffix(':')
                    .map(str::trim)
                    .ok_or_else(|| {
                        err(
                            ln,
                            line.trim_end().chars().count() + 1,
                            "expected `:` after operation name",
                        )
                    })?;
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(err(ln, indent + 4, "operation name must be one word"));
                }
                if ops.iter().any(|o| o.name == name) {
                    return Err(err(ln, indent + 4, format!("duplicate operation `{name}`")));
                }
                let mut rows = Vec::with_capacity(n);
                for r in 0..n {
                    let (rl, row) = lines.next().ok_or_else(|| {
                        err(
                            last_line,
                            1,
                            format!("operation `{name}` has {r} rows, expected {n}"),
                        )
                    })?;
                    let toks = tokens(row, 0);
                    if toks.len() != n {
                        let col = toks.get(n).map_or(row.chars().count() + 1, |t| t.0);
                        return Err(err(
                            rl,
                            col,
                            format!("expected {n} entries, found {}", toks.len()),
                        ));
                    }
                    let mut cells = Vec::with_capacity(n);
                    for (col, t) in toks {
                        if !elements.iter().any(|x| x == t) {
                            return Err(err(rl, col, format!("unknown element `{t}`")));
                        }
                        cells.push(t.to_string());
                    }
                    rows.push(cells);
                }
                ops.push(NamedOp {
                    name: name.to_string(),
                    rows,
                });
            } else if let Some(rest) = trimmed.strip_prefix("e:") {
                let offset = indent + 2;
                let toks = tokens(rest, offset);
                match toks.as_slice() {
                    [(col, t)] => {
                        if !elements.iter().any(|x| x == t) {
                            return Err(err(ln, *col, format!("unknown element `{t}`")));
                        }
                        e = Some(t.to_string());
                    }
                    _ => return Err(err(ln, offset + 1, "expected exactly one label after `e:`")),
                }
                if let Some((ln, _)) = lines.peek() {
                    return Err(err(*ln, 1, "nothing may follow the `e:` line"));
                }
            } else {
                return Err(err(ln, indent + 1, "expected `op <name>:` or `e: <label>`"));
            }
        }
        if ops.is_empty() {
            return Err(err(last_line, 1, "no operation tables"));
        }
        Ok(Self {
            elements,
            op: ops,
            e,
        })
    }

    pub fn parse_json(src: &str) -> Result<Self, ParseError> {
        let f: MagmaFile =
            serde_json::from_str(src).map_err(|e| err(e.line(), e.column(), e.to_string()))?;
        f.validate().map_err(|m| err(0, 0, m))?;
        Ok(f)
    }

    /// JSON when the first non-blank character is `{`, text otherwise.
    pub fn parse(src: &str) -> Result<Self, ParseError> {
        if src.trim_start().starts_with('{') {
            Self::parse_json(src)
        } else {
            Self::parse_text(src)
        }
    }

    pub fn load(path: &Path) -> Result<Self, crate::CliError> {
        let src = std::fs::read_to_string(path)
            .map_err(|e| crate::CliError::Io(format!("{}: {e}", path.display())))?;
        Ok(Self::parse(&src)?)
    }

    fn validate(&self) -> Result<(), String> {
        let n = self.elements.len();
        if n == 0 {
            return Err("no element labels".into());
        }
        for (i, x) in self.elements.iter().enumerate() {
            if self.elements[..i].contains(x) {
                return Err(format!("duplicate element label `{x}`"));
            }
        }
        if self.op.is_empty() {
            return Err("no operation tables".into());
        }
        for (i, o) in self.op.iter().enumerate() {
            if self.op[..i].iter().any(|p| p.name == o.name) {
                return Err(format!("duplicate operation `{}`", o.name));
            }
            if o.rows.len() != n || o.rows.iter().any(|r| r.len() != n) {
                return Err(format!("operation `{}` is not {n} x {n}", o.name));
            }
            if let Some(bad) = o.rows.iter().flatten().find(|c| !self.elements.contains(c)) {
                return Err(format!("unknown element `{bad}` in operation `{}`", o.name));
            }
        }
        if let Some(e) = &self.e {
            if !self.elements.contains(e) {
                return Err(format!("unknown element `{e}`"));
            }
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("elements: {}\n", self.elements.join(" "));
        for o in &self.op {
            s.push_str(&format!("op {}:\n", o.name));
            for r in &o.rows {
                s.push_str(&r.join(" "));
                s.push('\n');
            }
        }
        if let Some(e) = &self.e {
            s.push_str(&format!("e: {e}\n"));
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    fn index(&self, label: &str) -> Result<usize, AlgebraError> {
        self.elements
            .iter()
            .position(|x| x == label)
            .ok_or_else(|| AlgebraError::InvalidParameter(format!("unknown element `{label}`")))
    }

    /// The operation at `index` as a magma.
    pub fn magma(&self, index: usize) -> Result<Magma, AlgebraError> {
        let o = self.op.get(index).ok_or_else(|| {
            AlgebraError::Precondition(format!("file has {} operation(s)", self.op.len()))
        })?;
        let table = o
            .rows
            .iter()
            .flatten()
            .map(|c| self.index(c))
            .collect::<Result<Vec<_>, _>>()?;
        Magma::new(self.elements.clone(), table)
    }

    pub fn magma_named(&self, name: Option<&str>) -> Result<Magma, AlgebraError> {
        match name {
            None => self.magma(0),
            Some(name) => {
                let i = self.op.iter().position(|o| o.name == name).ok_or_else(|| {
                    AlgebraError::InvalidParameter(format!("no operation named `{name}`"))
                })?;
                self.magma(i)
            }
        }
    }

    /// First two operations with the joiner from `e_override`, the file, or
    /// the identity of a group first operation.
    pub fn joined(&self, e_override: Option<&str>) -> Result<JoinedStructure, AlgebraError> {
        let dot = self.magma(0)?;
        let odot = self.magma(1)?;
        let e = match e_override.or(self.e.as_deref()) {
            Some(label) => self.index(label)?,
            None => Group::from_magma(dot.clone())
                .map(|g| g.identity())
                .map_err(|_| {
                    AlgebraError::Precondition(
                        "no joiner given and the first operation is not a group".into(),
                    )
                })?,
        };
        JoinedStructure::new(dot, odot, e)
    }

    pub fn from_magma(name: &str, m: &Magma) -> Self {
        Self {
            elements: m.names().to_vec(),
            op: vec![named_op(name, m)],
            e: None,
        }
    }

    pub fn from_semigroup(s: &Semigroup) -> Self {
        Self::from_magma("dot", s.as_magma())
    }

    pub fn from_joined(j: &JoinedStructure) -> Self {
        Self {
            elements: j.names().to_vec(),
            op: vec![named_op("dot", j.dot()), named_op("odot", j.odot())],
            e: Some(j.names()[j.e()].clone()),
        }
    }
}

fn named_op(name: &str, m: &Magma) -> NamedOp {
    let n = m.order();
    NamedOp {
        name: name.to_string(),
        rows: (0..n)
            .map(|x| (0..n).map(|y| m.name(m.op(x, y)).to_string()).collect())
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z2: &str = "elements: 0 1\nop dot:\n0 1\n1 0\nop odot:\n0 0\n0 0\ne: 0\n";

    #[test]
    fn text_round_trip() {
        let f = MagmaFile::parse_text(Z2).unwrap();
        assert_eq!(f.elements, vec!["0", "1"]);
        assert_eq!(f.op.len(), 2);
        assert_eq!(f.to_text(), Z2);
        assert_eq!(MagmaFile::parse(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn comments_and_blank_lines() {
        let src = "# Z2\n\nelements: 0 1\n  # table\nop dot:\n0 1\n\n1 0\n";
        let f = MagmaFile::parse_text(src).unwrap();
        assert_eq!(f.op[0].rows, vec![vec!["0", "1"], vec!["1", "0"]]);
    }

    #[test]
    fn text_errors_carry_positions() {
        let e = MagmaFile::parse_text("elements: a b a\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 15));
        let e = MagmaFile::parse_text("elements: a b\nop dot:\na b\nb c\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 3));
        let e = MagmaFile::parse_text("elements: a b\nop dot:\na b\nb a a\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 5));
        let e = MagmaFile::parse_text("elements: a b\nop dot:\na b\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = MagmaFile::parse_text("elements: a b\nfoo\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 1));
        let e = MagmaFile::parse_text("elements: a\nop dot:\na\ne: z\n").unwrap_err();
        assert_eq!((e.line, e.column), (4, 4));
    }

    #[test]
    fn json_errors() {
        let e = MagmaFile::parse_json("{\"elements\": [\"a\"],\n \"op\": 3}").unwrap_err();
        assert_eq!(e.line, 2);
        let e = MagmaFile::parse_json(
            r#"{"elements": ["a"], "op": [{"name": "dot", "rows": [["b"]]}]}"#,
        )
        .unwrap_err();
        assert_eq!((e.line, e.column), (0, 0));
        assert!(e.message.contains("unknown element"));
    }

    #[test]
    fn joined_defaults_to_group_identity() {
        let src = "elements: a b\nop dot:\nb a\na b\nop odot:\nb b\nb b\n";
        let j = MagmaFile::parse_text(src).unwrap().joined(None).unwrap();
        assert_eq!(j.e(), 1);
    }
}
