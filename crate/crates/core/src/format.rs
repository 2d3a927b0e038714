//! Line-oriented text formats.
//!
//! Poset and covering files:
//!
//! ```text
//! # comment
//! points: x1 x2 x3
//! order: x1 <= x2        # covering pairs suffice
//! order: x1 <= x3
//! ```
//!
//! `order:` lines may be replaced by `basis: {x1,x2}` lines (a basis of the
//! topology) or `cover: {s0,s1}` lines (a covering of a sample, quotiented to
//! a T₀ space). Identifiers are separated by whitespace or commas.
//!
//! Matrix files hold `k` on the first line and then `k` rows of `k` integers.

use std::collections::HashSet;
use std::fmt;
use std::fmt::Write as _;

use crate::matrix::IntMatrix;
use crate::topology::{order_from_basis, GroundSpace, Poset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based; 0 when the problem is the file as a whole.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

/// A parsed input file, before any topological validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Order {
        points: Vec<String>,
        pairs: Vec<(String, String)>,
    },
    Basis {
        points: Vec<String>,
        basis: Vec<Vec<String>>,
    },
    Cover {
        points: Vec<String>,
        cover: Vec<Vec<String>>,
    },
}

impl Document {
    pub fn points(&self) -> &[String] {
        match self {
            Document::Order { points, .. }
            | Document::Basis { points, .. }
            | Document::Cover { points, .. } => points,
        }
    }

    /// The space as a poset; coverings are quotiented first.
    pub fn to_poset(&self) -> crate::Result<Poset> {
        match self {
            Document::Order { points, pairs } => Poset::from_pairs(points.clone(), pairs),
            Document::Basis { points, basis } => order_from_basis(points, basis),
            Document::Cover { points, cover } => {
                GroundSpace::new(points.clone(), cover.clone())?.quotient().map(|q| q.poset)
            }
        }
    }

    pub fn to_ground_space(&self) -> Option<crate::Result<GroundSpace>> {
        match self {
            Document::Cover { points, cover } => {
                Some(GroundSpace::new(points.clone(), cover.clone()))
            }
            _ => None,
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

fn valid_identifier(s: &str) -> bool {
    !s.is_empty()
        && s
            .chars()
            .all(|c| c.is_alphanumeric() || matches!(c, '_' | '.' | '+' | '-' | '\''))
}

fn identifiers(text: &str, line: usize) -> Result<Vec<String>, ParseError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            if valid_identifier(s) {
                Ok(s.to_string())
            } else {
                Err(ParseError::new(line, format!("invalid identifier `{s}`")))
            }
        })
        .collect()
}

fn braced_set(text: &str, line: usize) -> Result<Vec<String>, ParseError> {
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| ParseError::new(line, format!("expected `{{a,b,...}}`, found `{text}`")))?;
    let ids = identifiers(inner, line)?;
    if ids.is_empty() {
        return Err(ParseError::new(line, "empty set"));
    }
    Ok(ids)
}

#[derive(PartialEq, Clone, Copy)]
enum Kind {
    Order,
    Basis,
    Cover,
}

impl Kind {
    fn keyword(self) -> &'static str {
        match self {
            Kind::Order => "order",
            Kind::Basis => "basis",
            Kind::Cover => "cover",
        }
    }
}

/// Parse a poset, basis or covering file.
pub fn parse_document(text: &str) -> Result<Document, ParseError> {
    let mut points: Option<Vec<String>> = None;
    let mut kind: Option<Kind> = None;
    let mut pairs = Vec::new();
    let mut sets = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = strip_comment(raw);
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content
            .split_once(':')
            .ok_or_else(|| ParseError::new(line, format!("expected `key: value`, found `{content}`")))?;
        let rest = rest.trim();
        let this = match key.trim() {
            "points" => {
                if points.is_some() {
                    return Err(ParseError::new(line, "second `points:` line"));
                }
                let ids = identifiers(rest, line)?;
                let mut seen = HashSet::new();
                if let Some(dup) = ids.iter().find(|p| !seen.insert(p.as_str())) {
                    return Err(ParseError::new(line, format!("duplicate point `{dup}`")));
                }
                points = Some(ids);
                continue;
            }
            "order" => Kind::Order,
            "basis" => Kind::Basis,
            "cover" => Kind::Cover,
            other => return Err(ParseError::new(line, format!("unknown key `{other}`"))),
        };
        let known = points
            .as_ref()
            .ok_or_else(|| ParseError::new(line, "`points:` must come first"))?;
        if let Some(k) = kind {
            if k != this {
                return Err(ParseError::new(
                    line,
                    format!("`{}:` mixed with `{}:`", this.keyword(), k.keyword()),
                ));
            }
        }
        kind = Some(this);
        let check = |id: &String| {
            if known.contains(id) {
                Ok(())
            } else {
                Err(ParseError::new(line, format!("unknown point `{id}`")))
            }
        };
        if this == Kind::Order {
            let (a, b) = rest
                .split_once("<=")
                .ok_or_else(|| ParseError::new(line, format!("expected `x <= y`, found `{rest}`")))?;
            let a = identifiers(a, line)?;
            let b = identifiers(b, line)?;
            let ([a], [b]) = (a.as_slice(), b.as_slice()) else {
                return Err(ParseError::new(line, format!("expected `x <= y`, found `{rest}`")));
            };
            check(a)?;
            check(b)?;
            pairs.push((a.clone(), b.clone()));
        } else {
            let set = braced_set(rest, line)?;
            set.iter().try_for_each(check)?;
            sets.push(set);
        }
    }
    let points = points.ok_or_else(|| ParseError::new(0, "missing `points:` line"))?;
    Ok(match kind {
        None | Some(Kind::Order) => Document::Order { points, pairs },
        Some(Kind::Basis) => Document::Basis { points, basis: sets },
        Some(Kind::Cover) => Document::Cover { points, cover: sets },
    })
}

/// Canonical poset text: points in identifier order, then the covering pairs.
pub fn print_poset(p: &Poset) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "points: {}", p.points().join(" "));
    for (x, y) in p.covers() {
        let _ = writeln!(out, "order: {} <= {}", p.label(x), p.label(y));
    }
    out
}

/// The poset as a basis file: one minimal open set per point.
pub fn print_basis(p: &Poset) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "points: {}", p.points().join(" "));
    for x in 0..p.len() {
        let _ = writeln!(out, "basis: {}", p.format_set(p.down(x)));
    }
    out
}

pub fn print_covering(g: &GroundSpace) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "points: {}", g.points().join(" "));
    for set in g.cover() {
        let _ = writeln!(out, "cover: {{{}}}", set.join(","));
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<IntMatrix, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l)))
        .filter(|(_, l)| !l.is_empty());
    let (line, first) = lines
        .next()
        .ok_or_else(|| ParseError::new(0, "empty matrix file"))?;
    let k: usize = first
        .parse()
        .map_err(|_| ParseError::new(line, format!("expected dimension, found `{first}`")))?;
    if k == 0 {
        return Err(ParseError::new(line, "dimension must be positive"));
    }
    let mut rows = Vec::with_capacity(k);
    for (line, text) in lines {
        if rows.len() == k {
            return Err(ParseError::new(line, format!("more than {k} rows")));
        }
        let row = parse_integers(text, line)?;
        if row.len() != k {
            return Err(ParseError::new(
                line,
                format!("row has {} entries, expected {k}", row.len()),
            ));
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(ParseError::new(0, format!("expected {k} rows, found {}", rows.len())));
    }
    Ok(IntMatrix::from_rows(rows))
}

pub fn print_matrix(m: &IntMatrix) -> String {
    let mut out = format!("{}\n", m.rows());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(i64::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

fn parse_integers(text: &str, line: usize) -> Result<Vec<i64>, ParseError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| ParseError::new(line, format!("invalid integer `{s}`")))
        })
        .collect()
}

/// `0,0`, `(0, 0)` and `0 0` are all accepted.
pub fn parse_vector(text: &str) -> Result<Vec<i64>, ParseError> {
    let t = text.trim();
    let t = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .unwrap_or(t);
    let v = parse_integers(t, 0)?;
    if v.is_empty() {
        return Err(ParseError::new(0, "empty vector"));
    }
    Ok(v)
}
