//! Quivers with relations and the `.alg` text format.
//!
//! ```text
//! # oriented 2-cycle modulo paths of length 2
//! vertices: 0 1
//! arrow x0 : 0 -> 1
//! arrow x1 : 1 -> 0
//! relation 1*x0.x1
//! relation 1*x1.x0
//! nilpotency: 8
//! ```
//!
//! Path words are dot-separated arrow names read left to right: in `x0.x1`
//! the arrow `x0` is traversed first.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::linalg::{Field, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, usize>,
    arrow_index: HashMap<String, usize>,
}

impl Quiver {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<usize> {
        if self.vertex_index.contains_key(label) {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        let id = self.vertices.len();
        self.vertices.push(label.to_string());
        self.vertex_index.insert(label.to_string(), id);
        Ok(id)
    }

    pub fn add_arrow(&mut self, name: &str, source: &str, target: &str) -> Result<usize> {
        if self.arrow_index.contains_key(name) {
            return Err(Error::DuplicateLabel(name.to_string()));
        }
        let source = self.vertex(source)?;
        let target = self.vertex(target)?;
        let id = self.arrows.len();
        self.arrows.push(Arrow {
            name: name.to_string(),
            source,
            target,
        });
        self.arrow_index.insert(name.to_string(), id);
        Ok(id)
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertex_index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow(&self, name: &str) -> Result<usize> {
        self.arrow_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Parses a dot-separated arrow word into a composable path.
    pub fn path(&self, word: &str) -> Result<Path> {
        let ids = word
            .split('.')
            .map(|a| self.arrow(a.trim()))
            .collect::<Result<Vec<_>>>()?;
        Path::from_arrows(self, ids).ok_or_else(|| Error::NonComposable(word.to_string()))
    }
}

/// Path in a quiver; `arrows[0]` is traversed first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(vertex: usize) -> Self {
        Path {
            source: vertex,
            target: vertex,
            arrows: Vec::new(),
        }
    }

    /// `None` if consecutive arrows do not compose (or the list is empty).
    pub fn from_arrows(quiver: &Quiver, arrows: Vec<usize>) -> Option<Self> {
        let first = quiver.arrows.get(*arrows.first()?)?;
        let mut at = first.target;
        for &a in &arrows[1..] {
            let arr = quiver.arrows.get(a)?;
            if arr.source != at {
                return None;
            }
            at = arr.target;
        }
        Some(Path {
            source: first.source,
            target: at,
            arrows,
        })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn word(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e[{}]", quiver.vertices[self.source]);
        }
        self.arrows
            .iter()
            .map(|&a| quiver.arrows[a].name.as_str())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Linear combination of parallel paths of equal length.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub terms: Vec<(Rational, Path)>,
}

impl Relation {
    /// Validates bi-homogeneity (shared endpoints) and length homogeneity.
    pub fn new(terms: Vec<(Rational, Path)>, quiver: &Quiver) -> Result<Self> {
        let describe = |terms: &[(Rational, Path)]| {
            terms
                .iter()
                .map(|(c, p)| format!("{c}*{}", p.word(quiver)))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        let Some((_, first)) = terms.first() else {
            return Err(Error::InhomogeneousRelation("empty relation".into()));
        };
        for (_, p) in &terms {
            if p.source != first.source || p.target != first.target {
                return Err(Error::InhomogeneousRelation(format!(
                    "paths with different endpoints in `{}`",
                    describe(&terms)
                )));
            }
            if p.len() != first.len() {
                return Err(Error::InhomogeneousRelation(format!(
                    "paths of different lengths in `{}`",
                    describe(&terms)
                )));
            }
        }
        Ok(Relation { terms })
    }

    pub fn len(&self) -> usize {
        self.terms[0].1.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub name: String,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Longest path length explored before giving up.
    pub nilpotency: Option<usize>,
}

impl Presentation {
    pub fn new(name: &str, quiver: Quiver) -> Self {
        Presentation {
            name: name.to_string(),
            quiver,
            relations: Vec::new(),
            nilpotency: None,
        }
    }

    /// Adds a relation given as `(coefficient, word)` pairs.
    pub fn add_relation(&mut self, terms: &[(Rational, &str)]) -> Result<()> {
        let terms = terms
            .iter()
            .map(|(c, w)| Ok((c.clone(), self.quiver.path(w)?)))
            .collect::<Result<Vec<_>>>()?;
        let rel = Relation::new(terms, &self.quiver)?;
        self.relations.push(rel);
        Ok(())
    }

    pub fn nilpotency_bound(&self) -> usize {
        self.nilpotency.unwrap_or(4 * self.quiver.vertices().len())
    }

    /// Canonical `.alg` text. Parsing it back yields an equal presentation.
    pub fn to_alg_string(&self) -> String {
        let q = &self.quiver;
        let mut out = String::new();
        writeln!(out, "# {}", self.name).unwrap();
        writeln!(out, "vertices: {}", q.vertices().join(" ")).unwrap();
        for a in q.arrows() {
            writeln!(
                out,
                "arrow {} : {} -> {}",
                a.name,
                q.vertices()[a.source],
                q.vertices()[a.target]
            )
            .unwrap();
        }
        for r in &self.relations {
            let body = r
                .terms
                .iter()
                .map(|(c, p)| format!("{c}*{}", p.word(q)))
                .collect::<Vec<_>>()
                .join(" + ");
            writeln!(out, "relation {body}").unwrap();
        }
        if let Some(n) = self.nilpotency {
            writeln!(out, "nilpotency: {n}").unwrap();
        }
        out
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Parses the `.alg` format. The presentation name is taken from the first
/// comment line, if any.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut name: Option<String> = None;
    let mut quiver = Quiver::new();
    let mut relations = Vec::new();
    let mut nilpotency = None;
    let mut seen_vertices = false;

    for (ln, raw) in text.lines().enumerate() {
        let line_no = ln + 1;
        let (content, comment) = match raw.find('#') {
            Some(k) => (&raw[..k], Some(raw[k + 1..].trim())),
            None => (raw, None),
        };
        if name.is_none() && content.trim().is_empty() {
            if let Some(c) = comment.filter(|c| !c.is_empty()) {
                name = Some(c.to_string());
            }
        }
        let indent = content.len() - content.trim_start().len();
        let content = content.trim();
        if content.is_empty() {
            continue;
        }
        let col = indent + 1;
        if let Some(rest) = content.strip_prefix("vertices:") {
            if seen_vertices {
                return Err(syntax(line_no, col, "duplicate `vertices:` line"));
            }
            seen_vertices = true;
            for v in rest.split_whitespace() {
                quiver.add_vertex(v)?;
            }
        } else if let Some(rest) = content.strip_prefix("nilpotency:") {
            let v = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| syntax(line_no, col + 11, "expected a nonnegative integer"))?;
            nilpotency = Some(v);
        } else if let Some(rest) = content.strip_prefix("arrow ") {
            let (name_part, ends) = rest
                .split_once(':')
                .ok_or_else(|| syntax(line_no, col + 6, "expected `arrow <name> : <src> -> <dst>`"))?;
            let (src, dst) = ends
                .split_once("->")
                .ok_or_else(|| syntax(line_no, col + 6, "expected `->` in arrow declaration"))?;
            let aname = name_part.trim();
            if aname.is_empty() || aname.contains(char::is_whitespace) || aname.contains('.') {
                return Err(syntax(line_no, col + 6, format!("invalid arrow name `{aname}`")));
            }
            quiver.add_arrow(aname, src.trim(), dst.trim())?;
        } else if let Some(rest) = content.strip_prefix("relation ") {
            let base = col + "relation ".len();
            let terms = parse_terms(rest, &quiver, line_no, base)?;
            relations.push(Relation::new(terms, &quiver)?);
        } else {
            return Err(syntax(line_no, col, format!("unrecognised line `{content}`")));
        }
    }
    if !seen_vertices {
        return Err(syntax(1, 1, "missing `vertices:` line"));
    }
    Ok(Presentation {
        name: name.unwrap_or_else(|| "algebra".to_string()),
        quiver,
        relations,
        nilpotency,
    })
}

fn parse_terms(
    body: &str,
    quiver: &Quiver,
    line: usize,
    base_col: usize,
) -> Result<Vec<(Rational, Path)>> {
    // split on top-level `+` / ` - ` operators, remembering the sign
    let mut pieces: Vec<(usize, bool, &str)> = Vec::new();
    let bytes = body.as_bytes();
    let mut start = 0;
    let mut negative = false;
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k];
        let is_op = (c == b'+' || c == b'-')
            && k > 0
            && bytes[..k].iter().rev().find(|b| !b.is_ascii_whitespace()).is_some_and(|b| !matches!(b, b'*' | b'/' | b'+' | b'-'));
        if is_op {
            pieces.push((start, negative, &body[start..k]));
            negative = c == b'-';
            start = k + 1;
        }
        k += 1;
    }
    pieces.push((start, negative, &body[start..]));

    let mut terms = Vec::new();
    for (offset, neg, piece) in pieces {
        let col = base_col + offset + (piece.len() - piece.trim_start().len());
        let piece = piece.trim();
        if piece.is_empty() {
            return Err(syntax(line, col, "empty term"));
        }
        let (coeff, word) = match piece.split_once('*') {
            Some((c, w)) => {
                let c: Rational = c
                    .trim()
                    .parse()
                    .map_err(|_| syntax(line, col, format!("invalid coefficient `{}`", c.trim())))?;
                (c, w.trim())
            }
            None => match piece.strip_prefix('-') {
                Some(w) => (Rational::from(-1), w.trim()),
                None => (Rational::one(), piece),
            },
        };
        let coeff = if neg { coeff.negate() } else { coeff };
        terms.push((coeff, quiver.path(word)?));
    }
    Ok(terms)
}
