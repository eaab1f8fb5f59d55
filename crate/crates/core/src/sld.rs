//! The `.sld` text format.
//!
//! ```text
//! # right-handed trefoil
//! crossings 3
//! edge 0.1 1.3
//! ...
//! orient 0 +
//! ```
//!
//! One statement per line; `#` starts a comment. The header must come
//! first, followed by exactly `2N` edge lines and optional `orient` lines.

use std::fmt::Write as _;

use thiserror::Error;

use crate::diagram::{DiagramError, Direction, LinkOrientation, Port, SurfaceDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SldErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("missing `crossings N` header")]
    MissingHeader,
    #[error("`crossings` given twice")]
    DuplicateHeader,
    #[error("{0}")]
    Diagram(#[from] DiagramError),
    #[error("orient refers to component {component} but the diagram has {components}")]
    OrientOutOfRange { component: usize, components: usize },
    #[error("component {0} oriented twice")]
    DuplicateOrient(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct SldError {
    pub line: usize,
    pub kind: SldErrorKind,
}

fn err(line: usize, kind: impl Into<SldErrorKind>) -> SldError {
    SldError { line, kind: kind.into() }
}

/// A parsed `.sld` file: the diagram plus any explicit component directions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramSource {
    pub diagram: SurfaceDiagram,
    pub orient: Vec<(usize, Direction)>,
}

impl DiagramSource {
    /// Canonical orientation overridden by the file's `orient` lines.
    pub fn orientation(&self) -> LinkOrientation {
        let mut o = LinkOrientation::canonical(self.diagram.components().len());
        for &(k, dir) in &self.orient {
            o.set(k, dir);
        }
        o
    }
}

fn parse_port(token: &str, line: usize) -> Result<Port, SldError> {
    let syntax = || err(line, SldErrorKind::Syntax(format!("bad port `{token}`, expected A.p")));
    let (a, p) = token.split_once('.').ok_or_else(syntax)?;
    let crossing = a.parse::<usize>().map_err(|_| syntax())?;
    let slot = p.parse::<u8>().map_err(|_| syntax())?;
    if slot > 3 {
        return Err(syntax());
    }
    Ok(Port::new(crossing, slot))
}

pub fn parse_sld(text: &str) -> Result<DiagramSource, SldError> {
    let mut crossings: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut used: Vec<bool> = Vec::new();
    let mut orient: Vec<(usize, Direction, usize)> = Vec::new();
    let mut last_line = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        last_line = line;
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "crossings" => {
                if crossings.is_some() {
                    return Err(err(line, SldErrorKind::DuplicateHeader));
                }
                let [_, n] = tokens[..] else {
                    return Err(err(line, SldErrorKind::Syntax("expected `crossings N`".into())));
                };
                let n = n
                    .parse::<usize>()
                    .map_err(|_| err(line, SldErrorKind::Syntax(format!("bad crossing count `{n}`"))))?;
                if n == 0 {
                    return Err(err(line, DiagramError::NoCrossings));
                }
                crossings = Some((n, line));
                used = vec![false; 4 * n];
            }
            "edge" => {
                let Some((n, _)) = crossings else {
                    return Err(err(line, SldErrorKind::MissingHeader));
                };
                let [_, a, b] = tokens[..] else {
                    return Err(err(line, SldErrorKind::Syntax("expected `edge A.p B.q`".into())));
                };
                let a = parse_port(a, line)?;
                let b = parse_port(b, line)?;
                for p in [a, b] {
                    if p.crossing >= n {
                        return Err(err(line, DiagramError::PortOutOfRange(p)));
                    }
                    if used[p.dart()] {
                        return Err(err(line, DiagramError::PortUsedTwice(p)));
                    }
                    used[p.dart()] = true;
                }
                edges.push((a, b));
            }
            "orient" => {
                if crossings.is_none() {
                    return Err(err(line, SldErrorKind::MissingHeader));
                }
                let [_, k, s] = tokens[..] else {
                    return Err(err(line, SldErrorKind::Syntax("expected `orient k +|-`".into())));
                };
                let k =
                    k.parse::<usize>().map_err(|_| err(line, SldErrorKind::Syntax(format!("bad component `{k}`"))))?;
                let dir = match s {
                    "+" => Direction::Canonical,
                    "-" => Direction::Reversed,
                    _ => return Err(err(line, SldErrorKind::Syntax(format!("bad direction `{s}`")))),
                };
                if orient.iter().any(|&(j, _, _)| j == k) {
                    return Err(err(line, SldErrorKind::DuplicateOrient(k)));
                }
                orient.push((k, dir, line));
            }
            other => {
                return Err(err(line, SldErrorKind::Syntax(format!("unknown statement `{other}`"))));
            }
        }
    }

    let Some((n, header_line)) = crossings else {
        return Err(err(last_line.max(1), SldErrorKind::MissingHeader));
    };
    // fewer than 2N edges without reuse leaves some port unmatched
    if let Some(d) = used.iter().position(|&u| !u) {
        return Err(err(header_line, DiagramError::DanglingPort(Port::from_dart(d))));
    }
    let diagram = SurfaceDiagram::from_edges(n, &edges).map_err(|e| err(header_line, e))?;
    let components = diagram.components().len();
    if let Some(&(k, _, line)) = orient.iter().find(|&&(k, _, _)| k >= components) {
        return Err(err(line, SldErrorKind::OrientOutOfRange { component: k, components }));
    }
    Ok(DiagramSource { diagram, orient: orient.into_iter().map(|(k, d, _)| (k, d)).collect() })
}

/// Writes a diagram in canonical edge order. With an orientation, one
/// `orient` line is written per component.
pub fn to_sld(diagram: &SurfaceDiagram, orientation: Option<&LinkOrientation>) -> String {
    let mut out = String::new();
    writeln!(out, "crossings {}", diagram.crossing_count()).unwrap();
    for (a, b) in diagram.edges() {
        writeln!(out, "edge {a} {b}").unwrap();
    }
    if let Some(o) = orientation {
        for k in 0..o.len() {
            let s = if o.is_reversed(k) { '-' } else { '+' };
            writeln!(out, "orient {k} {s}").unwrap();
        }
    }
    out
}
