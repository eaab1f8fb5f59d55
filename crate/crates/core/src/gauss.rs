//! Signed Gauss codes, read as virtual link diagrams.
//!
//! A code lists, for each component, the crossings met along the way:
//! `O3+` means "pass over crossing 3, whose sign is +". Components are
//! separated by `/`. Virtual crossings are not recorded; the rotation
//! system at each classical crossing is fixed by its sign, and the
//! resulting combinatorial map is the canonical carrier surface.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::diagram::{LinkOrientation, Port, SurfaceDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussError {
    #[error("empty Gauss code")]
    Empty,
    #[error("empty component in Gauss code")]
    EmptyComponent,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("crossing {0} has no sign")]
    MissingSign(u64),
    #[error("crossing {0} must appear exactly once over and once under")]
    Unbalanced(u64),
    #[error("crossing {0} carries two different signs")]
    SignMismatch(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Token {
    over: bool,
    label: u64,
    sign: i8,
}

fn tokenize(code: &str) -> Result<Vec<Vec<Token>>, GaussError> {
    let bytes = code.as_bytes();
    let mut comps = vec![Vec::new()];
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() || c == b',' {
            i += 1;
            continue;
        }
        if c == b'/' {
            comps.push(Vec::new());
            i += 1;
            continue;
        }
        let over = match c {
            b'O' | b'o' => true,
            b'U' | b'u' => false,
            _ => return Err(GaussError::Syntax { pos: i, msg: format!("expected O or U, found `{}`", c as char) }),
        };
        i += 1;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if start == i {
            return Err(GaussError::Syntax { pos: i, msg: "expected a crossing label".into() });
        }
        let label = code[start..i]
            .parse::<u64>()
            .map_err(|_| GaussError::Syntax { pos: start, msg: "label out of range".into() })?;
        let sign = match bytes.get(i) {
            Some(b'+') => 1,
            Some(b'-') => -1,
            _ => return Err(GaussError::MissingSign(label)),
        };
        i += 1;
        comps.last_mut().unwrap().push(Token { over, label, sign });
    }
    if comps.iter().all(Vec::is_empty) {
        return Err(GaussError::Empty);
    }
    if comps.iter().any(Vec::is_empty) {
        return Err(GaussError::EmptyComponent);
    }
    Ok(comps)
}

/// A diagram imported from a Gauss code, oriented along the code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussDiagram {
    pub diagram: SurfaceDiagram,
    pub orientation: LinkOrientation,
}

pub fn from_virtual_gauss_code(code: &str) -> Result<GaussDiagram, GaussError> {
    let comps = tokenize(code)?;

    // label -> (index, sign, over seen, under seen), indices by first appearance
    let mut crossings: BTreeMap<u64, (usize, i8, bool, bool)> = BTreeMap::new();
    let mut next = 0;
    for t in comps.iter().flatten() {
        let entry = crossings.entry(t.label).or_insert_with(|| {
            next += 1;
            (next - 1, t.sign, false, false)
        });
        if entry.1 != t.sign {
            return Err(GaussError::SignMismatch(t.label));
        }
        let seen = if t.over { &mut entry.2 } else { &mut entry.3 };
        if *seen {
            return Err(GaussError::Unbalanced(t.label));
        }
        *seen = true;
    }
    if let Some((&label, _)) = crossings.iter().find(|(_, e)| !(e.2 && e.3)) {
        return Err(GaussError::Unbalanced(label));
    }

    // over-strand runs 3 -> 1; under-strand 0 -> 2 at positive crossings,
    // 2 -> 0 at negative ones
    let ports = |t: &Token| -> (Port, Port) {
        let x = crossings[&t.label].0;
        match (t.over, t.sign > 0) {
            (true, _) => (Port::new(x, 3), Port::new(x, 1)),
            (false, true) => (Port::new(x, 0), Port::new(x, 2)),
            (false, false) => (Port::new(x, 2), Port::new(x, 0)),
        }
    };
    let mut edges = Vec::new();
    let mut first_exits = Vec::new();
    for comp in &comps {
        first_exits.push(ports(&comp[0]).1);
        for (i, t) in comp.iter().enumerate() {
            let next = &comp[(i + 1) % comp.len()];
            edges.push((ports(t).1, ports(next).0));
        }
    }
    let diagram =
        SurfaceDiagram::from_edges(crossings.len(), &edges).expect("balanced Gauss code yields a perfect matching");

    let components = diagram.components();
    let mut orientation = LinkOrientation::canonical(components.len());
    for exit in first_exits {
        let k = components.component_of(exit.dart());
        if !components.is_forward(exit.dart()) {
            orientation.reverse(k);
        }
    }
    Ok(GaussDiagram { diagram, orientation })
}
