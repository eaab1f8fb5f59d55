//! Checkerboard colorings and crossing classification.
//!
//! Quadrant `q` at a crossing is the corner between ports `q` and `q + 1`.
//! A crossing is type `b` when quadrants 0 and 2 are black and type `a`
//! when quadrants 1 and 3 are black; the incidence number is `+1` for type
//! `a` and `-1` for type `b`. With this choice the standard diagram of the
//! right-handed trefoil, colored so its two-face class is black, has every
//! crossing of type `b`.
//!
//! The orientation type compares the incidence number with the crossing
//! sign: type I crossings have `η = -ε` (the oriented smoothing joins the
//! white quadrants), type II crossings have `η = ε`.

use serde::Serialize;

use crate::diagram::{Dart, FaceStructure, LinkOrientation, SurfaceDiagram};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// A color for every face, opposite across every edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Color>,
}

impl Coloring {
    /// Validates `colors` (one per face, in canonical face order).
    pub fn new(diagram: &SurfaceDiagram, faces: &FaceStructure, colors: Vec<Color>) -> Option<Self> {
        if colors.len() != faces.count() {
            return None;
        }
        let ok = (0..diagram.dart_count()).all(|d| colors[faces.face_of(d)] != colors[faces.face_of(diagram.mate(d))]);
        ok.then_some(Coloring { colors })
    }

    /// Black where `black[f]` is set.
    pub fn from_black_set(diagram: &SurfaceDiagram, faces: &FaceStructure, black: &[bool]) -> Option<Self> {
        let colors = black.iter().map(|&b| if b { Color::Black } else { Color::White }).collect();
        Coloring::new(diagram, faces, colors)
    }

    pub fn color(&self, face: usize) -> Color {
        self.colors[face]
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.colors
    }

    pub fn swapped(&self) -> Coloring {
        Coloring { colors: self.colors.iter().map(|c| c.other()).collect() }
    }

    pub fn count(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    /// `α`, the number of white disks.
    pub fn white_count(&self) -> usize {
        self.count(Color::White)
    }

    /// `β`, the number of black disks.
    pub fn black_count(&self) -> usize {
        self.count(Color::Black)
    }

    pub fn black_set(&self) -> Vec<bool> {
        self.colors.iter().map(|&c| c == Color::Black).collect()
    }
}

/// The two sides of the edge leaving through `dart`.
fn sides(diagram: &SurfaceDiagram, faces: &FaceStructure, dart: Dart) -> (usize, usize) {
    (faces.face_of(dart), faces.face_of(diagram.mate(dart)))
}

/// All checkerboard colorings, by parity propagation across edges.
///
/// Returns no coloring when the diagram is not colorable. Otherwise the
/// coloring found by seeding the lowest face of each piece black, followed
/// by its global swap; for connected diagrams these are the only two.
pub fn checkerboard_colorings(diagram: &SurfaceDiagram, faces: &FaceStructure) -> Vec<Coloring> {
    let n = faces.count();
    let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); n];
    for d in 0..diagram.dart_count() {
        let (f, g) = sides(diagram, faces, d);
        if f == g {
            return Vec::new();
        }
        adjacent[f].push(g);
    }
    let mut colors: Vec<Option<Color>> = vec![None; n];
    for seed in 0..n {
        if colors[seed].is_some() {
            continue;
        }
        colors[seed] = Some(Color::Black);
        let mut stack = vec![seed];
        while let Some(f) = stack.pop() {
            let next = colors[f].unwrap().other();
            for &g in &adjacent[f] {
                match colors[g] {
                    None => {
                        colors[g] = Some(next);
                        stack.push(g);
                    }
                    Some(c) if c != next => return Vec::new(),
                    Some(_) => {}
                }
            }
        }
    }
    let coloring = Coloring { colors: colors.into_iter().map(Option::unwrap).collect() };
    let swapped = coloring.swapped();
    vec![coloring, swapped]
}

/// Solves `∂x = Σ edges` over GF(2) on the cell structure of the carrier
/// surface. A solution is a set of faces meeting every edge on exactly one
/// side, i.e. the black faces of a checkerboard coloring.
pub fn homology_obstruction(diagram: &SurfaceDiagram, faces: &FaceStructure) -> Option<Vec<bool>> {
    let n = faces.count();
    let words = n / 64 + 1;
    // augmented rows: bit n holds the right-hand side
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (a, _) in diagram.edges() {
        let (f, g) = sides(diagram, faces, a.dart());
        let mut row = vec![0u64; words];
        row[f / 64] ^= 1 << (f % 64);
        row[g / 64] ^= 1 << (g % 64);
        row[n / 64] |= 1 << (n % 64);
        rows.push(row);
    }
    let bit = |row: &[u64], j: usize| row[j / 64] >> (j % 64) & 1 == 1;

    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| bit(&rows[i], col)) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && bit(row, col) {
                for (d, s) in row.iter_mut().zip(&pivot) {
                    *d ^= s;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if rows[r..].iter().any(|row| bit(row, n)) {
        return None;
    }
    let mut x = vec![false; n];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = bit(&rows[i], n);
    }
    Some(x)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorType {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum OrientationType {
    I,
    II,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CrossingClass {
    pub color_type: ColorType,
    pub orientation_type: OrientationType,
    pub incidence: i64,
}

/// Color type of every crossing; depends only on the coloring.
pub fn color_types(faces: &FaceStructure, coloring: &Coloring, crossings: usize) -> Vec<ColorType> {
    (0..crossings)
        .map(|x| if coloring.color(faces.quadrant_face(x, 0)) == Color::Black { ColorType::B } else { ColorType::A })
        .collect()
}

pub fn classify_crossings(
    diagram: &SurfaceDiagram,
    faces: &FaceStructure,
    coloring: &Coloring,
    orientation: &LinkOrientation,
) -> Vec<CrossingClass> {
    let signs = diagram.crossing_signs(orientation);
    color_types(faces, coloring, diagram.crossing_count())
        .into_iter()
        .enumerate()
        .map(|(x, color_type)| {
            let incidence = match color_type {
                ColorType::A => 1,
                ColorType::B => -1,
            };
            let orientation_type = if incidence == -signs.sign(x) { OrientationType::I } else { OrientationType::II };
            CrossingClass { color_type, orientation_type, incidence }
        })
        .collect()
}
