//! Linking numbers, correction terms, Euler numbers and signatures of
//! checkerboard surfaces.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::coloring::{classify_crossings, Color, Coloring, CrossingClass, OrientationType};
use crate::diagram::{FaceStructure, LinkOrientation, SurfaceDiagram};
use crate::tait::{gl_matrix, tait_graph};

/// Asymmetric linking numbers `ℓk(K_i, K_j)`: the signed count of crossings
/// where `K_i` passes over `K_j`. The diagonal is left undefined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkingMatrix {
    entries: Vec<Vec<i64>>,
}

impl LinkingMatrix {
    pub fn components(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, over: usize, under: usize) -> Option<i64> {
        (over != under).then(|| self.entries[over][under])
    }

    /// `λ(L) = Σ_{i≠j} ℓk(K_i, K_j)`
    pub fn total(&self) -> i64 {
        let m = self.components();
        (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).filter_map(|(i, j)| self.get(i, j)).sum()
    }
}

impl Serialize for LinkingMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let m = self.components();
        let mut seq = s.serialize_seq(Some(m))?;
        for i in 0..m {
            let row: Vec<Option<i64>> = (0..m).map(|j| self.get(i, j)).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}

pub fn linking_matrix(diagram: &SurfaceDiagram, orientation: &LinkOrientation) -> LinkingMatrix {
    let comps = diagram.components();
    let signs = diagram.crossing_signs(orientation);
    let m = comps.len();
    let mut entries = vec![vec![0; m]; m];
    for x in 0..diagram.crossing_count() {
        let (over, under) = (comps.over(x), comps.under(x));
        if over != under {
            entries[over][under] += signs.sign(x);
        }
    }
    LinkingMatrix { entries }
}

/// `μ_W(D)` and `μ_B(D)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CorrectionTerms {
    pub white: i64,
    pub black: i64,
}

impl CorrectionTerms {
    pub fn for_color(&self, color: Color) -> i64 {
        match color {
            Color::White => self.white,
            Color::Black => self.black,
        }
    }
}

/// `μ_W = Σ_{type I} -η`, `μ_B = Σ_{type II} η`.
pub fn correction_terms_from(classes: &[CrossingClass]) -> CorrectionTerms {
    let mut terms = CorrectionTerms { white: 0, black: 0 };
    for c in classes {
        match c.orientation_type {
            OrientationType::I => terms.white -= c.incidence,
            OrientationType::II => terms.black += c.incidence,
        }
    }
    terms
}

pub fn correction_terms(
    diagram: &SurfaceDiagram,
    faces: &FaceStructure,
    coloring: &Coloring,
    orientation: &LinkOrientation,
) -> CorrectionTerms {
    correction_terms_from(&classify_crossings(diagram, faces, coloring, orientation))
}

/// `e(F, L)` and `e(F)` for one checkerboard surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EulerNumbers {
    /// `e(F, L) = -2 μ_F(D)`, depends on the orientation.
    pub relative: i64,
    /// `e(F) = e(F, L) + λ(L)`, independent of the orientation.
    pub absolute: i64,
}

pub fn euler_numbers_from(mu: i64, total_linking: i64) -> EulerNumbers {
    let relative = -2 * mu;
    EulerNumbers { relative, absolute: relative + total_linking }
}

pub fn euler_numbers(
    diagram: &SurfaceDiagram,
    faces: &FaceStructure,
    coloring: &Coloring,
    orientation: &LinkOrientation,
    color: Color,
) -> EulerNumbers {
    let mu = correction_terms(diagram, faces, coloring, orientation).for_color(color);
    euler_numbers_from(mu, linking_matrix(diagram, orientation).total())
}

/// `σ_F(L) = sig(𝒢_F) + ½ e(F, L) = sig(𝒢_F) - μ_F(D)`.
pub fn sigma(
    diagram: &SurfaceDiagram,
    faces: &FaceStructure,
    coloring: &Coloring,
    orientation: &LinkOrientation,
    color: Color,
) -> i64 {
    let graph = tait_graph(diagram, faces, coloring, color);
    let sig = gl_matrix(&graph).form.signature().signature;
    sig - correction_terms(diagram, faces, coloring, orientation).for_color(color)
}
