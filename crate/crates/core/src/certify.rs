//! Per-diagram reports and theorem-level verdicts.

use serde::Serialize;

use crate::coloring::{
    checkerboard_colorings, classify_crossings, homology_obstruction, Color, ColorType, Coloring, CrossingClass,
};
use crate::diagram::{Direction, FaceStructure, LinkOrientation, SurfaceDiagram};
use crate::form::SignatureResult;
use crate::pairing::{
    correction_terms_from, euler_numbers_from, linking_matrix, CorrectionTerms, EulerNumbers, LinkingMatrix,
};
use crate::tait::{gl_matrix, tait_graph, GlForm};

/// Largest component count for which every orientation is tried when
/// checking that `e(F)` does not depend on the orientation. Above it only
/// single-component reversals are tried.
pub const FULL_ORIENTATION_SWEEP: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormReport {
    #[serde(flatten)]
    pub gl: GlForm,
    #[serde(flatten)]
    pub result: SignatureResult,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub holds: bool,
}

/// Everything computed for one diagram. Field order is the JSON order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub crossings: usize,
    pub genus: usize,
    pub faces: usize,
    pub components: usize,
    pub split: bool,
    pub orientation: Vec<Direction>,
    pub crossing_signs: Vec<i64>,
    pub positive_crossings: usize,
    pub negative_crossings: usize,
    pub alternating_scan: bool,
    pub colorable: bool,
    pub colorable_gf2: bool,
    pub coloring: Option<Vec<Color>>,
    pub white_faces: Option<usize>,
    pub black_faces: Option<usize>,
    pub crossing_classes: Option<Vec<CrossingClass>>,
    pub type_a: Option<usize>,
    pub type_b: Option<usize>,
    pub form_black: Option<FormReport>,
    pub form_white: Option<FormReport>,
    pub mu_white: Option<i64>,
    pub mu_black: Option<i64>,
    pub euler_white: Option<EulerNumbers>,
    pub euler_black: Option<EulerNumbers>,
    pub signature_white: Option<i64>,
    pub signature_black: Option<i64>,
    pub linking: LinkingMatrix,
    pub total_linking: i64,
    pub alternating_by_definiteness: Option<bool>,
    pub minimal_genus_certified: Option<bool>,
    pub identities: Vec<IdentityCheck>,
    pub consistent: bool,
    pub pieces: Vec<AnalysisReport>,
}

impl AnalysisReport {
    pub fn failed_identities(&self) -> Vec<&'static str> {
        let mut failed: Vec<_> = self.identities.iter().filter(|c| !c.holds).map(|c| c.name).collect();
        for piece in &self.pieces {
            failed.extend(piece.failed_identities());
        }
        failed
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// The coloring with the most type `b` crossings; ties go to the coloring
/// whose first face is black.
pub fn preferred_coloring(faces: &FaceStructure, colorings: &[Coloring], crossings: usize) -> Option<Coloring> {
    colorings
        .iter()
        .enumerate()
        .max_by_key(|(i, c)| {
            let b =
                crate::coloring::color_types(faces, c, crossings).into_iter().filter(|&t| t == ColorType::B).count();
            (b, std::cmp::Reverse(*i))
        })
        .map(|(_, c)| c.clone())
}

/// Orientation of `sub = diagram.restrict(crossings)` induced by an
/// orientation of `diagram`.
fn restrict_orientation(
    diagram: &SurfaceDiagram,
    crossings: &[usize],
    sub: &SurfaceDiagram,
    orientation: &LinkOrientation,
) -> LinkOrientation {
    let comps = diagram.components();
    let sub_comps = sub.components();
    let reversed = (0..sub_comps.len())
        .map(|k| {
            let d = sub_comps.route(k)[0];
            let original = 4 * crossings[d / 4] + d % 4;
            comps.is_outgoing(original, orientation) != sub_comps.is_forward(d)
        })
        .collect();
    LinkOrientation::from_reversed(reversed)
}

/// Analyzes a diagram. Without an orientation, every component follows its
/// canonical direction.
///
/// # Panics
///
/// If `orientation` does not have one entry per component.
pub fn analyze(diagram: &SurfaceDiagram, orientation: Option<&LinkOrientation>) -> AnalysisReport {
    let faces = diagram.faces();
    let comps = diagram.components();
    let orientation = orientation.cloned().unwrap_or_else(|| LinkOrientation::canonical(comps.len()));
    assert_eq!(orientation.len(), comps.len(), "one direction per component");

    let signs = diagram.crossing_signs(&orientation);
    let linking = linking_matrix(diagram, &orientation);
    let colorings = checkerboard_colorings(diagram, &faces);
    let gf2 = homology_obstruction(diagram, &faces);
    let pieces = diagram.pieces();
    let split = pieces.len() > 1;
    let c = diagram.crossing_count();

    let mut report = AnalysisReport {
        crossings: c,
        genus: diagram.genus(),
        faces: faces.count(),
        components: comps.len(),
        split,
        orientation: orientation.directions(),
        crossing_signs: signs.as_slice().to_vec(),
        positive_crossings: signs.positive(),
        negative_crossings: signs.negative(),
        alternating_scan: diagram.is_alternating(),
        colorable: !colorings.is_empty(),
        colorable_gf2: gf2.is_some(),
        coloring: None,
        white_faces: None,
        black_faces: None,
        crossing_classes: None,
        type_a: None,
        type_b: None,
        form_black: None,
        form_white: None,
        mu_white: None,
        mu_black: None,
        euler_white: None,
        euler_black: None,
        signature_white: None,
        signature_black: None,
        total_linking: linking.total(),
        linking,
        alternating_by_definiteness: None,
        minimal_genus_certified: None,
        identities: Vec::new(),
        consistent: true,
        pieces: Vec::new(),
    };

    if split {
        report.pieces = pieces
            .iter()
            .map(|piece| {
                let sub = diagram.restrict(piece);
                let o = restrict_orientation(diagram, piece, &sub, &orientation);
                analyze(&sub, Some(&o))
            })
            .collect();
    } else if let Some(coloring) = preferred_coloring(&faces, &colorings, c) {
        let classes = classify_crossings(diagram, &faces, &coloring, &orientation);
        let form = |color| {
            let gl = gl_matrix(&tait_graph(diagram, &faces, &coloring, color));
            let result = gl.form.signature();
            FormReport { gl, result }
        };
        let black = form(Color::Black);
        let white = form(Color::White);
        let mu = correction_terms_from(&classes);
        let type_a = classes.iter().filter(|k| k.color_type == ColorType::A).count();

        report.alternating_by_definiteness = Some(opposite_definite(&black.result, &white.result));
        report.minimal_genus_certified = Some(black.result.is_nonsingular() && white.result.is_nonsingular());
        report.signature_black = Some(black.result.signature - mu.black);
        report.signature_white = Some(white.result.signature - mu.white);
        report.euler_black = Some(euler_numbers_from(mu.black, report.total_linking));
        report.euler_white = Some(euler_numbers_from(mu.white, report.total_linking));
        report.mu_black = Some(mu.black);
        report.mu_white = Some(mu.white);
        report.type_a = Some(type_a);
        report.type_b = Some(c - type_a);
        report.white_faces = Some(coloring.white_count());
        report.black_faces = Some(coloring.black_count());
        report.coloring = Some(coloring.as_slice().to_vec());
        report.crossing_classes = Some(classes);
        report.form_black = Some(black);
        report.form_white = Some(white);
    }

    report.identities = check_identity_suite(diagram, &report);
    report.consistent = report.failed_identities().is_empty();
    report
}

/// One form negative definite and the other positive definite, empty forms
/// counting as either.
fn opposite_definite(a: &SignatureResult, b: &SignatureResult) -> bool {
    (a.negative_or_empty() && b.positive_or_empty()) || (a.positive_or_empty() && b.negative_or_empty())
}

/// Black and white surfaces definite of opposite sign. `None` for split or
/// non-colorable diagrams.
pub fn verdict_alternating_by_definiteness(report: &AnalysisReport) -> Option<bool> {
    match (&report.form_black, &report.form_white) {
        (Some(b), Some(w)) if !report.split => Some(opposite_definite(&b.result, &w.result)),
        _ => None,
    }
}

/// Both checkerboard forms non-singular. `Some(false)` means "not
/// certified", not "not minimal".
pub fn verdict_minimal_genus(report: &AnalysisReport) -> Option<bool> {
    match (&report.form_black, &report.form_white) {
        (Some(b), Some(w)) if !report.split => Some(b.result.is_nonsingular() && w.result.is_nonsingular()),
        _ => None,
    }
}

fn orientations_to_try(components: usize) -> Vec<LinkOrientation> {
    if components <= FULL_ORIENTATION_SWEEP {
        (0..1u64 << components).map(|bits| LinkOrientation::from_bits(components, bits)).collect()
    } else {
        let mut all = vec![LinkOrientation::canonical(components)];
        for k in 0..components {
            let mut o = LinkOrientation::canonical(components);
            o.reverse(k);
            all.push(o);
        }
        all.push(LinkOrientation::canonical(components).reversed_all());
        all
    }
}

/// Evaluates every identity that applies to the diagram.
pub fn check_identity_suite(diagram: &SurfaceDiagram, report: &AnalysisReport) -> Vec<IdentityCheck> {
    let mut checks = Vec::new();
    let mut check = |name, holds| checks.push(IdentityCheck { name, holds });
    let c = report.crossings as i64;
    let g = report.genus as i64;
    let pieces = if report.split { report.pieces.len() as i64 } else { 1 };

    check("euler_characteristic", 2 * pieces - 2 * g == report.faces as i64 - c);
    check("colorability_methods_agree", report.colorable == report.colorable_gf2);

    let (Some(black), Some(white), Some(colors)) = (&report.form_black, &report.form_white, &report.coloring) else {
        return checks;
    };
    let alpha = report.white_faces.unwrap_or(0) as i64;
    let beta = report.black_faces.unwrap_or(0) as i64;
    let (mu_w, mu_b) = (report.mu_white.unwrap_or(0), report.mu_black.unwrap_or(0));
    let (a, b) = (report.type_a.unwrap_or(0), report.type_b.unwrap_or(0));
    let size_w = white.gl.form.size() as i64;
    let size_b = black.gl.form.size() as i64;

    check("face_count", alpha + beta == 2 - 2 * g + c);
    check("betti_white", size_w == 2 * g + beta - 1);
    check("betti_black", size_b == 2 * g + alpha - 1);
    check("betti_sum", size_w + size_b == 2 * g + c);
    check("correction_bound", (mu_w - mu_b).abs() <= c);
    check("correction_equality", ((mu_w - mu_b).abs() == c) == (a == 0 || b == 0));
    for (name, form) in [("definite_black_nonsingular", black), ("definite_white_nonsingular", white)] {
        let r = &form.result;
        let definite = matches!(
            r.verdict,
            crate::form::Definiteness::PositiveDefinite | crate::form::Definiteness::NegativeDefinite
        );
        let n = form.gl.form.size() as i64;
        check(name, !definite || (r.is_nonsingular() && r.signature.abs() == n));
    }

    let faces = diagram.faces();
    let coloring = Coloring::new(diagram, &faces, colors.clone()).expect("report coloring is valid");
    let (e_white, e_black) = (report.euler_white.unwrap(), report.euler_black.unwrap());
    let invariant = orientations_to_try(report.components).into_iter().all(|o| {
        let mu: CorrectionTerms = correction_terms_from(&classify_crossings(diagram, &faces, &coloring, &o));
        let lambda = linking_matrix(diagram, &o).total();
        -2 * mu.white == e_white.absolute - lambda && -2 * mu.black == e_black.absolute - lambda
    });
    check("euler_orientation_invariance", invariant);

    check("alternating_iff_uniform_type", report.alternating_scan == (a == 0 || b == 0));
    let (sw, sb) = (report.signature_white.unwrap(), report.signature_black.unwrap());
    check("signature_gap_bound", (sw - sb).abs() <= 2 * g);
    let by_definiteness = report.alternating_by_definiteness.unwrap_or(false);
    check("alternating_biconditional", report.alternating_scan == by_definiteness);
    if report.alternating_scan {
        let gap = if a == 0 { sw - sb } else { sb - sw };
        check("alternating_signature_gap", gap == 2 * g);
        check("alternating_minimal_genus", report.minimal_genus_certified == Some(true));
    }
    checks
}
