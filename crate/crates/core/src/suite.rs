//! Seeded identity and property sweep over random diagrams.

use serde::Serialize;

use crate::certify::analyze;
use crate::coloring::{checkerboard_colorings, homology_obstruction, Coloring};
use crate::oracle::{random_diagrams, OracleError, RandomDiagramSpec};
use crate::sld::to_sld;

/// Failures kept verbatim in a suite report.
pub const MAX_RECORDED_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_crossings: usize,
    pub count: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteFailure {
    pub check: String,
    pub crossings: usize,
    pub diagram: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub max_crossings: usize,
    pub count: usize,
    pub seed: u64,
    /// Connected colorable diagrams run through the identity suite.
    pub diagrams: usize,
    pub alternating: usize,
    pub identity_checks: usize,
    pub identity_failures: usize,
    pub biconditional_discrepancies: usize,
    /// Filtered alternating connected diagrams checked for `σ_W - σ_B = 2g`.
    pub alternating_population: usize,
    pub signature_gap_failures: usize,
    /// Unfiltered diagrams checked for agreement of both colorability tests.
    pub colorability_population: usize,
    pub colorability_disagreements: usize,
    pub failures: Vec<SuiteFailure>,
    pub passed: bool,
}

/// Splits `count` as evenly as possible over crossing numbers `1..=max`.
fn per_crossing(count: usize, max: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=max).map(move |c| (c, count / max + usize::from(c - 1 < count % max)))
}

fn stream_seed(seed: u64, population: u64, crossings: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (population << 32) ^ crossings as u64
}

pub fn run_suite(config: SuiteConfig) -> Result<SuiteReport, OracleError> {
    let max = config.max_crossings.max(1);
    let mut report = SuiteReport {
        max_crossings: max,
        count: config.count,
        seed: config.seed,
        diagrams: 0,
        alternating: 0,
        identity_checks: 0,
        identity_failures: 0,
        biconditional_discrepancies: 0,
        alternating_population: 0,
        signature_gap_failures: 0,
        colorability_population: 0,
        colorability_disagreements: 0,
        failures: Vec::new(),
        passed: true,
    };
    let record = |report: &mut SuiteReport, check: &str, d: &crate::diagram::SurfaceDiagram| {
        if report.failures.len() < MAX_RECORDED_FAILURES {
            report.failures.push(SuiteFailure {
                check: check.to_string(),
                crossings: d.crossing_count(),
                diagram: to_sld(d, None),
            });
        }
    };

    for (c, n) in per_crossing(config.count, max) {
        let spec = RandomDiagramSpec::new(c, stream_seed(config.seed, 0, c), n).connected().colorable();
        for d in random_diagrams(spec) {
            let d = d?;
            let r = analyze(&d, None);
            report.diagrams += 1;
            report.alternating += usize::from(r.alternating_scan);
            report.identity_checks += r.identities.len();
            for name in r.failed_identities() {
                report.identity_failures += 1;
                record(&mut report, name, &d);
            }
            if r.alternating_by_definiteness != Some(r.alternating_scan) {
                report.biconditional_discrepancies += 1;
            }
        }
    }

    let alternating_count = (config.count / 5).max(1);
    for (c, n) in per_crossing(alternating_count, max) {
        let spec = RandomDiagramSpec::new(c, stream_seed(config.seed, 1, c), n).connected().alternating();
        for d in random_diagrams(spec) {
            let d = d?;
            let r = analyze(&d, None);
            report.alternating_population += 1;
            let gap = r.signature_white.zip(r.signature_black).map(|(w, b)| w - b);
            if r.type_a != Some(0) || gap != Some(2 * r.genus as i64) {
                report.signature_gap_failures += 1;
                record(&mut report, "alternating_signature_gap", &d);
            }
        }
    }

    for (c, n) in per_crossing(config.count, max) {
        for d in random_diagrams(RandomDiagramSpec::new(c, stream_seed(config.seed, 2, c), n)) {
            let d = d?;
            let faces = d.faces();
            report.colorability_population += 1;
            let bfs = checkerboard_colorings(&d, &faces);
            let gf2 = homology_obstruction(&d, &faces);
            let agree = match &gf2 {
                Some(black) => !bfs.is_empty() && Coloring::from_black_set(&d, &faces, black).is_some(),
                None => bfs.is_empty(),
            };
            if !agree {
                report.colorability_disagreements += 1;
                record(&mut report, "colorability_methods_agree", &d);
            }
        }
    }

    report.passed = report.identity_failures == 0
        && report.biconditional_discrepancies == 0
        && report.signature_gap_failures == 0
        && report.colorability_disagreements == 0;
    Ok(report)
}
