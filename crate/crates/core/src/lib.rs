//! Gordon-Litherland pairings of checkerboard surfaces for link diagrams on
//! closed oriented surfaces.
//!
//! A diagram is a 4-valent combinatorial map ([`SurfaceDiagram`]). From it
//! this crate derives faces, genus and link components, decides checkerboard
//! colorability, builds the Tait graphs of both checkerboard surfaces, and
//! computes their Gordon-Litherland forms exactly. [`analyze`] assembles all
//! of it into an [`AnalysisReport`] with two theorem-level verdicts:
//!
//! * a connected colorable diagram is alternating iff its black and white
//!   forms are definite of opposite sign;
//! * if both forms are non-singular, the link has minimal genus.
//!
//! ```
//! use surfalt_core::{analyze, from_virtual_gauss_code};
//!
//! let trefoil = from_virtual_gauss_code("O1+U2+O3+U1+O2+U3+").unwrap();
//! let report = analyze(&trefoil.diagram, Some(&trefoil.orientation));
//! assert_eq!(report.genus, 0);
//! assert_eq!(report.signature_black, Some(-2));
//! assert_eq!(report.alternating_by_definiteness, Some(true));
//! ```

pub mod certify;
pub mod coloring;
pub mod diagram;
pub mod form;
pub mod gauss;
pub mod oracle;
pub mod pairing;
pub mod sld;
pub mod suite;
pub mod tait;

pub use certify::{
    analyze, check_identity_suite, verdict_alternating_by_definiteness, verdict_minimal_genus, AnalysisReport,
    FormReport, IdentityCheck,
};
pub use coloring::{
    checkerboard_colorings, classify_crossings, homology_obstruction, Color, ColorType, Coloring, CrossingClass,
    OrientationType,
};
pub use diagram::{
    Components, CrossingSigns, Dart, DiagramError, Direction, FaceStructure, LinkOrientation, Port, SurfaceDiagram,
};
pub use form::{signature_and_definiteness, Definiteness, FormError, SignatureResult, SymmetricForm};
pub use gauss::{from_virtual_gauss_code, GaussDiagram, GaussError};
pub use oracle::{brute_force_definiteness, float_signature, random_diagrams, OracleError, RandomDiagramSpec};
pub use pairing::{
    correction_terms, euler_numbers, linking_matrix, sigma, CorrectionTerms, EulerNumbers, LinkingMatrix,
};
pub use sld::{parse_sld, to_sld, DiagramSource, SldError};
pub use suite::{run_suite, SuiteConfig, SuiteReport};
pub use tait::{gl_matrix, gl_matrix_with_forest, tait_graph, GlForm, TaitGraph};
