//! Random diagrams and independent recomputation paths for property suites.

use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coloring::homology_obstruction;
use crate::diagram::{Port, SurfaceDiagram};
use crate::form::{SignatureResult, SymmetricForm};

/// Attempts allowed per accepted diagram before giving up.
pub const ATTEMPT_BUDGET: usize = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RandomDiagramSpec {
    pub crossings: usize,
    pub seed: u64,
    pub count: usize,
    pub connected: bool,
    pub colorable: bool,
    pub alternating: bool,
}

impl RandomDiagramSpec {
    pub fn new(crossings: usize, seed: u64, count: usize) -> Self {
        RandomDiagramSpec { crossings, seed, count, connected: false, colorable: false, alternating: false }
    }

    pub fn connected(mut self) -> Self {
        self.connected = true;
        self
    }

    pub fn colorable(mut self) -> Self {
        self.colorable = true;
        self
    }

    pub fn alternating(mut self) -> Self {
        self.alternating = true;
        self
    }

    pub fn accepts(&self, d: &SurfaceDiagram) -> bool {
        (!self.connected || !d.is_split())
            && (!self.colorable || homology_obstruction(d, &d.faces()).is_some())
            && (!self.alternating || d.is_alternating())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("a diagram needs at least one crossing")]
    NoCrossings,
    #[error("no diagram passed the filters in {attempts} attempts")]
    Exhausted { attempts: usize },
}

/// Seeded stream of random diagrams.
///
/// Each candidate is a uniform random perfect matching on the `4c` ports,
/// kept only if it passes the filters. With the alternating filter the
/// matching is drawn between over-ports and under-ports only: a diagram is
/// alternating exactly when every edge joins an over-port to an under-port,
/// so this is the same conditional distribution without the rejections.
pub struct RandomDiagrams {
    spec: RandomDiagramSpec,
    rng: ChaCha8Rng,
    emitted: usize,
    failed: bool,
}

pub fn random_diagrams(spec: RandomDiagramSpec) -> RandomDiagrams {
    RandomDiagrams { spec, rng: ChaCha8Rng::seed_from_u64(spec.seed), emitted: 0, failed: false }
}

impl RandomDiagrams {
    fn candidate(&mut self) -> SurfaceDiagram {
        let c = self.spec.crossings;
        let edges: Vec<(Port, Port)> = if self.spec.alternating {
            let over: Vec<usize> = (0..4 * c).filter(|d| d % 2 == 1).collect();
            let mut under: Vec<usize> = (0..4 * c).filter(|d| d % 2 == 0).collect();
            under.shuffle(&mut self.rng);
            over.into_iter().zip(under).map(|(a, b)| (Port::from_dart(a), Port::from_dart(b))).collect()
        } else {
            let mut ports: Vec<usize> = (0..4 * c).collect();
            ports.shuffle(&mut self.rng);
            ports.chunks(2).map(|p| (Port::from_dart(p[0]), Port::from_dart(p[1]))).collect()
        };
        SurfaceDiagram::from_edges(c, &edges).expect("a perfect matching is a valid diagram")
    }
}

impl Iterator for RandomDiagrams {
    type Item = Result<SurfaceDiagram, OracleError>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed || self.emitted >= self.spec.count {
            return None;
        }
        if self.spec.crossings == 0 {
            self.failed = true;
            return Some(Err(OracleError::NoCrossings));
        }
        for _ in 0..ATTEMPT_BUDGET {
            let d = self.candidate();
            if self.spec.accepts(&d) {
                self.emitted += 1;
                return Some(Ok(d));
            }
        }
        self.failed = true;
        Some(Err(OracleError::Exhausted { attempts: ATTEMPT_BUDGET }))
    }
}

/// Values of `xᵀMx` found over all nonzero integer vectors with entries in
/// `[-bound, bound]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteForceScan {
    pub positive: Option<Vec<i64>>,
    pub negative: Option<Vec<i64>>,
    pub zero: Option<Vec<i64>>,
}

impl BruteForceScan {
    pub fn is_indefinite(&self) -> bool {
        self.positive.is_some() && self.negative.is_some()
    }

    /// Whether the scan found a vector the exact verdict rules out. A scan
    /// that finds nothing contradictory is inconclusive, not a proof.
    pub fn contradicts(&self, exact: &SignatureResult, size: usize) -> bool {
        (self.positive.is_some() && exact.positive == 0)
            || (self.negative.is_some() && exact.negative == 0)
            || (self.zero.is_some() && (exact.positive == size || exact.negative == size))
    }
}

/// Exhaustive scan of the form on a box of integer vectors. Intended for
/// `n ≤ 6` and `bound ≤ 4`.
pub fn brute_force_definiteness(form: &SymmetricForm, bound: i64) -> BruteForceScan {
    let n = form.size();
    let mut scan = BruteForceScan { positive: None, negative: None, zero: None };
    if n == 0 {
        return scan;
    }
    let mut x = vec![-bound; n];
    loop {
        if x.iter().any(|&v| v != 0) {
            let value = form.evaluate(&x);
            let slot = match value.signum() {
                1 => &mut scan.positive,
                -1 => &mut scan.negative,
                _ => &mut scan.zero,
            };
            if slot.is_none() {
                *slot = Some(x.clone());
            }
        }
        let mut i = 0;
        while i < n && x[i] == bound {
            x[i] = -bound;
            i += 1;
        }
        if i == n {
            break;
        }
        x[i] += 1;
    }
    scan
}

/// Relative tolerance below which an eigenvalue counts as zero.
pub const EIGENVALUE_TOLERANCE: f64 = 1e-9;

/// Signature from floating-point eigenvalues; eigenvalues within
/// `EIGENVALUE_TOLERANCE` of zero (relative to the largest magnitude) are
/// not counted.
pub fn float_signature(form: &SymmetricForm) -> i64 {
    let n = form.size();
    if n == 0 {
        return 0;
    }
    let m = DMatrix::from_fn(n, n, |i, j| form.get(i, j) as f64);
    let eigen = m.symmetric_eigen().eigenvalues;
    let scale = eigen.iter().fold(1.0f64, |acc, v| acc.max(v.abs()));
    eigen.iter().map(|&v| if v.abs() <= EIGENVALUE_TOLERANCE * scale { 0 } else { v.signum() as i64 }).sum()
}
