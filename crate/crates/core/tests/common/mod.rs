#![allow(dead_code)]

use std::path::PathBuf;

use proptest::prelude::*;
use surfalt_core::{parse_sld, random_diagrams, DiagramSource, RandomDiagramSpec, SurfaceDiagram};

pub fn data(name: &str) -> DiagramSource {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name);
    parse_sld(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

pub fn sample(spec: RandomDiagramSpec) -> Vec<SurfaceDiagram> {
    random_diagrams(spec).map(Result::unwrap).collect()
}

/// One seeded random diagram per case, unfiltered.
pub fn any_diagram(max_crossings: usize) -> impl Strategy<Value = SurfaceDiagram> {
    (1..=max_crossings, any::<u64>()).prop_map(|(c, seed)| sample(RandomDiagramSpec::new(c, seed, 1)).remove(0))
}

pub fn connected_colorable(max_crossings: usize) -> impl Strategy<Value = SurfaceDiagram> {
    (1..=max_crossings, any::<u64>())
        .prop_map(|(c, seed)| sample(RandomDiagramSpec::new(c, seed, 1).connected().colorable()).remove(0))
}

pub fn connected_alternating(max_crossings: usize) -> impl Strategy<Value = SurfaceDiagram> {
    (1..=max_crossings, any::<u64>())
        .prop_map(|(c, seed)| sample(RandomDiagramSpec::new(c, seed, 1).connected().alternating()).remove(0))
}

/// Counts cycles of a permutation given as a lookup table.
pub fn cycle_count(perm: &[usize]) -> usize {
    let mut seen = vec![false; perm.len()];
    let mut cycles = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            d = perm[d];
        }
    }
    cycles
}

/// Face count from the clockwise walk `σ⁻¹ ∘ α`, where `α` is the edge
/// involution and `σ` the counterclockwise rotation at each vertex. This
/// traces the faces of the mirror map, which has as many faces.
pub fn mirror_face_count(d: &SurfaceDiagram) -> usize {
    let n = d.dart_count();
    let alpha: Vec<usize> = (0..n).map(|h| d.mate(h)).collect();
    let sigma_inv = |h: usize| 4 * (h / 4) + (h % 4 + 3) % 4;
    let phi: Vec<usize> = (0..n).map(|h| sigma_inv(alpha[h])).collect();
    cycle_count(&phi)
}

/// Connected pieces by union-find over edges.
pub fn piece_count(d: &SurfaceDiagram) -> usize {
    let c = d.crossing_count();
    let mut parent: Vec<usize> = (0..c).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for h in 0..d.dart_count() {
        let (a, b) = (find(&mut parent, h / 4), find(&mut parent, d.mate(h) / 4));
        parent[a] = b;
    }
    (0..c).filter(|&x| find(&mut parent, x) == x).count()
}

/// Genus from Euler's formula summed over pieces, with independently
/// counted faces and pieces.
pub fn oracle_genus(d: &SurfaceDiagram) -> usize {
    let (c, f, k) = (d.crossing_count() as i64, mirror_face_count(d) as i64, piece_count(d) as i64);
    // Σ (2 - 2g_i) = c - 2c + F
    let twice = 2 * k - f + c;
    assert!(twice >= 0 && twice % 2 == 0);
    (twice / 2) as usize
}
