//! Tait graphs and the Gordon-Litherland form of a checkerboard surface.
//!
//! The checkerboard surface of one color retracts onto its Tait graph: one
//! vertex per disk of that color, one half-twisted band (edge) per
//! crossing. Two cycles on the surface meet only in disks, where they
//! contribute nothing to the pairing, or run through a common band, where
//! they pick up the band's incidence number. So on the cycle space the form
//! is `Aᵀ diag(η) A`, with `A` the edge-coefficient matrix of a cycle basis.

use serde::Serialize;

use crate::coloring::{color_types, Color, ColorType, Coloring};
use crate::diagram::{FaceStructure, SurfaceDiagram};
use crate::form::SymmetricForm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TaitEdge {
    pub crossing: usize,
    pub tail: usize,
    pub head: usize,
    pub label: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TaitGraph {
    pub color: Color,
    /// Face id of each vertex, in canonical face order.
    pub vertices: Vec<usize>,
    /// One edge per crossing, in crossing order.
    pub edges: Vec<TaitEdge>,
}

/// The Tait graph on the faces of `color`.
///
/// At a crossing the two quadrants of `color` are `{0, 2}` or `{1, 3}`; the
/// edge runs from the lower quadrant's face to the higher one's. Labels are
/// incidence numbers read with `color` playing the role of black, so the
/// white graph carries the negated labels.
pub fn tait_graph(diagram: &SurfaceDiagram, faces: &FaceStructure, coloring: &Coloring, color: Color) -> TaitGraph {
    let mut vertex_of = vec![usize::MAX; faces.count()];
    let mut vertices = Vec::new();
    for (f, slot) in vertex_of.iter_mut().enumerate() {
        if coloring.color(f) == color {
            *slot = vertices.len();
            vertices.push(f);
        }
    }
    let edges = color_types(faces, coloring, diagram.crossing_count())
        .into_iter()
        .enumerate()
        .map(|(x, ty)| {
            let black_label = match ty {
                ColorType::A => 1,
                ColorType::B => -1,
            };
            let low = if coloring.color(faces.quadrant_face(x, 0)) == color { 0 } else { 1 };
            TaitEdge {
                crossing: x,
                tail: vertex_of[faces.quadrant_face(x, low)],
                head: vertex_of[faces.quadrant_face(x, low + 2)],
                label: if color == Color::Black { black_label } else { -black_label },
            }
        })
        .collect();
    TaitGraph { color, vertices, edges }
}

impl TaitGraph {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count());
        let mut count = self.vertex_count();
        for e in &self.edges {
            if uf.union(e.tail, e.head) {
                count -= 1;
            }
        }
        count
    }

    /// `E - V + components`
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }

    /// `Σ_e η_e a_e b_e` for edge-coefficient vectors `a`, `b`.
    pub fn pair_cycles(&self, a: &[i64], b: &[i64]) -> i64 {
        self.edges.iter().enumerate().map(|(i, e)| e.label * a[i] * b[i]).sum()
    }

    /// Net flow of an edge-coefficient vector at each vertex; a cycle has
    /// zero boundary.
    pub fn boundary(&self, coeffs: &[i64]) -> Vec<i64> {
        let mut b = vec![0; self.vertex_count()];
        for (e, &c) in self.edges.iter().zip(coeffs) {
            b[e.head] += c;
            b[e.tail] -= c;
        }
        b
    }
}

/// Cycle basis of a Tait graph and the Gram matrix on it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlForm {
    #[serde(flatten)]
    pub form: SymmetricForm,
    /// Crossings whose edges form the spanning forest.
    pub tree_edges: Vec<usize>,
    /// For each basis cycle, the crossing of the non-tree edge closing it.
    pub cycle_edges: Vec<usize>,
    /// Edge coefficients (indexed by crossing) of each basis cycle.
    #[serde(skip)]
    pub cycles: Vec<Vec<i64>>,
}

pub fn gl_matrix(graph: &TaitGraph) -> GlForm {
    let order: Vec<usize> = (0..graph.edge_count()).collect();
    gl_matrix_with_forest(graph, &order)
}

/// Builds the spanning forest greedily, offering edges in `order`. Any
/// order gives a congruent form.
pub fn gl_matrix_with_forest(graph: &TaitGraph, order: &[usize]) -> GlForm {
    let v = graph.vertex_count();
    let e = graph.edge_count();
    let mut uf = UnionFind::new(v);
    let mut in_tree = vec![false; e];
    for &i in order {
        let edge = &graph.edges[i];
        if uf.union(edge.tail, edge.head) {
            in_tree[i] = true;
        }
    }

    // potential[x]: signed edge path from x up to the root of its tree
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); v];
    for (i, edge) in graph.edges.iter().enumerate() {
        if in_tree[i] {
            adjacency[edge.tail].push(i);
            adjacency[edge.head].push(i);
        }
    }
    let mut potential: Vec<Option<Vec<i64>>> = vec![None; v];
    for root in 0..v {
        if potential[root].is_some() {
            continue;
        }
        potential[root] = Some(vec![0; e]);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &i in &adjacency[x] {
                let edge = &graph.edges[i];
                let (child, up) = if edge.tail == x { (edge.head, -1) } else { (edge.tail, 1) };
                if potential[child].is_some() {
                    continue;
                }
                let mut p = potential[x].clone().unwrap();
                p[i] += up;
                potential[child] = Some(p);
                queue.push_back(child);
            }
        }
    }
    let potential: Vec<Vec<i64>> = potential.into_iter().map(Option::unwrap).collect();

    let mut cycles = Vec::new();
    let mut cycle_edges = Vec::new();
    for (i, edge) in graph.edges.iter().enumerate() {
        if in_tree[i] {
            continue;
        }
        // edge tail -> head, then head back up and down to tail
        let mut c: Vec<i64> = (0..e).map(|j| potential[edge.head][j] - potential[edge.tail][j]).collect();
        c[i] += 1;
        cycles.push(c);
        cycle_edges.push(edge.crossing);
    }

    let n = cycles.len();
    let mut entries = vec![0; n * n];
    for a in 0..n {
        for b in a..n {
            let value = graph.pair_cycles(&cycles[a], &cycles[b]);
            entries[a * n + b] = value;
            entries[b * n + a] = value;
        }
    }
    let tree_edges = (0..e).filter(|&i| in_tree[i]).map(|i| graph.edges[i].crossing).collect();
    GlForm { form: SymmetricForm::new(n, entries).expect("Gram matrix is symmetric"), tree_edges, cycle_edges, cycles }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}
