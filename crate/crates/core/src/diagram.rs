//! Link diagrams on closed oriented surfaces, stored as 4-valent
//! combinatorial maps.
//!
//! Every crossing owns four ports numbered `0..4` counterclockwise as seen
//! from the positive side of the surface. Ports 1 and 3 carry the
//! over-strand, ports 0 and 2 the under-strand; a strand entering port `p`
//! leaves through port `p + 2`. A port is identified with the dart (directed
//! half-edge) that leaves the crossing through it, so dart `4 * x + p` is
//! port `p` of crossing `x`.
//!
//! The carrier surface is the one determined by the rotation system, which
//! makes every diagram cellularly embedded.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Index of a dart, `4 * crossing + slot`.
pub type Dart = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Port {
    pub crossing: usize,
    pub slot: u8,
}

impl Port {
    pub fn new(crossing: usize, slot: u8) -> Self {
        debug_assert!(slot < 4);
        Port { crossing, slot }
    }

    pub fn from_dart(dart: Dart) -> Self {
        Port { crossing: dart / 4, slot: (dart % 4) as u8 }
    }

    pub fn dart(self) -> Dart {
        4 * self.crossing + self.slot as usize
    }

    /// Ports 1 and 3 belong to the over-strand.
    pub fn is_over(self) -> bool {
        self.slot % 2 == 1
    }
}

impl fmt::Display for Port {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.crossing, self.slot)
    }
}

/// Next dart counterclockwise around the same crossing.
#[inline]
pub fn rotate(dart: Dart) -> Dart {
    (dart & !3) | ((dart + 1) & 3)
}

/// The dart on the same strand through the crossing.
#[inline]
pub fn opposite(dart: Dart) -> Dart {
    (dart & !3) | ((dart + 2) & 3)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("a diagram needs at least one crossing")]
    NoCrossings,
    #[error("port {0} refers to a crossing or slot out of range")]
    PortOutOfRange(Port),
    #[error("port {0} used twice")]
    PortUsedTwice(Port),
    #[error("port {0} is not joined to any edge")]
    DanglingPort(Port),
}

/// A link diagram on a closed oriented surface.
///
/// Immutable once built; the only state is the perfect matching on ports.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceDiagram {
    mate: Vec<Dart>,
}

impl SurfaceDiagram {
    /// Builds a diagram from `crossings` 4-valent vertices and the list of
    /// edges joining their ports. Every port must occur in exactly one edge.
    pub fn from_edges(crossings: usize, edges: &[(Port, Port)]) -> Result<Self, DiagramError> {
        if crossings == 0 {
            return Err(DiagramError::NoCrossings);
        }
        const UNSET: usize = usize::MAX;
        let mut mate = vec![UNSET; 4 * crossings];
        for &(a, b) in edges {
            for p in [a, b] {
                if p.crossing >= crossings || p.slot > 3 {
                    return Err(DiagramError::PortOutOfRange(p));
                }
            }
            if mate[a.dart()] != UNSET {
                return Err(DiagramError::PortUsedTwice(a));
            }
            if a == b || mate[b.dart()] != UNSET {
                return Err(DiagramError::PortUsedTwice(b));
            }
            mate[a.dart()] = b.dart();
            mate[b.dart()] = a.dart();
        }
        if let Some(d) = mate.iter().position(|&m| m == UNSET) {
            return Err(DiagramError::DanglingPort(Port::from_dart(d)));
        }
        Ok(SurfaceDiagram { mate })
    }

    pub fn crossing_count(&self) -> usize {
        self.mate.len() / 4
    }

    pub fn dart_count(&self) -> usize {
        self.mate.len()
    }

    pub fn edge_count(&self) -> usize {
        self.mate.len() / 2
    }

    /// The dart at the other end of the edge leaving through `dart`.
    #[inline]
    pub fn mate(&self, dart: Dart) -> Dart {
        self.mate[dart]
    }

    /// Edges in canonical order: each edge listed once, lower dart first,
    /// sorted by the lower dart.
    pub fn edges(&self) -> Vec<(Port, Port)> {
        (0..self.dart_count())
            .filter(|&d| d < self.mate[d])
            .map(|d| (Port::from_dart(d), Port::from_dart(self.mate[d])))
            .collect()
    }

    /// Traces faces: from a dart, follow its edge and turn one step
    /// counterclockwise at the far crossing.
    pub fn faces(&self) -> FaceStructure {
        let n = self.dart_count();
        let mut face_of = vec![usize::MAX; n];
        let mut faces = Vec::new();
        for start in 0..n {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut boundary = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = id;
                boundary.push(d);
                d = rotate(self.mate[d]);
                if d == start {
                    break;
                }
            }
            faces.push(boundary);
        }
        FaceStructure { faces, face_of }
    }

    /// Connected pieces of the underlying 4-valent graph, each a sorted list
    /// of crossings; pieces are ordered by their smallest crossing.
    pub fn pieces(&self) -> Vec<Vec<usize>> {
        let c = self.crossing_count();
        let mut piece_of = vec![usize::MAX; c];
        let mut pieces = Vec::new();
        for root in 0..c {
            if piece_of[root] != usize::MAX {
                continue;
            }
            let id = pieces.len();
            let mut members = vec![root];
            piece_of[root] = id;
            let mut i = 0;
            while i < members.len() {
                let x = members[i];
                i += 1;
                for slot in 0..4 {
                    let y = self.mate[4 * x + slot] / 4;
                    if piece_of[y] == usize::MAX {
                        piece_of[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            pieces.push(members);
        }
        pieces
    }

    pub fn is_split(&self) -> bool {
        self.pieces().len() > 1
    }

    /// Genus of the carrier surface. For split diagrams the carrier is a
    /// disjoint union and this is the sum of the genera of its pieces.
    pub fn genus(&self) -> usize {
        let faces = self.faces();
        let pieces = self.pieces();
        let mut piece_of = vec![0; self.crossing_count()];
        for (i, piece) in pieces.iter().enumerate() {
            for &x in piece {
                piece_of[x] = i;
            }
        }
        let mut face_counts = vec![0usize; pieces.len()];
        for face in &faces.faces {
            face_counts[piece_of[face[0] / 4]] += 1;
        }
        pieces
            .iter()
            .zip(face_counts)
            .map(|(piece, f)| {
                let twice = 2 + piece.len() - f;
                debug_assert!(twice % 2 == 0);
                twice / 2
            })
            .sum()
    }

    /// Euler characteristic `V - E + F` of the carrier surface.
    pub fn euler_characteristic(&self) -> i64 {
        self.faces().count() as i64 - self.crossing_count() as i64
    }

    /// Link components as strand orbits, ordered by their smallest dart.
    pub fn components(&self) -> Components {
        let n = self.dart_count();
        let mut comp_of = vec![usize::MAX; n];
        let mut forward = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if comp_of[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut route = Vec::new();
            let mut d = start;
            loop {
                comp_of[d] = id;
                forward[d] = true;
                comp_of[self.mate[d]] = id;
                route.push(d);
                d = opposite(self.mate[d]);
                if d == start {
                    break;
                }
            }
            comps.push(route);
        }
        Components { comps, comp_of, forward }
    }

    /// True iff along every component the crossing passages alternate
    /// between over and under.
    pub fn is_alternating(&self) -> bool {
        let comps = self.components();
        comps.comps.iter().all(|route| {
            let over: Vec<bool> = route.iter().map(|&d| Port::from_dart(d).is_over()).collect();
            (0..over.len()).all(|i| over[i] != over[(i + 1) % over.len()])
        })
    }

    /// Crossing signs for the given orientation.
    pub fn crossing_signs(&self, orientation: &LinkOrientation) -> CrossingSigns {
        let comps = self.components();
        let signs = (0..self.crossing_count())
            .map(|x| {
                let over_out = if comps.is_outgoing(4 * x + 1, orientation) { 1 } else { 3 };
                let under_out = if comps.is_outgoing(4 * x, orientation) { 0 } else { 2 };
                if under_out == (over_out + 1) % 4 {
                    1
                } else {
                    -1
                }
            })
            .collect();
        CrossingSigns { signs }
    }

    /// The diagram with over and under exchanged at crossing `x`.
    pub fn switch_crossing(&self, x: usize) -> SurfaceDiagram {
        let rotations: Vec<u8> = (0..self.crossing_count()).map(|y| u8::from(y == x)).collect();
        let identity: Vec<usize> = (0..self.crossing_count()).collect();
        self.relabel(&identity, &rotations)
    }

    /// Renames crossing `x` to `perm[x]` and shifts its port labels by
    /// `rotation[x]` steps counterclockwise. Odd shifts exchange over and
    /// under at that crossing.
    pub fn relabel(&self, perm: &[usize], rotation: &[u8]) -> SurfaceDiagram {
        let map = |d: Dart| {
            let x = d / 4;
            4 * perm[x] + (d % 4 + rotation[x] as usize) % 4
        };
        let mut mate = vec![0; self.dart_count()];
        for d in 0..self.dart_count() {
            mate[map(d)] = map(self.mate[d]);
        }
        SurfaceDiagram { mate }
    }

    /// The sub-diagram on a set of crossings closed under edges, renumbered
    /// in the given order.
    pub fn restrict(&self, crossings: &[usize]) -> SurfaceDiagram {
        let mut index = vec![usize::MAX; self.crossing_count()];
        for (i, &x) in crossings.iter().enumerate() {
            index[x] = i;
        }
        let mut mate = vec![0; 4 * crossings.len()];
        for (i, &x) in crossings.iter().enumerate() {
            for slot in 0..4 {
                let m = self.mate[4 * x + slot];
                assert!(index[m / 4] != usize::MAX, "crossing set is not closed under edges");
                mate[4 * i + slot] = 4 * index[m / 4] + m % 4;
            }
        }
        SurfaceDiagram { mate }
    }

    /// Disjoint union of two diagrams; crossings of `other` are shifted past
    /// those of `self`.
    pub fn disjoint_union(&self, other: &SurfaceDiagram) -> SurfaceDiagram {
        let shift = self.dart_count();
        let mut mate = self.mate.clone();
        mate.extend(other.mate.iter().map(|&m| m + shift));
        SurfaceDiagram { mate }
    }
}

/// Faces of a diagram, each a cyclic sequence of darts.
///
/// Dart `d` lies on the face to the right of a walker leaving its crossing
/// along `d`. Faces are numbered by their smallest dart, and each boundary
/// starts at that dart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceStructure {
    faces: Vec<Vec<Dart>>,
    face_of: Vec<usize>,
}

impl FaceStructure {
    pub fn count(&self) -> usize {
        self.faces.len()
    }

    pub fn boundary(&self, face: usize) -> &[Dart] {
        &self.faces[face]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Dart]> {
        self.faces.iter().map(Vec::as_slice)
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn face_of(&self, dart: Dart) -> usize {
        self.face_of[dart]
    }

    /// Face in quadrant `q` of crossing `x`, the corner between ports `q`
    /// and `q + 1`.
    pub fn quadrant_face(&self, x: usize, q: u8) -> usize {
        self.face_of[4 * x + (q as usize + 1) % 4]
    }
}

/// Link components with their canonical traversal direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Components {
    comps: Vec<Vec<Dart>>,
    comp_of: Vec<usize>,
    forward: Vec<bool>,
}

impl Components {
    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    /// Darts leaving each crossing passage in canonical traversal order.
    pub fn route(&self, k: usize) -> &[Dart] {
        &self.comps[k]
    }

    pub fn component_of(&self, dart: Dart) -> usize {
        self.comp_of[dart]
    }

    /// Component of the over-strand at crossing `x`.
    pub fn over(&self, x: usize) -> usize {
        self.comp_of[4 * x + 1]
    }

    /// Component of the under-strand at crossing `x`.
    pub fn under(&self, x: usize) -> usize {
        self.comp_of[4 * x]
    }

    /// Whether `dart` is traversed outward by the canonical direction.
    pub fn is_forward(&self, dart: Dart) -> bool {
        self.forward[dart]
    }

    /// Whether the link, oriented by `orientation`, leaves its crossing
    /// through `dart`.
    pub fn is_outgoing(&self, dart: Dart, orientation: &LinkOrientation) -> bool {
        self.forward[dart] != orientation.is_reversed(self.comp_of[dart])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    #[serde(rename = "+")]
    Canonical,
    #[serde(rename = "-")]
    Reversed,
}

/// One direction per link component; `Canonical` follows the traversal
/// from the component's smallest dart.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkOrientation {
    reversed: Vec<bool>,
}

impl LinkOrientation {
    pub fn canonical(components: usize) -> Self {
        LinkOrientation { reversed: vec![false; components] }
    }

    pub fn from_reversed(reversed: Vec<bool>) -> Self {
        LinkOrientation { reversed }
    }

    /// Orientation number `bits` in the enumeration of all `2^m` choices:
    /// bit `k` set reverses component `k`.
    pub fn from_bits(components: usize, bits: u64) -> Self {
        LinkOrientation { reversed: (0..components).map(|k| bits >> k & 1 == 1).collect() }
    }

    pub fn len(&self) -> usize {
        self.reversed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reversed.is_empty()
    }

    pub fn is_reversed(&self, k: usize) -> bool {
        self.reversed[k]
    }

    pub fn direction(&self, k: usize) -> Direction {
        if self.reversed[k] {
            Direction::Reversed
        } else {
            Direction::Canonical
        }
    }

    pub fn directions(&self) -> Vec<Direction> {
        (0..self.len()).map(|k| self.direction(k)).collect()
    }

    pub fn set(&mut self, k: usize, direction: Direction) {
        self.reversed[k] = direction == Direction::Reversed;
    }

    pub fn reverse(&mut self, k: usize) {
        self.reversed[k] = !self.reversed[k];
    }

    pub fn reversed_all(&self) -> Self {
        LinkOrientation { reversed: self.reversed.iter().map(|r| !r).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingSigns {
    signs: Vec<i64>,
}

impl CrossingSigns {
    pub fn sign(&self, x: usize) -> i64 {
        self.signs[x]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.signs
    }

    /// `c₊(D)`
    pub fn positive(&self) -> usize {
        self.signs.iter().filter(|&&s| s > 0).count()
    }

    /// `c₋(D)`
    pub fn negative(&self) -> usize {
        self.signs.iter().filter(|&&s| s < 0).count()
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().sum()
    }
}
