//! Plane graphs with prescribed rectilinear shape.
//!
//! A [`RectRep`] stores a plane graph whose every edge is labeled with a
//! compass orientation (`East` or `North`, the second endpoint lying strictly
//! right of / above the first). The rotation system, faces and vertex angles
//! are all derived from those labels: at each vertex the four compass slots
//! admit at most one edge, the clockwise slot order is N, E, S, W, and the
//! angle of a corner is the clockwise sweep between consecutive occupied
//! slots. A representation is accepted iff the derived faces form a planar
//! embedding (every internal face turns by +360 degrees, the single external
//! face by -360).

use serde::{Deserialize, Serialize};
use std::fmt;

pub type VertexId = usize;

/// Compass direction; also used as a slot index in clockwise order N, E, S, W.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dir4 {
    North = 0,
    East = 1,
    South = 2,
    West = 3,
}

impl Dir4 {
    pub const ALL: [Dir4; 4] = [Dir4::North, Dir4::East, Dir4::South, Dir4::West];

    pub fn from_index(i: usize) -> Dir4 {
        Dir4::ALL[i % 4]
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// Next direction clockwise (N -> E -> S -> W -> N).
    pub fn cw(self) -> Dir4 {
        Dir4::from_index(self.index() + 1)
    }

    pub fn opposite(self) -> Dir4 {
        Dir4::from_index(self.index() + 2)
    }

    pub fn is_horizontal(self) -> bool {
        matches!(self, Dir4::East | Dir4::West)
    }

    /// Unit step of this direction in (x, y), y growing north.
    pub fn delta(self) -> (i64, i64) {
        match self {
            Dir4::North => (0, 1),
            Dir4::East => (1, 0),
            Dir4::South => (0, -1),
            Dir4::West => (-1, 0),
        }
    }
}

impl fmt::Display for Dir4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Dir4::North => "north",
            Dir4::East => "east",
            Dir4::South => "south",
            Dir4::West => "west",
        };
        f.write_str(s)
    }
}

/// Canonical edge orientation: the second endpoint lies strictly east of /
/// north of the first in every drawing. West and south never need storing.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Orient {
    #[serde(rename = "E")]
    East,
    #[serde(rename = "N")]
    North,
}

impl Orient {
    pub fn is_horizontal(self) -> bool {
        matches!(self, Orient::East)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub orient: Orient,
}

impl Edge {
    pub fn other(&self, w: VertexId) -> VertexId {
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }

    /// Compass direction of this edge when leaving endpoint `w`.
    pub fn dir_from(&self, w: VertexId) -> Dir4 {
        match (self.orient, w == self.u) {
            (Orient::East, true) => Dir4::East,
            (Orient::East, false) => Dir4::West,
            (Orient::North, true) => Dir4::North,
            (Orient::North, false) => Dir4::South,
        }
    }
}

/// Half-edge: `edge` traversed from `from` to `to`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Dart {
    pub edge: usize,
    pub from: VertexId,
    pub to: VertexId,
}

/// Angle corner `(e1, v, e2)` with `e2` the next occupied slot clockwise
/// after `e1`; `angle` is the clockwise sweep in degrees (90, 180, 270, or
/// 360 at a degree-1 vertex).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Corner {
    pub vertex: VertexId,
    pub from_slot: Dir4,
    pub to_slot: Dir4,
    pub angle: u16,
}

impl Corner {
    /// For a 180-degree corner, the side the flat angle opens toward.
    pub fn flat_orientation(&self) -> Option<Dir4> {
        (self.angle == 180).then(|| self.from_slot.cw())
    }
}

#[derive(Clone, Debug)]
pub struct Face {
    /// Boundary walk; internal faces run counterclockwise, the external face
    /// clockwise.
    pub darts: Vec<Dart>,
    /// Corner at `darts[i].to`, between arriving dart `i` and the next one.
    pub corners: Vec<Corner>,
    pub is_external: bool,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn turn_sum(&self) -> i64 {
        self.corners.iter().map(|c| 180 - c.angle as i64).sum()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FlatAngle {
    pub vertex: VertexId,
    pub orientation: Dir4,
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum Violation {
    #[error("graph has no vertices")]
    Empty,
    #[error("edge {index} references a vertex out of range")]
    EdgeOutOfRange { index: usize },
    #[error("edge {index} is a self-loop")]
    SelfLoop { index: usize },
    #[error("edge {index} duplicates another edge on the same vertex pair")]
    DuplicateEdge { index: usize },
    #[error("vertex {vertex} has two edges in compass slot {slot}")]
    DuplicateSlot { vertex: VertexId, slot: Dir4 },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("face walk starting at vertex {start} has turn sum {turn}, expected +360 or -360")]
    BadFaceTurn { start: VertexId, turn: i64 },
    #[error("rotation system yields {count} external faces, expected exactly 1")]
    BadExternalCount { count: usize },
}

/// Parse/validation failure carrying every violated invariant.
#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub struct ValidationError {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rectilinear representation:")?;
        for v in &self.violations {
            write!(f, "\n  - {v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum RepError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error(transparent)]
    Invalid(#[from] ValidationError),
    #[error("representation is not biconnected")]
    NotBiconnected,
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    u: VertexId,
    v: VertexId,
    dir: Orient,
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    vertices: usize,
    edges: Vec<EdgeJson>,
}

/// A validated rectilinear representation. Immutable after construction.
#[derive(Clone, Debug)]
pub struct RectRep {
    n: usize,
    edges: Vec<Edge>,
    slots: Vec<[Option<usize>; 4]>,
    faces: Vec<Face>,
    external_face: usize,
}

impl RectRep {
    pub fn from_edges(n: usize, edges: Vec<Edge>) -> Result<RectRep, ValidationError> {
        let mut violations = Vec::new();
        if n == 0 {
            violations.push(Violation::Empty);
            return Err(ValidationError { violations });
        }

        let mut seen_pairs = std::collections::HashSet::new();
        for (i, e) in edges.iter().enumerate() {
            if e.u >= n || e.v >= n {
                violations.push(Violation::EdgeOutOfRange { index: i });
            } else if e.u == e.v {
                violations.push(Violation::SelfLoop { index: i });
            } else if !seen_pairs.insert((e.u.min(e.v), e.u.max(e.v))) {
                violations.push(Violation::DuplicateEdge { index: i });
            }
        }
        if !violations.is_empty() {
            return Err(ValidationError { violations });
        }

        let mut slots = vec![[None; 4]; n];
        for (i, e) in edges.iter().enumerate() {
            for w in [e.u, e.v] {
                let d = e.dir_from(w);
                if slots[w][d.index()].is_some() {
                    violations.push(Violation::DuplicateSlot { vertex: w, slot: d });
                } else {
                    slots[w][d.index()] = Some(i);
                }
            }
        }
        if !violations.is_empty() {
            return Err(ValidationError { violations });
        }

        if !connected(n, &edges) {
            violations.push(Violation::Disconnected);
            return Err(ValidationError { violations });
        }

        let faces = trace_faces(&edges, &slots);
        let mut external = Vec::new();
        for f in &faces {
            match f.turn_sum() {
                360 => {}
                -360 => external.push(()),
                turn => violations.push(Violation::BadFaceTurn {
                    start: f.darts[0].from,
                    turn,
                }),
            }
        }
        if external.len() != 1 {
            violations.push(Violation::BadExternalCount {
                count: external.len(),
            });
        }
        if !violations.is_empty() {
            return Err(ValidationError { violations });
        }

        let mut faces = faces;
        let mut external_face = 0;
        for (i, f) in faces.iter_mut().enumerate() {
            if f.turn_sum() == -360 {
                f.is_external = true;
                external_face = i;
            }
        }

        Ok(RectRep {
            n,
            edges,
            slots,
            faces,
            external_face,
        })
    }

    pub fn from_json_str(s: &str) -> Result<RectRep, RepError> {
        let doc: RepJson =
            serde_json::from_str(s).map_err(|e| RepError::Malformed(e.to_string()))?;
        let edges = doc
            .edges
            .into_iter()
            .map(|e| Edge {
                u: e.u,
                v: e.v,
                orient: e.dir,
            })
            .collect();
        Ok(RectRep::from_edges(doc.vertices, edges)?)
    }

    /// Deterministic serialization: edges sorted by (u, v, dir).
    pub fn to_json_string(&self) -> String {
        let mut edges: Vec<EdgeJson> = self
            .edges
            .iter()
            .map(|e| EdgeJson {
                u: e.u,
                v: e.v,
                dir: e.orient,
            })
            .collect();
        edges.sort_by_key(|e| (e.u, e.v, e.dir as u8));
        serde_json::to_string_pretty(&RepJson {
            vertices: self.n,
            edges,
        })
        .expect("serialization cannot fail")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &Edge {
        &self.edges[i]
    }

    pub fn slot(&self, v: VertexId, d: Dir4) -> Option<usize> {
        self.slots[v][d.index()]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.slots[v].iter().flatten().count()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.slots[v]
            .iter()
            .flatten()
            .map(move |&e| self.edges[e].other(v))
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn internal_faces(&self) -> impl Iterator<Item = (usize, &Face)> {
        self.faces.iter().enumerate().filter(|(_, f)| !f.is_external)
    }

    pub fn external_face(&self) -> &Face {
        &self.faces[self.external_face]
    }

    /// All angle corners at `v`, clockwise.
    pub fn corners_at(&self, v: VertexId) -> Vec<Corner> {
        let occupied: Vec<Dir4> = Dir4::ALL
            .into_iter()
            .filter(|d| self.slots[v][d.index()].is_some())
            .collect();
        match occupied.len() {
            0 => Vec::new(),
            1 => vec![Corner {
                vertex: v,
                from_slot: occupied[0],
                to_slot: occupied[0],
                angle: 360,
            }],
            _ => occupied
                .iter()
                .map(|&a| {
                    let mut b = a.cw();
                    let mut quarters = 1;
                    while self.slots[v][b.index()].is_none() {
                        b = b.cw();
                        quarters += 1;
                    }
                    Corner {
                        vertex: v,
                        from_slot: a,
                        to_slot: b,
                        angle: quarters * 90,
                    }
                })
                .collect(),
        }
    }

    /// Multiset of all corner angles, useful for shape-invariance checks.
    pub fn angle_multiset(&self) -> Vec<u16> {
        let mut angles: Vec<u16> = (0..self.n)
            .flat_map(|v| self.corners_at(v).into_iter().map(|c| c.angle))
            .collect();
        angles.sort_unstable();
        angles
    }

    /// Every 180-degree angle, one entry per flat angle (a degree-2 vertex
    /// with collinear edges reports both sides).
    pub fn classify_flat_vertices(&self) -> Vec<FlatAngle> {
        (0..self.n)
            .flat_map(|v| self.corners_at(v))
            .filter_map(|c| {
                c.flat_orientation().map(|orientation| FlatAngle {
                    vertex: c.vertex,
                    orientation,
                })
            })
            .collect()
    }

    pub fn has_flat_angle(&self, v: VertexId, orientation: Dir4) -> bool {
        self.corners_at(v)
            .iter()
            .any(|c| c.flat_orientation() == Some(orientation))
    }

    pub fn count_leaves(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 1).count()
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n
    }

    /// Biconnected: connected, at least 3 vertices, no cutvertex.
    pub fn is_biconnected(&self) -> bool {
        if self.n < 3 {
            return false;
        }
        // Lowpoint DFS from vertex 0; the graph is already known connected.
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut timer = 0;
        // Stack of (vertex, parent, neighbor iterator index).
        let mut stack: Vec<(VertexId, VertexId, usize)> = vec![(0, usize::MAX, 0)];
        disc[0] = 0;
        low[0] = 0;
        timer += 1;
        let mut root_children = 0;
        let adj: Vec<Vec<VertexId>> = (0..self.n).map(|v| self.neighbors(v).collect()).collect();
        while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
            if *idx < adj[v].len() {
                let w = adj[v][*idx];
                *idx += 1;
                if disc[w] == usize::MAX {
                    if v == 0 {
                        root_children += 1;
                    }
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&mut (p, _, _)) = stack.last_mut() {
                    low[p] = low[p].min(low[v]);
                    if p != 0 && low[v] >= disc[p] {
                        return false; // p is a cutvertex
                    }
                }
            }
        }
        root_children <= 1
    }

    /// Rotate the whole shape by 90 degrees counterclockwise:
    /// East labels become North, North labels become West (stored as the
    /// reversed East edge).
    pub fn rotate90(&self) -> Result<RectRep, ValidationError> {
        let edges = self
            .edges
            .iter()
            .map(|e| match e.orient {
                Orient::East => Edge {
                    u: e.u,
                    v: e.v,
                    orient: Orient::North,
                },
                Orient::North => Edge {
                    u: e.v,
                    v: e.u,
                    orient: Orient::East,
                },
            })
            .collect();
        RectRep::from_edges(self.n, edges)
    }
}

fn connected(n: usize, edges: &[Edge]) -> bool {
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        adj[e.u].push(e.v);
        adj[e.v].push(e.u);
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}

/// Trace all faces of the rotation system. The next dart after arriving at
/// `v` is the edge in the next occupied slot clockwise after the reverse
/// dart's slot; this walks internal faces counterclockwise.
fn trace_faces(edges: &[Edge], slots: &[[Option<usize>; 4]]) -> Vec<Face> {
    let dart_key = |d: &Dart| d.edge * 2 + usize::from(d.from == edges[d.edge].v);
    let mut visited = vec![false; edges.len() * 2];
    let mut faces = Vec::new();

    let next_dart = |d: &Dart| -> Dart {
        let v = d.to;
        let back = edges[d.edge].dir_from(v);
        let mut s = back.cw();
        while slots[v][s.index()].is_none() {
            s = s.cw();
        }
        let e = slots[v][s.index()].unwrap();
        Dart {
            edge: e,
            from: v,
            to: edges[e].other(v),
        }
    };

    for e in 0..edges.len() {
        for start in [
            Dart {
                edge: e,
                from: edges[e].u,
                to: edges[e].v,
            },
            Dart {
                edge: e,
                from: edges[e].v,
                to: edges[e].u,
            },
        ] {
            if visited[dart_key(&start)] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                visited[dart_key(&d)] = true;
                walk.push(d);
                d = next_dart(&d);
                if d == start {
                    break;
                }
            }
            let corners = walk
                .iter()
                .enumerate()
                .map(|(i, din)| {
                    let dout = &walk[(i + 1) % walk.len()];
                    let v = din.to;
                    let from_slot = edges[din.edge].dir_from(v);
                    let to_slot = edges[dout.edge].dir_from(v);
                    let quarters = if from_slot == to_slot {
                        4
                    } else {
                        ((to_slot.index() + 4 - from_slot.index()) % 4) as u16
                    };
                    Corner {
                        vertex: v,
                        from_slot,
                        to_slot,
                        angle: quarters * 90,
                    }
                })
                .collect();
            faces.push(Face {
                darts: walk,
                corners,
                is_external: false,
            });
        }
    }
    faces
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum DrawingError {
    #[error("coordinate list length does not match vertex count")]
    WrongLength,
    #[error("edge {edge} is drawn against its stored orientation")]
    WrongDirection { edge: usize },
    #[error("vertices {u} and {v} coincide")]
    CoincidentVertices { u: VertexId, v: VertexId },
    #[error("vertex {vertex} lies in the interior of edge {edge}")]
    VertexOnEdge { vertex: VertexId, edge: usize },
    #[error("edges {e1} and {e2} intersect")]
    CrossingEdges { e1: usize, e2: usize },
    #[error("coordinate out of the supported range")]
    CoordOverflow,
}

/// Serialization format for a drawing: the representation plus coordinates.
#[derive(Serialize, Deserialize)]
struct DrawingJson {
    vertices: usize,
    edges: Vec<EdgeJson>,
    coords: Vec<(i64, i64)>,
}

/// Integer-grid drawing of a representation.
#[derive(Clone, Debug)]
pub struct Drawing {
    pub rep: RectRep,
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

const COORD_LIMIT: i64 = 1 << 40;

impl Drawing {
    /// Validates shape consistency and planarity.
    pub fn new(rep: RectRep, x: Vec<i64>, y: Vec<i64>) -> Result<Drawing, DrawingError> {
        let d = Drawing { rep, x, y };
        d.validate()?;
        Ok(d)
    }

    pub fn point(&self, v: VertexId) -> (i64, i64) {
        (self.x[v], self.y[v])
    }

    pub fn validate(&self) -> Result<(), DrawingError> {
        let n = self.rep.vertex_count();
        if self.x.len() != n || self.y.len() != n {
            return Err(DrawingError::WrongLength);
        }
        if self
            .x
            .iter()
            .chain(self.y.iter())
            .any(|&c| c.abs() > COORD_LIMIT)
        {
            return Err(DrawingError::CoordOverflow);
        }
        for (i, e) in self.rep.edges().iter().enumerate() {
            let ok = match e.orient {
                Orient::East => self.y[e.u] == self.y[e.v] && self.x[e.u] < self.x[e.v],
                Orient::North => self.x[e.u] == self.x[e.v] && self.y[e.u] < self.y[e.v],
            };
            if !ok {
                return Err(DrawingError::WrongDirection { edge: i });
            }
        }
        for u in 0..n {
            for v in u + 1..n {
                if self.point(u) == self.point(v) {
                    return Err(DrawingError::CoincidentVertices { u, v });
                }
            }
        }
        for (i, e) in self.rep.edges().iter().enumerate() {
            for v in 0..n {
                if v != e.u && v != e.v && self.on_segment(v, e) {
                    return Err(DrawingError::VertexOnEdge { vertex: v, edge: i });
                }
            }
        }
        for i in 0..self.rep.edges().len() {
            for j in i + 1..self.rep.edges().len() {
                if self.segments_conflict(i, j) {
                    return Err(DrawingError::CrossingEdges { e1: i, e2: j });
                }
            }
        }
        Ok(())
    }

    fn on_segment(&self, v: VertexId, e: &Edge) -> bool {
        let (px, py) = self.point(v);
        let (x1, y1) = self.point(e.u);
        let (x2, y2) = self.point(e.v);
        match e.orient {
            Orient::East => py == y1 && x1 < px && px < x2,
            Orient::North => px == x1 && y1 < py && py < y2,
        }
    }

    /// True if drawn segments i and j intersect anywhere except a shared
    /// graph endpoint of adjacent edges.
    fn segments_conflict(&self, i: usize, j: usize) -> bool {
        let a = self.rep.edge(i);
        let b = self.rep.edge(j);
        let shared = (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) as usize;

        let (ax1, ay1) = self.point(a.u);
        let (ax2, ay2) = self.point(a.v);
        let (bx1, by1) = self.point(b.u);
        let (bx2, by2) = self.point(b.v);

        match (a.orient, b.orient) {
            (Orient::East, Orient::East) => {
                if ay1 != by1 {
                    return false;
                }
                let overlap = ax1.max(bx1) <= ax2.min(bx2);
                if !overlap {
                    return false;
                }
                // Touching at exactly one shared endpoint is fine.
                !(shared == 1 && ax1.max(bx1) == ax2.min(bx2))
            }
            (Orient::North, Orient::North) => {
                if ax1 != bx1 {
                    return false;
                }
                let overlap = ay1.max(by1) <= ay2.min(by2);
                if !overlap {
                    return false;
                }
                !(shared == 1 && ay1.max(by1) == ay2.min(by2))
            }
            (Orient::East, Orient::North) => {
                let crosses = bx1 >= ax1 && bx1 <= ax2 && ay1 >= by1 && ay1 <= by2;
                if !crosses {
                    return false;
                }
                // A proper crossing or a T-touch is a conflict; meeting at a
                // shared endpoint is not.
                let meet = (bx1, ay1);
                let at_a_end = meet == (ax1, ay1) || meet == (ax2, ay2);
                let at_b_end = meet == (bx1, by1) || meet == (bx2, by2);
                !(shared >= 1 && at_a_end && at_b_end)
            }
            (Orient::North, Orient::East) => self.segments_conflict(j, i),
        }
    }

    /// Checks that re-deriving edge directions from the coordinates
    /// reproduces the representation exactly (drawing invariant).
    pub fn shape_matches(&self) -> bool {
        self.rep.edges().iter().all(|e| match e.orient {
            Orient::East => self.y[e.u] == self.y[e.v] && self.x[e.u] < self.x[e.v],
            Orient::North => self.x[e.u] == self.x[e.v] && self.y[e.u] < self.y[e.v],
        })
    }

    pub fn width(&self) -> i64 {
        self.x.iter().max().unwrap() - self.x.iter().min().unwrap()
    }

    pub fn height(&self) -> i64 {
        self.y.iter().max().unwrap() - self.y.iter().min().unwrap()
    }

    pub fn from_json_str(s: &str) -> Result<Drawing, RepError> {
        let doc: DrawingJson =
            serde_json::from_str(s).map_err(|e| RepError::Malformed(e.to_string()))?;
        let edges = doc
            .edges
            .into_iter()
            .map(|e| Edge {
                u: e.u,
                v: e.v,
                orient: e.dir,
            })
            .collect();
        let rep = RectRep::from_edges(doc.vertices, edges)?;
        let (x, y) = doc.coords.into_iter().unzip();
        Drawing::new(rep, x, y).map_err(|e| RepError::Malformed(e.to_string()))
    }

    pub fn to_json_string(&self) -> String {
        let mut edges: Vec<EdgeJson> = self
            .rep
            .edges()
            .iter()
            .map(|e| EdgeJson {
                u: e.u,
                v: e.v,
                dir: e.orient,
            })
            .collect();
        edges.sort_by_key(|e| (e.u, e.v, e.dir as u8));
        serde_json::to_string_pretty(&DrawingJson {
            vertices: self.rep.vertex_count(),
            edges,
            coords: self.x.iter().copied().zip(self.y.iter().copied()).collect(),
        })
        .expect("serialization cannot fail")
    }
}
