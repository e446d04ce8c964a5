//! Shape DAGs: contract every maximal vertical path of a representation into
//! a node and orient the horizontal edges left-to-right (axis X), and
//! symmetrically for axis Y. Reachability in these st-digraphs captures the
//! relative positions forced by the shape; incomparable node pairs are
//! conflicts, whose extreme flat vertices are responsible for them.

use crate::repgraph::{Dir4, Orient, RectRep, VertexId};
use serde::Serialize;
use std::fmt::Write as _;

pub type NodeId = usize;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Axis {
    X,
    Y,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::X,
        }
    }
}

#[derive(Clone, Debug)]
pub struct DagNode {
    /// Vertices of the contracted path, bottom-to-top (axis X) or
    /// left-to-right (axis Y).
    pub vertices: Vec<VertexId>,
}

impl DagNode {
    pub fn low(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn high(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DagEdge {
    pub from: NodeId,
    pub to: NodeId,
    /// The edge of H this multi-edge came from.
    pub rep_edge: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum DagError {
    #[error("{axis:?}-DAG has {count} sources; the representation cannot be convex")]
    MultipleSources { axis: Axis, count: usize },
    #[error("{axis:?}-DAG has {count} sinks; the representation cannot be convex")]
    MultipleSinks { axis: Axis, count: usize },
    #[error("conflict pair is comparable in neither DAG; input violates convexity")]
    NeitherAxisComparable { a: NodeId, b: NodeId },
    #[error("responsible vertex {vertex} lacks the required {orientation} flat angle")]
    ResponsibleNotFlat { vertex: VertexId, orientation: Dir4 },
}

#[derive(Clone, Debug)]
pub struct ShapeDag {
    pub axis: Axis,
    nodes: Vec<DagNode>,
    node_of: Vec<NodeId>,
    edges: Vec<DagEdge>,
    out_edges: Vec<Vec<usize>>,
    in_edges: Vec<Vec<usize>>,
    source: NodeId,
    sink: NodeId,
    /// reach[a][b]: directed path from a to b (a != b) exists.
    reach: Vec<Vec<bool>>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Comparability {
    /// a precedes b.
    Before,
    /// b precedes a.
    After,
    Incomparable,
}

/// Build the shape DAG of `h` for `axis`. The caller is responsible for the
/// convexity and biconnectivity preconditions; a multi-source or multi-sink
/// result reports the slipped-through non-convexity.
pub fn build_shape_dag(h: &RectRep, axis: Axis) -> Result<ShapeDag, DagError> {
    let contract_orient = match axis {
        Axis::X => Orient::North, // contract maximal vertical paths
        Axis::Y => Orient::East,
    };

    let n = h.vertex_count();
    let mut node_of = vec![usize::MAX; n];
    let mut nodes = Vec::new();
    for v in 0..n {
        if node_of[v] != usize::MAX {
            continue;
        }
        // Walk to the low end of the contracted path, then collect upward.
        let (back, fwd) = match contract_orient {
            Orient::North => (Dir4::South, Dir4::North),
            Orient::East => (Dir4::West, Dir4::East),
        };
        let mut low = v;
        while let Some(e) = h.slot(low, back) {
            low = h.edge(e).other(low);
        }
        let mut path = vec![low];
        let mut cur = low;
        while let Some(e) = h.slot(cur, fwd) {
            cur = h.edge(e).other(cur);
            path.push(cur);
        }
        let id = nodes.len();
        for &w in &path {
            node_of[w] = id;
        }
        nodes.push(DagNode { vertices: path });
    }

    let mut edges = Vec::new();
    for (i, e) in h.edges().iter().enumerate() {
        if e.orient != contract_orient {
            edges.push(DagEdge {
                from: node_of[e.u],
                to: node_of[e.v],
                rep_edge: i,
            });
        }
    }

    let m = nodes.len();
    let mut out_edges = vec![Vec::new(); m];
    let mut in_edges = vec![Vec::new(); m];
    for (i, e) in edges.iter().enumerate() {
        out_edges[e.from].push(i);
        in_edges[e.to].push(i);
    }

    let sources: Vec<NodeId> = (0..m).filter(|&a| in_edges[a].is_empty()).collect();
    let sinks: Vec<NodeId> = (0..m).filter(|&a| out_edges[a].is_empty()).collect();
    if sources.len() != 1 {
        return Err(DagError::MultipleSources {
            axis,
            count: sources.len(),
        });
    }
    if sinks.len() != 1 {
        return Err(DagError::MultipleSinks {
            axis,
            count: sinks.len(),
        });
    }

    // Transitive closure by per-node sweep; desk scale makes this cheap and
    // leaves no room for incremental-reachability bugs.
    let mut reach = vec![vec![false; m]; m];
    for a in 0..m {
        let mut stack = vec![a];
        while let Some(x) = stack.pop() {
            for &ei in &out_edges[x] {
                let t = edges[ei].to;
                if !reach[a][t] {
                    reach[a][t] = true;
                    stack.push(t);
                }
            }
        }
    }

    Ok(ShapeDag {
        axis,
        nodes,
        node_of,
        edges,
        out_edges,
        in_edges,
        source: sources[0],
        sink: sinks[0],
        reach,
    })
}

impl ShapeDag {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[DagNode] {
        &self.nodes
    }

    pub fn node(&self, a: NodeId) -> &DagNode {
        &self.nodes[a]
    }

    /// The contraction map c: vertex of H -> node.
    pub fn node_of(&self, v: VertexId) -> NodeId {
        self.node_of[v]
    }

    pub fn edges(&self) -> &[DagEdge] {
        &self.edges
    }

    pub fn out_edges(&self, a: NodeId) -> impl Iterator<Item = &DagEdge> {
        self.out_edges[a].iter().map(|&i| &self.edges[i])
    }

    pub fn in_edges(&self, a: NodeId) -> impl Iterator<Item = &DagEdge> {
        self.in_edges[a].iter().map(|&i| &self.edges[i])
    }

    pub fn source(&self) -> NodeId {
        self.source
    }

    pub fn sink(&self) -> NodeId {
        self.sink
    }

    pub fn reaches(&self, a: NodeId, b: NodeId) -> bool {
        self.reach[a][b]
    }

    /// Comparability of two distinct nodes under the reachability order.
    ///
    /// # Panics
    /// If `a == b`; comparability of a node with itself is a precondition
    /// violation.
    pub fn comparable(&self, a: NodeId, b: NodeId) -> Comparability {
        assert_ne!(a, b, "comparability requires two distinct nodes");
        if self.reach[a][b] {
            Comparability::Before
        } else if self.reach[b][a] {
            Comparability::After
        } else {
            Comparability::Incomparable
        }
    }

    /// Has a directed Hamiltonian path iff its topological order is unique;
    /// returns that node sequence when it exists.
    pub fn hamiltonian_path(&self) -> Option<Vec<NodeId>> {
        let order = self.topological_order();
        for w in order.windows(2) {
            if !self.out_edges(w[0]).any(|e| e.to == w[1]) {
                return None;
            }
        }
        Some(order)
    }

    pub fn topological_order(&self) -> Vec<NodeId> {
        let m = self.nodes.len();
        let mut indeg: Vec<usize> = (0..m).map(|a| self.in_edges[a].len()).collect();
        let mut ready: Vec<NodeId> = (0..m).filter(|&a| indeg[a] == 0).collect();
        ready.sort_unstable();
        let mut order = Vec::with_capacity(m);
        while let Some(a) = ready.pop() {
            order.push(a);
            for &ei in &self.out_edges[a] {
                let t = self.edges[ei].to;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    ready.push(t);
                }
            }
        }
        debug_assert_eq!(order.len(), m, "shape DAGs are acyclic by construction");
        order
    }

    /// Synthetic DAG over single-vertex nodes; test and ordering-module use.
    pub fn from_raw(axis: Axis, m: usize, raw_edges: &[(NodeId, NodeId)]) -> ShapeDag {
        let nodes: Vec<DagNode> = (0..m).map(|v| DagNode { vertices: vec![v] }).collect();
        let node_of = (0..m).collect();
        let edges: Vec<DagEdge> = raw_edges
            .iter()
            .enumerate()
            .map(|(i, &(from, to))| DagEdge {
                from,
                to,
                rep_edge: i,
            })
            .collect();
        let mut out_edges = vec![Vec::new(); m];
        let mut in_edges = vec![Vec::new(); m];
        for (i, e) in edges.iter().enumerate() {
            out_edges[e.from].push(i);
            in_edges[e.to].push(i);
        }
        let mut reach = vec![vec![false; m]; m];
        for a in 0..m {
            let mut stack = vec![a];
            while let Some(x) = stack.pop() {
                for &ei in &out_edges[x] {
                    let t = edges[ei].to;
                    if !reach[a][t] {
                        reach[a][t] = true;
                        stack.push(t);
                    }
                }
            }
        }
        let source = (0..m).find(|&a| in_edges[a].is_empty()).unwrap_or(0);
        let sink = (0..m).find(|&a| out_edges[a].is_empty()).unwrap_or(0);
        ShapeDag {
            axis,
            nodes,
            node_of,
            edges,
            out_edges,
            in_edges,
            source,
            sink,
            reach,
        }
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph shape {\n");
        for (i, node) in self.nodes.iter().enumerate() {
            let label = node
                .vertices
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let _ = writeln!(s, "  n{i} [label=\"{{{label}}}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(s, "  n{} -> n{};", e.from, e.to);
        }
        s.push_str("}\n");
        s
    }
}

/// A conflict: an unordered node pair incomparable in its axis DAG. The
/// responsible vertices are the facing extreme flat vertices of the two
/// contracted paths; `responsible.0` belongs to `nodes.0`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Conflict {
    pub axis: Axis,
    pub nodes: (NodeId, NodeId),
    pub responsible: (VertexId, VertexId),
    pub orientations: (Dir4, Dir4),
    /// Which of `nodes` precedes the other in the *other* axis DAG:
    /// true when `nodes.0` does.
    pub first_is_lower: bool,
    /// Defined only relative to an st-ordering; see `mark_minimal`.
    pub is_minimal: Option<bool>,
}

/// Enumerate every conflict of one axis. `dag` is the axis DAG, `other` the
/// opposite one (used to orient responsible pairs).
pub fn conflicts_for_axis(
    h: &RectRep,
    dag: &ShapeDag,
    other: &ShapeDag,
) -> Result<Vec<Conflict>, DagError> {
    let m = dag.node_count();
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            if dag.reaches(a, b) || dag.reaches(b, a) {
                continue;
            }
            out.push(make_conflict(h, dag, other, a, b)?);
        }
    }
    Ok(out)
}

/// Build the conflict record for a known-incomparable node pair.
pub fn conflict_between(
    h: &RectRep,
    dag: &ShapeDag,
    other: &ShapeDag,
    a: NodeId,
    b: NodeId,
) -> Result<Conflict, DagError> {
    debug_assert!(!dag.reaches(a, b) && !dag.reaches(b, a));
    make_conflict(h, dag, other, a.min(b), a.max(b))
}

fn make_conflict(
    h: &RectRep,
    dag: &ShapeDag,
    other: &ShapeDag,
    a: NodeId,
    b: NodeId,
) -> Result<Conflict, DagError> {
    let (na, nb) = (dag.node(a), dag.node(b));
    let (low_or, high_or) = match dag.axis {
        Axis::X => (Dir4::North, Dir4::South), // lower wall opens north
        Axis::Y => (Dir4::East, Dir4::West),   // left row opens east
    };
    let c = |v: VertexId| other.node_of(v);
    let a_before_b = c(na.high()) != c(nb.low()) && other.reaches(c(na.high()), c(nb.low()));
    let b_before_a = c(nb.high()) != c(na.low()) && other.reaches(c(nb.high()), c(na.low()));
    let (responsible, orientations, first_is_lower) = if a_before_b {
        ((na.high(), nb.low()), (low_or, high_or), true)
    } else if b_before_a {
        ((na.low(), nb.high()), (high_or, low_or), false)
    } else {
        return Err(DagError::NeitherAxisComparable { a, b });
    };
    for (v, o) in [
        (responsible.0, orientations.0),
        (responsible.1, orientations.1),
    ] {
        if !h.has_flat_angle(v, o) {
            return Err(DagError::ResponsibleNotFlat {
                vertex: v,
                orientation: o,
            });
        }
    }
    Ok(Conflict {
        axis: dag.axis,
        nodes: (a, b),
        responsible,
        orientations,
        first_is_lower,
        is_minimal: None,
    })
}

/// Conflicts of both axes.
pub fn enumerate_conflicts(
    h: &RectRep,
    dx: &ShapeDag,
    dy: &ShapeDag,
) -> Result<Vec<Conflict>, DagError> {
    let mut out = conflicts_for_axis(h, dx, dy)?;
    out.extend(conflicts_for_axis(h, dy, dx)?);
    Ok(out)
}

/// Span of a conflict under the given node positions.
fn span(c: &Conflict, pos: &[usize]) -> (usize, usize) {
    let (i, j) = (pos[c.nodes.0], pos[c.nodes.1]);
    (i.min(j), i.max(j))
}

/// `c1` dominates `c2` when `c1`'s span is nested inside `c2`'s:
/// k <= i < j <= l for spans (i, j) of `c1` and (k, l) of `c2`.
pub fn dominates(c1: &Conflict, c2: &Conflict, pos: &[usize]) -> bool {
    let (i, j) = span(c1, pos);
    let (k, l) = span(c2, pos);
    k <= i && j <= l
}

/// Set `is_minimal` on every conflict of `axis` with respect to node
/// positions `pos` (position of node `a` in an st-ordering). A conflict is
/// minimal when no other conflict of the same axis dominates it.
pub fn mark_minimal(conflicts: &mut [Conflict], axis: Axis, pos: &[usize]) {
    let spans: Vec<Option<(usize, usize)>> = conflicts
        .iter()
        .map(|c| (c.axis == axis).then(|| span(c, pos)))
        .collect();
    for i in 0..conflicts.len() {
        let Some((si, sj)) = spans[i] else { continue };
        let dominated = spans
            .iter()
            .enumerate()
            .any(|(k, s)| k != i && matches!(s, Some((a, b)) if si <= *a && *b <= sj));
        conflicts[i].is_minimal = Some(!dominated);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rectangle_dx_has_two_nodes_and_two_parallel_edges() {
        let h = fixtures::rectangle();
        let dx = build_shape_dag(&h, Axis::X).unwrap();
        assert_eq!(dx.node_count(), 2);
        assert_eq!(dx.edges().len(), 2);
        let e = dx.edges();
        assert_eq!((e[0].from, e[0].to), (e[1].from, e[1].to));
        assert_eq!(
            dx.comparable(dx.source(), dx.sink()),
            Comparability::Before
        );
    }

    #[test]
    #[should_panic(expected = "distinct")]
    fn comparability_with_itself_is_a_precondition_violation() {
        let h = fixtures::rectangle();
        let dx = build_shape_dag(&h, Axis::X).unwrap();
        let _ = dx.comparable(0, 0);
    }

    #[test]
    fn grid_2x2_dx_is_a_path_of_parallel_edges() {
        // Hand contraction of the 9-vertex grid: three column walls, each
        // consecutive pair joined once per horizontal level.
        let h = fixtures::grid_2x2();
        let dx = build_shape_dag(&h, Axis::X).unwrap();
        assert_eq!(dx.node_count(), 3);
        assert_eq!(dx.edges().len(), 6);
        let mid = (0..3)
            .find(|&a| a != dx.source() && a != dx.sink())
            .unwrap();
        assert_eq!(
            dx.out_edges(dx.source()).filter(|e| e.to == mid).count(),
            3
        );
        assert_eq!(dx.out_edges(mid).filter(|e| e.to == dx.sink()).count(), 3);
        assert!(!dx.reaches(dx.sink(), dx.source()));
    }

    #[test]
    fn rectangle_has_no_conflicts() {
        let h = fixtures::rectangle();
        let dx = build_shape_dag(&h, Axis::X).unwrap();
        let dy = build_shape_dag(&h, Axis::Y).unwrap();
        assert!(enumerate_conflicts(&h, &dx, &dy).unwrap().is_empty());
    }

    #[test]
    fn fig6a_conflict_pair_is_incomparable_with_the_figure_responsibles() {
        let (h, points) = fixtures::fig6a();
        let (u, v) = fixtures::fig6a_conflict(&points);
        let dx = build_shape_dag(&h, Axis::X).unwrap();
        let dy = build_shape_dag(&h, Axis::Y).unwrap();
        assert_eq!(
            dx.comparable(dx.node_of(u), dx.node_of(v)),
            Comparability::Incomparable
        );
        let conflicts = enumerate_conflicts(&h, &dx, &dy).unwrap();
        assert!(conflicts.iter().all(|c| c.axis == Axis::X));
        assert_eq!(conflicts.len(), 6);
        let uv = conflicts
            .iter()
            .find(|c| {
                let r = c.responsible;
                r == (u, v) || r == (v, u)
            })
            .expect("the drawn conflict {u,v} must be reported");
        // v is the lower responsible vertex (north-oriented), u the upper.
        let (lo, hi) = if uv.first_is_lower {
            (uv.responsible.0, uv.responsible.1)
        } else {
            (uv.responsible.1, uv.responsible.0)
        };
        assert_eq!((lo, hi), (v, u));
    }

    #[test]
    fn fig6a_dy_is_hamiltonian() {
        let (h, _) = fixtures::fig6a();
        let dy = build_shape_dag(&h, Axis::Y).unwrap();
        assert_eq!(dy.node_count(), 6);
        assert!(dy.hamiltonian_path().is_some());
    }

    #[test]
    fn responsible_vertices_are_flat_everywhere() {
        for h in [
            fixtures::fig6a().0,
            fixtures::fig5a().0,
            fixtures::three_bands(),
            fixtures::h_q(4),
            fixtures::conflict_rectangle().0,
        ] {
            let dx = build_shape_dag(&h, Axis::X).unwrap();
            let dy = build_shape_dag(&h, Axis::Y).unwrap();
            let flats = h.classify_flat_vertices();
            for c in enumerate_conflicts(&h, &dx, &dy).unwrap() {
                for (v, o) in [
                    (c.responsible.0, c.orientations.0),
                    (c.responsible.1, c.orientations.1),
                ] {
                    assert!(flats
                        .iter()
                        .any(|f| f.vertex == v && f.orientation == o));
                }
            }
        }
    }

    #[test]
    fn comparability_lemma_holds_exhaustively_on_fixtures() {
        // For every vertex pair of a convex biconnected representation:
        // same wall, same row, or comparable in at least one DAG.
        for h in [
            fixtures::rectangle(),
            fixtures::pinwheel(),
            fixtures::l_shape(),
            fixtures::fig6a().0,
            fixtures::fig5a().0,
            fixtures::three_bands(),
            fixtures::nonsp(),
            fixtures::h_q(5),
        ] {
            let dx = build_shape_dag(&h, Axis::X).unwrap();
            let dy = build_shape_dag(&h, Axis::Y).unwrap();
            for u in 0..h.vertex_count() {
                for v in u + 1..h.vertex_count() {
                    let same_wall = dx.node_of(u) == dx.node_of(v);
                    let same_row = dy.node_of(u) == dy.node_of(v);
                    let cmp_x = !same_wall
                        && dx.comparable(dx.node_of(u), dx.node_of(v))
                            != Comparability::Incomparable;
                    let cmp_y = !same_row
                        && dy.comparable(dy.node_of(u), dy.node_of(v))
                            != Comparability::Incomparable;
                    assert!(
                        same_wall || same_row || cmp_x || cmp_y,
                        "pair ({u}, {v}) unrelated everywhere"
                    );
                }
            }
        }
    }

    #[test]
    fn h_q_has_the_expected_minimal_conflicts() {
        // Brute-force incomparability: q-1 conflicts between c_x(z_i) and
        // c_x(w_{i+1}); everything else in D_x is comparable... except that
        // distinct z nodes are pairwise incomparable too. The claimed pairs
        // must each be present.
        for q in 2..=6 {
            let h = fixtures::h_q(q);
            let dx = build_shape_dag(&h, Axis::X).unwrap();
            let dy = build_shape_dag(&h, Axis::Y).unwrap();
            let conflicts = conflicts_for_axis(&h, &dx, &dy).unwrap();
            let z = |i: usize| crate::coords::hq_vertex_ids(q).z[i - 1];
            let w = |i: usize| crate::coords::hq_vertex_ids(q).w[i - 1];
            for i in 1..q {
                let zi = dx.node_of(z(i));
                let wi1 = if i + 1 == q {
                    dx.node_of(z(q))
                } else {
                    dx.node_of(w(i + 1))
                };
                assert!(
                    conflicts
                        .iter()
                        .any(|c| c.nodes == (zi.min(wi1), zi.max(wi1))),
                    "missing conflict (z_{i}, w_{})",
                    i + 1
                );
            }
            assert!(conflicts_for_axis(&h, &dy, &dx).unwrap().is_empty());
        }
    }

    #[test]
    fn domination_matches_brute_force_and_marks_minimal_elements() {
        let (h, _) = fixtures::fig6a();
        let dx = build_shape_dag(&h, Axis::X).unwrap();
        let dy = build_shape_dag(&h, Axis::Y).unwrap();
        let mut conflicts = enumerate_conflicts(&h, &dx, &dy).unwrap();
        // Canonical ordering: walls left-to-right in the drawn layout.
        let order = dx.topological_order();
        let mut pos = vec![0; dx.node_count()];
        for (i, &a) in order.iter().enumerate() {
            pos[a] = i;
        }
        mark_minimal(&mut conflicts, Axis::X, &pos);
        for c in &conflicts {
            let brute = !conflicts
                .iter()
                .any(|d| d != c && dominates(d, c, &pos));
            assert_eq!(c.is_minimal, Some(brute));
        }
        assert_eq!(
            conflicts.iter().filter(|c| c.is_minimal == Some(true)).count(),
            1
        );
    }

    #[test]
    fn multiple_sources_signal_nonconvex_input() {
        // fig2e is not orthoconvex; its x-DAG has two sinks.
        let h = fixtures::fig2e();
        let r = build_shape_dag(&h, Axis::Y);
        assert!(matches!(
            r,
            Err(DagError::MultipleSources { .. }) | Err(DagError::MultipleSinks { .. })
        ));
    }
}
