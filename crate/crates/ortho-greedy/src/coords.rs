//! Coordinate assignment from good st-orderings.
//!
//! Along a good ordering, every minimal conflict sits between consecutive
//! nodes and contributes a *left* and a *right* inequality on the interval
//! variables x_{i,i+1}; every other interval only needs x_{i,i+1} > 0. The
//! relation graph over intervals (who appears in whose inequality) is
//! acyclic for good orderings, so the pointwise-minimum integer solution is
//! a longest-path style assignment in its topological order: 1 on intervals
//! with no constraints, max(left sum, right sum) + 1 otherwise.

use crate::ordering::StOrdering;
use crate::repgraph::{Dir4, Drawing, DrawingError, Edge, Orient, RectRep, VertexId};
use crate::shapedags::{self, Axis, NodeId, ShapeDag};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// Constraint attached to the interval between ordering positions k and k+1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Interval {
    Trivial,
    Conflict {
        /// 0-based position of the node contributing the left inequality:
        /// left sum runs over intervals [ell, k-1].
        ell: usize,
        /// 0-based position for the right inequality: intervals [k+1, r-1].
        r: usize,
        responsible: (VertexId, VertexId),
    },
}

#[derive(Clone, Debug)]
pub struct InequalitySystem {
    pub axis: Axis,
    pub order: Vec<NodeId>,
    /// One entry per interval; length m-1.
    pub intervals: Vec<Interval>,
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum BuildError {
    #[error("the supplied st-ordering is not good")]
    OrderingNotGood,
    #[error("minimal conflict between non-consecutive nodes {a} and {b}: ordering or conflict bug")]
    NonConsecutiveMinimalConflict { a: NodeId, b: NodeId },
    #[error("responsible vertex {vertex} has no {slot} edge to derive the inequality endpoint")]
    MissingFlatEdge { vertex: VertexId, slot: Dir4 },
    #[error("inequality endpoints degenerate on interval {interval}")]
    BadBounds { interval: usize },
    #[error(transparent)]
    Dag(#[from] shapedags::DagError),
}

/// Build the inequality system for one axis from a good st-ordering.
pub fn build_system(
    h: &RectRep,
    dag: &ShapeDag,
    other: &ShapeDag,
    s: &StOrdering,
) -> Result<InequalitySystem, BuildError> {
    if !s.is_good() {
        return Err(BuildError::OrderingNotGood);
    }
    let mut conflicts = shapedags::conflicts_for_axis(h, dag, other)?;
    shapedags::mark_minimal(&mut conflicts, dag.axis, &s.pos);
    for c in &conflicts {
        if c.is_minimal == Some(true) {
            let (i, j) = (s.pos[c.nodes.0], s.pos[c.nodes.1]);
            if i.max(j) - i.min(j) != 1 {
                return Err(BuildError::NonConsecutiveMinimalConflict {
                    a: c.nodes.0,
                    b: c.nodes.1,
                });
            }
        }
    }

    let m = dag.node_count();
    let (in_slot, out_slot) = match dag.axis {
        Axis::X => (Dir4::West, Dir4::East),
        Axis::Y => (Dir4::South, Dir4::North),
    };

    let mut intervals = vec![Interval::Trivial; m.saturating_sub(1)];
    for c in &conflicts {
        let (pa, pb) = (s.pos[c.nodes.0], s.pos[c.nodes.1]);
        let k = pa.min(pb);
        if pa.max(pb) != k + 1 {
            continue; // dominated conflict; satisfied via the minimal ones
        }
        // Align the responsible pair with (position k, position k+1).
        let (resp_i, resp_i1) = if pa < pb {
            (c.responsible.0, c.responsible.1)
        } else {
            (c.responsible.1, c.responsible.0)
        };
        // Left endpoint: the incoming axis edge at the responsible vertex of
        // the later node; right endpoint: the outgoing axis edge at the
        // responsible vertex of the earlier node.
        let e_in = h.slot(resp_i1, in_slot).ok_or(BuildError::MissingFlatEdge {
            vertex: resp_i1,
            slot: in_slot,
        })?;
        let e_out = h.slot(resp_i, out_slot).ok_or(BuildError::MissingFlatEdge {
            vertex: resp_i,
            slot: out_slot,
        })?;
        let ell = s.pos[dag.node_of(h.edge(e_in).other(resp_i1))];
        let r = s.pos[dag.node_of(h.edge(e_out).other(resp_i))];
        if ell + 1 > k || r < k + 2 {
            return Err(BuildError::BadBounds { interval: k });
        }
        intervals[k] = Interval::Conflict {
            ell,
            r,
            responsible: (resp_i, resp_i1),
        };
    }

    Ok(InequalitySystem {
        axis: dag.axis,
        order: s.order.clone(),
        intervals,
    })
}

impl InequalitySystem {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Synthetic system over a fake ordering 0..m-1; test use.
    pub fn synthetic(intervals: Vec<Interval>) -> InequalitySystem {
        let m = intervals.len() + 1;
        InequalitySystem {
            axis: Axis::X,
            order: (0..m).collect(),
            intervals,
        }
    }

    /// Dependencies of interval k: the intervals appearing in its left and
    /// right inequalities (the -1 columns of row k of C).
    pub fn deps(&self, k: usize) -> Vec<usize> {
        match self.intervals[k] {
            Interval::Trivial => Vec::new(),
            Interval::Conflict { ell, r, .. } => {
                (ell..k).chain(k + 1..r).collect()
            }
        }
    }

    /// Matrix A (left + trivial inequalities): rows/cols indexed by interval.
    pub fn matrix_a(&self) -> Vec<Vec<i64>> {
        self.matrix(|k, j| j < k)
    }

    /// Matrix B (right + trivial inequalities).
    pub fn matrix_b(&self) -> Vec<Vec<i64>> {
        self.matrix(|k, j| j > k)
    }

    /// C = A + B - I.
    pub fn matrix_c(&self) -> Vec<Vec<i64>> {
        self.matrix(|_, _| true)
    }

    fn matrix(&self, keep: impl Fn(usize, usize) -> bool) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut m = vec![vec![0i64; n]; n];
        for k in 0..n {
            m[k][k] = 1;
            for j in self.deps(k) {
                if keep(k, j) {
                    m[k][j] = -1;
                }
            }
        }
        m
    }

    /// Relation graph edges (k -> j when c_{k,j} = -1).
    pub fn relation_edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|k| self.deps(k).into_iter().map(move |j| (k, j)))
            .collect()
    }

    fn dependency_order(&self) -> Result<Vec<usize>, SolveError> {
        // Kahn over the relation graph, emitting dependency-free intervals
        // first.
        let n = self.len();
        let mut remaining: Vec<usize> = (0..n).map(|k| self.deps(k).len()).collect();
        let mut rdeps = vec![Vec::new(); n];
        for k in 0..n {
            for j in self.deps(k) {
                rdeps[j].push(k);
            }
        }
        let mut ready: Vec<usize> = (0..n).filter(|&k| remaining[k] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(k) = ready.pop() {
            order.push(k);
            for &d in &rdeps[k] {
                remaining[d] -= 1;
                if remaining[d] == 0 {
                    ready.push(d);
                }
            }
        }
        if order.len() != n {
            return Err(SolveError::CyclicRelationGraph);
        }
        Ok(order)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum SolveError {
    #[error("relation graph is cyclic; the st-ordering cannot have been good")]
    CyclicRelationGraph,
}

/// Pointwise-minimum positive integer solution of Ax > 0 and Bx > 0.
pub fn solve_min(sys: &InequalitySystem) -> Result<Vec<BigUint>, SolveError> {
    solve(sys, |left, right| left.max(right) + 1u32)
}

/// The paper's existence route: solve Cx = 1 by substitution in dependency
/// order. Valid but in general not minimal.
pub fn solve_cx1(sys: &InequalitySystem) -> Result<Vec<BigUint>, SolveError> {
    solve(sys, |left, right| left + right + 1u32)
}

fn solve(
    sys: &InequalitySystem,
    combine: impl Fn(BigUint, BigUint) -> BigUint,
) -> Result<Vec<BigUint>, SolveError> {
    let order = sys.dependency_order()?;
    let mut value = vec![BigUint::zero(); sys.len()];
    for k in order {
        value[k] = match sys.intervals[k] {
            Interval::Trivial => BigUint::one(),
            Interval::Conflict { ell, r, .. } => {
                let left: BigUint = (ell..k).map(|j| value[j].clone()).sum();
                let right: BigUint = (k + 1..r).map(|j| value[j].clone()).sum();
                combine(left, right)
            }
        };
    }
    Ok(value)
}

/// Check a concrete positive assignment against every inequality.
pub fn satisfies(sys: &InequalitySystem, x: &[BigUint]) -> bool {
    x.len() == sys.len()
        && (0..sys.len()).all(|k| {
            !x[k].is_zero()
                && match sys.intervals[k] {
                    Interval::Trivial => true,
                    Interval::Conflict { ell, r, .. } => {
                        let left: BigUint = (ell..k).map(|j| x[j].clone()).sum();
                        let right: BigUint = (k + 1..r).map(|j| x[j].clone()).sum();
                        x[k] > left && x[k] > right
                    }
                }
        })
}

/// Exhaustive minimum of the total width over integer vectors with entries
/// in 1..=bound; the independent oracle for `solve_min`'s minimality.
pub fn brute_force_min_total(sys: &InequalitySystem, bound: u64) -> Option<u64> {
    let n = sys.len();
    // Constraints checkable once the prefix 0..=k is assigned.
    let mut checkable = vec![Vec::new(); n];
    for k in 0..n {
        if let Interval::Conflict { r, .. } = sys.intervals[k] {
            checkable[r - 1].push(k);
        }
    }
    let mut best: Option<u64> = None;
    let mut x = vec![0u64; n];
    fn rec(
        sys: &InequalitySystem,
        checkable: &[Vec<usize>],
        bound: u64,
        x: &mut Vec<u64>,
        idx: usize,
        sum: u64,
        best: &mut Option<u64>,
    ) {
        let n = sys.len();
        if let Some(b) = *best {
            // Every remaining entry is at least 1.
            if sum + (n - idx) as u64 >= b {
                return;
            }
        }
        if idx == n {
            *best = Some(sum);
            return;
        }
        for v in 1..=bound {
            x[idx] = v;
            let ok = checkable[idx].iter().all(|&k| {
                let Interval::Conflict { ell, r, .. } = sys.intervals[k] else {
                    return true;
                };
                let left: u64 = (ell..k).map(|j| x[j]).sum();
                let right: u64 = (k + 1..r).map(|j| x[j]).sum();
                x[k] > left && x[k] > right
            });
            if ok {
                rec(sys, checkable, bound, x, idx + 1, sum + v, best);
            }
        }
        x[idx] = 0;
    }
    rec(sys, &checkable, bound, &mut x, 0, 0, &mut best);
    best
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum AssembleError {
    #[error("interval value exceeds the drawable coordinate range")]
    CoordOverflow,
    #[error("assembled drawing failed validation: {0}")]
    Drawing(#[from] DrawingError),
}

/// Node coordinates from interval values: position 0 gets 0, then prefix
/// sums along the ordering. Indexed by node id.
pub fn node_coordinates(order: &[NodeId], values: &[BigUint]) -> Result<Vec<i64>, AssembleError> {
    let mut acc = BigUint::zero();
    let mut out = vec![0i64; order.len()];
    for (p, &node) in order.iter().enumerate() {
        if p > 0 {
            acc += &values[p - 1];
        }
        out[node] = acc.to_i64().ok_or(AssembleError::CoordOverflow)?;
    }
    Ok(out)
}

/// Combine per-axis interval solutions into a drawing (the x- and y-systems
/// are independent).
pub fn assemble_drawing(
    h: &RectRep,
    dx: &ShapeDag,
    sx: &StOrdering,
    x_values: &[BigUint],
    dy: &ShapeDag,
    sy: &StOrdering,
    y_values: &[BigUint],
) -> Result<Drawing, AssembleError> {
    let nx = node_coordinates(&sx.order, x_values)?;
    let ny = node_coordinates(&sy.order, y_values)?;
    let x = (0..h.vertex_count()).map(|v| nx[dx.node_of(v)]).collect();
    let y = (0..h.vertex_count()).map(|v| ny[dy.node_of(v)]).collect();
    Ok(Drawing::new(h.clone(), x, y)?)
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum TreeError {
    #[error("input is not a tree")]
    NotATree,
    #[error("tree has {count} leaves; at most four admit a greedy rectilinear drawing")]
    TooManyLeaves { count: usize },
    #[error("no spine pairing splits the remaining leaves into hanging paths")]
    NoFeasiblePairing,
}

/// Greedy drawing of a tree with at most four leaves: a horizontal spine
/// between two leaves, remaining leaf paths hanging north and south. The
/// output drawing carries the representation derived from the construction.
pub fn draw_tree(t: &RectRep) -> Result<Drawing, TreeError> {
    if !t.is_tree() {
        return Err(TreeError::NotATree);
    }
    let n = t.vertex_count();
    if n == 1 {
        let rep = RectRep::from_edges(1, Vec::new()).expect("single vertex is valid");
        return Ok(Drawing { rep, x: vec![0], y: vec![0] });
    }
    let leaves: Vec<VertexId> = (0..n).filter(|&v| t.degree(v) == 1).collect();
    if leaves.len() > 4 {
        return Err(TreeError::TooManyLeaves { count: leaves.len() });
    }

    let adj: Vec<Vec<VertexId>> = (0..n).map(|v| t.neighbors(v).collect()).collect();
    for (ua, va) in pairs(&leaves) {
        if let Some(drawing) = try_spine(t, &adj, ua, va) {
            return Ok(drawing);
        }
    }
    Err(TreeError::NoFeasiblePairing)
}

fn pairs(xs: &[VertexId]) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            out.push((xs[i], xs[j]));
        }
    }
    out
}

fn tree_path(adj: &[Vec<VertexId>], a: VertexId, b: VertexId) -> Vec<VertexId> {
    let n = adj.len();
    let mut prev = vec![usize::MAX; n];
    let mut stack = vec![a];
    prev[a] = a;
    while let Some(v) = stack.pop() {
        if v == b {
            break;
        }
        for &w in &adj[v] {
            if prev[w] == usize::MAX {
                prev[w] = v;
                stack.push(w);
            }
        }
    }
    let mut path = vec![b];
    let mut cur = b;
    while cur != a {
        cur = prev[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

fn try_spine(
    t: &RectRep,
    adj: &[Vec<VertexId>],
    ua: VertexId,
    va: VertexId,
) -> Option<Drawing> {
    let n = t.vertex_count();
    let spine = tree_path(adj, ua, va);
    let mut on_spine = vec![false; n];
    for &v in &spine {
        on_spine[v] = true;
    }

    // Each off-spine component must be a bare path hanging from one spine
    // vertex by one end.
    let mut seen = vec![false; n];
    let mut branches: Vec<(VertexId, Vec<VertexId>)> = Vec::new();
    for start in 0..n {
        if on_spine[start] || seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut qi = 0;
        while qi < comp.len() {
            let v = comp[qi];
            qi += 1;
            for &w in &adj[v] {
                if !on_spine[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                }
            }
        }
        // Path check within the component.
        let internal_deg = |v: VertexId| adj[v].iter().filter(|&&w| !on_spine[w]).count();
        if comp.iter().any(|&v| internal_deg(v) > 2) {
            return None;
        }
        // Single attachment to the spine, at a component endpoint.
        let mut attach = Vec::new();
        for &v in &comp {
            for &w in &adj[v] {
                if on_spine[w] {
                    attach.push((w, v));
                }
            }
        }
        let [(spine_v, first)] = attach[..] else {
            return None;
        };
        if internal_deg(first) > 1 {
            return None;
        }
        // Order the component from the attachment outward.
        let mut path = vec![first];
        let mut prev = spine_v;
        let mut cur = first;
        while let Some(&next) = adj[cur].iter().find(|&&w| w != prev && !on_spine[w]) {
            prev = cur;
            cur = next;
            path.push(cur);
        }
        if path.len() != comp.len() {
            return None;
        }
        branches.push((spine_v, path));
    }
    if branches.len() > 2 {
        return None;
    }

    let mut x = vec![0i64; n];
    let mut y = vec![0i64; n];
    let mut spine_x = vec![0i64; n];
    for (i, &v) in spine.iter().enumerate() {
        x[v] = i as i64;
        y[v] = 0;
        spine_x[v] = i as i64;
    }
    for (b, (spine_v, path)) in branches.iter().enumerate() {
        let dir: i64 = if b == 0 { 1 } else { -1 };
        for (i, &v) in path.iter().enumerate() {
            x[v] = spine_x[*spine_v];
            y[v] = dir * (i as i64 + 1);
        }
    }

    // Re-derive the representation from the constructed coordinates.
    let edges = t
        .edges()
        .iter()
        .map(|e| {
            if y[e.u] == y[e.v] {
                let (u, v) = if x[e.u] < x[e.v] { (e.u, e.v) } else { (e.v, e.u) };
                Edge { u, v, orient: Orient::East }
            } else {
                let (u, v) = if y[e.u] < y[e.v] { (e.u, e.v) } else { (e.v, e.u) };
                Edge { u, v, orient: Orient::North }
            }
        })
        .collect();
    let rep = RectRep::from_edges(n, edges).ok()?;
    Drawing::new(rep, x, y).ok()
}

/// Vertex ids of the exponential-area family, 1-indexed by the construction:
/// `v[i-1]` is v_i, `w[i-1]` is w_i, `z[i-1]` is z_i, `u[i-2]` is u_i.
pub struct HqIds {
    pub v: Vec<VertexId>,
    pub w: Vec<VertexId>,
    pub z: Vec<VertexId>,
    pub u: Vec<VertexId>,
}

pub fn hq_vertex_ids(q: usize) -> HqIds {
    assert!(q >= 2);
    HqIds {
        v: (0..q).collect(),
        w: (q..2 * q - 1).collect(),
        z: (2 * q - 1..3 * q - 1).collect(),
        u: (3 * q - 1..4 * q - 2).collect(),
    }
}

/// The exponential-area family H_q: a vertical spine v_1..v_q, one
/// horizontal row per level, and unit rungs (w_i, u_{i+1}) forming a
/// staircase on the left. Convex, with series-parallel shape DAGs, yet every
/// greedy drawing needs width 2^{q-1}.
pub fn build_exponential_fixture(q: usize) -> RectRep {
    assert!(q >= 2, "H_q needs q >= 2");
    let ids = hq_vertex_ids(q);
    let (v, w, z, u) = (&ids.v, &ids.w, &ids.z, &ids.u);
    let uat = |i: usize| u[i - 2]; // u_i, 2 <= i <= q
    let mut edges = Vec::new();
    for i in 1..q {
        edges.push(Edge { u: v[i - 1], v: v[i], orient: Orient::North });
    }
    edges.push(Edge { u: w[0], v: z[0], orient: Orient::East });
    edges.push(Edge { u: z[0], v: v[0], orient: Orient::East });
    for i in 2..q {
        edges.push(Edge { u: uat(i), v: w[i - 1], orient: Orient::East });
        edges.push(Edge { u: w[i - 1], v: z[i - 1], orient: Orient::East });
        edges.push(Edge { u: z[i - 1], v: v[i - 1], orient: Orient::East });
    }
    edges.push(Edge { u: uat(q), v: z[q - 1], orient: Orient::East });
    edges.push(Edge { u: z[q - 1], v: v[q - 1], orient: Orient::East });
    for i in 1..q {
        edges.push(Edge { u: w[i - 1], v: uat(i + 1), orient: Orient::North });
    }
    RectRep::from_edges(4 * q - 2, edges).expect("H_q is a valid representation")
}
