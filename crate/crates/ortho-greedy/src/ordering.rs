//! Good st-orderings of shape DAGs.
//!
//! An st-ordering v_1..v_m is *good* when every index window induces at most
//! two undirected connected components, and in the two-component case all
//! nodes of one component precede all nodes of the other. [`check_good`] is
//! the definitional oracle (exhaustive windows); [`construct_good_sp`] builds
//! a good ordering for series-parallel DAGs by recursing on the composition
//! tree, and [`recognize_series_parallel`] produces that tree by series and
//! parallel reductions on the multigraph.

use crate::shapedags::{NodeId, ShapeDag};
use serde::Serialize;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WindowViolation {
    /// Window positions (0-based, inclusive) into the ordering.
    pub start: usize,
    pub end: usize,
    pub components: Vec<Vec<NodeId>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Goodness {
    Good,
    Violation(WindowViolation),
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StOrdering {
    pub order: Vec<NodeId>,
    /// pos[node] = index in `order`.
    pub pos: Vec<usize>,
    pub goodness: Goodness,
}

impl StOrdering {
    pub fn is_good(&self) -> bool {
        matches!(self.goodness, Goodness::Good)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum OrderingError {
    #[error("sequence is not a permutation of the DAG nodes")]
    NotAPermutation,
    #[error("sequence is not a topological order: edge ({from}, {to}) goes backwards")]
    NotTopological { from: NodeId, to: NodeId },
}

/// Evaluate conditions S.1/S.2 on every window of `order`.
pub fn check_good(dag: &ShapeDag, order: &[NodeId]) -> Result<StOrdering, OrderingError> {
    let m = dag.node_count();
    if order.len() != m {
        return Err(OrderingError::NotAPermutation);
    }
    let mut pos = vec![usize::MAX; m];
    for (i, &a) in order.iter().enumerate() {
        if a >= m || pos[a] != usize::MAX {
            return Err(OrderingError::NotAPermutation);
        }
        pos[a] = i;
    }
    for e in dag.edges() {
        if pos[e.from] >= pos[e.to] {
            return Err(OrderingError::NotTopological {
                from: e.from,
                to: e.to,
            });
        }
    }

    // Undirected adjacency in window positions.
    let mut adj = vec![Vec::new(); m];
    for e in dag.edges() {
        adj[pos[e.from]].push(pos[e.to]);
        adj[pos[e.to]].push(pos[e.from]);
    }

    let goodness = 'scan: {
        // Grow the window end for each fixed start, maintaining a union-find
        // over positions; the naive definitional oracle, as intended.
        let mut parent = vec![0usize; m];
        let mut lo = vec![0usize; m];
        let mut hi = vec![0usize; m];
        for start in 0..m {
            for p in start..m {
                parent[p] = p;
                lo[p] = p;
                hi[p] = p;
            }
            let mut comps = 0usize;
            for end in start..m {
                comps += 1;
                for &q in &adj[end] {
                    if q >= start && q < end {
                        let (a, b) = (find(&mut parent, q), find(&mut parent, end));
                        if a != b {
                            parent[a] = b;
                            lo[b] = lo[b].min(lo[a]);
                            hi[b] = hi[b].max(hi[a]);
                            comps -= 1;
                        }
                    }
                }
                if end == start {
                    continue;
                }
                let bad = match comps {
                    1 => false,
                    2 => {
                        let mut roots = (start..=end).map(|p| find(&mut parent, p));
                        let r1 = roots.next().unwrap();
                        let r2 = roots.find(|&r| r != r1).unwrap();
                        // S.2: one component entirely precedes the other.
                        !(hi[r1] < lo[r2] || hi[r2] < lo[r1])
                    }
                    _ => true,
                };
                if bad {
                    break 'scan Goodness::Violation(window_witness(
                        &mut parent,
                        order,
                        start,
                        end,
                    ));
                }
            }
        }
        Goodness::Good
    };

    Ok(StOrdering {
        order: order.to_vec(),
        pos,
        goodness,
    })
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = x;
    while parent[c] != r {
        let next = parent[c];
        parent[c] = r;
        c = next;
    }
    r
}

fn window_witness(
    parent: &mut [usize],
    order: &[NodeId],
    start: usize,
    end: usize,
) -> WindowViolation {
    let mut comps: Vec<(usize, Vec<NodeId>)> = Vec::new();
    for p in start..=end {
        let r = find(parent, p);
        match comps.iter_mut().find(|(root, _)| *root == r) {
            Some((_, members)) => members.push(order[p]),
            None => comps.push((r, vec![order[p]])),
        }
    }
    WindowViolation {
        start,
        end,
        components: comps.into_iter().map(|(_, m)| m).collect(),
    }
}

/// Series-parallel composition tree. Re-expanding it reproduces the DAG's
/// node and edge multisets exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpNode {
    pub source: NodeId,
    pub sink: NodeId,
    pub kind: SpKind,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SpKind {
    /// Index into `dag.edges()`.
    Leaf(usize),
    /// Children in source-to-sink order; compositions are maximal
    /// (no Series child of a Series, no Parallel child of a Parallel).
    Series(Vec<SpNode>),
    Parallel(Vec<SpNode>),
}

impl SpNode {
    pub fn is_leaf(&self) -> bool {
        matches!(self.kind, SpKind::Leaf(_))
    }

    /// Dag edge indices of the subtree, in no particular order.
    pub fn collect_edges(&self, out: &mut Vec<usize>) {
        match &self.kind {
            SpKind::Leaf(e) => out.push(*e),
            SpKind::Series(cs) | SpKind::Parallel(cs) => {
                for c in cs {
                    c.collect_edges(out);
                }
            }
        }
    }

    /// Internal nodes of the subtree (everything except source and sink).
    pub fn collect_core_nodes(&self, out: &mut Vec<NodeId>) {
        match &self.kind {
            SpKind::Leaf(_) => {}
            SpKind::Series(cs) => {
                for pair in cs.windows(2) {
                    out.push(pair[0].sink);
                }
                for c in cs {
                    c.collect_core_nodes(out);
                }
            }
            SpKind::Parallel(cs) => {
                for c in cs {
                    c.collect_core_nodes(out);
                }
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("DAG is not series-parallel; reductions stalled with {remaining_edges} edges over nodes {stuck_nodes:?}")]
pub struct NotSp {
    pub remaining_edges: usize,
    pub stuck_nodes: Vec<NodeId>,
}

/// Recognize a series-parallel st-digraph by exhaustive reductions:
/// parallel edges between the same node pair merge, and an interior node
/// with in-degree one and out-degree one contracts in series.
pub fn recognize_series_parallel(dag: &ShapeDag) -> Result<SpNode, NotSp> {
    let (s, t) = (dag.source(), dag.sink());
    // Working multigraph: (from, to, subtree).
    let mut work: Vec<SpNode> = dag
        .edges()
        .iter()
        .enumerate()
        .map(|(i, e)| SpNode {
            source: e.from,
            sink: e.to,
            kind: SpKind::Leaf(i),
        })
        .collect();

    loop {
        let mut changed = false;

        // Parallel merges.
        let mut i = 0;
        while i < work.len() {
            let key = (work[i].source, work[i].sink);
            let mut group = vec![i];
            for j in i + 1..work.len() {
                if (work[j].source, work[j].sink) == key {
                    group.push(j);
                }
            }
            if group.len() > 1 {
                let mut children = Vec::new();
                for &j in group.iter().rev() {
                    let n = work.swap_remove(j);
                    match n.kind {
                        SpKind::Parallel(cs) => children.extend(cs),
                        _ => children.push(n),
                    }
                }
                children.reverse();
                work.push(SpNode {
                    source: key.0,
                    sink: key.1,
                    kind: SpKind::Parallel(children),
                });
                changed = true;
            } else {
                i += 1;
            }
        }

        // Series contractions of interior degree-(1,1) nodes.
        loop {
            let mut contracted = false;
            let nodes: Vec<NodeId> = work
                .iter()
                .flat_map(|e| [e.source, e.sink])
                .filter(|&v| v != s && v != t)
                .collect();
            for &w in &nodes {
                let ins: Vec<usize> = (0..work.len()).filter(|&k| work[k].sink == w).collect();
                let outs: Vec<usize> = (0..work.len()).filter(|&k| work[k].source == w).collect();
                if ins.len() == 1 && outs.len() == 1 {
                    let (ki, ko) = (ins[0], outs[0]);
                    let (a, b) = (work[ki].source, work[ko].sink);
                    let mut children = Vec::new();
                    for n in [work[ki].clone(), work[ko].clone()] {
                        match n.kind {
                            SpKind::Series(cs) => children.extend(cs),
                            _ => children.push(n),
                        }
                    }
                    let merged = SpNode {
                        source: a,
                        sink: b,
                        kind: SpKind::Series(children),
                    };
                    let (hi, lo) = (ki.max(ko), ki.min(ko));
                    work.swap_remove(hi);
                    work.swap_remove(lo);
                    work.push(merged);
                    contracted = true;
                    changed = true;
                    break;
                }
            }
            if !contracted {
                break;
            }
        }

        if work.len() == 1 && work[0].source == s && work[0].sink == t {
            return Ok(work.pop().unwrap());
        }
        if !changed {
            let mut stuck: Vec<NodeId> = work.iter().flat_map(|e| [e.source, e.sink]).collect();
            stuck.sort_unstable();
            stuck.dedup();
            return Err(NotSp {
                remaining_edges: work.len(),
                stuck_nodes: stuck,
            });
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
#[error("no good st-ordering: parallel composition between {source_node} and {sink_node} has {non_edge_children} non-edge children{detail}")]
pub struct Infeasible {
    pub source_node: NodeId,
    pub sink_node: NodeId,
    pub non_edge_children: usize,
    pub detail: String,
}

/// Construct a good st-ordering from a series-parallel decomposition, or
/// report the offending parallel composition.
///
/// Parallel compositions admit a good ordering iff at most two children are
/// not single edges; with exactly two, one core must have a single sink and
/// the other a single source, fixing which core comes first.
pub fn construct_good_sp(dag: &ShapeDag, decomp: &SpNode) -> Result<StOrdering, Infeasible> {
    let order = order_of(dag, decomp)?;
    let checked = check_good(dag, &order).expect("construction yields a topological order");
    debug_assert!(
        checked.is_good(),
        "series-parallel construction must be good: {:?}",
        checked.goodness
    );
    Ok(checked)
}

fn order_of(dag: &ShapeDag, node: &SpNode) -> Result<Vec<NodeId>, Infeasible> {
    match &node.kind {
        SpKind::Leaf(_) => Ok(vec![node.source, node.sink]),
        SpKind::Series(children) => {
            let mut order = order_of(dag, &children[0])?;
            for c in &children[1..] {
                let sub = order_of(dag, c)?;
                debug_assert_eq!(*order.last().unwrap(), sub[0]);
                order.extend_from_slice(&sub[1..]);
            }
            Ok(order)
        }
        SpKind::Parallel(children) => {
            let non_edges: Vec<&SpNode> = children.iter().filter(|c| !c.is_leaf()).collect();
            match non_edges.len() {
                0 => Ok(vec![node.source, node.sink]),
                1 => order_of(dag, non_edges[0]),
                2 => {
                    let (d1, d2) = (non_edges[0], non_edges[1]);
                    let first_then_second = core_sinks(dag, d1) == 1 && core_sources(dag, d2) == 1;
                    let second_then_first = core_sinks(dag, d2) == 1 && core_sources(dag, d1) == 1;
                    let (a, b) = if first_then_second {
                        (d1, d2)
                    } else if second_then_first {
                        (d2, d1)
                    } else {
                        return Err(Infeasible {
                            source_node: node.source,
                            sink_node: node.sink,
                            non_edge_children: 2,
                            detail: format!(
                                "; core sink counts {}/{}, core source counts {}/{}",
                                core_sinks(dag, d1),
                                core_sinks(dag, d2),
                                core_sources(dag, d1),
                                core_sources(dag, d2)
                            ),
                        });
                    };
                    let oa = order_of(dag, a)?;
                    let ob = order_of(dag, b)?;
                    let mut order = vec![node.source];
                    order.extend_from_slice(&oa[1..oa.len() - 1]);
                    order.extend_from_slice(&ob[1..ob.len() - 1]);
                    order.push(node.sink);
                    Ok(order)
                }
                k => Err(Infeasible {
                    source_node: node.source,
                    sink_node: node.sink,
                    non_edge_children: k,
                    detail: String::new(),
                }),
            }
        }
    }
}

/// Core sinks of an SP component: interior nodes whose every outgoing edge
/// (within the component) ends at the component sink.
fn core_sinks(dag: &ShapeDag, comp: &SpNode) -> usize {
    core_extremes(dag, comp, false)
}

fn core_sources(dag: &ShapeDag, comp: &SpNode) -> usize {
    core_extremes(dag, comp, true)
}

fn core_extremes(dag: &ShapeDag, comp: &SpNode, sources: bool) -> usize {
    let mut edge_ids = Vec::new();
    comp.collect_edges(&mut edge_ids);
    let mut core = Vec::new();
    comp.collect_core_nodes(&mut core);
    core.sort_unstable();
    core.dedup();
    core.iter()
        .filter(|&&w| {
            edge_ids.iter().all(|&ei| {
                let e = &dag.edges()[ei];
                if sources {
                    e.to != w || e.from == comp.source
                } else {
                    e.from != w || e.to == comp.sink
                }
            })
        })
        .count()
}

/// All topological orders of the DAG (backtracking; intended for m <= 9).
pub fn all_topological_orders(dag: &ShapeDag) -> Vec<Vec<NodeId>> {
    let m = dag.node_count();
    let mut indeg: Vec<usize> = vec![0; m];
    for e in dag.edges() {
        indeg[e.to] += 1;
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(m);
    let mut used = vec![false; m];
    fn rec(
        dag: &ShapeDag,
        indeg: &mut Vec<usize>,
        used: &mut Vec<bool>,
        prefix: &mut Vec<NodeId>,
        out: &mut Vec<Vec<NodeId>>,
    ) {
        let m = dag.node_count();
        if prefix.len() == m {
            out.push(prefix.clone());
            return;
        }
        for a in 0..m {
            if !used[a] && indeg[a] == 0 {
                used[a] = true;
                for e in dag.out_edges(a) {
                    indeg[e.to] -= 1;
                }
                prefix.push(a);
                rec(dag, indeg, used, prefix, out);
                prefix.pop();
                for e in dag.out_edges(a) {
                    indeg[e.to] += 1;
                }
                used[a] = false;
            }
        }
    }
    rec(dag, &mut indeg, &mut used, &mut prefix, &mut out);
    out
}

/// Every good st-ordering, by exhaustive enumeration.
pub fn good_orderings_exhaustive(dag: &ShapeDag) -> Vec<Vec<NodeId>> {
    all_topological_orders(dag)
        .into_iter()
        .filter(|o| check_good(dag, o).map(|s| s.is_good()).unwrap_or(false))
        .collect()
}

/// Find a good ordering: series-parallel construction when possible, falling
/// back to exhaustive search for m <= `brute_limit`. `Ok(None)` means the
/// DAG is not series-parallel and too large to decide exhaustively.
pub fn find_good_ordering(
    dag: &ShapeDag,
    brute_limit: usize,
) -> Result<Option<StOrdering>, Infeasible> {
    if dag.node_count() == 1 {
        return Ok(Some(check_good(dag, &[0]).unwrap()));
    }
    // Every window of a Hamiltonian order is a connected chain.
    if let Some(path) = dag.hamiltonian_path() {
        let s = check_good(dag, &path).unwrap();
        debug_assert!(s.is_good());
        return Ok(Some(s));
    }
    match recognize_series_parallel(dag) {
        Ok(tree) => construct_good_sp(dag, &tree).map(Some),
        Err(_) if dag.node_count() <= brute_limit => {
            match good_orderings_exhaustive(dag).into_iter().next() {
                Some(order) => Ok(Some(check_good(dag, &order).unwrap())),
                None => Err(Infeasible {
                    source_node: dag.source(),
                    sink_node: dag.sink(),
                    non_edge_children: 0,
                    detail: "; exhaustive search found no good st-ordering".into(),
                }),
            }
        }
        Err(_) => Ok(None),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::shapedags::{build_shape_dag, Axis, ShapeDag};

    fn dag_of(h: &crate::repgraph::RectRep, axis: Axis) -> ShapeDag {
        build_shape_dag(h, axis).unwrap()
    }

    #[test]
    fn rectangle_order_is_good() {
        let dx = dag_of(&fixtures::rectangle(), Axis::X);
        let s = check_good(&dx, &[dx.source(), dx.sink()]).unwrap();
        assert!(s.is_good());
    }

    #[test]
    fn non_topological_order_is_rejected() {
        let dx = dag_of(&fixtures::rectangle(), Axis::X);
        assert!(matches!(
            check_good(&dx, &[dx.sink(), dx.source()]),
            Err(OrderingError::NotTopological { .. })
        ));
        assert!(matches!(
            check_good(&dx, &[dx.source(), dx.source()]),
            Err(OrderingError::NotAPermutation)
        ));
    }

    #[test]
    fn hq_paper_ordering_is_good_and_perturbation_violates() {
        let q = 4;
        let h = fixtures::h_q(q);
        let dx = dag_of(&h, Axis::X);
        let ids = crate::coords::hq_vertex_ids(q);
        let node = |v: usize| dx.node_of(v);
        // p_1, z_1, p_2, z_2, p_3, z_3, z_4, V.
        let good = vec![
            node(ids.w[0]),
            node(ids.z[0]),
            node(ids.w[1]),
            node(ids.z[1]),
            node(ids.w[2]),
            node(ids.z[2]),
            node(ids.z[3]),
            node(ids.v[0]),
        ];
        assert!(check_good(&dx, &good).unwrap().is_good());

        // Delaying z_1 past p_2 separates it from the chain: S.2 violation.
        let bad = vec![
            node(ids.w[0]),
            node(ids.w[1]),
            node(ids.z[0]),
            node(ids.z[1]),
            node(ids.w[2]),
            node(ids.z[2]),
            node(ids.z[3]),
            node(ids.v[0]),
        ];
        let s = check_good(&dx, &bad).unwrap();
        match s.goodness {
            Goodness::Violation(w) => assert!(w.components.len() >= 2),
            Goodness::Good => panic!("perturbed ordering must violate S.1/S.2"),
        }
    }

    #[test]
    fn rectangle_dx_recognizes_as_parallel_of_two_leaves() {
        let dx = dag_of(&fixtures::rectangle(), Axis::X);
        let tree = recognize_series_parallel(&dx).unwrap();
        match &tree.kind {
            SpKind::Parallel(cs) => {
                assert_eq!(cs.len(), 2);
                assert!(cs.iter().all(|c| c.is_leaf()));
            }
            k => panic!("expected parallel composition, got {k:?}"),
        }
    }

    #[test]
    fn sp_reconstruction_reproduces_the_edge_multiset() {
        for h in [
            fixtures::rectangle(),
            fixtures::grid_2x2(),
            fixtures::fig6a().0,
            fixtures::fig5a().0,
            fixtures::three_bands(),
            fixtures::h_q(5),
        ] {
            let dx = dag_of(&h, Axis::X);
            if let Ok(tree) = recognize_series_parallel(&dx) {
                let mut edges = Vec::new();
                tree.collect_edges(&mut edges);
                edges.sort_unstable();
                let expect: Vec<usize> = (0..dx.edges().len()).collect();
                assert_eq!(edges, expect);
                let mut nodes = vec![tree.source, tree.sink];
                tree.collect_core_nodes(&mut nodes);
                nodes.sort_unstable();
                nodes.dedup();
                assert_eq!(nodes.len(), dx.node_count());
            }
        }
    }

    #[test]
    fn nonsp_fixture_stalls_reduction_but_brute_force_finds_good_ordering() {
        let h = fixtures::nonsp();
        let dx = dag_of(&h, Axis::X);
        let err = recognize_series_parallel(&dx).unwrap_err();
        assert_eq!(err.stuck_nodes.len(), 4);
        let good = good_orderings_exhaustive(&dx);
        assert!(!good.is_empty());
        assert!(matches!(find_good_ordering(&dx, 9), Ok(Some(_))));
    }

    #[test]
    fn hq_dx_is_series_parallel_with_exactly_two_good_orderings() {
        let h = fixtures::h_q(4);
        let dx = dag_of(&h, Axis::X);
        let tree = recognize_series_parallel(&dx).unwrap();
        let s = construct_good_sp(&dx, &tree).unwrap();
        assert!(s.is_good());
        assert_eq!(good_orderings_exhaustive(&dx).len(), 2);
    }

    #[test]
    fn parallel_of_three_non_edges_is_infeasible_and_brute_force_agrees() {
        // Synthetic SP DAG: three internally disjoint paths s -> a_i -> t.
        let dag = ShapeDag::from_raw(
            Axis::X,
            5,
            &[(0, 1), (1, 4), (0, 2), (2, 4), (0, 3), (3, 4)],
        );
        let tree = recognize_series_parallel(&dag).unwrap();
        let err = construct_good_sp(&dag, &tree).unwrap_err();
        assert_eq!(err.non_edge_children, 3);
        assert!(good_orderings_exhaustive(&dag).is_empty());
    }

    #[test]
    fn two_cores_with_multiple_sinks_are_infeasible() {
        // Each parallel branch forks internally: cores {1,2,3} and {4,5,6}
        // with two sinks / two sources each.
        let dag = ShapeDag::from_raw(
            Axis::X,
            8,
            &[
                (0, 1),
                (1, 2),
                (1, 3),
                (2, 7),
                (3, 7),
                (0, 4),
                (4, 5),
                (4, 6),
                (5, 7),
                (6, 7),
            ],
        );
        let tree = recognize_series_parallel(&dag).unwrap();
        let err = construct_good_sp(&dag, &tree).unwrap_err();
        assert_eq!(err.non_edge_children, 2);
        assert!(good_orderings_exhaustive(&dag).is_empty());
    }

    #[test]
    fn three_bands_representation_is_infeasible() {
        let h = fixtures::three_bands();
        let dx = dag_of(&h, Axis::X);
        let tree = recognize_series_parallel(&dx).unwrap();
        assert!(construct_good_sp(&dx, &tree).is_err());
        assert!(good_orderings_exhaustive(&dx).is_empty());
        // The y-DAG is a path and trivially fine.
        let dy = dag_of(&h, Axis::Y);
        assert!(matches!(find_good_ordering(&dy, 9), Ok(Some(s)) if s.is_good()));
    }

    #[test]
    fn constructed_orderings_pass_the_window_oracle_on_all_sp_fixtures() {
        for h in [
            fixtures::rectangle(),
            fixtures::subdivided_rectangle(),
            fixtures::grid_2x2(),
            fixtures::l_shape(),
            fixtures::pinwheel(),
            fixtures::fig6a().0,
            fixtures::fig5a().0,
            fixtures::h_q(6),
            fixtures::conflict_rectangle().0,
        ] {
            for axis in [Axis::X, Axis::Y] {
                let dag = dag_of(&h, axis);
                if let Ok(tree) = recognize_series_parallel(&dag) {
                    if let Ok(s) = construct_good_sp(&dag, &tree) {
                        assert!(s.is_good());
                    }
                }
            }
        }
    }
}
