//! Independent geometric oracles over drawings. Everything here works from
//! coordinates alone, in exact squared-integer arithmetic: no epsilon, no
//! floating point in any verdict. Ties never count as progress — a move must
//! strictly decrease the distance to the target.

use crate::repgraph::{Drawing, VertexId};
use crate::shapedags::{Axis, Conflict};
use serde::Serialize;

fn d2(d: &Drawing, a: VertexId, b: VertexId) -> i128 {
    let dx = (d.x[a] - d.x[b]) as i128;
    let dy = (d.y[a] - d.y[b]) as i128;
    dx * dx + dy * dy
}

#[cfg(test)]
fn point_d2(p: (i64, i64), q: (i64, i64)) -> i128 {
    let dx = (p.0 - q.0) as i128;
    let dy = (p.1 - q.1) as i128;
    dx * dx + dy * dy
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GreedyReport {
    pub is_greedy: bool,
    /// Pairs (v, z) where no neighbor of v is strictly closer to z: the
    /// definitional witnesses (Method A).
    pub stuck_pairs: Vec<(VertexId, VertexId)>,
    /// Pairs (v, intruder) with the intruder inside v's cell (Method B).
    pub cell_violations: Vec<(VertexId, VertexId)>,
}

/// Greediness by two independent methods.
///
/// Method A runs, for each ordered pair, a search restricted to moves that
/// strictly decrease the Euclidean distance to the target; Method B flags
/// every vertex lying strictly inside another vertex's cell. The verdicts
/// coincide (the cell characterization), which the test suites assert.
pub fn is_greedy(d: &Drawing) -> GreedyReport {
    let n = d.rep.vertex_count();
    let adj: Vec<Vec<VertexId>> = (0..n).map(|v| d.rep.neighbors(v).collect()).collect();

    // Method A: per target, the set of vertices that reach it by strictly
    // decreasing moves, found backwards from the target.
    let mut stuck_pairs = Vec::new();
    let mut method_a_ok = true;
    for t in 0..n {
        let mut reaches = vec![false; n];
        reaches[t] = true;
        let mut stack = vec![t];
        while let Some(r) = stack.pop() {
            for &v in &adj[r] {
                if !reaches[v] && d2(d, r, t) < d2(d, v, t) {
                    reaches[v] = true;
                    stack.push(v);
                }
            }
        }
        for v in 0..n {
            if v != t && !reaches[v] {
                method_a_ok = false;
                if adj[v].iter().all(|&u| d2(d, u, t) >= d2(d, v, t)) {
                    stuck_pairs.push((v, t));
                }
            }
        }
    }
    debug_assert_eq!(method_a_ok, stuck_pairs.is_empty());

    // Method B: strict cell membership by pairwise distances.
    let mut cell_violations = Vec::new();
    for v in 0..n {
        for z in 0..n {
            if z != v && adj[v].iter().all(|&u| d2(d, z, v) < d2(d, z, u)) {
                cell_violations.push((v, z));
            }
        }
    }

    GreedyReport {
        is_greedy: method_a_ok && cell_violations.is_empty(),
        stuck_pairs,
        cell_violations,
    }
}

/// Strict cell membership: z lies closer to v than to every neighbor of v.
pub fn in_cell(d: &Drawing, v: VertexId, z: VertexId) -> bool {
    d.rep.neighbors(v).all(|u| d2(d, z, v) < d2(d, z, u))
}

/// A conflict is satisfied when neither responsible vertex lies in the
/// other's cell.
pub fn conflicts_satisfied(d: &Drawing, conflicts: &[Conflict]) -> Vec<bool> {
    conflicts
        .iter()
        .map(|c| {
            let (p, q) = c.responsible;
            !in_cell(d, p, q) && !in_cell(d, q, p)
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("dilation is only defined for greedy drawings")]
    NotGreedy,
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct DilationReport {
    /// Squared length of the longest-ratio shortest distance-decreasing path.
    pub max_path_sq: i128,
    /// Squared Euclidean distance of that pair.
    pub max_dist_sq: i128,
    pub argmax: (VertexId, VertexId),
    /// max path / d as a float, for reporting only.
    pub ratio: f64,
    /// Exact check path^2 <= 18 d^2, i.e. ratio <= 3 sqrt(2).
    pub within_bound: bool,
}

/// Maximum over ordered pairs of (shortest distance-decreasing path length)
/// divided by Euclidean distance. The comparison between pairs and the
/// 3*sqrt(2) bound are exact (cross-multiplied squares).
pub fn dilation(d: &Drawing) -> Result<DilationReport, VerifyError> {
    if !is_greedy(d).is_greedy {
        return Err(VerifyError::NotGreedy);
    }
    let n = d.rep.vertex_count();
    let adj: Vec<Vec<VertexId>> = (0..n).map(|v| d.rep.neighbors(v).collect()).collect();
    let mut best: Option<(i128, i128, (VertexId, VertexId))> = None;

    for t in 0..n {
        // The decreasing-move graph towards t is a DAG; process vertices by
        // increasing distance to t.
        let mut order: Vec<VertexId> = (0..n).collect();
        order.sort_by_key(|&v| d2(d, v, t));
        let mut dist = vec![i64::MAX; n];
        dist[t] = 0;
        for &v in &order {
            if v == t {
                continue;
            }
            for &u in &adj[v] {
                if d2(d, u, t) < d2(d, v, t) && dist[u] != i64::MAX {
                    let step = (d.x[v] - d.x[u]).abs() + (d.y[v] - d.y[u]).abs();
                    dist[v] = dist[v].min(dist[u] + step);
                }
            }
            debug_assert_ne!(dist[v], i64::MAX, "greedy drawings reach every target");
            let path_sq = (dist[v] as i128) * (dist[v] as i128);
            let dd = d2(d, v, t);
            let better = match best {
                None => true,
                Some((bp, bd, _)) => path_sq * bd > bp * dd,
            };
            if better {
                best = Some((path_sq, dd, (v, t)));
            }
        }
    }

    let (max_path_sq, max_dist_sq, argmax) = best.ok_or(VerifyError::NotGreedy)?;
    Ok(DilationReport {
        max_path_sq,
        max_dist_sq,
        argmax,
        ratio: (max_path_sq as f64 / max_dist_sq as f64).sqrt(),
        within_bound: max_path_sq <= 18 * max_dist_sq,
    })
}

/// Open half-plane with an axis-parallel boundary, stored in doubled
/// coordinates so bisector positions stay integral.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct HalfPlane {
    pub axis: Axis,
    /// Doubled boundary coordinate (x_v + x_u or y_v + y_u).
    pub bound2: i64,
    /// Membership keeps the side with smaller coordinate.
    pub keep_less: bool,
}

impl HalfPlane {
    pub fn contains(&self, p: (i64, i64)) -> bool {
        let c2 = 2 * match self.axis {
            Axis::X => p.0,
            Axis::Y => p.1,
        };
        if self.keep_less {
            c2 < self.bound2
        } else {
            c2 > self.bound2
        }
    }
}

/// Cell of a vertex as an intersection of at most four half-planes
/// (perpendicular bisectors towards each neighbor).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Cell {
    pub vertex: VertexId,
    pub halfplanes: Vec<HalfPlane>,
}

impl Cell {
    pub fn contains(&self, p: (i64, i64)) -> bool {
        self.halfplanes.iter().all(|h| h.contains(p))
    }

    pub fn is_bounded(&self) -> bool {
        for axis in [Axis::X, Axis::Y] {
            for less in [true, false] {
                if !self
                    .halfplanes
                    .iter()
                    .any(|h| h.axis == axis && h.keep_less == less)
                {
                    return false;
                }
            }
        }
        true
    }
}

pub fn cell_geometry(d: &Drawing, v: VertexId) -> Cell {
    let halfplanes = d
        .rep
        .neighbors(v)
        .map(|u| {
            if d.y[u] == d.y[v] {
                HalfPlane {
                    axis: Axis::X,
                    bound2: d.x[v] + d.x[u],
                    keep_less: d.x[v] < d.x[u],
                }
            } else {
                HalfPlane {
                    axis: Axis::Y,
                    bound2: d.y[v] + d.y[u],
                    keep_less: d.y[v] < d.y[u],
                }
            }
        })
        .collect();
    Cell { vertex: v, halfplanes }
}

/// Responsible pair of a conflict clears both cells; geometric form used by
/// coordinate-assignment tests.
pub fn responsible_pair_clear(d: &Drawing, c: &Conflict) -> bool {
    let (p, q) = c.responsible;
    !cell_geometry(d, p).contains(d.point(q)) && !cell_geometry(d, q).contains(d.point(p))
}

/// The right-angle property of convex shapes: for every 90-degree face
/// corner (u, w, v), no vertex lies strictly inside the bounding box of u
/// and v. Returns violating (corner vertex, intruder) pairs.
pub fn right_angle_violations(d: &Drawing) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for f in d.rep.faces() {
        for (i, c) in f.corners.iter().enumerate() {
            if c.angle != 90 {
                continue;
            }
            let w = c.vertex;
            let u = f.darts[i].from;
            let v = f.darts[(i + 1) % f.darts.len()].to;
            let (x1, x2) = (d.x[u].min(d.x[v]), d.x[u].max(d.x[v]));
            let (y1, y2) = (d.y[u].min(d.y[v]), d.y[u].max(d.y[v]));
            for z in 0..d.rep.vertex_count() {
                if z != u && z != v && z != w {
                    let (zx, zy) = d.point(z);
                    if x1 < zx && zx < x2 && y1 < zy && zy < y2 {
                        out.push((w, z));
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::repgraph::{Edge, Orient, RectRep};

    fn unit_square() -> Drawing {
        let h = fixtures::rectangle();
        Drawing::new(h, vec![0, 1, 0, 1], vec![0, 0, 1, 1]).unwrap()
    }

    #[test]
    fn unit_square_is_greedy_by_both_methods() {
        let r = is_greedy(&unit_square());
        assert!(r.is_greedy);
        assert!(r.stuck_pairs.is_empty());
        assert!(r.cell_violations.is_empty());
    }

    #[test]
    fn unit_square_dilation_is_sqrt_two_on_the_diagonal() {
        let rep = dilation(&unit_square()).unwrap();
        // Diagonal pairs: path 2, squared distance 2 -> ratio sqrt(2).
        assert_eq!(rep.max_path_sq, 4);
        assert_eq!(rep.max_dist_sq, 2);
        assert!(rep.within_bound);
        assert!((rep.ratio - std::f64::consts::SQRT_2).abs() < 1e-12);
    }

    #[test]
    fn fig1a_layout_is_not_greedy_and_methods_agree() {
        let d = fixtures::fig1a();
        let r = is_greedy(&d);
        assert!(!r.is_greedy);
        assert!(!r.stuck_pairs.is_empty());
        assert!(!r.cell_violations.is_empty());
    }

    #[test]
    fn aligned_conflicting_walls_put_each_flat_in_the_others_cell() {
        let (h, points) = fixtures::conflict_rectangle();
        let mut d = fixtures::layout_drawing(&h, &points);
        let z_bot = points.iter().position(|&p| p == (1, 0)).unwrap();
        let z_top = points.iter().position(|&p| p == (2, 1)).unwrap();
        // Align the two flat vertices vertically: both methods must flag.
        d.x[z_top] = 1;
        d.validate().unwrap();
        let r = is_greedy(&d);
        assert!(!r.is_greedy);
        assert!(r.cell_violations.contains(&(z_bot, z_top)));
        assert!(r.cell_violations.contains(&(z_top, z_bot)));
        assert!(!r.stuck_pairs.is_empty());
        // Spread apart, the drawing is greedy.
        let spread =
            Drawing::new(d.rep.clone(), vec![0, 1, 4, 0, 3, 4], vec![0, 0, 0, 1, 1, 1]).unwrap();
        assert!(is_greedy(&spread).is_greedy);
    }

    #[test]
    fn degree_one_cell_is_a_half_plane() {
        let t = RectRep::from_edges(
            2,
            vec![Edge { u: 0, v: 1, orient: Orient::East }],
        )
        .unwrap();
        let d = Drawing::new(t, vec![0, 3], vec![0, 0]).unwrap();
        let cell = cell_geometry(&d, 1);
        assert_eq!(cell.halfplanes.len(), 1);
        assert!(!cell.is_bounded());
        assert!(cell.contains((4, 100)));
        assert!(!cell.contains((1, 0)));
    }

    #[test]
    fn degree_four_cell_is_a_bounded_box() {
        // Unit cross around vertex 0.
        let h = RectRep::from_edges(
            5,
            vec![
                Edge { u: 1, v: 0, orient: Orient::East },
                Edge { u: 0, v: 2, orient: Orient::East },
                Edge { u: 0, v: 3, orient: Orient::North },
                Edge { u: 4, v: 0, orient: Orient::North },
            ],
        )
        .unwrap();
        let d = Drawing::new(h, vec![0, -1, 1, 0, 0], vec![0, 0, 0, 1, -1]).unwrap();
        let cell = cell_geometry(&d, 0);
        assert_eq!(cell.halfplanes.len(), 4);
        assert!(cell.is_bounded());
        assert!(cell.contains((0, 0)));
        assert!(!cell.contains((1, 0)));
    }

    #[test]
    fn cell_membership_agrees_with_the_pairwise_definition() {
        use rand::{Rng, SeedableRng};
        let (h, points) = fixtures::fig6a();
        let d = fixtures::layout_drawing(&h, &points);
        let n = h.vertex_count();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10_000 {
            let v = rng.gen_range(0..n);
            let z = rng.gen_range(0..n);
            if v == z {
                continue;
            }
            let by_cell = cell_geometry(&d, v).contains(d.point(z));
            let by_dist = in_cell(&d, v, z);
            assert_eq!(by_cell, by_dist, "v={v} z={z}");
        }
        // Cell geometry also decides arbitrary probe points.
        for _ in 0..10_000 {
            let v = rng.gen_range(0..n);
            let p = (rng.gen_range(-3..10), rng.gen_range(-3..10));
            let by_cell = cell_geometry(&d, v).contains(p);
            let by_dist = d
                .rep
                .neighbors(v)
                .all(|u| point_d2(p, d.point(v)) < point_d2(p, d.point(u)));
            assert_eq!(by_cell, by_dist);
        }
    }

    #[test]
    fn five_equally_oriented_leaves_cannot_be_greedy() {
        // Any drawing of a 5-leaf tree has two equally-oriented leaves; spot
        // check a few drawings of the fixture.
        let t = fixtures::tree5();
        let layouts: [(Vec<i64>, Vec<i64>); 2] = [
            (vec![0, 1, -1, 0, 0, 1, 1], vec![0, 0, 0, 1, -1, 1, -1]),
            (vec![0, 2, -1, 0, 0, 2, 2], vec![0, 0, 0, 3, -2, 1, -1]),
        ];
        for (x, y) in layouts {
            let d = Drawing::new(t.clone(), x, y).unwrap();
            assert!(!is_greedy(&d).is_greedy);
        }
    }
}
