//! Hand-encoded test instances.
//!
//! Each fixture is built from a list of axis-parallel segments on a small
//! integer grid; vertex ids are assigned in (y, x) order of the segment
//! endpoints, so the layouts double as canonical drawings in tests.

use crate::coords;
use crate::repgraph::{Drawing, Edge, Orient, RectRep, VertexId};
use std::collections::BTreeMap;

pub type Pt = (i64, i64);

/// Build a representation from axis-parallel segments between grid points.
/// Returns the representation together with the layout that produced it.
pub fn from_segments(segments: &[(Pt, Pt)]) -> (RectRep, Vec<Pt>) {
    let mut ids: BTreeMap<(i64, i64), VertexId> = BTreeMap::new();
    for &(a, b) in segments {
        ids.entry((a.1, a.0)).or_default();
        ids.entry((b.1, b.0)).or_default();
    }
    let points: Vec<Pt> = ids.keys().map(|&(y, x)| (x, y)).collect();
    for (i, (_, v)) in ids.iter_mut().enumerate() {
        *v = i;
    }
    let edges = segments
        .iter()
        .map(|&((ax, ay), (bx, by))| {
            let u = ids[&(ay, ax)];
            let v = ids[&(by, bx)];
            if ay == by {
                assert_ne!(ax, bx, "zero-length segment");
                let (u, v) = if ax < bx { (u, v) } else { (v, u) };
                Edge { u, v, orient: Orient::East }
            } else {
                assert_eq!(ax, bx, "segment must be axis-parallel");
                let (u, v) = if ay < by { (u, v) } else { (v, u) };
                Edge { u, v, orient: Orient::North }
            }
        })
        .collect();
    let rep = RectRep::from_edges(points.len(), edges).expect("fixture must be valid");
    (rep, points)
}

pub fn layout_drawing(rep: &RectRep, points: &[Pt]) -> Drawing {
    Drawing::new(
        rep.clone(),
        points.iter().map(|p| p.0).collect(),
        points.iter().map(|p| p.1).collect(),
    )
    .expect("fixture layout must be a valid drawing")
}

/// Unit square, the smallest convex representation.
pub fn rectangle() -> RectRep {
    from_segments(&[
        ((0, 0), (1, 0)),
        ((0, 1), (1, 1)),
        ((0, 0), (0, 1)),
        ((1, 0), (1, 1)),
    ])
    .0
}

/// Rectangle with one flat vertex subdividing the top side.
pub fn subdivided_rectangle() -> RectRep {
    from_segments(&[
        ((0, 0), (2, 0)),
        ((0, 1), (1, 1)),
        ((1, 1), (2, 1)),
        ((0, 0), (0, 1)),
        ((2, 0), (2, 1)),
    ])
    .0
}

/// Rectangle subdivided top and bottom; carries the smallest x-conflict.
pub fn conflict_rectangle() -> (RectRep, Vec<Pt>) {
    from_segments(&[
        ((0, 0), (1, 0)),
        ((1, 0), (3, 0)),
        ((0, 1), (2, 1)),
        ((2, 1), (3, 1)),
        ((0, 0), (0, 1)),
        ((3, 0), (3, 1)),
    ])
}

/// Three unit squares in an L. Orthoconvex despite the notch.
pub fn l_shape() -> RectRep {
    from_segments(&[
        ((0, 0), (1, 0)),
        ((1, 0), (2, 0)),
        ((0, 1), (1, 1)),
        ((1, 1), (2, 1)),
        ((0, 2), (1, 2)),
        ((0, 0), (0, 1)),
        ((0, 1), (0, 2)),
        ((1, 0), (1, 1)),
        ((1, 1), (1, 2)),
        ((2, 0), (2, 1)),
    ])
    .0
}

/// 2x2 grid of unit squares, 9 vertices.
pub fn grid_2x2() -> RectRep {
    let mut segs = Vec::new();
    for y in 0..3 {
        for x in 0..2 {
            segs.push(((x, y), (x + 1, y)));
        }
    }
    for x in 0..3 {
        for y in 0..2 {
            segs.push(((x, y), (x, y + 1)));
        }
    }
    from_segments(&segs).0
}

/// Pinwheel of four rectangles around a center square; universal greedy.
pub fn pinwheel() -> RectRep {
    from_segments(&[
        ((0, 0), (2, 0)),
        ((2, 0), (3, 0)),
        ((0, 1), (1, 1)),
        ((1, 1), (2, 1)),
        ((1, 2), (2, 2)),
        ((2, 2), (3, 2)),
        ((0, 3), (1, 3)),
        ((1, 3), (3, 3)),
        ((0, 0), (0, 1)),
        ((0, 1), (0, 3)),
        ((2, 0), (2, 1)),
        ((2, 1), (2, 2)),
        ((1, 1), (1, 2)),
        ((1, 2), (1, 3)),
        ((3, 0), (3, 2)),
        ((3, 2), (3, 3)),
    ])
    .0
}

/// Drawing of a universal greedy representation.
pub fn fig2c() -> RectRep {
    pinwheel()
}

/// Rectangle whose interior is split into a square and an L-shaped face;
/// the internal 270-degree corner makes it non-convex.
pub fn fig2d() -> RectRep {
    from_segments(&[
        ((0, 0), (1, 0)),
        ((1, 0), (2, 0)),
        ((2, 0), (2, 1)),
        ((2, 1), (2, 2)),
        ((0, 2), (2, 2)),
        ((0, 0), (0, 2)),
        ((1, 0), (1, 1)),
        ((1, 1), (2, 1)),
    ])
    .0
}

/// U-shaped boundary over five unit squares; internal faces are rectangles
/// but the external face is not orthoconvex.
pub fn fig2e() -> RectRep {
    let mut segs = vec![
        ((0, 2), (1, 2)),
        ((2, 2), (3, 2)),
    ];
    for y in 0..2 {
        for x in 0..3 {
            segs.push(((x, y), (x + 1, y)));
        }
    }
    for x in 0..4 {
        segs.push(((x, 0), (x, 1)));
        segs.push(((x, 1), (x, 2)));
    }
    from_segments(&segs).0
}

/// Tree with four leaves: horizontal spine 2-0-1-3, leaf 4 north of 0 and
/// leaf 5 south of 1.
pub fn fig3a() -> RectRep {
    RectRep::from_edges(
        6,
        vec![
            Edge { u: 2, v: 0, orient: Orient::East },
            Edge { u: 0, v: 1, orient: Orient::East },
            Edge { u: 1, v: 3, orient: Orient::East },
            Edge { u: 0, v: 4, orient: Orient::North },
            Edge { u: 5, v: 1, orient: Orient::North },
        ],
    )
    .unwrap()
}

/// Max-degree-4 tree with five leaves; not greedy drawable.
pub fn tree5() -> RectRep {
    RectRep::from_edges(
        7,
        vec![
            Edge { u: 0, v: 1, orient: Orient::East },
            Edge { u: 2, v: 0, orient: Orient::East },
            Edge { u: 0, v: 3, orient: Orient::North },
            Edge { u: 4, v: 0, orient: Orient::North },
            Edge { u: 1, v: 5, orient: Orient::North },
            Edge { u: 6, v: 1, orient: Orient::North },
        ],
    )
    .unwrap()
}

/// Four-step staircase strip (step k is [k, k+2] x [k, k+1]); realizable
/// but not universal.
pub fn fig5a() -> (RectRep, Vec<Pt>) {
    let mut segs: Vec<((i64, i64), (i64, i64))> = vec![((0, 0), (2, 0)), ((3, 4), (5, 4))];
    // Shared horizontal lines y = 1..3 carry three unit edges each.
    for y in 1i64..4 {
        for x in y - 1..y + 2 {
            segs.push(((x, y), (x + 1, y)));
        }
    }
    for k in 0i64..4 {
        segs.push(((k, k), (k, k + 1)));
        segs.push(((k + 2, k), (k + 2, k + 1)));
    }
    from_segments(&segs)
}

/// Z-shaped convex representation with 11 internal rectangular faces and a
/// single minimal x-conflict; greedy realizable but not universal. The
/// responsible pair is `u` (south-oriented flat, degree 3) and `v`
/// (north-oriented flat, degree 3); see [`fig6a_conflict`].
pub fn fig6a() -> (RectRep, Vec<Pt>) {
    let mut segs = Vec::new();
    // Lower 3x2 block [3,6] x [0,2].
    for y in 0..3 {
        for x in 3..6 {
            segs.push(((x, y), (x + 1, y)));
        }
    }
    for x in 3..7 {
        segs.push(((x, 0), (x, 1)));
        segs.push(((x, 1), (x, 2)));
    }
    // Middle band [0,6] x [2,4].
    segs.push(((0, 2), (3, 2)));
    segs.push(((0, 2), (0, 4)));
    segs.push(((6, 2), (6, 4)));
    segs.push(((0, 4), (1, 4)));
    segs.push(((1, 4), (2, 4)));
    segs.push(((2, 4), (6, 4)));
    // Upper 2x2 block [0,2] x [4,6].
    for y in 5..7 {
        for x in 0..2 {
            segs.push(((x, y), (x + 1, y)));
        }
    }
    for x in 0..3 {
        segs.push(((x, 4), (x, 5)));
        segs.push(((x, 5), (x, 6)));
    }
    from_segments(&segs)
}

/// The responsible vertices (u, v) of fig6a's minimal conflict:
/// u = (1,4) south-oriented flat, v = (5,2) north-oriented flat.
pub fn fig6a_conflict(points: &[Pt]) -> (VertexId, VertexId) {
    let find = |p: Pt| points.iter().position(|&q| q == p).unwrap();
    (find((1, 4)), find((5, 2)))
}

/// The fig6a canonical layout is itself not greedy (the conflict between the
/// walls through u and v is unsatisfied); it plays the role of the
/// "rectilinear drawing that is not greedy" of the same representation.
pub fn fig1a() -> Drawing {
    let (rep, points) = fig6a();
    layout_drawing(&rep, &points)
}

/// Rectangle of height 5 with three stacked interior walls; its x-DAG is a
/// parallel composition of three non-edge components, so no good st-ordering
/// exists and the representation is not greedy realizable.
pub fn three_bands() -> RectRep {
    let mut segs = Vec::new();
    for y in 0..6 {
        segs.push(((0, y), (1, y)));
        segs.push(((1, y), (2, y)));
    }
    for y in 0..5 {
        segs.push(((0, y), (0, y + 1)));
        segs.push(((2, y), (2, y + 1)));
    }
    for band in 0..3 {
        segs.push(((1, 2 * band), (1, 2 * band + 1)));
    }
    from_segments(&segs).0
}

/// Convex representation whose x-DAG is the non-series-parallel "N"
/// st-digraph (s->a, s->b, a->b, a->t, b->t); still greedy realizable.
pub fn nonsp() -> RectRep {
    from_segments(&[
        ((0, 0), (4, 0)),
        ((4, 0), (6, 0)),
        ((0, 2), (2, 2)),
        ((2, 2), (4, 2)),
        ((4, 2), (6, 2)),
        ((0, 3), (2, 3)),
        ((2, 3), (6, 3)),
        ((0, 0), (0, 2)),
        ((0, 2), (0, 3)),
        ((2, 2), (2, 3)),
        ((4, 0), (4, 2)),
        ((6, 0), (6, 2)),
        ((6, 2), (6, 3)),
    ])
    .0
}

/// The exponential-area family H_q.
pub fn h_q(q: usize) -> RectRep {
    coords::build_exponential_fixture(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid_and_sized_as_designed() {
        assert_eq!(rectangle().vertex_count(), 4);
        assert_eq!(pinwheel().vertex_count(), 12);
        assert_eq!(pinwheel().internal_faces().count(), 5);
        assert_eq!(fig2d().internal_faces().count(), 2);
        assert_eq!(fig2e().internal_faces().count(), 5);
        let (rep, points) = fig6a();
        assert_eq!(rep.vertex_count(), 23);
        assert_eq!(rep.internal_faces().count(), 11);
        assert!(rep.is_biconnected());
        let (u, v) = fig6a_conflict(&points);
        assert_eq!(points[u], (1, 4));
        assert_eq!(points[v], (5, 2));
        assert_eq!(fig5a().0.internal_faces().count(), 4);
        assert_eq!(three_bands().internal_faces().count(), 8);
        assert_eq!(nonsp().internal_faces().count(), 4);
        assert!(fig3a().is_tree());
        assert_eq!(fig3a().count_leaves(), 4);
        assert_eq!(tree5().count_leaves(), 5);
    }

    #[test]
    fn fig6a_flat_classification_matches_the_figure() {
        use crate::repgraph::Dir4;
        let (rep, points) = fig6a();
        let (u, v) = fig6a_conflict(&points);
        assert!(rep.has_flat_angle(u, Dir4::South));
        assert!(!rep.has_flat_angle(u, Dir4::North));
        assert!(rep.has_flat_angle(v, Dir4::North));
        assert!(!rep.has_flat_angle(v, Dir4::South));
        assert_eq!(rep.degree(u), 3);
        assert_eq!(rep.degree(v), 3);
    }
}
