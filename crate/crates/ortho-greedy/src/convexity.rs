//! Convexity of a representation: every internal face is a rectangle and the
//! external boundary is orthoconvex. This is necessary for greedy
//! realizability, so it is the first gate of every pipeline.

use crate::repgraph::{Dir4, RectRep};
use serde::Serialize;

/// Witness for a non-orthoconvex boundary: positions (indices into the
/// external face walk) of the first darts of two distinct maximal runs in
/// the same compass direction.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct OrthoconvexityWitness {
    pub direction: Dir4,
    pub first_run_at: usize,
    pub second_run_at: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ConvexityReport {
    pub is_convex: bool,
    /// Faces (indices into `RectRep::faces`) with a corner above 180 degrees.
    pub offending_internal_faces: Vec<usize>,
    pub orthoconvexity_witness: Option<OrthoconvexityWitness>,
}

/// Decide convexity. Reports, never fails.
///
/// An internal face is rectangular iff it has no corner above 180 degrees
/// (the +360 turn sum then forces exactly four 90-degree corners). The
/// external boundary is orthoconvex iff its walk is both x- and y-monotone:
/// restricted to horizontal darts it consists of one cyclic run of east and
/// one of west, and symmetrically for vertical darts.
pub fn check_convex(h: &RectRep) -> ConvexityReport {
    let mut offending = Vec::new();
    for (i, f) in h.internal_faces() {
        if f.corners.iter().any(|c| c.angle > 180) {
            offending.push(i);
        }
    }

    let witness = orthoconvexity_witness(h);

    ConvexityReport {
        is_convex: offending.is_empty() && witness.is_none(),
        offending_internal_faces: offending,
        orthoconvexity_witness: witness,
    }
}

fn orthoconvexity_witness(h: &RectRep) -> Option<OrthoconvexityWitness> {
    let ext = h.external_face();
    let dirs: Vec<(usize, Dir4)> = ext
        .darts
        .iter()
        .enumerate()
        .map(|(i, d)| (i, h.edge(d.edge).dir_from(d.from)))
        .collect();

    for horizontal in [true, false] {
        let axis: Vec<(usize, Dir4)> = dirs
            .iter()
            .copied()
            .filter(|(_, d)| d.is_horizontal() == horizontal)
            .collect();
        if axis.len() < 2 {
            continue;
        }
        // Cyclic run starts within the projected subsequence.
        let mut run_starts: Vec<(usize, Dir4)> = Vec::new();
        for k in 0..axis.len() {
            let prev = axis[(k + axis.len() - 1) % axis.len()].1;
            if axis[k].1 != prev {
                run_starts.push(axis[k]);
            }
        }
        // A monotone cyclic sequence has one run per direction (or none when
        // only a single direction occurs, as on a path graph's walk).
        if run_starts.len() > 2 {
            for d in [Dir4::East, Dir4::West, Dir4::North, Dir4::South] {
                let hits: Vec<usize> = run_starts
                    .iter()
                    .filter(|(_, rd)| *rd == d)
                    .map(|(i, _)| *i)
                    .collect();
                if hits.len() >= 2 {
                    return Some(OrthoconvexityWitness {
                        direction: d,
                        first_run_at: hits[0],
                        second_run_at: hits[1],
                    });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn rectangle_is_convex() {
        let r = check_convex(&fixtures::rectangle());
        assert!(r.is_convex);
        assert!(r.offending_internal_faces.is_empty());
        assert!(r.orthoconvexity_witness.is_none());
    }

    #[test]
    fn internal_reflex_corner_is_reported() {
        let r = check_convex(&fixtures::fig2d());
        assert!(!r.is_convex);
        assert_eq!(r.offending_internal_faces.len(), 1);
        assert!(r.orthoconvexity_witness.is_none());
    }

    #[test]
    fn non_orthoconvex_boundary_is_reported() {
        let r = check_convex(&fixtures::fig2e());
        assert!(!r.is_convex);
        assert!(r.offending_internal_faces.is_empty());
        let w = r.orthoconvexity_witness.expect("witness expected");
        assert_ne!(w.first_run_at, w.second_run_at);
    }

    #[test]
    fn l_shaped_boundary_is_orthoconvex() {
        // Three unit squares in an L; the boundary has two north runs in the
        // raw direction sequence but is x- and y-monotone.
        let r = check_convex(&fixtures::l_shape());
        assert!(r.is_convex, "{r:?}");
    }

    #[test]
    fn convexity_is_invariant_under_rotation() {
        for h in [
            fixtures::rectangle(),
            fixtures::fig2d(),
            fixtures::fig2e(),
            fixtures::fig6a().0,
            fixtures::pinwheel(),
        ] {
            let base = check_convex(&h).is_convex;
            let mut cur = h;
            for _ in 0..3 {
                cur = cur.rotate90().unwrap();
                assert_eq!(check_convex(&cur).is_convex, base);
            }
        }
    }

    #[test]
    fn subdivided_rectangle_boundary_stays_convex() {
        // Flat boundary vertices do not break monotone runs.
        let h = fixtures::subdivided_rectangle();
        assert!(check_convex(&h).is_convex);
    }
}
