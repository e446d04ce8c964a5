//! Greedy rectilinear drawings.
//!
//! Given a planar rectilinear representation (a plane graph with prescribed
//! 90/180/270-degree vertex angles, encoded as compass-oriented edges), this
//! crate decides whether the representation admits a drawing in which every
//! ordered vertex pair is joined by a path of strictly decreasing Euclidean
//! distance, constructs minimum-area drawings when it does, generates
//! universal instances from a rectangle, and independently verifies
//! greediness and dilation of any drawing.
//!
//! Module map:
//! - [`repgraph`]: the core plane-graph model, parsing and validation.
//! - [`convexity`]: rectangular internal faces + orthoconvex boundary test.
//! - [`shapedags`]: the contracted DAGs over maximal vertical/horizontal
//!   paths, comparability, conflicts and responsible flat vertices.
//! - [`universal`]: universality test, staircase oracle, minimum-area
//!   drawing, and the generative scheme (flat and reflex additions).
//! - [`ordering`]: good st-orderings — the definitional window oracle and the
//!   series-parallel constructor.
//! - [`coords`]: the trivial/left/right inequality system, the minimal
//!   integer solver, drawing assembly, tree drawings and the
//!   exponential-area family.
//! - [`verify`]: geometric oracles over drawings — greediness both by
//!   definition and by cells, conflict satisfaction, dilation.

pub mod convexity;
pub mod coords;
pub mod fixtures;
pub mod ordering;
pub mod repgraph;
pub mod shapedags;
pub mod svg;
pub mod universal;
pub mod verify;

pub use repgraph::{Drawing, RectRep};
