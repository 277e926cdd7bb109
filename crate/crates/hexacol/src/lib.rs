//! Coloring homology, hexagon cochain complexes, and polynomial invariants
//! of triangulated closed PL 4-manifolds over finite fields.
//!
//! The pipeline in one breath: a triangulated closed 4-manifold determines
//! a space of "permitted colorings" (one `(x, y)` pair per tetrahedron, cut
//! out by one linear functional per pentachoron edge); quotienting by the
//! span of per-edge generator vectors gives the coloring homology
//! `H_col(M, F)`, which is finite-dimensional and a PL invariant.
//! Polynomial cochains on the coloring space of a standard simplex — in
//! particular a handful of explicit 3- and 4-cocycles — push through a
//! chain map to simplicial cochains, and pairing with (co)homology of the
//! manifold turns each cocycle into polynomial functions on `H_col`. Their
//! basis-independent content (value distributions, bilinear ranks, the
//! `q = r` comparison) separates several standard 4-manifolds.

pub mod algebra;
pub mod coloring;
pub mod complex;
pub mod hexagon;
pub mod homology;
pub mod invariants;
pub mod limits;
pub mod pachner;

pub use algebra::{Elt, Field};
pub use complex::Triangulation;
