//! Chordality, Golodness and wedge decompositions.
//!
//! For a flag complex `K` the following are equivalent: the face ring is
//! Golod, all products in `H^+(Z_K)` vanish, and the 1-skeleton is chordal.
//! In that case `Z_K` is a wedge of spheres. For non-flag `K` only the
//! product criterion is available and verdicts are reported per field.

mod chordal;
mod classify;

pub use chordal::{is_chordal, is_perfect_elimination, lex_bfs, perfect_elimination_ordering, EliminationOrder};
pub use classify::{
    is_golod, is_minimally_non_golod, maximal_face_order, single_face_intersections, wedge_profile, DeletionVerdict,
    FieldGolod, GolodMethod, GolodReport, MinimallyNonGolodReport, WedgeProfile,
};
