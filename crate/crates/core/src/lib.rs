//! Cohomology, Golodness and loop-space combinatorics of moment-angle
//! complexes `Z_K` over finite simplicial complexes `K` on `[m]`.
//!
//! All arithmetic is exact: integers, rationals, prime fields and integer
//! polynomials. Exhaustive sweeps over the `2^m` full subcomplexes are
//! guarded by the bounds in [`Limits`] and refuse rather than truncate.

pub mod census;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod field;
pub mod golod;
pub mod hochster;
pub mod homology;
pub mod io;
pub mod loops;
pub mod snf;

pub use complex::{FHVector, Graph, SimplicialComplex, VertexSet};
pub use error::{Error, Result};
pub use golod::{
    is_chordal, is_golod, is_minimally_non_golod, maximal_face_order, perfect_elimination_ordering, wedge_profile,
    EliminationOrder, GolodReport, WedgeProfile,
};
pub use hochster::{bigraded_betti, cup_product, has_trivial_products, koszul_betti, zk_poincare_polynomial, BettiTable};
pub use homology::{reduced_cohomology, CoefficientRing, HomologyGroup};
pub use loops::{
    enumerate_commutator_generators, free_algebra_series, golod_series_identity, loop_zk_series, Commutator,
    PoincareSeries, Polynomial,
};

use serde::Serialize;

/// Size bounds for the exhaustive computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Limits {
    /// Largest `m` for sweeps over all full subcomplexes.
    pub exhaustive_m: u32,
    /// Largest `m` for the Koszul complex cross-check.
    pub koszul_m: u32,
    /// Largest facet count for the maximal-face order search.
    pub facet_cap: usize,
    /// Largest `m` for the census over all complexes.
    pub census_all_m: u32,
    /// Largest `m` for the census over flag complexes.
    pub census_flag_m: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { exhaustive_m: 20, koszul_m: 10, facet_cap: 12, census_all_m: 6, census_flag_m: 8 }
    }
}

/// Default series truncation `2m + 2`.
pub fn default_truncation(m: u32) -> usize {
    2 * m as usize + 2
}
