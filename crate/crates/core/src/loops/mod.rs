//! Loop homology `H_*(ΩZ_K)` for flag `K`: commutator generators, the exact
//! Poincaré series, and the Golod series identity.

mod commutator;
pub mod series;

use num_bigint::BigInt;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::golod::WedgeProfile;
use crate::hochster::zk_poincare_polynomial;
use crate::homology::CoefficientRing;
use crate::Limits;

pub use commutator::{enumerate_commutator_generators, generator_count_check, generators_by_degree, Commutator};
pub use series::{free_algebra_series, PoincareSeries, Polynomial};

use commutator::require_flag;
use series::serialize_big_ints;

/// `1 / ((1+t)^{m-n} (1 - h_1 t + ... + (-1)^n h_n t^n))` with `n = dim K + 1`,
/// expanded through degree `truncation`.
pub fn loop_zk_series(k: &SimplicialComplex, truncation: usize) -> Result<PoincareSeries> {
    require_flag(k, "loop_zk_series")?;
    let fh = k.fh_vector();
    let alternating: Vec<i64> = fh.h.iter().enumerate().map(|(i, &h)| if i % 2 == 0 { h } else { -h }).collect();
    let m = k.m() as usize;
    let denominator = Polynomial::from_i64(&[1, 1]).pow(m - fh.n).mul(&Polynomial::from_i64(&alternating));
    PoincareSeries::new(Polynomial::one(), denominator, truncation)
}

/// Comparison of the loop series with `1 / (1 - P(Σ^{-1} H̃^*(Z_K); t))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesIdentity {
    pub ring: CoefficientRing,
    pub holds: bool,
    /// Smallest degree where the two expansions differ.
    pub first_residual: Option<usize>,
    /// Left minus right, coefficientwise.
    #[serde(serialize_with = "serialize_big_ints")]
    pub residual: Vec<BigInt>,
    pub loop_series: PoincareSeries,
    pub golod_series: PoincareSeries,
}

pub fn golod_series_identity(
    k: &SimplicialComplex,
    ring: CoefficientRing,
    truncation: usize,
    limits: &Limits,
) -> Result<SeriesIdentity> {
    require_flag(k, "golod_series_identity")?;
    let loop_series = loop_zk_series(k, truncation)?;
    let poincare = zk_poincare_polynomial(k, ring, limits)?;
    let golod_series =
        PoincareSeries::new(Polynomial::one(), Polynomial::one().sub(&poincare.desuspended_reduced), truncation)?;
    let residual: Vec<BigInt> =
        loop_series.expansion.iter().zip(&golod_series.expansion).map(|(a, b)| a - b).collect();
    let first_residual = residual.iter().position(|r| r != &BigInt::from(0));
    Ok(SeriesIdentity { ring, holds: first_residual.is_none(), first_residual, residual, loop_series, golod_series })
}

/// Closed form `(ℓ - 1) C(m, ℓ)` spheres of dimension `ℓ + 1`, `2 ≤ ℓ ≤ m`,
/// for `m` disjoint points.
pub fn disjoint_points_profile(m: u32) -> Result<WedgeProfile> {
    if m == 0 {
        return Err(Error::NoVertices);
    }
    let m = m as usize;
    let mut binom = vec![1usize; m + 1];
    for l in 1..=m {
        binom[l] = binom[l - 1] * (m - l + 1) / l;
    }
    Ok(WedgeProfile::from_counts((2..=m).map(|l| (l + 1, (l - 1) * binom[l]))))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use super::*;
    use crate::corpus;

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn pentagon_series() {
        let s = loop_zk_series(&corpus::pentagon(), 12).unwrap();
        assert_eq!(s.rational, "1/(1-5t^2-5t^3+t^5)");
        assert_eq!(s.to_string(), "1/(1-5t^2-5t^3+t^5)");
        assert_eq!(s.truncation(), 12);
    }

    #[test]
    fn path_and_points() {
        let s = loop_zk_series(&SimplicialComplex::path(3).unwrap(), 6).unwrap();
        assert_eq!(s.rational, "1/(1-t^2)");
        assert_eq!(s.expansion, ints(&[1, 0, 1, 0, 1, 0, 1]));
        let s = loop_zk_series(&SimplicialComplex::disjoint_points(2).unwrap(), 4).unwrap();
        assert_eq!(s.rational, "1/(1-t^2)");
    }

    #[test]
    fn simplex_series_is_trivial() {
        for m in 1..6 {
            let s = loop_zk_series(&SimplicialComplex::simplex(m).unwrap(), 8).unwrap();
            assert_eq!(s.denominator, Polynomial::one());
            assert_eq!(s.expansion[0], BigInt::from(1));
            assert!(s.expansion[1..].iter().all(|c| *c == BigInt::from(0)));
        }
    }

    #[test]
    fn identities() {
        let l = Limits::default();
        let q = CoefficientRing::Rationals;
        let pts = golod_series_identity(&SimplicialComplex::disjoint_points(3).unwrap(), q, 12, &l).unwrap();
        assert!(pts.holds);
        let path = golod_series_identity(&SimplicialComplex::path(3).unwrap(), q, 12, &l).unwrap();
        assert!(path.holds);
        let pent = golod_series_identity(&corpus::pentagon(), q, 12, &l).unwrap();
        assert!(!pent.holds);
        assert_eq!(pent.first_residual, Some(5));
        assert_eq!(pent.golod_series.rational, "1/(1-5t^2-5t^3-t^6)");
        assert!(matches!(golod_series_identity(&corpus::rp2(), q, 12, &l), Err(Error::NotFlag { .. })));
    }

    #[test]
    fn closed_form_profiles() {
        assert_eq!(disjoint_points_profile(2).unwrap().sphere_counts, BTreeMap::from([(3, 1)]));
        assert_eq!(disjoint_points_profile(3).unwrap().sphere_counts, BTreeMap::from([(3, 3), (4, 2)]));
        assert_eq!(disjoint_points_profile(4).unwrap().sphere_counts, BTreeMap::from([(3, 6), (4, 8), (5, 3)]));
        assert!(disjoint_points_profile(1).unwrap().sphere_counts.is_empty());
        assert_eq!(disjoint_points_profile(0), Err(Error::NoVertices));
    }
}
