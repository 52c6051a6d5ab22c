//! Cohomology of the moment-angle complex `Z_K`.
//!
//! `H^p(Z_K) ≅ ⊕_{I ⊆ [m]} H̃^{p-|I|-1}(K_I)`: the summand for `I` sits in
//! bidegree `(-i, 2j)` with `j = |I|` and `i = |I| - d - 1` for
//! `d`-dimensional classes. The empty subset contributes the unit in
//! bidegree `(0, 0)` by the convention `H̃^{-1}(∅) = R`.

mod koszul;
mod ring;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::homology::{reduced_cohomology_of_faces, CoefficientRing, HomologyGroup};
use crate::loops::series::Polynomial;
use crate::snf::normalize_torsion;
use crate::Limits;

pub use koszul::koszul_betti;
pub use ring::{
    basis_classes, class_coordinates, cup_product, has_trivial_products, ClassRef, CohomologyClass, FieldVerdict,
    ProductWitness, RingCertificate,
};

/// Bigraded Betti numbers `β^{-i,2j}` of the face ring, i.e. the bigraded
/// cohomology of `Z_K`, over one coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub ring: CoefficientRing,
    pub m: u32,
    entries: BTreeMap<(usize, usize), HomologyGroup>,
}

impl BettiTable {
    pub(crate) fn from_parts(ring: CoefficientRing, m: u32, parts: impl IntoIterator<Item = ((usize, usize), HomologyGroup)>) -> Self {
        let mut entries: BTreeMap<(usize, usize), HomologyGroup> = BTreeMap::new();
        for (key, g) in parts {
            let e = entries.entry(key).or_default();
            e.rank += g.rank;
            e.torsion.extend(g.torsion);
        }
        for g in entries.values_mut() {
            g.torsion = normalize_torsion(&g.torsion);
        }
        entries.retain(|_, g| !g.is_zero());
        BettiTable { ring, m, entries }
    }

    /// Nonzero entries keyed by `(i, 2j)`.
    pub fn entries(&self) -> &BTreeMap<(usize, usize), HomologyGroup> {
        &self.entries
    }

    pub fn entry(&self, i: usize, two_j: usize) -> HomologyGroup {
        self.entries.get(&(i, two_j)).cloned().unwrap_or_default()
    }

    /// `H^p(Z_K)` for each total degree `p = 2j - i` that is nonzero.
    pub fn total(&self) -> BTreeMap<usize, HomologyGroup> {
        let mut out: BTreeMap<usize, HomologyGroup> = BTreeMap::new();
        for (&(i, two_j), g) in &self.entries {
            let e = out.entry(two_j - i).or_default();
            e.rank += g.rank;
            e.torsion.extend(g.torsion.iter().copied());
        }
        for g in out.values_mut() {
            g.torsion = normalize_torsion(&g.torsion);
        }
        out
    }

    /// Ranks `b_0, b_1, ..., b_top` of the total cohomology.
    pub fn total_ranks(&self) -> Vec<usize> {
        let total = self.total();
        let top = total.keys().next_back().copied().unwrap_or(0);
        (0..=top).map(|p| total.get(&p).map_or(0, |g| g.rank)).collect()
    }

    /// Entry ranks only, dropping torsion.
    pub fn ranks(&self) -> BTreeMap<(usize, usize), usize> {
        self.entries.iter().filter(|(_, g)| g.rank > 0).map(|(&k, g)| (k, g.rank)).collect()
    }

    pub fn has_torsion(&self) -> bool {
        self.entries.values().any(|g| !g.torsion.is_empty())
    }
}

#[derive(Serialize)]
struct EntryRow<'a> {
    i: usize,
    #[serde(rename = "2j")]
    two_j: usize,
    rank: usize,
    torsion: &'a [u64],
}

#[derive(Serialize)]
struct TotalRow {
    p: usize,
    rank: usize,
    torsion: Vec<u64>,
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<EntryRow> = self
            .entries
            .iter()
            .map(|(&(i, two_j), g)| EntryRow { i, two_j, rank: g.rank, torsion: &g.torsion })
            .collect();
        let total: Vec<TotalRow> =
            self.total().into_iter().map(|(p, g)| TotalRow { p, rank: g.rank, torsion: g.torsion }).collect();
        let mut st = s.serialize_struct("BettiTable", 3)?;
        st.serialize_field("ring", &self.ring)?;
        st.serialize_field("entries", &entries)?;
        st.serialize_field("total", &total)?;
        st.end()
    }
}

pub(crate) fn check_bound(operation: &'static str, m: u32, bound: u32) -> Result<()> {
    if m > bound {
        Err(Error::SizeBound { operation, m, bound })
    } else {
        Ok(())
    }
}

/// Hochster's decomposition, summed over all `2^m` full subcomplexes.
///
/// The subset sweep runs on the current rayon pool; results are merged in
/// subset order, so the table does not depend on the worker count.
pub fn bigraded_betti(k: &SimplicialComplex, ring: CoefficientRing, limits: &Limits) -> Result<BettiTable> {
    let m = k.m();
    check_bound("bigraded_betti", m, limits.exhaustive_m)?;
    let parts: Vec<Vec<((usize, usize), HomologyGroup)>> = (1u64..1u64 << m)
        .into_par_iter()
        .map(|bits| {
            let support = VertexSet::from_bits(bits);
            let size = support.len();
            let faces = k.faces_within(support);
            reduced_cohomology_of_faces(&faces, ring)
                .into_iter()
                .enumerate()
                .filter(|(_, g)| !g.is_zero())
                .map(|(d, g)| ((size - d - 1, 2 * size), g))
                .collect()
        })
        .collect();
    let unit = ((0, 0), HomologyGroup::free(1));
    Ok(BettiTable::from_parts(ring, m, std::iter::once(unit).chain(parts.into_iter().flatten())))
}

/// Poincaré polynomial of `Z_K` and of its desuspended reduced cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZkPoincare {
    /// `Σ_p dim H^p(Z_K) t^p`.
    pub full: Polynomial,
    /// `Σ_{p>0} dim H^p(Z_K) t^{p-1}`.
    pub desuspended_reduced: Polynomial,
}

pub fn zk_poincare_polynomial(k: &SimplicialComplex, ring: CoefficientRing, limits: &Limits) -> Result<ZkPoincare> {
    if !ring.is_field() {
        return Err(Error::NotAField { operation: "zk_poincare_polynomial", ring: ring.to_string() });
    }
    Ok(poincare_from_table(&bigraded_betti(k, ring, limits)?))
}

pub(crate) fn poincare_from_table(table: &BettiTable) -> ZkPoincare {
    let ranks: Vec<i64> = table.total_ranks().into_iter().map(|r| r as i64).collect();
    let full = Polynomial::from_i64(&ranks);
    let desuspended_reduced = Polynomial::from_i64(ranks.get(1..).unwrap_or(&[]));
    ZkPoincare { full, desuspended_reduced }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn pentagon_rational() {
        let t = bigraded_betti(&corpus::pentagon(), CoefficientRing::Rationals, &limits()).unwrap();
        assert_eq!(t.total_ranks(), vec![1, 0, 0, 5, 5, 0, 0, 1]);
        assert_eq!(t.entry(1, 4).rank, 5);
        assert_eq!(t.entry(2, 6).rank, 5);
        assert_eq!(t.entry(3, 10).rank, 1);
        assert_eq!(t.entry(0, 0).rank, 1);
        assert_eq!(t.entries().len(), 4);
    }

    #[test]
    fn rp2_integral() {
        let t = bigraded_betti(&corpus::rp2(), CoefficientRing::Integers, &limits()).unwrap();
        let total = t.total();
        let expect: BTreeMap<usize, HomologyGroup> = [
            (0, HomologyGroup::free(1)),
            (5, HomologyGroup::free(10)),
            (6, HomologyGroup::free(15)),
            (7, HomologyGroup::free(6)),
            (9, HomologyGroup { rank: 0, torsion: vec![2] }),
        ]
        .into_iter()
        .collect();
        assert_eq!(total, expect);
        assert!(t.has_torsion());
    }

    #[test]
    fn three_points() {
        let k = SimplicialComplex::disjoint_points(3).unwrap();
        let t = bigraded_betti(&k, CoefficientRing::Rationals, &limits()).unwrap();
        assert_eq!(t.total_ranks(), vec![1, 0, 0, 3, 2]);
    }

    #[test]
    fn size_bound_refusal() {
        let k = SimplicialComplex::disjoint_points(7).unwrap();
        let tight = Limits { exhaustive_m: 6, ..Limits::default() };
        assert_eq!(
            bigraded_betti(&k, CoefficientRing::Rationals, &tight),
            Err(Error::SizeBound { operation: "bigraded_betti", m: 7, bound: 6 })
        );
    }

    #[test]
    fn poincare_polynomials() {
        let p = zk_poincare_polynomial(&corpus::pentagon(), CoefficientRing::Rationals, &limits()).unwrap();
        assert_eq!(p.full.to_string(), "1+5t^3+5t^4+t^7");
        assert_eq!(p.desuspended_reduced.to_string(), "5t^2+5t^3+t^6");

        let p = zk_poincare_polynomial(&SimplicialComplex::disjoint_points(2).unwrap(), CoefficientRing::Rationals, &limits())
            .unwrap();
        assert_eq!(p.full.to_string(), "1+t^3");
        assert_eq!(p.desuspended_reduced.to_string(), "t^2");

        let p = zk_poincare_polynomial(&SimplicialComplex::simplex(3).unwrap(), CoefficientRing::PrimeField(2), &limits())
            .unwrap();
        assert_eq!(p.full, Polynomial::one());
        assert!(p.desuspended_reduced.is_zero());

        assert!(zk_poincare_polynomial(&corpus::pentagon(), CoefficientRing::Integers, &limits()).is_err());
    }

    #[test]
    fn json_shape() {
        let k = SimplicialComplex::disjoint_points(2).unwrap();
        let t = bigraded_betti(&k, CoefficientRing::Integers, &limits()).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"ring":"Z","entries":[{"i":0,"2j":0,"rank":1,"torsion":[]},{"i":1,"2j":4,"rank":1,"torsion":[]}],"total":[{"p":0,"rank":1,"torsion":[]},{"p":3,"rank":1,"torsion":[]}]}"#
        );
    }

    #[test]
    fn worker_count_does_not_change_tables() {
        let k = corpus::rp2();
        let run = |n| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .unwrap()
                .install(|| bigraded_betti(&k, CoefficientRing::Integers, &limits()).unwrap())
        };
        assert_eq!(run(1), run(4));
    }
}
