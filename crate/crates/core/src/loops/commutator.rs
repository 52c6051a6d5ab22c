use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::hochster::check_bound;
use crate::homology::{reduced_cohomology_of_faces, CoefficientRing};
use crate::Limits;

/// The right-normed bracket `[u_{k_1},[u_{k_2},...[u_{k_p},[u_j,u_i]]...]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Commutator {
    /// `k_1 < ... < k_p`.
    pub prefix: Vec<u32>,
    pub j: u32,
    pub i: u32,
}

impl Commutator {
    /// Word length `p + 2`, which is also the homological degree.
    pub fn degree(&self) -> usize {
        self.prefix.len() + 2
    }

    pub fn support(&self) -> VertexSet {
        let mut s = VertexSet::from_labels(self.prefix.iter().copied()).expect("labels are positive");
        s.insert(self.j);
        s.insert(self.i);
        s
    }
}

impl fmt::Display for Commutator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for k in &self.prefix {
            write!(f, "[u{k},")?;
        }
        write!(f, "[u{},u{}]", self.j, self.i)?;
        for _ in &self.prefix {
            f.write_str("]")?;
        }
        Ok(())
    }
}

pub(crate) fn require_flag(k: &SimplicialComplex, operation: &'static str) -> Result<()> {
    if k.is_flag() {
        Ok(())
    } else {
        Err(Error::NotFlag { operation })
    }
}

/// Generators supported on `I`: `j = max I`, and `i` runs over the minima of
/// the components of `K_I` that miss `j`.
///
/// The constraints `k_1 < ... < k_p < j` and `i < j` leave `max I` as the
/// only candidate for `j`.
fn generators_on(k: &SimplicialComplex, support: VertexSet) -> Vec<Commutator> {
    let Some(j) = support.max() else {
        return Vec::new();
    };
    k.components_within(support)
        .into_iter()
        .filter(|c| !c.contains(j))
        .map(|c| {
            let i = c.min().expect("components are nonempty");
            let mut rest = support;
            rest.remove(i);
            rest.remove(j);
            Commutator { prefix: rest.to_vec(), j, i }
        })
        .collect()
}

/// A minimal multiplicative generating set of `H_*(ΩZ_K)` for flag `K`,
/// sorted by degree, then support bitmask, then `i`.
pub fn enumerate_commutator_generators(k: &SimplicialComplex, limits: &Limits) -> Result<Vec<Commutator>> {
    require_flag(k, "enumerate_commutator_generators")?;
    check_bound("enumerate_commutator_generators", k.m(), limits.exhaustive_m)?;
    let mut out: Vec<Commutator> = (1u64..1u64 << k.m())
        .into_par_iter()
        .filter(|b| b.count_ones() >= 2)
        .flat_map_iter(|b| generators_on(k, VertexSet::from_bits(b)))
        .collect();
    out.sort_by_key(|c| (c.degree(), c.support(), c.i));
    Ok(out)
}

pub fn generators_by_degree(gens: &[Commutator]) -> BTreeMap<usize, Vec<Commutator>> {
    let mut out: BTreeMap<usize, Vec<Commutator>> = BTreeMap::new();
    for g in gens {
        out.entry(g.degree()).or_default().push(g.clone());
    }
    out
}

/// Per-support generator counts agree with `dim H̃^0(K_I; Q)` for every `I`.
pub fn generator_count_check(k: &SimplicialComplex, limits: &Limits) -> Result<bool> {
    let gens = enumerate_commutator_generators(k, limits)?;
    let mut counts: BTreeMap<VertexSet, usize> = BTreeMap::new();
    for g in &gens {
        *counts.entry(g.support()).or_default() += 1;
    }
    let ok = (1u64..1u64 << k.m()).into_par_iter().all(|b| {
        let support = VertexSet::from_bits(b);
        let h0 = reduced_cohomology_of_faces(&k.faces_within(support), CoefficientRing::Rationals)[0].rank;
        counts.get(&support).copied().unwrap_or(0) == h0
    });
    Ok(ok)
}
