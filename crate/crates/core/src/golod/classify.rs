use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::hochster::{check_bound, has_trivial_products, FieldVerdict, ProductWitness};
use crate::homology::{reduced_cohomology_of_faces, CoefficientRing};
use crate::Limits;

use super::chordal::{is_chordal, perfect_elimination_ordering};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GolodMethod {
    #[serde(rename = "chordal-criterion")]
    ChordalCriterion,
    #[serde(rename = "product-criterion")]
    ProductCriterion,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldGolod {
    pub ring: CoefficientRing,
    pub golod: bool,
    pub method: GolodMethod,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GolodReport {
    pub is_flag: bool,
    /// Chordality of the 1-skeleton; present for flag complexes only.
    pub chordal: Option<bool>,
    pub products_trivial: Vec<FieldVerdict>,
    pub golod: Vec<FieldGolod>,
    pub caveat: Option<String>,
    /// A nonzero product, when one exists.
    pub witness: Option<ProductWitness>,
}

impl GolodReport {
    /// Golod over every field in the report.
    pub fn golod_over_all(&self) -> bool {
        self.golod.iter().all(|g| g.golod)
    }
}

const NON_FLAG_CAVEAT: &str = "non-flag complex: Golodness is decided by trivial multiplication in H^*(Z_K), \
     which suffices for face rings since all higher Massey products then vanish; verdicts are per field";

/// Golodness over each field in `fields`.
///
/// For flag `K` the verdict is chordality of the 1-skeleton, and the product
/// criterion is evaluated as a consistency check; a disagreement is an error.
pub fn is_golod(k: &SimplicialComplex, fields: &[CoefficientRing], limits: &Limits) -> Result<GolodReport> {
    let cert = has_trivial_products(k, fields, limits)?;
    if k.is_flag() {
        let chordal = is_chordal(&k.one_skeleton());
        if let Some(bad) = cert.per_field.iter().find(|v| v.trivial != chordal) {
            return Err(Error::Inconsistent(format!(
                "1-skeleton chordal = {chordal} but products trivial over {} = {}",
                bad.ring, bad.trivial
            )));
        }
        let golod =
            fields.iter().map(|&ring| FieldGolod { ring, golod: chordal, method: GolodMethod::ChordalCriterion }).collect();
        Ok(GolodReport {
            is_flag: true,
            chordal: Some(chordal),
            products_trivial: cert.per_field,
            golod,
            caveat: None,
            witness: cert.witness,
        })
    } else {
        let golod = cert
            .per_field
            .iter()
            .map(|v| FieldGolod { ring: v.ring, golod: v.trivial, method: GolodMethod::ProductCriterion })
            .collect();
        Ok(GolodReport {
            is_flag: false,
            chordal: None,
            products_trivial: cert.per_field,
            golod,
            caveat: Some(NON_FLAG_CAVEAT.to_string()),
            witness: cert.witness,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeletionVerdict {
    pub vertex: u32,
    /// Golod over every configured field.
    pub golod: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimallyNonGolodReport {
    pub minimally_non_golod: bool,
    /// `K` itself is Golod over every configured field.
    pub golod: bool,
    pub deletions: Vec<DeletionVerdict>,
}

/// `K` is not Golod while every full subcomplex `K_{[m] \ i}` is.
///
/// Golodness here is the conjunction over `fields`.
pub fn is_minimally_non_golod(
    k: &SimplicialComplex,
    fields: &[CoefficientRing],
    limits: &Limits,
) -> Result<MinimallyNonGolodReport> {
    let golod = is_golod(k, fields, limits)?.golod_over_all();
    let deletions = (1..=k.m())
        .into_par_iter()
        .map(|v| {
            let sub = k.vertex_deletion(v)?;
            Ok(DeletionVerdict { vertex: v, golod: is_golod(&sub, fields, limits)?.golod_over_all() })
        })
        .collect::<Result<Vec<_>>>()?;
    let minimally_non_golod = !golod && deletions.iter().all(|d| d.golod);
    Ok(MinimallyNonGolodReport { minimally_non_golod, golod, deletions })
}

/// Sphere counts of `Z_K ≃ ∨ S^{ℓ+1}` for flag `K` with chordal 1-skeleton.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WedgeProfile {
    /// Sphere dimension `ℓ + 1` → number of spheres.
    pub sphere_counts: BTreeMap<usize, usize>,
    /// Largest sphere dimension, 0 when `Z_K` is contractible.
    pub max_dim: usize,
}

impl WedgeProfile {
    pub fn from_counts(counts: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let sphere_counts: BTreeMap<usize, usize> = counts.into_iter().filter(|&(_, c)| c > 0).collect();
        let max_dim = sphere_counts.keys().next_back().copied().unwrap_or(0);
        WedgeProfile { sphere_counts, max_dim }
    }

    pub fn total_spheres(&self) -> usize {
        self.sphere_counts.values().sum()
    }
}

/// The wedge decomposition for flag chordal `K`, or `None` outside that
/// hypothesis.
///
/// Counts are `Σ_{|I|=ℓ} dim H̃^0(K_I; Q)`. Every full subcomplex is also
/// checked to have no rational cohomology above degree 0; a violation is an
/// error.
pub fn wedge_profile(k: &SimplicialComplex, limits: &Limits) -> Result<Option<WedgeProfile>> {
    if !k.is_flag() || !is_chordal(&k.one_skeleton()) {
        return Ok(None);
    }
    check_bound("wedge_profile", k.m(), limits.exhaustive_m)?;
    let per_subset: Vec<Result<(usize, usize)>> = (1u64..1u64 << k.m())
        .into_par_iter()
        .map(|bits| {
            let support = VertexSet::from_bits(bits);
            let groups = reduced_cohomology_of_faces(&k.faces_within(support), CoefficientRing::Rationals);
            if let Some((d, _)) = groups.iter().enumerate().skip(1).find(|(_, g)| g.rank > 0) {
                return Err(Error::Inconsistent(format!(
                    "chordal flag complex has H̃^{d}(K_{support}) ≠ 0"
                )));
            }
            Ok((support.len() + 1, groups[0].rank))
        })
        .collect();
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for r in per_subset {
        let (dim, c) = r?;
        *counts.entry(dim).or_default() += c;
    }
    Ok(Some(WedgeProfile::from_counts(counts)))
}

/// Whether each facet meets the union of the earlier ones in a single face
/// (possibly empty).
pub fn single_face_intersections(order: &[VertexSet]) -> bool {
    (1..order.len()).all(|k| extends(&order[..k], order[k]))
}

/// The complex generated by `earlier` meets the simplex `next` in the faces
/// `e ∩ next`; that is one simplex iff one of them contains all others.
fn extends(earlier: &[VertexSet], next: VertexSet) -> bool {
    let union = earlier.iter().fold(VertexSet::EMPTY, |acc, e| acc.union(e.intersection(next)));
    earlier.is_empty() || earlier.iter().any(|e| e.intersection(next) == union)
}

/// An ordering `I_1, ..., I_s` of the maximal faces in which every `I_k`
/// meets `I_1 ∪ ... ∪ I_{k-1}` in a single face.
///
/// For flag chordal `K` the order comes from a perfect elimination ordering:
/// each vertex contributes the clique of itself and its earlier neighbours
/// when that clique is maximal. Otherwise a backtracking search runs over
/// sets of placed facets, refusing beyond `limits.facet_cap` facets.
pub fn maximal_face_order(k: &SimplicialComplex, limits: &Limits) -> Result<Option<Vec<VertexSet>>> {
    let facets = k.facets();
    if k.is_flag() {
        let g = k.one_skeleton();
        if let Some(peo) = perfect_elimination_ordering(&g) {
            let mut earlier = VertexSet::EMPTY;
            let mut order = Vec::with_capacity(facets.len());
            for &v in peo.as_slice() {
                let clique = g.neighbors(v).intersection(earlier).union(VertexSet::singleton(v));
                earlier.insert(v);
                if facets.binary_search(&clique).is_ok() {
                    order.push(clique);
                }
            }
            if order.len() != facets.len() || !single_face_intersections(&order) {
                return Err(Error::Inconsistent("elimination order does not induce a valid facet order".into()));
            }
            return Ok(Some(order));
        }
    }
    if facets.len() > limits.facet_cap {
        return Err(Error::SearchBound { operation: "maximal_face_order", facets: facets.len(), cap: limits.facet_cap });
    }
    let mut order = Vec::with_capacity(facets.len());
    let mut dead = HashSet::new();
    Ok(search(facets, 0, &mut order, &mut dead).then_some(order))
}

fn search(facets: &[VertexSet], used: u64, order: &mut Vec<VertexSet>, dead: &mut HashSet<u64>) -> bool {
    if order.len() == facets.len() {
        return true;
    }
    if dead.contains(&used) {
        return false;
    }
    for (idx, &f) in facets.iter().enumerate() {
        if used >> idx & 1 == 1 || !extends(order, f) {
            continue;
        }
        order.push(f);
        if search(facets, used | 1 << idx, order, dead) {
            return true;
        }
        order.pop();
    }
    dead.insert(used);
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn fields() -> Vec<CoefficientRing> {
        CoefficientRing::default_fields()
    }

    fn vs(labels: &[u32]) -> VertexSet {
        VertexSet::from_labels(labels.iter().copied()).unwrap()
    }

    #[test]
    fn golod_verdicts() {
        let l = Limits::default();
        let pts = is_golod(&SimplicialComplex::disjoint_points(4).unwrap(), &fields(), &l).unwrap();
        assert!(pts.golod_over_all() && pts.is_flag && pts.chordal == Some(true));
        assert!(pts.golod.iter().all(|g| g.method == GolodMethod::ChordalCriterion));

        let pent = is_golod(&corpus::pentagon(), &fields(), &l).unwrap();
        assert!(!pent.golod_over_all());
        assert!(pent.golod.iter().all(|g| !g.golod));

        let rp2 = is_golod(&corpus::rp2(), &fields(), &l).unwrap();
        assert!(!rp2.is_flag && rp2.chordal.is_none() && rp2.caveat.is_some());
        assert!(rp2.golod_over_all());
        assert!(rp2.golod.iter().all(|g| g.method == GolodMethod::ProductCriterion));
    }

    #[test]
    fn minimally_non_golod() {
        let l = Limits::default();
        for m in 4..=6 {
            let r = is_minimally_non_golod(&SimplicialComplex::polygon(m).unwrap(), &fields(), &l).unwrap();
            assert!(r.minimally_non_golod, "{m}-gon");
            assert_eq!(r.deletions.len(), m as usize);
        }
        let r = is_minimally_non_golod(&SimplicialComplex::disjoint_points(3).unwrap(), &fields(), &l).unwrap();
        assert!(!r.minimally_non_golod && r.golod);
    }

    #[test]
    fn wedge_profiles() {
        let l = Limits::default();
        let p = wedge_profile(&SimplicialComplex::disjoint_points(3).unwrap(), &l).unwrap().unwrap();
        assert_eq!(p.sphere_counts, BTreeMap::from([(3, 3), (4, 2)]));
        assert_eq!(p.max_dim, 4);
        let p = wedge_profile(&SimplicialComplex::path(3).unwrap(), &l).unwrap().unwrap();
        assert_eq!(p.sphere_counts, BTreeMap::from([(3, 1)]));
        assert_eq!(wedge_profile(&corpus::pentagon(), &l).unwrap(), None);
        assert_eq!(wedge_profile(&corpus::rp2(), &l).unwrap(), None);
        let p = wedge_profile(&SimplicialComplex::simplex(4).unwrap(), &l).unwrap().unwrap();
        assert!(p.sphere_counts.is_empty() && p.max_dim == 0);
    }

    #[test]
    fn facet_orders() {
        let l = Limits::default();
        let path = SimplicialComplex::path(3).unwrap();
        assert_eq!(maximal_face_order(&path, &l).unwrap(), Some(vec![vs(&[1, 2]), vs(&[2, 3])]));
        assert_eq!(maximal_face_order(&corpus::pentagon(), &l).unwrap(), None);
        let simplex = SimplicialComplex::simplex(4).unwrap();
        assert_eq!(maximal_face_order(&simplex, &l).unwrap(), Some(vec![vs(&[1, 2, 3, 4])]));
        let pts = SimplicialComplex::disjoint_points(3).unwrap();
        assert_eq!(maximal_face_order(&pts, &l).unwrap().map(|o| o.len()), Some(3));
    }

    #[test]
    fn facet_order_search_for_non_flag() {
        let l = Limits::default();
        // two triangles sharing an edge, plus a hollow triangle hanging off vertex 4
        let k = SimplicialComplex::from_facet_lists(6, &[&[1, 2, 3], &[2, 3, 4], &[4, 5], &[5, 6], &[4, 6]]).unwrap();
        assert!(!k.is_flag());
        assert_eq!(maximal_face_order(&k, &l).unwrap(), None);
        let k = SimplicialComplex::from_facet_lists(5, &[&[1, 2, 3], &[3, 4, 5], &[1, 4]]).unwrap();
        assert!(!k.is_flag());
        let order = maximal_face_order(&k, &l).unwrap();
        assert_eq!(order, None);
        let k = corpus::rp2();
        let tight = Limits { facet_cap: 8, ..Limits::default() };
        assert!(matches!(maximal_face_order(&k, &tight), Err(Error::SearchBound { facets: 10, .. })));
        assert_eq!(maximal_face_order(&k, &l).unwrap(), None);
    }

    #[test]
    fn single_face_property() {
        assert!(single_face_intersections(&[vs(&[1, 2]), vs(&[2, 3])]));
        assert!(single_face_intersections(&[vs(&[1]), vs(&[2])]));
        assert!(!single_face_intersections(&[vs(&[1, 2]), vs(&[3, 4]), vs(&[2, 3])]));
        assert!(single_face_intersections(&[vs(&[1, 2, 3]), vs(&[2, 3, 4]), vs(&[3, 4, 5])]));
    }
}
