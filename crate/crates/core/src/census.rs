//! Exhaustive census of small complexes.
//!
//! Complexes are generated vertex by vertex: every complex on `[m]` is a
//! complex on `[m-1]` plus vertex `m` coned over a subcomplex (its link).
//! Candidates are reduced to a canonical labelling computed by colour
//! refinement followed by a search over relabellings that respect the
//! refined colour classes, and deduplicated on that form.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Graph, SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::golod::{is_golod, is_minimally_non_golod, wedge_profile, GolodReport, WedgeProfile};
use crate::hochster::bigraded_betti;
use crate::homology::CoefficientRing;
use crate::io::ComplexBlock;
use crate::Limits;

/// Largest `m` the generator supports regardless of configured limits.
const MAX_CENSUS_M: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CensusScope {
    /// Clique complexes of graphs.
    Flag,
    /// All simplicial complexes.
    All,
}

pub const FLAG_GOLOD_TORSION: &str = "golod-with-integral-torsion";
pub const FLAG_MNG_NON_CYCLE: &str = "minimally-non-golod-flag-non-cycle";

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub complex: ComplexBlock,
    pub is_flag: bool,
    pub golod: GolodReport,
    pub minimally_non_golod: bool,
    pub integral_torsion: bool,
    /// Boundary of an `m`-gon with `m ≥ 4`.
    pub is_cycle: bool,
    pub wedge: Option<WedgeProfile>,
    pub flags: Vec<&'static str>,
}

/// Colour refinement on the vertices of a set system, returning the final
/// colour of each vertex (index `v - 1`).
fn refine(m: u32, sets: &[u64]) -> Vec<usize> {
    let mut colour = vec![0usize; m as usize];
    loop {
        let signatures: Vec<(usize, Vec<Vec<usize>>)> = (1..=m)
            .map(|v| {
                let bit = 1u64 << (v - 1);
                let mut around: Vec<Vec<usize>> = sets
                    .iter()
                    .filter(|&&s| s & bit != 0)
                    .map(|&s| {
                        let mut c: Vec<usize> =
                            VertexSet::from_bits(s & !bit).iter().map(|w| colour[w as usize - 1]).collect();
                        c.sort_unstable();
                        c
                    })
                    .collect();
                around.sort_unstable();
                (colour[v as usize - 1], around)
            })
            .collect();
        let ranks: BTreeSet<&(usize, Vec<Vec<usize>>)> = signatures.iter().collect();
        let ranked: Vec<&(usize, Vec<Vec<usize>>)> = ranks.into_iter().collect();
        let next: Vec<usize> = signatures.iter().map(|s| ranked.binary_search(&s).expect("present")).collect();
        let before = colour.iter().collect::<BTreeSet<_>>().len();
        let after = ranked.len();
        colour = next;
        if after == before {
            return colour;
        }
    }
}

fn relabel(sets: &[u64], new_label: &[u32]) -> Vec<u64> {
    let mut out: Vec<u64> = sets
        .iter()
        .map(|&s| VertexSet::from_bits(s).iter().fold(0u64, |acc, v| acc | 1u64 << (new_label[v as usize - 1] - 1)))
        .collect();
    out.sort_unstable();
    out
}

/// The lexicographically least relabelled set list over all labellings that
/// list colour classes in colour order.
pub fn canonical_sets(m: u32, sets: &[u64]) -> Vec<u64> {
    let colour = refine(m, sets);
    let mut cells: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
    for v in 1..=m {
        cells.entry(colour[v as usize - 1]).or_default().push(v);
    }
    let cells: Vec<Vec<u32>> = cells.into_values().collect();
    let mut new_label = vec![0u32; m as usize];
    let mut best: Option<Vec<u64>> = None;
    assign(&cells, 0, 1, &mut new_label, sets, &mut best);
    best.expect("at least one labelling")
}

fn assign(cells: &[Vec<u32>], c: usize, next: u32, new_label: &mut [u32], sets: &[u64], best: &mut Option<Vec<u64>>) {
    let Some(cell) = cells.get(c) else {
        let code = relabel(sets, new_label);
        if best.as_ref().is_none_or(|b| code < *b) {
            *best = Some(code);
        }
        return;
    };
    let mut perm = cell.clone();
    permute(&mut perm, 0, &mut |p| {
        for (k, &v) in p.iter().enumerate() {
            new_label[v as usize - 1] = next + k as u32;
        }
        assign(cells, c + 1, next + p.len() as u32, new_label, sets, best);
    });
}

fn permute(xs: &mut Vec<u32>, k: usize, visit: &mut dyn FnMut(&[u32])) {
    if k == xs.len() {
        visit(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, visit);
        xs.swap(k, i);
    }
}

/// Representatives of all graphs on `m` vertices up to isomorphism, as
/// canonical edge lists.
pub fn graphs_up_to_iso(m: u32) -> Vec<Vec<u64>> {
    let mut level: BTreeSet<Vec<u64>> = BTreeSet::from([Vec::new()]);
    for n in 2..=m {
        let prev: Vec<Vec<u64>> = level.into_iter().collect();
        level = prev
            .par_iter()
            .flat_map_iter(|edges| {
                (0u64..1 << (n - 1)).map(move |nbrs| {
                    let mut e = edges.clone();
                    e.extend(VertexSet::from_bits(nbrs).iter().map(|w| (1u64 << (w - 1)) | (1u64 << (n - 1))));
                    canonical_sets(n, &e)
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
    }
    level.into_iter().collect()
}

/// Subcomplexes (down-closed face families, `∅` implicit) of a complex given
/// by its nonempty faces in ascending size order.
fn subcomplexes(faces: &[u64]) -> Vec<Vec<u64>> {
    let boundary: Vec<Vec<usize>> = faces
        .iter()
        .map(|&f| {
            if f.count_ones() < 2 {
                return Vec::new();
            }
            VertexSet::from_bits(f)
                .iter()
                .map(|v| faces.iter().position(|&g| g == f & !(1u64 << (v - 1))).expect("down-closed"))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen = vec![false; faces.len()];
    fn walk(i: usize, faces: &[u64], boundary: &[Vec<usize>], chosen: &mut Vec<bool>, out: &mut Vec<Vec<u64>>) {
        if i == faces.len() {
            out.push(faces.iter().zip(chosen.iter()).filter(|(_, &c)| c).map(|(&f, _)| f).collect());
            return;
        }
        walk(i + 1, faces, boundary, chosen, out);
        if boundary[i].iter().all(|&b| chosen[b]) {
            chosen[i] = true;
            walk(i + 1, faces, boundary, chosen, out);
            chosen[i] = false;
        }
    }
    walk(0, faces, &boundary, &mut chosen, &mut out);
    out
}

fn complex_from_sets(m: u32, sets: &[u64]) -> SimplicialComplex {
    SimplicialComplex::from_maximal_faces(m, sets.iter().map(|&s| VertexSet::from_bits(s))).expect("labels in range")
}

/// Representatives of all simplicial complexes on `m` vertices (every vertex
/// a face) up to isomorphism, as canonical facet lists.
pub fn complexes_up_to_iso(m: u32) -> Vec<Vec<u64>> {
    let mut level: BTreeSet<Vec<u64>> = BTreeSet::from([vec![1u64]]);
    for n in 2..=m {
        let prev: Vec<Vec<u64>> = level.into_iter().collect();
        level = prev
            .par_iter()
            .flat_map_iter(|facets| {
                let k = complex_from_sets(n - 1, facets);
                let faces: Vec<u64> = k.faces_by_dim().into_iter().flatten().map(|f| f.bits()).collect();
                subcomplexes(&faces).into_iter().map(move |link| {
                    let apex = 1u64 << (n - 1);
                    let mut sets: Vec<u64> = facets.clone();
                    sets.push(apex);
                    sets.extend(link.iter().map(|&s| s | apex));
                    let k = complex_from_sets(n, &sets);
                    let facets: Vec<u64> = k.facets().iter().map(|f| f.bits()).collect();
                    canonical_sets(n, &facets)
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
    }
    level.into_iter().collect()
}

fn is_polygon(k: &SimplicialComplex) -> bool {
    let m = k.m();
    if m < 4 || !k.facets().iter().all(|f| f.len() == 2) {
        return false;
    }
    let g: Graph = k.one_skeleton();
    (1..=m).all(|v| g.degree(v) == 2) && k.connected_components().len() == 1
}

pub fn classify_row(k: &SimplicialComplex, fields: &[CoefficientRing], limits: &Limits) -> Result<CensusRow> {
    let golod = is_golod(k, fields, limits)?;
    let mng = is_minimally_non_golod(k, fields, limits)?;
    let integral_torsion = bigraded_betti(k, CoefficientRing::Integers, limits)?.has_torsion();
    let is_cycle = is_polygon(k);
    let wedge = wedge_profile(k, limits)?;
    let mut flags = Vec::new();
    if golod.golod_over_all() && integral_torsion {
        flags.push(FLAG_GOLOD_TORSION);
    }
    if mng.minimally_non_golod && k.is_flag() && !is_cycle {
        flags.push(FLAG_MNG_NON_CYCLE);
    }
    Ok(CensusRow {
        complex: ComplexBlock::from(k),
        is_flag: k.is_flag(),
        golod,
        minimally_non_golod: mng.minimally_non_golod,
        integral_torsion,
        is_cycle,
        wedge,
        flags,
    })
}

/// Classifies every complex on `1..=max_m` vertices up to isomorphism, in
/// order of `m` and then canonical facet list.
pub fn census(scope: CensusScope, max_m: u32, fields: &[CoefficientRing], limits: &Limits) -> Result<Vec<CensusRow>> {
    let bound = match scope {
        CensusScope::Flag => limits.census_flag_m,
        CensusScope::All => limits.census_all_m,
    }
    .min(MAX_CENSUS_M);
    if max_m > bound {
        return Err(Error::SizeBound { operation: "census", m: max_m, bound });
    }
    let mut complexes = Vec::new();
    for m in 1..=max_m {
        match scope {
            CensusScope::Flag => {
                for edges in graphs_up_to_iso(m) {
                    let edges: Vec<(u32, u32)> = edges
                        .iter()
                        .map(|&e| {
                            let s = VertexSet::from_bits(e);
                            (s.min().unwrap(), s.max().unwrap())
                        })
                        .collect();
                    complexes.push(Graph::from_edges(m, &edges).clique_complex());
                }
            }
            CensusScope::All => complexes.extend(complexes_up_to_iso(m).iter().map(|f| complex_from_sets(m, f))),
        }
    }
    complexes.par_iter().map(|k| classify_row(k, fields, limits)).collect()
}
