//! Reduced simplicial cohomology over `Q`, `GF(p)` or `Z`.
//!
//! Simplices are oriented by ascending vertex label, so
//! `∂[v_0..v_d] = Σ (-1)^k [v_0..v̂_k..v_d]` and the coboundary is its
//! transpose. The augmentation `C^{-1} = R → C^0` is included, which makes
//! every group reduced.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::field::{lift_matrix, nullspace, rank, rational_rank, EchelonBasis, Field};
use crate::snf::smith_normal_form_i64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoefficientRing {
    Rationals,
    PrimeField(u64),
    Integers,
}

impl CoefficientRing {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(CoefficientRing::PrimeField(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn is_field(self) -> bool {
        !matches!(self, CoefficientRing::Integers)
    }

    /// `{Q, GF(2), GF(3)}`, the default set for multi-field checks.
    pub fn default_fields() -> Vec<CoefficientRing> {
        vec![CoefficientRing::Rationals, CoefficientRing::PrimeField(2), CoefficientRing::PrimeField(3)]
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Rationals => f.write_str("Q"),
            CoefficientRing::Integers => f.write_str("Z"),
            CoefficientRing::PrimeField(p) => write!(f, "Fp:{p}"),
        }
    }
}

impl FromStr for CoefficientRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { line: 0, column: 0, message: format!("unknown ring {s:?}; use Q, Z or Fp:<p>") };
        match s {
            "Q" => Ok(CoefficientRing::Rationals),
            "Z" => Ok(CoefficientRing::Integers),
            _ => {
                let p = s.strip_prefix("Fp:").ok_or_else(bad)?.parse::<u64>().map_err(|_| bad())?;
                CoefficientRing::prime(p)
            }
        }
    }
}

impl Serialize for CoefficientRing {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Calls `$body` with `$f` bound to the concrete field behind `$ring`.
/// `$ring` must be a field.
macro_rules! with_field {
    ($ring:expr, |$f:ident| $body:expr) => {
        match $ring {
            $crate::homology::CoefficientRing::Rationals => {
                let $f = &$crate::field::Rationals;
                $body
            }
            $crate::homology::CoefficientRing::PrimeField(p) => {
                let $f = &$crate::field::PrimeField::new(p);
                $body
            }
            $crate::homology::CoefficientRing::Integers => unreachable!("integers are not a field"),
        }
    };
}
pub(crate) use with_field;

/// A finitely generated abelian group (or vector space): free rank plus
/// invariant factors `d_1 | d_2 | ...`, each at least 2.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl HomologyGroup {
    pub fn free(rank: usize) -> Self {
        HomologyGroup { rank, torsion: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Cochains in one dimension together with the coboundary leaving them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CochainBasis {
    pub dim: usize,
    pub simplices: Vec<VertexSet>,
    /// Rows indexed by `(dim + 1)`-simplices, columns by `simplices`;
    /// entries are canonical representatives in the ring.
    pub coboundary: Vec<Vec<i64>>,
}

/// Sign matrix of `δ: C^d → C^{d+1}` between consecutive face lists.
pub(crate) fn coboundary_signs(lower: &[VertexSet], upper: &[VertexSet]) -> Vec<Vec<i64>> {
    upper
        .iter()
        .map(|&s| {
            let mut row = vec![0i64; lower.len()];
            for (k, v) in s.iter().enumerate() {
                let mut face = s;
                face.remove(v);
                let col = lower.binary_search(&face).expect("faces of a simplex are simplices");
                row[col] = if k % 2 == 0 { 1 } else { -1 };
            }
            row
        })
        .collect()
}

fn reduce_entries(m: Vec<Vec<i64>>, ring: CoefficientRing) -> Vec<Vec<i64>> {
    match ring {
        CoefficientRing::PrimeField(p) => {
            m.into_iter().map(|r| r.into_iter().map(|x| x.rem_euclid(p as i64)).collect()).collect()
        }
        _ => m,
    }
}

pub fn boundary_matrices(k: &SimplicialComplex, ring: CoefficientRing) -> Vec<CochainBasis> {
    let faces = k.faces_by_dim();
    (0..faces.len())
        .map(|d| {
            let coboundary = match faces.get(d + 1) {
                Some(upper) => coboundary_signs(&faces[d], upper),
                None => Vec::new(),
            };
            CochainBasis { dim: d, simplices: faces[d].clone(), coboundary: reduce_entries(coboundary, ring) }
        })
        .collect()
}

/// The augmented cochain complex of a face list, as sign matrices
/// `δ^{-1}, δ^0, ..., δ^{top-1}`.
pub(crate) fn augmented_coboundaries(faces: &[Vec<VertexSet>]) -> Vec<Vec<Vec<i64>>> {
    let mut out = Vec::with_capacity(faces.len());
    if let Some(vertices) = faces.first() {
        out.push(vec![vec![1i64]; vertices.len()]);
    }
    for d in 0..faces.len().saturating_sub(1) {
        out.push(coboundary_signs(&faces[d], &faces[d + 1]));
    }
    out
}

/// Reduced cohomology of a face list (nonempty), indexed by dimension.
pub(crate) fn reduced_cohomology_of_faces(faces: &[Vec<VertexSet>], ring: CoefficientRing) -> Vec<HomologyGroup> {
    let cob = augmented_coboundaries(faces);
    // ranks[d + 1] = rank δ^d for d = -1 .. top-1; δ^{top} = 0.
    let mut ranks = Vec::with_capacity(cob.len() + 1);
    let mut torsion = Vec::with_capacity(cob.len());
    for m in &cob {
        match ring {
            CoefficientRing::Integers => {
                let s = smith_normal_form_i64(m);
                ranks.push(s.rank());
                torsion.push(s.torsion().iter().map(|d| u64::try_from(d).expect("torsion order exceeds u64")).collect());
            }
            CoefficientRing::Rationals => {
                ranks.push(rational_rank(m));
                torsion.push(Vec::new());
            }
            CoefficientRing::PrimeField(_) => {
                ranks.push(with_field!(ring, |f| rank(f, &lift_matrix(f, m))));
                torsion.push(Vec::new());
            }
        }
    }
    ranks.push(0);
    (0..faces.len())
        .map(|d| HomologyGroup { rank: faces[d].len() - ranks[d + 1] - ranks[d], torsion: torsion[d].clone() })
        .collect()
}

/// `H̃^d(K; R)` for `d = 0..=dim K`.
///
/// Over `Z` the torsion of `H̃^d` is read off the invariant factors of
/// `δ^{d-1}`. The void complex is rejected: its convention
/// (`H̃^{-1} = R`) belongs to the caller.
pub fn reduced_cohomology(k: &SimplicialComplex, ring: CoefficientRing) -> Result<BTreeMap<usize, HomologyGroup>> {
    if k.is_void() {
        return Err(Error::Inconsistent("reduced cohomology of the void complex is a caller convention".into()));
    }
    Ok(reduced_cohomology_of_faces(&k.faces_by_dim(), ring).into_iter().enumerate().collect())
}

/// Cocycles whose classes form a basis of `H̃^d`, for a face list.
///
/// The basis is the set of kernel vectors (in the order produced by
/// [`nullspace`]) that extend an echelon basis of the coboundaries.
pub(crate) fn cocycle_basis_of_faces<F: Field>(f: &F, faces: &[Vec<VertexSet>], d: usize) -> Vec<Vec<F::Elem>> {
    let Some(cells) = faces.get(d) else {
        return Vec::new();
    };
    let n = cells.len();
    let cocycles = match faces.get(d + 1) {
        Some(upper) => nullspace(f, &lift_matrix(f, &coboundary_signs(cells, upper)), n),
        None => (0..n)
            .map(|i| {
                let mut v = vec![f.zero(); n];
                v[i] = f.one();
                v
            })
            .collect(),
    };
    let mut span = EchelonBasis::new(f);
    for b in coboundary_image(f, faces, d) {
        span.insert(&b);
    }
    cocycles.into_iter().filter(|z| span.insert(z)).collect()
}

/// Generators of `im δ^{d-1} ⊆ C^d`, augmentation included.
pub(crate) fn coboundary_image<F: Field>(f: &F, faces: &[Vec<VertexSet>], d: usize) -> Vec<Vec<F::Elem>> {
    if d == 0 {
        return vec![vec![f.one(); faces[0].len()]];
    }
    let m = coboundary_signs(&faces[d - 1], &faces[d]);
    (0..faces[d - 1].len()).map(|c| m.iter().map(|row| f.from_i64(row[c])).collect()).collect()
}

pub fn cocycle_basis<F: Field>(k: &SimplicialComplex, d: usize, f: &F) -> Vec<Vec<F::Elem>> {
    if k.is_void() {
        return Vec::new();
    }
    cocycle_basis_of_faces(f, &k.faces_by_dim(), d)
}

/// Field ranks `dim H̃^d(K; Q)` without building the map.
pub fn rational_betti(k: &SimplicialComplex) -> Vec<usize> {
    reduced_cohomology_of_faces(&k.faces_by_dim(), CoefficientRing::Rationals).iter().map(|g| g.rank).collect()
}
