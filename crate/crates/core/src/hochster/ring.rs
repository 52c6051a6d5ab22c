//! Products in `H^*(Z_K)` through full subcomplexes.
//!
//! For disjoint `I, J` the product `H̃^a(K_I) ⊗ H̃^b(K_J) → H̃^{a+b+1}(K_{I∪J})`
//! is induced by the join inclusion `K_{I∪J} ⊆ K_I * K_J`. On a cochain level
//! a simplex `σ` of `K_{I∪J}` splits as `σ_I ⊔ σ_J`, and
//!
//! `(α·β)(σ) = ε · sh(σ_I, σ_J) · α(σ_I) · β(σ_J)`
//!
//! where `sh(A, B) = ±1` is the sign of the permutation sorting the list `A`
//! followed by `B`, and `ε = sh(I, J) · (-1)^{|J|(a+1)}`. The correction `ε`
//! makes the product graded-commutative and associative in the total degree
//! `|I| + a + 1`. Products of classes with overlapping supports vanish.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::field::{solve, Field};
use crate::homology::{coboundary_image, cocycle_basis_of_faces, with_field, CoefficientRing};
use crate::Limits;

use super::check_bound;

/// A cochain representing a class in `H̃^degree(K_support)`.
///
/// `cochain` is indexed by the `degree`-simplices of `K_support` in
/// ascending bitmask order (original vertex labels).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass<E> {
    pub support: VertexSet,
    pub degree: usize,
    pub cochain: Vec<E>,
}

impl<E> CohomologyClass<E> {
    /// Degree of the class in `H^*(Z_K)`.
    pub fn total_degree(&self) -> usize {
        self.support.len() + self.degree + 1
    }
}

/// Face lists and a cocycle basis per degree for one full subcomplex.
struct Local<E> {
    faces: Vec<Vec<VertexSet>>,
    basis: Vec<Vec<Vec<E>>>,
}

impl<E: Clone> Local<E> {
    fn new<F: Field<Elem = E>>(f: &F, k: &SimplicialComplex, support: VertexSet) -> Self {
        let faces = k.faces_within(support);
        let basis = (0..faces.len()).map(|d| cocycle_basis_of_faces(f, &faces, d)).collect();
        Local { faces, basis }
    }

    fn is_acyclic(&self) -> bool {
        self.basis.iter().all(|b| b.is_empty())
    }

    fn basis_in(&self, d: usize) -> &[Vec<E>] {
        self.basis.get(d).map_or(&[], |b| b.as_slice())
    }
}

fn nonempty(support: VertexSet) -> Result<()> {
    if support.is_empty() {
        Err(Error::DegreeMismatch("classes must have nonempty support; the unit is implicit".into()))
    } else {
        Ok(())
    }
}

/// Cocycles representing a basis of `H̃^*(K_support)`, by degree then index.
pub fn basis_classes<F: Field>(k: &SimplicialComplex, support: VertexSet, f: &F) -> Result<Vec<CohomologyClass<F::Elem>>> {
    nonempty(support)?;
    if !support.is_subset(k.vertices()) {
        return Err(Error::DegreeMismatch(format!("support {support} is not a set of vertices")));
    }
    let local = Local::new(f, k, support);
    Ok(local
        .basis
        .into_iter()
        .enumerate()
        .flat_map(|(degree, b)| b.into_iter().map(move |cochain| CohomologyClass { support, degree, cochain }))
        .collect())
}

fn check_shape<E>(local: &Local<E>, class: &CohomologyClass<E>) -> Result<()> {
    let expected = local.faces.get(class.degree).map_or(0, |c| c.len());
    if class.cochain.len() != expected {
        return Err(Error::DegreeMismatch(format!(
            "a {}-cochain on K_{} has {} entries, got {}",
            class.degree,
            class.support,
            expected,
            class.cochain.len()
        )));
    }
    Ok(())
}

/// Coordinates of a cocycle in a fixed cohomology basis (the basis of
/// [`basis_classes`] in that degree).
fn coordinates<F: Field>(f: &F, local: &Local<F::Elem>, d: usize, cocycle: &[F::Elem]) -> Result<Vec<F::Elem>> {
    let basis = local.basis_in(d);
    if cocycle.is_empty() {
        return Ok(Vec::new());
    }
    let mut columns = coboundary_image(f, &local.faces, d);
    let n_image = columns.len();
    columns.extend(basis.iter().cloned());
    let x = solve(f, &columns, cocycle).ok_or_else(|| Error::Inconsistent(format!("cochain in degree {d} is not a cocycle")))?;
    Ok(x[n_image..].to_vec())
}

pub fn class_coordinates<F: Field>(k: &SimplicialComplex, class: &CohomologyClass<F::Elem>, f: &F) -> Result<Vec<F::Elem>> {
    nonempty(class.support)?;
    let local = Local::new(f, k, class.support);
    check_shape(&local, class)?;
    coordinates(f, &local, class.degree, &class.cochain)
}

/// Parity of the shuffle sorting `a` followed by `b`.
fn shuffle_is_odd(a: VertexSet, b: VertexSet) -> bool {
    b.iter().map(|y| (a.bits() >> y).count_ones()).sum::<u32>() % 2 == 1
}

fn product_cochain<F: Field>(
    f: &F,
    (i, a, left_faces, alpha): (VertexSet, usize, &[VertexSet], &[F::Elem]),
    (j, b, right_faces, beta): (VertexSet, usize, &[VertexSet], &[F::Elem]),
    target: &[VertexSet],
) -> Vec<F::Elem> {
    let eps_odd = shuffle_is_odd(i, j) ^ (j.len() * (a + 1) % 2 == 1);
    target
        .iter()
        .map(|&sigma| {
            let (si, sj) = (sigma.intersection(i), sigma.intersection(j));
            if si.len() != a + 1 || sj.len() != b + 1 {
                return f.zero();
            }
            let x = &alpha[left_faces.binary_search(&si).expect("faces of a face")];
            let y = &beta[right_faces.binary_search(&sj).expect("faces of a face")];
            let v = f.mul(x, y);
            if eps_odd ^ shuffle_is_odd(si, sj) {
                f.neg(&v)
            } else {
                v
            }
        })
        .collect()
}

fn combine<F: Field>(f: &F, basis: &[Vec<F::Elem>], coords: &[F::Elem], len: usize) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); len];
    for (c, z) in coords.iter().zip(basis) {
        for (o, x) in out.iter_mut().zip(z) {
            *o = f.add(o, &f.mul(c, x));
        }
    }
    out
}

/// The product of two classes, returned as the canonical representative
/// (the combination of basis cocycles) of the product class.
pub fn cup_product<F: Field>(
    k: &SimplicialComplex,
    alpha: &CohomologyClass<F::Elem>,
    beta: &CohomologyClass<F::Elem>,
    f: &F,
) -> Result<CohomologyClass<F::Elem>> {
    nonempty(alpha.support)?;
    nonempty(beta.support)?;
    let union = alpha.support.union(beta.support);
    if !union.is_subset(k.vertices()) {
        return Err(Error::DegreeMismatch(format!("support {union} is not a set of vertices")));
    }
    let degree = alpha.degree + beta.degree + 1;
    let (la, lb) = (Local::new(f, k, alpha.support), Local::new(f, k, beta.support));
    check_shape(&la, alpha)?;
    check_shape(&lb, beta)?;
    let lu = Local::new(f, k, union);
    let len = lu.faces.get(degree).map_or(0, |c| c.len());
    if !alpha.support.is_disjoint(beta.support) || len == 0 {
        return Ok(CohomologyClass { support: union, degree, cochain: vec![f.zero(); len] });
    }
    let raw = product_cochain(
        f,
        (alpha.support, alpha.degree, &la.faces[alpha.degree], &alpha.cochain),
        (beta.support, beta.degree, &lb.faces[beta.degree], &beta.cochain),
        &lu.faces[degree],
    );
    let coords = coordinates(f, &lu, degree, &raw)?;
    Ok(CohomologyClass { support: union, degree, cochain: combine(f, lu.basis_in(degree), &coords, len) })
}

/// A basis class named by support, cohomological degree on `K_support` and
/// index within the basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRef {
    pub support: VertexSet,
    pub degree: usize,
    pub index: usize,
    pub total_degree: usize,
}

impl ClassRef {
    fn new(support: VertexSet, degree: usize, index: usize) -> Self {
        ClassRef { support, degree, index, total_degree: support.len() + degree + 1 }
    }
}

/// Two basis classes with a nonzero product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductWitness {
    pub ring: CoefficientRing,
    pub left: ClassRef,
    pub right: ClassRef,
    /// Coordinates of the product in the basis of `H̃^*(K_{I∪J})`.
    pub product: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldVerdict {
    pub ring: CoefficientRing,
    pub trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RingCertificate {
    /// All products of positive-degree classes vanish over every field checked.
    pub trivial: bool,
    pub per_field: Vec<FieldVerdict>,
    /// The first nonzero product found, scanning fields in the given order.
    pub witness: Option<ProductWitness>,
}

fn first_nonzero_product<F: Field>(k: &SimplicialComplex, f: &F, ring: CoefficientRing) -> Option<ProductWitness> {
    let m = k.m();
    let n = 1u64 << m;
    let locals: Vec<Option<Local<F::Elem>>> = (0..n)
        .into_par_iter()
        .map(|bits| {
            if bits == 0 {
                return None;
            }
            let local = Local::new(f, k, VertexSet::from_bits(bits));
            (!local.is_acyclic()).then_some(local)
        })
        .collect();
    let full = VertexSet::full(m);
    (1..n).into_par_iter().find_map_first(|ib| {
        let li = locals[ib as usize].as_ref()?;
        let i = VertexSet::from_bits(ib);
        let rest = full.difference(i);
        let mut js: Vec<VertexSet> = rest.subsets().filter(|j| j.bits() > ib).collect();
        js.sort();
        for j in js {
            let Some(lj) = locals[j.bits() as usize].as_ref() else {
                continue;
            };
            let u = i.union(j);
            let Some(lu) = locals[u.bits() as usize].as_ref() else {
                continue;
            };
            for (a, ba) in li.basis.iter().enumerate() {
                for (b, bb) in lj.basis.iter().enumerate() {
                    let d = a + b + 1;
                    if ba.is_empty() || bb.is_empty() || lu.basis_in(d).is_empty() {
                        continue;
                    }
                    for (x, alpha) in ba.iter().enumerate() {
                        for (y, beta) in bb.iter().enumerate() {
                            let raw = product_cochain(
                                f,
                                (i, a, &li.faces[a], alpha),
                                (j, b, &lj.faces[b], beta),
                                &lu.faces[d],
                            );
                            let coords = coordinates(f, lu, d, &raw).expect("a product of cocycles is a cocycle");
                            if coords.iter().any(|c| !f.is_zero(c)) {
                                return Some(ProductWitness {
                                    ring,
                                    left: ClassRef::new(i, a, x),
                                    right: ClassRef::new(j, b, y),
                                    product: coords.iter().map(|c| f.render(c)).collect(),
                                });
                            }
                        }
                    }
                }
            }
        }
        None
    })
}

/// Checks whether every product of positive-degree classes in `H^*(Z_K; F)`
/// vanishes, for each field in `fields`.
///
/// Only pairs `I < J` of disjoint supports are examined (bitmask order), and
/// pairs whose target `H̃^*(K_{I∪J})` vanishes in the relevant degree are
/// skipped.
pub fn has_trivial_products(k: &SimplicialComplex, fields: &[CoefficientRing], limits: &Limits) -> Result<RingCertificate> {
    check_bound("has_trivial_products", k.m(), limits.exhaustive_m)?;
    let mut per_field = Vec::with_capacity(fields.len());
    let mut witness = None;
    for &ring in fields {
        if !ring.is_field() {
            return Err(Error::NotAField { operation: "has_trivial_products", ring: ring.to_string() });
        }
        let w = with_field!(ring, |f| first_nonzero_product(k, f, ring));
        per_field.push(FieldVerdict { ring, trivial: w.is_none() });
        if witness.is_none() {
            witness = w;
        }
    }
    Ok(RingCertificate { trivial: per_field.iter().all(|v| v.trivial), per_field, witness })
}
