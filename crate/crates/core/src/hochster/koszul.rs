//! Bigraded Betti numbers from the Koszul complex `Λ[u_1..u_m] ⊗ k[K]`.
//!
//! This path is independent of full subcomplexes and serves as a cross-check.
//! The complex splits over multidegrees. A basis monomial `u_A v^b` has
//! multidegree `a = 1_A + b`; write `S = supp(a)` and `M = {i : a_i ≥ 2}`.
//! Then `A ⊆ S`, every exponent of `b` is forced, and `v^b ≠ 0` in `k[K]`
//! iff `S \ (A \ M)` is a face. The component depends only on `(S, M)`, so
//! each pair is computed once and weighted by the number of multidegrees
//! with `|a| = j ≤ m`.

use rayon::prelude::*;

use crate::complex::{SimplicialComplex, VertexSet};
use crate::error::{Error, Result};
use crate::field::{lift_matrix, rank, rational_rank};
use crate::homology::{with_field, CoefficientRing, HomologyGroup};
use crate::Limits;

use super::{check_bound, BettiTable};

/// `dim H_i` of the `(S, M)` component, indexed by `i = |A|`.
fn component_homology(k: &SimplicialComplex, s: VertexSet, m: VertexSet, ring: CoefficientRing) -> Vec<usize> {
    let mut basis: Vec<Vec<VertexSet>> = vec![Vec::new(); s.len() + 1];
    for a in s.subsets() {
        if k.is_face(s.difference(a.difference(m))) {
            basis[a.len()].push(a);
        }
    }
    // d(u_A v^b) = Σ_t (-1)^t u_{A \ a_t} v^{b + e_{a_t}}
    let differential = |i: usize| -> Vec<Vec<i64>> {
        let lower = &basis[i - 1];
        let mut mat = vec![vec![0i64; basis[i].len()]; lower.len()];
        for (col, &a) in basis[i].iter().enumerate() {
            for (t, x) in a.iter().enumerate() {
                let mut smaller = a;
                smaller.remove(x);
                if let Ok(row) = lower.binary_search(&smaller) {
                    mat[row][col] = if t % 2 == 0 { 1 } else { -1 };
                }
            }
        }
        mat
    };
    let field_rank = |mat: &[Vec<i64>]| -> usize {
        if mat.is_empty() || mat[0].is_empty() {
            return 0;
        }
        match ring {
            CoefficientRing::Rationals => rational_rank(mat),
            _ => with_field!(ring, |f| rank(f, &lift_matrix(f, mat))),
        }
    };
    // ranks[i] = rank of d_i : C_i → C_{i-1}; d_0 = 0 and d_{top+1} = 0.
    let top = s.len();
    let mut ranks = vec![0usize; top + 2];
    for (i, r) in ranks.iter_mut().enumerate().take(top + 1).skip(1) {
        *r = field_rank(&differential(i));
    }
    (0..=top).map(|i| basis[i].len() - ranks[i] - ranks[i + 1]).collect()
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, t| acc * (n - t) / (t + 1))
}

/// Number of multidegrees with support `S`, multi-set `M` and `|a| = j`.
fn multidegree_count(s: usize, m: usize, j: usize) -> usize {
    if m == 0 {
        return usize::from(j == s);
    }
    if j < s + m {
        return 0;
    }
    binomial(j - s - 1, m - 1)
}

/// `β^{-i,2j}(k[K])` computed from the Koszul complex, over a field.
pub fn koszul_betti(k: &SimplicialComplex, ring: CoefficientRing, limits: &Limits) -> Result<BettiTable> {
    if !ring.is_field() {
        return Err(Error::NotAField { operation: "koszul_betti", ring: ring.to_string() });
    }
    let n = k.m();
    check_bound("koszul_betti", n, limits.koszul_m)?;
    let pairs: Vec<(VertexSet, VertexSet)> = VertexSet::full(n)
        .subsets()
        .flat_map(|s| s.subsets().map(move |m| (s, m)))
        .collect();
    let parts: Vec<Vec<((usize, usize), HomologyGroup)>> = pairs
        .into_par_iter()
        .map(|(s, m)| {
            let homology = component_homology(k, s, m, ring);
            let mut out = Vec::new();
            for (i, &h) in homology.iter().enumerate() {
                if h == 0 {
                    continue;
                }
                for j in s.len()..=n as usize {
                    let w = multidegree_count(s.len(), m.len(), j);
                    if w > 0 {
                        out.push(((i, 2 * j), HomologyGroup::free(h * w)));
                    }
                }
            }
            out
        })
        .collect();
    Ok(BettiTable::from_parts(ring, n, parts.into_iter().flatten()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::hochster::bigraded_betti;

    #[test]
    fn counts() {
        assert_eq!(multidegree_count(2, 0, 2), 1);
        assert_eq!(multidegree_count(2, 0, 3), 0);
        // a = (2,1), (3,1), ... with M = {1}
        assert_eq!(multidegree_count(2, 1, 3), 1);
        assert_eq!(multidegree_count(2, 1, 5), 1);
        // M = {1,2}, j = 5: (3,2) and (2,3)
        assert_eq!(multidegree_count(2, 2, 5), 2);
    }

    #[test]
    fn pentagon_matches_hochster() {
        let l = Limits::default();
        let k = corpus::pentagon();
        assert_eq!(
            koszul_betti(&k, CoefficientRing::Rationals, &l).unwrap(),
            bigraded_betti(&k, CoefficientRing::Rationals, &l).unwrap()
        );
    }

    #[test]
    fn rp2_over_two_fields() {
        let l = Limits::default();
        let k = corpus::rp2();
        for ring in [CoefficientRing::PrimeField(2), CoefficientRing::Rationals] {
            assert_eq!(koszul_betti(&k, ring, &l).unwrap(), bigraded_betti(&k, ring, &l).unwrap());
        }
    }

    #[test]
    fn refusals() {
        let l = Limits { koszul_m: 4, ..Limits::default() };
        let k = corpus::pentagon();
        assert!(matches!(koszul_betti(&k, CoefficientRing::Rationals, &l), Err(Error::SizeBound { .. })));
        assert!(matches!(koszul_betti(&k, CoefficientRing::Integers, &Limits::default()), Err(Error::NotAField { .. })));
    }
}
