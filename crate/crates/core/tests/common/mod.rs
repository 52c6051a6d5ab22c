//! Brute-force oracles shared by the integration suites. None of them call
//! into the algorithms they check.
#![allow(dead_code)]

use std::collections::BTreeMap;

use momentangle::{CoefficientRing, Graph, HomologyGroup, SimplicialComplex};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Whether some vertex subset of size at least 4 induces a cycle.
pub fn has_induced_long_cycle(g: &Graph) -> bool {
    let m = g.m();
    let adj: Vec<u64> = (1..=m)
        .map(|v| (1..=m).filter(|&u| u != v && g.has_edge(u, v)).fold(0u64, |a, u| a | 1 << (u - 1)))
        .collect();
    (0u64..1 << m).filter(|s| s.count_ones() >= 4).any(|s| {
        let all_degree_two = (0..m).filter(|&v| s >> v & 1 == 1).all(|v| (adj[v as usize] & s).count_ones() == 2);
        if !all_degree_two {
            return false;
        }
        // connected 2-regular graph = one cycle
        let start = s.trailing_zeros();
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in 0..m {
                if frontier >> v & 1 == 1 {
                    next |= adj[v as usize] & s;
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == s
    })
}

/// Every face of `k` inside `within`, the empty face included, grouped by size.
pub fn faces_by_size(k: &SimplicialComplex, within: u64) -> Vec<Vec<u64>> {
    let facets: Vec<u64> = k.facets().iter().map(|f| f.to_vec().iter().fold(0u64, |a, v| a | 1 << (v - 1))).collect();
    let mut out = vec![Vec::new(); within.count_ones() as usize + 1];
    let mut sub = within;
    loop {
        if facets.iter().any(|f| sub & !f == 0) {
            out[sub.count_ones() as usize].push(sub);
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & within;
    }
    for v in &mut out {
        v.sort();
    }
    while out.len() > 1 && out.last().is_some_and(|v| v.is_empty()) {
        out.pop();
    }
    out
}

/// Boundary from faces of size `s` to faces of size `s - 1`, rows indexed by the smaller faces.
pub fn boundary(lower: &[u64], upper: &[u64]) -> Vec<Vec<i64>> {
    let mut mat = vec![vec![0i64; upper.len()]; lower.len()];
    for (c, &f) in upper.iter().enumerate() {
        let mut t = 0;
        for v in 0..64 {
            if f >> v & 1 == 1 {
                let r = lower.binary_search(&(f & !(1 << v))).expect("boundary face present");
                mat[r][c] = if t % 2 == 0 { 1 } else { -1 };
                t += 1;
            }
        }
    }
    mat
}

/// Bareiss determinant.
pub fn det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Invariant factors from determinantal divisors: `d_k` is the gcd of all
/// `k × k` minors and the `k`-th factor is `d_k / d_{k-1}`.
pub fn invariant_factors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut divisors = vec![BigInt::one()];
    for k in 1..=rows.min(cols) {
        let mut g = BigInt::zero();
        let col_sets = combinations(cols, k);
        'scan: for rs in combinations(rows, k) {
            for cs in &col_sets {
                let minor = rs.iter().map(|&r| cs.iter().map(|&c| BigInt::from(m[r][c])).collect()).collect();
                g = g.gcd(&det(minor));
                if g.is_one() {
                    break 'scan;
                }
            }
        }
        if g.is_zero() {
            break;
        }
        divisors.push(g);
    }
    divisors.windows(2).map(|w| &w[1] / &w[0]).collect()
}

fn rank_mod_p(m: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, piv);
        let inv = (1..p).find(|x| x * a[rank][c] % p == 1).unwrap();
        for r in 0..a.len() {
            if r != rank && a[r][c] != 0 {
                let f = a[r][c] * inv % p;
                for j in 0..cols {
                    a[r][j] = (a[r][j] - f * a[rank][j]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Fraction-free elimination; the rank is the number of pivots.
fn rank_rational(m: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(piv) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, piv);
        for r in rank + 1..a.len() {
            for j in c + 1..cols {
                a[r][j] = (&a[r][j] * &a[rank][c] - &a[r][c] * &a[rank][j]) / &prev;
            }
            a[r][c] = BigInt::zero();
        }
        prev = a[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Reduced cohomology of `K_within`, degree by degree, through reduced homology
/// and universal coefficients.
pub fn reduced_cohomology_oracle(k: &SimplicialComplex, within: u64, ring: CoefficientRing) -> Vec<HomologyGroup> {
    let faces = faces_by_size(k, within);
    let top = faces.len() - 1;
    // boundary[s] maps size s to size s-1, for s = 1..=top
    let mats: Vec<Vec<Vec<i64>>> =
        (0..=top).map(|s| if s == 0 { Vec::new() } else { boundary(&faces[s - 1], &faces[s]) }).collect();
    let rank = |s: usize| -> usize {
        if s == 0 || s > top {
            return 0;
        }
        match ring {
            CoefficientRing::PrimeField(p) => rank_mod_p(&mats[s], p as i64),
            _ => rank_rational(&mats[s]),
        }
    };
    let torsion = |s: usize| -> Vec<u64> {
        if s == 0 || s > top || ring != CoefficientRing::Integers {
            return Vec::new();
        }
        invariant_factors(&mats[s])
            .into_iter()
            .filter(|d| d.abs() > BigInt::one())
            .map(|d| u64::try_from(d.abs()).unwrap())
            .collect()
    };
    // Reduced homology in dimension d lives on faces of size d+1; cohomology
    // in degree d has free part of rank b_d and the torsion of H_{d-1}, which
    // is the torsion of the boundary from size d+1 to size d.
    let mut out = Vec::new();
    for d in 0..top {
        let s = d + 1;
        let free = faces[s].len() - rank(s) - rank(s + 1);
        let mut t = torsion(s);
        t.sort();
        out.push(HomologyGroup { rank: free, torsion: t });
    }
    while out.last().is_some_and(|g| g.rank == 0 && g.torsion.is_empty()) {
        out.pop();
    }
    out
}

/// Hochster's sum by brute force: `(i, 2j) -> group`, nonzero entries only.
pub fn betti_oracle(k: &SimplicialComplex, ring: CoefficientRing) -> BTreeMap<(usize, usize), HomologyGroup> {
    let mut out: BTreeMap<(usize, usize), HomologyGroup> = BTreeMap::new();
    out.insert((0, 0), HomologyGroup { rank: 1, torsion: vec![] });
    for within in 1u64..1 << k.m() {
        let n = within.count_ones() as usize;
        for (d, g) in reduced_cohomology_oracle(k, within, ring).into_iter().enumerate() {
            if g.rank == 0 && g.torsion.is_empty() {
                continue;
            }
            let e = out.entry((n - d - 1, 2 * n)).or_default();
            e.rank += g.rank;
            e.torsion.extend(g.torsion);
            e.torsion.sort();
        }
    }
    out
}

/// Total degree `p = 2j - i` ranks and torsion.
pub fn total_oracle(table: &BTreeMap<(usize, usize), HomologyGroup>) -> BTreeMap<usize, HomologyGroup> {
    let mut out: BTreeMap<usize, HomologyGroup> = BTreeMap::new();
    for (&(i, two_j), g) in table {
        let e = out.entry(two_j - i).or_default();
        e.rank += g.rank;
        e.torsion.extend(g.torsion.iter().copied());
        e.torsion.sort();
    }
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The bundled corpus restricted to flag complexes.
pub fn flag_corpus() -> Vec<(String, SimplicialComplex)> {
    momentangle::corpus::bundled().into_iter().filter(|(_, k)| k.is_flag()).collect()
}

/// Prime-power decomposition of `⊕ Z/d`, sorted; independent of how the
/// orders were grouped into invariant factors.
pub fn elementary_divisors(orders: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    for &d in orders {
        let mut n = d;
        let mut p = 2;
        while n > 1 {
            if n % p == 0 {
                let mut q = 1;
                while n % p == 0 {
                    n /= p;
                    q *= p;
                }
                out.push(q);
            }
            p += 1;
        }
    }
    out.sort();
    out
}

/// Same group up to isomorphism.
pub fn same_group(a: &HomologyGroup, b: &HomologyGroup) -> bool {
    a.rank == b.rank && elementary_divisors(&a.torsion) == elementary_divisors(&b.torsion)
}

/// A seeded sample of small complexes, ghost vertices included.
pub fn random_complexes(seed: u64, count: usize, max_m: u32) -> Vec<SimplicialComplex> {
    use rand::Rng;
    let mut rng = momentangle::corpus::rng(seed);
    (0..count)
        .map(|_| {
            let m = rng.gen_range(1..=max_m);
            momentangle::corpus::random_complex(m, &mut rng)
        })
        .collect()
}

/// A seeded sample of flag complexes with edge density drawn per instance.
pub fn random_flags(seed: u64, count: usize, max_m: u32) -> Vec<SimplicialComplex> {
    use rand::Rng;
    let mut rng = momentangle::corpus::rng(seed);
    (0..count)
        .map(|_| {
            let m = rng.gen_range(1..=max_m);
            let p = rng.gen_range(0.1..0.95);
            momentangle::corpus::random_flag(m, p, &mut rng)
        })
        .collect()
}
