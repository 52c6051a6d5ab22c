mod common;

use common::*;
use momentangle::golod::{is_chordal, lex_bfs, perfect_elimination_ordering};
use momentangle::snf::smith_normal_form_i64;
use momentangle::{bigraded_betti, corpus, reduced_cohomology, CoefficientRing, Graph, Limits, VertexSet};
use num_bigint::BigInt;
use num_traits::Signed;
use rand::Rng;

/// The determinantal-divisor oracle is exponential, so integral checks stay at `m ≤ 5`.
fn rings(m: u32) -> Vec<CoefficientRing> {
    let mut out = vec![CoefficientRing::Rationals, CoefficientRing::prime(2).unwrap(), CoefficientRing::prime(3).unwrap()];
    if m <= 5 {
        out.push(CoefficientRing::Integers);
    }
    out
}

/// RP² has six vertices but few enough faces for the integral oracle.
fn integral_extra(k: &momentangle::SimplicialComplex) -> Option<CoefficientRing> {
    (k.m() > 5 && *k == corpus::rp2()).then_some(CoefficientRing::Integers)
}

#[test]
fn reduced_cohomology_matches_brute_force() {
    let mut sample = random_complexes(11, 60, 6);
    sample.push(corpus::rp2());
    for k in &sample {
        for ring in rings(k.m()).into_iter().chain(integral_extra(k)) {
            let got = reduced_cohomology(k, ring).unwrap();
            let want = reduced_cohomology_oracle(k, (1u64 << k.m()) - 1, ring);
            for (d, g) in want.iter().enumerate() {
                assert!(same_group(&got.get(&d).cloned().unwrap_or_default(), g), "{k:?} {ring} degree {d}");
            }
            assert!(got.iter().all(|(d, g)| g.is_zero() || *d < want.len()));
        }
    }
}

#[test]
fn bigraded_betti_matches_brute_force_sum() {
    let mut sample = random_complexes(12, 40, 6);
    sample.push(corpus::rp2());
    sample.push(corpus::pentagon());
    for k in &sample {
        for ring in rings(k.m()).into_iter().chain(integral_extra(k)) {
            let table = bigraded_betti(k, ring, &Limits::default()).unwrap();
            let want = betti_oracle(k, ring);
            assert_eq!(table.entries().len(), want.len(), "{k:?} {ring}");
            for (key, g) in &want {
                assert!(same_group(&table.entry(key.0, key.1), g), "{k:?} {ring} {key:?}");
            }
            let totals = total_oracle(&want);
            for (p, g) in table.total() {
                assert!(same_group(&g, &totals[&p]));
            }
        }
    }
}

#[test]
fn rp2_oracle_agrees_with_golden_groups() {
    let totals = total_oracle(&betti_oracle(&corpus::rp2(), CoefficientRing::Integers));
    let rendered: Vec<String> = totals.iter().map(|(p, g)| format!("{p}:{g}")).collect();
    assert_eq!(rendered, ["0:Z", "5:Z^10", "6:Z^15", "7:Z^6", "9:Z/2"]);
}

#[test]
fn smith_form_matches_determinantal_divisors() {
    let mut rng = corpus::rng(5);
    for _ in 0..300 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        let m: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-6..=6)).collect()).collect();
        let snf = smith_normal_form_i64(&m);
        let want = invariant_factors(&m);
        let got: Vec<BigInt> = snf.invariant_factors.iter().map(|d| d.abs()).collect();
        assert_eq!(got, want, "{m:?}");
    }
}

#[test]
fn chordality_matches_induced_cycle_search() {
    let mut rng = corpus::rng(6);
    for _ in 0..400 {
        let m = rng.gen_range(1..=9);
        let g = corpus::random_graph(m, rng.gen_range(0.2..0.9), &mut rng);
        let chordal = is_chordal(&g);
        assert_eq!(chordal, !has_induced_long_cycle(&g), "{:?}", g.edges());
        assert_eq!(perfect_elimination_ordering(&g).is_some(), chordal);
        let mut order = lex_bfs(&g);
        order.sort();
        assert_eq!(order, (1..=m).collect::<Vec<_>>());
    }
    assert!(has_induced_long_cycle(&Graph::cycle(4)));
    assert!(!has_induced_long_cycle(&Graph::complete(6)));
}

#[test]
fn full_subcomplex_faces_agree() {
    for k in random_complexes(13, 30, 7) {
        for b in 1u64..1 << k.m() {
            let mine: Vec<usize> = k.faces_within(VertexSet::from_bits(b)).iter().map(|v| v.len()).collect();
            let brute = faces_by_size(&k, b);
            // brute force counts the empty face at size 0
            let brute: Vec<usize> = brute[1..].iter().map(|v| v.len()).collect();
            assert_eq!(mine, brute);
        }
    }
}
