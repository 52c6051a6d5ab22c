mod common;

use momentangle::census::canonical_sets;
use momentangle::golod::{is_chordal, single_face_intersections};
use momentangle::hochster::has_trivial_products;
use momentangle::io::{parse_complex, to_json, to_text};
use momentangle::loops::{generator_count_check, loop_zk_series};
use momentangle::{
    bigraded_betti, is_golod, koszul_betti, maximal_face_order, wedge_profile, CoefficientRing, Graph, Limits,
    Polynomial, SimplicialComplex, VertexSet,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn complex(max_m: u32) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_m).prop_flat_map(|m| {
        prop::collection::vec(0u64..1 << m, 1..=m as usize + 2).prop_map(move |faces| {
            SimplicialComplex::from_maximal_faces(m, faces.into_iter().map(VertexSet::from_bits)).unwrap()
        })
    })
}

fn flag(max_m: u32) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_m).prop_flat_map(|m| {
        let pairs = (m * m.saturating_sub(1) / 2) as usize;
        prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(m);
            let mut it = bits.into_iter();
            for u in 1..=m {
                for v in u + 1..=m {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g.clique_complex()
        })
    })
}

fn q() -> CoefficientRing {
    CoefficientRing::Rationals
}

fn limits() -> Limits {
    Limits::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn file_formats_round_trip(k in complex(9)) {
        prop_assert_eq!(parse_complex(&to_json(&k)).unwrap(), k.clone());
        prop_assert_eq!(parse_complex(&to_text(&k)).unwrap(), k);
    }

    #[test]
    fn h_vector_sums_to_top_face_count(k in complex(8)) {
        let fh = k.fh_vector();
        let total: i64 = fh.h.iter().sum();
        prop_assert_eq!(total, *fh.f.last().unwrap_or(&1) as i64);
    }

    #[test]
    fn euler_characteristic_of_zk_vanishes(k in complex(7)) {
        let t = bigraded_betti(&k, q(), &limits()).unwrap();
        let chi: i64 = t.total_ranks().iter().enumerate().map(|(p, &b)| if p % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        let full_simplex = k.facets() == [VertexSet::full(k.m())];
        prop_assert_eq!(chi, if full_simplex { 1 } else { 0 });
    }

    #[test]
    fn hochster_matches_koszul(k in complex(6)) {
        for ring in [q(), CoefficientRing::prime(2).unwrap()] {
            prop_assert_eq!(bigraded_betti(&k, ring, &limits()).unwrap(), koszul_betti(&k, ring, &limits()).unwrap());
        }
    }

    #[test]
    fn universal_coefficients_bound(k in complex(6)) {
        let z = bigraded_betti(&k, CoefficientRing::Integers, &limits()).unwrap();
        let rq = bigraded_betti(&k, q(), &limits()).unwrap().ranks();
        prop_assert_eq!(&z.ranks(), &rq);
        for p in [2, 3] {
            let rp = bigraded_betti(&k, CoefficientRing::prime(p).unwrap(), &limits()).unwrap().ranks();
            for (key, r) in &rq {
                prop_assert!(rp.get(key).copied().unwrap_or(0) >= *r);
            }
            if !z.has_torsion() {
                prop_assert_eq!(&rp, &rq);
            }
        }
    }

    #[test]
    fn chordal_iff_trivial_products(k in flag(7)) {
        let chordal = is_chordal(&k.one_skeleton());
        let cert = has_trivial_products(&k, &CoefficientRing::default_fields(), &limits()).unwrap();
        prop_assert_eq!(cert.trivial, chordal);
        prop_assert_eq!(cert.witness.is_none(), chordal);
        prop_assert_eq!(wedge_profile(&k, &limits()).unwrap().is_some(), chordal);
    }

    #[test]
    fn wedge_matches_betti_numbers(k in flag(7)) {
        if let Some(w) = wedge_profile(&k, &limits()).unwrap() {
            let t = bigraded_betti(&k, CoefficientRing::Integers, &limits()).unwrap();
            prop_assert!(!t.has_torsion());
            let ranks = t.total_ranks();
            for (p, &b) in ranks.iter().enumerate().skip(1) {
                prop_assert_eq!(w.sphere_counts.get(&p).copied().unwrap_or(0), b);
            }
            prop_assert!(w.sphere_counts.keys().all(|&d| d as u32 <= k.m() + 1));
        }
    }

    #[test]
    fn generator_counts_follow_h0(k in flag(7)) {
        prop_assert!(generator_count_check(&k, &limits()).unwrap());
    }

    #[test]
    fn loop_series_inverts_denominator(k in flag(8)) {
        let n = 2 * k.m() as usize + 2;
        let s = loop_zk_series(&k, n).unwrap();
        let product = Polynomial::new(s.expansion.clone()).mul(&s.denominator);
        for d in 0..=n {
            prop_assert_eq!(product.coeff(d), BigInt::from((d == 0) as i64));
        }
        prop_assert!(s.expansion.iter().all(|c| *c >= BigInt::from(0)));
    }

    #[test]
    fn golod_is_closed_under_deletion(k in flag(7)) {
        let fields = CoefficientRing::default_fields();
        if is_golod(&k, &fields, &limits()).unwrap().golod_over_all() && k.m() > 1 {
            for v in 1..=k.m() {
                let d = k.vertex_deletion(v).unwrap();
                prop_assert!(is_golod(&d, &fields, &limits()).unwrap().golod_over_all());
            }
        }
    }

    #[test]
    fn facet_orders_have_single_face_intersections(k in complex(6)) {
        if let Ok(Some(order)) = maximal_face_order(&k, &limits()) {
            prop_assert!(single_face_intersections(&order));
            let mut sorted = order.clone();
            sorted.sort();
            prop_assert_eq!(sorted.as_slice(), k.facets());
        }
    }

    #[test]
    fn canonical_form_ignores_labels(k in complex(7), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let m = k.m();
        let mut perm: Vec<u32> = (0..m).collect();
        perm.shuffle(&mut momentangle::corpus::rng(seed));
        let relabel = |f: &VertexSet| f.iter().fold(0u64, |a, v| a | 1 << perm[(v - 1) as usize]);
        let a: Vec<u64> = k.facets().iter().map(|f| f.bits()).collect();
        let b: Vec<u64> = k.facets().iter().map(relabel).collect();
        prop_assert_eq!(canonical_sets(m, &a), canonical_sets(m, &b));
    }
}
