//! Named test complexes and seeded random generators.
//!
//! [`bundled`] is the corpus shipped as JSON under `corpus/` in this crate;
//! the files are produced from it by the `export_corpus` example.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{Graph, SimplicialComplex, VertexSet};

pub fn pentagon() -> SimplicialComplex {
    SimplicialComplex::polygon(5).expect("static complex")
}

/// The minimal 6-vertex triangulation of the real projective plane.
pub fn rp2() -> SimplicialComplex {
    SimplicialComplex::from_facet_lists(
        6,
        &[
            &[1, 2, 3],
            &[1, 2, 6],
            &[1, 3, 5],
            &[1, 4, 5],
            &[1, 4, 6],
            &[2, 3, 4],
            &[2, 4, 5],
            &[2, 5, 6],
            &[3, 4, 6],
            &[3, 5, 6],
        ],
    )
    .expect("static complex")
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A complex generated by a handful of random faces; any dimension.
pub fn random_complex<R: Rng>(m: u32, rng: &mut R) -> SimplicialComplex {
    let count = rng.gen_range(1..=m as usize + 2);
    let faces = (0..count).map(|_| {
        let mut f = VertexSet::EMPTY;
        for v in 1..=m {
            if rng.gen_bool(0.45) {
                f.insert(v);
            }
        }
        f
    });
    SimplicialComplex::from_maximal_faces(m, faces.collect::<Vec<_>>()).expect("labels are in range")
}

/// Erdős–Rényi graph `G(m, p)`.
pub fn random_graph<R: Rng>(m: u32, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(m);
    for u in 1..=m {
        for v in u + 1..=m {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Clique complex of `G(m, p)`.
pub fn random_flag<R: Rng>(m: u32, p: f64, rng: &mut R) -> SimplicialComplex {
    random_graph(m, p, rng).clique_complex()
}

/// A random chordal graph: vertices arrive in a shuffled order and each one
/// is joined to a random subset of an existing clique.
pub fn random_chordal_graph<R: Rng>(m: u32, rng: &mut R) -> Graph {
    let mut order: Vec<u32> = (1..=m).collect();
    order.shuffle(rng);
    let mut g = Graph::new(m);
    for (k, &v) in order.iter().enumerate() {
        if k == 0 || rng.gen_bool(0.15) {
            continue;
        }
        let placed = &order[..k];
        let mut clique = VertexSet::singleton(*placed.choose(rng).unwrap());
        for &w in placed {
            if !clique.contains(w) && clique.is_subset(g.neighbors(w)) && rng.gen_bool(0.6) {
                clique.insert(w);
            }
        }
        for w in clique.iter() {
            if w == clique.min().unwrap() || rng.gen_bool(0.7) {
                g.add_edge(v, w);
            }
        }
    }
    g
}

pub fn random_tree<R: Rng>(m: u32, rng: &mut R) -> SimplicialComplex {
    let mut g = Graph::new(m);
    for v in 2..=m {
        g.add_edge(v, rng.gen_range(1..v));
    }
    g.clique_complex()
}

/// The bundled corpus, in a fixed order.
pub fn bundled() -> Vec<(String, SimplicialComplex)> {
    let mut out = vec![("pentagon".to_string(), pentagon())];
    for m in 4..=8 {
        out.push((format!("polygon-{m}"), SimplicialComplex::polygon(m).unwrap()));
    }
    for m in 2..=6 {
        out.push((format!("points-{m}"), SimplicialComplex::disjoint_points(m).unwrap()));
    }
    out.push(("rp2-6".to_string(), rp2()));
    for m in 3..=6 {
        out.push((format!("path-{m}"), SimplicialComplex::path(m).unwrap()));
    }
    out.push(("simplex-4".to_string(), SimplicialComplex::simplex(4).unwrap()));
    out.push(("sphere-boundary-4".to_string(), SimplicialComplex::simplex_boundary(4).unwrap()));
    let mut r = rng(2011);
    for k in 0..3 {
        out.push((format!("tree-{k}"), random_tree(5 + k, &mut r)));
    }
    let mut r = rng(4242);
    for k in 0..4 {
        out.push((format!("chordal-{k}"), random_chordal_graph(5 + k, &mut r).clique_complex()));
    }
    let mut r = rng(9001);
    let mut k = 0;
    while k < 4 {
        let g = random_graph(6 + k as u32 % 3, 0.5, &mut r);
        if !crate::golod::is_chordal(&g) {
            out.push((format!("nonchordal-{k}"), g.clique_complex()));
            k += 1;
        }
    }
    out
}
