//! Finite simplicial complexes on the vertex set `[m] = {1, ..., m}`.
//!
//! Faces are bitmasks over vertex labels and a complex is stored by its
//! maximal faces only. Every singleton is a face and the empty set is
//! always a face. All list outputs are in ascending bitmask order.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use log::warn;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest vertex count a single-word mask can hold.
pub const MAX_VERTICES: u32 = 64;

/// A subset of `[m]`, bit `v - 1` standing for vertex `v`.
#[derive(Copy, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., m}`.
    pub fn full(m: u32) -> Self {
        if m >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << m) - 1)
        }
    }

    pub fn singleton(v: u32) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    /// Builds a set from 1-based labels, rejecting labels outside `1..=64`.
    pub fn from_labels<I: IntoIterator<Item = u32>>(labels: I) -> Result<Self> {
        let mut bits = 0u64;
        for v in labels {
            if v == 0 || v > MAX_VERTICES {
                return Err(Error::VertexOutOfRange { label: v, m: MAX_VERTICES });
            }
            bits |= 1u64 << (v - 1);
        }
        Ok(VertexSet(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: u32) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn insert(&mut self, v: u32) {
        self.0 |= 1u64 << (v - 1);
    }

    pub fn remove(&mut self, v: u32) {
        self.0 &= !(1u64 << (v - 1));
    }

    pub fn min(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    pub fn max(self) -> Option<u32> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros())
    }

    /// Vertex labels in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<u32> {
        self.iter().collect()
    }

    /// Number of elements of `self` strictly below `v`.
    pub fn count_below(self, v: u32) -> usize {
        (self.0 & ((1u64 << (v - 1)) - 1)).count_ones() as usize
    }

    /// Renames the elements of `self ⊆ within` to `1..=|within|`, preserving order.
    pub fn compress(self, within: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for (k, v) in within.iter().enumerate() {
            if self.contains(v) {
                out |= 1u64 << k;
            }
        }
        VertexSet(out)
    }

    /// Inverse of [`VertexSet::compress`].
    pub fn expand(self, within: VertexSet) -> VertexSet {
        let mut out = 0u64;
        for (k, v) in within.iter().enumerate() {
            if self.0 & (1u64 << k) != 0 {
                out |= 1u64 << (v - 1);
            }
        }
        VertexSet(out)
    }

    /// All subsets of `self`, the empty set included, in ascending bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask { None } else { Some(((cur | !mask).wrapping_add(1)) & mask) };
            Some(VertexSet(cur))
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let labels = Vec::<u32>::deserialize(d)?;
        VertexSet::from_labels(labels).map_err(serde::de::Error::custom)
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Keeps the inclusion-maximal members, sorted by bitmask.
fn maximal_members(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| s.is_subset(*k)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// A finite simplicial complex on `[m]`, immutable once built.
///
/// The complex with no vertices at all exists only as the restriction to
/// the empty vertex set; see [`SimplicialComplex::is_void`].
#[derive(Clone)]
pub struct SimplicialComplex {
    m: u32,
    facets: Vec<VertexSet>,
    flag: OnceLock<bool>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(m={}, facets=[", self.m)?;
        for (k, s) in self.facets.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        f.write_str("])")
    }
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces` on `[m]`.
    ///
    /// Vertices that appear in no face are added as singleton faces (with a
    /// logged warning), so every `{i}` is a face of the result.
    pub fn from_maximal_faces<I: IntoIterator<Item = VertexSet>>(m: u32, faces: I) -> Result<Self> {
        if m == 0 {
            return Err(Error::NoVertices);
        }
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices { m, width: MAX_VERTICES });
        }
        let full = VertexSet::full(m);
        let mut sets = Vec::new();
        let mut covered = VertexSet::EMPTY;
        for f in faces {
            if !f.is_subset(full) {
                let label = f.difference(full).min().unwrap_or(0);
                return Err(Error::VertexOutOfRange { label, m });
            }
            covered = covered.union(f);
            if !f.is_empty() {
                sets.push(f);
            }
        }
        let ghosts = full.difference(covered);
        if !ghosts.is_empty() {
            warn!("vertices {ghosts} lie in no listed face; adding them as isolated points");
        }
        sets.extend(ghosts.iter().map(VertexSet::singleton));
        Ok(SimplicialComplex { m, facets: maximal_members(sets), flag: OnceLock::new() })
    }

    /// Convenience constructor from label lists, e.g. `&[&[1, 2], &[2, 3]]`.
    pub fn from_facet_lists(m: u32, faces: &[&[u32]]) -> Result<Self> {
        let sets = faces
            .iter()
            .map(|f| {
                f.iter()
                    .try_fold(VertexSet::EMPTY, |acc, &v| {
                        if v == 0 || v > m {
                            Err(Error::VertexOutOfRange { label: v, m })
                        } else {
                            Ok(acc.union(VertexSet::singleton(v)))
                        }
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_maximal_faces(m, sets)
    }

    /// The complex on no vertices, whose only face is the empty set.
    pub fn void() -> Self {
        SimplicialComplex { m: 0, facets: Vec::new(), flag: OnceLock::new() }
    }

    /// Full simplex on `[m]`.
    pub fn simplex(m: u32) -> Result<Self> {
        Self::from_maximal_faces(m, [VertexSet::full(m)])
    }

    /// `m` isolated vertices.
    pub fn disjoint_points(m: u32) -> Result<Self> {
        Self::from_maximal_faces(m, std::iter::empty())
    }

    /// Boundary of the `m`-gon, vertices in cyclic order `1, 2, ..., m`.
    pub fn polygon(m: u32) -> Result<Self> {
        if m < 3 {
            return Err(Error::Inconsistent(format!("a polygon needs at least 3 vertices, got {m}")));
        }
        let edges = (1..=m).map(|v| VertexSet::singleton(v).union(VertexSet::singleton(v % m + 1)));
        Self::from_maximal_faces(m, edges)
    }

    /// Path `1 - 2 - ... - m`.
    pub fn path(m: u32) -> Result<Self> {
        let edges = (1..m).map(|v| VertexSet::singleton(v).union(VertexSet::singleton(v + 1)));
        Self::from_maximal_faces(m, edges)
    }

    /// Boundary of the simplex on `[m]`.
    pub fn simplex_boundary(m: u32) -> Result<Self> {
        let full = VertexSet::full(m);
        Self::from_maximal_faces(m, (1..=m).map(|v| full.difference(VertexSet::singleton(v))))
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.m)
    }

    /// Maximal faces in ascending bitmask order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// True only for the complex on zero vertices.
    pub fn is_void(&self) -> bool {
        self.m == 0
    }

    /// `dim K`, or `-1` for the void complex.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| f.len() as i32 - 1).max().unwrap_or(-1)
    }

    pub fn is_face(&self, face: VertexSet) -> bool {
        face.is_empty() || self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// All nonempty faces grouped by dimension, each group in ascending bitmask order.
    pub fn faces_by_dim(&self) -> Vec<Vec<VertexSet>> {
        self.faces_within(self.vertices())
    }

    /// Nonempty faces of the full subcomplex `K_I`, in original labels,
    /// grouped by dimension.
    pub fn faces_within(&self, within: VertexSet) -> Vec<Vec<VertexSet>> {
        let mut seen = BTreeSet::new();
        for f in &self.facets {
            let g = f.intersection(within);
            if g.is_empty() {
                continue;
            }
            for s in g.subsets() {
                if !s.is_empty() {
                    seen.insert(s);
                }
            }
        }
        let top = seen.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut out = vec![Vec::new(); top];
        for s in seen {
            out[s.len() - 1].push(s);
        }
        out
    }

    /// The full subcomplex `K_I`, relabelled onto `1..=|I|` in ascending
    /// order. The second component maps new label `k` (index `k - 1`) to its
    /// original label.
    pub fn full_subcomplex(&self, within: VertexSet) -> (SimplicialComplex, Vec<u32>) {
        let within = within.intersection(self.vertices());
        let labels = within.to_vec();
        if within.is_empty() {
            return (SimplicialComplex::void(), labels);
        }
        let restricted: Vec<VertexSet> = self
            .facets
            .iter()
            .map(|f| f.intersection(within))
            .filter(|f| !f.is_empty())
            .collect();
        let facets = maximal_members(restricted).into_iter().map(|f| f.compress(within)).collect::<Vec<_>>();
        let mut facets = facets;
        facets.sort();
        let k = SimplicialComplex { m: labels.len() as u32, facets, flag: OnceLock::new() };
        (k, labels)
    }

    /// `K_{[m] \ {i}}`, relabelled onto `1..=m-1`.
    pub fn vertex_deletion(&self, i: u32) -> Result<SimplicialComplex> {
        if i == 0 || i > self.m {
            return Err(Error::VertexOutOfRange { label: i, m: self.m });
        }
        let mut rest = self.vertices();
        rest.remove(i);
        Ok(self.full_subcomplex(rest).0)
    }

    pub fn one_skeleton(&self) -> Graph {
        let mut g = Graph::new(self.m);
        for f in &self.facets {
            let vs = f.to_vec();
            for (a, &u) in vs.iter().enumerate() {
                for &v in &vs[a + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Minimal non-faces, in ascending bitmask order.
    pub fn missing_faces(&self) -> Vec<VertexSet> {
        let full = self.vertices();
        let mut out = BTreeSet::new();
        for group in self.faces_by_dim() {
            for face in group {
                let top = face.max().unwrap_or(0);
                // Every minimal non-face N has N \ {max N} ∈ K.
                for v in full.iter().filter(|&v| v > top) {
                    let cand = face.union(VertexSet::singleton(v));
                    if !self.is_face(cand) && cand.iter().all(|w| {
                        let mut sub = cand;
                        sub.remove(w);
                        self.is_face(sub)
                    }) {
                        out.insert(cand);
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn is_flag(&self) -> bool {
        *self.flag.get_or_init(|| self.missing_faces().iter().all(|f| f.len() == 2))
    }

    pub fn fh_vector(&self) -> FHVector {
        let f: Vec<u64> = self.faces_by_dim().iter().map(|g| g.len() as u64).collect();
        FHVector::from_f(f)
    }

    /// `h_i = h_{n-i}` for all `i`.
    pub fn dehn_sommerville_check(&self) -> bool {
        self.fh_vector().is_symmetric()
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Connected components of `K_I`, in original labels.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut comps: Vec<VertexSet> = within.iter().map(VertexSet::singleton).collect();
        for f in &self.facets {
            let g = f.intersection(within);
            if g.len() < 2 {
                continue;
            }
            let mut merged = g;
            comps.retain(|c| {
                if c.is_disjoint(g) {
                    true
                } else {
                    merged = merged.union(*c);
                    false
                }
            });
            comps.push(merged);
        }
        comps.sort_by_key(|c| VertexSet::min(*c));
        comps
    }

    /// Join `K1 * K2`; the vertices of `K2` are shifted by `m1`.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if other.is_void() {
            return Ok(self.clone());
        }
        if self.is_void() {
            return Ok(other.clone());
        }
        let m = self.m + other.m;
        if m > MAX_VERTICES {
            return Err(Error::TooManyVertices { m, width: MAX_VERTICES });
        }
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                facets.push(VertexSet(a.0 | (b.0 << self.m)));
            }
        }
        SimplicialComplex::from_maximal_faces(m, facets)
    }
}

/// Simple undirected graph on `[m]`, adjacency stored as bitmasks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    m: u32,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(m: u32) -> Self {
        Graph { m, adj: vec![VertexSet::EMPTY; m as usize] }
    }

    pub fn from_edges(m: u32, edges: &[(u32, u32)]) -> Self {
        let mut g = Graph::new(m);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn cycle(m: u32) -> Self {
        let edges: Vec<_> = (1..=m).map(|v| (v, v % m + 1)).collect();
        Graph::from_edges(m, &edges)
    }

    pub fn path(m: u32) -> Self {
        let edges: Vec<_> = (1..m).map(|v| (v, v + 1)).collect();
        Graph::from_edges(m, &edges)
    }

    pub fn complete(m: u32) -> Self {
        let mut g = Graph::new(m);
        for u in 1..=m {
            for v in u + 1..=m {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Adds `{u, v}`; loops are ignored.
    pub fn add_edge(&mut self, u: u32, v: u32) {
        assert!(u >= 1 && u <= self.m && v >= 1 && v <= self.m, "edge ({u},{v}) outside 1..={}", self.m);
        if u != v {
            self.adj[u as usize - 1].insert(v);
            self.adj[v as usize - 1].insert(u);
        }
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize - 1].contains(v)
    }

    pub fn neighbors(&self, v: u32) -> VertexSet {
        self.adj[v as usize - 1]
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize - 1].len()
    }

    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for u in 1..=self.m {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.difference(VertexSet::singleton(v)).is_subset(self.neighbors(v)))
    }

    /// Maximal cliques, by Bron–Kerbosch with pivoting.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.bron_kerbosch(VertexSet::EMPTY, VertexSet::full(self.m), VertexSet::EMPTY, &mut out);
        out.sort();
        out
    }

    fn bron_kerbosch(&self, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() && !r.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = p.union(x).iter().max_by_key(|&u| p.intersection(self.neighbors(u)).len()).unwrap();
        for v in p.difference(self.neighbors(pivot)).iter() {
            let nv = self.neighbors(v);
            let mut r2 = r;
            r2.insert(v);
            self.bron_kerbosch(r2, p.intersection(nv), x.intersection(nv), out);
            p.remove(v);
            x.insert(v);
        }
    }

    /// The flag complex whose faces are the cliques of `self`.
    pub fn clique_complex(&self) -> SimplicialComplex {
        if self.m == 0 {
            return SimplicialComplex::void();
        }
        SimplicialComplex::from_maximal_faces(self.m, self.maximal_cliques())
            .expect("cliques lie inside the vertex range")
    }
}

/// Face numbers and the h-vector of a complex of dimension `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FHVector {
    pub n: usize,
    /// `f[i]` counts `i`-dimensional faces.
    pub f: Vec<u64>,
    /// `h[0..=n]`.
    pub h: Vec<i64>,
}

impl FHVector {
    /// Expands `(t-1)^n + Σ f_i (t-1)^{n-1-i}` and reads `h_k` off the
    /// coefficient of `t^{n-k}`.
    pub fn from_f(f: Vec<u64>) -> Self {
        let n = f.len();
        // coeff[d] is the coefficient of t^d.
        let mut coeff = vec![0i128; n + 1];
        let mut add_shifted_power = |scale: i128, e: usize| {
            let mut binom: i128 = 1;
            for d in 0..=e {
                // C(e, d) t^d (-1)^{e-d}
                let sign = if (e - d).is_multiple_of(2) { 1 } else { -1 };
                coeff[d] += scale * sign * binom;
                binom = binom * (e - d) as i128 / (d + 1) as i128;
            }
        };
        add_shifted_power(1, n);
        for (i, &fi) in f.iter().enumerate() {
            add_shifted_power(fi as i128, n - 1 - i);
        }
        let h = (0..=n).map(|k| coeff[n - k] as i64).collect();
        FHVector { n, f, h }
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n;
        (0..=n).all(|i| self.h[i] == self.h[n - i])
    }

    /// `Σ (-1)^i f_i`.
    pub fn euler_characteristic(&self) -> i64 {
        self.f.iter().enumerate().map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) }).sum()
    }
}
