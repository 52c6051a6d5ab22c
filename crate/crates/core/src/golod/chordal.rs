use serde::Serialize;

use crate::complex::{Graph, VertexSet};

/// A vertex order in which the earlier neighbours of every vertex form a
/// clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EliminationOrder(pub Vec<u32>);

impl EliminationOrder {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Position of each vertex, indexed by `label - 1`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (k, &v) in self.0.iter().enumerate() {
            pos[v as usize - 1] = k;
        }
        pos
    }
}

/// Lexicographic breadth-first search visit order. Ties between equal
/// labels go to the smallest vertex.
pub fn lex_bfs(g: &Graph) -> Vec<u32> {
    let m = g.m() as usize;
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); m];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(m);
    for step in 0..m {
        let v = (1..=g.m())
            .filter(|&v| !visited.contains(v))
            .fold(None::<u32>, |best, v| match best {
                Some(b) if labels[b as usize - 1] >= labels[v as usize - 1] => Some(b),
                _ => Some(v),
            })
            .expect("an unvisited vertex remains");
        visited.insert(v);
        order.push(v);
        for w in g.neighbors(v).difference(visited).iter() {
            labels[w as usize - 1].push(m - step);
        }
    }
    order
}

/// Checks that the earlier neighbours of each vertex form a clique.
pub fn is_perfect_elimination(g: &Graph, order: &[u32]) -> bool {
    if order.len() != g.m() as usize {
        return false;
    }
    let mut earlier = VertexSet::EMPTY;
    for &v in order {
        if earlier.contains(v) {
            return false;
        }
        if !g.is_clique(g.neighbors(v).intersection(earlier)) {
            return false;
        }
        earlier.insert(v);
    }
    true
}

/// Lex-BFS candidate followed by a full verification; `None` iff `g` is not chordal.
pub fn perfect_elimination_ordering(g: &Graph) -> Option<EliminationOrder> {
    let order = lex_bfs(g);
    is_perfect_elimination(g, &order).then_some(EliminationOrder(order))
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_natural_order() {
        let g = Graph::path(3);
        assert!(is_perfect_elimination(&g, &[1, 2, 3]));
        assert_eq!(perfect_elimination_ordering(&g), Some(EliminationOrder(vec![1, 2, 3])));
    }

    #[test]
    fn cycles_are_not_chordal() {
        assert_eq!(perfect_elimination_ordering(&Graph::cycle(4)), None);
        assert_eq!(perfect_elimination_ordering(&Graph::cycle(5)), None);
        assert!(is_chordal(&Graph::cycle(3)));
    }

    #[test]
    fn chordal_families() {
        assert!(is_chordal(&Graph::complete(6)));
        let tree = Graph::from_edges(7, &[(1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (6, 7)]);
        assert!(is_chordal(&tree));
        assert!(is_chordal(&Graph::new(4)));
        // 4-cycle plus one chord
        assert!(is_chordal(&Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])));
    }

    #[test]
    fn lex_bfs_starts_at_smallest_vertex() {
        let g = Graph::from_edges(4, &[(3, 4), (1, 4), (2, 3)]);
        let order = lex_bfs(&g);
        assert_eq!(order, vec![1, 4, 3, 2]);
    }

    #[test]
    fn malformed_orders_rejected() {
        let g = Graph::path(3);
        assert!(!is_perfect_elimination(&g, &[1, 2]));
        assert!(!is_perfect_elimination(&g, &[1, 1, 2]));
        // 2's earlier neighbours 1 and 3 are not adjacent
        assert!(!is_perfect_elimination(&g, &[1, 3, 2]));
    }
}
