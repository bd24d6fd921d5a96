//! Maximum clique by branch and bound with a greedy-coloring bound.
//!
//! The optimum size is found with the classical color-ordered search (the
//! coloring of the candidate set bounds the clique that can still be
//! added). The reported witness is then the lexicographically smallest
//! clique of that size, found by a second search that branches on vertices
//! in increasing order.

use super::coloring::ColoringCertificate;
use super::{bit, Graph, VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Clique(VertexSet),
    IndependentSet(VertexSet),
    Coloring(ColoringCertificate),
}

/// Value of ω, α or χ with the object that certifies it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactInvariantResult {
    pub value: u32,
    pub witness: Witness,
    /// The value was proven optimal, not just bounded.
    pub exact: bool,
}

impl ExactInvariantResult {
    /// Checks the witness against `g`: size matches `value` and the set or
    /// coloring has the claimed structure.
    pub fn validate(&self, g: &Graph) -> bool {
        match &self.witness {
            Witness::Clique(s) => s.len() as u32 == self.value && g.is_clique(*s),
            Witness::IndependentSet(s) => s.len() as u32 == self.value && g.is_independent(*s),
            Witness::Coloring(c) => {
                c.num_colors == self.value && super::is_proper_coloring(g, c).unwrap_or(false)
            }
        }
    }

    pub fn vertex_set(&self) -> Option<VertexSet> {
        match self.witness {
            Witness::Clique(s) | Witness::IndependentSet(s) => Some(s),
            Witness::Coloring(_) => None,
        }
    }
}

pub fn clique_number(g: &Graph) -> ExactInvariantResult {
    let (size, set) = max_clique_within(g.raw_adj(), g.all().0);
    ExactInvariantResult {
        value: size,
        witness: Witness::Clique(VertexSet(set)),
        exact: true,
    }
}

/// α(g), computed as ω of the complement.
pub fn independence_number(g: &Graph) -> ExactInvariantResult {
    let co = g.complement();
    let (size, set) = max_clique_within(co.raw_adj(), co.all().0);
    ExactInvariantResult {
        value: size,
        witness: Witness::IndependentSet(VertexSet(set)),
        exact: true,
    }
}

/// Greedy sequential coloring of `p`, writing vertices and their color
/// numbers (1-based) in nondecreasing color order. Returns the count.
#[inline]
fn color_sort(adj: &[u64; MAX_VERTICES], p: u64, order: &mut [(u8, u8); MAX_VERTICES]) -> usize {
    let mut uncolored = p;
    let mut color = 0u8;
    let mut len = 0;
    while uncolored != 0 {
        color += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !bit(v) & !adj[v];
            uncolored &= !bit(v);
            order[len] = (v as u8, color);
            len += 1;
        }
    }
    len
}

fn color_bound(adj: &[u64; MAX_VERTICES], p: u64) -> u32 {
    let mut uncolored = p;
    let mut colors = 0;
    while uncolored != 0 {
        colors += 1;
        let mut q = uncolored;
        while q != 0 {
            let v = q.trailing_zeros() as usize;
            q &= !bit(v) & !adj[v];
            uncolored &= !bit(v);
        }
    }
    colors
}

fn expand(adj: &[u64; MAX_VERTICES], size: u32, mut p: u64, best: &mut u32) {
    let mut order = [(0u8, 0u8); MAX_VERTICES];
    let len = color_sort(adj, p, &mut order);
    for &(v, c) in order[..len].iter().rev() {
        if size + c as u32 <= *best {
            return;
        }
        let v = v as usize;
        let next = p & adj[v];
        if next == 0 {
            *best = (*best).max(size + 1);
        } else {
            expand(adj, size + 1, next, best);
        }
        p &= !bit(v);
    }
}

/// Lexicographically smallest clique of exactly `need` more vertices drawn
/// from `p`, extending `chosen`.
fn find_lex(adj: &[u64; MAX_VERTICES], chosen: u64, mut p: u64, need: u32) -> Option<u64> {
    if need == 0 {
        return Some(chosen);
    }
    while p.count_ones() >= need {
        if color_bound(adj, p) < need {
            return None;
        }
        let v = p.trailing_zeros() as usize;
        p &= !bit(v);
        if let Some(s) = find_lex(adj, chosen | bit(v), p & adj[v], need - 1) {
            return Some(s);
        }
    }
    None
}

/// ω of the subgraph induced by `mask` with its lexicographically smallest
/// maximum clique.
pub(crate) fn max_clique_within(adj: &[u64; MAX_VERTICES], mask: u64) -> (u32, u64) {
    if mask == 0 {
        return (0, 0);
    }
    let mut best = 1;
    expand(adj, 0, mask, &mut best);
    let witness = find_lex(adj, 0, mask, best).expect("a clique of the optimal size exists");
    (best, witness)
}

/// Whether the subgraph induced by `mask` contains a clique on `k` vertices.
pub(crate) fn has_clique_within(adj: &[u64; MAX_VERTICES], mask: u64, k: u32) -> bool {
    find_lex(adj, 0, mask, k).is_some()
}

/// Test oracle: ω by scanning every vertex subset.
#[cfg(test)]
pub(crate) fn brute_clique_number(g: &Graph) -> u32 {
    let n = g.n();
    assert!(n <= 20);
    (0u64..1 << n)
        .filter(|&s| g.is_clique(VertexSet(s)))
        .map(|s| s.count_ones())
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_examples() {
        assert_eq!(clique_number(&Graph::complete(4).unwrap()).value, 4);
        assert_eq!(clique_number(&Graph::cycle(5).unwrap()).value, 2);
        assert_eq!(clique_number(&Graph::paley(17).unwrap()).value, 3);
        assert_eq!(independence_number(&Graph::new(5).unwrap()).value, 5);
        assert_eq!(independence_number(&Graph::cycle(5).unwrap()).value, 2);
        assert_eq!(clique_number(&Graph::new(1).unwrap()).value, 1);
        assert_eq!(independence_number(&Graph::new(1).unwrap()).value, 1);
    }

    #[test]
    fn lexicographic_witnesses() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(
            clique_number(&c5).witness,
            Witness::Clique(VertexSet::from_vertices(&[0, 1]))
        );
        assert_eq!(
            independence_number(&c5).witness,
            Witness::IndependentSet(VertexSet::from_vertices(&[0, 2]))
        );
        // Two triangles {1,2,3} and {0,4,5}: the one containing 0 wins.
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5)]).unwrap();
        assert_eq!(
            clique_number(&g).vertex_set(),
            Some(VertexSet::from_vertices(&[0, 4, 5]))
        );
    }

    #[test]
    fn restricted_to_mask() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(max_clique_within(k5.raw_adj(), 0b10110), (3, 0b10110));
        assert_eq!(max_clique_within(k5.raw_adj(), 0), (0, 0));
        assert!(has_clique_within(k5.raw_adj(), 0b11111, 5));
        assert!(!has_clique_within(k5.raw_adj(), 0b01111, 5));
    }

    proptest! {
        #[test]
        fn matches_brute_force(n in 1usize..=14, p in 0.0f64..=1.0, seed: u64) {
            let g = Graph::random(n, p, seed).unwrap();
            let w = clique_number(&g);
            prop_assert!(w.validate(&g));
            prop_assert_eq!(w.value, brute_clique_number(&g));
            let a = independence_number(&g);
            prop_assert!(a.validate(&g));
            prop_assert_eq!(a.value, brute_clique_number(&g.complement()));
        }

        #[test]
        fn witness_is_lex_smallest(n in 1usize..=12, p in 0.2f64..=0.8, seed: u64) {
            let g = Graph::random(n, p, seed).unwrap();
            let w = clique_number(&g);
            let lex = |s: u64| VertexSet(s).to_vec();
            let best = (0u64..1 << n)
                .filter(|&s| s.count_ones() == w.value && g.is_clique(VertexSet(s)))
                .map(lex)
                .min()
                .unwrap();
            prop_assert_eq!(w.vertex_set().unwrap().to_vec(), best);
        }
    }
}
