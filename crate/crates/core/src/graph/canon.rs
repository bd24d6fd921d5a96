//! Canonical labeling by maximal adjacency code.
//!
//! The code of a labeled graph is its upper triangle read column by
//! column, `(0,1), (0,2), (1,2), (0,3), ...`, compared lexicographically.
//! A graph is canonical when no relabeling yields a larger code. Two
//! properties make this code suitable for orderly generation:
//!
//! - removing the last edge (in code order) of a canonical graph leaves a
//!   canonical graph;
//! - removing the last vertex of a canonical graph leaves a canonical graph.
//!
//! The permutation search assigns labels in increasing order, comparing
//! one column at a time and pruning as soon as a prefix falls below the
//! target. Interchangeable twin vertices are branched on only once.

use super::{bit, Bits, Graph, MAX_VERTICES};

/// Column `k` of the code under the labeling `perm[..=k]`: bit `k-1-i`
/// holds adjacency of labels `i` and `k`, so integer order matches code order.
#[inline]
fn column(adj: &[u64; MAX_VERTICES], perm: &[usize], w: usize) -> u64 {
    let k = perm.len();
    let mut col = 0u64;
    for (i, &u) in perm.iter().enumerate() {
        if adj[u] & bit(w) != 0 {
            col |= 1 << (k - 1 - i);
        }
    }
    col
}

/// `twins[v]`: vertices `w` with `N(v) \ {w} = N(w) \ {v}`. Swapping twins
/// is an automorphism fixing everything else.
fn twin_masks(g: &Graph) -> [u64; MAX_VERTICES] {
    let adj = g.raw_adj();
    let mut twins = [0u64; MAX_VERTICES];
    for v in 0..g.n() {
        for w in v + 1..g.n() {
            if adj[v] & !bit(w) == adj[w] & !bit(v) {
                twins[v] |= bit(w);
                twins[w] |= bit(v);
            }
        }
    }
    twins
}

fn own_columns(g: &Graph) -> Vec<u64> {
    let ident: Vec<usize> = (0..g.n()).collect();
    (0..g.n())
        .map(|k| column(g.raw_adj(), &ident[..k], k))
        .collect()
}

struct Checker<'a> {
    adj: &'a [u64; MAX_VERTICES],
    twins: [u64; MAX_VERTICES],
    target: Vec<u64>,
    perm: Vec<usize>,
    all: u64,
}

impl Checker<'_> {
    /// True when some completion of `perm` beats the target code.
    fn beats(&mut self, used: u64) -> bool {
        let k = self.perm.len();
        if k == self.target.len() {
            return false;
        }
        let mut tried = 0u64;
        for w in Bits(self.all & !used) {
            if self.twins[w] & tried != 0 {
                continue;
            }
            tried |= bit(w);
            let col = column(self.adj, &self.perm, w);
            if col > self.target[k] {
                return true;
            }
            if col == self.target[k] {
                self.perm.push(w);
                let found = self.beats(used | bit(w));
                self.perm.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }
}

/// Whether `g` has the maximal code among all of its relabelings.
pub fn is_canonical(g: &Graph) -> bool {
    let mut c = Checker {
        adj: g.raw_adj(),
        twins: twin_masks(g),
        target: own_columns(g),
        perm: Vec::with_capacity(g.n()),
        all: g.all().0,
    };
    !c.beats(0)
}

struct Maximizer<'a> {
    adj: &'a [u64; MAX_VERTICES],
    twins: [u64; MAX_VERTICES],
    best: Vec<Option<u64>>,
    best_perm: Vec<usize>,
    perm: Vec<usize>,
    all: u64,
}

impl Maximizer<'_> {
    fn search(&mut self, used: u64) {
        let k = self.perm.len();
        if k == self.best.len() {
            self.best_perm.clone_from(&self.perm);
            return;
        }
        let mut tried = 0u64;
        for w in Bits(self.all & !used) {
            if self.twins[w] & tried != 0 {
                continue;
            }
            tried |= bit(w);
            let col = column(self.adj, &self.perm, w);
            match self.best[k] {
                Some(b) if col < b => continue,
                Some(b) if col == b => {}
                _ => {
                    // New best prefix; everything after it is open again.
                    self.best[k] = Some(col);
                    for slot in &mut self.best[k + 1..] {
                        *slot = None;
                    }
                }
            }
            self.perm.push(w);
            self.search(used | bit(w));
            self.perm.pop();
        }
    }
}

/// Relabeling of `g` with maximal code, and the permutation used
/// (`perm[label] = original vertex`).
pub fn canonical_form(g: &Graph) -> (Graph, Vec<usize>) {
    let mut m = Maximizer {
        adj: g.raw_adj(),
        twins: twin_masks(g),
        best: vec![None; g.n()],
        best_perm: Vec::new(),
        perm: Vec::with_capacity(g.n()),
        all: g.all().0,
    };
    m.search(0);
    let perm = m.best_perm;
    (relabel(g, &perm), perm)
}

/// Graph whose label `a` is vertex `perm[a]` of `g`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let mut h = Graph::new(g.n()).expect("same vertex count");
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if g.has_edge(perm[a], perm[b]) {
                h.add_edge(a, b);
            }
        }
    }
    h
}

/// Position of pair `(i, j)`, `i < j`, in code order.
#[inline]
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Pair at code position `p`.
pub(crate) fn pair_at(p: usize) -> (usize, usize) {
    let mut j = 1;
    while pair_index(0, j + 1) <= p {
        j += 1;
    }
    (p - pair_index(0, j), j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn full_code(g: &Graph) -> Vec<bool> {
        let mut out = Vec::new();
        for j in 1..g.n() {
            for i in 0..j {
                out.push(g.has_edge(i, j));
            }
        }
        out
    }

    /// Test oracle: maximal code over every permutation, n <= 7.
    fn brute_max_code(g: &Graph) -> Vec<bool> {
        fn rec(g: &Graph, perm: &mut Vec<usize>, used: u64, best: &mut Vec<bool>) {
            if perm.len() == g.n() {
                let code = full_code(&relabel(g, perm));
                if code > *best {
                    *best = code;
                }
                return;
            }
            for w in 0..g.n() {
                if used & bit(w) == 0 {
                    perm.push(w);
                    rec(g, perm, used | bit(w), best);
                    perm.pop();
                }
            }
        }
        let mut best = Vec::new();
        rec(g, &mut Vec::new(), 0, &mut best);
        best
    }

    #[test]
    fn pair_positions() {
        let mut p = 0;
        for j in 1..20 {
            for i in 0..j {
                assert_eq!(pair_index(i, j), p);
                assert_eq!(pair_at(p), (i, j));
                p += 1;
            }
        }
    }

    #[test]
    fn highly_symmetric_graphs_are_fast() {
        for n in [1, 8, 20, 64] {
            assert!(is_canonical(&Graph::new(n).unwrap()));
            assert!(is_canonical(&Graph::complete(n).unwrap()));
        }
    }

    #[test]
    fn single_edge_canonical_position() {
        // The canonical single-edge graph puts the edge first: (0,1).
        assert!(is_canonical(&Graph::from_edges(4, &[(0, 1)]).unwrap()));
        assert!(!is_canonical(&Graph::from_edges(4, &[(2, 3)]).unwrap()));
    }

    proptest! {
        #[test]
        fn canonical_form_is_maximal(n in 1usize..=7, p in 0.0f64..=1.0, seed: u64) {
            let g = Graph::random(n, p, seed).unwrap();
            let (c, perm) = canonical_form(&g);
            prop_assert_eq!(relabel(&g, &perm), c.clone());
            prop_assert_eq!(full_code(&c), brute_max_code(&g));
            prop_assert!(is_canonical(&c));
            prop_assert_eq!(is_canonical(&g), full_code(&g) == full_code(&c));
        }

        #[test]
        fn canonical_form_is_invariant(n in 1usize..=12, p in 0.0f64..=1.0, seed: u64, shift in 0usize..12) {
            let g = Graph::random(n, p, seed).unwrap();
            let perm: Vec<usize> = (0..n).map(|i| (i * 5 + shift) % n).collect();
            let mut seen = vec![false; n];
            let bijective = perm.iter().all(|&v| !std::mem::replace(&mut seen[v], true));
            prop_assume!(bijective);
            let h = relabel(&g, &perm);
            prop_assert_eq!(canonical_form(&g).0, canonical_form(&h).0);
        }
    }
}
