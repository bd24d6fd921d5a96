//! Exact `R(s, t)` by orderly vertex-by-vertex generation.
//!
//! A 2-coloring of `K_n` is a graph (red edges) and its complement (blue
//! edges). We generate every `(s, t)`-graph (no `K_s`, no independent
//! `t`-set) up to isomorphism, one vertex at a time: a new vertex's edge
//! vector to the earlier vertices is accepted only when the extended graph
//! has the maximal code among all relabelings. That code is hereditary
//! under deleting the last vertex, so each class on `k + 1` vertices
//! arises from exactly one class on `k` vertices and the search is
//! exhaustive. `R(s, t)` is the first vertex count with no survivors.
//!
//! Parents of a level are expanded in parallel in fixed-size chunks; the
//! node budget is checked between chunks in parent order, so results do not
//! depend on the worker count.

use rayon::prelude::*;
use serde::Serialize;

use super::bounds::erdos_szekeres_bound;
use crate::error::{Error, Result};
use crate::graph::canon::is_canonical;
use crate::graph::{bit, clique_number, has_clique_within, Graph, MAX_VERTICES};

const CHUNK: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RamseyValue {
    Exact(u64),
    /// `lower <= R(s, t) <= upper`; `upper` is `None` when the classical
    /// bound overflows.
    Interval {
        lower: u64,
        upper: Option<u64>,
    },
}

/// Coloring of `K_n` as its red and blue graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyWitness {
    pub red: Graph,
    pub blue: Graph,
}

impl RamseyWitness {
    pub fn order(&self) -> usize {
        self.red.n()
    }

    /// Red and blue partition `K_n`, red has no `K_s`, blue has no `K_t`.
    pub fn verify(&self, s: u32, t: u32) -> bool {
        self.red.n() == self.blue.n()
            && self.red.complement() == self.blue
            && clique_number(&self.red).value < s
            && clique_number(&self.blue).value < t
    }

    pub fn to_graph6_pair(&self) -> (String, String) {
        (self.red.to_graph6(), self.blue.to_graph6())
    }
}

#[derive(Clone, Debug)]
pub struct RamseyOutcome {
    pub s: u32,
    pub t: u32,
    pub value: RamseyValue,
    /// Coloring of `K_{lower - 1}` avoiding both monochromatic cliques.
    pub witness: Option<RamseyWitness>,
    pub nodes: u64,
    /// Number of `(s, t)`-graphs up to isomorphism on `1, 2, ...` vertices,
    /// for every completed level.
    pub level_counts: Vec<usize>,
    pub budget_exhausted: bool,
}

struct Expander {
    /// No red `K_red`.
    red: u32,
    /// No blue `K_blue`.
    blue: u32,
}

struct Expansion {
    children: Vec<Graph>,
    nodes: u64,
    capped: bool,
}

impl Expander {
    fn expand(&self, parent: &Graph, cap: u64) -> Expansion {
        let co = parent.complement();
        let mut out = Expansion {
            children: Vec::new(),
            nodes: 0,
            capped: false,
        };
        self.assign(parent, co.raw_adj(), 0, 0, 0, cap, &mut out);
        out
    }

    /// Decide vertex `v` of the parent: red neighbor (joins `red_set`) or
    /// blue neighbor (joins `blue_set`) of the new vertex.
    #[allow(clippy::too_many_arguments)]
    fn assign(
        &self,
        parent: &Graph,
        co: &[u64; MAX_VERTICES],
        v: usize,
        red_set: u64,
        blue_set: u64,
        cap: u64,
        out: &mut Expansion,
    ) {
        if out.capped {
            return;
        }
        out.nodes += 1;
        if out.nodes > cap {
            out.capped = true;
            return;
        }
        let k = parent.n();
        if v == k {
            let mut child = parent.with_isolated(1).expect("k < 64");
            for u in crate::graph::Bits(red_set) {
                child.add_edge(u, k);
            }
            if is_canonical(&child) {
                out.children.push(child);
            }
            return;
        }
        let adj = parent.raw_adj();
        // A red K_red through the new vertex needs a K_{red-2} among its red
        // neighbors adjacent to v; likewise for blue.
        if !has_clique_within(adj, red_set & adj[v], self.red - 2) {
            self.assign(parent, co, v + 1, red_set | bit(v), blue_set, cap, out);
        }
        if !has_clique_within(co, blue_set & co[v], self.blue - 2) {
            self.assign(parent, co, v + 1, red_set, blue_set | bit(v), cap, out);
        }
    }
}

/// Least `n` such that every 2-coloring of `K_n` has a red `K_s` or a blue
/// `K_t`, searched up to `n_max` vertices within `budget` nodes.
pub fn ramsey_exact_small(s: u32, t: u32, n_max: usize, budget: u64) -> Result<RamseyOutcome> {
    if s.min(t) < 2 {
        return Err(Error::input(format!(
            "ramsey search needs s, t >= 2, got ({s},{t})"
        )));
    }
    if n_max == 0 || n_max > MAX_VERTICES {
        return Err(Error::input(format!(
            "n_max must be in 1..={MAX_VERTICES}, got {n_max}"
        )));
    }
    let swapped = s > t;
    let (a, b) = super::canonical_pair(s, t);
    let upper = erdos_szekeres_bound(a, b).ok();
    let expander = Expander { red: a, blue: b };

    let mut level = vec![Graph::new(1)?];
    let mut level_counts = vec![1];
    let mut nodes = 0u64;
    let mut exhausted = false;
    let mut largest = level[0].clone();

    while level[0].n() < n_max {
        let mut next = Vec::new();
        for chunk in level.chunks(CHUNK) {
            let cap = budget.saturating_sub(nodes);
            let results: Vec<Expansion> =
                chunk.par_iter().map(|p| expander.expand(p, cap)).collect();
            for r in results {
                nodes = nodes.saturating_add(r.nodes);
                next.extend(r.children);
                if r.capped || nodes > budget {
                    exhausted = true;
                    break;
                }
            }
            if exhausted {
                break;
            }
        }
        if let Some(g) = next.first() {
            largest = g.clone();
        }
        if exhausted {
            break;
        }
        if next.is_empty() {
            let value = level[0].n() as u64 + 1;
            debug_assert!(upper.is_none_or(|u| value <= u));
            return Ok(RamseyOutcome {
                s,
                t,
                value: RamseyValue::Exact(value),
                witness: Some(witness_from(&largest, swapped)),
                nodes,
                level_counts,
                budget_exhausted: false,
            });
        }
        level_counts.push(next.len());
        level = next;
    }

    Ok(RamseyOutcome {
        s,
        t,
        value: RamseyValue::Interval {
            lower: largest.n() as u64 + 1,
            upper,
        },
        witness: Some(witness_from(&largest, swapped)),
        nodes,
        level_counts,
        budget_exhausted: exhausted,
    })
}

fn witness_from(g: &Graph, swapped: bool) -> RamseyWitness {
    let (red, blue) = (g.clone(), g.complement());
    if swapped {
        RamseyWitness {
            red: blue,
            blue: red,
        }
    } else {
        RamseyWitness { red, blue }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_row() {
        for t in 2..=10 {
            let out = ramsey_exact_small(2, t, 64, u64::MAX).unwrap();
            assert_eq!(out.value, RamseyValue::Exact(t as u64));
            let w = out.witness.unwrap();
            assert_eq!(w.order(), t as usize - 1);
            assert!(w.verify(2, t));
        }
    }

    #[test]
    fn r33_and_r34() {
        let out = ramsey_exact_small(3, 3, 64, u64::MAX).unwrap();
        assert_eq!(out.value, RamseyValue::Exact(6));
        // The unique (3,3)-graph on five vertices is C5.
        assert_eq!(out.level_counts.last(), Some(&1));
        assert!(out.witness.unwrap().verify(3, 3));

        let out = ramsey_exact_small(3, 4, 64, u64::MAX).unwrap();
        assert_eq!(out.value, RamseyValue::Exact(9));
        assert_eq!(out.level_counts.len(), 8);
        assert_eq!(out.level_counts[7], 3);
        assert!(out.witness.unwrap().verify(3, 4));
    }

    #[test]
    fn argument_order_swaps_colors() {
        let out = ramsey_exact_small(4, 3, 64, u64::MAX).unwrap();
        assert_eq!(out.value, RamseyValue::Exact(9));
        assert!(out.witness.unwrap().verify(4, 3));
    }

    #[test]
    fn limits_give_intervals() {
        let out = ramsey_exact_small(3, 4, 5, u64::MAX).unwrap();
        assert_eq!(
            out.value,
            RamseyValue::Interval {
                lower: 6,
                upper: Some(10)
            }
        );
        assert!(out.witness.unwrap().verify(3, 4));

        let out = ramsey_exact_small(3, 4, 64, 50).unwrap();
        assert!(out.budget_exhausted);
        match out.value {
            RamseyValue::Interval { lower, .. } => assert!(lower <= 9),
            v => panic!("unexpected {v:?}"),
        }
        assert!(ramsey_exact_small(1, 4, 10, 10).is_err());
        assert!(ramsey_exact_small(3, 4, 65, 10).is_err());
    }

    #[test]
    fn deterministic_across_pools() {
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| ramsey_exact_small(3, 4, 64, 2_000).unwrap())
        };
        let (a, b) = (run(1), run(4));
        assert_eq!(
            (a.value, a.nodes, &a.level_counts),
            (b.value, b.nodes, &b.level_counts)
        );
        assert_eq!(a.witness, b.witness);
    }
}
