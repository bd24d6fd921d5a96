//! The extremal ratio `f(n) = max χ(G)/ω(G)` over `n`-vertex graphs:
//! exact values by isomorph-free enumeration, certified lower bounds by
//! constructions and local search.

mod exact;
mod search;
mod table;
mod witness;

pub use exact::{f_exact, graph_class_counts, EXHAUSTIVE_MAX, OPT_IN_MAX};
pub use search::{f_lower_profile, f_lower_search, f_lower_search_seeded, Strategy};
pub use table::{
    f_table_csv, f_table_from_json, f_table_to_json, verify_f_table, FTableRow,
    DEFAULT_F_TABLE_JSON,
};
pub use witness::{g_lower_witness, RatioWitnessReport};

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{chromatic_bounds, clique_number, Graph};

/// `χ / ω` kept as the integer pair; compared by cross-multiplication.
#[derive(Clone, Copy, Debug, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub num: u32,
    pub den: u32,
}

impl Ratio {
    pub fn new(num: u32, den: u32) -> Ratio {
        assert!(den >= 1, "ratio denominator must be positive");
        Ratio { num, den }
    }

    pub fn one() -> Ratio {
        Ratio { num: 1, den: 1 }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u64 * other.den as u64).cmp(&(other.num as u64 * self.den as u64))
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchMeta {
    pub nodes: u64,
    pub strategy: String,
    pub seed: u64,
    /// Isomorphism classes visited by an enumeration.
    pub classes: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FRecord {
    pub n: usize,
    /// `χ / ω` of the witness.
    pub value: Ratio,
    pub witness: Graph,
    /// The value is `f(n)` itself, not just a lower bound.
    pub exhaustive: bool,
    pub search_meta: SearchMeta,
}

/// A scored graph; the best of several is chosen by [`Candidate::better`].
#[derive(Clone, Debug)]
pub(crate) struct Candidate {
    pub ratio: Ratio,
    pub edges: usize,
    pub graph6: String,
    pub graph: Graph,
}

impl Candidate {
    pub fn new(graph: Graph, chi: u32, omega: u32) -> Candidate {
        Candidate {
            ratio: Ratio::new(chi, omega),
            edges: graph.edge_count(),
            graph6: graph.to_graph6(),
            graph,
        }
    }

    /// Higher ratio, then fewer edges, then the smaller graph6 string.
    fn key_cmp(&self, other: &Candidate) -> Ordering {
        other
            .ratio
            .cmp(&self.ratio)
            .then(self.edges.cmp(&other.edges))
            .then_with(|| self.graph6.cmp(&other.graph6))
    }

    pub fn better(a: Candidate, b: Candidate) -> Candidate {
        if b.key_cmp(&a) == Ordering::Less {
            b
        } else {
            a
        }
    }

    pub fn better_opt(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
        match (a, b) {
            (Some(a), Some(b)) => Some(Candidate::better(a, b)),
            (a, None) => a,
            (None, b) => b,
        }
    }
}

/// Exact `(χ, ω, nodes)`, or `None` with the nodes spent when χ is not
/// settled within `budget`.
pub(crate) fn score(g: &Graph, budget: u64) -> (Option<(u32, u32)>, u64) {
    let b = chromatic_bounds(g, budget);
    if !b.exact {
        return (None, b.nodes);
    }
    let omega = clique_number(g).value;
    debug_assert!(b.upper >= omega);
    (Some((b.upper, omega)), b.nodes)
}
