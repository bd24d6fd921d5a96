//! Vertex colorings: exact χ by DSATUR branch and bound, and the greedy
//! coloring that repeatedly removes a maximum independent set.

use serde::{Deserialize, Serialize};

use super::clique::{max_clique_within, ExactInvariantResult, Witness};
use super::{bit, Bits, Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const UNCOLORED: u8 = u8::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringCertificate {
    /// 0-based color of each vertex.
    pub colors: Vec<u32>,
    pub num_colors: u32,
}

impl ColoringCertificate {
    pub fn new(colors: Vec<u32>) -> Self {
        let mut seen: Vec<u32> = colors.clone();
        seen.sort_unstable();
        seen.dedup();
        ColoringCertificate {
            num_colors: seen.len() as u32,
            colors,
        }
    }
}

/// Whether no edge of `g` joins two vertices of the same color.
pub fn is_proper_coloring(g: &Graph, c: &ColoringCertificate) -> Result<bool> {
    if c.colors.len() != g.n() {
        return Err(Error::input(format!(
            "coloring has {} entries for a {}-vertex graph",
            c.colors.len(),
            g.n()
        )));
    }
    Ok(g.edges().iter().all(|&(u, v)| c.colors[u] != c.colors[v]))
}

/// Bounds on χ from a budgeted search. `exact` means `lower == upper` was
/// proven, either by a clique matching the coloring or by exhausting the
/// search for a coloring with fewer colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChromaticBounds {
    pub lower: u32,
    pub upper: u32,
    /// Proper coloring with `upper` colors.
    pub coloring: ColoringCertificate,
    pub exact: bool,
    pub nodes: u64,
}

struct Dsatur<'a> {
    adj: &'a [u64; MAX_VERTICES],
    lower: u32,
    best: u32,
    best_colors: [u8; MAX_VERTICES],
    nodes: u64,
    budget: u64,
    aborted: bool,
}

/// DSATUR choice: most distinct neighbor colors, then most uncolored
/// neighbors, then lowest index.
#[inline]
fn select(adj: &[u64; MAX_VERTICES], forbid: &[u64; MAX_VERTICES], uncolored: u64) -> usize {
    let mut best_v = uncolored.trailing_zeros() as usize;
    let mut best_key = (0u32, 0u32);
    let mut first = true;
    for v in Bits(uncolored) {
        let key = (forbid[v].count_ones(), (adj[v] & uncolored).count_ones());
        if first || key > best_key {
            best_key = key;
            best_v = v;
            first = false;
        }
    }
    best_v
}

impl Dsatur<'_> {
    fn search(
        &mut self,
        colors: &mut [u8; MAX_VERTICES],
        forbid: &[u64; MAX_VERTICES],
        uncolored: u64,
        used: u32,
    ) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.aborted = true;
            return;
        }
        if uncolored == 0 {
            if used < self.best {
                self.best = used;
                self.best_colors = *colors;
            }
            return;
        }
        let v = select(self.adj, forbid, uncolored);
        let rest = uncolored & !bit(v);
        for c in 0..=used {
            // An improving coloring uses at most best - 1 colors.
            let limit = self.best - 1;
            if c >= limit {
                break;
            }
            let cb = bit(c as usize);
            if forbid[v] & cb != 0 {
                continue;
            }
            let mut next = *forbid;
            let mut dead = false;
            for u in Bits(self.adj[v] & rest) {
                next[u] |= cb;
                dead |= next[u].count_ones() >= limit;
            }
            if dead {
                continue;
            }
            colors[v] = c as u8;
            self.search(colors, &next, rest, used.max(c + 1));
            colors[v] = UNCOLORED;
            if self.aborted || self.best <= self.lower {
                return;
            }
        }
    }
}

fn greedy_dsatur(
    adj: &[u64; MAX_VERTICES],
    colors: &mut [u8; MAX_VERTICES],
    forbid: &mut [u64; MAX_VERTICES],
    mut uncolored: u64,
    mut used: u32,
) -> u32 {
    while uncolored != 0 {
        let v = select(adj, forbid, uncolored);
        let c = (!forbid[v]).trailing_zeros();
        colors[v] = c as u8;
        uncolored &= !bit(v);
        for u in Bits(adj[v] & uncolored) {
            forbid[u] |= bit(c as usize);
        }
        used = used.max(c + 1);
    }
    used
}

/// χ with a node budget. A budget of `u64::MAX` always yields an exact
/// result.
pub fn chromatic_bounds(g: &Graph, budget: u64) -> ChromaticBounds {
    let adj = g.raw_adj();
    let n = g.n();
    let (omega, clique) = max_clique_within(adj, g.all().0);

    // Any optimal coloring can be relabeled so that the clique, in vertex
    // order, receives colors 0..ω.
    let mut colors = [UNCOLORED; MAX_VERTICES];
    let mut forbid = [0u64; MAX_VERTICES];
    for (c, v) in Bits(clique).enumerate() {
        colors[v] = c as u8;
        for u in Bits(adj[v]) {
            forbid[u] |= bit(c);
        }
    }
    let uncolored = g.all().0 & !clique;
    let start_colors = colors;
    let start_forbid = forbid;

    let mut greedy_colors = colors;
    let upper = greedy_dsatur(
        adj,
        &mut greedy_colors,
        &mut forbid.clone(),
        uncolored,
        omega,
    );

    let mut solver = Dsatur {
        adj,
        lower: omega,
        best: upper,
        best_colors: greedy_colors,
        nodes: 0,
        budget,
        aborted: false,
    };
    if upper > omega {
        let mut colors = start_colors;
        solver.search(&mut colors, &start_forbid, uncolored, omega);
    }
    let exact = !solver.aborted;
    let coloring =
        ColoringCertificate::new(solver.best_colors[..n].iter().map(|&c| c as u32).collect());
    debug_assert_eq!(coloring.num_colors, solver.best);
    ChromaticBounds {
        lower: if exact { solver.best } else { omega },
        upper: solver.best,
        coloring,
        exact,
        nodes: solver.nodes,
    }
}

pub fn chromatic_number(g: &Graph) -> ExactInvariantResult {
    let b = chromatic_bounds(g, u64::MAX);
    ExactInvariantResult {
        value: b.upper,
        witness: Witness::Coloring(b.coloring),
        exact: b.exact,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GreedyColoringStats {
    pub n: usize,
    pub m0: usize,
    /// Sizes of the extracted independent sets, in extraction order.
    pub extracted_sizes: Vec<usize>,
    /// Smallest extracted size.
    pub r_observed: usize,
    /// Vertices left once fewer than `m0` remain; each gets its own color.
    pub leftover: usize,
    pub colors_used: usize,
}

impl GreedyColoringStats {
    /// `ceil(n / r) + m0`.
    pub fn color_bound(&self) -> usize {
        self.n.div_ceil(self.r_observed) + self.m0
    }
}

/// While at least `m0` vertices remain, color the lexicographically
/// smallest maximum independent set of the remaining graph with a new
/// color; then give each leftover vertex its own color.
pub fn greedy_erdos_coloring(
    g: &Graph,
    m0: usize,
) -> Result<(ColoringCertificate, GreedyColoringStats)> {
    let n = g.n();
    if m0 == 0 || m0 > n {
        return Err(Error::input(format!("m0 must be in 1..={n}, got {m0}")));
    }
    let co = g.complement();
    let mut remaining = g.all().0;
    let mut colors = vec![0u32; n];
    let mut extracted_sizes = Vec::new();
    let mut next_color = 0u32;
    while remaining.count_ones() as usize >= m0 {
        let (size, set) = max_clique_within(co.raw_adj(), remaining);
        for v in Bits(set) {
            colors[v] = next_color;
        }
        next_color += 1;
        remaining &= !set;
        extracted_sizes.push(size as usize);
    }
    let leftover = remaining.count_ones() as usize;
    for v in Bits(remaining) {
        colors[v] = next_color;
        next_color += 1;
    }
    let stats = GreedyColoringStats {
        n,
        m0,
        r_observed: *extracted_sizes
            .iter()
            .min()
            .expect("m0 <= n forces one extraction"),
        extracted_sizes,
        leftover,
        colors_used: next_color as usize,
    };
    Ok((ColoringCertificate::new(colors), stats))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::clique_number;
    use proptest::prelude::*;

    /// Test oracle: smallest k admitting a proper k-coloring, by plain
    /// backtracking over vertices in index order.
    fn brute_chromatic(g: &Graph) -> u32 {
        fn colorable(g: &Graph, k: u32, v: usize, colors: &mut Vec<u32>) -> bool {
            if v == g.n() {
                return true;
            }
            for c in 0..k {
                if (0..v).all(|u| !g.has_edge(u, v) || colors[u] != c) {
                    colors.push(c);
                    if colorable(g, k, v + 1, colors) {
                        return true;
                    }
                    colors.pop();
                }
            }
            false
        }
        (1..)
            .find(|&k| colorable(g, k, 0, &mut Vec::new()))
            .unwrap()
    }

    #[test]
    fn named_values() {
        assert_eq!(chromatic_number(&Graph::complete(4).unwrap()).value, 4);
        assert_eq!(chromatic_number(&Graph::cycle(5).unwrap()).value, 3);
        assert_eq!(chromatic_number(&Graph::new(1).unwrap()).value, 1);
        assert_eq!(chromatic_number(&Graph::new(7).unwrap()).value, 1);
        let grotzsch = Graph::mycielski_tower(2).unwrap();
        assert_eq!(brute_chromatic(&grotzsch), 4);
        assert_eq!(chromatic_number(&grotzsch).value, 4);
        assert_eq!(
            chromatic_number(&Graph::mycielski_tower(3).unwrap()).value,
            5
        );
    }

    #[test]
    fn proper_coloring_checks() {
        let k2 = Graph::complete(2).unwrap();
        assert!(is_proper_coloring(&k2, &ColoringCertificate::new(vec![0, 1])).unwrap());
        assert!(!is_proper_coloring(&k2, &ColoringCertificate::new(vec![0, 0])).unwrap());
        assert!(is_proper_coloring(&k2, &ColoringCertificate::new(vec![0])).is_err());
        let c5 = Graph::cycle(5).unwrap();
        let chi = chromatic_number(&c5);
        assert!(chi.validate(&c5));
    }

    #[test]
    fn budget_exhaustion_reports_bounds() {
        let g = Graph::mycielski_tower(3).unwrap();
        let b = chromatic_bounds(&g, 1);
        assert!(!b.exact);
        assert_eq!(b.lower, 2);
        assert!(b.upper >= 5);
        assert!(is_proper_coloring(&g, &b.coloring).unwrap());
    }

    #[test]
    fn greedy_examples() {
        let (c, s) = greedy_erdos_coloring(&Graph::new(10).unwrap(), 2).unwrap();
        assert_eq!((c.num_colors, s.r_observed, s.colors_used), (1, 10, 1));

        let k5 = Graph::complete(5).unwrap();
        let (c, s) = greedy_erdos_coloring(&k5, 1).unwrap();
        assert_eq!(c.num_colors, 5);
        assert_eq!(s.extracted_sizes, vec![1; 5]);

        let c5 = Graph::cycle(5).unwrap();
        let (c, s) = greedy_erdos_coloring(&c5, 2).unwrap();
        assert_eq!(s.extracted_sizes, vec![2, 2]);
        assert_eq!((s.leftover, s.colors_used), (1, 3));
        assert_eq!(c.colors, vec![0, 1, 0, 1, 2]);

        assert!(greedy_erdos_coloring(&c5, 0).is_err());
        assert!(greedy_erdos_coloring(&c5, 6).is_err());
    }

    proptest! {
        #[test]
        fn chromatic_matches_oracle(n in 1usize..=10, p in 0.0f64..=1.0, seed: u64) {
            let g = Graph::random(n, p, seed).unwrap();
            let chi = chromatic_number(&g);
            prop_assert!(chi.exact);
            prop_assert!(chi.validate(&g));
            prop_assert_eq!(chi.value, brute_chromatic(&g));
            prop_assert!(chi.value >= clique_number(&g).value);
        }

        #[test]
        fn greedy_satisfies_bound(n in 1usize..=24, p in 0.0f64..=1.0, seed: u64, m0_frac in 0.0f64..1.0) {
            let g = Graph::random(n, p, seed).unwrap();
            let m0 = 1 + ((n - 1) as f64 * m0_frac) as usize;
            let (c, s) = greedy_erdos_coloring(&g, m0).unwrap();
            prop_assert!(is_proper_coloring(&g, &c).unwrap());
            prop_assert_eq!(c.num_colors as usize, s.colors_used);
            prop_assert_eq!(s.colors_used, s.extracted_sizes.len() + s.leftover);
            prop_assert!(s.leftover < m0);
            prop_assert!(s.extracted_sizes.iter().all(|&x| x >= 1));
            prop_assert!(s.colors_used <= s.color_bound());
        }
    }
}
