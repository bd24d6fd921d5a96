//! Exact `f(n)` by orderly generation.
//!
//! Graphs are grown one edge at a time, only ever adding an edge after the
//! current last edge in code order, and a child is kept only when it is
//! canonical. Removing the last edge of a canonical graph leaves a
//! canonical graph, so every isomorphism class is produced exactly once.

use rayon::prelude::*;

use super::{Candidate, FRecord, SearchMeta};
use crate::error::{Error, Result};
use crate::graph::canon::{is_canonical, pair_at, pair_index};
use crate::graph::{chromatic_number, clique_number, Graph};

/// Largest `n` enumerated by default.
pub const EXHAUSTIVE_MAX: usize = 8;
/// Largest `n` enumerated on explicit request.
pub const OPT_IN_MAX: usize = 9;

const CHUNK: usize = 256;

fn last_position(g: &Graph) -> Option<usize> {
    g.edges().into_iter().map(|(i, j)| pair_index(i, j)).max()
}

fn children(g: &Graph) -> (Vec<Graph>, u64) {
    let n = g.n();
    let start = last_position(g).map_or(0, |p| p + 1);
    let mut out = Vec::new();
    let mut checked = 0;
    for p in start..n * (n - 1) / 2 {
        let (i, j) = pair_at(p);
        let mut child = g.clone();
        child.add_edge(i, j);
        checked += 1;
        if is_canonical(&child) {
            out.push(child);
        }
    }
    (out, checked)
}

/// Walks every isomorphism class on `n` vertices, one edge-count level at
/// a time, handing each level to `visit`. Returns the canonicity checks
/// performed and whether the walk finished within `budget` of them.
fn orderly_levels(n: usize, budget: u64, mut visit: impl FnMut(&[Graph])) -> Result<(u64, bool)> {
    let mut level = vec![Graph::new(n)?];
    let mut nodes = 0u64;
    while !level.is_empty() {
        visit(&level);
        let mut next = Vec::new();
        for chunk in level.chunks(CHUNK) {
            if nodes > budget {
                return Ok((nodes, false));
            }
            let expanded: Vec<(Vec<Graph>, u64)> = chunk.par_iter().map(children).collect();
            for (kids, checked) in expanded {
                nodes += checked;
                next.extend(kids);
            }
        }
        if nodes > budget && !next.is_empty() {
            return Ok((nodes, false));
        }
        level = next;
    }
    Ok((nodes, true))
}

/// Number of isomorphism classes of graphs on `n` vertices, by edge count.
pub fn graph_class_counts(n: usize) -> Result<Vec<u64>> {
    check_n(n, true)?;
    let mut counts = Vec::new();
    orderly_levels(n, u64::MAX, |level| counts.push(level.len() as u64))?;
    Ok(counts)
}

fn check_n(n: usize, allow_opt_in: bool) -> Result<()> {
    let cap = if allow_opt_in {
        OPT_IN_MAX
    } else {
        EXHAUSTIVE_MAX
    };
    if n == 0 || n > cap {
        return Err(Error::input(format!(
            "exhaustive search covers 1 <= n <= {cap} (n = {OPT_IN_MAX} needs the opt-in); \
             use the lower-bound search for n = {n}"
        )));
    }
    Ok(())
}

/// `f(n)` with a witness of least edge count, by scoring every class.
/// When the walk exceeds `budget` canonicity checks the best ratio seen so
/// far is returned with `exhaustive = false`.
pub fn f_exact(n: usize, budget: u64, allow_opt_in: bool) -> Result<FRecord> {
    check_n(n, allow_opt_in)?;
    let mut best: Option<Candidate> = None;
    let mut classes = 0u64;
    let (nodes, complete) = orderly_levels(n, budget, |level| {
        classes += level.len() as u64;
        let level_best = level
            .par_iter()
            .map(|g| {
                let chi = chromatic_number(g).value;
                let omega = clique_number(g).value;
                Some(Candidate::new(g.clone(), chi, omega))
            })
            .reduce(|| None, Candidate::better_opt);
        best = Candidate::better_opt(best.take(), level_best);
    })?;
    let best = best.expect("the empty graph is always scored");
    Ok(FRecord {
        n,
        value: best.ratio,
        witness: best.graph,
        exhaustive: complete,
        search_meta: SearchMeta {
            nodes,
            strategy: "exhaustive".into(),
            seed: 0,
            classes: Some(classes),
        },
    })
}
