//! Certified lower bounds on `f(n)` from constructions and annealing.
//!
//! Every reported ratio comes from exact χ and ω of the witness. A
//! candidate whose χ is not settled within the node budget is discarded.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{score, Candidate, FRecord, SearchMeta};
use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Constructions,
    Anneal,
    /// Constructions, then annealing started from the best of them.
    Hybrid,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Constructions => "constructions",
            Strategy::Anneal => "anneal",
            Strategy::Hybrid => "hybrid",
        }
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy> {
        match s {
            "constructions" => Ok(Strategy::Constructions),
            "anneal" => Ok(Strategy::Anneal),
            "hybrid" => Ok(Strategy::Hybrid),
            _ => Err(Error::input(format!("unknown strategy {s:?}"))),
        }
    }
}

const PALEY_PRIMES: [usize; 8] = [5, 13, 17, 29, 37, 41, 53, 61];
const RESTARTS: u64 = 4;
const STEPS_PER_RESTART: usize = 400;
const START_TEMPERATURE: f64 = 0.25;

/// Seed graphs with at most `n` vertices besides `K_n`: the Mycielski
/// tower and Paley graphs.
fn pieces(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for level in 1.. {
        match Graph::mycielski_tower(level) {
            Ok(g) if g.n() <= n => out.push(g),
            _ => break,
        }
    }
    for q in PALEY_PRIMES.into_iter().filter(|&q| q <= n) {
        out.push(Graph::paley(q).expect("listed primes are valid"));
    }
    out
}

struct Scored {
    graph: Graph,
    score: Option<(u32, u32)>,
    nodes: u64,
}

fn score_all(graphs: Vec<Graph>, budget: u64) -> Vec<Scored> {
    graphs
        .into_par_iter()
        .map(|graph| {
            let (score, nodes) = score(&graph, budget);
            Scored {
                graph,
                score,
                nodes,
            }
        })
        .collect()
}

struct Found {
    best: Option<Candidate>,
    nodes: u64,
}

/// Best padded candidate on `n` vertices: `K_n`, each scored piece, each
/// extra graph, and disjoint unions of two pieces. A union needs no new
/// search since χ and ω of a disjoint union are the larger of the parts.
fn best_on(n: usize, pieces: &[Scored], extra: &[Scored]) -> Found {
    let pad = |g: &Graph| g.with_isolated(n - g.n()).expect("fits");
    let mut found = Found {
        best: Some(Candidate::new(
            Graph::complete(n).expect("1 <= n <= 64"),
            n as u32,
            n as u32,
        )),
        nodes: 0,
    };
    let fitting: Vec<&Scored> = pieces.iter().filter(|p| p.graph.n() <= n).collect();
    for (i, a) in fitting.iter().enumerate() {
        for b in &fitting[i + 1..] {
            let (Some((ca, oa)), Some((cb, ob))) = (a.score, b.score) else {
                continue;
            };
            if a.graph.n() > 1 && b.graph.n() > 1 && a.graph.n() + b.graph.n() <= n {
                let g = pad(&a.graph.disjoint_union(&b.graph).expect("fits"));
                let c = Candidate::new(g, ca.max(cb), oa.max(ob));
                found.best = Candidate::better_opt(found.best.take(), Some(c));
            }
        }
    }
    for p in fitting
        .into_iter()
        .chain(extra.iter().filter(|e| e.graph.n() <= n))
    {
        found.nodes = found.nodes.saturating_add(p.nodes);
        if let Some((chi, omega)) = p.score {
            let c = Candidate::new(pad(&p.graph), chi, omega);
            found.best = Candidate::better_opt(found.best.take(), Some(c));
        }
    }
    found
}

/// One annealing run over single edge flips, spending at most `budget`
/// coloring nodes.
fn anneal(start: Option<Candidate>, n: usize, seed: u64, budget: u64) -> Found {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut spent = 0u64;
    let mut current = match start {
        Some(c) => c,
        None => {
            let g = Graph::random(n, 0.5, rng.random()).expect("valid n");
            let (res, nodes) = score(&g, budget);
            spent += nodes;
            match res {
                Some((chi, omega)) => Candidate::new(g, chi, omega),
                None => {
                    let k = Graph::complete(n).expect("valid n");
                    Candidate::new(k, n as u32, n as u32)
                }
            }
        }
    };
    let mut best = current.clone();
    if n < 2 {
        return Found {
            best: Some(best),
            nodes: spent,
        };
    }
    for step in 0..STEPS_PER_RESTART {
        if spent >= budget {
            break;
        }
        let u = rng.random_range(0..n);
        let mut v = rng.random_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        let mut g = current.graph.clone();
        g.toggle_edge(u, v);
        let (res, nodes) = score(&g, budget - spent);
        spent = spent.saturating_add(nodes);
        let Some((chi, omega)) = res else { continue };
        let cand = Candidate::new(g, chi, omega);
        let delta = cand.ratio.to_f64() - current.ratio.to_f64();
        let temperature = START_TEMPERATURE * (1.0 - step as f64 / STEPS_PER_RESTART as f64);
        let accept = delta >= 0.0 || rng.random::<f64>() < (delta / temperature.max(1e-9)).exp();
        if accept {
            current = cand;
            best = Candidate::better(best, current.clone());
        }
    }
    Found {
        best: Some(best),
        nodes: spent,
    }
}

/// Restart seeds depend only on `seed`, never on the worker count.
fn restart_seed(seed: u64, i: u64) -> u64 {
    seed ^ (i + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// Best certified `χ / ω` on `n` vertices.
///
/// Each construction may spend up to `budget` coloring nodes; annealing
/// restarts share `budget` equally.
pub fn f_lower_search(n: usize, strategy: Strategy, seed: u64, budget: u64) -> Result<FRecord> {
    f_lower_search_seeded(n, strategy, seed, budget, &[])
}

/// [`f_lower_search`] with extra starting graphs, padded with isolated
/// vertices and scored alongside the constructions.
pub fn f_lower_search_seeded(
    n: usize,
    strategy: Strategy,
    seed: u64,
    budget: u64,
    extra: &[Graph],
) -> Result<FRecord> {
    if n == 0 || n > MAX_VERTICES {
        return Err(Error::input(format!(
            "n must be in 1..={MAX_VERTICES}, got {n}"
        )));
    }
    let extra = score_all(
        extra.iter().filter(|g| g.n() <= n).cloned().collect(),
        budget,
    );
    let mut found = match strategy {
        Strategy::Anneal => {
            let mut f = best_on(n, &[], &extra);
            if extra.is_empty() {
                f.best = None;
            }
            f
        }
        _ => best_on(n, &score_all(pieces(n), budget), &extra),
    };
    if strategy != Strategy::Constructions {
        let start = if strategy == Strategy::Hybrid {
            found.best.clone()
        } else {
            None
        };
        let share = budget / RESTARTS;
        let runs: Vec<Found> = (0..RESTARTS)
            .into_par_iter()
            .map(|i| anneal(start.clone(), n, restart_seed(seed, i), share))
            .collect();
        for run in runs {
            found.nodes = found.nodes.saturating_add(run.nodes);
            found.best = Candidate::better_opt(found.best.take(), run.best);
        }
    }
    let best = match found.best {
        Some(b) => b,
        None => Candidate::new(Graph::complete(n)?, n as u32, n as u32),
    };
    Ok(record(n, best, found.nodes, strategy, seed))
}

fn record(n: usize, best: Candidate, nodes: u64, strategy: Strategy, seed: u64) -> FRecord {
    FRecord {
        n,
        value: best.ratio,
        witness: best.graph,
        exhaustive: false,
        search_meta: SearchMeta {
            nodes,
            strategy: strategy.name().into(),
            seed,
            classes: None,
        },
    }
}

/// Construction bounds for every `n` in `1..=n_max`, equal row by row to
/// [`f_lower_search`] with [`Strategy::Constructions`], while solving each
/// seed graph once.
pub fn f_lower_profile(n_max: usize, seed: u64, budget: u64) -> Result<Vec<FRecord>> {
    if n_max == 0 || n_max > MAX_VERTICES {
        return Err(Error::input(format!(
            "n_max must be in 1..={MAX_VERTICES}, got {n_max}"
        )));
    }
    let scored = score_all(pieces(n_max), budget);
    Ok((1..=n_max)
        .map(|n| {
            let found = best_on(n, &scored, &[]);
            let best = found.best.expect("K_n is always a candidate");
            record(n, best, found.nodes, Strategy::Constructions, seed)
        })
        .collect())
}
