//! Consistency of diagonal-type Ramsey conjectures with a bounds table.
//!
//! A comparison `R(a) <= R(b)` between two pairs with table intervals
//! `[lo_a, up_a]` and `[lo_b, up_b]` is violated when `lo_a > up_b`,
//! consistent otherwise, and confirmed when also `up_a <= lo_b`. It is
//! undecidable when either pair is missing from the table. Every verdict
//! carries the hash of the table it was checked against.

mod rates;

pub use rates::{
    diagonal_rate_report, empirical_rates, DiagonalRateReport, DiagonalRateRow, EmpiricalRates,
    RateEntry,
};

use rayon::prelude::*;
use serde::Serialize;

use crate::ramsey::BoundsTable;

/// Default scan extent, matching the shipped table.
pub const DEFAULT_S_MAX: u32 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Consistent,
    Violated,
    Undecidable,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub lower: u64,
    pub upper: u64,
}

/// `R(lhs) <= R(rhs)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub lhs: (u32, u32),
    pub rhs: (u32, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub lhs: Option<Interval>,
    pub rhs: Option<Interval>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjectureVerdict {
    pub conjecture: &'static str,
    pub instance: Instance,
    pub status: Status,
    pub confirmed: bool,
    pub evidence: Evidence,
    pub table_hash: String,
}

impl ConjectureVerdict {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("verdict serializes")
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerdictSummary {
    pub total: usize,
    pub consistent: usize,
    pub confirmed: usize,
    pub violated: usize,
    pub undecidable: usize,
}

pub fn summarize(verdicts: &[ConjectureVerdict]) -> VerdictSummary {
    let mut s = VerdictSummary {
        total: verdicts.len(),
        ..Default::default()
    };
    for v in verdicts {
        match v.status {
            Status::Consistent => s.consistent += 1,
            Status::Violated => s.violated += 1,
            Status::Undecidable => s.undecidable += 1,
        }
        s.confirmed += v.confirmed as usize;
    }
    s
}

fn interval(table: &BoundsTable, (s, t): (u32, u32)) -> Option<Interval> {
    table.query(s, t).map(|r| Interval {
        lower: r.lower,
        upper: r.upper,
    })
}

fn judge(
    conjecture: &'static str,
    table: &BoundsTable,
    hash: &str,
    instance: Instance,
) -> ConjectureVerdict {
    let lhs = interval(table, instance.lhs);
    let rhs = interval(table, instance.rhs);
    let (status, confirmed) = match (lhs, rhs) {
        (Some(a), Some(b)) if a.lower > b.upper => (Status::Violated, false),
        (Some(a), Some(b)) => (Status::Consistent, a.upper <= b.lower),
        _ => (Status::Undecidable, false),
    };
    ConjectureVerdict {
        conjecture,
        instance,
        status,
        confirmed,
        evidence: Evidence { lhs, rhs },
        table_hash: hash.to_string(),
    }
}

fn judge_all(
    conjecture: &'static str,
    table: &BoundsTable,
    instances: Vec<Instance>,
) -> Vec<ConjectureVerdict> {
    let hash = table.hash();
    instances
        .into_par_iter()
        .map(|i| judge(conjecture, table, &hash, i))
        .collect()
}

/// `s1 <= s2 <= t2 <= t1` with all entries in `1..=s_max`.
fn nested_pairs(s_max: u32) -> impl Iterator<Item = (u32, u32, u32, u32)> {
    (1..=s_max).flat_map(move |s1| {
        (s1..=s_max).flat_map(move |s2| {
            (s2..=s_max).flat_map(move |t2| (t2..=s_max).map(move |t1| (s1, t1, s2, t2)))
        })
    })
}

/// `R(s, t) <= R(k, k)` whenever `s t <= k^2`, for `s <= t <= s_max` and
/// every `k` with `s t <= k^2 <= s_max^2`.
pub fn check_weak_mult_rdc(table: &BoundsTable, s_max: u32) -> Vec<ConjectureVerdict> {
    let mut instances = Vec::new();
    for s in 1..=s_max {
        for t in s..=s_max {
            let st = s * t;
            let k_min = (1..=s_max).find(|k| k * k >= st).expect("k = s_max works");
            for k in k_min..=s_max {
                instances.push(Instance {
                    lhs: (s, t),
                    rhs: (k, k),
                });
            }
        }
    }
    judge_all("weak_mult_rdc", table, instances)
}

/// `R(s1, t1) <= R(s2, t2)` for `s1 <= s2 <= t2 <= t1` with
/// `s1 + t1 <= s2 + t2`.
pub fn check_rdc(table: &BoundsTable, s_max: u32) -> Vec<ConjectureVerdict> {
    let instances = nested_pairs(s_max)
        .filter(|&(s1, t1, s2, t2)| s1 + t1 <= s2 + t2)
        .map(|(s1, t1, s2, t2)| {
            // Every additive instance is also a multiplicative one.
            assert!(s1 * t1 <= s2 * t2, "({s1},{t1}) vs ({s2},{t2})");
            Instance {
                lhs: (s1, t1),
                rhs: (s2, t2),
            }
        })
        .collect();
    judge_all("rdc", table, instances)
}

/// `R(s1, t1) <= R(s2, t2)` for `s1 <= s2 <= t2 <= t1` with
/// `s1 t1 <= s2 t2`.
pub fn check_mult_rdc(table: &BoundsTable, s_max: u32) -> Vec<ConjectureVerdict> {
    let instances = nested_pairs(s_max)
        .filter(|&(s1, t1, s2, t2)| s1 * t1 <= s2 * t2)
        .map(|(s1, t1, s2, t2)| Instance {
            lhs: (s1, t1),
            rhs: (s2, t2),
        })
        .collect();
    judge_all("mult_rdc", table, instances)
}

/// First `(s1, t1, s2, t2)` in `[1, n]^4`, in lexicographic order, with
/// `s1 <= s2 <= t2 <= t1` and `s1 t1 <= s2 t2` but `s1 + t1 > s2 + t2`.
pub fn implication_quadruples(n: u32) -> Option<(u32, u32, u32, u32)> {
    nested_pairs(n)
        .filter(|&(s1, t1, s2, t2)| s1 * t1 <= s2 * t2 && s1 + t1 > s2 + t2)
        .min()
}

/// The reverse direction: nested pairs with `s1 + t1 <= s2 + t2` but
/// `s1 t1 > s2 t2`. First in lexicographic order, if any.
pub fn converse_implication_quadruples(n: u32) -> Option<(u32, u32, u32, u32)> {
    nested_pairs(n)
        .filter(|&(s1, t1, s2, t2)| s1 + t1 <= s2 + t2 && s1 * t1 > s2 * t2)
        .min()
}
