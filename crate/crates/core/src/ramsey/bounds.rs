use super::table::{BoundsTable, RamseyBoundRecord};
use crate::error::{Error, Result};
use crate::graph::{clique_number, independence_number, Graph};

/// `C(s+t-2, s-1)`, the classical upper bound on `R(s, t)`.
pub fn erdos_szekeres_bound(s: u32, t: u32) -> Result<u64> {
    if s < 1 || t < 1 {
        return Err(Error::input(format!("R({s},{t}) needs s, t >= 1")));
    }
    let n = (s + t - 2) as u128;
    let k = (s - 1).min(t - 1) as u128;
    let mut c: u128 = 1;
    for i in 0..k {
        // c * (n - i) is divisible by (i + 1) at every step.
        c = c
            .checked_mul(n - i)
            .ok_or_else(|| Error::Overflow(format!("C({n},{k})")))?
            / (i + 1);
    }
    u64::try_from(c).map_err(|_| Error::Overflow(format!("C({n},{k}) exceeds u64")))
}

/// Lower bound certified by a Paley graph: with `ω = s - 1` and `α = t - 1`
/// the graph is a coloring of `K_q` without red `K_s` or blue `K_t`, so
/// `R(s, t) >= q + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaleyBound {
    pub q: usize,
    pub s: u32,
    pub t: u32,
    pub lower: u64,
}

pub fn paley_witness_bound(q: usize) -> Result<PaleyBound> {
    let g = Graph::paley(q)?;
    let omega = clique_number(&g).value;
    let alpha = independence_number(&g).value;
    let (s, t) = super::canonical_pair(omega + 1, alpha + 1);
    Ok(PaleyBound {
        q,
        s,
        t,
        lower: q as u64 + 1,
    })
}

/// Closes the table under `R(s,t) <= R(s-1,t) + R(s,t-1)`, with `-1` when
/// both summands are even, over all pairs with `t` up to the table's
/// largest `t`.
///
/// Existing upper bounds only ever decrease and existing lower bounds are
/// left untouched. Pairs absent from the table are added when both
/// summands are known; their lower bound is `max(lower(s-1,t),
/// lower(s,t-1)) + 1`. The result is a fixpoint, so applying the closure
/// again changes nothing.
pub fn recurrence_closure(table: &BoundsTable) -> Result<BoundsTable> {
    let mut out = table.clone();
    let t_max = match table.max_t() {
        Some(t) => t,
        None => return Ok(out),
    };
    loop {
        let mut changed = false;
        for sum in 6..=2 * t_max {
            for s in 3..=sum / 2 {
                let t = sum - s;
                if t > t_max {
                    continue;
                }
                let (Some(a), Some(b)) = (out.query(s - 1, t), out.query(s, t - 1)) else {
                    continue;
                };
                let bound = a.upper + b.upper - u64::from(a.upper % 2 == 0 && b.upper % 2 == 0);
                match out.get_stored(s, t).cloned() {
                    Some(rec) if bound < rec.upper => {
                        if bound < rec.lower {
                            return Err(Error::Verification(format!(
                                "recurrence gives R({s},{t}) <= {bound} below stored lower {}",
                                rec.lower
                            )));
                        }
                        out.replace(RamseyBoundRecord {
                            upper: bound,
                            source: format!("{}; upper via recurrence", rec.source),
                            ..rec
                        });
                        changed = true;
                    }
                    Some(_) => {}
                    None => {
                        out.insert(RamseyBoundRecord {
                            s,
                            t,
                            lower: a.lower.max(b.lower) + 1,
                            upper: bound,
                            source: "recurrence closure".into(),
                        })?;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return Ok(out);
        }
    }
}
