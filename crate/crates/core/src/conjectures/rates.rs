//! Growth rates `log2 R(s,t) / sqrt(s t)` read off a table, and the
//! comparison with the diagonal rate `log2 R(k,k) / (k - 1)`.

use serde::Serialize;

use super::Status;
use crate::ramsey::BoundsTable;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RateEntry {
    pub s: u32,
    pub t: u32,
    pub exact: bool,
    /// `log2 lower / sqrt(s t)`.
    pub rate_lower: f64,
    /// `log2 upper / sqrt(s t)`; `None` for an open upper end.
    pub rate_upper: Option<f64>,
    /// `log2 R(k,k) / k` bounds, diagonal entries only.
    pub diagonal_lower: Option<f64>,
    pub diagonal_upper: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmpiricalRates {
    pub entries: Vec<RateEntry>,
    /// Largest `log2 R(s,t) / sqrt(s t)` over exact entries, with its pair.
    pub max_rate: Option<(f64, (u32, u32))>,
    /// Largest `log2 R(k,k) / k` over exact diagonal entries.
    pub max_diagonal_rate: Option<(f64, u32)>,
    pub table_hash: String,
}

fn log_rate(v: u64, scale: f64) -> f64 {
    (v as f64).log2() / scale
}

/// Rates for every stored pair and the trivial rows up to the table's
/// largest `t`.
pub fn empirical_rates(table: &BoundsTable) -> EmpiricalRates {
    let full = table.with_trivial_rows(table.max_t().unwrap_or(2).max(2));
    let mut entries = Vec::new();
    let mut max_rate: Option<(f64, (u32, u32))> = None;
    let mut max_diagonal_rate: Option<(f64, u32)> = None;
    for rec in full.records() {
        let (s, t) = (rec.s, rec.t);
        let root = ((s * t) as f64).sqrt();
        let open = rec.upper == u64::MAX;
        let diagonal = s == t;
        let entry = RateEntry {
            s,
            t,
            exact: rec.is_exact(),
            rate_lower: log_rate(rec.lower, root),
            rate_upper: (!open).then(|| log_rate(rec.upper, root)),
            diagonal_lower: diagonal.then(|| log_rate(rec.lower, s as f64)),
            diagonal_upper: (diagonal && !open).then(|| log_rate(rec.upper, s as f64)),
        };
        if entry.exact {
            if max_rate.is_none_or(|(r, _)| entry.rate_lower > r) {
                max_rate = Some((entry.rate_lower, (s, t)));
            }
            if let Some(d) = entry.diagonal_lower {
                if max_diagonal_rate.is_none_or(|(r, _)| d > r) {
                    max_diagonal_rate = Some((d, s));
                }
            }
        }
        entries.push(entry);
    }
    EmpiricalRates {
        entries,
        max_rate,
        max_diagonal_rate,
        table_hash: table.hash(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagonalRateRow {
    pub s: u32,
    pub t: u32,
    /// Least `k` with `(k-1)^2 < s t <= k^2`.
    pub k: u32,
    /// `log2 R(s,t) / sqrt(s t)`.
    pub lhs: f64,
    /// `log2 R(k,k) / (k - 1)`, when `R(k,k)` is exact.
    pub rhs: Option<f64>,
    /// `consistent` when the inequality holds, `violated` when it fails.
    pub status: Status,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiagonalRateReport {
    pub rows: Vec<DiagonalRateRow>,
    pub table_hash: String,
}

/// `log2 R(s,t) / sqrt(s t) <= log2 R(k,k) / (k - 1)` for every exact pair
/// with `k >= 2`, using table values.
pub fn diagonal_rate_report(table: &BoundsTable) -> DiagonalRateReport {
    let full = table.with_trivial_rows(table.max_t().unwrap_or(2).max(2));
    let mut rows = Vec::new();
    for rec in full.records().filter(|r| r.is_exact()) {
        let st = rec.s * rec.t;
        let k = (1..).find(|k: &u32| k * k >= st).expect("finite");
        if k < 2 {
            continue;
        }
        let lhs = log_rate(rec.lower, (st as f64).sqrt());
        let rhs = full
            .query(k, k)
            .filter(|d| d.is_exact())
            .map(|d| log_rate(d.lower, (k - 1) as f64));
        let status = match rhs {
            Some(r) if lhs <= r => Status::Consistent,
            Some(_) => Status::Violated,
            None => Status::Undecidable,
        };
        rows.push(DiagonalRateRow {
            s: rec.s,
            t: rec.t,
            k,
            lhs,
            rhs,
            status,
        });
    }
    DiagonalRateReport {
        rows,
        table_hash: table.hash(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn entry(r: &EmpiricalRates, s: u32, t: u32) -> RateEntry {
        r.entries
            .iter()
            .find(|e| e.s == s && e.t == t)
            .cloned()
            .unwrap()
    }

    #[test]
    fn rates_on_default_table() {
        let r = empirical_rates(&BoundsTable::default_table());
        assert_eq!(entry(&r, 2, 2).diagonal_lower, Some(0.5));
        assert!((entry(&r, 3, 3).diagonal_lower.unwrap() - 6f64.log2() / 3.0).abs() < 1e-12);
        let r44 = entry(&r, 4, 4).diagonal_lower.unwrap();
        assert!((r44 - 1.0425).abs() < 1e-4, "{r44}");
        assert_eq!(r.max_diagonal_rate.unwrap().1, 4);
        let (best, pair) = r.max_rate.unwrap();
        assert_eq!(pair, (4, 4));
        assert!((best - r44).abs() < 1e-15);
        let open = entry(&r, 5, 5);
        assert!(!open.exact);
        assert!(open.rate_lower < open.rate_upper.unwrap());
    }

    #[test]
    fn diagonal_rate_on_default_table() {
        let rep = diagonal_rate_report(&BoundsTable::default_table());
        let row = |s, t| {
            rep.rows
                .iter()
                .find(|r| r.s == s && r.t == t)
                .unwrap()
                .clone()
        };
        let r33 = row(3, 3);
        assert_eq!(r33.k, 3);
        assert!((r33.rhs.unwrap() - 6f64.log2() / 2.0).abs() < 1e-12);
        let r35 = row(3, 5);
        assert_eq!(r35.k, 4);
        assert!((r35.lhs - 14f64.log2() / 15f64.sqrt()).abs() < 1e-12);
        assert_eq!(r35.status, Status::Consistent);
        // k = 5 for 3 * 7 = 21, and R(5,5) is open.
        assert_eq!(row(3, 7).status, Status::Undecidable);
        assert!(rep.rows.iter().all(|r| r.status != Status::Violated));
    }
}
