//! Finite evaluation of the `n / (log2 n)^2` envelope and the diagonal
//! bracket `R(k, k) <= n < R(k+1, k+1)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ramsey::BoundsTable;

/// Lower rate from `R(k, k) >= 2^{k/2}`.
pub const ERDOS_LOWER_RATE: f64 = 0.5;

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Envelope {
    pub n: u64,
    pub lower: f64,
    pub upper: f64,
}

/// `(L^2 n / (log2 n)^2, M^2 n / (log2 n)^2)`.
pub fn f_bound_curves(n: u64, lower_rate: f64, upper_rate: f64) -> Result<Envelope> {
    if n < 2 {
        return Err(Error::input(format!("envelope needs n >= 2, got {n}")));
    }
    let log = (n as f64).log2();
    let scale = n as f64 / (log * log);
    Ok(Envelope {
        n,
        lower: lower_rate * lower_rate * scale,
        upper: upper_rate * upper_rate * scale,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KnResult {
    Exact {
        k: u32,
    },
    /// `hi` is `None` when the table's diagonal data ends before `k_n` is
    /// bounded above.
    Range {
        lo: u32,
        hi: Option<u32>,
    },
    Undecidable {
        reason: String,
    },
}

/// The largest `k` with `R(k, k) <= n`, as far as the table's diagonal
/// bounds determine it.
pub fn k_n_from_table(n: u64, table: &BoundsTable) -> Result<KnResult> {
    if n == 0 {
        return Err(Error::input("k_n needs n >= 1"));
    }
    // Diagonal bounds for k = 1, 2, ... while the table has them.
    let mut diag = Vec::new();
    for k in 1.. {
        match table.query(k, k) {
            Some(rec) => diag.push((k, rec.lower, rec.upper)),
            None => break,
        }
    }
    let surely = diag
        .iter()
        .filter(|d| d.2 <= n)
        .map(|d| d.0)
        .max()
        .unwrap_or(0);
    let maybe = diag
        .iter()
        .filter(|d| d.1 <= n)
        .map(|d| d.0)
        .max()
        .unwrap_or(0);
    let last = diag.last().map_or(0, |d| d.0);
    let open = maybe == last;
    if open && last <= 2 {
        return Ok(KnResult::Undecidable {
            reason: format!("the table has no diagonal bound that separates n = {n}"),
        });
    }
    Ok(match (surely == maybe, open) {
        (true, false) => KnResult::Exact { k: surely },
        (_, true) => KnResult::Range {
            lo: surely,
            hi: None,
        },
        (false, false) => KnResult::Range {
            lo: surely,
            hi: Some(maybe),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ramsey::RamseyBoundRecord;

    #[test]
    fn curves() {
        let e = f_bound_curves(1024, 0.5, 2.0).unwrap();
        assert!((e.lower - 2.56).abs() < 1e-12);
        let e = f_bound_curves(1024, 0.5, 3.71943f64.sqrt()).unwrap();
        assert!((e.upper - 38.0870).abs() < 1e-3, "{}", e.upper);
        let e = f_bound_curves(300, 1.3, 1.3).unwrap();
        assert!((e.lower / e.upper - 1.0).abs() < 1e-15);
        assert!(f_bound_curves(1, 0.5, 2.0).is_err());
    }

    #[test]
    fn default_table_brackets() {
        let t = BoundsTable::default_table();
        assert_eq!(k_n_from_table(1, &t).unwrap(), KnResult::Exact { k: 1 });
        assert_eq!(k_n_from_table(5, &t).unwrap(), KnResult::Exact { k: 2 });
        assert_eq!(k_n_from_table(6, &t).unwrap(), KnResult::Exact { k: 3 });
        assert_eq!(k_n_from_table(17, &t).unwrap(), KnResult::Exact { k: 3 });
        assert_eq!(k_n_from_table(18, &t).unwrap(), KnResult::Exact { k: 4 });
        // 43 <= R(5,5) <= 48.
        assert_eq!(
            k_n_from_table(45, &t).unwrap(),
            KnResult::Range { lo: 4, hi: Some(5) }
        );
        assert_eq!(
            k_n_from_table(100_000, &t).unwrap(),
            KnResult::Range { lo: 10, hi: None }
        );
        assert!(k_n_from_table(0, &t).is_err());
    }

    #[test]
    fn sparse_tables() {
        let empty = BoundsTable::new();
        assert_eq!(k_n_from_table(1, &empty).unwrap(), KnResult::Exact { k: 1 });
        assert!(matches!(
            k_n_from_table(10, &empty).unwrap(),
            KnResult::Undecidable { .. }
        ));
        let mut t = BoundsTable::new();
        t.insert(RamseyBoundRecord {
            s: 3,
            t: 3,
            lower: 6,
            upper: 6,
            source: "x".into(),
        })
        .unwrap();
        assert_eq!(k_n_from_table(5, &t).unwrap(), KnResult::Exact { k: 2 });
        assert_eq!(
            k_n_from_table(7, &t).unwrap(),
            KnResult::Range { lo: 3, hi: None }
        );
    }
}
