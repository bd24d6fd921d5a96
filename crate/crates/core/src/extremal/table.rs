//! Persisted f-table: JSON rows and a CSV export, plus re-verification.

use serde::{Deserialize, Serialize};

use super::{FRecord, Ratio, SearchMeta};
use crate::error::{Error, Result};
use crate::graph::{chromatic_number, clique_number, Graph};

/// The table shipped with the crate (`data/f_table.json`), exhaustive for
/// `n <= 8`.
pub const DEFAULT_F_TABLE_JSON: &str = include_str!("../../../../data/f_table.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FTableRow {
    pub n: usize,
    pub chi: u32,
    pub omega: u32,
    pub witness_graph6: String,
    pub exhaustive: bool,
    pub seed: u64,
}

impl From<&FRecord> for FTableRow {
    fn from(r: &FRecord) -> Self {
        FTableRow {
            n: r.n,
            chi: r.value.num,
            omega: r.value.den,
            witness_graph6: r.witness.to_graph6(),
            exhaustive: r.exhaustive,
            seed: r.search_meta.seed,
        }
    }
}

/// One row per line.
pub fn f_table_to_json(records: &[FRecord]) -> String {
    let rows: Vec<String> = records
        .iter()
        .map(|r| {
            format!(
                "  {}",
                serde_json::to_string(&FTableRow::from(r)).expect("row serializes")
            )
        })
        .collect();
    if rows.is_empty() {
        return "[]\n".into();
    }
    format!("[\n{}\n]\n", rows.join(",\n"))
}

pub fn f_table_from_json(text: &str) -> Result<Vec<FRecord>> {
    let rows: Vec<FTableRow> = serde_json::from_str(text)?;
    rows.into_iter()
        .enumerate()
        .map(|(i, row)| {
            let witness = Graph::from_graph6(&row.witness_graph6).map_err(|e| Error::Record {
                line: i + 2,
                message: format!("n={}: {e}", row.n),
            })?;
            if row.omega == 0 {
                return Err(Error::Record {
                    line: i + 2,
                    message: format!("n={}: omega must be positive", row.n),
                });
            }
            Ok(FRecord {
                n: row.n,
                value: Ratio::new(row.chi, row.omega),
                witness,
                exhaustive: row.exhaustive,
                search_meta: SearchMeta {
                    nodes: 0,
                    strategy: "table".into(),
                    seed: row.seed,
                    classes: None,
                },
            })
        })
        .collect()
}

/// `n,f,exhaustive` with `f` in decimal.
pub fn f_table_csv(records: &[FRecord]) -> String {
    let mut out = String::from("n,f,exhaustive\n");
    for r in records {
        out.push_str(&format!(
            "{},{:.6},{}\n",
            r.n,
            r.value.to_f64(),
            r.exhaustive
        ));
    }
    out
}

/// Recomputes every witness and checks `f(n) >= 1` and `f(n+1) >= f(n)`
/// over consecutive `n`.
pub fn verify_f_table(records: &[FRecord]) -> Result<()> {
    for (i, r) in records.iter().enumerate() {
        if i > 0 && r.n != records[i - 1].n + 1 {
            return Err(Error::Verification(format!(
                "n={} follows n={}; rows must be consecutive",
                r.n,
                records[i - 1].n
            )));
        }
        if r.witness.n() != r.n {
            return Err(Error::Verification(format!(
                "n={}: witness has {} vertices",
                r.n,
                r.witness.n()
            )));
        }
        let chi = chromatic_number(&r.witness).value;
        let omega = clique_number(&r.witness).value;
        if (chi, omega) != (r.value.num, r.value.den) {
            return Err(Error::Verification(format!(
                "n={}: witness has chi/omega = {chi}/{omega}, record claims {}",
                r.n, r.value
            )));
        }
        if r.value < Ratio::one() {
            return Err(Error::Verification(format!(
                "n={}: ratio {} below 1",
                r.n, r.value
            )));
        }
        if i > 0 && r.value < records[i - 1].value {
            return Err(Error::Verification(format!(
                "n={}: {} drops below {} at n={}",
                r.n,
                r.value,
                records[i - 1].value,
                records[i - 1].n
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::f_exact;

    fn exact_rows(n_max: usize) -> Vec<FRecord> {
        (1..=n_max)
            .map(|n| f_exact(n, u64::MAX, false).unwrap())
            .collect()
    }

    #[test]
    fn exact_table_verifies_and_roundtrips() {
        let rows = exact_rows(6);
        verify_f_table(&rows).unwrap();
        let text = f_table_to_json(&rows);
        let back = f_table_from_json(&text).unwrap();
        assert_eq!(back.len(), 6);
        for (a, b) in rows.iter().zip(&back) {
            assert_eq!(FTableRow::from(a), FTableRow::from(b));
        }
        assert!(f_table_csv(&rows).starts_with("n,f,exhaustive\n1,1.000000,true\n"));
        verify_f_table(&[]).unwrap();
    }

    #[test]
    fn detects_violations() {
        let mut rows = exact_rows(6);
        // Replace f(6) by a smaller value with a valid witness.
        rows[5].value = Ratio::one();
        rows[5].witness = Graph::new(6).unwrap();
        let err = verify_f_table(&rows).unwrap_err().to_string();
        assert!(err.contains("n=6"), "{err}");

        let mut rows = exact_rows(5);
        rows[4].witness = Graph::complete(5).unwrap();
        let err = verify_f_table(&rows).unwrap_err().to_string();
        assert!(err.contains("n=5"), "{err}");

        let rows = exact_rows(3);
        assert!(verify_f_table(&[rows[0].clone(), rows[2].clone()]).is_err());
    }

    #[test]
    fn shipped_table() {
        let rows = f_table_from_json(DEFAULT_F_TABLE_JSON).unwrap();
        assert_eq!(rows.len(), 8);
        assert!(rows.iter().all(|r| r.exhaustive));
        verify_f_table(&rows).unwrap();
        assert_eq!(f_table_to_json(&rows), DEFAULT_F_TABLE_JSON);
    }

    #[test]
    fn rejects_bad_json() {
        assert!(f_table_from_json("[{\"n\":1}]").is_err());
        let bad = r#"[{"n":1,"chi":1,"omega":1,"witness_graph6":"??","exhaustive":true,"seed":0}]"#;
        assert!(f_table_from_json(bad).is_err());
    }
}
