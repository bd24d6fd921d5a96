//! Table of known Ramsey bounds, loaded from a JSON array of records
//! `{"s", "t", "lower", "upper", "source"}`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

/// The table shipped with the crate (`data/ramsey.json`).
pub const DEFAULT_TABLE_JSON: &str = include_str!("../../../../data/ramsey.json");

/// `(min, max)`; `R(s, t) = R(t, s)`.
pub fn canonical_pair(s: u32, t: u32) -> (u32, u32) {
    if s <= t {
        (s, t)
    } else {
        (t, s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyBoundRecord {
    pub s: u32,
    pub t: u32,
    pub lower: u64,
    pub upper: u64,
    pub source: String,
}

impl RamseyBoundRecord {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    /// `R(1, t) = 1` and `R(2, t) = t`.
    pub fn trivial(s: u32, t: u32) -> Option<RamseyBoundRecord> {
        let (s, t) = canonical_pair(s, t);
        let value = match s {
            1 => 1,
            2 => t as u64,
            _ => return None,
        };
        Some(RamseyBoundRecord {
            s,
            t,
            lower: value,
            upper: value,
            source: "trivial (re-derivable)".into(),
        })
    }

    fn canonicalized(mut self) -> Self {
        (self.s, self.t) = canonical_pair(self.s, self.t);
        self
    }

    fn check(&self) -> std::result::Result<(), String> {
        if self.s < 1 {
            return Err(format!("s must be >= 1, got {}", self.s));
        }
        if self.lower < 1 {
            return Err(format!(
                "lower bound must be >= 1 for R({},{})",
                self.s, self.t
            ));
        }
        if self.lower > self.upper {
            return Err(format!(
                "lower {} exceeds upper {} for R({},{})",
                self.lower, self.upper, self.s, self.t
            ));
        }
        if let Some(trivial) = Self::trivial(self.s, self.t) {
            if (self.lower, self.upper) != (trivial.lower, trivial.upper) {
                return Err(format!(
                    "R({},{}) = {} exactly, record says [{}, {}]",
                    self.s, self.t, trivial.lower, self.lower, self.upper
                ));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundsTable {
    records: BTreeMap<(u32, u32), RamseyBoundRecord>,
}

impl BoundsTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// The shipped default table.
    pub fn default_table() -> Self {
        Self::from_json_str(DEFAULT_TABLE_JSON).expect("shipped table is valid")
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Adds a validated record under its canonical pair. A second record
    /// for the same pair is rejected.
    pub fn insert(&mut self, rec: RamseyBoundRecord) -> Result<()> {
        self.insert_at(rec, 0)
    }

    fn insert_at(&mut self, rec: RamseyBoundRecord, line: usize) -> Result<()> {
        let rec = rec.canonicalized();
        rec.check()
            .map_err(|message| Error::Record { line, message })?;
        let key = (rec.s, rec.t);
        if self.records.contains_key(&key) {
            return Err(Error::Record {
                line,
                message: format!("duplicate record for R({},{})", rec.s, rec.t),
            });
        }
        self.records.insert(key, rec);
        Ok(())
    }

    pub(crate) fn replace(&mut self, rec: RamseyBoundRecord) {
        let rec = rec.canonicalized();
        debug_assert!(rec.check().is_ok());
        self.records.insert((rec.s, rec.t), rec);
    }

    /// Raises the stored lower bound of `R(s, t)` to `lower` if that is an
    /// improvement; adds a record with an open upper end when none exists.
    pub fn raise_lower(&mut self, s: u32, t: u32, lower: u64, source: &str) -> Result<()> {
        let (s, t) = canonical_pair(s, t);
        match self.records.get(&(s, t)).cloned() {
            Some(rec) if lower > rec.upper => Err(Error::Verification(format!(
                "witness lower bound {lower} for R({s},{t}) exceeds stored upper {}",
                rec.upper
            ))),
            Some(rec) if lower > rec.lower => {
                self.replace(RamseyBoundRecord {
                    lower,
                    source: format!("{}; lower via {source}", rec.source),
                    ..rec
                });
                Ok(())
            }
            Some(_) => Ok(()),
            None => self.insert(RamseyBoundRecord {
                s,
                t,
                lower,
                upper: u64::MAX,
                source: source.into(),
            }),
        }
    }

    /// Stored record only, no trivial rows.
    pub fn get_stored(&self, s: u32, t: u32) -> Option<&RamseyBoundRecord> {
        self.records.get(&canonical_pair(s, t))
    }

    /// Record for `R(s, t)` in either argument order. Rows with
    /// `min(s, t) <= 2` are always answered; `None` marks an absent pair.
    pub fn query(&self, s: u32, t: u32) -> Option<RamseyBoundRecord> {
        if s == 0 || t == 0 {
            return None;
        }
        self.get_stored(s, t)
            .cloned()
            .or_else(|| RamseyBoundRecord::trivial(s, t))
    }

    pub fn records(&self) -> impl Iterator<Item = &RamseyBoundRecord> {
        self.records.values()
    }

    /// Largest `t` among stored records.
    pub fn max_t(&self) -> Option<u32> {
        self.records.keys().map(|&(_, t)| t).max()
    }

    /// Stored records plus the trivial rows `s <= 2` up to `t_max`.
    pub fn with_trivial_rows(&self, t_max: u32) -> BoundsTable {
        let mut out = self.clone();
        for s in 1..=2 {
            for t in s..=t_max {
                if out.get_stored(s, t).is_none() {
                    out.replace(RamseyBoundRecord::trivial(s, t).expect("s <= 2"));
                }
            }
        }
        out
    }

    /// Parses a JSON array of records. Errors name the 1-based line where
    /// the offending record starts.
    pub fn from_json_str(text: &str) -> Result<BoundsTable> {
        let raw: Vec<serde_json::Value> = serde_json::from_str(text)?;
        let lines = element_lines(text);
        let mut table = BoundsTable::new();
        for (i, value) in raw.into_iter().enumerate() {
            let line = lines.get(i).copied().unwrap_or(0);
            let rec: RamseyBoundRecord =
                serde_json::from_value(value).map_err(|e| Error::Record {
                    line,
                    message: e.to_string(),
                })?;
            table.insert_at(rec, line)?;
        }
        Ok(table)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<BoundsTable> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    /// One record per line, sorted by `(s, t)`.
    pub fn to_json_string(&self) -> String {
        let body: Vec<String> = self
            .records()
            .map(|r| format!("  {}", serde_json::to_string(r).expect("record serializes")))
            .collect();
        format!("[\n{}\n]\n", body.join(",\n"))
    }

    /// SHA-256 of the canonical serialization, hex encoded.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_json_string().as_bytes()))
    }
}

/// Line on which each top-level array element starts.
fn element_lines(text: &str) -> Vec<usize> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut line = 1;
    let mut in_string = false;
    let mut escaped = false;
    let mut expecting = false;
    for ch in text.chars() {
        if ch == '\n' {
            line += 1;
        }
        if in_string {
            match (escaped, ch) {
                (true, _) => escaped = false,
                (false, '\\') => escaped = true,
                (false, '"') => in_string = false,
                _ => {}
            }
            continue;
        }
        if depth == 1 && expecting && !ch.is_whitespace() {
            out.push(line);
            expecting = false;
        }
        match ch {
            '"' => in_string = true,
            '[' | '{' => {
                depth += 1;
                if depth == 1 {
                    expecting = true;
                }
            }
            ']' | '}' => depth = depth.saturating_sub(1),
            ',' if depth == 1 => expecting = true,
            _ => {}
        }
    }
    out
}
