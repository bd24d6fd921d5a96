//! Two-color Ramsey numbers `R(s, t)`: exact search at desk scale,
//! classical upper bounds and a table of known bounds.

mod bounds;
mod derive;
mod search;
mod table;

pub use bounds::{erdos_szekeres_bound, paley_witness_bound, recurrence_closure, PaleyBound};
pub use derive::derive_small_table;
pub use search::{ramsey_exact_small, RamseyOutcome, RamseyValue, RamseyWitness};
pub use table::{canonical_pair, BoundsTable, RamseyBoundRecord, DEFAULT_TABLE_JSON};
