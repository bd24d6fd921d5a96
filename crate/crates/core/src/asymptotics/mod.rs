//! Rate functions and constants governing the asymptotics of `f(n)`.
//!
//! All logarithms are base 2. `log e` inside φ and its stationarity
//! condition means `log2(e)`.

mod binom;
mod envelope;
mod rate;

pub use binom::{
    entropy_binomial_check, entropy_binomial_row, log2_binomial, min_product_binom,
    min_product_brute_force,
};
pub use envelope::{f_bound_curves, k_n_from_table, Envelope, KnResult, ERDOS_LOWER_RATE};
pub use rate::{
    diagonal_constant, entropy, golden_section_max, maximize_phi, phi, stationarity_residual,
    Bracket, ConstantsReport,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// δ in the improved diagonal rate `R(s,t) <= e^{-δ s + o(t)} C(s+t, s)`.
pub const DEFAULT_DELTA: f64 = 0.14 / std::f64::consts::E;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RateParams {
    pub delta: f64,
}

impl RateParams {
    pub fn new(delta: f64) -> Result<Self> {
        if !(delta >= 0.0 && delta.is_finite()) {
            return Err(Error::input(format!(
                "delta must be finite and >= 0, got {delta}"
            )));
        }
        Ok(RateParams { delta })
    }

    /// `δ log2(e)`, the linear penalty inside φ.
    pub fn penalty(&self) -> f64 {
        self.delta * std::f64::consts::LOG2_E
    }
}

impl Default for RateParams {
    fn default() -> Self {
        RateParams {
            delta: DEFAULT_DELTA,
        }
    }
}
