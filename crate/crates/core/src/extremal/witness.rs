use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{chromatic_bounds, clique_number, independence_number, Graph};

/// Default coloring budget when reporting χ next to the `α ω` bound.
const CHI_BUDGET: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RatioWitnessReport {
    pub n: usize,
    pub graph: Graph,
    /// `None` when χ was not settled within the coloring budget.
    pub chi: Option<u32>,
    pub omega: u32,
    pub alpha: u32,
    /// `(log2 n)^2 / (α ω)`.
    pub g_lower: f64,
}

/// Lower bound on `f(n) (log2 n)^2 / n` from a single graph, using
/// `χ >= n / α`.
pub fn g_lower_witness(g: &Graph) -> Result<RatioWitnessReport> {
    let n = g.n();
    if n < 2 {
        return Err(Error::input(
            "the (log n)^2 / (alpha omega) bound needs n >= 2",
        ));
    }
    let omega = clique_number(g).value;
    let alpha = independence_number(g).value;
    let chi = chromatic_bounds(g, CHI_BUDGET);
    let log = (n as f64).log2();
    Ok(RatioWitnessReport {
        n,
        graph: g.clone(),
        chi: chi.exact.then_some(chi.upper),
        omega,
        alpha,
        g_lower: log * log / (alpha as f64 * omega as f64),
    })
}
