//! Binary entropy, φ and its maximization.

use serde::{Deserialize, Serialize};

use super::RateParams;
use crate::error::{Error, Result};

/// `H(x) = -x log2 x - (1-x) log2 (1-x)`, with `H(0) = H(1) = 0`.
pub fn entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::input(format!(
            "entropy argument must be in [0,1], got {x}"
        )));
    }
    Ok(entropy_unchecked(x))
}

#[inline]
fn xlog2x(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

#[inline]
pub(crate) fn entropy_unchecked(x: f64) -> f64 {
    -xlog2x(x) - xlog2x(1.0 - x)
}

fn open_unit(x: f64) -> Result<()> {
    if x > 0.0 && x < 1.0 {
        Ok(())
    } else {
        Err(Error::input(format!("argument must be in (0,1), got {x}")))
    }
}

#[inline]
fn phi_unchecked(x: f64, penalty: f64) -> f64 {
    (entropy_unchecked(x) - penalty * x) / (x * (1.0 - x)).sqrt()
}

#[inline]
fn residual_unchecked(x: f64, penalty: f64) -> f64 {
    xlog2x(1.0 - x) - xlog2x(x) - penalty * x
}

/// `φ(x) = (H(x) - δ x log2 e) / sqrt(x (1 - x))`.
pub fn phi(x: f64, params: &RateParams) -> Result<f64> {
    open_unit(x)?;
    Ok(phi_unchecked(x, params.penalty()))
}

/// `(1-x) log2(1-x) - x log2 x - δ x log2 e`; its root in `(0, 1/2]` is
/// where φ is stationary.
pub fn stationarity_residual(x: f64, params: &RateParams) -> Result<f64> {
    open_unit(x)?;
    Ok(residual_unchecked(x, params.penalty()))
}

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`
/// until the bracket is at most `tol` wide. Returns the final bracket.
pub fn golden_section_max(
    f: impl Fn(f64) -> f64,
    mut lo: f64,
    mut hi: f64,
    tol: f64,
) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - inv_phi * (hi - lo);
    let mut d = lo + inv_phi * (hi - lo);
    let (mut fc, mut fd) = (f(c), f(d));
    while hi - lo > tol {
        if fc >= fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - inv_phi * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + inv_phi * (hi - lo);
            fd = f(d);
        }
    }
    (lo, hi)
}

/// `[lo, hi]` with `residual(lo) > 0 >= residual(hi)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConstantsReport {
    pub delta: f64,
    /// Maximizer of φ on `(0, 1/2]` from the golden-section search.
    pub x_star: f64,
    pub phi_max: f64,
    pub phi_max_sq: f64,
    pub diagonal_constant: f64,
    pub tol: f64,
    /// Root of the stationarity residual, located by bisection.
    pub x_root: f64,
    pub bracket: Bracket,
    /// `x_star` and `x_root` agree within the comparison tolerance.
    pub locations_agree: bool,
}

/// Lower end of the search interval; φ vanishes as `x -> 0`.
const SEARCH_LO: f64 = 1e-6;

/// Maximizes φ over `(0, 1/2]` by golden section and, independently,
/// bisects the stationarity residual.
///
/// Near its maximum φ is flat to second order, so in `f64` the
/// golden-section location is only resolved to about `sqrt(eps)`; the two
/// locations are compared at `10 * max(tol, sqrt(eps))`.
pub fn maximize_phi(params: &RateParams, tol: f64) -> Result<ConstantsReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::input(format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let penalty = params.penalty();
    let f = |x: f64| phi_unchecked(x, penalty);

    let (lo, hi) = golden_section_max(f, SEARCH_LO, 0.5, tol);
    let mid = 0.5 * (lo + hi);
    let x_star = [mid, lo, hi, 0.5]
        .into_iter()
        .fold(mid, |best, x| if f(x) > f(best) { x } else { best });
    let phi_max = f(x_star);

    let r = |x: f64| residual_unchecked(x, penalty);
    let (mut a, mut b) = (SEARCH_LO, 0.5);
    if r(a) <= 0.0 {
        b = a;
    } else if r(b) <= 0.0 {
        while b - a > tol {
            let m = 0.5 * (a + b);
            if r(m) > 0.0 {
                a = m;
            } else {
                b = m;
            }
        }
    } else {
        a = b;
    }
    let x_root = 0.5 * (a + b);
    let agree_tol = 10.0 * tol.max(f64::EPSILON.sqrt());

    Ok(ConstantsReport {
        delta: params.delta,
        x_star,
        phi_max,
        phi_max_sq: phi_max * phi_max,
        diagonal_constant: diagonal_constant(params),
        tol,
        x_root,
        bracket: Bracket { lo: a, hi: b },
        locations_agree: (x_star - x_root).abs() <= agree_tol,
    })
}

/// `(log2(4 e^{-δ}))^2`.
pub fn diagonal_constant(params: &RateParams) -> f64 {
    let rate = 2.0 - params.penalty();
    rate * rate
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotics::DEFAULT_DELTA;

    fn zero() -> RateParams {
        RateParams::new(0.0).unwrap()
    }

    #[test]
    fn entropy_values() {
        assert!((entropy(0.5).unwrap() - 1.0).abs() < 1e-12);
        assert_eq!(entropy(0.0).unwrap(), 0.0);
        assert_eq!(entropy(1.0).unwrap(), 0.0);
        assert!((entropy(0.3).unwrap() - entropy(0.7).unwrap()).abs() < 1e-15);
        assert!(entropy(-0.1).is_err() && entropy(1.1).is_err() && entropy(f64::NAN).is_err());
    }

    #[test]
    fn phi_values() {
        assert!((phi(0.5, &zero()).unwrap() - 2.0).abs() < 1e-15);
        let d = RateParams::default();
        let expect = 2.0 - DEFAULT_DELTA * std::f64::consts::LOG2_E;
        assert!((phi(0.5, &d).unwrap() - expect).abs() < 1e-15);
        assert!((phi(0.5, &d).unwrap() - 1.92570).abs() < 1e-5);
        assert!(phi(1e-6, &d).unwrap() < 0.03);
        assert!(phi(0.0, &d).is_err() && phi(1.0, &d).is_err());
    }

    #[test]
    fn residual_signs() {
        let d = RateParams::default();
        assert_eq!(stationarity_residual(0.5, &zero()).unwrap(), 0.0);
        let at45 = stationarity_residual(0.45, &d).unwrap();
        let at47 = stationarity_residual(0.47, &d).unwrap();
        assert!((at45 - 0.0106).abs() < 5e-4, "{at45}");
        assert!((at47 + 0.0084).abs() < 5e-4, "{at47}");
    }

    #[test]
    fn residual_has_one_sign_change() {
        let d = RateParams::default();
        let vals: Vec<f64> = (10..=500)
            .map(|i| stationarity_residual(i as f64 * 1e-3, &d).unwrap())
            .collect();
        let changes = vals
            .windows(2)
            .filter(|w| (w[0] > 0.0) != (w[1] > 0.0))
            .count();
        assert_eq!(changes, 1);
    }

    #[test]
    fn residual_matches_derivative_of_phi() {
        // The residual is, up to a positive factor, dφ/dx; compare signs with
        // central differences.
        let d = RateParams::default();
        for i in 1..100 {
            let x = i as f64 * 0.005;
            let h = 1e-6;
            let deriv = (phi(x + h, &d).unwrap() - phi(x - h, &d).unwrap()) / (2.0 * h);
            let r = stationarity_residual(x, &d).unwrap();
            if r.abs() > 1e-6 {
                assert_eq!(deriv > 0.0, r > 0.0, "x={x}");
            }
        }
    }

    #[test]
    fn classical_constant() {
        let rep = maximize_phi(&zero(), 1e-10).unwrap();
        assert!((rep.x_star - 0.5).abs() < 1e-9);
        assert!((rep.phi_max_sq - 4.0).abs() < 1e-9);
        assert!(rep.locations_agree);
        assert!((diagonal_constant(&zero()) - 4.0).abs() < 1e-15);
    }

    #[test]
    fn improved_constant() {
        let d = RateParams::default();
        let rep = maximize_phi(&d, 1e-10).unwrap();
        assert!(
            rep.phi_max_sq > 3.7190 && rep.phi_max_sq < 3.71943,
            "{}",
            rep.phi_max_sq
        );
        assert!((rep.x_star - 0.461).abs() < 1e-3, "{}", rep.x_star);
        assert!(rep.locations_agree, "{} vs {}", rep.x_star, rep.x_root);
        assert!(rep.bracket.hi - rep.bracket.lo <= 1e-10);
        let r = |x| stationarity_residual(x, &d).unwrap();
        assert!(r(rep.bracket.lo) > 0.0 && r(rep.bracket.hi) <= 0.0);
        let f = |x| phi(x, &d).unwrap();
        assert!(f(rep.x_star) >= f(rep.x_star - 1e-10) && f(rep.x_star) >= f(rep.x_star + 1e-10));
        assert!(rep.phi_max >= f(0.5));
        assert!((rep.diagonal_constant - 3.70831).abs() < 1e-4);
        assert!(rep.diagonal_constant <= rep.phi_max_sq);
        assert!((rep.phi_max_sq - rep.phi_max * rep.phi_max).abs() == 0.0);
    }

    #[test]
    fn diagonal_constant_cancels() {
        let p = RateParams::new(4f64.ln()).unwrap();
        assert!(diagonal_constant(&p).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(maximize_phi(&RateParams::default(), 0.0).is_err());
        assert!(maximize_phi(&RateParams::default(), -1.0).is_err());
        assert!(RateParams::new(-0.1).is_err());
        assert!(RateParams::new(f64::NAN).is_err());
    }
}
