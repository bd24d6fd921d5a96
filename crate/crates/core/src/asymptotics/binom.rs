//! Exact binomial coefficients: the entropy bound and the minimum-product
//! fact for `C(s+t, t) >= n`.

use num_bigint::BigUint;
use num_traits::One;

use super::rate::entropy_unchecked;
use crate::error::{Error, Result};

const BINOMIAL_CHECK_MAX: u64 = 10_000;

/// `C(m, j)` exactly.
fn binomial(m: u64, j: u64) -> BigUint {
    let j = j.min(m - j);
    let mut c = BigUint::one();
    for i in 0..j {
        c *= m - i;
        c /= i + 1;
    }
    c
}

/// `log2` of a positive big integer: bit length plus the top 64 bits.
fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        let v: u64 = x.iter_u64_digits().next().unwrap_or(0);
        return (v as f64).log2();
    }
    let shift = bits - 64;
    let top: u64 = (x >> shift).iter_u64_digits().next().expect("nonzero");
    (top as f64).log2() + shift as f64
}

/// `log2 C(m, j)` from the exact coefficient.
pub fn log2_binomial(m: u64, j: u64) -> Result<f64> {
    if j > m {
        return Err(Error::input(format!("C({m},{j}) needs j <= m")));
    }
    Ok(log2_big(&binomial(m, j)))
}

fn exceeds_entropy(log2_c: f64, m: u64, j: u64) -> bool {
    let bound = if m == 0 {
        0.0
    } else {
        entropy_unchecked(j as f64 / m as f64) * m as f64
    };
    log2_c > bound
}

fn check_domain(m: u64, j: u64) -> Result<()> {
    if j > m || m > BINOMIAL_CHECK_MAX {
        return Err(Error::input(format!(
            "entropy check needs 0 <= j <= m <= {BINOMIAL_CHECK_MAX}, got ({m},{j})"
        )));
    }
    Ok(())
}

/// Whether `log2 C(m, j) <= m H(j/m)`.
pub fn entropy_binomial_check(m: u64, j: u64) -> Result<bool> {
    check_domain(m, j)?;
    Ok(!exceeds_entropy(log2_binomial(m, j)?, m, j))
}

/// Checks the whole row `j = 0..=m`, building coefficients incrementally.
/// Returns the first failing `j`, if any.
pub fn entropy_binomial_row(m: u64) -> Result<Option<u64>> {
    check_domain(m, 0)?;
    let mut c = BigUint::one();
    for j in 0..=m {
        if j > 0 {
            c *= m - j + 1;
            c /= j;
        }
        if exceeds_entropy(log2_big(&c), m, j) {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

fn central(k: u64) -> Option<u128> {
    let mut c: u128 = 1;
    for i in 0..k / 2 {
        c = c.checked_mul((k - i) as u128)? / (i as u128 + 1);
    }
    Some(c)
}

/// Smallest `k >= 2` with `C(k, floor(k/2)) >= n`, and the product
/// `floor(k/2) * floor((k+1)/2)`, which is the least `s t` over
/// `s, t >= 1` with `C(s+t, t) >= n`.
pub fn min_product_binom(n: u64) -> Result<(u64, u64)> {
    if n == 0 {
        return Err(Error::input("min_product_binom needs n >= 1"));
    }
    let mut k = 2;
    while central(k).expect("k stays below 70 for u64 targets") < n as u128 {
        k += 1;
    }
    Ok((k, (k / 2) * k.div_ceil(2)))
}

/// Least `s t` over `s, t >= 1` with `C(s+t, t) >= n`, scanning every `s`.
pub fn min_product_brute_force(n: u64) -> u64 {
    let target = n as u128;
    let mut best = u64::MAX;
    let mut s = 1u64;
    while s.saturating_mul(s) < best {
        // C(s+t, s) grows in t; for s = 1 it is t + 1 >= n at t = n - 1.
        let mut c: u128 = (s + 1) as u128;
        let mut t = 1u64;
        while c < target && s * t < best {
            t += 1;
            c = c * (s + t) as u128 / t as u128;
        }
        if c >= target {
            best = best.min(s * t);
        }
        s += 1;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn entropy_examples() {
        assert!(entropy_binomial_check(6, 3).unwrap());
        assert!((log2_binomial(6, 3).unwrap() - 20f64.log2()).abs() < 1e-12);
        assert!(entropy_binomial_check(9, 0).unwrap());
        assert!(entropy_binomial_check(0, 0).unwrap());
        assert!(entropy_binomial_check(100, 37).unwrap());
        assert!(entropy_binomial_check(5, 6).is_err());
        assert!(entropy_binomial_check(10_001, 3).is_err());
    }

    #[test]
    fn big_log2_is_accurate() {
        // C(200, 100) ~ 9.0548514656e58
        let l = log2_binomial(200, 100).unwrap();
        assert!((l - 9.0548514656103e58f64.log2()).abs() < 1e-9);
        assert_eq!(log2_binomial(64, 1).unwrap(), 6.0);
    }

    #[test]
    fn rows_small() {
        for m in 0..=300 {
            assert_eq!(entropy_binomial_row(m).unwrap(), None, "row {m}");
        }
    }

    /// Every pair `s, t >= 1`, using a saturating Pascal triangle.
    fn naive_min_products(n_max: usize) -> Vec<u64> {
        let rows = 2 * n_max + 1;
        let mut pascal = vec![vec![0u128; rows]; rows];
        for a in 0..rows {
            pascal[a][0] = 1;
            for b in 1..=a {
                pascal[a][b] = pascal[a - 1][b - 1].saturating_add(pascal[a - 1][b]);
            }
        }
        (0..=n_max)
            .map(|n| {
                let mut best = u64::MAX;
                for s in 1..=n_max {
                    for t in 1..=n_max {
                        if pascal[s + t][t] >= n as u128 {
                            best = best.min((s * t) as u64);
                        }
                    }
                }
                best
            })
            .collect()
    }

    #[test]
    fn min_product_examples() {
        assert_eq!(min_product_binom(1).unwrap(), (2, 1));
        assert_eq!(min_product_binom(2).unwrap(), (2, 1));
        assert_eq!(min_product_binom(20).unwrap(), (6, 9));
        assert_eq!(min_product_binom(70).unwrap(), (8, 16));
        assert_eq!(min_product_binom(71).unwrap(), (9, 20));
        assert!(min_product_binom(0).is_err());
        assert!(min_product_binom(u64::MAX).is_ok());
    }

    #[test]
    fn unbalanced_pairs_can_win() {
        // C(4, 1) = 4 with s t = 3, below the balanced 2 * 2.
        assert_eq!(min_product_binom(4).unwrap().1, 4);
        assert_eq!(min_product_brute_force(4), 3);
        // C(9, 3) = 84 >= 71 with s t = 18, below 4 * 5.
        assert_eq!(min_product_brute_force(71), 18);
        assert_eq!(min_product_brute_force(20), 9);
        assert_eq!(min_product_brute_force(70), 16);
    }

    #[test]
    fn brute_force_agrees_with_naive() {
        let naive = naive_min_products(200);
        for (n, &want) in naive.iter().enumerate().skip(1) {
            assert_eq!(min_product_brute_force(n as u64), want, "n={n}");
        }
    }

    proptest! {
        #[test]
        fn entropy_bound_holds(m in 0u64..=2000, frac in 0.0f64..=1.0) {
            let j = ((m as f64) * frac).round() as u64;
            prop_assert!(entropy_binomial_check(m, j.min(m)).unwrap());
        }

        #[test]
        fn balanced_pair_is_feasible(n in 1u64..=10_000) {
            // The balanced split of k is one admissible pair, so the true
            // minimum never exceeds it.
            prop_assert!(min_product_brute_force(n) <= min_product_binom(n).unwrap().1);
        }
    }
}
