//! Landau's function g(n), the partition-counting function p(n), and the
//! numeric constants behind the divisor-function and spectrum-size bounds.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::numtheory::sieve_primes;

/// n0 = 2^5 * 3^3 * 5^2 * 7 * 11 * 13 * 17 * 19.
pub const N0: u64 = 6_983_776_800;
/// Number of divisors of n0: 6 * 4 * 3 * 2^5.
pub const SIGMA_N0: u64 = 2304;

/// g(n) for every budget 0..=max: best product of prime powers with distinct
/// prime bases and total cost at most the budget. Exact big-integer DP; each
/// prime contributes at most one power.
pub fn landau_table(max: usize) -> Vec<BigUint> {
    let mut dp: Vec<BigUint> = vec![BigUint::one(); max + 1];
    for p in sieve_primes(max as u64) {
        let mut powers = Vec::new();
        let mut pk = p;
        while pk <= max as u64 {
            powers.push(pk);
            match pk.checked_mul(p) {
                Some(next) => pk = next,
                None => break,
            }
        }
        for b in (0..=max).rev() {
            for &pk in &powers {
                if pk as usize > b {
                    break;
                }
                let cand = &dp[b - pk as usize] * BigUint::from(pk);
                if cand > dp[b] {
                    dp[b] = cand;
                }
            }
        }
    }
    for b in 1..=max {
        if dp[b] < dp[b - 1] {
            dp[b] = dp[b - 1].clone();
        }
    }
    dp
}

/// Largest order of an element of Sym_n.
pub fn landau_g(n: usize) -> BigUint {
    landau_table(n).pop().unwrap()
}

/// log g(n) / sqrt(n log n), natural logarithms.
pub fn landau_ratio(n: usize) -> f64 {
    assert!(n >= 2);
    ratio_from_g(n, &landau_g(n))
}

pub fn ratio_from_g(n: usize, g: &BigUint) -> f64 {
    let log_g = g.to_f64().expect("g(n) out of f64 range").ln();
    log_g / ((n as f64) * (n as f64).ln()).sqrt()
}

/// p(n) by the pentagonal-number recurrence; p(0) = 1.
pub fn partition_count(n: usize) -> BigUint {
    partition_table(n).pop().unwrap()
}

/// p(0)..=p(n).
pub fn partition_table(n: usize) -> Vec<BigUint> {
    let mut p = vec![BigUint::zero(); n + 1];
    p[0] = BigUint::one();
    for i in 1..=n {
        let mut acc = BigUint::zero();
        let mut neg = BigUint::zero();
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g1 > i {
                break;
            }
            let sign_plus = k % 2 == 1;
            if sign_plus {
                acc += &p[i - g1];
            } else {
                neg += &p[i - g1];
            }
            if g2 <= i {
                if sign_plus {
                    acc += &p[i - g2];
                } else {
                    neg += &p[i - g2];
                }
            }
            k += 1;
        }
        p[i] = acc - neg;
    }
    p
}

/// Divisor counts σ(0)..σ(limit) by a sieve (σ(0) is set to 0).
pub fn divisor_counts_up_to(limit: usize) -> Vec<u32> {
    let mut sigma = vec![0u32; limit + 1];
    for d in 1..=limit {
        let mut m = d;
        while m <= limit {
            sigma[m] += 1;
            m += d;
        }
    }
    sigma
}

/// The constants of the divisor-function bound and the spectrum-size chain.
#[derive(Debug, Clone, Copy)]
pub struct AnalyticConstants {
    pub n0: u64,
    pub sigma_n0: u64,
    /// α0 = log σ(n0) · log log n0 / log n0.
    pub alpha0: f64,
    /// 2π/√6 − 2.16 α0, the lower-bound constant for log |μ(Sym_n)|.
    pub lower_bound_margin: f64,
}

impl AnalyticConstants {
    /// Upper bound log σ(n) ≤ α0 log n / log log n, valid for n ≥ 2.
    pub fn divisor_bound(&self, n: f64) -> f64 {
        self.alpha0 * n.ln() / n.ln().ln()
    }

    /// Main term exp((2π/√6) √(n / log n)) of |ω(Sym_n)|.
    pub fn et_main_term(&self, n: f64) -> f64 {
        (ET_COEFF * (n / n.ln()).sqrt()).exp()
    }
}

/// 2π/√6.
pub const ET_COEFF: f64 = 2.565_099_660_323_728_6;

pub fn analytic_constants() -> AnalyticConstants {
    let log_n0 = (N0 as f64).ln();
    let alpha0 = (SIGMA_N0 as f64).ln() * log_n0.ln() / log_n0;
    AnalyticConstants {
        n0: N0,
        sigma_n0: SIGMA_N0,
        alpha0,
        lower_bound_margin: ET_COEFF - 2.16 * alpha0,
    }
}

/// Per-degree report tying g(n) to the analytic constants.
#[derive(Debug, Clone)]
pub struct BoundsReport {
    pub n: usize,
    pub g_value: BigUint,
    /// log g(n) / sqrt(n log n).
    pub ratio: f64,
    pub alpha0: f64,
    pub et_main_term: f64,
}

pub fn bounds_report(n: usize) -> BoundsReport {
    assert!(n >= 2);
    let g = landau_g(n);
    let consts = analytic_constants();
    BoundsReport {
        n,
        ratio: ratio_from_g(n, &g),
        g_value: g,
        alpha0: consts.alpha0,
        et_main_term: consts.et_main_term(n as f64),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    /// Brute force g(n): max lcm over all partitions of n.
    fn g_oracle(n: u64) -> u64 {
        fn rec(remaining: u64, min_part: u64, lcm: u64, best: &mut u64) {
            *best = (*best).max(lcm);
            for part in min_part..=remaining {
                rec(remaining - part, part, lcm.lcm(&part), best);
            }
        }
        let mut best = 1;
        rec(n, 1, 1, &mut best);
        best
    }

    #[test]
    fn g_small_values() {
        assert_eq!(landau_g(0), BigUint::one());
        assert_eq!(landau_g(1), BigUint::one());
        assert_eq!(landau_g(5), BigUint::from(6u32));
        assert_eq!(landau_g(7), BigUint::from(12u32));
        let table = landau_table(16);
        for n in 0..=16u64 {
            assert_eq!(table[n as usize], BigUint::from(g_oracle(n)), "g({n})");
        }
    }

    #[test]
    fn g_monotone() {
        let table = landau_table(120);
        for w in table.windows(2) {
            assert!(w[0] <= w[1]);
        }
    }

    #[test]
    fn partition_values() {
        assert_eq!(partition_count(0), BigUint::one());
        assert_eq!(partition_count(5), BigUint::from(7u32));
        assert_eq!(partition_count(10), BigUint::from(42u32));
        assert_eq!(partition_count(60), BigUint::from(966_467u32));
        assert_eq!(partition_count(100), BigUint::from(190_569_292u64));
    }

    #[test]
    fn ratio_at_two() {
        let r = landau_ratio(2);
        let expect = 2f64.ln() / (2.0 * 2f64.ln()).sqrt();
        assert!((r - expect).abs() < 1e-12);
        assert!((expect - 0.5887).abs() < 1e-4);
    }

    #[test]
    fn constants_chain() {
        let c = analytic_constants();
        let direct =
            (2304f64).ln() * (N0 as f64).ln().ln() / (N0 as f64).ln();
        assert!((c.alpha0 - direct).abs() < 1e-15);
        assert!(c.lower_bound_margin > 0.26);
        // log σ(12) = log 6 ≤ α0 log 12 / log log 12
        assert!(6f64.ln() <= c.divisor_bound(12.0));
    }

    #[test]
    fn divisor_sieve_spot_checks() {
        let sigma = divisor_counts_up_to(100);
        assert_eq!(sigma[1], 1);
        assert_eq!(sigma[12], 6);
        assert_eq!(sigma[100], 9);
        assert_eq!(sigma[97], 2);
    }
}
