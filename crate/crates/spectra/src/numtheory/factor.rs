//! Integer factorization: trial division over a cached prime table, then
//! Brent's variant of Pollard's rho with a hard iteration budget. The budget
//! turns "too hard to factor" into an explicit error instead of a wrong or
//! partial answer.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::numtheory::sieve_primes;

/// Trial-division bound and rho effort cap for [`factorize`].
#[derive(Debug, Clone, Copy)]
pub struct FactorConfig {
    /// Primes up to this bound are removed by trial division.
    pub trial_limit: u64,
    /// Total rho iterations allowed per factorization.
    pub rho_budget: u64,
    /// Seed for the rho polynomial constants and Miller-Rabin witnesses.
    pub seed: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            trial_limit: 1_000_000,
            rho_budget: 5_000_000,
            seed: 0x5eed_1234,
        }
    }
}

/// A positive integer together with its complete prime factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactoredNat {
    value: BigUint,
    factors: BTreeMap<BigUint, u32>,
}

impl FactoredNat {
    pub fn one() -> Self {
        FactoredNat {
            value: BigUint::one(),
            factors: BTreeMap::new(),
        }
    }

    /// Builds from (prime, exponent) pairs; the value is the product.
    /// Panics if a listed base is not prime or an exponent is zero.
    pub fn from_prime_powers(pairs: &[(u64, u32)]) -> Self {
        let mut factors = BTreeMap::new();
        let mut value = BigUint::one();
        for &(p, e) in pairs {
            assert!(e > 0, "exponent must be positive");
            assert!(is_prime_u64(p), "{p} is not prime");
            value *= BigUint::from(p).pow(e);
            *factors.entry(BigUint::from(p)).or_insert(0) += e;
        }
        FactoredNat { value, factors }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn factors(&self) -> &BTreeMap<BigUint, u32> {
        &self.factors
    }

    pub fn exponent_of(&self, p: &BigUint) -> u32 {
        self.factors.get(p).copied().unwrap_or(0)
    }

    /// Number of divisors: product of (exponent + 1).
    pub fn divisor_count(&self) -> u128 {
        self.factors
            .values()
            .fold(1u128, |acc, &e| acc * (e as u128 + 1))
    }

    /// Minimal symmetric-group degree containing an element of this order:
    /// 0 for the identity order, otherwise the sum of the prime-power parts.
    pub fn min_sym_degree(&self) -> BigUint {
        let mut sum = BigUint::zero();
        for (p, &e) in &self.factors {
            sum += p.pow(e);
        }
        sum
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Exponent-wise divisibility test.
    pub fn divides(&self, other: &FactoredNat) -> bool {
        self.factors
            .iter()
            .all(|(p, &e)| other.exponent_of(p) >= e)
    }
}

fn prime_table() -> &'static [u64] {
    static TABLE: OnceLock<Vec<u64>> = OnceLock::new();
    TABLE.get_or_init(|| sieve_primes(1_000_000))
}

/// Completely factorizes `n >= 1`. Errors with
/// [`Error::FactorBudgetExceeded`] if the rho budget runs out.
pub fn factorize(n: &BigUint, cfg: &FactorConfig) -> Result<FactoredNat> {
    assert!(!n.is_zero(), "factorize requires n >= 1");
    let original = n.clone();
    let mut factors: BTreeMap<BigUint, u32> = BTreeMap::new();
    let mut rest = n.clone();

    // Trial division over the cached table, with a u128 fast path.
    if let Some(mut small) = rest.to_u128() {
        for &p in prime_table() {
            if p > cfg.trial_limit || (p as u128) * (p as u128) > small {
                break;
            }
            while small % p as u128 == 0 {
                small /= p as u128;
                *factors.entry(BigUint::from(p)).or_insert(0) += 1;
            }
        }
        rest = BigUint::from(small);
    } else {
        for &p in prime_table() {
            if p > cfg.trial_limit {
                break;
            }
            let bp = BigUint::from(p);
            while (&rest % &bp).is_zero() {
                rest /= &bp;
                *factors.entry(bp.clone()).or_insert(0) += 1;
            }
            if rest.to_u128().is_some() {
                break;
            }
        }
        if let Some(mut small) = rest.to_u128() {
            for &p in prime_table() {
                if p > cfg.trial_limit || (p as u128) * (p as u128) > small {
                    break;
                }
                while small % p as u128 == 0 {
                    small /= p as u128;
                    *factors.entry(BigUint::from(p)).or_insert(0) += 1;
                }
            }
            rest = BigUint::from(small);
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut budget = cfg.rho_budget;
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(m64) = m.to_u64() {
            // Below the square of the trial bound every survivor is prime.
            if (m64 as u128) < (cfg.trial_limit as u128).pow(2) || is_prime_u64(m64) {
                *factors.entry(m).or_insert(0) += 1;
                continue;
            }
            let d = rho_u64(m64, &mut rng, &mut budget)
                .ok_or_else(|| Error::FactorBudgetExceeded(original.clone()))?;
            stack.push(BigUint::from(d));
            stack.push(BigUint::from(m64 / d));
        } else {
            if is_prime(&m, &mut rng) {
                *factors.entry(m).or_insert(0) += 1;
                continue;
            }
            let d = rho_big(&m, &mut rng, &mut budget)
                .ok_or_else(|| Error::FactorBudgetExceeded(original.clone()))?;
            stack.push(&m / &d);
            stack.push(d);
        }
    }

    let mut value = BigUint::one();
    for (p, &e) in &factors {
        value *= p.pow(e);
    }
    debug_assert_eq!(&value, n);
    Ok(FactoredNat { value, factors })
}

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_u64(acc, base, m);
        }
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality test: deterministic below 2^64, seeded Miller-Rabin above.
pub fn is_prime(n: &BigUint, rng: &mut ChaCha8Rng) -> bool {
    if let Some(n64) = n.to_u64() {
        return is_prime_u64(n64);
    }
    let one = BigUint::one();
    let two = &one + &one;
    if n.is_even() {
        return false;
    }
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for round in 0..32 {
        let a = if round < 12 {
            BigUint::from([2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37][round as usize])
        } else {
            BigUint::from(rng.gen_range(2u64..u64::MAX))
        };
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Brent-cycle rho on u64. Returns a nontrivial factor or None when the
/// budget runs out.
fn rho_u64(n: u64, rng: &mut ChaCha8Rng, budget: &mut u64) -> Option<u64> {
    debug_assert!(n > 1 && !is_prime_u64(n));
    if n % 2 == 0 {
        return Some(2);
    }
    loop {
        if *budget == 0 {
            return None;
        }
        let c = rng.gen_range(1..n);
        // The addition is done in u128: x^2 + c can exceed u64 when n > 2^63.
        let step = |v: u64| ((v as u128 * v as u128 + c as u128) % n as u128) as u64;
        let mut x = rng.gen_range(2..n);
        let mut y = x;
        let mut d = 1u64;
        while d == 1 {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            x = step(x);
            y = step(step(y));
            d = gcd_u64(x.abs_diff(y), n);
        }
        if d != n {
            return Some(d);
        }
    }
}

fn rho_big(n: &BigUint, rng: &mut ChaCha8Rng, budget: &mut u64) -> Option<BigUint> {
    if n.is_even() {
        return Some(BigUint::from(2u32));
    }
    let one = BigUint::one();
    loop {
        if *budget == 0 {
            return None;
        }
        let c = BigUint::from(rng.gen_range(1u64..u64::MAX));
        let mut x = BigUint::from(rng.gen_range(2u64..u64::MAX)) % n;
        let mut y = x.clone();
        let step = |v: &BigUint| (v * v + &c) % n;
        loop {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            x = step(&x);
            y = step(&step(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break; // cycle without factor, retry with new constants
            }
            let d = diff.gcd(n);
            if d > one {
                if &d == n {
                    break;
                }
                return Some(d);
            }
        }
    }
}

pub(crate) fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_small() {
        let cfg = FactorConfig::default();
        let f = factorize(&BigUint::from(12u32), &cfg).unwrap();
        assert_eq!(f.exponent_of(&BigUint::from(2u32)), 2);
        assert_eq!(f.exponent_of(&BigUint::from(3u32)), 1);
        assert_eq!(f.divisor_count(), 6);

        let f1 = factorize(&BigUint::from(1u32), &cfg).unwrap();
        assert!(f1.is_one());
        assert_eq!(f1.divisor_count(), 1);
    }

    #[test]
    fn factorize_n0_round_trip() {
        // n0 = 2^5 * 3^3 * 5^2 * 7 * 11 * 13 * 17 * 19
        let pairs: &[(u64, u32)] = &[
            (2, 5),
            (3, 3),
            (5, 2),
            (7, 1),
            (11, 1),
            (13, 1),
            (17, 1),
            (19, 1),
        ];
        let n0 = FactoredNat::from_prime_powers(pairs);
        assert_eq!(n0.value(), &BigUint::from(6_983_776_800u64));
        let cfg = FactorConfig::default();
        let refactored = factorize(n0.value(), &cfg).unwrap();
        assert_eq!(&refactored, &n0);
        assert_eq!(refactored.divisor_count(), 2304);
    }

    #[test]
    fn factorize_semiprime_beyond_trial_range() {
        let cfg = FactorConfig::default();
        let p = 1_000_003u64;
        let q = 1_000_033u64;
        let f = factorize(&BigUint::from(p * q), &cfg).unwrap();
        assert_eq!(f.exponent_of(&BigUint::from(p)), 1);
        assert_eq!(f.exponent_of(&BigUint::from(q)), 1);
    }

    #[test]
    fn factorize_u64_cofactor_above_2_pow_63() {
        // 239 · 74729519 · 176634767651: after trial division the cofactor
        // is a semiprime just under 2^64, exercising the rho u64 path with
        // a modulus above 2^63.
        let cfg = FactorConfig::default();
        let n: BigUint = "3154759662831401578691".parse().unwrap();
        let f = factorize(&n, &cfg).unwrap();
        assert_eq!(f.exponent_of(&BigUint::from(239u64)), 1);
        assert_eq!(f.exponent_of(&BigUint::from(74729519u64)), 1);
        assert_eq!(f.exponent_of(&BigUint::from(176634767651u64)), 1);
    }

    #[test]
    fn min_sym_degree_values() {
        let cfg = FactorConfig::default();
        let f = |n: u64| {
            factorize(&BigUint::from(n), &cfg)
                .unwrap()
                .min_sym_degree()
        };
        assert_eq!(f(1), BigUint::zero());
        assert_eq!(f(12), BigUint::from(7u32));
        assert_eq!(f(30), BigUint::from(10u32));
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(524_287));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561)); // Carmichael
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        // 2^89 - 1 is a Mersenne prime.
        let m89 = (BigUint::one() << 89u32) - BigUint::one();
        assert!(is_prime(&m89, &mut rng));
        assert!(!is_prime(&(&m89 * BigUint::from(3u32)), &mut rng));
    }
}
