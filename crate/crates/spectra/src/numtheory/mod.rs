//! Elementary number theory: prime sieve, multiplicative orders, the
//! closed-form gcd identities for a^s ± 1, and p-part decompositions.

mod factor;
mod ppd;

pub use factor::{factorize, is_prime, is_prime_u64, FactorConfig, FactoredNat};
pub use ppd::{
    cyclotomic_value, divides_lcm_classifier, primitive_prime_divisors, star_value,
    LcmDivisibilityReport, PpdReport,
};

use num_bigint::{BigInt, BigUint, Sign as BigSign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Sign tag used for `εq` bases and for the terms a^n − ε.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn unit(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// An integer base with |a| > 1, as required by every primitive-prime-divisor
/// definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedBase(i64);

impl SignedBase {
    pub fn new(a: i64) -> Result<Self> {
        if a.unsigned_abs() > 1 {
            Ok(SignedBase(a))
        } else {
            Err(Error::InvalidBase(a))
        }
    }

    pub fn get(self) -> i64 {
        self.0
    }

    /// |a|^n ± sign corrections handled by the caller; this is just a^n.
    pub fn pow(self, n: u32) -> BigInt {
        BigInt::from(self.0).pow(n)
    }
}

/// Ascending primes up to `limit` by the sieve of Eratosthenes.
pub fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
    }
    primes
}

fn powmod_u64(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % m as u128) as u64;
        }
        base = ((base as u128 * base as u128) % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// e(s, a): for odd s coprime to a, the least i >= 1 with a^i = 1 mod s.
/// For s = 2 (a odd): 1 if a = 1 mod 4, else 2.
pub fn order_e(s: u64, a: SignedBase) -> Result<u64> {
    let av = a.get();
    if s == 2 {
        if av % 2 == 0 {
            return Err(Error::OrderUndefined(format!(
                "e(2, {av}) requires an odd base"
            )));
        }
        return Ok(if av.rem_euclid(4) == 1 { 1 } else { 2 });
    }
    if s % 2 == 0 {
        return Err(Error::OrderUndefined(format!(
            "e({s}, {av}) requires s odd or s = 2"
        )));
    }
    if s == 1 {
        return Ok(1);
    }
    let a_mod = (av as i128).rem_euclid(s as i128) as u64;
    if factor::gcd_u64(a_mod, s) != 1 {
        return Err(Error::OrderUndefined(format!(
            "e({s}, {av}) requires gcd(s, a) = 1"
        )));
    }
    // The order divides the Carmichael function of s.
    let cfg = FactorConfig::default();
    let s_fact = factorize(&BigUint::from(s), &cfg)?;
    let mut lambda = 1u64;
    for (p, &e) in s_fact.factors() {
        let p = p.iter_u64_digits().next().unwrap();
        let pk_lambda = p.pow(e - 1) * (p - 1);
        lambda = lambda / factor::gcd_u64(lambda, pk_lambda) * pk_lambda;
    }
    let lambda_fact = factorize(&BigUint::from(lambda), &cfg)?;
    let mut ord = lambda;
    for (p, _) in lambda_fact.factors() {
        let p = p.iter_u64_digits().next().unwrap();
        while ord % p == 0 && powmod_u64(a_mod, ord / p, s) == 1 {
            ord /= p;
        }
    }
    debug_assert_eq!(powmod_u64(a_mod, ord, s), 1);
    Ok(ord)
}

/// Which of the two gcd identities to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GcdKind {
    /// (a^s − 1, a^t − 1)
    MinusMinus,
    /// (a^s + 1, a^t − 1)
    PlusMinus,
}

/// Closed form for gcds of a^s ± 1 and a^t − 1:
/// (a^s − 1, a^t − 1) = a^(s,t) − 1, and
/// (a^s + 1, a^t − 1) = a^(s,t) + 1 when s/(s,t) is odd and t/(s,t) is even,
/// otherwise (2, a − 1). Values are reported as absolute values.
pub fn gcd_closed_form(a: SignedBase, s: u32, t: u32, kind: GcdKind) -> BigUint {
    let g = s.gcd(&t);
    let value: BigInt = match kind {
        GcdKind::MinusMinus => a.pow(g) - 1,
        GcdKind::PlusMinus => {
            if (s / g) % 2 == 1 && (t / g) % 2 == 0 {
                a.pow(g) + 1
            } else if a.get() % 2 == 0 {
                BigInt::one()
            } else {
                BigInt::from(2)
            }
        }
    };
    value.abs().to_biguint().unwrap()
}

/// (a)_b and (a)_{b'}: the largest power of the prime b dividing a, and
/// |a| divided by it.
pub fn part_and_copart(a: &BigInt, b: u64) -> Result<(BigUint, BigUint)> {
    if a.is_zero() {
        return Err(Error::OrderUndefined("b-part of 0 is undefined".into()));
    }
    if !is_prime_u64(b) {
        return Err(Error::NotPrime(BigUint::from(b)));
    }
    let mut rest = match a.sign() {
        BigSign::Minus => (-a).to_biguint().unwrap(),
        _ => a.to_biguint().unwrap(),
    };
    let b = BigUint::from(b);
    let mut part = BigUint::one();
    while (&rest % &b).is_zero() {
        rest /= &b;
        part *= &b;
    }
    Ok((part, rest))
}
