//! Primitive prime divisors of a^i − 1.
//!
//! R_i(a) is the set of primes r with e(r, a) = i; it is nonempty for every
//! |a| > 1 and i >= 1 outside six exceptional pairs. Candidates are read off
//! the cyclotomic value Φ_i(a), which keeps the numbers to factor far smaller
//! than a^i − 1 itself.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numtheory::{factorize, FactorConfig, Sign, SignedBase};

/// The six (a, i) pairs with R_i(a) empty.
const EXCEPTIONAL_PAIRS: [(i64, u64); 6] =
    [(2, 1), (2, 6), (-2, 2), (-2, 3), (3, 1), (-3, 2)];

/// Special r* values assigned to three of the exceptional pairs:
/// r*_3(−2) = r*_6(2) = 9 and r*_2(−3) = 8.
const SPECIAL_STARS: [(i64, u64, u32); 3] = [(-2, 3, 9), (2, 6, 9), (-3, 2, 8)];

/// Primitive-prime-divisor data for one pair (a, i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PpdReport {
    pub base: SignedBase,
    pub index: u64,
    /// R_i(a), ascending.
    pub ppd_set: Vec<BigUint>,
    /// r_i(a): the smallest member of R_i(a), when nonempty.
    pub canonical: Option<BigUint>,
    /// r*_i(a): the r_i(a)-part of a^i − 1, or the special override.
    pub star: Option<BigUint>,
    pub exceptional: bool,
}

fn mobius(n: u64) -> i8 {
    let mut n = n;
    let mut mu = 1i8;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            mu = -mu;
        }
        d += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

fn divisors_of(n: u64) -> Vec<u64> {
    let mut ds = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            ds.push(d);
            if d != n / d {
                ds.push(n / d);
            }
        }
        d += 1;
    }
    ds.sort_unstable();
    ds
}

/// |Φ_i(a)|: the i-th cyclotomic polynomial evaluated at a, via
/// Φ_i(a) = Π_{d | i} (a^d − 1)^{μ(i/d)}.
pub fn cyclotomic_value(index: u64, a: SignedBase) -> BigUint {
    assert!(index >= 1);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for d in divisors_of(index) {
        let term = a.pow(d as u32) - 1;
        match mobius(index / d) {
            1 => num *= term,
            -1 => den *= term,
            _ => {}
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    q.abs().to_biguint().unwrap()
}

/// Tests e(r, a) = i for a prime r already known to divide a^i − 1.
fn order_equals(r: &BigUint, a: SignedBase, i: u64) -> bool {
    let two = BigUint::from(2u32);
    if *r == two {
        // e(2, a) is defined by the residue of a mod 4.
        if a.get() % 2 == 0 {
            return false;
        }
        let e2 = if a.get().rem_euclid(4) == 1 { 1 } else { 2 };
        return e2 == i;
    }
    let a_mod = BigInt::from(a.get())
        .mod_floor(&BigInt::from_biguint(num_bigint::Sign::Plus, r.clone()))
        .to_biguint()
        .unwrap();
    if !a_mod.modpow(&BigUint::from(i), r).is_one() {
        return false;
    }
    // Order divides i; it equals i iff no maximal proper divisor works.
    let mut n = i;
    let mut prime_divs = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            prime_divs.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        prime_divs.push(n);
    }
    prime_divs
        .iter()
        .all(|&s| !a_mod.modpow(&BigUint::from(i / s), r).is_one())
}

/// Computes R_i(a), the canonical r_i(a), r*_i(a) and the Zsigmondy
/// exception flag for the pair (a, i).
pub fn primitive_prime_divisors(
    a: SignedBase,
    index: u64,
    cfg: &FactorConfig,
) -> Result<PpdReport> {
    assert!(index >= 1);
    let phi = cyclotomic_value(index, a);
    let mut ppd_set: Vec<BigUint> = Vec::new();
    if !phi.is_one() {
        let phi_factors = factorize(&phi, cfg)?;
        for (r, _) in phi_factors.factors() {
            if order_equals(r, a, index) {
                ppd_set.push(r.clone());
            }
        }
    }
    ppd_set.sort();
    let canonical = ppd_set.first().cloned();

    let special = SPECIAL_STARS
        .iter()
        .find(|&&(b, i, _)| b == a.get() && i == index)
        .map(|&(_, _, v)| BigUint::from(v));
    let star = match (&special, &canonical) {
        (Some(v), _) => Some(v.clone()),
        (None, Some(r)) => {
            let pow = (a.pow(index as u32) - BigInt::one()).abs().to_biguint().unwrap();
            let mut part = BigUint::one();
            let mut rest = pow;
            while (&rest % r).is_zero() {
                rest /= r;
                part *= r;
            }
            Some(part)
        }
        (None, None) => None,
    };
    let exceptional = EXCEPTIONAL_PAIRS.contains(&(a.get(), index));
    Ok(PpdReport {
        base: a,
        index,
        ppd_set,
        canonical,
        star,
        exceptional,
    })
}

/// r*_i(a), erroring when undefined (exceptional pair without an override).
pub fn star_value(a: SignedBase, index: u64, cfg: &FactorConfig) -> Result<BigUint> {
    primitive_prime_divisors(a, index, cfg)?
        .star
        .ok_or(Error::StarUndefined {
            base: a.get(),
            index,
        })
}

/// Outcome of testing r*_{s^α}(a) against [a^{n_1} − ε_1, ..., a^{n_l} − ε_l].
#[derive(Debug, Clone)]
pub struct LcmDivisibilityReport {
    pub star: BigUint,
    pub lcm: BigUint,
    pub divides: bool,
    /// Some index i with s^α | n_i.
    pub clause1_index: Option<usize>,
    /// Some index i with s = 2, ε_i = −1 and s^{α−1} | n_i.
    pub clause2_index: Option<usize>,
}

impl LcmDivisibilityReport {
    /// Divisibility must always be witnessed by one of the two clauses.
    pub fn witnessed(&self) -> bool {
        !self.divides || self.clause1_index.is_some() || self.clause2_index.is_some()
    }
}

/// Checks whether r*_{s^α}(a) divides the lcm of the terms a^{n_i} − ε_i
/// (ε = Plus means a^n − 1, Minus means a^n + 1) and locates the clause of
/// the divisibility criterion that witnesses it.
pub fn divides_lcm_classifier(
    s: u64,
    alpha: u32,
    a: SignedBase,
    terms: &[(u64, Sign)],
    cfg: &FactorConfig,
) -> Result<LcmDivisibilityReport> {
    if !super::is_prime_u64(s) {
        return Err(Error::NotPrime(BigUint::from(s)));
    }
    let index = s.pow(alpha);
    let star = star_value(a, index, cfg)?;
    let mut lcm = BigUint::one();
    for &(n, eps) in terms {
        let term = (a.pow(n as u32) - eps.unit()).abs().to_biguint().unwrap();
        lcm = lcm.lcm(&term);
    }
    let divides = (&lcm % &star).is_zero();
    let clause1_index = terms.iter().position(|&(n, _)| n % index == 0);
    let clause2_index = if s == 2 {
        let half = s.pow(alpha - 1);
        terms
            .iter()
            .position(|&(n, eps)| eps == Sign::Minus && n % half == 0)
    } else {
        None
    };
    Ok(LcmDivisibilityReport {
        star,
        lcm,
        divides,
        clause1_index,
        clause2_index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ppd(a: i64, i: u64) -> PpdReport {
        primitive_prime_divisors(SignedBase::new(a).unwrap(), i, &FactorConfig::default())
            .unwrap()
    }

    #[test]
    fn report_examples() {
        let r = ppd(2, 6);
        assert!(r.ppd_set.is_empty());
        assert!(r.exceptional);
        assert_eq!(r.star, Some(BigUint::from(9u32)));

        let r = ppd(2, 3);
        assert_eq!(r.ppd_set, vec![BigUint::from(7u32)]);
        assert_eq!(r.canonical, Some(BigUint::from(7u32)));
        assert_eq!(r.star, Some(BigUint::from(7u32)));
        assert!(!r.exceptional);

        let r = ppd(3, 5);
        assert_eq!(r.ppd_set, vec![BigUint::from(11u32)]);
        assert_eq!(r.star, Some(BigUint::from(121u32)));
    }

    #[test]
    fn all_six_exceptional_pairs() {
        for (a, i) in EXCEPTIONAL_PAIRS {
            let r = ppd(a, i);
            assert!(r.exceptional, "({a}, {i}) should be exceptional");
            assert!(r.ppd_set.is_empty(), "({a}, {i}) should have empty R_i");
        }
        assert_eq!(ppd(-2, 3).star, Some(BigUint::from(9u32)));
        assert_eq!(ppd(-3, 2).star, Some(BigUint::from(8u32)));
        assert_eq!(ppd(2, 1).star, None);
        assert_eq!(ppd(3, 1).star, None);
        assert_eq!(ppd(-2, 2).star, None);
    }

    #[test]
    fn two_as_primitive_divisor() {
        // a = 5: 5 = 1 mod 4, so e(2, 5) = 1 and 2 ∈ R_1(5).
        let r = ppd(5, 1);
        assert!(r.ppd_set.contains(&BigUint::from(2u32)));
        // a = 7: e(2, 7) = 2, so 2 ∈ R_2(7) (7^2 − 1 = 48).
        let r = ppd(7, 2);
        assert!(r.ppd_set.contains(&BigUint::from(2u32)));
        assert!(!ppd(7, 1).ppd_set.contains(&BigUint::from(2u32)));
    }

    #[test]
    fn classifier_examples() {
        let cfg = FactorConfig::default();
        let b = |a| SignedBase::new(a).unwrap();

        let r = divides_lcm_classifier(2, 2, b(3), &[(2, Sign::Minus)], &cfg).unwrap();
        assert_eq!(r.star, BigUint::from(5u32));
        assert!(r.divides);
        assert_eq!(r.clause1_index, None);
        assert_eq!(r.clause2_index, Some(0));

        let r = divides_lcm_classifier(3, 1, b(2), &[(3, Sign::Plus)], &cfg).unwrap();
        assert_eq!(r.star, BigUint::from(7u32));
        assert!(r.divides);
        assert_eq!(r.clause1_index, Some(0));

        let r = divides_lcm_classifier(5, 1, b(2), &[(3, Sign::Plus)], &cfg).unwrap();
        assert_eq!(r.star, BigUint::from(31u32));
        assert!(!r.divides);
        assert!(r.witnessed());
    }

    #[test]
    fn classifier_rejects_undefined_star() {
        let cfg = FactorConfig::default();
        let b = SignedBase::new(2).unwrap();
        // r*_1(2) is undefined: (2, 1) is exceptional with no override.
        assert!(divides_lcm_classifier(2, 0, b, &[(1, Sign::Plus)], &cfg).is_err());
    }

    #[test]
    fn cyclotomic_spot_values() {
        let b = |a| SignedBase::new(a).unwrap();
        assert_eq!(cyclotomic_value(1, b(2)), BigUint::from(1u32));
        assert_eq!(cyclotomic_value(6, b(2)), BigUint::from(3u32));
        assert_eq!(cyclotomic_value(12, b(2)), BigUint::from(13u32));
        assert_eq!(cyclotomic_value(3, b(-2)), BigUint::from(3u32));
        assert_eq!(cyclotomic_value(5, b(3)), BigUint::from(121u32));
    }
}
