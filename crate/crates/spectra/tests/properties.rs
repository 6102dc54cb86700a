//! Property tests pitting the closed forms against direct big-integer
//! computation, and the generated spectra against brute-force oracles.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use spectra::numtheory::{
    factorize, gcd_closed_form, order_e, primitive_prime_divisors, FactorConfig, GcdKind,
    SignedBase,
};
use spectra::spectrum::{mu_filter, Spectrum};

#[test]
fn gcd_closed_form_exhaustive_grid() {
    let cfg = |a: i64| SignedBase::new(a).unwrap();
    for a in (-10i64..=10).filter(|a| a.unsigned_abs() > 1) {
        for s in 1u32..=12 {
            for t in 1u32..=12 {
                let pow_s = BigInt::from(a).pow(s);
                let pow_t = BigInt::from(a).pow(t);
                let direct_mm = (&pow_s - BigInt::one())
                    .gcd(&(&pow_t - BigInt::one()))
                    .abs()
                    .to_biguint()
                    .unwrap();
                assert_eq!(
                    gcd_closed_form(cfg(a), s, t, GcdKind::MinusMinus),
                    direct_mm,
                    "minus-minus a={a} s={s} t={t}"
                );
                let direct_pm = (&pow_s + BigInt::one())
                    .gcd(&(&pow_t - BigInt::one()))
                    .abs()
                    .to_biguint()
                    .unwrap();
                assert_eq!(
                    gcd_closed_form(cfg(a), s, t, GcdKind::PlusMinus),
                    direct_pm,
                    "plus-minus a={a} s={s} t={t}"
                );
            }
        }
    }
}

/// R_i(a) membership matches the order definition for every base in the
/// grid and every odd prime up to 10^5 (and the e(2,·) rule for r = 2).
#[test]
fn ppd_membership_matches_order_definition() {
    let cfg = FactorConfig::default();
    let primes: Vec<u64> = spectra::numtheory::sieve_primes(100_000);
    for a in (-30i64..=30).filter(|a| a.unsigned_abs() > 1) {
        let base = SignedBase::new(a).unwrap();
        let sets: Vec<std::collections::HashSet<BigUint>> = (1u64..=20)
            .map(|i| {
                primitive_prime_divisors(base, i, &cfg)
                    .unwrap()
                    .ppd_set
                    .into_iter()
                    .collect()
            })
            .collect();
        for &r in &primes {
            if a.unsigned_abs() % r == 0 {
                continue;
            }
            // Order of a mod r, capped at 20: larger orders never appear in
            // the grid, by definition.
            let e = if r == 2 {
                order_e(2, base).unwrap()
            } else {
                let a_mod = (a as i128).rem_euclid(r as i128) as u64;
                let mut acc = 1u128;
                let mut found = 0u64;
                for k in 1..=20u64 {
                    acc = acc * a_mod as u128 % r as u128;
                    if acc == 1 {
                        found = k;
                        break;
                    }
                }
                found // 0 means "order exceeds 20"
            };
            for i in 1u64..=20 {
                let member = sets[i as usize - 1].contains(&BigUint::from(r));
                assert_eq!(
                    member,
                    e == i,
                    "a={a} i={i} r={r}: membership vs e(r,a)={e}"
                );
            }
        }
    }
}

/// Primitive prime divisors really are primitive: they divide a^i − 1 and
/// no earlier a^j − 1.
#[test]
fn ppd_minimality() {
    let cfg = FactorConfig::default();
    for a in (-30i64..=30).filter(|a| a.unsigned_abs() > 1) {
        let base = SignedBase::new(a).unwrap();
        for i in 1u64..=20 {
            let report = primitive_prime_divisors(base, i, &cfg).unwrap();
            for r in &report.ppd_set {
                let r_int = BigInt::from_biguint(num_bigint::Sign::Plus, r.clone());
                let target = (BigInt::from(a).pow(i as u32) - BigInt::one()).abs();
                assert!((target % &r_int).is_zero(), "a={a} i={i} r={r} must divide");
                for j in 1..i {
                    // j < i with r | a^j − 1 would contradict primitivity,
                    // except for r = 2 where e is defined mod 4 instead.
                    if *r == BigUint::from(2u32) {
                        continue;
                    }
                    let early = (BigInt::from(a).pow(j as u32) - BigInt::one()).abs();
                    assert!(
                        !(early % &r_int).is_zero(),
                        "a={a} i={i} r={r} divides a^{j} − 1"
                    );
                }
            }
            if let (Some(canonical), Some(star), false) =
                (&report.canonical, &report.star, report.exceptional)
            {
                // star is a power of the canonical ppd dividing a^i − 1.
                let mut s = star.clone();
                while (&s % canonical).is_zero() {
                    s /= canonical;
                }
                assert!(s.is_one(), "a={a} i={i}: star {star} not a power of {canonical}");
                let target = (BigInt::from(a).pow(i as u32) - BigInt::one())
                    .abs()
                    .to_biguint()
                    .unwrap();
                assert!((&target % star).is_zero());
            }
        }
    }
}

proptest! {
    #[test]
    fn divisor_count_multiplicative(m in 1u64..5000, n in 1u64..5000) {
        let cfg = FactorConfig::default();
        prop_assume!(m.gcd(&n) == 1);
        let fm = factorize(&BigUint::from(m), &cfg).unwrap();
        let fn_ = factorize(&BigUint::from(n), &cfg).unwrap();
        let fmn = factorize(&BigUint::from(m * n), &cfg).unwrap();
        prop_assert_eq!(fmn.divisor_count(), fm.divisor_count() * fn_.divisor_count());
    }

    #[test]
    fn min_sym_degree_monotone_under_divisibility(d in 1u64..70, k in 1u64..70) {
        let cfg = FactorConfig::default();
        let part = factorize(&BigUint::from(d), &cfg).unwrap();
        let whole = factorize(&BigUint::from(d * k), &cfg).unwrap();
        prop_assert!(part.min_sym_degree() <= whole.min_sym_degree());
    }

    #[test]
    fn mu_filter_is_antichain_with_same_closure(
        values in proptest::collection::btree_set(1u64..500, 1..40)
    ) {
        let s = Spectrum::from_values(values.iter().map(|&v| BigUint::from(v)).collect());
        let mu = mu_filter(&s);
        // Antichain: no element divides another.
        for x in mu.values() {
            for y in mu.values() {
                if x != y {
                    prop_assert!(!(y % x).is_zero(), "{x} divides {y}");
                }
            }
        }
        // Every element of s divides some maximal element.
        for v in s.values() {
            prop_assert!(mu.values().iter().any(|m| (m % v).is_zero()));
        }
        // Maximal elements come from s itself.
        for m in mu.values() {
            prop_assert!(s.contains(m));
        }
    }
}
