//! Cross-module consistency: generated spectra against the brute-force
//! oracles, Landau's function against spectrum maxima, and the classical
//! formulas against exhaustive matrix groups.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use spectra::classical::{mu_semisimple, ClassicalFamily, GroupId};
use spectra::landau::{divisor_counts_up_to, landau_table};
use spectra::numtheory::{factorize, FactorConfig};
use spectra::oracle::{
    oracle_compare, oracle_matrix_group, oracle_sym_alt, p_prime_parts, MatrixFamily,
    MatrixGroupSpec,
};
use spectra::spectrum::mu_filter;
use spectra::sym::{mu_spectrum, omega_alternating, omega_symmetric, PermFamily};

#[test]
fn omega_matches_partition_oracle() {
    for family in [PermFamily::Sym, PermFamily::Alt] {
        for n in 1..=30u64 {
            let generated = match family {
                PermFamily::Sym => omega_symmetric(n, 1),
                PermFamily::Alt => omega_alternating(n, 1),
            };
            let oracle = oracle_sym_alt(n, family).unwrap();
            let diff = oracle_compare(&generated, &oracle);
            assert!(diff.is_empty(), "family {family:?}, n = {n}: {diff:?}");
        }
    }
}

#[test]
fn omega_is_divisor_closed_and_nested() {
    for n in 1..=25u64 {
        let sym = omega_symmetric(n, 1);
        let alt = omega_alternating(n, 1);
        // ω(Alt_n) ⊆ ω(Sym_n) ⊆ ω(Sym_{n+1}).
        let next = omega_symmetric(n + 1, 1);
        for v in alt.values() {
            assert!(sym.contains(v));
        }
        for v in sym.values() {
            assert!(next.contains(v));
        }
        // Divisor closure of ω(Sym_n).
        for v in sym.values() {
            let v64 = v.to_u64().unwrap();
            for d in 1..=v64 {
                if v64 % d == 0 {
                    assert!(sym.contains(&BigUint::from(d)), "n = {n}: {d} | {v64}");
                }
            }
        }
    }
}

#[test]
fn landau_is_spectrum_maximum() {
    let table = landau_table(30);
    for n in 1..=30u64 {
        let max = omega_symmetric(n, 1).values().last().cloned().unwrap();
        assert_eq!(table[n as usize], max, "g({n})");
    }
}

/// |ω| <= |μ| · max divisor count over ω: each maximal element absorbs at
/// most its divisors.
#[test]
fn spectrum_size_versus_mu_size() {
    let cfg = FactorConfig::default();
    for family in [PermFamily::Sym, PermFamily::Alt] {
        for n in 1..=30u64 {
            let omega = match family {
                PermFamily::Sym => omega_symmetric(n, 1),
                PermFamily::Alt => omega_alternating(n, 1),
            };
            let mu = mu_spectrum(family, n, 1);
            let max_sigma = omega
                .values()
                .iter()
                .map(|v| factorize(v, &cfg).unwrap().divisor_count())
                .max()
                .unwrap();
            assert!(
                omega.count() as u128 <= mu.count() as u128 * max_sigma,
                "family {family:?}, n = {n}"
            );
        }
    }
}

/// μ_{p'}(PSL_2(q)) from the lcm/c formula equals the maximal p'-parts of
/// the exhaustively enumerated matrix group.
#[test]
fn semisimple_mu_matches_matrix_oracle() {
    for q in [5u64, 7] {
        let group = GroupId::new(ClassicalFamily::Psl, 2, q).unwrap();
        let formula = mu_semisimple(&group).unwrap();
        let omega = oracle_matrix_group(&MatrixGroupSpec::new(MatrixFamily::Sl, 2, q)).unwrap();
        let oracle = mu_filter(&p_prime_parts(&omega, group.p));
        assert_eq!(formula, oracle, "PSL_2({q})");
    }
}

/// The divisor-count sieve agrees with factorization-based counts.
#[test]
fn divisor_sieve_matches_factorization() {
    let cfg = FactorConfig::default();
    let sigma = divisor_counts_up_to(2000);
    for n in 1..=2000u64 {
        let f = factorize(&BigUint::from(n), &cfg).unwrap();
        assert_eq!(sigma[n as usize] as u128, f.divisor_count(), "σ({n})");
    }
}

/// The Alt spectrum is exactly the orders realized by even permutations,
/// which for odd orders coincides with ω(Sym_n) restricted to cost <= n.
#[test]
fn alt_odd_orders_match_sym() {
    for n in 3..=25u64 {
        let sym = omega_symmetric(n, 1);
        let alt = omega_alternating(n, 1);
        for v in sym.values() {
            if (v % BigUint::from(2u32)).is_zero() {
                continue;
            }
            // An odd-order permutation is already even.
            assert!(alt.contains(v), "odd order {v} missing from Alt_{n}");
        }
        for v in alt.values() {
            assert!(sym.contains(v));
        }
    }
}

#[test]
fn mu_is_minimal_generating_antichain() {
    for n in [10u64, 20, 30] {
        let omega = omega_symmetric(n, 1);
        let mu = mu_spectrum(PermFamily::Sym, n, 1);
        // Removing any element of μ loses coverage of that element.
        for dropped in mu.values() {
            let rest: Vec<_> = mu
                .values()
                .iter()
                .filter(|v| *v != dropped)
                .cloned()
                .collect();
            assert!(
                !rest.iter().any(|m| (m % dropped).is_zero()),
                "{dropped} is redundant in μ(Sym_{n})"
            );
        }
        let _ = omega;
    }
}
