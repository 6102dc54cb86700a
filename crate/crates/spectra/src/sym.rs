//! Spectra of symmetric and alternating groups.
//!
//! ω(Sym_n) = {m : l(m) <= n} where l sums the prime-power components of m.
//! The generator walks prime-power choices per prime in ascending order,
//! cutting a branch as soon as the remaining degree budget cannot afford the
//! next prime, so every element is visited exactly once. For Alt_n the
//! 2-part costs two extra degrees (an even permutation needs padding).

use num_bigint::BigUint;

use crate::numtheory::{sieve_primes, FactoredNat};
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PermFamily {
    Sym,
    Alt,
}

/// One generated order with its factorization and the degree it consumes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumElement {
    pub value: u128,
    /// Ascending (prime, exponent) pairs.
    pub factors: Vec<(u64, u32)>,
    /// Degrees consumed: l(value), plus 2 for even orders in Alt.
    pub cost: u64,
}

impl SpectrumElement {
    pub fn to_factored(&self) -> FactoredNat {
        FactoredNat::from_prime_powers(&self.factors)
    }
}

/// Cost of using p^a as the p-component.
fn power_cost(family: PermFamily, p: u64, pk: u64) -> u64 {
    if family == PermFamily::Alt && p == 2 {
        pk + 2
    } else {
        pk
    }
}

fn dfs(
    family: PermFamily,
    primes: &[u64],
    idx: usize,
    budget: u64,
    value: u128,
    factors: &mut Vec<(u64, u32)>,
    out: &mut Vec<SpectrumElement>,
) {
    if idx >= primes.len() || primes[idx] > budget {
        out.push(SpectrumElement {
            value,
            factors: factors.clone(),
            cost: 0, // filled by caller from the budget delta
        });
        return;
    }
    let p = primes[idx];
    dfs(family, primes, idx + 1, budget, value, factors, out);
    let mut pk = p;
    let mut a = 1u32;
    loop {
        let cost = power_cost(family, p, pk);
        if cost > budget {
            break;
        }
        factors.push((p, a));
        dfs(
            family,
            primes,
            idx + 1,
            budget - cost,
            value * pk as u128,
            factors,
            out,
        );
        factors.pop();
        match pk.checked_mul(p) {
            Some(next) => {
                pk = next;
                a += 1;
            }
            None => break,
        }
    }
}

fn element_cost(family: PermFamily, factors: &[(u64, u32)]) -> u64 {
    factors
        .iter()
        .map(|&(p, a)| power_cost(family, p, p.pow(a)))
        .sum()
}

/// All orders of elements of Sym_n (family Sym) or Alt_n (family Alt),
/// sorted ascending by value. `threads` caps worker threads; branch results
/// are merged and sorted, so the output does not depend on the schedule.
pub fn omega_elements(family: PermFamily, n: u64, threads: usize) -> Vec<SpectrumElement> {
    assert!(n >= 1);
    let primes = sieve_primes(n);
    let threads = threads.max(1);

    // Top-level branches: the choice for the first prime (including none).
    let mut branches: Vec<(u128, Vec<(u64, u32)>, u64)> = vec![(1, Vec::new(), 0)];
    if let Some(&p0) = primes.first() {
        let mut pk = p0;
        let mut a = 1u32;
        loop {
            let cost = power_cost(family, p0, pk);
            if cost > n {
                break;
            }
            branches.push((pk as u128, vec![(p0, a)], cost));
            match pk.checked_mul(p0) {
                Some(next) => {
                    pk = next;
                    a += 1;
                }
                None => break,
            }
        }
    }

    let run_branch = |(value, factors, cost): &(u128, Vec<(u64, u32)>, u64)| {
        let mut out = Vec::new();
        let mut fs = factors.clone();
        dfs(family, &primes, 1, n - cost, *value, &mut fs, &mut out);
        out
    };

    let mut elements: Vec<SpectrumElement> = if threads <= 1 || branches.len() <= 1 {
        branches.iter().flat_map(|b| run_branch(b)).collect()
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = branches
                .chunks(branches.len().div_ceil(threads))
                .map(|chunk| {
                    scope.spawn(move || {
                        chunk.iter().flat_map(run_branch).collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("spectrum worker panicked"))
                .collect()
        })
    };
    for e in &mut elements {
        e.cost = element_cost(family, &e.factors);
        debug_assert!(e.cost <= n);
    }
    elements.sort_by_key(|e| e.value);
    debug_assert!(elements.windows(2).all(|w| w[0].value < w[1].value));
    elements
}

pub fn omega_symmetric(n: u64, threads: usize) -> Spectrum {
    elements_to_spectrum(&omega_elements(PermFamily::Sym, n, threads))
}

pub fn omega_alternating(n: u64, threads: usize) -> Spectrum {
    elements_to_spectrum(&omega_elements(PermFamily::Alt, n, threads))
}

pub fn elements_to_spectrum(elements: &[SpectrumElement]) -> Spectrum {
    Spectrum::from_values(elements.iter().map(|e| BigUint::from(e.value)).collect())
}

/// Membership test without generating the spectrum: l(m) <= n for Sym,
/// with the +2 adjustment for even orders in Alt.
pub fn contains_order(family: PermFamily, n: u64, m: &FactoredNat) -> bool {
    use num_traits::ToPrimitive;
    let base = match m.min_sym_degree().to_u64() {
        Some(v) => v,
        None => return false,
    };
    let even = m.exponent_of(&BigUint::from(2u32)) > 0;
    let cost = if family == PermFamily::Alt && even {
        base + 2
    } else {
        base
    };
    cost <= n
}

/// Divisibility-maximal elements of ω, by the local test: m is maximal iff
/// raising any single prime's exponent exceeds the degree budget. Any proper
/// multiple inside the spectrum would contain such a one-step multiple, since
/// the spectrum is divisor closed.
pub fn mu_elements(family: PermFamily, n: u64, threads: usize) -> Vec<SpectrumElement> {
    let primes = sieve_primes(n);
    omega_elements(family, n, threads)
        .into_iter()
        .filter(|e| e.cost + min_bump(family, &primes, e) > n)
        .collect()
}

pub fn mu_spectrum(family: PermFamily, n: u64, threads: usize) -> Spectrum {
    elements_to_spectrum(&mu_elements(family, n, threads))
}

/// Cheapest single-prime extension of `e`: a new prime, or one more power of
/// a prime already present.
fn min_bump(family: PermFamily, primes: &[u64], e: &SpectrumElement) -> u64 {
    let mut best = u64::MAX;
    for &p in primes {
        if !e.factors.iter().any(|&(q, _)| q == p) {
            best = best.min(power_cost(family, p, p));
            // A fresh odd prime costs itself, so later absent primes cost
            // more; only the Alt 2-entry (cost 4) can beat its successor.
            if p != 2 {
                break;
            }
        }
    }
    for &(p, a) in &e.factors {
        let cur = p.pow(a);
        if let Some(next) = cur.checked_mul(p) {
            // Exponent bump replaces cost p^a with p^(a+1); the Alt +2 for
            // the 2-part is already paid.
            best = best.min(next - cur);
        }
    }
    best
}
