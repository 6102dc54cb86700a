//! Semisimple spectra of classical groups.
//!
//! For linear and unitary groups the orders of semisimple elements are the
//! values [(εq)^{n_1} − 1, ..., (εq)^{n_t} − 1] / c(n_1, ..., n_t) over
//! multisets with n_1 + ... + n_t <= n, and μ_{p'}(G) sits inside that set.
//! The witness construction b_a injects μ(Sym_n) into μ_{p'}(G); the
//! parameter-space enumerator counts the shapes behind the full ν(G).

use std::collections::{BTreeSet, HashSet};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::landau::partition_table;
use crate::numtheory::{factorize, FactorConfig, Sign};
use crate::spectrum::{mu_filter, Spectrum};
use crate::sym::{mu_elements, PermFamily, SpectrumElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClassicalFamily {
    /// PSL_n(q): n is the dimension.
    Psl,
    /// PSU_n(q): n is the dimension.
    Psu,
    /// PSp_2n(q): n is the Lie rank.
    Psp,
    /// Ω_{2n+1}(q): n is the Lie rank.
    OmegaOdd,
    /// PΩ+_{2n}(q).
    POmegaPlus,
    /// PΩ−_{2n}(q).
    POmegaMinus,
}

impl ClassicalFamily {
    pub fn is_linear_unitary(self) -> bool {
        matches!(self, ClassicalFamily::Psl | ClassicalFamily::Psu)
    }

    /// Sign ε of the base εq for linear/unitary groups.
    pub fn eps(self) -> Option<Sign> {
        match self {
            ClassicalFamily::Psl => Some(Sign::Plus),
            ClassicalFamily::Psu => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// A classical group named by family, prk parameter n and field order q = p^f.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupId {
    pub family: ClassicalFamily,
    pub n: u64,
    pub q: u64,
    pub p: u64,
    pub f: u32,
}

impl GroupId {
    pub fn new(family: ClassicalFamily, n: u64, q: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGroup(format!("n must be at least 2, got {n}")));
        }
        let fact = factorize(&BigUint::from(q), &FactorConfig::default())?;
        if fact.factors().len() != 1 {
            return Err(Error::NotPrimePower(q));
        }
        let (p, f) = fact
            .factors()
            .iter()
            .map(|(p, &e)| (p.to_u64().unwrap(), e))
            .next()
            .unwrap();
        Ok(GroupId { family, n, q, p, f })
    }

    /// Warns for parameter combinations that name a non-simple group; the
    /// formulas are still evaluated.
    pub fn nonsimple_warning(&self) -> Option<String> {
        let warn = match (self.family, self.n, self.q) {
            (ClassicalFamily::Psl, 2, 2) | (ClassicalFamily::Psl, 2, 3) => true,
            (ClassicalFamily::Psu, 2, _) | (ClassicalFamily::Psu, 3, 2) => true,
            (ClassicalFamily::Psp, 2, 2) => true,
            _ => false,
        };
        warn.then(|| format!("{:?} with n={}, q={} is not simple", self.family, self.n, self.q))
    }
}

/// |εq − 1| = q − 1 for ε = +, q + 1 for ε = −.
fn eps_q_minus_1(q: u64, eps: Sign) -> u64 {
    match eps {
        Sign::Plus => q - 1,
        Sign::Minus => q + 1,
    }
}

/// |(εq)^k − 1| as an unsigned value.
fn eps_q_pow_term(q: u64, eps: Sign, k: u64) -> BigUint {
    let base = match eps {
        Sign::Plus => BigInt::from(q),
        Sign::Minus => -BigInt::from(q),
    };
    (base.pow(k as u32) - BigInt::one()).abs().to_biguint().unwrap()
}

/// The denominator c(n_1, ..., n_t) of the semisimple order formula.
/// Gcds are taken on absolute values; the four cases are exhaustive for
/// multisets with sum <= n.
pub fn c_denominator(parts: &[u64], n: u64, q: u64, eps: Sign) -> u128 {
    assert!(!parts.is_empty());
    let t = parts.len() as u64;
    let sum: u64 = parts.iter().sum();
    assert!(sum <= n, "parts must sum to at most n");
    let eq = eps_q_minus_1(q, eps);
    if t + n - sum > 2 {
        1
    } else if t == 2 && sum == n {
        let g = parts[0].gcd(&parts[1]);
        (n / g).gcd(&eq) as u128
    } else if t == 1 && sum == n - 1 {
        n.gcd(&eq) as u128
    } else if t == 1 && sum == n {
        // (q − ε1)(n, εq − 1); q − ε1 coincides with |εq − 1|.
        eq as u128 * n.gcd(&eq) as u128
    } else {
        unreachable!("multiset with sum <= n escapes the four-case analysis")
    }
}

/// Calls `f` on every nonempty nondecreasing multiset with sum at most n.
pub fn for_each_multiset(n: u64, mut f: impl FnMut(&[u64])) {
    fn rec(n: u64, min: u64, current: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        for part in min..=n {
            current.push(part);
            f(current);
            rec(n - part, part, current, f);
            current.pop();
        }
    }
    let mut current = Vec::new();
    rec(n, 1, &mut current, &mut f);
}

/// The semisimple order attached to one multiset: lcm of |(εq)^{n_i} − 1|
/// divided (exactly) by c.
pub fn semisimple_order(parts: &[u64], n: u64, q: u64, eps: Sign) -> Result<BigUint> {
    let mut lcm = BigUint::one();
    for &part in parts {
        lcm = lcm.lcm(&eps_q_pow_term(q, eps, part));
    }
    let c = BigUint::from(c_denominator(parts, n, q, eps));
    let (quot, rem) = lcm.div_rem(&c);
    if !rem.is_zero() {
        return Err(Error::InexactDivision {
            numerator: lcm,
            denominator: c,
        });
    }
    Ok(quot)
}

/// ν-style superset of the semisimple orders of PSL_n(q) / PSU_n(q):
/// every value of the lcm/c formula over multisets with sum <= n.
pub fn nu_semisimple(group: &GroupId) -> Result<Spectrum> {
    let eps = group.family.eps().ok_or_else(|| {
        Error::InvalidGroup("semisimple order formula applies to PSL/PSU only".into())
    })?;
    let mut values: BTreeSet<BigUint> = BTreeSet::new();
    let mut error = None;
    for_each_multiset(group.n, |parts| {
        if error.is_some() {
            return;
        }
        match semisimple_order(parts, group.n, group.q, eps) {
            Ok(v) => {
                values.insert(v);
            }
            Err(e) => error = Some(e),
        }
    });
    if let Some(e) = error {
        return Err(e);
    }
    Ok(Spectrum::from_values(values.into_iter().collect()))
}

/// μ_{p'}(G) for PSL/PSU: the divisibility-maximal semisimple orders.
pub fn mu_semisimple(group: &GroupId) -> Result<Spectrum> {
    Ok(mu_filter(&nu_semisimple(group)?))
}

/// The witness order b_a (or the special φ(a) for PSU_n(2)) for an element
/// a of μ(Sym_n), built from a's prime-power parts.
pub fn witness_b(a: &SpectrumElement, group: &GroupId) -> Result<BigUint> {
    let parts: Vec<(u64, u64)> = a
        .factors
        .iter()
        .map(|&(p, e)| (p, p.pow(e)))
        .collect();
    let l_a: u64 = parts.iter().map(|&(_, pk)| pk).sum();
    let n = group.n;
    let q = group.q;
    if l_a > n {
        return Err(Error::UnsupportedCase(format!(
            "l({}) = {l_a} exceeds n = {n}",
            a.value
        )));
    }
    match group.family {
        ClassicalFamily::Psl | ClassicalFamily::Psu => {
            let eps = group.family.eps().unwrap();
            if group.family == ClassicalFamily::Psu && q == 2 {
                if let Some(&(_, pk)) = parts.iter().find(|&&(p, _)| p == 2) {
                    if pk == 2 {
                        return psu2_phi(&parts, n);
                    }
                }
            }
            let values: Vec<u64> = parts.iter().map(|&(_, pk)| pk).collect();
            let mut lcm = BigUint::one();
            for &part in &values {
                lcm = lcm.lcm(&eps_q_pow_term(q, eps, part));
            }
            let c = BigUint::from(c_denominator(&values, n, q, eps));
            exact_div(lcm, c)
        }
        ClassicalFamily::Psp | ClassicalFamily::OmegaOdd => {
            let signs: Vec<i64> = parts.iter().map(|&(p, _)| if p == 2 { 1 } else { -1 }).collect();
            signed_lcm_over_2(q, &parts, &signs)
        }
        ClassicalFamily::POmegaPlus | ClassicalFamily::POmegaMinus => {
            let plus_family = group.family == ClassicalFamily::POmegaPlus;
            if l_a < n {
                let signs: Vec<i64> =
                    parts.iter().map(|&(p, _)| if p == 2 { 1 } else { -1 }).collect();
                return signed_lcm_over_2(q, &parts, &signs);
            }
            // l(a) = n: the sign pattern must have an even number of pluses
            // for ε = + and an odd number for ε = −.
            if parts.len() == 1 && parts[0].0 == 2 {
                // a = n is a power of 2.
                let qn = BigUint::from(q).pow(n as u32);
                return if plus_family {
                    let (_, odd) = crate::numtheory::part_and_copart(
                        &BigInt::from(qn - BigUint::one()),
                        2,
                    )?;
                    Ok(odd)
                } else {
                    exact_div(qn + BigUint::one(), BigUint::from(2u64.gcd(&(q - 1))))
                };
            }
            let mut signs: Vec<i64> =
                parts.iter().map(|&(p, _)| if p == 2 { 1 } else { -1 }).collect();
            let pluses = signs.iter().filter(|&&s| s == 1).count();
            let parity_ok = if plus_family {
                pluses % 2 == 0
            } else {
                pluses % 2 == 1
            };
            if !parity_ok {
                // Substitute q^m − 1 by q^m + 1 for one odd prime.
                match parts.iter().position(|&(p, _)| p != 2) {
                    Some(i) => signs[i] = 1,
                    None => {
                        return Err(Error::UnsupportedCase(
                            "no odd prime part available for the sign flip".into(),
                        ))
                    }
                }
            }
            signed_lcm_over_2(q, &parts, &signs)
        }
    }
}

/// lcm of q^{p_i^{α_i}} + s_i divided by (2, q − 1).
fn signed_lcm_over_2(q: u64, parts: &[(u64, u64)], signs: &[i64]) -> Result<BigUint> {
    let mut lcm = BigUint::one();
    for (&(_, pk), &s) in parts.iter().zip(signs) {
        let term = (BigInt::from(q).pow(pk as u32) + s).to_biguint().unwrap();
        lcm = lcm.lcm(&term);
    }
    exact_div(lcm, BigUint::from(2u64.gcd(&(q - 1))))
}

/// The special φ(a) for G = PSU_n(2) when the 2-part of a is exactly 2.
fn psu2_phi(parts: &[(u64, u64)], n: u64) -> Result<BigUint> {
    let odd_parts: Vec<u64> = parts.iter().filter(|&&(p, _)| p != 2).map(|&(_, pk)| pk).collect();
    let rest: u64 = odd_parts.iter().sum();
    let t = parts.len() as u64;
    let multiplier = if rest == n - 2 {
        2u32
    } else if rest == n - 3 {
        4u32
    } else {
        return Err(Error::UnsupportedCase(format!(
            "odd parts of a maximal order must sum to n−2 or n−3, got {rest} for n = {n}"
        )));
    };
    let d = if t > 1 { 1 } else { n.gcd(&3) };
    let mut lcm = BigUint::one();
    for &pk in &odd_parts {
        lcm = lcm.lcm(&(BigUint::from(2u32).pow(pk as u32) + BigUint::one()));
    }
    exact_div(lcm * BigUint::from(multiplier), BigUint::from(d))
}

fn exact_div(numerator: BigUint, denominator: BigUint) -> Result<BigUint> {
    let (quot, rem) = numerator.div_rem(&denominator);
    if rem.is_zero() {
        Ok(quot)
    } else {
        Err(Error::InexactDivision {
            numerator,
            denominator,
        })
    }
}

/// One witness assignment: a ∈ μ(Sym_n), its witness order, and the chosen
/// absorbing element of μ_{p'}(G) (None in the PSU_n(2) partial check).
#[derive(Debug, Clone)]
pub struct Assignment {
    pub a: BigUint,
    pub witness: BigUint,
    pub target: Option<BigUint>,
}

#[derive(Debug, Clone)]
pub struct InjectionReport {
    pub group: GroupId,
    pub mu_sym_size: usize,
    pub mu_pprime_size: usize,
    pub assignments: Vec<Assignment>,
    pub injective: bool,
    /// |μ_{p'}(G)| >= |μ(Sym_n)|; not claimed in the partial PSU_n(2) mode.
    pub size_ok: bool,
    /// PSU_n(2): only the special φ(a) values are built and checked for
    /// pairwise distinctness.
    pub partial: bool,
}

/// Builds the witness for every element of μ(Sym_n) and locates an absorbing
/// element of μ_{p'}(G), verifying the assignment is injective.
pub fn injection_phi_check(group: &GroupId) -> Result<InjectionReport> {
    if !group.family.is_linear_unitary() {
        return Err(Error::InvalidGroup(
            "injection check applies to PSL/PSU only".into(),
        ));
    }
    let mu_sym = mu_elements(PermFamily::Sym, group.n, 1);
    let mu_pp = mu_semisimple(group)?;
    let partial = group.family == ClassicalFamily::Psu && group.q == 2;

    let mut assignments = Vec::new();
    if partial {
        for a in &mu_sym {
            let has_two_part_2 = a.factors.first() == Some(&(2, 1));
            if !has_two_part_2 {
                continue;
            }
            let phi = witness_b(a, group)?;
            assignments.push(Assignment {
                a: BigUint::from(a.value),
                witness: phi,
                target: None,
            });
        }
        let mut seen = BTreeSet::new();
        let injective = assignments.iter().all(|x| seen.insert(x.witness.clone()));
        return Ok(InjectionReport {
            group: *group,
            mu_sym_size: mu_sym.len(),
            mu_pprime_size: mu_pp.count(),
            assignments,
            injective,
            size_ok: true,
            partial,
        });
    }

    for a in &mu_sym {
        let b = witness_b(a, group)?;
        let target = mu_pp
            .values()
            .iter()
            .find(|v| (*v % &b).is_zero())
            .cloned()
            .ok_or_else(|| {
                Error::WitnessNotAbsorbed(format!(
                    "b_{} = {b} divides no element of μ_p'({:?} n={} q={})",
                    a.value, group.family, group.n, group.q
                ))
            })?;
        assignments.push(Assignment {
            a: BigUint::from(a.value),
            witness: b,
            target: Some(target),
        });
    }
    let mut seen = BTreeSet::new();
    let injective = assignments
        .iter()
        .all(|x| seen.insert(x.target.clone().unwrap()));
    let size_ok = mu_pp.count() >= mu_sym.len();
    Ok(InjectionReport {
        group: *group,
        mu_sym_size: mu_sym.len(),
        mu_pprime_size: mu_pp.count(),
        assignments,
        injective,
        size_ok,
        partial,
    })
}

/// A parameter shape of the ν(G) enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MixedParam {
    /// n = (p^α − 1) + n_1 + ... + n_s; the first term is optional.
    LinearUnitary {
        /// The value p^α − 1 when present.
        first_term: Option<u64>,
        parts: Vec<u64>,
    },
    /// n = f(p) + |m̄_1| + |m̄_2| with f(p) = (p^k + i)/2, i in 1..=4.
    SymplecticOrthogonal {
        f_term: Option<FShape>,
        parts1: Vec<u64>,
        parts2: Vec<u64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FShape {
    pub i: u8,
    pub k: u32,
    pub value: u64,
}

impl MixedParam {
    /// The semisimple order value, defined only for the purely semisimple
    /// linear/unitary shape (no unipotent first term, nonempty parts).
    pub fn semisimple_value(&self, group: &GroupId) -> Option<BigUint> {
        match self {
            MixedParam::LinearUnitary {
                first_term: None,
                parts,
            } if !parts.is_empty() => {
                let eps = group.family.eps()?;
                semisimple_order(parts, group.n, group.q, eps).ok()
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ParamSpaceReport {
    pub raw_count: u64,
    pub dedup_count: u64,
    /// p(n) · log2(2n + 2), asserted for linear/unitary shapes only.
    pub bound: f64,
    pub bound_applies: bool,
    pub within_bound: bool,
}

fn for_each_partition(n: u64, mut f: impl FnMut(&[u64])) {
    fn rec(n: u64, min: u64, current: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        if n == 0 {
            f(current);
            return;
        }
        for part in min..=n {
            current.push(part);
            rec(n - part, part, current, f);
            current.pop();
        }
    }
    let mut current = Vec::new();
    rec(n, 1, &mut current, &mut f);
}

/// Enumerates every parameter shape of ν(G) and checks the counting bound
/// for linear/unitary groups.
pub fn parameter_space_enumerate(
    group: &GroupId,
    mut visit: impl FnMut(&MixedParam),
) -> ParamSpaceReport {
    let n = group.n;
    let p = group.p;
    let mut raw_count = 0u64;
    // Dedup by a 128-bit fingerprint instead of storing millions of owned
    // shapes; two independently keyed hashes make collisions negligible.
    let mut dedup: HashSet<u128> = HashSet::new();
    let fingerprint = |param: &MixedParam| -> u128 {
        use std::hash::{Hash, Hasher};
        let mut h1 = std::collections::hash_map::DefaultHasher::new();
        param.hash(&mut h1);
        let mut h2 = std::collections::hash_map::DefaultHasher::new();
        (0xb5ad_4ece_da1c_e2a9u64, param).hash(&mut h2);
        ((h1.finish() as u128) << 64) | h2.finish() as u128
    };

    if group.family.is_linear_unitary() {
        // First-term choices: absent, or p^α − 1 <= n with α >= 1.
        let mut firsts: Vec<Option<u64>> = vec![None];
        let mut pa = p;
        while pa - 1 <= n {
            firsts.push(Some(pa - 1));
            match pa.checked_mul(p) {
                Some(next) => pa = next,
                None => break,
            }
        }
        for first in &firsts {
            let rest = n - first.unwrap_or(0);
            for_each_partition(rest, |parts| {
                raw_count += 1;
                let param = MixedParam::LinearUnitary {
                    first_term: *first,
                    parts: parts.to_vec(),
                };
                dedup.insert(fingerprint(&param));
                visit(&param);
            });
        }
    } else {
        let mut fshapes: Vec<Option<FShape>> = vec![None];
        for i in 1u8..=4 {
            let mut pk = p;
            let mut k = 1u32;
            loop {
                let num = pk + i as u64;
                if num % 2 == 0 && num / 2 <= n {
                    fshapes.push(Some(FShape {
                        i,
                        k,
                        value: num / 2,
                    }));
                }
                if pk / 2 > n {
                    break;
                }
                match pk.checked_mul(p) {
                    Some(next) => {
                        pk = next;
                        k += 1;
                    }
                    None => break,
                }
            }
        }
        for fshape in &fshapes {
            let rest = n - fshape.map_or(0, |f| f.value);
            for k1 in 0..=rest {
                for_each_partition(k1, |parts1| {
                    let parts1 = parts1.to_vec();
                    for_each_partition(rest - k1, |parts2| {
                        raw_count += 1;
                        let param = MixedParam::SymplecticOrthogonal {
                            f_term: *fshape,
                            parts1: parts1.clone(),
                            parts2: parts2.to_vec(),
                        };
                        dedup.insert(fingerprint(&param));
                        visit(&param);
                    });
                });
            }
        }
    }

    let pn = partition_table(n as usize)
        .pop()
        .unwrap()
        .to_f64()
        .unwrap();
    let bound = pn * ((2 * n + 2) as f64).log2();
    let bound_applies = group.family.is_linear_unitary();
    ParamSpaceReport {
        raw_count,
        dedup_count: dedup.len() as u64,
        bound,
        bound_applies,
        within_bound: !bound_applies || (raw_count as f64) < bound,
    }
}
