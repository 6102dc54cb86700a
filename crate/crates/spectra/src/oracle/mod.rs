//! Independent brute-force ground truth: partition-based spectra for
//! Sym/Alt and exhaustive matrix-group enumeration for tiny classical
//! groups. Nothing here shares code with the generators it checks.

mod field;
mod matrix;

pub use field::SmallField;
pub use matrix::{oracle_matrix_group, MatrixFamily, MatrixGroupSpec};

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::spectrum::Spectrum;
use crate::sym::PermFamily;

pub const SYM_ORACLE_CAP: u64 = 60;

/// ω by brute force: lcm over every partition of n; for Alt only partitions
/// with an even number of even parts (even permutations).
pub fn oracle_sym_alt(n: u64, family: PermFamily) -> Result<Spectrum> {
    if !(1..=SYM_ORACLE_CAP).contains(&n) {
        return Err(Error::OracleCapExceeded(format!(
            "partition oracle supports 1 <= n <= {SYM_ORACLE_CAP}, got {n}"
        )));
    }
    let mut orders: BTreeSet<u128> = BTreeSet::new();
    // Iterative enumeration of partitions in nonincreasing form.
    let mut parts: Vec<u64> = vec![n];
    loop {
        let keep = match family {
            PermFamily::Sym => true,
            PermFamily::Alt => parts.iter().filter(|&&p| p % 2 == 0).count() % 2 == 0,
        };
        if keep {
            let lcm = parts.iter().fold(1u128, |acc, &p| acc.lcm(&(p as u128)));
            orders.insert(lcm);
        }
        // Next partition: shrink the rightmost part > 1 and repack the tail.
        let Some(idx) = parts.iter().rposition(|&p| p > 1) else {
            break;
        };
        let new_part = parts[idx] - 1;
        let mut remainder: u64 = parts[idx..].iter().sum::<u64>() - new_part;
        parts.truncate(idx);
        parts.push(new_part);
        while remainder > 0 {
            let piece = remainder.min(new_part);
            parts.push(piece);
            remainder -= piece;
        }
    }
    Ok(Spectrum::from_values(
        orders.into_iter().map(BigUint::from).collect(),
    ))
}

/// Symmetric difference between two spectra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffReport {
    pub only_left: Vec<BigUint>,
    pub only_right: Vec<BigUint>,
}

impl DiffReport {
    pub fn is_empty(&self) -> bool {
        self.only_left.is_empty() && self.only_right.is_empty()
    }
}

pub fn oracle_compare(lhs: &Spectrum, rhs: &Spectrum) -> DiffReport {
    let only_left = lhs
        .values()
        .iter()
        .filter(|v| !rhs.contains(v))
        .cloned()
        .collect();
    let only_right = rhs
        .values()
        .iter()
        .filter(|v| !lhs.contains(v))
        .cloned()
        .collect();
    DiffReport {
        only_left,
        only_right,
    }
}

/// Drops the p-part of every order: the set of p'-parts of `s`.
pub fn p_prime_parts(s: &Spectrum, p: u64) -> Spectrum {
    let p = BigUint::from(p);
    let values = s
        .values()
        .iter()
        .map(|v| {
            let mut rest = v.clone();
            while !rest.is_zero() && (&rest % &p).is_zero() {
                rest /= &p;
            }
            rest
        })
        .collect();
    Spectrum::from_values(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vals(s: &Spectrum) -> Vec<u64> {
        use num_traits::ToPrimitive;
        s.values().iter().map(|v| v.to_u64().unwrap()).collect()
    }

    #[test]
    fn sym_alt_examples() {
        assert_eq!(vals(&oracle_sym_alt(1, PermFamily::Sym).unwrap()), vec![1]);
        assert_eq!(
            vals(&oracle_sym_alt(5, PermFamily::Alt).unwrap()),
            vec![1, 2, 3, 5]
        );
        assert_eq!(
            vals(&oracle_sym_alt(6, PermFamily::Sym).unwrap()),
            vec![1, 2, 3, 4, 5, 6]
        );
        assert!(oracle_sym_alt(0, PermFamily::Sym).is_err());
        assert!(oracle_sym_alt(61, PermFamily::Sym).is_err());
    }

    #[test]
    fn compare_reports() {
        let a = Spectrum::from_values(vec![1u32.into(), 2u32.into()]);
        let b = Spectrum::from_values(vec![1u32.into(), 3u32.into()]);
        assert!(oracle_compare(&a, &a).is_empty());
        let d = oracle_compare(&a, &b);
        assert_eq!(d.only_left, vec![BigUint::from(2u32)]);
        assert_eq!(d.only_right, vec![BigUint::from(3u32)]);
    }

    #[test]
    fn alt5_is_psl2_5() {
        let alt5 = crate::sym::omega_alternating(5, 1);
        let psl25 = oracle_matrix_group(&MatrixGroupSpec::new(MatrixFamily::Sl, 2, 5)).unwrap();
        assert!(oracle_compare(&alt5, &psl25).is_empty());
    }

    #[test]
    fn p_prime_part_extraction() {
        let s = Spectrum::from_values(
            [1u64, 2, 3, 4, 5, 12]
                .iter()
                .map(|&v| BigUint::from(v))
                .collect(),
        );
        assert_eq!(vals(&p_prime_parts(&s, 2)), vec![1, 3, 5]);
    }
}
