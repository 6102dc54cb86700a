//! Tiny finite fields GF(p^f), f <= 2, with fully tabulated arithmetic.
//! Elements are indices 0..q encoding polynomials a0 + a1·x in base p.

use crate::error::{Error, Result};
use crate::numtheory::is_prime_u64;

#[derive(Debug, Clone)]
pub struct SmallField {
    pub p: u64,
    pub f: u32,
    pub q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
}

impl SmallField {
    pub fn new(p: u64, f: u32) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.into()));
        }
        if !(1..=2).contains(&f) || p.pow(f) > 255 {
            return Err(Error::InvalidGroup(format!(
                "field GF({p}^{f}) outside the supported oracle range"
            )));
        }
        let q = p.pow(f) as usize;
        let pu = p as usize;
        let mut field = SmallField {
            p,
            f,
            q,
            add: vec![0; q * q],
            mul: vec![0; q * q],
            neg: vec![0; q],
        };
        // x^2 = c (odd p, c a non-residue) or x^2 = x + 1 (p = 2, GF(4)).
        let nonresidue = if f == 2 && p > 2 {
            (1..p).find(|&c| (1..p).all(|y| y * y % p != c)).unwrap()
        } else {
            0
        };
        for a in 0..q {
            let (a0, a1) = (a % pu, a / pu);
            field.neg[a] = (((pu - a0) % pu) + ((pu - a1) % pu) * pu) as u8;
            for b in 0..q {
                let (b0, b1) = (b % pu, b / pu);
                field.add[a * q + b] = (((a0 + b0) % pu) + ((a1 + b1) % pu) * pu) as u8;
                let prod = if f == 1 {
                    a0 * b0 % pu
                } else if p == 2 {
                    // x^2 = x + 1
                    let c0 = (a0 * b0 + a1 * b1) % 2;
                    let c1 = (a0 * b1 + a1 * b0 + a1 * b1) % 2;
                    c0 + 2 * c1
                } else {
                    let c0 = (a0 * b0 + nonresidue as usize * a1 * b1) % pu;
                    let c1 = (a0 * b1 + a1 * b0) % pu;
                    c0 + pu * c1
                };
                field.mul[a * q + b] = prod as u8;
            }
        }
        Ok(field)
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut acc = 1u8;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn one(&self) -> u8 {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_field_axioms(fld: &SmallField) {
        let q = fld.q as u8;
        for a in 0..q {
            assert_eq!(fld.add(a, fld.neg(a)), 0);
            assert_eq!(fld.mul(a, 1), a);
            for b in 0..q {
                assert_eq!(fld.add(a, b), fld.add(b, a));
                assert_eq!(fld.mul(a, b), fld.mul(b, a));
                for c in 0..q {
                    assert_eq!(
                        fld.mul(a, fld.add(b, c)),
                        fld.add(fld.mul(a, b), fld.mul(a, c))
                    );
                }
            }
        }
        // Nonzero elements form a group: each has an inverse.
        for a in 1..q {
            assert!((1..q).any(|b| fld.mul(a, b) == 1), "{a} has no inverse");
        }
    }

    #[test]
    fn prime_fields() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            check_field_axioms(&SmallField::new(p, 1).unwrap());
        }
    }

    #[test]
    fn quadratic_extensions() {
        for p in [2u64, 3, 5] {
            check_field_axioms(&SmallField::new(p, 2).unwrap());
        }
        // Frobenius x -> x^p fixes exactly GF(p).
        let f9 = SmallField::new(3, 2).unwrap();
        let fixed = (0..9u8).filter(|&x| f9.pow(x, 3) == x).count();
        assert_eq!(fixed, 3);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(SmallField::new(4, 1).is_err());
        assert!(SmallField::new(17, 2).is_err());
        assert!(SmallField::new(3, 3).is_err());
    }
}
