//! Exhaustive element-order computation for tiny classical matrix groups.
//!
//! SL_2(q) is scanned directly; larger groups are generated by breadth-first
//! closure from randomly sampled form-preserving matrices, and the closure
//! size is asserted against the standard order formula before any order is
//! trusted.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::oracle::field::SmallField;
use crate::spectrum::Spectrum;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFamily {
    Sl,
    Su,
    Sp,
}

/// A matrix group small enough to enumerate: family, dimension, field order.
#[derive(Debug, Clone, Copy)]
pub struct MatrixGroupSpec {
    pub family: MatrixFamily,
    pub dim: usize,
    pub q: u64,
    /// Hard cap on the group order (default 10^7).
    pub cap: u64,
    pub seed: u64,
}

impl MatrixGroupSpec {
    pub fn new(family: MatrixFamily, dim: usize, q: u64) -> Self {
        MatrixGroupSpec {
            family,
            dim,
            q,
            cap: 10_000_000,
            seed: 0xa11ce,
        }
    }

    /// Order of SL_d(q), SU_d(q) or Sp_d(q) by the standard formulas.
    pub fn group_order(&self) -> u64 {
        let q = self.q;
        let d = self.dim as u32;
        match self.family {
            MatrixFamily::Sl => {
                let mut ord = q.pow(d * (d - 1) / 2);
                for i in 2..=d {
                    ord *= q.pow(i) - 1;
                }
                ord
            }
            MatrixFamily::Su => {
                let mut ord = q.pow(d * (d - 1) / 2);
                for i in 2..=d {
                    let qi = q.pow(i);
                    ord *= if i % 2 == 0 { qi - 1 } else { qi + 1 };
                }
                ord
            }
            MatrixFamily::Sp => {
                assert!(d % 2 == 0, "Sp needs even dimension");
                let m = d / 2;
                let mut ord = q.pow(m * m);
                for i in 1..=m {
                    ord *= q.pow(2 * i) - 1;
                }
                ord
            }
        }
    }
}

/// Square matrix with entries as field indices; dim <= 4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Mat {
    d: usize,
    e: [u8; 16],
}

impl Mat {
    fn identity(d: usize, fld: &SmallField) -> Mat {
        let mut m = Mat { d, e: [0; 16] };
        for i in 0..d {
            m.e[i * d + i] = fld.one();
        }
        m
    }

    fn mul(&self, other: &Mat, fld: &SmallField) -> Mat {
        let d = self.d;
        let mut out = Mat { d, e: [0; 16] };
        for i in 0..d {
            for k in 0..d {
                let a = self.e[i * d + k];
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    let idx = i * d + j;
                    out.e[idx] = fld.add(out.e[idx], fld.mul(a, other.e[k * d + j]));
                }
            }
        }
        out
    }

    /// Determinant by permutation expansion; d <= 4 keeps this cheap.
    fn det(&self, fld: &SmallField) -> u8 {
        let d = self.d;
        let mut perm: Vec<usize> = (0..d).collect();
        let mut acc = 0u8;
        permute(&mut perm, 0, &mut |perm, sign| {
            let mut prod = fld.one();
            for (i, &j) in perm.iter().enumerate() {
                prod = fld.mul(prod, self.e[i * d + j]);
            }
            if !sign {
                prod = fld.neg(prod);
            }
            acc = fld.add(acc, prod);
        });
        acc
    }

    /// Conjugate transpose under x -> x^q0 (the field automorphism fixing
    /// the subfield of order q0).
    fn conj_transpose(&self, fld: &SmallField, q0: u64) -> Mat {
        let d = self.d;
        let mut out = Mat { d, e: [0; 16] };
        for i in 0..d {
            for j in 0..d {
                out.e[j * d + i] = fld.pow(self.e[i * d + j], q0);
            }
        }
        out
    }

    fn transpose(&self) -> Mat {
        let d = self.d;
        let mut out = Mat { d, e: [0; 16] };
        for i in 0..d {
            for j in 0..d {
                out.e[j * d + i] = self.e[i * d + j];
            }
        }
        out
    }

    fn key(&self) -> u128 {
        let mut k = 0u128;
        for i in 0..self.d * self.d {
            k |= (self.e[i] as u128) << (8 * i);
        }
        k | ((self.d as u128) << 120)
    }
}

fn permute(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize], bool)) {
    let d = perm.len();
    if k == d {
        // Parity by counting inversions.
        let mut inv = 0;
        for i in 0..d {
            for j in i + 1..d {
                if perm[i] > perm[j] {
                    inv += 1;
                }
            }
        }
        f(perm, inv % 2 == 0);
        return;
    }
    for i in k..d {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

/// Standard alternating form: J = [[0, I], [-I, 0]].
fn symplectic_form(d: usize, fld: &SmallField) -> Mat {
    let m = d / 2;
    let mut j = Mat { d, e: [0; 16] };
    for i in 0..m {
        j.e[i * d + (m + i)] = fld.one();
        j.e[(m + i) * d + i] = fld.neg(fld.one());
    }
    j
}

struct GroupContext {
    fld: SmallField,
    family: MatrixFamily,
    dim: usize,
    /// Field order of the base field (for SU, entries live in GF(q^2)).
    q: u64,
    form: Option<Mat>,
}

impl GroupContext {
    fn new(spec: &MatrixGroupSpec) -> Result<Self> {
        let q = spec.q;
        let fact = crate::numtheory::factorize(
            &BigUint::from(q),
            &crate::numtheory::FactorConfig::default(),
        )?;
        if fact.factors().len() != 1 {
            return Err(Error::NotPrimePower(q));
        }
        use num_traits::ToPrimitive;
        let (p, f) = fact
            .factors()
            .iter()
            .map(|(p, &e)| (p.to_u64().unwrap(), e))
            .next()
            .unwrap();
        let fld = match spec.family {
            MatrixFamily::Su => SmallField::new(p, 2 * f)?,
            _ => SmallField::new(p, f)?,
        };
        let form = match spec.family {
            MatrixFamily::Sp => Some(symplectic_form(spec.dim, &fld)),
            _ => None,
        };
        Ok(GroupContext {
            fld,
            family: spec.family,
            dim: spec.dim,
            q,
            form,
        })
    }

    fn is_member(&self, m: &Mat) -> bool {
        match self.family {
            MatrixFamily::Sl => m.det(&self.fld) == self.fld.one(),
            MatrixFamily::Su => {
                // Hermitian identity form: conj(m)^T m = I, det = 1.
                let prod = m.conj_transpose(&self.fld, self.q).mul(m, &self.fld);
                prod == Mat::identity(self.dim, &self.fld) && m.det(&self.fld) == self.fld.one()
            }
            MatrixFamily::Sp => {
                let j = self.form.as_ref().unwrap();
                let prod = m.transpose().mul(j, &self.fld).mul(m, &self.fld);
                &prod == j
            }
        }
    }

    /// Scalar matrices of the group.
    fn center(&self) -> Vec<Mat> {
        (0..self.fld.q as u8)
            .filter_map(|lambda| {
                let mut m = Mat {
                    d: self.dim,
                    e: [0; 16],
                };
                for i in 0..self.dim {
                    m.e[i * self.dim + i] = lambda;
                }
                self.is_member(&m).then_some(m)
            })
            .collect()
    }
}

/// Enumerates the group of `spec` and returns the set of element orders in
/// the quotient by its scalar center.
pub fn oracle_matrix_group(spec: &MatrixGroupSpec) -> Result<Spectrum> {
    let expected = spec.group_order();
    if expected > spec.cap {
        return Err(Error::OracleCapExceeded(format!(
            "group order {expected} exceeds cap {}",
            spec.cap
        )));
    }
    let ctx = GroupContext::new(spec)?;
    let elements = if spec.family == MatrixFamily::Sl && spec.dim == 2 {
        scan_sl2(&ctx)
    } else {
        closure_from_random_generators(&ctx, spec, expected)?
    };
    if elements.len() as u64 != expected {
        return Err(Error::OrderFormulaMismatch {
            got: elements.len() as u64,
            expected,
        });
    }

    let center: HashSet<u128> = ctx.center().iter().map(Mat::key).collect();
    let mut orders: BTreeSet<u64> = BTreeSet::new();
    for g in &elements {
        let mut acc = *g;
        let mut k = 1u64;
        while !center.contains(&acc.key()) {
            acc = acc.mul(g, &ctx.fld);
            k += 1;
        }
        orders.insert(k);
    }
    Ok(Spectrum::from_values(
        orders.into_iter().map(BigUint::from).collect(),
    ))
}

fn scan_sl2(ctx: &GroupContext) -> Vec<Mat> {
    let q = ctx.fld.q as u8;
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                for d in 0..q {
                    let m = Mat {
                        d: 2,
                        e: {
                            let mut e = [0u8; 16];
                            e[0] = a;
                            e[1] = b;
                            e[2] = c;
                            e[3] = d;
                            e
                        },
                    };
                    if ctx.is_member(&m) {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

fn closure_from_random_generators(
    ctx: &GroupContext,
    spec: &MatrixGroupSpec,
    expected: u64,
) -> Result<Vec<Mat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut generators: Vec<Mat> = Vec::new();
    loop {
        generators.push(random_member(ctx, &mut rng));
        let closure = close(ctx, &generators, spec.cap)?;
        if closure.len() as u64 == expected {
            return Ok(closure);
        }
        if closure.len() as u64 > expected {
            return Err(Error::OrderFormulaMismatch {
                got: closure.len() as u64,
                expected,
            });
        }
        // Proper subgroup so far: sample another generator.
    }
}

fn random_member(ctx: &GroupContext, rng: &mut ChaCha8Rng) -> Mat {
    let q = ctx.fld.q as u8;
    loop {
        let mut m = Mat {
            d: ctx.dim,
            e: [0; 16],
        };
        for i in 0..ctx.dim * ctx.dim {
            m.e[i] = rng.gen_range(0..q);
        }
        if ctx.is_member(&m) {
            return m;
        }
    }
}

fn close(ctx: &GroupContext, generators: &[Mat], cap: u64) -> Result<Vec<Mat>> {
    let identity = Mat::identity(ctx.dim, &ctx.fld);
    let mut seen: HashSet<u128> = HashSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(identity.key());
    out.push(identity);
    queue.push_back(identity);
    while let Some(m) = queue.pop_front() {
        for g in generators {
            let next = m.mul(g, &ctx.fld);
            if seen.insert(next.key()) {
                if out.len() as u64 >= cap {
                    return Err(Error::OracleCapExceeded(format!(
                        "closure exceeded cap {cap}"
                    )));
                }
                out.push(next);
                queue.push_back(next);
            }
        }
    }
    Ok(out)
}
