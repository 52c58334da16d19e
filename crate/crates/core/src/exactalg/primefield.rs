//! Arithmetic modulo a prime below 2^64 and specialization of rational functions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::coeff::Coefficient;
use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::ExactError;

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let (s, o) = a.overflowing_add(b);
    if o || s >= p {
        s.wrapping_sub(p)
    } else {
        s
    }
}

pub fn submod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a.wrapping_sub(b).wrapping_add(p)
    }
}

pub fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    r
}

pub fn invmod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(powmod(a, p - 2, p))
    }
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Smallest prime above 2^61 that is 1 mod 4.
pub fn default_prime() -> u64 {
    let mut n = (1u64 << 61) + 1;
    while !is_prime(n) {
        n += 4;
    }
    n
}

/// A square root of −1 modulo a prime `p ≡ 1 (mod 4)`.
pub fn sqrt_minus_one(p: u64) -> Option<u64> {
    if p % 4 != 1 {
        return None;
    }
    (2..).take(200).find_map(|g| {
        let r = powmod(g, (p - 1) / 4, p);
        (mulmod(r, r, p) == p - 1).then_some(r)
    })
}

pub fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let m = n.mod_floor(&BigInt::from(p));
    m.to_u64().unwrap()
}

/// A prime modulus together with residues for the variables.
#[derive(Clone, Debug, Serialize)]
pub struct PrimeFieldPoint {
    pub p: u64,
    pub assignment: BTreeMap<String, u64>,
}

impl PrimeFieldPoint {
    pub fn new(p: u64, assignment: BTreeMap<String, u64>) -> Result<Self, ExactError> {
        if !is_prime(p) {
            return Err(ExactError::BadPrime(p));
        }
        if let Some((v, _)) = assignment.iter().find(|(_, &r)| r % p == 0) {
            return Err(ExactError::ZeroResidue(v.clone()));
        }
        Ok(PrimeFieldPoint { p, assignment })
    }

    pub fn value(&self, var: &str) -> Result<u64, ExactError> {
        self.assignment.get(var).copied().ok_or_else(|| ExactError::Unassigned(var.to_string()))
    }

    pub fn coeff(&self, c: &Coefficient) -> Result<u64, ExactError> {
        let p = self.p;
        let re = ratio_mod(&c.re, p)?;
        if c.im == num_rational::BigRational::from_integer(0.into()) {
            return Ok(re);
        }
        let iota = sqrt_minus_one(p).ok_or(ExactError::NoSqrtMinusOne(p))?;
        let im = ratio_mod(&c.im, p)?;
        Ok(addmod(re, mulmod(im, iota, p), p))
    }

    pub fn poly(&self, f: &LaurentPoly) -> Result<u64, ExactError> {
        let p = self.p;
        let vals: Vec<(u64, u64)> = f
            .vars()
            .iter()
            .map(|v| {
                let x = self.value(v)?;
                Ok((x, invmod(x, p).unwrap()))
            })
            .collect::<Result<_, ExactError>>()?;
        let mut acc = 0u64;
        for (e, c) in f.terms() {
            let mut t = self.coeff(c)?;
            for (&(x, xi), &k) in vals.iter().zip(e.iter()) {
                let base = if k >= 0 { x } else { xi };
                t = mulmod(t, powmod(base, k.unsigned_abs() as u64, p), p);
            }
            acc = addmod(acc, t, p);
        }
        Ok(acc)
    }
}

fn ratio_mod(r: &num_rational::BigRational, p: u64) -> Result<u64, ExactError> {
    let n = reduce_bigint(r.numer(), p);
    let d = reduce_bigint(&r.denom().abs(), p);
    let di = invmod(d, p).ok_or(ExactError::Resample)?;
    Ok(mulmod(n, di, p))
}

/// Evaluates `f` at the point; a vanishing denominator asks the caller to resample.
pub fn specialize(f: &RatFunc, pt: &PrimeFieldPoint) -> Result<u64, ExactError> {
    if f.is_zero() {
        return Ok(0);
    }
    let mut den = 1u64;
    for (a, &e) in f.den_atoms() {
        let v = pt.poly(&a.expand())?;
        den = mulmod(den, powmod(v, e as u64, pt.p), pt.p);
    }
    let di = invmod(den, pt.p).ok_or(ExactError::Resample)?;
    Ok(mulmod(pt.poly(f.num())?, di, pt.p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qint;

    fn pt(p: u64, s: u64) -> PrimeFieldPoint {
        PrimeFieldPoint::new(p, [("s".to_string(), s)].into()).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(specialize(&RatFunc::from_poly(qint(2)), &pt(13, 2)).unwrap(), 1);
        assert_eq!(specialize(&RatFunc::zero(), &pt(13, 2)).unwrap(), 0);
        let d = RatFunc::s_pow(2).sub(&RatFunc::s_pow(-2));
        let f = RatFunc::one().div(&d).unwrap();
        assert!(matches!(specialize(&f, &pt(13, 1)), Err(ExactError::Resample)));
    }

    #[test]
    fn default_prime_properties() {
        let p = default_prime();
        assert!(p > 1 << 61);
        assert_eq!(p % 4, 1);
        let i = sqrt_minus_one(p).unwrap();
        assert_eq!(mulmod(i, i, p), p - 1);
    }

    #[test]
    fn gaussian_specialization() {
        let p = 13;
        let i = sqrt_minus_one(p).unwrap();
        let f = RatFunc::from_coeff(Coefficient::iota());
        assert_eq!(specialize(&f, &pt(p, 3)).unwrap(), i);
    }
}
