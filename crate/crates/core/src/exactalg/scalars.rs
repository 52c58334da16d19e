//! Scalar contexts: the same operator code runs over exact rational functions or at a
//! prime-field point.

use std::collections::BTreeMap;
use std::fmt::Debug;

use rand::Rng;

use super::coeff::Coefficient;
use super::primefield::{addmod, invmod, mulmod, powmod, specialize, sqrt_minus_one, submod, PrimeFieldPoint};
use super::qnum::QProduct;
use super::ratfunc::RatFunc;
use super::ExactError;

pub trait Scalars: Sync + Send {
    type Elem: Clone + Send + Sync + Debug;

    fn zero(&self) -> Self::Elem;
    fn int(&self, n: i64) -> Self::Elem;
    fn s_pow(&self, k: i64) -> Self::Elem;
    fn iota(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ExactError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn embed(&self, f: &RatFunc) -> Result<Self::Elem, ExactError>;
    /// Value of a product of quantum integers; errors if its denominator vanishes.
    fn qprod(&self, q: &QProduct) -> Result<Self::Elem, ExactError>;
    fn render(&self, a: &Self::Elem) -> String;
    fn is_exact(&self) -> bool;

    fn one(&self) -> Self::Elem {
        self.int(1)
    }

    fn eq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.is_zero(&self.sub(a, b))
    }

    fn var(&self, name: &str) -> Result<Self::Elem, ExactError> {
        self.embed(&RatFunc::var(name))
    }

    fn qint(&self, n: i64) -> Self::Elem {
        self.qprod(&QProduct::unit().times(n)).expect("no denominator")
    }

    /// The zero-denominator convention: a product whose denominator contains ⟨0⟩ is 0.
    fn qprod_or_zero(&self, q: &QProduct) -> Self::Elem {
        if q.den_vanishes() {
            self.zero()
        } else {
            self.qprod(q).expect("denominator checked")
        }
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ExactError> {
        self.div(&self.one(), a)
    }

    fn pow(&self, a: &Self::Elem, n: i64) -> Result<Self::Elem, ExactError> {
        let base = if n < 0 { self.inv(a)? } else { a.clone() };
        let mut r = self.one();
        for _ in 0..n.unsigned_abs() {
            r = self.mul(&r, &base);
        }
        Ok(r)
    }

    /// t − t⁻¹.
    fn bar(&self, t: &Self::Elem) -> Result<Self::Elem, ExactError> {
        Ok(self.sub(t, &self.inv(t)?))
    }
}

/// Exact arithmetic in the field of rational functions.
#[derive(Clone, Copy, Debug, Default)]
pub struct Exact;

impl Scalars for Exact {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc::zero()
    }
    fn int(&self, n: i64) -> RatFunc {
        RatFunc::from_int(n)
    }
    fn s_pow(&self, k: i64) -> RatFunc {
        RatFunc::s_pow(k as i32)
    }
    fn iota(&self) -> RatFunc {
        RatFunc::from_coeff(Coefficient::iota())
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.add(b)
    }
    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.sub(b)
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.mul(b)
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        a.neg()
    }
    fn div(&self, a: &RatFunc, b: &RatFunc) -> Result<RatFunc, ExactError> {
        a.div(b)
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }
    fn eq(&self, a: &RatFunc, b: &RatFunc) -> bool {
        a.equals(b)
    }
    fn embed(&self, f: &RatFunc) -> Result<RatFunc, ExactError> {
        Ok(f.clone())
    }
    fn qprod(&self, q: &QProduct) -> Result<RatFunc, ExactError> {
        RatFunc::from_qints(q.coeff, q.shift, &q.num, &q.den).ok_or(ExactError::DivisionByZero)
    }
    fn render(&self, a: &RatFunc) -> String {
        a.to_string()
    }
    fn is_exact(&self) -> bool {
        true
    }
}

/// Evaluation at one point of a prime field.
#[derive(Clone, Debug)]
pub struct ModP {
    point: PrimeFieldPoint,
    s: u64,
    s_inv: u64,
    iota: u64,
}

impl ModP {
    pub fn new(point: PrimeFieldPoint) -> Result<Self, ExactError> {
        let p = point.p;
        let iota = sqrt_minus_one(p).ok_or(ExactError::NoSqrtMinusOne(p))?;
        let s = point.assignment.get("s").copied().unwrap_or(1);
        let s_inv = invmod(s, p).ok_or(ExactError::ZeroResidue("s".into()))?;
        Ok(ModP { point, s, s_inv, iota })
    }

    /// Uniformly random nonzero residues for the listed variables.
    pub fn random<R: Rng>(p: u64, vars: &[&str], rng: &mut R) -> Result<Self, ExactError> {
        let assignment: BTreeMap<String, u64> = vars.iter().map(|v| (v.to_string(), rng.gen_range(1..p))).collect();
        Self::new(PrimeFieldPoint::new(p, assignment)?)
    }

    pub fn point(&self) -> &PrimeFieldPoint {
        &self.point
    }

    pub fn prime(&self) -> u64 {
        self.point.p
    }

    fn qint_value(&self, n: i64) -> u64 {
        let p = self.point.p;
        let m = n.unsigned_abs();
        if m == 0 {
            return 0;
        }
        // Σ_{r=0}^{m-1} s^{2m-2-4r}
        let s2 = mulmod(self.s, self.s, p);
        let s2i = mulmod(self.s_inv, self.s_inv, p);
        let step = mulmod(s2i, s2i, p);
        let mut term = powmod(s2, m - 1, p);
        let mut acc = 0;
        for _ in 0..m {
            acc = addmod(acc, term, p);
            term = mulmod(term, step, p);
        }
        if n < 0 {
            submod(0, acc, p)
        } else {
            acc
        }
    }
}

impl Scalars for ModP {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn int(&self, n: i64) -> u64 {
        let p = self.point.p as i128;
        (((n as i128) % p + p) % p) as u64
    }
    fn s_pow(&self, k: i64) -> u64 {
        let base = if k >= 0 { self.s } else { self.s_inv };
        powmod(base, k.unsigned_abs(), self.point.p)
    }
    fn iota(&self) -> u64 {
        self.iota
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        addmod(*a, *b, self.point.p)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        submod(*a, *b, self.point.p)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mulmod(*a, *b, self.point.p)
    }
    fn neg(&self, a: &u64) -> u64 {
        submod(0, *a, self.point.p)
    }
    fn div(&self, a: &u64, b: &u64) -> Result<u64, ExactError> {
        // a zero here may be a coincidence of the point, never a symbolic zero
        let bi = invmod(*b, self.point.p).ok_or(ExactError::Resample)?;
        Ok(mulmod(*a, bi, self.point.p))
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn eq(&self, a: &u64, b: &u64) -> bool {
        a == b
    }
    fn embed(&self, f: &RatFunc) -> Result<u64, ExactError> {
        specialize(f, &self.point)
    }
    fn qprod(&self, q: &QProduct) -> Result<u64, ExactError> {
        if q.den_vanishes() {
            return Err(ExactError::DivisionByZero);
        }
        let mut num = mulmod(self.int(q.coeff), self.s_pow(q.shift as i64), self.point.p);
        for &n in &q.num {
            num = self.mul(&num, &self.qint_value(n));
        }
        let mut den = 1;
        for &n in &q.den {
            den = self.mul(&den, &self.qint_value(n));
        }
        self.div(&num, &den)
    }
    fn render(&self, a: &u64) -> String {
        format!("{} (mod {})", a, self.point.p)
    }
    fn is_exact(&self) -> bool {
        false
    }
}
