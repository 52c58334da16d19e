//! Rational functions with lazily normalized, factored denominators.
//!
//! The denominator is a multiset of atoms: cyclotomic polynomials in one variable or
//! opaque polynomials normalized to leading coefficient 1. Sums take the lcm of the
//! two multisets, which keeps denominators at their natural size without any gcd.

use std::collections::BTreeMap;
use std::fmt;

use super::coeff::Coefficient;
use super::cyclo::{cyclotomic, may_vanish_at_root, qint_factors, totient};
use super::laurent::{Exps, LaurentPoly};
use super::ExactError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Atom {
    Cyclo { var: String, d: u32 },
    Poly(LaurentPoly),
}

impl Atom {
    pub fn expand(&self) -> LaurentPoly {
        match self {
            Atom::Cyclo { var, d } => cyclotomic(var, *d),
            Atom::Poly(p) => p.clone(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: BTreeMap<Atom, u32>,
}

/// A divisor split as `unit · monomial · ∏ atoms`.
struct Split {
    unit: Coefficient,
    mono_vars: Vec<String>,
    mono: Exps,
    atoms: Vec<Atom>,
}

fn split_divisor(p: &LaurentPoly) -> Split {
    if let Some((c, e)) = p.as_monomial() {
        return Split { unit: c.clone(), mono_vars: p.vars().to_vec(), mono: e.clone(), atoms: vec![] };
    }
    let mono = p.min_exps();
    let neg: Vec<i32> = mono.iter().map(|x| -x).collect();
    let mut rest = p.shift(p.vars(), &neg);
    let mut atoms = Vec::new();
    if rest.is_univariate() {
        let var = rest.vars()[0].clone();
        let mut d = 1u32;
        loop {
            let deg = rest.degree_span().map_or(0, |(_, hi)| hi);
            if deg == 0 || d > 2 * deg as u32 + 8 {
                break;
            }
            if totient(d) <= deg as u32 && may_vanish_at_root(&rest, d) {
                if let Some(q) = rest.div_exact(&cyclotomic(&var, d)) {
                    rest = q;
                    atoms.push(Atom::Cyclo { var: var.clone(), d });
                    continue;
                }
            }
            d += 1;
        }
    }
    let unit;
    if let Some((c, e)) = rest.as_monomial() {
        debug_assert!(e.iter().all(|&x| x == 0));
        unit = c.clone();
    } else {
        let lead = rest.leading().map(|(_, c)| c.clone()).unwrap();
        rest = rest.scale(&lead.inv().unwrap());
        unit = lead;
        atoms.push(Atom::Poly(rest));
    }
    Split { unit, mono_vars: p.vars().to_vec(), mono, atoms }
}

fn expand_atoms<'a>(it: impl Iterator<Item = (&'a Atom, u32)>) -> LaurentPoly {
    let mut r = LaurentPoly::one();
    for (a, e) in it {
        if e > 0 {
            r = r.mul(&a.expand().pow(e));
        }
    }
    r
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn from_coeff(c: Coefficient) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        RatFunc { num, den: BTreeMap::new() }
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(LaurentPoly::var(name))
    }

    /// `c · s^k`.
    pub fn s_pow(k: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial("s", k, Coefficient::one()))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ExactError> {
        Self::from_poly(num).div(&Self::from_poly(den))
    }

    /// `coeff · s^shift · ∏⟨n⟩ / ∏⟨m⟩`; `None` if some denominator index is 0.
    pub fn from_qints(coeff: i64, shift: i32, num: &[i64], den: &[i64]) -> Option<Self> {
        if coeff == 0 || num.contains(&0) {
            return if den.contains(&0) { None } else { Some(Self::zero()) };
        }
        let mut sign = coeff;
        let mut e = shift;
        let mut p = LaurentPoly::one();
        for &n in num {
            p = p.mul(&super::qint(n));
        }
        let mut atoms: BTreeMap<Atom, u32> = BTreeMap::new();
        for &m in den {
            let (sg, sh, ds) = qint_factors(m)?;
            sign *= sg;
            e -= sh;
            for d in ds {
                *atoms.entry(Atom::Cyclo { var: "s".into(), d }).or_insert(0) += 1;
            }
        }
        let num = p.mul(&LaurentPoly::monomial("s", e, Coefficient::from_int(sign)));
        Some(RatFunc { num, den: atoms })
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    /// Expanded denominator.
    pub fn den(&self) -> LaurentPoly {
        expand_atoms(self.den.iter().map(|(a, &e)| (a, e)))
    }

    pub fn den_atoms(&self) -> impl Iterator<Item = (&Atom, &u32)> {
        self.den.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.equals(&Self::one())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    fn lcm_cofactors(&self, o: &Self) -> (BTreeMap<Atom, u32>, LaurentPoly, LaurentPoly) {
        let mut l = self.den.clone();
        for (a, &e) in &o.den {
            let slot = l.entry(a.clone()).or_insert(0);
            *slot = (*slot).max(e);
        }
        let cof = |d: &BTreeMap<Atom, u32>| expand_atoms(l.iter().map(|(a, &e)| (a, e - d.get(a).copied().unwrap_or(0))));
        let ca = cof(&self.den);
        let cb = cof(&o.den);
        (l, ca, cb)
    }

    pub fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        if self.den == o.den {
            return RatFunc { num: self.num.add(&o.num), den: self.den.clone() }.cleaned();
        }
        let (l, ca, cb) = self.lcm_cofactors(o);
        RatFunc { num: self.num.mul(&ca).add(&o.num.mul(&cb)), den: l }.cleaned()
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut den = self.den.clone();
        for (a, &e) in &o.den {
            *den.entry(a.clone()).or_insert(0) += e;
        }
        RatFunc { num: self.num.mul(&o.num), den }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        RatFunc { num: self.num.scale(c), den: self.den.clone() }.cleaned()
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        Self::one().div(self)
    }

    pub fn div(&self, o: &Self) -> Result<Self, ExactError> {
        if o.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // o.den moves to the numerator, cancelling against our own atoms first
        let mut den = self.den.clone();
        let mut extra = BTreeMap::new();
        for (a, &e) in &o.den {
            let have = den.get(a).copied().unwrap_or(0);
            let c = have.min(e);
            if c > 0 {
                if have == c {
                    den.remove(a);
                } else {
                    den.insert(a.clone(), have - c);
                }
            }
            if e > c {
                extra.insert(a.clone(), e - c);
            }
        }
        let mut num = self.num.mul(&expand_atoms(extra.iter().map(|(a, &e)| (a, e))));
        let sp = split_divisor(&o.num);
        let neg: Vec<i32> = sp.mono.iter().map(|x| -x).collect();
        num = num.scale(&sp.unit.inv().ok_or(ExactError::DivisionByZero)?).shift(&sp.mono_vars, &neg);
        for a in sp.atoms {
            *den.entry(a).or_insert(0) += 1;
        }
        Ok(RatFunc { num, den })
    }

    pub fn pow(&self, n: i32) -> Result<Self, ExactError> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut r = Self::one();
        for _ in 0..n.unsigned_abs() {
            r = r.mul(&base);
        }
        Ok(r)
    }

    fn cleaned(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
        }
        self
    }

    /// Cross-multiplication equality.
    pub fn equals(&self, o: &Self) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        if self.is_zero() || o.is_zero() {
            return self.is_zero() && o.is_zero();
        }
        let (_, ca, cb) = self.lcm_cofactors(o);
        self.num.mul(&ca) == o.num.mul(&cb)
    }

    /// Cancels denominator atoms that divide the numerator. The result is in lowest
    /// terms whenever every atom is irreducible (always true for cyclotomic atoms).
    pub fn reduce(&self) -> Self {
        let mut num = self.num.clone();
        let mut den = BTreeMap::new();
        for (a, &e) in &self.den {
            let poly = a.expand();
            let mut left = e;
            while left > 0 {
                let plausible = match a {
                    Atom::Cyclo { d, .. } => num.is_univariate() && may_vanish_at_root(&num, *d),
                    Atom::Poly(_) => true,
                };
                if !plausible {
                    break;
                }
                match num.div_exact(&poly) {
                    Some(q) => {
                        num = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                den.insert(a.clone(), left);
            }
        }
        RatFunc { num, den }.cleaned()
    }

    /// The Laurent polynomial this function equals, if it is one.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        let r = self.reduce();
        if r.den.is_empty() {
            Some(r.num)
        } else {
            None
        }
    }

    /// Substitutes polynomials for variables (used for `q ↦ s²` style specializations).
    pub fn substitute(&self, subs: &BTreeMap<String, RatFunc>) -> Result<Self, ExactError> {
        let num = subst_poly(&self.num, subs)?;
        let den = subst_poly(&self.den(), subs)?;
        num.div(&den)
    }

    /// Univariate real evaluation (numeric Leonard check only).
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den().eval_f64(x)
    }
}

fn subst_poly(p: &LaurentPoly, subs: &BTreeMap<String, RatFunc>) -> Result<RatFunc, ExactError> {
    let mut out = RatFunc::zero();
    for (e, c) in p.terms() {
        let mut t = RatFunc::from_coeff(c.clone());
        for (v, &x) in p.vars().iter().zip(e.iter()) {
            let f = match subs.get(v) {
                Some(r) => r.pow(x)?,
                None => RatFunc::from_poly(LaurentPoly::monomial(v, x, Coefficient::one())),
            };
            t = t.mul(&f);
        }
        out = out.add(&t);
    }
    Ok(out)
}

impl PartialEq for RatFunc {
    fn eq(&self, o: &Self) -> bool {
        self.equals(o)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduce();
        if r.den.is_empty() {
            write!(f, "{}", r.num)
        } else {
            write!(f, "({}) / ({})", r.num, r.den())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qint;

    fn q(n: i64) -> RatFunc {
        RatFunc::from_poly(qint(n))
    }

    #[test]
    fn spec_examples() {
        assert!(q(2).inv().unwrap().mul(&q(2)).is_one());
        assert!(q(2).add(&q(-2)).is_zero());
        let s2 = RatFunc::s_pow(2);
        let a = q(3).div(&q(2)).unwrap();
        let b = q(3).mul(&s2).div(&q(2).mul(&s2)).unwrap();
        assert_eq!(a, b);
        assert!(q(1).div(&RatFunc::zero()).is_err());
    }

    #[test]
    fn factored_and_generic_paths_agree() {
        let fast = RatFunc::from_qints(-1, 0, &[2, 2], &[3, 4]).unwrap();
        let slow = q(2).mul(&q(2)).neg().div(&q(3).mul(&q(4))).unwrap();
        assert_eq!(fast, slow);
        assert!(RatFunc::from_qints(1, 0, &[1], &[0]).is_none());
    }

    #[test]
    fn reduce_cancels() {
        let r = q(6).div(&q(3)).unwrap();
        let p = r.as_laurent().unwrap();
        assert_eq!(p, qint(6).div_exact(&qint(3)).unwrap());
        assert!(q(3).div(&q(2)).unwrap().as_laurent().is_none());
    }

    #[test]
    fn opaque_multivariate_denominators() {
        let t = RatFunc::var("t");
        let qv = RatFunc::var("q");
        let a = t.add(&qv).inv().unwrap();
        let b = a.mul(&qv).add(&a.mul(&t));
        assert!(b.is_one());
    }
}
