//! The polynomial representation of the (C∨₁,C₁) DAHA on Laurent polynomials in X, its
//! spherical generators x, y, z, the intertwiners onto blocks of the dumbbell basis, and
//! the Leonard-pair checks on those blocks.

mod checks;
mod intertwine;
mod leonard;
mod poly;

pub use checks::{daha_control, puncture_control, verify_a1_coherence, verify_daha_relations, verify_daha_relations_with, verify_puncture_relation, verify_structure_constants};
pub use intertwine::{intertwiner_sigma04, intertwiner_sigma11, verify_block_coverage};
pub use leonard::{leonard_check, leonard_control, leonard_matrices, tridiagonal_defects, FiniteBlock, Matrix};
pub use poly::XLaurent;

use crate::exactalg::{Coefficient, RatFunc, Scalars};
use crate::Error;

/// Names of the indeterminates of the generic parameter set.
pub const SYMBOLIC_VARS: [&str; 5] = ["q", "t1", "t2", "t3", "t4"];

/// q, t₁..t₄ as rational functions; all five invertible.
#[derive(Clone, Debug)]
pub struct DahaParams {
    pub q: RatFunc,
    pub t: [RatFunc; 4],
}

impl DahaParams {
    pub fn new(q: RatFunc, t: [RatFunc; 4]) -> Result<Self, Error> {
        if q.is_zero() || t.iter().any(|x| x.is_zero()) {
            return Err(Error::Invalid("DAHA parameters must be invertible".into()));
        }
        Ok(DahaParams { q, t })
    }

    /// Independent indeterminates q, t₁..t₄.
    pub fn symbolic() -> Self {
        DahaParams { q: RatFunc::var("q"), t: ["t1", "t2", "t3", "t4"].map(RatFunc::var) }
    }

    /// q = s², t₁ = ιs^{−2i−2}, t₂ = ιs^{2k+2}, t₃ = ιs^{2i}, t₄ = ιs^{2k+2}.
    pub fn eq_params(i: i64, k: i64) -> Self {
        let io = |e: i64| RatFunc::from_coeff(Coefficient::iota()).mul(&RatFunc::s_pow(e as i32));
        DahaParams { q: RatFunc::s_pow(2), t: [io(-2 * i - 2), io(2 * k + 2), io(2 * i), io(2 * k + 2)] }
    }

    /// The A₁ specialization (1, 1, t, 1).
    pub fn a1(q: RatFunc, t: RatFunc) -> Self {
        DahaParams { q, t: [RatFunc::one(), RatFunc::one(), t, RatFunc::one()] }
    }

    /// q = s, t = −s^{−j−2}.
    pub fn sigma11(j: i64) -> Self {
        Self::a1(RatFunc::s_pow(1), RatFunc::s_pow(-(j as i32) - 2).neg())
    }
}

/// Which Terwilliger constants β, γ to use. Only `Working` satisfies the relations; the
/// printed assignment is kept as a negative control.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Constants {
    #[default]
    Working,
    /// β = t̄₁t̄₄ + q̄t̄₃t̄₂, γ = t̄₂t̄₄ + q̄t̄₃t̄₁.
    Printed,
}

/// A spherical generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    X,
    Y,
    Z,
}

/// The operators T₀, T₁, X and the spherical generators over a scalar context.
pub struct DahaRep<'a, K: Scalars> {
    k: &'a K,
    pub q: K::Elem,
    pub t: [K::Elem; 4],
    pub tbar: [K::Elem; 4],
    /// qt₃ − (qt₃)⁻¹.
    pub qt3bar: K::Elem,
    pub alpha: K::Elem,
    pub beta: K::Elem,
    pub gamma: K::Elem,
}

impl<'a, K: Scalars> DahaRep<'a, K> {
    pub fn new(k: &'a K, p: &DahaParams, constants: Constants) -> Result<Self, Error> {
        let q = k.embed(&p.q)?;
        let t = [k.embed(&p.t[0])?, k.embed(&p.t[1])?, k.embed(&p.t[2])?, k.embed(&p.t[3])?];
        let mut tbar = Vec::with_capacity(4);
        for x in &t {
            tbar.push(k.bar(x)?);
        }
        let tbar: [K::Elem; 4] = tbar.try_into().expect("four parameters");
        let qt3bar = k.bar(&k.mul(&q, &t[2]))?;
        let pair = |a: &K::Elem, b: &K::Elem, c: &K::Elem| k.add(&k.mul(a, b), &k.mul(&qt3bar, c));
        let [b1, b2, _, b4] = &tbar;
        let alpha = pair(b1, b2, b4);
        let (beta, gamma) = match constants {
            Constants::Working => (pair(b2, b4, b1), pair(b1, b4, b2)),
            Constants::Printed => (pair(b1, b4, b2), pair(b2, b4, b1)),
        };
        Ok(DahaRep { k, q, t, tbar, qt3bar, alpha, beta, gamma })
    }

    pub fn scalars(&self) -> &K {
        self.k
    }

    /// T₀ = t₁σ̂ŷ − (q²t̄₁X² + qt̄₂X)(1 − σ̂ŷ)/(1 − q²X²).
    pub fn t0(&self, f: &XLaurent<K::Elem>) -> Result<XLaurent<K::Elem>, Error> {
        let k = self.k;
        let q2 = k.mul(&self.q, &self.q);
        let mut sy = XLaurent::zero();
        for (&e, c) in &f.terms {
            sy.add_term(k, -e, &k.mul(c, &k.pow(&q2, -e)?));
        }
        let h = f.sub(k, &sy).div_one_minus(k, &q2, 2).ok_or_else(|| Error::Invalid("T0: (1 - σŷ)f is not divisible by 1 - q²X²".into()))?;
        let mut m = XLaurent::zero();
        m.add_term(k, 2, &k.mul(&q2, &self.tbar[0]));
        m.add_term(k, 1, &k.mul(&self.q, &self.tbar[1]));
        let mut out = sy.scaled(k, &self.t[0]);
        out.axpy(k, &k.int(-1), &m.mul(k, &h));
        Ok(out)
    }

    /// T₁ = t₃σ̂ + (t̄₃ + t̄₄X)(1 − σ̂)/(1 − X²).
    pub fn t1(&self, f: &XLaurent<K::Elem>) -> Result<XLaurent<K::Elem>, Error> {
        let k = self.k;
        let sg = f.sigma();
        let h = f.sub(k, &sg).div_one_minus(k, &k.one(), 2).ok_or_else(|| Error::Invalid("T1: (1 - σ)f is not divisible by 1 - X²".into()))?;
        let mut m = XLaurent::zero();
        m.add_term(k, 0, &self.tbar[2]);
        m.add_term(k, 1, &self.tbar[3]);
        let mut out = sg.scaled(k, &self.t[2]);
        out.axpy(k, &k.one(), &m.mul(k, &h));
        Ok(out)
    }

    /// T₀⁻¹ = T₀ − t̄₁.
    pub fn t0_inv(&self, f: &XLaurent<K::Elem>) -> Result<XLaurent<K::Elem>, Error> {
        let mut out = self.t0(f)?;
        out.axpy(self.k, &self.k.neg(&self.tbar[0]), f);
        Ok(out)
    }

    /// T₁⁻¹ = T₁ − t̄₃.
    pub fn t1_inv(&self, f: &XLaurent<K::Elem>) -> Result<XLaurent<K::Elem>, Error> {
        let mut out = self.t1(f)?;
        out.axpy(self.k, &self.k.neg(&self.tbar[2]), f);
        Ok(out)
    }

    /// e = (T₁ + t₃⁻¹)/(t₃ + t₃⁻¹).
    pub fn e_project(&self, f: &XLaurent<K::Elem>) -> Result<XLaurent<K::Elem>, Error> {
        let k = self.k;
        let inv = k.inv(&self.t[2])?;
        let norm = k.add(&self.t[2], &inv);
        if k.is_zero(&norm) {
            return Err(Error::Invalid("e is undefined when t3 + 1/t3 = 0".into()));
        }
        let mut out = self.t1(f)?;
        out.axpy(k, &inv, f);
        Ok(out.scaled(k, &k.inv(&norm)?))
    }

    /// Multiplication by X + X⁻¹.
    pub fn x(&self, f: &XLaurent<K::Elem>) -> XLaurent<K::Elem> {
        f.mul(self.k, &XLaurent::sym_monomial(self.k, 1))
    }

    /// T₁T₀ + T₀⁻¹T₁⁻¹.
    pub fn y(&self, f: &XLaurent<K::Elem>) -> Result<XLaurent<K::Elem>, Error> {
        let mut out = self.t1(&self.t0(f)?)?;
        out.axpy(self.k, &self.k.one(), &self.t0_inv(&self.t1_inv(f)?)?);
        Ok(out)
    }

    /// q-commutator [a, b]_q = q·ab − q⁻¹·ba applied to f.
    fn qcomm(&self, a: Generator, b: Generator, f: &XLaurent<K::Elem>) -> Result<XLaurent<K::Elem>, Error> {
        let k = self.k;
        let mut out = self.gen(a, &self.gen(b, f)?)?.scaled(k, &self.q);
        out.axpy(k, &k.neg(&k.inv(&self.q)?), &self.gen(b, &self.gen(a, f)?)?);
        Ok(out)
    }

    /// z := ([x, y]_q + (q − q⁻¹)γ)/(q² − q⁻²).
    pub fn z(&self, f: &XLaurent<K::Elem>) -> Result<XLaurent<K::Elem>, Error> {
        let k = self.k;
        let qi = k.inv(&self.q)?;
        let mut out = self.qcomm(Generator::X, Generator::Y, f)?;
        out.axpy(k, &k.mul(&k.sub(&self.q, &qi), &self.gamma), f);
        let norm = k.sub(&k.mul(&self.q, &self.q), &k.mul(&qi, &qi));
        Ok(out.scaled(k, &k.inv(&norm)?))
    }

    fn gen(&self, g: Generator, f: &XLaurent<K::Elem>) -> Result<XLaurent<K::Elem>, Error> {
        match g {
            Generator::X => Ok(self.x(f)),
            Generator::Y => self.y(f),
            Generator::Z => self.z(f),
        }
    }

    /// A spherical generator applied to a symmetric polynomial.
    pub fn apply(&self, g: Generator, f: &XLaurent<K::Elem>) -> Result<XLaurent<K::Elem>, Error> {
        if !f.is_symmetric(self.k) {
            return Err(Error::Invalid("spherical generators act on symmetric polynomials only".into()));
        }
        self.gen(g, f)
    }

    /// [a, b]_q applied to a symmetric polynomial.
    pub fn q_commutator(&self, a: Generator, b: Generator, f: &XLaurent<K::Elem>) -> Result<XLaurent<K::Elem>, Error> {
        self.qcomm(a, b, f)
    }

    /// Ω = −q·xyz + q²x² + q⁻²y² + q²z² − qαx − q⁻¹βy − qγz applied to f.
    pub fn casimir(&self, f: &XLaurent<K::Elem>) -> Result<XLaurent<K::Elem>, Error> {
        let k = self.k;
        let q = &self.q;
        let qi = k.inv(q)?;
        let q2 = k.mul(q, q);
        let qi2 = k.mul(&qi, &qi);
        let xf = self.x(f);
        let yf = self.y(f)?;
        let zf = self.z(f)?;
        let mut out = self.x(&self.y(&zf)?).scaled(k, &k.neg(q));
        out.axpy(k, &q2, &self.x(&xf));
        out.axpy(k, &qi2, &self.y(&yf)?);
        out.axpy(k, &q2, &self.z(&zf)?);
        out.axpy(k, &k.neg(&k.mul(q, &self.alpha)), &xf);
        out.axpy(k, &k.neg(&k.mul(&qi, &self.beta)), &yf);
        out.axpy(k, &k.neg(&k.mul(q, &self.gamma)), &zf);
        Ok(out)
    }

    /// t̄₁² + t̄₂² + q̄t̄₃² + t̄₄² − t̄₁t̄₂q̄t̄₃t̄₄ + (q + q⁻¹)².
    pub fn casimir_value(&self) -> Result<K::Elem, Error> {
        let k = self.k;
        let [b1, b2, _, b4] = &self.tbar;
        let sq = |a: &K::Elem| k.mul(a, a);
        let mut v = k.add(&k.add(&sq(b1), &sq(b2)), &k.add(&sq(&self.qt3bar), &sq(b4)));
        v = k.sub(&v, &k.mul(&k.mul(b1, b2), &k.mul(&self.qt3bar, b4)));
        Ok(k.add(&v, &sq(&k.add(&self.q, &k.inv(&self.q)?))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Exact;

    fn rep(p: &DahaParams) -> DahaRep<'static, Exact> {
        DahaRep::new(&Exact, p, Constants::Working).unwrap()
    }

    #[test]
    fn t0_fixes_constants_up_to_t1() {
        let p = DahaParams::eq_params(1, 2);
        let r = rep(&p);
        let one = XLaurent::constant(&Exact, Exact.one());
        assert!(r.t0(&one).unwrap().differences(&Exact, &one.scaled(&Exact, &r.t[0])).is_empty());
    }

    #[test]
    fn e_projects_onto_symmetric_polynomials() {
        let p = DahaParams::eq_params(2, 1);
        let r = rep(&p);
        for n in -4..=4 {
            let f = XLaurent::monomial(&Exact, n, Exact.one());
            let ef = r.e_project(&f).unwrap();
            assert!(ef.is_symmetric(&Exact), "{n}");
            assert!(r.e_project(&ef).unwrap().differences(&Exact, &ef).is_empty());
        }
        let one = XLaurent::constant(&Exact, Exact.one());
        assert!(r.e_project(&one).unwrap().differences(&Exact, &one).is_empty());
    }

    #[test]
    fn asymmetric_input_is_rejected() {
        let p = DahaParams::sigma11(0);
        let r = rep(&p);
        assert!(r.apply(Generator::Y, &XLaurent::monomial(&Exact, 1, Exact.one())).is_err());
        assert!(DahaParams::new(RatFunc::zero(), p.t.clone()).is_err());
    }
}
