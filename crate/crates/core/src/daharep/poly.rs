//! Sparse Laurent polynomials in X.

use std::collections::BTreeMap;

use crate::exactalg::Scalars;
use crate::Error;

/// Exponent ↦ nonzero coefficient.
#[derive(Clone, Debug, Default)]
pub struct XLaurent<E> {
    pub terms: BTreeMap<i64, E>,
}

impl<E: Clone> XLaurent<E> {
    pub fn zero() -> Self {
        XLaurent { terms: BTreeMap::new() }
    }

    pub fn monomial<K: Scalars<Elem = E>>(k: &K, n: i64, c: E) -> Self {
        let mut f = Self::zero();
        f.add_term(k, n, &c);
        f
    }

    pub fn constant<K: Scalars<Elem = E>>(k: &K, c: E) -> Self {
        Self::monomial(k, 0, c)
    }

    /// Xⁿ + X⁻ⁿ, or 1 for n = 0.
    pub fn sym_monomial<K: Scalars<Elem = E>>(k: &K, n: i64) -> Self {
        let mut f = Self::monomial(k, n, k.one());
        if n != 0 {
            f.add_term(k, -n, &k.one());
        }
        f
    }

    /// (X + X⁻¹)ⁿ.
    pub fn x_power<K: Scalars<Elem = E>>(k: &K, n: u32) -> Self {
        let x = Self::sym_monomial(k, 1);
        (0..n).fold(Self::constant(k, k.one()), |acc, _| acc.mul(k, &x))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// max |exponent|, 0 for the zero polynomial.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|e| e.abs()).max().unwrap_or(0)
    }

    pub fn get(&self, e: i64) -> Option<&E> {
        self.terms.get(&e)
    }

    pub fn add_term<K: Scalars<Elem = E>>(&mut self, k: &K, e: i64, c: &E) {
        if k.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = k.add(x, c);
                if k.is_zero(x) {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    /// self += c·other.
    pub fn axpy<K: Scalars<Elem = E>>(&mut self, k: &K, c: &E, other: &Self) {
        for (&e, x) in &other.terms {
            self.add_term(k, e, &k.mul(c, x));
        }
    }

    pub fn scaled<K: Scalars<Elem = E>>(&self, k: &K, c: &E) -> Self {
        let mut out = Self::zero();
        out.axpy(k, c, self);
        out
    }

    pub fn sub<K: Scalars<Elem = E>>(&self, k: &K, other: &Self) -> Self {
        let mut out = self.clone();
        out.axpy(k, &k.int(-1), other);
        out
    }

    pub fn mul<K: Scalars<Elem = E>>(&self, k: &K, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &other.terms {
                out.add_term(k, a + b, &k.mul(x, y));
            }
        }
        out
    }

    /// f(X⁻¹).
    pub fn sigma(&self) -> Self {
        XLaurent { terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_symmetric<K: Scalars<Elem = E>>(&self, k: &K) -> bool {
        self.differences(k, &self.sigma()).is_empty()
    }

    /// Exponents where the two polynomials differ, with both coefficients.
    pub fn differences<K: Scalars<Elem = E>>(&self, k: &K, other: &Self) -> Vec<(i64, E, E)> {
        let mut keys: Vec<i64> = self.terms.keys().chain(other.terms.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        keys.into_iter()
            .filter_map(|e| {
                let a = self.terms.get(&e).cloned().unwrap_or_else(|| k.zero());
                let b = other.terms.get(&e).cloned().unwrap_or_else(|| k.zero());
                (!k.eq(&a, &b)).then_some((e, a, b))
            })
            .collect()
    }

    /// Exact quotient by 1 − cXᵈ (d > 0), or None if the division leaves a remainder.
    pub fn div_one_minus<K: Scalars<Elem = E>>(&self, k: &K, c: &E, d: i64) -> Option<Self> {
        let Some(&top) = self.terms.keys().next_back() else {
            return Some(Self::zero());
        };
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&e, x)) = rem.terms.iter().next() {
            if e + d > top {
                return None;
            }
            let x = x.clone();
            rem.terms.remove(&e);
            rem.add_term(k, e + d, &k.mul(c, &x));
            quot.terms.insert(e, x);
        }
        Some(quot)
    }

    /// Coefficients cₙ with f = Σ cₙ(X + X⁻¹)ⁿ, for symmetric f.
    pub fn to_x_basis<K: Scalars<Elem = E>>(&self, k: &K) -> Result<Vec<E>, Error> {
        if !self.is_symmetric(k) {
            return Err(Error::Invalid("only symmetric polynomials lie in R[x]".into()));
        }
        let n = self.degree() as usize;
        let mut coeffs = vec![k.zero(); n + 1];
        let mut rem = self.clone();
        while let Some((&e, c)) = rem.terms.iter().next_back() {
            let c = c.clone();
            // the leading coefficient of (X + X⁻¹)ᵉ is 1
            coeffs[e as usize] = c.clone();
            rem.axpy(k, &k.neg(&c), &Self::x_power(k, e as u32));
        }
        Ok(coeffs)
    }

    pub fn render<K: Scalars<Elem = E>>(&self, k: &K) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms.iter().map(|(e, c)| format!("({})X^{e}", k.render(c))).collect::<Vec<_>>().join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Exact, RatFunc};

    #[test]
    fn exact_division() {
        let k = Exact;
        let c = RatFunc::s_pow(2);
        let f = XLaurent::monomial(&k, -1, k.one());
        let mut g = f.clone();
        g.add_term(&k, 1, &c.neg());
        assert!(g.div_one_minus(&k, &c, 2).unwrap().differences(&k, &f).is_empty());
        assert!(f.div_one_minus(&k, &c, 2).is_none());
    }

    #[test]
    fn x_basis_roundtrip() {
        let k = Exact;
        let mut f = XLaurent::x_power(&k, 3);
        f.axpy(&k, &RatFunc::from_int(5), &XLaurent::x_power(&k, 1));
        let c = f.to_x_basis(&k).unwrap();
        assert!(c[3].is_one() && c[2].is_zero() && c[1].equals(&RatFunc::from_int(5)) && c[0].is_zero());
        assert!(XLaurent::monomial(&k, 1, k.one()).to_x_basis(&k).is_err());
    }
}
