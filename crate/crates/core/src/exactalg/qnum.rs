//! Quantum integers, factorials and symbolic products of quantum integers.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::coeff::Coefficient;
use super::laurent::LaurentPoly;
use super::ExactError;

fn s(k: i32) -> LaurentPoly {
    LaurentPoly::monomial("s", k, Coefficient::one())
}

/// ⟨n⟩ = (s^{2n} − s^{−2n})/(s² − s^{−2}), computed by exact division.
pub fn qint(n: i64) -> LaurentPoly {
    static CACHE: OnceLock<Mutex<HashMap<i64, LaurentPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let num = s(2 * n as i32).sub(&s(-2 * n as i32));
    let den = s(2).sub(&s(-2));
    let p = num.div_exact(&den).expect("quantum integer division is exact");
    cache.lock().unwrap().insert(n, p.clone());
    p
}

/// ⟨n⟩! = ∏_{k=1}^{n} ⟨k⟩, with ⟨0⟩! = 1.
pub fn qfact(n: i64) -> Result<LaurentPoly, ExactError> {
    if n < 0 {
        return Err(ExactError::NegativeFactorial(n));
    }
    Ok((1..=n).fold(LaurentPoly::one(), |acc, k| acc.mul(&qint(k))))
}

/// `coeff · s^shift · ∏⟨num⟩ / ∏⟨den⟩`, kept symbolic so that the zero-denominator
/// convention can be decided on indices and so that inversion is free.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QProduct {
    pub coeff: i64,
    pub shift: i32,
    pub num: Vec<i64>,
    pub den: Vec<i64>,
}

impl QProduct {
    pub fn unit() -> Self {
        QProduct { coeff: 1, ..Default::default() }
    }

    pub fn scalar(c: i64) -> Self {
        QProduct { coeff: c, ..Default::default() }
    }

    pub fn times(mut self, n: i64) -> Self {
        self.num.push(n);
        self
    }

    pub fn times_sq(self, n: i64) -> Self {
        self.times(n).times(n)
    }

    pub fn over(mut self, n: i64) -> Self {
        self.den.push(n);
        self
    }

    pub fn s_shift(mut self, k: i32) -> Self {
        self.shift += k;
        self
    }

    pub fn neg(mut self) -> Self {
        self.coeff = -self.coeff;
        self
    }

    pub fn mul(mut self, o: &QProduct) -> Self {
        self.coeff *= o.coeff;
        self.shift += o.shift;
        self.num.extend_from_slice(&o.num);
        self.den.extend_from_slice(&o.den);
        self
    }

    /// Is the denominator identically zero (some ⟨0⟩ factor)?
    pub fn den_vanishes(&self) -> bool {
        self.den.contains(&0)
    }

    /// Is the value identically zero (and the denominator not)?
    pub fn is_zero(&self) -> bool {
        !self.den_vanishes() && (self.coeff == 0 || self.num.contains(&0))
    }

    /// Normalizes negative indices (⟨−n⟩ = −⟨n⟩) and cancels factors common to the
    /// numerator and denominator.
    pub fn cancel(mut self) -> Self {
        for list in [&mut self.num, &mut self.den] {
            for n in list.iter_mut() {
                if *n < 0 {
                    *n = -*n;
                    self.coeff = -self.coeff;
                }
            }
            list.sort_unstable();
        }
        let (mut num, mut den) = (Vec::new(), Vec::new());
        let (mut a, mut b) = (self.num.iter().peekable(), self.den.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) if x == y && x != 0 => {
                    a.next();
                    b.next();
                }
                (Some(&&x), Some(&&y)) => {
                    if x < y {
                        num.push(x);
                        a.next();
                    } else {
                        den.push(y);
                        b.next();
                    }
                }
                (Some(_), None) => num.push(*a.next().unwrap()),
                (None, Some(_)) => den.push(*b.next().unwrap()),
                (None, None) => break,
            }
        }
        self.num = num;
        self.den = den;
        self
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() || self.den_vanishes() || self.coeff.abs() != 1 {
            return None;
        }
        Some(QProduct { coeff: self.coeff, shift: -self.shift, num: self.den.clone(), den: self.num.clone() })
    }
}
