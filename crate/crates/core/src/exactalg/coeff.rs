//! Gaussian rationals `re + im·ι` with `ι² = −1`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Coefficient {
    pub re: BigRational,
    pub im: BigRational,
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Coefficient { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Coefficient { re: BigRational::new(num.into(), den.into()), im: BigRational::zero() }
    }

    pub fn from_parts(re: BigRational, im: BigRational) -> Self {
        Coefficient { re, im }
    }

    pub fn iota() -> Self {
        Coefficient { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Coefficient { re: self.re.clone(), im: -&self.im }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.im.is_zero() {
            return Some(Coefficient { re: self.re.recip(), im: BigRational::zero() });
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Coefficient { re: &self.re / &norm, im: -(&self.im / &norm) })
    }

    pub fn scale_int(&self, n: i64) -> Self {
        let n = BigRational::from_integer(BigInt::from(n));
        Coefficient { re: &self.re * &n, im: &self.im * &n }
    }

    /// Lossy conversion used only by numeric prefilters and the floating-point Leonard check.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        (ratio_to_f64(&self.re), ratio_to_f64(&self.im))
    }
}

fn ratio_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = r.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

impl<'a> Add<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn add(self, o: &Coefficient) -> Coefficient {
        let im = if self.im.is_zero() && o.im.is_zero() { BigRational::zero() } else { &self.im + &o.im };
        Coefficient { re: &self.re + &o.re, im }
    }
}

impl<'a> Sub<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn sub(self, o: &Coefficient) -> Coefficient {
        let im = if self.im.is_zero() && o.im.is_zero() { BigRational::zero() } else { &self.im - &o.im };
        Coefficient { re: &self.re - &o.re, im }
    }
}

impl<'a> Mul<&'a Coefficient> for &'a Coefficient {
    type Output = Coefficient;
    fn mul(self, o: &Coefficient) -> Coefficient {
        match (self.im.is_zero(), o.im.is_zero()) {
            (true, true) => Coefficient { re: &self.re * &o.re, im: BigRational::zero() },
            (true, false) => Coefficient { re: &self.re * &o.re, im: &self.re * &o.im },
            (false, true) => Coefficient { re: &self.re * &o.re, im: &self.im * &o.re },
            (false, false) => Coefficient {
                re: &self.re * &o.re - &self.im * &o.im,
                im: &self.re * &o.im + &self.im * &o.re,
            },
        }
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, o: &Coefficient) {
        self.re += &o.re;
        if !o.im.is_zero() {
            self.im += &o.im;
        }
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient { re: -&self.re, im: -&self.im }
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient { re: -self.re, im: -self.im }
    }
}

fn fmt_ratio(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Coefficient {
    /// `a/b` for real values, `(a/b)+(c/d)i` otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", fmt_ratio(&self.re))
        } else {
            let sign = if self.im.is_negative() { "-" } else { "+" };
            write!(f, "({}){}({})i", fmt_ratio(&self.re), sign, fmt_ratio(&self.im.abs()))
        }
    }
}

/// Parses a rational written as `a` or `a/b`.
pub fn parse_ratio(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(BigRational::new(n, d))
            }
        }
        None => Some(BigRational::from_integer(text.parse().ok()?)),
    }
}

pub fn ratio_string(r: &BigRational) -> String {
    fmt_ratio(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iota_squares_to_minus_one() {
        let i = Coefficient::iota();
        assert_eq!(&i * &i, Coefficient::from_int(-1));
    }

    #[test]
    fn inverse_of_gaussian() {
        let z = Coefficient::from_parts(BigRational::from_integer(3.into()), BigRational::from_integer(4.into()));
        assert!((&z * &z.inv().unwrap()).is_one());
        assert!(Coefficient::zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Coefficient::from_ratio(-3, 6).to_string(), "-1/2");
        let z = Coefficient::from_parts(BigRational::new(1.into(), 2.into()), BigRational::from_integer((-3).into()));
        assert_eq!(z.to_string(), "(1/2)-(3)i");
    }
}
