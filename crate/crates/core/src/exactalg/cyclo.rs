//! Cyclotomic polynomials and the factorizations of quantum integers.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use super::laurent::LaurentPoly;

fn table() -> &'static Mutex<HashMap<u32, Vec<i64>>> {
    static T: OnceLock<Mutex<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    T.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Dense integer coefficients of Φ_d, lowest degree first.
pub fn cyclotomic_coeffs(d: u32) -> Vec<i64> {
    assert!(d >= 1);
    if let Some(c) = table().lock().unwrap().get(&d) {
        return c.clone();
    }
    // Φ_d = (x^d - 1) / ∏_{e | d, e < d} Φ_e
    let mut num = vec![0i64; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in 1..d {
        if d.is_multiple_of(e) {
            num = dense_div(&num, &cyclotomic_coeffs(e));
        }
    }
    table().lock().unwrap().insert(d, num.clone());
    num
}

fn dense_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = num.len() - 1 - dn;
    let mut q = vec![0i64; qn + 1];
    for k in (0..=qn).rev() {
        let c = rem[k + dn] / den[dn];
        q[k] = c;
        for (i, &dc) in den.iter().enumerate() {
            rem[k + i] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    q
}

pub fn cyclotomic(var: &str, d: u32) -> LaurentPoly {
    let c = cyclotomic_coeffs(d);
    let pairs: Vec<(i32, i64)> = c.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i as i32, x)).collect();
    LaurentPoly::univariate(var, &pairs)
}

/// Euler's totient.
pub fn totient(mut n: u32) -> u32 {
    let mut r = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            r -= r / p;
        }
        p += 1;
    }
    if n > 1 {
        r -= r / n;
    }
    r
}

/// ⟨n⟩ = sign(n) · s^{2-2|n|} · ∏ Φ_d(s) over d | 4|n| with d ∉ {1,2,4}. Returns the
/// list of d and the sign/monomial prefactor; `None` for n = 0.
pub fn qint_factors(n: i64) -> Option<(i64, i32, Vec<u32>)> {
    if n == 0 {
        return None;
    }
    let m = n.unsigned_abs() as u32;
    let ds = (1..=4 * m).filter(|d| (4 * m).is_multiple_of(*d) && ![1, 2, 4].contains(d)).collect();
    Some((n.signum(), 2 - 2 * m as i32, ds))
}

/// Floating prefilter: can Φ_d divide the univariate polynomial `p`? A `false` is
/// conclusive only up to rounding, so callers always confirm with exact division.
pub fn may_vanish_at_root(p: &LaurentPoly, d: u32) -> bool {
    let theta = 2.0 * std::f64::consts::PI / d as f64;
    let (mut re, mut im, mut scale) = (0.0f64, 0.0f64, 0.0f64);
    for (e, c) in p.terms() {
        let (cr, ci) = c.to_f64_pair();
        if !cr.is_finite() || !ci.is_finite() {
            return true;
        }
        let ang = theta * e[0] as f64;
        let (sn, cs) = ang.sin_cos();
        re += cr * cs - ci * sn;
        im += cr * sn + ci * cs;
        scale += cr.abs() + ci.abs();
    }
    (re * re + im * im).sqrt() <= 1e-7 * scale.max(1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Coefficient;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_coeffs(1), vec![-1, 1]);
        assert_eq!(cyclotomic_coeffs(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_coeffs(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_coeffs(105).len() as u32 - 1, totient(105));
    }

    #[test]
    fn qint_factorization_expands() {
        for n in [1i64, 2, 3, 6, -5] {
            let (sign, shift, ds) = qint_factors(n).unwrap();
            let mut p = LaurentPoly::monomial("s", shift, Coefficient::from_int(sign));
            for d in ds {
                p = p.mul(&cyclotomic("s", d));
            }
            assert_eq!(p, crate::exactalg::qint(n));
        }
    }
}
