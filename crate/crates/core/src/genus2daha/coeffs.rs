//! Two-parameter brackets and the C coefficients.

use crate::exactalg::{QProduct, RatFunc, Scalars};
use crate::opexpr::{label, run_check, Check, CheckOutcome, Failure, Mode, VerificationReport};
use crate::skeinmod::Basis;
use crate::Error;

/// u = q^{1/2}, v = t^{1/2}.
#[derive(Clone, Debug)]
pub struct QTParams {
    pub u: RatFunc,
    pub v: RatFunc,
}

impl QTParams {
    pub fn new(u: RatFunc, v: RatFunc) -> Result<Self, Error> {
        if u.is_zero() || v.is_zero() {
            return Err(Error::Invalid("u and v must be invertible".into()));
        }
        Ok(QTParams { u, v })
    }

    /// q = t = s⁴.
    pub fn t_equals_q() -> Self {
        QTParams { u: RatFunc::s_pow(2), v: RatFunc::s_pow(2) }
    }

    /// Independent indeterminates u and v.
    pub fn symbolic() -> Self {
        QTParams { u: RatFunc::var("u"), v: RatFunc::var("v") }
    }

    fn mono(&self, n: i64, m: i64) -> RatFunc {
        let p = |x: &RatFunc, e: i64| x.pow(e as i32).expect("invertible parameter");
        p(&self.u, n).mul(&p(&self.v, m))
    }

    /// Eigenvalue u^n v + u^{−n} v^{−1} of Ô_A on a label of color n.
    pub fn a_eigenvalue(&self, n: i64) -> RatFunc {
        self.mono(n, 1).add(&self.mono(-n, -1))
    }
}

/// (uⁿvᵐ − u⁻ⁿv⁻ᵐ)/(u − u⁻¹).
pub fn qt_bracket(n: i64, m: i64, p: &QTParams) -> RatFunc {
    let num = p.mono(n, m).sub(&p.mono(-n, -m));
    let den = p.mono(1, 0).sub(&p.mono(-1, 0));
    num.div(&den).expect("u − u⁻¹ ≠ 0")
}

fn sign(a: i64, b: i64) {
    assert!(a.abs() == 1 && b.abs() == 1, "C coefficient signs must be ±1");
}

/// C_{a,b}(i,j,k) from the bracket definition; 0 when a denominator bracket vanishes
/// identically.
pub fn c_coeff(a: i64, b: i64, i: i64, j: i64, k: i64, p: &QTParams) -> RatFunc {
    sign(a, b);
    let num = [
        qt_bracket((a * i + b * j + k) / 2, (a + b + 2) / 2, p),
        qt_bracket((a * i + b * j - k) / 2, (a + b) / 2, p),
        qt_bracket(i - 1, 2, p),
        qt_bracket(j - 1, 2, p),
    ];
    let den = [
        qt_bracket(i, (a + 3) / 2, p),
        qt_bracket(i - 1, (a + 3) / 2, p),
        qt_bracket(j, (b + 3) / 2, p),
        qt_bracket(j - 1, (b + 3) / 2, p),
    ];
    if den.iter().any(|d| d.is_zero()) {
        return RatFunc::zero();
    }
    let top = num.iter().fold(RatFunc::from_int(a * b), |acc, x| acc.mul(x));
    let bottom = den.iter().fold(RatFunc::one(), |acc, x| acc.mul(x));
    top.div(&bottom).expect("nonzero denominator")
}

/// C_{a,b}(i,j,k) at u = v = s², where [n,m] = ⟨n+m⟩.
pub fn c_qprod(a: i64, b: i64, i: i64, j: i64, k: i64) -> QProduct {
    sign(a, b);
    QProduct::scalar(a * b)
        .times((a * i + b * j + k + a + b + 2) / 2)
        .times((a * i + b * j - k + a + b) / 2)
        .times(i + 1)
        .times(j + 1)
        .over(i + (a + 3) / 2)
        .over(i - 1 + (a + 3) / 2)
        .over(j + (b + 3) / 2)
        .over(j - 1 + (b + 3) / 2)
}

/// ⟨(i+j+k+4)/2⟩⟨(i+j−k+2)/2⟩/(⟨i+2⟩⟨j+2⟩).
pub fn c11_closed(i: i64, j: i64, k: i64) -> QProduct {
    QProduct::unit().times((i + j + k + 4) / 2).times((i + j - k + 2) / 2).over(i + 2).over(j + 2)
}

struct CRelations {
    bound: i64,
}

impl Check for CRelations {
    fn run<K: Scalars>(&self, k: &K) -> Result<CheckOutcome, Error> {
        let p = QTParams::t_equals_q();
        let mut out = CheckOutcome::default();
        let c11 = |i, j, l| k.qprod(&c11_closed(i, j, l));
        for t in Basis::Theta.elements(self.bound) {
            let [i, j, l] = t;
            let raw = k.embed(&c_coeff(1, 1, i, j, l, &p))?;
            let closed = c11(i, j, l)?;
            let swapped = c11(j, i, l)?;
            let path_l = k.mul(&c11(l, j + 1, i + 1)?, &closed);
            let path_r = k.mul(&c11(i, j + 1, l + 1)?, &c11(l, j, i)?);
            for (what, x, y) in [("closed form", &raw, &closed), ("ij-symmetry", &closed, &swapped), ("path relation", &path_l, &path_r)] {
                out.checked += 1;
                if !k.eq(x, y) {
                    out.failures.push(Failure::new(format!("{what} at {}", label(Basis::Theta, t)), k.render(x), k.render(y)));
                }
            }
        }
        Ok(out)
    }
}

pub fn verify_c_relations(bound: u32, mode: &Mode) -> VerificationReport {
    run_check("c-relations", mode, &["s"], &CRelations { bound: bound as i64 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{qint, Exact};
    use std::collections::BTreeMap;

    fn q(n: i64) -> RatFunc {
        RatFunc::from_poly(qint(n))
    }

    #[test]
    fn bracket_examples() {
        let p = QTParams::t_equals_q();
        assert!(qt_bracket(1, 0, &p).is_one());
        assert!(qt_bracket(0, 0, &p).is_zero());
        for n in -4..=4 {
            for m in -3..=3 {
                assert_eq!(qt_bracket(n, m, &p), q(n + m));
            }
        }
        let g = QTParams::symbolic();
        assert!(qt_bracket(1, 0, &g).is_one());
        assert!(!qt_bracket(1, -1, &g).is_zero());
    }

    #[test]
    fn c11_examples() {
        let p = QTParams::t_equals_q();
        assert_eq!(c_coeff(1, 1, 0, 0, 0, &p), q(2).inv().unwrap());
        for t in Basis::Theta.elements(8) {
            let [i, j, k] = t;
            for (a, b) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let fast = Exact.qprod_or_zero(&c_qprod(a, b, i, j, k));
                assert_eq!(c_coeff(a, b, i, j, k, &p), fast, "{a} {b} {t:?}");
            }
        }
    }

    #[test]
    fn symbolic_specializes() {
        let g = c_coeff(1, -1, 3, 2, 1, &QTParams::symbolic());
        let subs: BTreeMap<String, RatFunc> = [("u".to_string(), RatFunc::s_pow(2)), ("v".to_string(), RatFunc::s_pow(2))].into();
        assert_eq!(g.substitute(&subs).unwrap(), c_coeff(1, -1, 3, 2, 1, &QTParams::t_equals_q()));
    }

    #[test]
    fn relations_small() {
        let r = verify_c_relations(8, &Mode::Exact);
        assert!(r.passed(), "{:?}", r.failures);
    }
}
