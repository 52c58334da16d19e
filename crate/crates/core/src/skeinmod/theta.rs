//! Loop actions on the theta basis n(i,j,k).

use crate::exactalg::{Exact, QProduct, RatFunc, Scalars};

use super::{a_eigenvalue, push_qterm, Basis, Loop, LoopAction, SkeinError, Triple};

/// D_{a,b}(i,j,k) as a quantum-integer product. The caller applies the zero-denominator
/// convention.
pub fn d_qprod(a: i64, b: i64, i: i64, j: i64, k: i64) -> QProduct {
    match (a, b) {
        (1, 1) => QProduct::unit(),
        (1, -1) => QProduct::scalar(-1).times_sq((j + k - i) / 2).over(j).over(j + 1),
        (-1, 1) => QProduct::scalar(-1).times_sq((i + k - j) / 2).over(i).over(i + 1),
        (-1, -1) => QProduct::unit()
            .times_sq((i + j + k + 2) / 2)
            .times_sq((i + j - k) / 2)
            .over(i)
            .over(i + 1)
            .over(j)
            .over(j + 1),
        _ => panic!("D coefficient signs must be ±1"),
    }
}

/// D_{a,b}(i,j,k), which is 0 when its denominator vanishes identically.
pub fn d_coeff(a: i64, b: i64, i: i64, j: i64, k: i64) -> RatFunc {
    Exact.qprod_or_zero(&d_qprod(a, b, i, j, k))
}

const SIGNS: [(i64, i64); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

#[derive(Clone, Copy, Debug, Default)]
pub struct ThetaAction;

impl LoopAction for ThetaAction {
    fn basis(&self) -> Basis {
        Basis::Theta
    }

    fn weight(&self, lp: Loop) -> Option<u32> {
        match lp {
            Loop::A1 | Loop::A2 | Loop::A3 => Some(0),
            Loop::B12 | Loop::B13 | Loop::B23 => Some(2),
            Loop::X => None,
        }
    }

    fn image<K: Scalars>(&self, k: &K, lp: Loop, t: Triple) -> Result<Vec<(Triple, K::Elem)>, SkeinError> {
        let [i, j, l] = t;
        if !Basis::Theta.admits(t) {
            return Err(SkeinError::Inadmissible { key: t, basis: Basis::Theta });
        }
        let mut out = Vec::with_capacity(4);
        match lp {
            Loop::A1 => out.push((t, a_eigenvalue(k, i))),
            Loop::A2 => out.push((t, a_eigenvalue(k, j))),
            Loop::A3 => out.push((t, a_eigenvalue(k, l))),
            Loop::B12 | Loop::B13 | Loop::B23 => {
                for (a, b) in SIGNS {
                    let (q, target) = match lp {
                        Loop::B12 => (d_qprod(a, b, i, j, l), [i + a, j + b, l]),
                        Loop::B13 => (d_qprod(a, b, i, l, j), [i + a, j, l + b]),
                        _ => (d_qprod(a, b, j, l, i), [i, j + a, l + b]),
                    };
                    push_qterm(k, &mut out, Basis::Theta, target, &q, "theta B-loop")?;
                }
            }
            Loop::X => return Err(SkeinError::Unsupported { lp, basis: Basis::Theta }),
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::qint;
    use crate::skeinmod::{SkeinVector, Truncation};

    fn apply(lp: Loop, t: Triple) -> SkeinVector<RatFunc> {
        let v = SkeinVector::basis_element(&Exact, Basis::Theta, t).unwrap();
        ThetaAction.apply(&Exact, lp, &v, Truncation::new(20)).unwrap()
    }

    #[test]
    fn d_examples() {
        assert!(d_coeff(1, 1, 3, 1, 2).is_one());
        assert!(d_coeff(1, -1, 0, 0, 0).is_zero());
        let expect = RatFunc::from_poly(qint(2)).mul(&RatFunc::from_poly(qint(3))).inv().unwrap().neg();
        assert_eq!(d_coeff(-1, 1, 2, 1, 1), expect);
    }

    #[test]
    fn act_examples() {
        let a = apply(Loop::A1, [0, 0, 0]);
        let eig = RatFunc::s_pow(2).add(&RatFunc::s_pow(-2)).neg();
        assert_eq!(a.get(&[0, 0, 0]).unwrap(), &eig);
        let b = apply(Loop::B12, [0, 0, 0]);
        assert_eq!(b.entries.len(), 1);
        assert!(b.get(&[1, 1, 0]).unwrap().is_one());
        let c = apply(Loop::B13, [0, 0, 0]);
        assert_eq!(c.entries.len(), 1);
        assert!(c.get(&[1, 0, 1]).unwrap().is_one());
    }

    #[test]
    fn truncation_enforced() {
        let v = SkeinVector::basis_element(&Exact, Basis::Theta, [2, 2, 2]).unwrap();
        assert!(ThetaAction.apply(&Exact, Loop::B12, &v, Truncation::new(7)).is_err());
        assert!(ThetaAction.apply(&Exact, Loop::A1, &v, Truncation::new(6)).is_ok());
        assert!(ThetaAction.apply(&Exact, Loop::X, &v, Truncation::new(60)).is_err());
    }
}
