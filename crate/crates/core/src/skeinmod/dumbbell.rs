//! Loop actions on the dumbbell basis m(i,j,k).

use crate::exactalg::{QProduct, Scalars};

use super::{a_eigenvalue, push_qterm, Basis, Loop, LoopAction, SkeinError, Triple};

/// Which transcription of the dumbbell formulas to use. Only `Standard` is correct; the
/// others exist so that negative controls can show the relation checks catch them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DumbbellVariant {
    #[default]
    Standard,
    /// Lower B12/B23 coefficient with ⟨2i+j+1⟩ in place of ⟨i+j/2+1⟩.
    PrintedLower,
    /// A2 diagonal without the K constant.
    DropK,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct DumbbellAction {
    pub variant: DumbbellVariant,
}

impl DumbbellAction {
    pub fn new(variant: DumbbellVariant) -> Self {
        DumbbellAction { variant }
    }

    /// Coefficient of m(i−1, j, k) in B12·m(i, j, k) (and of the k-shift for B23).
    fn lower(&self, i: i64, h: i64) -> QProduct {
        let first = match self.variant {
            DumbbellVariant::PrintedLower => 2 * i + 2 * h + 1,
            _ => i + h + 1,
        };
        QProduct::unit().times(first).times(i - h).over(i).over(i + 1)
    }

    /// The K constant in the A2 diagonal coefficient, without the δ² prefactor.
    fn k_const<K: Scalars>(&self, k: &K, i: i64, h: i64, l: i64) -> K::Elem {
        let j = 2 * h;
        let first = QProduct::unit().times_sq(h + 1).times(i - h).times(l - h).over(j + 1).over(j + 2);
        let second = QProduct::unit().times_sq(h).times(i + h + 1).times(l + h + 1).over(j).over(j + 1);
        k.add(&k.qprod_or_zero(&first), &k.qprod_or_zero(&second))
    }
}

fn delta_sq<K: Scalars>(k: &K) -> K::Elem {
    let d = k.sub(&k.s_pow(2), &k.s_pow(-2));
    k.mul(&d, &d)
}

impl LoopAction for DumbbellAction {
    fn basis(&self) -> Basis {
        Basis::Dumbbell
    }

    fn weight(&self, lp: Loop) -> Option<u32> {
        match lp {
            Loop::A1 | Loop::A3 | Loop::X => Some(0),
            Loop::A2 | Loop::B12 | Loop::B23 => Some(2),
            Loop::B13 => None,
        }
    }

    fn image<K: Scalars>(&self, k: &K, lp: Loop, t: Triple) -> Result<Vec<(Triple, K::Elem)>, SkeinError> {
        let [i, j, l] = t;
        if !Basis::Dumbbell.admits(t) {
            return Err(SkeinError::Inadmissible { key: t, basis: Basis::Dumbbell });
        }
        let h = j / 2;
        let mut out = Vec::with_capacity(3);
        match lp {
            Loop::A1 => out.push((t, a_eigenvalue(k, i))),
            Loop::A3 => out.push((t, a_eigenvalue(k, l))),
            Loop::X => out.push((t, a_eigenvalue(k, j))),
            Loop::B12 => {
                out.push(([i + 1, j, l], k.one()));
                push_qterm(k, &mut out, Basis::Dumbbell, [i - 1, j, l], &self.lower(i, h), "dumbbell B12")?;
            }
            Loop::B23 => {
                out.push(([i, j, l + 1], k.one()));
                push_qterm(k, &mut out, Basis::Dumbbell, [i, j, l - 1], &self.lower(l, h), "dumbbell B23")?;
            }
            Loop::A2 => {
                let d2 = delta_sq(k);
                let mut shifted = Vec::with_capacity(2);
                let down = QProduct::scalar(-1)
                    .times(h)
                    .times(h)
                    .times_sq(h)
                    .times(i + h + 1)
                    .times(l + h + 1)
                    .over(j - 1)
                    .over(j)
                    .over(j)
                    .over(j + 1);
                push_qterm(k, &mut shifted, Basis::Dumbbell, [i, j - 2, l], &down, "dumbbell A2 down")?;
                let up = QProduct::scalar(-1).times(i - h).times(l - h);
                push_qterm(k, &mut shifted, Basis::Dumbbell, [i, j + 2, l], &up, "dumbbell A2 up")?;
                for (target, c) in shifted {
                    out.push((target, k.mul(&d2, &c)));
                }
                let mut diag = k.neg(&k.add(&k.s_pow(-2 * (i + l + 1)), &k.s_pow(2 * (i + l + 1))));
                if self.variant != DumbbellVariant::DropK {
                    diag = k.add(&diag, &k.mul(&d2, &self.k_const(k, i, h, l)));
                }
                out.push((t, diag));
            }
            Loop::B13 => return Err(SkeinError::Unsupported { lp, basis: Basis::Dumbbell }),
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{delta, qint, Exact, RatFunc};
    use crate::skeinmod::{SkeinVector, Truncation};

    fn apply(lp: Loop, t: Triple) -> SkeinVector<RatFunc> {
        let v = SkeinVector::basis_element(&Exact, Basis::Dumbbell, t).unwrap();
        DumbbellAction::default().apply(&Exact, lp, &v, Truncation::new(30)).unwrap()
    }

    fn q(n: i64) -> RatFunc {
        RatFunc::from_poly(qint(n))
    }

    #[test]
    fn x_eigenvalue() {
        let v = apply(Loop::X, [3, 4, 2]);
        let e = RatFunc::s_pow(10).add(&RatFunc::s_pow(-10)).neg();
        assert_eq!(v.get(&[3, 4, 2]).unwrap(), &e);
    }

    #[test]
    fn b12_at_boundary() {
        let v = apply(Loop::B12, [2, 4, 3]);
        assert_eq!(v.entries.len(), 1);
        assert!(v.get(&[3, 4, 3]).unwrap().is_one());
    }

    #[test]
    fn a2_at_j_zero() {
        for (i, l) in [(0, 0), (1, 2), (3, 1)] {
            let v = apply(Loop::A2, [i, 0, l]);
            let d2 = delta().mul(&delta());
            let up = d2.mul(&q(i)).mul(&q(l)).neg();
            let diag = RatFunc::s_pow(-2 * (i + l + 1) as i32)
                .add(&RatFunc::s_pow(2 * (i + l + 1) as i32))
                .neg()
                .add(&d2.mul(&q(i)).mul(&q(l)).div(&q(2)).unwrap());
            assert_eq!(v.get(&[i, 0, l]).unwrap(), &diag);
            match v.get(&[i, 2, l]) {
                Some(c) => assert_eq!(c, &up),
                None => assert!(up.is_zero()),
            }
            assert!(v.entries.len() <= 2);
        }
    }
}
