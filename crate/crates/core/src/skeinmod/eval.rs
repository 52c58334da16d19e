//! The evaluation map to the ground ring and the monomial/Chebyshev bridges.

use crate::exactalg::{QProduct, Scalars};

use super::{is_admissible, Basis, Loop, LoopAction, SkeinError, SkeinVector, ThetaAction, Triple, Truncation};

fn push_fact(list: &mut Vec<i64>, n: i64) {
    list.extend(1..=n);
}

/// Value of the theta graph n(a,b,c) in S³.
pub fn eval_qprod(t: Triple) -> Result<QProduct, SkeinError> {
    let [a, b, c] = t;
    if !is_admissible(a, b, c) {
        return Err(SkeinError::Inadmissible { key: t, basis: Basis::Theta });
    }
    let (i, j, k) = ((b + c - a) / 2, (a + c - b) / 2, (a + b - c) / 2);
    let mut q = QProduct::scalar(if (i + j + k) % 2 == 0 { 1 } else { -1 });
    push_fact(&mut q.num, i + j + k + 1);
    push_fact(&mut q.num, i);
    push_fact(&mut q.num, j);
    push_fact(&mut q.num, k);
    push_fact(&mut q.den, i + j);
    push_fact(&mut q.den, j + k);
    push_fact(&mut q.den, i + k);
    Ok(q)
}

pub fn eval_map<K: Scalars>(k: &K, t: Triple) -> Result<K::Elem, SkeinError> {
    Ok(k.qprod(&eval_qprod(t)?)?)
}

pub fn eval_vector<K: Scalars>(k: &K, v: &SkeinVector<K::Elem>) -> Result<K::Elem, SkeinError> {
    if v.basis != Basis::Theta {
        return Err(SkeinError::Unsupported { lp: Loop::A1, basis: v.basis });
    }
    let mut acc = k.zero();
    for (t, c) in &v.entries {
        acc = k.add(&acc, &k.mul(c, &eval_map(k, *t)?));
    }
    Ok(acc)
}

fn apply_power<K: Scalars>(
    k: &K,
    lp: Loop,
    n: u32,
    mut v: SkeinVector<K::Elem>,
    trunc: Truncation,
) -> Result<SkeinVector<K::Elem>, SkeinError> {
    for _ in 0..n {
        v = ThetaAction.apply(k, lp, &v, trunc)?;
    }
    Ok(v)
}

/// B12^a · B23^b · B13^c · n(0,0,0).
pub fn monomial_to_theta<K: Scalars>(
    k: &K,
    a: u32,
    b: u32,
    c: u32,
    trunc: Truncation,
) -> Result<SkeinVector<K::Elem>, SkeinError> {
    let v = SkeinVector::basis_element(k, Basis::Theta, [0, 0, 0])?;
    let v = apply_power(k, Loop::B13, c, v, trunc)?;
    let v = apply_power(k, Loop::B23, b, v, trunc)?;
    apply_power(k, Loop::B12, a, v, trunc)
}

/// S_n(gen) · n(0,0,0) by the Chebyshev recursion S_{n+1} = x S_n − S_{n−1}.
pub fn chebyshev_apply<K: Scalars>(
    k: &K,
    n: u32,
    gen: Loop,
    trunc: Truncation,
) -> Result<SkeinVector<K::Elem>, SkeinError> {
    if !matches!(gen, Loop::B12 | Loop::B13 | Loop::B23) {
        return Err(SkeinError::Unsupported { lp: gen, basis: Basis::Theta });
    }
    let mut prev = SkeinVector::zero(Basis::Theta);
    let mut cur = SkeinVector::basis_element(k, Basis::Theta, [0, 0, 0])?;
    for _ in 0..n {
        let mut next = ThetaAction.apply(k, gen, &cur, trunc)?;
        next.axpy(k, &k.int(-1), &prev);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{qint, Exact, RatFunc};

    #[test]
    fn eval_examples() {
        assert!(eval_map(&Exact, [0, 0, 0]).unwrap().is_one());
        assert_eq!(eval_map(&Exact, [1, 0, 1]).unwrap(), RatFunc::from_poly(qint(2)).neg());
        for a in 0..=10 {
            let sign = if a % 2 == 0 { 1 } else { -1 };
            let expect = RatFunc::from_poly(qint(a + 1)).scale(&crate::exactalg::Coefficient::from_int(sign));
            assert_eq!(eval_map(&Exact, [a, a, 0]).unwrap(), expect);
        }
    }

    #[test]
    fn chebyshev_examples() {
        let t = Truncation::new(20);
        let v = chebyshev_apply(&Exact, 0, Loop::B12, t).unwrap();
        assert!(v.get(&[0, 0, 0]).unwrap().is_one());
        for i in 1..=8 {
            let v = chebyshev_apply(&Exact, i, Loop::B12, t).unwrap();
            assert_eq!(v.entries.len(), 1, "S_{i}(B12)");
            assert!(v.get(&[i as i64, i as i64, 0]).unwrap().is_one());
        }
        let v = chebyshev_apply(&Exact, 3, Loop::B13, t).unwrap();
        assert_eq!(v.entries.len(), 1);
        assert!(v.get(&[3, 0, 3]).unwrap().is_one());
    }

    #[test]
    fn monomial_examples() {
        let t = Truncation::new(12);
        let v = monomial_to_theta(&Exact, 1, 0, 0, t).unwrap();
        assert_eq!(v.entries.len(), 1);
        assert!(v.get(&[1, 1, 0]).unwrap().is_one());
        let v = monomial_to_theta(&Exact, 1, 1, 0, t).unwrap();
        let (lead, c) = v.entries.iter().next_back().unwrap();
        assert_eq!(lead, &[1, 2, 1]);
        assert!(c.is_one());
    }
}
