//! Operator expressions over the loop generators.

use std::fmt;

use crate::exactalg::{delta, Exact, RatFunc, Scalars};
use crate::skeinmod::{eval_vector, Basis, Loop, LoopAction, SkeinError, SkeinVector, ThetaAction, Truncation};

#[derive(Clone, Debug)]
pub enum OperatorExpr {
    Atom(Loop),
    /// Multiplication by a scalar (the identity when the scalar is 1).
    Scalar(RatFunc),
    Sum(Vec<OperatorExpr>),
    /// Product written left to right; the rightmost factor acts first.
    Compose(Vec<OperatorExpr>),
    Scale(RatFunc, Box<OperatorExpr>),
}

use OperatorExpr::*;

impl OperatorExpr {
    pub fn atom(l: Loop) -> Self {
        Atom(l)
    }

    pub fn identity() -> Self {
        Scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Scalar(c)
    }

    pub fn scale(self, c: RatFunc) -> Self {
        Scale(c, Box::new(self))
    }

    pub fn neg(self) -> Self {
        self.scale(RatFunc::from_int(-1))
    }

    pub fn then(self, o: Self) -> Self {
        compose(vec![self, o])
    }

    pub fn plus(self, o: Self) -> Self {
        sum(vec![self, o])
    }

    pub fn minus(self, o: Self) -> Self {
        sum(vec![self, o.neg()])
    }

    pub fn pow(self, n: u32) -> Self {
        if n == 0 {
            return Self::identity();
        }
        compose(vec![self; n as usize])
    }

    /// Total shift weight under a given action; errors on loops the action lacks.
    pub fn shift_weight<A: LoopAction>(&self, action: &A) -> Result<u32, SkeinError> {
        Ok(match self {
            Atom(l) => action.weight(*l).ok_or(SkeinError::Unsupported { lp: *l, basis: action.basis() })?,
            Scalar(_) => 0,
            Sum(xs) => xs.iter().map(|x| x.shift_weight(action)).collect::<Result<Vec<_>, _>>()?.into_iter().max().unwrap_or(0),
            Compose(xs) => xs.iter().map(|x| x.shift_weight(action)).sum::<Result<u32, _>>()?,
            Scale(_, x) => x.shift_weight(action)?,
        })
    }

    /// Basis-independent weight: A-loops and X weigh 0 except A2, which shifts j on the
    /// dumbbell basis; B-loops weigh 2.
    pub fn nominal_weight(&self) -> u32 {
        match self {
            Atom(Loop::A1) | Atom(Loop::A3) | Atom(Loop::X) => 0,
            Atom(_) => 2,
            Scalar(_) => 0,
            Sum(xs) => xs.iter().map(|x| x.nominal_weight()).max().unwrap_or(0),
            Compose(xs) => xs.iter().map(|x| x.nominal_weight()).sum(),
            Scale(_, x) => x.nominal_weight(),
        }
    }

    pub fn loops(&self) -> Vec<Loop> {
        let mut out = Vec::new();
        self.collect_loops(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_loops(&self, out: &mut Vec<Loop>) {
        match self {
            Atom(l) => out.push(*l),
            Scalar(_) => {}
            Sum(xs) | Compose(xs) => xs.iter().for_each(|x| x.collect_loops(out)),
            Scale(_, x) => x.collect_loops(out),
        }
    }

    fn apply_inner<K: Scalars, A: LoopAction>(
        &self,
        k: &K,
        action: &A,
        v: &SkeinVector<K::Elem>,
        trunc: Truncation,
    ) -> Result<SkeinVector<K::Elem>, SkeinError> {
        Ok(match self {
            Atom(l) => action.apply(k, *l, v, trunc)?,
            Scalar(c) => v.scaled(k, &k.embed(c)?),
            Sum(xs) => {
                let mut acc = SkeinVector::zero(v.basis);
                for x in xs {
                    acc.axpy(k, &k.one(), &x.apply_inner(k, action, v, trunc)?);
                }
                acc
            }
            Compose(xs) => {
                let mut cur = v.clone();
                for x in xs.iter().rev() {
                    cur = x.apply_inner(k, action, &cur, trunc)?;
                }
                cur
            }
            Scale(c, x) => x.apply_inner(k, action, v, trunc)?.scaled(k, &k.embed(c)?),
        })
    }

    /// Applies the expression, asserting the result stays within depth + weight.
    pub fn apply<K: Scalars, A: LoopAction>(
        &self,
        k: &K,
        action: &A,
        v: &SkeinVector<K::Elem>,
        trunc: Truncation,
    ) -> Result<SkeinVector<K::Elem>, SkeinError> {
        let w = self.shift_weight(action)? as i64;
        let depth = v.max_depth();
        let out = self.apply_inner(k, action, v, trunc)?;
        if let Some(t) = out.entries.keys().find(|t| t.iter().sum::<i64>() > depth + w) {
            return Err(SkeinError::WeightExceeded { key: *t });
        }
        Ok(out)
    }
}

pub fn sum(xs: Vec<OperatorExpr>) -> OperatorExpr {
    Sum(xs)
}

pub fn compose(xs: Vec<OperatorExpr>) -> OperatorExpr {
    Compose(xs)
}

/// `s^k · a∘b − s^{−k} · b∘a`.
pub fn qcomm(a: OperatorExpr, b: OperatorExpr, k: i32) -> OperatorExpr {
    sum(vec![
        a.clone().then(b.clone()).scale(RatFunc::s_pow(k)),
        b.then(a).scale(RatFunc::s_pow(-k).neg()),
    ])
}

/// `sign · (s^{sign} α∘β − s^{−sign} β∘α)/(s² − s⁻²)`; the geometric hypothesis (α and β
/// meet once) is the caller's responsibility.
pub fn dehn_twist(alpha: OperatorExpr, beta: OperatorExpr, sign: i32) -> OperatorExpr {
    assert!(sign == 1 || sign == -1, "sign must be ±1");
    let scale = delta().inv().expect("δ ≠ 0").mul(&RatFunc::from_int(sign as i64));
    qcomm(alpha, beta, sign).scale(scale)
}

/// Jones polynomial of the image of `expr · n(0,0,0)` under the evaluation map.
pub fn jones(expr: &OperatorExpr, trunc: Truncation) -> Result<RatFunc, SkeinError> {
    let w = expr.shift_weight(&ThetaAction)?;
    if w > trunc.bound {
        return Err(SkeinError::Truncation { key: [0, 0, 0], weight: w, bound: trunc.bound });
    }
    let v = SkeinVector::basis_element(&Exact, Basis::Theta, [0, 0, 0])?;
    let out = expr.apply(&Exact, &ThetaAction, &v, trunc)?;
    eval_vector(&Exact, &out)
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom(l) => write!(f, "{l}"),
            Scalar(c) => write!(f, "({c})"),
            Sum(xs) => {
                write!(f, "(")?;
                for (n, x) in xs.iter().enumerate() {
                    if n > 0 {
                        write!(f, " + ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, ")")
            }
            Compose(xs) => {
                for (n, x) in xs.iter().enumerate() {
                    if n > 0 {
                        write!(f, "*")?;
                    }
                    write!(f, "{x}")?;
                }
                Ok(())
            }
            Scale(c, x) => write!(f, "({c})*{x}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skeinmod::a_eigenvalue;

    fn basis_vec(t: [i64; 3]) -> SkeinVector<RatFunc> {
        SkeinVector::basis_element(&Exact, Basis::Theta, t).unwrap()
    }

    #[test]
    fn qcomm_of_diagonal() {
        let e = qcomm(Atom(Loop::A1), Atom(Loop::A1), 1);
        let v = e.apply(&Exact, &ThetaAction, &basis_vec([2, 1, 1]), Truncation::new(8)).unwrap();
        let lam = a_eigenvalue(&Exact, 2);
        let expect = RatFunc::s_pow(1).sub(&RatFunc::s_pow(-1)).mul(&lam).mul(&lam);
        assert_eq!(v.get(&[2, 1, 1]).unwrap(), &expect);
    }

    #[test]
    fn weights() {
        let e = Atom(Loop::A1).scale(delta()).plus(Atom(Loop::B12).then(Atom(Loop::B23)));
        assert_eq!(e.shift_weight(&ThetaAction).unwrap(), 4);
        assert!(Atom(Loop::X).shift_weight(&ThetaAction).is_err());
    }

    #[test]
    fn jones_examples() {
        let t = Truncation::new(4);
        assert!(jones(&OperatorExpr::identity(), t).unwrap().is_one());
        let unknot = RatFunc::s_pow(2).add(&RatFunc::s_pow(-2)).neg();
        assert_eq!(jones(&Atom(Loop::A1), t).unwrap(), unknot);
        assert_eq!(jones(&Atom(Loop::B13), t).unwrap(), unknot);
    }

    #[test]
    fn dehn_twist_accepts_anything() {
        let e = dehn_twist(Atom(Loop::A1), Atom(Loop::A1), 1);
        assert_eq!(e.shift_weight(&ThetaAction).unwrap(), 0);
    }
}
