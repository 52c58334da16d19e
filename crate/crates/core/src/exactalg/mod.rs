//! Exact coefficient arithmetic and the prime-field backend.

mod coeff;
mod cyclo;
mod json;
mod laurent;
mod primefield;
mod qnum;
mod ratfunc;
mod scalars;

pub use coeff::{parse_ratio, Coefficient};
pub use cyclo::{cyclotomic, cyclotomic_coeffs};
pub use laurent::{Exps, LaurentPoly};
pub use primefield::{default_prime, is_prime, specialize, sqrt_minus_one, PrimeFieldPoint};
pub use qnum::{qfact, qint, QProduct};
pub use ratfunc::{Atom, RatFunc};
pub use scalars::{Exact, ModP, Scalars};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the sample point; resample")]
    Resample,
    #[error("quantum factorial of negative integer {0}")]
    NegativeFactorial(i64),
    #[error("{0} is not prime")]
    BadPrime(u64),
    #[error("prime {0} has no square root of -1")]
    NoSqrtMinusOne(u64),
    #[error("variable {0} assigned zero residue")]
    ZeroResidue(String),
    #[error("variable {0} has no assigned value")]
    Unassigned(String),
}

/// The binary operation selector of `ratfunc_arith`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn ratfunc_arith(a: &RatFunc, b: &RatFunc, op: ArithOp) -> Result<RatFunc, ExactError> {
    match op {
        ArithOp::Add => Ok(a.add(b)),
        ArithOp::Sub => Ok(a.sub(b)),
        ArithOp::Mul => Ok(a.mul(b)),
        ArithOp::Div => a.div(b),
    }
}

/// `δ = s² − s⁻²`.
pub fn delta() -> RatFunc {
    RatFunc::s_pow(2).sub(&RatFunc::s_pow(-2))
}
