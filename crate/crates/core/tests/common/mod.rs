//! Shared test oracles.

#![allow(dead_code)]

pub mod tables;

use g2skein::exactalg::RatFunc;

/// ⟨n⟩ = s^{2n−2} + s^{2n−6} + ... + s^{−2n+2}, summed term by term.
pub fn qint_by_terms(n: i64) -> RatFunc {
    (0..n).fold(RatFunc::zero(), |acc, r| acc.add(&RatFunc::s_pow((2 * n - 2 - 4 * r) as i32)))
}

/// The unknot value −s² − s⁻².
pub fn unknot() -> RatFunc {
    RatFunc::s_pow(2).add(&RatFunc::s_pow(-2)).neg()
}
