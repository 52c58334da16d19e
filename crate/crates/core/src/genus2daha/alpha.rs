//! The α rescaling between the theta basis and the Ψ basis.

use std::collections::HashMap;

use crate::exactalg::{QProduct, Scalars};
use crate::opexpr::{label, run_check, Check, CheckOutcome, Failure, Mode, VerificationReport};
use crate::skeinmod::{xyd_form, Basis, SkeinError, Triple};
use crate::Error;

use super::coeffs::c11_closed;

/// The predecessor of `t` under each recursion rule, with the C₁₁ arguments of that rule.
fn predecessors(t: Triple) -> Vec<(Triple, (i64, i64, i64))> {
    let [i, j, k] = t;
    let mut out = Vec::new();
    for (p, args) in [
        ([i - 1, j - 1, k], (i - 1, j - 1, k)),
        ([i - 1, j, k - 1], (i - 1, k - 1, j)),
        ([i, j - 1, k - 1], (j - 1, k - 1, i)),
    ] {
        if Basis::Theta.admits(p) {
            out.push((p, args));
        }
    }
    out
}

/// (−1)^{x+y+d} ∏_{r=0}^{d} ⟨x+1+r⟩⟨y+1+r⟩ / (∏_{r=1}^{d} ⟨r⟩ ∏_{r=0}^{d−1} ⟨x+y+2+r⟩) at
/// (x+d, y+d, x+y).
pub fn alpha_closed(t: Triple) -> Option<QProduct> {
    let (x, y, d) = xyd_form(t)?;
    let mut q = QProduct::scalar(if (x + y + d) % 2 == 0 { 1 } else { -1 });
    for r in 0..=d {
        q = q.times(x + 1 + r).times(y + 1 + r);
    }
    for r in 1..=d {
        q = q.over(r);
    }
    for r in 0..d {
        q = q.over(x + y + 2 + r);
    }
    Some(q.cancel())
}

/// α on all admissible triples up to a bound, filled by the first applicable rule.
#[derive(Clone, Debug, Default)]
pub struct AlphaTable {
    bound: u32,
    values: HashMap<Triple, QProduct>,
}

impl AlphaTable {
    pub fn fill(bound: u32) -> Result<Self, SkeinError> {
        let mut values = HashMap::new();
        let mut elems = Basis::Theta.elements(bound as i64);
        elems.sort_by_key(|t| t.iter().sum::<i64>());
        for t in elems {
            let v = match predecessors(t).first() {
                None => QProduct::unit(),
                Some((p, (a, b, c))) => {
                    let prev: &QProduct = &values[p];
                    let step = c11_closed(*a, *b, *c).inverse().ok_or(SkeinError::Inadmissible { key: t, basis: Basis::Psi })?;
                    prev.clone().mul(&step).neg().cancel()
                }
            };
            values.insert(t, v);
        }
        Ok(AlphaTable { bound, values })
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn get(&self, t: Triple) -> Result<&QProduct, SkeinError> {
        self.values.get(&t).ok_or(SkeinError::Inadmissible { key: t, basis: Basis::Psi })
    }
}

struct AlphaCheck<'a> {
    table: &'a AlphaTable,
}

impl Check for AlphaCheck<'_> {
    fn run<K: Scalars>(&self, k: &K) -> Result<CheckOutcome, Error> {
        let mut out = CheckOutcome::default();
        let one = k.one();
        let mut elems = Basis::Theta.elements(self.table.bound as i64);
        elems.sort();
        for t in elems {
            let stored = self.table.get(t)?;
            let inv = stored.inverse().expect("α is a unit");
            let mut candidates: Vec<(String, QProduct)> = predecessors(t)
                .into_iter()
                .enumerate()
                .map(|(n, (p, (a, b, c)))| {
                    let step = c11_closed(a, b, c).inverse().expect("C₁₁ is a unit");
                    (format!("rule {}", n + 1), self.table.values[&p].clone().mul(&step).neg())
                })
                .collect();
            candidates.push(("closed form".into(), alpha_closed(t).expect("admissible")));
            if t == [0, 0, 0] {
                candidates = vec![("base".into(), QProduct::unit())];
            }
            for (what, c) in candidates {
                out.checked += 1;
                let ratio = k.qprod(&c.mul(&inv).cancel())?;
                if !k.eq(&ratio, &one) {
                    out.failures.push(Failure::new(format!("{what} at {}", label(Basis::Theta, t)), k.render(&ratio), "1"));
                }
            }
            if k.is_zero(&k.qprod(stored)?) {
                out.failures.push(Failure::new(format!("vanishes at {}", label(Basis::Theta, t)), "0", "nonzero"));
            }
        }
        Ok(out)
    }
}

/// Checks that every recursion path into each triple and the closed form agree.
pub fn verify_alpha(bound: u32, mode: &Mode) -> VerificationReport {
    match AlphaTable::fill(bound) {
        Ok(table) => run_check("alpha", mode, &["s"], &AlphaCheck { table: &table }),
        Err(e) => {
            let mut r = VerificationReport::new("alpha", mode.clone());
            r.error = Some(e.to_string());
            r
        }
    }
}
