//! The genus-2 DAHA operators of Arthamonov and Shakirov on the Ψ basis, the α rescaling
//! and the t = q comparison with the skein action.

mod alpha;
mod coeffs;

pub use alpha::{alpha_closed, verify_alpha, AlphaTable};
pub use coeffs::{c11_closed, c_coeff, c_qprod, qt_bracket, verify_c_relations, QTParams};

use rayon::prelude::*;

use crate::exactalg::Scalars;
use crate::opexpr::{label, run_check, Check, CheckOutcome, Failure, Mode, VerificationReport};
use crate::skeinmod::{push_qterm, Basis, Loop, LoopAction, SkeinError, SkeinVector, ThetaAction, Triple, Truncation};
use crate::Error;

const SIGNS: [(i64, i64); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];

/// The Ô operators. Without parameters they are taken at q = t = s⁴ (u = v = s²), where
/// every coefficient is a quantum-integer product.
#[derive(Clone, Debug, Default)]
pub struct PsiAction {
    params: Option<QTParams>,
}

impl PsiAction {
    pub fn t_equals_q() -> Self {
        PsiAction { params: None }
    }

    pub fn with_params(p: QTParams) -> Self {
        PsiAction { params: Some(p) }
    }

    fn a_value<K: Scalars>(&self, k: &K, n: i64) -> Result<K::Elem, SkeinError> {
        match &self.params {
            None => Ok(k.add(&k.s_pow(2 * n + 2), &k.s_pow(-2 * n - 2))),
            Some(p) => Ok(k.embed(&p.a_eigenvalue(n))?),
        }
    }
}

impl LoopAction for PsiAction {
    fn basis(&self) -> Basis {
        Basis::Psi
    }

    fn weight(&self, lp: Loop) -> Option<u32> {
        match lp {
            Loop::A1 | Loop::A2 | Loop::A3 => Some(0),
            Loop::B12 | Loop::B13 | Loop::B23 => Some(2),
            Loop::X => None,
        }
    }

    fn image<K: Scalars>(&self, k: &K, lp: Loop, t: Triple) -> Result<Vec<(Triple, K::Elem)>, SkeinError> {
        if !Basis::Psi.admits(t) {
            return Err(SkeinError::Inadmissible { key: t, basis: Basis::Psi });
        }
        let [i, j, l] = t;
        let mut out = Vec::with_capacity(4);
        match lp {
            Loop::A1 => out.push((t, self.a_value(k, i)?)),
            Loop::A2 => out.push((t, self.a_value(k, j)?)),
            Loop::A3 => out.push((t, self.a_value(k, l)?)),
            Loop::B12 | Loop::B13 | Loop::B23 => {
                for (a, b) in SIGNS {
                    let (args, target) = match lp {
                        Loop::B12 => ((i, j, l), [i + a, j + b, l]),
                        Loop::B13 => ((i, l, j), [i + a, j, l + b]),
                        _ => ((j, l, i), [i, j + a, l + b]),
                    };
                    match &self.params {
                        None => push_qterm(k, &mut out, Basis::Psi, target, &c_qprod(a, b, args.0, args.1, args.2), "psi B-loop")?,
                        Some(p) => {
                            let c = c_coeff(a, b, args.0, args.1, args.2, p);
                            if c.is_zero() {
                                continue;
                            }
                            if !Basis::Psi.admits(target) {
                                return Err(SkeinError::NonzeroDropped { key: target, what: "psi B-loop" });
                            }
                            out.push((target, k.embed(&c)?));
                        }
                    }
                }
            }
            Loop::X => return Err(SkeinError::Unsupported { lp, basis: Basis::Psi }),
        }
        Ok(out)
    }
}

/// Ô_loop applied to a Ψ-vector.
pub fn o_apply<K: Scalars>(
    k: &K,
    lp: Loop,
    v: &SkeinVector<K::Elem>,
    action: &PsiAction,
    trunc: Truncation,
) -> Result<SkeinVector<K::Elem>, SkeinError> {
    action.apply(k, lp, v, trunc)
}

struct Correspondence<'a> {
    table: &'a AlphaTable,
    bound: i64,
}

impl Correspondence<'_> {
    fn one<K: Scalars>(&self, k: &K, lp: Loop, t: Triple) -> Result<Vec<Failure>, Error> {
        let trunc = Truncation::new(self.bound as u32 + 2);
        let n = SkeinVector::basis_element(k, Basis::Theta, t)?;
        let skein = ThetaAction.apply(k, lp, &n, trunc)?;
        let psi = SkeinVector::basis_element(k, Basis::Psi, t)?;
        let ohat = PsiAction::t_equals_q().apply(k, lp, &psi, trunc)?;
        let src = self.table.get(t)?.inverse().expect("α has no vanishing factor");
        let mut keys: Vec<Triple> = skein.entries.keys().chain(ohat.entries.keys()).copied().collect();
        keys.sort();
        keys.dedup();
        let mut fails = Vec::new();
        for key in keys {
            // n(t) ↦ α(t)⁻¹Ψ_t and loop ↦ −Ô, so D = −C·α(target)/α(source).
            let ratio = k.qprod(&self.table.get(key)?.clone().mul(&src).cancel())?;
            let c = ohat.get(&key).cloned().unwrap_or_else(|| k.zero());
            let lhs = k.neg(&k.mul(&c, &ratio));
            let rhs = skein.get(&key).cloned().unwrap_or_else(|| k.zero());
            if !k.eq(&lhs, &rhs) {
                fails.push(Failure::new(
                    format!("{lp} {} -> {}", label(Basis::Theta, t), label(Basis::Theta, key)),
                    k.render(&lhs),
                    k.render(&rhs),
                ));
            }
        }
        Ok(fails)
    }
}

impl Check for Correspondence<'_> {
    fn run<K: Scalars>(&self, k: &K) -> Result<CheckOutcome, Error> {
        let jobs: Vec<(Loop, Triple)> = Loop::THETA
            .iter()
            .flat_map(|&lp| Basis::Theta.elements(self.bound).into_iter().map(move |t| (lp, t)))
            .collect();
        let results: Vec<Result<Vec<Failure>, Error>> = jobs.par_iter().map(|&(lp, t)| self.one(k, lp, t)).collect();
        let mut out = CheckOutcome { checked: jobs.len(), failures: Vec::new() };
        for r in results {
            out.failures.extend(r?);
        }
        Ok(out)
    }
}

/// Checks that loop ↦ −Ô_loop, n(t) ↦ α(t)⁻¹Ψ_t intertwines the theta-basis action with
/// the Ô operators at q = t = s⁴, for all six loops and all sources with i+j+k ≤ bound.
pub fn verify_correspondence(bound: u32, mode: &Mode) -> VerificationReport {
    let table = match AlphaTable::fill(bound + 2) {
        Ok(t) => t,
        Err(e) => {
            let mut r = VerificationReport::new("as-correspondence", mode.clone());
            r.error = Some(e.to_string());
            return r;
        }
    };
    run_check("as-correspondence", mode, &["s"], &Correspondence { table: &table, bound: bound as i64 })
}
