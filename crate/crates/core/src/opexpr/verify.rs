//! Verification reports and the exact/probabilistic check runner.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::exactalg::{default_prime, Exact, ModP, Scalars};
use crate::skeinmod::{Basis, LoopAction, SkeinVector, Triple, Truncation};
use crate::Error;

use super::expr::OperatorExpr;

/// Failures kept verbatim in a report; the total count is always exact.
pub const MAX_FAILURE_SAMPLES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exact,
    Probabilistic { points: u32, prime: u64, seed: u64 },
}

impl Mode {
    pub fn probabilistic(points: u32, seed: u64) -> Self {
        Mode::Probabilistic { points, prime: default_prime(), seed }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Mode::Exact)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub key: String,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<u32>,
}

impl Failure {
    pub fn new(key: impl Into<String>, lhs: impl Into<String>, rhs: impl Into<String>) -> Self {
        Failure { key: key.into(), lhs: lhs.into(), rhs: rhs.into(), point: None }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub mode: Mode,
    pub checked: usize,
    pub failure_count: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>, mode: Mode) -> Self {
        VerificationReport {
            name: name.into(),
            mode,
            checked: 0,
            failure_count: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            error: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.error.is_none()
    }

    pub fn record(&mut self, outcome: CheckOutcome, point: Option<u32>) {
        self.checked += outcome.checked;
        self.failure_count += outcome.failures.len();
        for mut f in outcome.failures {
            if self.failures.len() < MAX_FAILURE_SAMPLES {
                f.point = point;
                self.failures.push(f);
            }
        }
    }

    pub fn fail(&mut self, f: Failure) {
        self.record(CheckOutcome { checked: 0, failures: vec![f] }, None);
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }

    /// One-line summary used by the CLI and the acceptance runner.
    pub fn summary(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!("{status} {} (checked {}, failures {})", self.name, self.checked, self.failure_count);
        if let Some(e) = &self.error {
            s.push_str(&format!(" error: {e}"));
        }
        s
    }

    /// Merges a sub-report (counts, samples, notes and errors).
    pub fn absorb(&mut self, other: VerificationReport) {
        self.checked += other.checked;
        self.failure_count += other.failure_count;
        for f in other.failures {
            if self.failures.len() < MAX_FAILURE_SAMPLES {
                self.failures.push(Failure { key: format!("{}: {}", other.name, f.key), ..f });
            }
        }
        if let Some(e) = other.error {
            let e = format!("{}: {e}", other.name);
            self.error = Some(match self.error.take() {
                Some(prev) => format!("{prev}; {e}"),
                None => e,
            });
        }
        self.notes.extend(other.notes);
        self.elapsed += other.elapsed;
    }
}

#[derive(Clone, Debug, Default)]
pub struct CheckOutcome {
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl CheckOutcome {
    pub fn merge(mut self, o: CheckOutcome) -> Self {
        self.checked += o.checked;
        self.failures.extend(o.failures);
        self
    }
}

/// A check that can run over any scalar context.
pub trait Check: Sync {
    fn run<K: Scalars>(&self, k: &K) -> Result<CheckOutcome, Error>;
}

const RESAMPLE_LIMIT: u32 = 16;

/// Runs a check exactly or at random prime-field points of the listed variables.
pub fn run_check<C: Check>(name: &str, mode: &Mode, vars: &[&str], check: &C) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new(name, mode.clone());
    match mode {
        Mode::Exact => match check.run(&Exact) {
            Ok(o) => report.record(o, None),
            Err(e) => report.error = Some(e.to_string()),
        },
        Mode::Probabilistic { points, prime, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let mut resamples = 0;
            'points: for idx in 0..*points {
                for _ in 0..RESAMPLE_LIMIT {
                    let ctx = match ModP::random(*prime, vars, &mut rng) {
                        Ok(c) => c,
                        Err(e) => {
                            report.error = Some(e.to_string());
                            break 'points;
                        }
                    };
                    match check.run(&ctx) {
                        Ok(o) => {
                            let checked = if idx == 0 { o.checked } else { 0 };
                            report.record(CheckOutcome { checked, failures: o.failures }, Some(idx));
                            continue 'points;
                        }
                        Err(e) if e.is_resample() => resamples += 1,
                        Err(e) => {
                            report.error = Some(e.to_string());
                            break 'points;
                        }
                    }
                }
                report.error = Some(format!("point {idx}: no valid sample after {RESAMPLE_LIMIT} attempts"));
                break;
            }
            report.note(format!(
                "{points} points mod p = {prime}; each point refutes a false identity of degree D with probability >= 1 - D/p (resampled {resamples})"
            ));
        }
    }
    report.elapsed = start.elapsed();
    report
}

/// Formats a basis label, e.g. `n(1,2,1)`.
pub fn label(basis: Basis, t: Triple) -> String {
    format!("{}({},{},{})", basis.tag(), t[0], t[1], t[2])
}

/// lhs = rhs as operators on every basis element of the safe region.
pub struct IdentityCheck<'a, A: LoopAction> {
    pub lhs: &'a OperatorExpr,
    pub rhs: &'a OperatorExpr,
    pub action: &'a A,
    pub region: Truncation,
}

impl<A: LoopAction> Check for IdentityCheck<'_, A> {
    fn run<K: Scalars>(&self, k: &K) -> Result<CheckOutcome, Error> {
        let w = self.lhs.shift_weight(self.action)?.max(self.rhs.shift_weight(self.action)?);
        let basis = self.action.basis();
        let depth = self.region.bound as i64 - w as i64;
        let elems = if depth < 0 { Vec::new() } else { basis.elements(depth) };
        let per: Vec<Result<Vec<Failure>, Error>> = elems
            .par_iter()
            .map(|&t| {
                let v = SkeinVector::basis_element(k, basis, t)?;
                let l = self.lhs.apply(k, self.action, &v, self.region)?;
                let r = self.rhs.apply(k, self.action, &v, self.region)?;
                Ok(l
                    .differences(k, &r)
                    .into_iter()
                    .map(|(key, a, b)| Failure::new(format!("{} -> {}", label(basis, t), label(basis, key)), k.render(&a), k.render(&b)))
                    .collect())
            })
            .collect();
        let mut out = CheckOutcome { checked: elems.len(), failures: Vec::new() };
        for r in per {
            out.failures.extend(r?);
        }
        Ok(out)
    }
}

/// Everything needed to check one operator identity.
#[derive(Clone, Debug)]
pub struct RelationCheckSpec {
    pub name: String,
    pub lhs: OperatorExpr,
    pub rhs: OperatorExpr,
    pub basis: Basis,
    pub region: Truncation,
    pub mode: Mode,
}

pub fn verify_identity_with<A: LoopAction>(spec: &RelationCheckSpec, action: &A) -> VerificationReport {
    let check = IdentityCheck { lhs: &spec.lhs, rhs: &spec.rhs, action, region: spec.region };
    let mut report = run_check(&spec.name, &spec.mode, &["s"], &check);
    for side in [&spec.lhs, &spec.rhs] {
        if let Ok(w) = side.shift_weight(action) {
            if w > spec.region.bound {
                report.note(format!("shift weight {w} exceeds the region bound {}; the safe region is empty", spec.region.bound));
            }
        }
    }
    report
}

/// Checks with the standard action of the spec's basis (Ψ at t = q).
pub fn verify_identity(spec: &RelationCheckSpec) -> VerificationReport {
    match spec.basis {
        Basis::Theta => verify_identity_with(spec, &crate::skeinmod::ThetaAction),
        Basis::Dumbbell => verify_identity_with(spec, &crate::skeinmod::DumbbellAction::default()),
        Basis::Psi => verify_identity_with(spec, &crate::genus2daha::PsiAction::t_equals_q()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::RatFunc;
    use crate::skeinmod::{Loop, ThetaAction};

    fn spec(lhs: OperatorExpr, rhs: OperatorExpr, bound: u32, mode: Mode) -> RelationCheckSpec {
        RelationCheckSpec { name: "t".into(), lhs, rhs, basis: Basis::Theta, region: Truncation::new(bound), mode }
    }

    #[test]
    fn commuting_b_loops() {
        let a = OperatorExpr::atom(Loop::B12).then(OperatorExpr::atom(Loop::B23));
        let b = OperatorExpr::atom(Loop::B23).then(OperatorExpr::atom(Loop::B12));
        let r = verify_identity(&spec(a.clone(), b.clone(), 8, Mode::Exact));
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.checked > 0);
        let r = verify_identity(&spec(a, b, 8, Mode::probabilistic(3, 7)));
        assert!(r.passed());
    }

    #[test]
    fn perturbed_rhs_fails_in_both_modes_and_both_orders() {
        let lhs = OperatorExpr::atom(Loop::B13);
        let rhs = OperatorExpr::atom(Loop::B13).scale(RatFunc::from_int(2));
        for mode in [Mode::Exact, Mode::probabilistic(2, 1)] {
            let r1 = verify_identity(&spec(lhs.clone(), rhs.clone(), 6, mode.clone()));
            let r2 = verify_identity(&spec(rhs.clone(), lhs.clone(), 6, mode));
            assert!(!r1.passed() && !r2.passed());
            assert_eq!(r1.failure_count, r2.failure_count);
        }
    }

    #[test]
    fn unsupported_loop_is_an_error() {
        let r = verify_identity_with(&spec(OperatorExpr::atom(Loop::X), OperatorExpr::identity(), 4, Mode::Exact), &ThetaAction);
        assert!(r.error.is_some());
        assert!(!r.passed());
    }
}
