//! The named operator identities of the skein algebra and the structural sweeps.

use std::fmt;
use std::str::FromStr;

use crate::exactalg::{delta, RatFunc, Scalars};
use crate::skeinmod::{
    monomial_to_theta, Basis, DumbbellAction, DumbbellVariant, Loop, LoopAction, SkeinVector, ThetaAction, Truncation,
};
use crate::Error;

use super::expr::{dehn_twist, qcomm, sum, OperatorExpr};
use super::verify::{
    label, run_check, verify_identity_with, Check, CheckOutcome, Failure, Mode, RelationCheckSpec, VerificationReport,
};

fn atom(l: Loop) -> OperatorExpr {
    OperatorExpr::atom(l)
}

fn s_pow(k: i32) -> RatFunc {
    RatFunc::s_pow(k)
}

fn inv(c: RatFunc) -> RatFunc {
    c.inv().expect("nonzero scalar")
}

/// Folds several reports into one, keeping the sub-reports' failure samples.
pub fn combine(name: &str, mode: &Mode, parts: Vec<VerificationReport>) -> VerificationReport {
    let mut r = VerificationReport::new(name, mode.clone());
    for p in parts {
        r.absorb(p);
    }
    r.notes.dedup();
    r
}

fn run_specs<A: LoopAction>(specs: &[RelationCheckSpec], action: &A) -> Vec<VerificationReport> {
    specs.iter().map(|s| verify_identity_with(s, action)).collect()
}

fn spec(name: String, lhs: OperatorExpr, rhs: OperatorExpr, basis: Basis, region: Truncation, mode: &Mode) -> RelationCheckSpec {
    RelationCheckSpec { name, lhs, rhs, basis, region, mode: mode.clone() }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    /// (y₁, y₂) for this side.
    pub fn loops(self) -> (Loop, Loop) {
        match self {
            Side::Left => (Loop::B12, Loop::A1),
            Side::Right => (Loop::B23, Loop::A3),
        }
    }
}

impl FromStr for Side {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(format!("unknown side {s:?}")),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// The one-holed torus relations with y₃ := [y₁,y₂]_s/δ; `y3_power` is the exponent of s in
/// that definition (1 for the true relation, anything else is a control).
pub fn sigma11_specs(side: Side, basis: Basis, region: Truncation, mode: &Mode, y3_power: i32) -> Vec<RelationCheckSpec> {
    let (a, b) = side.loops();
    let (y1, y2) = (atom(a), atom(b));
    let y3 = qcomm(y1.clone(), y2.clone(), y3_power).scale(inv(delta()));
    let tag = format!("sigma11-{side}[{basis}]");
    vec![
        spec(format!("{tag} [y2,y3]_s = d y1"), qcomm(y2.clone(), y3.clone(), 1), y1.clone().scale(delta()), basis, region, mode),
        spec(format!("{tag} [y3,y1]_s = d y2"), qcomm(y3, y1, 1), y2.scale(delta()), basis, region, mode),
    ]
}

pub fn verify_sigma11(side: Side, region: Truncation, basis: Basis, mode: &Mode) -> Vec<VerificationReport> {
    let specs = sigma11_specs(side, basis, region, mode, 1);
    match basis {
        Basis::Dumbbell => run_specs(&specs, &DumbbellAction::default()),
        _ => run_specs(&specs, &ThetaAction),
    }
}

/// How the constant side of the four-holed sphere Casimir is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CasimirReading {
    /// (s²+s⁻²)² − (a₁a₂a₃a₄ + Σaᵢ²), in the boundary operators themselves.
    Boundary,
    /// (s²+s⁻²)² − (p₁p₂p₃p₄ + Σpᵢ²) with p₄ := p₁.
    Literal,
}

struct Sigma04 {
    x1: OperatorExpr,
    x2: OperatorExpr,
    x3: OperatorExpr,
    a: [OperatorExpr; 4],
    p: [OperatorExpr; 3],
}

fn sigma04_words() -> Sigma04 {
    let a = [atom(Loop::A1), atom(Loop::A3), atom(Loop::A3), atom(Loop::A1)];
    let pair = |i: usize, j: usize, k: usize, l: usize| a[i].clone().then(a[j].clone()).plus(a[k].clone().then(a[l].clone()));
    let p = [pair(0, 1, 2, 3), pair(1, 2, 0, 3), pair(0, 2, 1, 3)];
    let (x1, x2) = (atom(Loop::A2), atom(Loop::X));
    let d2 = s_pow(4).sub(&s_pow(-4));
    let x3 = qcomm(x1.clone(), x2.clone(), 2).minus(p[2].clone().scale(delta())).scale(inv(d2));
    Sigma04 { x1, x2, x3, a, p }
}

pub fn sigma04_specs(region: Truncation, mode: &Mode, reading: CasimirReading) -> Vec<RelationCheckSpec> {
    let Sigma04 { x1, x2, x3, a, p } = sigma04_words();
    let d2 = s_pow(4).sub(&s_pow(-4));
    let m = Basis::Dumbbell;
    let x1x2x3 = x1.clone().then(x2.clone()).then(x3.clone());
    let omega = sum(vec![
        x1x2x3.scale(s_pow(2).neg()),
        x1.clone().pow(2).scale(s_pow(4)),
        x2.clone().pow(2).scale(s_pow(-4)),
        x3.clone().pow(2).scale(s_pow(4)),
        p[0].clone().then(x1.clone()).scale(s_pow(2)),
        p[1].clone().then(x2.clone()).scale(s_pow(-2)),
        p[2].clone().then(x3.clone()).scale(s_pow(2)),
    ]);
    let c = s_pow(2).add(&s_pow(-2));
    let constant = OperatorExpr::scalar(c.mul(&c));
    let (label, consts) = match reading {
        CasimirReading::Boundary => {
            let prod = a.iter().cloned().reduce(|x, y| x.then(y)).unwrap();
            ("boundary", sum(std::iter::once(prod).chain(a.iter().map(|x| x.clone().pow(2))).collect()))
        }
        CasimirReading::Literal => {
            let ps = [p[0].clone(), p[1].clone(), p[2].clone(), p[0].clone()];
            let prod = ps.iter().cloned().reduce(|x, y| x.then(y)).unwrap();
            ("literal-p", sum(std::iter::once(prod).chain(ps.iter().map(|x| x.clone().pow(2))).collect()))
        }
    };
    vec![
        spec(
            "sigma04 [x2,x3]_{s^2} = (s^4-s^-4) x1 + d p1".into(),
            qcomm(x2.clone(), x3.clone(), 2),
            x1.clone().scale(d2.clone()).plus(p[0].clone().scale(delta())),
            m,
            region,
            mode,
        ),
        spec(
            "sigma04 [x3,x1]_{s^2} = (s^4-s^-4) x2 + d p2".into(),
            qcomm(x3, x1, 2),
            x2.scale(d2).plus(p[1].clone().scale(delta())),
            m,
            region,
            mode,
        ),
        spec(format!("sigma04 casimir ({label})"), omega, constant.minus(consts), m, region, mode),
    ]
}

pub fn verify_sigma04(region: Truncation, mode: &Mode) -> Vec<VerificationReport> {
    run_specs(&sigma04_specs(region, mode, CasimirReading::Boundary), &DumbbellAction::default())
}

pub fn verify_sigma04_with(region: Truncation, mode: &Mode, action: &DumbbellAction, reading: CasimirReading) -> Vec<VerificationReport> {
    run_specs(&sigma04_specs(region, mode, reading), action)
}

/// B₁₃ as the nested q-commutator word and as the composite of Dehn twists.
pub fn dehn_specs(region: Truncation, mode: &Mode) -> Vec<RelationCheckSpec> {
    let inner = qcomm(atom(Loop::A2), atom(Loop::B12), -1);
    let word = qcomm(atom(Loop::A3), qcomm(atom(Loop::B23), qcomm(atom(Loop::A1), inner, 1), -1), -1);
    let d4 = delta().pow(-4).expect("δ ≠ 0").neg();
    let commutators = word.scale(d4);
    let twists = dehn_twist(
        atom(Loop::A3),
        dehn_twist(atom(Loop::B23), dehn_twist(atom(Loop::A1), dehn_twist(atom(Loop::A2), atom(Loop::B12), -1), 1), -1),
        -1,
    );
    let n = Basis::Theta;
    vec![
        spec("dehn commutator word = B13".into(), commutators, atom(Loop::B13), n, region, mode),
        spec("dehn twist composite = B13".into(), twists, atom(Loop::B13), n, region, mode),
    ]
}

pub fn verify_dehn(region: Truncation, mode: &Mode) -> Vec<VerificationReport> {
    run_specs(&dehn_specs(region, mode), &ThetaAction)
}

fn commutator(a: Loop, b: Loop) -> (String, OperatorExpr, OperatorExpr) {
    (format!("[{a},{b}] = 0"), atom(a).then(atom(b)), atom(b).then(atom(a)))
}

const DISJOINT: [(Loop, Loop); 5] =
    [(Loop::A1, Loop::A3), (Loop::A1, Loop::B23), (Loop::A3, Loop::B12), (Loop::A1, Loop::A2), (Loop::A2, Loop::A3)];

pub fn commutation_specs(region: Truncation, mode: &Mode) -> Vec<RelationCheckSpec> {
    let mut out = Vec::new();
    for (a, b) in [(Loop::B12, Loop::B23), (Loop::B12, Loop::B13), (Loop::B23, Loop::B13)].into_iter().chain(DISJOINT) {
        let (name, l, r) = commutator(a, b);
        out.push(spec(format!("{name} [n]"), l, r, Basis::Theta, region, mode));
    }
    for (a, b) in DISJOINT {
        let (name, l, r) = commutator(a, b);
        out.push(spec(format!("{name} [m]"), l, r, Basis::Dumbbell, region, mode));
    }
    out
}

pub fn verify_commutation(region: Truncation, mode: &Mode) -> Vec<VerificationReport> {
    commutation_specs(region, mode)
        .iter()
        .map(|s| match s.basis {
            Basis::Dumbbell => verify_identity_with(s, &DumbbellAction::default()),
            _ => verify_identity_with(s, &ThetaAction),
        })
        .collect()
}

struct Triangularity {
    max: i64,
}

impl Check for Triangularity {
    fn run<K: Scalars>(&self, k: &K) -> Result<CheckOutcome, Error> {
        let mut out = CheckOutcome::default();
        let trunc = Truncation::new(2 * self.max as u32);
        for a in 0..=self.max {
            for b in 0..=self.max - a {
                for c in 0..=self.max - a - b {
                    out.checked += 1;
                    let v = monomial_to_theta(k, a as u32, b as u32, c as u32, trunc)?;
                    let lead = [a + c, a + b, b + c];
                    let key = format!("B12^{a} B23^{b} B13^{c}");
                    match v.get(&lead) {
                        Some(x) if k.eq(x, &k.one()) => {}
                        other => {
                            let got = other.map(|x| k.render(x)).unwrap_or_else(|| "0".into());
                            out.failures.push(Failure::new(format!("{key} diagonal {}", label(Basis::Theta, lead)), got, "1"));
                        }
                    }
                    if let Some(t) = v.entries.keys().find(|t| **t > lead) {
                        out.failures.push(Failure::new(format!("{key} above diagonal {}", label(Basis::Theta, *t)), "nonzero", "0"));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// The monomial-to-theta matrix, ordered by (a+c, a+b, b+c), is upper triangular with unit
/// diagonal for a+b+c ≤ max.
pub fn verify_triangularity(max: u32, mode: &Mode) -> VerificationReport {
    run_check("triangularity", mode, &["s"], &Triangularity { max: max as i64 })
}

struct PathProperty {
    max: i64,
}

impl Check for PathProperty {
    fn run<K: Scalars>(&self, k: &K) -> Result<CheckOutcome, Error> {
        let mut out = CheckOutcome::default();
        for x in 0..=self.max {
            for y in 0..=self.max {
                for d in 0..=self.max {
                    out.checked += 1;
                    let t = [x + d, y + d, x + y];
                    let trunc = Truncation::new(4 * (x + y + d) as u32);
                    let mut v = SkeinVector::basis_element(k, Basis::Theta, t)?;
                    let mut remaining = x + y + d;
                    for (lp, n) in [(Loop::B12, d), (Loop::B13, x), (Loop::B23, y)] {
                        for _ in 0..n {
                            v = ThetaAction.apply(k, lp, &v, trunc)?;
                            remaining -= 1;
                            // A B-loop lowers i+j+k by at most 2, so deeper terms cannot
                            // contribute to the n(0,0,0) coefficient.
                            v.entries.retain(|key, _| key.iter().sum::<i64>() <= 2 * remaining);
                        }
                    }
                    if v.get(&[0, 0, 0]).is_none() {
                        out.failures.push(Failure::new(format!("from {}", label(Basis::Theta, t)), "0", "nonzero n(0,0,0)"));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// B23^y B13^x B12^d n(x+d, y+d, x+y) reaches n(0,0,0) for x, y, d ≤ max.
pub fn verify_path_property(max: u32, mode: &Mode) -> VerificationReport {
    run_check("irreducibility path", mode, &["s"], &PathProperty { max: max as i64 })
}

/// Identities that must fail; each report is renamed `control: ...` and `passed()` on the
/// returned report means the control failed as expected.
pub fn negative_controls(region: Truncation) -> Vec<VerificationReport> {
    let mode = Mode::Exact;
    let mut out = Vec::new();
    let mut push = |name: &str, reports: Vec<VerificationReport>| {
        let r = combine(name, &mode, reports);
        let mut c = VerificationReport::new(format!("control: {name}"), mode.clone());
        c.checked = r.checked;
        c.note(format!("underlying failures: {}", r.failure_count));
        if r.passed() {
            c.fail(Failure::new(name, "identity held", "identity fails"));
        }
        out.push(c);
    };
    let drop_k = DumbbellAction::new(DumbbellVariant::DropK);
    push("sigma04 without the K constant", verify_sigma04_with(region, &mode, &drop_k, CasimirReading::Boundary));
    push(
        "sigma04 casimir with p4 := p1",
        verify_sigma04_with(region, &mode, &DumbbellAction::default(), CasimirReading::Literal)
            .into_iter()
            .filter(|r| r.name.contains("casimir"))
            .collect(),
    );
    let printed = DumbbellAction::new(DumbbellVariant::PrintedLower);
    push("sigma11 with the printed dumbbell lower coefficient", run_specs(&sigma11_specs(Side::Left, Basis::Dumbbell, region, &mode, 1), &printed));
    push("sigma11 with y3 from [y1,y2]_{s^2}", run_specs(&sigma11_specs(Side::Left, Basis::Theta, region, &mode, 2), &ThetaAction));
    let doubled: Vec<RelationCheckSpec> = dehn_specs(region, &mode)
        .into_iter()
        .take(1)
        .map(|mut s| {
            s.rhs = s.rhs.scale(RatFunc::from_int(2));
            s
        })
        .collect();
    push("dehn word = 2 B13", run_specs(&doubled, &ThetaAction));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma11_small() {
        for side in [Side::Left, Side::Right] {
            for basis in [Basis::Theta, Basis::Dumbbell] {
                for r in verify_sigma11(side, Truncation::new(6), basis, &Mode::Exact) {
                    assert!(r.passed(), "{}", r.summary());
                }
            }
        }
    }

    #[test]
    fn sigma04_small() {
        for r in verify_sigma04(Truncation::new(6), &Mode::Exact) {
            assert!(r.passed(), "{}", r.summary());
        }
    }

    #[test]
    fn dehn_small() {
        for r in verify_dehn(Truncation::new(6), &Mode::Exact) {
            assert!(r.passed(), "{}", r.summary());
        }
    }

    #[test]
    fn controls_fail() {
        for r in negative_controls(Truncation::new(8)) {
            assert!(r.passed(), "{}", r.summary());
        }
    }

    #[test]
    fn structural_small() {
        assert!(verify_triangularity(4, &Mode::Exact).passed());
        assert!(verify_path_property(2, &Mode::Exact).passed());
    }
}
