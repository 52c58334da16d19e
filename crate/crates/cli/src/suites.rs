//! Commands as calls into the library, and the verification suites.

use clap::{Args, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use g2skein::daharep::{
    daha_control, intertwiner_sigma04, intertwiner_sigma11, leonard_check, leonard_control, puncture_control, verify_a1_coherence,
    verify_block_coverage, verify_daha_relations, verify_puncture_relation, verify_structure_constants, DahaParams,
};
use g2skein::exactalg::{Exact, RatFunc, Scalars};
use g2skein::genus2daha::{verify_alpha, verify_c_relations, verify_correspondence, PsiAction, QTParams};
use g2skein::opexpr::{
    jones, negative_controls, parse_expr, sigma11_specs, verify_commutation, verify_dehn, verify_identity_with, verify_path_property,
    verify_sigma04_with, verify_sigma11, verify_triangularity, CasimirReading, Failure, Mode, OperatorExpr, Side, VerificationReport,
};
use g2skein::skeinmod::{
    chebyshev_apply, eval_map, monomial_to_theta, Basis, DumbbellAction, DumbbellVariant, Loop, LoopAction, SkeinVector,
    ThetaAction, Triple, Truncation,
};

use crate::{Global, ModeArg};

pub fn truncation(t: Option<u32>, default: u32) -> Truncation {
    Truncation::new(t.unwrap_or(default))
}

fn parse(op: &str) -> Result<OperatorExpr, String> {
    parse_expr(op).map_err(|e| e.to_string())
}

fn act<A: LoopAction>(action: &A, op: &str, state: Triple, trunc: Truncation) -> Result<SkeinVector<RatFunc>, String> {
    let expr = parse(op)?;
    let v = SkeinVector::basis_element(&Exact, action.basis(), state).map_err(|e| e.to_string())?;
    expr.apply(&Exact, action, &v, trunc).map_err(|e| e.to_string())
}

pub fn act_theta(op: &str, state: Triple, trunc: Truncation) -> Result<SkeinVector<RatFunc>, String> {
    act(&ThetaAction, op, state, trunc)
}

pub fn act_dumbbell(op: &str, state: Triple, trunc: Truncation) -> Result<SkeinVector<RatFunc>, String> {
    act(&DumbbellAction::default(), op, state, trunc)
}

pub fn act_psi(op: &str, state: Triple, trunc: Truncation, symbolic: bool) -> Result<SkeinVector<RatFunc>, String> {
    let action = if symbolic { PsiAction::with_params(QTParams::symbolic()) } else { PsiAction::t_equals_q() };
    act(&action, op, state, trunc)
}

pub fn jones_value(text: &str, trunc: Truncation) -> Result<RatFunc, String> {
    jones(&parse(text)?, trunc).map_err(|e| e.to_string())
}

pub fn convert_monomial(key: Triple, trunc: Truncation) -> Result<SkeinVector<RatFunc>, String> {
    let [a, b, c] = key;
    if a < 0 || b < 0 || c < 0 {
        return Err("monomial exponents must be nonnegative".into());
    }
    monomial_to_theta(&Exact, a as u32, b as u32, c as u32, trunc).map_err(|e| e.to_string())
}

pub fn convert_chebyshev(gen: &str, n: u32, trunc: Truncation) -> Result<SkeinVector<RatFunc>, String> {
    let lp: Loop = gen.parse()?;
    chebyshev_apply(&Exact, n, lp, trunc).map_err(|e| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Surface {
    Sigma11Left,
    Sigma11Right,
    Sigma04,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkeinBasis {
    N,
    M,
}

impl SkeinBasis {
    fn basis(self) -> Basis {
        match self {
            SkeinBasis::N => Basis::Theta,
            SkeinBasis::M => Basis::Dumbbell,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IntertwinerSurface {
    Sigma11,
    Sigma04,
}

#[derive(Subcommand, Debug)]
pub enum Suite {
    /// Presentation relations of a subsurface algebra.
    Relations(RelationsArgs),
    /// The Dehn-twist commutator word against B13.
    Dehn,
    /// Loop actions against the genus-2 DAHA operators at t = q.
    AsCorrespondence(BoundArgs<20>),
    /// The alpha recursion, its well-definedness and its closed form.
    Alpha(BoundArgs<30>),
    /// Identities among the C coefficients.
    CRelations(BoundArgs<20>),
    /// Relations of the polynomial representation of the rank-1 DAHA.
    Daha(DahaArgs),
    /// Intertwiners from polynomial representations onto the dumbbell module.
    Intertwiner(IntertwinerArgs),
    /// Leonard pairs on the finite blocks V(i,k).
    Leonard(LeonardArgs),
    /// Commutation of loops on disjoint curves.
    Commutation,
    /// Unit triangularity of the monomial basis and the irreducibility path.
    Triangularity(TriangularityArgs),
    /// Identities that must fail; exact mode only.
    NegativeControls,
    /// Every suite above.
    All,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct RelationsArgs {
    #[arg(long, value_enum)]
    pub surface: Surface,
    /// Basis for the one-holed torus relations; the four-holed sphere uses m.
    #[arg(long, value_enum)]
    pub basis: Option<SkeinBasis>,
    /// Use the dumbbell action with the K constant removed from the A2 diagonal.
    #[arg(long)]
    pub drop_k: bool,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct BoundArgs<const D: u32> {
    #[arg(long, default_value_t = D)]
    pub bound: u32,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct DahaArgs {
    /// Laurent degree of the test polynomials.
    #[arg(long, default_value_t = 8)]
    pub degree: u32,
    /// Sample points for the generic-parameter check.
    #[arg(long, default_value_t = 25)]
    pub trials: u32,
    /// Largest i at the block parameters.
    #[arg(long, default_value_t = 4)]
    pub imax: i64,
    /// Largest k at the block parameters.
    #[arg(long, default_value_t = 4)]
    pub kmax: i64,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct IntertwinerArgs {
    #[arg(long, value_enum)]
    pub surface: IntertwinerSurface,
    #[arg(long, default_value_t = 8)]
    pub jmax: i64,
    #[arg(long, default_value_t = 6)]
    pub imax: i64,
    /// Defaults to 8 for sigma11 and 6 for sigma04.
    #[arg(long)]
    pub kmax: Option<i64>,
    #[arg(long, default_value_t = 10)]
    pub degree: u32,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct LeonardArgs {
    #[arg(long, default_value_t = 8)]
    pub imax: i64,
    #[arg(long, default_value_t = 8)]
    pub kmax: i64,
    #[arg(long, default_value_t = 1.17)]
    pub s: f64,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
}

#[derive(Args, Debug, Clone, Serialize)]
pub struct TriangularityArgs {
    /// Bound on a+b+c for the monomial matrix.
    #[arg(long, default_value_t = 6)]
    pub max: u32,
    /// Bound on x, y, d for the path property.
    #[arg(long, default_value_t = 4)]
    pub path_max: u32,
}

/// Everything a suite produced, in output order.
#[derive(Serialize)]
pub struct SuiteRun {
    pub suite: String,
    pub identities: Vec<VerificationReport>,
    pub config: Value,
}

impl SuiteRun {
    pub fn passed(&self) -> bool {
        !self.identities.is_empty() && self.identities.iter().all(VerificationReport::passed)
    }
}

fn relations(a: &RelationsArgs, trunc: Truncation, mode: &Mode) -> Result<Vec<VerificationReport>, String> {
    let action = DumbbellAction::new(if a.drop_k { DumbbellVariant::DropK } else { DumbbellVariant::Standard });
    Ok(match a.surface {
        Surface::Sigma04 => {
            if a.basis == Some(SkeinBasis::N) {
                return Err("the four-holed sphere relations act on the m basis".into());
            }
            verify_sigma04_with(trunc, mode, &action, CasimirReading::Boundary)
        }
        Surface::Sigma11Left | Surface::Sigma11Right => {
            let side = if a.surface == Surface::Sigma11Left { Side::Left } else { Side::Right };
            let bases = match a.basis {
                Some(b) => vec![b],
                None => vec![SkeinBasis::N, SkeinBasis::M],
            };
            let mut out = Vec::new();
            for b in bases {
                match (b, a.drop_k) {
                    (SkeinBasis::M, true) => {
                        out.extend(sigma11_specs(side, Basis::Dumbbell, trunc, mode, 1).iter().map(|s| verify_identity_with(s, &action)))
                    }
                    (SkeinBasis::N, true) => return Err("--drop-k applies to the m basis".into()),
                    _ => out.extend(verify_sigma11(side, trunc, b.basis(), mode)),
                }
            }
            out
        }
    })
}

fn daha(a: &DahaArgs, mode: &Mode, seed: u64, prime: u64) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for i in 0..=a.imax {
        for k in 0..=a.kmax {
            out.push(verify_daha_relations(&DahaParams::eq_params(i, k), a.degree, mode));
        }
    }
    let generic = Mode::Probabilistic { points: a.trials, prime, seed };
    out.push(verify_daha_relations(&DahaParams::symbolic(), a.degree, &generic));
    out.push(verify_structure_constants(&DahaParams::symbolic(), &Mode::Exact));
    out.push(verify_a1_coherence(6, mode));
    out.push(verify_puncture_relation(6, &generic));
    out
}

fn intertwiner(a: &IntertwinerArgs, mode: &Mode) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    match a.surface {
        IntertwinerSurface::Sigma11 => {
            for j in (0..=a.jmax).step_by(2) {
                for k in j / 2..=a.kmax.unwrap_or(8) {
                    out.push(intertwiner_sigma11(j, k, a.degree, mode));
                }
            }
        }
        IntertwinerSurface::Sigma04 => {
            let kmax = a.kmax.unwrap_or(6);
            for i in 0..=a.imax {
                for k in 0..=kmax {
                    out.push(intertwiner_sigma04(i, k, mode));
                }
            }
            out.push(verify_block_coverage(2 * a.imax.max(kmax) as u32 + 4, mode));
        }
    }
    out
}

fn leonard(a: &LeonardArgs) -> Vec<VerificationReport> {
    (0..=a.imax).flat_map(|i| (0..=a.kmax).map(move |k| leonard_check(i, k, a.s, a.tol))).collect()
}

fn triangularity(a: &TriangularityArgs, mode: &Mode) -> Vec<VerificationReport> {
    vec![verify_triangularity(a.max, mode), verify_path_property(a.path_max, mode)]
}

/// Unknot and colored-unknot values of the evaluation map.
fn jones_checks() -> VerificationReport {
    let mut r = VerificationReport::new("jones values", Mode::Exact);
    let unknot = RatFunc::s_pow(2).add(&RatFunc::s_pow(-2)).neg();
    for text in ["A1", "B13"] {
        r.checked += 1;
        match jones_value(text, Truncation::new(8)) {
            Ok(v) if v.equals(&unknot) => {}
            Ok(v) => r.fail(Failure::new(format!("jones({text})"), v.to_string(), unknot.to_string())),
            Err(e) => r.fail(Failure::new(format!("jones({text})"), e, unknot.to_string())),
        }
    }
    for a in 0..=10 {
        r.checked += 1;
        let sign = RatFunc::from_int(if a % 2 == 0 { 1 } else { -1 });
        let want = Exact.qint(a + 1).mul(&sign);
        match eval_map(&Exact, [a, a, 0]) {
            Ok(v) if v.equals(&want) => {}
            Ok(v) => r.fail(Failure::new(format!("ev(n({a},{a},0))"), v.to_string(), want.to_string())),
            Err(e) => r.fail(Failure::new(format!("ev(n({a},{a},0))"), e.to_string(), want.to_string())),
        }
    }
    r
}

fn controls(trunc: Truncation) -> Vec<VerificationReport> {
    let mut out = negative_controls(trunc);
    out.push(daha_control(4, &Mode::Exact));
    out.push(puncture_control(4, &Mode::Exact));
    out.push(leonard_control(3, 3));
    out
}

fn mode_json(mode: &Mode) -> Value {
    serde_json::to_value(mode).expect("mode serializes")
}

pub fn run_suite(suite: &Suite, g: &Global) -> Result<SuiteRun, String> {
    let prime = g.prime()?;
    let exact_default = || g.mode(ModeArg::Exact);
    let (name, identities, config) = match suite {
        Suite::Relations(a) => {
            let (mode, trunc) = (exact_default()?, truncation(g.trunc, 12));
            let config = json!({"trunc": trunc.bound, "mode": mode_json(&mode), "relations": a});
            ("relations", relations(a, trunc, &mode)?, config)
        }
        Suite::Dehn => {
            let (mode, trunc) = (exact_default()?, truncation(g.trunc, 10));
            ("dehn", verify_dehn(trunc, &mode), json!({"trunc": trunc.bound, "mode": mode_json(&mode)}))
        }
        Suite::AsCorrespondence(a) => {
            let mode = exact_default()?;
            ("as-correspondence", vec![verify_correspondence(a.bound, &mode)], json!({"bound": a.bound, "mode": mode_json(&mode)}))
        }
        Suite::Alpha(a) => {
            let mode = exact_default()?;
            ("alpha", vec![verify_alpha(a.bound, &mode)], json!({"bound": a.bound, "mode": mode_json(&mode)}))
        }
        Suite::CRelations(a) => {
            let mode = exact_default()?;
            ("c-relations", vec![verify_c_relations(a.bound, &mode)], json!({"bound": a.bound, "mode": mode_json(&mode)}))
        }
        Suite::Daha(a) => {
            let mode = g.mode(ModeArg::Prob)?;
            let config = json!({"mode": mode_json(&mode), "seed": g.seed, "prime": prime, "daha": a});
            ("daha", daha(a, &mode, g.seed, prime), config)
        }
        Suite::Intertwiner(a) => {
            let mode = exact_default()?;
            ("intertwiner", intertwiner(a, &mode), json!({"mode": mode_json(&mode), "intertwiner": a}))
        }
        Suite::Leonard(a) => {
            if a.s <= 1.0 || a.tol <= 0.0 {
                return Err("need --s > 1 and --tol > 0".into());
            }
            ("leonard", leonard(a), json!({"mode": "exact", "leonard": a}))
        }
        Suite::Commutation => {
            let (mode, trunc) = (exact_default()?, truncation(g.trunc, 12));
            ("commutation", verify_commutation(trunc, &mode), json!({"trunc": trunc.bound, "mode": mode_json(&mode)}))
        }
        Suite::Triangularity(a) => {
            let mode = exact_default()?;
            ("triangularity", triangularity(a, &mode), json!({"mode": mode_json(&mode), "triangularity": a}))
        }
        Suite::NegativeControls => {
            if g.mode == Some(ModeArg::Prob) {
                return Err("negative controls run in exact mode only".into());
            }
            let trunc = truncation(g.trunc, 8);
            ("negative-controls", controls(trunc), json!({"trunc": trunc.bound, "mode": "exact"}))
        }
        Suite::All => {
            let (mode, trunc) = (exact_default()?, truncation(g.trunc, 12));
            let mut out = Vec::new();
            for surface in [Surface::Sigma11Left, Surface::Sigma11Right, Surface::Sigma04] {
                out.extend(relations(&RelationsArgs { surface, basis: None, drop_k: false }, trunc, &mode)?);
            }
            out.extend(verify_dehn(Truncation::new(trunc.bound.min(10)), &mode));
            out.push(verify_correspondence(20, &mode));
            out.push(verify_alpha(30, &mode));
            out.push(verify_c_relations(20, &mode));
            let d = DahaArgs { degree: 8, trials: 25, imax: 4, kmax: 4 };
            out.extend(daha(&d, &mode, g.seed, prime));
            for surface in [IntertwinerSurface::Sigma11, IntertwinerSurface::Sigma04] {
                out.extend(intertwiner(&IntertwinerArgs { surface, jmax: 8, imax: 6, kmax: None, degree: 10 }, &mode));
            }
            out.extend(leonard(&LeonardArgs { imax: 8, kmax: 8, s: 1.17, tol: 1e-8 }));
            out.extend(verify_commutation(trunc, &mode));
            out.extend(triangularity(&TriangularityArgs { max: 6, path_max: 4 }, &mode));
            out.push(jones_checks());
            if mode.is_exact() {
                out.extend(controls(Truncation::new(8)));
            }
            let config = json!({"trunc": trunc.bound, "mode": mode_json(&mode), "seed": g.seed, "prime": prime});
            ("all", out, config)
        }
    };
    let mut identities = identities;
    identities.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(SuiteRun { suite: name.to_string(), identities, config })
}
