//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::tables::{compare_all, expected_pairs, Field, Symbolic};
use common::{qint_by_terms, unknot};
use g2skein::daharep::{
    daha_control, intertwiner_sigma04, intertwiner_sigma11, leonard_check, leonard_control, puncture_control, verify_a1_coherence,
    verify_block_coverage, verify_daha_relations, verify_puncture_relation, verify_structure_constants, DahaParams,
};
use g2skein::exactalg::{default_prime, Exact, RatFunc};
use g2skein::genus2daha::{verify_alpha, verify_c_relations, verify_correspondence};
use g2skein::opexpr::{
    jones, negative_controls, parse_expr, verify_commutation, verify_dehn, verify_path_property, verify_sigma04, verify_sigma11,
    verify_triangularity, Failure, Mode, Side, VerificationReport,
};
use g2skein::skeinmod::{eval_map, Basis, Truncation};

const SEED: u64 = 2024;
const TABLE_BOUND: i64 = 16;

struct Criterion {
    number: u32,
    title: &'static str,
    reports: Vec<VerificationReport>,
    elapsed: Duration,
    limit: Option<Duration>,
}

impl Criterion {
    fn run(number: u32, title: &'static str, limit: Option<Duration>, body: impl FnOnce() -> Vec<VerificationReport>) -> Self {
        let start = Instant::now();
        let reports = body();
        Criterion { number, title, reports, elapsed: start.elapsed(), limit }
    }

    fn passed(&self) -> bool {
        !self.reports.is_empty()
            && self.reports.iter().all(|r| r.passed() && r.checked > 0)
            && self.limit.is_none_or(|l| self.elapsed <= l)
    }

    fn print(&self) {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let checked: usize = self.reports.iter().map(|r| r.checked).sum();
        let failures: usize = self.reports.iter().map(|r| r.failure_count).sum();
        println!(
            "{status} criterion {}: {} (reports {}, checked {checked}, failures {failures}, {:.1}s)",
            self.number,
            self.title,
            self.reports.len(),
            self.elapsed.as_secs_f64()
        );
        if let Some(l) = self.limit.filter(|l| self.elapsed > *l) {
            println!("    over the time limit of {}s", l.as_secs());
        }
        for r in self.reports.iter().filter(|r| !r.passed() || r.checked == 0) {
            println!("    {}", r.summary());
            for f in r.failures.iter().take(3) {
                println!("      {}: {} vs {}", f.key, f.lhs, f.rhs);
            }
        }
    }
}

fn report(name: &str, mode: Mode, checked: usize, failures: Vec<String>) -> VerificationReport {
    let mut r = VerificationReport::new(name, mode);
    r.checked = checked;
    for f in failures {
        r.fail(Failure::new(f, "", ""));
    }
    r
}

fn tables_exact() -> VerificationReport {
    let (n, bad) = compare_all(&Exact, &Symbolic, TABLE_BOUND);
    let mut r = report("loop tables, exact", Mode::Exact, n, bad);
    if n != expected_pairs(TABLE_BOUND) {
        r.error = Some(format!("compared {n} pairs, expected {}", expected_pairs(TABLE_BOUND)));
    }
    r
}

fn tables_probabilistic(points: u32, seed: u64) -> VerificationReport {
    let p = default_prime();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = VerificationReport::new("loop tables", Mode::probabilistic(points, seed));
    for _ in 0..points {
        let (f, ctx) = Field::at(p, rng.gen_range(2..p));
        let (n, bad) = compare_all(&ctx, &f, TABLE_BOUND);
        out.absorb(report("loop tables at a random point", Mode::probabilistic(points, seed), n, bad));
    }
    out
}

fn criteria_2_to_4(mode: &Mode) -> Vec<VerificationReport> {
    let mut out = Vec::new();
    for side in [Side::Left, Side::Right] {
        for basis in [Basis::Theta, Basis::Dumbbell] {
            out.extend(verify_sigma11(side, Truncation::new(12), basis, mode));
        }
    }
    out.extend(verify_sigma04(Truncation::new(12), mode));
    out.extend(verify_dehn(Truncation::new(10), mode));
    out.push(verify_correspondence(20, mode));
    out.push(verify_alpha(30, mode));
    out.push(verify_c_relations(20, mode));
    out
}

fn jones_values() -> Vec<VerificationReport> {
    let mut r = VerificationReport::new("jones values", Mode::Exact);
    for text in ["A1", "B13"] {
        r.checked += 1;
        match parse_expr(text).map_err(|e| e.to_string()).and_then(|e| jones(&e, Truncation::new(8)).map_err(|e| e.to_string())) {
            Ok(v) if v.equals(&unknot()) => {}
            Ok(v) => r.fail(Failure::new(format!("jones({text})"), v.to_string(), unknot().to_string())),
            Err(e) => r.fail(Failure::new(format!("jones({text})"), e, unknot().to_string())),
        }
    }
    for a in 0..=10i64 {
        r.checked += 1;
        let want = qint_by_terms(a + 1).mul(&RatFunc::from_int(if a % 2 == 0 { 1 } else { -1 }));
        match eval_map(&Exact, [a, a, 0]) {
            Ok(v) if v.equals(&want) => {}
            Ok(v) => r.fail(Failure::new(format!("ev(n({a},{a},0))"), v.to_string(), want.to_string())),
            Err(e) => r.fail(Failure::new(format!("ev(n({a},{a},0))"), e.to_string(), want.to_string())),
        }
    }
    vec![r]
}

fn main() -> ExitCode {
    let start = Instant::now();
    let exact = Mode::Exact;
    let mut criteria = Vec::new();
    let mut record = |c: Criterion| {
        c.print();
        criteria.push(c.passed());
    };

    record(Criterion::run(1, "loop-action tables against the oracle, index sum <= 16", Some(Duration::from_secs(120)), || {
        vec![tables_exact()]
    }));
    record(Criterion::run(2, "sigma11 and sigma04 presentations at truncation 12, K-dropped control fails", None, || {
        let mut out = Vec::new();
        for side in [Side::Left, Side::Right] {
            for basis in [Basis::Theta, Basis::Dumbbell] {
                out.extend(verify_sigma11(side, Truncation::new(12), basis, &exact));
            }
        }
        out.extend(verify_sigma04(Truncation::new(12), &exact));
        out.extend(negative_controls(Truncation::new(12)).into_iter().filter(|r| r.name.contains("without the K constant")));
        out
    }));
    record(Criterion::run(3, "Dehn-twist word equals B13 at truncation 10", None, || verify_dehn(Truncation::new(10), &exact)));
    record(Criterion::run(4, "AS correspondence to 20, alpha to 30, C relations to 20", None, || {
        vec![verify_correspondence(20, &exact), verify_alpha(30, &exact), verify_c_relations(20, &exact)]
    }));
    record(Criterion::run(5, "DAHA polynomial representation relations and structure constants", None, || {
        let mut out = Vec::new();
        for i in 0..=4 {
            for k in 0..=4 {
                out.push(verify_daha_relations(&DahaParams::eq_params(i, k), 8, &exact));
            }
        }
        out.push(verify_daha_relations(&DahaParams::symbolic(), 8, &Mode::probabilistic(25, SEED)));
        out.push(verify_structure_constants(&DahaParams::symbolic(), &exact));
        out.push(verify_a1_coherence(6, &exact));
        out.push(verify_puncture_relation(6, &Mode::probabilistic(10, SEED)));
        out.push(daha_control(8, &Mode::probabilistic(3, SEED)));
        out.push(puncture_control(6, &Mode::probabilistic(3, SEED)));
        out
    }));
    record(Criterion::run(6, "intertwiners onto the dumbbell module", None, || {
        let mut out = Vec::new();
        for j in (0..=8).step_by(2) {
            for k in j / 2..=8 {
                out.push(intertwiner_sigma11(j, k, 10, &exact));
            }
        }
        for i in 0..=6 {
            for k in 0..=6 {
                out.push(intertwiner_sigma04(i, k, &exact));
            }
        }
        out.push(verify_block_coverage(16, &exact));
        out
    }));
    record(Criterion::run(7, "Leonard pairs on V(i,k) for i,k <= 8 at s = 1.17, tol 1e-8", None, || {
        let mut out: Vec<_> = (0..=8).flat_map(|i| (0..=8).map(move |k| leonard_check(i, k, 1.17, 1e-8))).collect();
        out.push(leonard_control(3, 3));
        out
    }));
    record(Criterion::run(8, "Jones values of the unknot and colored unknots", None, jones_values));
    record(Criterion::run(9, "triangularity, path property, disjoint-curve commutation", None, || {
        let mut out = vec![verify_triangularity(6, &exact), verify_path_property(4, &exact)];
        out.extend(verify_commutation(Truncation::new(12), &exact));
        out
    }));
    let elapsed = start.elapsed();
    record(Criterion::run(10, "criteria 1-4 in probabilistic mode, 10 points, fixed seed", None, || {
        let mode = Mode::probabilistic(10, SEED);
        let mut out = vec![tables_probabilistic(10, SEED)];
        out.extend(criteria_2_to_4(&mode));
        out
    }));
    let total = start.elapsed();
    let within = total <= Duration::from_secs(15 * 60);
    println!(
        "total wall time {:.1}s (exact criteria {:.1}s), limit 900s: {}",
        total.as_secs_f64(),
        elapsed.as_secs_f64(),
        if within { "ok" } else { "exceeded" }
    );
    let passed = criteria.iter().filter(|p| **p).count();
    println!("{passed}/{} criteria passed", criteria.len());
    if passed == criteria.len() && within {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
