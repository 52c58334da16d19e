use g2skein::daharep::{
    daha_control, intertwiner_sigma04, intertwiner_sigma11, leonard_check, leonard_control, puncture_control, verify_a1_coherence,
    verify_block_coverage, verify_daha_relations, verify_puncture_relation, verify_structure_constants, DahaParams,
};
use g2skein::opexpr::{Mode, VerificationReport};

fn ok(r: &VerificationReport) {
    assert!(r.passed(), "{}: {:?} {:?}", r.summary(), r.failures.first(), r.error);
    assert!(r.checked > 0, "{} checked nothing", r.name);
}

#[test]
fn relations_exact_at_block_parameters() {
    for i in 0..=4 {
        for k in 0..=4 {
            ok(&verify_daha_relations(&DahaParams::eq_params(i, k), 8, &Mode::Exact));
        }
    }
}

#[test]
fn relations_probabilistic_in_generic_parameters() {
    let mode = Mode::probabilistic(25, 2024);
    ok(&verify_daha_relations(&DahaParams::symbolic(), 8, &mode));
    ok(&daha_control(8, &Mode::probabilistic(3, 2024)));
}

#[test]
fn structure_constants_symbolic() {
    ok(&verify_structure_constants(&DahaParams::symbolic(), &Mode::Exact));
    ok(&verify_a1_coherence(6, &Mode::Exact));
    ok(&verify_puncture_relation(6, &Mode::probabilistic(10, 7)));
    ok(&puncture_control(6, &Mode::probabilistic(3, 7)));
}

#[test]
fn sigma11_intertwiners() {
    for j in (0..=8).step_by(2) {
        for k in j / 2..=8 {
            ok(&intertwiner_sigma11(j, k, 10, &Mode::Exact));
        }
    }
}

#[test]
fn sigma04_intertwiners() {
    for i in 0..=6 {
        for k in 0..=6 {
            ok(&intertwiner_sigma04(i, k, &Mode::Exact));
        }
    }
}

#[test]
fn leonard_pairs() {
    for i in 0..=8 {
        for k in 0..=8 {
            ok(&leonard_check(i, k, 1.17, 1e-8));
        }
    }
    ok(&leonard_control(3, 3));
    ok(&verify_block_coverage(16, &Mode::Exact));
}
