use g2skein::opexpr::{
    negative_controls, verify_commutation, verify_dehn, verify_path_property, verify_sigma04, verify_sigma11,
    verify_triangularity, Mode, Side,
};
use g2skein::skeinmod::{Basis, Truncation};

fn all_pass(reports: Vec<g2skein::opexpr::VerificationReport>) {
    assert!(!reports.is_empty());
    for r in reports {
        assert!(r.passed(), "{}", r.summary());
        assert!(r.checked > 0, "{}", r.name);
    }
}

#[test]
fn sigma11_both_sides_both_bases() {
    for side in [Side::Left, Side::Right] {
        for basis in [Basis::Theta, Basis::Dumbbell] {
            all_pass(verify_sigma11(side, Truncation::new(12), basis, &Mode::Exact));
        }
    }
}

#[test]
fn sigma04_with_casimir() {
    all_pass(verify_sigma04(Truncation::new(12), &Mode::Exact));
}

#[test]
fn dehn_word_is_b13() {
    all_pass(verify_dehn(Truncation::new(10), &Mode::Exact));
}

#[test]
fn commutation() {
    all_pass(verify_commutation(Truncation::new(12), &Mode::Exact));
}

#[test]
fn structural() {
    all_pass(vec![verify_triangularity(6, &Mode::Exact), verify_path_property(4, &Mode::Exact)]);
}

#[test]
fn controls_fail() {
    all_pass(negative_controls(Truncation::new(8)));
}

#[test]
fn probabilistic_agrees() {
    let mode = Mode::probabilistic(10, 2024);
    all_pass(verify_sigma04(Truncation::new(10), &mode));
    all_pass(verify_dehn(Truncation::new(10), &mode));
}

