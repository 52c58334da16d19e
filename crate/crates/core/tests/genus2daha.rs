use g2skein::exactalg::{qint, Exact, RatFunc, Scalars};
use g2skein::genus2daha::{alpha_closed, c_coeff, verify_alpha, verify_c_relations, verify_correspondence, QTParams};
use g2skein::opexpr::Mode;
use g2skein::skeinmod::{d_coeff, Basis};

#[test]
fn correspondence_to_bound_20() {
    let r = verify_correspondence(20, &Mode::Exact);
    assert!(r.passed(), "{}", r.summary());
}

#[test]
fn alpha_to_bound_30() {
    let r = verify_alpha(30, &Mode::Exact);
    assert!(r.passed(), "{}", r.summary());
}

#[test]
fn c_relations_to_bound_20() {
    let r = verify_c_relations(20, &Mode::Exact);
    assert!(r.passed(), "{}", r.summary());
}

// Independent transcription: the B12 term at the origin assembled by hand.
#[test]
fn b12_at_origin_by_hand() {
    let c = c_coeff(1, 1, 0, 0, 0, &QTParams::t_equals_q());
    let alpha = Exact.qprod(&alpha_closed([1, 1, 0]).unwrap()).unwrap();
    assert_eq!(alpha, RatFunc::from_poly(qint(2)).neg());
    let d = c.mul(&alpha).neg();
    assert!(d.is_one());
    assert_eq!(d, d_coeff(1, 1, 0, 0, 0));
}

#[test]
fn alpha_never_vanishes() {
    for t in Basis::Theta.elements(16) {
        assert!(!Exact.qprod(&alpha_closed(t).unwrap()).unwrap().is_zero(), "{t:?}");
    }
}
