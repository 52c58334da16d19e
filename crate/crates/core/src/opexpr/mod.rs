//! Operator expressions, their parser, and identity verification on the skein module.

mod expr;
mod parse;
mod relations;
mod verify;

pub use expr::{compose, dehn_twist, jones, qcomm, sum, OperatorExpr};
pub use parse::{parse_expr, ParseError};
pub use verify::{
    label, run_check, verify_identity, verify_identity_with, Check, CheckOutcome, Failure, IdentityCheck, Mode,
    RelationCheckSpec, VerificationReport, MAX_FAILURE_SAMPLES,
};
pub use relations::{
    combine, commutation_specs, dehn_specs, negative_controls, sigma04_specs, sigma11_specs, verify_commutation, verify_dehn,
    verify_path_property, verify_sigma04, verify_sigma04_with, verify_sigma11, verify_triangularity, CasimirReading, Side,
};
