//! Acceptance gate: one test per criterion, each printing a pass/fail line
//! with the measured numbers before asserting.

use fluxtrace::acceptance::run_one;

fn check(id: u32) {
    let r = run_one(id);
    println!(
        "criterion {} [{}]: {} — {}",
        r.id,
        r.name,
        if r.pass { "PASS" } else { "FAIL" },
        r.detail
    );
    assert!(r.pass, "criterion {} [{}] failed: {}", r.id, r.name, r.detail);
}

#[test]
fn criterion_1_cosine_law() {
    check(1);
}

#[test]
fn criterion_2_absolute_coefficient() {
    check(2);
}

#[test]
fn criterion_3_side_sign_discrimination() {
    check(3);
}

#[test]
fn criterion_4_torus_peak_weights() {
    check(4);
}

#[test]
fn criterion_5_frame_and_beam_suite() {
    check(5);
}

#[test]
fn criterion_6_spectral_solver_suite() {
    check(6);
}

#[test]
fn criterion_7_length_isolation() {
    check(7);
}

#[test]
fn criterion_8_planted_model_recovery() {
    check(8);
}
