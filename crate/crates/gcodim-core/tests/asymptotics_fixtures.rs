//! Synthetic-sequence fixtures for the estimators, built from the model
//! class alpha * n^beta * l^n the theory guarantees.

use gcodim_core::algebra::presets;
use gcodim_core::asymptotics::{
    binomial_growth_check, binomial_inverse, binomial_lift, estimate_alpha, estimate_beta,
    estimate_exponent, filter_sum_check, fit, ln_big, AsymError, Sequence, Window,
};
use gcodim_core::codim::{codim_table, proper_deltas, Budgets};
use gcodim_core::linalg::RankMode;
use num_bigint::BigInt;
use num_traits::{FromPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// round(alpha * n^beta * l^n) for n = 1..=max_n.
fn synth(alpha: f64, beta: f64, l: u64, max_n: u64) -> Vec<BigInt> {
    (1..=max_n)
        .map(|n| {
            let ln_v = alpha.ln() + beta * (n as f64).ln() + n as f64 * (l as f64).ln();
            BigInt::from_f64(ln_v.exp().round()).unwrap()
        })
        .collect()
}

#[test]
fn exponent_from_polynomially_weighted_geometric() {
    // c_n = round(3 n^{3/2} 5^n) on [10, 30] recovers l = 5
    let c = synth(3.0, 1.5, 5, 31);
    let e = estimate_exponent(Sequence::new(&c, 1), Window::new(10, 30)).unwrap();
    assert_eq!(e.l, 5);
    assert!(e.distance < 0.5);
    assert!(e.raw > 5.0, "ratio approaches 5 from above for beta > 0");
}

#[test]
fn beta_from_quadratic_fixture() {
    let c = synth(7.0, 2.0, 3, 40);
    let b = estimate_beta(Sequence::new(&c, 1), 3, Window::new(10, 40)).unwrap();
    assert_eq!(b.beta_num_over_2, 4);
    assert!(!b.ambiguous);
}

#[test]
fn classical_two_generated_profile() {
    // c_n = 2^{n-1} (n-2) + 2: leading term n 2^{n-1}, so l = 2, beta = 1
    let c: Vec<BigInt> = (1..=40u32)
        .map(|n| BigInt::from(2).pow(n - 1) * BigInt::from(n as i64 - 2) + 2)
        .collect();
    let s = Sequence::new(&c, 1);
    let e = estimate_exponent(s, Window::new(15, 40)).unwrap();
    assert_eq!(e.l, 2);
    let b = estimate_beta(s, 2, Window::new(15, 40)).unwrap();
    assert_eq!(b.beta_num_over_2, 2);
}

#[test]
fn alpha_converges_to_pi() {
    let c = synth(core::f64::consts::PI, 0.5, 3, 60);
    let a = estimate_alpha(Sequence::new(&c, 1), 3, 1, Window::new(20, 60)).unwrap();
    let rel = (a.alpha - core::f64::consts::PI).abs() / core::f64::consts::PI;
    assert!(rel < 0.01, "alpha {} off pi by {rel}", a.alpha);
    assert!(!a.nonconvergent);
}

#[test]
fn exact_alpha_for_clean_fixture() {
    let c: Vec<BigInt> = (1..=30u32).map(|n| BigInt::from(4 * n) * BigInt::from(2).pow(n)).collect();
    let a = estimate_alpha(Sequence::new(&c, 1), 2, 2, Window::new(5, 30)).unwrap();
    assert!((a.alpha - 4.0).abs() < 1e-9);
    assert!(a.std_dev < 1e-9);
}

#[test]
fn oscillating_fixture_sets_interval_and_flag() {
    // c_n = (3 + (-1)^n) 2^n swings between 2 * 2^n and 4 * 2^n
    let c: Vec<BigInt> = (1..=40u32)
        .map(|n| BigInt::from(3 + if n % 2 == 0 { 1 } else { -1 }) * BigInt::from(2).pow(n))
        .collect();
    let s = Sequence::new(&c, 1);
    let f = fit(s, Window::new(10, 40), false).unwrap();
    assert_eq!(f.l, 2);
    assert_eq!(f.beta_num_over_2, 0);
    assert!(f.flags.iter().any(|fl| fl == "alpha_nonconvergent" || fl == "beta_ambiguous"),
        "oscillation must raise a flag, got {:?}", f.flags);
    assert!(f.flags.iter().any(|fl| fl == "alpha_interval_only"));
    assert!(f.alpha_lo < 2.2 && f.alpha_lo > 1.8, "alpha_lo {}", f.alpha_lo);
    assert!(f.alpha_hi > 3.8 && f.alpha_hi < 4.2, "alpha_hi {}", f.alpha_hi);
}

#[test]
fn estimators_are_scale_invariant() {
    let c = synth(1.0, 1.0, 4, 45);
    let scaled: Vec<BigInt> = c.iter().map(|v| v * BigInt::from(7)).collect();
    let w = Window::new(12, 45);
    let e1 = estimate_exponent(Sequence::new(&c, 1), w).unwrap();
    let e2 = estimate_exponent(Sequence::new(&scaled, 1), w).unwrap();
    assert_eq!(e1.l, e2.l);
    assert!((e1.raw - e2.raw).abs() < 1e-9);
    let b1 = estimate_beta(Sequence::new(&c, 1), e1.l, w).unwrap();
    let b2 = estimate_beta(Sequence::new(&scaled, 1), e2.l, w).unwrap();
    assert_eq!(b1.beta_num_over_2, b2.beta_num_over_2);
}

#[test]
fn mixed_zero_window_is_rejected() {
    let c: Vec<BigInt> = [1, 0, 2, 4, 8, 16].iter().map(|&v| BigInt::from(v)).collect();
    match estimate_exponent(Sequence::new(&c, 1), Window::new(1, 6)) {
        Err(AsymError::NonPositiveWindow { n: 2 }) => {}
        other => panic!("expected NonPositiveWindow at n = 2, got {other:?}"),
    }
}

#[test]
fn binomial_transforms_roundtrip_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..20 {
        let len = rng.gen_range(3..=12usize);
        let delta: Vec<BigInt> = (0..len).map(|_| BigInt::from(rng.gen_range(0..=50u32))).collect();
        let lifted = binomial_lift(&delta);
        assert_eq!(binomial_inverse(&lifted), delta);
    }
}

#[test]
fn filter_examples_from_small_cases() {
    let f = filter_sum_check(2, 0, 10, 0, 1.0);
    assert!((f.direct - 512.0).abs() < 1e-9);
    assert!(f.rel_err < 1e-10);

    let f = filter_sum_check(3, 1, 12, 2, 2.0);
    assert!(f.rel_err < 1e-9, "rel_err = {}", f.rel_err);
    let (direct, filtered) = f.exact.unwrap();
    assert_eq!(direct, filtered);

    let f = filter_sum_check(4, 3, 20, -1, 2.0);
    assert!(f.rel_err < 1e-9, "rel_err = {}", f.rel_err);
    assert!(f.exact.is_none(), "half-integer beta has no exact path");
}

#[test]
fn growth_ratio_stabilizes_for_negative_beta() {
    let rs = binomial_growth_check(-3, 3.0, &[1000, 2000]);
    let r1000 = rs[0].1;
    let r2000 = rs[1].1;
    assert!((r2000 / r1000 - 1.0).abs() < 0.01, "r1000 {r1000} r2000 {r2000}");
}

#[test]
fn lifted_delta_tail_shifts_exponent_by_one() {
    // the merged-regime consistency of the delta route: refitting the lifted
    // delta sequence returns one plus the delta exponent
    let budgets = Budgets::default();
    for (spec, max_n) in [(presets::field(), 6u64), (presets::group_algebra_z2(), 6)] {
        let table = codim_table(&spec, max_n, &budgets, RankMode::Modular).unwrap();
        let deltas = proper_deltas(&table).unwrap();
        // fit the delta prefix (degrees 1.. to skip the constant-term spike)
        let dseq = Sequence::new(&deltas[1..], 1);
        let dw = Window::new(1, deltas.len() as u64 - 1);
        let dfit = estimate_exponent(dseq, dw).unwrap();
        // extend by the fitted tail and lift
        let mut extended: Vec<BigInt> = deltas.clone();
        for s in deltas.len() as u64..=40 {
            if dfit.all_zero {
                extended.push(BigInt::zero());
            } else {
                let ln_v = (s as f64).ln() * 0.0 + s as f64 * (dfit.l as f64).ln();
                extended.push(BigInt::from_f64(ln_v.exp().round()).unwrap());
            }
        }
        let lifted = binomial_lift(&extended);
        let lfit = estimate_exponent(Sequence::new(&lifted, 0), Window::new(20, 38)).unwrap();
        assert_eq!(lfit.l, dfit.l + 1, "delta exponent {} lifts to {}", dfit.l, lfit.l);
    }
}

#[test]
fn ln_big_handles_huge_values() {
    let huge = BigInt::from(7) << 4000; // 7 * 2^4000
    let expect = 7f64.ln() + 4000.0 * std::f64::consts::LN_2;
    assert!((ln_big(&huge) - expect).abs() < 1e-6);
}
