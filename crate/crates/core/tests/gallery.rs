use monotone_norm::closed_forms::{norm_l1_lq, norm_lp_linf};
use monotone_norm::conditions::check_2_1;
use monotone_norm::extremizers::{extremal_l1, extremal_lp_linf};
use monotone_norm::gallery::{
    atom_at_22, cesaro, harmonic_counterexample, pi26_counterexample, verify_claims, Claim,
    ClaimStatus,
};
use monotone_norm::oracle::{downward_norm, full_norm};
use monotone_norm::{Exponent, Tolerance};

fn partial(n: usize) -> f64 {
    (1..=n).map(|m| 1.0 / (m * m) as f64).sum()
}

#[test]
fn pi26_at_1000_passes_all_claims() {
    let e = pi26_counterexample(1000).unwrap();
    let r = verify_claims(&e, Exponent::One, Exponent::One, &Tolerance::default());
    assert!(r.all_passed(), "{r:#?}");
    assert_eq!(r.full.value, norm_l1_lq(&e.matrix, Exponent::One));
    assert!((r.full.value - partial(500)).abs() < 1e-12);
}

#[test]
fn pi26_truncated_column_sums() {
    let a = pi26_counterexample(200).unwrap().matrix;
    assert!((norm_l1_lq(&a, Exponent::One) - 1.634_983_900_184_892).abs() < 1e-12);
    let c = check_2_1(&a, Exponent::One, &Tolerance::default());
    assert!(!c.holds);
}

#[test]
fn pi26_e1_is_not_optimal() {
    let a = pi26_counterexample(50).unwrap().matrix;
    let e = extremal_l1(&a, Exponent::One);
    assert_eq!(e.achieved, 1.0);
    let d = downward_norm(&a, Exponent::One, Exponent::One, &Tolerance::default());
    assert!(d.value > 1.5);
}

#[test]
fn cesaro_truncations_stay_below_hardy() {
    let t = Tolerance::default();
    let two = Exponent::finite(2.0);
    let r = verify_claims(&cesaro(100).unwrap(), two, two, &t);
    assert!(r.all_passed(), "{r:#?}");
    assert!(r.full.value < 2.0);
    let three = Exponent::finite(3.0);
    let r = verify_claims(&cesaro(60).unwrap(), three, three, &t);
    assert_eq!(
        r.outcome(Claim::HardyBound).unwrap().status,
        ClaimStatus::Pass
    );
}

#[test]
fn harmonic_row_construction_reaches_truncated_bound() {
    let a = harmonic_counterexample(100).unwrap().matrix;
    let two = Exponent::finite(2.0);
    let e = extremal_lp_linf(&a, two, 99).unwrap();
    assert!((e.achieved - 1.278_625_785_828_243).abs() < 1e-12);
    let d = downward_norm(&a, two, Exponent::Infinity, &Tolerance::default());
    assert!(d.value >= e.achieved - 1e-9);
    let full = norm_lp_linf(&a, two).unwrap();
    assert!((full - partial(100).sqrt()).abs() < 1e-12);
}

#[test]
fn harmonic_claims_hold_for_other_exponents() {
    let t = Tolerance::default();
    for p in [1.5, 3.0] {
        let r = verify_claims(
            &harmonic_counterexample(60).unwrap(),
            Exponent::finite(p),
            Exponent::Infinity,
            &t,
        );
        assert!(r.all_passed(), "p={p}: {r:#?}");
    }
}

#[test]
fn atom_gap_values() {
    let t = Tolerance::default();
    let a = atom_at_22(3).unwrap().matrix;
    for p in [
        Exponent::One,
        Exponent::finite(1.5),
        Exponent::finite(2.0),
        Exponent::finite(4.0),
    ] {
        let f = full_norm(&a, p, Exponent::Infinity, &t).value;
        let d = downward_norm(&a, p, Exponent::Infinity, &t).value;
        assert!((f - 1.0).abs() < 1e-9, "{p}");
        assert!((d - 2f64.powf(-1.0 / p.to_f64())).abs() < 1e-12, "{p}");
    }
    let r = verify_claims(
        &atom_at_22(5).unwrap(),
        Exponent::finite(2.0),
        Exponent::Infinity,
        &t,
    );
    assert!(r.all_passed(), "{r:#?}");
}
