//! The single-entry matrix a_{2,2} = 1: one row dominates strictly but is not
//! decreasing, so the l_p -> l_inf norm exceeds the decreasing-input norm.
//!
//! $ cargo run --example atom_at_22

use monotone_norm::gallery::{atom_at_22, verify_claims, ClaimStatus};
use monotone_norm::oracle::{downward_norm, full_norm};
use monotone_norm::{Exponent, Tolerance};

fn main() {
    let t = Tolerance::default();
    let a = atom_at_22(3).unwrap().matrix;
    for p in [
        Exponent::One,
        Exponent::finite(1.5),
        Exponent::finite(2.0),
        Exponent::finite(4.0),
    ] {
        let f = full_norm(&a, p, Exponent::Infinity, &t);
        let d = downward_norm(&a, p, Exponent::Infinity, &t);
        println!(
            "p = {:<3}  full {:.6}  downward {:.6}  argmax {:?}",
            p.to_string(),
            f.value,
            d.value,
            d.argmax
                .iter()
                .map(|v| (v * 1e6).round() / 1e6)
                .collect::<Vec<_>>()
        );
    }
    let r = verify_claims(
        &atom_at_22(3).unwrap(),
        Exponent::finite(2.0),
        Exponent::Infinity,
        &t,
    );
    assert!(r.outcomes.iter().all(|o| o.status == ClaimStatus::Pass));
    println!("all {} claims pass at p = 2", r.outcomes.len());
}
