//! Random trials: each attainment condition holds exactly when the closed-form
//! norm equals the decreasing-input norm.
//!
//! $ cargo run --release --example verify_theorems

use monotone_norm::verify::{run_theorem, Theorem, TrialConfig};
use monotone_norm::{Exponent, Tolerance};

fn main() {
    let t = Tolerance::default();
    let runs = [
        (
            Theorem::T2_1,
            6,
            Exponent::finite(2.0),
            Exponent::finite(2.0),
        ),
        (Theorem::T2_2, 6, Exponent::finite(2.0), Exponent::Infinity),
        (Theorem::T3_1, 6, Exponent::finite(3.0), Exponent::One),
        (Theorem::T3_2, 5, Exponent::finite(1.5), Exponent::Infinity),
    ];
    for (theorem, size, p, q) in runs {
        let cfg = TrialConfig {
            trials: 200,
            size,
            p,
            q,
            seed: 7,
            ..TrialConfig::default()
        };
        let run = run_theorem(theorem, &cfg, &t).unwrap();
        let ag = run.agreement;
        println!(
            "{theorem}: {}/{} agree; holds&equal {}, fails&unequal {}, skipped {}",
            ag.agreeing(),
            ag.agreeing() + ag.disagreeing(),
            ag.both,
            ag.neither,
            run.skipped
        );
    }
}
