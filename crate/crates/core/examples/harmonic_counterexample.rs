//! A matrix where no single row dominates strictly in the infinite limit, yet
//! the l_p -> l_inf norm is still reached by decreasing inputs.
//!
//! $ cargo run --release --example harmonic_counterexample

use monotone_norm::closed_forms::norm_lp_linf;
use monotone_norm::conditions::{check_3_6, check_3_7};
use monotone_norm::gallery::harmonic_counterexample;
use monotone_norm::oracle::downward_norm;
use monotone_norm::{Exponent, Tolerance};

fn main() {
    let t = Tolerance::default();
    let two = Exponent::finite(2.0);
    let limit = (std::f64::consts::PI.powi(2) / 6.0).sqrt();
    println!(
        "   N  full        downward    gap       strictly dominant rows  decreasing attaining rows"
    );
    for n in [10, 50, 100, 200, 400] {
        let a = harmonic_counterexample(n).unwrap().matrix;
        let full = norm_lp_linf(&a, two).unwrap();
        let down = downward_norm(&a, two, Exponent::Infinity, &t).value;
        let dominant: Vec<usize> = (0..n)
            .filter(|&j| check_3_6(&a, two, &[j], &t).unwrap().holds)
            .map(|j| j + 1)
            .collect();
        let attaining: Vec<usize> = (0..n)
            .filter(|&j| check_3_7(&a, two, &[j], &t).unwrap().holds)
            .map(|j| j + 1)
            .collect();
        println!(
            "{n:>4}  {full:.8}  {down:.8}  {:.2e}  {:<22}  {attaining:?}",
            full - down,
            format!("{dominant:?}")
        );
    }
    println!("both norms tend to (pi^2/6)^(1/2) = {limit:.8}");
}
