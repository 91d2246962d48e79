//! A matrix whose l_1 -> l_1 norm is attained only in the limit by decreasing
//! inputs although column 1 is not the largest column.
//!
//! $ cargo run --release --example pi26_counterexample

use monotone_norm::closed_forms::norm_l1_lq;
use monotone_norm::conditions::{check_2_1, Witness};
use monotone_norm::gallery::pi26_counterexample;
use monotone_norm::oracle::vertex_simplex_norm;
use monotone_norm::{Exponent, Tolerance};

fn main() {
    let limit = std::f64::consts::PI.powi(2) / 6.0;
    let a = pi26_counterexample(6).unwrap().matrix;
    println!("top-left 6x6 block:");
    for row in a.row_iter() {
        println!(
            "  {:?}",
            row.iter()
                .map(|v| (v * 1e4).round() / 1e4)
                .collect::<Vec<_>>()
        );
    }

    println!("\n   N   ||A||_(1,1)   downward   pi^2/6 - downward   column gap");
    for n in [100, 500, 2000, 8000] {
        let a = pi26_counterexample(n).unwrap().matrix;
        let full = norm_l1_lq(&a, Exponent::One);
        let down = vertex_simplex_norm(&a, Exponent::One);
        let gap = match check_2_1(&a, Exponent::One, &Tolerance::default()).witness {
            Witness::ColumnSup { gap, .. } => gap,
            _ => unreachable!(),
        };
        println!(
            "{n:>5}   {full:.8}   {:.8}   {:.2e}            {gap:.4}",
            down.value,
            limit - down.value
        );
    }
}
