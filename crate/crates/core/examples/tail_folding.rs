//! Folding the tail of an l_1-unit input into its first coordinate keeps it
//! l_1-unit and decreasing and does not lower ||Ax||_q when A lives on the
//! first k0 columns.
//!
//! $ cargo run --example tail_folding

use monotone_norm::extremizers::{extremal_folded, fold_tail};
use monotone_norm::vector::lq_norm;
use monotone_norm::{Exponent, NonNegMatrix};

fn main() {
    let x = [0.4, 0.3, 0.2, 0.1];
    println!("fold_tail({x:?}, 2) = {:?}", fold_tail(&x, 2).unwrap());

    let a = NonNegMatrix::from_rows(&[[1.0, 2.0, 0.0, 0.0], [0.5, 1.0, 0.0, 0.0]])
        .unwrap()
        .with_col_support(2)
        .unwrap();
    for q in [Exponent::One, Exponent::finite(2.0), Exponent::Infinity] {
        let e = extremal_folded(&a, &x, q).unwrap();
        println!(
            "q = {:<3}: ||Ax|| = {:.4}, folded {:.4}",
            q.to_string(),
            lq_norm(&a.apply(&x), q),
            e.achieved
        );
    }
}
