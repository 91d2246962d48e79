//! Closed-form norms for the four boundary exponent cases.
//!
//! $ cargo run --example closed_forms

use monotone_norm::closed_forms::{self, norm_l1_lq, norm_linf_lq, norm_lp_l1, norm_lp_linf};
use monotone_norm::{Exponent, NonNegMatrix};

fn main() {
    let a = NonNegMatrix::from_rows(&[[3.0, 2.0, 0.5], [1.0, 0.5, 0.5], [0.0, 1.0, 2.0]]).unwrap();
    let two = Exponent::finite(2.0);

    println!(
        "||A||_(1,2)   = {:.6}  max column l2 norm",
        norm_l1_lq(&a, two)
    );
    println!(
        "||A||_(inf,2) = {:.6}  l2 norm of the row sums",
        norm_linf_lq(&a, two)
    );
    println!(
        "||A||_(2,1)   = {:.6}  l2 norm of the column sums",
        norm_lp_l1(&a, two).unwrap()
    );
    println!(
        "||A||_(2,inf) = {:.6}  max row l2 norm",
        norm_lp_linf(&a, two).unwrap()
    );

    // Interior pairs fall back to the numerical oracle and say so.
    for (p, q) in [
        (Exponent::One, Exponent::Infinity),
        (two, Exponent::finite(3.0)),
    ] {
        let v = closed_forms::norm(&a, p, q);
        println!("norm(p={p}, q={q}) = {:.6} [{}]", v.value, v.exactness);
    }
}
