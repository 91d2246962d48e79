//! Explicit decreasing inputs that attain the norm in the boundary cases.
//!
//! $ cargo run --example extremizers

use monotone_norm::extremizers::{extremal_l1, extremal_linf, extremal_lp_l1, extremal_lp_linf};
use monotone_norm::{Exponent, Extremizer, NonNegMatrix};

fn show(label: &str, e: &Extremizer) {
    println!(
        "{label:<22} x = {:?}\n{:<22} achieved {:.6}, certified shape {}",
        e.x.iter()
            .map(|v| (v * 1e6).round() / 1e6)
            .collect::<Vec<_>>(),
        "",
        e.achieved,
        e.is_certified_shape()
    );
}

fn main() {
    let two = Exponent::finite(2.0);
    let a = NonNegMatrix::from_rows(&[[2.0, 1.0, 0.5], [1.0, 1.0, 0.25]]).unwrap();

    show("p = 1 (e_1)", &extremal_l1(&a, two));
    show("p = inf (all ones)", &extremal_linf(&a, two));
    show("q = 1 (column sums)", &extremal_lp_l1(&a, two).unwrap());
    show("q = inf (row 1)", &extremal_lp_linf(&a, two, 0).unwrap());

    // Increasing column sums: the construction is not decreasing, so it
    // certifies nothing.
    let b = NonNegMatrix::from_rows(&[[1.0, 2.0]]).unwrap();
    show("q = 1, increasing sums", &extremal_lp_l1(&b, two).unwrap());
}
