//! The numerical oracle: exact methods where an endpoint exponent allows one,
//! multi-start ascent otherwise, and a cross-check between the two.
//!
//! $ cargo run --release --example oracle_cross_check

use monotone_norm::oracle::{downward_norm, full_norm, projgrad_downward};
use monotone_norm::{closed_forms, Exponent, NonNegMatrix, Tolerance};

fn main() {
    let t = Tolerance::default();
    let a = NonNegMatrix::from_fn(5, 5, |j, k| ((3 * j + 7 * k + 2) % 9) as f64 / 8.0).unwrap();
    let pairs = [
        (Exponent::One, Exponent::finite(2.0)),
        (Exponent::Infinity, Exponent::finite(3.0)),
        (Exponent::finite(1.5), Exponent::One),
        (Exponent::finite(2.0), Exponent::Infinity),
        (Exponent::finite(2.0), Exponent::finite(3.0)),
    ];
    println!(
        "{:>4} {:>4}  {:>10} {:>10} {:>10}  method",
        "p", "q", "full", "downward", "ascent"
    );
    for (p, q) in pairs {
        let full = full_norm(&a, p, q, &t);
        let down = downward_norm(&a, p, q, &t);
        let pg = projgrad_downward(&a, p, q, 64, 0);
        println!(
            "{:>4} {:>4}  {:>10.6} {:>10.6} {:>10.6}  {:?} ({})",
            p.to_string(),
            q.to_string(),
            full.value,
            down.value,
            pg.value,
            down.method,
            down.method.exactness()
        );
        let closed = closed_forms::norm(&a, p, q);
        assert!((closed.value - full.value).abs() < 1e-6 * closed.value.max(1.0));
    }
}
