//! Deciding the attainment conditions and reading their witnesses.
//!
//! $ cargo run --example conditions

use monotone_norm::conditions::{check_2_1, check_3_1, check_3_6, check_3_7, search_lambda};
use monotone_norm::{Exponent, NonNegMatrix, Tolerance};

fn main() {
    let t = Tolerance::default();
    let two = Exponent::finite(2.0);

    let a = NonNegMatrix::from_rows(&[[1.0, 0.0], [0.0, 3.0]]).unwrap();
    let r = check_2_1(&a, Exponent::One, &t);
    println!(
        "2.1 on diag(1, 3): holds={} witness={:?}",
        r.holds, r.witness
    );

    let b = NonNegMatrix::from_rows(&[[1.0, 2.0], [0.0, 0.0]]).unwrap();
    let r = check_3_1(&b, &t);
    println!(
        "3.1 on [[1,2],[0,0]]: holds={} witness={:?}",
        r.holds, r.witness
    );

    let c = NonNegMatrix::from_rows(&[[2.0, 1.0], [1.0, 1.0]]).unwrap();
    for lambda in search_lambda(&c, two, &t).unwrap() {
        let r6 = check_3_6(&c, two, &lambda, &t).unwrap();
        let r7 = check_3_7(&c, two, &lambda, &t).unwrap();
        println!(
            "row set {lambda:?}: 3.6 holds={} 3.7 holds={}",
            r6.holds, r7.holds
        );
    }

    // JSON form of a report, as emitted by `monotone-norm check --json`.
    println!(
        "{}",
        serde_json::to_string_pretty(&check_3_1(&c, &t)).unwrap()
    );
}
