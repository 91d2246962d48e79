//! Truncated Cesaro matrices approach Hardy's constant p/(p-1) from below,
//! and their norm is attained on a decreasing input.
//!
//! $ cargo run --release --example hardy_cesaro

use monotone_norm::gallery::{cesaro, verify_claims};
use monotone_norm::oracle::{downward_norm, full_norm};
use monotone_norm::{Exponent, Tolerance};

fn main() {
    let t = Tolerance::default();
    for p in [2.0, 3.0] {
        let e = Exponent::finite(p);
        println!("p = {p}, Hardy constant {:.6}", p / (p - 1.0));
        for n in [25, 50, 100, 200] {
            let a = cesaro(n).unwrap().matrix;
            let f = full_norm(&a, e, e, &t).value;
            let d = downward_norm(&a, e, e, &t).value;
            println!(
                "  N = {n:>3}: full {f:.6}, downward {d:.6}, difference {:.1e}",
                (f - d).abs()
            );
        }
    }
    let two = Exponent::finite(2.0);
    let r = verify_claims(&cesaro(100).unwrap(), two, two, &t);
    for o in &r.outcomes {
        println!("{:?}: {}", o.status, o.description);
    }
}
