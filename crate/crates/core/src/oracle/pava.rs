//! Pool-adjacent-violators for the non-increasing cone.

/// Least-squares projection of `v` onto `{x : x_1 >= x_2 >= ... }` (unit weights).
pub fn antitonic_regression(v: &[f64]) -> Vec<f64> {
    // Blocks as (sum, count); adjacent blocks are merged while the left mean
    // is smaller than the right mean.
    let mut blocks: Vec<(f64, usize)> = Vec::with_capacity(v.len());
    for &x in v {
        blocks.push((x, 1));
        while blocks.len() >= 2 {
            let (rs, rc) = blocks[blocks.len() - 1];
            let (ls, lc) = blocks[blocks.len() - 2];
            // ls/lc < rs/rc without dividing.
            if ls * (rc as f64) < rs * (lc as f64) {
                blocks.pop();
                *blocks.last_mut().unwrap() = (ls + rs, lc + rc);
            } else {
                break;
            }
        }
    }
    let mut out = Vec::with_capacity(v.len());
    for (s, c) in blocks {
        let mean = s / c as f64;
        out.extend(std::iter::repeat_n(mean, c));
    }
    out
}

/// Euclidean projection onto the monotone cone `{x_1 >= ... >= x_n >= 0}`.
pub fn project_monotone_cone(v: &[f64]) -> Vec<f64> {
    let mut x = antitonic_regression(v);
    x.iter_mut().for_each(|t| *t = t.max(0.0));
    x
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vector::is_non_increasing;
    use proptest::prelude::*;

    #[test]
    fn pools_violators() {
        assert_eq!(antitonic_regression(&[1.0, 3.0]), vec![2.0, 2.0]);
        assert_eq!(antitonic_regression(&[3.0, 1.0, 2.0]), vec![3.0, 1.5, 1.5]);
        assert_eq!(antitonic_regression(&[1.0, 2.0, 3.0]), vec![2.0, 2.0, 2.0]);
        assert_eq!(antitonic_regression(&[]), Vec::<f64>::new());
        assert_eq!(
            project_monotone_cone(&[-1.0, 2.0, -5.0]),
            vec![0.5, 0.5, 0.0]
        );
    }

    fn dist2(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
    }

    proptest! {
        #[test]
        fn projection_is_feasible_and_closest(
            v in prop::collection::vec(-5.0f64..5.0, 1..10),
            probes in prop::collection::vec(prop::collection::vec(0.0f64..3.0, 10), 20),
        ) {
            let x = project_monotone_cone(&v);
            prop_assert!(is_non_increasing(&x));
            prop_assert!(x.iter().all(|t| *t >= 0.0));
            let d = dist2(&x, &v);
            for t in probes {
                // Cone points built from non-negative increments.
                let mut y: Vec<f64> = t[..v.len()].to_vec();
                for k in (0..y.len().saturating_sub(1)).rev() {
                    y[k] += y[k + 1];
                }
                prop_assert!(d <= dist2(&y, &v) + 1e-9);
            }
        }
    }
}
