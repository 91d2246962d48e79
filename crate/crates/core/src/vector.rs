//! Norms and shape predicates on finite sequences.

use crate::error::{Error, Result};
use crate::exponent::Exponent;

/// `x^e` for `x >= 0`, with `0^e = 0` for every `e > 0`.
#[inline]
pub fn pow_nonneg(x: f64, e: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x.powf(e)
    }
}

/// The `l_q` norm of `v`. Zero for the empty and the zero vector.
pub fn lq_norm(v: &[f64], q: Exponent) -> f64 {
    match q {
        Exponent::One => v.iter().map(|x| x.abs()).sum(),
        Exponent::Infinity => v.iter().fold(0.0, |m, x| m.max(x.abs())),
        Exponent::Finite(q) => {
            // Scale by the largest modulus so x^q cannot overflow for large q.
            let m = v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
            if m == 0.0 {
                return 0.0;
            }
            let q = q.value();
            let s: f64 = v.iter().map(|x| pow_nonneg(x.abs() / m, q)).sum();
            m * s.powf(1.0 / q)
        }
    }
}

/// Index `k` of the first adjacent pair with `v[k] < v[k + 1]` beyond the
/// relative slack `rel`, or `None` when `v` is non-increasing.
///
/// The pair passes when `v[k+1] - v[k] <= rel * max(|v[k]|, |v[k+1]|)`, with an
/// absolute floor of `1e-12` when both entries are zero-sized.
pub fn first_increase(v: &[f64], rel: f64) -> Option<usize> {
    v.windows(2).position(|w| {
        let scale = w[0].abs().max(w[1].abs());
        let slack = if scale == 0.0 { 1e-12 } else { rel * scale };
        w[1] - w[0] > slack
    })
}

/// Exact (no slack) monotonicity test.
pub fn is_non_increasing(v: &[f64]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

/// Scales `v` in place to unit `l_p` norm and returns the original norm.
/// A zero vector is left untouched.
pub fn normalize(v: &mut [f64], p: Exponent) -> f64 {
    let n = lq_norm(v, p);
    if n > 0.0 {
        v.iter_mut().for_each(|x| *x /= n);
    }
    n
}

/// Checks that every entry is finite and non-negative.
pub fn check_nonneg(v: &[f64]) -> Result<()> {
    match v.iter().position(|x| !(x.is_finite() && *x >= 0.0)) {
        Some(index) => Err(Error::InvalidVectorEntry {
            index,
            value: v[index],
        }),
        None => Ok(()),
    }
}

/// The unit vector `e_1` of length `n`.
pub fn e1(n: usize) -> Vec<f64> {
    let mut v = vec![0.0; n];
    if n > 0 {
        v[0] = 1.0;
    }
    v
}

/// `c_m = (1/m, ..., 1/m, 0, ...)` of length `n`.
pub fn simplex_vertex(n: usize, m: usize) -> Vec<f64> {
    let w = 1.0 / m as f64;
    (0..n).map(|k| if k < m { w } else { 0.0 }).collect()
}

/// `1_m = (1, ..., 1, 0, ...)` of length `n`.
pub fn step_vertex(n: usize, m: usize) -> Vec<f64> {
    (0..n).map(|k| if k < m { 1.0 } else { 0.0 }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn norm_examples() {
        assert_eq!(lq_norm(&[3.0, 4.0], Exponent::finite(2.0)), 5.0);
        assert_eq!(lq_norm(&[1.0, -2.0, 3.0], Exponent::Infinity), 3.0);
        assert_eq!(lq_norm(&[1.0, 1.0, 1.0], Exponent::One), 3.0);
        assert_eq!(lq_norm(&[], Exponent::finite(2.0)), 0.0);
        assert_eq!(lq_norm(&[0.0, 0.0], Exponent::finite(7.0)), 0.0);
    }

    #[test]
    fn huge_exponent_does_not_overflow() {
        let v = [1e10, 2e10];
        let n = lq_norm(&v, Exponent::finite(500.0));
        assert!(n.is_finite());
        assert!((n - 2e10).abs() / 2e10 < 1e-2);
    }

    #[test]
    fn monotonicity_witness() {
        assert_eq!(first_increase(&[3.0, 2.0, 2.0, 1.0], 0.0), None);
        assert_eq!(first_increase(&[1.0, 2.0], 0.0), Some(0));
        assert_eq!(first_increase(&[3.0, 2.0, 2.5], 1e-9), Some(1));
        assert_eq!(first_increase(&[1.0, 1.0 + 1e-12], 1e-9), None);
        assert_eq!(first_increase(&[0.0, 0.0, 0.0], 1e-9), None);
    }

    #[test]
    fn vertices() {
        assert_eq!(simplex_vertex(4, 2), vec![0.5, 0.5, 0.0, 0.0]);
        assert_eq!(step_vertex(3, 1), vec![1.0, 0.0, 0.0]);
        assert_eq!(e1(3), vec![1.0, 0.0, 0.0]);
    }

    fn vec_strategy() -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(-10.0f64..10.0, 1..12)
    }

    proptest! {
        #[test]
        fn homogeneous(v in vec_strategy(), c in -50.0f64..50.0, q in 1.01f64..8.0) {
            for e in [Exponent::One, Exponent::Infinity, Exponent::finite(q)] {
                let scaled: Vec<f64> = v.iter().map(|x| c * x).collect();
                let lhs = lq_norm(&scaled, e);
                let rhs = c.abs() * lq_norm(&v, e);
                prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(f64::MIN_POSITIVE), "{} vs {}", lhs, rhs);
            }
        }

        #[test]
        fn sandwiched_between_sup_and_sum(v in vec_strategy(), q in 1.01f64..8.0) {
            let sup = lq_norm(&v, Exponent::Infinity);
            let mid = lq_norm(&v, Exponent::finite(q));
            let sum = lq_norm(&v, Exponent::One);
            prop_assert!(sup <= mid * (1.0 + 1e-12));
            prop_assert!(mid <= sum * (1.0 + 1e-12));
        }
    }
}
