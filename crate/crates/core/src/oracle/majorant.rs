//! Linear maximisation over the decreasing part of the unit `l_p` sphere.
//!
//! For `s >= 0`, `max { <s, x> : x_1 >= x_2 >= ... >= 0, ||x||_p = 1 }`
//! equals `||s°||_{p*}`, where `s°` (the level function of `s`) is the slope
//! sequence of the least concave majorant of the cumulative-sum polyline
//! `n -> s_1 + ... + s_n`. The maximiser is `x ∝ (s°)^{p* - 1}`.

use crate::error::Result;
use crate::exponent::Exponent;
use crate::vector::{check_nonneg, lq_norm, normalize, pow_nonneg, simplex_vertex, step_vertex};

use super::{Method, OracleResult};

/// Slopes of the least concave majorant of `{(n, s_1 + ... + s_n)}`, one per
/// unit interval, so the output has the same length as `s`.
pub fn level_function(s: &[f64]) -> Vec<f64> {
    // Upper hull of (0, 0), (1, P_1), ..., (n, P_n).
    let mut cum = Vec::with_capacity(s.len() + 1);
    cum.push(0.0);
    for &x in s {
        cum.push(cum.last().unwrap() + x);
    }
    let mut hull: Vec<usize> = Vec::with_capacity(cum.len());
    for i in 0..cum.len() {
        while hull.len() >= 2 {
            let m = hull[hull.len() - 1];
            let l = hull[hull.len() - 2];
            // Drop m unless slope(l, m) > slope(m, i).
            let left = (cum[m] - cum[l]) * (i - m) as f64;
            let right = (cum[i] - cum[m]) * (m - l) as f64;
            if left <= right {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(i);
    }
    let mut out = Vec::with_capacity(s.len());
    for w in hull.windows(2) {
        let (a, b) = (w[0], w[1]);
        let slope = (cum[b] - cum[a]) / (b - a) as f64;
        out.extend(std::iter::repeat_n(slope, b - a));
    }
    out
}

/// Exact `max <s, x>` over non-negative non-increasing `x` with `||x||_p = 1`.
pub fn linear_downward_max(s: &[f64], p: Exponent) -> Result<OracleResult> {
    check_nonneg(s)?;
    let n = s.len();
    let level = level_function(s);
    let dual = p.conjugate();
    let value = lq_norm(&level, dual);
    let argmax = if value == 0.0 {
        crate::vector::e1(n)
    } else {
        match p {
            // Mass on the first hull segment.
            Exponent::One => {
                let top = level[0];
                let m = level.iter().take_while(|&&t| t == top).count();
                simplex_vertex(n, m)
            }
            Exponent::Infinity => step_vertex(n, n),
            Exponent::Finite(f) => {
                let e = f.dual() - 1.0;
                let mut x: Vec<f64> = level.iter().map(|&t| pow_nonneg(t, e)).collect();
                normalize(&mut x, p);
                x
            }
        }
    };
    Ok(OracleResult {
        value,
        argmax,
        method: Method::ConcaveMajorant,
        restarts: 0,
        achieved_tol: 0.0,
    })
}
