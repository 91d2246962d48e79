//! Explicit norm-attaining decreasing inputs for the endpoint cases.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::matrix::NonNegMatrix;
use crate::vector::{check_nonneg, e1, first_increase, lq_norm, normalize, pow_nonneg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Provenance {
    /// `e_1`, optimal for `p = 1` when column 1 has the largest `l_q` norm.
    E1,
    /// `(1, 1, ...)`, always optimal for `p = inf`.
    AllOnes,
    /// `x_k ∝ S_k^{p*-1}` from the column sums, for `q = 1`.
    ColumnSumPower,
    /// `x_k ∝ a_{l,k}^{p*-1}` from row `l`, for `q = inf`.
    RowPower(usize),
    /// An `l_1`-unit input with its tail folded into the first coordinate.
    TailFolded,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Extremizer {
    pub x: Vec<f64>,
    pub p: Exponent,
    /// `||Ax||_q` at `x`.
    pub achieved: f64,
    pub provenance: Provenance,
    /// The defining data was all zero, so `x` fell back to `e_1`.
    pub degenerate: bool,
    /// First `k` with `x[k] < x[k+1]`, if the construction is not decreasing.
    pub monotonicity_violation: Option<usize>,
}

impl Extremizer {
    /// Non-degenerate and decreasing.
    pub fn is_certified_shape(&self) -> bool {
        !self.degenerate && self.monotonicity_violation.is_none()
    }
}

fn build(
    a: &NonNegMatrix,
    x: Vec<f64>,
    p: Exponent,
    q: Exponent,
    provenance: Provenance,
) -> Extremizer {
    let achieved = lq_norm(&a.apply(&x), q);
    let monotonicity_violation = first_increase(&x, 0.0);
    Extremizer {
        x,
        p,
        achieved,
        provenance,
        degenerate: false,
        monotonicity_violation,
    }
}

fn fallback(a: &NonNegMatrix, p: Exponent, q: Exponent, provenance: Provenance) -> Extremizer {
    let mut e = build(a, e1(a.cols()), p, q, provenance);
    e.degenerate = true;
    e
}

/// `e_1` with `p = 1`.
pub fn extremal_l1(a: &NonNegMatrix, q: Exponent) -> Extremizer {
    build(a, e1(a.cols()), Exponent::One, q, Provenance::E1)
}

/// The all-ones vector with `p = inf`.
pub fn extremal_linf(a: &NonNegMatrix, q: Exponent) -> Extremizer {
    build(
        a,
        vec![1.0; a.cols()],
        Exponent::Infinity,
        q,
        Provenance::AllOnes,
    )
}

/// `x_k = λ S_k^{p*-1}` with `λ = (Σ S_k^{p*})^{-1/p}`, valued in `l_1`.
pub fn extremal_lp_l1(a: &NonNegMatrix, p: Exponent) -> Result<Extremizer> {
    let pf = p.as_finite().ok_or(Error::RequiresFiniteExponent(p))?;
    let sums = a.column_sums();
    Ok(power_profile(
        a,
        &sums,
        pf.dual(),
        p,
        Exponent::One,
        Provenance::ColumnSumPower,
    ))
}

/// `x_k = λ a_{l,k}^{p*-1}` with `λ = (Σ_k a_{l,k}^{p*})^{-1/p}`, valued in
/// `l_inf`. `l` is a zero-based row index.
pub fn extremal_lp_linf(a: &NonNegMatrix, p: Exponent, l: usize) -> Result<Extremizer> {
    let pf = p.as_finite().ok_or(Error::RequiresFiniteExponent(p))?;
    if l >= a.rows() {
        return Err(Error::RowOutOfRange {
            index: l,
            rows: a.rows(),
        });
    }
    Ok(power_profile(
        a,
        a.row(l),
        pf.dual(),
        p,
        Exponent::Infinity,
        Provenance::RowPower(l),
    ))
}

fn power_profile(
    a: &NonNegMatrix,
    weights: &[f64],
    dual: f64,
    p: Exponent,
    q: Exponent,
    provenance: Provenance,
) -> Extremizer {
    let mut x: Vec<f64> = weights.iter().map(|&s| pow_nonneg(s, dual - 1.0)).collect();
    if normalize(&mut x, p) == 0.0 {
        return fallback(a, p, q, provenance);
    }
    build(a, x, p, q, provenance)
}

/// Moves the mass of `x` beyond the first `k0` coordinates onto the first one:
/// `x̃_1 = x_1 + Σ_{k > k0} x_k`, `x̃_k = x_k` for `1 < k <= k0`, zero after.
pub fn fold_tail(x: &[f64], k0: usize) -> Result<Vec<f64>> {
    check_nonneg(x)?;
    if k0 == 0 {
        return Err(Error::InvalidColSupport {
            support: 0,
            cols: x.len(),
        });
    }
    let mut out = x.to_vec();
    if k0 < x.len() && !x.is_empty() {
        let tail: f64 = x[k0..].iter().sum();
        out[0] += tail;
        out[k0..].iter_mut().for_each(|t| *t = 0.0);
    }
    Ok(out)
}

/// Folds a decreasing `l_1`-unit input into the column support of `A`. The
/// result stays decreasing and `l_1`-unit and does not lower `||Ax||_q`.
pub fn extremal_folded(a: &NonNegMatrix, x: &[f64], q: Exponent) -> Result<Extremizer> {
    if x.len() != a.cols() {
        return Err(Error::LengthMismatch {
            expected: a.cols(),
            got: x.len(),
        });
    }
    let k0 = a.col_support().unwrap_or_else(|| a.effective_col_support());
    let folded = fold_tail(x, k0)?;
    Ok(build(a, folded, Exponent::One, q, Provenance::TailFolded))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_forms::{norm_lp_l1, norm_lp_linf};

    fn m(rows: &[&[f64]]) -> NonNegMatrix {
        NonNegMatrix::from_rows(rows).unwrap()
    }

    const TWO: f64 = 2.0;

    #[test]
    fn l1_examples() {
        let id = NonNegMatrix::identity(2).unwrap();
        let e = extremal_l1(&id, Exponent::finite(TWO));
        assert_eq!((e.x.clone(), e.achieved), (vec![1.0, 0.0], 1.0));
        assert_eq!(e.provenance, Provenance::E1);
        let e = extremal_l1(&m(&[&[2.0, 1.0], &[2.0, 1.0]]), Exponent::One);
        assert_eq!(e.achieved, 4.0);
    }

    #[test]
    fn linf_examples() {
        let e = extremal_linf(&m(&[&[1.0, 1.0], &[1.0, 1.0]]), Exponent::One);
        assert_eq!((e.x.clone(), e.achieved), (vec![1.0, 1.0], 4.0));
        let e = extremal_linf(&NonNegMatrix::identity(3).unwrap(), Exponent::Infinity);
        assert_eq!(e.achieved, 1.0);
        let ces =
            NonNegMatrix::from_fn(4, 4, |j, k| if k <= j { 1.0 / (j + 1) as f64 } else { 0.0 })
                .unwrap();
        let e = extremal_linf(&ces, Exponent::finite(TWO));
        assert!((e.achieved - 2.0).abs() < 1e-15);
    }

    #[test]
    fn lp_l1_examples() {
        let p = Exponent::finite(TWO);
        let e = extremal_lp_l1(&m(&[&[2.0, 1.0]]), p).unwrap();
        let r5 = 5f64.sqrt();
        assert!((e.x[0] - 2.0 / r5).abs() < 1e-15 && (e.x[1] - 1.0 / r5).abs() < 1e-15);
        assert!((e.achieved - r5).abs() < 1e-15);
        assert!(e.is_certified_shape());

        let e = extremal_lp_l1(&NonNegMatrix::identity(2).unwrap(), p).unwrap();
        assert!((e.achieved - 2f64.sqrt()).abs() < 1e-15);

        let e = extremal_lp_l1(&NonNegMatrix::zeros(2, 2).unwrap(), p).unwrap();
        assert_eq!(
            (e.x.clone(), e.achieved, e.degenerate),
            (vec![1.0, 0.0], 0.0, true)
        );

        assert!(extremal_lp_l1(&m(&[&[1.0]]), Exponent::One).is_err());
    }

    #[test]
    fn lp_l1_flags_increasing_sums() {
        let e = extremal_lp_l1(&m(&[&[1.0, 2.0]]), Exponent::finite(TWO)).unwrap();
        assert_eq!(e.monotonicity_violation, Some(0));
        assert!(!e.is_certified_shape());
    }

    #[test]
    fn lp_linf_examples() {
        let p = Exponent::finite(TWO);
        let a = m(&[&[2.0, 1.0], &[0.0, 0.0]]);
        let e = extremal_lp_linf(&a, p, 0).unwrap();
        assert!((e.achieved - 5f64.sqrt()).abs() < 1e-15);
        assert!((e.achieved - norm_lp_linf(&a, p).unwrap()).abs() < 1e-15);
        assert_eq!(e.provenance, Provenance::RowPower(0));

        let e = extremal_lp_linf(&NonNegMatrix::identity(2).unwrap(), p, 0).unwrap();
        assert_eq!((e.x.clone(), e.achieved), (vec![1.0, 0.0], 1.0));

        let e = extremal_lp_linf(&a, p, 1).unwrap();
        assert!(e.degenerate);
        assert!(extremal_lp_linf(&a, p, 2).is_err());
    }

    #[test]
    fn harmonic_last_row_construction() {
        // Rows j >= 2 of the harmonic matrix are (1, 1/2, ..., 1/(j-1), 0, ...).
        let n = 50;
        let a = NonNegMatrix::from_fn(n, n, |j, k| match j {
            0 => [0.5, 1.0].get(k).copied().unwrap_or(1.0 / (k + 1) as f64),
            _ if k < j => 1.0 / (k + 1) as f64,
            _ => 0.0,
        })
        .unwrap();
        let e = extremal_lp_linf(&a, Exponent::finite(TWO), n - 1).unwrap();
        let direct: f64 = (1..n).map(|k| 1.0 / (k * k) as f64).sum::<f64>().sqrt();
        assert!((e.achieved - direct).abs() < 1e-12);
        assert!((e.achieved - 1.274_650_043_589_035).abs() < 1e-12);
    }

    #[test]
    fn ones_extremizer_matches_closed_form_for_q1() {
        let a = m(&[&[3.0, 2.0, 0.5], &[1.0, 0.5, 0.5]]);
        let p = Exponent::finite(3.0);
        let e = extremal_lp_l1(&a, p).unwrap();
        let c = norm_lp_l1(&a, p).unwrap();
        assert!((e.achieved - c).abs() <= 1e-12 * c);
    }

    #[test]
    fn fold_examples() {
        let f = fold_tail(&[0.4, 0.3, 0.2, 0.1], 2).unwrap();
        assert!((f[0] - 0.7).abs() < 1e-15);
        assert_eq!(&f[1..], &[0.3, 0.0, 0.0]);
        assert_eq!(fold_tail(&[1.0, 0.0, 0.0], 3).unwrap(), vec![1.0, 0.0, 0.0]);
        assert_eq!(fold_tail(&[0.25; 4], 1).unwrap(), vec![1.0, 0.0, 0.0, 0.0]);
        assert!(fold_tail(&[0.5, -0.5], 1).is_err());
        assert!(fold_tail(&[0.5, 0.5], 0).is_err());
    }

    #[test]
    fn folded_extremizer_keeps_shape() {
        let a = m(&[&[1.0, 2.0, 0.0], &[0.5, 1.0, 0.0]])
            .with_col_support(2)
            .unwrap();
        let x = [0.5, 0.3, 0.2];
        let e = extremal_folded(&a, &x, Exponent::finite(TWO)).unwrap();
        assert_eq!(e.provenance, Provenance::TailFolded);
        assert!(e.is_certified_shape());
        assert!(e.achieved >= lq_norm(&a.apply(&x), Exponent::finite(TWO)));
    }
}
