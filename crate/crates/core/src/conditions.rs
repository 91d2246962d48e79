//! Attainment conditions: when the operator norm is already reached on
//! non-negative decreasing inputs.
//!
//! * [`check_2_1`] (`p = 1`): column 1 has the largest `l_q` norm.
//! * [`check_3_1`] (`q = 1`): the column sums are non-increasing.
//! * [`check_3_6`] (`q = inf`): the rows in `Λ` strictly dominate the others
//!   in `l_{p*}` norm.
//! * [`check_3_7`] (`q = inf`): some row in `Λ` is non-increasing and attains
//!   the largest row norm.
//!
//! Row and column indices are zero-based. Every report records the matrix
//! shape, since on a truncated infinite matrix the suprema are taken over the
//! truncation only.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::matrix::{argmax, NonNegMatrix};
use crate::tolerance::Tolerance;
use crate::vector::first_increase;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConditionId {
    #[serde(rename = "2.1")]
    C2_1,
    #[serde(rename = "3.1")]
    C3_1,
    #[serde(rename = "3.6")]
    C3_6,
    #[serde(rename = "3.7")]
    C3_7,
}

impl std::fmt::Display for ConditionId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ConditionId::C2_1 => "2.1",
            ConditionId::C3_1 => "3.1",
            ConditionId::C3_6 => "3.6",
            ConditionId::C3_7 => "3.7",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowVerdict {
    pub row: usize,
    pub norm: f64,
    pub first_increase: Option<usize>,
    pub attains_sup: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    ColumnSup {
        first_column_norm: f64,
        sup: f64,
        argmax_column: usize,
        gap: f64,
    },
    Monotone {
        first_violation: Option<usize>,
    },
    Dominance {
        lambda: Vec<usize>,
        inside_sup: f64,
        /// `None` when `Λ` covers every row.
        outside_sup: Option<f64>,
    },
    DecreasingRow {
        chosen_row: Option<usize>,
        global_sup: f64,
        candidates: Vec<RowVerdict>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport {
    pub condition: ConditionId,
    pub holds: bool,
    pub witness: Witness,
    pub tolerance_used: f64,
    /// `(rows, cols)` of the matrix the suprema were taken over.
    pub truncation: (usize, usize),
}

/// Column 1 attains the largest column `l_q` norm.
pub fn check_2_1(a: &NonNegMatrix, q: Exponent, tol: &Tolerance) -> ConditionReport {
    let norms = a.column_q_norms(q);
    let (k, sup) = argmax(&norms);
    let first = norms[0];
    ConditionReport {
        condition: ConditionId::C2_1,
        holds: tol.matches(first, sup),
        witness: Witness::ColumnSup {
            first_column_norm: first,
            sup,
            argmax_column: k,
            gap: sup - first,
        },
        tolerance_used: tol.condition_rel,
        truncation: a.shape(),
    }
}

/// Column sums are non-increasing, up to relative slack per adjacent pair.
pub fn check_3_1(a: &NonNegMatrix, tol: &Tolerance) -> ConditionReport {
    let first_violation = first_increase(&a.column_sums(), tol.condition_rel);
    ConditionReport {
        condition: ConditionId::C3_1,
        holds: first_violation.is_none(),
        witness: Witness::Monotone { first_violation },
        tolerance_used: tol.condition_rel,
        truncation: a.shape(),
    }
}

fn row_norms(a: &NonNegMatrix, p: Exponent) -> Result<Vec<f64>> {
    let pf = p.as_finite().ok_or(Error::RequiresFiniteExponent(p))?;
    Ok(a.row_q_norms(Exponent::Finite(pf.conjugate())))
}

fn validate_lambda(a: &NonNegMatrix, lambda: &[usize]) -> Result<BTreeSet<usize>> {
    if lambda.is_empty() {
        return Err(Error::EmptyRowSet);
    }
    if let Some(&index) = lambda.iter().find(|&&j| j >= a.rows()) {
        return Err(Error::RowOutOfRange {
            index,
            rows: a.rows(),
        });
    }
    Ok(lambda.iter().copied().collect())
}

/// Rows in `Λ` strictly dominate every other row in `l_{p*}` norm. The margin
/// for strictness is `condition_rel` times the inside supremum.
pub fn check_3_6(
    a: &NonNegMatrix,
    p: Exponent,
    lambda: &[usize],
    tol: &Tolerance,
) -> Result<ConditionReport> {
    let norms = row_norms(a, p)?;
    let set = validate_lambda(a, lambda)?;
    let inside_sup = set.iter().map(|&j| norms[j]).fold(0.0, f64::max);
    let outside_sup = norms
        .iter()
        .enumerate()
        .filter(|(j, _)| !set.contains(j))
        .map(|(_, &v)| v)
        .reduce(f64::max);
    let holds = inside_sup.is_finite()
        && match outside_sup {
            None => true,
            Some(out) => out < inside_sup - tol.condition_rel * inside_sup,
        };
    Ok(ConditionReport {
        condition: ConditionId::C3_6,
        holds,
        witness: Witness::Dominance {
            lambda: set.into_iter().collect(),
            inside_sup,
            outside_sup,
        },
        tolerance_used: tol.condition_rel,
        truncation: a.shape(),
    })
}

/// Some `l ∈ Λ` has a non-increasing row whose `l_{p*}` norm equals the largest
/// row norm. The smallest such `l` is reported.
pub fn check_3_7(
    a: &NonNegMatrix,
    p: Exponent,
    lambda: &[usize],
    tol: &Tolerance,
) -> Result<ConditionReport> {
    let norms = row_norms(a, p)?;
    let set = validate_lambda(a, lambda)?;
    let global_sup = norms.iter().copied().fold(0.0, f64::max);
    let candidates: Vec<RowVerdict> = set
        .iter()
        .map(|&row| RowVerdict {
            row,
            norm: norms[row],
            first_increase: first_increase(a.row(row), tol.condition_rel),
            attains_sup: tol.matches(norms[row], global_sup),
        })
        .collect();
    let chosen_row = candidates
        .iter()
        .find(|v| v.first_increase.is_none() && v.attains_sup)
        .map(|v| v.row);
    Ok(ConditionReport {
        condition: ConditionId::C3_7,
        holds: chosen_row.is_some(),
        witness: Witness::DecreasingRow {
            chosen_row,
            global_sup,
            candidates,
        },
        tolerance_used: tol.condition_rel,
        truncation: a.shape(),
    })
}

/// Candidate sets `Λ = {j}` for every row `j` attaining the largest row norm.
pub fn search_lambda(a: &NonNegMatrix, p: Exponent, tol: &Tolerance) -> Result<Vec<Vec<usize>>> {
    let norms = row_norms(a, p)?;
    let sup = norms.iter().copied().fold(0.0, f64::max);
    Ok(norms
        .iter()
        .enumerate()
        .filter(|(_, &v)| tol.matches(v, sup))
        .map(|(j, _)| vec![j])
        .collect())
}
