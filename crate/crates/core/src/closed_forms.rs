//! Closed-form operator norms `||A||_{l_p -> l_q}` when `p` or `q` is an endpoint.
//!
//! | case | formula |
//! |------|---------|
//! | `p = 1`            | largest `l_q` norm of a column |
//! | `p = inf`          | `l_q` norm of the row sums |
//! | `q = 1, 1 < p < inf`   | `l_{p*}` norm of the column sums |
//! | `q = inf, 1 < p < inf` | largest `l_{p*}` norm of a row |
//!
//! When both exponents sit on endpoints the `p` rows of the table win; the
//! `q` formulas are only valid for `1 < p < inf`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::matrix::NonNegMatrix;
use crate::oracle;
use crate::tolerance::Tolerance;
use crate::vector::lq_norm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum NormCase {
    P1,
    PInf,
    Q1,
    QInf,
    Interior,
}

/// How much a reported number can be trusted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Exactness {
    ClosedForm,
    VertexExact,
    MajorantExact,
    NumericalLowerBound,
}

impl std::fmt::Display for Exactness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Exactness::ClosedForm => "closed-form",
            Exactness::VertexExact => "vertex-exact",
            Exactness::MajorantExact => "majorant-exact",
            Exactness::NumericalLowerBound => "numerical-lower-bound",
        })
    }
}

pub fn classify(p: Exponent, q: Exponent) -> NormCase {
    match (p, q) {
        (Exponent::One, _) => NormCase::P1,
        (Exponent::Infinity, _) => NormCase::PInf,
        (_, Exponent::One) => NormCase::Q1,
        (_, Exponent::Infinity) => NormCase::QInf,
        _ => NormCase::Interior,
    }
}

/// `||A||_{l_1 -> l_q} = max_k ||column k||_q`.
pub fn norm_l1_lq(a: &NonNegMatrix, q: Exponent) -> f64 {
    a.column_q_norms(q).into_iter().fold(0.0, f64::max)
}

/// `||A||_{l_inf -> l_q} = ||row sums||_q`.
pub fn norm_linf_lq(a: &NonNegMatrix, q: Exponent) -> f64 {
    lq_norm(&a.row_sums(), q)
}

/// `||A||_{l_p -> l_1} = ||column sums||_{p*}` for `1 < p < inf`.
pub fn norm_lp_l1(a: &NonNegMatrix, p: Exponent) -> Result<f64> {
    let pf = p.as_finite().ok_or(Error::RequiresFiniteExponent(p))?;
    Ok(lq_norm(&a.column_sums(), Exponent::Finite(pf.conjugate())))
}

/// `||A||_{l_p -> l_inf} = max_j ||row j||_{p*}` for `1 < p < inf`.
pub fn norm_lp_linf(a: &NonNegMatrix, p: Exponent) -> Result<f64> {
    let pf = p.as_finite().ok_or(Error::RequiresFiniteExponent(p))?;
    Ok(a.row_q_norms(Exponent::Finite(pf.conjugate()))
        .into_iter()
        .fold(0.0, f64::max))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NormValue {
    pub value: f64,
    pub case: NormCase,
    pub exactness: Exactness,
}

/// Operator norm for any exponent pair. Endpoint cases use the closed forms;
/// the interior case runs the unrestricted oracle and is labelled as a
/// numerical lower bound.
pub fn norm(a: &NonNegMatrix, p: Exponent, q: Exponent) -> NormValue {
    let case = classify(p, q);
    let closed = |value| NormValue {
        value,
        case,
        exactness: Exactness::ClosedForm,
    };
    match case {
        NormCase::P1 => closed(norm_l1_lq(a, q)),
        NormCase::PInf => closed(norm_linf_lq(a, q)),
        NormCase::Q1 => closed(norm_lp_l1(a, p).expect("classify guarantees finite p")),
        NormCase::QInf => closed(norm_lp_linf(a, p).expect("classify guarantees finite p")),
        NormCase::Interior => {
            let r = oracle::full_norm(a, p, q, &Tolerance::default());
            NormValue {
                value: r.value,
                case,
                exactness: r.method.exactness(),
            }
        }
    }
}
