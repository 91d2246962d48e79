//! Numerical computation of `||A||_{p,q}` and of its restriction to
//! non-negative decreasing inputs, independent of the closed forms.
//!
//! The restricted ("downward") norm is exact whenever an endpoint exponent
//! allows it:
//!
//! * `p = 1`: vertex enumeration over `c_n` ([`vertex_simplex_norm`]),
//! * `p = inf`: vertex enumeration over `1_n` ([`vertex_step_norm`]),
//! * `q = 1`: the objective is `<S, x>` with `S` the column sums, solved by
//!   the least concave majorant ([`linear_downward_max`]),
//! * `q = inf`: the best row under the same majorant solve,
//!
//! and falls back to multi-start ascent ([`projgrad_downward`]) otherwise.

mod majorant;
mod pava;
mod projgrad;
mod vertex;

use serde::Serialize;

use crate::closed_forms::Exactness;
use crate::exponent::Exponent;
use crate::extremizers;
use crate::matrix::NonNegMatrix;
use crate::tolerance::Tolerance;
use crate::vector::lq_norm;

pub use majorant::{level_function, linear_downward_max};
pub use pava::{antitonic_regression, project_monotone_cone};
pub use projgrad::Domain;
pub use vertex::{box_corner_norm, unit_vertex_norm, vertex_simplex_norm, vertex_step_norm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    VertexSimplex,
    VertexStep,
    ConcaveMajorant,
    ProjGrad,
}

impl Method {
    pub fn exactness(self) -> Exactness {
        match self {
            Method::VertexSimplex | Method::VertexStep => Exactness::VertexExact,
            Method::ConcaveMajorant => Exactness::MajorantExact,
            Method::ProjGrad => Exactness::NumericalLowerBound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleResult {
    pub value: f64,
    pub argmax: Vec<f64>,
    pub method: Method,
    /// Number of candidates evaluated (vertices) or ascents run.
    pub restarts: usize,
    /// Relative improvement of the final ascent step; zero for exact methods.
    pub achieved_tol: f64,
}

/// Settings of the multi-start ascent.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleConfig {
    pub restarts: usize,
    pub seed: u64,
    pub max_iter: usize,
    /// Stop once a step improves the objective by less than this fraction.
    pub rel_improvement: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            restarts: 64,
            seed: 0,
            max_iter: 10_000,
            rel_improvement: 1e-12,
        }
    }
}

/// `sup ||Ax||_q` over non-negative non-increasing `x` with `||x||_p = 1`.
pub fn downward_norm(a: &NonNegMatrix, p: Exponent, q: Exponent, tol: &Tolerance) -> OracleResult {
    downward_norm_with(a, p, q, tol, &OracleConfig::default())
}

pub fn downward_norm_with(
    a: &NonNegMatrix,
    p: Exponent,
    q: Exponent,
    _tol: &Tolerance,
    cfg: &OracleConfig,
) -> OracleResult {
    match (p, q) {
        (Exponent::One, _) => vertex_simplex_norm(a, q),
        (Exponent::Infinity, _) => vertex_step_norm(a, q),
        (_, Exponent::One) => {
            let r = linear_downward_max(&a.column_sums(), p).expect("column sums are non-negative");
            with_value_from(a, q, r)
        }
        (_, Exponent::Infinity) => best_row_majorant(a, p),
        _ => projgrad_downward_with(a, p, q, cfg),
    }
}

/// Downward norm for `q = inf`: the best row under the majorant solve.
fn best_row_majorant(a: &NonNegMatrix, p: Exponent) -> OracleResult {
    let mut best: Option<OracleResult> = None;
    for row in a.row_iter() {
        let r = linear_downward_max(row, p).expect("rows are non-negative");
        if best.as_ref().is_none_or(|b| r.value > b.value) {
            best = Some(r);
        }
    }
    let mut r = best.expect("matrix has at least one row");
    r.restarts = a.rows();
    with_value_from(a, Exponent::Infinity, r)
}

/// Re-evaluates `||A argmax||_q` so the reported value is attained by the
/// reported vector.
fn with_value_from(a: &NonNegMatrix, q: Exponent, mut r: OracleResult) -> OracleResult {
    r.value = lq_norm(&a.apply(&r.argmax), q);
    r
}

/// `sup ||Ax||_q` over `||x||_p = 1`. With `A >= 0` the search is confined to
/// `x >= 0`.
pub fn full_norm(a: &NonNegMatrix, p: Exponent, q: Exponent, tol: &Tolerance) -> OracleResult {
    full_norm_with(a, p, q, tol, &OracleConfig::default())
}

pub fn full_norm_with(
    a: &NonNegMatrix,
    p: Exponent,
    q: Exponent,
    tol: &Tolerance,
    cfg: &OracleConfig,
) -> OracleResult {
    match p {
        Exponent::One => unit_vertex_norm(a, q),
        Exponent::Infinity => box_corner_norm(a, q),
        Exponent::Finite(_) => {
            let mut seeds = closed_form_seeds(a, p, q);
            // The exact decreasing optimum is also feasible here, which keeps
            // the unrestricted value from dipping below the restricted one.
            if matches!(q, Exponent::One | Exponent::Infinity) {
                seeds.push(downward_norm_with(a, p, q, tol, cfg).argmax);
            }
            let mut r = projgrad::maximize(a, p, q, Domain::Orthant, seeds, cfg);
            r.value = lq_norm(&a.apply(&r.argmax), q);
            r
        }
    }
}

/// Multi-start ascent over the monotone cone, seeded with the closed-form
/// extremizers when the case has one.
pub fn projgrad_downward(
    a: &NonNegMatrix,
    p: Exponent,
    q: Exponent,
    restarts: usize,
    seed: u64,
) -> OracleResult {
    let cfg = OracleConfig {
        restarts,
        seed,
        ..OracleConfig::default()
    };
    projgrad_downward_with(a, p, q, &cfg)
}

pub fn projgrad_downward_with(
    a: &NonNegMatrix,
    p: Exponent,
    q: Exponent,
    cfg: &OracleConfig,
) -> OracleResult {
    let seeds = closed_form_seeds(a, p, q);
    let mut r = projgrad::maximize(a, p, q, Domain::MonotoneCone, seeds, cfg);
    r.value = lq_norm(&a.apply(&r.argmax), q);
    r
}

fn closed_form_seeds(a: &NonNegMatrix, p: Exponent, q: Exponent) -> Vec<Vec<f64>> {
    use crate::closed_forms::{classify, NormCase};
    match classify(p, q) {
        NormCase::P1 => vec![extremizers::extremal_l1(a, q).x],
        NormCase::PInf => vec![extremizers::extremal_linf(a, q).x],
        NormCase::Q1 => extremizers::extremal_lp_l1(a, p)
            .map(|e| vec![e.x])
            .unwrap_or_default(),
        NormCase::QInf => (0..a.rows())
            .filter_map(|l| extremizers::extremal_lp_linf(a, p, l).ok())
            .map(|e| e.x)
            .collect(),
        NormCase::Interior => Vec::new(),
    }
}
