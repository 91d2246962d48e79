//! Vertex enumeration for the endpoint domains.
//!
//! `x -> ||Ax||_q` is convex, so over a polytope it peaks at a vertex. The
//! decreasing part of the `l_1` unit sphere has vertices
//! `c_n = (1/n, ..., 1/n, 0, ...)`; the decreasing part of the `l_inf` unit
//! ball has vertices `1_n = (1, ..., 1, 0, ...)`.

use crate::exponent::Exponent;
use crate::matrix::{argmax, NonNegMatrix};
use crate::vector::{lq_norm, simplex_vertex, step_vertex};

use super::{Method, OracleResult};

/// Running prefix sums of the columns, scored after each new column.
fn best_prefix(a: &NonNegMatrix, q: Exponent, score: impl Fn(f64, usize) -> f64) -> (usize, f64) {
    let mut acc = vec![0.0; a.rows()];
    let mut best = (1, f64::NEG_INFINITY);
    for n in 1..=a.cols() {
        for (j, y) in acc.iter_mut().enumerate() {
            *y += a.get(j, n - 1);
        }
        let v = score(lq_norm(&acc, q), n);
        if v > best.1 {
            best = (n, v);
        }
    }
    best
}

fn finish(
    a: &NonNegMatrix,
    q: Exponent,
    argmax: Vec<f64>,
    method: Method,
    restarts: usize,
) -> OracleResult {
    let value = lq_norm(&a.apply(&argmax), q);
    OracleResult {
        value,
        argmax,
        method,
        restarts,
        achieved_tol: 0.0,
    }
}

/// Downward norm for `p = 1`: `max_n ||A c_n||_q`.
pub fn vertex_simplex_norm(a: &NonNegMatrix, q: Exponent) -> OracleResult {
    let (n, _) = best_prefix(a, q, |v, n| v / n as f64);
    finish(
        a,
        q,
        simplex_vertex(a.cols(), n),
        Method::VertexSimplex,
        a.cols(),
    )
}

/// Downward norm for `p = inf`: `max_n ||A 1_n||_q`.
pub fn vertex_step_norm(a: &NonNegMatrix, q: Exponent) -> OracleResult {
    let (n, _) = best_prefix(a, q, |v, _| v);
    finish(a, q, step_vertex(a.cols(), n), Method::VertexStep, a.cols())
}

/// Unrestricted norm for `p = 1`: the best standard basis vector `e_k`.
pub fn unit_vertex_norm(a: &NonNegMatrix, q: Exponent) -> OracleResult {
    // A e_k is column k.
    let (k, _) = argmax(&a.column_q_norms(q));
    let mut e = vec![0.0; a.cols()];
    e[k] = 1.0;
    finish(a, q, e, Method::VertexSimplex, a.cols())
}

/// Unrestricted norm for `p = inf`: `A >= 0` makes `x -> ||Ax||_q` monotone
/// on the orthant, so the all-ones corner of the box wins.
pub fn box_corner_norm(a: &NonNegMatrix, q: Exponent) -> OracleResult {
    finish(a, q, step_vertex(a.cols(), a.cols()), Method::VertexStep, 1)
}
