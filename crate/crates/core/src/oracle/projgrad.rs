//! Multi-start ascent for `max ||Ax||_q` over the unit `l_p` sphere, either
//! on the monotone cone or on the whole non-negative orthant.
//!
//! Each iteration first tries a conditional-gradient step: maximise the
//! linearisation `<g, x>` over the feasible set. Because `||Ax||_q` is convex
//! this never decreases the objective, and for `p = 2` it is the familiar
//! power step. When it fails to improve, a projected-gradient step
//! `normalize(P(x + eta g))` with backtracking on `eta` is tried instead. `P`
//! is pool-adjacent-violators on the cone and clamping on the orthant.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::exponent::Exponent;
use crate::matrix::NonNegMatrix;
use crate::vector::{lq_norm, normalize, pow_nonneg, simplex_vertex, step_vertex};

use super::pava::project_monotone_cone;
use super::{Method, OracleConfig, OracleResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// `x_1 >= x_2 >= ... >= 0`.
    MonotoneCone,
    /// `x >= 0`.
    Orthant,
}

struct Problem<'a> {
    a: &'a NonNegMatrix,
    p: Exponent,
    q: Exponent,
    domain: Domain,
}

impl Problem<'_> {
    fn objective(&self, x: &[f64]) -> f64 {
        lq_norm(&self.a.apply(x), self.q)
    }

    /// A (sub)gradient of `x -> ||Ax||_q` at `x`, given `y = Ax`.
    fn gradient(&self, y: &[f64]) -> Vec<f64> {
        let w: Vec<f64> = match self.q {
            Exponent::One => vec![1.0; y.len()],
            Exponent::Infinity => {
                // Smallest achieving row on ties.
                let (j, _) = crate::matrix::argmax(y);
                let mut w = vec![0.0; y.len()];
                w[j] = 1.0;
                w
            }
            Exponent::Finite(q) => {
                let n = lq_norm(y, self.q);
                if n == 0.0 {
                    return vec![0.0; self.a.cols()];
                }
                y.iter()
                    .map(|&t| pow_nonneg(t / n, q.value() - 1.0))
                    .collect()
            }
        };
        self.a.apply_transpose(&w)
    }

    fn project(&self, v: &[f64]) -> Vec<f64> {
        match self.domain {
            Domain::MonotoneCone => project_monotone_cone(v),
            Domain::Orthant => v.iter().map(|t| t.max(0.0)).collect(),
        }
    }

    /// Projects and rescales to the unit sphere; `None` for the zero vector.
    fn feasible(&self, v: &[f64]) -> Option<Vec<f64>> {
        let mut x = self.project(v);
        (normalize(&mut x, self.p) > 0.0).then_some(x)
    }

    /// `argmax <g, x>` over the feasible set, for `g >= 0`.
    fn linear_oracle(&self, g: &[f64]) -> Option<Vec<f64>> {
        let n = g.len();
        match (self.domain, self.p) {
            (Domain::MonotoneCone, Exponent::One | Exponent::Infinity) => {
                let mut cum = 0.0;
                let mut best = (1, f64::NEG_INFINITY);
                for (k, t) in g.iter().enumerate() {
                    cum += t;
                    let score = if self.p == Exponent::One {
                        cum / (k + 1) as f64
                    } else {
                        cum
                    };
                    if score > best.1 {
                        best = (k + 1, score);
                    }
                }
                Some(if self.p == Exponent::One {
                    simplex_vertex(n, best.0)
                } else {
                    step_vertex(n, best.0)
                })
            }
            (Domain::Orthant, Exponent::One) => {
                let (k, _) = crate::matrix::argmax(g);
                let mut e = vec![0.0; n];
                e[k] = 1.0;
                Some(e)
            }
            (Domain::Orthant, Exponent::Infinity) => Some(vec![1.0; n]),
            (_, Exponent::Finite(p)) => {
                let base = self.project(g);
                let h: Vec<f64> = base
                    .iter()
                    .map(|&t| pow_nonneg(t, p.dual() - 1.0))
                    .collect();
                self.feasible(&h)
            }
        }
    }
}

struct Ascent {
    x: Vec<f64>,
    value: f64,
    last_improvement: f64,
}

fn ascend(prob: &Problem<'_>, start: Vec<f64>, cfg: &OracleConfig) -> Ascent {
    let mut x = start;
    let mut value = prob.objective(&x);
    let mut last_improvement = 0.0;
    let mut eta = f64::NAN;
    for _ in 0..cfg.max_iter {
        let y = prob.a.apply(&x);
        let g = prob.gradient(&y);
        let gmax = g.iter().fold(0.0f64, |m, t| m.max(t.abs()));
        if gmax == 0.0 {
            break;
        }
        if eta.is_nan() {
            eta = 1.0 / gmax;
        }

        let mut next = prob
            .linear_oracle(&g)
            .map(|c| {
                let v = prob.objective(&c);
                (c, v)
            })
            .filter(|(_, v)| *v > value);

        if next.is_none() {
            let mut step = eta;
            for _ in 0..60 {
                let trial: Vec<f64> = x.iter().zip(&g).map(|(a, b)| a + step * b).collect();
                if let Some(c) = prob.feasible(&trial) {
                    let v = prob.objective(&c);
                    if v > value {
                        next = Some((c, v));
                        eta = step * 2.0;
                        break;
                    }
                }
                step *= 0.5;
            }
        }

        match next {
            Some((c, v)) => {
                let rel = (v - value) / value.max(f64::MIN_POSITIVE);
                x = c;
                value = v;
                last_improvement = rel;
                if rel < cfg.rel_improvement {
                    break;
                }
            }
            None => {
                last_improvement = 0.0;
                break;
            }
        }
    }
    Ascent {
        x,
        value,
        last_improvement,
    }
}

/// Dirichlet(1) draw in increment space mapped into the domain.
fn random_start(rng: &mut ChaCha8Rng, n: usize, domain: Domain) -> Vec<f64> {
    let t: Vec<f64> = (0..n).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    match domain {
        Domain::Orthant => t,
        Domain::MonotoneCone => {
            // x_k = t_k + t_{k+1} + ... + t_n
            let mut x = t;
            for k in (0..n.saturating_sub(1)).rev() {
                x[k] += x[k + 1];
            }
            x
        }
    }
}

/// Runs the multi-start ascent. `seeds` are extra starting points (projected
/// onto the domain first); the best vertices `c_n`, `1_n` are always offered.
pub fn maximize(
    a: &NonNegMatrix,
    p: Exponent,
    q: Exponent,
    domain: Domain,
    seeds: Vec<Vec<f64>>,
    cfg: &OracleConfig,
) -> OracleResult {
    let prob = Problem { a, p, q, domain };
    let n = a.cols();
    let total = cfg.restarts.max(1);
    let random_count = total / 2;
    let seeded_count = total - random_count;

    let mut candidates: Vec<Vec<f64>> = seeds.iter().filter_map(|s| prob.feasible(s)).collect();
    let forced = candidates.len();
    for m in 1..=n {
        candidates.extend(prob.feasible(&simplex_vertex(n, m)));
        candidates.extend(prob.feasible(&step_vertex(n, m)));
    }
    // Keep the explicit seeds, then the best-scoring vertices.
    let mut vertex_part: Vec<(f64, Vec<f64>)> = candidates
        .split_off(forced)
        .into_iter()
        .map(|x| (prob.objective(&x), x))
        .collect();
    vertex_part.sort_by(|l, r| r.0.total_cmp(&l.0));
    let keep = seeded_count.saturating_sub(candidates.len()).max(1);
    candidates.extend(vertex_part.into_iter().take(keep).map(|(_, x)| x));

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..random_count {
        let s = random_start(&mut rng, n, domain);
        candidates.extend(prob.feasible(&s));
    }

    let runs: Vec<Ascent> = candidates
        .into_par_iter()
        .map(|x0| ascend(&prob, x0, cfg))
        .collect();
    let count = runs.len();
    // First run wins ties so the result does not depend on thread scheduling.
    let best = runs
        .into_iter()
        .reduce(|b, r| if r.value > b.value { r } else { b })
        .expect("at least one start");

    OracleResult {
        value: best.value,
        argmax: best.x,
        method: Method::ProjGrad,
        restarts: count,
        achieved_tol: best.last_improvement,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn identity_l2() {
        let id = NonNegMatrix::identity(2).unwrap();
        let two = Exponent::finite(2.0);
        for d in [Domain::MonotoneCone, Domain::Orthant] {
            let r = maximize(&id, two, two, d, vec![], &cfg());
            assert!((r.value - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn rank_one_ones() {
        let a = NonNegMatrix::from_rows(&[[1.0, 1.0], [1.0, 1.0]]).unwrap();
        let two = Exponent::finite(2.0);
        let r = maximize(&a, two, two, Domain::Orthant, vec![], &cfg());
        assert!((r.value - 2.0).abs() < 1e-9);
    }

    #[test]
    fn single_row_matches_holder() {
        let a = NonNegMatrix::from_rows(&[[2.0, 1.0]]).unwrap();
        let two = Exponent::finite(2.0);
        let r = maximize(&a, two, two, Domain::MonotoneCone, vec![], &cfg());
        assert!((r.value - 5f64.sqrt()).abs() < 1e-6);
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = NonNegMatrix::from_fn(5, 5, |j, k| ((7 * j + 3 * k) % 5) as f64 / 4.0).unwrap();
        let (p, q) = (Exponent::finite(1.5), Exponent::finite(3.0));
        let r1 = maximize(&a, p, q, Domain::MonotoneCone, vec![], &cfg());
        let r2 = maximize(&a, p, q, Domain::MonotoneCone, vec![], &cfg());
        assert_eq!(r1.value.to_bits(), r2.value.to_bits());
        assert_eq!(r1.argmax, r2.argmax);
    }

    #[test]
    fn random_starts_lie_in_the_cone() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let x = random_start(&mut rng, 6, Domain::MonotoneCone);
        assert!(crate::vector::is_non_increasing(&x));
        assert!(x.iter().all(|t| *t > 0.0));
    }
}
