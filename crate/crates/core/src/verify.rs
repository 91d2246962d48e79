//! Randomized checks that each attainment condition agrees with equality of
//! the closed-form norm and the exact downward norm.
//!
//! Matrices have i.i.d. uniform `[0, 1]` entries, each zeroed with
//! probability `zero_prob`. To make both sides of each equivalence common,
//! half of the trials are nudged toward the condition: columns reordered for
//! 2.1 and 3.1, the boosted row sorted for 3.2.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::closed_forms::{norm_l1_lq, norm_linf_lq, norm_lp_l1, norm_lp_linf};
use crate::conditions::{check_2_1, check_3_1, check_3_6, check_3_7, search_lambda};
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::extremizers::{extremal_linf, extremal_lp_l1};
use crate::matrix::NonNegMatrix;
use crate::oracle::{linear_downward_max, vertex_simplex_norm, vertex_step_norm};
use crate::tolerance::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Theorem {
    #[serde(rename = "2.1")]
    T2_1,
    #[serde(rename = "2.2")]
    T2_2,
    #[serde(rename = "3.1")]
    T3_1,
    #[serde(rename = "3.2")]
    T3_2,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::T2_1 => "2.1",
            Theorem::T2_2 => "2.2",
            Theorem::T3_1 => "3.1",
            Theorem::T3_2 => "3.2",
        })
    }
}

impl FromStr for Theorem {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "2.1" => Ok(Theorem::T2_1),
            "2.2" => Ok(Theorem::T2_2),
            "3.1" => Ok(Theorem::T3_1),
            "3.2" => Ok(Theorem::T3_2),
            _ => Err(format!(
                "unknown theorem `{s}` (expected 2.1, 2.2, 3.1 or 3.2)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialConfig {
    pub trials: usize,
    pub size: usize,
    /// Used by 3.1 and 3.2; ignored by 2.1 and 2.2.
    pub p: Exponent,
    /// Used by 2.1 and 2.2; ignored by 3.1 and 3.2.
    pub q: Exponent,
    pub seed: u64,
    pub zero_prob: f64,
    /// Absolute tolerance for "closed form equals downward norm".
    pub equality_abs: f64,
}

impl Default for TrialConfig {
    fn default() -> Self {
        Self {
            trials: 200,
            size: 6,
            p: Exponent::finite(2.0),
            q: Exponent::finite(2.0),
            seed: 0,
            zero_prob: 0.3,
            equality_abs: 1e-9,
        }
    }
}

/// Uniform `[0, 1]` entries, each zeroed with probability `zero_prob`.
pub fn random_matrix(
    rng: &mut ChaCha8Rng,
    rows: usize,
    cols: usize,
    zero_prob: f64,
) -> NonNegMatrix {
    NonNegMatrix::from_fn(rows, cols, |_, _| {
        let v: f64 = rng.random();
        if rng.random::<f64>() < zero_prob {
            0.0
        } else {
            v
        }
    })
    .expect("uniform entries are valid")
}

fn permute_columns(a: &NonNegMatrix, order: &[usize]) -> NonNegMatrix {
    NonNegMatrix::from_fn(a.rows(), a.cols(), |j, k| a.get(j, order[k])).expect("entries copied")
}

/// Adds 1 to every entry of one random row so it dominates the others in
/// most draws; when `sort` is set the row is also made non-increasing.
pub fn boost_row(rng: &mut ChaCha8Rng, a: &NonNegMatrix, sort: bool) -> NonNegMatrix {
    let l = rng.random_range(0..a.rows());
    let mut boosted: Vec<f64> = a.row(l).iter().map(|v| v + 1.0).collect();
    if sort {
        boosted.sort_by(|x, y| y.total_cmp(x));
    }
    NonNegMatrix::from_fn(a.rows(), a.cols(), |j, k| {
        if j == l {
            boosted[k]
        } else {
            a.get(j, k)
        }
    })
    .expect("boosted entries are valid")
}

fn generate(theorem: Theorem, cfg: &TrialConfig) -> Vec<NonNegMatrix> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.trials)
        .map(|t| {
            let a = random_matrix(&mut rng, cfg.size, cfg.size, cfg.zero_prob);
            let nudge = t % 2 == 1;
            match theorem {
                Theorem::T2_1 if nudge => {
                    let norms = a.column_q_norms(cfg.q);
                    let (best, _) = crate::matrix::argmax(&norms);
                    let mut order: Vec<usize> = (0..a.cols()).collect();
                    order.swap(0, best);
                    permute_columns(&a, &order)
                }
                Theorem::T3_1 if nudge => {
                    let sums = a.column_sums();
                    let mut order: Vec<usize> = (0..a.cols()).collect();
                    order.sort_by(|&x, &y| sums[y].total_cmp(&sums[x]));
                    permute_columns(&a, &order)
                }
                Theorem::T3_1 => {
                    let mut order: Vec<usize> = (0..a.cols()).collect();
                    order.shuffle(&mut rng);
                    permute_columns(&a, &order)
                }
                Theorem::T3_2 => boost_row(&mut rng, &a, nudge),
                _ => a,
            }
        })
        .collect()
}

/// Counts of (condition, equality) outcomes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub both: usize,
    pub condition_only: usize,
    pub equality_only: usize,
    pub neither: usize,
}

impl Agreement {
    fn record(&mut self, condition: bool, equality: bool) {
        match (condition, equality) {
            (true, true) => self.both += 1,
            (true, false) => self.condition_only += 1,
            (false, true) => self.equality_only += 1,
            (false, false) => self.neither += 1,
        }
    }

    pub fn agreeing(&self) -> usize {
        self.both + self.neither
    }

    pub fn disagreeing(&self) -> usize {
        self.condition_only + self.equality_only
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub trial: usize,
    pub condition: bool,
    pub closed_form: f64,
    pub downward: f64,
    pub detail: String,
    pub matrix: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremRun {
    pub theorem: Theorem,
    pub trials: usize,
    pub size: usize,
    pub seed: u64,
    pub p: Option<Exponent>,
    pub q: Option<Exponent>,
    pub agreement: Agreement,
    /// Trials not counted because the theorem's hypothesis failed (3.2 only).
    pub skipped: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl TheoremRun {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

enum Outcome {
    Counted {
        condition: bool,
        equality: bool,
        closed_form: f64,
        downward: f64,
        detail: Option<String>,
    },
    Skipped,
}

fn trial(
    theorem: Theorem,
    a: &NonNegMatrix,
    cfg: &TrialConfig,
    tol: &Tolerance,
) -> Result<Outcome> {
    let eq = |x: f64, y: f64| (x - y).abs() <= cfg.equality_abs;
    Ok(match theorem {
        Theorem::T2_1 => {
            let a = a.clone().with_col_support(a.cols())?;
            let condition = check_2_1(&a, cfg.q, tol).holds;
            let closed = norm_l1_lq(&a, cfg.q);
            let down = vertex_simplex_norm(&a, cfg.q).value;
            Outcome::Counted {
                condition,
                equality: eq(closed, down),
                closed_form: closed,
                downward: down,
                detail: None,
            }
        }
        Theorem::T2_2 => {
            let closed = norm_linf_lq(a, cfg.q);
            let down = vertex_step_norm(a, cfg.q).value;
            let ext = extremal_linf(a, cfg.q).achieved;
            let within = |x: f64, y: f64| (x - y).abs() <= 1e-12;
            let equality = within(closed, down) && within(closed, ext);
            Outcome::Counted {
                condition: true,
                equality,
                closed_form: closed,
                downward: down,
                detail: (!equality).then(|| format!("extremizer achieved {ext}")),
            }
        }
        Theorem::T3_1 => {
            let condition = check_3_1(a, tol).holds;
            let closed = norm_lp_l1(a, cfg.p)?;
            let down = linear_downward_max(&a.column_sums(), cfg.p)?.value;
            let mut detail = None;
            let mut equality = eq(closed, down);
            if condition {
                let ext = extremal_lp_l1(a, cfg.p)?.achieved;
                if (ext - closed).abs() > 1e-12 {
                    detail = Some(format!("extremizer achieved {ext}, closed form {closed}"));
                    equality = false;
                }
            }
            Outcome::Counted {
                condition,
                equality,
                closed_form: closed,
                downward: down,
                detail,
            }
        }
        Theorem::T3_2 => {
            let candidates = search_lambda(a, cfg.p, tol)?;
            let Some(lambda) = candidates.into_iter().find(|l| {
                check_3_6(a, cfg.p, l, tol)
                    .map(|r| r.holds)
                    .unwrap_or(false)
            }) else {
                return Ok(Outcome::Skipped);
            };
            let condition = check_3_7(a, cfg.p, &lambda, tol)?.holds;
            let closed = norm_lp_linf(a, cfg.p)?;
            let down = a
                .row_iter()
                .map(|row| linear_downward_max(row, cfg.p).map(|r| r.value))
                .try_fold(0.0f64, |m, v| v.map(|v| m.max(v)))?;
            Outcome::Counted {
                condition,
                equality: eq(closed, down),
                closed_form: closed,
                downward: down,
                detail: Some(format!("lambda = {{{}}}", lambda[0] + 1)),
            }
        }
    })
}

/// Runs `cfg.trials` random trials of `theorem`. Trials are independent and
/// evaluated in parallel; the result depends only on `cfg`.
pub fn run_theorem(theorem: Theorem, cfg: &TrialConfig, tol: &Tolerance) -> Result<TheoremRun> {
    if cfg.size == 0 {
        return Err(Error::SizeTooSmall { min: 1, got: 0 });
    }
    let needs_finite_p = matches!(theorem, Theorem::T3_1 | Theorem::T3_2);
    if needs_finite_p && !cfg.p.is_finite_interior() {
        return Err(Error::RequiresFiniteExponent(cfg.p));
    }
    let matrices = generate(theorem, cfg);
    let outcomes: Vec<Outcome> = matrices
        .par_iter()
        .map(|a| trial(theorem, a, cfg, tol))
        .collect::<Result<_>>()?;

    let mut agreement = Agreement::default();
    let mut skipped = 0;
    let mut counterexamples = Vec::new();
    for (t, (o, a)) in outcomes.into_iter().zip(&matrices).enumerate() {
        match o {
            Outcome::Skipped => skipped += 1,
            Outcome::Counted {
                condition,
                equality,
                closed_form,
                downward,
                detail,
            } => {
                agreement.record(condition, equality);
                if condition != equality {
                    counterexamples.push(Counterexample {
                        trial: t,
                        condition,
                        closed_form,
                        downward,
                        detail: detail.unwrap_or_default(),
                        matrix: a.to_rows(),
                    });
                }
            }
        }
    }
    Ok(TheoremRun {
        theorem,
        trials: cfg.trials,
        size: cfg.size,
        seed: cfg.seed,
        p: needs_finite_p.then_some(cfg.p),
        q: (!needs_finite_p).then_some(cfg.q),
        agreement,
        skipped,
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(trials: usize) -> TrialConfig {
        TrialConfig {
            trials,
            ..TrialConfig::default()
        }
    }

    #[test]
    fn random_matrices_are_reproducible() {
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(
            random_matrix(&mut r1, 4, 4, 0.3),
            random_matrix(&mut r2, 4, 4, 0.3)
        );
    }

    #[test]
    fn zero_fraction_is_roughly_right() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = random_matrix(&mut rng, 100, 100, 0.3);
        let zeros = a.entries().iter().filter(|v| **v == 0.0).count() as f64 / 1e4;
        assert!((zeros - 0.3).abs() < 0.03, "{zeros}");
    }

    #[test]
    fn boosted_row_is_sorted_on_request() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random_matrix(&mut rng, 5, 5, 0.3);
        let b = boost_row(&mut rng, &a, true);
        let l = (0..5).find(|&j| b.row(j) != a.row(j)).unwrap();
        assert!(crate::vector::is_non_increasing(b.row(l)));
        assert!(b.row(l).iter().all(|v| *v >= 1.0));
    }

    #[test]
    fn theorems_agree_on_small_runs() {
        let t = Tolerance::default();
        for (th, p, q) in [
            (Theorem::T2_1, Exponent::finite(2.0), Exponent::finite(2.0)),
            (Theorem::T2_2, Exponent::finite(2.0), Exponent::Infinity),
            (Theorem::T3_1, Exponent::finite(3.0), Exponent::One),
            (Theorem::T3_2, Exponent::finite(1.5), Exponent::Infinity),
        ] {
            let run = run_theorem(th, &TrialConfig { p, q, ..cfg(40) }, &t).unwrap();
            assert!(run.passed(), "{th}: {:?}", run.counterexamples);
        }
    }

    #[test]
    fn both_sides_of_the_equivalence_occur() {
        let t = Tolerance::default();
        let run = run_theorem(Theorem::T3_1, &cfg(60), &t).unwrap();
        assert!(
            run.agreement.both > 0 && run.agreement.neither > 0,
            "{:?}",
            run.agreement
        );
        let run = run_theorem(Theorem::T3_2, &cfg(60), &t).unwrap();
        assert!(
            run.agreement.both > 0 && run.agreement.neither > 0,
            "{:?}",
            run.agreement
        );
    }

    #[test]
    fn rejects_bad_exponents() {
        let c = TrialConfig {
            p: Exponent::One,
            ..cfg(1)
        };
        assert!(run_theorem(Theorem::T3_1, &c, &Tolerance::default()).is_err());
    }

    #[test]
    fn theorem_names_parse() {
        assert_eq!("3.2".parse::<Theorem>().unwrap(), Theorem::T3_2);
        assert!("4.1".parse::<Theorem>().is_err());
    }
}
