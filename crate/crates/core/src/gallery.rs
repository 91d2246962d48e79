//! Named matrices with machine-checkable claims.
//!
//! All constructors build square `N x N` truncations. Claims that involve a
//! limit of the infinite matrix are checked against exact finite-`N`
//! quantities (partial sums, row norms); the limit itself is reported as a
//! context value only.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::closed_forms::{self, Exactness};
use crate::conditions::{check_2_1, check_3_1, check_3_6, check_3_7};
use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::matrix::NonNegMatrix;
use crate::oracle;
use crate::tolerance::Tolerance;
use crate::vector::{lq_norm, pow_nonneg};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GalleryName {
    Cesaro,
    Pi26Counterexample,
    HarmonicCounterexample,
    AtomAt22,
}

impl GalleryName {
    pub const ALL: [GalleryName; 4] = [
        GalleryName::Cesaro,
        GalleryName::Pi26Counterexample,
        GalleryName::HarmonicCounterexample,
        GalleryName::AtomAt22,
    ];

    pub fn short(self) -> &'static str {
        match self {
            GalleryName::Cesaro => "cesaro",
            GalleryName::Pi26Counterexample => "pi26",
            GalleryName::HarmonicCounterexample => "harmonic",
            GalleryName::AtomAt22 => "atom22",
        }
    }

    /// The exponent pair the entry's claims are about.
    pub fn default_exponents(self) -> (Exponent, Exponent) {
        match self {
            GalleryName::Cesaro => (Exponent::finite(2.0), Exponent::finite(2.0)),
            GalleryName::Pi26Counterexample => (Exponent::One, Exponent::One),
            GalleryName::HarmonicCounterexample | GalleryName::AtomAt22 => {
                (Exponent::finite(2.0), Exponent::Infinity)
            }
        }
    }

    pub fn build(self, n: usize) -> Result<GalleryEntry> {
        match self {
            GalleryName::Cesaro => cesaro(n),
            GalleryName::Pi26Counterexample => pi26_counterexample(n),
            GalleryName::HarmonicCounterexample => harmonic_counterexample(n),
            GalleryName::AtomAt22 => atom_at_22(n),
        }
    }
}

impl fmt::Display for GalleryName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short())
    }
}

impl FromStr for GalleryName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "cesaro" => Ok(GalleryName::Cesaro),
            "pi26" | "pi26counterexample" => Ok(GalleryName::Pi26Counterexample),
            "harmonic" | "harmoniccounterexample" => Ok(GalleryName::HarmonicCounterexample),
            "atom22" | "atomat22" => Ok(GalleryName::AtomAt22),
            _ => Err(format!(
                "unknown gallery matrix `{s}` (expected cesaro, pi26, harmonic or atom22)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim {
    HardyBound,
    DownwardMatchesFull,
    RowSumsOne,
    ColumnSumsDecrease,
    PartialSumNorm,
    Condition21Fails,
    AveragingGap,
    FirstRowNorm,
    Condition36FailsOffFirstRow,
    FirstRowMargin,
    Condition37FailsAll,
    DownwardLowerBound,
    GapWithinMargin,
    FullNormOne,
    DownwardValue,
    Condition36Holds,
    Condition37Fails,
    StrictGap,
    Sandwich,
}

impl Claim {
    pub fn description(self) -> &'static str {
        match self {
            Claim::HardyBound => "truncated l_p -> l_p norm is strictly below p/(p-1)",
            Claim::DownwardMatchesFull => "downward norm equals full norm within 1e-6",
            Claim::RowSumsOne => "every row sums to 1",
            Claim::ColumnSumsDecrease => "column sums are non-increasing",
            Claim::PartialSumNorm => {
                "l_1 -> l_1 norm equals the longest complete band sum 1 + 1/4 + ... + 1/n^2"
            }
            Claim::Condition21Fails => "column 1 does not have the largest column sum",
            Claim::AveragingGap => {
                "0 <= full - downward <= H_n / n with n the longest complete band"
            }
            Claim::FirstRowNorm => "full norm equals the row 1 l_{p*} norm",
            Claim::Condition36FailsOffFirstRow => {
                "strict dominance fails for every singleton {j}, j >= 2"
            }
            Claim::FirstRowMargin => "row 1 dominates the rest by exactly the last harmonic term",
            Claim::Condition37FailsAll => {
                "no singleton holds a decreasing row attaining the largest row norm"
            }
            Claim::DownwardLowerBound => "downward norm >= (sum_{k<N} k^{-p*})^{1/p*}",
            Claim::GapWithinMargin => "0 <= full - downward <= row 1 margin",
            Claim::FullNormOne => "full norm equals 1",
            Claim::DownwardValue => "downward norm equals 2^{-1/p}",
            Claim::Condition36Holds => "row 2 strictly dominates all other rows",
            Claim::Condition37Fails => "row 2 is not decreasing",
            Claim::StrictGap => "full norm strictly exceeds downward norm",
            Claim::Sandwich => "downward norm does not exceed full norm",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GalleryEntry {
    pub name: GalleryName,
    pub size: usize,
    pub matrix: NonNegMatrix,
    pub claims: Vec<Claim>,
}

fn check_size(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::SizeTooSmall { min, got: n });
    }
    Ok(())
}

fn entry(
    name: GalleryName,
    n: usize,
    f: impl FnMut(usize, usize) -> f64,
    claims: &[Claim],
) -> Result<GalleryEntry> {
    let mut claims = claims.to_vec();
    claims.push(Claim::Sandwich);
    Ok(GalleryEntry {
        name,
        size: n,
        matrix: NonNegMatrix::from_fn(n, n, f)?,
        claims,
    })
}

/// `a_{j,k} = 1/j` for `k <= j`, zero otherwise.
pub fn cesaro(n: usize) -> Result<GalleryEntry> {
    check_size(n, 1)?;
    entry(
        GalleryName::Cesaro,
        n,
        |j, k| if k <= j { 1.0 / (j + 1) as f64 } else { 0.0 },
        &[
            Claim::HardyBound,
            Claim::DownwardMatchesFull,
            Claim::RowSumsOne,
            Claim::ColumnSumsDecrease,
        ],
    )
}

/// Column `k` carries the band `1, 1/4, ..., 1/k^2` from the diagonal down;
/// column 1 is `e_1`.
pub fn pi26_counterexample(n: usize) -> Result<GalleryEntry> {
    check_size(n, 2)?;
    entry(
        GalleryName::Pi26Counterexample,
        n,
        |j, k| {
            if k <= j && j <= 2 * k {
                let m = (j - k + 1) as f64;
                1.0 / (m * m)
            } else {
                0.0
            }
        },
        &[
            Claim::PartialSumNorm,
            Claim::Condition21Fails,
            Claim::AveragingGap,
        ],
    )
}

/// Row 1 is `(1/2, 1, 1/3, 1/4, ...)`; row `j >= 2` is `(1, 1/2, ..., 1/(j-1), 0, ...)`.
pub fn harmonic_counterexample(n: usize) -> Result<GalleryEntry> {
    check_size(n, 2)?;
    entry(
        GalleryName::HarmonicCounterexample,
        n,
        |j, k| match j {
            0 => match k {
                0 => 0.5,
                1 => 1.0,
                _ => 1.0 / (k + 1) as f64,
            },
            _ if k < j => 1.0 / (k + 1) as f64,
            _ => 0.0,
        },
        &[
            Claim::FirstRowNorm,
            Claim::Condition36FailsOffFirstRow,
            Claim::FirstRowMargin,
            Claim::Condition37FailsAll,
            Claim::DownwardLowerBound,
            Claim::GapWithinMargin,
        ],
    )
}

/// A single unit entry at row 2, column 2.
pub fn atom_at_22(n: usize) -> Result<GalleryEntry> {
    check_size(n, 2)?;
    entry(
        GalleryName::AtomAt22,
        n,
        |j, k| if j == 1 && k == 1 { 1.0 } else { 0.0 },
        &[
            Claim::FullNormOne,
            Claim::DownwardValue,
            Claim::Condition36Holds,
            Claim::Condition37Fails,
            Claim::StrictGap,
        ],
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Pass,
    Fail,
    /// The claim is about a different exponent pair.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NamedValue {
    pub name: String,
    pub value: f64,
    pub exactness: Exactness,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimOutcome {
    pub claim: Claim,
    pub description: &'static str,
    pub status: ClaimStatus,
    pub values: Vec<NamedValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GalleryReport {
    pub name: GalleryName,
    pub size: usize,
    pub p: Exponent,
    pub q: Exponent,
    pub full: NamedValue,
    pub downward: NamedValue,
    pub outcomes: Vec<ClaimOutcome>,
}

impl GalleryReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.status != ClaimStatus::Fail)
    }

    pub fn outcome(&self, claim: Claim) -> Option<&ClaimOutcome> {
        self.outcomes.iter().find(|o| o.claim == claim)
    }
}

fn nv(name: &str, value: f64, exactness: Exactness) -> NamedValue {
    NamedValue {
        name: name.to_string(),
        value,
        exactness,
    }
}

fn exact(name: &str, value: f64) -> NamedValue {
    nv(name, value, Exactness::ClosedForm)
}

/// `(sum_{k=1}^{m} k^{-r})^{1/r}`.
fn harmonic_power_norm(m: usize, r: Exponent) -> f64 {
    let v: Vec<f64> = (1..=m).map(|k| 1.0 / k as f64).collect();
    lq_norm(&v, r)
}

struct Ctx<'a> {
    entry: &'a GalleryEntry,
    p: Exponent,
    q: Exponent,
    tol: &'a Tolerance,
    full: NamedValue,
    downward: NamedValue,
}

impl Ctx<'_> {
    fn a(&self) -> &NonNegMatrix {
        &self.entry.matrix
    }

    fn gap(&self) -> f64 {
        self.full.value - self.downward.value
    }

    fn pd(&self) -> Option<Exponent> {
        self.p.as_finite().map(|f| Exponent::Finite(f.conjugate()))
    }
}

/// Evaluates every claim of `entry` at the exponent pair `(p, q)`.
pub fn verify_claims(
    entry: &GalleryEntry,
    p: Exponent,
    q: Exponent,
    tol: &Tolerance,
) -> GalleryReport {
    let a = &entry.matrix;
    let (full, down) = rayon::join(
        || closed_forms::norm(a, p, q),
        || oracle::downward_norm(a, p, q, tol),
    );
    let ctx = Ctx {
        entry,
        p,
        q,
        tol,
        full: nv("full", full.value, full.exactness),
        downward: nv("downward", down.value, down.method.exactness()),
    };
    let outcomes = entry.claims.iter().map(|&c| evaluate(&ctx, c)).collect();
    GalleryReport {
        name: entry.name,
        size: entry.size,
        p,
        q,
        full: ctx.full.clone(),
        downward: ctx.downward.clone(),
        outcomes,
    }
}

fn evaluate(ctx: &Ctx<'_>, claim: Claim) -> ClaimOutcome {
    let (status, values, note) = match evaluate_inner(ctx, claim) {
        Some((ok, values, note)) => (
            if ok {
                ClaimStatus::Pass
            } else {
                ClaimStatus::Fail
            },
            values,
            note,
        ),
        None => (
            ClaimStatus::Skipped,
            Vec::new(),
            Some(format!("not applicable at p={}, q={}", ctx.p, ctx.q)),
        ),
    };
    ClaimOutcome {
        claim,
        description: claim.description(),
        status,
        values,
        note,
    }
}

type Eval = Option<(bool, Vec<NamedValue>, Option<String>)>;

fn evaluate_inner(ctx: &Ctx<'_>, claim: Claim) -> Eval {
    let a = ctx.a();
    let n = ctx.entry.size;
    let (full, down) = (ctx.full.clone(), ctx.downward.clone());
    let is_11 = ctx.p == Exponent::One && ctx.q == Exponent::One;
    let finite_p_inf_q = ctx.p.is_finite_interior() && ctx.q == Exponent::Infinity;
    match claim {
        Claim::Sandwich => Some((
            down.value <= full.value + ctx.tol.oracle_abs,
            vec![full, down],
            None,
        )),
        Claim::HardyBound => {
            let pf = ctx.p.as_finite().filter(|_| ctx.p == ctx.q)?;
            let bound = pf.value() / (pf.value() - 1.0);
            Some((
                full.value < bound,
                vec![full, exact("hardy_constant", bound)],
                None,
            ))
        }
        Claim::DownwardMatchesFull => Some(((ctx.gap()).abs() <= 1e-6, vec![full, down], None)),
        Claim::RowSumsOne => {
            let dev = a
                .row_sums()
                .iter()
                .fold(0.0f64, |m, s| m.max((s - 1.0).abs()));
            Some((
                dev <= 1e-12,
                vec![exact("max_row_sum_deviation", dev)],
                None,
            ))
        }
        Claim::ColumnSumsDecrease => {
            let r = check_3_1(a, ctx.tol);
            Some((r.holds, Vec::new(), None))
        }
        Claim::PartialSumNorm => {
            if !is_11 {
                return None;
            }
            let band = n.div_ceil(2);
            let partial = harmonic_power_norm(band, Exponent::finite(2.0)).powi(2);
            let limit = std::f64::consts::PI.powi(2) / 6.0;
            let ok = (full.value - partial).abs() <= 1e-12 * partial;
            Some((
                ok,
                vec![
                    full.clone(),
                    exact("band_partial_sum", partial),
                    exact("limit_pi2_over_6", limit),
                    exact("distance_to_limit", limit - full.value),
                ],
                Some(format!("longest complete band has {band} entries")),
            ))
        }
        Claim::Condition21Fails => {
            if ctx.q != Exponent::One {
                return None;
            }
            let r = check_2_1(a, ctx.q, ctx.tol);
            let gap = match r.witness {
                crate::conditions::Witness::ColumnSup { gap, .. } => gap,
                _ => f64::NAN,
            };
            Some((!r.holds && gap > 0.0, vec![exact("column_gap", gap)], None))
        }
        Claim::AveragingGap => {
            if !is_11 {
                return None;
            }
            let band = n.div_ceil(2);
            let h: f64 = (1..=band).map(|m| 1.0 / m as f64).sum();
            let bound = h / band as f64;
            let gap = ctx.gap();
            Some((
                (-ctx.tol.oracle_abs..=bound).contains(&gap),
                vec![full, down, exact("gap_bound", bound)],
                None,
            ))
        }
        Claim::FirstRowNorm => {
            if !finite_p_inf_q {
                return None;
            }
            let expected = harmonic_power_norm(n, ctx.pd()?);
            Some((
                (full.value - expected).abs() <= 1e-12 * expected,
                vec![full, exact("row1_norm", expected)],
                None,
            ))
        }
        Claim::Condition36FailsOffFirstRow => {
            if !finite_p_inf_q {
                return None;
            }
            let holding: Vec<usize> = (1..a.rows())
                .filter(|&j| {
                    check_3_6(a, ctx.p, &[j], ctx.tol)
                        .map(|r| r.holds)
                        .unwrap_or(true)
                })
                .map(|j| j + 1)
                .collect();
            let note = (!holding.is_empty()).then(|| format!("holds for rows {holding:?}"));
            Some((holding.is_empty(), Vec::new(), note))
        }
        Claim::FirstRowMargin => {
            if !finite_p_inf_q {
                return None;
            }
            let r = check_3_6(a, ctx.p, &[0], ctx.tol).ok()?;
            let crate::conditions::Witness::Dominance {
                inside_sup,
                outside_sup,
                ..
            } = r.witness
            else {
                return None;
            };
            let margin = inside_sup - outside_sup.unwrap_or(0.0);
            let pd = ctx.pd()?;
            let expected = harmonic_power_norm(n, pd) - harmonic_power_norm(n - 1, pd);
            Some((
                (margin - expected).abs() <= 1e-12,
                vec![exact("margin", margin), exact("expected_margin", expected)],
                Some(format!(
                    "on this truncation strict dominance for {{1}} {}",
                    if r.holds { "holds" } else { "fails" }
                )),
            ))
        }
        Claim::Condition37FailsAll => {
            if !finite_p_inf_q {
                return None;
            }
            let holding: Vec<usize> = (0..a.rows())
                .filter(|&j| {
                    check_3_7(a, ctx.p, &[j], ctx.tol)
                        .map(|r| r.holds)
                        .unwrap_or(true)
                })
                .map(|j| j + 1)
                .collect();
            let note = (!holding.is_empty()).then(|| format!("holds for rows {holding:?}"));
            Some((holding.is_empty(), Vec::new(), note))
        }
        Claim::DownwardLowerBound => {
            if !finite_p_inf_q {
                return None;
            }
            let bound = harmonic_power_norm(n - 1, ctx.pd()?);
            Some((
                down.value >= bound - 1e-9,
                vec![down, exact("lower_bound", bound)],
                None,
            ))
        }
        Claim::GapWithinMargin => {
            if !finite_p_inf_q {
                return None;
            }
            let pd = ctx.pd()?;
            let margin = harmonic_power_norm(n, pd) - harmonic_power_norm(n - 1, pd);
            let gap = ctx.gap();
            Some((
                gap >= -ctx.tol.oracle_abs && gap <= margin + ctx.tol.oracle_abs,
                vec![exact("gap", gap), exact("margin", margin)],
                None,
            ))
        }
        Claim::FullNormOne => {
            if ctx.q != Exponent::Infinity || ctx.p == Exponent::Infinity {
                return None;
            }
            Some(((full.value - 1.0).abs() <= 1e-12, vec![full], None))
        }
        Claim::DownwardValue => {
            if ctx.q != Exponent::Infinity || ctx.p == Exponent::Infinity {
                return None;
            }
            let expected = pow_nonneg(2.0, -1.0 / ctx.p.to_f64());
            Some((
                (down.value - expected).abs() <= 1e-12,
                vec![down, exact("expected", expected)],
                None,
            ))
        }
        Claim::Condition36Holds => {
            if !finite_p_inf_q {
                return None;
            }
            Some((
                check_3_6(a, ctx.p, &[1], ctx.tol).ok()?.holds,
                Vec::new(),
                None,
            ))
        }
        Claim::Condition37Fails => {
            if !finite_p_inf_q {
                return None;
            }
            Some((
                !check_3_7(a, ctx.p, &[1], ctx.tol).ok()?.holds,
                Vec::new(),
                None,
            ))
        }
        Claim::StrictGap => {
            if ctx.q != Exponent::Infinity || ctx.p == Exponent::Infinity {
                return None;
            }
            let gap = ctx.gap();
            Some((
                gap > ctx.tol.oracle_abs,
                vec![full, down, exact("gap", gap)],
                None,
            ))
        }
    }
}
