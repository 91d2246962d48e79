use std::path::Path;

use crate::closed_forms::{self, classify, Exactness, NormCase};
use crate::conditions::{
    check_2_1, check_3_1, check_3_6, check_3_7, search_lambda, ConditionReport,
};
use crate::error::Error;
use crate::exponent::Exponent;
use crate::extremizers::{
    extremal_l1, extremal_linf, extremal_lp_l1, extremal_lp_linf, Extremizer,
};
use crate::gallery::{verify_claims, ClaimStatus, GalleryName};
use crate::matrix::NonNegMatrix;
use crate::oracle::{downward_norm_with, full_norm_with, OracleConfig, OracleResult};
use crate::tolerance::Tolerance;
use crate::verify::{run_theorem, Theorem, TrialConfig};

use super::io::{read_matrix, write_matrix};
use super::report::{fmt_num, fmt_vec, Report};
use super::{
    CheckArgs, CliError, Command, ExtremalArgs, GalleryArgs, MethodArg, NormArgs, OracleArgs,
    OracleFlags, VerifyArgs,
};

type Outcome = Result<(Report, Option<CliError>), CliError>;

const SHOWN: usize = 8;

pub(super) fn dispatch(cmd: &Command) -> Outcome {
    match cmd {
        Command::Norm(a) => norm(a),
        Command::Check(a) => check(a),
        Command::Extremal(a) => extremal(a),
        Command::Oracle(a) => oracle(a),
        Command::Gallery(a) => gallery(a),
        Command::VerifyTheorem(a) => verify_theorem(a),
    }
}

fn load(path: &Path) -> Result<NonNegMatrix, CliError> {
    read_matrix(path).map_err(|e| CliError::Input(e.to_string()))
}

fn precondition(e: Error) -> CliError {
    CliError::Precondition(e.to_string())
}

fn tolerance_rel(rel: Option<f64>) -> Result<Tolerance, CliError> {
    let d = Tolerance::default();
    Tolerance::new(rel.unwrap_or(d.condition_rel), d.oracle_abs)
        .map_err(|e| CliError::Input(e.to_string()))
}

fn tolerance_abs(abs: Option<f64>) -> Result<Tolerance, CliError> {
    let d = Tolerance::default();
    Tolerance::new(d.condition_rel, abs.unwrap_or(d.oracle_abs))
        .map_err(|e| CliError::Input(e.to_string()))
}

fn oracle_config(f: &OracleFlags) -> OracleConfig {
    OracleConfig {
        restarts: f.restarts,
        seed: f.seed,
        ..OracleConfig::default()
    }
}

fn echo_matrix(r: &mut Report, path: &Path, a: &NonNegMatrix) {
    r.input("matrix", path.display().to_string());
    r.input("shape", format!("{}x{}", a.rows(), a.cols()));
}

fn norm(args: &NormArgs) -> Outcome {
    let a = load(&args.matrix.matrix)?;
    let tol = tolerance_abs(args.oracle.tol)?;
    let cfg = oracle_config(&args.oracle);
    let (p, q) = (args.p, args.q);
    let mut r = Report::new("norm");
    echo_matrix(&mut r, &args.matrix.matrix, &a);
    r.input("p", p).input("q", q);
    r.input("method", format!("{:?}", args.method).to_lowercase());

    let case = classify(p, q);
    let full = match args.method {
        MethodArg::Closed if case == NormCase::Interior => {
            return Err(CliError::Precondition(format!(
                "no closed form for p={p}, q={q}; use --method oracle"
            )))
        }
        MethodArg::Closed | MethodArg::Auto => closed_forms::norm(&a, p, q),
        MethodArg::Oracle => {
            let o = full_norm_with(&a, p, q, &tol, &cfg);
            closed_forms::NormValue {
                value: o.value,
                case,
                exactness: o.method.exactness(),
            }
        }
    };
    r.detail("case", format!("{case:?}"));
    r.value("full", full.value, full.exactness);

    let mut failure = None;
    if args.verify {
        let o = full_norm_with(&a, p, q, &tol, &cfg);
        r.value("oracle_full", o.value, o.method.exactness());
        let diff = o.value - full.value;
        r.value("oracle_minus_full", diff, Exactness::NumericalLowerBound);
        if diff.abs() > tol.oracle_abs {
            failure = Some(CliError::Verification(format!(
                "oracle {} disagrees with {} by {diff:e}",
                fmt_num(o.value),
                fmt_num(full.value)
            )));
        }
    }
    if args.downward {
        let d = downward_norm_with(&a, p, q, &tol, &cfg);
        let gap = full.value - d.value;
        r.value("downward", d.value, d.method.exactness());
        let gap_tag = if full.exactness == Exactness::NumericalLowerBound
            || d.method.exactness() == Exactness::NumericalLowerBound
        {
            Exactness::NumericalLowerBound
        } else {
            d.method.exactness()
        };
        r.value("gap", gap, gap_tag);
        r.detail("downward_method", d.method);
        r.detail("downward_argmax", &d.argmax);
        r.line(format!("downward argmax {}", fmt_vec(&d.argmax, SHOWN)));
    }
    Ok((r, failure))
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|j| j + 1).collect()
}

fn consequence(c: &ConditionReport) -> String {
    use crate::conditions::ConditionId::*;
    match (c.condition, c.holds) {
        (C2_1, true) => {
            "holds: ||A||_{1,q} is attained at e_1, so it equals the downward norm".into()
        }
        (C3_1, true) => "holds: ||A||_{p,1} equals the downward norm for every 1 < p < inf".into(),
        (C3_6, true) => {
            "holds: the downward norm equals ||A||_{p,inf} iff condition 3.7 holds".into()
        }
        (C3_7, true) => "holds: together with 3.6, ||A||_{p,inf} equals the downward norm".into(),
        (id, false) => format!("condition {id} fails"),
    }
}

fn describe_witness(c: &ConditionReport) -> String {
    use crate::conditions::Witness::*;
    match &c.witness {
        ColumnSup {
            first_column_norm,
            sup,
            argmax_column,
            gap,
        } => format!(
            "column 1 norm {}, sup {} at column {}, gap {}",
            fmt_num(*first_column_norm),
            fmt_num(*sup),
            argmax_column + 1,
            fmt_num(*gap)
        ),
        Monotone { first_violation } => match first_violation {
            Some(k) => format!("column sum increases from column {} to {}", k + 1, k + 2),
            None => "column sums are non-increasing".into(),
        },
        Dominance {
            lambda,
            inside_sup,
            outside_sup,
        } => format!(
            "lambda {:?}: inside sup {}, outside sup {}",
            one_based(lambda),
            fmt_num(*inside_sup),
            outside_sup.map(fmt_num).unwrap_or_else(|| "none".into())
        ),
        DecreasingRow {
            chosen_row,
            global_sup,
            candidates,
        } => match chosen_row {
            Some(l) => format!(
                "row {} is decreasing and attains {}",
                l + 1,
                fmt_num(*global_sup)
            ),
            None => {
                let reasons: Vec<String> = candidates
                    .iter()
                    .map(|v| match (v.first_increase, v.attains_sup) {
                        (Some(k), _) => format!("row {} increases at column {}", v.row + 1, k + 1),
                        (None, false) => {
                            format!("row {} norm {} below sup", v.row + 1, fmt_num(v.norm))
                        }
                        (None, true) => format!("row {} qualifies", v.row + 1),
                    })
                    .collect();
                format!("sup {}; {}", fmt_num(*global_sup), reasons.join("; "))
            }
        },
    }
}

fn push_condition(r: &mut Report, c: &ConditionReport) {
    r.line(format!("[{}] {}", c.condition, consequence(c)));
    r.line(format!("    {}", describe_witness(c)));
}

fn check(args: &CheckArgs) -> Outcome {
    let a = load(&args.matrix.matrix)?;
    let tol = tolerance_rel(args.tol)?;
    let mut r = Report::new("check");
    echo_matrix(&mut r, &args.matrix.matrix, &a);
    r.input("condition", &args.condition);
    r.input("tolerance", tol.condition_rel);

    let need_p = || {
        args.p.filter(|p| p.is_finite_interior()).ok_or_else(|| {
            CliError::Precondition(format!(
                "condition {} needs -p with 1 < p < inf",
                args.condition
            ))
        })
    };
    let lambda_sets = |p: Exponent| -> Result<Vec<Vec<usize>>, CliError> {
        if args.search_lambda {
            return search_lambda(&a, p, &tol).map_err(precondition);
        }
        if args.lambda.is_empty() {
            return Err(CliError::Precondition(
                "give --lambda i,j,.. or --search-lambda".into(),
            ));
        }
        if args.lambda.contains(&0) {
            return Err(CliError::Input("--lambda indices are one-based".into()));
        }
        Ok(vec![args.lambda.iter().map(|j| j - 1).collect()])
    };

    let reports: Vec<ConditionReport> = match args.condition.as_str() {
        "2.1" => {
            let q = args
                .q
                .ok_or_else(|| CliError::Precondition("condition 2.1 needs -q".into()))?;
            r.input("q", q);
            vec![check_2_1(&a, q, &tol)]
        }
        "3.1" => vec![check_3_1(&a, &tol)],
        "3.6" | "3.7" => {
            let p = need_p()?;
            r.input("p", p);
            let sets = lambda_sets(p)?;
            let mut out = Vec::new();
            for s in &sets {
                let c = if args.condition == "3.6" {
                    check_3_6(&a, p, s, &tol)
                } else {
                    check_3_7(&a, p, s, &tol)
                };
                out.push(c.map_err(precondition)?);
            }
            out
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown condition `{other}` (expected 2.1, 3.1, 3.6 or 3.7)"
            )))
        }
    };
    let holds = reports.iter().any(|c| c.holds);
    r.detail("holds", holds);
    r.detail("reports", &reports);
    for c in &reports {
        push_condition(&mut r, c);
    }
    Ok((r, None))
}

fn extremal(args: &ExtremalArgs) -> Outcome {
    let a = load(&args.matrix.matrix)?;
    let tol = tolerance_rel(args.tol)?;
    let (p, q) = (args.p, args.q);
    let mut r = Report::new("extremal");
    echo_matrix(&mut r, &args.matrix.matrix, &a);
    r.input("p", p).input("q", q);

    let e: Extremizer = match classify(p, q) {
        NormCase::P1 => extremal_l1(&a, q),
        NormCase::PInf => extremal_linf(&a, q),
        NormCase::Q1 => extremal_lp_l1(&a, p).map_err(precondition)?,
        NormCase::QInf => {
            let tops: Vec<usize> = search_lambda(&a, p, &tol)
                .map_err(precondition)?
                .into_iter()
                .flatten()
                .collect();
            let c = check_3_7(&a, p, &tops, &tol).map_err(precondition)?;
            let l = match &c.witness {
                crate::conditions::Witness::DecreasingRow {
                    chosen_row: Some(l),
                    ..
                } => *l,
                _ => tops[0],
            };
            push_condition(&mut r, &c);
            extremal_lp_linf(&a, p, l).map_err(precondition)?
        }
        NormCase::Interior => {
            return Err(CliError::Precondition(format!(
                "no explicit extremizer for 1 < p, q < inf (p={p}, q={q}); use the `oracle` command"
            )))
        }
    };
    let full = closed_forms::norm(&a, p, q);
    let certifies = e.is_certified_shape() && tol.matches(e.achieved, full.value);
    r.value("achieved", e.achieved, Exactness::ClosedForm);
    r.value("full", full.value, full.exactness);
    r.detail("extremizer", &e);
    r.detail("certifies_equality", certifies);
    r.line(format!("x = {}", fmt_vec(&e.x, SHOWN)));
    r.line(format!("provenance {:?}", e.provenance));
    r.line(if certifies {
        "certifies that the norm equals the downward norm".to_string()
    } else if e.degenerate {
        "degenerate: defining data is zero, fell back to e_1".to_string()
    } else if let Some(k) = e.monotonicity_violation {
        format!("does not certify: x increases at coordinate {}", k + 1)
    } else {
        "does not certify: achieved value is below the norm".to_string()
    });
    Ok((r, None))
}

fn push_oracle(r: &mut Report, name: &str, o: &OracleResult) {
    r.value(name, o.value, o.method.exactness());
    r.detail(name, o);
    r.line(format!(
        "{name}: method {:?}, {} candidates, final relative step {:e}",
        o.method, o.restarts, o.achieved_tol
    ));
    r.line(format!("{name} argmax {}", fmt_vec(&o.argmax, SHOWN)));
}

fn oracle(args: &OracleArgs) -> Outcome {
    let a = load(&args.matrix.matrix)?;
    let tol = tolerance_abs(args.oracle.tol)?;
    let cfg = oracle_config(&args.oracle);
    let (p, q) = (args.p, args.q);
    let mut r = Report::new("oracle");
    echo_matrix(&mut r, &args.matrix.matrix, &a);
    r.input("p", p)
        .input("q", q)
        .input("downward", args.downward);
    r.input("restarts", cfg.restarts).input("seed", cfg.seed);
    let o = if args.downward {
        downward_norm_with(&a, p, q, &tol, &cfg)
    } else {
        full_norm_with(&a, p, q, &tol, &cfg)
    };
    push_oracle(&mut r, if args.downward { "downward" } else { "full" }, &o);
    Ok((r, None))
}

fn gallery(args: &GalleryArgs) -> Outcome {
    let name: GalleryName = args.name.parse().map_err(CliError::Input)?;
    let tol = tolerance_abs(args.tol)?;
    let entry = name.build(args.size).map_err(precondition)?;
    let (dp, dq) = name.default_exponents();
    let (p, q) = (args.p.unwrap_or(dp), args.q.unwrap_or(dq));
    let mut r = Report::new("gallery");
    r.input("name", name)
        .input("size", args.size)
        .input("p", p)
        .input("q", q);
    if let Some(path) = &args.out {
        write_matrix(path, &entry.matrix).map_err(|e| CliError::Input(e.to_string()))?;
        r.input("out", path.display().to_string());
    }
    let report = verify_claims(&entry, p, q, &tol);
    r.value("full", report.full.value, report.full.exactness);
    r.value("downward", report.downward.value, report.downward.exactness);
    for o in &report.outcomes {
        let tag = match o.status {
            ClaimStatus::Pass => "PASS",
            ClaimStatus::Fail => "FAIL",
            ClaimStatus::Skipped => "SKIP",
        };
        r.line(format!("{tag} {}", o.description));
        for v in &o.values {
            r.line(format!(
                "     {} = {} ({})",
                v.name,
                fmt_num(v.value),
                v.exactness
            ));
        }
        if let Some(n) = &o.note {
            r.line(format!("     {n}"));
        }
    }
    let failed: Vec<&str> = report
        .outcomes
        .iter()
        .filter(|o| o.status == ClaimStatus::Fail)
        .map(|o| o.description)
        .collect();
    r.detail("claims", &report.outcomes);
    r.detail("all_passed", failed.is_empty());
    let failure = (!failed.is_empty()).then(|| {
        CliError::Verification(format!(
            "{} claim(s) failed: {}",
            failed.len(),
            failed.join("; ")
        ))
    });
    Ok((r, failure))
}

fn verify_theorem(args: &VerifyArgs) -> Outcome {
    let theorem: Theorem = args.which.parse().map_err(CliError::Input)?;
    let tol = tolerance_rel(args.tol)?;
    let cfg = TrialConfig {
        trials: args.trials,
        size: args.size,
        p: args.p,
        q: args.q,
        seed: args.seed,
        ..TrialConfig::default()
    };
    let mut r = Report::new("verify-theorem");
    r.input("which", theorem)
        .input("trials", cfg.trials)
        .input("size", cfg.size);
    r.input("seed", cfg.seed);
    let run = run_theorem(theorem, &cfg, &tol).map_err(precondition)?;
    if let Some(p) = run.p {
        r.input("p", p);
    }
    if let Some(q) = run.q {
        r.input("q", q);
    }
    let ag = run.agreement;
    let counted = ag.agreeing() + ag.disagreeing();
    r.line(format!("{}/{} agree", ag.agreeing(), counted));
    if run.skipped > 0 {
        r.line(format!(
            "{} trial(s) skipped: no searched row set dominates strictly",
            run.skipped
        ));
    }
    r.line("                 equal    not equal".to_string());
    r.line(format!(
        "condition holds  {:>5}    {:>9}",
        ag.both, ag.condition_only
    ));
    r.line(format!(
        "condition fails  {:>5}    {:>9}",
        ag.equality_only, ag.neither
    ));
    for c in &run.counterexamples {
        r.line(format!(
            "counterexample at trial {}: condition {}, closed form {}, downward {} {}",
            c.trial,
            c.condition,
            fmt_num(c.closed_form),
            fmt_num(c.downward),
            c.detail
        ));
    }
    let failure = (!run.passed()).then(|| {
        CliError::Verification(format!(
            "{} disagreement(s) out of {counted}",
            run.counterexamples.len()
        ))
    });
    r.detail("run", &run);
    Ok((r, failure))
}
