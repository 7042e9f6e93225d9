//! The per-family verification battery.

use super::{build_family, kls_oracle, Params};
use crate::classify::classify_spec;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::report::{CheckResult, Report};
use crate::spectral::{dual_identity_check, hypergeometric_u, monic_u, verify_eigen, verify_ttrr};

/// Runs the full battery for one family instance: structural constraints,
/// degree placement, monicity, the eigen identity, the three-term
/// recurrence, duality, and agreement with the independent series oracle.
/// Underlying errors become ERROR entries instead of aborting.
pub fn verify_family(name: &str, params: &Params, n_max: usize) -> Report {
    let mut report = Report::new(name);
    let built = match build_family(name, params, None) {
        Ok(b) => {
            report.push(CheckResult::pass(
                "build",
                match b.finite_n {
                    Some(n) => format!("finite system, truncation at N = {n}"),
                    None => String::from("infinite system"),
                },
            ));
            b
        }
        Err(e) => {
            report.push(CheckResult::error("build", e.to_string()));
            return report;
        }
    };

    if built.spec.check_q1_constraints() {
        report.push(CheckResult::pass(
            "constraints",
            "closed-form d3, d4 hold exactly",
        ));
    } else {
        report.push(CheckResult::fail(
            "constraints",
            "d3/d4 differ from the closed forms",
        ));
    }

    match built.spec.degree_triple() {
        Ok(t) if t == built.entry.degree_triple() => {
            report.push(CheckResult::pass("degree-triple", t.to_string()));
        }
        Ok(t) => report.push(CheckResult::fail(
            "degree-triple",
            format!("computed {t}, label {}", built.entry.degree_triple()),
        )),
        Err(e) => report.push(CheckResult::error("degree-triple", e.to_string())),
    }

    match classify_spec(&built.spec) {
        Ok(node) if node.id == built.entry.scheme_node => {
            report.push(CheckResult::pass("scheme-node", node.id.to_string()));
        }
        Ok(node) => report.push(CheckResult::fail(
            "scheme-node",
            format!(
                "classified {} instead of {}",
                node.id, built.entry.scheme_node
            ),
        )),
        Err(e) => report.push(CheckResult::error("scheme-node", e.to_string())),
    }

    let depth = built.triple.depth();
    let n_hi = n_max.min(depth.saturating_sub(1));
    report.push(run_many(
        "monic",
        (0..=n_hi).map(|n| -> Result<()> {
            let u = monic_u(&built.triple, n)?;
            if u.degree() == Some(n) && u.is_monic() {
                Ok(())
            } else {
                Err(Error::RuleViolation(format!(
                    "u_{n} is not monic of degree {n}"
                )))
            }
        }),
    ));

    report.push(run_many(
        "eigen",
        (0..=n_hi).map(|n| -> Result<()> {
            if verify_eigen(&built.triple, n)? {
                Ok(())
            } else {
                Err(Error::RuleViolation(format!(
                    "eigen identity fails at n = {n}"
                )))
            }
        }),
    ));

    let ttrr_hi = built.cap(n_max).min(depth.saturating_sub(2));
    report.push(run_many(
        "ttrr",
        (1..=ttrr_hi).map(|n| -> Result<()> {
            let residual = verify_ttrr(&built.triple, n)?;
            if residual.is_zero() {
                Ok(())
            } else {
                Err(Error::RuleViolation(format!(
                    "nonzero recurrence residual at n = {n}: {residual}"
                )))
            }
        }),
    ));

    // Families with constant nodes have no dual; the correct behaviour is
    // that dualization reports the collision.
    match built.triple.dualize() {
        Ok(_) => {
            let dual_hi = built.cap(n_max).min(depth.saturating_sub(1));
            let mut pairs = Vec::new();
            for n in 0..=dual_hi {
                for m in 0..=dual_hi {
                    pairs.push((n, m));
                }
            }
            report.push(run_many(
                "duality",
                pairs.into_iter().map(|(n, m)| -> Result<()> {
                    if dual_identity_check(&built.triple, n, m)? {
                        Ok(())
                    } else {
                        Err(Error::RuleViolation(format!(
                            "duality identity fails at (n, m) = ({n}, {m})"
                        )))
                    }
                }),
            ));
        }
        Err(e @ Error::DualNotDefined { .. }) => {
            report.push(CheckResult::pass(
                "duality",
                format!("correctly reported: {e}"),
            ));
        }
        Err(e) => report.push(CheckResult::error("duality", e.to_string())),
    }

    let oracle_hi = built.cap(n_max).min(depth.saturating_sub(1));
    let sample_points = [
        Scalar::from_int(2),
        Scalar::ratio(-1, 3),
        Scalar::gaussian(1, 2, 1, 1),
    ];
    let mut oracle_checks = Vec::new();
    for n in 0..=oracle_hi {
        for at in &sample_points {
            let family = built.entry.family;
            let triple = &built.triple;
            oracle_checks.push((n, at.clone(), family, triple));
        }
    }
    report.push(run_many(
        "oracle",
        oracle_checks
            .into_iter()
            .map(|(n, at, family, triple)| -> Result<()> {
                let direct = hypergeometric_u(triple, n, &at)?;
                let series = kls_oracle(family, &built.params, n, &at)?;
                if direct == series {
                    Ok(())
                } else {
                    Err(Error::RuleViolation(format!(
                        "series oracle disagrees at n = {n}, point {at}"
                    )))
                }
            }),
    ));

    report
}

fn run_many(name: &str, checks: impl Iterator<Item = Result<()>>) -> CheckResult {
    let mut count = 0usize;
    for outcome in checks {
        match outcome {
            Ok(()) => count += 1,
            Err(Error::RuleViolation(msg)) => return CheckResult::fail(name, msg),
            Err(e) => return CheckResult::error(name, e.to_string()),
        }
    }
    CheckResult::pass(name, format!("{count} instances, exact"))
}
