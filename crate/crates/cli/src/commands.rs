//! Command implementations. Every command returns an exit code: 0 when all
//! checks pass, 1 when a mathematical check fails, or a usage error (mapped
//! to exit 2 by main).

use std::fmt::Write as _;

use askey_core::catalog::{self, Params};
use askey_core::classify::{classify_spec, normalize_uniform, scheme_graph, SeqSpecQ1};
use askey_core::error::Error;
use askey_core::exactnum::Scalar;
use askey_core::qlimits;
use askey_core::report::{CheckResult, Report};
use askey_core::spectral::{
    dual_identity_check, hypergeometric_factor, monic_u, recurrence, verify_eigen, verify_ttrr,
    TripleData,
};

use crate::args::Args;
use crate::document::{normalize_param_name, SpecDocument};

/// A usage-level failure (bad flags, unknown names, unreadable documents):
/// printed to stderr with exit code 2.
pub struct Usage(pub String);

type CmdResult = Result<i32, Usage>;

fn usage<T>(msg: impl Into<String>) -> Result<T, Usage> {
    Err(Usage(msg.into()))
}

/// Maps core errors to exit codes: problems with what the user asked for
/// are usage errors; everything else is a failed mathematical check.
fn error_code(e: &Error) -> i32 {
    match e {
        Error::UnknownFamily(_)
        | Error::UnknownLimitCase(_)
        | Error::RescalingUnavailable(_)
        | Error::MissingParameter(_)
        | Error::NonIntegerExponent { .. }
        | Error::InvalidScalarLiteral(_) => 2,
        _ => 1,
    }
}

fn parse_params_list(raw: &str) -> Result<Vec<(String, Scalar)>, Usage> {
    let mut out = Vec::new();
    for piece in raw.split(',').filter(|p| !p.trim().is_empty()) {
        let Some((key, value)) = piece.split_once('=') else {
            return usage(format!("--params expects k=v pairs, got {piece:?}"));
        };
        let scalar: Scalar = value
            .trim()
            .parse()
            .map_err(|e: Error| Usage(format!("parameter {}: {e}", key.trim())))?;
        out.push((normalize_param_name(key.trim()), scalar));
    }
    Ok(out)
}

/// What a command operates on, resolved from --family/--params or --spec.
enum Source {
    Family { name: String, params: Params },
    RawQ1(SeqSpecQ1, Option<usize>),
    RawQ(askey_core::classify::SeqSpecQ, Option<usize>),
}

fn resolve_source(args: &Args) -> Result<Source, Usage> {
    if let Some(path) = args.value("spec") {
        let text =
            std::fs::read_to_string(path).map_err(|e| Usage(format!("cannot read {path}: {e}")))?;
        let doc = SpecDocument::parse(&text).map_err(|e| Usage(e.to_string()))?;
        return match &doc {
            SpecDocument::Family {
                name,
                params,
                depth: _,
            } => Ok(Source::Family {
                name: name.clone(),
                params: params.iter().cloned().collect(),
            }),
            SpecDocument::RawQ1 { .. } => {
                let spec = doc
                    .to_q1_spec()
                    .expect("raw q1 document")
                    .map_err(|e| Usage(format!("invalid coefficients: {e}")))?;
                Ok(Source::RawQ1(spec, doc.depth()))
            }
            SpecDocument::RawQ { .. } => {
                let spec = doc
                    .to_q_spec()
                    .expect("raw q document")
                    .map_err(|e| Usage(format!("invalid coefficients: {e}")))?;
                Ok(Source::RawQ(spec, doc.depth()))
            }
        };
    }
    if let Some(name) = args.value("family") {
        let params: Params = match args.value("params") {
            Some(raw) => parse_params_list(raw)?.into_iter().collect(),
            None => catalog::find(name)
                .map_err(|e| Usage(e.to_string()))?
                .default_params(),
        };
        return Ok(Source::Family {
            name: name.to_string(),
            params,
        });
    }
    usage("expected --family <name> [--params k=v,...] or --spec <file>")
}

fn evaluate_source(
    source: &Source,
    min_depth: usize,
) -> Result<(TripleData, Option<SeqSpecQ1>), Error> {
    match source {
        Source::Family { name, params } => {
            let built = catalog::build_family(name, params, Some(min_depth))?;
            Ok((built.triple, Some(built.spec)))
        }
        Source::RawQ1(spec, depth) => {
            let depth = depth.unwrap_or(12).max(min_depth);
            Ok((spec.evaluate(depth)?, Some(spec.clone())))
        }
        Source::RawQ(spec, depth) => {
            let depth = depth.unwrap_or(12).max(min_depth);
            Ok((spec.evaluate(depth)?, None))
        }
    }
}

pub fn cmd_construct(args: &Args) -> CmdResult {
    let n = args.usize_value("n").map_err(Usage)?.unwrap_or(2);
    let source = resolve_source(args)?;
    let (triple, _) = match evaluate_source(&source, n + 2) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(error_code(&e));
        }
    };
    match monic_u(&triple, n) {
        Ok(u) => println!("u_{n} = {u}"),
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(error_code(&e));
        }
    }
    match hypergeometric_factor(&triple, n) {
        Ok(f) => println!("U-factor_{n} = {f}"),
        Err(Error::ZeroGInRange { index }) => {
            println!("U-factor_{n} = undefined (g_{index} = 0: finite system)");
        }
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(error_code(&e));
        }
    }
    for m in 0..=n {
        match recurrence(&triple, m) {
            Ok((a, None)) => println!("A_{m} = {a}"),
            Ok((a, Some(b))) => println!("A_{m} = {a}   B_{m} = {b}"),
            Err(e) => {
                eprintln!("error: {e}");
                return Ok(error_code(&e));
            }
        }
    }
    Ok(0)
}

pub fn cmd_classify(args: &Args) -> CmdResult {
    let source = resolve_source(args)?;
    let spec = match &source {
        Source::Family { name, params } => match catalog::build_family(name, params, None) {
            Ok(built) => built.spec,
            Err(e) => {
                eprintln!("error: {e}");
                return Ok(error_code(&e));
            }
        },
        Source::RawQ1(spec, _) => spec.clone(),
        Source::RawQ(spec, _) => {
            // q-shaped data is labelled by its Laurent boundaries instead.
            match spec.bidegree_triple() {
                Ok(b) => {
                    println!("bidegree = {b} (q-dual: {})", b.q_dual());
                    let status = if spec.check_q_constraints() {
                        println!("CHECK constraints: PASS closed-form d2, d-2 hold exactly");
                        0
                    } else {
                        println!("CHECK constraints: FAIL d2/d-2 differ from the closed forms");
                        1
                    };
                    return Ok(status);
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(error_code(&e));
                }
            }
        }
    };
    if !spec.check_q1_constraints() {
        println!("CHECK constraints: FAIL d3/d4 differ from the closed forms required by the three-term recurrence");
        return Ok(1);
    }
    let triple = match spec.degree_triple() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(error_code(&e));
        }
    };
    let node = match classify_spec(&spec) {
        Ok(n) => n,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(error_code(&e));
        }
    };
    println!("{triple} node={}", node.id);
    match normalize_uniform(&spec) {
        Ok(p) => println!(
            "normalized: a2={} b1={} b2={} d2={}",
            p.a2, p.b1, p.b2, p.d2
        ),
        Err(e) => println!("normalized: unavailable ({e})"),
    }
    Ok(0)
}

/// Assembles the verification battery for a raw coefficient spec.
fn verify_q1_spec(spec: &SeqSpecQ1, n_max: usize) -> Report {
    let mut report = Report::new("spec");
    if spec.check_q1_constraints() {
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
    match spec.degree_triple() {
        Ok(t) => report.push(CheckResult::pass("degree-triple", t.to_string())),
        Err(e) => report.push(CheckResult::error("degree-triple", e.to_string())),
    }
    match classify_spec(spec) {
        Ok(node) => report.push(CheckResult::pass("scheme-node", node.id.to_string())),
        Err(e) => report.push(CheckResult::fail("scheme-node", e.to_string())),
    }
    let triple = match spec.evaluate(12.max(n_max + 2)) {
        Ok(t) => t,
        Err(e) => {
            report.push(CheckResult::error("evaluate", e.to_string()));
            return report;
        }
    };
    let cap = triple
        .effective_truncation()
        .map_or(n_max, |n| n_max.min(n));
    let mut eigen_ok = true;
    for n in 0..=cap {
        match verify_eigen(&triple, n) {
            Ok(true) => {}
            Ok(false) => {
                report.push(CheckResult::fail("eigen", format!("fails at n = {n}")));
                eigen_ok = false;
                break;
            }
            Err(e) => {
                report.push(CheckResult::error("eigen", e.to_string()));
                eigen_ok = false;
                break;
            }
        }
    }
    if eigen_ok {
        report.push(CheckResult::pass("eigen", format!("n <= {cap}, exact")));
    }
    let mut ttrr_ok = true;
    for n in 1..=cap.min(triple.depth() - 2) {
        match verify_ttrr(&triple, n) {
            Ok(res) if res.is_zero() => {}
            Ok(res) => {
                report.push(CheckResult::fail(
                    "ttrr",
                    format!("nonzero residual at n = {n}: {res}"),
                ));
                ttrr_ok = false;
                break;
            }
            Err(e) => {
                report.push(CheckResult::error("ttrr", e.to_string()));
                ttrr_ok = false;
                break;
            }
        }
    }
    if ttrr_ok {
        report.push(CheckResult::pass(
            "ttrr",
            format!("residuals zero for n <= {}", cap.min(triple.depth() - 2)),
        ));
    }
    match triple.dualize() {
        Ok(_) => {
            let hi = cap.min(4);
            let ok = (0..=hi)
                .all(|n| (0..=hi).all(|m| dual_identity_check(&triple, n, m).unwrap_or(false)));
            if ok {
                report.push(CheckResult::pass("duality", format!("n, m <= {hi}, exact")));
            } else {
                report.push(CheckResult::fail("duality", "identity fails"));
            }
        }
        Err(e @ Error::DualNotDefined { .. }) => {
            report.push(CheckResult::pass(
                "duality",
                format!("correctly reported: {e}"),
            ));
        }
        Err(e) => report.push(CheckResult::error("duality", e.to_string())),
    }
    report
}

fn print_report(header: &str, report: &Report) {
    println!("== {header}");
    print!("{}", report.render());
}

pub fn cmd_verify(args: &Args) -> CmdResult {
    let n_max = args.usize_value("nmax").map_err(Usage)?.unwrap_or(6);

    if args.switch("all-catalog") {
        // Families verify independently; reports merge in catalog order.
        let entries = catalog::entries();
        let reports: Vec<Report> = std::thread::scope(|scope| {
            let handles: Vec<_> = entries
                .iter()
                .map(|entry| {
                    scope.spawn(move || {
                        catalog::verify_family(entry.key, &entry.default_params(), n_max)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("verification thread"))
                .collect()
        });
        let mut all_ok = true;
        for (entry, report) in entries.iter().zip(&reports) {
            print_report(entry.key, report);
            all_ok &= report.all_passed();
        }
        println!(
            "RESULT: {}",
            if all_ok {
                "PASS (14/14 families)"
            } else {
                "FAIL"
            }
        );
        return Ok(if all_ok { 0 } else { 1 });
    }

    let source = resolve_source(args)?;
    let perturb = args.value("perturb");
    let report = match (&source, perturb) {
        (Source::Family { name, params }, None) => catalog::verify_family(name, params, n_max),
        (Source::Family { name, params }, Some(coeff)) => {
            let built = match catalog::build_family(name, params, None) {
                Ok(b) => b,
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(error_code(&e));
                }
            };
            let index = match coeff {
                "d1" => 1,
                "d2" => 2,
                "d3" => 3,
                "d4" => 4,
                other => return usage(format!("--perturb expects d1..d4, got {other:?}")),
            };
            match built.spec.with_g_coefficient_bumped(index) {
                Ok(spec) => verify_q1_spec(&spec, n_max),
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(error_code(&e));
                }
            }
        }
        (Source::RawQ1(spec, _), None) => verify_q1_spec(spec, n_max),
        (Source::RawQ1(spec, _), Some(coeff)) => {
            let index = match coeff {
                "d1" => 1,
                "d2" => 2,
                "d3" => 3,
                "d4" => 4,
                other => return usage(format!("--perturb expects d1..d4, got {other:?}")),
            };
            match spec.with_g_coefficient_bumped(index) {
                Ok(spec) => verify_q1_spec(&spec, n_max),
                Err(e) => {
                    eprintln!("error: {e}");
                    return Ok(error_code(&e));
                }
            }
        }
        (Source::RawQ(spec, depth), _) => {
            let mut report = Report::new("q-spec");
            if spec.check_q_constraints() {
                report.push(CheckResult::pass(
                    "constraints",
                    "closed-form d2, d-2 hold exactly",
                ));
            } else {
                report.push(CheckResult::fail(
                    "constraints",
                    "d2/d-2 differ from the closed forms",
                ));
            }
            match spec.bidegree_triple() {
                Ok(b) => report.push(CheckResult::pass("bidegree-triple", b.to_string())),
                Err(e) => report.push(CheckResult::error("bidegree-triple", e.to_string())),
            }
            match spec.evaluate(depth.unwrap_or(12)) {
                Ok(triple) => {
                    let hi = n_max.min(triple.depth().saturating_sub(2));
                    let ok = (1..=hi).all(|n| {
                        verify_ttrr(&triple, n)
                            .map(|r| r.is_zero())
                            .unwrap_or(false)
                    });
                    if ok {
                        report.push(CheckResult::pass(
                            "ttrr",
                            format!("residuals zero for n <= {hi}"),
                        ));
                    } else {
                        report.push(CheckResult::fail("ttrr", "nonzero residual"));
                    }
                }
                Err(e) => report.push(CheckResult::error("evaluate", e.to_string())),
            }
            report
        }
    };
    print_report(&report.subject.clone(), &report);
    Ok(if report.all_passed() { 0 } else { 1 })
}

pub fn cmd_dual(args: &Args) -> CmdResult {
    let depth = args.usize_value("K").map_err(Usage)?.unwrap_or(8);
    let source = resolve_source(args)?;
    let (triple, _) = match evaluate_source(&source, depth) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(error_code(&e));
        }
    };
    match triple.dualize() {
        Ok(dual) => {
            let mut table = String::new();
            writeln!(table, "k\th'_k\tx'_k\tg'_k").unwrap();
            for k in 0..=depth.min(dual.depth()) {
                let g = if k == 0 {
                    String::from("-")
                } else {
                    dual.g(k).to_string()
                };
                writeln!(table, "{k}\t{}\t{}\t{}", dual.h(k), dual.x(k), g).unwrap();
            }
            print!("{table}");
            Ok(0)
        }
        Err(e) => {
            println!("CHECK dual: ERROR {e}");
            Ok(1)
        }
    }
}

pub fn cmd_limit(args: &Args) -> CmdResult {
    let Some(case_name) = args.positional.first() else {
        return usage("expected a limit case name, e.g. `limit asc1-to-charlier --a 1`");
    };
    let depth = args.usize_value("K").map_err(Usage)?.unwrap_or(8);
    let mut params = Params::new();
    if let Some(raw) = args.value("params") {
        for (key, value) in parse_params_list(raw)? {
            params.insert(key, value);
        }
    }
    for (key, value) in args.extra_flags() {
        let scalar: Scalar = value
            .parse()
            .map_err(|e: Error| Usage(format!("parameter {key}: {e}")))?;
        params.insert(normalize_param_name(key), scalar);
    }
    match qlimits::certify_limit(case_name, &params, depth) {
        Ok(report) => {
            print_report(case_name, &report);
            Ok(if report.all_passed() { 0 } else { 1 })
        }
        Err(e) => {
            let code = error_code(&e);
            if code == 2 {
                return usage(e.to_string());
            }
            println!("CHECK limit: FAIL {e}");
            Ok(1)
        }
    }
}

pub fn cmd_graph(args: &Args) -> CmdResult {
    let graph = scheme_graph();
    match args.value("format").unwrap_or("dot") {
        "dot" => {
            print!("{}", graph.to_dot());
            Ok(0)
        }
        "json" => {
            print!("{}", graph.to_json());
            Ok(0)
        }
        other => usage(format!(
            "unknown graph format {other:?} (expected dot or json)"
        )),
    }
}
