//! Acceptance suite: one test per criterion, every comparison exact.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see one
//! status line per criterion.

mod common;

use askey_core::catalog::{
    build_family, entries, kls_oracle, params_from, q_entries, q_spec, verify_family, Params,
};
use askey_core::classify::{
    classify_spec, general_constraints, normalize_uniform, scheme_graph, verify_d_remark,
    verify_difference_eqs, SeqSpecQ, SeqSpecQ1,
};
use askey_core::error::Error;
use askey_core::exactnum::Scalar;
use askey_core::qlimits::{certify_limit, limit_at_one, unrescaled_askey_wilson_h};
use askey_core::spectral::{dual_identity_check, hypergeometric_u, verify_eigen, verify_ttrr};

use common::{sample_params, Rng};

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn pass(criterion: u32, name: &str, detail: &str) {
    println!("ACCEPTANCE {criterion} {name}: PASS {detail}");
}

/// Three deterministic admissible parameter points per family.
fn three_points(key: &str, seed: u64) -> Vec<Params> {
    let mut rng = Rng::new(seed);
    (0..3).map(|_| sample_params(key, &mut rng)).collect()
}

#[test]
fn criterion_01_catalog_completeness() {
    let mut count = 0;
    for entry in entries() {
        for params in std::iter::once(entry.default_params())
            .chain(three_points(entry.key, 0xC0FFEE + count as u64))
        {
            let built = build_family(entry.key, &params, None)
                .unwrap_or_else(|e| panic!("{} failed to build: {e}", entry.key));
            assert!(built.spec.check_q1_constraints(), "{}", entry.key);
            assert_eq!(
                built.spec.degree_triple().unwrap(),
                entry.degree_triple(),
                "degree label mismatch for {}",
                entry.key
            );
        }
        count += 1;
    }
    assert_eq!(count, 14);
    pass(
        1,
        "catalog-completeness",
        "14/14 families build, constraints and labels exact",
    );
}

#[test]
fn criterion_02_ttrr_sufficiency() {
    let mut checked = 0;
    for entry in entries() {
        for params in three_points(entry.key, 0x5EED_0002) {
            let built = build_family(entry.key, &params, None)
                .unwrap_or_else(|e| panic!("{}: {e}", entry.key));
            let hi = built.cap(7);
            for n in 1..=hi {
                let residual = verify_ttrr(&built.triple, n).unwrap();
                assert!(
                    residual.is_zero(),
                    "{} at n = {n}: residual {residual}",
                    entry.key
                );
                checked += 1;
            }
        }
    }
    pass(
        2,
        "ttrr-sufficiency",
        &format!("{checked} residuals identically zero"),
    );
}

#[test]
fn criterion_03_ttrr_necessity() {
    let mut rng = Rng::new(0x5EED_0003);
    let mut produced = 0;
    while produced < 20 {
        let a = [
            int(rng.int_in(-3, 3)),
            int(rng.int_in(-4, 4)),
            int(rng.int_in(-3, 3)),
        ];
        let b = [
            int(rng.int_in(-3, 3)),
            int(rng.int_in(-4, 4)),
            int(rng.int_in(-3, 3)),
        ];
        if a[1].is_zero() && a[2].is_zero() {
            continue;
        }
        let d1 = rng.nonzero_rational();
        let d2 = Scalar::ratio(rng.int_in(-4, 4), rng.int_in(1, 3));
        // Correct closed forms, then break one of them.
        let d3 = &(&(&a[1] * &b[2]) + &(&a[2] * &b[1])) - &(&int(2) * &(&a[2] * &b[2]));
        let d4 = &a[2] * &b[2];
        let bump = rng.nonzero_rational();
        let (d3, d4) = if rng.int_in(0, 1) == 0 {
            (&d3 + &bump, d4)
        } else {
            (d3, &d4 + &bump)
        };
        let Ok(spec) = SeqSpecQ1::new(a, b, [d1, d2, d3, d4]) else {
            continue;
        };
        assert!(!spec.check_q1_constraints());
        let Ok(triple) = spec.evaluate(12) else {
            continue; // eigenvalue collision; resample
        };
        let broken = (1..=3).any(|n| !verify_ttrr(&triple, n).unwrap().is_zero());
        assert!(
            broken,
            "violated constraints left every small residual zero"
        );
        produced += 1;
    }
    pass(
        3,
        "ttrr-necessity",
        "20/20 violated specs produce a nonzero residual at n <= 3",
    );
}

#[test]
fn criterion_04_eigen_identity() {
    let mut checked = 0;
    for entry in entries() {
        for params in three_points(entry.key, 0x5EED_0004) {
            let built = build_family(entry.key, &params, None).unwrap();
            for n in 0..=8 {
                assert!(
                    verify_eigen(&built.triple, n).unwrap(),
                    "{} at n = {n}",
                    entry.key
                );
                let u = askey_core::spectral::monic_u(&built.triple, n).unwrap();
                assert!(
                    u.degree() == Some(n) && u.is_monic(),
                    "{}: u_{n} is not monic of degree {n}",
                    entry.key
                );
                checked += 1;
            }
        }
    }
    pass(
        4,
        "eigen-identity",
        &format!("{checked} eigen + monicity checks exact"),
    );
}

#[test]
fn criterion_05_duality() {
    let dual_free: [&str; 4] = ["jacobi", "laguerre", "bessel", "binomial"];
    let mut identity_checks = 0;
    for entry in entries() {
        for params in three_points(entry.key, 0x5EED_0005) {
            let built = build_family(entry.key, &params, None).unwrap();
            if dual_free.contains(&entry.key) {
                assert!(
                    matches!(built.triple.dualize(), Err(Error::DualNotDefined { .. })),
                    "{} should have no dual",
                    entry.key
                );
                continue;
            }
            built
                .triple
                .dualize()
                .unwrap_or_else(|e| panic!("{}: {e}", entry.key));
            let hi = built.cap(6);
            for n in 0..=hi {
                for m in 0..=hi {
                    assert!(
                        dual_identity_check(&built.triple, n, m).unwrap(),
                        "{} at (n, m) = ({n}, {m})",
                        entry.key
                    );
                    identity_checks += 1;
                }
            }
        }
    }
    pass(
        5,
        "duality",
        &format!("{identity_checks} identity checks exact; 4 families correctly dual-free"),
    );
}

#[test]
fn criterion_06_hypergeometric_agreement() {
    let mut rng = Rng::new(0x5EED_0006);
    let mut checked = 0;
    for entry in entries() {
        for params in three_points(entry.key, 0x5EED_0606) {
            let built = build_family(entry.key, &params, None).unwrap();
            let points: Vec<Scalar> = (0..3).map(|_| rng.sample_point()).collect();
            for n in 0..=built.cap(6) {
                for at in &points {
                    let direct = hypergeometric_u(&built.triple, n, at).unwrap();
                    let series = kls_oracle(entry.family, &params, n, at).unwrap();
                    assert_eq!(direct, series, "{} at n = {n}, {at}", entry.key);
                    checked += 1;
                }
            }
        }
    }
    pass(
        6,
        "hypergeometric-agreement",
        &format!("{checked} series comparisons exact"),
    );
}

#[test]
fn criterion_07_constraint_equivalence() {
    let mut rng = Rng::new(0x5EED_0007);
    // Polynomial shape at xi = 3 against the closed forms for d3, d4.
    for _ in 0..10 {
        let a = [
            rng.nonzero_rational(),
            rng.nonzero_rational(),
            rng.nonzero_rational(),
        ];
        let b = [
            rng.nonzero_rational(),
            rng.nonzero_rational(),
            rng.nonzero_rational(),
        ];
        let d1 = rng.nonzero_rational();
        let d2 = rng.nonzero_rational();
        let d3 = &(&(&a[1] * &b[2]) + &(&a[2] * &b[1])) - &(&int(2) * &(&a[2] * &b[2]));
        let d4 = &a[2] * &b[2];
        let spec = SeqSpecQ1::new(a, b, [d1, d2, d3, d4]).unwrap();
        let h = [spec.h_at(0), spec.h_at(1), spec.h_at(2)];
        let x = [spec.x_at(0), spec.x_at(1), spec.x_at(2)];
        let (g3, g4) = general_constraints(
            [&h[0], &h[1], &h[2]],
            [&x[0], &x[1], &x[2]],
            &spec.g_at(1),
            &spec.g_at(2),
            &int(3),
        )
        .unwrap();
        assert_eq!(g3, spec.g_at(3));
        assert_eq!(g4, spec.g_at(4));
    }
    // Laurent shape at xi = 1 + q + 1/q against the q-case closed forms.
    for _ in 0..10 {
        let q = loop {
            let q = Scalar::ratio(rng.nonzero_int_in(-7, 7), rng.int_in(1, 5));
            if !q.is_zero() && !q.is_one() && q != int(-1) {
                break q;
            }
        };
        let a = [
            rng.nonzero_rational(),
            rng.nonzero_rational(),
            rng.nonzero_rational(),
        ];
        let b = [
            rng.nonzero_rational(),
            rng.nonzero_rational(),
            rng.nonzero_rational(),
        ];
        let d2 = &(&a[2] * &b[2]) * &q.inv().unwrap();
        let dm2 = &(&a[0] * &b[0]) * &q;
        let dm1 = rng.nonzero_rational();
        let d1 = rng.nonzero_rational();
        let d0 = -&(&(&dm2 + &dm1) + &(&d1 + &d2));
        let spec = SeqSpecQ::new(q.clone(), a, b, [dm2, dm1, d0, d1, d2]).unwrap();
        assert!(spec.check_q_constraints());
        let xi = &(&Scalar::one() + &q) + &q.inv().unwrap();
        let h = [spec.h_at(0), spec.h_at(1), spec.h_at(2)];
        let x = [spec.x_at(0), spec.x_at(1), spec.x_at(2)];
        let (g3, g4) = general_constraints(
            [&h[0], &h[1], &h[2]],
            [&x[0], &x[1], &x[2]],
            &spec.g_at(1),
            &spec.g_at(2),
            &xi,
        )
        .unwrap();
        assert_eq!(g3, spec.g_at(3));
        assert_eq!(g4, spec.g_at(4));
    }
    pass(
        7,
        "constraint-equivalence",
        "both closed forms reproduced at 10 random points each",
    );
}

#[test]
fn criterion_08_difference_equation_forms() {
    // Every catalog family instance solves the difference equations at
    // xi = 3, and the d_k-form agrees.
    for entry in entries() {
        for params in three_points(entry.key, 0x5EED_0008) {
            let built = build_family(entry.key, &params, Some(12)).unwrap();
            assert!(
                verify_difference_eqs(&built.triple, &int(3), 12).unwrap(),
                "{}",
                entry.key
            );
            assert!(
                verify_d_remark(&built.triple, &int(3), 12).unwrap(),
                "{}",
                entry.key
            );
        }
    }
    // Laurent-form data solves them at xi = 1 + q + 1/q.
    for q in [int(2), int(3), Scalar::ratio(1, 2)] {
        for entry in q_entries() {
            let mut params = params_from(&[
                ("q", q.clone()),
                ("a", int(2)),
                ("b", int(3)),
                ("c", int(5)),
                ("d", int(7)),
            ]);
            params.retain(|k, _| entry.param_names.contains(&k.as_str()));
            let spec = q_spec(entry.family, &params).unwrap();
            let triple = spec.evaluate(12).unwrap();
            let xi = &(&Scalar::one() + &q) + &q.inv().unwrap();
            assert!(
                verify_difference_eqs(&triple, &xi, 12).unwrap(),
                "{} at q = {q}",
                entry.key
            );
            assert!(
                verify_d_remark(&triple, &xi, 12).unwrap(),
                "{} at q = {q}",
                entry.key
            );
        }
    }
    pass(
        8,
        "difference-equations",
        "order-3/order-5 forms and d_k-remark exact on all instances",
    );
}

#[test]
fn criterion_09_q_limits() {
    let depth = 8;
    let aw_instances = [
        params_from(&[("a", int(2)), ("b", int(4)), ("c", int(6)), ("d", int(8))]),
        params_from(&[("a", int(2)), ("b", int(2)), ("c", int(4)), ("d", int(6))]),
        params_from(&[("a", int(4)), ("b", int(6)), ("c", int(8)), ("d", int(10))]),
    ];
    for params in &aw_instances {
        let report = certify_limit("aw-to-wilson", params, depth).unwrap();
        assert!(report.all_passed(), "{}", report.render());
    }
    let asc_instances = [
        params_from(&[("lambda", int(1)), ("t", int(3))]),
        params_from(&[("lambda", int(2)), ("t", int(-2))]),
        params_from(&[("lambda", int(3)), ("t", int(5))]),
    ];
    for params in &asc_instances {
        let report = certify_limit("asc-to-meixner-pollaczek", params, depth).unwrap();
        assert!(report.all_passed(), "{}", report.render());
    }
    let carlitz_instances = [
        params_from(&[("a", int(1))]),
        params_from(&[("a", int(2))]),
        params_from(&[("a", int(-3))]),
    ];
    for params in &carlitz_instances {
        let report = certify_limit("asc1-to-charlier", params, depth).unwrap();
        assert!(report.all_passed(), "{}", report.render());
    }
    // The q-Stieltjes-Wigert row has no parameters: one instance.
    let report = certify_limit("sw-to-binomial", &Params::new(), depth).unwrap();
    assert!(report.all_passed(), "{}", report.render());

    // Negative check: without rescaling the top-family eigenvalues all
    // collapse to zero at q = 1.
    let abcd = int(2 * 4 * 6 * 8);
    for k in 0..=depth {
        let h = unrescaled_askey_wilson_h(&abcd, k);
        assert_eq!(limit_at_one(&h).unwrap(), Scalar::zero(), "k = {k}");
    }
    pass(
        9,
        "q-limits",
        "aw/asc/asc1 at 3 instances each + sw certified for k <= 8; unrescaled limit degenerates to 0",
    );
}

#[test]
fn criterion_10_scheme_graph_and_classification() {
    let graph = scheme_graph();
    assert_eq!(graph.nodes.len(), 10, "node count");
    assert_eq!(graph.edges.len(), 13, "arrow count");
    graph.validate().unwrap();
    // The exported forms carry the same counts.
    let dot = graph.to_dot();
    assert_eq!(dot.matches(" -> ").count(), 13);
    assert_eq!(dot.matches("[label=").count(), 10);
    let json = graph.to_json();
    assert_eq!(json.matches("\"src\"").count(), 13);
    assert_eq!(json.matches("\"id\"").count(), 10);

    // Every catalog family lands on its box, at defaults and random points.
    for entry in entries() {
        for params in
            std::iter::once(entry.default_params()).chain(three_points(entry.key, 0x5EED_0010))
        {
            let built = build_family(entry.key, &params, None).unwrap();
            assert_eq!(
                classify_spec(&built.spec).unwrap().id,
                entry.scheme_node,
                "{}",
                entry.key
            );
        }
    }

    // Generic random specs land on the top box, and classification is
    // invariant under the four symmetry maps with random nonzero factors.
    let mut rng = Rng::new(0x5EED_1010);
    let mut generic_seen = 0;
    while generic_seen < 5 {
        let a = [
            rng.nonzero_rational(),
            rng.nonzero_rational(),
            rng.nonzero_rational(),
        ];
        let b = [
            rng.nonzero_rational(),
            rng.nonzero_rational(),
            rng.nonzero_rational(),
        ];
        let d1 = rng.nonzero_rational();
        let d2 = rng.nonzero_rational();
        let d3 = &(&(&a[1] * &b[2]) + &(&a[2] * &b[1])) - &(&int(2) * &(&a[2] * &b[2]));
        let d4 = &a[2] * &b[2];
        let spec = SeqSpecQ1::new(a, b, [d1, d2, d3, d4]).unwrap();
        assert_eq!(classify_spec(&spec).unwrap().id, "W/R");
        generic_seen += 1;

        let mapped = spec
            .scale_h(&rng.nonzero_rational())
            .unwrap()
            .shift_h(&rng.nonzero_rational())
            .scale_x(&rng.nonzero_rational())
            .unwrap()
            .shift_x(&rng.nonzero_rational());
        assert_eq!(classify_spec(&mapped).unwrap().id, "W/R");
    }
    for entry in entries() {
        let built = build_family(entry.key, &entry.default_params(), None).unwrap();
        let mapped = built
            .spec
            .scale_h(&rng.nonzero_rational())
            .unwrap()
            .shift_h(&rng.nonzero_rational())
            .scale_x(&rng.nonzero_rational())
            .unwrap()
            .shift_x(&rng.nonzero_rational());
        assert_eq!(
            classify_spec(&mapped).unwrap().id,
            entry.scheme_node,
            "{} after symmetry maps",
            entry.key
        );
    }
    pass(
        10,
        "scheme-graph",
        "10 nodes / 13 arrows validated; 14 families placed; classification symmetry-invariant",
    );
}

/// Cross-cutting consistency: the full per-family battery passes for the
/// whole catalog at default parameters, and every normalizable instance
/// reconstructs to a constraint-satisfying spec.
#[test]
fn full_catalog_battery() {
    for entry in entries() {
        let report = verify_family(entry.key, &entry.default_params(), 6);
        assert!(report.all_passed(), "{}:\n{}", entry.key, report.render());
        let built = build_family(entry.key, &entry.default_params(), None).unwrap();
        if let Ok(p) = normalize_uniform(&built.spec) {
            let respec = askey_core::classify::reconstruct_spec(&p);
            assert!(respec.check_q1_constraints(), "{}", entry.key);
            assert_eq!(
                classify_spec(&respec).unwrap().id,
                entry.scheme_node,
                "{} after normalization",
                entry.key
            );
        }
    }
}
