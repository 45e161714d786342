//! End-to-end acceptance checks. Each test covers one advertised
//! guarantee and prints a single summary line on success.

mod common;

use common::*;
use hypermatroid::constructions::{
    contract, contract_circuits, delete, direct_sum, prefix_labels, pushforward, restrict_circuits,
};
use hypermatroid::hopf::verify::verify_bialgebra;
use hypermatroid::hopf::ClassRegistry;
use hypermatroid::hyperfield::{canonical_to_krasner, verify_hyperfield_axioms, Element, Hyperfield};
use hypermatroid::iso::{canonical_form, find_isomorphism};
use hypermatroid::matroid::axioms::{
    circuit_reports, verify_orthogonality, verify_strong_gpf, verify_weak_gpf,
};
use hypermatroid::matroid::circuits::{circuits_from_gpf, Orthogonality};
use hypermatroid::matroid::{sorted_subsets, GPFunction, GroundSet, UnderlyingMatroid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::process::Command;
use std::sync::Arc;

#[test]
fn criterion_01_table_axioms_and_mutations() {
    for h in [Hyperfield::Krasner, Hyperfield::Signs] {
        let table = h.to_table().unwrap();
        let wrapped = Hyperfield::Table(Arc::new(table));
        let report = verify_hyperfield_axioms(&wrapped).unwrap();
        assert!(report.pass, "{} table should satisfy the axioms", h.name());
    }

    // Twenty seeded single-cell corruptions of the sign table. Every one
    // must be rejected, either structurally or by the axiom checker.
    let rows = Hyperfield::Signs.to_table().unwrap().to_rows();
    let n = rows.symbols.len();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..20 {
        let mut m = rows.clone();
        match rng.gen_range(0..3) {
            0 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                let current: BTreeSet<String> = m.add[i][j].iter().cloned().collect();
                let subset = loop {
                    let mask = rng.gen_range(1..(1u32 << n));
                    let s: Vec<String> = (0..n)
                        .filter(|k| mask >> k & 1 == 1)
                        .map(|k| m.symbols[k].clone())
                        .collect();
                    if s.iter().cloned().collect::<BTreeSet<_>>() != current {
                        break s;
                    }
                };
                m.add[i][j] = subset.clone();
                m.add[j][i] = subset;
            }
            1 => {
                let i = rng.gen_range(0..n);
                let j = rng.gen_range(0..n);
                let k = loop {
                    let k = rng.gen_range(0..n);
                    if m.symbols[k] != m.mul[i][j] {
                        break k;
                    }
                };
                m.mul[i][j] = m.symbols[k].clone();
                m.mul[j][i] = m.symbols[k].clone();
            }
            _ => {
                let i = rng.gen_range(0..n);
                let k = loop {
                    let k = rng.gen_range(0..n);
                    if m.symbols[k] != m.neg[i] {
                        break k;
                    }
                };
                m.neg[i] = m.symbols[k].clone();
            }
        }
        let detected = match m.clone().build() {
            Err(_) => true,
            Ok(t) => {
                !verify_hyperfield_axioms(&Hyperfield::Table(Arc::new(t)))
                    .unwrap()
                    .pass
            }
        };
        assert!(detected, "mutation {trial} slipped through: {m:?}");
    }
    println!("criterion 1 (table axioms hold; 20 corrupted tables rejected): pass");
}

#[test]
fn criterion_02_krasner_indicators_match_basis_exchange() {
    let mut families = 0usize;
    for n in 0..=5usize {
        for r in 0..=n.min(3) {
            let all = sorted_subsets(n, r);
            let ground = GroundSet::from_size(n);
            for mask in 1u64..(1u64 << all.len()) {
                let bases: Vec<Vec<usize>> = (0..all.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| all[i].clone())
                    .collect();
                let phi =
                    GPFunction::indicator(Hyperfield::Krasner, ground.clone(), r, &bases).unwrap();
                let weak = verify_weak_gpf(&phi).unwrap().pass;
                let strong = verify_strong_gpf(&phi).unwrap().pass;
                let exchange = UnderlyingMatroid::from_bases(n, r, bases.clone())
                    .unwrap()
                    .verify_basis_exchange(&ground)
                    .pass;
                assert_eq!(weak, exchange, "n={n} r={r} bases={bases:?}");
                assert_eq!(strong, exchange, "n={n} r={r} bases={bases:?}");
                families += 1;
            }
        }
    }
    println!("criterion 2 (weak = strong = basis exchange on {families} indicator families): pass");
}

#[test]
fn criterion_03_corpus_circuit_theory() {
    let corpus = corpus();
    assert!(corpus.len() >= 10, "corpus too small");
    for (name, phi) in &corpus {
        assert!(verify_weak_gpf(phi).unwrap().pass, "{name}: weak");
        assert!(verify_strong_gpf(phi).unwrap().pass, "{name}: strong");

        let cs = circuits_from_gpf(phi).unwrap();
        for rep in circuit_reports(&cs, true).unwrap() {
            assert!(rep.pass, "{name}: {} failed", rep.check);
        }
        let mut supports = cs.supports();
        supports.sort();
        let mut ordinary = phi.underlying().circuits();
        ordinary.sort();
        assert_eq!(supports, ordinary, "{name}: circuit supports");

        let dd = phi.dual().unwrap().dual().unwrap();
        assert!(dd.same_class(phi).unwrap(), "{name}: double dual");

        let cocs = circuits_from_gpf(&phi.dual().unwrap()).unwrap();
        assert!(
            verify_orthogonality(&cs, &cocs, true).unwrap().pass,
            "{name}: orthogonality"
        );
    }
    println!(
        "criterion 3 (circuit axioms, supports, double dual, orthogonality on {} matroids): pass",
        corpus.len()
    );
}

#[test]
fn criterion_04_perpendicular_sets_are_cocircuits() {
    let mut checked = 0usize;
    for (name, phi) in corpus() {
        if !phi.hyperfield().is_finite() || phi.ground().len() > 5 {
            continue;
        }
        let cs = circuits_from_gpf(&phi).unwrap();
        let cocs = circuits_from_gpf(&phi.dual().unwrap()).unwrap();
        assert_eq!(
            cs.perp_minimal(Orthogonality::Strong).unwrap(),
            cocs,
            "{name}: perpendicular minimal vectors"
        );

        let n = phi.ground().len();
        let mut subsets: Vec<Vec<usize>> = sorted_subsets(n, 1);
        subsets.extend(sorted_subsets(n, 2));
        for s in subsets {
            let via_gpf = circuits_from_gpf(&contract(&phi, &s).unwrap()).unwrap();
            let via_perp = contract_circuits(&cs, &s, Orthogonality::Strong).unwrap();
            assert_eq!(via_gpf, via_perp, "{name}: contraction by {s:?}");
        }
        checked += 1;
    }
    assert!(checked >= 6);
    println!("criterion 4 (perpendicular oracle matches cocircuits and contractions on {checked} matroids): pass");
}

fn splits_up_to(n: usize, max_union: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for size in 0..=max_union.min(n) {
        for u in sorted_subsets(n, size) {
            for mask in 0..(1u32 << u.len()) {
                let s: Vec<usize> = u
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let t: Vec<usize> = u
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 0)
                    .map(|(_, &e)| e)
                    .collect();
                out.push((s, t));
            }
        }
    }
    out
}

fn positions(phi: &GPFunction, labels: &[String]) -> Vec<usize> {
    let mut p: Vec<usize> = labels
        .iter()
        .map(|l| phi.ground().index_of(l).unwrap())
        .collect();
    p.sort();
    p
}

#[test]
fn criterion_05_minor_identities() {
    let sample = vec![
        ("u24-signs", uniform(Hyperfield::Signs, 4, 2)),
        ("u34-krasner", uniform(Hyperfield::Krasner, 4, 3)),
        ("k4-signs", k4_signs()),
        ("u23-tropical", u23_tropical()),
    ];
    for (name, phi) in &sample {
        let ground = phi.ground();
        for (s, t) in splits_up_to(ground.len(), 3) {
            let s_labels = ground.labels_of(&s);
            let t_labels = ground.labels_of(&t);
            let mut u = s.clone();
            u.extend(&t);
            u.sort();

            let ds = delete(phi, &s).unwrap();
            let d1 = delete(&ds, &positions(&ds, &t_labels)).unwrap();
            let d2 = delete(phi, &u).unwrap();
            assert!(d1.same_class(&d2).unwrap(), "{name}: delete {s:?} then {t:?}");

            let cs = contract(phi, &s).unwrap();
            let c1 = contract(&cs, &positions(&cs, &t_labels)).unwrap();
            let c2 = contract(phi, &u).unwrap();
            assert!(c1.same_class(&c2).unwrap(), "{name}: contract {s:?} then {t:?}");

            let m1 = delete(&cs, &positions(&cs, &t_labels)).unwrap();
            let dt = delete(phi, &t).unwrap();
            let m2 = contract(&dt, &positions(&dt, &s_labels)).unwrap();
            assert!(m1.same_class(&m2).unwrap(), "{name}: mixed {s:?} / {t:?}");

            let x1 = ds.dual().unwrap();
            let x2 = contract(&phi.dual().unwrap(), &s).unwrap();
            assert!(x1.same_class(&x2).unwrap(), "{name}: dual exchange at {s:?}");
        }

        // The circuit-level routes agree with the function-level routes.
        if phi.hyperfield().is_finite() {
            let circuits = circuits_from_gpf(phi).unwrap();
            for e in 0..ground.len() {
                let rest: Vec<usize> = (0..ground.len()).filter(|x| *x != e).collect();
                assert_eq!(
                    restrict_circuits(&circuits, &rest).unwrap(),
                    circuits_from_gpf(&delete(phi, &[e]).unwrap()).unwrap(),
                    "{name}: delete {e} through circuits"
                );
                assert_eq!(
                    contract_circuits(&circuits, &[e], Orthogonality::Strong).unwrap(),
                    circuits_from_gpf(&contract(phi, &[e]).unwrap()).unwrap(),
                    "{name}: contract {e} through circuits"
                );
            }
        }
    }
    println!("criterion 5 (minor composition, exchange with duality, circuit routes): pass");
}

#[test]
fn criterion_06_direct_sums() {
    let a = prefix_labels(&uniform(Hyperfield::Signs, 4, 2), "a").unwrap();
    let b = prefix_labels(&uniform(Hyperfield::Signs, 3, 2), "b").unwrap();
    let sum = direct_sum(&a, &b).unwrap();

    assert!(verify_strong_gpf(&sum).unwrap().pass);
    assert_eq!(sum.rank(), a.rank() + b.rank());
    assert_eq!(
        sum.underlying().bases().count(),
        a.underlying().bases().count() * b.underlying().bases().count()
    );

    // circuits of the sum are the circuits of the parts, padded with zeros
    let cs = circuits_from_gpf(&sum).unwrap();
    let ca = circuits_from_gpf(&a).unwrap();
    let cb = circuits_from_gpf(&b).unwrap();
    assert_eq!(cs.vectors().len(), ca.vectors().len() + cb.vectors().len());
    let left: Vec<usize> = (0..a.ground().len()).collect();
    let right: Vec<usize> = (a.ground().len()..sum.ground().len()).collect();
    assert_eq!(restrict_circuits(&cs, &left).unwrap(), ca);
    assert_eq!(restrict_circuits(&cs, &right).unwrap(), cb);

    // summing is commutative up to isomorphism and compatible with duality
    assert_eq!(
        canonical_form(&sum).unwrap(),
        canonical_form(&direct_sum(&b, &a).unwrap()).unwrap()
    );
    let ds = sum.dual().unwrap();
    let sd = direct_sum(&a.dual().unwrap(), &b.dual().unwrap()).unwrap();
    assert!(ds.same_class(&sd).unwrap());

    // a corrupted summand corrupts the whole sum
    let mut bad_values: std::collections::BTreeMap<Vec<usize>, Element> =
        uniform(Hyperfield::Signs, 4, 2)
            .entries()
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
    bad_values.insert(vec![0, 2], Element::Sign(-1));
    let bad = GPFunction::new(
        Hyperfield::Signs,
        GroundSet::from_size(4),
        2,
        bad_values,
    )
    .unwrap();
    assert!(!verify_weak_gpf(&bad).unwrap().pass);
    let bad_sum = direct_sum(&prefix_labels(&bad, "a").unwrap(), &b).unwrap();
    assert!(!verify_weak_gpf(&bad_sum).unwrap().pass);
    assert!(!verify_strong_gpf(&bad_sum).unwrap().pass);

    println!("criterion 6 (direct sums: rank, bases, circuits, duality, corruption): pass");
}

#[test]
fn criterion_07_pushforward_commutes_with_constructions() {
    for (name, phi) in corpus() {
        let f = canonical_to_krasner(&phi.hyperfield());
        let pushed = pushforward(&f, &phi).unwrap();
        assert!(verify_strong_gpf(&pushed).unwrap().pass, "{name}");
        assert_eq!(
            pushed.underlying().bases().cloned().collect::<Vec<_>>(),
            phi.underlying().bases().cloned().collect::<Vec<_>>(),
            "{name}"
        );

        let dual_then_push = pushforward(&f, &phi.dual().unwrap()).unwrap();
        assert!(
            dual_then_push.same_class(&pushed.dual().unwrap()).unwrap(),
            "{name}: duality"
        );

        for e in 0..phi.ground().len() {
            let del = pushforward(&f, &delete(&phi, &[e]).unwrap()).unwrap();
            assert!(
                del.same_class(&delete(&pushed, &[e]).unwrap()).unwrap(),
                "{name}: delete {e}"
            );
            let con = pushforward(&f, &contract(&phi, &[e]).unwrap()).unwrap();
            assert!(
                con.same_class(&contract(&pushed, &[e]).unwrap()).unwrap(),
                "{name}: contract {e}"
            );
        }
    }

    let a = prefix_labels(&uniform(Hyperfield::Signs, 3, 2), "a").unwrap();
    let b = prefix_labels(&uniform(Hyperfield::Signs, 2, 1), "b").unwrap();
    let f = canonical_to_krasner(&Hyperfield::Signs);
    let lhs = pushforward(&f, &direct_sum(&a, &b).unwrap()).unwrap();
    let rhs = direct_sum(
        &pushforward(&f, &a).unwrap(),
        &pushforward(&f, &b).unwrap(),
    )
    .unwrap();
    assert!(lhs.same_class(&rhs).unwrap());

    println!("criterion 7 (pushforward commutes with duality, minors, direct sums): pass");
}

#[test]
fn criterion_08_isomorphism_agrees_with_canonical_forms() {
    let u24 = uniform(Hyperfield::Signs, 4, 2);

    // reorienting across a transposition gives an isomorphic function
    let mut flipped: std::collections::BTreeMap<Vec<usize>, Element> = u24
        .entries()
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    flipped.insert(vec![0, 1], Element::Sign(-1));
    let flip01 =
        GPFunction::new(Hyperfield::Signs, GroundSet::from_size(4), 2, flipped).unwrap();
    assert!(verify_strong_gpf(&flip01).unwrap().pass);

    let pair = |v: i8| {
        let mut values = std::collections::BTreeMap::new();
        values.insert(vec![0], Element::Sign(1));
        values.insert(vec![1], Element::Sign(v));
        GPFunction::new(Hyperfield::Signs, GroundSet::from_size(2), 1, values).unwrap()
    };

    let family = vec![
        ("u24", u24.clone()),
        ("u24-flip01", flip01),
        ("u24-scaled", u24.scale(&Element::Sign(-1)).unwrap()),
        ("pair-same", pair(1)),
        ("pair-opposite", pair(-1)),
        ("u13-signs", uniform(Hyperfield::Signs, 3, 1)),
        ("u23-signs", uniform(Hyperfield::Signs, 3, 2)),
    ];

    let mut iso_pairs = 0usize;
    for (n1, p1) in &family {
        for (n2, p2) in &family {
            let same_key = canonical_form(p1).unwrap() == canonical_form(p2).unwrap();
            let witness = find_isomorphism(p1, p2).unwrap();
            assert_eq!(
                same_key,
                witness.is_some(),
                "canonical forms and witness search disagree on {n1} vs {n2}"
            );
            if !std::ptr::eq(p1, p2) && witness.is_some() {
                iso_pairs += 1;

                // isomorphism survives pushforward and direct sums
                let f = canonical_to_krasner(&Hyperfield::Signs);
                assert_eq!(
                    canonical_form(&pushforward(&f, p1).unwrap()).unwrap(),
                    canonical_form(&pushforward(&f, p2).unwrap()).unwrap()
                );
                let c = prefix_labels(&uniform(Hyperfield::Signs, 2, 1), "c").unwrap();
                let s1 = direct_sum(&prefix_labels(p1, "x").unwrap(), &c).unwrap();
                let s2 = direct_sum(&prefix_labels(p2, "x").unwrap(), &c).unwrap();
                assert_eq!(canonical_form(&s1).unwrap(), canonical_form(&s2).unwrap());
            }
        }
    }
    assert!(iso_pairs >= 2, "expected isomorphic pairs in the family");
    println!("criterion 8 (canonical forms match witness search on {} ordered pairs): pass", family.len() * family.len());
}

#[test]
fn criterion_09_hopf_algebra_laws() {
    let reg = ClassRegistry::new();
    let seeds = vec![
        uniform(Hyperfield::Signs, 2, 1),
        uniform(Hyperfield::Signs, 3, 1),
        uniform(Hyperfield::Signs, 3, 2),
        uniform(Hyperfield::Krasner, 4, 2),
        uniform(Hyperfield::Krasner, 4, 3),
    ];
    let reports = verify_bialgebra(&reg, &seeds, 4).unwrap();
    assert_eq!(reports.len(), 6);
    for rep in &reports {
        assert!(rep.pass, "{} failed: {:?}", rep.check, rep.violations.first());
    }
    println!("criterion 9 (grading, coassociativity, counit, multiplicativity, antipode laws to degree 4): pass");
}

#[test]
fn criterion_10_cli_determinism_and_round_trips() {
    let fixture = fixture_path("u24_signs.json");
    let fixture = fixture.to_str().unwrap();
    let run = |args: &[&str]| {
        let out = Command::new(binary()).args(args).output().unwrap();
        (out.stdout, out.status.code().unwrap())
    };

    for args in [
        vec!["--format", "json", "circuits", fixture],
        vec!["--format", "json", "dual", fixture],
        vec!["--format", "json", "coproduct", fixture],
        vec!["--format", "text", "antipode", fixture],
        vec!["--format", "json", "verify-hopf", "--max-degree", "3", fixture],
    ] {
        let (out1, code1) = run(&args);
        let (out2, code2) = run(&args);
        assert_eq!(out1, out2, "nondeterministic output for {args:?}");
        assert_eq!(code1, 0, "unexpected exit for {args:?}");
        assert_eq!(code2, 0);
        assert!(!out1.is_empty());
    }

    // dualizing twice through the document format returns to the start
    let (dual_json, code) = run(&["--format", "json", "dual", fixture]);
    assert_eq!(code, 0);
    let tmp = std::env::temp_dir().join("hypermatroid-acceptance-dual.json");
    std::fs::write(&tmp, &dual_json).unwrap();
    let (dd_json, code) = run(&["--format", "json", "dual", tmp.to_str().unwrap()]);
    assert_eq!(code, 0);
    let original =
        hypermatroid::io::parse_matroid(&std::fs::read_to_string(fixture).unwrap()).unwrap();
    let round = hypermatroid::io::parse_matroid(std::str::from_utf8(&dd_json).unwrap()).unwrap();
    assert!(round.same_class(&original).unwrap());
    std::fs::remove_file(&tmp).ok();

    // structured outputs parse back through the document layer
    let (report_json, code) = run(&["--format", "json", "check-gpf", "--type", "strong", fixture]);
    assert_eq!(code, 0);
    let doc: hypermatroid::io::ReportDoc =
        serde_json::from_slice(&report_json).unwrap();
    assert!(hypermatroid::io::report_from_doc(&doc).unwrap().pass);

    let (hopf_json, code) = run(&["--format", "json", "verify-hopf", "--max-degree", "3", fixture]);
    assert_eq!(code, 0);
    let docs: Vec<hypermatroid::io::ReportDoc> = serde_json::from_slice(&hopf_json).unwrap();
    assert_eq!(docs.len(), 6);

    println!("criterion 10 (CLI determinism and document round trips): pass");
}
