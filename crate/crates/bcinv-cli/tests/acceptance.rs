//! The project's acceptance gate. Each test checks one numbered criterion
//! end to end and prints a `criterion N: PASS` line (visible under
//! `--nocapture`); any failure panics with a matching FAIL message, which
//! cargo prints alongside the failing test name.

use bcinv::inverse::{
    bc_inverse, bc_inverse_linear, bc_inverse_via_group, group_inverse, make_w, mary_inverse,
    verify_bc_axioms, BCResult,
};
use bcinv::laws::{check_law, sweep};
use bcinv::oracle::{brute_bc_inverse, decomposition_check, Scope, DEFAULT_RING_CAP};
use bcinv::ring::{RingDescriptor, RingElement};
use bcinv::scalar::FieldKind;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value as Json;
use std::process::Command;
use std::time::{Duration, Instant};

fn pass(n: u32, desc: &str) {
    println!("criterion {n}: PASS — {desc}");
}

fn elements(ring: &RingDescriptor) -> Vec<RingElement> {
    ring.enumerate_elements().unwrap().collect()
}

fn m2f2() -> RingDescriptor {
    RingDescriptor::matrix_ring(FieldKind::Prime(2), 2).unwrap()
}

fn m3f5() -> RingDescriptor {
    RingDescriptor::matrix_ring(FieldKind::Prime(5), 3).unwrap()
}

fn uniqueness_rings() -> Vec<RingDescriptor> {
    vec![
        RingDescriptor::zmod(6).unwrap(),
        RingDescriptor::zmod(8).unwrap(),
        RingDescriptor::zmod(12).unwrap(),
        m2f2(),
    ]
}

fn random_element(ring: &RingDescriptor, rng: &mut ChaCha8Rng) -> RingElement {
    let size = ring.size().expect("finite ring");
    ring.element_at(rng.gen_range(0..size)).unwrap()
}

/// A random pair (a, y) with y a nonzero outer inverse of a (`yay = y`),
/// built as y = z(az)# from random z.
fn random_outer_pair(ring: &RingDescriptor, rng: &mut ChaCha8Rng) -> (RingElement, RingElement) {
    for _ in 0..100_000 {
        let a = random_element(ring, rng);
        let z = random_element(ring, rng);
        if let Some(sharp) = group_inverse(&a.mul(&z)) {
            let y = z.mul(&sharp);
            if !y.is_zero() {
                debug_assert_eq!(y.mul(&a).mul(&y), y);
                return (a, y);
            }
        }
    }
    panic!("outer-pair generator stalled");
}

fn random_invertible(ring: &RingDescriptor, rng: &mut ChaCha8Rng) -> (RingElement, RingElement) {
    for _ in 0..100_000 {
        let h = random_element(ring, rng);
        if let Some(inv) = h.as_matrix().inverse() {
            return (h, RingElement::from_matrix(inv));
        }
    }
    panic!("invertible generator stalled");
}

/// A random idempotent other than 0 and 1, as b·y for an outer pair (b, y).
fn random_proper_idempotent(ring: &RingDescriptor, rng: &mut ChaCha8Rng) -> RingElement {
    for _ in 0..100_000 {
        let (b, y) = random_outer_pair(ring, rng);
        let p = b.mul(&y);
        if !p.is_zero() && !p.is_one() {
            debug_assert!(p.is_idempotent());
            return p;
        }
    }
    panic!("idempotent generator stalled");
}

#[test]
fn criterion_1_uniqueness() {
    for ring in uniqueness_rings() {
        let all = elements(&ring);
        for a in &all {
            for b in &all {
                for c in &all {
                    let report = brute_bc_inverse(a, b, c, DEFAULT_RING_CAP).unwrap();
                    assert!(
                        report.witnesses.len() <= 1,
                        "criterion 1: FAIL — {} witnesses in {ring} for a={a}, b={b}, c={c}",
                        report.witnesses.len()
                    );
                }
            }
        }
    }
    pass(
        1,
        "at most one witness per triple, exhaustively on Z_6, Z_8, Z_12, M_2(F_2)",
    );
}

#[test]
fn criterion_2_route_equivalence() {
    for ring in uniqueness_rings() {
        let all = elements(&ring);
        for a in &all {
            for b in &all {
                for c in &all {
                    let oracle = brute_bc_inverse(a, b, c, DEFAULT_RING_CAP).unwrap();
                    let linear = bc_inverse_linear(a, b, c);
                    assert_eq!(
                        linear.exists(),
                        oracle.witnesses.first(),
                        "criterion 2: FAIL — linear route differs from oracle in {ring} \
                         for a={a}, b={b}, c={c}"
                    );
                    if let BCResult::Exists(y) = bc_inverse_via_group(a, b, c) {
                        assert_eq!(
                            Some(&y),
                            oracle.witnesses.first(),
                            "criterion 2: FAIL — group route differs in {ring} \
                             for a={a}, b={b}, c={c}"
                        );
                    }
                }
            }
        }
    }
    pass(
        2,
        "linear route matches the oracle on every triple; group route agrees when it answers",
    );
}

#[test]
fn criterion_3_companion_identities() {
    fn run(a: &RingElement, b: &RingElement, c: &RingElement, y: &RingElement) {
        let w = make_w(b, c).expect("criterion 3: FAIL — no companion element");
        let aw_sharp =
            group_inverse(&a.mul(&w)).expect("criterion 3: FAIL — aw not group invertible");
        let wa_sharp =
            group_inverse(&w.mul(a)).expect("criterion 3: FAIL — wa not group invertible");
        assert_eq!(*y, w.mul(&aw_sharp), "criterion 3: FAIL — y != w(aw)#");
        assert_eq!(*y, wa_sharp.mul(&w), "criterion 3: FAIL — y != (wa)#w");
        assert_eq!(w, y.mul(a).mul(&w), "criterion 3: FAIL — w != yaw");
        assert_eq!(w, w.mul(a).mul(y), "criterion 3: FAIL — w != way");
    }

    // Every existing inverse in M_2(F_2), exhaustively.
    let mut small = 0u32;
    let ring = m2f2();
    let all = elements(&ring);
    for a in &all {
        for b in &all {
            for c in &all {
                if let Some(y) = bc_inverse(a, b, c).into_exists() {
                    run(a, b, c, &y);
                    small += 1;
                }
            }
        }
    }

    // Constructed instances in M_3(F_5): y = z(az)# is the (yg, hy)-inverse
    // of a for any invertible g, h.
    let ring = m3f5();
    let mut rng = ChaCha8Rng::seed_from_u64(311);
    for _ in 0..200 {
        let (a, y) = random_outer_pair(&ring, &mut rng);
        let (g, _) = random_invertible(&ring, &mut rng);
        let (h, _) = random_invertible(&ring, &mut rng);
        let b = y.mul(&g);
        let c = h.mul(&y);
        let computed = bc_inverse(&a, &b, &c);
        assert_eq!(
            computed.exists(),
            Some(&y),
            "criterion 3: FAIL — constructed instance not recovered"
        );
        run(&a, &b, &c, &y);
    }
    assert!(
        small > 0,
        "criterion 3: FAIL — exhaustive pass found no instances"
    );
    pass(
        3,
        &format!(
            "companion identities on {} instances ({small} exhaustive in M_2(F_2), 200 sampled in M_3(F_5))",
            small + 200
        ),
    );
}

#[test]
fn criterion_4_equivalence_sweeps() {
    let start = Instant::now();
    let z6 = RingDescriptor::zmod(6).unwrap();
    for (law, expected_tuples) in [
        ("thm1", 46656),
        ("thm2", 1296),
        ("thm3", 1296),
        ("mixed", 216),
        ("thm4", 1296),
        ("thm5", 1296),
    ] {
        let out = sweep(law, z6, Scope::Exhaustive).unwrap();
        assert_eq!(
            out.tuples_checked, expected_tuples,
            "criterion 4: wrong sweep size"
        );
        assert!(
            out.counterexample.is_none(),
            "criterion 4: FAIL — {law} violated at {:?}",
            out.counterexample
        );
    }
    let out = sweep(
        "thm1",
        m2f2(),
        Scope::Sample {
            count: 100_000,
            seed: 2024,
        },
    )
    .unwrap();
    assert_eq!(out.tuples_checked, 100_000);
    assert!(
        out.counterexample.is_none(),
        "criterion 4: FAIL — thm1 violated on M_2(F_2) at {:?}",
        out.counterexample
    );
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(120),
        "criterion 4: FAIL — sweeps took {elapsed:?}, budget is 2 minutes"
    );
    pass(
        4,
        &format!("zero equivalence violations across all sweeps in {elapsed:.2?}"),
    );
}

#[test]
fn criterion_5_sufficiency_corollaries() {
    let z6 = RingDescriptor::zmod(6).unwrap();
    let laws = [
        "cor1",
        "cor-commute-i",
        "cor-commute-ii",
        "mary-rol",
        "thm2-cor-i",
        "thm2-cor-ii",
        "thm3-cor-i",
        "thm3-cor-ii",
        "bc-equal-i",
        "bc-equal-ii",
        "mary-equal-i",
        "mary-equal-ii",
        "cor4",
        "cor5",
    ];
    for law in laws {
        let out = sweep(law, z6, Scope::Exhaustive).unwrap();
        assert!(
            out.counterexample.is_none(),
            "criterion 5: FAIL — {law} fired falsely at {:?}",
            out.counterexample
        );
    }
    pass(
        5,
        "no sufficiency corollary fires falsely anywhere in Z_6, exhaustively",
    );
}

#[test]
fn criterion_6_two_factor_product_rule() {
    let ring = m3f5();
    let mut rng = ChaCha8Rng::seed_from_u64(601);
    let random_poly = |a: &RingElement, rng: &mut ChaCha8Rng| {
        let coeff = |rng: &mut ChaCha8Rng| a.ring().from_integer(rng.gen_range(0..5));
        let a2 = a.mul(a);
        coeff(rng).add(&coeff(rng).mul(a)).add(&coeff(rng).mul(&a2))
    };
    let mut done = 0;
    let mut attempts = 0;
    while done < 500 {
        attempts += 1;
        assert!(
            attempts < 200_000,
            "criterion 6: FAIL — instance generator stalled"
        );
        let a = random_element(&ring, &mut rng);
        let d1 = random_poly(&a, &mut rng);
        let d2 = random_poly(&a, &mut rng);
        if d1.is_zero() || d2.is_zero() {
            continue;
        }
        if mary_inverse(&a, &d1).exists().is_none() || mary_inverse(&a, &d2).exists().is_none() {
            continue;
        }
        let d3 = d2.mul(&d1);
        let full = vec![
            a.clone(),
            a.clone(),
            d1.clone(),
            d1.clone(),
            d2.clone(),
            d2.clone(),
            d3.clone(),
            d3.clone(),
            d1.clone(),
            d2.clone(),
        ];
        let report = check_law("main", &full).unwrap();
        assert!(
            report.hypotheses_hold,
            "criterion 6: FAIL — hypotheses dropped"
        );
        assert!(
            report.conditions.values().all(|&b| b),
            "criterion 6: FAIL — constructed instance misses a condition: {:?}",
            report.conditions
        );
        assert!(
            report.law_holds,
            "criterion 6: FAIL — product rule violated"
        );
        done += 1;
    }

    // The single-anchor corollary on the Z_6 instance a1 = a2 = 2, d = 4.
    let z6 = RingDescriptor::zmod(6).unwrap();
    let e = |v: i64| z6.from_integer(v);
    let report = check_law("mary-main", &[e(2), e(2), e(4), e(4), e(4)]).unwrap();
    assert!(
        report.hypotheses_hold && report.law_holds,
        "criterion 6: FAIL — Z_6 instance"
    );
    assert!(report.conditions.values().all(|&b| b));
    pass(
        6,
        "product rule on 500 constructed M_3(F_5) instances and the Z_6 single-anchor instance",
    );
}

#[test]
fn criterion_7_outer_inverse_products() {
    let ring = m3f5();
    let one = ring.one();
    let mut rng = ChaCha8Rng::seed_from_u64(701);
    let assert_positive = |law: &str, params: &[RingElement]| {
        let report = check_law(law, params).unwrap();
        assert!(
            report.hypotheses_hold,
            "criterion 7: FAIL — {law} hypotheses not met"
        );
        assert!(
            report.law_holds,
            "criterion 7: FAIL — {law} identity failed"
        );
        assert!(
            report.equivalence_ok,
            "criterion 7: FAIL — {law} inconsistent report"
        );
        for (name, value) in &report.info {
            assert_eq!(
                value,
                &Json::Bool(true),
                "criterion 7: FAIL — {law} axiom {name} failed"
            );
        }
    };

    for _ in 0..200 {
        // Shared scaffolding: idempotent p, invertible h and g; a = hp has
        // the reflexive (p, 1-hph^-1)-outer inverse ph^-1, and b = pg has
        // the reflexive (g^-1pg, 1-p)-outer inverse g^-1p.
        let p = random_proper_idempotent(&ring, &mut rng);
        let (h, hinv) = random_invertible(&ring, &mut rng);
        let (g, ginv) = random_invertible(&ring, &mut rng);
        let a = h.mul(&p);
        let q = one.sub(&h.mul(&p).mul(&hinv));
        let b = p.mul(&g);
        let s = ginv.mul(&p).mul(&g);
        let t = one.sub(&p);

        // First family: second factor with projector pair (s', 1-p).
        let (b1, yb1) = random_outer_pair(&ring, &mut rng);
        // p1 = b1·y is nonzero whenever y is: y = y·b1·y = y·p1.
        let p1 = b1.mul(&yb1);
        let s1 = yb1.mul(&b1);
        let (h1, h1inv) = random_invertible(&ring, &mut rng);
        let a1 = h1.mul(&p1);
        let q1 = one.sub(&h1.mul(&p1).mul(&h1inv));
        for law in ["pq-p1-i", "pq-p1-ii", "pq-p1-iii"] {
            assert_positive(
                law,
                &[a1.clone(), b1.clone(), p1.clone(), q1.clone(), s1.clone()],
            );
        }

        // Second family: products with one invertible factor.
        let (m, minv) = random_invertible(&ring, &mut rng);
        let t2 = minv.mul(&p).mul(&m);
        assert_positive(
            "pq-p2-i",
            &[a.clone(), m.clone(), p.clone(), q.clone(), t2.clone()],
        );
        let r2 = one.sub(&m.mul(&p).mul(&minv));
        assert_positive(
            "pq-p2-ii",
            &[m.clone(), b.clone(), s.clone(), t.clone(), r2.clone()],
        );
        assert_positive(
            "pq-p2-iii",
            &[
                a.clone(),
                b.clone(),
                p.clone(),
                q.clone(),
                s.clone(),
                t.clone(),
            ],
        );

        // Third family: reflexive hypotheses; a = hp and b = pg are both
        // reflexive by construction.
        assert_positive(
            "pq-p3-i",
            &[a.clone(), m.clone(), p.clone(), q.clone(), t2.clone()],
        );
        assert_positive(
            "pq-p3-ii",
            &[m.clone(), b.clone(), s.clone(), t.clone(), r2.clone()],
        );
        assert_positive(
            "pq-p3-iii",
            &[
                a.clone(),
                b.clone(),
                p.clone(),
                q.clone(),
                s.clone(),
                t.clone(),
            ],
        );

        // Product projectors: both directions of the equivalence.
        let w = b.clone();
        let e = s.clone();
        let f = t.clone();
        let k = ginv.mul(&p).mul(&g);
        let l = one.sub(&h.mul(&p).mul(&hinv));
        let natural = [
            a.clone(),
            w.clone(),
            e.clone(),
            f.clone(),
            p.clone(),
            q.clone(),
            k.clone(),
            l.clone(),
        ];
        assert_positive("pq-final", &natural);
        let report = check_law("pq-final", &natural).unwrap();
        assert!(report.conditions.values().all(|&v| v));

        // Perturbing either projector must break both the conditions and
        // the law together.
        for (idx, wrong) in [(6, ring.zero()), (7, one.clone())] {
            let mut perturbed = natural.clone();
            perturbed[idx] = wrong;
            let report = check_law("pq-final", &perturbed).unwrap();
            if !report.hypotheses_hold {
                continue;
            }
            assert!(
                !report.conditions.values().all(|&v| v),
                "criterion 7: FAIL — perturbed projector still matches"
            );
            assert!(
                !report.law_holds && report.equivalence_ok,
                "criterion 7: FAIL — pq-final equivalence broke under perturbation"
            );
        }
    }
    pass(7, "all nine product propositions and both directions of the projector-product equivalence, 200 instances each in M_3(F_5)");
}

#[test]
fn criterion_8_golden_examples() {
    let bin = env!("CARGO_BIN_EXE_bcinv");
    let run = |args: &[&str]| {
        let out = Command::new(bin)
            .args(args)
            .env_remove("BCINV_MAX_ENUM")
            .output()
            .unwrap();
        (
            String::from_utf8(out.stdout).unwrap(),
            out.status.code().unwrap(),
        )
    };

    let z6_args = [
        "compute", "--kind", "bc", "--ring", "zmod:6", "--bind", "a=2", "--bind", "b=4", "--bind",
        "c=4",
    ];
    let (first, code) = run(&z6_args);
    assert_eq!(code, 0);
    assert!(
        first.contains("\"value\":2"),
        "criterion 8: FAIL — Z_6 value"
    );
    assert_eq!(
        first,
        run(&z6_args).0,
        "criterion 8: FAIL — nondeterministic output"
    );

    let z4_args = [
        "compute", "--kind", "bc", "--ring", "zmod:4", "--bind", "a=2", "--bind", "b=2", "--bind",
        "c=2",
    ];
    let (out, code) = run(&z4_args);
    assert_eq!(code, 1);
    assert!(
        out.contains("\"exists\":false"),
        "criterion 8: FAIL — Z_4 nonexistence"
    );
    assert_eq!(out, run(&z4_args).0);

    let swap_args = [
        "compute",
        "--kind",
        "bc",
        "--ring",
        "matq:2",
        "--bind",
        "a=[[0,1],[1,0]]",
        "--bind",
        "b=[[1,0],[0,0]]",
        "--bind",
        "c=[[0,0],[0,1]]",
    ];
    let (out, code) = run(&swap_args);
    assert_eq!(code, 0);
    assert!(
        out.contains("[[\"0\",\"1\"],[\"0\",\"0\"]]"),
        "criterion 8: FAIL — swap-matrix inverse"
    );
    assert_eq!(out, run(&swap_args).0);

    // The same answers, reproduced away from the CLI.
    let z6 = RingDescriptor::zmod(6).unwrap();
    let oracle = brute_bc_inverse(
        &z6.from_integer(2),
        &z6.from_integer(4),
        &z6.from_integer(4),
        DEFAULT_RING_CAP,
    )
    .unwrap();
    assert_eq!(oracle.witnesses, vec![z6.from_integer(2)]);
    let z4 = RingDescriptor::zmod(4).unwrap();
    let oracle = brute_bc_inverse(
        &z4.from_integer(2),
        &z4.from_integer(2),
        &z4.from_integer(2),
        DEFAULT_RING_CAP,
    )
    .unwrap();
    assert!(oracle.witnesses.is_empty());
    let el = |entries: [[i64; 2]; 2]| {
        let m = bcinv::linalg::Matrix::from_fn(2, 2, FieldKind::Rational, |i, j| {
            FieldKind::Rational.from_integer(entries[i][j])
        });
        RingElement::from_matrix(m)
    };
    let a = el([[0, 1], [1, 0]]);
    let b = el([[1, 0], [0, 0]]);
    let c = el([[0, 0], [0, 1]]);
    let y = el([[0, 1], [0, 0]]);
    assert!(
        verify_bc_axioms(&a, &b, &c, &y),
        "criterion 8: FAIL — swap-matrix axioms"
    );
    assert_eq!(bc_inverse(&a, &b, &c).into_exists(), Some(y));
    pass(
        8,
        "golden examples byte-identical across runs and confirmed by the oracle",
    );
}

#[test]
fn criterion_9_decomposition_criterion() {
    let mut rings: Vec<RingDescriptor> =
        (1..=12).map(|n| RingDescriptor::zmod(n).unwrap()).collect();
    rings.push(m2f2());
    for ring in rings {
        let all = elements(&ring);
        for a in &all {
            for b in &all {
                for c in &all {
                    let decomposes = decomposition_check(a, b, c, DEFAULT_RING_CAP).unwrap();
                    let exists = bc_inverse(a, b, c).exists().is_some();
                    assert_eq!(
                        decomposes, exists,
                        "criterion 9: FAIL — direct-sum criterion disagrees in {ring} \
                         for a={a}, b={b}, c={c}"
                    );
                }
            }
        }
    }
    pass(
        9,
        "direct-sum decomposition matches existence on Z_1..Z_12 and M_2(F_2), exhaustively",
    );
}
