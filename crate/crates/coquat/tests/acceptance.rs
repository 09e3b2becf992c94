//! Acceptance suite: every criterion below prints one pass/fail line and
//! exercises the full pipeline at its stated tolerance.

use coquat::rootfinder::{adjoin_real_factor, find_all_zeros, CaseBranch, ZeroKind};
use coquat::verify::{certify, residual, sample_class, DEFAULT_BETAS};
use coquat::{
    canonicalize, divide_by_char, quasi_similar, CharPoly, CoqPolynomial, Coquaternion,
    Tolerances,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cq(re: f64, i: f64, j: f64, k: f64) -> Coquaternion {
    Coquaternion::new(re, i, j, k)
}

fn poly(coeffs: &[[f64; 4]]) -> CoqPolynomial {
    CoqPolynomial::new(
        coeffs
            .iter()
            .map(|&[a, b, c, d]| cq(a, b, c, d))
            .collect(),
    )
}

fn p1() -> CoqPolynomial {
    poly(&[[2.0, -1.0, -1.0, 1.0], [1.0, 1.0, 1.0, 1.0], [1.0, 0.0, 0.0, 0.0]])
}

fn p2() -> CoqPolynomial {
    poly(&[[2.0, 0.0, 1.0, 0.0], [-3.0, 0.0, -1.0, 0.0], [1.0, 0.0, 0.0, 0.0]])
}

fn p4() -> CoqPolynomial {
    poly(&[[5.5, 0.0, 2.5, 0.0], [-5.0, 0.0, -1.0, 0.0], [1.0, 0.0, 0.0, 0.0]])
}

fn p5() -> CoqPolynomial {
    poly(&[[1.0, 0.0, 0.0, 0.0], [-2.0, 0.0, 0.0, 0.0], [1.0, 0.0, 0.0, 0.0]])
}

fn q5() -> CoqPolynomial {
    poly(&[[1.0, 1.0, 1.0, 0.0], [-2.0, -1.0, -1.0, 0.0], [1.0, 0.0, 0.0, 0.0]])
}

fn r5() -> CoqPolynomial {
    poly(&[[0.0, 3.0, 2.0, 2.0], [-2.0, -6.0, -5.0, -3.0], [1.0, 0.0, 0.0, 0.0]])
}

fn p6() -> CoqPolynomial {
    poly(&[
        [-9.0, -12.0, -18.0, 9.0],
        [-51.0, 40.5, -28.5, -52.0],
        [-23.5, -32.0, -18.0, 16.5],
        [24.0, 6.5, 5.5, -6.0],
        [0.5, 1.0, 7.0, 6.5],
        [1.0, 0.0, 0.0, 0.0],
    ])
}

/// The cubic whose product with (x - 1) has at least six linear zeros.
fn example3_base() -> CoqPolynomial {
    poly(&[
        [2.0, -2.0, 2.0, 3.0],
        [-4.0, -5.0, 1.0, 1.0],
        [-1.0, 0.0, -5.0, -1.0],
        [2.0, 2.0, -1.0, 0.0],
    ])
}

fn random_coquaternion(rng: &mut ChaCha8Rng) -> Coquaternion {
    cq(
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
    )
}

fn random_monic(rng: &mut ChaCha8Rng, degree: usize) -> CoqPolynomial {
    let mut coeffs: Vec<Coquaternion> = (0..degree).map(|_| random_coquaternion(rng)).collect();
    coeffs.push(Coquaternion::ONE);
    CoqPolynomial::new(coeffs)
}

#[test]
fn criterion_1_example_1() {
    let tol = Tolerances::default();
    let report = find_all_zeros(&p1(), &tol).unwrap();

    assert_eq!(report.classes.len(), 2, "exactly two admissible classes");
    let sqrt2 = 2.0f64.sqrt();
    assert!((report.classes[0].class.q0 + 1.0).abs() <= 1e-9);
    assert!((report.classes[0].class.dv - 2.0).abs() <= 1e-9);
    assert!((report.classes[1].class.q0).abs() <= 1e-9);
    assert!((report.classes[1].class.dv - 1.0).abs() <= 1e-9);
    assert!(report.classes[0]
        .class
        .representative
        .approx_eq(&cq(-1.0, sqrt2, 0.0, 0.0), 1e-9));

    let desc = &report.classes[1]; // class of i
    assert_eq!(desc.diagnostics.branch, CaseBranch::Case3c);
    assert!(desc
        .diagnostics
        .remainder_a
        .approx_eq(&cq(1.0, -1.0, -1.0, 1.0), 1e-9));
    assert!(desc
        .diagnostics
        .remainder_b
        .approx_eq(&cq(1.0, 1.0, 1.0, 1.0), 1e-9));
    let z = match desc.kind {
        ZeroKind::Isolated(z) => z,
        ref other => panic!("class of i must hold an isolated zero, got {other:?}"),
    };
    assert!(z.approx_eq(&Coquaternion::I, 1e-9));
    assert!(residual(&report.polynomial, z) <= 1e-8);

    println!("ACCEPTANCE 1 (example 1: classes, branch 3c, A/B, residual): PASS");
}

#[test]
fn criterion_2_example_2() {
    let tol = Tolerances::default();
    let report = find_all_zeros(&p2(), &tol).unwrap();

    let lines = report.linear_zeros();
    assert_eq!(lines.len(), 2, "exactly two linear descriptors");
    assert_eq!(report.isolated_zeros().len(), 0);
    assert_eq!(report.hyperboloidal_classes().len(), 0);

    // { 1 + b i + b k } and { 2 + b i + j - b k }
    let expect = |q0: f64, j_of: &dyn Fn(f64) -> f64, k_of: &dyn Fn(f64) -> f64| {
        lines.iter().any(|d| {
            DEFAULT_BETAS.iter().all(|&b| {
                d.contains(cq(q0, b, j_of(b), k_of(b)), 1e-8)
            })
        })
    };
    assert!(expect(1.0, &|_| 0.0, &|b| b), "line {{1 + b i + b k}} missing");
    assert!(expect(2.0, &|_| 1.0, &|b| -b), "line {{2 + b i + j - b k}} missing");

    for d in &lines {
        for z in coquat::verify::sample_line(d, &DEFAULT_BETAS).unwrap() {
            assert!(residual(&report.polynomial, z) <= 1e-8);
        }
    }
    println!("ACCEPTANCE 2 (example 2: two linear zeros, residuals): PASS");
}

#[test]
fn criterion_3_example_3() {
    let tol = Tolerances::default();
    let p3 = adjoin_real_factor(&example3_base(), 1.0);
    let report = find_all_zeros(&p3, &tol).unwrap();

    let lines = report.linear_zeros();
    assert!(
        lines.len() >= 6,
        "expected at least 6 linear zeros, found {}",
        lines.len()
    );

    // The specific line {b i + (-3b/5 - 4/5) j + (-4b/5 + 3/5) k} in the
    // class (q0 = 0, dv = -1).
    let line = lines
        .iter()
        .find(|d| d.class.q0.abs() <= 1e-6 && (d.class.dv + 1.0).abs() <= 1e-6)
        .expect("line in the class of j not reported");
    match line.kind {
        ZeroKind::Linear { gamma0, k1, k2, .. } => {
            assert!((gamma0 - 1.0).abs() <= 1e-8, "gamma0 = {gamma0}");
            assert!((k1 - 0.8).abs() <= 1e-8, "k1 = {k1}");
            assert!((k2 + 0.6).abs() <= 1e-8, "k2 = {k2}");
        }
        ref other => panic!("unexpected kind {other:?}"),
    }
    // Point-set check, independent of the parameterization.
    for b in [0.0, 1.0, -2.0] {
        let z = cq(0.0, b, -0.6 * b - 0.8, -0.8 * b + 0.6);
        assert!(line.contains(z, 1e-8), "expected line point {z} not contained");
        assert!(residual(&report.polynomial, z) <= 1e-8);
    }
    println!("ACCEPTANCE 3 (example 3: >= 6 linear zeros incl. the line in the class of j): PASS");
}

#[test]
fn criterion_4_example_4() {
    let tol = Tolerances::default();
    let report = find_all_zeros(&p4(), &tol).unwrap();

    // companion roots 1, 2, 3, 4, all simple
    assert_eq!(report.companion_roots.len(), 4);
    for (cluster, expected) in report.companion_roots.iter().zip([1.0, 2.0, 3.0, 4.0]) {
        assert!(cluster.is_real);
        assert_eq!(cluster.multiplicity, 1);
        assert!((cluster.value.re - expected).abs() <= 1e-9);
    }
    assert_eq!(report.classes.len(), 6, "maximum class count for degree 2");

    for (q0, dv) in [(2.0, -1.0), (3.0, -1.0)] {
        let desc = report
            .classes
            .iter()
            .find(|d| (d.class.q0 - q0).abs() <= 1e-9 && (d.class.dv - dv).abs() <= 1e-9)
            .expect("expected class missing");
        assert_eq!(desc.kind, ZeroKind::Empty);
        assert_eq!(desc.diagnostics.branch, CaseBranch::Case3bEmpty);
    }
    println!("ACCEPTANCE 4 (example 4: six classes, two empty via 3b-ii): PASS");
}

#[test]
fn criterion_5_example_5() {
    let tol = Tolerances::default();
    let quartic = [1.0, -4.0, 6.0, -4.0, 1.0]; // (x-1)^4

    for p in [p5(), q5(), r5()] {
        let companion = p.companion(&tol).unwrap();
        assert_eq!(companion.degree(), 4);
        for (a, b) in companion.coeffs().iter().zip(quartic) {
            assert!((a - b).abs() <= 1e-10, "companion must be (x-1)^4");
        }
    }

    let rep5 = find_all_zeros(&p5(), &tol).unwrap();
    assert_eq!(rep5.classes.len(), 1);
    assert_eq!(rep5.classes[0].kind, ZeroKind::Hyperboloidal);
    assert!((rep5.classes[0].class.q0 - 1.0).abs() <= 1e-9);

    let repq = find_all_zeros(&q5(), &tol).unwrap();
    assert_eq!(repq.classes.len(), 1);
    match repq.classes[0].kind {
        ZeroKind::Linear { .. } => {
            // { 1 + b i + b j }
            for b in [-3.0, 0.5, 2.0] {
                assert!(repq.classes[0].contains(cq(1.0, b, b, 0.0), 1e-8));
            }
        }
        ref other => panic!("Q5 must have a linear zero, got {other:?}"),
    }

    let repr = find_all_zeros(&r5(), &tol).unwrap();
    assert_eq!(repr.classes.len(), 1);
    let z = match repr.classes[0].kind {
        ZeroKind::Isolated(z) => z,
        ref other => panic!("R5 must have an isolated zero, got {other:?}"),
    };
    assert!(z.approx_eq(&cq(1.0, 5.0, 4.0, 3.0), 1e-8));
    assert!(residual(&repr.polynomial, z) <= 1e-8);

    println!("ACCEPTANCE 5 (example 5: hyperboloidal / linear / isolated on (x-1)^4): PASS");
}

#[test]
fn criterion_6_example_6() {
    let tol = Tolerances::default();
    let report = find_all_zeros(&p6(), &tol).unwrap();

    let n = report.polynomial.degree();
    assert_eq!(n * (2 * n - 1), 45);
    assert_eq!(report.classes.len(), 45, "maximum class count must be attained");
    assert!(report
        .classes
        .iter()
        .all(|d| matches!(d.kind, ZeroKind::Isolated(_))));

    let quoted = [
        (1.0, -2.0, cq(1.0, 3.0 / 8.0, -11.0 / 8.0, -0.5)),
        (0.0, -1.0, cq(0.0, 17.0 / 84.0, -27.0 / 28.0, -1.0 / 3.0)),
    ];
    for (q0, dv, expected) in quoted {
        let desc = report
            .classes
            .iter()
            .find(|d| (d.class.q0 - q0).abs() <= 1e-6 && (d.class.dv - dv).abs() <= 1e-6)
            .expect("quoted class missing");
        match desc.kind {
            ZeroKind::Isolated(z) => {
                assert!(
                    z.approx_eq(&expected, 1e-7),
                    "zero {z} != expected {expected}"
                );
            }
            ref other => panic!("unexpected kind {other:?}"),
        }
    }
    println!("ACCEPTANCE 6 (example 6: 45 isolated zeros attain the n(2n-1) bound): PASS");
}

#[test]
fn criterion_7_property_suite() {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_7001);

    // Algebra laws at 1e-10.
    for _ in 0..500 {
        let (p, q, r) = (
            random_coquaternion(&mut rng),
            random_coquaternion(&mut rng),
            random_coquaternion(&mut rng),
        );
        let assoc = ((p * q) * r - p * (q * r)).norm();
        assert!(assoc <= 1e-10 * (1.0 + p.norm() * q.norm() * r.norm()));
        let anti = ((p * q).conjugate() - q.conjugate() * p.conjugate()).norm();
        assert!(anti <= 1e-10 * (1.0 + p.norm() * q.norm()));
        let dmult =
            ((p * q).determinant() - p.determinant() * q.determinant()).abs();
        assert!(dmult <= 1e-10 * (1.0 + (p.determinant() * q.determinant()).abs()));
    }

    // Division identity P = Q psi + Bx + A at 1e-10 for 200 random
    // polynomials of degree <= 8.
    for _ in 0..200 {
        let degree = rng.gen_range(2..=8);
        let p = random_monic(&mut rng, degree);
        let psi = CharPoly::new(rng.gen_range(-2.0..2.0), rng.gen_range(-4.0..4.0));
        let (q, rem) = divide_by_char(&p, &psi);
        let reconstructed = {
            let qpsi = &q * &psi.to_coq_polynomial();
            let mut coeffs = qpsi.coeffs().to_vec();
            coeffs[0] = coeffs[0] + rem.a;
            coeffs[1] = coeffs[1] + rem.b;
            CoqPolynomial::new(coeffs)
        };
        let scale = 1.0 + p.max_coeff_norm();
        for (a, b) in reconstructed.coeffs().iter().zip(p.coeffs()) {
            assert!((*a - *b).norm() <= 1e-10 * scale, "division identity broken");
        }
    }

    // Characteristic polynomial vanishes on 16-point class samples.
    let report6 = find_all_zeros(&p6(), &tol).unwrap();
    for (idx, desc) in report6.classes.iter().take(8).enumerate() {
        let sample = sample_class(&desc.class, 16, idx as u64);
        let psi = desc.class.char_poly();
        for z in &sample.points {
            assert!(
                psi.eval(*z).norm() <= 1e-9 * (1.0 + z.norm_sq()),
                "characteristic polynomial does not vanish on its class"
            );
        }
    }

    // No Type 1 linear descriptor over 500 random polynomials.
    for _ in 0..500 {
        let degree = rng.gen_range(1..=4);
        let p = random_monic(&mut rng, degree);
        let report = find_all_zeros(&p, &tol).unwrap();
        for d in &report.classes {
            if matches!(d.kind, ZeroKind::Linear { .. }) {
                assert_ne!(
                    d.class.type_tag,
                    coquat::CoqType::Type1,
                    "Type 1 class with a linear zero: {d:?}"
                );
            }
        }
    }

    // Certified negative controls fail.
    let report = find_all_zeros(&p2(), &tol).unwrap();
    assert!(certify(&report, 1e-8, 0).passed);
    let mut corrupted = report.clone();
    for d in corrupted.classes.iter_mut() {
        if let ZeroKind::Linear { q0, gamma0, k1, k2 } = d.kind {
            d.kind = ZeroKind::Linear {
                q0,
                gamma0: gamma0 + 1e-2,
                k1,
                k2,
            };
            break;
        }
    }
    assert!(!certify(&corrupted, 1e-8, 0).passed);

    println!("ACCEPTANCE 7 (property suite: algebra laws, division identity, class samples, O1, negative controls): PASS");
}

#[test]
fn criterion_8_oracle_equivalence() {
    let tol = Tolerances::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_8001);
    let mut checked = 0;

    while checked < 100 {
        let a = random_coquaternion(&mut rng);
        let b = random_coquaternion(&mut rng);
        let p = &CoqPolynomial::linear_factor(a) * &CoqPolynomial::linear_factor(b);
        // b is a zero of (x - a)(x - b) by the factor theorem
        assert!(p.evaluate(b).norm() <= 1e-12 * (1.0 + b.norm_sq()));

        let report = find_all_zeros(&p, &tol).unwrap();
        let found = report.classes.iter().any(|d| d.contains(b, 1e-7));
        assert!(
            found,
            "factor-theorem zero {b} missing from the report for {p}"
        );
        checked += 1;
    }
    println!("ACCEPTANCE 8 (oracle equivalence on 100 random quadratics): PASS");
}

#[test]
fn sanity_quasi_similarity_and_canonical_forms() {
    // Auxiliary pipeline sanity shared by the criteria above: the canonical
    // representative of each reported isolated zero stays in its class.
    let tol = Tolerances::default();
    let report = find_all_zeros(&p6(), &tol).unwrap();
    for d in &report.classes {
        if let ZeroKind::Isolated(z) = d.kind {
            let rep = canonicalize(z, &tol);
            assert!(quasi_similar(z, rep.representative, &tol));
            assert!(d.class.contains_point(z, 1e-7));
        }
    }
}
