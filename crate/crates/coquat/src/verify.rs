//! Independent certification of root reports.
//!
//! Every claim in a [`RootReport`] is checked by direct evaluation: isolated
//! zeros by their residual and class membership, lines by sampling the
//! parameter at several scales, hyperboloids by sampling the class surface,
//! and every non-empty class by the necessary divisibility of the companion
//! polynomial by the class characteristic polynomial.

use crate::algebra::{Coquaternion, CoqType};
use crate::cqpoly::CoqPolynomial;
use crate::rootfinder::{AdmissibleClass, RootReport, ZeroDescriptor, ZeroKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic points drawn from a quasi-similarity class.
#[derive(Debug, Clone)]
pub struct ClassSample {
    pub points: Vec<Coquaternion>,
    pub seed: u64,
}

/// Line parameters checked by default: spans several magnitudes so that
/// cancellation behaves differently across the sampled points.
pub const DEFAULT_BETAS: [f64; 7] = [-10.0, -1.0, -0.1, 0.0, 0.1, 1.0, 10.0];

/// Points per hyperboloid checked by default.
pub const DEFAULT_CLASS_POINTS: usize = 16;

/// Draws `count` points of the class surface
/// `{ re = q0, p1^2 - p2^2 - p3^2 = dv }`.
///
/// `(p2, p3)` come from a seeded stream and `p1` is solved analytically with
/// alternating sign, so each point satisfies the class constraints to
/// rounding accuracy. For Type 2 classes the draw is rejected until the
/// radicand is nonnegative; for Type 3 the first point is the vertex itself.
pub fn sample_class(class: &AdmissibleClass, count: usize, seed: u64) -> ClassSample {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(count);
    let spread = 1.0 + class.dv.abs().sqrt();

    if class.type_tag == CoqType::Type3 {
        points.push(Coquaternion::real(class.q0));
    }
    let mut flip = false;
    while points.len() < count {
        let p2: f64 = rng.gen_range(-2.0 * spread..2.0 * spread);
        let p3: f64 = rng.gen_range(-2.0 * spread..2.0 * spread);
        let radicand = class.dv + p2 * p2 + p3 * p3;
        if radicand < 0.0 {
            continue;
        }
        let p1 = if flip {
            -radicand.sqrt()
        } else {
            radicand.sqrt()
        };
        flip = !flip;
        points.push(Coquaternion::new(class.q0, p1, p2, p3));
    }
    ClassSample { points, seed }
}

/// The point of the zero line at parameter `beta`.
pub fn line_point(q0: f64, gamma0: f64, k1: f64, k2: f64, beta: f64) -> Coquaternion {
    let c = q0 - gamma0;
    Coquaternion::new(q0, beta, k2 * beta + k1 * c, -k1 * beta + k2 * c)
}

/// Samples the line of a `Linear` descriptor at the given parameters.
/// Returns `None` for any other descriptor kind.
pub fn sample_line(descriptor: &ZeroDescriptor, betas: &[f64]) -> Option<Vec<Coquaternion>> {
    match descriptor.kind {
        ZeroKind::Linear { q0, gamma0, k1, k2 } => Some(
            betas
                .iter()
                .map(|&b| line_point(q0, gamma0, k1, k2, b))
                .collect(),
        ),
        _ => None,
    }
}

/// Relative residual `|P(z)| / (1 + sum_i |c_i| |z|^i)`.
pub fn residual(p: &CoqPolynomial, z: Coquaternion) -> f64 {
    let value = p.evaluate(z).norm();
    let zn = z.norm();
    let mut scale = 1.0;
    let mut pow = 1.0;
    for c in p.coeffs() {
        scale += c.norm() * pow;
        pow *= zn;
    }
    value / scale
}

/// Result of checking one descriptor.
#[derive(Debug, Clone)]
pub struct DescriptorCheck {
    pub q0: f64,
    pub dv: f64,
    pub kind: &'static str,
    pub worst_residual: f64,
    pub passed: bool,
    /// Human-readable reason on failure.
    pub note: String,
}

/// Aggregate certification verdict.
#[derive(Debug, Clone)]
pub struct CertificationResult {
    pub passed: bool,
    pub worst_residual: f64,
    pub checks: Vec<DescriptorCheck>,
}

/// Certifies a report: evaluates the polynomial at every isolated zero, at
/// sampled line parameters of every linear zero and at sampled surface
/// points of every hyperboloidal zero, checks class membership of isolated
/// zeros, and checks that the class characteristic polynomial divides the
/// companion polynomial for every non-empty class (squared divisibility for
/// hyperboloidal ones).
pub fn certify(report: &RootReport, tolerance: f64, seed: u64) -> CertificationResult {
    let p = &report.polynomial;
    let companion_scale = 1.0 + report.companion.one_norm();
    let mut checks = Vec::new();
    let mut worst_all = 0.0f64;

    for (idx, desc) in report.classes.iter().enumerate() {
        let mut worst = 0.0f64;
        let mut passed = true;
        let mut note = String::new();
        let fail = |msg: String, note: &mut String, passed: &mut bool| {
            if note.is_empty() {
                *note = msg;
            }
            *passed = false;
        };

        match desc.kind {
            ZeroKind::Empty => {}
            ZeroKind::Isolated(z) => {
                let r = residual(p, z);
                worst = worst.max(r);
                if r > tolerance {
                    fail(format!("isolated residual {r:.3e}"), &mut note, &mut passed);
                }
                if !desc.class.contains_point(z, tolerance) {
                    fail(
                        format!("isolated zero {z} escapes its class"),
                        &mut note,
                        &mut passed,
                    );
                }
            }
            ZeroKind::Linear { .. } => {
                for z in sample_line(desc, &DEFAULT_BETAS).unwrap() {
                    let r = residual(p, z);
                    worst = worst.max(r);
                    if r > tolerance {
                        fail(
                            format!("line residual {r:.3e} at {z}"),
                            &mut note,
                            &mut passed,
                        );
                    }
                }
            }
            ZeroKind::Hyperboloidal => {
                let sample = sample_class(
                    &desc.class,
                    DEFAULT_CLASS_POINTS,
                    seed.wrapping_add(idx as u64),
                );
                for z in &sample.points {
                    let r = residual(p, *z);
                    worst = worst.max(r);
                    if r > tolerance {
                        fail(
                            format!("hyperboloid residual {r:.3e} at {z}"),
                            &mut note,
                            &mut passed,
                        );
                    }
                }
                // The class characteristic polynomial squared must divide
                // the companion polynomial.
                let psi = desc.class.char_poly().to_real_polynomial();
                let (q, r1) = report.companion.div_rem(&psi);
                let (_, r2) = q.div_rem(&psi);
                let defect = r1.one_norm().max(r2.one_norm());
                if defect > tolerance * companion_scale {
                    fail(
                        format!("companion not divisible by psi^2 (defect {defect:.3e})"),
                        &mut note,
                        &mut passed,
                    );
                }
            }
        }

        // Divisor necessity: a class holding zeros must divide the companion.
        if !matches!(desc.kind, ZeroKind::Empty) {
            let psi = desc.class.char_poly().to_real_polynomial();
            let (_, rem) = report.companion.div_rem(&psi);
            let defect = rem.one_norm();
            if defect > tolerance * companion_scale {
                fail(
                    format!("companion remainder {defect:.3e} modulo class"),
                    &mut note,
                    &mut passed,
                );
            }
        }

        worst_all = worst_all.max(worst);
        checks.push(DescriptorCheck {
            q0: desc.class.q0,
            dv: desc.class.dv,
            kind: desc.kind.label(),
            worst_residual: worst,
            passed,
            note,
        });
    }

    CertificationResult {
        passed: checks.iter().all(|c| c.passed),
        worst_residual: worst_all,
        checks,
    }
}
