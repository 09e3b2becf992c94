//! Zero-set computation and classification.
//!
//! The pipeline: normalise the polynomial to monic form, form its companion
//! polynomial (real, degree `2n`), extract the companion roots, enumerate the
//! quasi-similarity classes whose characteristic polynomial divides the
//! companion (the *admissible* classes — the only places zeros can live),
//! and run the remainder case analysis in each class.
//!
//! Division of `P` by the class characteristic polynomial leaves `A + Bx`;
//! on the class, `P(z) = A + Bz`, so the zero set inside the class is decided
//! entirely by `A` and `B`:
//!
//! - `B` invertible: the unique zero `-B^(-1) A` (isolated);
//! - `B = 0`: the whole class (hyperboloidal) when `A = 0`, empty otherwise;
//! - `B` a nonzero zero divisor: a rank-2 linear system decides between
//!   empty, a real line of zeros, or a single isolated zero.

use crate::algebra::{Coquaternion, CoqType};
use crate::config::Tolerances;
use crate::cqpoly::{divide_by_char, CharPoly, CoqPolynomial};
use crate::rpoly::{real_roots, RealPolynomial, RootCluster};
use crate::{Error, Result};
use nalgebra::{Matrix4, Vector4};

/// How an admissible class arose from the companion roots.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Provenance {
    /// A non-real conjugate pair `w, conj(w)`.
    ConjugatePair { re: f64, im: f64, multiplicity: usize },
    /// Two distinct real companion roots.
    RealPair { r1: f64, r2: f64 },
    /// A real companion root of multiplicity at least two.
    RepeatedReal { root: f64, multiplicity: usize },
}

/// A quasi-similarity class whose characteristic polynomial divides the
/// companion polynomial; the only classes that can contain zeros.
#[derive(Debug, Clone, Copy)]
pub struct AdmissibleClass {
    pub q0: f64,
    pub dv: f64,
    pub type_tag: CoqType,
    /// Canonical point of the class: `q0 + sqrt(dv) i`, `q0 + sqrt(-dv) j`,
    /// or the real vertex `q0` for Type 3.
    pub representative: Coquaternion,
    pub provenance: Provenance,
}

impl AdmissibleClass {
    fn from_invariants(q0: f64, dv: f64, provenance: Provenance) -> Self {
        let (type_tag, representative) = if dv > 0.0 {
            (CoqType::Type1, Coquaternion::new(q0, dv.sqrt(), 0.0, 0.0))
        } else if dv < 0.0 {
            (CoqType::Type2, Coquaternion::new(q0, 0.0, (-dv).sqrt(), 0.0))
        } else {
            (CoqType::Type3, Coquaternion::real(q0))
        };
        AdmissibleClass {
            q0,
            dv,
            type_tag,
            representative,
            provenance,
        }
    }

    /// Characteristic polynomial `x^2 - 2 q0 x + (q0^2 + dv)` of the class.
    pub fn char_poly(&self) -> CharPoly {
        CharPoly::new(self.q0, self.dv)
    }

    /// Quasi-similarity membership test.
    pub fn contains_point(&self, z: Coquaternion, eps: f64) -> bool {
        let scale = 1.0 + z.norm_sq() + self.q0.abs() + self.dv.abs();
        (z.re - self.q0).abs() <= eps * scale
            && (z.vector_determinant() - self.dv).abs() <= eps * scale
    }
}

/// Enumerates the admissible classes determined by the companion roots:
/// one Type 1 class per non-real conjugate pair, one Type 2 class per
/// unordered pair of distinct real roots, and one Type 3 class per repeated
/// real root.
pub fn admissible_classes(roots: &[RootCluster], tol: &Tolerances) -> Vec<AdmissibleClass> {
    let mut classes: Vec<AdmissibleClass> = Vec::new();

    for c in roots.iter().filter(|c| !c.is_real && c.value.im > 0.0) {
        let (re, im) = (c.value.re, c.value.im);
        classes.push(AdmissibleClass::from_invariants(
            re,
            im * im,
            Provenance::ConjugatePair {
                re,
                im,
                multiplicity: c.multiplicity,
            },
        ));
    }

    let reals: Vec<&RootCluster> = roots.iter().filter(|c| c.is_real).collect();
    for (idx, a) in reals.iter().enumerate() {
        for b in reals.iter().skip(idx + 1) {
            let (r1, r2) = (a.value.re, b.value.re);
            let q0 = 0.5 * (r1 + r2);
            let half = 0.5 * (r1 - r2);
            classes.push(AdmissibleClass::from_invariants(
                q0,
                -half * half,
                Provenance::RealPair { r1, r2 },
            ));
        }
        if a.multiplicity >= 2 {
            classes.push(AdmissibleClass::from_invariants(
                a.value.re,
                0.0,
                Provenance::RepeatedReal {
                    root: a.value.re,
                    multiplicity: a.multiplicity,
                },
            ));
        }
    }

    // Deduplicate numerically coincident classes on a grid of the clustering
    // tolerance, then order deterministically.
    let grid = tol.cluster;
    let mut seen = std::collections::BTreeSet::new();
    classes.retain(|c| {
        let key = (
            (c.q0 / grid).round() as i64,
            (c.dv / grid).round() as i64,
        );
        seen.insert(key)
    });
    classes.sort_by(|a, b| a.q0.total_cmp(&b.q0).then(a.dv.total_cmp(&b.dv)));
    classes
}

/// Outcome of solving `M_B z = -A` for singular nonzero `B`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SingularSolve {
    /// The system has no solution; the class holds no zeros.
    Inconsistent,
    /// Particular solution normalised to the form `gamma0 + gamma1 i`.
    Normalized {
        gamma0: f64,
        gamma1: f64,
        k1: f64,
        k2: f64,
    },
}

/// Solves `M_B z = -A` for a singular, nonzero `B` by rank-2 least squares
/// and normalises a particular solution into the plane spanned by `1, i`.
///
/// `M_B` has rank exactly two for such `B`, so the solve keeps the two
/// dominant singular directions; the residual against `-A` decides
/// consistency. The null-space coefficients `k1, k2` satisfy
/// `k1^2 + k2^2 = 1`.
pub fn solve_singular_remainder(
    a: Coquaternion,
    b: Coquaternion,
    tol: &Tolerances,
) -> Result<SingularSolve> {
    if b.norm() <= tol.b_zero * (1.0 + a.norm()) {
        return Err(Error::PreconditionViolation(
            "solve_singular_remainder: B is zero".into(),
        ));
    }
    if b.determinant().abs() > tol.singular * (1.0 + b.norm_sq()) {
        return Err(Error::PreconditionViolation(
            "solve_singular_remainder: B is nonsingular".into(),
        ));
    }

    let m: Matrix4<f64> = b.mul_matrix().to_matrix4();
    let rhs = Vector4::new(-a.re, -a.i, -a.j, -a.k);
    let svd = m.svd(true, true);
    let u = svd.u.as_ref().expect("svd with u requested");
    let vt = svd.v_t.as_ref().expect("svd with v_t requested");

    // Two dominant singular directions (rank is structurally two).
    let mut order: Vec<usize> = (0..4).collect();
    order.sort_by(|&x, &y| svd.singular_values[y].total_cmp(&svd.singular_values[x]));
    let mut delta = Vector4::zeros();
    for &idx in order.iter().take(2) {
        let sigma = svd.singular_values[idx];
        if sigma <= 0.0 {
            continue;
        }
        let coeff = u.column(idx).dot(&rhs) / sigma;
        delta += vt.row(idx).transpose() * coeff;
    }

    let residual = (m * delta - rhs).norm();
    if residual > tol.consistency * (1.0 + a.norm()) {
        return Ok(SingularSolve::Inconsistent);
    }

    // b0^2 + b1^2 = b2^2 + b3^2 = |B|^2 / 2 > 0 for singular nonzero B.
    let denom = b.re * b.re + b.i * b.i;
    let k1 = -(b.re * b.j + b.i * b.k) / denom;
    let k2 = (b.i * b.j - b.re * b.k) / denom;

    // Shift delta along the null space so the j and k components vanish.
    let alpha = -k1 * delta[2] - k2 * delta[3];
    let beta = -k2 * delta[2] + k1 * delta[3];
    Ok(SingularSolve::Normalized {
        gamma0: delta[0] + alpha,
        gamma1: delta[1] + beta,
        k1,
        k2,
    })
}

/// The zero set of one admissible class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ZeroKind {
    /// No zeros in the class.
    Empty,
    /// Exactly one zero.
    Isolated(Coquaternion),
    /// A real line of zeros:
    /// `q0 + b i + (k2 b + k1 (q0-gamma0)) j + (-k1 b + k2 (q0-gamma0)) k`.
    Linear {
        q0: f64,
        gamma0: f64,
        k1: f64,
        k2: f64,
    },
    /// The whole class consists of zeros.
    Hyperboloidal,
}

impl ZeroKind {
    pub fn label(&self) -> &'static str {
        match self {
            ZeroKind::Empty => "empty",
            ZeroKind::Isolated(_) => "isolated",
            ZeroKind::Linear { .. } => "linear",
            ZeroKind::Hyperboloidal => "hyperboloidal",
        }
    }
}

/// Which branch of the case analysis fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseBranch {
    /// `B` invertible.
    Case1,
    /// `B = 0`, `A != 0`.
    Case2a,
    /// `B = 0 = A`.
    Case2b,
    /// `B` singular, system inconsistent.
    Case3a,
    /// Real solution, line condition holds.
    Case3bLine,
    /// Real solution, line condition fails.
    Case3bEmpty,
    /// Non-real solution: unique zero in the class.
    Case3c,
}

impl CaseBranch {
    pub fn label(&self) -> &'static str {
        match self {
            CaseBranch::Case1 => "1",
            CaseBranch::Case2a => "2a",
            CaseBranch::Case2b => "2b",
            CaseBranch::Case3a => "3a",
            CaseBranch::Case3bLine => "3b-i",
            CaseBranch::Case3bEmpty => "3b-ii",
            CaseBranch::Case3c => "3c",
        }
    }
}

/// Raw material of the decision for one class, kept for diagnosis of
/// near-threshold branch choices.
#[derive(Debug, Clone, Copy)]
pub struct Diagnostics {
    pub remainder_a: Coquaternion,
    pub remainder_b: Coquaternion,
    pub det_b: f64,
    pub branch: CaseBranch,
}

/// Outcome for one admissible class.
#[derive(Debug, Clone)]
pub struct ZeroDescriptor {
    pub class: AdmissibleClass,
    pub kind: ZeroKind,
    pub diagnostics: Diagnostics,
}

impl ZeroDescriptor {
    /// Whether `z` belongs to the zero set described here, within `eps`.
    pub fn contains(&self, z: Coquaternion, eps: f64) -> bool {
        match self.kind {
            ZeroKind::Empty => false,
            ZeroKind::Isolated(z0) => (z - z0).norm() <= eps * (1.0 + z0.norm()),
            ZeroKind::Linear { q0, gamma0, k1, k2 } => {
                let beta = z.i;
                let c = q0 - gamma0;
                let scale = 1.0 + z.norm();
                (z.re - q0).abs() <= eps * scale
                    && (z.j - (k2 * beta + k1 * c)).abs() <= eps * scale
                    && (z.k - (-k1 * beta + k2 * c)).abs() <= eps * scale
            }
            ZeroKind::Hyperboloidal => self.class.contains_point(z, eps),
        }
    }
}

/// Runs the `A`/`B` case analysis of one admissible class.
pub fn zeros_in_class(
    p: &CoqPolynomial,
    class: &AdmissibleClass,
    tol: &Tolerances,
) -> ZeroDescriptor {
    let psi = class.char_poly();
    let (_, rem) = divide_by_char(p, &psi);
    let (a, b) = (rem.a, rem.b);
    let det_b = b.determinant();
    let scale = 1.0 + p.max_coeff_norm();

    let descriptor = |kind: ZeroKind, branch: CaseBranch| ZeroDescriptor {
        class: *class,
        kind,
        diagnostics: Diagnostics {
            remainder_a: a,
            remainder_b: b,
            det_b,
            branch,
        },
    };

    if b.norm() <= tol.b_zero * scale {
        return if a.norm() <= tol.b_zero * scale {
            descriptor(ZeroKind::Hyperboloidal, CaseBranch::Case2b)
        } else {
            descriptor(ZeroKind::Empty, CaseBranch::Case2a)
        };
    }

    if det_b.abs() > tol.singular * (1.0 + b.norm_sq()) {
        let z0 = -(b.conjugate() * a) * (1.0 / det_b);
        return descriptor(ZeroKind::Isolated(z0), CaseBranch::Case1);
    }

    match solve_singular_remainder(a, b, tol) {
        Err(_) | Ok(SingularSolve::Inconsistent) => {
            descriptor(ZeroKind::Empty, CaseBranch::Case3a)
        }
        Ok(SingularSolve::Normalized {
            gamma0,
            gamma1,
            k1,
            k2,
        }) => {
            let c = class.q0 - gamma0;
            if gamma1.abs() <= tol.b_zero * (1.0 + gamma0.abs()) {
                // Real solution: zeros exist only on the line where the
                // class constraint (q0-gamma0)^2 = -dv holds; impossible for
                // Type 1 classes, which contain no straight line.
                let line_defect = (c * c + class.dv).abs();
                let line_scale = 1.0 + class.q0 * class.q0 + class.dv.abs();
                if class.dv <= 0.0 && line_defect <= tol.linear * line_scale {
                    descriptor(
                        ZeroKind::Linear {
                            q0: class.q0,
                            gamma0,
                            k1,
                            k2,
                        },
                        CaseBranch::Case3bLine,
                    )
                } else {
                    descriptor(ZeroKind::Empty, CaseBranch::Case3bEmpty)
                }
            } else {
                let beta = (class.dv + c * c - gamma1 * gamma1) / (2.0 * gamma1);
                let z0 = Coquaternion::new(
                    class.q0,
                    beta + gamma1,
                    k2 * beta + k1 * c,
                    -k1 * beta + k2 * c,
                );
                descriptor(ZeroKind::Isolated(z0), CaseBranch::Case3c)
            }
        }
    }
}

/// Classified zero set of a polynomial.
#[derive(Debug, Clone)]
pub struct RootReport {
    /// Monic form actually analysed (the zero set equals the input's).
    pub polynomial: CoqPolynomial,
    pub companion: RealPolynomial,
    pub companion_roots: Vec<RootCluster>,
    /// One descriptor per admissible class, sorted by `(q0, dv)`.
    pub classes: Vec<ZeroDescriptor>,
}

impl RootReport {
    /// The isolated zeros.
    pub fn isolated_zeros(&self) -> Vec<Coquaternion> {
        self.classes
            .iter()
            .filter_map(|d| match d.kind {
                ZeroKind::Isolated(z) => Some(z),
                _ => None,
            })
            .collect()
    }

    /// Descriptors carrying a line of zeros.
    pub fn linear_zeros(&self) -> Vec<&ZeroDescriptor> {
        self.classes
            .iter()
            .filter(|d| matches!(d.kind, ZeroKind::Linear { .. }))
            .collect()
    }

    /// Classes consisting entirely of zeros.
    pub fn hyperboloidal_classes(&self) -> Vec<&AdmissibleClass> {
        self.classes
            .iter()
            .filter(|d| matches!(d.kind, ZeroKind::Hyperboloidal))
            .map(|d| &d.class)
            .collect()
    }

    pub fn counts(&self) -> (usize, usize, usize) {
        (
            self.isolated_zeros().len(),
            self.linear_zeros().len(),
            self.hyperboloidal_classes().len(),
        )
    }
}

/// Computes and classifies the complete zero set of `p`.
///
/// The leading coefficient must be nonsingular; the polynomial is normalised
/// to monic form first. The number of admissible classes is at most
/// `n(2n - 1)` for degree `n`.
pub fn find_all_zeros(p: &CoqPolynomial, tol: &Tolerances) -> Result<RootReport> {
    if p.degree() == 0 {
        return Err(Error::DegenerateInput);
    }
    let monic = p.monicize(tol)?;
    let companion = monic.companion(tol)?;
    let companion_roots = real_roots(&companion, tol)?;
    let classes = admissible_classes(&companion_roots, tol);
    debug_assert!(classes.len() <= monic.degree() * (2 * monic.degree() - 1));

    let descriptors = classes
        .iter()
        .map(|class| zeros_in_class(&monic, class, tol))
        .collect();

    Ok(RootReport {
        polynomial: monic,
        companion,
        companion_roots,
        classes: descriptors,
    })
}

/// `p * (x - r)` for real `r`. When `r` avoids the real companion roots of
/// `p` and those roots are simple, every class pairing `r` with one of them
/// acquires a line of zeros; useful for generating guaranteed linear zeros.
pub fn adjoin_real_factor(p: &CoqPolynomial, r: f64) -> CoqPolynomial {
    p * &CoqPolynomial::linear_factor(Coquaternion::real(r))
}
