//! The split-quaternion algebra.
//!
//! Elements are written `q = q0 + q1 i + q2 j + q3 k` over the basis
//! `{1, i, j, k}` with `i^2 = -1`, `j^2 = k^2 = 1`, `ij = -ji = k`.
//! The determinant `dt(q) = q0^2 + q1^2 - q2^2 - q3^2` plays the role the
//! squared norm plays for Hamilton quaternions, except that it is indefinite:
//! elements with `dt(q) = 0` are exactly the zero divisors.
//!
//! Every non-real element is similar (by an explicit invertible witness) to
//! one of three canonical forms, selected by the sign of the determinant of
//! its vector part; [`canonicalize`] computes the form and the witness.

use crate::config::Tolerances;
use crate::{Error, Result};

/// A split quaternion `re + i·i + j·j + k·k`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Coquaternion {
    pub re: f64,
    pub i: f64,
    pub j: f64,
    pub k: f64,
}

impl Coquaternion {
    pub const ZERO: Coquaternion = Coquaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Coquaternion = Coquaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Coquaternion = Coquaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Coquaternion = Coquaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Coquaternion = Coquaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(re: f64, i: f64, j: f64, k: f64) -> Self {
        Coquaternion { re, i, j, k }
    }

    /// Embeds a real number.
    pub const fn real(r: f64) -> Self {
        Coquaternion::new(r, 0.0, 0.0, 0.0)
    }

    /// The vector part `q1 i + q2 j + q3 k`.
    pub fn vector(&self) -> Coquaternion {
        Coquaternion::new(0.0, self.i, self.j, self.k)
    }

    pub fn conjugate(&self) -> Coquaternion {
        Coquaternion::new(self.re, -self.i, -self.j, -self.k)
    }

    /// `dt(q) = q0^2 + q1^2 - q2^2 - q3^2`; equals `q * conjugate(q)`.
    pub fn determinant(&self) -> f64 {
        self.re * self.re + self.i * self.i - self.j * self.j - self.k * self.k
    }

    /// Determinant of the vector part, `dv(q) = q1^2 - q2^2 - q3^2`.
    /// Its sign classifies the quasi-similarity class of `q`.
    pub fn vector_determinant(&self) -> f64 {
        self.i * self.i - self.j * self.j - self.k * self.k
    }

    /// Euclidean 4-vector norm. The determinant is indefinite, so all
    /// magnitude tests in the crate use this norm instead.
    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn norm_sq(&self) -> f64 {
        self.re * self.re + self.i * self.i + self.j * self.j + self.k * self.k
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0.0 && self.i == 0.0 && self.j == 0.0 && self.k == 0.0
    }

    /// True when the vector part is negligible relative to `|q|`.
    pub fn is_real(&self, tol: &Tolerances) -> bool {
        self.vector().norm() <= tol.type_class * (1.0 + self.norm())
    }

    /// The inverse `conjugate(q) / dt(q)`.
    ///
    /// Fails with [`Error::SingularElement`] when `|dt(q)|` is below the
    /// relative singularity threshold: such elements are zero divisors.
    pub fn inverse(&self, tol: &Tolerances) -> Result<Coquaternion> {
        let det = self.determinant();
        if det.abs() <= tol.singular * (1.0 + self.norm_sq()) {
            return Err(Error::SingularElement { det });
        }
        Ok(self.conjugate() * (1.0 / det))
    }

    /// The 4x4 matrix of left multiplication by `self`.
    pub fn mul_matrix(&self) -> MulMatrix {
        let (p0, p1, p2, p3) = (self.re, self.i, self.j, self.k);
        MulMatrix([
            [p0, -p1, p2, p3],
            [p1, p0, p3, -p2],
            [p2, p3, p0, -p1],
            [p3, -p2, p1, p0],
        ])
    }

    pub fn approx_eq(&self, other: &Coquaternion, eps: f64) -> bool {
        (*self - *other).norm() <= eps
    }
}

impl From<f64> for Coquaternion {
    fn from(r: f64) -> Self {
        Coquaternion::real(r)
    }
}

impl std::ops::Add for Coquaternion {
    type Output = Coquaternion;
    fn add(self, rhs: Coquaternion) -> Coquaternion {
        Coquaternion::new(
            self.re + rhs.re,
            self.i + rhs.i,
            self.j + rhs.j,
            self.k + rhs.k,
        )
    }
}

impl std::ops::Sub for Coquaternion {
    type Output = Coquaternion;
    fn sub(self, rhs: Coquaternion) -> Coquaternion {
        Coquaternion::new(
            self.re - rhs.re,
            self.i - rhs.i,
            self.j - rhs.j,
            self.k - rhs.k,
        )
    }
}

impl std::ops::Neg for Coquaternion {
    type Output = Coquaternion;
    fn neg(self) -> Coquaternion {
        Coquaternion::new(-self.re, -self.i, -self.j, -self.k)
    }
}

impl std::ops::Mul for Coquaternion {
    type Output = Coquaternion;
    fn mul(self, q: Coquaternion) -> Coquaternion {
        let p = self;
        Coquaternion::new(
            p.re * q.re - p.i * q.i + p.j * q.j + p.k * q.k,
            p.re * q.i + p.i * q.re - p.j * q.k + p.k * q.j,
            p.re * q.j - p.i * q.k + p.j * q.re + p.k * q.i,
            p.re * q.k + p.i * q.j - p.j * q.i + p.k * q.re,
        )
    }
}

impl std::ops::Mul<f64> for Coquaternion {
    type Output = Coquaternion;
    fn mul(self, s: f64) -> Coquaternion {
        Coquaternion::new(self.re * s, self.i * s, self.j * s, self.k * s)
    }
}

impl std::fmt::Display for Coquaternion {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut wrote = false;
        let mut part = |f: &mut std::fmt::Formatter<'_>, v: f64, unit: &str| {
            if v == 0.0 {
                return Ok(());
            }
            if wrote {
                write!(f, " {} ", if v < 0.0 { "-" } else { "+" })?;
            } else if v < 0.0 {
                write!(f, "-")?;
            }
            let a = v.abs();
            if a == 1.0 && !unit.is_empty() {
                write!(f, "{unit}")?;
            } else {
                write!(f, "{a}{unit}")?;
            }
            wrote = true;
            Ok(())
        };
        part(f, self.re, "")?;
        part(f, self.i, "i")?;
        part(f, self.j, "j")?;
        part(f, self.k, "k")?;
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Left-multiplication matrix: `MulMatrix(p) * vec4(q) = vec4(p * q)`.
///
/// Its 4x4 determinant equals `dt(p)^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MulMatrix(pub [[f64; 4]; 4]);

impl MulMatrix {
    pub fn apply(&self, q: &Coquaternion) -> Coquaternion {
        let v = [q.re, q.i, q.j, q.k];
        let mut out = [0.0; 4];
        for (r, row) in self.0.iter().enumerate() {
            out[r] = row[0] * v[0] + row[1] * v[1] + row[2] * v[2] + row[3] * v[3];
        }
        Coquaternion::new(out[0], out[1], out[2], out[3])
    }

    pub fn to_matrix4(&self) -> nalgebra::Matrix4<f64> {
        nalgebra::Matrix4::from_fn(|r, c| self.0[r][c])
    }
}

/// Sign class of the vector-part determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoqType {
    /// `dv(q) > 0`: the class is a two-sheet hyperboloid, similar to a
    /// complex number.
    Type1,
    /// `dv(q) < 0`: one-sheet hyperboloid, similar to a perplex number.
    Type2,
    /// `dv(q) = 0`: a cone; non-real elements are similar to `q0 + i + j`.
    Type3,
}

impl CoqType {
    pub fn classify(dv: f64, scale: f64, tol: &Tolerances) -> CoqType {
        if dv.abs() <= tol.type_class * (1.0 + scale) {
            CoqType::Type3
        } else if dv > 0.0 {
            CoqType::Type1
        } else {
            CoqType::Type2
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            CoqType::Type1 => "type1",
            CoqType::Type2 => "type2",
            CoqType::Type3 => "type3",
        }
    }
}

/// Canonical representative of the similarity class of an element, together
/// with the conjugating witness.
#[derive(Debug, Clone, Copy)]
pub struct ClassRep {
    pub q0: f64,
    pub dv: f64,
    pub type_tag: CoqType,
    /// `q0 + sqrt(dv) i` (Type 1), `q0 + sqrt(-dv) j` (Type 2),
    /// `q0 + i + j` (non-real Type 3) or `q0` itself (real input).
    pub representative: Coquaternion,
    /// Invertible `h` with `h^-1 q h = representative`; absent for real
    /// input, whose similarity class is the singleton `{q}`.
    pub witness: Option<Coquaternion>,
}

/// Computes the canonical similarity representative of `q` and an explicit
/// invertible witness conjugating `q` to it.
///
/// The witness follows the three classical branches (and their degenerate
/// sub-branches) for Type 1, Type 2 and Type 3 elements.
pub fn canonicalize(q: Coquaternion, tol: &Tolerances) -> ClassRep {
    let q0 = q.re;
    let dv = q.vector_determinant();
    let scale = q.norm_sq();
    let type_tag = CoqType::classify(dv, scale, tol);

    if q.is_real(tol) {
        return ClassRep {
            q0,
            dv,
            type_tag: CoqType::Type3,
            representative: Coquaternion::real(q0),
            witness: None,
        };
    }

    // Sub-branch selector: treat a component pair as zero only below the
    // classification threshold, so the generic witness formulas keep a
    // nonsingular determinant.
    let axis_eps_sq = {
        let e = tol.type_class * (1.0 + q.norm());
        e * e
    };

    let (representative, witness) = match type_tag {
        CoqType::Type1 => {
            let s = dv.sqrt();
            let rep = Coquaternion::new(q0, s, 0.0, 0.0);
            let h = if q.j * q.j + q.k * q.k > axis_eps_sq {
                Coquaternion::new(q.i + s, 0.0, -q.k, q.j)
            } else if q.i < 0.0 {
                Coquaternion::J
            } else {
                Coquaternion::ONE
            };
            (rep, h)
        }
        CoqType::Type2 => {
            let s = (-dv).sqrt();
            let rep = Coquaternion::new(q0, 0.0, s, 0.0);
            let h = if q.i * q.i + q.k * q.k > axis_eps_sq {
                if q.j <= 0.0 {
                    Coquaternion::new(q.i, 0.0, -q.k, q.j - s)
                } else {
                    Coquaternion::new(q.j + s, q.k, 0.0, q.i)
                }
            } else if q.j < 0.0 {
                Coquaternion::I
            } else {
                Coquaternion::ONE
            };
            (rep, h)
        }
        CoqType::Type3 => {
            let rep = Coquaternion::new(q0, 1.0, 1.0, 0.0);
            let h = if (q.i + q.j).abs() > tol.type_class * (1.0 + q.norm()) {
                Coquaternion::new(1.0 + q.i, 0.0, -q.k, -(1.0 - q.j))
            } else {
                Coquaternion::new(0.0, 1.0 + q.i, 1.0 - q.i, 0.0)
            };
            (rep, h)
        }
    };

    ClassRep {
        q0,
        dv,
        type_tag,
        representative,
        witness: Some(witness),
    }
}

/// Quasi-similarity: `re(p) = re(q)` and `dv(p) = dv(q)` within tolerance.
///
/// For non-real elements this coincides with similarity; real elements are
/// quasi-similar to the whole cone over them even though their similarity
/// class is a singleton.
pub fn quasi_similar(p: Coquaternion, q: Coquaternion, tol: &Tolerances) -> bool {
    let scale = 1.0 + p.norm_sq().max(q.norm_sq());
    let dre = (p.re - q.re).abs();
    let ddv = (p.vector_determinant() - q.vector_determinant()).abs();
    dre <= tol.type_class * scale && ddv <= tol.type_class * scale
}
