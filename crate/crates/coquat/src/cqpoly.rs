//! Left unilateral polynomials with coquaternion coefficients.
//!
//! Coefficients sit on the left of the variable and the variable commutes
//! with them, so multiplication is the usual convolution with non-commutative
//! coefficient products. Evaluation substitutes on the right
//! (`P(q) = sum c_i q^i`) and is *not* multiplicative in general; it is
//! multiplicative against factors with real coefficients, which is what the
//! companion-polynomial machinery relies on.

use crate::algebra::Coquaternion;
use crate::config::Tolerances;
use crate::rpoly::RealPolynomial;
use crate::{Error, Result};

/// Polynomial with coquaternion coefficients, ascending degree order.
#[derive(Debug, Clone, PartialEq)]
pub struct CoqPolynomial {
    coeffs: Vec<Coquaternion>,
}

impl CoqPolynomial {
    pub fn new(mut coeffs: Vec<Coquaternion>) -> Self {
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Coquaternion::ZERO);
        }
        CoqPolynomial { coeffs }
    }

    /// Embeds a real polynomial.
    pub fn from_real(p: &RealPolynomial) -> Self {
        CoqPolynomial::new(p.coeffs().iter().map(|&c| Coquaternion::real(c)).collect())
    }

    /// The monic `x - q`.
    pub fn linear_factor(q: Coquaternion) -> Self {
        CoqPolynomial::new(vec![-q, Coquaternion::ONE])
    }

    pub fn coeffs(&self) -> &[Coquaternion] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> Coquaternion {
        *self.coeffs.last().unwrap()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Coquaternion::ONE
    }

    /// Largest coefficient Euclidean norm; the crate-wide polynomial
    /// magnitude used in relative thresholds.
    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Sum of coefficient norms.
    pub fn one_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).sum()
    }

    pub fn approx_zero(&self, tol: &Tolerances) -> bool {
        self.max_coeff_norm() <= tol.poly_eq
    }

    pub fn approx_eq(&self, other: &CoqPolynomial, tol: &Tolerances) -> bool {
        let scale = 1.0 + self.max_coeff_norm().max(other.max_coeff_norm());
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).all(|idx| {
            let a = self.coeffs.get(idx).copied().unwrap_or(Coquaternion::ZERO);
            let b = other.coeffs.get(idx).copied().unwrap_or(Coquaternion::ZERO);
            (a - b).norm() <= tol.poly_eq * scale
        })
    }

    /// Left-coefficient evaluation `c_n q^n + ... + c_1 q + c_0` via Horner.
    pub fn evaluate(&self, q: Coquaternion) -> Coquaternion {
        let mut acc = Coquaternion::ZERO;
        for &c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        acc
    }

    /// Conjugates every coefficient. Satisfies `conj(P Q) = conj(Q) conj(P)`.
    pub fn conjugate(&self) -> CoqPolynomial {
        CoqPolynomial::new(self.coeffs.iter().map(|c| c.conjugate()).collect())
    }

    /// Normalises to monic form by left-multiplying every coefficient with
    /// the inverse of the leading coefficient. The zero set is unchanged.
    pub fn monicize(&self, tol: &Tolerances) -> Result<CoqPolynomial> {
        let lead = self.leading();
        if self.is_monic() {
            return Ok(self.clone());
        }
        let inv = lead.inverse(tol).map_err(|_| Error::SingularLeadingCoefficient {
            det: lead.determinant(),
        })?;
        Ok(CoqPolynomial::new(
            self.coeffs.iter().map(|&c| inv * c).collect(),
        ))
    }

    /// The companion polynomial `conj(P) * P`, projected to its real
    /// coefficients.
    ///
    /// The product has real coefficients in exact arithmetic; any vector
    /// residue is floating-point noise and is checked against tolerance
    /// before being dropped. A residue above tolerance means the arithmetic
    /// upstream is broken, not that the input is bad.
    pub fn companion(&self, tol: &Tolerances) -> Result<RealPolynomial> {
        let product = &self.conjugate() * self;
        let scale = self.one_norm();
        let tolerance = tol.poly_eq * (1.0 + scale * scale);
        let mut worst = 0.0f64;
        for c in product.coeffs() {
            worst = worst.max(c.vector().norm());
        }
        if worst > tolerance {
            return Err(Error::NonRealCompanion {
                residue: worst,
                tolerance,
            });
        }
        Ok(RealPolynomial::new(
            product.coeffs().iter().map(|c| c.re).collect(),
        ))
    }
}

impl std::ops::Mul for &CoqPolynomial {
    type Output = CoqPolynomial;
    fn mul(self, rhs: &CoqPolynomial) -> CoqPolynomial {
        let mut out = vec![Coquaternion::ZERO; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        CoqPolynomial::new(out)
    }
}

impl std::fmt::Display for CoqPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if i < self.degree() {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c}) x")?,
                _ => write!(f, "({c}) x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `x^2 - 2 q0 x + (q0^2 + dv)` of a
/// quasi-similarity class, stored by its two defining invariants.
///
/// Vanishes identically on the class; its discriminant is `-4 dv`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharPoly {
    /// Coefficient `2 * re(q)`.
    pub re2: f64,
    /// Coefficient `dt(q) = q0^2 + dv`.
    pub det: f64,
}

impl CharPoly {
    pub fn new(q0: f64, dv: f64) -> Self {
        CharPoly {
            re2: 2.0 * q0,
            det: q0 * q0 + dv,
        }
    }

    pub fn discriminant(&self) -> f64 {
        self.re2 * self.re2 - 4.0 * self.det
    }

    /// As a real polynomial `x^2 - re2 x + det`.
    pub fn to_real_polynomial(&self) -> RealPolynomial {
        RealPolynomial::new(vec![self.det, -self.re2, 1.0])
    }

    pub fn to_coq_polynomial(&self) -> CoqPolynomial {
        CoqPolynomial::from_real(&self.to_real_polynomial())
    }

    /// Evaluates `z^2 - re2 z + det` at a coquaternion point.
    pub fn eval(&self, z: Coquaternion) -> Coquaternion {
        z * z - z * self.re2 + Coquaternion::real(self.det)
    }
}

/// Remainder `A + B x` of dividing a polynomial by a class characteristic
/// polynomial.
#[derive(Debug, Clone, Copy)]
pub struct LinearRemainder {
    pub a: Coquaternion,
    pub b: Coquaternion,
}

/// Divides a monic polynomial by the characteristic polynomial of a class
/// using the expanded synthetic-division recurrence.
///
/// Returns the quotient `Q` and the remainder `A + Bx` with
/// `P = Q * psi + Bx + A`. For degrees below two the quotient is zero and
/// the remainder is `P` itself.
pub fn divide_by_char(p: &CoqPolynomial, psi: &CharPoly) -> (CoqPolynomial, LinearRemainder) {
    let n = p.degree();
    let c = p.coeffs();
    if n < 2 {
        let rem = LinearRemainder {
            a: c[0],
            b: c.get(1).copied().unwrap_or(Coquaternion::ZERO),
        };
        return (CoqPolynomial::new(vec![Coquaternion::ZERO]), rem);
    }
    debug_assert!(p.is_monic(), "divide_by_char expects a monic dividend");

    // alpha[k] for k = 0..n-2 are the quotient coefficients, built backward
    // from alpha[n-2] = 1 (and alpha[n-1] = 0).
    let mut alpha = vec![Coquaternion::ZERO; n - 1];
    alpha[n - 2] = Coquaternion::ONE;
    for k in (0..n - 2).rev() {
        let a1 = alpha[k + 1];
        let a2 = if k + 2 <= n - 2 {
            alpha[k + 2]
        } else {
            Coquaternion::ZERO
        };
        alpha[k] = c[k + 2] + a1 * psi.re2 - a2 * psi.det;
    }
    let a = c[0] - alpha[0] * psi.det;
    let b = c[1] + alpha[0] * psi.re2
        - if n >= 3 {
            alpha[1] * psi.det
        } else {
            Coquaternion::ZERO
        };
    (
        CoqPolynomial::new(alpha),
        LinearRemainder { a, b },
    )
}
