//! Zero sets of left unilateral polynomials over the split quaternions.
//!
//! The split quaternions (also called coquaternions) form the real algebra
//! spanned by `{1, i, j, k}` with `i^2 = -1`, `j^2 = k^2 = 1` and
//! `ij = -ji = k`. Unlike the Hamilton quaternions this algebra has zero
//! divisors, and a polynomial with coquaternion coefficients can have three
//! different kinds of zeros: isolated points, real lines of zeros, and whole
//! hyperboloids (quasi-similarity classes) of zeros.
//!
//! The crate is organised as a pipeline:
//!
//! - [`algebra`] — scalar arithmetic, conjugation, determinants, canonical
//!   similarity representatives and quasi-similarity.
//! - [`rpoly`] — real-coefficient polynomial utilities, complex root
//!   extraction and multiplicity clustering.
//! - [`cqpoly`] — the polynomial ring itself: products, evaluation, the
//!   companion polynomial and division by class characteristic polynomials.
//! - [`rootfinder`] — enumeration of admissible quasi-similarity classes and
//!   the remainder case analysis that classifies the zero set of each class.
//! - [`verify`] — independent certification of a computed report by residual
//!   checks on sampled points.
//!
//! The entry point for most uses is [`rootfinder::find_all_zeros`]:
//!
//! ```
//! use coquat::{Coquaternion, CoqPolynomial, Tolerances};
//! use coquat::rootfinder::find_all_zeros;
//!
//! // x^2 - 2x + 1 over the coquaternions: every element of the cone
//! // { q : re(q) = 1, dv(q) = 0 } is a zero.
//! let p = CoqPolynomial::new(vec![
//!     Coquaternion::real(1.0),
//!     Coquaternion::real(-2.0),
//!     Coquaternion::real(1.0),
//! ]);
//! let report = find_all_zeros(&p, &Tolerances::default()).unwrap();
//! assert_eq!(report.hyperboloidal_classes().len(), 1);
//! ```

pub mod algebra;
pub mod config;
pub mod cqpoly;
pub mod rootfinder;
pub mod rpoly;
pub mod verify;

pub use algebra::{canonicalize, quasi_similar, ClassRep, CoqType, Coquaternion, MulMatrix};
pub use config::Tolerances;
pub use cqpoly::{divide_by_char, CharPoly, CoqPolynomial, LinearRemainder};
pub use rootfinder::{
    find_all_zeros, AdmissibleClass, CaseBranch, RootReport, ZeroDescriptor, ZeroKind,
};
pub use rpoly::{real_roots, RealPolynomial, RootCluster};
pub use verify::{certify, CertificationResult};

/// Errors reported by the library.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// The element has (numerically) zero determinant and therefore no
    /// inverse; such elements are exactly the zero divisors of the algebra.
    #[error("singular coquaternion (determinant {det:.3e}); zero divisors have no inverse")]
    SingularElement { det: f64 },

    /// Root extraction was asked for on a constant polynomial.
    #[error("degenerate input: polynomial is constant")]
    DegenerateInput,

    /// A coefficient of the companion polynomial kept a vector part above
    /// tolerance. The companion is real by construction, so this signals an
    /// arithmetic bug rather than bad input.
    #[error("companion coefficient has vector residue {residue:.3e} above tolerance {tolerance:.3e}")]
    NonRealCompanion { residue: f64, tolerance: f64 },

    /// The leading coefficient is a zero divisor; the polynomial cannot be
    /// normalised to monic form and the companion may degenerate.
    #[error("leading coefficient is singular (determinant {det:.3e}); cannot monicize")]
    SingularLeadingCoefficient { det: f64 },

    /// An operation was called outside its contract.
    #[error("precondition violation: {0}")]
    PreconditionViolation(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
