//! Tolerance configuration.
//!
//! Every branch decision in the pipeline is a comparison against one of the
//! thresholds below. All tests are relative: a threshold `eps` is applied as
//! `eps * (1 + scale)` where `scale` is a norm of the quantities involved, so
//! the defaults behave sensibly for both small and desk-scale inputs.

/// Tunable numerical thresholds used across the crate.
#[derive(Debug, Clone)]
pub struct Tolerances {
    /// Invertibility test: `q` is treated as singular when
    /// `|dt(q)| <= singular * (1 + |q|^2)`.
    pub singular: f64,
    /// Type classification of the vector-part determinant: `|dv|` below
    /// `type_class * (1 + |q|^2)` means Type 3.
    pub type_class: f64,
    /// Base clustering radius for companion roots, relative to `1 + |root|`.
    /// Also the grid used to deduplicate admissible classes.
    pub cluster: f64,
    /// Residual certificate for extracted roots.
    pub residual: f64,
    /// Remainder coefficient `B` (and `A`) is treated as zero when its norm
    /// is below `b_zero * (1 + max coefficient norm of P)`. The same
    /// threshold routes near-real `gamma` to the real-solution branch.
    pub b_zero: f64,
    /// Line existence test `(q0 - gamma0)^2 = -dv`, relative to
    /// `1 + q0^2 + |dv|`.
    pub linear: f64,
    /// Consistency threshold for the rank-2 least-squares solve of
    /// `M_B z = -A`, relative to `1 + |A|`.
    pub consistency: f64,
    /// Polynomial equality / companion reality metric (max coefficient norm).
    pub poly_eq: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            singular: 1e-10,
            type_class: 1e-9,
            cluster: 1e-6,
            residual: 1e-9,
            b_zero: 1e-8,
            linear: 1e-8,
            consistency: 1e-8,
            poly_eq: 1e-10,
        }
    }
}

impl Tolerances {
    /// Scales every threshold by `factor` (> 0). Used by the CLI `--tol`
    /// flag to loosen or tighten the whole pipeline proportionally.
    pub fn scaled(&self, factor: f64) -> Self {
        Tolerances {
            singular: self.singular * factor,
            type_class: self.type_class * factor,
            cluster: self.cluster * factor,
            residual: self.residual * factor,
            b_zero: self.b_zero * factor,
            linear: self.linear * factor,
            consistency: self.consistency * factor,
            poly_eq: self.poly_eq * factor,
        }
    }
}
