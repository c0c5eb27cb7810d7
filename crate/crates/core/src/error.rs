//! Error types shared by all modules.

use crate::Complex64;

/// Errors produced by the library.
///
/// Domain errors describe invalid inputs; numerical errors describe a
/// computation that ran but failed to meet its accuracy contract.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Inverse of the zero quaternion was requested.
    #[error("non-invertible: zero quaternion has no inverse")]
    NonInvertible,

    /// An operation restricted to pure quaternions (ℍ₀) received a value
    /// with a non-negligible real part.
    #[error("not a pure quaternion: |re| = {re_abs:.3e} exceeds tolerance {tol:.3e}")]
    NotPure { re_abs: f64, tol: f64 },

    /// A symplectic-only operation received a matrix with ‖A*A − I‖ above
    /// tolerance.
    #[error("not symplectic: max deviation of A*A from identity is {deviation:.3e}")]
    NotSymplectic { deviation: f64 },

    /// A structured form (diagonal/general symplectic, rotation) violates
    /// its invariants.
    #[error("invalid form: {0}")]
    InvalidForm(String),

    /// An eigenvector of the companion matrix had a (numerically) zero
    /// second coordinate, so no privileged eigenvalue can be extracted.
    #[error("degenerate eigenvector: second coordinate is numerically zero")]
    DegenerateEigenvector,

    /// The polynomial root finder stopped without meeting the residual
    /// bound. Carries the best iterate.
    #[error("root finding did not converge: worst residual {residual:.3e} > {bound:.3e}")]
    RootsDidNotConverge {
        roots: [Complex64; 4],
        residual: f64,
        bound: f64,
    },

    /// No null vector exists at the working tolerance, i.e. the given value
    /// is not an eigenvalue of the matrix.
    #[error("not an eigenvalue at tolerance: residual {residual:.3e} > {tol:.3e}")]
    NotAnEigenvalue { residual: f64, tol: f64 },

    /// A computed solution failed its residual bound.
    #[error("residual check failed: {residual:.3e} > {bound:.3e}")]
    ResidualCheck { residual: f64, bound: f64 },

    /// Two routes that must agree by theorem disagreed numerically. This
    /// indicates a tolerance breakdown, not a user error.
    #[error("internal consistency violation: {0}")]
    Inconsistency(String),
}

impl Error {
    /// True for errors caused by invalid input rather than numerics.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::NonInvertible
                | Error::NotPure { .. }
                | Error::NotSymplectic { .. }
                | Error::InvalidForm(_)
                | Error::DegenerateEigenvector
        )
    }
}
