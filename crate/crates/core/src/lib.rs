//! Left eigenvalues of 2×2 quaternionic matrices.
//!
//! Quaternion multiplication is noncommutative, so `A u = q u` (left
//! eigenvalues) and `A u = u λ` (right eigenvalues) are genuinely different
//! problems. This crate solves the left problem for 2×2 matrices over ℍ by
//! reducing it to a unilateral quadratic `p² + a₁p + a₀ = 0`, which is in
//! turn solved through the right eigenvectors of its companion matrix after
//! complexifying to a 4×4 complex matrix.
//!
//! Modules:
//! - [`quat`]: quaternion arithmetic and the pure-imaginary unit sphere Ω
//! - [`cxlift`]: 2×2 quaternionic ↔ 4×4 complex translation, Study determinant
//! - [`eig4`]: fixed-size 4×4 complex eigensolver (characteristic polynomial,
//!   Durand–Kerner roots, null spaces)
//! - [`uniquad`]: unilateral quadratic solver and solution-set classification
//! - [`lefteig2`]: left eigenvalues of arbitrary 2×2 quaternionic matrices
//! - [`sp2`]: symplectic 2×2 matrices and their spectrum classification
//! - [`oracle`]: independent brute-force verifiers (residual minimization)
//!
//! ```
//! use lefteig::uniquad::{solve, SolutionSet};
//! use lefteig::Quaternion;
//!
//! // p^2 + 1 = 0 over the quaternions: every pure unit is a solution.
//! let (set, report) = solve(Quaternion::ZERO, Quaternion::ONE)?;
//! assert_eq!(set, SolutionSet::InfiniteSphere { center: 0.0, radius: 1.0 });
//! assert!(report.huang_so.all());
//!
//! // p^2 + ip = 0 has exactly two isolated solutions.
//! let (set, _) = solve(Quaternion::I, Quaternion::ZERO)?;
//! assert!(matches!(set, SolutionSet::Finite { .. }));
//! # Ok::<(), lefteig::Error>(())
//! ```

pub mod cxlift;
pub mod eig4;
pub mod error;
pub mod lefteig2;
pub mod oracle;
pub mod quat;
pub mod sp2;
pub mod uniquad;

pub use cxlift::{ComplexMatrix4, QuatMatrix2};
pub use eig4::{ComplexPolynomial, Spectrum4};
pub use error::Error;
pub use lefteig2::{EigenPair, EigenvalueSet};
pub use quat::{ComplexPair, Quaternion};
pub use sp2::{RotationForm, SymplecticForm};
pub use uniquad::{CaseTag, ClassificationReport, CompanionMatrix, HuangSoFlags, SolutionSet};

/// Convenience alias used throughout the crate.
pub type Complex64 = num_complex::Complex<f64>;
