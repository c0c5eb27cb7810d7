//! Left eigenvalues of arbitrary 2×2 quaternionic matrices.
//!
//! A left eigenvalue is a quaternion `q` with `Au = qu` for some nonzero
//! `u ∈ ℍ²`. If `bc = 0` the eigenvalues are just the diagonal entries.
//! Otherwise `A − qI` is singular exactly when `p = b⁻¹(q − a)` solves
//! `p² + a₁p + a₀ = 0` with `a₁ = b⁻¹(a−d)`, `a₀ = −b⁻¹c`, so the left
//! spectrum is the image `q = a + b·p` of the quadratic's solution set.
//!
//! Near-triangular inputs (`|b·c| < 1e-12` but nonzero) are ill-conditioned
//! for this reduction since it multiplies by `b⁻¹`; they still go through
//! the general pipeline, but callers may want to treat results with extra
//! care.

use serde::{Deserialize, Serialize};

use crate::cxlift::{complexify, pair_norm, sdet, sdet_shift, QuatMatrix2};
use crate::eig4::{null_space, to_quaternion_vector};
use crate::error::Error;
use crate::quat::Quaternion;
use crate::uniquad::{self, SolutionSet};

/// Verification threshold: `q` counts as a left eigenvalue when
/// `Sdet(A − qI) ≤ 1e-6 · (1 + Sdet(A))`.
pub const VERIFY_TOL: f64 = 1e-6;

/// Residual bound for returned eigenvectors: `|Au − qu| ≤ 1e-8·|u|`.
pub const EIGENPAIR_RESIDUAL: f64 = 1e-8;

/// The left spectrum of a 2×2 quaternionic matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum EigenvalueSet {
    /// At most two isolated left eigenvalues.
    #[serde(rename = "finite")]
    Finite { values: Vec<Quaternion> },
    /// The affine sphere `{center + factor·ω : ω ∈ Ω}`.
    #[serde(rename = "affine_sphere")]
    InfiniteAffine {
        center: Quaternion,
        factor: Quaternion,
    },
}

impl EigenvalueSet {
    pub fn is_infinite(&self) -> bool {
        matches!(self, EigenvalueSet::InfiniteAffine { .. })
    }

    /// Membership test. For the affine sphere, `factor⁻¹·(q − center)`
    /// must be pure of norm 1 within `tol`.
    pub fn membership(&self, q: Quaternion, tol: f64) -> bool {
        match self {
            EigenvalueSet::Finite { values } => values.iter().any(|v| v.distance(q) <= tol),
            EigenvalueSet::InfiniteAffine { center, factor } => match factor.inverse() {
                Ok(inv) => {
                    let w = inv * (q - *center);
                    w.re().abs() <= tol && (w.norm() - 1.0).abs() <= tol
                }
                Err(_) => q.distance(*center) <= tol,
            },
        }
    }
}

/// A verified left eigenpair `Au = qu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenPair {
    pub value: Quaternion,
    pub vector: (Quaternion, Quaternion),
}

/// Computes the left spectrum of `A`.
///
/// The triangular shortcut (`b·c == 0` as stored values, both orientations)
/// returns the diagonal entries exactly; everything else is mapped through
/// the unilateral quadratic. Every finite value is verified against the
/// Study determinant before being returned.
///
/// ```
/// use lefteig::lefteig2::{left_eigenvalues, EigenvalueSet};
/// use lefteig::{QuatMatrix2, Quaternion};
///
/// let diag = QuatMatrix2::diagonal(Quaternion::I, Quaternion::J);
/// let eigs = left_eigenvalues(&diag)?;
/// assert_eq!(
///     eigs,
///     EigenvalueSet::Finite { values: vec![Quaternion::I, Quaternion::J] }
/// );
/// # Ok::<(), lefteig::Error>(())
/// ```
pub fn left_eigenvalues(a: &QuatMatrix2) -> Result<EigenvalueSet, Error> {
    if a.b * a.c == Quaternion::ZERO {
        let mut values = vec![a.a];
        if a.d != a.a {
            values.push(a.d);
        }
        return Ok(EigenvalueSet::Finite { values });
    }

    let b_inv = a.b.inverse()?;
    let a1 = b_inv * (a.a - a.d);
    let a0 = -(b_inv * a.c);
    let (set, _report) = uniquad::solve(a1, a0)?;

    match set {
        SolutionSet::Finite { solutions } => {
            let values: Vec<Quaternion> = solutions.iter().map(|p| a.a + a.b * *p).collect();
            let scale = 1.0 + sdet(a);
            for q in &values {
                let r = sdet_shift(a, *q);
                if r > VERIFY_TOL * scale {
                    return Err(Error::ResidualCheck {
                        residual: r / scale,
                        bound: VERIFY_TOL,
                    });
                }
            }
            Ok(EigenvalueSet::Finite { values })
        }
        SolutionSet::InfiniteSphere { center, radius } => Ok(EigenvalueSet::InfiniteAffine {
            center: a.a + a.b.scale(center),
            factor: a.b.scale(radius),
        }),
    }
}

/// Produces a left eigenvector for a (verified) left eigenvalue `q` from
/// the null space of the complexified `A − qI`.
pub fn eigenvector_for(a: &QuatMatrix2, q: Quaternion) -> Result<EigenPair, Error> {
    let scale = 1.0 + sdet(a);
    let residual = sdet_shift(a, q);
    if residual > VERIFY_TOL * scale {
        return Err(Error::NotAnEigenvalue {
            residual: residual / scale,
            tol: VERIFY_TOL,
        });
    }
    let shifted = complexify(&a.shift(q));
    let basis = null_space(&shifted);
    let v = basis.first().ok_or(Error::NotAnEigenvalue {
        residual: residual / scale,
        tol: VERIFY_TOL,
    })?;
    let u = to_quaternion_vector(v);

    let au = a.apply(u);
    let qu = (q * u.0, q * u.1);
    let err = pair_norm((au.0 - qu.0, au.1 - qu.1));
    if err > EIGENPAIR_RESIDUAL * pair_norm(u) {
        return Err(Error::ResidualCheck {
            residual: err / pair_norm(u),
            bound: EIGENPAIR_RESIDUAL,
        });
    }
    Ok(EigenPair {
        value: q,
        vector: u,
    })
}

/// Raw verification functional `Sdet(A − qI)`. Callers normalize by
/// `1 + Sdet(A)` and treat values at or below [`VERIFY_TOL`] as
/// eigenvalues.
pub fn verify(a: &QuatMatrix2, q: Quaternion) -> f64 {
    sdet_shift(a, q)
}
