//! Symplectic 2×2 quaternionic matrices: `A*A = I`.
//!
//! These are the ℍ-linear maps preserving the hermitian product
//! `⟨u, v⟩ = conj(u₁)v₁ + conj(u₂)v₂`. Every symplectic matrix is either
//! diagonal with unit entries or determined by a unit first column
//! `(α, β)` and a unit quaternion γ fixing the second column inside the
//! orthogonal complement. The matrices with an infinite left spectrum are
//! exactly the rotations `[[q cosθ, −q sinθ], [q sinθ, q cosθ]]` with
//! `|q| = 1`, `sinθ ≠ 0` (a real rotation followed by a left translation).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cxlift::QuatMatrix2;
use crate::error::Error;
use crate::lefteig2::{left_eigenvalues, EigenvalueSet};
use crate::quat::{normal_pair, Quaternion};

/// Invariant tolerance for the structured forms.
pub const FORM_TOL: f64 = 1e-12;

/// Default symplecticity tolerance for classification entry points.
pub const SYMPLECTIC_TOL: f64 = 1e-8;

/// `to_form` rejects inputs whose recovered γ misses unit norm by more
/// than this; that much drift means the input was not really symplectic.
pub const GAMMA_HEALTH_TOL: f64 = 1e-6;

/// Structured description of a symplectic matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SymplecticForm {
    /// `diag(α, δ)` with `|α| = |δ| = 1`.
    Diagonal {
        alpha: Quaternion,
        delta: Quaternion,
    },
    /// `[[α, −β̄γ], [β, βᾱβ̄γ/|β|²]]` with `β ≠ 0`, `|α|² + |β|² = 1`,
    /// `|γ| = 1`.
    General {
        alpha: Quaternion,
        beta: Quaternion,
        gamma: Quaternion,
    },
}

/// The rotation form `[[q cosθ, −q sinθ], [q sinθ, q cosθ]]`, `|q| = 1`,
/// `sinθ ≠ 0`: precisely the symplectic matrices with infinite left
/// spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RotationForm {
    pub q: Quaternion,
    pub theta: f64,
}

impl RotationForm {
    pub fn matrix(&self) -> QuatMatrix2 {
        let (s, c) = self.theta.sin_cos();
        QuatMatrix2::new(
            self.q.scale(c),
            self.q.scale(-s),
            self.q.scale(s),
            self.q.scale(c),
        )
    }
}

/// The quaternion-valued hermitian product `conj(u₁)v₁ + conj(u₂)v₂`.
pub fn hermitian_product(u: (Quaternion, Quaternion), v: (Quaternion, Quaternion)) -> Quaternion {
    u.0.conj() * v.0 + u.1.conj() * v.1
}

/// Max entrywise deviation of `A*A` from the identity.
pub fn symplectic_deviation(a: &QuatMatrix2) -> f64 {
    let p = a.adjoint().mul(a);
    let i = QuatMatrix2::identity();
    (p.a - i.a)
        .norm()
        .max((p.b - i.b).norm())
        .max((p.c - i.c).norm())
        .max((p.d - i.d).norm())
}

pub fn is_symplectic(a: &QuatMatrix2, tol: f64) -> bool {
    symplectic_deviation(a) <= tol
}

/// Builds the matrix described by a form, validating its invariants.
pub fn from_form(form: &SymplecticForm) -> Result<QuatMatrix2, Error> {
    match form {
        SymplecticForm::Diagonal { alpha, delta } => {
            for (name, v) in [("alpha", alpha), ("delta", delta)] {
                if (v.norm() - 1.0).abs() > FORM_TOL {
                    return Err(Error::InvalidForm(format!(
                        "diagonal entry {name} has norm {} != 1",
                        v.norm()
                    )));
                }
            }
            Ok(QuatMatrix2::diagonal(*alpha, *delta))
        }
        SymplecticForm::General { alpha, beta, gamma } => {
            let col = alpha.norm_sqr() + beta.norm_sqr();
            if (col - 1.0).abs() > FORM_TOL {
                return Err(Error::InvalidForm(format!(
                    "|alpha|^2 + |beta|^2 = {col} != 1"
                )));
            }
            if (gamma.norm() - 1.0).abs() > FORM_TOL {
                return Err(Error::InvalidForm(format!(
                    "gamma has norm {} != 1",
                    gamma.norm()
                )));
            }
            if beta.norm() <= FORM_TOL {
                return Err(Error::InvalidForm("beta = 0; use the diagonal form".into()));
            }
            let b = -(beta.conj() * *gamma);
            let d = (*beta * alpha.conj() * beta.conj() * *gamma).scale(1.0 / beta.norm_sqr());
            Ok(QuatMatrix2::new(*alpha, b, *beta, d))
        }
    }
}

/// Recovers the structured form of a symplectic matrix. The extracted
/// parameters are projected back onto the exact invariant manifold so the
/// result always round-trips through [`from_form`].
pub fn to_form(a: &QuatMatrix2) -> Result<SymplecticForm, Error> {
    let deviation = symplectic_deviation(a);
    if deviation > SYMPLECTIC_TOL {
        return Err(Error::NotSymplectic { deviation });
    }
    let beta = a.c;
    if beta.norm() <= FORM_TOL {
        let unit = |v: Quaternion| v.scale(1.0 / v.norm());
        return Ok(SymplecticForm::Diagonal {
            alpha: unit(a.a),
            delta: unit(a.d),
        });
    }
    let gamma = -(beta.conj().inverse()? * a.b);
    if (gamma.norm() - 1.0).abs() > GAMMA_HEALTH_TOL {
        return Err(Error::InvalidForm(format!(
            "recovered gamma has norm {}; the matrix is not symplectic enough",
            gamma.norm()
        )));
    }
    let col = (a.a.norm_sqr() + beta.norm_sqr()).sqrt();
    Ok(SymplecticForm::General {
        alpha: a.a.scale(1.0 / col),
        beta: beta.scale(1.0 / col),
        gamma: gamma.scale(1.0 / gamma.norm()),
    })
}

/// Left-spectrum classification of a symplectic matrix.
///
/// Returns the spectrum and, when it is infinite, the rotation form
/// `(q, θ)` with `q = β/|β|`, `sinθ = |β|` and `cosθ = ℜ(β̄α)/|β|`;
/// reconstruction from that form is checked against the input.
pub fn classify_spectrum(a: &QuatMatrix2) -> Result<(EigenvalueSet, Option<RotationForm>), Error> {
    let deviation = symplectic_deviation(a);
    if deviation > SYMPLECTIC_TOL {
        return Err(Error::NotSymplectic { deviation });
    }
    let eigs = left_eigenvalues(a)?;
    if !eigs.is_infinite() {
        return Ok((eigs, None));
    }

    let beta = a.c;
    let sin = beta.norm();
    let q = beta.scale(1.0 / sin);
    let cos = (beta.conj() * a.a).re() / sin;
    let rotation = RotationForm {
        q,
        theta: sin.atan2(cos),
    };
    let rebuilt = rotation.matrix();
    let err = (rebuilt.a - a.a)
        .norm()
        .max((rebuilt.b - a.b).norm())
        .max((rebuilt.c - a.c).norm())
        .max((rebuilt.d - a.d).norm());
    if err > 1e-8 {
        return Err(Error::Inconsistency(format!(
            "infinite left spectrum but the rotation form misses the matrix by {err:.3e}"
        )));
    }
    Ok((eigs, Some(rotation)))
}

/// Samples a random symplectic matrix, deterministic per seed: the first
/// column `(α, β)` uniform on the unit sphere of ℍ², γ uniform on unit
/// quaternions, with a 10% chance of the diagonal branch instead.
pub fn random_symplectic(seed: u64) -> QuatMatrix2 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let branch: f64 = rng.gen();
    if branch < 0.1 {
        let alpha = random_unit(&mut rng);
        let delta = random_unit(&mut rng);
        return QuatMatrix2::diagonal(alpha, delta);
    }
    loop {
        let (w1, x1) = normal_pair(&mut rng);
        let (y1, z1) = normal_pair(&mut rng);
        let (w2, x2) = normal_pair(&mut rng);
        let (y2, z2) = normal_pair(&mut rng);
        let alpha = Quaternion::new(w1, x1, y1, z1);
        let beta = Quaternion::new(w2, x2, y2, z2);
        let n = (alpha.norm_sqr() + beta.norm_sqr()).sqrt();
        if n < 1e-9 || beta.norm() / n < 1e-9 {
            continue;
        }
        let gamma = random_unit(&mut rng);
        let form = SymplecticForm::General {
            alpha: alpha.scale(1.0 / n),
            beta: beta.scale(1.0 / n),
            gamma,
        };
        match from_form(&form) {
            Ok(m) => return m,
            Err(_) => continue,
        }
    }
}

fn random_unit(rng: &mut ChaCha8Rng) -> Quaternion {
    loop {
        let (w, x) = normal_pair(rng);
        let (y, z) = normal_pair(rng);
        let v = Quaternion::new(w, x, y, z);
        let n = v.norm();
        if n >= 1e-9 {
            return v.scale(1.0 / n);
        }
    }
}
