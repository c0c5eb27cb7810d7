//! The ℍ ↔ ℂ² translation layer: complexification of 2×2 quaternionic
//! matrices into 4×4 complex matrices, and the Study determinant.
//!
//! Writing each entry as `a = z′ + j·z` splits `A = X + jY` into complex
//! 2×2 blocks; the complexification is the 4×4 block matrix
//! `[[X, −conj(Y)], [Y, conj(X)]]`. The map is an algebra homomorphism, so
//! spectral questions about `A` become ordinary complex linear algebra.

use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::quat::{ComplexPair, Quaternion};
use crate::Complex64;

/// A 2×2 matrix `[[a, b], [c, d]]` with quaternion entries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuatMatrix2 {
    pub a: Quaternion,
    pub b: Quaternion,
    pub c: Quaternion,
    pub d: Quaternion,
}

impl QuatMatrix2 {
    pub const fn new(a: Quaternion, b: Quaternion, c: Quaternion, d: Quaternion) -> Self {
        Self { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new(
            Quaternion::ONE,
            Quaternion::ZERO,
            Quaternion::ZERO,
            Quaternion::ONE,
        )
    }

    pub fn diagonal(alpha: Quaternion, delta: Quaternion) -> Self {
        Self::new(alpha, Quaternion::ZERO, Quaternion::ZERO, delta)
    }

    /// `A − qI`.
    pub fn shift(&self, q: Quaternion) -> QuatMatrix2 {
        QuatMatrix2::new(self.a - q, self.b, self.c, self.d - q)
    }

    /// Matrix product. Entry order matters: quaternions do not commute.
    pub fn mul(&self, r: &QuatMatrix2) -> QuatMatrix2 {
        QuatMatrix2::new(
            self.a * r.a + self.b * r.c,
            self.a * r.b + self.b * r.d,
            self.c * r.a + self.d * r.c,
            self.c * r.b + self.d * r.d,
        )
    }

    /// Conjugate transpose `A*`.
    pub fn adjoint(&self) -> QuatMatrix2 {
        QuatMatrix2::new(self.a.conj(), self.c.conj(), self.b.conj(), self.d.conj())
    }

    /// Applies the matrix to a column vector of ℍ² (a right vector space;
    /// the matrix acts on the left).
    pub fn apply(&self, u: (Quaternion, Quaternion)) -> (Quaternion, Quaternion) {
        (self.a * u.0 + self.b * u.1, self.c * u.0 + self.d * u.1)
    }

    pub fn max_entry_norm(&self) -> f64 {
        self.a
            .norm()
            .max(self.b.norm())
            .max(self.c.norm())
            .max(self.d.norm())
    }
}

// Wire format: 2×2 nested array of quaternion arrays.
impl Serialize for QuatMatrix2 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [[self.a, self.b], [self.c, self.d]].serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuatMatrix2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [[a, b], [c, d]] = <[[Quaternion; 2]; 2]>::deserialize(d)?;
        Ok(QuatMatrix2::new(a, b, c, d))
    }
}

/// A dense 4×4 complex matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix4 {
    pub entries: [[Complex64; 4]; 4],
}

impl ComplexMatrix4 {
    pub fn zero() -> Self {
        Self {
            entries: [[Complex64::new(0.0, 0.0); 4]; 4],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for i in 0..4 {
            m.entries[i][i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// `M − λI`.
    pub fn shifted(&self, lambda: Complex64) -> ComplexMatrix4 {
        let mut m = *self;
        for i in 0..4 {
            m.entries[i][i] -= lambda;
        }
        m
    }

    pub fn mul(&self, r: &ComplexMatrix4) -> ComplexMatrix4 {
        let mut out = Self::zero();
        for i in 0..4 {
            for k in 0..4 {
                let v = self.entries[i][k];
                if v == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..4 {
                    out.entries[i][j] += v * r.entries[k][j];
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1] + self.entries[2][2] + self.entries[3][3]
    }

    pub fn apply(&self, v: &[Complex64; 4]) -> [Complex64; 4] {
        let mut out = [Complex64::new(0.0, 0.0); 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i] += self.entries[i][j] * v[j];
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        let mut m = 0.0f64;
        for row in &self.entries {
            for e in row {
                m = m.max(e.norm());
            }
        }
        m
    }

    /// Determinant by LU factorization with partial pivoting.
    pub fn det(&self) -> Complex64 {
        let mut m = self.entries;
        let mut det = Complex64::new(1.0, 0.0);
        for col in 0..4 {
            let mut piv = col;
            let mut best = m[col][col].norm();
            for r in col + 1..4 {
                let v = m[r][col].norm();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best == 0.0 {
                return Complex64::new(0.0, 0.0);
            }
            if piv != col {
                m.swap(piv, col);
                det = -det;
            }
            det *= m[col][col];
            for r in col + 1..4 {
                let f = m[r][col] / m[col][col];
                if f == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c2 in col..4 {
                    let s = f * m[col][c2];
                    m[r][c2] -= s;
                }
            }
        }
        det
    }
}

/// Euclidean norm of a column vector of ℍ².
pub fn pair_norm(u: (Quaternion, Quaternion)) -> f64 {
    (u.0.norm_sqr() + u.1.norm_sqr()).sqrt()
}

/// Complexifies `A = X + jY` into `[[X, −conj(Y)], [Y, conj(X)]]`.
///
/// Coordinates are ordered so that a vector `(x′, x, y′, y)` corresponds to
/// the quaternionic column `(x′ + j·y′, x + j·y)`.
pub fn complexify(a: &QuatMatrix2) -> ComplexMatrix4 {
    let sp = [
        ComplexPair::from_quaternion(a.a),
        ComplexPair::from_quaternion(a.b),
        ComplexPair::from_quaternion(a.c),
        ComplexPair::from_quaternion(a.d),
    ];
    // 2x2 blocks in row-major entry order a, b, c, d.
    let x = [[sp[0].zprime, sp[1].zprime], [sp[2].zprime, sp[3].zprime]];
    let y = [[sp[0].z, sp[1].z], [sp[2].z, sp[3].z]];
    let mut m = ComplexMatrix4::zero();
    for i in 0..2 {
        for j in 0..2 {
            m.entries[i][j] = x[i][j];
            m.entries[i][j + 2] = -y[i][j].conj();
            m.entries[i + 2][j] = y[i][j];
            m.entries[i + 2][j + 2] = x[i][j].conj();
        }
    }
    m
}

/// Reads the `X`, `Y` blocks back and reassembles the quaternionic matrix;
/// inverse of [`complexify`] on its image.
pub fn decomplexify(m: &ComplexMatrix4) -> QuatMatrix2 {
    let q =
        |i: usize, j: usize| ComplexPair::new(m.entries[i][j], m.entries[i + 2][j]).to_quaternion();
    QuatMatrix2::new(q(0, 0), q(0, 1), q(1, 0), q(1, 1))
}

/// Study determinant `Sdet(A) = |det(Ã)|^{1/2}`.
///
/// Non-negative, multiplicative, and zero exactly on the non-invertible
/// quaternionic matrices.
pub fn sdet(a: &QuatMatrix2) -> f64 {
    complexify(a).det().norm().sqrt()
}

/// `Sdet(A − qI)`: the residual functional behind left-eigenvalue
/// verification. Vanishes iff `q` is a left eigenvalue of `A`.
pub fn sdet_shift(a: &QuatMatrix2, q: Quaternion) -> f64 {
    sdet(&a.shift(q))
}
