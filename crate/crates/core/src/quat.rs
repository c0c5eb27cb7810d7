//! Quaternion arithmetic and the geometric substructure everything else
//! builds on: the pure part ℍ₀, its unit sphere Ω, and the similarity
//! relation (equal norm and real part).
//!
//! Convention: `q = w + x·i + y·j + z·k` with the Hamilton relations
//! `i² = j² = k² = ijk = −1`, so `ij = k`, `jk = i`, `ki = j`.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::de::Deserializer;
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Complex64;

/// Scale-invariant threshold for ℍ₀ membership:
/// `|re(q)| ≤ PURE_TOL · max(1, |q|)`.
pub const PURE_TOL: f64 = 1e-12;

/// A quaternion `w + x·i + y·j + z·k` with double-precision components.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 0.0);
    pub const ONE: Quaternion = Quaternion::new(1.0, 0.0, 0.0, 0.0);
    pub const I: Quaternion = Quaternion::new(0.0, 1.0, 0.0, 0.0);
    pub const J: Quaternion = Quaternion::new(0.0, 0.0, 1.0, 0.0);
    pub const K: Quaternion = Quaternion::new(0.0, 0.0, 0.0, 1.0);

    pub const fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub const fn from_real(w: f64) -> Self {
        Self::new(w, 0.0, 0.0, 0.0)
    }

    /// Embeds ℂ into ℍ as the subfield generated by `i`.
    pub fn from_complex(c: Complex64) -> Self {
        Self::new(c.re, c.im, 0.0, 0.0)
    }

    /// Real (scalar) part.
    pub fn re(&self) -> f64 {
        self.w
    }

    /// Projection onto ℍ₀: the same quaternion with zero scalar part.
    pub fn pure(&self) -> Quaternion {
        Quaternion::new(0.0, self.x, self.y, self.z)
    }

    pub fn conj(&self) -> Quaternion {
        Quaternion::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm_sqr(&self) -> f64 {
        self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, s: f64) -> Quaternion {
        Quaternion::new(self.w * s, self.x * s, self.y * s, self.z * s)
    }

    pub fn distance(&self, other: Quaternion) -> f64 {
        (*self - other).norm()
    }

    /// ℍ₀ membership at the scale-invariant tolerance [`PURE_TOL`].
    pub fn is_pure(&self) -> bool {
        self.w.abs() <= PURE_TOL * self.norm().max(1.0)
    }

    /// Multiplicative inverse `conj(q) / |q|²`.
    ///
    /// Errors on the zero quaternion (the only non-invertible element of ℍ).
    pub fn inverse(&self) -> Result<Quaternion, Error> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return Err(Error::NonInvertible);
        }
        Ok(self.conj().scale(1.0 / n2))
    }

    /// Similarity test: `p ~ q` iff they share norm and real part within
    /// `tol`. Similar quaternions are exactly the conjugates `r p r⁻¹`.
    pub fn is_similar(&self, other: Quaternion, tol: f64) -> bool {
        (self.norm() - other.norm()).abs() <= tol && (self.w - other.w).abs() <= tol
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w + rhs.w,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w - rhs.w,
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, r: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * r.w - self.x * r.x - self.y * r.y - self.z * r.z,
            self.w * r.x + self.x * r.w + self.y * r.z - self.z * r.y,
            self.w * r.y - self.x * r.z + self.y * r.w + self.z * r.x,
            self.w * r.z + self.x * r.y - self.y * r.x + self.z * r.w,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    fn mul(self, s: f64) -> Quaternion {
        self.scale(s)
    }
}

// Wire format: a bare 4-element array [w, x, y, z], shared by every module.
impl Serialize for Quaternion {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.w, self.x, self.y, self.z].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Quaternion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [w, x, y, z] = <[f64; 4]>::deserialize(d)?;
        Ok(Quaternion::new(w, x, y, z))
    }
}

/// The scalar product on ℍ₀: `⟨q, q′⟩ = −ℜ(q q′)`.
///
/// On the orthonormal basis ⟨i, j, k⟩ this is the Euclidean dot product.
/// Both inputs must be pure at the [`PURE_TOL`] tolerance.
pub fn scalar_product_h0(q: Quaternion, r: Quaternion) -> Result<f64, Error> {
    for v in [q, r] {
        if !v.is_pure() {
            return Err(Error::NotPure {
                re_abs: v.w.abs(),
                tol: PURE_TOL * v.norm().max(1.0),
            });
        }
    }
    Ok(-(q * r).w)
}

/// A pair `(z′, z)` of complex numbers identified with the quaternion
/// `z′ + j·z`. This is the translation used when complexifying matrices;
/// the sign conventions here are load-bearing for everything downstream.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPair {
    pub zprime: Complex64,
    pub z: Complex64,
}

impl ComplexPair {
    pub fn new(zprime: Complex64, z: Complex64) -> Self {
        Self { zprime, z }
    }

    /// Splits `q = z′ + j·z` with `z′, z ∈ ℂ = span(1, i)`.
    ///
    /// Under the Hamilton relations `j·(c + d·i) = c·j − d·k`, so the second
    /// component is `z = y − z_coeff·i`. This is the unique split satisfying
    /// `to_quaternion(from_quaternion(q)) = q` pointwise under `mul`.
    pub fn from_quaternion(q: Quaternion) -> Self {
        Self {
            zprime: Complex64::new(q.w, q.x),
            z: Complex64::new(q.y, -q.z),
        }
    }

    /// Reassembles `z′ + j·z`.
    pub fn to_quaternion(&self) -> Quaternion {
        Quaternion::new(self.zprime.re, self.zprime.im, self.z.re, -self.z.im)
    }
}

/// Draws a standard-normal pair by the Box–Muller transform.
pub(crate) fn normal_pair<R: Rng>(rng: &mut R) -> (f64, f64) {
    let u1: f64 = 1.0 - rng.gen::<f64>(); // (0, 1]
    let u2: f64 = rng.gen();
    let r = (-2.0 * u1.ln()).sqrt();
    let t = 2.0 * PI * u2;
    (r * t.cos(), r * t.sin())
}

/// Samples `count` points of Ω = S³ ∩ ℍ₀, the unit sphere of pure
/// quaternions. Every ω ∈ Ω satisfies ω² = −1.
///
/// Uniform on the 2-sphere via normalized 3-component Gaussian draws from a
/// ChaCha8 stream; the generator choice is part of this function's contract
/// and output is deterministic per seed.
pub fn sample_omega(count: usize, seed: u64) -> Vec<Quaternion> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (x, y) = normal_pair(&mut rng);
        let (z, _) = normal_pair(&mut rng);
        let n = (x * x + y * y + z * z).sqrt();
        if n < 1e-9 {
            continue;
        }
        out.push(Quaternion::new(0.0, x / n, y / n, z / n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(w: f64, x: f64, y: f64, z: f64) -> Quaternion {
        Quaternion::new(w, x, y, z)
    }

    #[test]
    fn hamilton_relations() {
        assert_eq!(Quaternion::I * Quaternion::J, Quaternion::K);
        assert_eq!(Quaternion::J * Quaternion::K, Quaternion::I);
        assert_eq!(Quaternion::K * Quaternion::I, Quaternion::J);
        assert_eq!(Quaternion::J * Quaternion::I, -Quaternion::K);
        assert_eq!(
            Quaternion::I * Quaternion::J * Quaternion::K,
            -Quaternion::ONE
        );
    }

    #[test]
    fn mul_examples() {
        let p = q(1.0, 0.0, 0.0, 0.0) + Quaternion::I;
        let r = q(1.0, 0.0, 0.0, 0.0) + Quaternion::J;
        assert_eq!(p * r, q(1.0, 1.0, 1.0, 1.0));
        let any = q(0.3, -1.2, 0.5, 2.0);
        assert_eq!(any * Quaternion::ONE, any);
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(Quaternion::I.inverse().unwrap(), -Quaternion::I);
        assert_eq!(
            Quaternion::from_real(2.0).inverse().unwrap(),
            Quaternion::from_real(0.5)
        );
        let v = q(1.0, 1.0, 1.0, 1.0);
        assert_eq!(v.inverse().unwrap(), q(0.25, -0.25, -0.25, -0.25));
        assert!(matches!(
            Quaternion::ZERO.inverse(),
            Err(Error::NonInvertible)
        ));
    }

    #[test]
    fn inverse_residual_is_tiny() {
        let v = q(0.3, -2.0, 0.7, 1.9);
        let r = (v * v.inverse().unwrap() - Quaternion::ONE).norm();
        assert!(r <= 1e-12 * v.norm().max(1.0));
    }

    #[test]
    fn conj_times_self_is_norm_squared() {
        let v = q(-0.4, 1.5, 2.5, -3.0);
        let p = v.conj() * v;
        assert!((p.w - v.norm_sqr()).abs() <= 1e-12 * v.norm_sqr());
        assert!(p.pure().norm() <= 1e-12 * v.norm_sqr());
    }

    #[test]
    fn similarity_examples() {
        assert!(q(1.0, 2.0, 0.0, 0.0).is_similar(q(1.0, 0.0, 2.0, 0.0), 0.0));
        assert!(Quaternion::I.is_similar(-Quaternion::I, 0.0));
        assert!(!Quaternion::from_real(1.0).is_similar(Quaternion::from_real(2.0), 1e-9));
    }

    #[test]
    fn scalar_product_examples() {
        assert_eq!(
            scalar_product_h0(Quaternion::I, Quaternion::I).unwrap(),
            1.0
        );
        assert_eq!(
            scalar_product_h0(Quaternion::I, Quaternion::J).unwrap(),
            0.0
        );
        let v = Quaternion::I.scale(2.0) + Quaternion::K;
        assert_eq!(scalar_product_h0(v, Quaternion::K).unwrap(), 1.0);
        assert!(scalar_product_h0(Quaternion::ONE, Quaternion::I).is_err());
    }

    #[test]
    fn complex_pair_round_trip_via_mul() {
        // to_quaternion must literally equal z' + j*z under quaternion mul.
        let samples = [
            q(1.0, -2.0, 3.0, -4.0),
            Quaternion::K,
            q(0.0, 0.0, -1.5, 2.5),
        ];
        for v in samples {
            let p = ComplexPair::from_quaternion(v);
            let rebuilt =
                Quaternion::from_complex(p.zprime) + Quaternion::J * Quaternion::from_complex(p.z);
            assert_eq!(rebuilt, v);
            assert_eq!(p.to_quaternion(), v);
        }
    }

    #[test]
    fn omega_samples_are_pure_unit_and_deterministic() {
        let a = sample_omega(3, 7);
        let b = sample_omega(3, 7);
        assert_eq!(a, b);
        for w in sample_omega(32, 11) {
            assert_eq!(w.re(), 0.0);
            assert!((w.norm() - 1.0).abs() <= 1e-12);
            let sq = w * w;
            assert!((sq.w + 1.0).abs() <= 1e-12);
            assert!(sq.pure().norm() <= 1e-12);
        }
    }

    #[test]
    fn omega_mean_is_near_zero() {
        // Statistical check against the uniform-sphere model.
        let pts = sample_omega(1000, 1);
        let mut m = Quaternion::ZERO;
        for p in &pts {
            m = m + *p;
        }
        m = m.scale(1.0 / pts.len() as f64);
        assert!(m.x.abs() < 0.1 && m.y.abs() < 0.1 && m.z.abs() < 0.1);
    }

    #[test]
    fn quaternion_json_round_trip() {
        let v = q(1.0, -0.5, 0.25, 3.0);
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, "[1.0,-0.5,0.25,3.0]");
        let back: Quaternion = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
