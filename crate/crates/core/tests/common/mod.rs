//! Shared deterministic samplers for the integration suites.
//!
//! Each test target compiles its own copy, so not every helper is used
//! everywhere.
#![allow(dead_code)]

use lefteig::{QuatMatrix2, Quaternion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn normal_pair(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    let r = (-2.0 * u1.ln()).sqrt();
    let t = 2.0 * std::f64::consts::PI * u2;
    (r * t.cos(), r * t.sin())
}

pub fn random_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    let (w, x) = normal_pair(rng);
    let (y, z) = normal_pair(rng);
    Quaternion::new(w, x, y, z)
}

pub fn random_unit_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    loop {
        let q = random_quaternion(rng);
        let n = q.norm();
        if n >= 1e-9 {
            return q.scale(1.0 / n);
        }
    }
}

pub fn random_pure_unit(rng: &mut ChaCha8Rng) -> Quaternion {
    loop {
        let q = random_quaternion(rng).pure();
        let n = q.norm();
        if n >= 1e-9 {
            return q.scale(1.0 / n);
        }
    }
}

pub fn random_matrix(rng: &mut ChaCha8Rng) -> QuatMatrix2 {
    QuatMatrix2::new(
        random_quaternion(rng),
        random_quaternion(rng),
        random_quaternion(rng),
        random_quaternion(rng),
    )
}
