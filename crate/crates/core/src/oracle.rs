//! Independent brute-force verifiers: residual evaluation and multistart
//! residual minimization over ℝ⁴.
//!
//! Nothing here touches the characteristic-polynomial/eigenvector path, so
//! agreement between [`search_solutions`] and the analytic solver is a real
//! cross-check rather than a tautology. The minimizer is a damped Newton
//! iteration on `f(p) = |p² + a₁p + a₀|²` with finite-difference gradient
//! and Hessian, falling back to damped gradient steps when the Newton
//! model fails; plain gradient descent stalls on the quartic-flat basins
//! around multiple roots.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cxlift::{sdet, sdet_shift, QuatMatrix2};
use crate::quat::{normal_pair, Quaternion};

/// Minima with residual above this are not solutions.
pub const SOLUTION_RESIDUAL: f64 = 1e-7;

/// Minima closer than this are the same solution.
pub const CLUSTER_RADIUS: f64 = 1e-4;

/// Central-difference step for the gradient.
const GRAD_STEP: f64 = 1e-6;

/// Central-difference step for the Hessian.
const HESS_STEP: f64 = 1e-4;

/// Stop when the gradient norm falls below this.
const GRAD_TOL: f64 = 1e-10;

/// Per-start iteration cap.
const MAX_ITERS: usize = 500;

/// `|p² + a₁p + a₀|`: zero exactly at solutions of the quadratic.
pub fn quadratic_residual(p: Quaternion, a1: Quaternion, a0: Quaternion) -> f64 {
    (p * p + a1 * p + a0).norm()
}

/// `Sdet(A − qI) / (1 + Sdet(A))`: a scale-normalized left-eigenvalue
/// residual that shares no code with the eigenvector pipeline.
pub fn left_eig_residual(a: &QuatMatrix2, q: Quaternion) -> f64 {
    sdet_shift(a, q) / (1.0 + sdet(a))
}

/// Result of a multistart search: clustered local minima of the residual,
/// sorted by residual (ascending), pairwise separated by more than
/// `cluster_radius`.
#[derive(Debug, Clone, PartialEq)]
pub struct ResidualLandscape {
    pub starts: usize,
    pub cluster_radius: f64,
    pub minima: Vec<(Quaternion, f64)>,
}

impl ResidualLandscape {
    /// Cluster representatives alone.
    pub fn points(&self) -> Vec<Quaternion> {
        self.minima.iter().map(|(p, _)| *p).collect()
    }

    pub fn len(&self) -> usize {
        self.minima.len()
    }

    pub fn is_empty(&self) -> bool {
        self.minima.is_empty()
    }
}

/// Minimizes the quadratic residual from `starts` seeded random points in
/// the ball of radius `1 + |a₁| + |a₀|` (every solution lies inside, since
/// `|p|² ≤ |a₁||p| + |a₀|`). Minima with residual ≤ 1e-7 are clustered at
/// radius 1e-4. Deterministic per seed.
pub fn search_solutions(
    a1: Quaternion,
    a0: Quaternion,
    starts: usize,
    seed: u64,
) -> ResidualLandscape {
    assert!(starts >= 10, "search_solutions requires at least 10 starts");
    let radius = 1.0 + a1.norm() + a0.norm();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut found: Vec<(Quaternion, f64)> = Vec::new();
    for _ in 0..starts {
        let start = random_in_ball(&mut rng, radius);
        let (p, residual) = minimize(start, a1, a0);
        if residual <= SOLUTION_RESIDUAL {
            found.push((p, residual));
        }
    }

    found.sort_by(|a, b| a.1.total_cmp(&b.1));
    let mut minima: Vec<(Quaternion, f64)> = Vec::new();
    for (p, r) in found {
        if !minima.iter().any(|(q, _)| q.distance(p) <= CLUSTER_RADIUS) {
            minima.push((p, r));
        }
    }
    ResidualLandscape {
        starts,
        cluster_radius: CLUSTER_RADIUS,
        minima,
    }
}

fn random_in_ball(rng: &mut ChaCha8Rng, radius: f64) -> Quaternion {
    loop {
        let (a, b) = normal_pair(rng);
        let (c, d) = normal_pair(rng);
        let v = Quaternion::new(a, b, c, d);
        let n = v.norm();
        if n < 1e-12 {
            continue;
        }
        let u: f64 = rng.gen();
        return v.scale(radius * u.powf(0.25) / n);
    }
}

fn objective(p: Quaternion, a1: Quaternion, a0: Quaternion) -> f64 {
    let r = quadratic_residual(p, a1, a0);
    r * r
}

fn add(p: Quaternion, dir: [f64; 4], t: f64) -> Quaternion {
    Quaternion::new(
        p.w + t * dir[0],
        p.x + t * dir[1],
        p.y + t * dir[2],
        p.z + t * dir[3],
    )
}

fn axis(k: usize) -> [f64; 4] {
    let mut e = [0.0; 4];
    e[k] = 1.0;
    e
}

fn gradient(p: Quaternion, a1: Quaternion, a0: Quaternion) -> [f64; 4] {
    let mut g = [0.0; 4];
    for (k, gk) in g.iter_mut().enumerate() {
        let e = axis(k);
        let fp = objective(add(p, e, GRAD_STEP), a1, a0);
        let fm = objective(add(p, e, -GRAD_STEP), a1, a0);
        *gk = (fp - fm) / (2.0 * GRAD_STEP);
    }
    g
}

fn hessian(p: Quaternion, a1: Quaternion, a0: Quaternion) -> [[f64; 4]; 4] {
    let h = HESS_STEP;
    let f0 = objective(p, a1, a0);
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        let ei = axis(i);
        out[i][i] = (objective(add(p, ei, h), a1, a0) - 2.0 * f0
            + objective(add(p, ei, -h), a1, a0))
            / (h * h);
        for j in i + 1..4 {
            let ej = axis(j);
            let corner = |si: f64, sj: f64| objective(add(add(p, ei, si * h), ej, sj * h), a1, a0);
            let v = (corner(1.0, 1.0) - corner(1.0, -1.0) - corner(-1.0, 1.0) + corner(-1.0, -1.0))
                / (4.0 * h * h);
            out[i][j] = v;
            out[j][i] = v;
        }
    }
    out
}

/// Solves the 4×4 system `m·x = rhs` by Gaussian elimination; `None` when
/// a pivot degenerates.
fn solve4(mut m: [[f64; 4]; 4], mut rhs: [f64; 4]) -> Option<[f64; 4]> {
    for col in 0..4 {
        let mut piv = col;
        let mut best = m[col][col].abs();
        for r in col + 1..4 {
            if m[r][col].abs() > best {
                best = m[r][col].abs();
                piv = r;
            }
        }
        if best < 1e-300 {
            return None;
        }
        m.swap(col, piv);
        rhs.swap(col, piv);
        for r in col + 1..4 {
            let f = m[r][col] / m[col][col];
            if f == 0.0 {
                continue;
            }
            for c in col..4 {
                m[r][c] -= f * m[col][c];
            }
            rhs[r] -= f * rhs[col];
        }
    }
    let mut x = [0.0; 4];
    for r in (0..4).rev() {
        let mut s = rhs[r];
        for c in r + 1..4 {
            s -= m[r][c] * x[c];
        }
        x[r] = s / m[r][r];
        if !x[r].is_finite() {
            return None;
        }
    }
    Some(x)
}

fn minimize(start: Quaternion, a1: Quaternion, a0: Quaternion) -> (Quaternion, f64) {
    let mut p = start;
    for _ in 0..MAX_ITERS {
        let fp = objective(p, a1, a0);
        if fp <= 1e-24 {
            break;
        }
        let g = gradient(p, a1, a0);
        let gnorm = (g.iter().map(|v| v * v).sum::<f64>()).sqrt();
        if gnorm <= GRAD_TOL {
            break;
        }

        let mut moved = false;
        let hess = hessian(p, a1, a0);
        let scale = (0..4)
            .map(|i| hess[i][i].abs())
            .fold(0.0, f64::max)
            .max(1.0);
        let mut mu = 0.0;
        for _ in 0..6 {
            let mut damped = hess;
            for (i, row) in damped.iter_mut().enumerate() {
                row[i] += mu;
            }
            let neg_g = [-g[0], -g[1], -g[2], -g[3]];
            if let Some(step) = solve4(damped, neg_g) {
                let mut t = 1.0;
                for _ in 0..30 {
                    let cand = add(p, step, t);
                    if objective(cand, a1, a0) < fp {
                        p = cand;
                        moved = true;
                        break;
                    }
                    t *= 0.5;
                }
            }
            if moved {
                break;
            }
            mu = if mu == 0.0 { 1e-6 * scale } else { mu * 10.0 };
        }

        if !moved {
            // damped gradient fallback
            let dir = [-g[0], -g[1], -g[2], -g[3]];
            let mut t = 1.0 / (1.0 + gnorm);
            for _ in 0..40 {
                let cand = add(p, dir, t);
                if objective(cand, a1, a0) < fp {
                    p = cand;
                    moved = true;
                    break;
                }
                t *= 0.5;
            }
        }
        if !moved {
            break;
        }
    }
    (p, quadratic_residual(p, a1, a0))
}
