//! Fixed-size complex eigensolver for the 4×4 matrices produced by
//! complexification: characteristic polynomial (Faddeev–LeVerrier),
//! simultaneous root iteration (Durand–Kerner), and eigenvector extraction
//! by Gaussian elimination.
//!
//! Degree 4 is fixed by the problem, so there is no balancing or QR
//! machinery here; the polynomial route is simple and testable against a
//! determinant oracle.

use crate::cxlift::ComplexMatrix4;
use crate::error::Error;
use crate::quat::{ComplexPair, Quaternion};
use crate::Complex64;

/// Relative tolerance grouping nearly-equal roots. This single knob decides
/// every "λ₁ = λ₂" question downstream; see [`cluster_tol`].
pub const CLUSTER_REL: f64 = 1e-7;

/// Pivot threshold for null-space rank decisions, relative to the matrix
/// max-norm (floored at 1).
pub const NULL_PIVOT_REL: f64 = 1e-8;

/// Durand–Kerner iteration cap.
const DK_MAX_ITER: usize = 500;

/// Durand–Kerner per-root step tolerance, relative to `1 + |root|`.
const DK_STEP_TOL: f64 = 1e-14;

/// Residual acceptance bound for computed roots, relative to
/// `1 + max|coefficient|`.
const ROOT_RESIDUAL_REL: f64 = 1e-10;

/// Radius used to estimate root multiplicity during Newton polish.
const MULTIPLICITY_RADIUS: f64 = 1e-5;

/// Clustering tolerance at a given root magnitude.
pub fn cluster_tol(root_abs: f64) -> f64 {
    CLUSTER_REL * root_abs.max(1.0)
}

/// A monic degree-4 complex polynomial, coefficients lowest degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPolynomial {
    /// `[c0, c1, c2, c3, 1]`.
    pub coefficients: [Complex64; 5],
}

impl ComplexPolynomial {
    /// Builds the monic quartic `λ⁴ + c3·λ³ + c2·λ² + c1·λ + c0`.
    pub fn monic_from_lower(lower: [Complex64; 4]) -> Self {
        Self {
            coefficients: [
                lower[0],
                lower[1],
                lower[2],
                lower[3],
                Complex64::new(1.0, 0.0),
            ],
        }
    }

    /// Validates an explicit coefficient list (leading term must be exactly 1).
    pub fn from_coefficients(coefficients: [Complex64; 5]) -> Result<Self, Error> {
        if coefficients[4] != Complex64::new(1.0, 0.0) {
            return Err(Error::InvalidForm(format!(
                "polynomial is not monic: leading coefficient {}",
                coefficients[4]
            )));
        }
        Ok(Self { coefficients })
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        // Horner, highest degree first.
        let c = &self.coefficients;
        (((c[4] * x + c[3]) * x + c[2]) * x + c[1]) * x + c[0]
    }

    pub fn eval_derivative(&self, x: Complex64) -> Complex64 {
        let c = &self.coefficients;
        ((c[4] * 4.0 * x + c[3] * 3.0) * x + c[2] * 2.0) * x + c[1]
    }

    pub fn max_coefficient_abs(&self) -> f64 {
        self.coefficients
            .iter()
            .map(|c| c.norm())
            .fold(0.0, f64::max)
    }
}

/// The four roots of a quartic together with a partition into clusters of
/// roots equal within [`cluster_tol`].
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum4 {
    /// Roots with multiplicity, in deterministic order.
    pub roots: [Complex64; 4],
    /// Disjoint index groups; each group's roots agree within tolerance.
    pub clusters: Vec<Vec<usize>>,
}

impl Spectrum4 {
    /// One `(mean value, multiplicity)` entry per cluster.
    pub fn representatives(&self) -> Vec<(Complex64, usize)> {
        self.clusters
            .iter()
            .map(|cl| {
                let mut s = Complex64::new(0.0, 0.0);
                for &i in cl {
                    s += self.roots[i];
                }
                (s / cl.len() as f64, cl.len())
            })
            .collect()
    }

    /// True when the root multiset is closed under complex conjugation
    /// within the clustering tolerance (the signature of a complexified
    /// quaternionic matrix).
    pub fn is_conjugation_closed(&self) -> bool {
        let mut used = [false; 4];
        'outer: for i in 0..4 {
            let want = self.roots[i].conj();
            for j in 0..4 {
                if !used[j] && (self.roots[j] - want).norm() <= cluster_tol(want.norm()) {
                    used[j] = true;
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }
}

/// Characteristic polynomial of a 4×4 complex matrix by the
/// Faddeev–LeVerrier recursion (trace identities; no determinants).
pub fn char_poly(m: &ComplexMatrix4) -> ComplexPolynomial {
    let add_scaled_identity = |a: &ComplexMatrix4, s: Complex64| {
        let mut out = *a;
        for i in 0..4 {
            out.entries[i][i] += s;
        }
        out
    };

    let m1 = *m;
    let c3 = -m1.trace();
    let m2 = m.mul(&add_scaled_identity(&m1, c3));
    let c2 = -m2.trace() / 2.0;
    let m3 = m.mul(&add_scaled_identity(&m2, c2));
    let c1 = -m3.trace() / 3.0;
    let m4 = m.mul(&add_scaled_identity(&m3, c1));
    let c0 = -m4.trace() / 4.0;

    ComplexPolynomial::monic_from_lower([c0, c1, c2, c3])
}

/// All four roots of a monic quartic by Durand–Kerner simultaneous
/// iteration, followed by a multiplicity-aware Newton polish.
///
/// Roots are accepted only if every residual satisfies
/// `|p(root)| ≤ 1e-10·(1 + max|coeff|)`; otherwise the best iterate is
/// returned inside the error.
pub fn roots(p: &ComplexPolynomial) -> Result<Spectrum4, Error> {
    let maxc = p.max_coefficient_abs();
    let radius = 1.0 + maxc;
    let mut xs = [Complex64::new(0.0, 0.0); 4];
    for (k, x) in xs.iter_mut().enumerate() {
        // Offset angle avoids symmetry locking against real coefficients.
        let ang = 2.0 * std::f64::consts::PI * k as f64 / 4.0 + 0.4;
        *x = Complex64::from_polar(radius, ang);
    }

    for _ in 0..DK_MAX_ITER {
        let mut converged = true;
        for i in 0..4 {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..4 {
                if j == i {
                    continue;
                }
                let mut d = xs[i] - xs[j];
                if d.norm() < 1e-300 {
                    d = Complex64::new(1e-300, 0.0);
                }
                denom *= d;
            }
            let step = p.eval(xs[i]) / denom;
            xs[i] -= step;
            if step.norm() > DK_STEP_TOL * (1.0 + xs[i].norm()) {
                converged = false;
            }
        }
        if converged {
            break;
        }
    }

    // Newton polish. Using the estimated multiplicity m in the step
    // m·p/p' restores fast convergence at multiple roots, where plain
    // Durand-Kerner stalls at the evaluation noise floor. A step is kept
    // only if it reduces the residual: near the midpoint of an
    // almost-double pair p' nearly vanishes and an unguarded update would
    // fling the estimate away.
    for _ in 0..2 {
        let snapshot = xs;
        for i in 0..4 {
            let mult = snapshot
                .iter()
                .filter(|r| {
                    (**r - snapshot[i]).norm() <= MULTIPLICITY_RADIUS * snapshot[i].norm().max(1.0)
                })
                .count();
            let pv = p.eval(xs[i]);
            let dv = p.eval_derivative(xs[i]);
            if dv.norm() > 0.0 {
                let step = pv / dv * mult as f64;
                if step.is_finite() {
                    let cand = xs[i] - step;
                    if p.eval(cand).norm() < pv.norm() {
                        xs[i] = cand;
                    }
                }
            }
        }
    }

    let bound = ROOT_RESIDUAL_REL * (1.0 + maxc);
    for x in &xs {
        let r = p.eval(*x).norm();
        if r.is_nan() || r > bound {
            return Err(Error::RootsDidNotConverge {
                roots: xs,
                residual: r,
                bound,
            });
        }
    }

    // Deterministic ordering before clustering.
    xs.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(Spectrum4 {
        roots: xs,
        clusters: cluster(&xs),
    })
}

/// Groups root indices whose values agree within [`cluster_tol`]
/// (transitively).
fn cluster(xs: &[Complex64; 4]) -> Vec<Vec<usize>> {
    let mut parent = [0usize, 1, 2, 3];
    fn find(parent: &mut [usize; 4], i: usize) -> usize {
        if parent[i] != i {
            let r = find(parent, parent[i]);
            parent[i] = r;
        }
        parent[i]
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let tol = cluster_tol(xs[i].norm().max(xs[j].norm()));
            if (xs[i] - xs[j]).norm() <= tol {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    for i in 0..4 {
        let r = find(&mut parent, i);
        if let Some(pos) = seen.iter().position(|&s| s == r) {
            groups[pos].push(i);
        } else {
            seen.push(r);
            groups.push(vec![i]);
        }
    }
    groups
}

/// Null-space basis of `m` at pivot tolerance `1e-8·max(1, max-norm)`,
/// by Gauss–Jordan elimination with partial pivoting. Each basis vector is
/// normalized to unit length. An empty result means full rank.
pub fn null_space(m: &ComplexMatrix4) -> Vec<[Complex64; 4]> {
    let tol = NULL_PIVOT_REL * m.max_abs().max(1.0);
    let mut a = m.entries;
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut row = 0usize;
    for col in 0..4 {
        if row == 4 {
            break;
        }
        let mut piv = row;
        let mut best = a[row][col].norm();
        for r in row + 1..4 {
            let v = a[r][col].norm();
            if v > best {
                best = v;
                piv = r;
            }
        }
        if best <= tol {
            continue; // free column
        }
        a.swap(row, piv);
        let inv = Complex64::new(1.0, 0.0) / a[row][col];
        for c in col..4 {
            a[row][c] *= inv;
        }
        for r in 0..4 {
            if r == row {
                continue;
            }
            let f = a[r][col];
            if f == Complex64::new(0.0, 0.0) {
                continue;
            }
            for c in col..4 {
                let s = f * a[row][c];
                a[r][c] -= s;
            }
        }
        pivots.push((row, col));
        row += 1;
    }

    let mut basis = Vec::new();
    for free_col in 0..4 {
        if pivots.iter().any(|&(_, c)| c == free_col) {
            continue;
        }
        let mut v = [Complex64::new(0.0, 0.0); 4];
        v[free_col] = Complex64::new(1.0, 0.0);
        for &(prow, pcol) in &pivots {
            v[pcol] = -a[prow][free_col];
        }
        let n = vec_norm(&v);
        for e in v.iter_mut() {
            *e /= n;
        }
        basis.push(v);
    }
    basis
}

/// Eigenvectors of `m` for the eigenvalue `lambda`: a basis of the
/// numerical null space of `m − λI`.
///
/// Errors when the null space is empty at the working tolerance, i.e.
/// `lambda` is not an eigenvalue of `m` to that accuracy.
pub fn eigenvectors(m: &ComplexMatrix4, lambda: Complex64) -> Result<Vec<[Complex64; 4]>, Error> {
    let shifted = m.shifted(lambda);
    let basis = null_space(&shifted);
    if basis.is_empty() {
        // Report the smallest achievable residual as a diagnostic.
        let residual = basis_residual(&shifted);
        return Err(Error::NotAnEigenvalue {
            residual,
            tol: NULL_PIVOT_REL * shifted.max_abs().max(1.0),
        });
    }
    Ok(basis)
}

/// Eigenpair extraction with Rayleigh-quotient refinement.
///
/// The characteristic-polynomial route locates a member of a close
/// eigenvalue pair only to about `coefficient-rounding / separation`, which
/// for separations near 1e-7 lands right at the null-space pivot tolerance
/// and can leave the null space empty. A few inverse-iteration steps with
/// Rayleigh-quotient updates converge the estimate onto the nearest true
/// eigenvalue; the null space is then re-extracted at the refined value.
/// Returns the refined eigenvalue with its eigenvector basis (or the
/// iterated vector itself when the basis is still empty but the vector's
/// residual qualifies).
pub(crate) fn refine_eigenpair(
    m: &ComplexMatrix4,
    lambda0: Complex64,
) -> Result<(Complex64, Vec<[Complex64; 4]>), Error> {
    let scale = m.max_abs().max(1.0);
    let basis = null_space(&m.shifted(lambda0));
    if let Some(v) = basis.first() {
        // Accept without refinement only when the vector is well inside
        // its accuracy budget; a borderline pivot can admit a sloppy one.
        if eigen_residual(m, lambda0, v) <= 1e-10 * scale {
            return Ok((lambda0, basis));
        }
    }

    let lambda = rayleigh_refine(m, lambda0);
    let refined = null_space(&m.shifted(lambda));
    if !refined.is_empty() {
        return Ok((lambda, refined));
    }

    // Accept the iterated vector when it is an eigenvector to working
    // accuracy even though the pivot-based rank test stayed full.
    let (v, residual) = best_vector(m, lambda);
    if residual <= 1e-8 {
        return Ok((lambda, vec![v]));
    }
    // Otherwise keep whatever the plain extraction produced, if anything.
    if !basis.is_empty() {
        return Ok((lambda0, basis));
    }
    Err(Error::NotAnEigenvalue {
        residual,
        tol: NULL_PIVOT_REL * m.shifted(lambda0).max_abs().max(1.0),
    })
}

/// `|Mv − λv|` for a unit vector `v`.
fn eigen_residual(m: &ComplexMatrix4, lambda: Complex64, v: &[Complex64; 4]) -> f64 {
    let mv = m.apply(v);
    let mut r = [Complex64::new(0.0, 0.0); 4];
    for i in 0..4 {
        r[i] = mv[i] - lambda * v[i];
    }
    vec_norm(&r)
}

/// Resolution of a (possibly merged) eigenvalue cluster through a
/// 2-dimensional Rayleigh-Ritz projection.
#[derive(Debug, Clone)]
pub(crate) enum RitzPair {
    /// Two distinct close eigenvalues with their eigenvectors.
    Split([(Complex64, [Complex64; 4]); 2]),
    /// A double eigenvalue with a single eigendirection (Jordan-type);
    /// the cluster mean itself is the most accurate value available, so
    /// extraction should happen there.
    Defective,
    /// A double eigenvalue carrying a full 2-dimensional eigenspace.
    EqualSemisimple,
}

/// Resolves the eigenstructure near `lambda0` on its 2-dimensional
/// invariant subspace.
///
/// Cluster representatives merge eigenvalue pairs whose separation falls
/// below the clustering tolerance, but each member can carry its own
/// eigenvector and hence its own privileged eigenvalue. Two steps of block
/// inverse iteration isolate the pair's invariant subspace (the other
/// eigenvalues sit O(1) away, so the contrast per step is enormous), and
/// the 2×2 projected problem is solved in closed form. `None` means the
/// iteration degenerated and the caller should fall back to plain
/// refinement.
pub(crate) fn resolve_pair(m: &ComplexMatrix4, lambda0: Complex64) -> Option<RitzPair> {
    let inner = |a: &[Complex64; 4], b: &[Complex64; 4]| -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for i in 0..4 {
            s += a[i].conj() * b[i];
        }
        s
    };

    let mut v1 = [
        Complex64::new(0.5, 0.1),
        Complex64::new(-0.3, 0.7),
        Complex64::new(0.2, -0.4),
        Complex64::new(0.6, 0.2),
    ];
    let mut v2 = [
        Complex64::new(-0.4, 0.2),
        Complex64::new(0.1, 0.1),
        Complex64::new(0.8, -0.1),
        Complex64::new(-0.2, -0.5),
    ];
    normalize(&mut v1);
    let c = inner(&v1, &v2);
    for i in 0..4 {
        v2[i] -= c * v1[i];
    }
    if normalize(&mut v2) == 0.0 {
        return None;
    }

    for _ in 0..3 {
        let shifted = m.shifted(lambda0);
        let x1 = solve_linear(&shifted, &v1)?;
        let x2 = solve_linear(&shifted, &v2)?;
        v1 = x1;
        if normalize(&mut v1) == 0.0 {
            return None;
        }
        v2 = x2;
        let c = inner(&v1, &v2);
        for i in 0..4 {
            v2[i] -= c * v1[i];
        }
        if normalize(&mut v2) == 0.0 {
            return None;
        }
    }

    // Projected 2x2 problem B = V* M V on the orthonormal pair.
    let mv1 = m.apply(&v1);
    let mv2 = m.apply(&v2);
    let b = [
        [inner(&v1, &mv1), inner(&v1, &mv2)],
        [inner(&v2, &mv1), inner(&v2, &mv2)],
    ];
    let tr = b[0][0] + b[1][1];
    let half = tr / 2.0;
    let scale = 1.0 + half.norm();
    let nilpotent_norm = ((b[0][0] - half).norm_sqr()
        + b[0][1].norm_sqr()
        + b[1][0].norm_sqr()
        + (b[1][1] - half).norm_sqr())
    .sqrt();
    if nilpotent_norm <= 1e-12 * scale {
        return Some(RitzPair::EqualSemisimple);
    }

    // Work on the trace-shifted matrix N = B − (tr/2)I, whose entries
    // carry the eigenvalue split directly; the textbook discriminant
    // tr² − 4·det cancels catastrophically when the split is tiny against
    // the eigenvalue magnitude.
    let delta_half = (b[0][0] - b[1][1]) / 2.0;
    let mu = (delta_half * delta_half + b[0][1] * b[1][0]).sqrt();
    let la = half + mu;
    let lb = half - mu;
    let wa = eig2_vector(delta_half, b[0][1], b[1][0], mu);
    let wb = eig2_vector(delta_half, b[0][1], b[1][0], -mu);
    let assemble = |w: [Complex64; 2]| {
        let mut v = [Complex64::new(0.0, 0.0); 4];
        for i in 0..4 {
            v[i] = v1[i] * w[0] + v2[i] * w[1];
        }
        normalize(&mut v);
        v
    };

    // Nearly parallel eigenvectors expose a Jordan block: the computed
    // eigenvalue split is then rounding noise, not structure.
    let overlap = (wa[0].conj() * wb[0] + wa[1].conj() * wb[1]).norm();
    if overlap >= 1.0 - 1e-6 {
        return Some(RitzPair::Defective);
    }
    Some(RitzPair::Split([(la, assemble(wa)), (lb, assemble(wb))]))
}

/// Unit eigenvector of the traceless matrix
/// `[[delta_half, b01], [b10, -delta_half]]` for its eigenvalue `mu`.
fn eig2_vector(
    delta_half: Complex64,
    b01: Complex64,
    b10: Complex64,
    mu: Complex64,
) -> [Complex64; 2] {
    let c1 = [b01, mu - delta_half];
    let c2 = [mu + delta_half, b10];
    let n1 = (c1[0].norm_sqr() + c1[1].norm_sqr()).sqrt();
    let n2 = (c2[0].norm_sqr() + c2[1].norm_sqr()).sqrt();
    let (mut w, n) = if n1 >= n2 { (c1, n1) } else { (c2, n2) };
    if n > 0.0 {
        w[0] /= n;
        w[1] /= n;
    }
    w
}

/// Runs inverse iteration with Rayleigh-quotient updates from `lambda0`.
fn rayleigh_refine(m: &ComplexMatrix4, lambda0: Complex64) -> Complex64 {
    let mut lambda = lambda0;
    let mut v = [
        Complex64::new(0.5, 0.1),
        Complex64::new(-0.3, 0.7),
        Complex64::new(0.2, -0.4),
        Complex64::new(0.6, 0.2),
    ];
    normalize(&mut v);
    for _ in 0..6 {
        let Some(x) = solve_linear(&m.shifted(lambda), &v) else {
            break;
        };
        v = x;
        if normalize(&mut v) == 0.0 {
            break;
        }
        // Rayleigh quotient of the normalized iterate.
        let mv = m.apply(&v);
        let mut rq = Complex64::new(0.0, 0.0);
        for i in 0..4 {
            rq += v[i].conj() * mv[i];
        }
        if !rq.re.is_finite() || !rq.im.is_finite() {
            break;
        }
        lambda = rq;
        let mut resid = [Complex64::new(0.0, 0.0); 4];
        for i in 0..4 {
            resid[i] = mv[i] - lambda * v[i];
        }
        if vec_norm(&resid) <= 1e-13 * m.max_abs().max(1.0) {
            break;
        }
    }
    lambda
}

/// The inverse-iteration vector at `lambda` and its eigen-residual.
fn best_vector(m: &ComplexMatrix4, lambda: Complex64) -> ([Complex64; 4], f64) {
    let mut v = [
        Complex64::new(0.5, 0.1),
        Complex64::new(-0.3, 0.7),
        Complex64::new(0.2, -0.4),
        Complex64::new(0.6, 0.2),
    ];
    normalize(&mut v);
    for _ in 0..3 {
        if let Some(x) = solve_linear(&m.shifted(lambda), &v) {
            v = x;
            if normalize(&mut v) == 0.0 {
                break;
            }
        } else {
            break;
        }
    }
    let mv = m.apply(&v);
    let mut resid = [Complex64::new(0.0, 0.0); 4];
    for i in 0..4 {
        resid[i] = mv[i] - lambda * v[i];
    }
    (v, vec_norm(&resid))
}

fn normalize(v: &mut [Complex64; 4]) -> f64 {
    let n = vec_norm(v);
    if n > 0.0 && n.is_finite() {
        for e in v.iter_mut() {
            *e /= n;
        }
        n
    } else {
        0.0
    }
}

/// Solves `m x = rhs` by Gaussian elimination with partial pivoting;
/// `None` only when a pivot is exactly zero or the result is non-finite.
fn solve_linear(m: &ComplexMatrix4, rhs: &[Complex64; 4]) -> Option<[Complex64; 4]> {
    let mut a = m.entries;
    let mut b = *rhs;
    for col in 0..4 {
        let mut piv = col;
        let mut best = a[col][col].norm();
        for r in col + 1..4 {
            let v = a[r][col].norm();
            if v > best {
                best = v;
                piv = r;
            }
        }
        if best == 0.0 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for r in col + 1..4 {
            let f = a[r][col] / a[col][col];
            if f == Complex64::new(0.0, 0.0) {
                continue;
            }
            for c in col..4 {
                let s = f * a[col][c];
                a[r][c] -= s;
            }
            let s = f * b[col];
            b[r] -= s;
        }
    }
    let mut x = [Complex64::new(0.0, 0.0); 4];
    for r in (0..4).rev() {
        let mut s = b[r];
        for c in r + 1..4 {
            s -= a[r][c] * x[c];
        }
        x[r] = s / a[r][r];
        if !x[r].re.is_finite() || !x[r].im.is_finite() {
            return None;
        }
    }
    Some(x)
}

/// Smallest `|Mv|` over the coordinate directions; a cheap lower-bound
/// diagnostic used in the not-an-eigenvalue error.
fn basis_residual(m: &ComplexMatrix4) -> f64 {
    let mut best = f64::INFINITY;
    for k in 0..4 {
        let mut v = [Complex64::new(0.0, 0.0); 4];
        v[k] = Complex64::new(1.0, 0.0);
        best = best.min(vec_norm(&m.apply(&v)));
    }
    best
}

pub fn vec_norm(v: &[Complex64; 4]) -> f64 {
    v.iter().map(|e| e.norm_sqr()).sum::<f64>().sqrt()
}

/// Translates a complex 4-vector `(x′, x, y′, y)` into the quaternionic
/// column `(x′ + j·y′, x + j·y)` of ℍ².
pub fn to_quaternion_vector(v: &[Complex64; 4]) -> (Quaternion, Quaternion) {
    (
        ComplexPair::new(v[0], v[2]).to_quaternion(),
        ComplexPair::new(v[1], v[3]).to_quaternion(),
    )
}

/// Inverse of [`to_quaternion_vector`].
pub fn from_quaternion_vector(u: (Quaternion, Quaternion)) -> [Complex64; 4] {
    let p0 = ComplexPair::from_quaternion(u.0);
    let p1 = ComplexPair::from_quaternion(u.1);
    [p0.zprime, p1.zprime, p0.z, p1.z]
}

/// The antilinear structure map `v ↦ coords(u·j)` on eigenvector
/// coordinates; it sends λ-eigenvectors of a complexified matrix to
/// λ̄-eigenvectors.
pub fn structural_conjugate(v: &[Complex64; 4]) -> [Complex64; 4] {
    [-v[2].conj(), -v[3].conj(), v[0].conj(), v[1].conj()]
}
