//! Solver for the unilateral quadratic `p² + a₁p + a₀ = 0` over ℍ.
//!
//! Solutions are exactly the privileged right eigenvalues of the companion
//! matrix `M = [[−a₁, −a₀], [1, 0]]`: right eigenvalues whose eigenvector
//! can be scaled to the form `(p, 1)`. They are found through the spectrum
//! of the complexified matrix, one conjugate pair at a time, and the
//! solution set is always one point, two points, or a whole 2-sphere of
//! quaternions. The sphere occurs precisely when `a₁, a₀` are real,
//! `a₀ ≠ 0` and `Δ = a₁² − 4a₀ < 0`.

use serde::{Deserialize, Serialize};

use crate::cxlift::{complexify, ComplexMatrix4, QuatMatrix2};
use crate::eig4::{
    char_poly, cluster_tol, eigenvectors, refine_eigenpair, resolve_pair, roots,
    to_quaternion_vector, RitzPair,
};
use crate::error::Error;
use crate::oracle::quadratic_residual;
use crate::quat::Quaternion;
use crate::Complex64;

/// A coefficient counts as real when `|pure| ≤ 1e-9·(1 + norm)`.
pub const REAL_COEFF_TOL: f64 = 1e-9;

/// `Δ < 0` is decided by `Δ ≤ −1e-9`.
pub const DELTA_TOL: f64 = 1e-9;

/// `a₀ ≠ 0` is decided by `|a₀| > 1e-12`. Any Δ passing [`DELTA_TOL`]
/// forces `re(a₀) ≥ 2.5e-10`, so the sphere branch can never contradict
/// this flag.
pub const A0_NONZERO_TOL: f64 = 1e-12;

/// Solutions closer than `1e-7·(1 + norm)` are merged (a conjugate pair
/// yields the same solution twice, equal only up to rounding).
pub const DEDUP_REL: f64 = 1e-7;

/// Every reported solution must satisfy
/// `|p² + a₁p + a₀| ≤ 1e-8·(1 + |a₁| + |a₀|)`.
pub const RESIDUAL_REL: f64 = 1e-8;

/// The companion matrix `[[−a₁, −a₀], [1, 0]]` of the quadratic.
///
/// Constructed only through [`companion`], so the fixed entries are exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompanionMatrix {
    matrix: QuatMatrix2,
}

impl CompanionMatrix {
    pub fn matrix(&self) -> &QuatMatrix2 {
        &self.matrix
    }
}

/// Builds the companion matrix of `p² + a₁p + a₀ = 0`.
pub fn companion(a1: Quaternion, a0: Quaternion) -> CompanionMatrix {
    CompanionMatrix {
        matrix: QuatMatrix2::new(-a1, -a0, Quaternion::ONE, Quaternion::ZERO),
    }
}

/// The solution set of a unilateral quadratic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum SolutionSet {
    /// One or two isolated solutions.
    #[serde(rename = "finite")]
    Finite { solutions: Vec<Quaternion> },
    /// The sphere `{center + radius·ω : ω ∈ Ω}` with real center; arises
    /// for real coefficients with negative discriminant.
    #[serde(rename = "sphere")]
    InfiniteSphere { center: f64, radius: f64 },
}

impl SolutionSet {
    /// Membership test at tolerance `tol`: distance to a listed solution
    /// for the finite case, or agreement of real part and pure-part norm
    /// with the sphere parameters.
    pub fn membership(&self, p: Quaternion, tol: f64) -> bool {
        match self {
            SolutionSet::Finite { solutions } => solutions.iter().any(|s| s.distance(p) <= tol),
            SolutionSet::InfiniteSphere { center, radius } => {
                (p.re() - center).abs() <= tol && (p.pure().norm() - radius).abs() <= tol
            }
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, SolutionSet::InfiniteSphere { .. })
    }
}

/// Which of the three spectral configurations produced the answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    /// Four pairwise-distinct eigenvalues of the complexified companion
    /// matrix (also covers the defective double pair, which still yields a
    /// finite answer).
    DistinctFour,
    /// At least one real eigenvalue; real eigenvalues are their own
    /// privileged representatives.
    RealEigenvalue,
    /// A non-real double pair with full eigenspaces: the infinite case.
    DoubleNonreal,
}

/// The Huang–So conditions, evaluated numerically. Their conjunction is
/// equivalent to the infinite case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HuangSoFlags {
    pub a1_real: bool,
    pub a0_real: bool,
    pub a0_nonzero: bool,
    pub delta_negative: bool,
}

impl HuangSoFlags {
    pub fn evaluate(a1: Quaternion, a0: Quaternion) -> Self {
        let t = a1.re();
        let s = a0.re();
        HuangSoFlags {
            a1_real: a1.pure().norm() <= REAL_COEFF_TOL * (1.0 + a1.norm()),
            a0_real: a0.pure().norm() <= REAL_COEFF_TOL * (1.0 + a0.norm()),
            a0_nonzero: a0.norm() > A0_NONZERO_TOL,
            delta_negative: t * t - 4.0 * s <= -DELTA_TOL,
        }
    }

    pub fn all(&self) -> bool {
        self.a1_real && self.a0_real && self.a0_nonzero && self.delta_negative
    }
}

/// How the solver classified the input, alongside the answer.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassificationReport {
    pub case: CaseTag,
    /// Representatives (imaginary part ≥ 0) of the two conjugate-pair
    /// classes; equal when there is only one class.
    pub lambda1: Complex64,
    pub lambda2: Complex64,
    /// Eigenspace dimensions at `lambda1`/`lambda2` (0 when extraction at
    /// the achievable accuracy failed; informational only).
    pub eigenspace_dims: (usize, usize),
    pub huang_so: HuangSoFlags,
}

/// Extracts the privileged eigenvalue `p = qλq⁻¹` from a right eigenpair
/// of the companion matrix, where `q` is the second coordinate of the
/// eigenvector.
///
/// Companion eigenvectors satisfy `v = (qλ, q)`, so `q = 0` only happens
/// for the zero vector; a numerically zero second coordinate with nonzero
/// first is reported as a degenerate eigenvector. (For λ = 0 the first
/// coordinate vanishes instead and `p = 0` falls out of the same formula.)
pub fn privileged_from_eigenvector(
    v: (Quaternion, Quaternion),
    lambda: Complex64,
) -> Result<Quaternion, Error> {
    let scale = (v.0.norm_sqr() + v.1.norm_sqr()).sqrt();
    if scale == 0.0 || v.1.norm() <= 1e-12 * scale {
        return Err(Error::DegenerateEigenvector);
    }
    let q = v.1;
    Ok(q * Quaternion::from_complex(lambda) * q.inverse()?)
}

/// Solves `p² + a₁p + a₀ = 0` and classifies the solution set.
///
/// Coefficients that are both real (within [`REAL_COEFF_TOL`]) take the
/// exact real trichotomy: two real roots, one double real root, or the
/// sphere, decided by the discriminant. Everything else goes through the
/// eigenvector method on the complexified companion matrix.
pub fn solve(a1: Quaternion, a0: Quaternion) -> Result<(SolutionSet, ClassificationReport), Error> {
    let flags = HuangSoFlags::evaluate(a1, a0);
    let m = companion(a1, a0);
    let mt = complexify(m.matrix());

    let (set, report) = if flags.a1_real && flags.a0_real {
        solve_certified_real(a1, a0, flags, &mt)?
    } else {
        solve_by_eigenvectors(a1, a0, flags, &mt)?
    };

    if let SolutionSet::Finite { solutions } = &set {
        let bound = RESIDUAL_REL * (1.0 + a1.norm() + a0.norm());
        for p in solutions {
            let r = quadratic_residual(*p, a1, a0);
            if r > bound {
                return Err(Error::ResidualCheck { residual: r, bound });
            }
        }
        if solutions.is_empty() || solutions.len() > 2 {
            return Err(Error::Inconsistency(format!(
                "finite branch produced {} solutions ({solutions:?}); the count must be 1 or 2",
                solutions.len()
            )));
        }
    }
    Ok((set, report))
}

/// Real-coefficient trichotomy. For real `t = a₁`, `s = a₀` a solution
/// `p = x + y·ω` (ω ∈ Ω) separates into: `y = 0` and `x` a real root of
/// the scalar quadratic, or `x = −t/2` and `y² = −Δ/4`, which requires
/// `Δ < 0` and then yields the whole sphere. The branch is exact, which
/// matters most at the multiple-root boundary Δ = 0 where an iterative
/// spectral route cannot resolve the quadruple eigenvalue.
fn solve_certified_real(
    a1: Quaternion,
    a0: Quaternion,
    flags: HuangSoFlags,
    mt: &ComplexMatrix4,
) -> Result<(SolutionSet, ClassificationReport), Error> {
    let t = a1.re();
    let s = a0.re();
    let delta = t * t - 4.0 * s;

    if delta <= -DELTA_TOL {
        if !flags.all() {
            // Theorem: negative discriminant with real coefficients is the
            // infinite case, which the flag conjunction must confirm.
            return Err(Error::Inconsistency(
                "negative discriminant with real coefficients, but the Huang-So \
                 flag conjunction is false"
                    .into(),
            ));
        }
        let center = -t / 2.0 + 0.0; // adding 0.0 normalizes -0.0
        let radius = (-delta).sqrt() / 2.0;
        let lambda1 = Complex64::new(center, radius);
        let dim = eigenvectors(mt, lambda1).map(|v| v.len()).unwrap_or(0);
        let report = ClassificationReport {
            case: CaseTag::DoubleNonreal,
            lambda1,
            lambda2: lambda1,
            eigenspace_dims: (dim, dim),
            huang_so: flags,
        };
        return Ok((SolutionSet::InfiniteSphere { center, radius }, report));
    }

    let (solutions, lambda1, lambda2) = if delta < DELTA_TOL {
        // double real root
        let r = -t / 2.0;
        let l = Complex64::new(r, 0.0);
        (vec![Quaternion::from_real(r)], l, l)
    } else {
        let sq = delta.sqrt();
        let r1 = (-t - sq) / 2.0;
        let r2 = (-t + sq) / 2.0;
        (
            vec![Quaternion::from_real(r1), Quaternion::from_real(r2)],
            Complex64::new(r1, 0.0),
            Complex64::new(r2, 0.0),
        )
    };
    let dims = (
        eigenvectors(mt, lambda1).map(|v| v.len()).unwrap_or(0),
        eigenvectors(mt, lambda2).map(|v| v.len()).unwrap_or(0),
    );
    let report = ClassificationReport {
        case: CaseTag::RealEigenvalue,
        lambda1,
        lambda2,
        eigenspace_dims: dims,
        huang_so: flags,
    };
    Ok((SolutionSet::Finite { solutions }, report))
}

/// The eigenvector method for genuinely quaternionic coefficients: find
/// the spectrum of the complexified companion matrix, take one
/// representative per conjugate-pair class, and conjugate each eigenvalue
/// to its privileged position.
fn solve_by_eigenvectors(
    a1: Quaternion,
    a0: Quaternion,
    flags: HuangSoFlags,
    mt: &ComplexMatrix4,
) -> Result<(SolutionSet, ClassificationReport), Error> {
    let spectrum = roots(&char_poly(mt))?;
    let reps = spectrum.representatives();

    // Partition cluster representatives into real values and the upper
    // members of conjugate pairs. Real eigenvalues of a complexified
    // quaternionic matrix carry even multiplicity, so a real value seen in
    // two nearby singleton clusters is handled by the final deduplication.
    let mut real_reps: Vec<(Complex64, usize)> = Vec::new();
    let mut upper_reps: Vec<(Complex64, usize)> = Vec::new();
    for (rep, mult) in &reps {
        if rep.im.abs() <= 0.5 * cluster_tol(rep.norm()) {
            real_reps.push((*rep, *mult));
        } else if rep.im > 0.0 {
            upper_reps.push((*rep, *mult));
        }
        // reps with im < 0 are the conjugate partners and yield the same
        // privileged eigenvalues
    }

    // Coalesce upper representatives that sit within the pair-resolution
    // radius. Processing the members of a tight pair separately would
    // extract the same eigenvector pair twice, at an accuracy the final
    // deduplication cannot rely on; one Ritz resolution per pair instead
    // yields each solution exactly once.
    upper_reps.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    let mut groups: Vec<(Complex64, usize)> = Vec::new();
    for (rep, mult) in upper_reps.drain(..) {
        match groups.last_mut() {
            Some((grep, gmult)) if (rep - *grep).norm() <= 1e-6 * rep.norm().max(1.0) => {
                // group value: multiplicity-weighted mean
                let total = *gmult + mult;
                *grep = (*grep * *gmult as f64 + rep * mult as f64) / total as f64;
                *gmult = total;
            }
            _ => groups.push((rep, mult)),
        }
    }
    let upper_reps = groups;

    let mut solutions: Vec<Quaternion> = Vec::new();
    let mut class_reps: Vec<(Complex64, usize)> = Vec::new(); // (value, eigenspace dim)
    let bound = RESIDUAL_REL * (1.0 + a1.norm() + a0.norm());

    // A Ritz split of a merged pair is kept only when both extracted
    // solutions meet the residual bound; pairs separated by less than the
    // achievable eigenvector accuracy fail this and degrade gracefully to
    // a single representative below.
    let try_split = |resolved: &RitzPair| -> Option<Vec<(Quaternion, Complex64)>> {
        let RitzPair::Split(pairs) = resolved else {
            return None;
        };
        let mut out = Vec::with_capacity(2);
        for (lk, vk) in pairs {
            let u = to_quaternion_vector(vk);
            let p = privileged_from_eigenvector(u, *lk).ok()?;
            if quadratic_residual(p, a1, a0) > bound {
                return None;
            }
            out.push((p, *lk));
        }
        Some(out)
    };

    for (lambda, mult) in &upper_reps {
        // A multiplicity-2 group merges either a genuinely double
        // eigenvalue or a pair too close for the clustering tolerance; the
        // Ritz projection tells those apart and recovers both eigenvectors
        // when the pair is resolvable.
        if *mult >= 2 {
            match resolve_pair(mt, *lambda) {
                Some(RitzPair::EqualSemisimple) => {
                    // By the classification theorem a full non-real double
                    // eigenspace is the infinite case, which requires real
                    // coefficients; reaching it with the flags denied means
                    // the tolerances broke down.
                    return Err(Error::Inconsistency(
                        "non-real double eigenvalue with 2-dimensional eigenspace, \
                         but the Huang-So flags deny the infinite case"
                            .into(),
                    ));
                }
                Some(resolved) => {
                    if let Some(found) = try_split(&resolved) {
                        for (p, lk) in found {
                            solutions.push(p);
                            class_reps.push((lk, 1));
                        }
                        continue;
                    }
                    // Defective marker or an unresolvable split: extract a
                    // single representative at the (accurate) group mean.
                }
                None => {}
            }
        }
        // Single eigenvalue extraction; refinement re-centers the
        // polynomial root first.
        let (lambda, vs) = refine_eigenpair(mt, *lambda)?;
        if vs.len() >= 2 && *mult < 2 {
            // A singleton group with a 2-dimensional null space at
            // tolerance is a very tight pair; try to resolve it too.
            if let Some(resolved) = resolve_pair(mt, lambda) {
                if let Some(found) = try_split(&resolved) {
                    for (p, lk) in found {
                        solutions.push(p);
                        class_reps.push((lk, 1));
                    }
                    continue;
                }
            }
        }
        let u = to_quaternion_vector(&vs[0]);
        solutions.push(privileged_from_eigenvector(u, lambda)?);
        class_reps.push((lambda, vs.len()));
    }
    for (r, _mult) in &real_reps {
        let value = Complex64::new(r.re, 0.0);
        solutions.push(Quaternion::from_real(r.re));
        let dim = eigenvectors(mt, value).map(|v| v.len()).unwrap_or(0);
        class_reps.push((value, dim));
    }

    dedup_solutions(&mut solutions);

    class_reps.sort_by(|a, b| a.0.re.total_cmp(&b.0.re).then(a.0.im.total_cmp(&b.0.im)));
    let (lambda1, dim1) = class_reps
        .first()
        .copied()
        .unwrap_or((Complex64::new(f64::NAN, 0.0), 0));
    let (lambda2, dim2) = class_reps.last().copied().unwrap_or((lambda1, dim1));

    let case = if real_reps.is_empty() {
        CaseTag::DistinctFour
    } else {
        CaseTag::RealEigenvalue
    };
    let report = ClassificationReport {
        case,
        lambda1,
        lambda2,
        eigenspace_dims: (dim1, dim2),
        huang_so: flags,
    };
    Ok((SolutionSet::Finite { solutions }, report))
}

/// Merges solutions closer than `DEDUP_REL·(1 + norm)`, keeping a
/// deterministic order.
fn dedup_solutions(sols: &mut Vec<Quaternion>) {
    sols.sort_by(|a, b| {
        a.w.total_cmp(&b.w)
            .then(a.x.total_cmp(&b.x))
            .then(a.y.total_cmp(&b.y))
            .then(a.z.total_cmp(&b.z))
    });
    let mut out: Vec<Quaternion> = Vec::new();
    for s in sols.iter() {
        if !out
            .iter()
            .any(|t| t.distance(*s) <= DEDUP_REL * (1.0 + t.norm()))
        {
            out.push(*s);
        }
    }
    *sols = out;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::{normal_pair, sample_omega};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rq(rng: &mut ChaCha8Rng) -> Quaternion {
        let (w, x) = normal_pair(rng);
        let (y, z) = normal_pair(rng);
        Quaternion::new(w, x, y, z)
    }

    fn cx(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn finite_sorted(set: &SolutionSet) -> Vec<Quaternion> {
        match set {
            SolutionSet::Finite { solutions } => solutions.clone(),
            _ => panic!("expected finite solution set, got {set:?}"),
        }
    }

    #[test]
    fn companion_examples() {
        let m = companion(Quaternion::ZERO, Quaternion::ONE);
        assert_eq!(
            *m.matrix(),
            QuatMatrix2::new(
                Quaternion::ZERO,
                -Quaternion::ONE,
                Quaternion::ONE,
                Quaternion::ZERO
            )
        );
        let m = companion(Quaternion::I, Quaternion::J);
        assert_eq!(m.matrix().a, -Quaternion::I);
        assert_eq!(m.matrix().b, -Quaternion::J);
        assert_eq!(m.matrix().c, Quaternion::ONE);
        assert_eq!(m.matrix().d, Quaternion::ZERO);
        let m = companion(Quaternion::from_real(-2.0), Quaternion::ONE);
        assert_eq!(m.matrix().a, Quaternion::from_real(2.0));
    }

    #[test]
    fn privileged_examples() {
        // conjugating i by k lands on -i
        let v = (Quaternion::I * Quaternion::K, Quaternion::K);
        let p = privileged_from_eigenvector(v, cx(0.0, 1.0)).unwrap();
        assert!(p.distance(-Quaternion::I) <= 1e-15);
        // q = 1 leaves lambda fixed
        let v = (Quaternion::I, Quaternion::ONE);
        let p = privileged_from_eigenvector(v, cx(0.0, 1.0)).unwrap();
        assert_eq!(p, Quaternion::I);
        // degenerate second coordinate
        assert!(matches!(
            privileged_from_eigenvector((Quaternion::ONE, Quaternion::ZERO), cx(0.0, 1.0)),
            Err(Error::DegenerateEigenvector)
        ));
    }

    #[test]
    fn privileged_from_computed_eigenvector_lies_on_omega() {
        let m = companion(Quaternion::ZERO, Quaternion::ONE);
        let mt = complexify(m.matrix());
        let vs = eigenvectors(&mt, cx(0.0, 1.0)).unwrap();
        assert_eq!(vs.len(), 2);
        let u = to_quaternion_vector(&vs[1]);
        let p = privileged_from_eigenvector(u, cx(0.0, 1.0)).unwrap();
        assert!(p.re().abs() <= 1e-10);
        assert!((p.norm() - 1.0).abs() <= 1e-10);
        assert!(quadratic_residual(p, Quaternion::ZERO, Quaternion::ONE) <= 1e-8);
    }

    #[test]
    fn solve_unit_sphere() {
        let (set, report) = solve(Quaternion::ZERO, Quaternion::ONE).unwrap();
        assert_eq!(
            set,
            SolutionSet::InfiniteSphere {
                center: 0.0,
                radius: 1.0
            }
        );
        assert_eq!(report.case, CaseTag::DoubleNonreal);
        assert!(report.huang_so.all());
        assert_eq!(report.eigenspace_dims, (2, 2));
        for w in sample_omega(50, 3) {
            assert!(set.membership(w, 1e-12));
        }
    }

    #[test]
    fn solve_double_real_root() {
        let (set, report) = solve(Quaternion::from_real(-2.0), Quaternion::ONE).unwrap();
        let sols = finite_sorted(&set);
        assert_eq!(sols, vec![Quaternion::ONE]);
        assert_eq!(report.case, CaseTag::RealEigenvalue);
        assert!(!report.huang_so.all());
    }

    #[test]
    fn solve_two_real_roots() {
        let (set, report) = solve(Quaternion::ZERO, -Quaternion::ONE).unwrap();
        let sols = finite_sorted(&set);
        assert_eq!(sols, vec![Quaternion::from_real(-1.0), Quaternion::ONE]);
        assert_eq!(report.case, CaseTag::RealEigenvalue);
    }

    #[test]
    fn solve_degenerate_a0() {
        // p(p + i) = 0 conceptually: solutions 0 and -i, found through the
        // general pipeline without special-casing a0 = 0.
        let (set, _report) = solve(Quaternion::I, Quaternion::ZERO).unwrap();
        let sols = finite_sorted(&set);
        assert_eq!(sols.len(), 2);
        assert!(sols.iter().any(|p| p.distance(Quaternion::ZERO) <= 1e-9));
        assert!(sols.iter().any(|p| p.distance(-Quaternion::I) <= 1e-9));
    }

    #[test]
    fn solve_defective_double_pair_has_one_solution() {
        // p^2 + 2ip - 1 = 0: the complexified companion matrix has the
        // double pair {-i, -i, i, i} with 1-dimensional eigenspaces; the
        // equation has the single solution p = -i.
        let (set, report) = solve(Quaternion::I.scale(2.0), -Quaternion::ONE).unwrap();
        let sols = finite_sorted(&set);
        assert_eq!(sols.len(), 1);
        assert!(sols[0].distance(-Quaternion::I) <= 1e-7);
        assert_eq!(report.case, CaseTag::DistinctFour);
        assert!(!report.huang_so.all());
        assert_eq!(report.eigenspace_dims.0, 1);
    }

    #[test]
    fn membership_examples() {
        let sphere = SolutionSet::InfiniteSphere {
            center: 0.0,
            radius: 1.0,
        };
        assert!(sphere.membership(Quaternion::K, 1e-12));
        assert!(!sphere.membership(Quaternion::ONE, 1e-6));
        let finite = SolutionSet::Finite {
            solutions: vec![Quaternion::ONE, -Quaternion::ONE],
        };
        assert!(finite.membership(Quaternion::ONE, 0.0));
    }

    #[test]
    fn trichotomy_directions() {
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        // (i) random real coefficients with negative discriminant: sphere.
        for _ in 0..50 {
            let (t, u) = normal_pair(&mut rng);
            let s = t * t / 4.0 + 0.01 + u * u;
            let (set, report) = solve(Quaternion::from_real(t), Quaternion::from_real(s)).unwrap();
            assert!(set.is_infinite());
            assert!(report.huang_so.all());
            assert_eq!(report.case, CaseTag::DoubleNonreal);
        }
        // (ii) quaternionic coefficients violating the conditions: finite.
        for _ in 0..50 {
            let a1 = rq(&mut rng);
            let a0 = rq(&mut rng);
            let (set, report) = solve(a1, a0).unwrap();
            match set {
                SolutionSet::Finite { solutions } => {
                    assert!((1..=2).contains(&solutions.len()))
                }
                _ => panic!("generic coefficients must give a finite set"),
            }
            assert_ne!(report.case, CaseTag::DoubleNonreal);
        }
    }

    #[test]
    fn solution_residuals_hold_on_sphere_samples() {
        let (set, _) = solve(Quaternion::from_real(1.0), Quaternion::from_real(5.0)).unwrap();
        let (center, radius) = match set {
            SolutionSet::InfiniteSphere { center, radius } => (center, radius),
            _ => panic!("expected sphere"),
        };
        let bound = RESIDUAL_REL * (1.0 + 1.0 + 5.0);
        for w in sample_omega(100, 9) {
            let p = Quaternion::from_real(center) + w.scale(radius);
            assert!(
                quadratic_residual(p, Quaternion::from_real(1.0), Quaternion::from_real(5.0))
                    <= bound
            );
        }
    }

    #[test]
    fn orbit_property_of_companion_eigenpairs() {
        // M(v q^{-1}) = (v q^{-1}) (q lambda q^{-1}) for any nonzero q.
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for _ in 0..10 {
            let a1 = rq(&mut rng);
            let a0 = rq(&mut rng);
            let m = companion(a1, a0);
            let mt = complexify(m.matrix());
            let spectrum = roots(&char_poly(&mt)).unwrap();
            let (lambda, _) = spectrum.representatives()[0];
            let v = to_quaternion_vector(&eigenvectors(&mt, lambda).unwrap()[0]);
            let vnorm = (v.0.norm_sqr() + v.1.norm_sqr()).sqrt();
            for _ in 0..50 {
                let q = rq(&mut rng);
                if q.norm() < 1e-3 {
                    continue;
                }
                let qinv = q.inverse().unwrap();
                let w = (v.0 * qinv, v.1 * qinv);
                let conj_lambda = q * Quaternion::from_complex(lambda) * qinv;
                let mw = m.matrix().apply(w);
                let expect = (w.0 * conj_lambda, w.1 * conj_lambda);
                let resid = ((mw.0 - expect.0).norm_sqr() + (mw.1 - expect.1).norm_sqr()).sqrt();
                assert!(resid <= 1e-8 * vnorm / q.norm());
            }
        }
    }

    #[test]
    fn infinite_case_eigenvectors_cover_the_class() {
        // Complex-linear combinations of the two independent eigenvectors
        // sweep privileged eigenvalues across the whole similarity class.
        let m = companion(Quaternion::ZERO, Quaternion::ONE);
        let mt = complexify(m.matrix());
        let lambda = cx(0.0, 1.0);
        let vs = eigenvectors(&mt, lambda).unwrap();
        assert_eq!(vs.len(), 2);
        let mut rng = ChaCha8Rng::seed_from_u64(55);
        let mut points: Vec<Quaternion> = Vec::new();
        for _ in 0..50 {
            let (c1r, c1i) = normal_pair(&mut rng);
            let (c2r, c2i) = normal_pair(&mut rng);
            let (c1, c2) = (cx(c1r, c1i), cx(c2r, c2i));
            let mut v = [cx(0.0, 0.0); 4];
            for k in 0..4 {
                v[k] = vs[0][k] * c1 + vs[1][k] * c2;
            }
            let u = to_quaternion_vector(&v);
            if u.1.norm() < 1e-6 {
                continue;
            }
            let p = privileged_from_eigenvector(u, lambda).unwrap();
            assert!(p.is_similar(Quaternion::I, 1e-8));
            points.push(p);
        }
        let mut spread = 0.0f64;
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                spread = spread.max(points[i].distance(points[j]));
            }
        }
        assert!(
            spread > 0.1,
            "privileged eigenvalues did not cover the class"
        );
    }

    #[test]
    fn solution_set_json_shapes() {
        let sphere = SolutionSet::InfiniteSphere {
            center: 0.0,
            radius: 1.0,
        };
        let s = serde_json::to_string(&sphere).unwrap();
        assert_eq!(s, r#"{"kind":"sphere","center":0.0,"radius":1.0}"#);
        let finite = SolutionSet::Finite {
            solutions: vec![Quaternion::ONE],
        };
        let s = serde_json::to_string(&finite).unwrap();
        assert_eq!(s, r#"{"kind":"finite","solutions":[[1.0,0.0,0.0,0.0]]}"#);
        let back: SolutionSet = serde_json::from_str(&s).unwrap();
        assert_eq!(back, finite);
    }
}
