//! Command dispatch for the `lefteig` binary.
//!
//! Quaternions are JSON arrays `[w, x, y, z]` and matrices are 2×2 nested
//! arrays of them, on the command line and in every output document.
//! Results go to stdout as a single JSON value; diagnostics go to stderr.
//!
//! Exit codes: 0 success, 2 input parse error, 3 domain error (e.g.
//! `classify-symplectic` on a non-symplectic matrix), 4 numerical failure
//! (non-convergence, residual or agreement violations).

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use lefteig::lefteig2;
use lefteig::oracle;
use lefteig::sp2;
use lefteig::uniquad::{self, SolutionSet};
use lefteig::{Error, QuatMatrix2, Quaternion};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_NUMERICAL: i32 = 4;

#[derive(Parser)]
#[command(
    name = "lefteig",
    version,
    about = "Left eigenvalues of 2x2 quaternionic matrices",
    long_about = "Solves unilateral quadratics over the quaternions, computes left \
                  eigenvalues of 2x2 quaternionic matrices, and classifies symplectic \
                  matrices by their left spectrum. Quaternions are JSON arrays \
                  [w,x,y,z]; matrices are 2x2 nested arrays of quaternions."
)]
struct Cli {
    /// Verification tolerance (normalized) used by `verify` and
    /// `self-test`. Classification tolerances are fixed and not
    /// user-adjustable.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve p^2 + a1*p + a0 = 0 over the quaternions
    SolveQuadratic {
        /// Coefficient a1 as [w,x,y,z]
        #[arg(long)]
        a1: String,
        /// Coefficient a0 as [w,x,y,z]
        #[arg(long)]
        a0: String,
    },
    /// Left eigenvalues of a 2x2 quaternionic matrix
    LeftEig {
        /// Matrix as [[a,b],[c,d]] with quaternion entries
        #[arg(long)]
        matrix: String,
    },
    /// Classify the left spectrum of a symplectic matrix
    ClassifySymplectic {
        #[arg(long)]
        matrix: String,
    },
    /// Study determinant of a 2x2 quaternionic matrix
    Sdet {
        #[arg(long)]
        matrix: String,
    },
    /// Generate deterministic random symplectic matrices
    RandomSymplectic {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Verification residual of a candidate left eigenvalue
    Verify {
        #[arg(long)]
        matrix: String,
        /// Candidate eigenvalue as [w,x,y,z]
        #[arg(long)]
        q: String,
    },
    /// Cross-check the analytic pipeline against the residual oracle on
    /// 50 seeded random instances
    SelfTest,
}

/// Runs one command line (including argv\[0\]) and returns the exit code.
pub fn run(args: &[String], stdout: &mut impl Write, stderr: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    EXIT_PARSE
                }
            };
        }
    };

    match dispatch(&cli, stderr) {
        Ok(doc) => {
            let _ = writeln!(stdout, "{doc}");
            EXIT_OK
        }
        Err(CliError::Parse(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_PARSE
        }
        Err(CliError::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_domain() {
                EXIT_DOMAIN
            } else {
                EXIT_NUMERICAL
            }
        }
        Err(CliError::SelfTest(doc)) => {
            let _ = writeln!(stdout, "{doc}");
            EXIT_NUMERICAL
        }
    }
}

enum CliError {
    Parse(String),
    Lib(Error),
    /// Self-test disagreement: the report still goes to stdout.
    SelfTest(serde_json::Value),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn parse_quaternion(label: &str, s: &str) -> Result<Quaternion, CliError> {
    serde_json::from_str(s)
        .map_err(|e| CliError::Parse(format!("{label}: expected [w,x,y,z], got {s:?} ({e})")))
}

fn parse_matrix(label: &str, s: &str) -> Result<QuatMatrix2, CliError> {
    serde_json::from_str(s).map_err(|e| {
        CliError::Parse(format!(
            "{label}: expected [[a,b],[c,d]] with quaternion entries, got {s:?} ({e})"
        ))
    })
}

fn dispatch(cli: &Cli, stderr: &mut impl Write) -> Result<serde_json::Value, CliError> {
    match &cli.command {
        Command::SolveQuadratic { a1, a0 } => {
            let a1 = parse_quaternion("--a1", a1)?;
            let a0 = parse_quaternion("--a0", a0)?;
            let (set, _report) = uniquad::solve(a1, a0)?;
            Ok(serde_json::to_value(&set).expect("solution set serializes"))
        }
        Command::LeftEig { matrix } => {
            let a = parse_matrix("--matrix", matrix)?;
            let bc = a.b * a.c;
            if bc != Quaternion::ZERO && bc.norm() < 1e-12 {
                let _ = writeln!(
                    stderr,
                    "warning: nearly triangular matrix (|b*c| = {:.3e}); the reduction \
                     multiplies by b^-1 and may be ill-conditioned",
                    bc.norm()
                );
            }
            let set = lefteig2::left_eigenvalues(&a)?;
            Ok(serde_json::to_value(&set).expect("eigenvalue set serializes"))
        }
        Command::ClassifySymplectic { matrix } => {
            let a = parse_matrix("--matrix", matrix)?;
            let (eigs, rotation) = sp2::classify_spectrum(&a)?;
            Ok(json!({
                "kind": "classification",
                "eigenvalues": eigs,
                "rotation": rotation,
            }))
        }
        Command::Sdet { matrix } => {
            let a = parse_matrix("--matrix", matrix)?;
            Ok(json!({ "sdet": lefteig::cxlift::sdet(&a) }))
        }
        Command::RandomSymplectic { seed, count } => {
            let matrices: Vec<QuatMatrix2> = (0..*count)
                .map(|k| sp2::random_symplectic(seed.wrapping_add(k as u64)))
                .collect();
            Ok(json!({ "matrices": matrices }))
        }
        Command::Verify { matrix, q } => {
            let a = parse_matrix("--matrix", matrix)?;
            let q = parse_quaternion("--q", q)?;
            let residual = lefteig2::verify(&a, q);
            let normalized = oracle::left_eig_residual(&a, q);
            Ok(json!({
                "residual": residual,
                "normalized": normalized,
                "is_eigenvalue": normalized <= cli.tol,
            }))
        }
        Command::SelfTest => self_test(cli.tol, stderr),
    }
}

/// Oracle-vs-pipeline agreement on 50 seeded instances: counts must match
/// for finite sets, every oracle cluster must lie on the solved set and
/// every reported solution must be confirmed, and residuals must hold.
fn self_test(tol: f64, stderr: &mut impl Write) -> Result<serde_json::Value, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5E1F_7E57);
    let mut disagreements = 0usize;
    let instances = 50usize;

    for k in 0..instances {
        let (a1, a0) = match k % 5 {
            // generic quaternionic
            0 | 1 => (random_quaternion(&mut rng), random_quaternion(&mut rng)),
            // real, negative discriminant (sphere)
            2 => {
                let (t, u) = gauss_pair(&mut rng);
                (
                    Quaternion::from_real(t),
                    Quaternion::from_real(t * t / 4.0 + 0.01 + u * u),
                )
            }
            // real, non-negative discriminant
            3 => {
                let (t, u) = gauss_pair(&mut rng);
                (
                    Quaternion::from_real(t),
                    Quaternion::from_real(t * t / 4.0 - 0.01 - u * u),
                )
            }
            // small a0
            _ => {
                let a1 = random_quaternion(&mut rng);
                let dir = random_quaternion(&mut rng);
                let a0 = dir.scale(1e-3 / dir.norm().max(1e-9));
                (a1, a0)
            }
        };

        if let Err(msg) = check_agreement(a1, a0, k as u64, tol) {
            disagreements += 1;
            let _ = writeln!(stderr, "self-test instance {k}: {msg}");
        }
    }

    let doc = json!({
        "self_test": {
            "instances": instances,
            "disagreements": disagreements,
            "pass": disagreements == 0,
        }
    });
    if disagreements == 0 {
        Ok(doc)
    } else {
        Err(CliError::SelfTest(doc))
    }
}

fn check_agreement(a1: Quaternion, a0: Quaternion, seed: u64, tol: f64) -> Result<(), String> {
    let (set, report) = uniquad::solve(a1, a0).map_err(|e| format!("solver failed: {e}"))?;
    if set.is_infinite() != report.huang_so.all() {
        return Err("classification disagrees with the Huang-So flags".into());
    }

    let bound = tol.max(1e-10) * (1.0 + a1.norm() + a0.norm());
    let land = oracle::search_solutions(a1, a0, 200, 0xAB00 + seed);
    match &set {
        SolutionSet::Finite { solutions } => {
            for p in solutions {
                if oracle::quadratic_residual(*p, a1, a0) > bound {
                    return Err(format!("solution {p:?} fails its residual bound"));
                }
                if !land.minima.iter().any(|(m, _)| m.distance(*p) <= 1e-5) {
                    return Err(format!("solution {p:?} not confirmed by the oracle"));
                }
            }
            if land.len() != solutions.len() {
                return Err(format!(
                    "oracle found {} clusters, solver reported {}",
                    land.len(),
                    solutions.len()
                ));
            }
            Ok(())
        }
        SolutionSet::InfiniteSphere { .. } => {
            if land.len() < 5 {
                return Err("sphere case produced too few oracle clusters".into());
            }
            for (p, _) in &land.minima {
                if !set.membership(*p, 1e-5) {
                    return Err(format!("oracle cluster {p:?} off the reported sphere"));
                }
            }
            Ok(())
        }
    }
}

fn gauss_pair(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let u1: f64 = 1.0 - rng.gen::<f64>();
    let u2: f64 = rng.gen();
    let r = (-2.0 * u1.ln()).sqrt();
    let t = 2.0 * std::f64::consts::PI * u2;
    (r * t.cos(), r * t.sin())
}

fn random_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    let (w, x) = gauss_pair(rng);
    let (y, z) = gauss_pair(rng);
    Quaternion::new(w, x, y, z)
}

/// Convenience for tests: run with string arguments, capture output.
pub fn run_for_test(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["lefteig".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("stdout is UTF-8"),
        String::from_utf8(err).expect("stderr is UTF-8"),
    )
}
