//! Seeded property runs over a ring: the sp2 identities, the quantum lift and the
//! square-seed cluster checks.
//!
//! Sample `i` draws from a ChaCha8 stream keyed by `(rng_seed, i)`, so reports do not
//! depend on the worker count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cluster::{amalgamate_multiply, extract_matrix, monodromy, phi_l, phi_r, seed_from_matrix, ClusterSeed};
use crate::cluster::MonodromyPath;
use crate::quantum::{lift_to_quantum, quantum_det, quantum_symplectic_report, qring, specialization_matches};
use crate::ring::Ring;
use crate::sp2::*;

/// Highest k in the Chebyshev trace check.
pub const CHEBYSHEV_MAX_K: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub name: &'static str,
    pub samples: usize,
    pub failures: usize,
    /// Sample index and message of the first failure.
    pub first_failure: Option<(usize, String)>,
}

impl CheckTally {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub ring: String,
    pub count: usize,
    pub rng_seed: u64,
    pub checks: Vec<CheckTally>,
    pub passed: bool,
}

impl SuiteReport {
    pub fn check(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }
}

type Outcome = (&'static str, Result<(), String>);

pub fn sample_rng(rng_seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    rng.set_stream(index as u64);
    rng
}

/// Runs `f` on a pool of `jobs` workers, or on the global pool when `jobs` is `None`.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().expect("thread pool").install(f),
        None => f(),
    }
}

fn run(
    suite: &'static str,
    ring: &Ring,
    count: usize,
    rng_seed: u64,
    sample: impl Fn(&mut ChaCha8Rng) -> Vec<Outcome> + Sync,
) -> SuiteReport {
    let per_sample: Vec<Vec<Outcome>> =
        (0..count).into_par_iter().map(|i| sample(&mut sample_rng(rng_seed, i))).collect();
    let mut checks: Vec<CheckTally> = Vec::new();
    for (i, outcomes) in per_sample.into_iter().enumerate() {
        for (name, res) in outcomes {
            let pos = match checks.iter().position(|c| c.name == name) {
                Some(p) => p,
                None => {
                    checks.push(CheckTally { name, samples: 0, failures: 0, first_failure: None });
                    checks.len() - 1
                }
            };
            let tally = &mut checks[pos];
            tally.samples += 1;
            if let Err(msg) = res {
                tally.failures += 1;
                tally.first_failure.get_or_insert((i, msg));
            }
        }
    }
    let passed = checks.iter().all(CheckTally::passed);
    SuiteReport { suite, ring: ring.spec(), count, rng_seed, checks, passed }
}

fn zero_or<T: std::fmt::Display>(residual: &T, is_zero: bool) -> Result<(), String> {
    if is_zero {
        Ok(())
    } else {
        Err(format!("residual {residual}"))
    }
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Symplectic samples are words of this many generators.
const WORD_LENGTH: usize = 5;

/// Cayley–Hamilton (general and symplectic form), the classical, commutator and
/// determinant-product identities, the first-order determinant, Chebyshev traces up to
/// `CHEBYSHEV_MAX_K`, the adjugate as two-sided inverse, and tr(M⁻¹) = σ(tr M).
pub fn identity_suite(ring: &Ring, count: usize, rng_seed: u64) -> SuiteReport {
    run("identities", ring, count, rng_seed, |rng| {
        let (x, y) = (random_mat2(ring, rng), random_mat2(ring, rng));
        let m = random_symplectic_with(ring, rng, WORD_LENGTH);
        let n = random_symplectic_with(ring, rng, WORD_LENGTH);
        let id = Mat2::identity(ring);
        let adj = adjugate(&m);
        let ch = cayley_hamilton_residual(&x);
        let chs = cayley_hamilton_symplectic_residual(&m);
        let cl = classical_trace_identity_residual(&x, &y);
        let dp = det_product_residual(&x, &y);
        let fo = first_order_det_residual(&x, &y);
        let comm = commutator_trace_identity_residual(&m, &n)
            .map_err(|e| e.to_string())
            .and_then(|r| zero_or(&r, r.is_zero()));
        let cheb = (1..=CHEBYSHEV_MAX_K).try_for_each(|k| match chebyshev_trace_residual(&m, k) {
            Ok(r) if r.is_zero() => Ok(()),
            Ok(r) => Err(format!("k = {k}: residual {r}")),
            Err(e) => Err(e.to_string()),
        });
        vec![
            ("cayley_hamilton", zero_or(&ch, ch.is_zero())),
            ("cayley_hamilton_symplectic", zero_or(&chs, chs.is_zero())),
            ("classical_trace", zero_or(&cl, cl.is_zero())),
            ("commutator_trace", comm),
            ("det_product", zero_or(&dp, dp.is_zero())),
            ("first_order_det", zero_or(&fo, fo.is_zero())),
            ("chebyshev", cheb),
            ("adjugate_inverse", ensure(&adj * &m == id && &m * &adj == id, || format!("Adj(M)M ≠ Id for {m}"))),
            ("trace_inverse", ensure(trace(&adj) == trace(&m).sigma(), || format!("tr(M⁻¹) ≠ σ(tr M) for {m}"))),
        ]
    })
}

/// Lifts classical symplectic samples to the q-ring and checks that they are quantum
/// symplectic with quantum determinant 1, and that s = 1 specialization of the quantum
/// residuals reproduces the classical residuals (on the lift and on an arbitrary matrix).
pub fn quantum_suite(base: &Ring, count: usize, rng_seed: u64) -> SuiteReport {
    let q = qring(base);
    run("quantum", base, count, rng_seed, |rng| {
        let m = random_symplectic_with(base, rng, WORD_LENGTH);
        let lifted = lift_to_quantum(&m);
        let arbitrary = random_mat2(&q, rng);
        let rep = quantum_symplectic_report(&lifted);
        let det = quantum_det(&lifted);
        let spec = |x: &Mat2| match specialization_matches(x) {
            Ok(true) => Ok(()),
            Ok(false) => Err(format!("specialization differs for {x}")),
            Err(e) => Err(e.to_string()),
        };
        vec![
            ("lift_quantum_full", ensure(rep.is_full, || format!("lift of {m} is not quantum symplectic"))),
            ("quantum_det_one", ensure(det.is_one(), || format!("quantum det {det}"))),
            ("specialization_lift", spec(&lifted)),
            ("specialization_arbitrary", spec(&arbitrary)),
        ]
    })
}

/// Square-seed checks on symplectic samples with invertible entries: extraction
/// round-trip (and JSON), φ_R and φ_L under the diagonal flip, canonical monodromy, and
/// amalgamation against the matrix product.
pub fn cluster_suite(ring: &Ring, count: usize, rng_seed: u64) -> SuiteReport {
    run("cluster", ring, count, rng_seed, |rng| {
        let m = random_symplectic_invertible(ring, rng, WORD_LENGTH);
        let n = loop {
            let n = random_symplectic_invertible(ring, rng, WORD_LENGTH);
            if (&m * &n).entries().iter().all(|x| x.inverse().is_ok()) {
                break n;
            }
        };
        let seed = match seed_from_matrix(&m) {
            Ok(s) => s,
            Err(e) => return vec![("seed", Err(e.to_string()))],
        };
        let round_trip = extract_matrix(&seed, [1, 2, 3, 4]).map_err(|e| e.to_string()).and_then(|x| {
            let json_ok = ClusterSeed::from_json(&seed.to_json()).map(|s| s == seed).unwrap_or(false);
            ensure(x == m && json_ok, || format!("round trip of {m}"))
        });
        let phi = (|| -> Result<(), String> {
            let flipped = seed.mutate_edge(1, 3).map_err(|e| e.to_string())?;
            let before = (phi_r(&seed).map_err(|e| e.to_string())?, phi_l(&seed).map_err(|e| e.to_string())?);
            let after = (phi_r(&flipped).map_err(|e| e.to_string())?, phi_l(&flipped).map_err(|e| e.to_string())?);
            ensure(before == after && flipped.triangle_conditions_hold(), || format!("φ changed under the flip of {m}"))
        })();
        let mono = monodromy(&seed, &MonodromyPath::canonical_square())
            .map_err(|e| e.to_string())
            .and_then(|x| ensure(x == m, || format!("monodromy {x} ≠ {m}")));
        let amalg = amalgamate_multiply(&m, &n)
            .map_err(|e| e.to_string())
            .and_then(|(_, p)| ensure(p == &m * &n, || format!("amalgamation {p} ≠ MN")));
        vec![("round_trip", round_trip), ("phi_invariance", phi), ("monodromy", mono), ("amalgamation", amalg)]
    })
}
