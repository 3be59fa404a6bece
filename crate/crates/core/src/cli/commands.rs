use serde_json::{json, Map, Value};

use super::golden::regen;
use super::{CliError, Command, Common, Outcome};
use crate::cluster::{
    amalgamate_multiply, extract_matrix, monodromy, phi_l, phi_r, seed_from_matrix, ClusterError, MonodromyPath,
};
use crate::literal::{parse_mat2, parse_triple};
use crate::markov::{
    default_frozen_slot, enumerate_tree, fibonacci_branch, is_admissible, markov_function, torus_angles, MarkovError,
    MarkovTriple, TreePolicy,
};
use crate::quantum::{
    preserves_quantum_plane, qring, quantum_det, quantum_inverse, quantum_symplectic_report, specialization_matches,
};
use crate::ring::{json as rjson, Ring};
use crate::sp2::*;
use crate::suites::{cluster_suite, identity_suite, quantum_suite, with_jobs, SuiteReport, CHEBYSHEV_MAX_K};

pub(super) fn execute(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Sp2Verify { common, seed } => sp2_verify(common, seed),
        Command::IdentitiesFuzz { common, suite } => {
            let ring = ring(common)?;
            Ok(suite_outcome("identities-fuzz", with_jobs(common.jobs, || identity_suite(&ring, suite.count, suite.rng_seed))))
        }
        Command::QuantumVerify { common, seed, suite } => match seed {
            Some(seed) => quantum_verify(common, seed),
            None => {
                let ring = ring(common)?;
                Ok(suite_outcome("quantum-verify", with_jobs(common.jobs, || quantum_suite(&ring, suite.count, suite.rng_seed))))
            }
        },
        Command::ClusterSquare { common, seed, with, suite } => match seed {
            Some(seed) => cluster_square(common, seed, with.as_deref()),
            None => {
                let ring = ring(common)?;
                Ok(suite_outcome("cluster-square", with_jobs(common.jobs, || cluster_suite(&ring, suite.count, suite.rng_seed))))
            }
        },
        Command::MarkovCheck { common, seed } => markov_check(common, seed),
        Command::MarkovTree { common, seed, depth, dedup } => {
            let root = triple(&ring(common)?, seed)?;
            let tree = with_jobs(common.jobs, || enumerate_tree(&root, *depth, TreePolicy { dedup: *dedup }))
                .map_err(failed)?;
            let ok = tree.nodes.iter().all(|n| n.admissible());
            Ok(Outcome { report: tree.to_json(), ok })
        }
        Command::MarkovFib { common, seed, depth, frozen } => markov_fib(common, seed, *depth, *frozen),
        Command::GoldenRegen { out, check } => regen(out.as_deref(), *check),
    }
}

fn ring(common: &Common) -> Result<Ring, CliError> {
    Ring::parse_with_qmode(&common.ring, common.qmode).map_err(|e| CliError::usage("--ring", e))
}

fn matrix(ring: &Ring, text: &str, flag: &'static str) -> Result<Mat2, CliError> {
    let entries = parse_mat2(ring, text).map_err(|e| CliError::usage(flag, e))?;
    Mat2::from_array(entries).map_err(|e| CliError::usage(flag, e))
}

fn triple(ring: &Ring, text: &str) -> Result<MarkovTriple, CliError> {
    let entries = parse_triple(ring, text).map_err(|e| CliError::usage("--seed", e))?;
    MarkovTriple::from_array(entries).map_err(|e| CliError::usage("--seed", e))
}

fn failed(e: impl std::fmt::Display) -> CliError {
    CliError::Failed(e.to_string())
}

fn entries(m: &Mat2) -> Value {
    json!([[rjson::encode(&m.a), rjson::encode(&m.b)], [rjson::encode(&m.c), rjson::encode(&m.d)]])
}

fn header(command: &str, ring: &Ring) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("command".into(), command.into());
    m.extend(rjson::ring_header(ring));
    m
}

fn finish(mut m: Map<String, Value>, ok: bool) -> Result<Outcome, CliError> {
    m.insert("ok".into(), ok.into());
    Ok(Outcome { report: Value::Object(m), ok })
}

fn suite_outcome(command: &str, report: SuiteReport) -> Outcome {
    let ok = report.passed;
    let mut m = Map::new();
    m.insert("command".into(), command.into());
    if let Value::Object(body) = serde_json::to_value(&report).expect("suite reports serialize") {
        m.extend(body);
    }
    m.insert("ok".into(), ok.into());
    Outcome { report: Value::Object(m), ok }
}

fn sp2_verify(common: &Common, seed: &str) -> Result<Outcome, CliError> {
    let ring = ring(common)?;
    let m = matrix(&ring, seed, "--seed")?;
    let rep = symplectic_report(&m);
    let mut out = header("sp2-verify", &ring);
    out.insert("matrix".into(), entries(&m));
    out.insert("left_residuals".into(), json!(rep.left_residuals));
    out.insert("right_residuals".into(), json!(rep.right_residuals));
    out.insert("is_left".into(), rep.is_left.into());
    out.insert("is_right".into(), rep.is_right.into());
    out.insert("is_full".into(), rep.is_full.into());
    out.insert("det_l".into(), json!(det_l(&m)));
    out.insert("det_r".into(), json!(det_r(&m)));
    out.insert("trace".into(), json!(trace(&m)));
    out.insert("trace_sigma".into(), json!(trace_sigma(&m)));
    out.insert("adjugate".into(), entries(&adjugate(&m)));
    out.insert("cayley_hamilton_residual".into(), entries(&cayley_hamilton_residual(&m)));
    out.insert("cayley_hamilton_symplectic_residual".into(), entries(&cayley_hamilton_symplectic_residual(&m)));
    if rep.is_full {
        let cheb: Vec<Value> = (1..=CHEBYSHEV_MAX_K)
            .map(|k| chebyshev_trace_residual(&m, k).map(|r| json!(r)).unwrap_or(Value::Null))
            .collect();
        out.insert("chebyshev_residuals".into(), Value::Array(cheb));
    }
    finish(out, rep.is_full)
}

fn quantum_verify(common: &Common, seed: &str) -> Result<Outcome, CliError> {
    let base = ring(common)?;
    let q = if base.is_qmode() { base } else { qring(&base) };
    let m = matrix(&q, seed, "--seed")?;
    let rep = quantum_symplectic_report(&m);
    let mut out = header("quantum-verify", &q);
    out.insert("matrix".into(), entries(&m));
    out.insert("left_residuals".into(), json!(rep.left_residuals));
    out.insert("right_residuals".into(), json!(rep.right_residuals));
    out.insert("is_left".into(), rep.is_left.into());
    out.insert("is_right".into(), rep.is_right.into());
    out.insert("is_full".into(), rep.is_full.into());
    out.insert("quantum_det".into(), json!(quantum_det(&m)));
    out.insert("quantum_inverse".into(), entries(&quantum_inverse(&m)));
    out.insert("preserves_quantum_plane".into(), preserves_quantum_plane(&m).into());
    let spec = specialization_matches(&m).map_err(failed)?;
    out.insert("specialization_matches".into(), spec.into());
    finish(out, rep.is_full && spec)
}

fn cluster_square(common: &Common, seed: &str, with: Option<&str>) -> Result<Outcome, CliError> {
    let ring = ring(common)?;
    let m = matrix(&ring, seed, "--seed")?;
    let n = with.map(|w| matrix(&ring, w, "--with")).transpose()?;
    let c = |e: ClusterError| failed(e);
    let s = seed_from_matrix(&m).map_err(c)?;
    let extracted = extract_matrix(&s, [1, 2, 3, 4]).map_err(c)?;
    let flipped = s.mutate_edge(1, 3).map_err(c)?;
    let phi = (phi_r(&s).map_err(c)?, phi_l(&s).map_err(c)?);
    let phi_after = (phi_r(&flipped).map_err(c)?, phi_l(&flipped).map_err(c)?);
    let mono = monodromy(&s, &MonodromyPath::canonical_square()).map_err(c)?;

    let mut out = header("cluster-square", &ring);
    out.insert("matrix".into(), entries(&m));
    out.insert("seed".into(), s.to_json());
    out.insert("round_trip".into(), (extracted == m).into());
    out.insert("phi_r".into(), json!(phi.0));
    out.insert("phi_l".into(), json!(phi.1));
    out.insert("flipped".into(), flipped.to_json());
    out.insert("phi_invariant".into(), (phi == phi_after).into());
    out.insert("monodromy".into(), entries(&mono));
    out.insert("monodromy_matches".into(), (mono == m).into());
    let mut ok = extracted == m && phi == phi_after && mono == m;
    if let Some(n) = n {
        let (_, product) = amalgamate_multiply(&m, &n).map_err(c)?;
        let matches = product == &m * &n;
        out.insert("amalgamated_product".into(), entries(&product));
        out.insert("amalgamation_matches".into(), matches.into());
        ok &= matches;
    }
    finish(out, ok)
}

fn markov_check(common: &Common, seed: &str) -> Result<Outcome, CliError> {
    let ring = ring(common)?;
    let t = triple(&ring, seed)?;
    let mk = |e: MarkovError| failed(e);
    let f = markov_function(&t).map_err(mk)?;
    let angles = torus_angles(&t).map_err(mk)?;
    let rep = is_admissible(&t);
    let mut out = header("markov-check", &ring);
    out.insert("triple".into(), t.to_json());
    out.insert("F".into(), json!(f));
    out.insert("angles".into(), json!(angles));
    out.insert("units".into(), json!(rep.units));
    out.insert("sigma_fixed".into(), json!(rep.sigma_fixed));
    out.insert("positive".into(), json!(rep.positive));
    out.insert("admissible".into(), rep.admissible.into());
    out.insert("failures".into(), json!(rep.failures));
    finish(out, rep.admissible)
}

fn markov_fib(common: &Common, seed: &str, depth: usize, frozen: Option<usize>) -> Result<Outcome, CliError> {
    let ring = ring(common)?;
    let t = triple(&ring, seed)?;
    let slot = match frozen {
        Some(k) if k > 2 => return Err(CliError::usage("--frozen", "slot must be 0, 1 or 2")),
        Some(k) => k,
        None => default_frozen_slot(&t).ok_or_else(|| CliError::usage("--frozen", "no σ-fixed entry to freeze"))?,
    };
    let branch = fibonacci_branch(&t, slot, depth).map_err(|e| match e {
        MarkovError::CNotSigmaFixed => CliError::usage("--frozen", e),
        e => failed(e),
    })?;
    let ok = branch.agree() && branch.phi_invariant;
    let mut out = header("markov-fib", &ring);
    out.insert("triple".into(), t.to_json());
    if let Value::Object(body) = serde_json::to_value(&branch).expect("branches serialize") {
        out.extend(body);
    }
    out.insert("oriented_terms".into(), json!(branch.oriented_terms()));
    out.insert("agree".into(), branch.agree().into());
    finish(out, ok)
}
