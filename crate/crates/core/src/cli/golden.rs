use std::path::{Path, PathBuf};

use clap::Parser;
use serde_json::json;

use super::{render, Cli, CliError, Outcome};

/// A checked-in report together with the command line that produces it.
#[derive(Clone, Copy, Debug)]
pub struct GoldenFile {
    pub name: &'static str,
    pub args: &'static [&'static str],
}

const BT: &str = "[Id, [[1, t], [0, 1]], [[1, -t], [0, 1]]]";
const Z5_ROOT: &str = "[Z, 1 - Z + Z^2, 1 + Z - Z^3]";

pub fn golden_files() -> Vec<GoldenFile> {
    vec![
        GoldenFile { name: "classical_tree.json", args: &["markov-tree", "--ring", "int", "--seed", "[1,1,1]", "--depth", "6"] },
        GoldenFile { name: "z5_check.json", args: &["markov-check", "--ring", "group:Z5:int", "--seed", Z5_ROOT] },
        GoldenFile { name: "z5_tree.json", args: &["markov-tree", "--ring", "group:Z5:int", "--seed", Z5_ROOT, "--depth", "3"] },
        GoldenFile {
            name: "matrix_fibonacci.json",
            args: &["markov-fib", "--ring", "mat:2:laurent:t:int", "--seed", BT, "--frozen", "0", "--depth", "5"],
        },
        GoldenFile { name: "matrix_check.json", args: &["markov-check", "--ring", "mat:2:laurent:t:int", "--seed", BT] },
        GoldenFile {
            name: "dual_tree.json",
            args: &["markov-tree", "--ring", "dual:triv", "--seed", "[1, 1 + eps, 1 - eps]", "--depth", "3"],
        },
        GoldenFile { name: "complex_tree.json", args: &["markov-tree", "--ring", "complex-conj", "--seed", "[1, i, -i]", "--depth", "2"] },
        GoldenFile { name: "classical_fibonacci.json", args: &["markov-fib", "--ring", "int", "--seed", "[2,1,1]", "--depth", "6"] },
        GoldenFile { name: "sp2_verify_int.json", args: &["sp2-verify", "--ring", "int", "--seed", "[[2,1],[1,1]]"] },
        GoldenFile {
            name: "sp2_verify_complex.json",
            args: &["sp2-verify", "--ring", "complex-conj", "--seed", "[[i, i], [0, i]]"],
        },
        GoldenFile {
            name: "cluster_square.json",
            args: &["cluster-square", "--ring", "int", "--seed", "[[2,1],[1,1]]", "--with", "[[1,1],[1,2]]"],
        },
        GoldenFile { name: "quantum_unipotent.json", args: &["quantum-verify", "--ring", "int", "--seed", "[[1, s], [0, 1]]"] },
        GoldenFile {
            name: "identities_int.json",
            args: &["identities-fuzz", "--ring", "int", "--count", "100", "--rng-seed", "7"],
        },
        GoldenFile {
            name: "identities_mat2.json",
            args: &["identities-fuzz", "--ring", "mat:2:int", "--count", "100", "--rng-seed", "7"],
        },
        GoldenFile { name: "quantum_suite.json", args: &["quantum-verify", "--ring", "int", "--count", "50", "--rng-seed", "3"] },
        GoldenFile { name: "cluster_suite.json", args: &["cluster-square", "--ring", "rat", "--count", "50", "--rng-seed", "3"] },
    ]
}

pub fn default_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("golden")
}

/// Output of one golden command, as printed.
pub fn render_golden(g: &GoldenFile) -> Result<String, CliError> {
    let cli = Cli::try_parse_from(std::iter::once("sp2sigma").chain(g.args.iter().copied()))
        .map_err(|e| CliError::Failed(format!("{}: {}", g.name, e.kind())))?;
    let Outcome { report, .. } = super::execute(&cli.command)?;
    Ok(render(&report))
}

pub(super) fn regen(dir: Option<&Path>, check: bool) -> Result<Outcome, CliError> {
    let dir = dir.map(Path::to_path_buf).unwrap_or_else(default_dir);
    if !check {
        std::fs::create_dir_all(&dir).map_err(|e| CliError::usage("--out", e))?;
    }
    let mut files = Vec::new();
    let mut ok = true;
    for g in golden_files() {
        let text = render_golden(&g)?;
        let path = dir.join(g.name);
        let status = if check {
            match std::fs::read_to_string(&path) {
                Ok(old) if old == text => "same",
                Ok(_) => "differs",
                Err(_) => "missing",
            }
        } else {
            std::fs::write(&path, &text).map_err(|e| CliError::usage("--out", e))?;
            "written"
        };
        ok &= status == "same" || status == "written";
        files.push(json!({ "name": g.name, "args": g.args, "status": status }));
    }
    let report = json!({ "command": "golden-regen", "dir": dir.display().to_string(), "check": check, "files": files, "ok": ok });
    Ok(Outcome { report, ok })
}
