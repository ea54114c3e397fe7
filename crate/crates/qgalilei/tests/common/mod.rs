//! Golden CLI cases shared by the golden and acceptance targets.
//! `UPDATE_GOLDEN=1` rewrites the expected files.

use std::fs;
use std::path::PathBuf;
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub code: i32,
}

pub const CASES: &[Case] = &[
    Case { name: "act_induced_k_x3", args: &["act", "--action", "induced", "--alpha", "0", "--beta", "beta", "K", "x^3"], code: 0 },
    Case { name: "act_induced_symbolic_alpha", args: &["act", "--action", "induced", "--alpha", "alpha", "K", "x"], code: 0 },
    Case { name: "act_induced_units", args: &["act", "--action", "induced", "--beta", "-i", "K*P", "x^2*t"], code: 0 },
    Case { name: "pair_hopf_ip_mux", args: &["pair", "--side", "hopf", "I*P", "mu*x"], code: 0 },
    Case { name: "pair_hopf_grouplike", args: &["pair", "--side", "hopf", "E^2", "x^3"], code: 0 },
    Case { name: "pair_a_kp", args: &["pair", "--side", "A", "K*P*E", "v*x^2"], code: 0 },
    Case { name: "normal_order_relation", args: &["normal-order", "--alg", "uq_kmph", "P*K - K*P + M"], code: 0 },
    Case { name: "normal_order_hk", args: &["normal-order", "H*K"], code: 0 },
    Case { name: "normal_order_iphn", args: &["normal-order", "--alg", "uq_iphn", "N*P + (1/2 - i)*E^-1*N*E"], code: 0 },
    Case { name: "normal_order_fq", args: &["normal-order", "--alg", "fq", "x*v - v*x + mu*t"], code: 0 },
    Case { name: "act_left_k", args: &["act", "--action", "left", "K", "v*mu*t"], code: 0 },
    Case { name: "act_right_h", args: &["act", "--action", "right", "H", "mu*x"], code: 0 },
    Case { name: "casimir_x2t", args: &["casimir", "x^2*t"], code: 0 },
    Case { name: "casimir_reduced_x4", args: &["casimir", "--reduced", "x^4"], code: 0 },
    Case { name: "limit_casimir_reduced", args: &["limit", "casimir", "--reduced", "x^4"], code: 0 },
    Case { name: "limit_act_induced", args: &["limit", "act", "--action", "induced", "--beta", "-i", "K", "x^3"], code: 0 },
    Case { name: "limit_pole", args: &["limit", "normal-order", "H*K"], code: 1 },
    Case { name: "error_negative_power", args: &["normal-order", "K^-1*P"], code: 2 },
    Case { name: "error_juxtaposition", args: &["act", "--action", "induced", "K", "x t"], code: 2 },
    Case { name: "error_beta_zero", args: &["casimir", "--reduced", "--beta", "0", "x"], code: 1 },
    Case { name: "verify_all_degree4", args: &["verify", "--suite", "all", "--degree", "4"], code: 0 },
    Case { name: "verify_hopf_json", args: &["verify", "--suite", "hopf", "--degree", "2", "--json"], code: 0 },
    Case { name: "lattice_dispersion", args: &["lattice", "--a", "0.1", "--sites", "64", "--k-mode", "1"], code: 0 },
    Case { name: "lattice_study", args: &["lattice", "--sites", "64", "--k-mode", "1", "--study", "0.1,0.05,0.025,0.0125"], code: 0 },
    Case { name: "lattice_out_of_band", args: &["lattice", "--sites", "8", "--k-mode", "5"], code: 2 },
];

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// Runs one case; returns a mismatch description.
pub fn run_case(c: &Case) -> Result<(), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_qgalilei")).args(c.args).output().map_err(|e| e.to_string())?;
    let code = out.status.code().unwrap_or(-1);
    let dir = golden_dir();
    let stdout_path = dir.join(format!("{}.stdout", c.name));
    let stderr_path = dir.join(format!("{}.stderr", c.name));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::create_dir_all(&dir).unwrap();
        fs::write(&stdout_path, &out.stdout).unwrap();
        fs::write(&stderr_path, &out.stderr).unwrap();
    }
    let want_out = fs::read(&stdout_path).map_err(|e| format!("{}: {}", stdout_path.display(), e))?;
    let want_err = fs::read(&stderr_path).map_err(|e| format!("{}: {}", stderr_path.display(), e))?;
    let mut problems = Vec::new();
    if code != c.code {
        problems.push(format!("exit code {} (expected {})", code, c.code));
    }
    if out.stdout != want_out {
        problems.push(format!("stdout differs:\n{}", String::from_utf8_lossy(&out.stdout)));
    }
    if out.stderr != want_err {
        problems.push(format!("stderr differs:\n{}", String::from_utf8_lossy(&out.stderr)));
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(format!("{}: {}", c.name, problems.join("; ")))
    }
}
