//! The ten acceptance criteria, one line each. Runs without the libtest
//! harness so the lines are always printed.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use num_complex::Complex64;
use qgalilei::lattice::{self, check_unitarity, dispersion_study, norm_drift_with_beta, LatticeParams, LatticeState};
use qgalilei::parse::{parse_element, parse_wavefunction};
use qgalilei_core::freealg::checks::{check_associativity, check_jacobi};
use qgalilei_core::freealg::verify_flow_lemma;
use qgalilei_core::hopf::{check_pairing_diagonal, hopf_pairing, hopf_suite};
use qgalilei_core::induction::{
    casimir_action, casimir_element, check_casimir, check_classical_limit, check_relations_on_module, classical_limit,
    induced_action, reduced_casimir_action, Character,
};
use qgalilei_core::opcalc::check_duality;
use qgalilei_core::{preset, Preset, Report, Scalar, Status, VarSet};

type Outcome = Result<String, String>;

fn all_pass(reports: &[Report]) -> Outcome {
    let cases: usize = reports.iter().flat_map(|r| &r.checks).map(|c| c.cases).sum();
    for r in reports {
        if let Some(f) = r.first_failure() {
            return Err(f);
        }
    }
    Ok(format!("{} exact cases", cases))
}

fn engine() -> Outcome {
    let mut reports = Vec::new();
    for which in Preset::ALL {
        let p = preset(which);
        reports.push(check_jacobi(&p));
        let assoc = check_associativity(&p, 500, 4, 0xacce97);
        let c = &assoc.checks[0];
        if c.cases < 500 {
            return Err(format!("{}: only {} associativity samples", which.name(), c.cases));
        }
        reports.push(assoc);
    }
    all_pass(&reports)
}

fn hopf() -> Outcome {
    let r = hopf_suite(3);
    for id in ["fq.antipode.printed", "fq.antipode_relations.printed"] {
        match r.check(id).map(|c| c.status) {
            Some(Status::ExpectedFail) => {}
            other => return Err(format!("{} should fail for the printed S(mu), got {:?}", id, other)),
        }
    }
    for which in Preset::ALL {
        for axiom in ["coassociativity", "counit", "antipode", "delta_relations", "counit_relations", "antipode_relations"] {
            let id = format!("{}.{}", which.name(), axiom);
            if r.check(&id).map(|c| c.status) != Some(Status::Pass) {
                return Err(format!("{} missing or failing", id));
            }
        }
    }
    all_pass(&[r]).map(|s| format!("{}; printed S(mu) rejected", s))
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

fn pairing() -> Outcome {
    let r = check_pairing_diagonal(4);
    // spot checks against p!q!r!s! through the parser
    let up = preset(Preset::UqIphn);
    let fp = preset(Preset::Fq);
    for (u, f, want) in [
        ("I*P", "mu*x", factorial(1)),
        ("I^2*P*H", "mu^2*x*t", factorial(2)),
        ("P^2*N^2", "x^2*v^2", factorial(2) * factorial(2)),
        ("I*H^3", "mu*t^3", factorial(3)),
        // x*mu = mu*x + 2a*mu and <I*P, mu> = 0
        ("I*P", "x*mu", 1),
    ] {
        let got = hopf_pairing(&parse_element(u, &up).unwrap(), &parse_element(f, &fp).unwrap()).map_err(|e| e.to_string())?;
        if got != Scalar::int(want) {
            return Err(format!("<{}, {}> = {}, expected {}", u, f, got, want));
        }
    }
    all_pass(&[r])
}

fn duality() -> Outcome {
    all_pass(&[check_duality(4)])
}

fn lemma() -> Outcome {
    let r = verify_flow_lemma(&preset(Preset::UqKmph), 6);
    if r.check("lemma.H").map(|c| c.cases) != Some(7) {
        return Err("lemma.H did not cover orders s^0..s^6".into());
    }
    all_pass(&[r]).map(|s| format!("{} through s^6", s))
}

fn induced() -> Outcome {
    let mut reports = vec![
        check_relations_on_module(&Character::symbolic(), 8),
        check_relations_on_module(&Character::reduced(), 8),
        check_casimir(&Character::reduced(), 6),
        check_casimir(&Character::symbolic(), 6),
    ];
    // C_a ⊢ x^2 t = βx² − t
    let phi = parse_wavefunction("x^2*t", VarSet::XT).unwrap();
    let ch = Character::reduced();
    let via_element = induced_action(&ch, &casimir_element(), &phi).map_err(|e| e.to_string())?;
    let closed = casimir_action(&ch, &phi).map_err(|e| e.to_string())?;
    let want = parse_wavefunction("beta*x^2 - t", VarSet::XT).unwrap();
    if via_element != want || closed != want {
        return Err(format!("C_a on x^2*t: {} / {}", via_element, closed));
    }
    reports.retain(|r| !r.checks.is_empty());
    all_pass(&reports)
}

fn classical() -> Outcome {
    let r = check_classical_limit(6);
    let ch = Character::reduced();
    let phi = parse_wavefunction("x^4*t", VarSet::XT).unwrap();
    let got = classical_limit(&reduced_casimir_action(&ch, &phi).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    // (∂t − (1/(2β))∂x²) x⁴t = x⁴ − 6β⁻¹x²t
    let want = parse_wavefunction("x^4 - 6*beta^-1*x^2*t", VarSet::XT).unwrap();
    if got != want {
        return Err(format!("C' limit on x^4*t: {}", got));
    }
    all_pass(&[r])
}

fn dispersion() -> Outcome {
    let (mass, hbar) = (1.0, 1.0);
    let direct = lattice::omega(1.0, 0.1, mass, hbar);
    if (direct - 0.4995834722).abs() > 1e-10 {
        return Err(format!("omega(k=1, a=0.1) = {}", direct));
    }
    let k = 1.0;
    let spacings = [0.3, 0.15, 0.075, 0.0375, 0.01875];
    let rows = dispersion_study(&spacings, k, mass, hbar).map_err(|e| e.to_string())?;
    let mut worst_rel: f64 = 0.0;
    for r in &rows {
        let oracle = hbar / mass * r.a * r.a * k.powi(4) / 24.0;
        let rel = (r.abs_err - oracle).abs() / oracle;
        worst_rel = worst_rel.max(rel);
        if rel > 0.05 {
            return Err(format!("a={}: error {} vs a^2k^4/24 = {}", r.a, r.abs_err, oracle));
        }
    }
    let ratios: Vec<f64> = rows.iter().filter_map(|r| r.ratio).collect();
    if ratios.len() < 4 {
        return Err("fewer than 4 halvings".into());
    }
    if let Some(bad) = ratios.iter().find(|x| (**x - 4.0).abs() > 0.05) {
        return Err(format!("ratio {}", bad));
    }
    Ok(format!(
        "max rel dev from a^2k^4/24 = {:.2e}; ratios {}",
        worst_rel,
        ratios.iter().map(|r| format!("{:.4}", r)).collect::<Vec<_>>().join(", ")
    ))
}

fn unitarity() -> Outcome {
    let p = LatticeParams::new(0.05, 256, 1.0, 1.0).unwrap();
    let l = p.length();
    let mut worst: f64 = 0.0;
    for (x0, sigma, k0) in [(l / 2.0, l / 20.0, 0.0), (l / 3.0, l / 10.0, 5.0), (l / 4.0, l / 40.0, -12.0)] {
        let s = LatticeState::gaussian(p, x0, sigma, k0);
        for t in [1.0, 100.0, 1000.0] {
            let rel = check_unitarity(&s, t) / s.norm();
            worst = worst.max(rel);
            if rel > 1e-12 {
                return Err(format!("relative drift {:e} at t={}", rel, t));
            }
        }
    }
    if check_unitarity(&LatticeState::zero(p), 1000.0) != 0.0 {
        return Err("zero state drifted".into());
    }
    let s = LatticeState::gaussian(p, l / 2.0, l / 10.0, 2.0);
    let real = norm_drift_with_beta(&s, Complex64::new(1.0, 0.0), 1000.0) / s.norm();
    if real <= 1e-3 {
        return Err(format!("real beta drift only {:e}", real));
    }
    Ok(format!("imaginary beta drift <= {:.1e}; real beta drift {:.3}", worst, real))
}

fn golden() -> Outcome {
    let failures: Vec<String> = common::CASES.iter().filter_map(|c| common::run_case(c).err()).collect();
    if !failures.is_empty() {
        return Err(failures.join("; "));
    }
    if common::CASES.len() < 10 || !common::CASES.iter().any(|c| c.name == "verify_all_degree4" && c.code == 0) {
        return Err("golden set incomplete".into());
    }
    Ok(format!("{} byte-exact invocations", common::CASES.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("engine soundness (Jacobi, associativity)", engine),
        ("Hopf axioms at degree 3", hopf),
        ("pairing diagonality to degree 4", pairing),
        ("action/multiplication duality to degree 4", duality),
        ("flow lemma to order s^6", lemma),
        ("induced representation and q-Casimir", induced),
        ("classical limit", classical),
        ("dispersion convergence", dispersion),
        ("unitarity", unitarity),
        ("CLI golden files", golden),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = f();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {} [{}; {:.2}s]", i + 1, name, detail, secs),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {} [{}; {:.2}s]", i + 1, name, why, secs);
            }
        }
    }
    println!("acceptance: {}/10 passed in {:.1}s", 10 - failed, start.elapsed().as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
