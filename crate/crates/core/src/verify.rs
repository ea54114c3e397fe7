//! Named verification suites, each a [`Report`].

use crate::freealg::checks::{check_associativity, check_grouplike_rule, check_jacobi, check_termination};
use crate::freealg::{preset, verify_flow_lemma, Preset};
use crate::hopf::{check_pairing_bilinear, check_pairing_diagonal, hopf_suite};
use crate::induction::{
    check_casimir, check_classical_limit, check_equivalence_alpha, check_equivariance, check_relations_on_module,
    check_star_consistency, Character,
};
use crate::opcalc::{check_duality, check_representations};
use crate::report::Report;

pub const SUITES: [&str; 8] = ["hopf", "pairing", "duality", "lemma", "relations", "star", "equivalence", "all"];

const SEED: u64 = 0x5eed;

/// Samples per preset for the random associativity check.
pub const ASSOCIATIVITY_SAMPLES: usize = 500;

/// The flow lemma is always checked to at least this order in `s`.
pub const LEMMA_MIN_ORDER: u32 = 6;

/// Runs the named suite with polynomial degrees capped at `degree`.
/// `None` for an unknown suite name.
pub fn run_suite(name: &str, degree: u32) -> Option<Report> {
    let report = match name {
        "hopf" => hopf_suite(degree),
        "pairing" => {
            let mut r = check_pairing_diagonal(degree);
            r.extend(check_pairing_bilinear(100, degree, SEED));
            r
        }
        "duality" => {
            let mut r = check_duality(degree);
            r.extend(check_representations(100, degree, SEED));
            r
        }
        "lemma" => verify_flow_lemma(&preset(Preset::UqKmph), degree.max(LEMMA_MIN_ORDER) as usize),
        "relations" => relations(degree),
        "star" => check_star_consistency(),
        "equivalence" => {
            let mut r = check_equivalence_alpha(degree);
            r.extend(check_equivariance(&Character::symbolic(), degree.max(2)));
            r
        }
        "all" => {
            let mut r = Report::new("all");
            for s in &SUITES[..SUITES.len() - 1] {
                r.extend(run_suite(s, degree)?);
            }
            r
        }
        _ => return None,
    };
    Some(report)
}

fn relations(degree: u32) -> Report {
    let mut r = Report::new("relations");
    for which in Preset::ALL {
        let p = preset(which);
        r.extend(check_jacobi(&p));
        r.extend(check_associativity(&p, ASSOCIATIVITY_SAMPLES, degree, SEED));
        r.extend(check_termination(&p, 100, 2 * degree as usize, SEED));
        r.extend(check_grouplike_rule(&p, 2));
    }
    r.extend(check_relations_on_module(&Character::symbolic(), 2 * degree));
    let mut reduced = check_relations_on_module(&Character::reduced(), 2 * degree);
    for c in &mut reduced.checks {
        c.id.push_str(".alpha0");
    }
    r.extend(reduced);
    r.extend(check_casimir(&Character::reduced(), degree + 2));
    r.extend(check_classical_limit(degree + 2));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(run_suite("nope", 2).is_none());
    }

    #[test]
    fn small_suites_pass() {
        for s in ["star", "lemma", "equivalence"] {
            let r = run_suite(s, 2).unwrap();
            assert!(r.passed(), "{}: {:?}", s, r.first_failure());
        }
    }
}
