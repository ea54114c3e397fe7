//! Consistency checks of the rewrite engine: Jacobi, associativity,
//! termination, and the grouplike closed form.

use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::{Check, Report};
use crate::scalar::Scalar;

use super::poly::{Letter, Monomial, NCPolynomial};
use super::presentation::Presentation;
use super::rewrite::{normal_order, word_string};

/// Single generators plus `E⁻¹` when a grouplike generator exists.
pub fn generator_elements(p: &Arc<Presentation>) -> Vec<NCPolynomial> {
    let mut out: Vec<NCPolynomial> = (0..p.len())
        .map(|g| NCPolynomial::generator(p, p.generator_name(g), 1).expect("own generator"))
        .collect();
    if p.grouplike().is_some() {
        out.push(NCPolynomial::grouplike_power(p, -1));
    }
    out
}

/// `[[g1,g2],g3] + [[g2,g3],g1] + [[g3,g1],g2] = 0` for all generator triples.
pub fn check_jacobi(p: &Arc<Presentation>) -> Report {
    let gens = generator_elements(p);
    let mut check = Check::new(format!("{}.jacobi", p.name()));
    for g1 in &gens {
        for g2 in &gens {
            for g3 in &gens {
                let jac = (|| {
                    let t1 = g1.commutator(g2)?.commutator(g3)?;
                    let t2 = g2.commutator(g3)?.commutator(g1)?;
                    let t3 = g3.commutator(g1)?.commutator(g2)?;
                    t1.checked_add(&t2)?.checked_add(&t3)
                })();
                match jac {
                    Ok(r) => check.case(r.is_zero(), || (format!("({}, {}, {})", g1, g2, g3), r.to_string())),
                    Err(e) => check.error(format!("({}, {}, {})", g1, g2, g3), e),
                }
            }
        }
    }
    let mut report = Report::new("engine");
    report.push(check);
    report
}

/// A random normal-ordered monomial of total degree at most `max_degree`
/// (grouplike exponent drawn from `-2..=2` and not counted in the degree).
pub fn random_monomial<R: Rng>(p: &Presentation, rng: &mut R, max_degree: u32) -> Monomial {
    let mut exps = alloc::vec![0i32; p.len()];
    let plain: Vec<usize> = (0..p.len()).filter(|&g| Some(g) != p.grouplike()).collect();
    let degree = rng.gen_range(0..=max_degree);
    for _ in 0..degree {
        let g = plain[rng.gen_range(0..plain.len())];
        exps[g] += 1;
    }
    if let Some(e) = p.grouplike() {
        exps[e] = rng.gen_range(-2..=2);
    }
    Monomial::new(exps)
}

/// `(uv)w = u(vw)` on `samples` random monomial triples of degree at most `max_degree`.
pub fn check_associativity(p: &Arc<Presentation>, samples: usize, max_degree: u32, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut check = Check::new(format!("{}.associativity", p.name()));
    for _ in 0..samples {
        let [u, v, w] = [0, 1, 2].map(|_| NCPolynomial::term(p, random_monomial(p, &mut rng, max_degree), Scalar::one()));
        let res = (|| {
            let left = u.multiply(&v)?.multiply(&w)?;
            let right = u.multiply(&v.multiply(&w)?)?;
            left.checked_sub(&right)
        })();
        let label = || format!("({})({})({})", u, v, w);
        match res {
            Ok(r) => check.case(r.is_zero(), || (label(), r.to_string())),
            Err(e) => check.error(label(), e),
        }
    }
    let mut report = Report::new("engine");
    report.push(check);
    report
}

/// Every random word of length at most `max_len` normal-orders within fuel.
pub fn check_termination(p: &Arc<Presentation>, samples: usize, max_len: usize, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut check = Check::new(format!("{}.termination", p.name()));
    for _ in 0..samples {
        let len = rng.gen_range(0..=max_len);
        let word: Vec<Letter> = (0..len)
            .map(|_| {
                let g = rng.gen_range(0..p.len());
                let e = if Some(g) == p.grouplike() {
                    if rng.gen_bool(0.5) { 1 } else { -1 }
                } else {
                    1
                };
                (g as u8, e)
            })
            .collect();
        match normal_order(p, &word, &Scalar::one()) {
            Ok(_) => check.case(true, || unreachable!()),
            Err(e) => check.error(word_string(p, &word), e),
        }
    }
    let mut report = Report::new("engine");
    report.push(check);
    report
}

/// The closed-form grouplike rule for `E^z g` (and `g E^z`) agrees with
/// `|z|` successive single-step moves, for `1 <= |z| <= max_z`.
pub fn check_grouplike_rule(p: &Arc<Presentation>, max_z: i32) -> Report {
    let mut check = Check::new(format!("{}.grouplike_closed_form", p.name()));
    let mut report = Report::new("engine");
    let Some(e) = p.grouplike() else {
        report.push(check.with_note("no grouplike generator"));
        return report;
    };
    for g in (0..p.len()).filter(|&g| g != e) {
        let gen = NCPolynomial::generator(p, p.generator_name(g), 1).expect("own generator");
        for z in (-max_z..=max_z).filter(|&z| z != 0) {
            let step = NCPolynomial::grouplike_power(p, z.signum());
            let res = (|| {
                let closed_left = NCPolynomial::grouplike_power(p, z).multiply(&gen)?;
                let closed_right = gen.multiply(&NCPolynomial::grouplike_power(p, z))?;
                let mut iter_left = gen.clone();
                let mut iter_right = gen.clone();
                for _ in 0..z.abs() {
                    iter_left = step.multiply(&iter_left)?;
                    iter_right = iter_right.multiply(&step)?;
                }
                closed_left.checked_sub(&iter_left)?.checked_add(&closed_right.checked_sub(&iter_right)?)
            })();
            let label = || format!("E^{} and {}", z, p.generator_name(g));
            match res {
                Ok(r) => check.case(r.is_zero(), || (label(), r.to_string())),
                Err(err) => check.error(label(), err),
            }
        }
    }
    report.push(check);
    report
}
