use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AlgebraError, PairingError};
use crate::freealg::checks::random_monomial;
use crate::freealg::{normal_order, Monomial, NCPolynomial, Presentation, TensorElement};
use crate::report::{Check, Report};
use crate::scalar::Scalar;

use super::data::HopfData;

/// Default cap on the total degree of either pairing argument.
pub const DEFAULT_PAIRING_CAP: u32 = 6;

/// Pairing values on generators: `⟨I,μ⟩ = ⟨P,x⟩ = ⟨H,t⟩ = ⟨N,v⟩ = 1`,
/// all other generator pairs 0, and `⟨E^z, x⟩ = z·a`.
#[derive(Clone, Debug)]
pub struct PairingTable {
    base: Vec<((&'static str, &'static str), Scalar)>,
}

impl Default for PairingTable {
    fn default() -> Self {
        PairingTable {
            base: alloc::vec![
                (("I", "mu"), Scalar::one()),
                (("P", "x"), Scalar::one()),
                (("H", "t"), Scalar::one()),
                (("N", "v"), Scalar::one()),
            ],
        }
    }
}

impl PairingTable {
    pub fn generator(&self, u: &str, f: &str) -> Scalar {
        self.base
            .iter()
            .find(|((a, b), _)| *a == u && *b == f)
            .map(|(_, v)| v.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn grouplike(&self, z: i32, f: &str) -> Scalar {
        if f == "x" {
            Scalar::int(z as i64) * Scalar::a()
        } else {
            Scalar::zero()
        }
    }

    /// `⟨E^z, v^s μ^p x^q t^r⟩ = (z·a)^q` when `s = p = r = 0`, else 0.
    pub fn grouplike_monomial(&self, z: i32, f: &Monomial, fq: &Presentation) -> Scalar {
        let x = fq.index_of("x").expect("fq has x");
        if f.support().any(|g| g != x) {
            return Scalar::zero();
        }
        let mut acc = Scalar::one();
        for _ in 0..f.exponent(x) {
            acc = &acc * &self.grouplike(z, "x");
        }
        acc
    }
}

/// Memoizing evaluator of the `uq_iphn`–`fq` pairing. The `F_q` argument is
/// peeled one generator at a time,
/// `⟨u, g·rest⟩ = Σ ⟨u₍₁₎, g⟩ ⟨u₍₂₎, rest⟩`, with `⟨u, 1⟩ = ε(u)`.
pub struct PairingEngine {
    uq: HopfData,
    fq: HopfData,
    table: PairingTable,
    cap: u32,
    values: BTreeMap<(Monomial, Monomial), Scalar>,
    coproducts: BTreeMap<Monomial, TensorElement>,
}

impl PairingEngine {
    pub fn new(cap: u32) -> Self {
        PairingEngine {
            uq: HopfData::uq_iphn(),
            fq: HopfData::fq(super::AntipodeVariant::Corrected),
            table: PairingTable::default(),
            cap,
            values: BTreeMap::new(),
            coproducts: BTreeMap::new(),
        }
    }

    pub fn uq(&self) -> &Arc<Presentation> {
        self.uq.presentation()
    }

    pub fn fq(&self) -> &Arc<Presentation> {
        self.fq.presentation()
    }

    pub fn fq_hopf(&self) -> &HopfData {
        &self.fq
    }

    fn plain_degree(&self, m: &Monomial) -> u32 {
        let e = self.uq.presentation().grouplike();
        m.exponents()
            .iter()
            .enumerate()
            .filter(|(g, _)| Some(*g) != e)
            .map(|(_, x)| x.unsigned_abs())
            .sum()
    }

    /// `⟨u, f⟩`, bilinear in both arguments.
    pub fn pair(&mut self, u: &NCPolynomial, f: &NCPolynomial) -> Result<Scalar, PairingError> {
        for (have, want) in [(u.presentation(), self.uq.presentation()), (f.presentation(), self.fq.presentation())] {
            if !have.same_as(want) {
                return Err(AlgebraError::PresentationMismatch { left: want.name().into(), right: have.name().into() }.into());
            }
        }
        let mut out = Scalar::zero();
        for (m, c) in u.terms() {
            let degree = self.plain_degree(m);
            if degree > self.cap {
                return Err(PairingError::DegreeCap { degree, cap: self.cap });
            }
            for (n, d) in f.terms() {
                if n.degree() > self.cap {
                    return Err(PairingError::DegreeCap { degree: n.degree(), cap: self.cap });
                }
                let v = self.pair_monomials(m, n)?;
                out += &(&(c * d) * &v);
            }
        }
        Ok(out)
    }

    fn coproduct(&mut self, m: &Monomial) -> Result<TensorElement, AlgebraError> {
        if let Some(t) = self.coproducts.get(m) {
            return Ok(t.clone());
        }
        let t = self.uq.monomial_coproduct(m)?;
        self.coproducts.insert(m.clone(), t.clone());
        Ok(t)
    }

    /// `⟨u, f⟩` on basis monomials.
    pub fn pair_monomials(&mut self, u: &Monomial, f: &Monomial) -> Result<Scalar, AlgebraError> {
        if f.is_one() {
            return Ok(self.uq.monomial_counit(u));
        }
        let key = (u.clone(), f.clone());
        if let Some(v) = self.values.get(&key) {
            return Ok(v.clone());
        }
        let g = f.support().next().expect("non-unit monomial");
        let value = if f.degree() == 1 {
            self.pair_generator(u, g)?
        } else {
            let mut rest = f.exponents().to_vec();
            rest[g] -= 1;
            let rest = Monomial::new(rest);
            let mut acc = Scalar::zero();
            for (u1, u2, c) in self.coproduct(u)?.terms() {
                let first = self.pair_generator(u1, g)?;
                if first.is_zero() {
                    continue;
                }
                let second = self.pair_monomials(u2, &rest)?;
                acc += &(&(c * &first) * &second);
            }
            acc
        };
        self.values.insert(key, value.clone());
        Ok(value)
    }

    /// `⟨u, g⟩` for an `F_q` generator `g`, splitting `u = X·u'` and using
    /// `⟨X u', g⟩ = Σ ⟨X, g₍₁₎⟩ ⟨u', g₍₂₎⟩`.
    fn pair_generator(&mut self, u: &Monomial, g: usize) -> Result<Scalar, AlgebraError> {
        let fq = self.fq.presentation().clone();
        let gname = fq.generator_name(g);
        if u.is_one() {
            return Ok(self.fq.generator_counit(g).clone());
        }
        let up = self.uq.presentation().clone();
        let word = u.to_word();
        let (x, e) = word[0];
        let x = x as usize;
        let single = word.len() == 1 && (e == 1 || Some(x) == up.grouplike());
        if single {
            return Ok(if Some(x) == up.grouplike() {
                self.table.grouplike(e, gname)
            } else {
                self.table.generator(up.generator_name(x), gname)
            });
        }
        let take = if Some(x) == up.grouplike() { e } else { 1 };
        let mut head = alloc::vec![0; up.len()];
        head[x] = take;
        let mut tail = u.exponents().to_vec();
        tail[x] -= take;
        let (head, tail) = (Monomial::new(head), Monomial::new(tail));
        let mut acc = Scalar::zero();
        for (g1, g2, c) in self.fq.generator_coproduct(g).clone().terms() {
            let first = self.pair_monomials(&head, g1)?;
            if first.is_zero() {
                continue;
            }
            let second = self.pair_monomials(&tail, g2)?;
            acc += &(&(c * &first) * &second);
        }
        Ok(acc)
    }
}

/// `⟨u, f⟩` for `u` in `uq_iphn` and `f` in `fq`, with the default degree cap.
pub fn hopf_pairing(u: &NCPolynomial, f: &NCPolynomial) -> Result<Scalar, PairingError> {
    PairingEngine::new(DEFAULT_PAIRING_CAP).pair(u, f)
}

fn factorial(n: i32) -> i64 {
    (1..=n as i64).product()
}

fn multi_indices(cap: u32) -> Vec<[i32; 4]> {
    let mut out = Vec::new();
    let c = cap as i32;
    for p in 0..=c {
        for q in 0..=c - p {
            for r in 0..=c - p - q {
                for s in 0..=c - p - q - r {
                    out.push([p, q, r, s]);
                }
            }
        }
    }
    out
}

/// `⟨I^p P^q H^r N^s, μ^p' x^q' t^r' v^s'⟩ = p!q!r!s!·δ` for all multi-indices
/// of total degree at most `degree_cap`. The `F_q` word is taken in the order
/// `μ, x, t, v` and normal-ordered.
pub fn check_pairing_diagonal(degree_cap: u32) -> Report {
    let mut engine = PairingEngine::new(degree_cap.max(DEFAULT_PAIRING_CAP));
    let up = engine.uq().clone();
    let fp = engine.fq().clone();
    let mut check = Check::new("pairing.diagonal");
    let idx = multi_indices(degree_cap);
    let us: Vec<NCPolynomial> = idx
        .iter()
        .map(|k| NCPolynomial::from_word(&up, &[("I", k[0]), ("P", k[1]), ("H", k[2]), ("N", k[3])], Scalar::one()).expect("uq word"))
        .collect();
    let fs: Vec<Result<NCPolynomial, AlgebraError>> = idx
        .iter()
        .map(|k| {
            let word = [(1u8, k[0]), (2, k[1]), (3, k[2]), (0, k[3])];
            normal_order(&fp, &word, &Scalar::one())
        })
        .collect();
    for (i, ki) in idx.iter().enumerate() {
        for (j, kj) in idx.iter().enumerate() {
            let label = || format!("<I^{} P^{} H^{} N^{}, mu^{} x^{} t^{} v^{}>", ki[0], ki[1], ki[2], ki[3], kj[0], kj[1], kj[2], kj[3]);
            let expected = if ki == kj { Scalar::int(ki.iter().map(|&e| factorial(e)).product()) } else { Scalar::zero() };
            let value = match &fs[j] {
                Ok(f) => engine.pair(&us[i], f),
                Err(e) => Err(e.clone().into()),
            };
            match value {
                Ok(v) => check.case(v == expected, || (label(), format!("got {}, expected {}", v, expected))),
                Err(e) => check.error(label(), e),
            }
        }
    }
    let mut report = Report::new("pairing");
    report.push(check);
    report
}

fn random_poly<R: Rng>(p: &Arc<Presentation>, rng: &mut R, max_degree: u32) -> NCPolynomial {
    let mut out = NCPolynomial::zero(p);
    for _ in 0..rng.gen_range(1..=2) {
        let c = Scalar::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2));
        out = &out + &NCPolynomial::term(p, random_monomial(p, rng, max_degree), c);
    }
    out
}

/// Bilinearity of the pairing and `⟨uv, f⟩ = ⟨u⊗v, Δf⟩` on random
/// low-degree instances; the left side peels `f`, the right side splits it.
pub fn check_pairing_bilinear(samples: usize, max_degree: u32, seed: u64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut engine = PairingEngine::new(DEFAULT_PAIRING_CAP.max(2 * max_degree));
    let up = engine.uq().clone();
    let fp = engine.fq().clone();
    let mut bilinear = Check::new("pairing.bilinear");
    let mut coproduct = Check::new("pairing.coproduct");
    for _ in 0..samples {
        let u1 = random_poly(&up, &mut rng, max_degree);
        let u2 = random_poly(&up, &mut rng, max_degree);
        let f1 = random_poly(&fp, &mut rng, max_degree);
        let f2 = random_poly(&fp, &mut rng, max_degree);
        let c = Scalar::ratio(rng.gen_range(-4..=4), 3);
        let label = || format!("u={}, v={}, f={}, g={}", u1, u2, f1, f2);
        let lin = (|| {
            let lhs = engine.pair(&(&u1 + &u2.scale(&c)), &(&f1 + &f2))?;
            let rhs = &(&engine.pair(&u1, &f1)? + &engine.pair(&u1, &f2)?)
                + &(&(&engine.pair(&u2, &f1)? + &engine.pair(&u2, &f2)?) * &c);
            Ok::<_, PairingError>(&lhs - &rhs)
        })();
        match lin {
            Ok(r) => bilinear.case(r.is_zero(), || (label(), r.to_string())),
            Err(e) => bilinear.error(label(), e),
        }
        let cop = (|| {
            let lhs = engine.pair(&u1.multiply(&u2)?, &f1)?;
            let mut rhs = Scalar::zero();
            for (a, b, k) in engine.fq_hopf().coproduct(&f1)?.terms() {
                let fa = NCPolynomial::term(&fp, a.clone(), Scalar::one());
                let fb = NCPolynomial::term(&fp, b.clone(), Scalar::one());
                rhs += &(&(k * &engine.pair(&u1, &fa)?) * &engine.pair(&u2, &fb)?);
            }
            Ok::<_, PairingError>(&lhs - &rhs)
        })();
        match cop {
            Ok(r) => coproduct.case(r.is_zero(), || (label(), r.to_string())),
            Err(e) => coproduct.error(label(), e),
        }
    }
    let mut report = Report::new("pairing");
    report.push(bilinear);
    report.push(coproduct);
    report
}
