//! Randomized checks of the vertex Poisson axioms on jet polynomials.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::modes::ModeEngine;
use super::PoissonStructure;
use crate::error::Result;
use crate::jet::{derivation_t_unbounded, negative_mode_unbounded, JetRing};
use crate::poly::{binomial, Monomial, Polynomial, Rational};

/// One failed instance of an axiom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub a: String,
    pub b: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<String>,
    pub modes: Vec<u32>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom: String,
    pub samples: usize,
    pub failures: Vec<AxiomFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub seed: u64,
    pub level: u32,
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.failures.is_empty())
    }

    pub fn result(&self, axiom: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }
}

pub const AXIOMS: [&str; 5] = ["translation", "skew-symmetry", "commutator", "leibniz", "right-leibniz"];

struct Checker<'a> {
    jr: &'a JetRing,
    engine: ModeEngine<'a>,
    rings: BTreeMap<u32, JetRing>,
}

impl Checker<'_> {
    /// `lhs = rhs` in `J_L R`, with `L` large enough to hold both sides.
    fn equal(&mut self, lhs: &Polynomial, rhs: &Polynomial) -> Result<bool> {
        let diff = lhs - rhs;
        if diff.is_zero() {
            return Ok(true);
        }
        if self.jr.base().relations().is_empty() {
            return Ok(false);
        }
        let level = [lhs, rhs]
            .iter()
            .filter_map(|p| p.max_level())
            .max()
            .unwrap_or(0)
            .max(self.jr.level());
        let base = self.jr.base();
        let ring = self
            .rings
            .entry(level)
            .or_insert_with(|| JetRing::new(base, level).with_budget(self.jr.budget().clone()));
        ring.relation_ideal().contains(&diff)
    }

    fn act(&self, a: &Polynomial, k: u32, b: &Polynomial) -> Polynomial {
        self.engine.act(a, k, b)
    }
}

fn random_poly(rng: &mut ChaCha8Rng, jr: &JetRing) -> Polynomial {
    let vars = jr.vars();
    let mut p = Polynomial::zero();
    while p.is_zero() {
        for _ in 0..rng.gen_range(1..=2) {
            let mut m = Monomial::one();
            for _ in 0..rng.gen_range(1..=2) {
                m = m.mul(&Monomial::var(
                    vars.choose(rng).expect("jet ring has variables").clone(),
                ));
            }
            let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
            p.add_term(m, Rational::from_integer(c.into()));
        }
    }
    p
}

fn max_level(p: &Polynomial) -> u32 {
    p.max_level().unwrap_or(0)
}

fn sign(odd: bool) -> Rational {
    Rational::from_integer(if odd { (-1).into() } else { 1.into() })
}

/// Checks each axiom on `samples` random instances drawn from a seeded
/// generator. Identities are evaluated with untruncated `T` and compared
/// modulo the jet relations at a level that holds both sides.
pub fn pva_axiom_suite(
    jr: &JetRing,
    ps: &PoissonStructure,
    samples: usize,
    seed: u64,
) -> Result<AxiomReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ck = Checker {
        jr,
        engine: ModeEngine::new(ps),
        rings: BTreeMap::new(),
    };
    let n = jr.level();
    let mut results = Vec::new();
    for axiom in AXIOMS {
        let mut failures = Vec::new();
        for _ in 0..samples {
            let a = random_poly(&mut rng, jr);
            let b = random_poly(&mut rng, jr);
            let c = random_poly(&mut rng, jr);
            let m = rng.gen_range(0..=n);
            let k = rng.gen_range(0..=n);
            let (lhs, rhs, uses_c, modes) = match axiom {
                "translation" => {
                    let lhs = ck.act(&derivation_t_unbounded(&a), m, &b);
                    let rhs = if m == 0 {
                        Polynomial::zero()
                    } else {
                        ck.act(&a, m - 1, &b)
                            .scale(&-Rational::from_integer(m.into()))
                    };
                    (lhs, rhs, false, vec![m])
                }
                "skew-symmetry" => {
                    let lhs = ck.act(&a, m, &b);
                    let top = b.jet_weight() + max_level(&a);
                    let mut rhs = Polynomial::zero();
                    for j in 0..=top.saturating_sub(m) {
                        let inner = ck.act(&b, m + j, &a);
                        rhs +=
                            &negative_mode_unbounded(&inner, j).scale(&sign((m + j + 1) % 2 == 1));
                    }
                    (lhs, rhs, false, vec![m])
                }
                "commutator" => {
                    let lhs =
                        &ck.act(&a, m, &ck.act(&b, k, &c)) - &ck.act(&b, k, &ck.act(&a, m, &c));
                    let mut rhs = Polynomial::zero();
                    for j in 0..=m {
                        let ab = ck.act(&a, j, &b);
                        rhs += &ck.act(&ab, m + k - j, &c).scale(&binomial(m, j));
                    }
                    (lhs, rhs, true, vec![m, k])
                }
                "leibniz" => {
                    let lhs = ck.act(&a, m, &(&b * &c));
                    let rhs = &(&ck.act(&a, m, &b) * &c) + &(&b * &ck.act(&a, m, &c));
                    (lhs, rhs, true, vec![m])
                }
                _ => {
                    let lhs = ck.act(&(&a * &b), m, &c);
                    let top = a.jet_weight() + b.jet_weight() + max_level(&c);
                    let mut rhs = Polynomial::zero();
                    for i in 0..=top.saturating_sub(m) {
                        rhs += &(&negative_mode_unbounded(&b, i) * &ck.act(&a, m + i, &c));
                        rhs += &(&negative_mode_unbounded(&a, i) * &ck.act(&b, m + i, &c));
                    }
                    (lhs, rhs, true, vec![m])
                }
            };
            if !ck.equal(&lhs, &rhs)? {
                failures.push(AxiomFailure {
                    a: a.to_string(),
                    b: b.to_string(),
                    c: uses_c.then(|| c.to_string()),
                    modes,
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
        results.push(AxiomResult {
            axiom: axiom.to_string(),
            samples,
            failures,
        });
    }
    Ok(AxiomReport {
        seed,
        level: n,
        results,
    })
}
