//! Jet schemes of affine schemes: the rings `J_n R` with their derivation `T`,
//! jet ideals and jet points.

mod presentation;

use std::collections::BTreeMap;

pub use presentation::{RingDocument, RingJson, RingPresentation};

use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::poly::{factorial, Monomial, Polynomial, Rational, VarId};

/// `T` on the polynomial ring in all jet variables:
/// `T x_(-j-1) = (j+1) x_(-j-2)`, extended as a derivation.
pub fn derivation_t_unbounded(p: &Polynomial) -> Polynomial {
    derivation_t_impl(p, None)
}

fn derivation_t_impl(p: &Polynomial, top: Option<u32>) -> Polynomial {
    let mut out = Polynomial::zero();
    for (m, c) in p.terms() {
        for (v, e) in m.factors() {
            if top.is_some_and(|n| v.level() >= n) {
                continue;
            }
            let rest = m.without_one(v).expect("variable occurs in monomial");
            let next = Monomial::var(v.at_level(v.level() + 1));
            let coeff = c * Rational::from_integer((*e as i64 * (v.level() as i64 + 1)).into());
            out.add_term(rest.mul(&next), coeff);
        }
    }
    out
}

/// `T^k p / k!` with unbounded `T`.
pub fn negative_mode_unbounded(p: &Polynomial, k: u32) -> Polynomial {
    let mut q = p.clone();
    for _ in 0..k {
        q = derivation_t_unbounded(&q);
    }
    q.scale(&factorial(k).recip())
}

/// The jet ring `J_n R = k[x^i_(-j-1) : 0 ≤ j ≤ n] / (T^q f_m : 0 ≤ q ≤ n)`.
#[derive(Clone, Debug)]
pub struct JetRing {
    base: RingPresentation,
    level: u32,
    vars: Vec<VarId>,
    relations: Vec<Polynomial>,
    ideal: Ideal,
}

impl JetRing {
    pub fn new(base: &RingPresentation, level: u32) -> Self {
        let vars: Vec<VarId> = (0..=level)
            .flat_map(|j| base.vars().iter().map(move |x| x.at_level(j)))
            .collect();
        let mut relations = Vec::new();
        for f in base.relations() {
            let mut g = f.clone();
            for q in 0..=level {
                if q > 0 {
                    g = derivation_t_impl(&g, Some(level));
                }
                if !g.is_zero() {
                    relations.push(g.clone());
                }
            }
        }
        let ideal = Ideal::from_generators(relations.clone());
        JetRing {
            base: base.clone(),
            level,
            vars,
            relations,
            ideal,
        }
    }

    /// Sets the Gröbner budget used by this ring and the ideals built from it.
    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.ideal = self.ideal.with_budget(budget);
        self
    }

    pub fn budget(&self) -> &Budget {
        self.ideal.budget()
    }

    pub fn base(&self) -> &RingPresentation {
        &self.base
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Jet variables, level by level, each level in base order.
    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn contains_var(&self, v: &VarId) -> bool {
        v.level() <= self.level && self.base.vars().iter().any(|x| x.name() == v.name())
    }

    /// Generators `T^q f_m`, grouped by relation then by `q`.
    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    /// The ideal of jet relations in the polynomial ring on [`Self::vars`].
    pub fn relation_ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// `w(x_(-j-1)) = w(x) + j` when the base ring is graded.
    pub fn jet_weights(&self) -> Option<BTreeMap<VarId, u32>> {
        let w = self.base.weights()?;
        Some(
            self.vars
                .iter()
                .map(|v| (v.clone(), w[&v.at_level(0)] + v.level()))
                .collect(),
        )
    }

    /// `T` on `J_n R`; variables at level `n` are sent to zero.
    pub fn derivation_t(&self, p: &Polynomial) -> Polynomial {
        derivation_t_impl(p, Some(self.level))
    }

    /// `T^k p / k!` in `J_n R`.
    pub fn negative_mode(&self, p: &Polynomial, k: u32) -> Polynomial {
        let mut q = p.clone();
        for _ in 0..k {
            q = self.derivation_t(&q);
        }
        q.scale(&factorial(k).recip())
    }

    /// `J_n(I)`: generated by `T^q g` for `g` in `gens` and `q ≤ n`, together
    /// with the jet relations so that membership is decided in `J_n R`.
    pub fn jet_ideal(&self, gens: &[Polynomial]) -> Ideal {
        let mut all = Vec::new();
        for g in gens {
            let mut h = g.clone();
            for q in 0..=self.level {
                if q > 0 {
                    h = self.derivation_t(&h);
                }
                all.push(h.clone());
            }
        }
        all.extend(self.relations.iter().cloned());
        Ideal::from_generators(all).with_budget(self.budget().clone())
    }

    /// Reduces modulo the jet relations.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        self.ideal.reduce(p)
    }
}

pub fn build_jet_ring(base: &RingPresentation, level: u32) -> JetRing {
    JetRing::new(base, level)
}

pub fn derivation_t(jr: &JetRing, p: &Polynomial) -> Polynomial {
    jr.derivation_t(p)
}

pub fn negative_mode(jr: &JetRing, p: &Polynomial, k: u32) -> Polynomial {
    jr.negative_mode(p, k)
}

pub fn jet_ideal(jr: &JetRing, gens: &[Polynomial]) -> Ideal {
    jr.jet_ideal(gens)
}

/// A rational point of `J_n X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetPoint {
    level: u32,
    coords: BTreeMap<VarId, Rational>,
}

impl JetPoint {
    /// Requires every jet variable to be assigned, no foreign variables, and
    /// every jet relation to vanish.
    pub fn new(jr: &JetRing, coords: BTreeMap<VarId, Rational>) -> Result<Self> {
        if let Some(v) = coords.keys().find(|v| !jr.contains_var(v)) {
            return Err(Error::InvalidInput(format!(
                "{v} is not a variable of the jet ring"
            )));
        }
        if let Some(v) = jr.vars().iter().find(|v| !coords.contains_key(v)) {
            return Err(Error::MissingAssignment(v.clone()));
        }
        for f in jr.relations() {
            let value = f.evaluate(&coords)?;
            if !num_traits::Zero::is_zero(&value) {
                return Err(Error::PointNotOnVariety {
                    relation: f.to_string(),
                    value: value.to_string(),
                });
            }
        }
        Ok(JetPoint {
            level: jr.level(),
            coords,
        })
    }

    /// From truncated power series `x(t) = Σ c_j t^j`: the coordinate
    /// `x_(-j-1)` is `c_j`. Missing coefficients are zero.
    pub fn from_series(jr: &JetRing, series: &BTreeMap<VarId, Vec<Rational>>) -> Result<Self> {
        let mut coords = BTreeMap::new();
        for x in jr.base().vars() {
            let cs = series
                .get(x)
                .ok_or_else(|| Error::MissingAssignment(x.clone()))?;
            for j in 0..=jr.level() {
                let c = cs.get(j as usize).cloned().unwrap_or_default();
                coords.insert(x.at_level(j), c);
            }
        }
        Self::new(jr, coords)
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coords(&self) -> &BTreeMap<VarId, Rational> {
        &self.coords
    }

    pub fn coord(&self, v: &VarId) -> Option<&Rational> {
        self.coords.get(v)
    }

    pub fn evaluate(&self, p: &Polynomial) -> Result<Rational> {
        p.evaluate(&self.coords)
    }
}

/// The constant jet over a point of `X`: base coordinates kept, higher zero.
pub fn iota_point(jr: &JetRing, base_point: &BTreeMap<VarId, Rational>) -> Result<JetPoint> {
    let mut coords = BTreeMap::new();
    for v in jr.vars() {
        let c = if v.is_base() {
            base_point
                .get(v)
                .cloned()
                .ok_or_else(|| Error::MissingAssignment(v.clone()))?
        } else {
            Rational::default()
        };
        coords.insert(v.clone(), c);
    }
    JetPoint::new(jr, coords)
}

/// The image of a point under `π_{n,m}: J_n X → J_m X`.
pub fn truncate_point(pt: &JetPoint, m: u32) -> Result<JetPoint> {
    if m > pt.level {
        return Err(Error::InvalidInput(format!(
            "cannot truncate a level {} jet to level {m}",
            pt.level
        )));
    }
    let coords = pt
        .coords
        .iter()
        .filter(|(v, _)| v.level() <= m)
        .map(|(v, c)| (v.clone(), c.clone()))
        .collect();
    Ok(JetPoint { level: m, coords })
}
