//! Degree-truncated vertex Poisson centers and chiral Poisson cores, by
//! linear algebra on normal-form coordinates.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::modes::ModeEngine;
use super::PoissonStructure;
use crate::error::{Error, Result};
use crate::groebner::{weighted_degree, Ideal, MonomialOrder};
use crate::jet::JetRing;
use crate::linalg::{kernel_of_columns, rref};
use crate::poly::{Monomial, Polynomial, Rational, VarId};

/// A positive grading on the jet variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Every variable has degree one.
    Total,
    /// Explicit positive weights on every jet variable.
    Weighted(BTreeMap<VarId, u32>),
}

impl Grading {
    pub fn degree(&self, m: &Monomial) -> u64 {
        match self {
            Grading::Total => m.degree() as u64,
            Grading::Weighted(w) => weighted_degree(m, w),
        }
    }

    /// Largest degree among the terms of `p`; zero for constants.
    pub fn top_degree(&self, p: &Polynomial) -> u64 {
        p.terms().map(|(m, _)| self.degree(m)).max().unwrap_or(0)
    }

    fn order(&self) -> MonomialOrder {
        match self {
            Grading::Total => MonomialOrder::degrevlex(),
            Grading::Weighted(w) => MonomialOrder::weighted(w.clone()),
        }
    }

    fn check(&self, vars: &[VarId]) -> Result<()> {
        if let Grading::Weighted(w) = self {
            for v in vars {
                match w.get(v) {
                    None => return Err(Error::MissingWeight(v.clone())),
                    Some(0) => {
                        return Err(Error::InvalidInput(format!(
                            "grading is not positive on {v}"
                        )))
                    }
                    Some(_) => {}
                }
            }
        }
        Ok(())
    }
}

fn monomials_upto(vars: &[VarId], grading: &Grading, d: u64) -> Vec<Monomial> {
    fn go(vars: &[VarId], grading: &Grading, left: u64, cur: Monomial, out: &mut Vec<Monomial>) {
        let Some((v, rest)) = vars.split_first() else {
            out.push(cur);
            return;
        };
        let step = grading.degree(&Monomial::var(v.clone()));
        let mut m = cur;
        let mut used = 0;
        loop {
            go(rest, grading, left - used, m.clone(), out);
            if used + step > left {
                break;
            }
            used += step;
            m = m.mul(&Monomial::var(v.clone()));
        }
    }
    let mut out = Vec::new();
    go(vars, grading, d, Monomial::one(), &mut out);
    out
}

/// Coordinates inside `V_{≤d}` and the terms left outside it.
type Split = (Vec<Rational>, Vec<(Monomial, Rational)>);

/// `V_{≤d}`: standard monomials of degree `≤ d` modulo an ideal `Q`, which
/// represent the degree `≤ d` part of the quotient.
struct Truncation {
    q: Ideal,
    basis: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl Truncation {
    fn new(jr: &JetRing, extra: &[Polynomial], grading: &Grading, d: u64) -> Result<Self> {
        grading.check(jr.vars())?;
        let mut gens = jr.relations().to_vec();
        gens.extend(extra.iter().cloned());
        let q = Ideal::new(gens, grading.order()).with_budget(jr.budget().clone());
        let lms = q.leading_monomials()?;
        let mut basis: Vec<Monomial> = monomials_upto(jr.vars(), grading, d)
            .into_iter()
            .filter(|m| !lms.iter().any(|l| l.divides(m)))
            .collect();
        basis.sort_by(|a, b| {
            grading
                .degree(a)
                .cmp(&grading.degree(b))
                .then_with(|| a.cmp(b))
        });
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(Truncation { q, basis, index })
    }

    fn poly(&self, coeffs: &[Rational]) -> Polynomial {
        Polynomial::from_terms(
            coeffs
                .iter()
                .zip(&self.basis)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, m)| (m.clone(), c.clone())),
        )
    }

    /// Normal form split into `V_{≤d}` coordinates and the remaining terms.
    fn coords(&self, p: &Polynomial) -> Result<Split> {
        let nf = self.q.reduce(p)?;
        let mut inside = vec![Rational::zero(); self.basis.len()];
        let mut outside = Vec::new();
        for (m, c) in nf.terms() {
            match self.index.get(m) {
                Some(&i) => inside[i] = c.clone(),
                None => outside.push((m.clone(), c.clone())),
            }
        }
        Ok((inside, outside))
    }

    /// Canonical basis of a subspace: reduced echelon form with columns taken
    /// from the highest degree down, so each element has a distinct top term.
    fn canonical(&self, vectors: Vec<Vec<Rational>>) -> Vec<Polynomial> {
        let n = self.basis.len();
        let rev: Vec<Vec<Rational>> = vectors
            .into_iter()
            .map(|v| v.into_iter().rev().collect())
            .collect();
        let (rows, _) = rref(rev);
        let mut out: Vec<Polynomial> = rows
            .into_iter()
            .map(|r| {
                let mut v: Vec<Rational> = r;
                v.reverse();
                debug_assert_eq!(v.len(), n);
                self.poly(&v)
            })
            .collect();
        out.reverse();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    Inside(usize),
    Outside(Monomial),
}

/// Basis of `{z ∈ (J_n R / quotient)_{≤d} : x^i_(k) z ∈ quotient for all
/// base i and 0 ≤ k ≤ n}`, in canonical echelon form, lowest degree first.
pub fn vp_center_upto(
    jr: &JetRing,
    ps: &PoissonStructure,
    quotient: &[Polynomial],
    d: u64,
    grading: &Grading,
) -> Result<Vec<Polynomial>> {
    let tr = Truncation::new(jr, quotient, grading, d)?;
    let engine = ModeEngine::new(ps);
    let sources: Vec<Polynomial> = ps.vars().iter().cloned().map(Polynomial::var).collect();
    let mut columns = Vec::with_capacity(tr.basis.len());
    for m in &tr.basis {
        let b = Polynomial::term(Rational::from_integer(1.into()), m.clone());
        let mut col: BTreeMap<(usize, u32, Monomial), Rational> = BTreeMap::new();
        for (i, x) in sources.iter().enumerate() {
            for k in 0..=jr.level() {
                let img = tr.q.reduce(&engine.act(x, k, &b))?;
                for (mm, c) in img.terms() {
                    col.insert((i, k, mm.clone()), c.clone());
                }
            }
        }
        columns.push(col);
    }
    Ok(tr.canonical(kernel_of_columns(&columns)))
}

/// Result of [`chiral_core_upto`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreResult {
    /// Basis of the stabilized subspace in canonical echelon form.
    pub basis: Vec<Polynomial>,
    /// Dimension after each step, starting with `dim I_{≤d}`.
    pub dims: Vec<usize>,
}

/// Degree-`d` truncation of the chiral Poisson core of `⟨gens⟩ ⊂ J_n R`:
/// the fixed point of `J ↦ {z ∈ J : x^i_(k) z ∈ J for all i, k ≤ n}` started
/// from `⟨gens⟩_{≤d}`. Membership of `x^i_(k) z` is tested inside the
/// computed degree `≤ d` subspace.
///
/// Fails with [`Error::NotConverged`] when `max_iter` steps do not reach the
/// fixed point.
pub fn chiral_core_upto(
    jr: &JetRing,
    ps: &PoissonStructure,
    gens: &[Polynomial],
    d: u64,
    max_iter: usize,
    grading: &Grading,
) -> Result<CoreResult> {
    let tr = Truncation::new(jr, &[], grading, d)?;
    let n = tr.basis.len();

    // I_{≤d}: combinations of standard monomials reducing to zero mod I + Q
    let iq = tr.q.sum(&Ideal::new(gens.to_vec(), tr.q.order().clone()));
    let columns: Vec<BTreeMap<Monomial, Rational>> = tr
        .basis
        .iter()
        .map(|m| {
            let b = Polynomial::term(Rational::from_integer(1.into()), m.clone());
            iq.reduce(&b)
                .map(|r| r.terms().map(|(m, c)| (m.clone(), c.clone())).collect())
        })
        .collect::<Result<_>>()?;
    let mut current = kernel_of_columns(&columns);
    let mut dims = vec![current.len()];

    let engine = ModeEngine::new(ps);
    let sources: Vec<Polynomial> = ps.vars().iter().cloned().map(Polynomial::var).collect();
    for _ in 0..max_iter {
        let (rows, pivots) = rref(current.clone());
        let mut columns: Vec<BTreeMap<(usize, u32, Slot), Rational>> = Vec::new();
        for vec in &current {
            let z = tr.poly(vec);
            let mut col = BTreeMap::new();
            for (i, x) in sources.iter().enumerate() {
                for k in 0..=jr.level() {
                    let (mut inside, outside) = tr.coords(&engine.act(x, k, &z))?;
                    for (row, &pc) in rows.iter().zip(&pivots) {
                        if inside[pc].is_zero() {
                            continue;
                        }
                        let f = inside[pc].clone();
                        for (a, r) in inside.iter_mut().zip(row) {
                            *a -= &f * r;
                        }
                    }
                    for (j, c) in inside.into_iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                        col.insert((i, k, Slot::Inside(j)), c);
                    }
                    for (m, c) in outside {
                        col.insert((i, k, Slot::Outside(m)), c);
                    }
                }
            }
            columns.push(col);
        }
        let combos = kernel_of_columns(&columns);
        let next: Vec<Vec<Rational>> = combos
            .iter()
            .map(|c| {
                let mut v = vec![Rational::zero(); n];
                for (cb, b) in c.iter().zip(&current) {
                    if cb.is_zero() {
                        continue;
                    }
                    for (a, x) in v.iter_mut().zip(b) {
                        *a += cb * x;
                    }
                }
                v
            })
            .collect();
        let stable = next.len() == current.len();
        current = next;
        dims.push(current.len());
        if stable {
            return Ok(CoreResult {
                basis: tr.canonical(current),
                dims,
            });
        }
    }
    Err(Error::NotConverged {
        iterations: max_iter,
        last: tr.canonical(current),
    })
}

/// Dimensions of the graded pieces of a graded subspace given by any basis:
/// every element is split into homogeneous components, and the components of
/// each degree are counted up to linear dependence. Returns `None` when the
/// span is not graded.
pub fn graded_dims(
    basis: &[Polynomial],
    degree: impl Fn(&Monomial) -> u64,
) -> Option<BTreeMap<u64, usize>> {
    let mut pieces: BTreeMap<u64, Vec<Polynomial>> = BTreeMap::new();
    for p in basis {
        let mut split: BTreeMap<u64, Polynomial> = BTreeMap::new();
        for (m, c) in p.terms() {
            split
                .entry(degree(m))
                .or_insert_with(Polynomial::zero)
                .add_term(m.clone(), c.clone());
        }
        for (d, q) in split {
            pieces.entry(d).or_default().push(q);
        }
    }
    let mut dims = BTreeMap::new();
    for (d, qs) in pieces {
        let keys: BTreeSet<Monomial> = qs
            .iter()
            .flat_map(|q| q.terms().map(|(m, _)| m.clone()))
            .collect();
        let rows: Vec<Vec<Rational>> = qs
            .iter()
            .map(|q| keys.iter().map(|m| q.coeff(m)).collect())
            .collect();
        dims.insert(d, crate::linalg::rank(&rows));
    }
    (dims.values().sum::<usize>() == basis.len()).then_some(dims)
}
