use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Arc, OnceLock};

use super::engine::{self, DPoly};
use super::order::{Layout, MonomialOrder, OrderKind};
use super::Budget;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, VarId};

#[derive(Debug)]
struct GbData {
    layout: Layout,
    dense: Vec<DPoly>,
    basis: Vec<Polynomial>,
}

/// A polynomial ideal given by generators, with a lazily computed reduced
/// Gröbner basis for its monomial order.
#[derive(Clone, Debug)]
pub struct Ideal {
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    budget: Budget,
    gb: OnceLock<Arc<GbData>>,
}

impl PartialEq for Ideal {
    /// Structural equality of generator lists and orders; use
    /// [`Ideal::equals`] for equality of ideals.
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.order == other.order
    }
}

impl Ideal {
    pub fn new(generators: Vec<Polynomial>, order: MonomialOrder) -> Self {
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ideal {
            generators,
            order,
            budget: Budget::default(),
            gb: OnceLock::new(),
        }
    }

    /// Ideal under degrevlex.
    pub fn from_generators(generators: Vec<Polynomial>) -> Self {
        Self::new(generators, MonomialOrder::degrevlex())
    }

    pub fn zero() -> Self {
        Self::from_generators(Vec::new())
    }

    pub fn unit() -> Self {
        Self::from_generators(vec![Polynomial::one()])
    }

    pub fn with_budget(mut self, budget: Budget) -> Self {
        self.budget = budget;
        self.gb = OnceLock::new();
        self
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn budget(&self) -> &Budget {
        &self.budget
    }

    /// The same generators under another order (cache dropped).
    pub fn with_order(&self, order: MonomialOrder) -> Ideal {
        Ideal::new(self.generators.clone(), order).with_budget(self.budget.clone())
    }

    /// `self + other`, keeping `self`'s order and budget.
    pub fn sum(&self, other: &Ideal) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(gens, self.order.clone()).with_budget(self.budget.clone())
    }

    pub fn vars(&self) -> BTreeSet<VarId> {
        self.generators.iter().flat_map(Polynomial::vars).collect()
    }

    fn data(&self) -> Result<&Arc<GbData>> {
        if let Some(d) = self.gb.get() {
            return Ok(d);
        }
        let layout = Layout::new(self.order.clone(), &self.vars());
        let dense = engine::groebner(&layout, &self.generators, &self.budget)?;
        let basis = dense
            .iter()
            .map(|g| engine::to_sparse(&layout, g))
            .collect();
        // a concurrent caller may have won the race; both results are identical
        Ok(self.gb.get_or_init(|| {
            Arc::new(GbData {
                layout,
                dense,
                basis,
            })
        }))
    }

    /// The reduced Gröbner basis, sorted by increasing leading monomial.
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        Ok(&self.data()?.basis)
    }

    /// Leading monomials of the reduced Gröbner basis.
    pub fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        let d = self.data()?;
        Ok(d.dense
            .iter()
            .map(|g| d.layout.sparse(&g.last().unwrap().0))
            .collect())
    }

    pub fn is_unit(&self) -> Result<bool> {
        let gb = self.groebner_basis()?;
        Ok(gb.len() == 1 && gb[0].is_constant())
    }

    /// Normal form of `p` modulo the ideal.
    pub fn reduce(&self, p: &Polynomial) -> Result<Polynomial> {
        let d = self.data()?;
        if p.vars().iter().all(|v| d.layout.contains(v)) {
            let refs: Vec<&DPoly> = d.dense.iter().collect();
            let r = engine::reduce(&d.layout, engine::to_dense(&d.layout, p), &refs);
            return Ok(engine::to_sparse(&d.layout, &r));
        }
        // extra variables: the basis stays a Gröbner basis in the larger ring
        let mut vars: BTreeSet<VarId> = d.layout.vars.iter().cloned().collect();
        vars.extend(p.vars());
        let layout = Layout::new(self.order.clone(), &vars);
        let dense: Vec<DPoly> = d
            .basis
            .iter()
            .map(|g| engine::to_dense(&layout, g))
            .collect();
        let refs: Vec<&DPoly> = dense.iter().collect();
        let r = engine::reduce(&layout, engine::to_dense(&layout, p), &refs);
        Ok(engine::to_sparse(&layout, &r))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.reduce(p)?.is_zero())
    }

    /// Decides `p ∈ √I` by testing `1 ∈ I + ⟨1 − t·p⟩` for a fresh `t`.
    pub fn radical_contains(&self, p: &Polynomial) -> Result<bool> {
        let mut used = self.vars();
        used.extend(p.vars());
        let mut k = 0;
        let t = loop {
            let t = VarId::base(&format!("rabinowitsch{k}"));
            if !used.contains(&t) {
                break t;
            }
            k += 1;
        };
        let aux = &Polynomial::one() - &(&Polynomial::var(t) * p);
        let mut gens = self.generators.clone();
        gens.push(aux);
        Ideal::new(gens, MonomialOrder::degrevlex())
            .with_budget(self.budget.clone())
            .is_unit()
    }

    /// Equality of ideals, decided by comparing reduced Gröbner bases under
    /// `self`'s order.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        let a = self.groebner_basis()?;
        if other.order == self.order {
            return Ok(a == other.groebner_basis()?);
        }
        let o = other.with_order(self.order.clone());
        Ok(a == o.groebner_basis()?)
    }

    /// `I ∩ k[keep]`, via an elimination order that weights the eliminated
    /// variables by one and the kept ones by zero.
    pub fn eliminate(&self, keep: &BTreeSet<VarId>) -> Result<Ideal> {
        let weights = self.vars().into_iter().map(|v| {
            let w = u32::from(!keep.contains(&v));
            (v, w)
        });
        let elim = self.with_order(self.order.with_kind(OrderKind::Weighted(weights.collect())));
        let gens: Vec<Polynomial> = elim
            .groebner_basis()?
            .iter()
            .filter(|g| g.vars().is_subset(keep))
            .cloned()
            .collect();
        Ok(Ideal::new(gens, self.order.clone()).with_budget(self.budget.clone()))
    }

    /// Initial-form ideal for a non-negative weight vector: the ideal of
    /// top-weight components of all elements. Returned under `self`'s order.
    pub fn initial_ideal(&self, weights: &BTreeMap<VarId, u32>) -> Result<Ideal> {
        if let Some(v) = self.vars().into_iter().find(|v| !weights.contains_key(v)) {
            return Err(Error::MissingWeight(v));
        }
        let w = self.with_order(self.order.with_kind(OrderKind::Weighted(weights.clone())));
        let gens = w
            .groebner_basis()?
            .iter()
            .map(|g| initial_form(g, weights))
            .collect();
        Ok(Ideal::new(gens, self.order.clone()).with_budget(self.budget.clone()))
    }

    /// Canonical text: one basis element per line, sorted by increasing
    /// leading monomial, terms printed largest first under the ideal's order.
    pub fn gb_text(&self) -> Result<String> {
        let mut s = String::new();
        for g in self.groebner_basis()? {
            s.push_str(&g.fmt_sorted_by(|a, b| self.order.compare(a, b)));
            s.push('\n');
        }
        Ok(s)
    }
}

/// Weighted degree of a monomial.
pub fn weighted_degree(m: &Monomial, weights: &BTreeMap<VarId, u32>) -> u64 {
    m.factors()
        .iter()
        .map(|(v, e)| *e as u64 * weights.get(v).copied().unwrap_or(0) as u64)
        .sum()
}

/// Top-weight homogeneous component of `p`.
pub fn initial_form(p: &Polynomial, weights: &BTreeMap<VarId, u32>) -> Polynomial {
    let top = p.terms().map(|(m, _)| weighted_degree(m, weights)).max();
    match top {
        None => Polynomial::zero(),
        Some(t) => Polynomial::from_terms(
            p.terms()
                .filter(|(m, _)| weighted_degree(m, weights) == t)
                .map(|(m, c)| (m.clone(), c.clone())),
        ),
    }
}

pub fn member(p: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(p)
}

pub fn radical_member(p: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.radical_contains(p)
}

pub fn ideal_equal(a: &Ideal, b: &Ideal) -> Result<bool> {
    a.equals(b)
}

pub fn eliminate(ideal: &Ideal, keep: &BTreeSet<VarId>) -> Result<Ideal> {
    ideal.eliminate(keep)
}

pub fn initial_ideal(ideal: &Ideal, weights: &BTreeMap<VarId, u32>) -> Result<Ideal> {
    ideal.initial_ideal(weights)
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant(m: &[Vec<Polynomial>]) -> Polynomial {
    let n = m.len();
    match n {
        0 => Polynomial::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut acc = Polynomial::zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(c, _)| *c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &m[0][j] * &determinant(&minor);
                if j % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All `k × k` minors of `m`, in row-major combination order, zeros dropped.
pub fn minors(m: &[Vec<Polynomial>], k: usize) -> Vec<Polynomial> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if k > rows.min(cols) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for rs in combinations(rows, k) {
        for cs in combinations(cols, k) {
            let sub: Vec<Vec<Polynomial>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                .collect();
            let d = determinant(&sub);
            if !d.is_zero() {
                out.push(d);
            }
        }
    }
    out
}

/// Ideal generated by the `k × k` minors. When `k` exceeds the matrix size
/// there are no minors and the zero ideal is returned.
pub fn minors_ideal(m: &[Vec<Polynomial>], k: usize) -> Ideal {
    Ideal::from_generators(minors(m, k))
}
