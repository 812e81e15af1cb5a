//! Modes `a_(k) b` of the vertex Poisson algebra on jet polynomials, computed
//! from the axioms alone: Leibniz in `b`, the right Leibniz rule to split
//! products in `a`, translation covariance for `T` in `a`, and skew-symmetry
//! to reduce to the base rule `x_(0) y = {x, y}`, `x_(k) y = 0` for `k > 0`.
//!
//! `T` is never truncated here, so results may involve variables above the
//! level of the inputs.

use std::cell::RefCell;
use std::collections::HashMap;

use super::PoissonStructure;
use crate::jet::negative_mode_unbounded;
use crate::poly::{binomial, Monomial, Polynomial, Rational, VarId};

pub(crate) struct ModeEngine<'a> {
    ps: &'a PoissonStructure,
    cache: RefCell<HashMap<(Monomial, u32, VarId), Polynomial>>,
}

fn sign(odd: bool) -> Rational {
    Rational::from_integer(if odd { (-1).into() } else { 1.into() })
}

impl<'a> ModeEngine<'a> {
    pub(crate) fn new(ps: &'a PoissonStructure) -> Self {
        ModeEngine {
            ps,
            cache: RefCell::new(HashMap::new()),
        }
    }

    /// `a_(k) b`.
    pub(crate) fn act(&self, a: &Polynomial, k: u32, b: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in a.terms() {
            if ma.is_one() {
                continue;
            }
            for (mb, cb) in b.terms() {
                for (v, e) in mb.factors() {
                    let r = self.mono_on_var(ma, k, v);
                    if r.is_zero() {
                        continue;
                    }
                    let rest = mb.without_one(v).expect("variable occurs in monomial");
                    let c = ca * cb * Rational::from_integer((*e).into());
                    out += &r.mul_monomial(&c, &rest);
                }
            }
        }
        out
    }

    fn mono_on_var(&self, a: &Monomial, k: u32, v: &VarId) -> Polynomial {
        // every mode above the total jet weight vanishes
        if k > a.jet_weight() + v.level() {
            return Polynomial::zero();
        }
        let key = (a.clone(), k, v.clone());
        if let Some(r) = self.cache.borrow().get(&key) {
            return r.clone();
        }
        let r = if a.degree() == 1 {
            self.var_on_var(&a.factors()[0].0, k, v)
        } else {
            // (u w)_(k) v = Σ_i (T^i w / i!) u_(k+i) v + (T^i u / i!) w_(k+i) v
            let u = a.factors()[0].0.clone();
            let w = a.without_one(&u).expect("variable occurs in monomial");
            let um = Monomial::var(u);
            let one = Rational::from_integer(1.into());
            let up = Polynomial::term(one.clone(), um.clone());
            let wp = Polynomial::term(one, w.clone());
            let bound = a.jet_weight() + v.level();
            let mut out = Polynomial::zero();
            for i in 0..=bound - k {
                let x = self.mono_on_var(&um, k + i, v);
                if !x.is_zero() {
                    out += &(&negative_mode_unbounded(&wp, i) * &x);
                }
                let y = self.mono_on_var(&w, k + i, v);
                if !y.is_zero() {
                    out += &(&negative_mode_unbounded(&up, i) * &y);
                }
            }
            out
        };
        self.cache.borrow_mut().insert(key, r.clone());
        r
    }

    /// `u = x_(-p-1) = T^p x / p!`, so `u_(k) = (-1)^p C(k, p) x_(k-p)`.
    fn var_on_var(&self, u: &VarId, k: u32, v: &VarId) -> Polynomial {
        let p = u.level();
        if k < p {
            return Polynomial::zero();
        }
        let c = sign(p % 2 == 1) * binomial(k, p);
        self.base_on_var(&u.at_level(0), k - p, v).scale(&c)
    }

    /// `x_(m) v = Σ_j (-1)^(m+j+1) / j! T^j (v_(m+j) x)` with
    /// `v = y_(-q-1)` and `v_(r) x = (-1)^q C(r, q) y_(r-q) x`.
    fn base_on_var(&self, x: &VarId, m: u32, v: &VarId) -> Polynomial {
        let q = v.level();
        let y = v.at_level(0);
        let xi = self.ps.index_of(x).expect("source variable in bracket");
        let yi = self.ps.index_of(&y).expect("target variable in bracket");
        let mut out = Polynomial::zero();
        for j in 0..=q {
            let r = m + j;
            // only y_(0) x = {y, x} survives among base modes
            if r != q {
                continue;
            }
            let inner = self
                .ps
                .entry(yi, xi)
                .scale(&(sign(q % 2 == 1) * binomial(r, q)));
            let c = sign((m + j + 1) % 2 == 1);
            out += &negative_mode_unbounded(&inner, j).scale(&c);
        }
        out
    }
}
