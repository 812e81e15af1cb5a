//! Dense-exponent Buchberger kernel.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use super::order::{DMono, Layout};
use super::Budget;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};

/// Terms in increasing order, leading term last.
pub(crate) type DPoly = Vec<(DMono, Rational)>;

pub(crate) fn to_dense(layout: &Layout, p: &Polynomial) -> DPoly {
    let mut out: DPoly = p
        .terms()
        .map(|(m, c)| (layout.dense(m), c.clone()))
        .collect();
    out.sort_by(|a, b| layout.cmp(&a.0, &b.0));
    out
}

pub(crate) fn to_sparse(layout: &Layout, p: &DPoly) -> Polynomial {
    Polynomial::from_terms(p.iter().map(|(m, c)| (layout.sparse(m), c.clone())))
}

fn make_monic(p: &mut DPoly) {
    if let Some((_, lc)) = p.last() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in p.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// `p - c * m * g`, merging two ascending term lists.
fn sub_scaled(layout: &Layout, p: &DPoly, c: &Rational, m: &DMono, g: &DPoly) -> DPoly {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut gi = g.iter().map(|(gm, gc)| (gm.mul(m), gc * c)).peekable();
    let mut pi = p.iter().peekable();
    loop {
        match (pi.peek(), gi.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(pi.next().unwrap().clone()),
            (None, Some(_)) => {
                let (gm, gc) = gi.next().unwrap();
                out.push((gm, -gc));
            }
            (Some((pm, _)), Some((gm, _))) => match layout.cmp(pm, gm) {
                Ordering::Less => out.push(pi.next().unwrap().clone()),
                Ordering::Greater => {
                    let (gm, gc) = gi.next().unwrap();
                    out.push((gm, -gc));
                }
                Ordering::Equal => {
                    let (pm, pc) = pi.next().unwrap();
                    let (_, gc) = gi.next().unwrap();
                    let v = pc - gc;
                    if !v.is_zero() {
                        out.push((pm.clone(), v));
                    }
                }
            },
        }
    }
    out
}

/// Full reduction of `p` modulo a list of monic polynomials.
pub(crate) fn reduce(layout: &Layout, mut p: DPoly, basis: &[&DPoly]) -> DPoly {
    let mut rem_desc: DPoly = Vec::new();
    while let Some((lm, lc)) = p.last().cloned() {
        let divisor = basis
            .iter()
            .find(|g| g.last().is_some_and(|(gm, _)| gm.divides(&lm)));
        match divisor {
            Some(g) => {
                let q = lm.div(&g.last().unwrap().0);
                p = sub_scaled(layout, &p, &lc, &q, g);
            }
            None => {
                rem_desc.push(p.pop().unwrap());
            }
        }
    }
    rem_desc.reverse();
    rem_desc
}

fn spoly(layout: &Layout, f: &DPoly, g: &DPoly, lcm: &DMono) -> DPoly {
    let fm = &f.last().unwrap().0;
    let gm = &g.last().unwrap().0;
    let mf = lcm.div(fm);
    let mg = lcm.div(gm);
    let scaled_f: DPoly = f.iter().map(|(m, c)| (m.mul(&mf), c.clone())).collect();
    sub_scaled(layout, &scaled_f, &Rational::one(), &mg, g)
}

fn total_degree(p: &DPoly) -> u32 {
    p.iter().map(|(m, _)| m.deg).max().unwrap_or(0)
}

struct Pair {
    i: usize,
    j: usize,
    lcm: DMono,
    sugar: u32,
}

struct State<'a> {
    layout: &'a Layout,
    polys: Vec<DPoly>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
}

impl State<'_> {
    fn lm(&self, i: usize) -> &DMono {
        &self.polys[i].last().unwrap().0
    }

    fn active_refs(&self) -> Vec<&DPoly> {
        (0..self.polys.len())
            .filter(|&i| self.active[i])
            .map(|i| &self.polys[i])
            .collect()
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &DMono) -> u32 {
        let si = self.sugar[i] + lcm.deg - self.lm(i).deg;
        let sj = self.sugar[j] + lcm.deg - self.lm(j).deg;
        si.max(sj)
    }

    /// Inserts polynomial `h` (monic, reduced) with Gebauer–Möller pair pruning.
    fn insert(&mut self, h: DPoly, sugar: u32) {
        let hi = self.polys.len();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);
        let lh = self.lm(hi).clone();

        let mut c: Vec<(usize, DMono)> = (0..hi)
            .filter(|&g| self.active[g])
            .map(|g| (g, self.lm(g).lcm(&lh, self.layout)))
            .collect();
        let mut d: Vec<(usize, DMono)> = Vec::new();
        while !c.is_empty() {
            let (g1, l1) = c.remove(0);
            let disjoint = self.lm(g1).coprime(&lh);
            let dominated = c.iter().chain(d.iter()).any(|(_, l2)| l2.divides(&l1));
            if disjoint || !dominated {
                d.push((g1, l1));
            }
        }
        let e: Vec<(usize, DMono)> = d
            .into_iter()
            .filter(|(g, _)| !self.lm(*g).coprime(&lh))
            .collect();

        let old = std::mem::take(&mut self.pairs);
        for pr in old {
            let keep = !lh.divides(&pr.lcm)
                || self.lm(pr.i).lcm(&lh, self.layout) == pr.lcm
                || self.lm(pr.j).lcm(&lh, self.layout) == pr.lcm;
            if keep {
                self.pairs.push(pr);
            }
        }
        for (g, l) in e {
            let s = self.pair_sugar(g, hi, &l);
            self.pairs.push(Pair {
                i: g,
                j: hi,
                lcm: l,
                sugar: s,
            });
        }
        for g in 0..hi {
            if self.active[g] && lh.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        let layout = self.layout;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.sugar
                .cmp(&pb.sugar)
                .then_with(|| layout.cmp(&pa.lcm, &pb.lcm))
                .then((pa.i, pa.j).cmp(&(pb.i, pb.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced Gröbner basis of the given generators, sorted by increasing
/// leading monomial. The unit ideal yields `[1]`, the zero ideal `[]`.
pub(crate) fn groebner(
    layout: &Layout,
    gens: &[Polynomial],
    budget: &Budget,
) -> Result<Vec<DPoly>> {
    let mut input: Vec<DPoly> = gens
        .iter()
        .map(|g| to_dense(layout, g))
        .filter(|g| !g.is_empty())
        .collect();
    input.sort_by(|a, b| layout.cmp(&a.last().unwrap().0, &b.last().unwrap().0));

    let mut st = State {
        layout,
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
    };
    let unit = || vec![vec![(layout.one(), Rational::one())]];

    for g in input {
        if total_degree(&g) > budget.max_degree {
            return Err(Error::ResourceLimit {
                what: "total degree",
                limit: budget.max_degree as u64,
            });
        }
        let sugar = total_degree(&g);
        let mut h = reduce(layout, g, &st.active_refs());
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        if h.last().unwrap().0.deg == 0 {
            return Ok(unit());
        }
        st.insert(h, sugar);
    }

    let mut reductions: u64 = 0;
    while let Some(pr) = st.pop_pair() {
        reductions += 1;
        if reductions > budget.max_spairs {
            return Err(Error::ResourceLimit {
                what: "S-pair reductions",
                limit: budget.max_spairs,
            });
        }
        let s = spoly(layout, &st.polys[pr.i], &st.polys[pr.j], &pr.lcm);
        let mut h = reduce(layout, s, &st.active_refs());
        if h.is_empty() {
            continue;
        }
        if total_degree(&h) > budget.max_degree {
            return Err(Error::ResourceLimit {
                what: "total degree",
                limit: budget.max_degree as u64,
            });
        }
        make_monic(&mut h);
        if h.last().unwrap().0.deg == 0 {
            return Ok(unit());
        }
        st.insert(h, pr.sugar);
    }

    // the active leading monomials are pairwise non-dividing; interreduce tails
    let active: Vec<DPoly> = (0..st.polys.len())
        .filter(|&i| st.active[i])
        .map(|i| st.polys[i].clone())
        .collect();
    let mut out = Vec::with_capacity(active.len());
    for (k, g) in active.iter().enumerate() {
        let others: Vec<&DPoly> = active
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, q)| q)
            .collect();
        let mut r = reduce(layout, g.clone(), &others);
        make_monic(&mut r);
        out.push(r);
    }
    out.sort_by(|a, b| layout.cmp(&a.last().unwrap().0, &b.last().unwrap().0));
    Ok(out)
}
