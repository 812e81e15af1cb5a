//! The vertex Poisson algebra structure on `J_n R` induced by a Poisson
//! bracket on `R`: modes, chiral ideals, chiral cores and centers.

mod axioms;
mod modes;
mod poisson;
mod spaces;

pub use axioms::{pva_axiom_suite, AxiomFailure, AxiomReport, AxiomResult};
pub use poisson::PoissonStructure;
pub use spaces::{chiral_core_upto, graded_dims, vp_center_upto, CoreResult, Grading};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::jet::{JetRing, RingPresentation};
use crate::poly::{factorial, Polynomial, VarId};
use modes::ModeEngine;

/// Decides the Jacobi identity for all triples of generators and that
/// `{x^i, f_m}` lies in the ideal of relations, all modulo that ideal.
pub fn jacobi_check(ps: &PoissonStructure, ring: &RingPresentation) -> Result<bool> {
    let rel = ring.relation_ideal();
    let n = ps.dim();
    let xs: Vec<Polynomial> = ps.vars().iter().cloned().map(Polynomial::var).collect();
    for i in 0..n {
        for j in 0..n {
            if !rel.contains(&(ps.entry(i, j) + ps.entry(j, i)))? {
                return Ok(false);
            }
            for k in 0..n {
                let cyc = &(&ps.bracket(&xs[i], ps.entry(j, k))
                    + &ps.bracket(&xs[j], ps.entry(k, i)))
                    + &ps.bracket(&xs[k], ps.entry(i, j));
                if !rel.contains(&cyc)? {
                    return Ok(false);
                }
            }
        }
    }
    for x in &xs {
        for f in ring.relations() {
            if !rel.contains(&ps.bracket(x, f))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `x^i_(k) (T^q x^j) = q!/(q-k)! T^(q-k) {x^i, x^j}` for `q ≥ k`, zero
/// otherwise, with `T` the derivation of `J_n R`.
pub fn bracket_on_jet_vars(
    ps: &PoissonStructure,
    jr: &JetRing,
    i: usize,
    k: u32,
    j: usize,
    q: u32,
) -> Result<Polynomial> {
    let n = jr.level();
    if k > n || q > n {
        return Err(Error::InvalidInput(format!(
            "mode {k} and level {q} must not exceed the ring level {n}"
        )));
    }
    if i >= ps.dim() || j >= ps.dim() {
        return Err(Error::InvalidInput(format!(
            "variable index out of range (have {})",
            ps.dim()
        )));
    }
    if q < k {
        return Ok(Polynomial::zero());
    }
    let mut t = ps.entry(i, j).clone();
    for _ in 0..q - k {
        t = jr.derivation_t(&t);
    }
    Ok(t.scale(&(factorial(q) / factorial(q - k))))
}

/// The operator `a_(k)` on `J_n R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiralOperator {
    pub source: Polynomial,
    pub mode: u32,
    pub level: u32,
}

impl ChiralOperator {
    pub fn new(source: Polynomial, mode: u32, level: u32) -> Self {
        ChiralOperator {
            source,
            mode,
            level,
        }
    }
}

fn check_jet_poly(ps: &PoissonStructure, level: u32, what: &str, p: &Polynomial) -> Result<()> {
    for v in p.vars() {
        if ps.index_of(&v.at_level(0)).is_none() {
            return Err(Error::InvalidInput(format!(
                "{what} uses unknown variable {v}"
            )));
        }
        if v.level() > level {
            return Err(Error::InvalidInput(format!(
                "{what} uses {v} above level {level}"
            )));
        }
    }
    Ok(())
}

/// `a_(k) b`, computed from the vertex Poisson axioms and the base bracket.
///
/// Fails with [`Error::HeadroomExceeded`] when the result needs variables
/// above `op.level`.
pub fn apply_mode(
    ps: &PoissonStructure,
    op: &ChiralOperator,
    b: &Polynomial,
) -> Result<Polynomial> {
    if op.mode > op.level {
        return Err(Error::InvalidInput(format!(
            "mode {} exceeds level {}",
            op.mode, op.level
        )));
    }
    check_jet_poly(ps, op.level, "source", &op.source)?;
    check_jet_poly(ps, op.level, "argument", b)?;
    let r = ModeEngine::new(ps).act(&op.source, op.mode, b);
    match r.max_level() {
        Some(l) if l > op.level => Err(Error::HeadroomExceeded {
            needed: l,
            level: op.level,
        }),
        _ => Ok(r),
    }
}

/// Outcome of [`is_chiral_ideal`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiralCheck {
    Chiral,
    /// `source_(mode) generator` is not in the ideal.
    Counterexample {
        source: VarId,
        mode: u32,
        generator: Polynomial,
        image: Polynomial,
    },
}

impl ChiralCheck {
    pub fn is_chiral(&self) -> bool {
        matches!(self, ChiralCheck::Chiral)
    }
}

/// Decides whether `⟨gens⟩ ⊂ J_n R` is stable under every `x^i_(k)`,
/// `0 ≤ k ≤ n`. Stability under the base variables implies stability under
/// all modes of all elements.
pub fn is_chiral_ideal(
    jr: &JetRing,
    ps: &PoissonStructure,
    gens: &[Polynomial],
) -> Result<ChiralCheck> {
    for g in gens {
        check_jet_poly(ps, jr.level(), "generator", g)?;
    }
    let ideal = jr
        .relation_ideal()
        .sum(&Ideal::from_generators(gens.to_vec()));
    let engine = ModeEngine::new(ps);
    for g in gens {
        for x in ps.vars() {
            let xp = Polynomial::var(x.clone());
            for k in 0..=jr.level() {
                let image = engine.act(&xp, k, g);
                if !ideal.contains(&image)? {
                    return Ok(ChiralCheck::Counterexample {
                        source: x.clone(),
                        mode: k,
                        generator: g.clone(),
                        image,
                    });
                }
            }
        }
    }
    Ok(ChiralCheck::Chiral)
}

#[cfg(test)]
pub(crate) mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::poly::{p, rat};

    pub(crate) fn sl2() -> PoissonStructure {
        let vars = ["e", "h", "f"].map(VarId::base).to_vec();
        let m = [["0", "-2*e", "h"], ["2*e", "0", "-2*f"], ["-h", "2*f", "0"]];
        PoissonStructure::new(
            vars,
            m.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect(),
        )
        .unwrap()
    }

    fn cone(level: u32) -> JetRing {
        let ps = sl2();
        let r = RingPresentation::new(ps.vars().to_vec(), vec![p("e*f + h^2/4")], Some(ps), None)
            .unwrap();
        JetRing::new(&r, level)
    }

    fn free_sl2(level: u32) -> JetRing {
        let ps = sl2();
        JetRing::new(
            &RingPresentation::free(ps.vars().to_vec(), Some(ps)).unwrap(),
            level,
        )
    }

    fn op(src: &str, k: u32, level: u32) -> ChiralOperator {
        ChiralOperator::new(p(src), k, level)
    }

    #[test]
    fn jacobi_examples() {
        let ps = sl2();
        let r = RingPresentation::new(
            ps.vars().to_vec(),
            vec![p("e*f + h^2/4")],
            Some(ps.clone()),
            None,
        )
        .unwrap();
        assert!(jacobi_check(&ps, &r).unwrap());
        // {x, y} = x does not preserve x - 1
        let xy = [VarId::base("x"), VarId::base("y")].to_vec();
        let bad = PoissonStructure::new(
            xy.clone(),
            vec![vec![p("0"), p("x")], vec![p("-x"), p("0")]],
        )
        .unwrap();
        let r = RingPresentation::new(xy, vec![p("x - 1")], Some(bad.clone()), None).unwrap();
        assert!(!jacobi_check(&bad, &r).unwrap());
        assert!(r.validate_poisson().is_err());
        // not a Lie algebra: {x,y} = y, {y,z} = x, {z,x} = 0
        let xyz = ["x", "y", "z"].map(VarId::base).to_vec();
        let m = [["0", "y", "0"], ["-y", "0", "x"], ["0", "-x", "0"]];
        let nl = PoissonStructure::new(
            xyz.clone(),
            m.iter().map(|r| r.iter().map(|s| p(s)).collect()).collect(),
        )
        .unwrap();
        assert!(
            !jacobi_check(&nl, &RingPresentation::free(xyz, Some(nl.clone())).unwrap()).unwrap()
        );
    }

    #[test]
    fn antisymmetry_is_enforced() {
        let xy = [VarId::base("x"), VarId::base("y")].to_vec();
        let m = vec![vec![p("0"), p("1")], vec![p("1"), p("0")]];
        assert!(PoissonStructure::new(xy.clone(), m.clone()).is_err());
        assert!(PoissonStructure::new_unchecked(xy, m).is_ok());
    }

    #[test]
    fn jet_var_table_examples() {
        let jr = cone(2);
        let ps = sl2();
        // e_(0) f = {e, f} = h
        assert_eq!(bracket_on_jet_vars(&ps, &jr, 0, 0, 2, 0).unwrap(), p("h"));
        // e_(0) T f = T h
        assert_eq!(
            bracket_on_jet_vars(&ps, &jr, 0, 0, 2, 1).unwrap(),
            p("h_(-2)")
        );
        // e_(1) T^2 f = 2 T h
        assert_eq!(
            bracket_on_jet_vars(&ps, &jr, 0, 1, 2, 2).unwrap(),
            p("2*h_(-2)")
        );
        assert!(bracket_on_jet_vars(&ps, &jr, 0, 2, 2, 1).unwrap().is_zero());
        assert!(bracket_on_jet_vars(&ps, &jr, 0, 3, 2, 1).is_err());
    }

    #[test]
    fn apply_mode_examples() {
        let ps = sl2();
        assert_eq!(apply_mode(&ps, &op("e", 0, 1), &p("f")).unwrap(), p("h"));
        assert_eq!(
            apply_mode(&ps, &op("e", 1, 1), &p("f_(-2)")).unwrap(),
            p("h")
        );
        assert!(apply_mode(&ps, &op("e", 1, 1), &p("f")).unwrap().is_zero());
        // (T e)_(1) f = -e_(0) f
        assert_eq!(
            apply_mode(&ps, &op("e_(-2)", 1, 1), &p("f")).unwrap(),
            p("-h")
        );
        // Casimir: Ω_(0) acts by zero on base variables
        for x in ["e", "h", "f"] {
            assert!(apply_mode(&ps, &op("e*f + h^2/4", 0, 1), &p(x))
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn headroom_is_reported() {
        let ps = sl2();
        // (e_(-2)^2)_(0) h = 8 e e_(-3) needs level 2
        assert_eq!(
            apply_mode(&ps, &op("e_(-2)^2", 0, 2), &p("h")).unwrap(),
            p("8*e*e_(-3)")
        );
        assert_eq!(
            apply_mode(&ps, &op("e_(-2)^2", 0, 1), &p("h")).unwrap_err(),
            Error::HeadroomExceeded {
                needed: 2,
                level: 1
            }
        );
    }

    #[test]
    fn chiral_ideal_examples() {
        let jr = cone(2);
        let ps = sl2();
        assert!(is_chiral_ideal(&jr, &ps, &[]).unwrap().is_chiral());
        let all: Vec<Polynomial> = jr.vars().iter().cloned().map(Polynomial::var).collect();
        assert!(is_chiral_ideal(&jr, &ps, &all).unwrap().is_chiral());
        match is_chiral_ideal(&jr, &ps, &[p("e")]).unwrap() {
            ChiralCheck::Counterexample { image, .. } => assert!(!image.is_zero()),
            ChiralCheck::Chiral => panic!("⟨e⟩ is not chiral"),
        }
        // the jet ideal of the Casimir is chiral in the free jet ring
        let fr = free_sl2(2);
        let j = fr.jet_ideal(&[p("e*f + h^2/4")]);
        assert!(is_chiral_ideal(&fr, &ps, j.generators())
            .unwrap()
            .is_chiral());
    }

    fn jet_poly(top: u32) -> impl Strategy<Value = Polynomial> {
        let names = ["e", "h", "f"];
        prop::collection::vec(
            (
                -2i64..=2,
                0usize..3,
                0..=top,
                0usize..3,
                0..=top,
                any::<bool>(),
            ),
            1..3,
        )
        .prop_map(move |ts| {
            Polynomial::from_terms(ts.into_iter().map(|(c, a, la, b, lb, quad)| {
                let mut m = crate::poly::Monomial::var(VarId::new(names[a], la));
                if quad {
                    m = m.mul(&crate::poly::Monomial::var(VarId::new(names[b], lb)));
                }
                (m, rat(c, 1))
            }))
        })
    }

    proptest! {
        #[test]
        fn apply_mode_matches_table(i in 0usize..3, j in 0usize..3, k in 0u32..4, q in 0u32..4) {
            let jr = free_sl2(3);
            let ps = sl2();
            let table = bracket_on_jet_vars(&ps, &jr, i, k, j, q).unwrap();
            let t_q = jr.negative_mode(&Polynomial::var(ps.vars()[j].clone()), q).scale(&factorial(q));
            let src = Polynomial::var(ps.vars()[i].clone());
            let via_axioms = apply_mode(&ps, &ChiralOperator::new(src, k, 3), &t_q).unwrap();
            prop_assert_eq!(table, via_axioms);
        }

        #[test]
        fn zero_mode_on_base_is_bracket(a in jet_poly(0), b in jet_poly(0)) {
            let ps = sl2();
            let r = apply_mode(&ps, &ChiralOperator::new(a.clone(), 0, 2), &b).unwrap();
            prop_assert_eq!(r, ps.bracket(&a, &b));
        }

        #[test]
        fn trivial_bracket_gives_zero_modes(a in jet_poly(1), b in jet_poly(1), k in 0u32..3) {
            let ps = PoissonStructure::trivial(sl2().vars().to_vec());
            prop_assert!(apply_mode(&ps, &ChiralOperator::new(a, k, 4), &b).unwrap().is_zero());
        }

        #[test]
        fn modes_respect_jet_weight(a in jet_poly(1), b in jet_poly(1), k in 0u32..4) {
            // modes above the total jet weight vanish
            let ps = sl2();
            let bound = a.jet_weight() + b.max_level().unwrap_or(0);
            let r = apply_mode(&ps, &ChiralOperator::new(a, k + bound + 1, 8), &b).unwrap();
            prop_assert!(r.is_zero());
        }
    }

    #[test]
    fn unknown_variables_are_rejected() {
        let ps = sl2();
        assert!(apply_mode(&ps, &op("z", 0, 1), &p("e")).is_err());
        assert!(apply_mode(&ps, &op("e", 0, 1), &p("e_(-3)")).is_err());
        assert!(apply_mode(&ps, &op("e", 2, 1), &p("e")).is_err());
    }
}
