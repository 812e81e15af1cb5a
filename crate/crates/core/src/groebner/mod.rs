//! Gröbner bases: Buchberger's algorithm with Gebauer–Möller pair pruning and
//! sugar selection, and the ideal operations built on it.

mod engine;
mod ideal;
mod order;

pub use ideal::{
    determinant, eliminate, ideal_equal, initial_form, initial_ideal, member, minors, minors_ideal,
    radical_member, weighted_degree, Ideal,
};
pub use order::{MonomialOrder, OrderKind};

/// Limits on a single Gröbner computation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Budget {
    pub max_spairs: u64,
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_spairs: 50_000,
            max_degree: 40,
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::{BTreeMap, BTreeSet};

    use proptest::prelude::*;

    use super::*;
    use crate::linalg;
    use crate::poly::{p, Monomial, Polynomial, Rational, VarId};

    fn ideal(gens: &[&str]) -> Ideal {
        Ideal::from_generators(gens.iter().map(|g| p(g)).collect())
    }

    fn v(name: &str) -> VarId {
        VarId::base(name)
    }

    #[test]
    fn basis_examples() {
        assert_eq!(
            ideal(&["x^2", "x*y"]).groebner_basis().unwrap(),
            &[p("x*y"), p("x^2")]
        );
        assert!(ideal(&["x", "x+1"]).is_unit().unwrap());
        assert_eq!(
            ideal(&["x", "x+1"]).groebner_basis().unwrap(),
            &[Polynomial::one()]
        );
        assert!(Ideal::zero().groebner_basis().unwrap().is_empty());
    }

    #[test]
    fn twisted_cubic() {
        // x > y > z
        let lex = Ideal::new(vec![p("y - x^2"), p("z - x^3")], MonomialOrder::lex());
        let gb = lex.groebner_basis().unwrap();
        for expected in ["x*y - z", "x^2 - y", "x*z - y^2", "y^3 - z^2"] {
            assert!(gb.contains(&p(expected)), "missing {expected} in {gb:?}");
        }
        assert_eq!(gb.len(), 4);
        // z > y > x: the generators are already a reduced basis
        let zyx = MonomialOrder::lex().with_precedence(vec![v("z"), v("y"), v("x")]);
        let other = Ideal::new(vec![p("y - x^2"), p("z - x^3")], zyx);
        assert_eq!(other.groebner_basis().unwrap().len(), 2);
        for q in ["z - x*y", "z*x - y^2"] {
            assert!(other.contains(&p(q)).unwrap());
        }
    }

    #[test]
    fn membership_examples() {
        assert!(member(&p("x^2 + x*y"), &ideal(&["x^2", "x*y"])).unwrap());
        assert!(!member(&p("x"), &ideal(&["x^2"])).unwrap());
        assert!(member(&p("h"), &ideal(&["e", "h", "f"])).unwrap());
        // variables outside the ideal's ring
        assert!(member(&p("w*x^2"), &ideal(&["x^2"])).unwrap());
        assert!(!member(&p("w"), &ideal(&["x^2"])).unwrap());
    }

    #[test]
    fn radical_examples() {
        assert!(radical_member(&p("x"), &ideal(&["x^2"])).unwrap());
        assert!(!radical_member(&p("y"), &ideal(&["x^2"])).unwrap());
        assert!(radical_member(&p("e"), &ideal(&["4*e^2"])).unwrap());
    }

    #[test]
    fn equality_examples() {
        assert!(ideal_equal(&ideal(&["x", "y"]), &ideal(&["y", "x+y"])).unwrap());
        assert!(!ideal_equal(&ideal(&["x"]), &ideal(&["x^2"])).unwrap());
        assert!(ideal_equal(&ideal(&["e*f + h^2/4"]), &ideal(&["4*e*f + h^2"])).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let keep_y = BTreeSet::from([v("y")]);
        assert!(eliminate(&ideal(&["y - x^2"]), &keep_y)
            .unwrap()
            .generators()
            .is_empty());
        let e = eliminate(&ideal(&["y - x^2", "x"]), &keep_y).unwrap();
        assert!(ideal_equal(&e, &ideal(&["y"])).unwrap());
        let keep_x = BTreeSet::from([v("x")]);
        assert!(eliminate(&ideal(&["t*x - 1"]), &keep_x)
            .unwrap()
            .generators()
            .is_empty());
    }

    #[test]
    fn initial_ideal_examples() {
        let w = BTreeMap::from([(v("x"), 1)]);
        let init = initial_ideal(&ideal(&["x + x^2"]), &w).unwrap();
        assert!(ideal_equal(&init, &ideal(&["x^2"])).unwrap());
        let w = BTreeMap::from([(v("x"), 1), (v("y"), 1)]);
        let init = initial_ideal(&ideal(&["x + y"]), &w).unwrap();
        assert!(ideal_equal(&init, &ideal(&["x + y"])).unwrap());
        let err = initial_ideal(&ideal(&["x + z"]), &w).unwrap_err();
        assert!(matches!(err, crate::Error::MissingWeight(_)));
    }

    #[test]
    fn minors_examples() {
        let id = vec![vec![p("1"), p("0")], vec![p("0"), p("1")]];
        assert!(minors_ideal(&id, 1).is_unit().unwrap());
        let zero = vec![vec![p("0"); 2]; 2];
        assert!(minors_ideal(&zero, 1).generators().is_empty());
        let sl2 = vec![
            vec![p("0"), p("-2*e"), p("h")],
            vec![p("2*e"), p("0"), p("-2*f")],
            vec![p("-h"), p("2*f"), p("0")],
        ];
        let m2 = minors_ideal(&sl2, 2);
        assert!(m2.contains(&p("4*e^2")).unwrap());
        assert!(m2.contains(&p("4*f^2")).unwrap());
        for x in ["e", "h", "f"] {
            assert!(m2.radical_contains(&p(x)).unwrap());
        }
        assert!(!m2.contains(&p("e")).unwrap());
        assert!(determinant(&sl2).is_zero());
    }

    #[test]
    fn budget_is_enforced() {
        let tight = Budget {
            max_spairs: 1,
            max_degree: 40,
        };
        let i =
            Ideal::new(vec![p("y - x^2"), p("z - x^3")], MonomialOrder::lex()).with_budget(tight);
        assert!(matches!(
            i.groebner_basis(),
            Err(crate::Error::ResourceLimit { .. })
        ));
        let low = Budget {
            max_spairs: 100,
            max_degree: 2,
        };
        let i = ideal(&["x^3 - y"]).with_budget(low);
        assert!(matches!(
            i.groebner_basis(),
            Err(crate::Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn golden_text() {
        let lex = Ideal::new(vec![p("y - x^2"), p("z - x^3")], MonomialOrder::lex());
        let expected = include_str!("../../tests/golden/twisted_cubic_lex.txt");
        assert_eq!(lex.gb_text().unwrap(), expected);
    }

    // --- randomized invariants -------------------------------------------

    const VARS: [&str; 3] = ["x", "y", "z"];

    fn monomials_of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        for a in 0..=d {
            for b in 0..=d - a {
                let c = d - a - b;
                out.push(Monomial::from_pairs([
                    (v(VARS[0]), a),
                    (v(VARS[1]), b),
                    (v(VARS[2]), c),
                ]));
            }
        }
        out
    }

    fn homogeneous(deg: u32) -> impl Strategy<Value = Polynomial> {
        let ms = monomials_of_degree(deg);
        let n = ms.len();
        prop::collection::vec((0..n, -3i64..=3), 1..4).prop_map(move |ts| {
            Polynomial::from_terms(
                ts.into_iter()
                    .map(|(i, c)| (ms[i].clone(), Rational::from_integer(c.into()))),
            )
        })
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        (homogeneous(2), homogeneous(1), -2i64..=2)
            .prop_map(|(a, b, c)| &(&a + &b) + &Polynomial::from_int(c))
    }

    /// Degree-`d` part of a homogeneous ideal as the span of `m * g`.
    fn graded_piece(gens: &[Polynomial], d: u32) -> Vec<Polynomial> {
        let mut out = Vec::new();
        for g in gens {
            let Some(dg) = g.degree() else { continue };
            if dg > d {
                continue;
            }
            for m in monomials_of_degree(d - dg) {
                out.push(g.mul_monomial(&Rational::from_integer(1.into()), &m));
            }
        }
        out
    }

    fn in_span(p: &Polynomial, span: &[Polynomial]) -> bool {
        let keys: Vec<Monomial> = span
            .iter()
            .chain([p])
            .flat_map(|q| q.terms().map(|(m, _)| m.clone()))
            .collect();
        let keys: BTreeSet<Monomial> = keys.into_iter().collect();
        let row = |q: &Polynomial| keys.iter().map(|m| q.coeff(m)).collect::<Vec<_>>();
        let base: Vec<Vec<Rational>> = span.iter().map(row).collect();
        let mut with = base.clone();
        with.push(row(p));
        linalg::rank(&base) == linalg::rank(&with)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn generators_reduce_to_zero(gens in prop::collection::vec(small_poly(), 1..4)) {
            let i = Ideal::from_generators(gens.clone());
            for g in &gens {
                prop_assert!(i.contains(g).unwrap());
            }
            let again = Ideal::from_generators(gens);
            prop_assert_eq!(i.groebner_basis().unwrap(), again.groebner_basis().unwrap());
        }

        #[test]
        fn membership_oracle_all_degrees(gens in prop::collection::vec(homogeneous(2), 1..3),
                                         q in homogeneous(3), r in homogeneous(1)) {
            let i = Ideal::from_generators(gens.clone());
            for cand in [q.clone(), &q * &r, &(&gens[0] * &r) + &q, &gens[0] * &(&r * &r)] {
                if cand.is_zero() { continue; }
                let d = cand.degree().unwrap();
                prop_assert!(d <= 6);
                prop_assert_eq!(i.contains(&cand).unwrap(), in_span(&cand, &graded_piece(&gens, d)));
            }
        }

        #[test]
        fn initial_ideal_contains_initial_forms(gens in prop::collection::vec(small_poly(), 1..3),
                                                wx in 0u32..3, wy in 0u32..3, wz in 1u32..3) {
            let i = Ideal::from_generators(gens.clone());
            let w = BTreeMap::from([(v("x"), wx), (v("y"), wy), (v("z"), wz)]);
            let init = i.initial_ideal(&w).unwrap();
            for g in &gens {
                prop_assert!(init.contains(&initial_form(g, &w)).unwrap());
            }
        }

        #[test]
        fn unit_weights_fix_homogeneous_ideals(gens in prop::collection::vec(homogeneous(2), 1..3)) {
            let i = Ideal::from_generators(gens);
            let w = BTreeMap::from([(v("x"), 1), (v("y"), 1), (v("z"), 1)]);
            prop_assert!(i.initial_ideal(&w).unwrap().equals(&i).unwrap());
        }

        #[test]
        fn elimination_is_contained(gens in prop::collection::vec(small_poly(), 1..3)) {
            let i = Ideal::from_generators(gens);
            let keep = BTreeSet::from([v("y"), v("z")]);
            let e = i.eliminate(&keep).unwrap();
            for g in e.generators() {
                prop_assert!(g.vars().is_subset(&keep));
                prop_assert!(i.contains(g).unwrap());
            }
        }
    }
}
