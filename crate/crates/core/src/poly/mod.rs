//! Exact rationals and sparse multivariate polynomials over named variables.

mod monomial;
mod parse;
mod polynomial;
mod var;

pub use monomial::Monomial;
pub use parse::{parse_polynomial, parse_rational, parse_var};
pub use polynomial::Polynomial;
pub use var::VarId;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. `Display` prints `num/den`, or just `num` when integral.
pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// `n!` as a rational.
pub fn factorial(n: u32) -> Rational {
    (1..=n).fold(num_traits::One::one(), |acc: Rational, k| {
        acc * Rational::from_integer(k.into())
    })
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return num_traits::Zero::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Shorthand used throughout the tests and examples.
///
/// Panics on malformed input.
pub fn p(src: &str) -> Polynomial {
    parse_polynomial(src).unwrap_or_else(|e| panic!("bad polynomial literal '{src}': {e}"))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use proptest::prelude::*;

    use super::*;

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x+1") + &p("x-1"), p("2*x"));
        assert!((&p("x^2*y + 3") * &Polynomial::zero()).is_zero());
        let omega = p("e*f + h^2/4");
        assert_eq!(&omega * &p("4"), p("4*e*f + h^2"));
    }

    #[test]
    fn derivative_examples() {
        let x = VarId::base("x");
        assert_eq!(p("x^2*y").partial_derivative(&x), p("2*x*y"));
        assert!(p("7/3").partial_derivative(&x).is_zero());
        assert_eq!(
            p("e*f + h^2/4").partial_derivative(&VarId::base("h")),
            p("1/2*h")
        );
    }

    #[test]
    fn evaluate_examples() {
        let pt = BTreeMap::from([(VarId::base("x"), rat(2, 1))]);
        assert_eq!(p("x^2+1").evaluate(&pt).unwrap(), rat(5, 1));
        assert_eq!(
            Polynomial::zero().evaluate(&BTreeMap::new()).unwrap(),
            rat(0, 1)
        );
        let pt = BTreeMap::from([(VarId::base("e"), rat(1, 2))]);
        assert_eq!(p("4*e^2").evaluate(&pt).unwrap(), rat(1, 1));
    }

    #[test]
    fn evaluate_missing_assignment() {
        let err = p("x*y")
            .evaluate(&BTreeMap::from([(VarId::base("x"), rat(1, 1))]))
            .unwrap_err();
        assert!(matches!(err, crate::Error::MissingAssignment(v) if v == VarId::base("y")));
    }

    #[test]
    fn canonical_text() {
        assert_eq!(p("1/4*h^2 + e*f").to_string(), "e*f + 1/4*h^2");
        assert_eq!(p("-2*e").to_string(), "-2*e");
        assert_eq!(p("x1_(-3) - 1/2").to_string(), "x1_(-3) - 1/2");
        assert_eq!(p("h_(-1)").to_string(), "h");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(p("-x^2 - 3/2*x*y").to_string(), "-x^2 - 3/2*x*y");
    }

    #[test]
    fn parse_errors() {
        assert!(parse_polynomial("x +").is_err());
        assert!(parse_polynomial("x/y").is_err());
        assert!(parse_polynomial("x_(-0)").is_err());
        assert!(parse_polynomial("x ) ").is_err());
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        let vars = ["x", "y", "z_(-2)"];
        prop::collection::vec((-4i64..=4, 1i64..=3, 0u32..3, 0u32..3, 0u32..2), 0..5).prop_map(
            move |ts| {
                Polynomial::from_terms(ts.into_iter().map(|(n, d, a, b, c)| {
                    let m = Monomial::from_pairs([
                        (parse_var(vars[0]).unwrap(), a),
                        (parse_var(vars[1]).unwrap(), b),
                        (parse_var(vars[2]).unwrap(), c),
                    ]);
                    (m, rat(n, d))
                }))
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn leibniz(a in small_poly(), b in small_poly()) {
            for v in ["x", "y", "z_(-2)"] {
                let v = parse_var(v).unwrap();
                let lhs = (&a * &b).partial_derivative(&v);
                let rhs = &(&a * &b.partial_derivative(&v)) + &(&b * &a.partial_derivative(&v));
                prop_assert_eq!(lhs, rhs);
            }
        }

        #[test]
        fn evaluation_is_homomorphism(a in small_poly(), b in small_poly(),
                                     x in -5i64..5, y in -5i64..5, z in 1i64..5) {
            let pt = BTreeMap::from([
                (parse_var("x").unwrap(), rat(x, 1)),
                (parse_var("y").unwrap(), rat(y, 3)),
                (parse_var("z_(-2)").unwrap(), rat(1, z)),
            ]);
            let ea = a.evaluate(&pt).unwrap();
            let eb = b.evaluate(&pt).unwrap();
            prop_assert_eq!((&a * &b).evaluate(&pt).unwrap(), &ea * &eb);
            prop_assert_eq!((&a + &b).evaluate(&pt).unwrap(), ea + eb);
        }

        #[test]
        fn text_round_trip(a in small_poly()) {
            prop_assert_eq!(parse_polynomial(&a.to_string()).unwrap(), a);
        }
    }
}
