//! Mode operators `a_(k)` on the jet ring of sl₂: the axiomatic recursion
//! against the closed formula on jet variables.

use jetpoisson::jet::{JetRing, RingPresentation};
use jetpoisson::liealg::make_sl2;
use jetpoisson::poly::{factorial, p};
use jetpoisson::vpa::{apply_mode, bracket_on_jet_vars, ChiralOperator};

fn main() -> jetpoisson::Result<()> {
    let l = make_sl2();
    let ps = l.structure();
    let n = 2;
    let jr = JetRing::new(
        &RingPresentation::free(ps.vars().to_vec(), Some(ps.clone()))?,
        n,
    );

    let mut agree = 0;
    for (i, x) in ps.vars().iter().enumerate() {
        for k in 0..=n {
            for (j, y) in ps.vars().iter().enumerate() {
                for q in 0..=n {
                    let closed =
                        bracket_on_jet_vars(ps, &jr, i, k, j, q)?.scale(&factorial(q).recip());
                    let op =
                        ChiralOperator::new(jetpoisson::poly::Polynomial::var(x.clone()), k, n);
                    let recursive =
                        apply_mode(ps, &op, &jetpoisson::poly::Polynomial::var(y.at_level(q)))?;
                    assert_eq!(closed, recursive);
                    agree += 1;
                    if k <= q && !closed.is_zero() {
                        println!("{x}_({k}) {} = {closed}", y.at_level(q));
                    }
                }
            }
        }
    }
    println!("{agree} pairs agree");

    let op = ChiralOperator::new(p("e*f"), 1, n);
    println!("(e*f)_(1) h_(-3) = {}", apply_mode(ps, &op, &p("h_(-3)"))?);
    let op = ChiralOperator::new(p("e_(-3)"), 1, n);
    match apply_mode(ps, &op, &p("f_(-3)")) {
        Ok(v) => println!("e_(-3)_(1) f_(-3) = {v}"),
        Err(e) => println!("e_(-3)_(1) f_(-3): {e}"),
    }
    Ok(())
}
