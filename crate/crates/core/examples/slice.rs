//! The regular slice of sl₂: Kostant's description of the nilpotent fiber
//! and the truncated comparison of centers.

use jetpoisson::groebner::{ideal_equal, Ideal};
use jetpoisson::liealg::{center_isomorphism_check, make_sl2, nilpotent_cone, regular_slice_sl2};
use jetpoisson::poly::p;

fn main() -> jetpoisson::Result<()> {
    let l = make_sl2();
    let slice = regular_slice_sl2();
    let omega = &l.invariants()[0];
    println!("Omega restricted to the slice: {}", slice.restrict(omega));
    let restricted = Ideal::from_generators(
        nilpotent_cone(&l)
            .generators()
            .iter()
            .map(|g| slice.restrict(g))
            .collect(),
    );
    println!(
        "restricted cone = <s>: {}",
        ideal_equal(&restricted, &Ideal::from_generators(vec![p("s")]))?
    );

    for (n, d) in [(0, 4), (1, 3), (2, 2)] {
        let r = center_isomorphism_check(&l, &slice, n, d)?;
        println!("n = {n}, d = {d}: equal {}", r.equal);
        println!("  slice center          {:?}", r.slice_center);
        println!("  restricted invariants {:?}", r.restricted_invariants);
        println!("  center of J_n sl2     {:?}", r.lie_center);
    }
    Ok(())
}
