//! Fibers of the jet adjoint quotient of sl₂ and their associated graded
//! ideals.

use std::collections::BTreeMap;

use jetpoisson::groebner::ideal_equal;
use jetpoisson::jet::JetRing;
use jetpoisson::liealg::{fiber_ideal, make_sl2, FiberSpec};
use jetpoisson::poly::VarId;
use jetpoisson::vpa::is_chiral_ideal;

fn main() -> jetpoisson::Result<()> {
    let l = make_sl2();
    for n in 0..=1 {
        let jr = JetRing::new(&l.presentation(), n);
        let zero = fiber_ideal(&l, &jr, &FiberSpec::zero(n))?;
        let standard: BTreeMap<VarId, u32> = jr.vars().iter().map(|v| (v.clone(), 1)).collect();
        for xi in ["", "1,0=1", "1,0=-2", "1,0=1/3,1,1=2", "1,1=-5"] {
            let Ok(spec) = FiberSpec::parse(n, xi) else {
                continue;
            };
            let Ok(ideal) = fiber_ideal(&l, &jr, &spec) else {
                continue;
            };
            let gr = ideal_equal(&ideal.initial_ideal(&standard)?, &zero)?;
            let chiral = is_chiral_ideal(&jr, l.structure(), ideal.generators())?.is_chiral();
            println!("n = {n}, xi = [{xi}]: gr = zero fiber: {gr}, chiral: {chiral}");
        }
    }
    Ok(())
}
