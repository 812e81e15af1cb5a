//! Chiral Poisson cores by iterating the shrinking map on a degree
//! truncation.

use jetpoisson::jet::JetRing;
use jetpoisson::liealg::make_sl2;
use jetpoisson::poly::p;
use jetpoisson::vpa::{chiral_core_upto, Grading};

fn main() -> jetpoisson::Result<()> {
    let l = make_sl2();
    let pres = l.presentation();
    let cases = [
        (0, "e", 3),
        (0, "e*f + h^2/4 - 1", 2),
        (1, "e*f + h^2/4", 2),
        (1, "h", 2),
    ];
    for (n, g, d) in cases {
        let jr = JetRing::new(&pres, n);
        let r = chiral_core_upto(&jr, l.structure(), &[p(g)], d, 20, &Grading::Total)?;
        println!("n = {n}, <{g}>, degree <= {d}: dims {:?}", r.dims);
        for z in &r.basis {
            println!("  {z}");
        }
    }
    Ok(())
}
