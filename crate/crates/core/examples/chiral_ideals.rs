//! Chiral Poisson ideals: jets of Poisson ideals are chiral, while `⟨e⟩`
//! is not.

use jetpoisson::jet::{JetRing, RingPresentation};
use jetpoisson::liealg::make_sl2;
use jetpoisson::poly::p;
use jetpoisson::vpa::{is_chiral_ideal, ChiralCheck};

fn main() -> jetpoisson::Result<()> {
    let l = make_sl2();
    let ps = l.structure();
    let free = RingPresentation::free(ps.vars().to_vec(), Some(ps.clone()))?;
    for n in 0..=2 {
        let jr = JetRing::new(&free, n);
        for base in ["e*f + h^2/4", "e*f + h^2/4 - 1", "e*f + h^2/4 + 2", "e"] {
            let gens = jr.jet_ideal(&[p(base)]).generators().to_vec();
            match is_chiral_ideal(&jr, ps, &gens)? {
                ChiralCheck::Chiral => println!("n = {n}, J_n<{base}>: chiral"),
                ChiralCheck::Counterexample {
                    source,
                    mode,
                    generator,
                    image,
                } => {
                    println!(
                        "n = {n}, J_n<{base}>: {source}_({mode}) ({generator}) = {image} escapes"
                    )
                }
            }
        }
    }
    Ok(())
}
