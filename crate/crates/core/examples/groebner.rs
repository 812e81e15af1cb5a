//! Gröbner bases, membership, elimination and initial ideals.

use std::collections::{BTreeMap, BTreeSet};

use jetpoisson::groebner::{Ideal, MonomialOrder};
use jetpoisson::poly::{p, VarId};

fn main() -> jetpoisson::Result<()> {
    // twisted cubic y = x^2, z = x^3
    let cubic = Ideal::new(vec![p("y - x^2"), p("z - x^3")], MonomialOrder::lex());
    println!("lex basis:");
    for g in cubic.groebner_basis()? {
        println!("  {g}");
    }
    println!("x*z - y^2 in ideal: {}", cubic.contains(&p("x*z - y^2"))?);
    println!("x in ideal: {}", cubic.contains(&p("x"))?);

    let keep: BTreeSet<VarId> = ["y", "z"].map(VarId::base).into();
    let implicit = cubic.eliminate(&keep)?;
    println!(
        "eliminating x: {:?}",
        implicit
            .generators()
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
    );

    let weights = BTreeMap::from([(VarId::base("x"), 1)]);
    let gr = Ideal::from_generators(vec![p("x + x^2")]).initial_ideal(&weights)?;
    println!("initial ideal of <x + x^2>: {}", gr.gb_text()?.trim_end());

    println!(
        "x in radical of <x^3 - x^2*y, y>: {}",
        Ideal::from_generators(vec![p("x^3 - x^2*y"), p("y")]).radical_contains(&p("x"))?
    );
    Ok(())
}
