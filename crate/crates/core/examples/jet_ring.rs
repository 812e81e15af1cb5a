//! Jet rings of the nilpotent cone of sl₂ and arcs on it.

use std::collections::BTreeMap;

use jetpoisson::jet::{iota_point, truncate_point, JetPoint, JetRing, RingDocument};
use jetpoisson::poly::{p, rat, VarId};

const SL2: &str = include_str!("../data/sl2.json");

fn main() -> jetpoisson::Result<()> {
    let doc = RingDocument::from_json(SL2)?;
    for n in 0..=2 {
        let jr = JetRing::new(&doc.presentation, n);
        println!(
            "J_{n}: {} variables, {} relations",
            jr.vars().len(),
            jr.relations().len()
        );
        for r in jr.relations() {
            println!("  {r}");
        }
    }

    let jr = JetRing::new(&doc.presentation, 2);
    let omega = p("e*f + h^2/4");
    println!("T(Omega) = {}", jr.derivation_t(&omega));
    println!("T^2(Omega)/2 = {}", jr.negative_mode(&omega, 2));

    // the arc e(t) = (1 + t)^2, h(t) = 2(1 + t), f(t) = -1 lies on the cone
    let arc = BTreeMap::from([
        (VarId::base("e"), vec![rat(1, 1), rat(2, 1), rat(1, 1)]),
        (VarId::base("h"), vec![rat(2, 1), rat(2, 1)]),
        (VarId::base("f"), vec![rat(-1, 1)]),
    ]);
    let x = JetPoint::from_series(&jr, &arc)?;
    println!(
        "arc coordinates: {:?}",
        x.coords()
            .iter()
            .map(|(v, c)| format!("{v}={c}"))
            .collect::<Vec<_>>()
    );
    println!(
        "T^2 Omega at the arc: {}",
        x.evaluate(&jr.derivation_t(&jr.derivation_t(&omega)))?
    );
    println!(
        "level-1 truncation: {} coordinates",
        truncate_point(&x, 1)?.coords().len()
    );

    let base = BTreeMap::from([
        (VarId::base("e"), rat(1, 1)),
        (VarId::base("h"), rat(0, 1)),
        (VarId::base("f"), rat(0, 1)),
    ]);
    println!(
        "constant arc through e=1: {} coordinates",
        iota_point(&jr, &base)?.coords().len()
    );

    let off = BTreeMap::from([
        (VarId::base("e"), vec![rat(1, 1)]),
        (VarId::base("h"), vec![]),
        (VarId::base("f"), vec![rat(1, 1)]),
    ]);
    match JetPoint::from_series(&jr, &off) {
        Ok(_) => println!("unexpected: point accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
