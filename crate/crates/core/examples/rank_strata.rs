//! The rank matrix of sl₂ jets: block structure, pointwise ranks and the
//! rank strata of the base.

use std::collections::BTreeMap;

use jetpoisson::jet::{JetPoint, JetRing, RingDocument};
use jetpoisson::poly::{rat, VarId};
use jetpoisson::stratify::{build_rank_matrix, stratum};
use jetpoisson::vpa::is_chiral_ideal;

fn main() -> jetpoisson::Result<()> {
    let doc = RingDocument::from_json(include_str!("../data/sl2.json"))?;
    let ps = doc
        .presentation
        .poisson()
        .expect("sl2 has a bracket")
        .clone();
    for n in 0..=3 {
        let jr = JetRing::new(&doc.presentation, n);
        let m = build_rank_matrix(&jr, &ps)?;
        println!(
            "n = {n}: {}x{} matrix, block structure ok: {}",
            m.size(),
            m.size(),
            m.verify_block_structure(&jr).is_ok()
        );
    }

    let jr = JetRing::new(&doc.presentation, 2);
    let m = build_rank_matrix(&jr, &ps)?;
    let arc = |e: [i64; 3], h: [i64; 3], f: [i64; 3]| {
        let s = |c: [i64; 3]| c.iter().map(|&x| rat(x, 1)).collect::<Vec<_>>();
        BTreeMap::from([
            (VarId::base("e"), s(e)),
            (VarId::base("h"), s(h)),
            (VarId::base("f"), s(f)),
        ])
    };
    // e = (1 + t)^2, h = 2(1 + t), f = -1 over the regular point (1, 2, -1)
    let regular = JetPoint::from_series(&jr, &arc([1, 2, 1], [2, 2, 0], [-1, 0, 0]))?;
    println!(
        "regular arc: rank {}, rk {}",
        m.rank_at(&regular)?,
        m.rk_at(&regular)?
    );
    // e = t^2 over the origin
    let singular = JetPoint::from_series(&jr, &arc([0, 0, 1], [0, 0, 0], [0, 0, 0]))?;
    println!("arc e = t^2: rank {}", m.rank_at(&singular)?);
    match m.rk_at(&singular) {
        Ok(rk) => println!("  rk {rk}"),
        Err(e) => println!("  {e}"),
    }

    for j in 0..ps.dim() {
        let s = stratum(&jr, &ps, j);
        let chiral = is_chiral_ideal(&jr, &ps, s.jet_ideal.generators())?.is_chiral();
        println!(
            "stratum {j}: base ideal {}, jet ideal chiral: {chiral}",
            s.base_ideal.gb_text()?.trim_end().replace('\n', ", ")
        );
    }
    Ok(())
}
