//! Degree-truncated vertex Poisson centers.

use jetpoisson::jet::{JetRing, RingDocument, RingPresentation};
use jetpoisson::liealg::make_sl2;
use jetpoisson::vpa::{graded_dims, vp_center_upto, Grading};

fn main() -> jetpoisson::Result<()> {
    let l = make_sl2();
    let pres = l.presentation();
    for (n, d) in [(0, 2), (1, 3), (2, 2)] {
        let jr = JetRing::new(&pres, n);
        let c = vp_center_upto(&jr, l.structure(), &[], d, &Grading::Total)?;
        let w = jr.jet_weights().expect("sl2 carries weights");
        let dims = graded_dims(&c, |m| jetpoisson::groebner::weighted_degree(m, &w));
        println!(
            "sl2, n = {n}, degree <= {d}: {} elements, by weight {dims:?}",
            c.len()
        );
        for z in &c {
            println!("  {z}");
        }
    }

    let plane =
        RingDocument::from_json(include_str!("../data/symplectic_plane.json"))?.presentation;
    let c = vp_center_upto(
        &JetRing::new(&plane, 1),
        plane.poisson().expect("bracket"),
        &[],
        3,
        &Grading::Total,
    )?;
    println!(
        "symplectic plane, n = 1: {:?}",
        c.iter().map(|z| z.to_string()).collect::<Vec<_>>()
    );

    let slice =
        RingDocument::from_json(include_str!("../data/sl2_slice_regular.json"))?.presentation;
    let trivial = RingPresentation::free(slice.vars().to_vec(), slice.poisson().cloned())?;
    let c = vp_center_upto(
        &JetRing::new(&trivial, 1),
        trivial.poisson().expect("bracket"),
        &[],
        2,
        &Grading::Total,
    )?;
    println!(
        "zero bracket, n = 1, degree <= 2: {} elements (everything)",
        c.len()
    );
    Ok(())
}
