//! Randomized vertex Poisson axiom suite on sl₂, the nilpotent cone and the
//! symplectic plane.

use jetpoisson::jet::{JetRing, RingDocument};

fn main() -> jetpoisson::Result<()> {
    let files = [
        ("sl2 cone", include_str!("../data/sl2.json")),
        (
            "symplectic plane",
            include_str!("../data/symplectic_plane.json"),
        ),
    ];
    for (name, text) in files {
        let doc = RingDocument::from_json(text)?;
        let ps = doc
            .presentation
            .poisson()
            .expect("fixture has a bracket")
            .clone();
        for n in 0..=2 {
            let jr = JetRing::new(&doc.presentation, n);
            let report = jetpoisson::vpa::pva_axiom_suite(&jr, &ps, 50, 7)?;
            let failures: usize = report.results.iter().map(|r| r.failures.len()).sum();
            println!(
                "{name}, n = {n}: {} ({failures} failures)",
                if report.passed() { "pass" } else { "FAIL" }
            );
        }
    }
    Ok(())
}
