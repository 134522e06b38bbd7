//! 3-colorability as a sandwich problem, in each of the three variants.

use quartet_sandwich::hardness::{reduce_3col, three_coloring, three_coloring_witness, ColoringVariant};
use quartet_sandwich::poly::{solve, Mode};
use quartet_sandwich::{verify_sandwich, Graph};

fn main() -> quartet_sandwich::Result<()> {
    // The 5-wheel needs four colors; a 5-cycle with a triangle on one edge
    // needs three.
    let mut wheel = Graph::cycle(5).disjoint_union(&Graph::empty(1));
    for v in 0..5 {
        wheel.add_edge(v, 5);
    }
    let mut tailed = Graph::cycle(5).disjoint_union(&Graph::empty(1));
    tailed.add_edge(0, 5);
    tailed.add_edge(1, 5);

    for (name, h) in [("wheel", &wheel), ("tailed C5", &tailed)] {
        let coloring = three_coloring(h);
        println!("{name}: 3-coloring {coloring:?}");
        let out = reduce_3col(h, ColoringVariant::PawK4, 0)?;
        let family = out.family.family().expect("a forbidden pair").clone();
        let [a, b] = [family.members()[0], family.members()[1]];
        let exact = solve(&out.instance, a, b, Mode::Exact, 5_000_000)?;
        println!("  {family} exact feasible = {}", exact.verdict.is_feasible());
        if let Some(c) = coloring {
            for variant in ColoringVariant::ALL {
                let t = if variant == ColoringVariant::PawK4 { 0 } else { 2 };
                let out = reduce_3col(h, variant, t)?;
                let fam = out.family.family().expect("a forbidden pair");
                let g = three_coloring_witness(h, &c, variant, t);
                println!("  {:<10} n={:<3} witness ok={}", variant.name(), out.instance.n(), verify_sandwich(&out.instance, &g, fam)?);
            }
        }
    }
    Ok(())
}
