//! Chain-graph sandwich sources wrapped with the Ch3 and ECh4 gadgets.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quartet_sandwich::hardness::{
    chain_sandwich_witness, chain_source, gadget, lift_witness, matching_chain_source, wrap_gadget, GadgetKind,
};
use quartet_sandwich::poly::{solve, Mode};
use quartet_sandwich::{verify_sandwich, SandwichInstance};

fn show(kind: GadgetKind, src: &SandwichInstance) -> quartet_sandwich::Result<()> {
    let wrapped = wrap_gadget(src, kind)?;
    let family = wrapped.family.family().expect("a forbidden pair").clone();
    let [a, b] = [family.members()[0], family.members()[1]];
    let exact = solve(&wrapped.instance, a, b, Mode::Exact, 5_000_000)?.verdict.is_feasible();
    let oracle = chain_sandwich_witness(src)?;
    print!("{kind:<6} {family:<18} n={:<3} exact={exact:<5} chain={:<5}", wrapped.instance.n(), oracle.is_some());
    if let Some(chain) = oracle {
        let sides = chain.bipartition().expect("chain graphs are bipartite");
        let lifted = lift_witness(kind, &chain, &sides);
        print!(" lift ok={}", verify_sandwich(&wrapped.instance, &lifted, &family)?);
    }
    println!();
    Ok(())
}

fn main() -> quartet_sandwich::Result<()> {
    for kind in [GadgetKind::Ch3, GadgetKind::Ech4] {
        println!("{kind}: {} vertices, {} edges", kind.order(), gadget(kind).edge_count());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..4 {
        show(GadgetKind::Ch3, &chain_source(6, &mut rng))?;
    }
    for _ in 0..4 {
        show(GadgetKind::Ech4, &matching_chain_source(4, &mut rng)?)?;
    }
    Ok(())
}
