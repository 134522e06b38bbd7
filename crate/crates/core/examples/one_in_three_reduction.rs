//! One-in-Three 3SAT to the co-matched bipartite sandwich, then to a pair
//! of forbidden graphs through the P4 gadget.

use quartet_sandwich::hardness::{
    co_matched_sandwich, lift_witness, one_in_three_model, reduce_one_in_three, wrap_gadget, GadgetKind,
    OneInThreeInstance,
};
use quartet_sandwich::poly::{solve, Mode};
use quartet_sandwich::verify_sandwich;

const FORMULA: &str = "\
c exactly one literal per clause
p oneinthree 4 2
1 2 -3 0
-1 3 4 0
";

fn main() -> quartet_sandwich::Result<()> {
    let f = OneInThreeInstance::parse(FORMULA)?;
    let model = one_in_three_model(&f)?;
    println!("formula {} variables, {} clauses, model {model:?}", f.num_vars(), f.clauses().len());

    let red = reduce_one_in_three(&f);
    let inst = &red.instance;
    println!(
        "co-matched instance: {} vertices, {} mandatory, {} optional",
        inst.n(),
        inst.mandatory_edges().len(),
        inst.optional_edges().len()
    );
    let Some((g, sides)) = co_matched_sandwich(inst)? else {
        println!("no co-matched bipartite sandwich");
        return Ok(());
    };

    let wrapped = wrap_gadget(inst, GadgetKind::P4)?;
    let family = wrapped.family.family().expect("a forbidden pair").clone();
    let lifted = lift_witness(GadgetKind::P4, &g, &sides);
    println!("{family} instance on {} vertices", wrapped.instance.n());
    println!("lifted witness verifies: {}", verify_sandwich(&wrapped.instance, &lifted, &family)?);

    let [a, b] = [family.members()[0], family.members()[1]];
    let out = solve(&wrapped.instance, a, b, Mode::Exact, 5_000_000)?;
    println!("exact search: feasible = {} after {} nodes", out.verdict.is_feasible(), out.nodes);
    Ok(())
}
