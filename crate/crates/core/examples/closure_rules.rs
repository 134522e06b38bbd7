//! Families decided by forced completion: each occurrence of a member has at
//! most one repair, so optional edges are added until nothing changes.

use quartet_sandwich::catalog::{closure_route, closure_rules, PatternFamily};
use quartet_sandwich::poly::{solve, Mode};
use quartet_sandwich::{ForbiddenFamily, Graph, Quartet, SandwichInstance};

fn main() -> quartet_sandwich::Result<()> {
    for rule in closure_rules() {
        let repair = match &rule.completion {
            Some(g) => format!("complete to {:?}", g.edge_vec()),
            None => "no repair".to_string(),
        };
        println!("{:<16} {:<8} {repair}", rule.family.to_string(), rule.member.name());
    }

    let fam = ForbiddenFamily::pair(Quartet::CoDiamond, Quartet::CoC4)?;
    let route = closure_route(&PatternFamily::from(&fam));
    println!("\n{fam}: complement first = {route:?}");

    // A diamond whose missing pair is optional must become K4.
    let mut upper = Graph::complete(4);
    let lower = {
        upper.add_edge(0, 3);
        let mut d = upper.clone();
        d.remove_edge(0, 3);
        d
    };
    let inst = SandwichInstance::from_graphs(lower, upper)?;
    let out = solve(&inst, Quartet::Diamond, Quartet::C4, Mode::Poly, 0)?;
    println!("{{diamond,C4}} on an optional diamond: {:?}", out.verdict.witness().map(|g| g.edge_count()));
    Ok(())
}
