//! Generate a planted instance, save it in the text format and solve the
//! reloaded copy.

use quartet_sandwich::poly::{solve, Mode};
use quartet_sandwich::tooling::{generate_instance, Format, GenConfig, InstanceDocument};
use quartet_sandwich::{ForbiddenFamily, Quartet};

fn main() -> quartet_sandwich::Result<()> {
    let family = ForbiddenFamily::pair(Quartet::P4, Quartet::CoDiamond)?;
    let generated = generate_instance(&GenConfig::planted(10, family.clone()), 42)?;
    let hidden = generated.hidden.as_ref().expect("planted mode keeps the hidden graph");
    println!("hidden {family}-free graph with {} edges", hidden.edge_count());

    let text = InstanceDocument::new(&generated.instance).render(Format::Text);
    print!("{text}");
    let reloaded = InstanceDocument::parse(&text, None)?.instance()?;
    assert_eq!(reloaded, generated.instance);

    let out = solve(&reloaded, Quartet::P4, Quartet::CoDiamond, Mode::Auto, 0)?;
    println!("{} says feasible = {}", out.method, out.verdict.is_feasible());
    Ok(())
}
