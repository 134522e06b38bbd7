//! Solve one small instance for {paw, C4} and {paw, co-C4}, checking
//! each witness.
//!
//! Run with `cargo run --example solve_instance`.

use quartet_sandwich::poly::{solve, Mode};
use quartet_sandwich::{verify_sandwich, ForbiddenFamily, Quartet, SandwichInstance};

fn main() -> quartet_sandwich::Result<()> {
    // A 5-cycle is mandatory; two chords may be added.
    let inst = SandwichInstance::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)], &[(0, 2), (0, 3)])?;
    for other in [Quartet::C4, Quartet::CoC4] {
        let family = ForbiddenFamily::pair(Quartet::Paw, other)?;
        // Auto mode uses the polynomial solver when there is one.
        let out = solve(&inst, Quartet::Paw, other, Mode::Auto, 100_000)?;
        println!("family   {family}");
        println!("method   {}", out.method);
        match out.verdict.witness() {
            Some(g) => {
                println!("witness  {:?}", g.edge_vec());
                println!("verified {}", verify_sandwich(&inst, g, &family)?);
            }
            None => println!("no {family}-free graph between the bounds"),
        }
    }
    Ok(())
}
