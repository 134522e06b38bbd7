//! Print the complexity of every pair of forbidden 4-vertex graphs, then
//! look one pair up by name.

use quartet_sandwich::catalog::{pair_status, render_status_table, status_table};
use quartet_sandwich::Quartet;

fn main() -> quartet_sandwich::Result<()> {
    print!("{}", render_status_table(&status_table()));

    let entry = pair_status(Quartet::from_name("co-claw")?, Quartet::from_name("C4")?)?;
    println!();
    println!("{{co-claw,C4}} is {}", entry.status);
    Ok(())
}
