//! Run a small benchmark suite and print it as CSV.
//!
//! Pass `--default` to run the full default suite (slow in debug builds).

use quartet_sandwich::tooling::{bench, default_suite, render_csv, Suite, SuiteEntry};
use quartet_sandwich::Quartet;

fn main() -> quartet_sandwich::Result<()> {
    let suite = if std::env::args().any(|a| a == "--default") {
        default_suite()
    } else {
        Suite {
            entries: vec![
                SuiteEntry { pair: [Quartet::Paw, Quartet::Claw], n_min: 4, n_max: 8, count: 50, seed: 1 },
                SuiteEntry { pair: [Quartet::Claw, Quartet::CoClaw], n_min: 4, n_max: 8, count: 50, seed: 2 },
                SuiteEntry { pair: [Quartet::C4, Quartet::K4], n_min: 4, n_max: 7, count: 20, seed: 3 },
            ],
        }
    };
    let rows = bench(&suite, 1_000_000, true)?;
    print!("{}", render_csv(&rows));
    Ok(())
}
