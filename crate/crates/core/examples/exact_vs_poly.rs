//! Cross-check a polynomial solver against exact search on random instances.
//!
//! `cargo run --release --example exact_vs_poly -- paw,C4 500`

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quartet_sandwich::poly::{solve, Mode};
use quartet_sandwich::tooling::random_instance;
use quartet_sandwich::{ForbiddenFamily, Quartet};

fn main() -> quartet_sandwich::Result<()> {
    let mut args = std::env::args().skip(1);
    let spec = args.next().unwrap_or_else(|| "paw,C4".into());
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let fam = ForbiddenFamily::parse(&spec)?;
    let [a, b]: [Quartet; 2] = fam.members().try_into().expect("a pair");

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut feasible, mut nodes) = (0, 0);
    for i in 0..count {
        let inst = random_instance(4 + i % 6, &mut rng);
        let fast = solve(&inst, a, b, Mode::Poly, 0)?;
        let slow = solve(&inst, a, b, Mode::Exact, 1_000_000)?;
        assert_eq!(fast.verdict.is_feasible(), slow.verdict.is_feasible(), "disagreement on {inst:?}");
        feasible += usize::from(fast.verdict.is_feasible());
        nodes += slow.nodes;
    }
    println!("{fam}: {count} instances agree, {feasible} feasible, {nodes} search nodes");
    Ok(())
}
