mod common;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{classify4, graph_from_bits, naive_contains, naive_feasible, naive_verify, small_instance};
use quartet_sandwich::catalog::{pair_status, status_table, Status};
use quartet_sandwich::exact::{solve_exact, solve_two_sat, Lit, TwoSatFormula};
use quartet_sandwich::poly::{complete_bipartite_sandwich, solve, Mode};
use quartet_sandwich::{find_induced, verify_sandwich, ForbiddenFamily, Graph, Quartet, SandwichInstance};

const BUDGET: u64 = 2_000_000;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, bits)| graph_from_bits(n, bits))
}

fn tractable_pairs() -> Vec<[Quartet; 2]> {
    status_table()
        .into_iter()
        .filter(|e| matches!(e.status, Status::Poly(_)))
        .map(|e| e.pair)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn complement_is_an_involution(g in graph(11)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn detection_commutes_with_complement(g in graph(8)) {
        let co = g.complement();
        for q in Quartet::ALL {
            prop_assert_eq!(find_induced(&g, q).is_some(), find_induced(&co, q.complement()).is_some());
            if let Some(t) = find_induced(&g, q) {
                prop_assert_eq!(classify4(&g, t), q);
            }
        }
    }

    #[test]
    fn detection_matches_naive_enumeration(g in graph(8)) {
        for q in Quartet::ALL {
            prop_assert_eq!(find_induced(&g, q).is_some(), naive_contains(&g, &[q]));
        }
    }

    #[test]
    fn lower_bound_that_is_free_verifies(seed in any::<u64>(), i in 0usize..30) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..9);
        let inst = small_instance(&mut rng, n, 28);
        let e = &status_table()[i];
        let fam = ForbiddenFamily::pair(e.pair[0], e.pair[1]).unwrap();
        let g = inst.lower();
        let naive = naive_verify(&inst, g, &e.pair);
        prop_assert_eq!(verify_sandwich(&inst, g, &fam).unwrap(), naive);
        if fam.is_free(g) {
            prop_assert!(naive);
        }
    }

    #[test]
    fn components_of_a_disjoint_union(a in graph(7), b in graph(7)) {
        let n = a.n();
        let mut expected: Vec<Vec<usize>> = a.components();
        expected.extend(b.components().into_iter().map(|c| c.into_iter().map(|v| v + n).collect()));
        expected.sort();
        let mut got = a.disjoint_union(&b).components();
        got.sort();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn exact_search_matches_enumeration(seed in any::<u64>(), i in 0usize..30) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=6);
        let inst = small_instance(&mut rng, n, 12);
        let e = &status_table()[i];
        let fam = ForbiddenFamily::pair(e.pair[0], e.pair[1]).unwrap();
        let verdict = solve_exact(&inst, &fam, BUDGET).unwrap();
        prop_assert_eq!(verdict.is_feasible(), naive_feasible(&inst, &e.pair));
        if let Some(w) = verdict.witness() {
            prop_assert!(naive_verify(&inst, w, &e.pair));
        }
        prop_assert_eq!(solve_exact(&inst, &fam, BUDGET).unwrap(), verdict);
    }

    #[test]
    fn two_sat_matches_truth_table(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=10);
        let mut f = TwoSatFormula::new(n);
        for _ in 0..rng.gen_range(0..3 * n) {
            let a = Lit::new(rng.gen_range(0..n), rng.gen_bool(0.5));
            let b = Lit::new(rng.gen_range(0..n), rng.gen_bool(0.5));
            f.add_clause(a, b);
        }
        let brute = (0u32..1 << n).any(|m| f.is_satisfied_by(&(0..n).map(|i| m >> i & 1 == 1).collect::<Vec<_>>()));
        match solve_two_sat(&f) {
            Some(model) => prop_assert!(f.is_satisfied_by(&model)),
            None => prop_assert!(!brute),
        }
        prop_assert_eq!(solve_two_sat(&f).is_some(), brute);
    }

    #[test]
    fn solving_commutes_with_complement(seed in any::<u64>(), i in 0usize..15) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(4..10);
        let inst = common::random_instance(&mut rng, n);
        let [a, b] = tractable_pairs()[i];
        let direct = solve(&inst, a, b, Mode::Poly, BUDGET).unwrap();
        let dual = solve(&inst.complement(), a.complement(), b.complement(), Mode::Poly, BUDGET).unwrap();
        prop_assert_eq!(direct.verdict.is_feasible(), dual.verdict.is_feasible());
        if let (Some(w), Some(v)) = (direct.verdict.witness(), dual.verdict.witness()) {
            let fam = ForbiddenFamily::pair(a, b).unwrap();
            prop_assert!(verify_sandwich(&inst, &v.complement(), &fam).unwrap());
            prop_assert!(verify_sandwich(&inst, w, &fam).unwrap());
        }
    }

    #[test]
    fn more_optional_edges_keep_feasibility(seed in any::<u64>(), i in 0usize..15) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(4..10);
        let [a, b] = tractable_pairs()[i];
        let mut inst = common::random_instance(&mut rng, n);
        let mut was_feasible = false;
        for _ in 0..6 {
            let feasible = solve(&inst, a, b, Mode::Poly, BUDGET).unwrap().verdict.is_feasible();
            prop_assert!(feasible || !was_feasible, "lost feasibility after widening {:?}", inst);
            was_feasible = feasible;
            let mut upper = inst.upper().clone();
            let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
            if u != v {
                upper.add_edge(u, v);
            }
            inst = SandwichInstance::from_graphs(inst.lower().clone(), upper).unwrap();
        }
    }

    #[test]
    fn complete_bipartite_sandwich_matches_enumeration(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=8);
        let inst = common::random_instance(&mut rng, n);
        let n = inst.n();
        let exists = (0u32..1 << n).any(|m| {
            (0..n).all(|u| (u + 1..n).all(|v| {
                let cross = (m >> u & 1) != (m >> v & 1);
                if cross { inst.is_allowed(u, v) } else { !inst.is_mandatory(u, v) }
            }))
        });
        let verdict = complete_bipartite_sandwich(&inst);
        prop_assert_eq!(verdict.is_feasible(), exists);
        if let Some(w) = verdict.witness() {
            prop_assert!(inst.admits(w));
            let side = w.bipartition().unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    prop_assert_eq!(w.has_edge(u, v), side[u] != side[v]);
                }
            }
        }
    }

    #[test]
    fn solver_output_is_deterministic(seed in any::<u64>(), i in 0usize..15) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(4..10);
        let inst = common::random_instance(&mut rng, n);
        let [a, b] = tractable_pairs()[i];
        prop_assert_eq!(solve(&inst, a, b, Mode::Auto, BUDGET).unwrap(), solve(&inst, a, b, Mode::Auto, BUDGET).unwrap());
    }
}

#[test]
fn status_is_invariant_under_complement() {
    let mut pairs = 0;
    for (i, &a) in Quartet::ALL.iter().enumerate() {
        for &b in &Quartet::ALL[i + 1..] {
            let direct = pair_status(a, b).unwrap().status;
            assert_eq!(direct, pair_status(a.complement(), b.complement()).unwrap().status, "{a},{b}");
            pairs += 1;
        }
    }
    assert_eq!(pairs, 55);
}

#[test]
fn quartet_complement_matches_graph_complement() {
    for q in Quartet::ALL {
        let co = q.graph().complement();
        assert_eq!(classify4(&co, [0, 1, 2, 3]), q.complement());
        assert_eq!(q.complement().complement(), q);
    }
}
