mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quartet_sandwich::exact::solve_exact;
use quartet_sandwich::hardness::{
    chain_source, co_matched_sandwich, lift_witness, matching_chain_source, oracle_3col, oracle_chain_sandwich,
    oracle_one_in_three, reduce_3col, reduce_one_in_three, wrap_gadget, ColoringVariant, GadgetKind, Literal,
    OneInThreeInstance, ReductionOutput,
};
use quartet_sandwich::poly::{solve, Method, Mode};
use quartet_sandwich::{verify_sandwich, Graph, Quartet, SandwichInstance};

const BUDGET: u64 = 5_000_000;

fn exact_feasible(out: &ReductionOutput) -> bool {
    let fam = out.family.family().expect("a quartet family");
    solve_exact(&out.instance, fam, BUDGET).unwrap().is_feasible()
}

#[test]
fn triangle_is_its_own_witness() {
    let out = reduce_3col(&Graph::complete(3), ColoringVariant::PawK4, 0).unwrap();
    assert_eq!(out.instance.lower(), out.instance.upper());
    assert!(exact_feasible(&out));
}

#[test]
fn k4_is_not_three_colorable() {
    assert!(!oracle_3col(&Graph::complete(4)).unwrap());
    assert!(!exact_feasible(&reduce_3col(&Graph::complete(4), ColoringVariant::PawK4, 0).unwrap()));
}

#[test]
fn cycle_with_triangle_is_three_colorable() {
    let mut h = Graph::cycle(5).disjoint_union(&Graph::empty(1));
    h.add_edge(0, 5);
    h.add_edge(1, 5);
    assert!(oracle_3col(&h).unwrap());
    assert!(exact_feasible(&reduce_3col(&h, ColoringVariant::PawK4, 0).unwrap()));
}

#[test]
fn single_clause_reduces_to_feasible_instances() {
    let f = OneInThreeInstance::new(3, vec![[Literal::pos(0), Literal::pos(1), Literal::pos(2)]]).unwrap();
    assert!(oracle_one_in_three(&f).unwrap());
    let red = reduce_one_in_three(&f);
    assert!(co_matched_sandwich(&red.instance).unwrap().is_some());
    for kind in [GadgetKind::P4, GadgetKind::Pprime] {
        assert!(exact_feasible(&wrap_gadget(&red.instance, kind).unwrap()), "{kind}");
    }
}

#[test]
fn repeated_literal_clause_is_infeasible_everywhere() {
    let x = Literal::pos(0);
    let f = OneInThreeInstance::new(1, vec![[x, x, x]]).unwrap();
    assert!(!oracle_one_in_three(&f).unwrap());
    let red = reduce_one_in_three(&f);
    assert!(co_matched_sandwich(&red.instance).unwrap().is_none());
    for kind in [GadgetKind::P4, GadgetKind::Pprime] {
        assert!(!exact_feasible(&wrap_gadget(&red.instance, kind).unwrap()), "{kind}");
    }
}

#[test]
fn two_disjoint_edges_are_not_a_chain_graph() {
    let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    assert!(!oracle_chain_sandwich(&SandwichInstance::fixed(two_k2)).unwrap());
}

#[test]
fn chain_wraps_follow_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for i in 0..12 {
        let n = rng.gen_range(3..=5);
        let (kind, src) = if i % 2 == 0 {
            (GadgetKind::Ch3, chain_source(n, &mut rng))
        } else {
            (GadgetKind::Ech4, matching_chain_source(4, &mut rng).unwrap())
        };
        let wrapped = wrap_gadget(&src, kind).unwrap();
        let fam = wrapped.family.family().unwrap();
        let verdict = solve_exact(&wrapped.instance, fam, BUDGET).unwrap();
        assert_eq!(verdict.is_feasible(), oracle_chain_sandwich(&src).unwrap(), "{kind} on {src:?}");
        if let Some(chain) = quartet_sandwich::hardness::chain_sandwich_witness(&src).unwrap() {
            let lifted = lift_witness(kind, &chain, &chain.bipartition().unwrap());
            assert!(verify_sandwich(&wrapped.instance, &lifted, fam).unwrap());
        }
    }
}

#[test]
fn claw_co_claw_endpoint_rule_at_ten_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let fam = quartet_sandwich::ForbiddenFamily::pair(Quartet::Claw, Quartet::CoClaw).unwrap();
    let mut feasible = 0;
    for _ in 0..40 {
        let inst = common::random_instance(&mut rng, 10);
        let poly = solve(&inst, Quartet::Claw, Quartet::CoClaw, Mode::Poly, BUDGET).unwrap();
        assert!(matches!(poly.method, Method::Poly(_)));
        let exact = solve_exact(&inst, &fam, BUDGET).unwrap();
        assert_eq!(poly.verdict.is_feasible(), exact.is_feasible(), "{inst:?}");
        feasible += usize::from(exact.is_feasible());
    }
    assert!(feasible > 0 && feasible < 40, "sample should mix verdicts, got {feasible}/40");
}
