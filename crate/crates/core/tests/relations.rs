//! Every relation variant against the bracket datum, and move application.

use vtangle::evaluator::EvalContext;
use vtangle::rewrite::{all_moves, apply_move, find_matches, relation, MoveId};
use vtangle::selftest::relation_suite;

#[test]
fn every_variant_is_sound() {
    let results = relation_suite(&EvalContext::bracket());
    assert_eq!(results.len(), MoveId::ALL.len());
    for r in &results {
        assert!(r.ok(), "{} fails on variants {:?}", r.id, r.failures);
    }
    assert_eq!(results.iter().map(|r| r.variants).sum::<usize>(), 282);
}

#[test]
fn sides_agree_with_the_naive_evaluator() {
    let ctx = EvalContext::bracket();
    for id in MoveId::ALL {
        for (l, r) in relation(id) {
            assert_eq!(ctx.eval_term_naive(&l).unwrap(), ctx.eval_term_naive(&r).unwrap(), "{id}");
        }
    }
}

#[test]
fn each_move_rewrites_its_own_lhs_to_its_rhs() {
    for m in all_moves() {
        if m.lhs.slices().iter().all(|s| s.is_identity()) {
            continue;
        }
        let locs = find_matches(&m.lhs, &m);
        assert!(!locs.is_empty(), "{m} does not match its own left side");
        let out = apply_move(&m.lhs, &m, &locs[0]).unwrap();
        assert_eq!(out, m.rhs.elide_identities(), "{m}");
    }
}
