mod common;

use common::*;
use knotrecon::braid::torus_braid;
use knotrecon::invariants::{reconnection_bounds, BoundSide, BoundSource};
use knotrecon::reconnection::{
    apply_plan, cascade, min_reconnections_search, plan_unknotting, verify_unknot, Policy, UnknotVerdict,
};
use knotrecon::seifert::{seifert_circles, seifert_genus};

#[test]
fn fixtures_match_their_braid_closures() {
    assert_eq!(pd(CHAIN_LINK), braid("3 | 1 1 2 2").closure().canonical());
    assert_eq!(pd(TORUS_LINK_4_2), braid("2 | 1 1 1 1").closure().canonical());
}

#[test]
fn reversed_torus_link_is_positive_with_four_circles() {
    let l = pd(TORUS_LINK_4_2);
    let lr = pd(TORUS_LINK_4_2_REVERSED);
    assert!(l.is_positive() && lr.is_positive());
    assert_eq!((lr.crossing_count(), lr.component_count()), (4, 2));
    assert_eq!(seifert_circles(&lr).count, 4);
    // forgetting orientation, it is the mirror of L: every crossing flips
    // when one component of L's mirror is reversed
    assert_eq!(l.mirror().writhe(), -4);
    assert_eq!(lr.writhe(), 4);
}

#[test]
fn chain_link_plan_takes_two() {
    let d = pd(CHAIN_LINK);
    let plan = plan_unknotting(&d).unwrap();
    assert_eq!((plan.keep.len(), plan.claimed_cost), (2, 2));
    let t = apply_plan(&d, &plan).unwrap();
    assert_eq!(t.total_reconnections, 2);
    assert_eq!(verify_unknot(&t.final_diagram), UnknotVerdict::Confirmed);
    assert_eq!(seifert_genus(&d).unwrap().genus, 0);
}

#[test]
fn orientation_changes_the_plan_length() {
    let plan = |text: &str| plan_unknotting(&pd(text)).unwrap().claimed_cost;
    assert_eq!(plan(TORUS_LINK_4_2), 3);
    assert_eq!(plan(TORUS_LINK_4_2_REVERSED), 1);
}

#[test]
fn torus_bounds_are_exact_by_positivity() {
    for (p, q, r) in [(2, 3, 2), (4, 3, 6), (3, 5, 8)] {
        let b = torus_braid(p, q).unwrap();
        let bounds = reconnection_bounds(&b.closure(), Some(&b), None).unwrap();
        assert_eq!(bounds.exact, Some(r));
        let pos = bounds
            .certificates
            .iter()
            .find(|c| c.source == BoundSource::Positivity)
            .unwrap();
        assert_eq!((pos.side, pos.value, pos.decisive), (BoundSide::Lower, r, true));
    }
}

#[test]
fn cascades_on_the_chain_link() {
    let d = pd(CHAIN_LINK);
    assert_eq!(cascade(&d, Policy::Planned, 10).unwrap().total_reconnections, 2);
    // smoothing all four crossings leaves three circles and two merges
    let t = cascade(&d, Policy::Random { seed: 3 }, 10).unwrap();
    assert_eq!(t.total_reconnections, 6);
    let t = cascade(&d, Policy::GreedySplit, 10).unwrap();
    assert_eq!(t.total_reconnections, 6);
}

#[test]
fn search_examples() {
    let min = |d| min_reconnections_search(&d, 100_000).unwrap().minimum;
    assert_eq!(min(knotrecon::LinkDiagram::unknot()), 0);
    assert_eq!(min(braid("2 | 1 1 1").closure()), 2);
    assert_eq!(min(braid("2 | 1 1").closure()), 1);
    assert_eq!(min(pd(CHAIN_LINK)), 2);
    assert_eq!(min(pd(TORUS_LINK_4_2)), 3);
    assert_eq!(min(pd(TORUS_LINK_4_2_REVERSED)), 1);
    // smoothings and merges alone need four; the crossing switch reaches two
    assert_eq!(min(braid(SIX_TWO).closure()), 4);
}
