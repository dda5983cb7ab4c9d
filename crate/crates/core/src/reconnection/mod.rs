//! Reconnections on diagrams: oriented smoothings, merges of free loops, the
//! crossing-switch gadget, unknotting plans, cascades and a brute-force
//! minimum search.

mod cascade;
mod reduce;
mod search;

use serde::{Deserialize, Serialize};

use crate::diagram::{LinkDiagram, Rewire};
use crate::error::{Error, Result};
use crate::seifert::{seifert_circles, seifert_graph, UnionFind};

pub use cascade::{cascade, Policy};
pub use reduce::{find_r1, find_r2, reduce_r1_r2, verify_unknot, UnknotVerdict};
pub use search::{min_reconnections_search, SearchMove, SearchResult};

/// Replaces crossing `k` by its orientation-respecting smoothing.
///
/// Later crossings shift down by one index.
pub fn smooth_crossing(d: &LinkDiagram, k: usize) -> Result<LinkDiagram> {
    d.crossing(k)?;
    let mut r = Rewire::from_diagram(d);
    r.smooth(k);
    Ok(r.finish())
}

/// Joins free loops `i` and `j` into one.
pub fn merge_circles(d: &LinkDiagram, i: usize, j: usize) -> Result<LinkDiagram> {
    if i == j {
        return Err(Error::SameCircle(i));
    }
    let free = d.free_loops();
    if i >= free || j >= free {
        return Err(Error::NotFreeLoops { i, j, free });
    }
    let mut r = Rewire::from_diagram(d);
    r.remove_free_loop();
    Ok(r.finish())
}

/// Switches crossing `k` using two reconnections.
///
/// Two curls carrying the original sign are spliced in just after the
/// crossing on its new under-strand, so the writhe is unchanged. Returns the
/// new diagram and the cost.
pub fn crossing_switch_gadget(d: &LinkDiagram, k: usize) -> Result<(LinkDiagram, usize)> {
    let sign = d.crossing_sign(k)?;
    let mut r = Rewire::from_diagram(d);
    let x = r.get_mut(k);
    x.switch();
    let edge = x.under.1;
    r.insert_curl(edge, sign);
    r.insert_curl(edge, sign);
    Ok((r.finish(), 2))
}

/// Crossings to keep (a spanning tree of the Seifert graph) and crossings to
/// smooth, in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReconnectionPlan {
    pub keep: Vec<usize>,
    pub smooth_order: Vec<usize>,
    pub claimed_cost: usize,
}

pub fn plan_unknotting(d: &LinkDiagram) -> Result<ReconnectionPlan> {
    if !d.is_connected() {
        return Err(Error::DisconnectedDiagram);
    }
    let keep = seifert_graph(d).spanning_tree();
    let smooth_order: Vec<usize> = (0..d.crossing_count()).filter(|k| !keep.contains(k)).collect();
    Ok(ReconnectionPlan {
        claimed_cost: smooth_order.len(),
        keep,
        smooth_order,
    })
}

/// Executes a plan, smoothing in the given order. Indices refer to `d`.
pub fn apply_plan(d: &LinkDiagram, p: &ReconnectionPlan) -> Result<CascadeTrace> {
    apply_plan_bounded(d, p, usize::MAX)
}

pub(crate) fn apply_plan_bounded(
    d: &LinkDiagram,
    p: &ReconnectionPlan,
    max_steps: usize,
) -> Result<CascadeTrace> {
    check_plan(d, p)?;
    let mut trace = CascadeTrace::start(d);
    let mut done: Vec<usize> = Vec::with_capacity(p.smooth_order.len());
    for &k in &p.smooth_order {
        if trace.steps.len() == max_steps {
            return Err(Error::StepBudgetExceeded {
                max_steps,
                trace: Box::new(trace),
            });
        }
        let shift = done.iter().filter(|&&j| j < k).count();
        trace.smooth(k - shift)?;
        done.push(k);
    }
    Ok(trace)
}

fn check_plan(d: &LinkDiagram, p: &ReconnectionPlan) -> Result<()> {
    let c = d.crossing_count();
    let mut seen = vec![false; c];
    for &k in p.keep.iter().chain(&p.smooth_order) {
        if k >= c {
            return Err(Error::InvalidPlan(format!("crossing {k} out of range (c = {c})")));
        }
        if std::mem::replace(&mut seen[k], true) {
            return Err(Error::InvalidPlan(format!("crossing {k} listed twice")));
        }
    }
    if let Some(k) = seen.iter().position(|s| !s) {
        return Err(Error::InvalidPlan(format!("crossing {k} is neither kept nor smoothed")));
    }
    if p.claimed_cost != p.smooth_order.len() {
        return Err(Error::InvalidPlan(format!(
            "claimed cost {} but {} smoothings",
            p.claimed_cost,
            p.smooth_order.len()
        )));
    }
    let circles = seifert_circles(d);
    let s = circles.count;
    if p.keep.len() + 1 != s {
        return Err(Error::InvalidPlan(format!(
            "{} kept crossings cannot span {s} Seifert circles",
            p.keep.len()
        )));
    }
    let mut uf = UnionFind::new(s);
    for &k in &p.keep {
        let band = &seifert_graph(d).edges[k];
        if !uf.union(band.circles.0, band.circles.1) {
            return Err(Error::InvalidPlan(format!("kept crossing {k} closes a cycle")));
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MoveKind {
    Smooth,
    Merge,
    SwitchGadget,
}

impl MoveKind {
    pub fn cost(self) -> usize {
        match self {
            MoveKind::Smooth | MoveKind::Merge => 1,
            MoveKind::SwitchGadget => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub components: usize,
    pub writhe: i32,
    pub crossings: usize,
}

impl Counts {
    pub fn of(d: &LinkDiagram) -> Counts {
        Counts {
            components: d.component_count(),
            writhe: d.writhe(),
            crossings: d.crossing_count(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub kind: MoveKind,
    /// Crossing index for smooths and gadgets, the first loop for merges.
    pub site: usize,
    /// Sign of the crossing acted on.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i32>,
    pub after: Counts,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CascadeTrace {
    pub initial: Counts,
    pub steps: Vec<TraceStep>,
    pub total_reconnections: usize,
    #[serde(rename = "final")]
    pub final_diagram: LinkDiagram,
}

impl CascadeTrace {
    pub fn start(d: &LinkDiagram) -> CascadeTrace {
        CascadeTrace {
            initial: Counts::of(d),
            steps: Vec::new(),
            total_reconnections: 0,
            final_diagram: d.clone(),
        }
    }

    fn push(&mut self, kind: MoveKind, site: usize, sign: Option<i32>, next: LinkDiagram) {
        self.steps.push(TraceStep {
            kind,
            site,
            sign,
            after: Counts::of(&next),
        });
        self.total_reconnections += kind.cost();
        self.final_diagram = next;
    }

    pub fn smooth(&mut self, k: usize) -> Result<()> {
        let sign = self.final_diagram.crossing_sign(k)?.value();
        let next = smooth_crossing(&self.final_diagram, k)?;
        self.push(MoveKind::Smooth, k, Some(sign), next);
        Ok(())
    }

    pub fn merge(&mut self, i: usize, j: usize) -> Result<()> {
        let next = merge_circles(&self.final_diagram, i, j)?;
        self.push(MoveKind::Merge, i, None, next);
        Ok(())
    }

    pub fn switch_gadget(&mut self, k: usize) -> Result<()> {
        let sign = self.final_diagram.crossing_sign(k)?.value();
        let (next, _) = crossing_switch_gadget(&self.final_diagram, k)?;
        self.push(MoveKind::SwitchGadget, k, Some(sign), next);
        Ok(())
    }

    /// Counts before step `i`.
    pub fn before(&self, i: usize) -> Counts {
        if i == 0 {
            self.initial
        } else {
            self.steps[i - 1].after
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{torus_braid, BraidWord};
    use crate::diagram::parse_pd;

    fn closure(text: &str) -> LinkDiagram {
        text.parse::<BraidWord>().unwrap().closure()
    }

    #[test]
    fn smoothing_a_trefoil_crossing_gives_a_two_component_link() {
        let d = closure("2 | 1 1 1");
        for k in 0..3 {
            let s = smooth_crossing(&d, k).unwrap();
            assert_eq!((s.component_count(), s.crossing_count()), (2, 2));
            assert_eq!(s.writhe(), 2);
        }
        assert!(matches!(smooth_crossing(&d, 3), Err(Error::IndexOutOfRange { index: 3, len: 3 })));
    }

    #[test]
    fn smoothing_a_hopf_crossing_leaves_a_curl() {
        let d = closure("2 | 1 1");
        for k in 0..2 {
            let s = smooth_crossing(&d, k).unwrap();
            assert_eq!((s.component_count(), s.crossing_count()), (1, 1));
            assert_eq!(verify_unknot(&s), UnknotVerdict::Confirmed);
        }
    }

    #[test]
    fn smoothing_everything_leaves_the_seifert_circles() {
        for text in ["2 | 1 1 1", "3 | 1 -2 1 -2", "4 | 1 2 3 1 2 3 -2"] {
            let d = closure(text);
            let s = seifert_circles(&d).count;
            let mut e = d.clone();
            while e.crossing_count() > 0 {
                e = smooth_crossing(&e, e.crossing_count() / 2).unwrap();
            }
            assert_eq!(e.free_loops(), s, "{text}");
            assert_eq!(e.component_count(), s);
        }
    }

    #[test]
    fn merges() {
        let d = LinkDiagram::unlink(3);
        let d = merge_circles(&d, 0, 2).unwrap();
        let d = merge_circles(&d, 1, 0).unwrap();
        assert_eq!(d, LinkDiagram::unknot());
        assert!(matches!(merge_circles(&d, 0, 0), Err(Error::SameCircle(0))));
        assert!(matches!(merge_circles(&d, 0, 1), Err(Error::NotFreeLoops { free: 1, .. })));
        let hopf = closure("2 | 1 1");
        assert_eq!(merge_circles(&hopf, 0, 1).unwrap_err().kind(), "NotFreeLoops");
    }

    #[test]
    fn trefoil_plan() {
        let d = closure("2 | 1 1 1");
        let p = plan_unknotting(&d).unwrap();
        assert_eq!(p.keep, vec![0]);
        assert_eq!(p.smooth_order, vec![1, 2]);
        assert_eq!(p.claimed_cost, 2);
        let t = apply_plan(&d, &p).unwrap();
        assert_eq!(t.total_reconnections, 2);
        assert_eq!(t.final_diagram.component_count(), 1);
        assert_eq!(t.final_diagram.crossing_count(), 1);
        assert_eq!(verify_unknot(&t.final_diagram), UnknotVerdict::Confirmed);
    }

    #[test]
    fn torus_plans_have_the_expected_length() {
        for (p, q) in [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)] {
            let d = torus_braid(p, q).unwrap().closure();
            let plan = plan_unknotting(&d).unwrap();
            assert_eq!(plan.claimed_cost, (p - 1) * (q - 1));
            assert_eq!(plan.keep.len(), p - 1);
        }
    }

    #[test]
    fn unknot_and_empty_plan() {
        let d = LinkDiagram::unknot();
        let p = plan_unknotting(&d).unwrap();
        assert!(p.keep.is_empty() && p.smooth_order.is_empty());
        let t = apply_plan(&d, &p).unwrap();
        assert_eq!(t.final_diagram, d);
        assert!(t.steps.is_empty());
        assert_eq!(plan_unknotting(&LinkDiagram::unlink(2)).unwrap_err().kind(), "DisconnectedDiagram");
    }

    #[test]
    fn bad_plans_are_rejected() {
        let d = closure("2 | 1 1 1");
        let bad = |keep: Vec<usize>, smooth_order: Vec<usize>| {
            let claimed_cost = smooth_order.len();
            apply_plan(&d, &ReconnectionPlan { keep, smooth_order, claimed_cost }).unwrap_err().kind()
        };
        assert_eq!(bad(vec![0], vec![1]), "InvalidPlan");
        assert_eq!(bad(vec![0], vec![1, 1]), "InvalidPlan");
        assert_eq!(bad(vec![0], vec![1, 3]), "InvalidPlan");
        assert_eq!(bad(vec![0, 1], vec![2]), "InvalidPlan");
        assert_eq!(bad(vec![], vec![0, 1, 2]), "InvalidPlan");
        let p = ReconnectionPlan { keep: vec![2], smooth_order: vec![1, 0], claimed_cost: 3 };
        assert_eq!(apply_plan(&d, &p).unwrap_err().kind(), "InvalidPlan");
        // any single kept crossing works, in any smoothing order
        let p = ReconnectionPlan { keep: vec![2], smooth_order: vec![1, 0], claimed_cost: 2 };
        let t = apply_plan(&d, &p).unwrap();
        assert_eq!(verify_unknot(&t.final_diagram), UnknotVerdict::Confirmed);
    }

    #[test]
    fn gadget_preserves_writhe_and_unknots_the_trefoil() {
        let d = closure("2 | 1 1 1");
        for k in 0..3 {
            let (g, cost) = crossing_switch_gadget(&d, k).unwrap();
            assert_eq!(cost, 2);
            assert_eq!(g.writhe(), d.writhe());
            assert_eq!(g.crossing_count(), 5);
            assert_eq!(g.crossing_sign(k).unwrap().value(), -1);
            assert_eq!(verify_unknot(&g), UnknotVerdict::Confirmed);
        }
        assert_eq!(crossing_switch_gadget(&d, 9).unwrap_err().kind(), "IndexOutOfRange");
    }

    #[test]
    fn gadget_twice_cancels_up_to_curls() {
        for text in ["2 | 1 1 1", "3 | 1 -2 1 -2", "3 | 1 1 2 -1 2"] {
            let d = closure(text);
            for k in 0..d.crossing_count() {
                let (g, _) = crossing_switch_gadget(&d, k).unwrap();
                let (gg, _) = crossing_switch_gadget(&g, k).unwrap();
                assert_eq!(gg.crossing_count(), d.crossing_count() + 4);
                assert_eq!(reduce_r1_r2(&gg), reduce_r1_r2(&d), "{text} at {k}");
            }
        }
    }

    #[test]
    fn trace_serializes_final_field() {
        let d = parse_pd("[[1,1,2,2]]").unwrap();
        let mut t = CascadeTrace::start(&d);
        t.smooth(0).unwrap();
        t.merge(0, 1).unwrap();
        let json = serde_json::to_value(&t).unwrap();
        assert_eq!(json["total_reconnections"], 2);
        assert_eq!(json["final"]["free_loops"], 1);
        assert_eq!(json["steps"][0]["kind"], "smooth");
        let back: CascadeTrace = serde_json::from_value(json).unwrap();
        assert_eq!(back, t);
    }
}
