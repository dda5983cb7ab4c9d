use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{apply_plan_bounded, plan_unknotting, smooth_crossing, CascadeTrace};
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};

/// How a cascade picks its next crossing.
///
/// `Random` draws crossing indices uniformly from a ChaCha8 stream seeded
/// with `seed_from_u64(seed)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "policy")]
pub enum Policy {
    Random { seed: u64 },
    Planned,
    GreedySplit,
}

/// Smooths crossings chosen by `policy`, then merges free loops until one
/// remains. The planned policy stops after its plan, with the kept crossings
/// still in place.
pub fn cascade(d: &LinkDiagram, policy: Policy, max_steps: usize) -> Result<CascadeTrace> {
    if policy == Policy::Planned {
        let plan = plan_unknotting(d)?;
        return apply_plan_bounded(d, &plan, max_steps);
    }
    let mut rng = match policy {
        Policy::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut trace = CascadeTrace::start(d);
    loop {
        let current = &trace.final_diagram;
        let c = current.crossing_count();
        if c == 0 && current.free_loops() <= 1 {
            return Ok(trace);
        }
        if trace.steps.len() >= max_steps {
            return Err(Error::StepBudgetExceeded {
                max_steps,
                trace: Box::new(trace),
            });
        }
        if c == 0 {
            trace.merge(0, 1)?;
            continue;
        }
        let k = match rng.as_mut() {
            Some(rng) => rng.gen_range(0..c),
            None => most_splitting(current),
        };
        trace.smooth(k)?;
    }
}

fn most_splitting(d: &LinkDiagram) -> usize {
    let mut best = (0, 0);
    for k in 0..d.crossing_count() {
        let mu = smooth_crossing(d, k).expect("index in range").component_count();
        if mu > best.1 {
            best = (k, mu);
        }
    }
    best.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::reconnection::MoveKind;

    fn closure(text: &str) -> LinkDiagram {
        text.parse::<BraidWord>().unwrap().closure()
    }

    #[test]
    fn trefoil_planned_takes_two() {
        let t = cascade(&closure("2 | 1 1 1"), Policy::Planned, 100).unwrap();
        assert_eq!(t.total_reconnections, 2);
    }

    #[test]
    fn trefoil_random_takes_four() {
        for seed in 0..10 {
            let t = cascade(&closure("2 | 1 1 1"), Policy::Random { seed }, 100).unwrap();
            let kinds: Vec<MoveKind> = t.steps.iter().map(|s| s.kind).collect();
            assert_eq!(kinds, [MoveKind::Smooth, MoveKind::Smooth, MoveKind::Smooth, MoveKind::Merge]);
            assert_eq!(t.total_reconnections, 4);
            assert_eq!(t.final_diagram, LinkDiagram::unknot());
        }
    }

    #[test]
    fn random_is_reproducible() {
        let d = closure("4 | 1 -2 3 1 2 -3 2 1");
        let a = cascade(&d, Policy::Random { seed: 7 }, 100).unwrap();
        let b = cascade(&d, Policy::Random { seed: 7 }, 100).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn greedy_split_prefers_splitting_smoothings() {
        // every trefoil crossing is a self-crossing, so each smoothing splits
        let t = cascade(&closure("2 | 1 1 1"), Policy::GreedySplit, 100).unwrap();
        assert_eq!(t.steps[0].after.components, 2);
        assert_eq!(t.final_diagram, LinkDiagram::unknot());
    }

    #[test]
    fn budget_exhaustion_returns_the_partial_trace() {
        let err = cascade(&closure("2 | 1 1 1"), Policy::Random { seed: 0 }, 2).unwrap_err();
        match err {
            Error::StepBudgetExceeded { max_steps, trace } => {
                assert_eq!(max_steps, 2);
                assert_eq!(trace.steps.len(), 2);
            }
            other => panic!("unexpected {other:?}"),
        }
        let err = cascade(&closure("2 | 1 1 1"), Policy::Planned, 1).unwrap_err();
        assert_eq!(err.kind(), "StepBudgetExceeded");
    }
}
