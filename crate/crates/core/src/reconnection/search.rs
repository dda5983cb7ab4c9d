use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::{merge_circles, reduce_r1_r2, smooth_crossing, MoveKind};
use crate::diagram::{EdgeId, LinkDiagram, Strand};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchMove {
    pub kind: MoveKind,
    pub site: usize,
    /// State after the move and Reidemeister I/II simplification.
    pub after: LinkDiagram,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub minimum: usize,
    /// The input after simplification; the first move acts on this.
    pub start: LinkDiagram,
    pub moves: Vec<SearchMove>,
    /// Distinct states generated.
    pub states: usize,
}

/// Fewest smoothings and free-loop merges that turn `d` into one
/// crossingless circle, simplifying by Reidemeister I/II after every move.
///
/// Breadth-first over states identified up to edge relabeling and crossing
/// order. `budget` caps the number of distinct states.
pub fn min_reconnections_search(d: &LinkDiagram, budget: usize) -> Result<SearchResult> {
    struct Node {
        diagram: LinkDiagram,
        parent: usize,
        kind: MoveKind,
        site: usize,
    }

    let start = reduce_r1_r2(d);
    let done = |x: &LinkDiagram| x.crossing_count() == 0 && x.free_loops() <= 1;
    let mut nodes = vec![Node {
        diagram: start.clone(),
        parent: usize::MAX,
        kind: MoveKind::Smooth,
        site: 0,
    }];
    let mut seen = HashMap::from([(state_key(&start), 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    let mut goal = done(&start).then_some(0);

    while goal.is_none() {
        let Some(i) = queue.pop_front() else {
            unreachable!("smoothing everything and merging always reaches a single circle");
        };
        let current = nodes[i].diagram.clone();
        let mut children: Vec<(MoveKind, usize, LinkDiagram)> = (0..current.crossing_count())
            .map(|k| (MoveKind::Smooth, k, smooth_crossing(&current, k).expect("index in range")))
            .collect();
        if current.free_loops() >= 2 {
            children.push((MoveKind::Merge, 0, merge_circles(&current, 0, 1)?));
        }
        for (kind, site, child) in children {
            let child = reduce_r1_r2(&child);
            let key = state_key(&child);
            if seen.contains_key(&key) {
                continue;
            }
            if nodes.len() >= budget {
                return Err(Error::BudgetExceeded { budget });
            }
            let id = nodes.len();
            seen.insert(key, id);
            let finished = done(&child);
            nodes.push(Node {
                diagram: child,
                parent: i,
                kind,
                site,
            });
            if finished {
                goal = Some(id);
                break;
            }
            queue.push_back(id);
        }
    }

    let mut path = Vec::new();
    let mut at = goal.expect("loop exits with a goal");
    while at != 0 {
        let n = &nodes[at];
        path.push(SearchMove {
            kind: n.kind,
            site: n.site,
            after: n.diagram.clone(),
        });
        at = n.parent;
    }
    path.reverse();
    Ok(SearchResult {
        minimum: path.len(),
        start,
        moves: path,
        states: nodes.len(),
    })
}

type PieceKey = Vec<([u32; 4], bool)>;

/// Invariant of a diagram under edge relabeling and crossing reordering.
fn state_key(d: &LinkDiagram) -> (usize, Vec<PieceKey>) {
    let mut pieces: Vec<PieceKey> = d
        .crossing_pieces()
        .iter()
        .map(|piece| {
            piece
                .iter()
                .flat_map(|&k| {
                    let x = &d.crossings()[k];
                    [x.incoming(Strand::Under), x.incoming(Strand::Over)]
                })
                .map(|e| relabel_from(d, e))
                .min()
                .expect("pieces are nonempty")
        })
        .collect();
    pieces.sort();
    (d.free_loops(), pieces)
}

/// Crossings of the piece containing `start`, renumbered by walking from
/// `start` and then from the first unnumbered incoming edge of each crossing
/// in order of discovery.
fn relabel_from(d: &LinkDiagram, start: EdgeId) -> PieceKey {
    let mut number = vec![0u32; d.edge_count()];
    let mut found = vec![false; d.crossing_count()];
    let mut order = Vec::new();
    let mut next = 1;
    let mut walk = |e0: EdgeId, number: &mut Vec<u32>, order: &mut Vec<usize>| {
        let mut e = e0;
        while number[e.index()] == 0 {
            number[e.index()] = next;
            next += 1;
            let (k, _) = d.head(e);
            if !found[k] {
                found[k] = true;
                order.push(k);
            }
            e = d.next_edge(e);
        }
    };
    walk(start, &mut number, &mut order);
    let mut i = 0;
    while i < order.len() {
        let x = &d.crossings()[order[i]];
        for strand in [Strand::Under, Strand::Over] {
            walk(x.incoming(strand), &mut number, &mut order);
        }
        i += 1;
    }
    let mut key: PieceKey = order
        .iter()
        .map(|&k| {
            let x = &d.crossings()[k];
            (x.quad().map(|e| number[e.index()]), x.sign() == crate::diagram::Sign::Positive)
        })
        .collect();
    key.sort_unstable();
    key
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn closure(text: &str) -> LinkDiagram {
        text.parse::<BraidWord>().unwrap().closure()
    }

    fn search(text: &str) -> usize {
        min_reconnections_search(&closure(text), 100_000).unwrap().minimum
    }

    #[test]
    fn small_cases() {
        assert_eq!(min_reconnections_search(&LinkDiagram::unknot(), 10).unwrap().minimum, 0);
        assert_eq!(search("2 | 1 1 1"), 2);
        assert_eq!(search("2 | 1 1"), 1);
        assert_eq!(search("2 | 1 -1"), 1);
        assert_eq!(search("3 | 1 -2 1 -2"), 2);
    }

    #[test]
    fn witness_replays() {
        let r = min_reconnections_search(&closure("3 | 1 1 1 2 2"), 100_000).unwrap();
        let mut d = r.start.clone();
        for m in &r.moves {
            d = match m.kind {
                MoveKind::Smooth => smooth_crossing(&d, m.site).unwrap(),
                MoveKind::Merge => merge_circles(&d, m.site, m.site + 1).unwrap(),
                MoveKind::SwitchGadget => unreachable!(),
            };
            d = reduce_r1_r2(&d);
            assert_eq!(d, m.after);
        }
        assert_eq!(d, LinkDiagram::unknot());
    }

    #[test]
    fn key_ignores_labels_and_order() {
        let a = closure("3 | 1 2 1 2");
        let b = closure("3 | 2 1 2 1");
        assert_ne!(a, b);
        assert_eq!(state_key(&a), state_key(&b));
        assert_ne!(state_key(&a), state_key(&a.mirror()));
    }

    #[test]
    fn budget_is_enforced() {
        let err = min_reconnections_search(&closure("2 | 1 1 1 1 1"), 2).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { budget: 2 }));
    }
}
