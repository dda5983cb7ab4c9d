use serde::{Deserialize, Serialize};

use crate::diagram::{LinkDiagram, Rewire};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnknotVerdict {
    Confirmed,
    Inconclusive,
}

/// Confirmed when greedy Reidemeister I/II simplification reaches a single
/// crossingless circle.
pub fn verify_unknot(d: &LinkDiagram) -> UnknotVerdict {
    let r = reduce_r1_r2(d);
    if r.crossing_count() == 0 && r.component_count() == 1 {
        UnknotVerdict::Confirmed
    } else {
        UnknotVerdict::Inconclusive
    }
}

/// Removes curls and cancelling bigons until none remain. Curls go first,
/// lowest crossing first.
pub fn reduce_r1_r2(d: &LinkDiagram) -> LinkDiagram {
    let mut d = d.clone();
    loop {
        let mut r = Rewire::from_diagram(&d);
        if let Some(k) = find_r1(&d) {
            r.erase(k);
        } else if let Some((a, b)) = find_r2(&d) {
            r.erase(a);
            r.erase(b);
        } else {
            return d;
        }
        d = r.finish();
    }
}

/// A crossing with an edge leaving one of its strands and entering the other.
pub fn find_r1(d: &LinkDiagram) -> Option<usize> {
    (1..=d.edge_count() as u32)
        .map(crate::diagram::EdgeId)
        .find_map(|e| {
            let (hk, hs) = d.head(e);
            let (tk, ts) = d.tail(e);
            (hk == tk && hs != ts).then_some(hk)
        })
}

/// Two crossings bounding a bigon face where one strand passes over at both
/// corners, with opposite signs.
pub fn find_r2(d: &LinkDiagram) -> Option<(usize, usize)> {
    let c = d.crossing_count();
    let mut ends: Vec<Vec<(usize, usize)>> = vec![Vec::new(); d.edge_count()];
    for (k, x) in d.crossings().iter().enumerate() {
        for (p, e) in x.quad().iter().enumerate() {
            ends[e.index()].push((k, p));
        }
    }
    let across = |k: usize, p: usize| -> (usize, usize) {
        let e = d.crossings()[k].quad()[p];
        let pair = &ends[e.index()];
        if pair[0] == (k, p) {
            pair[1]
        } else {
            pair[0]
        }
    };
    for k1 in 0..c {
        for p1 in 0..4 {
            let (k2, q2) = across(k1, p1);
            if k2 == k1 {
                continue;
            }
            let p2 = (q2 + 1) % 4;
            let (back, q1) = across(k2, p2);
            if back != k1 || (q1 + 1) % 4 != p1 {
                continue;
            }
            // positions 0 and 2 are the under-strand
            let same_level = p1 % 2 == q2 % 2;
            let opposite = d.crossings()[k1].sign() != d.crossings()[k2].sign();
            if same_level && opposite {
                return Some((k1.min(k2), k1.max(k2)));
            }
        }
    }
    None
}
