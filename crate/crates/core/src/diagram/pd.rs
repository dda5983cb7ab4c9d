//! PD-code text: `[[a,b,c,d],...]` with an optional ` + L<k>` free-loop suffix.
//!
//! Orientation is not written down; it is recovered from the numbering. Along
//! each component the edge labels form a consecutive block that increases in
//! the direction of travel and wraps from the block maximum to its minimum.

use super::{Crossing, EdgeId, LinkDiagram, Sign};
use crate::error::{Error, Result};

pub fn parse_pd(text: &str) -> Result<LinkDiagram> {
    let text = text.trim();
    let (body, loops) = match text.rsplit_once('+') {
        Some((body, suffix)) => {
            let suffix = suffix.trim();
            let k = suffix
                .strip_prefix('L')
                .and_then(|k| k.trim().parse::<usize>().ok())
                .ok_or_else(|| Error::MalformedCode(format!("bad free-loop suffix `{suffix}`")))?;
            (body.trim(), k)
        }
        None => (text, 0),
    };
    let quads: Vec<[u32; 4]> =
        serde_json::from_str(body).map_err(|e| Error::MalformedCode(e.to_string()))?;
    from_quads(&quads, loops)
}

pub(crate) fn from_quads(quads: &[[u32; 4]], free_loops: usize) -> Result<LinkDiagram> {
    let c = quads.len();
    let n = 2 * c;
    let mut count = vec![0usize; n];
    for q in quads {
        for &e in q {
            if e == 0 || e as usize > n {
                return Err(Error::InvalidEdgeSet(format!("edge {e} outside 1..={n}")));
            }
            count[e as usize - 1] += 1;
        }
    }
    if let Some(i) = count.iter().position(|&k| k != 2) {
        return Err(Error::InvalidEdgeSet(format!(
            "edge {} occurs {} times, expected 2",
            i + 1,
            count[i]
        )));
    }

    // Edges paired through a crossing on the same strand.
    let mut partner: Vec<Vec<usize>> = vec![Vec::new(); n];
    for q in quads {
        for (x, y) in [(q[0], q[2]), (q[1], q[3])] {
            let (x, y) = (x as usize - 1, y as usize - 1);
            partner[x].push(y);
            partner[y].push(x);
        }
    }

    // Components as edge blocks [lo, hi].
    let mut block = vec![(0usize, 0usize); n];
    let mut seen = vec![false; n];
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < members.len() {
            for &p in &partner[members[i]] {
                if !seen[p] {
                    seen[p] = true;
                    members.push(p);
                }
            }
            i += 1;
        }
        let lo = *members.iter().min().unwrap();
        let hi = *members.iter().max().unwrap();
        if hi - lo + 1 != members.len() {
            return Err(Error::OrientationConflict(format!(
                "component through edge {} is not numbered by a consecutive block",
                start + 1
            )));
        }
        for m in members {
            block[m] = (lo, hi);
        }
    }
    let succ = |e: usize| {
        let (lo, hi) = block[e];
        if e == hi {
            lo
        } else {
            e + 1
        }
    };
    let size = |e: usize| block[e].1 - block[e].0 + 1;

    // Which edge enters each crossing on its over-strand: Some(true) for d.
    let mut over_from_d: Vec<Option<bool>> = vec![None; c];
    for (k, q) in quads.iter().enumerate() {
        let [a, b, cc, d] = q.map(|e| e as usize - 1);
        if cc != succ(a) {
            return Err(Error::OrientationConflict(format!(
                "under-strand {} -> {} at crossing {k} runs against the numbering",
                a + 1,
                cc + 1
            )));
        }
        match size(b) {
            1 => {
                return Err(Error::OrientationConflict(format!(
                    "single-edge component {} over-crossing at {k} has no direction",
                    b + 1
                )))
            }
            2 => {}
            _ => {
                over_from_d[k] = if b == succ(d) {
                    Some(true)
                } else if d == succ(b) {
                    Some(false)
                } else {
                    return Err(Error::OrientationConflict(format!(
                        "over-strand {}-{} at crossing {k} skips along its component",
                        b + 1,
                        d + 1
                    )));
                };
            }
        }
    }

    // Two-edge components: each edge must enter exactly one crossing.
    let mut entering = vec![0usize; n];
    for q in quads {
        entering[q[0] as usize - 1] += 1;
    }
    for (k, q) in quads.iter().enumerate() {
        if let Some(from_d) = over_from_d[k] {
            let e = if from_d { q[3] } else { q[1] };
            entering[e as usize - 1] += 1;
        }
    }
    for (k, q) in quads.iter().enumerate() {
        if over_from_d[k].is_some() {
            continue;
        }
        let (b, d) = (q[1] as usize - 1, q[3] as usize - 1);
        let from_d = match (entering[b], entering[d]) {
            (0, 0) => b > d,
            (1, 0) => true,
            (0, 1) => false,
            _ => {
                return Err(Error::OrientationConflict(format!(
                    "edges {} and {} both already enter a crossing",
                    b + 1,
                    d + 1
                )))
            }
        };
        over_from_d[k] = Some(from_d);
        entering[if from_d { d } else { b }] += 1;
    }

    let crossings = quads
        .iter()
        .zip(&over_from_d)
        .map(|(q, from_d)| {
            let [a, b, cc, d] = q.map(EdgeId);
            if from_d.expect("resolved") {
                Crossing::from_strands((a, cc), (d, b), Sign::Positive)
            } else {
                Crossing::from_strands((a, cc), (b, d), Sign::Negative)
            }
        })
        .collect();
    LinkDiagram::from_crossings(crossings, free_loops)
}
