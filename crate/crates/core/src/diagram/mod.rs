//! Oriented link diagrams stored as planar-diagram (PD) crossing quadruples.
//!
//! A crossing is written `[a, b, c, d]`: the four edge labels met when going
//! counterclockwise around the crossing, starting from the incoming edge of
//! the under-strand. The under-strand therefore runs `a -> c`. The over-strand
//! runs `d -> b` on a positive crossing and `b -> d` on a negative one.

mod pd;
pub(crate) mod rewire;

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use pd::parse_pd;
pub(crate) use rewire::{Oriented, Rewire};

/// Label of an edge of the projected 4-valent graph, `1..=2c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub u32);

impl EdgeId {
    pub(crate) fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn from_value(v: i32) -> Sign {
        if v < 0 {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Strand {
    Under,
    Over,
}

impl Strand {
    pub fn other(self) -> Strand {
        match self {
            Strand::Under => Strand::Over,
            Strand::Over => Strand::Under,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    quad: [EdgeId; 4],
    sign: Sign,
}

impl Crossing {
    /// Builds the PD quadruple of a crossing from its two oriented strands.
    pub fn from_strands(under: (EdgeId, EdgeId), over: (EdgeId, EdgeId), sign: Sign) -> Crossing {
        let quad = match sign {
            Sign::Positive => [under.0, over.1, under.1, over.0],
            Sign::Negative => [under.0, over.0, under.1, over.1],
        };
        Crossing { quad, sign }
    }

    pub fn quad(&self) -> [EdgeId; 4] {
        self.quad
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn incoming(&self, strand: Strand) -> EdgeId {
        match (strand, self.sign) {
            (Strand::Under, _) => self.quad[0],
            (Strand::Over, Sign::Positive) => self.quad[3],
            (Strand::Over, Sign::Negative) => self.quad[1],
        }
    }

    pub fn outgoing(&self, strand: Strand) -> EdgeId {
        match (strand, self.sign) {
            (Strand::Under, _) => self.quad[2],
            (Strand::Over, Sign::Positive) => self.quad[1],
            (Strand::Over, Sign::Negative) => self.quad[3],
        }
    }

    /// Same strands with over and under exchanged; the sign flips.
    pub fn switched(&self) -> Crossing {
        Crossing::from_strands(
            (self.incoming(Strand::Over), self.outgoing(Strand::Over)),
            (self.incoming(Strand::Under), self.outgoing(Strand::Under)),
            self.sign.flip(),
        )
    }
}

/// Summary numbers of a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramStats {
    pub c: usize,
    pub mu: usize,
    pub writhe: i32,
    pub positive: bool,
    pub connected: bool,
}

/// An oriented link diagram: crossings over numbered edges plus a count of
/// crossingless circles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DiagramRecord", into = "DiagramRecord")]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
    n_components: usize,
    /// Crossing and strand where each edge ends, indexed by `EdgeId::index`.
    heads: Vec<(usize, Strand)>,
    /// Crossing and strand where each edge starts.
    tails: Vec<(usize, Strand)>,
}

impl LinkDiagram {
    /// Validates oriented crossings; every edge `1..=2c` must enter exactly one
    /// crossing and leave exactly one.
    pub fn from_crossings(crossings: Vec<Crossing>, free_loops: usize) -> Result<LinkDiagram> {
        let n_edges = 2 * crossings.len();
        let mut heads = vec![None; n_edges];
        let mut tails = vec![None; n_edges];
        for (k, x) in crossings.iter().enumerate() {
            for strand in [Strand::Under, Strand::Over] {
                for (slot, e) in [(&mut heads, x.incoming(strand)), (&mut tails, x.outgoing(strand))] {
                    if e.0 == 0 || e.index() >= n_edges {
                        return Err(Error::InvalidEdgeSet(format!(
                            "edge {e} outside 1..={n_edges}"
                        )));
                    }
                    if slot[e.index()].replace((k, strand)).is_some() {
                        return Err(Error::OrientationConflict(format!(
                            "edge {e} is used twice in the same direction"
                        )));
                    }
                }
            }
        }
        let heads: Vec<_> = heads.into_iter().map(|h| h.expect("all edges covered")).collect();
        let tails: Vec<_> = tails.into_iter().map(|t| t.expect("all edges covered")).collect();

        let mut d = LinkDiagram {
            crossings,
            free_loops,
            n_components: 0,
            heads,
            tails,
        };
        d.n_components = d.component_edges().len() + free_loops;
        Ok(d)
    }

    /// The standard crossingless unknot.
    pub fn unknot() -> LinkDiagram {
        LinkDiagram::unlink(1)
    }

    pub fn unlink(loops: usize) -> LinkDiagram {
        LinkDiagram::from_crossings(Vec::new(), loops).expect("empty diagram is valid")
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, k: usize) -> Result<&Crossing> {
        self.crossings.get(k).ok_or(Error::IndexOutOfRange {
            index: k,
            len: self.crossings.len(),
        })
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        2 * self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn component_count(&self) -> usize {
        self.n_components
    }

    pub fn crossing_sign(&self, k: usize) -> Result<Sign> {
        Ok(self.crossing(k)?.sign)
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(|x| x.sign.value()).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.crossings.iter().all(|x| x.sign == Sign::Positive)
    }

    /// Crossing and strand the edge runs into.
    pub fn head(&self, e: EdgeId) -> (usize, Strand) {
        self.heads[e.index()]
    }

    /// Crossing and strand the edge comes out of.
    pub fn tail(&self, e: EdgeId) -> (usize, Strand) {
        self.tails[e.index()]
    }

    /// The edge following `e` along its component.
    pub fn next_edge(&self, e: EdgeId) -> EdgeId {
        let (k, strand) = self.head(e);
        self.crossings[k].outgoing(strand)
    }

    /// Edge cycles of the components that pass through crossings, each listed
    /// in travel order starting from its smallest edge.
    pub fn component_edges(&self) -> Vec<Vec<EdgeId>> {
        let mut seen = vec![false; self.edge_count()];
        let mut out = Vec::new();
        for start in 1..=self.edge_count() as u32 {
            let start = EdgeId(start);
            if seen[start.index()] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut e = start;
            while !seen[e.index()] {
                seen[e.index()] = true;
                cycle.push(e);
                e = self.next_edge(e);
            }
            out.push(cycle);
        }
        out
    }

    /// Connected pieces of the projected graph, as sorted crossing indices.
    pub fn crossing_pieces(&self) -> Vec<Vec<usize>> {
        let n = self.crossings.len();
        let mut piece = vec![usize::MAX; n];
        let mut out = Vec::new();
        for root in 0..n {
            if piece[root] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![root];
            piece[root] = id;
            let mut queue = VecDeque::from([root]);
            while let Some(k) = queue.pop_front() {
                for e in self.crossings[k].quad {
                    for (nb, _) in [self.head(e), self.tail(e)] {
                        if piece[nb] == usize::MAX {
                            piece[nb] = id;
                            members.push(nb);
                            queue.push_back(nb);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// True when the projected graph is one piece with no stray loops, or the
    /// diagram is a single crossingless circle.
    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            return self.free_loops == 1;
        }
        self.free_loops == 0 && self.crossing_pieces().len() == 1
    }

    pub fn stats(&self) -> DiagramStats {
        DiagramStats {
            c: self.crossing_count(),
            mu: self.component_count(),
            writhe: self.writhe(),
            positive: self.is_positive(),
            connected: self.is_connected(),
        }
    }

    /// Mirror image: every crossing switched, so every sign flips.
    pub fn mirror(&self) -> LinkDiagram {
        let crossings = self.crossings.iter().map(Crossing::switched).collect();
        LinkDiagram::from_crossings(crossings, self.free_loops).expect("switching preserves validity")
    }

    /// Same link with edges renumbered in the canonical way produced by every
    /// diagram-rewriting operation of this crate.
    pub fn canonical(&self) -> LinkDiagram {
        Rewire::from_diagram(self).finish()
    }

    /// PD text, e.g. `[[1,4,2,5],[3,6,4,1],[5,2,6,3]]`, with ` + L<k>` for free loops.
    pub fn to_pd(&self) -> String {
        let body: Vec<String> = self
            .crossings
            .iter()
            .map(|x| {
                let q = x.quad;
                format!("[{},{},{},{}]", q[0], q[1], q[2], q[3])
            })
            .collect();
        let mut s = format!("[{}]", body.join(","));
        if self.free_loops > 0 {
            s.push_str(&format!(" + L{}", self.free_loops));
        }
        s
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd())
    }
}

#[derive(Serialize, Deserialize)]
struct DiagramRecord {
    pd: Vec<[u32; 4]>,
    free_loops: usize,
}

impl From<LinkDiagram> for DiagramRecord {
    fn from(d: LinkDiagram) -> Self {
        DiagramRecord {
            pd: d.crossings.iter().map(|x| x.quad.map(|e| e.0)).collect(),
            free_loops: d.free_loops,
        }
    }
}

impl TryFrom<DiagramRecord> for LinkDiagram {
    type Error = Error;

    fn try_from(r: DiagramRecord) -> Result<Self> {
        pd::from_quads(&r.pd, r.free_loops)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn closure(text: &str) -> LinkDiagram {
        text.parse::<BraidWord>().unwrap().closure()
    }

    #[test]
    fn signs_follow_braid_letters() {
        let d = closure("2 | 1 1 1");
        assert!(d.crossings().iter().all(|x| x.sign() == Sign::Positive));
        let d = closure("2 | -1 -1 -1");
        assert!(d.crossings().iter().all(|x| x.sign() == Sign::Negative));
        let d = closure("3 | 1 -2 1 -2");
        let signs: Vec<i32> = (0..4).map(|k| d.crossing_sign(k).unwrap().value()).collect();
        assert_eq!(signs, vec![1, -1, 1, -1]);
    }

    #[test]
    fn crossing_sign_out_of_range() {
        let d = closure("2 | 1 1 1");
        assert!(matches!(d.crossing_sign(3), Err(Error::IndexOutOfRange { index: 3, len: 3 })));
    }

    #[test]
    fn writhe_examples() {
        assert_eq!(closure("2 | 1 1 1").writhe(), 3);
        assert_eq!(closure("3 | 1 -2 1 -2").writhe(), 0);
        assert_eq!(LinkDiagram::unknot().writhe(), 0);
    }

    #[test]
    fn component_counts() {
        assert_eq!(closure("2 | 1 1 1").component_count(), 1);
        assert_eq!(closure("2 | 1 1").component_count(), 2);
        for n in 1..6 {
            assert_eq!(closure(&format!("{n} |")).component_count(), n);
        }
    }

    #[test]
    fn positivity() {
        assert!(closure("2 | 1 1 1").is_positive());
        assert!(!closure("3 | 1 -2 1 -2").is_positive());
        assert!(LinkDiagram::unknot().is_positive());
    }

    #[test]
    fn connectivity() {
        assert!(closure("2 | 1 1 1").is_connected());
        assert!(!LinkDiagram::unlink(2).is_connected());
        assert!(!closure("3 |").is_connected());
        assert!(LinkDiagram::unknot().is_connected());
        // two separate clasps share no crossing
        assert!(!closure("4 | 1 1 3 3").is_connected());
    }

    #[test]
    fn mirror_flips_writhe_and_is_an_involution() {
        let d = closure("2 | 1 1 1");
        let m = d.mirror();
        assert_eq!(m.writhe(), -3);
        assert_eq!(m.component_count(), 1);
        assert!(m.is_connected());
        assert_eq!(m.mirror(), d);
        assert_eq!(LinkDiagram::unknot().mirror(), LinkDiagram::unknot());
    }

    #[test]
    fn trefoil_crossing_quads_match_pd_convention() {
        // the mirror of the tabulated left-handed trefoil has the same edges
        let left = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap();
        assert_eq!(left.writhe(), -3);
        assert_eq!(left.mirror().writhe(), 3);
    }
}
