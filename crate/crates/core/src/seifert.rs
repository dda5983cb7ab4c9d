//! Seifert's algorithm: circles of the oriented smoothing, the Seifert graph,
//! surface genus, and the Seifert matrix of a braid closure.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::diagram::{EdgeId, LinkDiagram, Strand};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertCircles {
    pub count: usize,
    /// Circle index of every edge, indexed by `EdgeId - 1`. Circles through
    /// crossings come first, numbered by their smallest edge; free loops take
    /// the last indices.
    pub membership: Vec<usize>,
}

impl SeifertCircles {
    pub fn circle_of(&self, e: EdgeId) -> usize {
        self.membership[e.index()]
    }
}

/// Edge of the Seifert graph: the band at one crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Band {
    pub crossing: usize,
    pub circles: (usize, usize),
    pub sign: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertGraph {
    pub vertices: usize,
    pub edges: Vec<Band>,
}

impl SeifertGraph {
    pub fn is_connected(&self) -> bool {
        if self.vertices == 0 {
            return false;
        }
        let mut uf = UnionFind::new(self.vertices);
        for b in &self.edges {
            uf.union(b.circles.0, b.circles.1);
        }
        (0..self.vertices).all(|v| uf.find(v) == uf.find(0))
    }

    /// Bands of a spanning forest, scanning crossings in increasing index and
    /// keeping every band that joins two not-yet-connected circles.
    pub fn spanning_tree(&self) -> Vec<usize> {
        let mut uf = UnionFind::new(self.vertices);
        let mut order: Vec<&Band> = self.edges.iter().collect();
        order.sort_by_key(|b| b.crossing);
        order
            .into_iter()
            .filter(|b| uf.union(b.circles.0, b.circles.1))
            .map(|b| b.crossing)
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusReport {
    pub c: usize,
    pub s: usize,
    pub mu: usize,
    pub genus: usize,
    /// Euler characteristic of the Seifert surface, `s - c`.
    pub euler: i64,
}

pub fn seifert_circles(d: &LinkDiagram) -> SeifertCircles {
    let n = d.edge_count();
    let mut membership = vec![usize::MAX; n];
    let mut count = 0;
    for start in 1..=n as u32 {
        let start = EdgeId(start);
        if membership[start.index()] != usize::MAX {
            continue;
        }
        let mut e = start;
        while membership[e.index()] == usize::MAX {
            membership[e.index()] = count;
            let (k, strand) = d.head(e);
            e = d.crossings()[k].outgoing(strand.other());
        }
        count += 1;
    }
    SeifertCircles {
        count: count + d.free_loops(),
        membership,
    }
}

pub fn seifert_graph(d: &LinkDiagram) -> SeifertGraph {
    let circles = seifert_circles(d);
    let edges = d
        .crossings()
        .iter()
        .enumerate()
        .map(|(k, x)| Band {
            crossing: k,
            circles: (
                circles.circle_of(x.incoming(Strand::Under)),
                circles.circle_of(x.incoming(Strand::Over)),
            ),
            sign: x.sign().value(),
        })
        .collect();
    SeifertGraph {
        vertices: circles.count,
        edges,
    }
}

/// Genus of the Seifert surface of a connected diagram.
///
/// Computed from `c - s + 1 - (mu - 1) = 2g` and independently from the cell
/// count of the capped surface (crossings as vertices, projected edges, one
/// 2-cell per circle and per component); the two must agree.
pub fn seifert_genus(d: &LinkDiagram) -> Result<GenusReport> {
    if !d.is_connected() {
        return Err(Error::DisconnectedDiagram);
    }
    let c = d.crossing_count();
    let s = seifert_circles(d).count;
    let mu = d.component_count();

    let twice = c as i64 - s as i64 + 1 - (mu as i64 - 1);
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::InconsistentGenus(format!(
            "c - s + 2 - mu = {twice} is not a nonnegative even number"
        )));
    }
    let genus = (twice / 2) as usize;

    let projected_edges = d.component_edges().iter().map(Vec::len).sum::<usize>() as i64;
    let capped = c as i64 - projected_edges + s as i64 + mu as i64;
    let euler = capped - mu as i64;
    if capped != 2 - 2 * genus as i64 || euler != s as i64 - c as i64 {
        return Err(Error::InconsistentGenus(format!(
            "cell count gives chi = {capped}, formula gives genus {genus}"
        )));
    }
    Ok(GenusReport {
        c,
        s,
        mu,
        genus,
        euler,
    })
}

/// Square integer matrix of the Seifert pairing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertMatrix {
    pub dim: usize,
    pub entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> SeifertMatrix {
        let dim = entries.len();
        assert!(entries.iter().all(|r| r.len() == dim), "matrix must be square");
        SeifertMatrix { dim, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn transpose(&self) -> SeifertMatrix {
        let n = self.dim;
        SeifertMatrix::new((0..n).map(|i| (0..n).map(|j| self.entries[j][i]).collect()).collect())
    }

    /// `Θ + Θᵀ`
    pub fn symmetrized(&self) -> Vec<Vec<i64>> {
        let n = self.dim;
        (0..n)
            .map(|i| (0..n).map(|j| self.entries[i][j] + self.entries[j][i]).collect())
            .collect()
    }
}

/// A homology loop of the disk-and-band surface: it climbs through one band
/// of a column and returns through the next band of the same column.
#[derive(Clone, Copy, Debug)]
struct BandLoop {
    column: usize,
    lower: usize,
    upper: usize,
    signs: (i32, i32),
}

/// Seifert matrix of the closure of `b`, read off the surface made of one disk
/// per strand and one half-twisted band per letter.
///
/// Basis: for each column `i` (generator σᵢ) and each pair of consecutive
/// letters of that column in word order, the loop through those two bands.
/// The pairing is local:
///
/// * a loop with itself: `-1` if both bands are positive, `+1` if both are
///   negative, `0` otherwise;
/// * consecutive loops `x` then `y` of one column sharing a band of sign `ε`:
///   `(Θ(x,y), Θ(y,x))` is `(1, 0)` for `ε = +1` and `(0, -1)` for `ε = -1`;
/// * loops `x` in column `i` and `y` in column `i+1` whose letter positions
///   interleave: `Θ(y,x) = 0`, and `Θ(x,y)` is `-1` when `x` starts first and
///   `+1` when `y` starts first;
/// * everything else is `0`.
pub fn seifert_matrix(b: &BraidWord) -> Result<SeifertMatrix> {
    let loops = band_loops(b)?;
    let n = loops.len();
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in 0..n {
            m[i][j] = pairing(&loops[i], &loops[j]);
        }
    }
    Ok(SeifertMatrix::new(m))
}

fn band_loops(b: &BraidWord) -> Result<Vec<BandLoop>> {
    let mut loops = Vec::new();
    for column in 1..b.strands() {
        let bands: Vec<(usize, i32)> = b
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, l)| l.unsigned_abs() as usize == column)
            .map(|(pos, l)| (pos, l.signum()))
            .collect();
        if bands.is_empty() {
            return Err(Error::DisconnectedClosure { column });
        }
        loops.extend(bands.windows(2).map(|w| BandLoop {
            column,
            lower: w[0].0,
            upper: w[1].0,
            signs: (w[0].1, w[1].1),
        }));
    }
    Ok(loops)
}

fn pairing(x: &BandLoop, y: &BandLoop) -> i64 {
    if x.column == y.column {
        return if x.lower == y.lower {
            match x.signs {
                (1, 1) => -1,
                (-1, -1) => 1,
                _ => 0,
            }
        } else if x.upper == y.lower {
            // x directly below y, sharing the band at x.upper
            if x.signs.1 > 0 {
                1
            } else {
                0
            }
        } else if y.upper == x.lower {
            if x.signs.0 > 0 {
                0
            } else {
                -1
            }
        } else {
            0
        };
    }
    let interleaved = |a: &BandLoop, b: &BandLoop| a.lower < b.lower && b.lower < a.upper && a.upper < b.upper;
    if x.column + 1 == y.column {
        if interleaved(x, y) {
            return -1;
        }
        if interleaved(y, x) {
            return 1;
        }
    }
    0
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}
