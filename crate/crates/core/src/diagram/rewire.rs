//! Local surgery on diagrams followed by canonical renumbering.
//!
//! Crossings are held as oriented strands over scratch labels. Removing a
//! crossing glues its incoming ends to outgoing ends; glued labels name the
//! same edge afterwards. A glued class that no longer touches any crossing is
//! a closed crossingless circle and becomes a free loop.

use super::{Crossing, EdgeId, LinkDiagram, Sign, Strand};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Oriented {
    /// (incoming, outgoing) labels of the under-strand.
    pub under: (u32, u32),
    pub over: (u32, u32),
    pub sign: Sign,
}

impl Oriented {
    fn from_crossing(x: &Crossing) -> Oriented {
        Oriented {
            under: (x.incoming(Strand::Under).0, x.outgoing(Strand::Under).0),
            over: (x.incoming(Strand::Over).0, x.outgoing(Strand::Over).0),
            sign: x.sign(),
        }
    }

    pub fn switch(&mut self) {
        std::mem::swap(&mut self.under, &mut self.over);
        self.sign = self.sign.flip();
    }
}

pub(crate) struct Rewire {
    crossings: Vec<Option<Oriented>>,
    joins: Vec<(u32, u32)>,
    next_label: u32,
    free_loops: usize,
}

impl Rewire {
    pub fn new(free_loops: usize) -> Rewire {
        Rewire {
            crossings: Vec::new(),
            joins: Vec::new(),
            next_label: 1,
            free_loops,
        }
    }

    pub fn from_diagram(d: &LinkDiagram) -> Rewire {
        Rewire {
            crossings: d.crossings().iter().map(|x| Some(Oriented::from_crossing(x))).collect(),
            joins: Vec::new(),
            next_label: d.edge_count() as u32 + 1,
            free_loops: d.free_loops(),
        }
    }

    pub fn fresh(&mut self) -> u32 {
        let l = self.next_label;
        self.next_label += 1;
        l
    }

    pub fn push(&mut self, x: Oriented) -> usize {
        self.crossings.push(Some(x));
        self.crossings.len() - 1
    }

    /// Declares two labels to be the same edge.
    pub fn join(&mut self, a: u32, b: u32) {
        self.joins.push((a, b));
    }

    pub fn get_mut(&mut self, k: usize) -> &mut Oriented {
        self.crossings[k].as_mut().expect("crossing still present")
    }

    pub fn remove_free_loop(&mut self) {
        self.free_loops -= 1;
    }

    /// Replaces crossing `k` by its oriented smoothing.
    pub fn smooth(&mut self, k: usize) {
        let x = self.crossings[k].take().expect("crossing still present");
        self.join(x.under.0, x.over.1);
        self.join(x.over.0, x.under.1);
    }

    /// Deletes crossing `k`, letting both strands pass straight through.
    pub fn erase(&mut self, k: usize) {
        let x = self.crossings[k].take().expect("crossing still present");
        self.join(x.under.0, x.under.1);
        self.join(x.over.0, x.over.1);
    }

    /// Cuts the edge `label` just before the crossing it enters and splices in
    /// a one-crossing curl of the given sign.
    pub fn insert_curl(&mut self, label: u32, sign: Sign) {
        let tail = self.fresh();
        let (k, strand) = self
            .crossings
            .iter()
            .enumerate()
            .find_map(|(k, x)| {
                let x = x.as_ref()?;
                if x.under.0 == label {
                    Some((k, Strand::Under))
                } else if x.over.0 == label {
                    Some((k, Strand::Over))
                } else {
                    None
                }
            })
            .expect("edge enters a crossing");
        let x = self.get_mut(k);
        match strand {
            Strand::Under => x.under.0 = tail,
            Strand::Over => x.over.0 = tail,
        }
        let lobe = self.fresh();
        self.push(Oriented {
            under: (label, lobe),
            over: (lobe, tail),
            sign,
        });
    }

    /// Resolves joins and renumbers edges.
    ///
    /// Surviving crossings keep their relative order. Components are numbered
    /// one after another, each starting at the edge entering its lowest
    /// crossing (under-strand before over-strand) and increasing along the
    /// direction of travel.
    pub fn finish(self) -> LinkDiagram {
        let n_labels = self.next_label as usize;
        let mut parent: Vec<usize> = (0..n_labels).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.joins {
            let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
            if ra != rb {
                parent[ra] = rb;
            }
        }

        let crossings: Vec<Oriented> = self
            .crossings
            .into_iter()
            .flatten()
            .map(|x| {
                let mut r = |l: u32| find(&mut parent, l as usize) as u32;
                Oriented {
                    under: (r(x.under.0), r(x.under.1)),
                    over: (r(x.over.0), r(x.over.1)),
                    sign: x.sign,
                }
            })
            .collect();

        let mut enters: Vec<Option<(usize, Strand)>> = vec![None; n_labels];
        let mut used = vec![false; n_labels];
        for (k, x) in crossings.iter().enumerate() {
            for (strand, (i, o)) in [(Strand::Under, x.under), (Strand::Over, x.over)] {
                assert!(enters[i as usize].replace((k, strand)).is_none(), "edge enters twice");
                used[i as usize] = true;
                used[o as usize] = true;
            }
        }

        let mut closed = 0;
        let mut counted = vec![false; n_labels];
        for l in 1..n_labels {
            let r = find(&mut parent, l);
            if !used[r] && !counted[r] {
                counted[r] = true;
                closed += 1;
            }
        }

        let mut number = vec![0u32; n_labels];
        let mut next = 1u32;
        for x in &crossings {
            for start in [x.under.0, x.over.0] {
                if number[start as usize] != 0 {
                    continue;
                }
                let mut l = start;
                loop {
                    number[l as usize] = next;
                    next += 1;
                    let (k, strand) = enters[l as usize].expect("edge enters a crossing");
                    let y = &crossings[k];
                    l = match strand {
                        Strand::Under => y.under.1,
                        Strand::Over => y.over.1,
                    };
                    if l == start {
                        break;
                    }
                }
            }
        }

        let e = |l: u32| EdgeId(number[l as usize]);
        let out = crossings
            .iter()
            .map(|x| {
                Crossing::from_strands((e(x.under.0), e(x.under.1)), (e(x.over.0), e(x.over.1)), x.sign)
            })
            .collect();
        LinkDiagram::from_crossings(out, self.free_loops + closed).expect("rewired diagram is valid")
    }
}
