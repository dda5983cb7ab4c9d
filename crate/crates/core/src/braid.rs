//! Braid words, their closures, and torus-link generators.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::{LinkDiagram, Oriented, Rewire, Sign};
use crate::error::{Error, Result};

/// A word in the braid generators on `strands` strands. Letter `i` is the
/// positive crossing σᵢ between strand positions `i` and `i+1`; `-i` is its
/// inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BraidRecord", into = "BraidRecord")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<BraidWord> {
        if strands == 0 {
            return Err(Error::MalformedWord("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            if l == 0 {
                return Err(Error::MalformedWord("generator 0 does not exist".into()));
            }
            if l.unsigned_abs() as usize >= strands {
                return Err(Error::GeneratorOutOfRange { letter: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The word with every letter inverted in sign: the closure is the mirror.
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    /// Underlying permutation: the strand starting at bottom position `p`
    /// ends at top position `perm[p]`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        // at[q] = starting position of the strand now at q
        let mut perm = vec![0; self.strands];
        for (q, &p) in at.iter().enumerate() {
            perm[p] = q;
        }
        perm
    }

    /// Standard closure diagram, one crossing per letter in word order.
    ///
    /// Strands run upward; at σᵢ the strand from position `i` moves right to
    /// `i+1`, passing over for a positive letter and under for a negative
    /// one. Positions that no letter touches close up into free loops.
    pub fn closure(&self) -> LinkDiagram {
        let mut rw = Rewire::new(0);
        let bottom: Vec<u32> = (0..self.strands).map(|_| rw.fresh()).collect();
        let mut current = bottom.clone();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let (left, right) = (current[i], current[i + 1]);
            let (new_left, new_right) = (rw.fresh(), rw.fresh());
            let x = if l > 0 {
                Oriented {
                    under: (right, new_left),
                    over: (left, new_right),
                    sign: Sign::Positive,
                }
            } else {
                Oriented {
                    under: (left, new_right),
                    over: (right, new_left),
                    sign: Sign::Negative,
                }
            };
            rw.push(x);
            current[i] = new_left;
            current[i + 1] = new_right;
        }
        for (top, bot) in current.into_iter().zip(bottom) {
            rw.join(top, bot);
        }
        rw.finish()
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// Parses `<strands> | <letter> <letter> ...`.
    fn from_str(text: &str) -> Result<BraidWord> {
        let (head, body) = text
            .split_once('|')
            .ok_or_else(|| Error::MalformedWord("expected `<strands> | <letters>`".into()))?;
        let strands = head
            .trim()
            .parse::<usize>()
            .map_err(|_| Error::MalformedWord(format!("bad strand count `{}`", head.trim())))?;
        let letters = body
            .split_whitespace()
            .map(|t| {
                t.parse::<i32>()
                    .map_err(|_| Error::MalformedWord(format!("bad letter `{t}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

pub fn parse_braid_word(text: &str) -> Result<BraidWord> {
    text.parse()
}

pub fn braid_closure(b: &BraidWord) -> LinkDiagram {
    b.closure()
}

/// `(σ₁σ₂…σ_{p−1})^q` on `p` strands; its closure is the torus link T(p,q)
/// with `(p−1)q` crossings and `p` Seifert circles.
pub fn torus_braid(p: usize, q: usize) -> Result<BraidWord> {
    if p < 2 || q < 2 {
        return Err(Error::DegenerateParameters(format!(
            "torus braid needs p, q >= 2, got ({p}, {q})"
        )));
    }
    let letters = (0..q).flat_map(|_| 1..p as i32).collect();
    BraidWord::new(p, letters)
}

#[derive(Serialize, Deserialize)]
struct BraidRecord {
    strands: usize,
    letters: Vec<i32>,
}

impl From<BraidWord> for BraidRecord {
    fn from(b: BraidWord) -> Self {
        BraidRecord {
            strands: b.strands,
            letters: b.letters,
        }
    }
}

impl TryFrom<BraidRecord> for BraidWord {
    type Error = Error;

    fn try_from(r: BraidRecord) -> Result<Self> {
        BraidWord::new(r.strands, r.letters)
    }
}
