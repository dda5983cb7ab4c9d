#![allow(dead_code)]

use knotrecon::{BraidWord, LinkDiagram};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CHAIN_LINK: &str = include_str!("../fixtures/chain_link.pd");
pub const TORUS_LINK_4_2: &str = include_str!("../fixtures/torus_link_4_2.pd");
/// The (4,2) torus link mirrored, with one component reversed so that every
/// crossing is positive again.
pub const TORUS_LINK_4_2_REVERSED: &str = include_str!("../fixtures/torus_link_4_2_reversed.pd");

/// 6₂ as tabulated: σ₁³σ₂⁻¹σ₁σ₂⁻¹.
pub const SIX_TWO: &str = "3 | 1 1 1 -2 1 -2";

pub fn braid(text: &str) -> BraidWord {
    text.parse().unwrap()
}

pub fn pd(text: &str) -> LinkDiagram {
    knotrecon::parse_pd(text.trim()).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Braid on 2..=`max_strands` strands with 1..=`max_len` letters.
/// Every column is used when `connected` is set.
pub fn random_braid(
    rng: &mut ChaCha8Rng,
    max_strands: usize,
    max_len: usize,
    positive: bool,
    connected: bool,
) -> BraidWord {
    loop {
        let n = rng.gen_range(2..=max_strands);
        let len = rng.gen_range(1..=max_len);
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..n) as i32;
                if positive || rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        let b = BraidWord::new(n, letters).unwrap();
        let full = (1..n).all(|i| b.letters().iter().any(|l| l.unsigned_abs() as usize == i));
        if full || !connected {
            return b;
        }
    }
}

/// `(-1)^(σ/2)` for a knot, read off its Alexander polynomial: the sign of
/// the symmetrized, `Δ(1) = 1` normalized polynomial at `t = -1`.
pub fn signature_half_parity_from_alexander(delta: &knotrecon::invariants::LaurentPoly) -> i128 {
    let delta = delta.normalize();
    let span = delta.span() as i128;
    assert!(span % 2 == 0, "knots have even span");
    let at_one = delta.eval(1);
    let at_minus_one = delta.eval(-1);
    let shift = if (span / 2) % 2 == 0 { 1 } else { -1 };
    (at_minus_one * shift * at_one).signum()
}
