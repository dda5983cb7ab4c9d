//! Alexander polynomial of a braid closure from the reduced Burau
//! representation, independent of any Seifert surface:
//!
//! `det(I - ρ(β)) = (1 + t + … + t^{n-1}) · Δ(t)` up to units.
//!
//! Determinants here use cofactor expansion rather than the elimination used
//! for Seifert matrices, so the two routes share no code beyond polynomial
//! arithmetic.

use super::laurent::LaurentPoly;
use crate::braid::BraidWord;
use crate::error::{Error, Result};

type Matrix = Vec<Vec<LaurentPoly>>;

pub fn burau_alexander_oracle(b: &BraidWord) -> Result<LaurentPoly> {
    let n = b.strands();
    if let Some(column) = (1..n).find(|&i| !b.letters().iter().any(|l| l.unsigned_abs() as usize == i)) {
        return Err(Error::DisconnectedClosure { column });
    }
    if n == 1 {
        return Ok(LaurentPoly::one());
    }
    let dim = n - 1;
    let mut rho = identity(dim);
    for &l in b.letters() {
        rho = multiply(&rho, &generator(dim, l));
    }
    let one = LaurentPoly::one();
    let shifted: Matrix = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    let id = if i == j { one.clone() } else { LaurentPoly::zero() };
                    &id - &rho[i][j]
                })
                .collect()
        })
        .collect();
    let det = cofactor_determinant(&shifted);
    let cyclotomic = LaurentPoly::new(0, vec![1; n]);
    let alexander = det
        .div_exact(&cyclotomic)
        .expect("Burau determinant is divisible by 1 + t + ... + t^(n-1)");
    Ok(alexander.normalize())
}

fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() })
                .collect()
        })
        .collect()
}

fn multiply(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    (0..n).fold(LaurentPoly::zero(), |acc, k| &acc + &(&a[i][k] * &b[k][j]))
                })
                .collect()
        })
        .collect()
}

/// Reduced Burau matrix of σᵢ^{±1} on `dim + 1` strands.
fn generator(dim: usize, letter: i32) -> Matrix {
    let i = letter.unsigned_abs() as usize - 1;
    let pos = letter > 0;
    let t = |c: i128, e: i32| LaurentPoly::monomial(c, e);
    let mut m = identity(dim);
    if pos {
        // row i: -t on the diagonal, t to the left, 1 to the right
        m[i][i] = t(-1, 1);
        if i > 0 {
            m[i][i - 1] = t(1, 1);
        }
        if i + 1 < dim {
            m[i][i + 1] = t(1, 0);
        }
    } else {
        m[i][i] = t(-1, -1);
        if i > 0 {
            m[i][i - 1] = t(1, 0);
        }
        if i + 1 < dim {
            m[i][i + 1] = t(1, -1);
        }
    }
    m
}

fn cofactor_determinant(m: &Matrix) -> LaurentPoly {
    let n = m.len();
    match n {
        0 => LaurentPoly::one(),
        1 => m[0][0].clone(),
        _ => {
            let mut det = LaurentPoly::zero();
            for (j, entry) in m[0].iter().enumerate() {
                if entry.is_zero() {
                    continue;
                }
                let minor: Matrix = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = entry * &cofactor_determinant(&minor);
                det = if j % 2 == 0 { &det + &term } else { &det - &term };
            }
            det
        }
    }
}
