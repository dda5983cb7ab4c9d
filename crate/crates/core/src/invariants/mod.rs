//! Alexander polynomial and signature of a Seifert matrix, the Burau-matrix
//! oracle for the Alexander polynomial, and reconnection-number bounds.

mod bounds;
pub mod burau;
mod laurent;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::seifert::SeifertMatrix;

pub use bounds::{
    reconnection_bounds, reconnection_number_positive, BoundSide, BoundSource, Certificate,
    ReconnectionBounds,
};
pub use burau::burau_alexander_oracle;
pub use laurent::{determinant, LaurentPoly};

/// `det(Θ - tΘᵀ)`; the empty matrix gives 1.
pub fn alexander_polynomial(m: &SeifertMatrix) -> LaurentPoly {
    let n = m.dim;
    let t = LaurentPoly::t();
    let entries: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = LaurentPoly::constant(m.get(i, j) as i128);
                    let b = LaurentPoly::constant(m.get(j, i) as i128);
                    &a - &(&t * &b)
                })
                .collect()
        })
        .collect();
    determinant(&entries)
}

pub fn normalize_laurent(p: &LaurentPoly) -> LaurentPoly {
    p.normalize()
}

/// Signature of `Θ + Θᵀ`.
pub fn signature(m: &SeifertMatrix) -> i64 {
    symmetric_signature(&m.symmetrized())
}

/// Signature of a symmetric integer matrix by exact congruence
/// diagonalization over the rationals.
///
/// A nonzero diagonal entry is pivoted to the front and eliminated on both
/// sides, contributing its sign. When the remaining diagonal is all zero but
/// an off-diagonal entry is not, that pair forms a hyperbolic 2×2 block which
/// contributes one positive and one negative square. A zero remainder
/// contributes nothing.
pub fn symmetric_signature(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| {
            assert_eq!(row.len(), n, "matrix must be square");
            row.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect()
        })
        .collect();
    for i in 0..n {
        for j in 0..i {
            assert!(a[i][j] == a[j][i], "matrix must be symmetric");
        }
    }

    let mut sig = 0i64;
    let mut k = 0;
    while k < n {
        if let Some(p) = (k..n).find(|&i| !a[i][i].is_zero()) {
            swap_sym(&mut a, k, p);
            let pivot = a[k][k].clone();
            sig += if pivot.is_positive() { 1 } else { -1 };
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &pivot;
                for j in k..n {
                    let v = &f * &a[k][j];
                    a[i][j] -= v;
                }
                for r in k..n {
                    let v = &f * &a[r][k];
                    a[r][i] -= v;
                }
            }
            k += 1;
            continue;
        }
        let Some((p, q)) = (k..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| !a[i][j].is_zero())
        else {
            break;
        };
        // Hyperbolic block on rows k, k+1 with zero diagonal.
        swap_sym(&mut a, k, p);
        let q = if q == k { p } else { q };
        swap_sym(&mut a, k + 1, q);
        let h = a[k][k + 1].clone();
        for i in k + 2..n {
            // clear a[i][k] and a[i][k+1] using the 2x2 block [[0,h],[h,0]]
            let fk = &a[i][k + 1] / &h;
            let fk1 = &a[i][k] / &h;
            for j in k..n {
                let v = &fk * &a[k][j] + &fk1 * &a[k + 1][j];
                a[i][j] -= v;
            }
            for r in k..n {
                let v = &fk * &a[r][k] + &fk1 * &a[r][k + 1];
                a[r][i] -= v;
            }
        }
        k += 2;
    }
    sig
}

fn swap_sym(a: &mut [Vec<BigRational>], i: usize, j: usize) {
    if i == j {
        return;
    }
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}
