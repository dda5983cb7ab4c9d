//! Integer Laurent polynomials in one variable `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// `Σ coeffs[i]·t^(min_exp+i)`, kept trimmed: no zero coefficient at either
/// end. The zero polynomial has no coefficients and `min_exp == 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "LaurentRecord")]
pub struct LaurentPoly {
    min_exp: i32,
    coeffs: Vec<i128>,
}

#[derive(Deserialize)]
struct LaurentRecord {
    min_exp: i32,
    coeffs: Vec<i128>,
}

impl From<LaurentRecord> for LaurentPoly {
    fn from(r: LaurentRecord) -> Self {
        LaurentPoly::new(r.min_exp, r.coeffs)
    }
}

impl LaurentPoly {
    pub fn new(min_exp: i32, coeffs: Vec<i128>) -> LaurentPoly {
        let mut p = LaurentPoly { min_exp, coeffs };
        p.trim();
        p
    }

    pub fn zero() -> LaurentPoly {
        LaurentPoly {
            min_exp: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::constant(1)
    }

    pub fn constant(c: i128) -> LaurentPoly {
        LaurentPoly::new(0, vec![c])
    }

    /// `c·t^e`
    pub fn monomial(c: i128, e: i32) -> LaurentPoly {
        LaurentPoly::new(e, vec![c])
    }

    /// The variable `t`.
    pub fn t() -> LaurentPoly {
        LaurentPoly::monomial(1, 1)
    }

    fn trim(&mut self) {
        let lead = self.coeffs.iter().rposition(|&c| c != 0);
        match lead {
            None => {
                self.coeffs.clear();
                self.min_exp = 0;
            }
            Some(hi) => {
                self.coeffs.truncate(hi + 1);
                let lo = self.coeffs.iter().position(|&c| c != 0).unwrap();
                self.coeffs.drain(..lo);
                self.min_exp += lo as i32;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> i32 {
        self.min_exp
    }

    pub fn max_exp(&self) -> i32 {
        self.min_exp + self.coeffs.len() as i32 - 1
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    /// Coefficient of `t^e`.
    pub fn coeff(&self, e: i32) -> i128 {
        let i = e - self.min_exp;
        if i < 0 {
            return 0;
        }
        self.coeffs.get(i as usize).copied().unwrap_or(0)
    }

    /// `max_exp - min_exp`, the breadth of the polynomial; 0 for zero.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> i128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn scale(&self, c: i128) -> LaurentPoly {
        LaurentPoly::new(self.min_exp, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i32) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Substitutes `t -> 1/t`.
    pub fn reflect(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            min_exp: -self.max_exp(),
            coeffs: self.coeffs.iter().rev().copied().collect(),
        }
    }

    /// Value at an integer point; `t` must be ±1 when negative exponents occur.
    pub fn eval(&self, t: i128) -> i128 {
        assert!(self.min_exp >= 0 || t.abs() == 1, "negative power of {t}");
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| c * pow(t, self.min_exp + i as i32))
            .sum()
    }

    /// Representative of `self` up to units `±t^k`: lowest exponent 0 and
    /// positive leading coefficient. Zero stays zero.
    pub fn normalize(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let sign = self.leading().signum();
        LaurentPoly::new(0, self.coeffs.iter().map(|c| c * sign).collect())
    }

    /// Equality up to multiplication by `±t^k`.
    pub fn eq_up_to_unit(&self, other: &LaurentPoly) -> bool {
        self.normalize() == other.normalize()
    }

    /// Exact quotient `self / divisor`, or `None` when it is not a Laurent
    /// polynomial with integer coefficients.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let d = &divisor.coeffs;
        let dl = *d.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < d.len() {
            return None;
        }
        let qlen = rem.len() - d.len() + 1;
        let mut q = vec![0i128; qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + d.len() - 1];
            if top % dl != 0 {
                return None;
            }
            let c = top / dl;
            q[i] = c;
            if c != 0 {
                for (j, &dj) in d.iter().enumerate() {
                    rem[i + j] -= c * dj;
                }
            }
        }
        if rem.iter().any(|&r| r != 0) {
            return None;
        }
        Some(LaurentPoly::new(self.min_exp - divisor.min_exp, q))
    }
}

fn pow(t: i128, e: i32) -> i128 {
    if e >= 0 {
        t.pow(e as u32)
    } else {
        // |t| == 1
        t.pow(e.unsigned_abs())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = self.max_exp().max(rhs.max_exp());
        let coeffs = (lo..=hi).map(|e| self.coeff(e) + rhs.coeff(e)).collect();
        LaurentPoly::new(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min_exp: self.min_exp,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::new(self.min_exp + rhs.min_exp, coeffs)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for e in (self.min_exp..=self.max_exp()).rev() {
            let c = self.coeff(e);
            if c == 0 {
                continue;
            }
            let mag = c.abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (mag, e) {
                (_, 0) => write!(f, "{mag}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "t^{e}")?,
                (_, 1) => write!(f, "{mag}t")?,
                _ => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}

/// Determinant of a square matrix of Laurent polynomials by fraction-free
/// (Bareiss) elimination with row pivoting.
pub fn determinant(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut prev = LaurentPoly::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return LaurentPoly::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(min_exp: i32, coeffs: &[i128]) -> LaurentPoly {
        LaurentPoly::new(min_exp, coeffs.to_vec())
    }

    #[test]
    fn normalizes_up_to_units() {
        // -t^3 + t^2 - t  ->  t^2 - t + 1
        assert_eq!(p(1, &[-1, 1, -1]).normalize(), p(0, &[1, -1, 1]));
        assert_eq!(LaurentPoly::one().normalize(), LaurentPoly::one());
        assert_eq!(LaurentPoly::zero().normalize(), LaurentPoly::zero());
        assert_eq!(p(-3, &[0, 0, -2]).normalize(), LaurentPoly::constant(2));
    }

    #[test]
    fn arithmetic() {
        let a = p(-1, &[1, 2]); // t^-1 + 2
        let b = p(0, &[3, -1]); // 3 - t
        assert_eq!(&a + &b, p(-1, &[1, 5, -1]));
        assert_eq!(&a - &a, LaurentPoly::zero());
        assert_eq!(&a * &b, p(-1, &[3, 5, -2]));
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!(p(0, &[1, 1]).div_exact(&p(0, &[1, 2])), None);
        assert_eq!(a.reflect(), p(0, &[2, 1]));
        assert_eq!(p(0, &[1, -1, 1]).eval(-1), 3);
        assert_eq!(p(-2, &[1, 0, -3, 0, 1]).eval(1), -1);
    }

    #[test]
    fn display() {
        assert_eq!(p(0, &[1, -1, 1]).to_string(), "t^2 - t + 1");
        assert_eq!(p(-1, &[-2, 0, 1]).to_string(), "t - 2t^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }

    #[test]
    fn symbolic_two_by_two_determinant() {
        // [[a, b], [c, d]] with polynomial entries, checked against ad - bc
        let a = p(0, &[-1, 1]);
        let b = p(0, &[1]);
        let c = p(1, &[-1]);
        let d = p(0, &[-1, 1]);
        let m = vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]];
        assert_eq!(determinant(&m), &(&a * &d) - &(&b * &c));
        assert_eq!(determinant(&[]), LaurentPoly::one());
    }

    #[test]
    fn determinant_with_zero_pivot() {
        let z = LaurentPoly::zero;
        let one = LaurentPoly::one;
        let t = LaurentPoly::t;
        // permutation matrix times t: det = -t^3 for a transposition pattern
        let m = vec![
            vec![z(), t(), z()],
            vec![t(), z(), z()],
            vec![z(), z(), t()],
        ];
        assert_eq!(determinant(&m), p(3, &[-1]));
        let m = vec![vec![one(), one()], vec![one(), one()]];
        assert!(determinant(&m).is_zero());
    }
}
