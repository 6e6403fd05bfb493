//! Dense univariate polynomials over Q.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::multipoly::MultiPoly;

/// Coefficients from the constant term up; never has a zero leading entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        UniPoly::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::new(vec![BigRational::one()])
    }

    /// `x − r`.
    pub fn linear_root(r: BigRational) -> Self {
        UniPoly::new(vec![-r, BigRational::one()])
    }

    /// Reads a polynomial in a single variable of `p`'s universe; `None` if
    /// any other variable occurs.
    pub fn from_multipoly(p: &MultiPoly, var: usize) -> Option<Self> {
        let mut coeffs = vec![BigRational::zero(); p.degree_in(var).map_or(0, |d| d as usize + 1)];
        for (m, c) in p.terms() {
            let e = m.exponents();
            if e.iter().enumerate().any(|(i, &k)| i != var && k != 0) {
                return None;
            }
            coeffs[e[var] as usize] = c.clone();
        }
        Some(UniPoly::new(coeffs))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => UniPoly::zero(),
            Some(l) => {
                let inv = l.recip();
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = BigRational::zero();
        UniPoly::new(
            (0..n)
                .map(|k| self.coeffs.get(k).unwrap_or(&z) + other.coeffs.get(k).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(UniPoly::one(), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.leading().expect("division by the zero polynomial").clone();
        let dn = d.coeffs.len();
        let mut r = self.coeffs.clone();
        if r.len() < dn {
            return (UniPoly::zero(), self.clone());
        }
        let mut q = vec![BigRational::zero(); r.len() - dn + 1];
        for k in (0..q.len()).rev() {
            let c = &r[k + dn - 1] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dn - 1);
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Quotient if `d` divides `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Largest `k` with `factor^k | self`; `None` if `self` is zero.
    pub fn multiplicity(&self, factor: &Self) -> Option<u32> {
        if self.is_zero() {
            return None;
        }
        assert!(factor.degree().is_some_and(|d| d > 0), "multiplicity of a constant");
        let mut k = 0;
        let mut cur = self.clone();
        while let Some(q) = cur.div_exact(factor) {
            cur = q;
            k += 1;
        }
        Some(k)
    }

    /// Yun's algorithm: monic square-free `(part, multiplicity)` pairs
    /// whose product is the monic form of `self`.
    pub fn square_free(&self) -> Vec<(UniPoly, u32)> {
        let mut out = Vec::new();
        if self.degree().is_none_or(|d| d == 0) {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = df.div_exact(&a0).expect("gcd divides");
        let mut d = c.add(&b.derivative().scale(&-BigRational::one()));
        let mut k = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().is_some_and(|n| n > 0) {
                out.push((a.clone(), k));
            }
            b = b.div_exact(&a).expect("gcd divides");
            if b.degree().is_none_or(|n| n == 0) {
                break;
            }
            c = d.div_exact(&a).expect("gcd divides");
            d = c.add(&b.derivative().scale(&-BigRational::one()));
            k += 1;
        }
        out
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// The root of a degree-one polynomial.
    pub fn linear_zero(&self) -> Option<BigRational> {
        match self.coeffs.as_slice() {
            [a, b] => Some(-a / b),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn division_and_gcd() {
        let f = UniPoly::from_i64(&[-1, 0, 1]); // x² − 1
        let g = UniPoly::from_i64(&[1, 1]); // x + 1
        let (q, rem) = f.div_rem(&g);
        assert_eq!(q, UniPoly::from_i64(&[-1, 1]));
        assert!(rem.is_zero());
        assert_eq!(f.gcd(&UniPoly::from_i64(&[2, 2])), g);
        assert_eq!(f.eval(&r(3)), r(8));
        assert_eq!(UniPoly::from_i64(&[0, 0, 3]).multiplicity(&UniPoly::from_i64(&[0, 1])), Some(2));
    }

    #[test]
    fn square_free_parts() {
        // (x − 1)³ (x + 2)² x
        let f = UniPoly::linear_root(r(1))
            .pow(3)
            .mul(&UniPoly::linear_root(r(-2)).pow(2))
            .mul(&UniPoly::linear_root(r(0)))
            .scale(&r(5));
        let parts = f.square_free();
        assert_eq!(
            parts,
            vec![
                (UniPoly::linear_root(r(0)), 1),
                (UniPoly::linear_root(r(-2)), 2),
                (UniPoly::linear_root(r(1)), 3)
            ]
        );
        assert!(UniPoly::from_i64(&[7]).square_free().is_empty());
    }

    proptest! {
        #[test]
        fn square_free_reconstructs(roots in prop::collection::vec((-5i64..=5, 1u32..=3), 1..5), lead in 1i64..=4) {
            let f = roots.iter().fold(UniPoly::from_i64(&[lead]), |acc, &(a, k)| {
                acc.mul(&UniPoly::linear_root(r(a)).pow(k))
            });
            let parts = f.square_free();
            let prod = parts.iter().fold(UniPoly::one(), |acc, (p, k)| acc.mul(&p.pow(*k)));
            prop_assert_eq!(prod, f.monic());
            for (p, _) in &parts {
                prop_assert_eq!(p.gcd(&p.derivative()).degree(), Some(0));
            }
        }

        #[test]
        fn div_rem_identity(a in prop::collection::vec(-9i64..=9, 0..6), b in prop::collection::vec(-9i64..=9, 1..4)) {
            let (a, b) = (UniPoly::from_i64(&a), UniPoly::from_i64(&b));
            prop_assume!(!b.is_zero());
            let (q, rem) = a.div_rem(&b);
            prop_assert_eq!(q.mul(&b).add(&rem), a);
            prop_assert!(rem.degree().is_none_or(|d| Some(d) < b.degree()));
        }
    }
}
