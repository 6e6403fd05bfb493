//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Every polynomial carries its variable universe. Arithmetic between
//! different universes is refused rather than silently merged. Terms are
//! kept in graded lexicographic order, so printing is canonical.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An ordered list of variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new(names: &[&str]) -> Self {
        Vars(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}

/// Exponent vector ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Monomial, BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MultiPoly {
    pub fn zero(vars: &Vars) -> Self {
        MultiPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: BigRational) -> Self {
        let mut p = MultiPoly::zero(vars);
        p.add_term(Monomial::one(vars.len()), c);
        p
    }

    pub fn one(vars: &Vars) -> Self {
        MultiPoly::constant(vars, BigRational::one())
    }

    pub fn var(vars: &Vars, name: &str) -> Result<Self> {
        let i = vars.index_of(name)?;
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Ok(MultiPoly::term(vars, e, BigRational::one()))
    }

    /// Panics if the exponent vector has the wrong arity.
    pub fn term(vars: &Vars, exponents: Vec<u32>, c: BigRational) -> Self {
        assert_eq!(exponents.len(), vars.len(), "exponent arity");
        let mut p = MultiPoly::zero(vars);
        p.add_term(Monomial(exponents), c);
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Vec<u32>, BigRational)>) -> Result<Self> {
        let mut p = MultiPoly::zero(vars);
        for (e, c) in terms {
            if e.len() != vars.len() {
                return Err(Error::Dimension(format!("exponent vector of length {}", e.len())));
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigRational {
        self.terms.get(&Monomial(exponents.to_vec())).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.last_key_value()
    }

    /// Constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.first_key_value()?;
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// Largest power of `var` dividing every term (the `var`-adic valuation).
    pub fn valuation_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).min()
    }

    /// Whether some term involves the variable.
    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    fn same_universe(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let mut out = MultiPoly::zero(&self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = MultiPoly::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn derivative(&self, var: &str) -> Result<Self> {
        let i = self.vars.index_of(var)?;
        Ok(self.derivative_at(i))
    }

    pub fn derivative_at(&self, i: usize) -> Self {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, c * rat(i64::from(e)));
        }
        out
    }

    /// Value at a point given for every variable of the universe.
    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational> {
        if point.len() != self.vars.len() {
            return Err(Error::Dimension(format!(
                "point of length {} for {} variables",
                point.len(),
                self.vars.len()
            )));
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(x.clone(), e as usize);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Replaces the listed variables by values; the universe is unchanged.
    pub fn specialize(&self, values: &[(usize, BigRational)]) -> Self {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let mut c2 = c.clone();
            for (i, x) in values {
                let e = m2.0[*i];
                if e > 0 {
                    c2 *= num_traits::pow(x.clone(), e as usize);
                    m2.0[*i] = 0;
                }
            }
            out.add_term(m2, c2);
        }
        out
    }

    pub fn specialize_named(&self, values: &[(&str, BigRational)]) -> Result<Self> {
        let idx = values
            .iter()
            .map(|(n, v)| Ok((self.vars.index_of(n)?, v.clone())))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.specialize(&idx))
    }

    /// `f(…, var ↦ g, …)`.
    pub fn substitute(&self, var: &str, g: &MultiPoly) -> Result<Self> {
        self.same_universe(g)?;
        let i = self.vars.index_of(var)?;
        let mut powers: Vec<MultiPoly> = vec![MultiPoly::one(&self.vars)];
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i] as usize;
            while powers.len() <= e {
                let next = powers.last().expect("nonempty") * g;
                powers.push(next);
            }
            let mut m2 = m.clone();
            m2.0[i] = 0;
            let rest = MultiPoly::term(&self.vars, m2.0, c.clone());
            out = &out + &(&rest * &powers[e]);
        }
        Ok(out)
    }

    /// Laurent substitution `xᵢ ↦ 1/xᵢ` for the listed variables, followed
    /// by multiplication with `clearing`. Fails if an exponent stays negative.
    pub fn substitute_reciprocal(&self, vars: &[&str], clearing: &[u32]) -> Result<Self> {
        if clearing.len() != self.vars.len() {
            return Err(Error::Dimension("clearing monomial arity".into()));
        }
        let idx = vars.iter().map(|v| self.vars.index_of(v)).collect::<Result<Vec<_>>>()?;
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let mut e = Vec::with_capacity(m.0.len());
            for (i, (&a, &k)) in m.0.iter().zip(clearing).enumerate() {
                let a = i64::from(a);
                let v = if idx.contains(&i) { i64::from(k) - a } else { i64::from(k) + a };
                if v < 0 {
                    return Err(Error::NegativeExponent(self.vars.0[i].clone()));
                }
                e.push(v as u32);
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Re-expresses the polynomial in another universe, matching by name.
    pub fn to_universe(&self, target: &Vars) -> Result<Self> {
        let map = self
            .vars
            .0
            .iter()
            .enumerate()
            .map(|(i, name)| match target.index_of(name) {
                Ok(j) => Ok(Some(j)),
                Err(e) if self.involves(i) => Err(e),
                Err(_) => Ok(None),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.len()];
            for (i, &a) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    e[j] = a;
                }
            }
            out.add_term(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Division by a monomial `var^k`; fails unless every term is divisible.
    pub fn div_var_power(&self, var: usize, k: u32) -> Result<Self> {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            if m.0[var] < k {
                return Err(Error::NotDivisible);
            }
            let mut m2 = m.clone();
            m2.0[var] -= k;
            out.add_term(m2, c.clone());
        }
        Ok(out)
    }

    /// Exact quotient `self / g`.
    ///
    /// Leading-term division in graded lex order. With a single divisor the
    /// remainder is zero iff `g` divides `self`, so the first leading term
    /// that `lt(g)` fails to divide already proves non-divisibility.
    pub fn div_exact(&self, g: &MultiPoly) -> Result<Self> {
        self.same_universe(g)?;
        let (gm, gc) = g.leading_term().ok_or(Error::ZeroPolynomial)?;
        let (gm, gc) = (gm.clone(), gc.clone());
        let mut p = self.clone();
        let mut q = MultiPoly::zero(&self.vars);
        while let Some((pm, pc)) = p.leading_term() {
            if !gm.divides(pm) {
                return Err(Error::NotDivisible);
            }
            let tm = pm.div(&gm);
            let tc = pc / &gc;
            for (m, c) in &g.terms {
                p.add_term(m.mul(&tm), -(c * &tc));
            }
            q.add_term(tm, tc);
        }
        Ok(q)
    }

    pub fn divides(&self, f: &MultiPoly) -> bool {
        f.div_exact(self).is_ok()
    }

    /// Coefficients with respect to one variable: entry `k` multiplies `var^k`.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![MultiPoly::zero(&self.vars); deg + 1];
        for (m, c) in &self.terms {
            let k = m.0[var] as usize;
            let mut m2 = m.clone();
            m2.0[var] = 0;
            out[k].add_term(m2, c.clone());
        }
        out
    }

    /// The common weighted degree; errors if the terms disagree.
    pub fn weighted_degree(&self, weights: &[i64]) -> Result<i64> {
        if weights.len() != self.vars.len() {
            return Err(Error::Dimension(format!(
                "{} weights for {} variables",
                weights.len(),
                self.vars.len()
            )));
        }
        let mut degrees: Vec<i64> = self
            .terms
            .keys()
            .map(|m| m.0.iter().zip(weights).map(|(&e, &w)| i64::from(e) * w).sum())
            .collect();
        degrees.sort_unstable();
        degrees.dedup();
        match degrees.as_slice() {
            [] => Err(Error::ZeroPolynomial),
            [d] => Ok(*d),
            _ => Err(Error::NotHomogeneous(degrees)),
        }
    }

    pub fn is_homogeneous_of(&self, weights: &[i64], degree: i64) -> bool {
        self.is_zero() || self.weighted_degree(weights).ok() == Some(degree)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;

            /// Panics if the operands live in different universes.
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("polynomials in the same universe")
            }
        }

        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;

            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Canonical text: `c*x^a*y^b` terms, largest first, every coefficient
/// written out, `" + "` / `" - "` separators, `0` for the zero polynomial.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (k, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let a = c.abs();
            if a.is_integer() {
                write!(f, "{}", a.numer())?;
            } else {
                write!(f, "{}/{}", a.numer(), a.denom())?;
            }
            for (name, &e) in self.vars.0.iter().zip(&m.0) {
                match e {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

/// Hessian matrix of second partials with respect to the named variables.
pub fn hessian(f: &MultiPoly, vars: &[&str]) -> Result<Vec<Vec<MultiPoly>>> {
    let firsts = vars.iter().map(|v| f.derivative(v)).collect::<Result<Vec<_>>>()?;
    let mut h = Vec::with_capacity(vars.len());
    for (i, fi) in firsts.iter().enumerate() {
        let mut row = Vec::with_capacity(vars.len());
        for (j, v) in vars.iter().enumerate() {
            if j < i {
                let sym: &Vec<MultiPoly> = &h[j];
                row.push(sym[i].clone());
            } else {
                row.push(fi.derivative(v)?);
            }
        }
        h.push(row);
    }
    Ok(h)
}

/// Determinant of a square polynomial matrix by Laplace expansion over
/// column subsets (division-free; fine up to ~16 columns).
pub fn determinant(m: &[Vec<MultiPoly>], vars: &Vars) -> Result<MultiPoly> {
    let n = m.len();
    if m.iter().any(|r| r.len() != n) {
        return Err(Error::NonSquare { rows: n, cols: m.first().map_or(0, Vec::len) });
    }
    if n > 24 {
        return Err(Error::Dimension(format!("{n}x{n} is too large for minor expansion")));
    }
    let mut layer: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    layer.insert(0, MultiPoly::one(vars));
    for row in m {
        let mut next: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (mask, acc) in &layer {
            for (c, entry) in row.iter().enumerate() {
                if mask & (1 << c) != 0 || entry.is_zero() {
                    continue;
                }
                entry.same_universe(acc)?;
                let inversions = (mask >> (c + 1)).count_ones();
                let mut term = acc * entry;
                if inversions % 2 == 1 {
                    term = -term;
                }
                let slot = next.entry(mask | (1 << c)).or_insert_with(|| MultiPoly::zero(vars));
                *slot = &*slot + &term;
            }
        }
        next.retain(|_, p| !p.is_zero());
        layer = next;
    }
    Ok(layer.into_values().next().unwrap_or_else(|| MultiPoly::zero(vars)))
}

/// Sylvester matrix of `f` (degree `n`) and `g` (degree `m`) in `var`:
/// `m` shifted rows of `f`'s coefficients, then `n` shifted rows of `g`'s.
pub fn sylvester_matrix(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<Vec<Vec<MultiPoly>>> {
    f.same_universe(g)?;
    let i = f.vars.index_of(var)?;
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let fc = f.coefficients_in(i);
    let gc = g.coefficients_in(i);
    let (n, m) = (fc.len() - 1, gc.len() - 1);
    let size = n + m;
    let zero = MultiPoly::zero(&f.vars);
    let mut rows = Vec::with_capacity(size);
    for (coeffs, shifts) in [(&fc, m), (&gc, n)] {
        let deg = coeffs.len() - 1;
        for s in 0..shifts {
            let mut row = vec![zero.clone(); size];
            for (k, c) in coeffs.iter().enumerate() {
                row[s + deg - k] = c.clone();
            }
            rows.push(row);
        }
    }
    Ok(rows)
}

/// `Res_var(f, g)`: determinant of the Sylvester matrix.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: &str) -> Result<MultiPoly> {
    let s = sylvester_matrix(f, g, var)?;
    if s.is_empty() {
        // both constant in var
        return Ok(MultiPoly::one(&f.vars));
    }
    determinant(&s, &f.vars)
}

/// `∏_{i<j} (αᵢ − αⱼ)²` over the roots of `f` in `var`, computed as
/// `(−1)^{n(n−1)/2} Res(f, f′) / c^{2n−1}` with `c` the leading coefficient.
pub fn discriminant_poly(f: &MultiPoly, var: &str) -> Result<MultiPoly> {
    let i = f.vars.index_of(var)?;
    let n = f.degree_in(i).ok_or(Error::ZeroPolynomial)? as usize;
    if n < 2 {
        return Err(Error::DegreeTooSmall(n));
    }
    let lead = f.coefficients_in(i).pop().expect("degree n");
    let res = resultant(f, &f.derivative_at(i), var)?;
    let res = if (n * (n - 1) / 2) % 2 == 1 { -res } else { res };
    match lead.as_constant() {
        Some(c) => Ok(res.scale(&num_traits::pow(c, 2 * n - 1).recip())),
        None => res.div_exact(&lead.pow((2 * n - 1) as u32)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xyz() -> Vars {
        Vars::new(&["x", "y", "z"])
    }

    fn v(vars: &Vars, n: &str) -> MultiPoly {
        MultiPoly::var(vars, n).unwrap()
    }

    fn c(vars: &Vars, n: i64) -> MultiPoly {
        MultiPoly::constant(vars, rat(n))
    }

    #[test]
    fn arithmetic() {
        let u = xyz();
        let (x, y) = (v(&u, "x"), v(&u, "y"));
        assert_eq!(&(&x + &y) * &(&x - &y), &(&x * &x) - &(&y * &y));
        assert!((&x + &-&x).is_zero());
        assert_eq!((&x + &-&x).num_terms(), 0);

        let w = Vars::new(&["x1", "x2", "x3"]);
        let (x1, x2, x3) = (v(&w, "x1"), v(&w, "x2"), v(&w, "x3"));
        let cube = (&(&x2 * &x3) - &(&x1 * &x3)).pow(3);
        // binomial expansion of (a − b)³ with a = x2x3, b = x1x3
        let a = &x2 * &x3;
        let b = &x1 * &x3;
        let expect = &(&(&a.pow(3) - &(&c(&w, 3) * &(&a.pow(2) * &b))) + &(&c(&w, 3) * &(&a * &b.pow(2))))
            - &b.pow(3);
        assert_eq!(cube, expect);
        assert_eq!(cube.to_string(), "-1*x1^3*x3^3 + 3*x1^2*x2*x3^3 - 3*x1*x2^2*x3^3 + 1*x2^3*x3^3");
        assert_eq!(x.checked_add(&x1), Err(Error::UniverseMismatch));
    }

    #[test]
    fn derivative_evaluate_substitute() {
        let u = xyz();
        let (x, y) = (v(&u, "x"), v(&u, "y"));
        let f = &x.pow(3) * &y;
        assert_eq!(f.derivative("x").unwrap(), &c(&u, 3) * &(&x.pow(2) * &y));
        assert!(matches!(f.derivative("w"), Err(Error::UnknownVariable(_))));

        let g = &x.pow(2) + &y;
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(g.evaluate(&[rat(2), half, rat(0)]).unwrap(), BigRational::new(9.into(), 2.into()));

        let s = g.substitute("x", &(&y + &c(&u, 1))).unwrap();
        assert_eq!(s, &(&(&y.pow(2) + &(&c(&u, 2) * &y)) + &c(&u, 1)) + &y);
    }

    #[test]
    fn cremona_sends_conics_to_lines() {
        let u = Vars::new(&["x1", "x2", "x3", "a1", "a2", "a3"]);
        let p = |n| v(&u, n);
        let q = &(&(&p("a1") * &(&p("x2") * &p("x3"))) + &(&p("a2") * &(&p("x1") * &p("x3"))))
            + &(&p("a3") * &(&p("x1") * &p("x2")));
        let line = q.substitute_reciprocal(&["x1", "x2", "x3"], &[1, 1, 1, 0, 0, 0]).unwrap();
        let expect = &(&(&p("a1") * &p("x1")) + &(&p("a2") * &p("x2"))) + &(&p("a3") * &p("x3"));
        assert_eq!(line, expect);
        assert!(matches!(
            q.substitute_reciprocal(&["x1", "x2", "x3"], &[1, 0, 0, 0, 0, 0]),
            Err(Error::NegativeExponent(_))
        ));
    }

    #[test]
    fn hessians() {
        let u = xyz();
        let (x, y, z) = (v(&u, "x"), v(&u, "y"), v(&u, "z"));
        let h = hessian(&(&x.pow(2) + &y.pow(2)), &["x", "y", "z"]).unwrap();
        for (i, row) in h.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let expect = if i == j && i < 2 { 2 } else { 0 };
                assert_eq!(*e, c(&u, expect));
            }
        }
        let p1 = [rat(0), rat(0), rat(1)];
        let h = hessian(&(&x.pow(3) * &y.pow(3)), &["x", "y", "z"]).unwrap();
        assert!(h.iter().flatten().all(|e| e.evaluate(&p1).unwrap().is_zero()));
        let h = hessian(&z.pow(6), &["x", "y", "z"]).unwrap();
        assert_eq!(h[2][2], &c(&u, 30) * &z.pow(4));
        assert_eq!(h[2][2].evaluate(&p1).unwrap(), rat(30));
    }

    fn tvars() -> Vars {
        Vars::new(&["X", "t4", "t6", "t10", "t12"])
    }

    #[test]
    fn resultants() {
        let u = tvars();
        let p = |n| v(&u, n);
        let lin = &(&p("t4") * &p("X")) + &p("t10");
        let quad = &(&p("X").pow(2) + &(&p("t6") * &p("X"))) + &p("t12");
        let r = resultant(&lin, &quad, "X").unwrap();
        let expect = &(&(&p("t4").pow(2) * &p("t12")) - &(&p("t4") * &(&p("t6") * &p("t10")))) + &p("t10").pow(2);
        assert_eq!(r, expect);

        let u = Vars::new(&["X", "a", "b"]);
        let p = |n| v(&u, n);
        assert_eq!(resultant(&(&p("X") - &p("a")), &(&p("X") - &p("b")), "X").unwrap(), &p("a") - &p("b"));
        let f = &(&p("X").pow(3) - &p("a")) + &p("b");
        assert!(resultant(&f, &f, "X").unwrap().is_zero());
        assert_eq!(resultant(&MultiPoly::zero(&u), &f, "X"), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn discriminants() {
        let u = Vars::new(&["X", "b", "c"]);
        let p = |n| v(&u, n);
        let quad = &(&p("X").pow(2) + &(&p("b") * &p("X"))) + &p("c");
        assert_eq!(discriminant_poly(&quad, "X").unwrap(), &p("b").pow(2) - &(&c(&u, 4) * &p("c")));
        let cubic = &(&p("X").pow(3) + &(&p("b") * &p("X"))) + &p("c");
        let expect = &(&c(&u, -4) * &p("b").pow(3)) - &(&c(&u, 27) * &p("c").pow(2));
        assert_eq!(discriminant_poly(&cubic, "X").unwrap(), expect);
        assert_eq!(
            discriminant_poly(&cubic.scale(&rat(2)), "X").unwrap(),
            discriminant_poly(&cubic, "X").unwrap()
        );
        assert_eq!(discriminant_poly(&p("X"), "X"), Err(Error::DegreeTooSmall(1)));
    }

    #[test]
    fn weighted_degrees() {
        let u = Vars::new(&["t4", "t6", "t10", "t12"]);
        let p = |n| v(&u, n);
        let r20 = &(&(&p("t4").pow(2) * &p("t12")) - &(&p("t4") * &(&p("t6") * &p("t10")))) + &p("t10").pow(2);
        assert_eq!(r20.weighted_degree(&[4, 6, 10, 12]).unwrap(), 20);
        let u = Vars::new(&["x", "y"]);
        let (x, y) = (v(&u, "x"), v(&u, "y"));
        assert_eq!((&x.pow(6) + &(&x.pow(3) * &y.pow(3))).weighted_degree(&[1, 1]).unwrap(), 6);
        assert_eq!((&x + &y.pow(2)).weighted_degree(&[1, 1]), Err(Error::NotHomogeneous(vec![1, 2])));
        assert_eq!(MultiPoly::zero(&u).weighted_degree(&[1, 1]), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn exact_division() {
        let u = xyz();
        let (x, y, z) = (v(&u, "x"), v(&u, "y"), v(&u, "z"));
        let a = &(&x.pow(2) + &(&y * &z)) - &c(&u, 3);
        let b = &(&x * &y) + &z.pow(3);
        assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        assert_eq!((&(&a * &b) + &c(&u, 1)).div_exact(&b), Err(Error::NotDivisible));
    }

    fn small_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((0u32..3, 0u32..3, 0u32..3, -5i64..=5), 0..5).prop_map(|ts| {
            let u = xyz();
            MultiPoly::from_terms(&u, ts.into_iter().map(|(a, b, c, k)| (vec![a, b, c], rat(k)))).unwrap()
        })
    }

    fn point() -> impl Strategy<Value = Vec<BigRational>> {
        prop::collection::vec((-6i64..=6, 1i64..=4), 3)
            .prop_map(|v| v.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())).collect())
    }

    proptest! {
        #[test]
        fn ring_axioms(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
            prop_assert_eq!(&f * &g, &g * &f);
            prop_assert_eq!(&f + &g, &g + &f);
        }

        #[test]
        fn leibniz_rule(f in small_poly(), g in small_poly()) {
            let d = |p: &MultiPoly| p.derivative("y").unwrap();
            prop_assert_eq!(d(&(&f * &g)), &(&f * &d(&g)) + &(&d(&f) * &g));
        }

        #[test]
        fn substitution_commutes_with_evaluation(f in small_poly(), g in small_poly(), pt in point()) {
            let s = f.substitute("x", &g).unwrap();
            let gx = g.evaluate(&pt).unwrap();
            let mut pt2 = pt.clone();
            pt2[0] = gx;
            prop_assert_eq!(s.evaluate(&pt).unwrap(), f.evaluate(&pt2).unwrap());
        }

        #[test]
        fn resultant_antisymmetry(f in small_poly(), g in small_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let (df, dg) = (f.degree_in(0).unwrap(), g.degree_in(0).unwrap());
            let fg = resultant(&f, &g, "x").unwrap();
            let gf = resultant(&g, &f, "x").unwrap();
            let expect = if (df * dg) % 2 == 1 { -gf } else { gf };
            prop_assert_eq!(fg, expect);
        }

        #[test]
        fn discriminant_detects_repeated_roots(a in -6i64..=6, b in -6i64..=6, k in 1i64..=4) {
            let u = Vars::new(&["X"]);
            let x = v(&u, "X");
            let f = (&(&x - &c(&u, a)).pow(2) * &(&x - &c(&u, b))).scale(&rat(k));
            let d = discriminant_poly(&f, "X").unwrap();
            prop_assert!(d.is_zero());
            let g = &(&(&x - &c(&u, a)) * &(&x - &c(&u, a + 1))) * &(&x - &c(&u, a + 2 + b.abs()));
            prop_assert!(!discriminant_poly(&g, "X").unwrap().is_zero());
        }
    }
}
