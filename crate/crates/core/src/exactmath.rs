//! Exact integer and rational linear algebra.
//!
//! Dense row-major matrices over [`BigInt`] and [`BigRational`], with the
//! handful of algorithms the rest of the crate needs: Smith and Hermite
//! normal forms, fraction-free determinants, congruence diagonalisation and
//! rational kernels. Nothing here touches floating point.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMatrix = Matrix<BigInt>;
pub type RatMatrix = Matrix<BigRational>;

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(alloc::format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        let data = rows.into_iter().flatten().collect();
        Matrix::new(nrows, ncols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<T>
    where
        T: Clone,
    {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self
    where
        T: Clone,
    {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn is_symmetric(&self) -> bool
    where
        T: PartialEq,
    {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Self) -> Self {
        let mut out = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn diagonal(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Dimension(alloc::format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows,
                self.cols,
                rhs.rows,
                rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a * &rhs[(k, j)];
                    out[(i, j)] = &out[(i, j)] + &prod;
                }
            }
        }
        Ok(out)
    }

    /// `xᵀ · self · y` for a square matrix.
    pub fn bilinear(&self, x: &[T], y: &[T]) -> T {
        let mut acc = T::zero();
        for i in 0..self.rows {
            if x[i].is_zero() {
                continue;
            }
            let mut row = T::zero();
            for j in 0..self.cols {
                let p = &self[(i, j)] * &y[j];
                row = &row + &p;
            }
            let p = &x[i] * &row;
            acc = &acc + &p;
        }
        acc
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[T]) -> Vec<T> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(T::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect()
    }
}

impl IntMatrix {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Matrix::from_rows(rows).expect("rectangular literal")
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| BigRational::from_integer(x.clone()))
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        self.map(|x| x * k)
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        for j in 0..self.cols {
            let delta = &self[(source, j)] * k;
            self[(target, j)] += delta;
        }
    }

    fn add_col_multiple(&mut self, target: usize, source: usize, k: &BigInt) {
        for i in 0..self.rows {
            let delta = &self[(i, source)] * k;
            self[(i, target)] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = core::mem::take(&mut self[(i, j)]);
            self[(i, j)] = -x;
        }
    }
}

impl RatMatrix {
    /// Returns `None` if some entry is not an integer.
    pub fn to_integer(&self) -> Option<IntMatrix> {
        if self.data.iter().all(BigRational::is_integer) {
            Some(self.map(BigRational::to_integer))
        } else {
            None
        }
    }
}

/// Smith normal form `U · M · V = D` with `U`, `V` unimodular.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// Diagonal entries `d₁ | d₂ | …` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = &a[(i, j)];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < a[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithForm { d: a, u, v };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let pivot = a[(t, t)].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&pivot);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&pivot);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            let offender = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { d: a, u, v }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det_exact(m: &IntMatrix) -> Result<BigInt> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                a[(i, j)] = num / &prev;
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = a[(k, k)].clone();
    }
    Ok(sign * &a[(n - 1, n - 1)])
}

/// Reduced row echelon form; returns the reduced matrix and pivot columns.
pub fn rref(m: &RatMatrix) -> (RatMatrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = a[(r, c)].recip();
        for j in c..a.cols {
            a[(r, j)] = &a[(r, j)] * &inv;
        }
        for i in 0..a.rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..a.cols {
                let delta = &f * &a[(r, j)];
                a[(i, j)] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank_rational(m: &RatMatrix) -> usize {
    rref(m).1.len()
}

/// Basis of the right kernel `{v : M·v = 0}`; empty when `M` is injective.
pub fn nullspace_rational(m: &RatMatrix) -> Vec<Vec<BigRational>> {
    let (r, pivots) = rref(m);
    let mut basis = Vec::new();
    for free in (0..m.cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); m.cols];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r[(row, free)].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn inverse_rational(m: &RatMatrix) -> Result<RatMatrix> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut aug = RatMatrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug[(i, j)] = m[(i, j)].clone();
        }
        aug[(i, n + i)] = BigRational::one();
    }
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(Error::Degenerate);
    }
    let mut inv = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            inv[(i, j)] = r[(i, n + j)].clone();
        }
    }
    Ok(inv)
}

pub fn det_rational(m: &RatMatrix) -> Result<BigRational> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
            return Ok(BigRational::zero());
        };
        if p != k {
            a.swap_rows(k, p);
            det = -det;
        }
        det *= a[(k, k)].clone();
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &a[(k, k)];
            for j in k..n {
                let delta = &f * &a[(k, j)];
                a[(i, j)] -= delta;
            }
        }
    }
    Ok(det)
}

/// Signature `(p, n)` of a nondegenerate symmetric rational form.
///
/// Congruence diagonalisation: symmetric row/column operations keep the
/// form's inertia. A zero diagonal with a nonzero partner `g[k][j]` is
/// repaired by adding row/column `j` to `k`, giving `2·g[k][j] ≠ 0` there.
pub fn signature(g: &RatMatrix) -> Result<(usize, usize)> {
    if !g.is_square() {
        return Err(Error::NonSquare { rows: g.rows, cols: g.cols });
    }
    if !g.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let n = g.rows;
    let mut a = g.clone();
    let (mut pos, mut neg) = (0, 0);
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !a[(i, i)].is_zero()) {
                a.swap_rows(k, i);
                a.swap_cols(k, i);
            } else {
                let partner = (k..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .find(|&(i, j)| !a[(i, j)].is_zero());
                let Some((i, j)) = partner else {
                    return Err(Error::Degenerate);
                };
                // bring i to position k, then fold j into it
                a.swap_rows(k, i);
                a.swap_cols(k, i);
                for c in 0..n {
                    let x = a[(j, c)].clone();
                    a[(k, c)] += x;
                }
                for r in 0..n {
                    let x = a[(r, j)].clone();
                    a[(r, k)] += x;
                }
            }
        }
        let pivot = a[(k, k)].clone();
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &pivot;
            for c in k..n {
                let delta = &f * &a[(k, c)];
                a[(i, c)] -= delta;
            }
            for r in k..n {
                let delta = &f * &a[(r, k)];
                a[(r, i)] -= delta;
            }
        }
    }
    Ok((pos, neg))
}

/// Row-style Hermite normal form; returns only the nonzero rows.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut a = m.clone();
    let mut k = 0;
    for c in 0..a.cols {
        if k == a.rows {
            break;
        }
        let mut found = false;
        loop {
            let best = (k..a.rows)
                .filter(|&i| !a[(i, c)].is_zero())
                .min_by(|&x, &y| a[(x, c)].abs().cmp(&a[(y, c)].abs()));
            let Some(p) = best else { break };
            found = true;
            a.swap_rows(k, p);
            let mut clean = true;
            for i in k + 1..a.rows {
                if a[(i, c)].is_zero() {
                    continue;
                }
                let q = -a[(i, c)].div_floor(&a[(k, c)]);
                a.add_row_multiple(i, k, &q);
                clean &= a[(i, c)].is_zero();
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if a[(k, c)].is_negative() {
            a.negate_row(k);
        }
        for i in 0..k {
            let q = -a[(i, c)].div_floor(&a[(k, c)]);
            if !q.is_zero() {
                a.add_row_multiple(i, k, &q);
            }
        }
        k += 1;
    }
    let data = a.data[..k * a.cols].to_vec();
    Matrix { rows: k, cols: a.cols, data }
}

/// Basis (as vectors) of the integer kernel `{x ∈ ℤⁿ : M·x = 0}`.
///
/// Taken from the trailing columns of the Smith transform `V`, so the
/// result spans a saturated sublattice of `ℤⁿ`.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(m);
    let r = snf.rank();
    (r..m.cols).map(|j| snf.v.column(j)).collect()
}

/// Parses `n` or `n/d` with decimal integers.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    (!d.is_zero()).then(|| BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64(rows)
    }

    fn e8() -> IntMatrix {
        crate::lattice::Lattice::e8().gram().clone()
    }

    fn check_snf(m: &IntMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
        assert!(s.d.is_diagonal());
        assert!(det_exact(&s.u).unwrap().abs().is_one());
        assert!(det_exact(&s.v).unwrap().abs().is_one());
        let diag = s.diagonal();
        assert!(diag.iter().all(|d| !d.is_negative()));
        for w in diag.windows(2) {
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        s
    }

    // Cofactor expansion, used as an independent determinant oracle.
    fn det_cofactor(m: &[Vec<i64>]) -> i128 {
        let n = m.len();
        if n == 1 {
            return m[0][0] as i128;
        }
        (0..n)
            .filter(|&j| m[0][j] != 0)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] as i128 * det_cofactor(&minor)
            })
            .sum()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(check_snf(&int(&[&[2, 0], &[0, 2]])).d, int(&[&[2, 0], &[0, 2]]));
        assert_eq!(check_snf(&int(&[&[0, 1], &[1, 0]])).d, int(&[&[1, 0], &[0, 1]]));
        assert_eq!(check_snf(&int(&[&[-4]])).d, int(&[&[4]]));
        assert_eq!(check_snf(&int(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])).diagonal(),
            [2, 6, 12].map(BigInt::from).to_vec());
        check_snf(&int(&[&[0, 0, 0], &[0, 0, 0]]));
        check_snf(&int(&[&[3, 5, 7]]));
    }

    #[test]
    fn determinants() {
        assert_eq!(det_exact(&IntMatrix::identity(3)).unwrap(), BigInt::one());
        let e8 = e8();
        let oracle = det_cofactor(&e8.map(|x| i64::try_from(x).unwrap()).to_rows());
        assert_eq!(oracle, 1);
        assert_eq!(det_exact(&e8).unwrap(), BigInt::from(oracle));
        let d4 = crate::lattice::Lattice::d4().gram().clone();
        let oracle = det_cofactor(&d4.map(|x| i64::try_from(x).unwrap()).to_rows());
        assert_eq!(oracle, 4);
        assert_eq!(det_exact(&d4).unwrap(), BigInt::from(4));
        assert!(matches!(
            det_exact(&int(&[&[1, 2, 3]])),
            Err(Error::NonSquare { rows: 1, cols: 3 })
        ));
    }

    #[test]
    fn signatures() {
        let g = IntMatrix::diagonal([2, 2, -2, -2, -2].map(BigInt::from).to_vec());
        assert_eq!(signature(&g.to_rational()).unwrap(), (2, 3));
        // eigenvalues of [[0,1],[1,0]] are ±1
        assert_eq!(signature(&int(&[&[0, 1], &[1, 0]]).to_rational()).unwrap(), (1, 1));
        assert_eq!(signature(&e8().to_rational()).unwrap(), (0, 8));
        assert_eq!(signature(&int(&[&[0, 1], &[2, 0]]).to_rational()), Err(Error::NotSymmetric));
        assert_eq!(signature(&int(&[&[1, 1], &[1, 1]]).to_rational()), Err(Error::Degenerate));
        // zero diagonal in a larger block
        let h = int(&[&[0, 0, 1], &[0, 0, 2], &[1, 2, 0]]);
        assert_eq!(signature(&h.to_rational()), Err(Error::Degenerate));
        let h = int(&[&[0, 3, 0], &[3, 0, 0], &[0, 0, -5]]);
        assert_eq!(signature(&h.to_rational()).unwrap(), (1, 2));
    }

    #[test]
    fn nullspaces() {
        assert_eq!(nullspace_rational(&RatMatrix::zeros(1, 3)).len(), 3);
        assert!(nullspace_rational(&RatMatrix::identity(4)).is_empty());
        let k = nullspace_rational(&int(&[&[1, 1, 0], &[0, 0, 1]]).to_rational());
        assert_eq!(k.len(), 1);
        let r = |x: i64| BigRational::from_integer(x.into());
        assert_eq!(k[0], vec![r(-1), r(1), r(0)]);
    }

    #[test]
    fn hnf_and_kernel() {
        let m = int(&[&[2, 0], &[0, 2], &[1, 1]]);
        assert_eq!(hermite_normal_form(&m), int(&[&[1, 1], &[0, 2]]));
        let ker = integer_kernel(&int(&[&[2, 4, 6]]));
        assert_eq!(ker.len(), 2);
        let basis = IntMatrix::from_rows(ker).unwrap();
        // saturated: elementary divisors of the basis are all one
        assert!(smith_normal_form(&basis).diagonal().iter().all(BigInt::is_one));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = int(&[&[2, 1], &[1, 1]]).to_rational();
        let inv = inverse_rational(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), RatMatrix::identity(2));
        assert_eq!(inverse_rational(&RatMatrix::zeros(2, 2)), Err(Error::Degenerate));
    }

    fn small_matrix(max_dim: usize) -> impl Strategy<Value = IntMatrix> {
        (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
            prop::collection::vec(-9i64..=9, r * c).prop_map(move |v| {
                IntMatrix::new(r, c, v.into_iter().map(BigInt::from).collect()).unwrap()
            })
        })
    }

    fn unimodular(n: usize) -> impl Strategy<Value = IntMatrix> {
        prop::collection::vec((0..n, 0..n, -3i64..=3), 0..12).prop_map(move |ops| {
            let mut s = IntMatrix::identity(n);
            for (i, j, k) in ops {
                if i != j {
                    s.add_row_multiple(i, j, &BigInt::from(k));
                }
            }
            s
        })
    }

    proptest! {
        #[test]
        fn snf_invariants(m in small_matrix(5)) {
            let s = check_snf(&m);
            if m.is_square() {
                let prod: BigInt = s.diagonal().iter().product();
                let sign = det_exact(&s.u).unwrap() * det_exact(&s.v).unwrap();
                prop_assert_eq!(det_exact(&m).unwrap() * sign, prod);
            }
        }

        #[test]
        fn signature_congruence_invariant(
            diag in prop::collection::vec(prop_oneof![-5i64..=-1, 1i64..=5], 4),
            s in unimodular(4),
        ) {
            let g = IntMatrix::diagonal(diag.iter().map(|&x| BigInt::from(x)).collect());
            let expect = (diag.iter().filter(|&&x| x > 0).count(), diag.iter().filter(|&&x| x < 0).count());
            let h = s.transpose().mul(&g).unwrap().mul(&s).unwrap();
            prop_assert_eq!(signature(&h.to_rational()).unwrap(), expect);
        }

        #[test]
        fn nullspace_annihilates(m in small_matrix(5)) {
            let q = m.to_rational();
            let basis = nullspace_rational(&q);
            prop_assert_eq!(basis.len(), m.cols() - rank_rational(&q));
            for v in &basis {
                prop_assert!(q.apply(v).iter().all(Zero::is_zero));
            }
        }
    }
}
