//! Exact dense linear algebra over a prime field `F_p`.
//!
//! Every computation in the crate eventually lands here: hom spaces are
//! kernels, quotients are complements of row spaces, and module maps are
//! products of small dense matrices. Matrices are tiny (well under 100x100)
//! so storage is a flat row-major `Vec<u64>` and elimination is plain
//! Gauss-Jordan with first-nonzero pivoting.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

/// Default prime modulus.
pub const DEFAULT_PRIME: u64 = 101;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
}

/// A prime modulus `p`. Arithmetic helpers take and return canonical
/// representatives in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldPrime(u64);

impl FieldPrime {
    pub fn new(p: u64) -> Result<Self, LinalgError> {
        if !(2..(1 << 31)).contains(&p) || !is_prime(p) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(FieldPrime(p))
    }

    pub fn p(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.0;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.0), "inverse of zero in F_{}", self.0);
        self.pow(a, self.0 - 2)
    }

    /// Reduce a signed integer to its canonical representative.
    pub fn reduce(self, a: i64) -> u64 {
        a.rem_euclid(self.0 as i64) as u64
    }

    /// Signed representative in `(-p/2, p/2]`, used for printing.
    pub fn signed(self, a: u64) -> i64 {
        if a > self.0 / 2 {
            a as i64 - self.0 as i64
        } else {
            a as i64
        }
    }
}

impl Default for FieldPrime {
    fn default() -> Self {
        FieldPrime(DEFAULT_PRIME)
    }
}

impl fmt::Display for FieldPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense matrix over `F_p`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    field: FieldPrime,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Result of [`FpMatrix::rref`].
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: FpMatrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl FpMatrix {
    pub fn zeros(field: FieldPrime, rows: usize, cols: usize) -> Self {
        FpMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldPrime, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_fn(
        field: FieldPrime,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u64,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j) % field.p());
            }
        }
        FpMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Build from signed integer rows; entries are reduced mod p.
    pub fn from_rows(field: FieldPrime, rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::ShapeMismatch("ragged rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| field.reduce(x)))
            .collect();
        Ok(FpMatrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(field: FieldPrime, rows: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, &x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x % field.p();
            }
        }
        m
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.field.p();
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u64>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Entries in row-major order.
    pub fn as_slice(&self) -> &[u64] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn scale(&self, c: u64) -> Self {
        let f = self.field;
        FpMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.mul(x, c % f.p())).collect(),
        }
    }

    pub fn trace(&self) -> u64 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }

    /// `self * v` for a column vector.
    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols, "apply: vector length");
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| (acc + a * b) % f.p())
            })
            .collect()
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.field, self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(self.field, rows.len(), cols.len(), |i, j| {
            self.get(r0 + i, c0 + j)
        })
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack: row counts");
        Self::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    /// Vertical concatenation.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack: column counts");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FpMatrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(field: FieldPrime, blocks: &[FpMatrix]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Overwrite the block starting at `(r0, c0)` with `b`.
    pub fn paste(&mut self, r0: usize, c0: usize, b: &FpMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = b.get(i, j);
            }
        }
    }

    /// Reduced row-echelon form with first-nonzero pivoting.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.data[r * m.cols + j] = v;
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.data[i * m.cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of the right kernel. Each returned vector has a 1 in its own
    /// free column and 0 in every other free column.
    pub fn kernel_basis(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let Rref { reduced, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0; self.cols];
                v[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(reduced.get(r, free));
                }
                v
            })
            .collect()
    }

    /// Free (non-pivot) columns, in the same order as [`Self::kernel_basis`].
    pub fn free_columns(&self) -> Vec<usize> {
        let pivots = self.rref().pivots;
        (0..self.cols).filter(|c| !pivots.contains(c)).collect()
    }

    /// Kernel basis as the columns of a `cols x k` matrix.
    pub fn kernel_matrix(&self) -> FpMatrix {
        FpMatrix::from_columns(self.field, self.cols, &self.kernel_basis())
    }

    /// Linearly independent columns of `self` spanning its column space.
    pub fn image_basis(&self) -> Vec<Vec<u64>> {
        self.rref().pivots.iter().map(|&c| self.column(c)).collect()
    }

    pub fn image_matrix(&self) -> FpMatrix {
        FpMatrix::from_columns(self.field, self.rows, &self.image_basis())
    }

    /// One solution of `self * x = b`.
    pub fn solve(&self, b: &[u64]) -> Result<Vec<u64>, LinalgError> {
        if b.len() != self.rows {
            return Err(LinalgError::ShapeMismatch(format!(
                "matrix has {} rows, right-hand side has {}",
                self.rows,
                b.len()
            )));
        }
        let rhs = FpMatrix::from_columns(self.field, self.rows, &[b.to_vec()]);
        Ok(self.solve_matrix(&rhs)?.column(0))
    }

    /// One solution `X` of `self * X = b` for a matrix right-hand side.
    pub fn solve_matrix(&self, b: &FpMatrix) -> Result<FpMatrix, LinalgError> {
        if b.rows != self.rows {
            return Err(LinalgError::ShapeMismatch(format!(
                "matrix has {} rows, right-hand side has {}",
                self.rows, b.rows
            )));
        }
        let aug = self.hstack(b);
        let Rref { reduced, pivots } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Err(LinalgError::NoSolution);
        }
        let mut x = FpMatrix::zeros(self.field, self.cols, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, reduced.get(r, self.cols + j));
            }
        }
        Ok(x)
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        if self.rows == 0 {
            return Some(self.clone());
        }
        let id = FpMatrix::identity(self.field, self.rows);
        let x = self.solve_matrix(&id).ok()?;
        ((self * &x) == id).then_some(x)
    }

    /// Left inverse of a matrix with full column rank.
    pub fn left_inverse(&self) -> Option<FpMatrix> {
        let t = self.transpose();
        let id = FpMatrix::identity(self.field, self.cols);
        t.solve_matrix(&id).ok().map(|x| x.transpose())
    }

    /// A pair `(q, s)` describing the quotient of `F_p^n` by the column span
    /// of `sub`: `q` is surjective with kernel exactly the span and `s` is a
    /// section, `q * s = I`.
    pub fn quotient_maps(sub: &FpMatrix) -> (FpMatrix, FpMatrix) {
        let f = sub.field;
        let n = sub.rows;
        let Rref { reduced, pivots } = sub.transpose().rref();
        let nonpivots: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut q = FpMatrix::zeros(f, nonpivots.len(), n);
        let mut s = FpMatrix::zeros(f, n, nonpivots.len());
        for (k, &col) in nonpivots.iter().enumerate() {
            q.set(k, col, 1);
            s.set(col, k, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                q.set(k, pc, f.neg(reduced.get(r, col)));
            }
        }
        (q, s)
    }

    /// Whether every column of `other` lies in the column span of `self`.
    pub fn spans(&self, other: &FpMatrix) -> bool {
        self.rank() == self.hstack(other).rank()
    }

    /// Characteristic polynomial, coefficients from constant term upward.
    /// Uses the Hessenberg reduction, so it is valid in any characteristic.
    pub fn charpoly(&self) -> Vec<u64> {
        assert!(self.is_square());
        let f = self.field;
        let n = self.rows;
        let mut h = self.clone();
        // reduce to upper Hessenberg form by similarity
        for c in 0..n.saturating_sub(2) {
            let Some(pr) = (c + 1..n).find(|&i| h.get(i, c) != 0) else {
                continue;
            };
            if pr != c + 1 {
                h.swap_rows(pr, c + 1);
                for i in 0..n {
                    h.data.swap(i * n + pr, i * n + c + 1);
                }
            }
            let inv = f.inv(h.get(c + 1, c));
            for i in c + 2..n {
                let factor = f.mul(h.get(i, c), inv);
                if factor == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = f.sub(h.get(i, j), f.mul(factor, h.get(c + 1, j)));
                    h.data[i * n + j] = v;
                }
                for j in 0..n {
                    let v = f.add(h.get(j, c + 1), f.mul(factor, h.get(j, i)));
                    h.data[j * n + c + 1] = v;
                }
            }
        }
        // p_k(x) = (x - h_kk) p_{k-1}(x) - sum_{i<k} h_ik * prod h_{j,j-1} * p_{i-1}
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            let prev = &polys[k];
            let mut next = vec![0; k + 2];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = f.add(next[d + 1], c);
                next[d] = f.sub(next[d], f.mul(h.get(k, k), c));
            }
            let mut prod = 1;
            for i in (0..k).rev() {
                prod = f.mul(prod, h.get(i + 1, i));
                let coeff = f.mul(prod, h.get(i, k));
                if coeff == 0 {
                    continue;
                }
                for (d, &c) in polys[i].iter().enumerate() {
                    next[d] = f.sub(next[d], f.mul(coeff, c));
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }
}

/// Evaluate a polynomial (constant term first) at `x`.
pub fn poly_eval(field: FieldPrime, poly: &[u64], x: u64) -> u64 {
    poly.iter()
        .rev()
        .fold(0, |acc, &c| field.add(field.mul(acc, x), c))
}

/// Smallest root of `poly` in `F_p`, by exhaustive evaluation.
pub fn poly_first_root(field: FieldPrime, poly: &[u64]) -> Option<u64> {
    (0..field.p()).find(|&x| poly_eval(field, poly, x) == 0)
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMatrix<{}>{}x{}", self.field.p(), self.rows, self.cols)?;
        write!(f, "{}", self)
    }
}

impl fmt::Display for FpMatrix {
    /// `[[r00,r01],[r10,r11]]` with signed representatives.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.field.signed(self.get(i, j)))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Mul for &FpMatrix {
    type Output = FpMatrix;

    fn mul(self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!(
            self.cols, rhs.rows,
            "matrix product {}x{} * {}x{}",
            self.rows, self.cols, rhs.rows, rhs.cols
        );
        assert_eq!(self.field, rhs.field, "matrix product across fields");
        let p = self.field.p();
        let mut out = FpMatrix::zeros(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = (out.data[idx] + a * rhs.data[k * rhs.cols + j]) % p;
                }
            }
        }
        out
    }
}

impl Add for &FpMatrix {
    type Output = FpMatrix;

    fn add(self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shapes");
        let f = self.field;
        FpMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }
}

impl Sub for &FpMatrix {
    type Output = FpMatrix;

    fn sub(self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shapes");
        let f = self.field;
        FpMatrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }
}

impl Neg for &FpMatrix {
    type Output = FpMatrix;

    fn neg(self) -> FpMatrix {
        self.scale(self.field.p() - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f101() -> FieldPrime {
        FieldPrime::new(101).unwrap()
    }

    fn m(rows: &[Vec<i64>]) -> FpMatrix {
        FpMatrix::from_rows(f101(), rows).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = FpMatrix::identity(f101(), 3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        assert_eq!(r.rank(), 3);

        let z = FpMatrix::zeros(f101(), 2, 4);
        let r = z.rref();
        assert_eq!(r.reduced, z);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one() {
        let r = m(&[vec![1, 2], vec![2, 4]]).rref();
        assert_eq!(r.rank(), 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn solve_identity() {
        let b = vec![3, 7, 100];
        assert_eq!(FpMatrix::identity(f101(), 3).solve(&b).unwrap(), b);
    }

    #[test]
    fn solve_reports_inconsistency_and_shape() {
        let a = m(&[vec![1, 1], vec![1, 1]]);
        assert_eq!(a.solve(&[1, 2]), Err(LinalgError::NoSolution));
        assert!(matches!(a.solve(&[1]), Err(LinalgError::ShapeMismatch(_))));
    }

    #[test]
    fn kernel_of_zero_and_of_row() {
        assert_eq!(FpMatrix::zeros(f101(), 3, 3).kernel_basis().len(), 3);
        let k = m(&[vec![1, 1]]).kernel_basis();
        assert_eq!(k, vec![vec![100, 1]]);
    }

    #[test]
    fn not_prime_rejected() {
        assert!(FieldPrime::new(100).is_err());
        assert!(FieldPrime::new(32003).is_ok());
    }

    #[test]
    fn quotient_maps_kill_subspace() {
        let sub = m(&[vec![1], vec![2], vec![0]]);
        let (q, s) = FpMatrix::quotient_maps(&sub);
        assert_eq!(q.shape(), (2, 3));
        assert!((&q * &sub).is_zero());
        assert_eq!(&q * &s, FpMatrix::identity(f101(), 2));
    }

    #[test]
    fn charpoly_matches_companion() {
        // companion matrix of x^3 - 2x^2 + 5x - 7
        let c = m(&[vec![0, 0, 7], vec![1, 0, -5], vec![0, 1, 2]]);
        let f = f101();
        assert_eq!(c.charpoly(), vec![f.reduce(-7), 5, f.reduce(-2), 1]);
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, FpMatrix::identity(f101(), 2));
        assert!(m(&[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }
}
