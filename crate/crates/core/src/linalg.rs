//! Dense matrices over [`Q`] with exact Gaussian elimination.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::rational::Q;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Q>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        Matrix::from_rows_sized(r, c, rows)
    }

    /// Like [`Matrix::from_rows`] but keeps the column count when there are no rows.
    pub fn from_rows_sized(r: usize, c: usize, rows: &[Vec<Q>]) -> Matrix {
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Matrix {
        let v: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| Q::from(x)).collect()).collect();
        Matrix::from_rows(&v)
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_cols(rows: usize, cols: &[Vec<Q>]) -> Matrix {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = *x;
            }
        }
        m
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

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Q::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn col_vectors(&self) -> Vec<Vec<Q>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn entries(&self) -> &[Q] {
        &self.data
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn scale(&self, s: Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&x| x * s).collect() }
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols, "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = Q::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += *a * *b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)];
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)];
            }
        }
        m
    }

    pub fn block_diag(blocks: &[&Matrix]) -> Matrix {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)];
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut m = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = self[(r0 + i, c0 + j)];
            }
        }
        m
    }

    pub fn select_cols(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(self.rows, idx.len());
        for (jj, &j) in idx.iter().enumerate() {
            for i in 0..self.rows {
                m[(i, jj)] = self[(i, j)];
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(idx.len(), self.cols);
        for (ii, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                m[(ii, j)] = self[(i, j)];
            }
        }
        m
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let x = m[(r, j)];
                if !x.is_zero() {
                    m[(r, j)] = x * inv;
                }
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m[(i, c)];
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let x = m[(r, j)];
                    if !x.is_zero() {
                        let y = m[(i, j)] - f * x;
                        m[(i, j)] = y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
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
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().1.len()
    }

    /// Basis of `{x : self * x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, free)];
            }
            basis.push(v);
        }
        basis
    }

    /// Matrix whose columns form a basis of the kernel.
    pub fn kernel(&self) -> Matrix {
        Matrix::from_cols(self.cols, &self.nullspace())
    }

    /// Some solution of `self * x = b`, or `None` when inconsistent.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Matrix::from_cols(self.rows, &[b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Q::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)];
        }
        Some(x)
    }

    /// Some `X` with `self * X = b`.
    pub fn solve_matrix(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(b.rows, self.rows);
        if b.cols == 0 {
            return Some(Matrix::zeros(self.cols, 0));
        }
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(p, j)] = r[(i, self.cols + j)];
            }
        }
        Some(x)
    }

    /// Some `X` with `X * self = b`.
    pub fn solve_left(&self, b: &Matrix) -> Option<Matrix> {
        self.transpose().solve_matrix(&b.transpose()).map(|x| x.transpose())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve_matrix(&Matrix::identity(self.rows))?;
        Some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// Indices of a maximal independent subset of the columns, chosen greedily left to right.
    pub fn pivot_cols(&self) -> Vec<usize> {
        self.rref().1
    }

    /// Columns forming a basis of the column space.
    pub fn col_basis(&self) -> Matrix {
        self.select_cols(&self.pivot_cols())
    }

    /// Characteristic polynomial `det(tI - A)` as coefficients, constant term first.
    pub fn charpoly(&self) -> Vec<Q> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        // Faddeev-LeVerrier
        let mut coeffs = vec![Q::zero(); n + 1];
        coeffs[n] = Q::one();
        let mut m = Matrix::zeros(n, n);
        for k in 1..=n {
            let mut next = self * &m;
            for i in 0..n {
                next[(i, i)] += coeffs[n - k + 1];
            }
            m = next;
            let am = self * &m;
            let tr: Q = (0..n).map(|i| am[(i, i)]).sum();
            coeffs[n - k] = -tr / Q::from_int(k as i128);
        }
        coeffs
    }

    pub fn pow(&self, k: usize) -> Matrix {
        let mut r = Matrix::identity(self.rows);
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }
}

/// Basis (as columns) of the intersection of two column spaces in the same ambient space.
pub fn intersect_spans(a: &Matrix, b: &Matrix) -> Matrix {
    assert_eq!(a.rows(), b.rows());
    if a.cols() == 0 || b.cols() == 0 {
        return Matrix::zeros(a.rows(), 0);
    }
    let stacked = a.hstack(&b.scale(-Q::one()));
    let coeffs: Vec<Vec<Q>> = stacked.nullspace().into_iter().map(|v| a.mul_vec(&v[..a.cols()])).collect();
    Matrix::from_cols(a.rows(), &coeffs).col_basis()
}

/// Basis of the column space of `[a | b]`.
pub fn sum_spans(a: &Matrix, b: &Matrix) -> Matrix {
    a.hstack(b).col_basis()
}

/// Columns of the identity completing the independent columns of `basis` to a basis of the ambient space.
pub fn complement(basis: &Matrix) -> Matrix {
    let n = basis.rows();
    let full = basis.hstack(&Matrix::identity(n));
    let pivots = full.pivot_cols();
    let extra: Vec<usize> = pivots.into_iter().filter(|&p| p >= basis.cols()).collect();
    full.select_cols(&extra)
}

/// Reduced column-echelon basis of the column space.
pub fn reduced_span(m: &Matrix) -> Matrix {
    let (r, pivots) = m.transpose().rref();
    r.select_rows(&(0..pivots.len()).collect::<Vec<_>>()).transpose()
}

/// Fitting pair of a square matrix: `(ker f^N, im f^N)` for `N` large, as reduced column bases.
pub fn fitting_pair(f: &Matrix) -> (Matrix, Matrix) {
    let n = f.rows();
    let mut img = Matrix::identity(n);
    loop {
        let next = reduced_span(&(f * &img));
        if next.cols() == img.cols() {
            break;
        }
        img = next;
    }
    let mut ker = Matrix::zeros(n, 0);
    loop {
        // preimage of the current kernel
        let sys = f.hstack(&ker.scale(-Q::one()));
        let vecs: Vec<Vec<Q>> = sys.nullspace().into_iter().map(|v| v[..n].to_vec()).collect();
        let next = reduced_span(&Matrix::from_cols(n, &vecs));
        if next.cols() == ker.cols() {
            break;
        }
        ker = next;
    }
    (ker, img)
}

/// Rational roots of a polynomial given constant-term-first.
pub fn rational_roots(poly: &[Q]) -> Vec<Q> {
    let mut p: Vec<Q> = poly.to_vec();
    while p.len() > 1 && p.last().unwrap().is_zero() {
        p.pop();
    }
    let mut roots = Vec::new();
    // strip zero roots
    while p.len() > 1 && p[0].is_zero() {
        if !roots.contains(&Q::zero()) {
            roots.push(Q::zero());
        }
        p.remove(0);
    }
    if p.len() <= 1 {
        return roots;
    }
    let lcm = p.iter().fold(1i128, |acc, c| num_integer::lcm(acc, c.denom()));
    let ints: Vec<i128> = p.iter().map(|c| (*c * Q::from_int(lcm)).numer()).collect();
    let a0 = ints[0].abs();
    let an = ints.last().unwrap().abs();
    let divisors = |n: i128| -> Vec<i128> {
        let mut d = Vec::new();
        let mut i = 1;
        while i * i <= n {
            if n % i == 0 {
                d.push(i);
                d.push(n / i);
            }
            i += 1;
        }
        d
    };
    for num in divisors(a0) {
        for den in divisors(an) {
            for s in [1, -1] {
                let r = Q::new(s * num, den);
                if roots.contains(&r) {
                    continue;
                }
                let mut v = Q::zero();
                for c in p.iter().rev() {
                    v = v * r + *c;
                }
                if v.is_zero() {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

impl Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut m = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs[(k, j)];
                    if !b.is_zero() {
                        m[(i, j)] += a * b;
                    }
                }
            }
        }
        m
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in sum");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| *a + *b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "shape mismatch in difference");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| *a - *b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(-Q::one())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
        }
        write!(f, "]({}x{})", self.rows, self.cols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let a = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(a.mul_vec(&ns[0]).iter().all(Q::is_zero));
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = Matrix::from_ints(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&[Q::from(3), Q::from(1)]).unwrap();
        assert_eq!(x, vec![Q::from(2), Q::from(1)]);
        let s = Matrix::from_ints(&[&[1, 1], &[2, 2]]);
        assert!(s.solve(&[Q::from(1), Q::from(3)]).is_none());
    }

    #[test]
    fn inverse_round_trip() {
        let a = Matrix::from_ints(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
    }

    #[test]
    fn charpoly_and_roots() {
        // diag(1, 2, 2) -> (t-1)(t-2)^2 = t^3 - 5t^2 + 8t - 4
        let a = Matrix::from_ints(&[&[1, 0, 0], &[0, 2, 1], &[0, 0, 2]]);
        let p = a.charpoly();
        assert_eq!(p, vec![Q::from(-4), Q::from(8), Q::from(-5), Q::from(1)]);
        assert_eq!(rational_roots(&p), vec![Q::from(1), Q::from(2)]);
    }

    #[test]
    fn empty_shapes() {
        let a = Matrix::zeros(0, 3);
        assert_eq!(a.rank(), 0);
        assert_eq!(a.nullspace().len(), 3);
        let b = Matrix::zeros(2, 0);
        assert_eq!(b.solve(&[Q::zero(), Q::zero()]), Some(vec![]));
    }

    proptest::proptest! {
        #[test]
        fn rank_nullity(rows in 0usize..5, cols in 0usize..5, seed in proptest::collection::vec(-3i64..=3, 25)) {
            let entries: Vec<Vec<Q>> = (0..rows).map(|i| (0..cols).map(|j| Q::from(seed[i * 5 + j])).collect()).collect();
            let a = Matrix::from_rows_sized(rows, cols, &entries);
            let ns = a.nullspace();
            proptest::prop_assert_eq!(a.rank() + ns.len(), cols);
            proptest::prop_assert_eq!(a.rank(), a.transpose().rank());
            for v in &ns {
                proptest::prop_assert!(a.mul_vec(v).iter().all(Q::is_zero));
            }
        }
    }
}
