//! Dense matrices over ℚ.

#![allow(clippy::needless_range_loop)]

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::{format_scalar, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn scalar_identity(n: usize, c: &Scalar) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must share one length;
    /// `cols` is needed so that an empty row list still has a shape.
    pub fn from_rows(cols: usize, rows: &[Vec<Scalar>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row in Matrix::from_rows");
            data.extend(r.iter().cloned());
        }
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    /// Matrix whose j-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged column in Matrix::from_columns");
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| crate::scalar::int(x)).collect())
            .collect();
        Matrix::from_rows(cols, &rows)
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m[(i, i)] = x.clone();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.rows().map(<[Scalar]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).fold(Scalar::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        self.rows().map(|r| crate::scalar::dot(r, v)).collect()
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    /// Sub-block of the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m[(a, b)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row-echelon form and its pivot columns. Zero rows are
    /// dropped, so the result has exactly `rank` rows.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut rows = self.to_rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].recip();
            for x in rows[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, p) in row.iter_mut().zip(&pivot_row) {
                        if !p.is_zero() {
                            *x -= &f * p;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        (Matrix::from_rows(self.cols, &rows), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space `{v : A v = 0}`, one vector per free
    /// column, each with a 1 in its free coordinate.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(i, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Determinant by fraction-producing Gaussian elimination.
    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= &a[c][c];
            let inv = a[c][c].recip();
            for i in c + 1..n {
                if a[i][c].is_zero() {
                    continue;
                }
                let f = &a[i][c] * &inv;
                for j in c..n {
                    let t = &f * &a[c][j];
                    a[i][j] -= t;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Some(r.select(&rows, &cols))
    }

    /// Solves `A x = b` for square invertible `A`.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        self.inverse().map(|inv| inv.mul_vec(b))
    }

    /// Leading principal minors, top-left 1×1 first.
    pub fn leading_minors(&self) -> Vec<Scalar> {
        (1..=self.rows.min(self.cols))
            .map(|k| {
                let idx: Vec<usize> = (0..k).collect();
                self.select(&idx, &idx).determinant()
            })
            .collect()
    }

    /// Inertia `(positive, negative, zero)` of a symmetric matrix, by exact
    /// congruence diagonalisation.
    pub fn inertia(&self) -> (usize, usize, usize) {
        assert!(self.is_symmetric(), "inertia of a non-symmetric matrix");
        let mut a = self.to_rows();
        let n = self.rows;
        let mut diag = Vec::with_capacity(n);
        let mut k = 0;
        while k < n {
            if a[k][k].is_zero() {
                if let Some(p) = (k + 1..n).find(|&i| !a[i][i].is_zero()) {
                    a.swap(k, p);
                    for row in a.iter_mut() {
                        row.swap(k, p);
                    }
                } else if let Some(p) = (k + 1..n).find(|&i| !a[k][i].is_zero()) {
                    // Row/column k += row/column p yields a[k][k] = 2 a[k][p].
                    for j in 0..n {
                        let t = a[p][j].clone();
                        a[k][j] += t;
                    }
                    for row in a.iter_mut() {
                        let t = row[p].clone();
                        row[k] += t;
                    }
                } else {
                    diag.push(Scalar::zero());
                    k += 1;
                    continue;
                }
            }
            let piv = a[k][k].clone();
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] / &piv;
                for j in k..n {
                    let t = &f * &a[k][j];
                    a[i][j] -= t;
                }
                for row in a.iter_mut() {
                    let t = &f * &row[k];
                    row[i] -= t;
                }
            }
            diag.push(piv);
            k += 1;
        }
        let pos = diag.iter().filter(|x| x.is_positive()).count();
        let neg = diag.iter().filter(|x| x.is_negative()).count();
        (pos, neg, n - pos - neg)
    }

    pub fn to_f64(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| crate::scalar::to_f64(&self[(i, j)]))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;

    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.rows().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = r.iter().map(format_scalar).collect();
            write!(f, "{}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    #[test]
    fn rref_and_kernel() {
        let a = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (r, piv) = a.rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(
            r,
            Matrix::from_rows(3, &[vec![int(1), int(0), int(1)], vec![int(0), int(1), int(1)],])
        );
        let k = a.kernel();
        assert_eq!(k, vec![vec![int(-1), int(-1), int(1)]]);
        assert!(crate::scalar::is_zero_vector(&a.mul_vec(&k[0])));
    }

    #[test]
    fn determinant_and_inverse() {
        let a = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
        assert_eq!(a.determinant(), int(1));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        let s = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.determinant(), int(0));
        assert!(s.inverse().is_none());
        let p = Matrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 3]]);
        assert_eq!(p.determinant(), int(-3));
    }

    #[test]
    fn inertia_handles_zero_diagonal() {
        // Hyperbolic plane: one positive, one negative direction.
        let h = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(h.inertia(), (1, 1, 0));
        let k = Matrix::diagonal(&[int(8), frac(-1, 2), int(0)]);
        assert_eq!(k.inertia(), (1, 1, 1));
    }
}
