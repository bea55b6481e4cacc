//! Integer lattice tools: Smith normal form, the index of `A(ℤ^k)` in `ℤ^k`,
//! and a checker for the lemma that `f − Id` is invertible on a lattice
//! with an invariant splitting `E₁ ⊕ E₂`, `(f − Id)|_{E₁}` invertible and
//! `π₂(ℤ^k)` dense in `E₂`.
//!
//! Density is not decided here. When the other hypotheses hold but
//! `det(A − I) = 0`, the checker builds the explicit certificate that
//! `π₂(ℤ^k)` lies in a discrete family of translates of a hyperplane of
//! `E₂`, so density must fail.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::matrix::Matrix;
use crate::par::Strategy;
use crate::scalar::{dot, Scalar};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("ragged integer matrix")]
    Ragged,
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("E1 and E2 intersect nontrivially")]
    SplitNotDirect,
    #[error("dim E1 + dim E2 = {found}, expected {expected}")]
    SplitWrongDimension { expected: usize, found: usize },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, LatticeError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LatticeError::Ragged);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        IntMatrix::from_rows(rows).expect("rectangular literal")
    }

    pub fn diagonal(entries: &[BigInt]) -> Self {
        let mut m = IntMatrix::zeros(entries.len(), entries.len());
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

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in integer product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    pub fn to_rational(&self) -> Matrix {
        let rows: Vec<Vec<Scalar>> = self
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(Scalar::from_integer).collect())
            .collect();
        Matrix::from_rows(self.cols, &rows)
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn determinant(&self) -> Result<BigInt, LatticeError> {
        if self.rows != self.cols {
            return Err(LatticeError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.to_rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Ok(BigInt::zero());
                };
                a.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = t / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += c · row[src]`.
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        for j in 0..self.cols {
            let t = c * &self[(src, j)];
            self[(dst, j)] += t;
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        for i in 0..self.rows {
            let t = c * &self[(i, src)];
            self[(i, dst)] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let t = -&self[(i, j)];
            self[(i, j)] = t;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

/// A square integer matrix acting on the standard lattice `ℤ^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerEndomorphism(IntMatrix);

impl IntegerEndomorphism {
    pub fn new(m: IntMatrix) -> Result<Self, LatticeError> {
        if m.rows != m.cols {
            return Err(LatticeError::NotSquare {
                rows: m.rows,
                cols: m.cols,
            });
        }
        Ok(IntegerEndomorphism(m))
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self, LatticeError> {
        IntegerEndomorphism::new(IntMatrix::from_i64(rows))
    }

    pub fn dim(&self) -> usize {
        self.0.rows
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn minus_identity(&self) -> IntegerEndomorphism {
        let mut m = self.0.clone();
        for i in 0..m.rows {
            m[(i, i)] -= 1;
        }
        IntegerEndomorphism(m)
    }

    pub fn determinant(&self) -> BigInt {
        self.0.determinant().expect("square by construction")
    }
}

/// `U · A · V = D` with `U`, `V` unimodular and `D` diagonal with
/// nonnegative entries `d₁ | d₂ | …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d[(i, i)].clone())
            .collect()
    }
}

/// Smith normal form of an arbitrary `m × n` integer matrix.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        loop {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if !d[(i, j)].is_zero() && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithForm { u, d, v };
            };
            if pi != t {
                d.swap_rows(pi, t);
                u.swap_rows(pi, t);
            }
            if pj != t {
                d.swap_cols(pj, t);
                v.swap_cols(pj, t);
            }
            let mut clean = true;
            for i in t + 1..m {
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                if !q.is_zero() {
                    d.add_row(i, t, &-&q);
                    u.add_row(i, t, &-&q);
                }
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                if !q.is_zero() {
                    d.add_col(j, t, &-&q);
                    v.add_col(j, t, &-&q);
                }
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let bad_row = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)])));
            match bad_row {
                Some(i) => {
                    d.add_row(t, i, &BigInt::one());
                    u.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { u, d, v }
}

pub fn smith_normal_forms(mats: &[IntMatrix], strategy: Strategy) -> Vec<SmithForm> {
    strategy.map(mats.len(), |i| smith_normal_form(&mats[i]))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LatticeIndex {
    Finite(BigUint),
    Infinite,
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(k) => write!(f, "{k}"),
            LatticeIndex::Infinite => write!(f, "infinite"),
        }
    }
}

/// `[ℤ^k : A(ℤ^k)]`: `|det A|` when nonzero, computed by determinant and
/// cross-checked against the product of the Smith invariant factors.
pub fn lattice_index(a: &IntegerEndomorphism) -> Result<LatticeIndex, LatticeError> {
    let det = a.determinant();
    let snf = smith_normal_form(a.matrix());
    let product: BigInt = snf.invariant_factors().iter().product();
    if product != det.abs() {
        return Err(LatticeError::Internal(format!(
            "|det| = {} but product of invariant factors = {product}",
            det.abs()
        )));
    }
    Ok(if det.is_zero() {
        LatticeIndex::Infinite
    } else {
        LatticeIndex::Finite(det.magnitude().clone())
    })
}

/// `E = E₁ ⊕ E₂` with rational bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitDecomposition {
    e1: Subspace,
    e2: Subspace,
    /// Inverse of `Pᵀ` where `P` stacks the bases of `E₁` and `E₂`.
    coords: Matrix,
}

impl SplitDecomposition {
    pub fn new(e1: Subspace, e2: Subspace) -> Result<Self, LatticeError> {
        let k = e1.ambient_dim();
        if e2.ambient_dim() != k {
            return Err(LatticeError::DimensionMismatch {
                expected: k,
                found: e2.ambient_dim(),
            });
        }
        if !e1.intersection(&e2).is_zero() {
            return Err(LatticeError::SplitNotDirect);
        }
        if e1.dim() + e2.dim() != k {
            return Err(LatticeError::SplitWrongDimension {
                expected: k,
                found: e1.dim() + e2.dim(),
            });
        }
        let coords = e1
            .basis()
            .vstack(e2.basis())
            .transpose()
            .inverse()
            .ok_or_else(|| LatticeError::Internal("direct sum basis is singular".into()))?;
        Ok(SplitDecomposition { e1, e2, coords })
    }

    pub fn dim(&self) -> usize {
        self.e1.ambient_dim()
    }

    pub fn e1(&self) -> &Subspace {
        &self.e1
    }

    pub fn e2(&self) -> &Subspace {
        &self.e2
    }

    /// `π₂`: projection onto `E₂` along `E₁`.
    pub fn project_second(&self, z: &[Scalar]) -> Vec<Scalar> {
        let c = self.coords.mul_vec(z);
        let r = self.e1.dim();
        let mut out = vec![Scalar::zero(); self.dim()];
        for (a, row) in self.e2.basis().rows().enumerate() {
            crate::scalar::axpy(&mut out, &c[r + a], row);
        }
        out
    }

    /// Matrix of `π₂` in the standard basis.
    pub fn projection_matrix(&self) -> Matrix {
        let k = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..k)
            .map(|i| self.project_second(&crate::scalar::unit_vector(k, i)))
            .collect();
        Matrix::from_columns(k, &cols)
    }

    pub fn project_first(&self, z: &[Scalar]) -> Vec<Scalar> {
        let p2 = self.project_second(z);
        z.iter().zip(p2).map(|(a, b)| a - b).collect()
    }
}

/// Certificate that `π₂(ℤ^k) ⊆ W + π₂(x/|x|²)·ℤ` for the hyperplane
/// `W = x^⊥ ∩ E₂` of `E₂`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonDensityWitness {
    /// Primitive integer vector with `Aᵀ x = x`.
    pub x: Vec<BigInt>,
    pub hyperplane: Subspace,
    /// `π₂(x / |x|²)`.
    pub step: Vec<Scalar>,
}

impl NonDensityWitness {
    /// Checks `π₂(z) − ⟨x, z⟩ · step ∈ W` for one lattice point.
    pub fn covers(&self, split: &SplitDecomposition, z: &[BigInt]) -> bool {
        self.covers_with(split, &self.hyperplane.equations(), z)
    }

    fn covers_with(&self, split: &SplitDecomposition, equations: &Matrix, z: &[BigInt]) -> bool {
        let zq: Vec<Scalar> = z.iter().cloned().map(Scalar::from_integer).collect();
        let m: BigInt = self.x.iter().zip(z).map(|(a, b)| a * b).sum();
        let m = Scalar::from_integer(m);
        let p = split.project_second(&zq);
        let rest: Vec<Scalar> = p.iter().zip(&self.step).map(|(a, s)| a - s * &m).collect();
        equations.mul_vec(&rest).iter().all(Zero::is_zero)
    }

    /// Brute-force check of [`covers`](Self::covers) over the box `[−r, r]^k`.
    ///
    /// Every point is still evaluated, but against an integer-scaled copy of
    /// the certificate so the inner loop avoids rational normalization.
    pub fn covers_box(&self, split: &SplitDecomposition, r: i64, strategy: Strategy) -> bool {
        let k = split.dim();
        let proj = split.projection_matrix();
        let denom = proj
            .rows()
            .flatten()
            .chain(&self.step)
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let scale = |x: &Scalar| (x * Scalar::from_integer(denom.clone())).to_integer();
        let proj_int: Vec<Vec<BigInt>> = proj.rows().map(|row| row.iter().map(scale).collect()).collect();
        let step_int: Vec<BigInt> = self.step.iter().map(scale).collect();
        let equations: Vec<Vec<BigInt>> = self
            .hyperplane
            .equations()
            .rows()
            .map(primitive_integer_vector)
            .collect();
        let side = (2 * r + 1) as usize;
        let total = side.pow(k as u32);
        strategy.all(total, |mut idx| {
            let mut z = Vec::with_capacity(k);
            for _ in 0..k {
                z.push(BigInt::from((idx % side) as i64 - r));
                idx /= side;
            }
            let m: BigInt = self.x.iter().zip(&z).map(|(a, b)| a * b).sum();
            let rest: Vec<BigInt> = proj_int
                .iter()
                .zip(&step_int)
                .map(|(row, s)| row.iter().zip(&z).map(|(a, b)| a * b).sum::<BigInt>() - s * &m)
                .collect();
            equations
                .iter()
                .all(|e| e.iter().zip(&rest).map(|(a, b)| a * b).sum::<BigInt>().is_zero())
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lemma51Verdict {
    pub integrality: bool,
    pub e1_invariant: bool,
    pub e2_invariant: bool,
    pub restriction_invertible: bool,
    pub det_a_minus_i: BigInt,
    /// Present when every hypothesis other than density holds and
    /// `det(A − I) = 0`.
    pub witness: Option<NonDensityWitness>,
}

impl Lemma51Verdict {
    pub fn hypotheses_ok(&self) -> bool {
        self.integrality && self.e1_invariant && self.e2_invariant && self.restriction_invertible
    }

    /// The conclusion `A − I` invertible holds (and the checked hypotheses
    /// hold too).
    pub fn conclusion_holds(&self) -> bool {
        self.hypotheses_ok() && !self.det_a_minus_i.is_zero()
    }

    /// `[ℤ^k : (A − I)(ℤ^k)]` when the conclusion holds.
    pub fn index(&self) -> Option<BigUint> {
        self.conclusion_holds().then(|| self.det_a_minus_i.magnitude().clone())
    }
}

fn primitive_integer_vector(v: &[Scalar]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Scalar::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let mut out: Vec<BigInt> = ints.into_iter().map(|x| x / &g).collect();
    if out
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.sign() == Sign::Minus)
    {
        for x in out.iter_mut() {
            *x = -x.clone();
        }
    }
    out
}

fn invariant(a: &Matrix, s: &Subspace) -> bool {
    s.basis().rows().all(|r| s.contains_vector(&a.mul_vec(r)))
}

pub fn lemma51_check(a: &IntegerEndomorphism, split: &SplitDecomposition) -> Result<Lemma51Verdict, LatticeError> {
    let k = a.dim();
    if split.dim() != k {
        return Err(LatticeError::DimensionMismatch {
            expected: k,
            found: split.dim(),
        });
    }
    let aq = a.matrix().to_rational();
    let a_minus_i = &aq - &Matrix::identity(k);
    let e1_invariant = invariant(&aq, split.e1());
    let e2_invariant = invariant(&aq, split.e2());
    let images: Vec<Vec<Scalar>> = split.e1().basis().rows().map(|r| a_minus_i.mul_vec(r)).collect();
    let restriction_invertible = Matrix::from_rows(k, &images).rank() == split.e1().dim();
    let det = a.minus_identity().determinant();
    let mut verdict = Lemma51Verdict {
        integrality: true,
        e1_invariant,
        e2_invariant,
        restriction_invertible,
        det_a_minus_i: det.clone(),
        witness: None,
    };
    if !verdict.hypotheses_ok() || !det.is_zero() {
        return Ok(verdict);
    }
    let kernel = a_minus_i.transpose().kernel();
    let first = kernel
        .first()
        .ok_or_else(|| LatticeError::Internal("det(A - I) = 0 but ker(A^T - I) is trivial".into()))?;
    let x = primitive_integer_vector(first);
    let xq: Vec<Scalar> = x.iter().cloned().map(Scalar::from_integer).collect();
    if split.e1().basis().rows().any(|r| !dot(r, &xq).is_zero()) {
        return Err(LatticeError::Internal("witness is not orthogonal to E1".into()));
    }
    let x_perp = Subspace::kernel_of(&Matrix::from_rows(k, std::slice::from_ref(&xq)));
    let hyperplane = x_perp.intersection(split.e2());
    if hyperplane.dim() + 1 != split.e2().dim() {
        return Err(LatticeError::Internal("x^perp ∩ E2 is not a hyperplane of E2".into()));
    }
    let norm2 = dot(&xq, &xq);
    let scaled: Vec<Scalar> = xq.iter().map(|c| c / &norm2).collect();
    let step = split.project_second(&scaled);
    verdict.witness = Some(NonDensityWitness { x, hyperplane, step });
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn assert_valid_snf(a: &IntMatrix, s: &SmithForm) {
        assert_eq!(s.u.mul(a).mul(&s.v), s.d);
        assert!(s.d.is_diagonal());
        assert_eq!(s.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(s.v.determinant().unwrap().abs(), BigInt::one());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
    }

    #[test]
    fn smith_examples() {
        let id = IntMatrix::identity(3);
        let s = smith_normal_form(&id);
        assert_eq!(s.d, id);
        let d = IntMatrix::from_i64(&[&[2, 0], &[0, 6]]);
        assert_eq!(smith_normal_form(&d).d, d);
        let a = IntMatrix::from_i64(&[&[2, 1], &[0, 3]]);
        let s = smith_normal_form(&a);
        assert_eq!(s.invariant_factors(), bi(&[1, 6]));
        assert_valid_snf(&a, &s);
        let r = IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_normal_form(&r);
        assert_eq!(s.invariant_factors(), bi(&[2, 6, 12]));
        assert_valid_snf(&r, &s);
        let rect = IntMatrix::from_i64(&[&[0, 0, 0], &[0, 4, 6]]);
        let s = smith_normal_form(&rect);
        assert_eq!(s.invariant_factors(), bi(&[2, 0]));
        assert_valid_snf(&rect, &s);
    }

    #[test]
    fn bareiss_determinant() {
        assert_eq!(
            IntMatrix::from_i64(&[&[0, 1], &[1, 0]]).determinant().unwrap(),
            BigInt::from(-1)
        );
        assert_eq!(
            IntMatrix::from_i64(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]])
                .determinant()
                .unwrap(),
            BigInt::from(-144)
        );
        assert!(matches!(
            IntMatrix::from_i64(&[&[1, 2]]).determinant(),
            Err(LatticeError::NotSquare { rows: 1, cols: 2 })
        ));
    }

    #[test]
    fn indices() {
        let fin = |n: u32| LatticeIndex::Finite(BigUint::from(n));
        assert_eq!(
            lattice_index(&IntegerEndomorphism::from_i64(&[&[1, 0], &[0, 1]]).unwrap()).unwrap(),
            fin(1)
        );
        assert_eq!(
            lattice_index(&IntegerEndomorphism::from_i64(&[&[2, 0], &[0, 3]]).unwrap()).unwrap(),
            fin(6)
        );
        // Companion matrix of x² − 3x + 1; |det(A − I)| = |1 − 3 + 1| = 1.
        let c = IntegerEndomorphism::from_i64(&[&[0, -1], &[1, 3]]).unwrap();
        assert_eq!(lattice_index(&c.minus_identity()).unwrap(), fin(1));
        assert_eq!(
            lattice_index(&IntegerEndomorphism::from_i64(&[&[1, 2], &[2, 4]]).unwrap()).unwrap(),
            LatticeIndex::Infinite
        );
    }

    #[test]
    fn split_validation() {
        let x = Subspace::coordinate(2, &[0]);
        assert_eq!(
            SplitDecomposition::new(x.clone(), x.clone()),
            Err(LatticeError::SplitNotDirect)
        );
        assert_eq!(
            SplitDecomposition::new(x, Subspace::zero(2)),
            Err(LatticeError::SplitWrongDimension { expected: 2, found: 1 })
        );
        let s = SplitDecomposition::new(
            Subspace::span(2, &[crate::scalar::vector_from_ints(&[1, 1])]),
            Subspace::coordinate(2, &[1]),
        )
        .unwrap();
        let z = crate::scalar::vector_from_ints(&[3, 5]);
        assert_eq!(s.project_second(&z), crate::scalar::vector_from_ints(&[0, 2]));
        assert_eq!(s.project_first(&z), crate::scalar::vector_from_ints(&[3, 3]));
    }

    #[test]
    fn lemma51_examples() {
        let a = IntegerEndomorphism::from_i64(&[&[2, 1], &[1, 1]]).unwrap();
        let split = SplitDecomposition::new(Subspace::full(2), Subspace::zero(2)).unwrap();
        let v = lemma51_check(&a, &split).unwrap();
        assert!(v.conclusion_holds());
        assert_eq!(v.det_a_minus_i, BigInt::from(-1));
        assert_eq!(v.index(), Some(BigUint::one()));
        assert!(v.witness.is_none());

        let a = IntegerEndomorphism::from_i64(&[&[2, 0], &[0, 1]]).unwrap();
        let split = SplitDecomposition::new(Subspace::coordinate(2, &[0]), Subspace::coordinate(2, &[1])).unwrap();
        let v = lemma51_check(&a, &split).unwrap();
        assert!(v.hypotheses_ok() && !v.conclusion_holds());
        let w = v.witness.unwrap();
        assert_eq!(w.x, bi(&[0, 1]));
        assert!(w.hyperplane.is_zero());
        assert!(w.covers_box(&split, 5, Strategy::Sequential));

        // A plane case with a non-coordinate E₂ and a 3-D case with W ≠ 0.
        let a = IntegerEndomorphism::from_i64(&[&[2, 1], &[0, 1]]).unwrap();
        let sp = SplitDecomposition::new(
            Subspace::span(2, &[crate::scalar::vector_from_ints(&[1, 0])]),
            Subspace::span(2, &[crate::scalar::vector_from_ints(&[1, -1])]),
        )
        .unwrap();
        let w = lemma51_check(&a, &sp).unwrap().witness.unwrap();
        assert!(w.covers_box(&sp, 4, Strategy::Sequential));
        assert!((-4..=4).all(|i| (-4..=4).all(|j| w.covers(&sp, &bi(&[i, j])))));
        let a = IntegerEndomorphism::from_i64(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let sp = SplitDecomposition::new(Subspace::coordinate(3, &[0]), Subspace::coordinate(3, &[1, 2])).unwrap();
        let w = lemma51_check(&a, &sp).unwrap().witness.unwrap();
        assert_eq!(w.hyperplane.dim(), 1);
        assert!(w.covers_box(&sp, 3, Strategy::Parallel));
        // A wrong step must be caught by the sweep.
        let mut broken = w.clone();
        broken.step = crate::scalar::vector_from_ints(&[0, 0, 0]);
        assert!(!broken.covers(&sp, &bi(&[0, 1, 0])) || !broken.covers(&sp, &bi(&[0, 0, 1])));
        assert!(!broken.covers_box(&sp, 1, Strategy::Sequential));

        let id = IntegerEndomorphism::from_i64(&[&[1, 0], &[0, 1]]).unwrap();
        let v = lemma51_check(&id, &split).unwrap();
        assert!(!v.restriction_invertible);
        assert!(v.e1_invariant && v.e2_invariant);
        assert!(v.witness.is_none());
    }
}
