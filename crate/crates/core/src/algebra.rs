//! Finite-dimensional Lie algebras over ℚ given by structure constants.
//!
//! Only brackets `[e_i, e_j]` with `i < j` are stored. Antisymmetry is
//! therefore structural, and the Jacobi identity is checked once when a
//! [`LieAlgebra`] is built.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::matrix::Matrix;
use crate::par::Strategy;
use crate::scalar::{axpy, is_zero_vector, Scalar};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("[e{0}, e{0}] must vanish and cannot be prescribed")]
    DiagonalBracket(usize),
    #[error("bracket [e{i}, e{j}] given twice")]
    DuplicateBracket { i: usize, j: usize },
    #[error("expected {expected} basis labels, got {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("Jacobi identity fails on {} basis triple(s), first at ({}, {}, {})",
        .0.len(), .0[0].i, .0[0].j, .0[0].k)]
    Jacobi(Vec<JacobiViolation>),
    #[error("action is not a representation: [alpha(e{i}), alpha(e{j})] != alpha([e{i}, e{j}])")]
    NotRepresentation { i: usize, j: usize },
    #[error("action matrix {index} is not {q}x{q}")]
    ActionShape { index: usize, q: usize },
    #[error("subspace is not closed under the bracket")]
    NotSubalgebra,
    #[error("change of basis matrix is singular")]
    SingularBasis,
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// A linear form on the algebra, stored by its values on the basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Covector(pub Vec<Scalar>);

impl Covector {
    pub fn zero(n: usize) -> Self {
        Covector(vec![Scalar::zero(); n])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn eval(&self, v: &[Scalar]) -> Scalar {
        crate::scalar::dot(&self.0, v)
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.0)
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::kernel_of(&Matrix::from_rows(self.dim(), std::slice::from_ref(&self.0)))
    }
}

/// A basis triple on which the Jacobi sum is nonzero. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub sum: Vec<Scalar>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// Antisymmetric structure constants that have not yet been checked
/// against the Jacobi identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StructureConstants {
    dim: usize,
    table: Vec<Vec<Scalar>>,
}

impl StructureConstants {
    pub fn new(dim: usize) -> Self {
        StructureConstants {
            dim,
            table: vec![vec![Scalar::zero(); dim]; dim * dim.saturating_sub(1) / 2],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `[e_i, e_j] = value`; for `i > j` the negation is stored.
    pub fn set(&mut self, i: usize, j: usize, value: Vec<Scalar>) -> Result<(), AlgebraError> {
        let n = self.dim;
        for idx in [i, j] {
            if idx >= n {
                return Err(AlgebraError::IndexOutOfRange { index: idx, dim: n });
            }
        }
        if value.len() != n {
            return Err(AlgebraError::DimensionMismatch {
                expected: n,
                found: value.len(),
            });
        }
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Err(AlgebraError::DiagonalBracket(i)),
            std::cmp::Ordering::Less => {
                self.table[pair_index(n, i, j)] = value;
                Ok(())
            }
            std::cmp::Ordering::Greater => {
                self.table[pair_index(n, j, i)] = value.into_iter().map(|x| -x).collect();
                Ok(())
            }
        }
    }

    /// `[e_i, e_j]` for any pair of indices.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => vec![Scalar::zero(); self.dim],
            std::cmp::Ordering::Less => self.table[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => self.table[pair_index(self.dim, j, i)].iter().map(|x| -x).collect(),
        }
    }

    fn bracket_with_basis(&self, x: &[Scalar], k: usize) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if i != k && !xi.is_zero() {
                axpy(&mut out, xi, &self.basis_bracket(i, k));
            }
        }
        out
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (j, yj) in y.iter().enumerate() {
            if !yj.is_zero() {
                axpy(&mut out, yj, &self.bracket_with_basis(x, j));
            }
        }
        out
    }

    /// All triples `i < j < k` with nonzero Jacobi sum. Triples with a
    /// repeated index are satisfied automatically by antisymmetry.
    pub fn jacobi_violations(&self) -> Vec<JacobiViolation> {
        self.jacobi_violations_with(Strategy::default())
    }

    pub fn jacobi_violations_with(&self, strategy: Strategy) -> Vec<JacobiViolation> {
        let n = self.dim;
        let triples: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))))
            .collect();
        strategy.filter_map(triples.len(), |t| {
            let (i, j, k) = triples[t];
            let mut sum = self.bracket_with_basis(&self.basis_bracket(i, j), k);
            for term in [
                self.bracket_with_basis(&self.basis_bracket(j, k), i),
                self.bracket_with_basis(&self.basis_bracket(k, i), j),
            ] {
                for (s, t) in sum.iter_mut().zip(term) {
                    *s += t;
                }
            }
            (!is_zero_vector(&sum)).then_some(JacobiViolation { i, j, k, sum })
        })
    }
}

/// A Lie algebra with a fixed basis, validated against the Jacobi identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    labels: Vec<String>,
    constants: StructureConstants,
}

/// Sparse integer bracket `(i, j, [(k, c), ...])`: `[e_i, e_j] = Σ c e_k`.
pub type IntBracket<'a> = (usize, usize, &'a [(usize, i64)]);

pub fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

impl LieAlgebra {
    pub fn new(labels: Vec<String>, constants: StructureConstants) -> Result<Self, AlgebraError> {
        if labels.len() != constants.dim {
            return Err(AlgebraError::LabelCount {
                expected: constants.dim,
                found: labels.len(),
            });
        }
        let violations = constants.jacobi_violations();
        if !violations.is_empty() {
            return Err(AlgebraError::Jacobi(violations));
        }
        Ok(LieAlgebra { labels, constants })
    }

    /// Convenience constructor from sparse integer brackets
    /// `(i, j, [(k, c), ...])` meaning `[e_i, e_j] = Σ c e_k`.
    pub fn from_int_brackets(labels: &[&str], brackets: &[IntBracket<'_>]) -> Result<Self, AlgebraError> {
        let n = labels.len();
        let mut sc = StructureConstants::new(n);
        for &(i, j, terms) in brackets {
            let mut v = vec![Scalar::zero(); n];
            for &(k, c) in terms {
                if k >= n {
                    return Err(AlgebraError::IndexOutOfRange { index: k, dim: n });
                }
                v[k] += crate::scalar::int(c);
            }
            sc.set(i, j, v)?;
        }
        LieAlgebra::new(labels.iter().map(|s| s.to_string()).collect(), sc)
    }

    pub fn abelian(n: usize) -> Self {
        LieAlgebra {
            labels: default_labels(n),
            constants: StructureConstants::new(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.constants.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constants(&self) -> &StructureConstants {
        &self.constants
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, AlgebraError> {
        if labels.len() != self.dim() {
            return Err(AlgebraError::LabelCount {
                expected: self.dim(),
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    fn check_dim(&self, v: &[Scalar]) -> Result<(), AlgebraError> {
        if v.len() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.constants.basis_bracket(i, j)
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
        self.check_dim(x)?;
        self.check_dim(y)?;
        Ok(self.constants.bracket(x, y))
    }

    /// Matrix of `ad_x`, column `j` holding `[x, e_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.constants.bracket_with_basis(x, j)).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| self.basis_bracket(i, j)).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Span of all brackets `[x, y]` with `x ∈ a`, `y ∈ b`.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let n = self.dim();
        let mut vs = Vec::new();
        for x in a.basis().rows() {
            for y in b.basis().rows() {
                let z = self.constants.bracket(x, y);
                if !is_zero_vector(&z) {
                    vs.push(z);
                }
            }
        }
        Subspace::span(n, &vs)
    }

    pub fn derived_algebra(&self) -> Subspace {
        let full = Subspace::full(self.dim());
        self.bracket_span(&full, &full)
    }

    /// `𝔤′, 𝔤″, …`, stopping at the first repeated term.
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.derived_series_of(&Subspace::full(self.dim()))
    }

    /// Derived series of the span `s` (assumed a subalgebra), first term
    /// `[s, s]`.
    pub fn derived_series_of(&self, s: &Subspace) -> Vec<Subspace> {
        let mut series = Vec::new();
        let mut cur = s.clone();
        loop {
            let next = self.bracket_span(&cur, &cur);
            if next == cur {
                break;
            }
            series.push(next.clone());
            if next.is_zero() {
                break;
            }
            cur = next;
        }
        series
    }

    /// `𝔤², 𝔤³, …` with `𝔤^{k+1} = [𝔤, 𝔤^k]`, stopping at the first repeat.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        let mut series = Vec::new();
        let mut cur = full.clone();
        loop {
            let next = self.bracket_span(&full, &cur);
            if next == cur {
                break;
            }
            series.push(next.clone());
            if next.is_zero() {
                break;
            }
            cur = next;
        }
        series
    }

    fn series_reaches_zero(series: &[Subspace], start: &Subspace) -> bool {
        series.last().map_or(start.is_zero(), Subspace::is_zero)
    }

    pub fn is_solvable(&self) -> bool {
        Self::series_reaches_zero(&self.derived_series(), &Subspace::full(self.dim()))
    }

    pub fn is_subspace_solvable(&self, s: &Subspace) -> bool {
        Self::series_reaches_zero(&self.derived_series_of(s), s)
    }

    pub fn is_nilpotent(&self) -> bool {
        Self::series_reaches_zero(&self.lower_central_series(), &Subspace::full(self.dim()))
    }

    pub fn is_abelian(&self) -> bool {
        self.derived_algebra().is_zero()
    }

    /// `K[i][j] = tr(ad_{e_i} ad_{e_j})`.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut k = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = (&ads[i] * &ads[j]).trace();
                k[(i, j)] = t.clone();
                k[(j, i)] = t;
            }
        }
        k
    }

    /// Inertia `(positive, negative, zero)` of the Killing form.
    pub fn killing_signature(&self) -> (usize, usize, usize) {
        self.killing_form().inertia()
    }

    /// The radical, by the Cartan criterion: the Killing-orthogonal of the
    /// derived algebra. The result is re-checked to be a solvable ideal.
    pub fn radical(&self) -> Result<Subspace, AlgebraError> {
        let derived = self.derived_algebra();
        let rad = Subspace::kernel_of(&(derived.basis() * &self.killing_form()));
        if !self.is_ideal(&rad)? {
            return Err(AlgebraError::Internal("computed radical is not an ideal".into()));
        }
        if !self.is_subspace_solvable(&rad) {
            return Err(AlgebraError::Internal("computed radical is not solvable".into()));
        }
        Ok(rad)
    }

    pub fn is_semisimple(&self) -> Result<bool, AlgebraError> {
        Ok(self.radical()?.is_zero())
    }

    /// `H(e_i) = tr ad_{e_i}`.
    pub fn trace_form(&self) -> Covector {
        Covector((0..self.dim()).map(|i| self.ad_basis(i).trace()).collect())
    }

    pub fn is_unimodular(&self) -> bool {
        self.trace_form().is_zero()
    }

    fn check_subspace(&self, s: &Subspace) -> Result<(), AlgebraError> {
        if s.ambient_dim() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    pub fn is_ideal(&self, s: &Subspace) -> Result<bool, AlgebraError> {
        self.check_subspace(s)?;
        Ok(s.contains(&self.bracket_span(&Subspace::full(self.dim()), s)))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool, AlgebraError> {
        self.check_subspace(s)?;
        Ok(s.contains(&self.bracket_span(s, s)))
    }

    pub fn is_abelian_subspace(&self, s: &Subspace) -> Result<bool, AlgebraError> {
        self.check_subspace(s)?;
        Ok(self.bracket_span(s, s).is_zero())
    }

    /// `{x : [x, e_j] = 0 for all j}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // [x, e_j] = Σ_i x_i [e_i, e_j]: stack the n×n blocks with columns i.
        let blocks: Vec<Matrix> = (0..n)
            .map(|j| {
                let cols: Vec<Vec<Scalar>> = (0..n).map(|i| self.basis_bracket(i, j)).collect();
                Matrix::from_columns(n, &cols)
            })
            .collect();
        let stacked = blocks.iter().skip(1).fold(
            blocks.first().cloned().unwrap_or_else(|| Matrix::zeros(0, n)),
            |acc, b| acc.vstack(b),
        );
        Subspace::kernel_of(&stacked)
    }

    /// Structure constants of a subalgebra in the canonical basis of `s`.
    pub fn restrict_to(&self, s: &Subspace, labels: Vec<String>) -> Result<LieAlgebra, AlgebraError> {
        self.check_subspace(s)?;
        let basis = s.basis_vectors();
        let r = basis.len();
        let mut sc = StructureConstants::new(r);
        for i in 0..r {
            for j in i + 1..r {
                let z = self.constants.bracket(&basis[i], &basis[j]);
                let coords = s.coordinates(&z).ok_or(AlgebraError::NotSubalgebra)?;
                sc.set(i, j, coords)?;
            }
        }
        LieAlgebra::new(labels, sc)
    }

    /// The same algebra written in the basis given by the rows of `p`
    /// (new `f_a = Σ_i p[a][i] e_i`).
    pub fn in_basis(&self, p: &Matrix, labels: Vec<String>) -> Result<LieAlgebra, AlgebraError> {
        let n = self.dim();
        if p.nrows() != n || p.ncols() != n {
            return Err(AlgebraError::DimensionMismatch {
                expected: n,
                found: p.nrows(),
            });
        }
        // Coordinates of v in the new basis solve pᵀ c = v.
        let to_new = p.transpose().inverse().ok_or(AlgebraError::SingularBasis)?;
        let rows = p.to_rows();
        let mut sc = StructureConstants::new(n);
        for a in 0..n {
            for b in a + 1..n {
                let z = self.constants.bracket(&rows[a], &rows[b]);
                sc.set(a, b, to_new.mul_vec(&z))?;
            }
        }
        LieAlgebra::new(labels, sc)
    }

    /// `ℝ^q ⋊_α 𝔥`, with basis `(u_1, …, u_q, h_1, …, h_m)`.
    /// `alpha[i]` is the `q × q` matrix of the action of `h_i`.
    pub fn semidirect_sum(
        q: usize,
        h: &LieAlgebra,
        alpha: &[Matrix],
        u_labels: Vec<String>,
    ) -> Result<LieAlgebra, AlgebraError> {
        let m = h.dim();
        if alpha.len() != m {
            return Err(AlgebraError::DimensionMismatch {
                expected: m,
                found: alpha.len(),
            });
        }
        if u_labels.len() != q {
            return Err(AlgebraError::LabelCount {
                expected: q,
                found: u_labels.len(),
            });
        }
        for (index, a) in alpha.iter().enumerate() {
            if a.nrows() != q || a.ncols() != q {
                return Err(AlgebraError::ActionShape { index, q });
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let lhs = alpha[i].commutator(&alpha[j]);
                let mut rhs = Matrix::zeros(q, q);
                for (k, c) in h.basis_bracket(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        rhs = &rhs + &alpha[k].scale(c);
                    }
                }
                if lhs != rhs {
                    return Err(AlgebraError::NotRepresentation { i, j });
                }
            }
        }
        let n = q + m;
        let mut sc = StructureConstants::new(n);
        for a in 0..q {
            for (i, act) in alpha.iter().enumerate() {
                // [u_a, h_i] = −α(h_i) u_a.
                let mut v = vec![Scalar::zero(); n];
                for (b, slot) in v.iter_mut().take(q).enumerate() {
                    *slot = -act[(b, a)].clone();
                }
                sc.set(a, q + i, v)?;
            }
        }
        for i in 0..m {
            for j in i + 1..m {
                let mut v = vec![Scalar::zero(); q];
                v.extend(h.basis_bracket(i, j));
                sc.set(q + i, q + j, v)?;
            }
        }
        let mut labels = u_labels;
        labels.extend(h.labels.iter().cloned());
        LieAlgebra::new(labels, sc).map_err(|e| match e {
            AlgebraError::Jacobi(_) => {
                AlgebraError::Internal("semidirect sum of a representation failed Jacobi".into())
            }
            other => other,
        })
    }
}

impl fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LieAlgebra(dim={}, basis={:?})", self.dim(), self.labels)
    }
}

/// Standard small algebras used throughout tests and the corpus.
pub mod catalog {
    use super::LieAlgebra;

    pub fn abelian(n: usize) -> LieAlgebra {
        LieAlgebra::abelian(n)
    }

    /// `[e1, e2] = e3`.
    pub fn heisenberg3() -> LieAlgebra {
        LieAlgebra::from_int_brackets(&["e1", "e2", "e3"], &[(0, 1, &[(2, 1)])]).unwrap()
    }

    /// `[a, b] = b`.
    pub fn aff() -> LieAlgebra {
        LieAlgebra::from_int_brackets(&["a", "b"], &[(0, 1, &[(1, 1)])]).unwrap()
    }

    /// Basis `(u, a, b)` with `[a, b] = b`, `[a, u] = −u`.
    pub fn sol3() -> LieAlgebra {
        LieAlgebra::from_int_brackets(&["u", "a", "b"], &[(1, 2, &[(2, 1)]), (1, 0, &[(0, -1)])]).unwrap()
    }

    /// Basis `(h, e, f)` with `[h, e] = 2e`, `[h, f] = −2f`, `[e, f] = h`.
    pub fn sl2() -> LieAlgebra {
        LieAlgebra::from_int_brackets(
            &["h", "e", "f"],
            &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
        )
        .unwrap()
    }

    /// `𝔰𝔩₂ ⊕ ℝ` with basis `(h, e, f, z)`.
    pub fn sl2_plus_r() -> LieAlgebra {
        LieAlgebra::from_int_brackets(
            &["h", "e", "f", "z"],
            &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
        )
        .unwrap()
    }

    /// `𝔥𝔢𝔦𝔰₃ ⊕ ℝ` with basis `(e1, e2, e3, e4)`.
    pub fn heisenberg3_plus_r() -> LieAlgebra {
        LieAlgebra::from_int_brackets(&["e1", "e2", "e3", "e4"], &[(0, 1, &[(2, 1)])]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;
    use crate::scalar::{int, vector_from_ints as v};

    #[test]
    fn brackets_on_small_algebras() {
        let h = heisenberg3();
        assert_eq!(h.bracket(&v(&[1, 0, 0]), &v(&[0, 1, 0])).unwrap(), v(&[0, 0, 1]));
        let s = sol3();
        // [a, u + b] = −u + b.
        assert_eq!(s.bracket(&v(&[0, 1, 0]), &v(&[1, 0, 1])).unwrap(), v(&[-1, 0, 1]));
        let x = v(&[3, -2, 7]);
        assert!(is_zero_vector(&s.bracket(&x, &x).unwrap()));
        assert!(matches!(
            s.bracket(&v(&[1, 0]), &x),
            Err(AlgebraError::DimensionMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn jacobi_violation_is_reported_on_the_offending_triple() {
        // [e1,e2] = e1, [e1,e3] = e2, [e2,e3] = 0.
        let mut sc = StructureConstants::new(3);
        sc.set(0, 1, v(&[1, 0, 0])).unwrap();
        sc.set(0, 2, v(&[0, 1, 0])).unwrap();
        let viol = sc.jacobi_violations();
        assert_eq!(viol.len(), 1);
        assert_eq!((viol[0].i, viol[0].j, viol[0].k), (0, 1, 2));
        // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = e2 + 0 − [e2,e2]... = e2.
        assert_eq!(viol[0].sum, v(&[0, 1, 0]));
        assert!(matches!(
            LieAlgebra::new(default_labels(3), sc),
            Err(AlgebraError::Jacobi(_))
        ));
        assert!(abelian(3).constants().jacobi_violations().is_empty());
        assert!(heisenberg3().constants().jacobi_violations().is_empty());
    }

    #[test]
    fn diagonal_brackets_are_rejected() {
        let mut sc = StructureConstants::new(2);
        assert_eq!(sc.set(1, 1, v(&[0, 0])), Err(AlgebraError::DiagonalBracket(1)));
    }

    #[test]
    fn series_of_sol3_and_sl2() {
        let s = sol3();
        let ub = Subspace::coordinate(3, &[0, 2]);
        assert_eq!(s.derived_series(), vec![ub.clone(), Subspace::zero(3)]);
        assert_eq!(s.lower_central_series(), vec![ub]);
        assert!(s.is_solvable() && !s.is_nilpotent());

        let a = abelian(3);
        assert_eq!(a.derived_series(), vec![Subspace::zero(3)]);
        assert!(a.is_solvable() && a.is_nilpotent() && a.is_abelian());

        let sl = sl2();
        assert!(sl.derived_algebra().is_full());
        assert!(!sl.is_solvable());
        assert!(heisenberg3().is_nilpotent());
    }

    #[test]
    fn killing_forms() {
        assert!(abelian(3).killing_form().is_zero());
        let k = sl2().killing_form();
        let expected = Matrix::from_ints(&[&[8, 0, 0], &[0, 0, 4], &[0, 4, 0]]);
        assert_eq!(k, expected);
        assert_eq!(sl2().killing_signature(), (2, 1, 0));
        let ks = sol3().killing_form();
        let mut e = Matrix::zeros(3, 3);
        e[(1, 1)] = int(2);
        assert_eq!(ks, e);
    }

    #[test]
    fn radicals() {
        assert!(sol3().radical().unwrap().is_full());
        assert!(sl2().radical().unwrap().is_zero());
        assert!(sl2().is_semisimple().unwrap());
        assert_eq!(sl2_plus_r().radical().unwrap(), Subspace::coordinate(4, &[3]));
        assert!(heisenberg3().radical().unwrap().is_full());
    }

    #[test]
    fn trace_forms() {
        assert!(heisenberg3().is_unimodular());
        assert_eq!(aff().trace_form(), Covector(v(&[1, 0])));
        assert!(!aff().is_unimodular());
        assert!(sol3().trace_form().is_zero());
    }

    #[test]
    fn ideals_and_center() {
        let s = sol3();
        let u = Subspace::coordinate(3, &[0]);
        assert!(s.is_ideal(&u).unwrap());
        assert!(s.is_abelian_subspace(&u).unwrap());
        assert!(!s.is_ideal(&Subspace::coordinate(3, &[1])).unwrap());
        assert_eq!(heisenberg3().center(), Subspace::coordinate(3, &[2]));
        assert!(s.center().is_zero());
        assert!(matches!(
            s.is_ideal(&Subspace::zero(2)),
            Err(AlgebraError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn semidirect_sums() {
        let g = LieAlgebra::semidirect_sum(
            1,
            &aff(),
            &[Matrix::from_ints(&[&[-1]]), Matrix::from_ints(&[&[0]])],
            vec!["u".into()],
        )
        .unwrap();
        assert_eq!(g, sol3());

        let d = LieAlgebra::semidirect_sum(
            2,
            &aff(),
            &[Matrix::zeros(2, 2), Matrix::zeros(2, 2)],
            vec!["u1".into(), "u2".into()],
        )
        .unwrap();
        assert!(d.is_ideal(&Subspace::coordinate(4, &[0, 1])).unwrap());
        assert_eq!(d.center(), Subspace::coordinate(4, &[0, 1]));

        // 𝔥 = ℝ acting by [[1,−1],[1,1]]: [a,u1] = u1 + u2, [a,u2] = −u1 + u2.
        let r = LieAlgebra::semidirect_sum(
            2,
            &abelian(1).with_labels(vec!["a".into()]).unwrap(),
            &[Matrix::from_ints(&[&[1, -1], &[1, 1]])],
            vec!["u1".into(), "u2".into()],
        )
        .unwrap();
        assert_eq!(r.basis_bracket(2, 0), v(&[1, 1, 0]));
        assert_eq!(r.basis_bracket(2, 1), v(&[-1, 1, 0]));
        assert_eq!(r.basis_bracket(0, 2), v(&[-1, -1, 0]));
        assert!(r.basis_bracket(0, 1).iter().all(Zero::is_zero));

        // A non-homomorphism: α(a) and α(b) must satisfy [α(a), α(b)] = α(b).
        let bad = LieAlgebra::semidirect_sum(
            1,
            &aff(),
            &[Matrix::from_ints(&[&[0]]), Matrix::from_ints(&[&[1]])],
            vec!["u".into()],
        );
        assert_eq!(bad, Err(AlgebraError::NotRepresentation { i: 0, j: 1 }));
    }

    #[test]
    fn change_of_basis_and_restriction() {
        let s = sol3();
        let p = Matrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[1, 0, 0]]);
        let t = s.in_basis(&p, vec!["a".into(), "b".into(), "u".into()]).unwrap();
        // [a, b] = b, [a, u] = −u.
        assert_eq!(t.basis_bracket(0, 1), v(&[0, 1, 0]));
        assert_eq!(t.basis_bracket(0, 2), v(&[0, 0, -1]));
        let h = s
            .restrict_to(&Subspace::coordinate(3, &[1, 2]), vec!["a".into(), "b".into()])
            .unwrap();
        assert_eq!(h, aff());
        assert_eq!(
            s.restrict_to(&Subspace::span(3, &[v(&[1, 0, 1]), v(&[0, 1, 0])]), default_labels(2)),
            Err(AlgebraError::NotSubalgebra)
        );
    }
}
