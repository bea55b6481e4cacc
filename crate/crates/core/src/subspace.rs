//! Rational subspaces in canonical reduced row-echelon form.

use std::fmt;

use num_traits::Zero;

use crate::matrix::Matrix;
use crate::scalar::{format_scalar, Scalar};

/// A subspace of ℚⁿ stored as the reduced row-echelon form of any spanning
/// set. The representation is canonical, so `==` and `Hash` are equality of
/// subspaces.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::zeros(0, n),
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::identity(n),
        }
    }

    pub fn span(n: usize, vectors: &[Vec<Scalar>]) -> Self {
        let (basis, _) = Matrix::from_rows(n, vectors).rref();
        Subspace { ambient_dim: n, basis }
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(n: usize, axes: &[usize]) -> Self {
        let vs: Vec<Vec<Scalar>> = axes.iter().map(|&i| crate::scalar::unit_vector(n, i)).collect();
        Subspace::span(n, &vs)
    }

    /// `{v : M v = 0}`.
    pub fn kernel_of(m: &Matrix) -> Self {
        Subspace::span(m.ncols(), &m.kernel())
    }

    /// Image (column span) of `m`.
    pub fn image_of(m: &Matrix) -> Self {
        Subspace::span(m.nrows(), &m.transpose().to_rows())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// The canonical basis as an `r × n` matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.to_rows()
    }

    /// Equations cutting out the subspace: rows `c` with `c·v = 0` for all
    /// `v` in the subspace, spanning the annihilator.
    pub fn equations(&self) -> Matrix {
        Matrix::from_rows(self.ambient_dim, &self.basis.kernel())
    }

    /// Annihilator under the standard pairing.
    pub fn annihilator(&self) -> Subspace {
        Subspace::span(self.ambient_dim, &self.basis.kernel())
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "dimension mismatch");
        self.equations().mul_vec(v).iter().all(Zero::is_zero)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(other.ambient_dim, self.ambient_dim, "dimension mismatch");
        other.basis.rows().all(|r| self.contains_vector(r))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(other.ambient_dim, self.ambient_dim, "dimension mismatch");
        let (basis, _) = self.basis.vstack(&other.basis).rref();
        Subspace {
            ambient_dim: self.ambient_dim,
            basis,
        }
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(other.ambient_dim, self.ambient_dim, "dimension mismatch");
        Subspace::kernel_of(&self.equations().vstack(&other.equations()))
    }

    /// `{v : M v ∈ self}`.
    pub fn preimage(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.nrows(), self.ambient_dim, "dimension mismatch");
        Subspace::kernel_of(&(&self.equations() * m))
    }

    /// Orthogonal complement with respect to the symmetric bilinear form
    /// with Gram matrix `gram`.
    pub fn orthogonal_complement(&self, gram: &Matrix) -> Subspace {
        Subspace::kernel_of(&(&self.basis * gram))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` lies
    /// outside the subspace. Reads off pivot entries, then verifies.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient_dim, "dimension mismatch");
        let coords: Vec<Scalar> = self
            .basis
            .rows()
            .map(|r| {
                let p = r.iter().position(|x| !x.is_zero()).expect("echelon row is nonzero");
                v[p].clone()
            })
            .collect();
        (self.basis.transpose().mul_vec(&coords) == v).then_some(coords)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(n={}, {})", self.ambient_dim, self)
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rows: Vec<String> = self
            .basis
            .rows()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(format_scalar).collect();
                format!("({})", cells.join(", "))
            })
            .collect();
        write!(f, "span{{{}}}", rows.join(", "))
    }
}
