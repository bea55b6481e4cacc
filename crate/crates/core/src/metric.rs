//! Inner products, the Levi-Civita connection, Weyl connections and their
//! curvature on a Lie algebra with a left-invariant metric.
//!
//! A connection is stored as the `n` matrices of `∇_{e_i}`; column `j` of
//! `nabla[i]` holds the coordinates of `∇_{e_i} e_j`.

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::algebra::{Covector, LieAlgebra};
use crate::matrix::Matrix;
use crate::par::Strategy;
use crate::scalar::{axpy, frac, is_zero_vector, Scalar};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("Gram matrix is not square")]
    NotSquare,
    #[error("Gram matrix is not symmetric")]
    NotSymmetric,
    #[error("Gram matrix is not positive definite (leading minor {index} is {value})")]
    NotPositiveDefinite { index: usize, value: String },
    #[error("Lee form is not closed: theta([e{i}, e{j}]) != 0")]
    NotClosed { i: usize, j: usize },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// A positive definite symmetric bilinear form, by its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InnerProduct {
    gram: Matrix,
    inverse: Matrix,
}

impl InnerProduct {
    pub fn new(gram: Matrix) -> Result<Self, MetricError> {
        if !gram.is_square() {
            return Err(MetricError::NotSquare);
        }
        if !gram.is_symmetric() {
            return Err(MetricError::NotSymmetric);
        }
        for (index, m) in gram.leading_minors().into_iter().enumerate() {
            if !m.is_positive() {
                return Err(MetricError::NotPositiveDefinite {
                    index: index + 1,
                    value: crate::scalar::format_scalar(&m),
                });
            }
        }
        let inverse = gram.inverse().expect("positive definite matrices are invertible");
        Ok(InnerProduct { gram, inverse })
    }

    pub fn identity(n: usize) -> Self {
        InnerProduct {
            gram: Matrix::identity(n),
            inverse: Matrix::identity(n),
        }
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn is_standard(&self) -> bool {
        self.gram == Matrix::identity(self.dim())
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        crate::scalar::dot(x, &self.gram.mul_vec(y))
    }

    /// The `g`-dual vector: the unique `v` with `g(v, x) = θ(x)`.
    pub fn sharp(&self, theta: &Covector) -> Result<Vec<Scalar>, MetricError> {
        if theta.dim() != self.dim() {
            return Err(MetricError::DimensionMismatch {
                expected: self.dim(),
                found: theta.dim(),
            });
        }
        Ok(self.inverse.mul_vec(&theta.0))
    }

    /// Gram matrix of the restriction to `s`, in its canonical basis.
    pub fn restrict(&self, s: &Subspace) -> InnerProduct {
        let b = s.basis();
        let gram = &(b * &self.gram) * &b.transpose();
        InnerProduct::new(gram).expect("restriction of a positive definite form is positive definite")
    }

    pub fn orthogonal_complement(&self, s: &Subspace) -> Subspace {
        s.orthogonal_complement(&self.gram)
    }

    /// `Mᵀ G`, whose `(j, k)` entry is `g(M e_j, e_k)`.
    fn lower(&self, m: &Matrix) -> Matrix {
        &m.transpose() * &self.gram
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Connection {
    nabla: Vec<Matrix>,
}

impl Connection {
    pub fn new(nabla: Vec<Matrix>) -> Result<Self, MetricError> {
        let n = nabla.len();
        for m in &nabla {
            if m.nrows() != n || m.ncols() != n {
                return Err(MetricError::DimensionMismatch {
                    expected: n,
                    found: m.nrows(),
                });
            }
        }
        Ok(Connection { nabla })
    }

    pub fn dim(&self) -> usize {
        self.nabla.len()
    }

    /// Matrix of `∇_{e_i}`.
    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.nabla[i]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.nabla
    }

    /// Matrix of `∇_x` for an arbitrary `x`.
    pub fn along(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        x.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(Matrix::zeros(n, n), |acc, (i, c)| &acc + &self.nabla[i].scale(c))
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        self.along(x).mul_vec(y)
    }
}

/// Curvature operators `R_{e_i, e_j}` for `i < j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureTensor {
    dim: usize,
    ops: Vec<Matrix>,
}

impl CurvatureTensor {
    pub fn dim(&self) -> usize {
        self.dim
    }

    fn index(&self, i: usize, j: usize) -> usize {
        i * self.dim - i * (i + 1) / 2 + (j - i - 1)
    }

    /// `R_{e_i, e_j}` for any pair, by antisymmetry.
    pub fn operator(&self, i: usize, j: usize) -> Matrix {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Matrix::zeros(self.dim, self.dim),
            std::cmp::Ordering::Less => self.ops[self.index(i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.ops[self.index(j, i)],
        }
    }

    /// The stored operators, ordered by `(i, j)` with `i < j`.
    pub fn operators(&self) -> &[Matrix] {
        &self.ops
    }

    /// `R_{x,y}` by bilinear expansion.
    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        let n = self.dim;
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let c = &x[i] * &y[j] - &x[j] * &y[i];
                if !c.is_zero() {
                    out = &out + &self.ops[self.index(i, j)].scale(&c);
                }
            }
        }
        out
    }

    pub fn is_flat(&self) -> bool {
        self.ops.iter().all(Matrix::is_zero)
    }

    /// `∩ ker R_{e_i, e_j}`.
    pub fn joint_kernel(&self) -> Subspace {
        let n = self.dim;
        let stacked = self.ops.iter().fold(Matrix::zeros(0, n), |acc, m| acc.vstack(m));
        Subspace::kernel_of(&stacked)
    }
}

fn check_dims(l: &LieAlgebra, g: &InnerProduct) -> Result<(), MetricError> {
    if g.dim() != l.dim() {
        return Err(MetricError::DimensionMismatch {
            expected: l.dim(),
            found: g.dim(),
        });
    }
    Ok(())
}

/// A left-invariant 1-form is closed iff it vanishes on all brackets.
pub fn is_closed(l: &LieAlgebra, theta: &Covector) -> Result<bool, MetricError> {
    Ok(first_non_closed_pair(l, theta)?.is_none())
}

fn first_non_closed_pair(l: &LieAlgebra, theta: &Covector) -> Result<Option<(usize, usize)>, MetricError> {
    let n = l.dim();
    if theta.dim() != n {
        return Err(MetricError::DimensionMismatch {
            expected: n,
            found: theta.dim(),
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            if !theta.eval(&l.basis_bracket(i, j)).is_zero() {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn sharp(g: &InnerProduct, theta: &Covector) -> Result<Vec<Scalar>, MetricError> {
    g.sharp(theta)
}

/// `½(g([x,y],z) − g([x,z],y) − g([y,z],x))` on basis vectors, as the
/// row `k ↦ value(i, j, k)`.
/// `low[i][j] = G·[e_i, e_j]`, i.e. `low[i][j][k] = g([e_i, e_j], e_k)`.
struct LoweredBrackets(Vec<Vec<Vec<Scalar>>>);

impl LoweredBrackets {
    fn new(l: &LieAlgebra, g: &InnerProduct) -> Self {
        let n = l.dim();
        LoweredBrackets(
            (0..n)
                .map(|i| (0..n).map(|j| g.gram().mul_vec(&l.basis_bracket(i, j))).collect())
                .collect(),
        )
    }

    /// `k ↦ g(∇^g_{e_i} e_j, e_k)` by the Koszul formula.
    fn koszul_row(&self, i: usize, j: usize) -> Vec<Scalar> {
        let low = &self.0;
        let half = frac(1, 2);
        (0..low.len())
            .map(|k| (&low[i][j][k] - &low[i][k][j] - &low[j][k][i]) * &half)
            .collect()
    }
}

pub fn levi_civita(l: &LieAlgebra, g: &InnerProduct) -> Result<Connection, MetricError> {
    levi_civita_with(l, g, Strategy::default())
}

pub fn levi_civita_with(l: &LieAlgebra, g: &InnerProduct, strategy: Strategy) -> Result<Connection, MetricError> {
    check_dims(l, g)?;
    let n = l.dim();
    let low = LoweredBrackets::new(l, g);
    let nabla = strategy.map(n, |i| {
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| g.inverse.mul_vec(&low.koszul_row(i, j))).collect();
        Matrix::from_columns(n, &cols)
    });
    Connection::new(nabla)
}

/// `∇^θ_x y = ∇^g_x y + θ(x)y + θ(y)x − g(x,y)θ^♯` for closed `θ`.
///
/// The result is computed from the Levi-Civita connection and compared with
/// a second evaluation that lowers the fully expanded Koszul-plus-Lee form
/// expression through `g⁻¹`. Disagreement is reported as an internal error.
pub fn weyl_connection(l: &LieAlgebra, g: &InnerProduct, theta: &Covector) -> Result<Connection, MetricError> {
    check_dims(l, g)?;
    if let Some((i, j)) = first_non_closed_pair(l, theta)? {
        return Err(MetricError::NotClosed { i, j });
    }
    let via_lc = weyl_from_levi_civita(l, g, theta)?;
    let expanded = weyl_expanded(l, g, theta)?;
    if via_lc != expanded {
        return Err(MetricError::Internal(
            "Weyl connection from the Levi-Civita route and the expanded route disagree".into(),
        ));
    }
    Ok(via_lc)
}

/// Weyl connection built on top of [`levi_civita`]. Does not check
/// closedness.
pub fn weyl_from_levi_civita(l: &LieAlgebra, g: &InnerProduct, theta: &Covector) -> Result<Connection, MetricError> {
    let n = l.dim();
    let lc = levi_civita(l, g)?;
    let theta_sharp = g.sharp(theta)?;
    let nabla = (0..n)
        .map(|i| {
            let cols: Vec<Vec<Scalar>> = (0..n)
                .map(|j| {
                    let mut v = lc.matrix(i).column(j);
                    v[j] += &theta.0[i];
                    v[i] += &theta.0[j];
                    axpy(&mut v, &-g.gram()[(i, j)].clone(), &theta_sharp);
                    v
                })
                .collect();
            Matrix::from_columns(n, &cols)
        })
        .collect();
    Connection::new(nabla)
}

/// Weyl connection from the lowered formula
/// `g(∇^θ_x y, z) = Koszul(x,y,z) + θ(x)g(y,z) + θ(y)g(x,z) − θ(z)g(x,y)`.
pub fn weyl_expanded(l: &LieAlgebra, g: &InnerProduct, theta: &Covector) -> Result<Connection, MetricError> {
    check_dims(l, g)?;
    let n = l.dim();
    if theta.dim() != n {
        return Err(MetricError::DimensionMismatch {
            expected: n,
            found: theta.dim(),
        });
    }
    let gm = g.gram();
    let low = LoweredBrackets::new(l, g);
    let nabla = (0..n)
        .map(|i| {
            let cols: Vec<Vec<Scalar>> = (0..n)
                .map(|j| {
                    let mut row = low.koszul_row(i, j);
                    for (k, r) in row.iter_mut().enumerate() {
                        *r += &theta.0[i] * &gm[(j, k)] + &theta.0[j] * &gm[(i, k)] - &theta.0[k] * &gm[(i, j)];
                    }
                    g.inverse.mul_vec(&row)
                })
                .collect();
            Matrix::from_columns(n, &cols)
        })
        .collect();
    Connection::new(nabla)
}

pub type TorsionTable = Vec<((usize, usize), Vec<Scalar>)>;

/// Torsion `T(e_i, e_j) = ∇_{e_i} e_j − ∇_{e_j} e_i − [e_i, e_j]` for all
/// `i < j`, in lexicographic order.
pub fn torsion(l: &LieAlgebra, c: &Connection) -> Result<TorsionTable, MetricError> {
    let n = l.dim();
    if c.dim() != n {
        return Err(MetricError::DimensionMismatch {
            expected: n,
            found: c.dim(),
        });
    }
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let a = c.matrix(i).column(j);
            let b = c.matrix(j).column(i);
            let br = l.basis_bracket(i, j);
            let t: Vec<Scalar> = a.iter().zip(&b).zip(&br).map(|((a, b), z)| a - b - z).collect();
            out.push(((i, j), t));
        }
    }
    Ok(out)
}

pub fn is_torsion_free(l: &LieAlgebra, c: &Connection) -> Result<bool, MetricError> {
    Ok(torsion(l, c)?.iter().all(|(_, t)| is_zero_vector(t)))
}

/// True iff every `∇_{e_i}` is skew for `g`.
pub fn is_metric(g: &InnerProduct, c: &Connection) -> bool {
    c.matrices().iter().all(|m| {
        let low = g.lower(m);
        (&low + &low.transpose()).is_zero()
    })
}

/// `R_{x,y} = [∇_x, ∇_y] − ∇_{[x,y]}`.
pub fn curvature(l: &LieAlgebra, c: &Connection) -> Result<CurvatureTensor, MetricError> {
    curvature_with(l, c, Strategy::default())
}

pub fn curvature_with(l: &LieAlgebra, c: &Connection, strategy: Strategy) -> Result<CurvatureTensor, MetricError> {
    let n = l.dim();
    if c.dim() != n {
        return Err(MetricError::DimensionMismatch {
            expected: n,
            found: c.dim(),
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let ops = strategy.map(pairs.len(), |p| {
        let (i, j) = pairs[p];
        &c.matrix(i).commutator(c.matrix(j)) - &c.along(&l.basis_bracket(i, j))
    });
    Ok(CurvatureTensor { dim: n, ops })
}
