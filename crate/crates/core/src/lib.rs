//! Exact-arithmetic toolkit for locally conformally product (LCP)
//! structures on metric Lie algebras.
//!
//! Everything symbolic runs over `ℚ` ([`Scalar`]). Floating point shows up
//! only in the matrix-exponential check of [`lcp::conformal_residual`].

pub mod algebra;
pub mod lattice;
pub mod lcp;
pub mod matrix;
pub mod metric;
pub mod par;
pub mod scalar;
pub mod subspace;

pub use algebra::{catalog, AlgebraError, Covector, LieAlgebra, StructureConstants};
pub use lattice::{IntMatrix, IntegerEndomorphism, LatticeError, LatticeIndex, SplitDecomposition};
pub use lcp::{FlatFactor, FlatFactorKind, LcpError, LcpStructure, LcpTriple};
pub use matrix::Matrix;
pub use metric::{Connection, CurvatureTensor, InnerProduct, MetricError};
pub use par::Strategy;
pub use scalar::Scalar;
pub use subspace::Subspace;
