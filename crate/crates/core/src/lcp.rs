//! Locally conformally product (LCP) structures on metric Lie algebras.
//!
//! An LCP structure is a quadruple `(𝔤, g, θ, 𝔲)`: a metric Lie algebra, a
//! nonzero closed Lee form `θ`, and a proper nonzero subspace `𝔲` that is
//! parallel for the Weyl connection `∇^θ` and annihilated by its curvature.
//! This module validates such structures, finds the largest flat subspace
//! for a given `(g, θ)`, translates between unimodular LCP algebras and
//! triples `(𝔥, h, β)`, and computes the linear constraints that the Lie
//! algebra of a reduced characteristic group has to satisfy.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{AlgebraError, Covector, LieAlgebra};
use crate::matrix::Matrix;
use crate::metric::{self, Connection, CurvatureTensor, InnerProduct, MetricError};
use crate::scalar::{frac, is_zero_vector, to_f64, Scalar};
use crate::subspace::Subspace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LcpError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the Lee form must be nonzero")]
    ZeroLeeForm,
    #[error("the Lee form is not closed: theta([e{i}, e{j}]) != 0")]
    NotClosed { i: usize, j: usize },
    #[error("the maximal flat factor is only defined on unimodular Lie algebras")]
    NotUnimodular,
    #[error("not an LCP structure: {}", join_violations(.0))]
    Invalid(Vec<LcpViolation>),
    #[error("invalid triple: {}", join_triple(.0))]
    InvalidTriple(Vec<TripleViolation>),
    #[error("the LCP structure is not adapted (theta does not vanish on the flat factor)")]
    NotAdapted,
    #[error("the canonical basis of the flat factor is not g-orthonormal")]
    FlatFactorNotOrthonormal,
    #[error("the orthogonal complement of the flat factor is not a subalgebra")]
    ComplementNotSubalgebra,
    #[error("the flat factor is not an ideal")]
    FlatFactorNotIdeal,
    #[error("beta(x) is not skew-symmetric for basis vector {0} of the complement")]
    BetaNotSkew(usize),
    #[error("candidate subspace is not contained in the orthogonal complement of the flat factor")]
    CandidateOutsideComplement,
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

fn join_violations(v: &[LcpViolation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

fn join_triple(v: &[TripleViolation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}

/// One failed requirement of an LCP structure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LcpViolation {
    #[error("Lee form is zero")]
    ThetaZero,
    #[error("Lee form is not closed (theta([e{i}, e{j}]) != 0)")]
    ThetaNotClosed { i: usize, j: usize },
    #[error("flat factor is not a proper nonzero subspace")]
    NotProper,
    #[error("flat factor is not parallel for the Weyl connection")]
    NotParallel,
    #[error("curvature of the Weyl connection does not annihilate the flat factor")]
    NotCurvatureFlat,
    #[error("algebra is unimodular but theta does not vanish on the flat factor")]
    UnimodularNotAdapted,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripleViolation {
    #[error("q must be at least 1")]
    ZeroRank,
    #[error("metric dimension {found} does not match algebra dimension {expected}")]
    MetricDimension { expected: usize, found: usize },
    #[error("expected {expected} beta matrices, got {found}")]
    BetaCount { expected: usize, found: usize },
    #[error("beta matrix {0} has the wrong shape")]
    BetaShape(usize),
    #[error("beta matrix {0} is not skew-symmetric")]
    BetaNotSkew(usize),
    #[error("beta is not a representation on the pair ({0}, {1})")]
    BetaNotRepresentation(usize, usize),
    #[error("the algebra is unimodular")]
    Unimodular,
    #[error("expected {expected} flat-factor labels, got {found}")]
    LabelCount { expected: usize, found: usize },
}

/// Outcome of the flat-factor search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlatFactorKind {
    /// Proper nonzero flat factor: `(g, θ, 𝔲)` is an LCP structure.
    Lcp,
    /// `∇^θ` is flat, which the definition of LCP structures excludes.
    ConformallyFlat,
    /// Only the zero subspace is flat.
    NoLcp,
}

impl fmt::Display for FlatFactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FlatFactorKind::Lcp => "LCP",
            FlatFactorKind::ConformallyFlat => "conformally flat (not LCP)",
            FlatFactorKind::NoLcp => "no LCP structure with this (g, theta)",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatFactor {
    pub subspace: Subspace,
    pub kind: FlatFactorKind,
}

/// A validated LCP structure. Only [`validate_lcp`] and
/// [`build_from_triple`] construct values of this type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcpStructure {
    algebra: LieAlgebra,
    metric: InnerProduct,
    lee_form: Covector,
    flat_factor: Subspace,
    adapted: bool,
    maximal: bool,
}

impl LcpStructure {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn metric(&self) -> &InnerProduct {
        &self.metric
    }

    pub fn lee_form(&self) -> &Covector {
        &self.lee_form
    }

    pub fn flat_factor(&self) -> &Subspace {
        &self.flat_factor
    }

    pub fn is_adapted(&self) -> bool {
        self.adapted
    }

    /// True when the algebra is unimodular and the flat factor is the
    /// largest one for `(g, θ)`.
    pub fn is_maximal(&self) -> bool {
        self.maximal
    }

    /// `𝔥 = 𝔲^⊥`.
    pub fn complement(&self) -> Subspace {
        self.metric.orthogonal_complement(&self.flat_factor)
    }

    /// Matrix of `ad_x` restricted to the flat factor, in its canonical
    /// basis. Requires the flat factor to be invariant under `ad_x`.
    pub fn action_on_flat(&self, x: &[Scalar]) -> Result<Matrix, LcpError> {
        let u = &self.flat_factor;
        let cols = u
            .basis()
            .rows()
            .map(|ua| {
                let z = self.algebra.bracket(x, ua)?;
                u.coordinates(&z).ok_or(LcpError::FlatFactorNotIdeal)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_columns(u.dim(), &cols))
    }

    pub fn weyl_connection(&self) -> Result<Connection, LcpError> {
        Ok(metric::weyl_connection(&self.algebra, &self.metric, &self.lee_form)?)
    }

    /// Rewrites the structure in the basis given by the rows of `p`.
    pub fn in_frame(&self, p: &Matrix, labels: Vec<String>) -> Result<LcpStructure, LcpError> {
        let algebra = self.algebra.in_basis(p, labels)?;
        let gram = &(p * self.metric.gram()) * &p.transpose();
        let metric = InnerProduct::new(gram)?;
        let lee_form = Covector(p.mul_vec(&self.lee_form.0));
        let to_new = p.transpose().inverse().ok_or(AlgebraError::SingularBasis)?;
        let flat: Vec<Vec<Scalar>> = self.flat_factor.basis().rows().map(|r| to_new.mul_vec(r)).collect();
        let flat_factor = Subspace::span(algebra.dim(), &flat);
        validate_lcp(&algebra, &metric, &lee_form, &flat_factor)
    }
}

/// Data `(𝔥, h, β)` of a unimodular LCP algebra `ℝ^q ⋊ 𝔥`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcpTriple {
    h_algebra: LieAlgebra,
    h_metric: InnerProduct,
    q: usize,
    beta: Vec<Matrix>,
    u_labels: Vec<String>,
}

pub fn default_flat_labels(q: usize) -> Vec<String> {
    if q == 1 {
        vec!["u".to_string()]
    } else {
        (1..=q).map(|i| format!("u{i}")).collect()
    }
}

impl LcpTriple {
    pub fn new(h_algebra: LieAlgebra, h_metric: InnerProduct, q: usize, beta: Vec<Matrix>) -> Result<Self, LcpError> {
        Self::with_labels(h_algebra, h_metric, q, beta, default_flat_labels(q))
    }

    pub fn with_labels(
        h_algebra: LieAlgebra,
        h_metric: InnerProduct,
        q: usize,
        beta: Vec<Matrix>,
        u_labels: Vec<String>,
    ) -> Result<Self, LcpError> {
        let mut v = Vec::new();
        let m = h_algebra.dim();
        if q == 0 {
            v.push(TripleViolation::ZeroRank);
        }
        if u_labels.len() != q {
            v.push(TripleViolation::LabelCount {
                expected: q,
                found: u_labels.len(),
            });
        }
        if h_metric.dim() != m {
            v.push(TripleViolation::MetricDimension {
                expected: m,
                found: h_metric.dim(),
            });
        }
        if h_algebra.is_unimodular() {
            v.push(TripleViolation::Unimodular);
        }
        if beta.len() != m {
            v.push(TripleViolation::BetaCount {
                expected: m,
                found: beta.len(),
            });
        } else {
            let mut shapes_ok = true;
            for (i, b) in beta.iter().enumerate() {
                if b.nrows() != q || b.ncols() != q {
                    v.push(TripleViolation::BetaShape(i));
                    shapes_ok = false;
                } else if !(b + &b.transpose()).is_zero() {
                    v.push(TripleViolation::BetaNotSkew(i));
                }
            }
            if shapes_ok {
                for i in 0..m {
                    for j in i + 1..m {
                        let lhs = beta[i].commutator(&beta[j]);
                        let rhs = combine(&beta, &h_algebra.basis_bracket(i, j), q);
                        if lhs != rhs {
                            v.push(TripleViolation::BetaNotRepresentation(i, j));
                        }
                    }
                }
            }
        }
        if !v.is_empty() {
            return Err(LcpError::InvalidTriple(v));
        }
        Ok(LcpTriple {
            h_algebra,
            h_metric,
            q,
            beta,
            u_labels,
        })
    }

    pub fn h_algebra(&self) -> &LieAlgebra {
        &self.h_algebra
    }

    pub fn h_metric(&self) -> &InnerProduct {
        &self.h_metric
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn beta(&self) -> &[Matrix] {
        &self.beta
    }

    pub fn u_labels(&self) -> &[String] {
        &self.u_labels
    }

    /// `ξ = −(1/q) H^𝔥`.
    pub fn xi(&self) -> Covector {
        let c = frac(-1, self.q as i64);
        Covector(self.h_algebra.trace_form().0.into_iter().map(|x| x * &c).collect())
    }

    /// `α(x) = ξ(x) Id + β(x)` on each basis vector of `𝔥`.
    pub fn alpha(&self) -> Vec<Matrix> {
        let xi = self.xi();
        self.beta
            .iter()
            .zip(&xi.0)
            .map(|(b, x)| &Matrix::scalar_identity(self.q, x) + b)
            .collect()
    }
}

fn combine(mats: &[Matrix], coeffs: &[Scalar], q: usize) -> Matrix {
    coeffs
        .iter()
        .zip(mats)
        .filter(|(c, _)| !c.is_zero())
        .fold(Matrix::zeros(q, q), |acc, (c, m)| &acc + &m.scale(c))
}

fn check_dim(expected: usize, found: usize) -> Result<(), LcpError> {
    if expected != found {
        return Err(LcpError::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// `∇_{e_i} s ∈ S` for every basis vector `e_i` and every `s ∈ S`.
pub fn is_parallel(l: &LieAlgebra, c: &Connection, s: &Subspace) -> Result<bool, LcpError> {
    check_dim(l.dim(), c.dim())?;
    check_dim(l.dim(), s.ambient_dim())?;
    Ok(c.matrices()
        .iter()
        .all(|m| s.basis().rows().all(|r| s.contains_vector(&m.mul_vec(r)))))
}

/// Parallel and annihilated by every curvature operator.
pub fn is_flat_subspace(l: &LieAlgebra, c: &Connection, r: &CurvatureTensor, s: &Subspace) -> Result<bool, LcpError> {
    check_dim(l.dim(), r.dim())?;
    if !is_parallel(l, c, s)? {
        return Ok(false);
    }
    Ok(r.operators()
        .iter()
        .all(|op| s.basis().rows().all(|row| is_zero_vector(&op.mul_vec(row)))))
}

/// Largest `∇`-parallel subspace inside the joint kernel of the curvature:
/// start from `W₀ = ∩ ker R_{e_i,e_j}` and shrink to
/// `W_{k+1} = {w ∈ W_k : ∇_{e_i} w ∈ W_k ∀ i}` until stable. Every flat
/// subspace lies in every `W_k`, so the limit is the sum of all of them.
pub fn largest_flat_subspace(c: &Connection, r: &CurvatureTensor) -> Subspace {
    let mut w = r.joint_kernel();
    loop {
        let next = c
            .matrices()
            .iter()
            .fold(w.clone(), |acc, m| acc.intersection(&w.preimage(m)));
        if next == w {
            return w;
        }
        w = next;
    }
}

fn require_closed_nonzero(l: &LieAlgebra, theta: &Covector) -> Result<(), LcpError> {
    check_dim(l.dim(), theta.dim())?;
    if theta.is_zero() {
        return Err(LcpError::ZeroLeeForm);
    }
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            if !theta.eval(&l.basis_bracket(i, j)).is_zero() {
                return Err(LcpError::NotClosed { i, j });
            }
        }
    }
    Ok(())
}

/// The unique largest flat factor of a unimodular metric Lie algebra with
/// fixed nonzero closed Lee form.
///
/// A proper nonzero result is re-checked to be an abelian ideal, to satisfy
/// `θ|_𝔲 = 0` and to lie in the derived algebra; a failure of any of these
/// is reported as [`LcpError::Internal`].
pub fn maximal_flat_factor(l: &LieAlgebra, g: &InnerProduct, theta: &Covector) -> Result<FlatFactor, LcpError> {
    check_dim(l.dim(), g.dim())?;
    require_closed_nonzero(l, theta)?;
    if !l.is_unimodular() {
        return Err(LcpError::NotUnimodular);
    }
    let c = metric::weyl_connection(l, g, theta)?;
    let r = metric::curvature(l, &c)?;
    let w = largest_flat_subspace(&c, &r);
    if !is_flat_subspace(l, &c, &r, &w)? {
        return Err(LcpError::Internal("fixed point is not a flat subspace".into()));
    }
    let kind = if w.is_zero() {
        FlatFactorKind::NoLcp
    } else if w.is_full() {
        FlatFactorKind::ConformallyFlat
    } else {
        if !l.is_ideal(&w)? || !l.is_abelian_subspace(&w)? {
            return Err(LcpError::Internal("maximal flat factor is not an abelian ideal".into()));
        }
        if w.basis().rows().any(|row| !theta.eval(row).is_zero()) {
            return Err(LcpError::Internal(
                "Lee form does not vanish on the maximal flat factor".into(),
            ));
        }
        if !l.derived_algebra().contains(&w) {
            return Err(LcpError::Internal(
                "maximal flat factor is not inside the derived algebra".into(),
            ));
        }
        FlatFactorKind::Lcp
    };
    Ok(FlatFactor { subspace: w, kind })
}

/// Checks every requirement of an LCP structure and reports all failures
/// at once.
pub fn validate_lcp(
    l: &LieAlgebra,
    g: &InnerProduct,
    theta: &Covector,
    u: &Subspace,
) -> Result<LcpStructure, LcpError> {
    check_dim(l.dim(), g.dim())?;
    check_dim(l.dim(), theta.dim())?;
    check_dim(l.dim(), u.ambient_dim())?;
    let mut v = Vec::new();
    if theta.is_zero() {
        v.push(LcpViolation::ThetaZero);
    }
    if let Err(LcpError::NotClosed { i, j }) = require_closed_nonzero(l, theta) {
        v.push(LcpViolation::ThetaNotClosed { i, j });
    }
    if u.is_zero() || u.is_full() {
        v.push(LcpViolation::NotProper);
    }
    // The Weyl formula makes sense for any θ; closedness is reported above.
    let c = metric::weyl_from_levi_civita(l, g, theta)?;
    let r = metric::curvature(l, &c)?;
    if !is_parallel(l, &c, u)? {
        v.push(LcpViolation::NotParallel);
    }
    if !r
        .operators()
        .iter()
        .all(|op| u.basis().rows().all(|row| is_zero_vector(&op.mul_vec(row))))
    {
        v.push(LcpViolation::NotCurvatureFlat);
    }
    let adapted = u.basis().rows().all(|row| theta.eval(row).is_zero());
    let unimodular = l.is_unimodular();
    if unimodular && !adapted {
        v.push(LcpViolation::UnimodularNotAdapted);
    }
    if !v.is_empty() {
        return Err(LcpError::Invalid(v));
    }
    let maximal = unimodular && largest_flat_subspace(&c, &r) == *u;
    Ok(LcpStructure {
        algebra: l.clone(),
        metric: g.clone(),
        lee_form: theta.clone(),
        flat_factor: u.clone(),
        adapted,
        maximal,
    })
}

/// `𝔤 = ℝ^q ⋊_α 𝔥` with `ℝ^q ⊥ 𝔥`, standard metric on `ℝ^q`, `g|_𝔥 = h`,
/// and `θ` the extension of `ξ` by zero. Basis: `ℝ^q` first, then `𝔥`.
pub fn build_from_triple(t: &LcpTriple) -> Result<LcpStructure, LcpError> {
    let q = t.q;
    let m = t.h_algebra.dim();
    let n = q + m;
    let algebra = LieAlgebra::semidirect_sum(q, &t.h_algebra, &t.alpha(), t.u_labels.clone())?;
    let mut gram = Matrix::zeros(n, n);
    for a in 0..q {
        gram[(a, a)] = Scalar::from_integer(1.into());
    }
    for i in 0..m {
        for j in 0..m {
            gram[(q + i, q + j)] = t.h_metric.gram()[(i, j)].clone();
        }
    }
    let metric = InnerProduct::new(gram)?;
    let mut theta = vec![Scalar::zero(); q];
    theta.extend(t.xi().0);
    let theta = Covector(theta);
    let u = Subspace::coordinate(n, &(0..q).collect::<Vec<_>>());
    let s = validate_lcp(&algebra, &metric, &theta, &u)
        .map_err(|e| LcpError::Internal(format!("triple construction produced an invalid structure: {e}")))?;
    if !s.algebra.is_unimodular() || !s.adapted {
        return Err(LcpError::Internal(
            "triple construction is not unimodular and adapted".into(),
        ));
    }
    Ok(s)
}

fn label_for(l: &LieAlgebra, v: &[Scalar], fallback: String) -> String {
    let one = Scalar::from_integer(1.into());
    let nonzero: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    match nonzero.as_slice() {
        [k] if v[*k] == one => l.labels()[*k].clone(),
        _ => fallback,
    }
}

/// Recovers `(𝔥, h, β)` from an adapted LCP structure on a unimodular
/// algebra: `𝔥 = 𝔲^⊥` and `β(x) = ad_x|_𝔲 − θ(x) Id`, both written in the
/// canonical bases of `𝔲` and `𝔥`.
pub fn triple_from_lcp(s: &LcpStructure) -> Result<LcpTriple, LcpError> {
    if !s.adapted {
        return Err(LcpError::NotAdapted);
    }
    if !s.algebra.is_unimodular() {
        return Err(LcpError::NotUnimodular);
    }
    let u = &s.flat_factor;
    let q = u.dim();
    if !s.metric.restrict(u).is_standard() {
        return Err(LcpError::FlatFactorNotOrthonormal);
    }
    let h = s.complement();
    if !s.algebra.is_subalgebra(&h)? {
        return Err(LcpError::ComplementNotSubalgebra);
    }
    let h_labels: Vec<String> = h
        .basis()
        .rows()
        .enumerate()
        .map(|(i, r)| label_for(&s.algebra, r, format!("h{}", i + 1)))
        .collect();
    let u_labels: Vec<String> = u
        .basis()
        .rows()
        .enumerate()
        .map(|(i, r)| label_for(&s.algebra, r, default_flat_labels(q)[i].clone()))
        .collect();
    let h_algebra = s.algebra.restrict_to(&h, h_labels)?;
    let h_metric = s.metric.restrict(&h);
    let mut beta = Vec::with_capacity(h.dim());
    for (i, x) in h.basis().rows().enumerate() {
        let ad = s.action_on_flat(x)?;
        let b = &ad - &Matrix::scalar_identity(q, &s.lee_form.eval(x));
        if !(&b + &b.transpose()).is_zero() {
            return Err(LcpError::BetaNotSkew(i));
        }
        beta.push(b);
    }
    LcpTriple::with_labels(h_algebra, h_metric, q, beta, u_labels)
}

/// Linear conditions satisfied by the Lie algebra `𝔭` of a reduced
/// characteristic group, and how a candidate fares against each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintReport {
    pub candidate: Subspace,
    pub theta_vanishes: bool,
    pub action_trivial: bool,
    pub is_abelian: bool,
    pub in_radical: bool,
    pub in_commutator: bool,
    /// `𝔥 ∩ ker θ ∩ ker α ∩ rad(𝔤) ∩ 𝔤′`.
    pub linear_bound: Subspace,
    pub within_bound: bool,
}

/// `{x ∈ 𝔤 : [x, u] = 0 for all u ∈ 𝔲}`.
fn centralizer_of_flat(s: &LcpStructure) -> Subspace {
    let n = s.algebra.dim();
    let rows: Vec<Matrix> = s.flat_factor.basis().rows().map(|u| s.algebra.ad(u)).collect();
    let stacked = rows.iter().fold(Matrix::zeros(0, n), |acc, m| acc.vstack(m));
    Subspace::kernel_of(&stacked)
}

/// Largest subspace of `𝔥 = 𝔲^⊥` on which `θ` and the action on `𝔲`
/// vanish, intersected with the radical and the derived algebra. These are
/// necessary conditions only.
pub fn characteristic_constraint_space(s: &LcpStructure) -> Result<Subspace, LcpError> {
    if !s.adapted {
        return Err(LcpError::NotAdapted);
    }
    Ok(s.complement()
        .intersection(&s.lee_form.kernel())
        .intersection(&centralizer_of_flat(s))
        .intersection(&s.algebra.radical()?)
        .intersection(&s.algebra.derived_algebra()))
}

pub fn check_candidate(s: &LcpStructure, p: &Subspace) -> Result<ConstraintReport, LcpError> {
    check_dim(s.algebra.dim(), p.ambient_dim())?;
    if !s.complement().contains(p) {
        return Err(LcpError::CandidateOutsideComplement);
    }
    let linear_bound = characteristic_constraint_space(s)?;
    Ok(ConstraintReport {
        candidate: p.clone(),
        theta_vanishes: s.lee_form.kernel().contains(p),
        action_trivial: centralizer_of_flat(s).contains(p),
        is_abelian: s.algebra.is_abelian_subspace(p)?,
        in_radical: s.algebra.radical()?.contains(p),
        in_commutator: s.algebra.derived_algebra().contains(p),
        within_bound: linear_bound.contains(p),
        linear_bound,
    })
}

/// `max |Eᵀ G E − e^{2tθ} G|` with `E = exp(t·α)`, in floating point.
pub fn conformal_residual_of(alpha: &Matrix, gram_u: &Matrix, theta_x: f64, t: f64) -> f64 {
    let e = (alpha.to_f64() * t).exp();
    let g = gram_u.to_f64();
    let lhs = e.transpose() * &g * &e;
    let rhs = g * (2.0 * t * theta_x).exp();
    (lhs - rhs).amax()
}

/// Residual of the conformality identity for `exp(t·ad_X|_𝔲)`.
pub fn conformal_residual(s: &LcpStructure, x: &[Scalar], t: f64) -> Result<f64, LcpError> {
    check_dim(s.algebra.dim(), x.len())?;
    let alpha = s.action_on_flat(x)?;
    let gram_u = s.metric.restrict(&s.flat_factor);
    Ok(conformal_residual_of(
        &alpha,
        gram_u.gram(),
        to_f64(&s.lee_form.eval(x)),
        t,
    ))
}

/// Checks `exp(t·α(X))* g_𝔲 = e^{2tθ(X)} g_𝔲` to within `tol` in the max
/// norm.
pub fn verify_conformal_exponential(s: &LcpStructure, x: &[Scalar], t: f64, tol: f64) -> bool {
    conformal_residual(s, x, t).is_ok_and(|r| r <= tol)
}
