//! Semantic loading: turns a parsed document into core objects, collecting
//! every problem instead of stopping at the first.

use std::collections::BTreeSet;

use lcplie_core::algebra::JacobiViolation;
use lcplie_core::lcp::LcpError;
use lcplie_core::{Covector, InnerProduct, LcpTriple, LieAlgebra, Matrix, Scalar, StructureConstants, Subspace};
use num_traits::Zero;

use crate::document::{rats, scalars, AlgebraDocument, BracketEntry, MetricSpec, Rat, TripleBlock};
use crate::format::combination;

#[derive(Debug, Clone)]
pub struct Model {
    pub algebra: LieAlgebra,
    pub metric: Option<InnerProduct>,
    pub theta: Option<Covector>,
    pub flat_factor: Option<Subspace>,
    pub triple: Option<LcpTriple>,
}

fn matrix(cols: usize, rows: &[Vec<Rat>]) -> Option<Matrix> {
    rows.iter()
        .all(|r| r.len() == cols)
        .then(|| Matrix::from_rows(cols, &rows.iter().map(|r| scalars(r)).collect::<Vec<_>>()))
}

fn jacobi_message(labels: &[String], v: &JacobiViolation) -> String {
    format!(
        "Jacobi identity fails on ({}, {}, {}): cyclic sum = {}",
        labels[v.i],
        labels[v.j],
        labels[v.k],
        combination(labels, &v.sum)
    )
}

fn build_algebra(doc: &AlgebraDocument, problems: &mut Vec<String>) -> Option<LieAlgebra> {
    let n = doc.dim;
    let before = problems.len();
    if doc.basis.len() != n {
        problems.push(format!("basis has {} labels but dim is {n}", doc.basis.len()));
    }
    let mut seen = BTreeSet::new();
    for l in &doc.basis {
        if l.is_empty() {
            problems.push("basis labels must be nonempty".into());
        } else if !seen.insert(l.as_str()) {
            problems.push(format!("basis label {l:?} is repeated"));
        }
    }
    let mut sc = StructureConstants::new(n);
    let mut pairs = BTreeSet::new();
    for (idx, BracketEntry { i, j, c }) in doc.brackets.iter().enumerate() {
        let (i, j) = (*i, *j);
        if i >= n || j >= n {
            problems.push(format!("brackets[{idx}]: index out of range for dim {n}"));
            continue;
        }
        if i == j {
            let l = doc.basis.get(i).cloned().unwrap_or_else(|| format!("e{i}"));
            problems.push(format!(
                "brackets[{idx}]: [{l}, {l}] is always zero and cannot be prescribed"
            ));
            continue;
        }
        if !pairs.insert((i.min(j), i.max(j))) {
            problems.push(format!("brackets[{idx}]: the pair ({i}, {j}) is given twice"));
            continue;
        }
        let mut v = vec![Scalar::zero(); n];
        let mut ok = true;
        for (k, x) in c {
            if *k >= n {
                problems.push(format!("brackets[{idx}].c: index {k} out of range for dim {n}"));
                ok = false;
            } else {
                v[*k] = x.0.clone();
            }
        }
        if ok {
            sc.set(i, j, v).expect("indices checked above");
        }
    }
    if problems.len() > before {
        return None;
    }
    let violations = sc.jacobi_violations();
    if !violations.is_empty() {
        problems.extend(violations.iter().map(|v| jacobi_message(&doc.basis, v)));
        return None;
    }
    Some(LieAlgebra::new(doc.basis.clone(), sc).expect("Jacobi checked above"))
}

fn build_metric(n: usize, spec: &MetricSpec, problems: &mut Vec<String>) -> Option<InnerProduct> {
    match spec {
        MetricSpec::Identity => Some(InnerProduct::identity(n)),
        MetricSpec::Gram(rows) => {
            let Some(m) = matrix(n, rows).filter(|_| rows.len() == n) else {
                problems.push(format!("metric must be a {n}x{n} matrix"));
                return None;
            };
            InnerProduct::new(m)
                .map_err(|e| problems.push(format!("metric: {e}")))
                .ok()
        }
    }
}

fn build_theta(l: Option<&LieAlgebra>, n: usize, theta: &[Rat], problems: &mut Vec<String>) -> Option<Covector> {
    if theta.len() != n {
        problems.push(format!("theta has {} entries but dim is {n}", theta.len()));
        return None;
    }
    let theta = Covector(scalars(theta));
    if let Some(l) = l {
        for i in 0..n {
            for j in i + 1..n {
                if !theta.eval(&l.basis_bracket(i, j)).is_zero() {
                    let labels = l.labels();
                    problems.push(format!(
                        "theta is not closed: theta([{}, {}]) != 0",
                        labels[i], labels[j]
                    ));
                    return None;
                }
            }
        }
    }
    Some(theta)
}

fn build_triple(
    l: &LieAlgebra,
    metric: &InnerProduct,
    block: &TripleBlock,
    problems: &mut Vec<String>,
) -> Option<LcpTriple> {
    let q = block.q;
    let mut beta = Vec::new();
    for (idx, b) in block.beta.iter().enumerate() {
        match matrix(q, b).filter(|_| b.len() == q) {
            Some(m) => beta.push(m),
            None => {
                problems.push(format!("triple.beta[{idx}] must be a {q}x{q} matrix"));
                return None;
            }
        }
    }
    let labels = block
        .u_labels
        .clone()
        .unwrap_or_else(|| lcplie_core::lcp::default_flat_labels(q));
    if let Some(clash) = labels.iter().find(|u| l.labels().contains(u)) {
        problems.push(format!("triple.u_labels: {clash:?} is already a basis label"));
        return None;
    }
    match LcpTriple::with_labels(l.clone(), metric.clone(), q, beta, labels) {
        Ok(t) => Some(t),
        Err(LcpError::InvalidTriple(v)) => {
            problems.extend(v.iter().map(|x| format!("triple: {x}")));
            None
        }
        Err(e) => {
            problems.push(format!("triple: {e}"));
            None
        }
    }
}

pub fn load(doc: &AlgebraDocument) -> Result<Model, Vec<String>> {
    let n = doc.dim;
    let mut problems = Vec::new();
    let algebra = build_algebra(doc, &mut problems);
    let metric = doc.metric.as_ref().and_then(|m| build_metric(n, m, &mut problems));
    let theta = doc
        .theta
        .as_ref()
        .and_then(|t| build_theta(algebra.as_ref(), n, t, &mut problems));
    let flat_factor = doc.flat_factor.as_ref().and_then(|rows| match matrix(n, rows) {
        Some(m) => Some(Subspace::span(n, &m.to_rows())),
        None => {
            problems.push(format!("flat_factor vectors must have {n} entries"));
            None
        }
    });
    let triple = match (&algebra, &doc.triple) {
        (Some(l), Some(block)) => {
            let h = metric.clone().unwrap_or_else(|| InnerProduct::identity(n));
            build_triple(l, &h, block, &mut problems)
        }
        _ => None,
    };
    if !problems.is_empty() {
        return Err(problems);
    }
    Ok(Model {
        algebra: algebra.expect("no problems recorded"),
        metric,
        theta,
        flat_factor,
        triple,
    })
}

/// Canonical document for an algebra: brackets with `i < j` in
/// lexicographic order, zero coefficients dropped, the flat factor by its
/// canonical basis.
pub fn to_document(
    l: &LieAlgebra,
    metric: Option<&InnerProduct>,
    theta: Option<&Covector>,
    flat: Option<&Subspace>,
) -> AlgebraDocument {
    let n = l.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let c: std::collections::BTreeMap<usize, Rat> = l
                .basis_bracket(i, j)
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k, Rat(x)))
                .collect();
            if !c.is_empty() {
                brackets.push(BracketEntry { i, j, c });
            }
        }
    }
    AlgebraDocument {
        dim: n,
        basis: l.labels().to_vec(),
        brackets,
        metric: metric.map(|g| {
            if g.is_standard() {
                MetricSpec::Identity
            } else {
                MetricSpec::Gram(g.gram().to_rows().iter().map(|r| rats(r)).collect())
            }
        }),
        theta: theta.map(|t| rats(&t.0)),
        flat_factor: flat.map(|s| s.basis().rows().map(rats).collect()),
        triple: None,
    }
}
