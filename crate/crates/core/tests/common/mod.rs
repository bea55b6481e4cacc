#![allow(dead_code)]

use lcplie_core::scalar::{int, vector_from_ints};
use lcplie_core::{Covector, InnerProduct, LieAlgebra, Matrix, Scalar, StructureConstants};
use proptest::prelude::*;

/// `ℝ ⋉_D ℝ^{n−1}` with `[x, e_i] = D e_i`, written in the basis given by
/// the rows of `p`. Every such bracket satisfies Jacobi.
pub fn split_extension(d: &Matrix, p: &Matrix) -> LieAlgebra {
    let m = d.nrows();
    let n = m + 1;
    let mut sc = StructureConstants::new(n);
    for i in 0..m {
        let mut v = vec![int(0); n];
        for (k, x) in d.column(i).into_iter().enumerate() {
            v[k + 1] = x;
        }
        sc.set(0, i + 1, v).unwrap();
    }
    let labels = lcplie_core::algebra::default_labels(n);
    let l = LieAlgebra::new(labels.clone(), sc).unwrap();
    l.in_basis(p, labels).unwrap()
}

fn small_matrix(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(lo..=hi, n * n).prop_map(move |xs| {
        let rows: Vec<&[i64]> = xs.chunks(n).collect();
        Matrix::from_ints(&rows)
    })
}

/// Unit upper-triangular times unit lower-triangular, so always invertible.
fn change_of_basis(n: usize) -> impl Strategy<Value = Matrix> {
    (
        prop::collection::vec(-1i64..=1, n * n),
        prop::collection::vec(-1i64..=1, n * n),
    )
        .prop_map(move |(a, b)| {
            let mut up = Matrix::identity(n);
            let mut low = Matrix::identity(n);
            for i in 0..n {
                for j in 0..n {
                    if i < j {
                        up[(i, j)] = int(a[i * n + j]);
                    } else if i > j {
                        low[(i, j)] = int(b[i * n + j]);
                    }
                }
            }
            &up * &low
        })
}

/// Random solvable algebras of dimension `2..=max_dim`.
pub fn lie_algebra(max_dim: usize, unimodular: bool) -> impl Strategy<Value = LieAlgebra> {
    (2..=max_dim).prop_flat_map(move |n| {
        (small_matrix(n - 1, -2, 2), change_of_basis(n)).prop_map(move |(mut d, p)| {
            if unimodular {
                let t = d.trace();
                d[(0, 0)] -= t;
            }
            split_extension(&d, &p)
        })
    })
}

/// `AᵀA + I` for a small integer `A`.
pub fn inner_product(n: usize) -> impl Strategy<Value = InnerProduct> {
    small_matrix(n, -1, 1).prop_map(move |a| {
        let g = &(&a.transpose() * &a) + &Matrix::identity(n);
        InnerProduct::new(g).unwrap()
    })
}

/// A random integer combination of a basis of `(𝔤′)^⊥`, i.e. a closed form.
pub fn closed_form(l: &LieAlgebra, coeffs: &[i64]) -> Covector {
    let ann = l.derived_algebra().annihilator();
    let mut out = vec![int(0); l.dim()];
    for (row, c) in ann.basis().rows().zip(coeffs.iter().cycle()) {
        for (o, x) in out.iter_mut().zip(row) {
            *o += x * int(*c);
        }
    }
    Covector(out)
}

pub fn vector(n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(-3i64..=3, n).prop_map(|v| vector_from_ints(&v))
}

pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}
