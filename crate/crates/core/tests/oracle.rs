//! Independent recomputation of the connection and curvature. The oracle
//! works with lowered components `g(∇_{e_i} e_j, e_k)` straight from the
//! Koszul formula, so it never inverts the Gram matrix.

mod common;

use common::*;
use lcplie_core::algebra::catalog;
use lcplie_core::metric::{curvature, weyl_from_levi_civita};
use lcplie_core::scalar::{frac, int, vector_from_ints};
use lcplie_core::{Connection, Covector, InnerProduct, LieAlgebra, Matrix, Scalar};
use proptest::prelude::*;

/// `c[i][j][k]` = coefficient of `e_k` in `[e_i, e_j]`.
fn raw_constants(l: &LieAlgebra) -> Vec<Vec<Vec<Scalar>>> {
    let n = l.dim();
    (0..n)
        .map(|i| (0..n).map(|j| l.basis_bracket(i, j)).collect())
        .collect()
}

fn g_of(gram: &Matrix, v: &[Scalar], k: usize) -> Scalar {
    (0..v.len()).map(|l| &v[l] * &gram[(l, k)]).sum()
}

/// `g(∇^θ_{e_i} e_j, e_k)` from the expanded Weyl formula.
fn oracle_lowered(l: &LieAlgebra, gram: &Matrix, theta: &[Scalar], i: usize, j: usize, k: usize) -> Scalar {
    let c = raw_constants(l);
    let half = frac(1, 2);
    let koszul = &half * (g_of(gram, &c[i][j], k) - g_of(gram, &c[i][k], j) - g_of(gram, &c[j][k], i));
    koszul + &theta[i] * &gram[(j, k)] + &theta[j] * &gram[(i, k)] - &gram[(i, j)] * &theta[k]
}

fn library_lowered(c: &Connection, gram: &Matrix, i: usize, j: usize, k: usize) -> Scalar {
    g_of(gram, &c.matrix(i).column(j), k)
}

fn check_connection(l: &LieAlgebra, g: &InnerProduct, theta: &Covector) {
    let n = l.dim();
    let c = weyl_from_levi_civita(l, g, theta).unwrap();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                assert_eq!(
                    library_lowered(&c, g.gram(), i, j, k),
                    oracle_lowered(l, g.gram(), &theta.0, i, j, k),
                    "component ({i}, {j}, {k})"
                );
            }
        }
    }
}

/// `R(e_i, e_j) e_k` by composing columns directly.
fn oracle_curvature(l: &LieAlgebra, c: &Connection, i: usize, j: usize, k: usize) -> Vec<Scalar> {
    let n = l.dim();
    let nab = |x: usize, v: &[Scalar]| -> Vec<Scalar> {
        let m = c.matrix(x);
        (0..n).map(|r| (0..n).map(|s| &m[(r, s)] * &v[s]).sum()).collect()
    };
    let ek: Vec<Scalar> = (0..n).map(|r| if r == k { int(1) } else { int(0) }).collect();
    let a = nab(i, &nab(j, &ek));
    let b = nab(j, &nab(i, &ek));
    let br = l.basis_bracket(i, j);
    let mut out: Vec<Scalar> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
    for (t, coeff) in br.iter().enumerate() {
        let col = c.matrix(t).column(k);
        for r in 0..n {
            out[r] -= coeff * &col[r];
        }
    }
    out
}

fn check_curvature(l: &LieAlgebra, g: &InnerProduct, theta: &Covector) {
    let n = l.dim();
    let c = weyl_from_levi_civita(l, g, theta).unwrap();
    let r = curvature(l, &c).unwrap();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                assert_eq!(r.operator(i, j).column(k), oracle_curvature(l, &c, i, j, k));
            }
        }
    }
}

#[test]
fn catalog_against_oracle() {
    let cases: Vec<(LieAlgebra, Vec<i64>)> = vec![
        (catalog::sol3(), vec![0, -1, 0]),
        (catalog::heisenberg3(), vec![1, 0, 0]),
        (catalog::heisenberg3_plus_r(), vec![0, 0, 0, 1]),
        (catalog::aff(), vec![1, 0]),
        (catalog::sl2(), vec![0, 0, 0]),
        (catalog::sl2_plus_r(), vec![0, 0, 0, 1]),
        (catalog::abelian(3), vec![1, 2, 3]),
    ];
    for (l, th) in cases {
        let n = l.dim();
        let theta = Covector(vector_from_ints(&th));
        let g = InnerProduct::identity(n);
        check_connection(&l, &g, &theta);
        check_curvature(&l, &g, &theta);
        let skew = {
            let mut m = Matrix::identity(n);
            m[(0, n - 1)] = frac(1, 2);
            m[(n - 1, 0)] = frac(1, 2);
            InnerProduct::new(m).unwrap()
        };
        check_connection(&l, &skew, &theta);
        check_curvature(&l, &skew, &theta);
    }
}

#[test]
fn sol3_hand_values() {
    // Basis (u, a, b), [a, b] = b, [a, u] = −u, θ = −a*.
    let l = catalog::sol3();
    let g = InnerProduct::identity(3);
    let theta = Covector(vector_from_ints(&[0, -1, 0]));
    let c = weyl_from_levi_civita(&l, &g, &theta).unwrap();
    let nab = |x: usize, y: usize| c.matrix(x).column(y);
    assert_eq!(nab(1, 1), vector_from_ints(&[0, -1, 0]));
    assert_eq!(nab(0, 0), vector_from_ints(&[0, 0, 0]));
    assert_eq!(nab(2, 2), vector_from_ints(&[0, 2, 0]));
    assert_eq!(nab(2, 1), vector_from_ints(&[0, 0, -2]));
}

proptest! {
    #![proptest_config(config(48))]

    #[test]
    fn random_algebras_against_oracle(
        (l, g, th) in lie_algebra(4, false).prop_flat_map(|l| {
            let n = l.dim();
            (Just(l), inner_product(n), prop::collection::vec(-2i64..=2, n))
        }),
    ) {
        // Any θ will do for the formula itself.
        let theta = Covector(vector_from_ints(&th));
        check_connection(&l, &g, &theta);
        check_curvature(&l, &g, &theta);
    }
}
