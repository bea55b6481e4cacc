mod common;

use common::*;
use lcplie_core::lcp::{self, build_from_triple, triple_from_lcp, FlatFactorKind};
use lcplie_core::scalar::int;
use lcplie_core::{InnerProduct, LcpTriple, Matrix};
use proptest::prelude::*;

fn skew(q: usize, xs: &[i64]) -> Matrix {
    let mut m = Matrix::zeros(q, q);
    let mut it = xs.iter().cycle();
    for i in 0..q {
        for j in i + 1..q {
            let x = int(*it.next().unwrap());
            m[(j, i)] = -x.clone();
            m[(i, j)] = x;
        }
    }
    m
}

proptest! {
    #![proptest_config(config(40))]

    #[test]
    fn triple_round_trip(
        (d, q, rot) in (1usize..=3).prop_flat_map(|m| {
            (prop::collection::vec(-2i64..=2, m * m), 1usize..=3, prop::collection::vec(-2i64..=2, 3))
        }),
    ) {
        let m = (d.len() as f64).sqrt() as usize;
        let rows: Vec<&[i64]> = d.chunks(m).collect();
        let mut dm = Matrix::from_ints(&rows);
        if dm.trace() == int(0) {
            dm[(0, 0)] += int(1);
        }
        let h = split_extension(&dm, &Matrix::identity(m + 1));
        prop_assume!(!h.is_unimodular());
        // β(x) = skew, β(e_i) = 0 is a representation because the e_i span an abelian ideal.
        let mut beta = vec![skew(q, &rot)];
        beta.extend((0..m).map(|_| Matrix::zeros(q, q)));
        let t = LcpTriple::new(h, InnerProduct::identity(m + 1), q, beta).unwrap();
        let s = build_from_triple(&t).unwrap();
        prop_assert!(s.algebra().is_unimodular());
        prop_assert!(s.is_adapted());
        prop_assert_eq!(&triple_from_lcp(&s).unwrap(), &t);
        let f = lcp::maximal_flat_factor(s.algebra(), s.metric(), s.lee_form()).unwrap();
        prop_assert!(f.subspace.contains(s.flat_factor()));
        prop_assert_eq!(f.kind == FlatFactorKind::Lcp, !f.subspace.is_full());
        prop_assert_eq!(s.is_maximal(), &f.subspace == s.flat_factor());
        for i in 0..s.algebra().dim() {
            let mut x = vec![int(0); s.algebra().dim()];
            x[i] = int(1);
            for t in [-1.0, -0.5, 0.5, 1.0] {
                prop_assert!(lcp::verify_conformal_exponential(&s, &x, t, 1e-9));
            }
        }
    }
}
