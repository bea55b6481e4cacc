use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lcplie_core::lattice::{lemma51_check, smith_normal_forms, IntMatrix, IntegerEndomorphism, SplitDecomposition};
use lcplie_core::metric::{curvature_with, levi_civita_with, weyl_connection};
use lcplie_core::scalar::int;
use lcplie_core::{Covector, InnerProduct, LieAlgebra, Strategy, StructureConstants, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const STRATEGIES: [Strategy; 2] = [Strategy::Sequential, Strategy::Parallel];

/// `ℝ ⋉_D ℝ^{n−1}` with a random traceless integer `D`.
fn random_algebra(n: usize, rng: &mut ChaCha8Rng) -> LieAlgebra {
    let m = n - 1;
    let mut d: Vec<Vec<i64>> = (0..m)
        .map(|_| (0..m).map(|_| rng.gen_range(-3..=3)).collect())
        .collect();
    let tr: i64 = (0..m).map(|i| d[i][i]).sum();
    d[0][0] -= tr;
    let mut sc = StructureConstants::new(n);
    for i in 0..m {
        let mut v = vec![int(0); n];
        for (slot, row) in v[1..].iter_mut().zip(&d) {
            *slot = int(row[i]);
        }
        sc.set(0, i + 1, v).unwrap();
    }
    LieAlgebra::new(lcplie_core::algebra::default_labels(n), sc).unwrap()
}

fn strategy_name(s: Strategy) -> &'static str {
    match s {
        Strategy::Sequential => "sequential",
        Strategy::Parallel => "parallel",
    }
}

fn bench_geometry(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [6usize, 10] {
        let l = random_algebra(n, &mut rng);
        let g = InnerProduct::identity(n);
        let mut theta = vec![int(0); n];
        theta[0] = int(1);
        let theta = Covector(theta);
        let conn = weyl_connection(&l, &g, &theta).unwrap();

        let mut group = c.benchmark_group(format!("dim{n}"));
        for s in STRATEGIES {
            group.bench_with_input(BenchmarkId::new("jacobi", strategy_name(s)), &s, |b, &s| {
                b.iter(|| black_box(l.constants().jacobi_violations_with(s)))
            });
            group.bench_with_input(BenchmarkId::new("levi_civita", strategy_name(s)), &s, |b, &s| {
                b.iter(|| black_box(levi_civita_with(&l, &g, s).unwrap()))
            });
            group.bench_with_input(BenchmarkId::new("curvature", strategy_name(s)), &s, |b, &s| {
                b.iter(|| black_box(curvature_with(&l, &conn, s).unwrap()))
            });
        }
        group.finish();
    }
}

fn bench_lattice(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mats: Vec<IntMatrix> = (0..64)
        .map(|_| {
            let rows: Vec<Vec<i64>> = (0..6)
                .map(|_| (0..6).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            IntMatrix::from_i64(&refs)
        })
        .collect();
    // diag(2, 1, 1): E₁ = first axis, E₂ = the fixed plane, so a witness exists.
    let a = IntegerEndomorphism::from_i64(&[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
    let split = SplitDecomposition::new(Subspace::coordinate(3, &[0]), Subspace::coordinate(3, &[1, 2])).unwrap();
    let witness = lemma51_check(&a, &split).unwrap().witness.unwrap();

    let mut group = c.benchmark_group("lattice");
    for s in STRATEGIES {
        group.bench_with_input(BenchmarkId::new("snf_batch64", strategy_name(s)), &s, |b, &s| {
            b.iter(|| black_box(smith_normal_forms(&mats, s)))
        });
        group.bench_with_input(BenchmarkId::new("witness_box6", strategy_name(s)), &s, |b, &s| {
            b.iter(|| black_box(witness.covers_box(&split, 6, s)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_geometry, bench_lattice);
criterion_main!(benches);
