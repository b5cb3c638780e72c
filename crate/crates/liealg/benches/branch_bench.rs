//! Benchmarks for the branching hot paths.  Build with the default features
//! for the rayon-parallel core, or with `--no-default-features` for the
//! sequential fallback, and compare the two reports:
//!
//! ```text
//! cargo bench -p liealg
//! cargo bench -p liealg --no-default-features
//! ```

use criterion::{criterion_group, criterion_main, Criterion};

use liealg::reps;
use liealg::rules::{self, CaseId};
use liealg::{LieType, Weight};

fn bench_weight_multiset(c: &mut Criterion) {
    let e7: LieType = "E7".parse().unwrap();
    let adjoint = Weight::new(vec![1, 0, 0, 0, 0, 0, 0]);
    c.bench_function("weight_multiset E7 adjoint", |b| {
        b.iter(|| reps::weight_multiset(&e7, &adjoint).unwrap())
    });

    let a9: LieType = "A9".parse().unwrap();
    let w = Weight::new(vec![0, 0, 0, 0, 1, 0, 0, 0, 0]);
    c.bench_function("weight_multiset A9 middle fundamental", |b| {
        b.iter(|| reps::weight_multiset(&a9, &w).unwrap())
    });
}

fn bench_branch(c: &mut Criterion) {
    let spec = rules::catalog_spec(&CaseId::E8A4A4).unwrap();
    let adjoint = Weight::new(vec![0, 0, 0, 0, 0, 0, 0, 1]);
    c.bench_function("branch E8 adjoint -> A4A4", |b| {
        b.iter(|| reps::branch(spec.g(), &adjoint, spec.matrix(), spec.k()).unwrap())
    });

    let spec = rules::catalog_spec(&CaseId::AD(8)).unwrap();
    let mut v = vec![0i64; 15];
    v[0] = 1;
    v[1] = 1;
    let w = Weight::new(v);
    c.bench_function("branch SU(16) [1,1,0,...] -> SO(16)", |b| {
        b.iter(|| reps::branch(spec.g(), &w, spec.matrix(), spec.k()).unwrap())
    });
}

fn bench_tensor(c: &mut Criterion) {
    let g2: LieType = "G2".parse().unwrap();
    let a = Weight::new(vec![2, 1]);
    c.bench_function("tensor G2 [2,1] x [2,1]", |b| {
        b.iter(|| reps::tensor(&g2, &a, &a).unwrap())
    });
}

criterion_group!(benches, bench_weight_multiset, bench_branch, bench_tensor);
criterion_main!(benches);
