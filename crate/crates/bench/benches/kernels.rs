use std::hint::black_box;

use burge_core::burge::{bosonic_eval, BosonicSpec, TreeWalker};
use burge_core::fermionic::{eval_F, evaluate};
use burge_core::qcombinat::{b_kernel, g_poly, qbinomial};
use burge_core::verify::partition_oracle;
use burge_core::{BoundMode, CoprimePair, Family, FermionicSpec, RationalParam};
use criterion::{criterion_group, criterion_main, Criterion};

fn pair(a: i64, b: i64) -> CoprimePair {
    CoprimePair::new(a, b).unwrap()
}

fn kernels(c: &mut Criterion) {
    c.bench_function("qbinomial 40 20 base 2", |bch| {
        bch.iter(|| qbinomial(black_box(40), 20, 2))
    });
    c.bench_function("B 12 12 3 2", |bch| bch.iter(|| b_kernel(black_box(12), 12, 3, 2)));
    let (alpha, beta) = (RationalParam::new(4, 3).unwrap(), RationalParam::new(5, 3).unwrap());
    c.bench_function("G 20 20 4/3 5/3 3", |bch| {
        bch.iter(|| g_poly(black_box(20), 20, alpha, beta, 3))
    });
}

fn sums(c: &mut Criterion) {
    let p = pair(7, 3);
    c.bench_function("bosonic thmmain (7,3) L=M=8", |bch| {
        bch.iter(|| bosonic_eval(&BosonicSpec::thmmain(p), black_box(8), 8))
    });
    c.bench_function("F (7,3) L=M=8", |bch| bch.iter(|| eval_F(p, black_box(8), 8)));
    c.bench_function("tree walk F (7,3) L=M=8, cold", |bch| {
        bch.iter(|| TreeWalker::new().walk(p, Family::F, black_box(8), 8))
    });
    let large_l = FermionicSpec::new(pair(8, 1), Family::F, BoundMode::LimitL { m: 15 });
    c.bench_function("F large-L limit (8,1) M=15", |bch| {
        bch.iter(|| evaluate(black_box(&large_l)))
    });
    let series = FermionicSpec::new(pair(5, 2), Family::F, BoundMode::LimitBoth { order: 60 });
    c.bench_function("F series (5,2) to q^60", |bch| {
        bch.iter(|| evaluate(black_box(&series)))
    });
}

fn oracle(c: &mut Criterion) {
    c.bench_function("partition enumeration K=4 i=2 6x6", |bch| {
        bch.iter(|| partition_oracle(4, 2, black_box(6), 6, 1, 1))
    });
}

criterion_group!(benches, kernels, sums, oracle);
criterion_main!(benches);
