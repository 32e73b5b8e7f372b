use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use ssplat_core::builders::{boolean, fig1, fig2, subspace_lattice};
use ssplat_core::ssp::{brute, ShatterEngine};
use ssplat_core::{enumerate_lattices, is_ssp, MobiusTable, Strategy};

fn construction(c: &mut Criterion) {
    c.bench_function("boolean(8)", |b| b.iter(|| boolean(black_box(8)).unwrap()));
    c.bench_function("subspace_lattice(2,4)", |b| {
        b.iter(|| subspace_lattice(black_box(2), black_box(4)).unwrap())
    });
    let l = subspace_lattice(2, 4).unwrap();
    c.bench_function("mobius subspace(2,4)", |b| {
        b.iter(|| MobiusTable::new(black_box(&l)))
    });
}

fn exhaustive(c: &mut Criterion) {
    let l = fig1();
    c.bench_function("brute fig1", |b| {
        b.iter(|| is_ssp(black_box(&l), Strategy::Brute, 1 << 20))
    });
    let b4 = boolean(4).unwrap();
    let engine = ShatterEngine::new(&b4).unwrap();
    c.bench_function("brute B4 all families", |b| {
        b.iter(|| brute::search(black_box(&engine), false))
    });
    let f2 = fig2();
    c.bench_function("certificate fig2", |b| {
        b.iter(|| is_ssp(black_box(&f2), Strategy::Certificate, 0))
    });
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("n=7", |b| {
        b.iter(|| enumerate_lattices(black_box(7)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, construction, exhaustive, enumeration);
criterion_main!(benches);
