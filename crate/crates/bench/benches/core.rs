use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use flagsieve::construct::{a11_on_pairs, seven_cycle_block};
use flagsieve::design::{balance_profile, block_orbit_design};
use flagsieve::perm::{alternating_group, symmetric_group, PermGroup};
use flagsieve::sieve::{
    divisor_parameter_scan, eliminate_253, factorial_factorization, intransitive_sieve, Group253,
};

fn chain_order(c: &mut Criterion) {
    let a11 = a11_on_pairs().unwrap();
    c.bench_function("chain order A11 on 55 points", |b| {
        b.iter(|| PermGroup::new(55, a11.generators().to_vec()).unwrap().order().unwrap())
    });
    let s23 = symmetric_group(23).unwrap();
    c.bench_function("chain order S23", |b| {
        b.iter(|| PermGroup::new(23, s23.generators().to_vec()).unwrap().order().unwrap())
    });
}

fn c55_orbit(c: &mut Criterion) {
    let g = a11_on_pairs().unwrap();
    let block = seven_cycle_block().unwrap();
    let mut group = c.benchmark_group("c55");
    group.sample_size(10);
    group.bench_function("block orbit of 118800", |b| {
        b.iter(|| block_orbit_design(&g, black_box(&block)).unwrap())
    });
    group.bench_function("balance profile", |b| {
        b.iter(|| balance_profile(&g, black_box(&block)).unwrap())
    });
    group.finish();
}

fn divisor_scan(c: &mut Criterion) {
    let a23 = factorial_factorization(23, true).unwrap();
    let mut group = c.benchmark_group("divisor scan");
    group.sample_size(10);
    group.bench_function("|A23| at v=253", |b| {
        b.iter(|| divisor_parameter_scan(black_box(&a23), 253, 7).unwrap())
    });
    group.bench_function("eliminate 253 for A23", |b| b.iter(|| eliminate_253(Group253::A23).unwrap()));
    group.finish();
    c.bench_function("intransitive sieve to c=200", |b| b.iter(|| intransitive_sieve(200, 7).unwrap()));
    let a9 = alternating_group(9).unwrap();
    c.bench_function("chain order A9", |b| {
        b.iter(|| PermGroup::new(9, a9.generators().to_vec()).unwrap().order().unwrap())
    });
}

criterion_group!(benches, chain_order, c55_orbit, divisor_scan);
criterion_main!(benches);
