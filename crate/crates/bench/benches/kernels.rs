use criterion::{criterion_group, criterion_main, Criterion};

use symrep::{
    a_crystal, clear_mullineux_cache, crystal_graph, mullineux, p_regular_partitions_of, Oracle,
    OracleCaps, Partition, PrimeChar,
};

fn bench_oracle_dim(c: &mut Criterion) {
    let p = PrimeChar::new(2).unwrap();
    let la: Partition = "5,4".parse().unwrap();
    c.bench_function("dim D^(5,4) mod 2 (Gram rank, no cache)", |b| {
        b.iter(|| {
            let oracle = Oracle::new(OracleCaps::default());
            oracle.dim(&la, &p).unwrap()
        })
    });
}

fn bench_irreducible_action(c: &mut Criterion) {
    let p = PrimeChar::new(3).unwrap();
    let la: Partition = "4,2,1".parse().unwrap();
    c.bench_function("minimal_a of (4,2,1) mod 3 (action matrices)", |b| {
        b.iter(|| {
            let oracle = Oracle::new(OracleCaps::default());
            oracle.minimal_a(&la, &p).unwrap()
        })
    });
}

fn bench_mullineux_sweep(c: &mut Criterion) {
    let p = PrimeChar::new(3).unwrap();
    c.bench_function("mullineux over all 3-regular |λ| ≤ 12, cold cache", |b| {
        b.iter(|| {
            clear_mullineux_cache();
            let mut acc = 0u64;
            for n in 1..=12u32 {
                for la in p_regular_partitions_of(n, &p) {
                    acc += mullineux(&la, &p).unwrap().first() as u64;
                }
            }
            acc
        })
    });
}

fn bench_crystal(c: &mut Criterion) {
    let p = PrimeChar::new(3).unwrap();
    c.bench_function("crystal graph up to n = 12, p = 3", |b| {
        b.iter(|| crystal_graph(12, &p).unwrap().edges.len())
    });
    let la: Partition = "6,4,2,1".parse().unwrap();
    c.bench_function("a_crystal of (6,4,2,1) mod 3", |b| {
        b.iter(|| a_crystal(&la, &p).unwrap())
    });
}

criterion_group!(
    benches,
    bench_oracle_dim,
    bench_irreducible_action,
    bench_mullineux_sweep,
    bench_crystal
);
criterion_main!(benches);
