use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use scarf_bench::{generic_ideal, generic_set};
use scarf_core::ideals::{betti_oracle, scarf_chain_complex};
use scarf_core::subdivision::realize;
use scarf_core::topology::reduced_homology;
use scarf_core::{enumerate_complex, ScaleGuards};

fn enumerate(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    for (n, count) in [(2, 20), (3, 12), (3, 24), (4, 12)] {
        let set = generic_set(n, count);
        g.bench_with_input(BenchmarkId::from_parameter(format!("n{n}_m{count}")), &set, |b, s| {
            b.iter(|| enumerate_complex(black_box(s), None))
        });
    }
    g.finish();
}

fn subdivide(c: &mut Criterion) {
    let mut g = c.benchmark_group("realize");
    for (n, count) in [(2, 20), (3, 8), (3, 16)] {
        let nb = enumerate_complex(&generic_set(n, count), None);
        g.bench_with_input(BenchmarkId::from_parameter(format!("n{n}_m{count}")), &nb, |b, nb| {
            b.iter(|| realize(black_box(nb)).unwrap())
        });
    }
    g.finish();
}

fn homology(c: &mut Criterion) {
    let mut g = c.benchmark_group("reduced_homology");
    for (n, count) in [(3, 12), (4, 12)] {
        let nb = enumerate_complex(&generic_set(n, count), None);
        g.bench_with_input(BenchmarkId::from_parameter(format!("n{n}_m{count}")), nb.complex(), |b, k| {
            b.iter(|| reduced_homology(black_box(k)))
        });
    }
    g.finish();
}

fn ideals(c: &mut Criterion) {
    let mut g = c.benchmark_group("ideals");
    g.sample_size(20);
    let guards = ScaleGuards::default();
    for (n, count) in [(3, 6), (3, 9)] {
        let ideal = generic_ideal(n, count);
        let id = format!("n{n}_m{count}");
        g.bench_with_input(BenchmarkId::new("scarf_complex", &id), &ideal, |b, i| {
            b.iter(|| scarf_chain_complex(black_box(i)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("lattice_oracle", &id), &ideal, |b, i| {
            b.iter(|| betti_oracle(black_box(i), &guards).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, enumerate, subdivide, homology, ideals);
criterion_main!(benches);
