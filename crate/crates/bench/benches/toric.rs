//! Benchmarks for the toric pipeline: saturation plus completion on cycle
//! cut ideals, semigroup enumeration, and the Hilbert-series recursion.

use criterion::{criterion_group, criterion_main, Criterion};

use cutideal_core::budget::Budget;
use cutideal_core::cuts::cut_exponent_matrix;
use cutideal_core::engine::{toric_ideal, MonomialOrder};
use cutideal_core::graph::Graph;
use cutideal_core::hilbert::{semigroup_hilbert, HilbertSeries};

fn toric_cycles(c: &mut Criterion) {
    let mut group = c.benchmark_group("toric_ideal");
    group.sample_size(10);
    for n in [4usize, 5] {
        let m = cut_exponent_matrix(&Graph::cycle(n)).unwrap();
        let order = MonomialOrder::degrevlex(m.cols());
        group.bench_function(format!("cycle_{n}"), |b| {
            b.iter(|| toric_ideal(&m, &order, &Budget::default()).unwrap())
        });
    }
    group.finish();
}

fn semigroup_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("semigroup_hilbert");
    for n in [5usize, 6] {
        let m = cut_exponent_matrix(&Graph::cycle(n)).unwrap();
        group.bench_function(format!("cycle_{n}_degree_3"), |b| {
            b.iter(|| semigroup_hilbert(&m, 3))
        });
    }
    group.finish();
}

fn series_from_basis(c: &mut Criterion) {
    let m = cut_exponent_matrix(&Graph::cycle(6)).unwrap();
    let gb = toric_ideal(&m, &MonomialOrder::degrevlex(m.cols()), &Budget::default()).unwrap();
    c.bench_function("hilbert_series/hexagon_basis", |b| {
        b.iter(|| HilbertSeries::from_groebner(&gb))
    });
}

criterion_group!(benches, toric_cycles, semigroup_counts, series_from_basis);
criterion_main!(benches);
