//! Benchmarks for graph-side work: block decomposition with chordless-cycle
//! counting, and the component-chain series for unions past the engine cap.

use criterion::{criterion_group, criterion_main, Criterion};

use cutideal_core::budget::Budget;
use cutideal_core::composer::composed_series;
use cutideal_core::graph::Graph;

/// A chain of `k` triangles glued vertex to vertex: a ring graph whose
/// recognition walks many blocks.
fn triangle_chain(k: usize) -> Graph {
    let mut g = Graph::cycle(3);
    for _ in 1..k {
        let joint = g.vertex_count();
        g = g.clique_sum(&Graph::cycle(3), &[(joint, 1)]).unwrap().graph;
    }
    g
}

fn recognition(c: &mut Criterion) {
    let chain = triangle_chain(7);
    c.bench_function("ring_graph_verdict/triangle_chain_7", |b| {
        b.iter(|| chain.ring_graph_verdict())
    });
    let k7 = Graph::complete(7);
    c.bench_function("ring_graph_verdict/k7", |b| b.iter(|| k7.ring_graph_verdict()));
}

fn chained_series(c: &mut Criterion) {
    let five_k2 = Graph::new(10, &[(1, 2), (3, 4), (5, 6), (7, 8), (9, 10)]).unwrap();
    let mut group = c.benchmark_group("composed_series");
    group.sample_size(10);
    group.bench_function("five_k2", |b| {
        b.iter(|| composed_series(&five_k2, &Budget::default()).unwrap())
    });
    group.finish();
}

criterion_group!(benches, recognition, chained_series);
criterion_main!(benches);
