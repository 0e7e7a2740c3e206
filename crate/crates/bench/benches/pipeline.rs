use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use dlmkit_bench::sample_connected;
use dlmkit_core::enumerate::{canonical_form, enumerate_connected};
use dlmkit_core::linalg::{largest_root_of, numeric_eigenvalues, squarefree_decompose, ExactSpectrum};
use dlmkit_core::spectra::distance_laplacian;
use dlmkit_core::verify::{classify_sweep, Corpus, GraphRecord, SweepOptions};

fn exact_linalg(c: &mut Criterion) {
    let graphs = sample_connected(9, 2611);
    let matrices: Vec<_> = graphs.iter().map(|g| distance_laplacian(g).unwrap()).collect();
    let polys: Vec<_> = matrices.iter().map(|m| m.char_poly()).collect();

    let mut group = c.benchmark_group("exact-linalg-n9");
    group.bench_function("char_poly", |b| {
        b.iter(|| {
            for m in &matrices {
                black_box(m.char_poly());
            }
        })
    });
    group.bench_function("squarefree", |b| {
        b.iter(|| {
            for p in &polys {
                black_box(squarefree_decompose(p.as_poly()));
            }
        })
    });
    group.bench_function("largest_root", |b| {
        b.iter(|| {
            for p in &polys {
                black_box(largest_root_of(p.as_poly()));
            }
        })
    });
    group.bench_function("full_spectrum", |b| {
        b.iter(|| {
            for p in &polys {
                black_box(ExactSpectrum::from_char_poly(p));
            }
        })
    });
    group.bench_function("jacobi", |b| {
        b.iter(|| {
            for m in &matrices {
                black_box(numeric_eigenvalues(m).unwrap());
            }
        })
    });
    group.finish();
}

fn per_graph(c: &mut Criterion) {
    let graphs = sample_connected(9, 2611);
    let mut group = c.benchmark_group("per-graph-n9");
    group.bench_function("canonical_form", |b| {
        b.iter(|| {
            for g in &graphs {
                black_box(canonical_form(g).unwrap());
            }
        })
    });
    group.bench_function("sweep_record", |b| {
        b.iter(|| {
            for g in &graphs {
                black_box(GraphRecord::compute(g).unwrap());
            }
        })
    });
    group.finish();
}

fn whole_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    group.bench_function("enumerate_connected_7", |b| b.iter(|| black_box(enumerate_connected(7).unwrap())));
    group.bench_function("classify_sweep_7", |b| {
        b.iter_batched(
            SweepOptions::default,
            |opts| black_box(classify_sweep(Corpus::BuiltIn(7), &opts).unwrap()),
            BatchSize::SmallInput,
        )
    });
    group.finish();
}

criterion_group!(benches, exact_linalg, per_graph, whole_pipeline);
criterion_main!(benches);
