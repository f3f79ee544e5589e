use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use fc_core::app::fc_histogram;
use fc_core::canonical::canonical_word;
use fc_core::cayley::{build_length_table, DEFAULT_ELEMENT_CAP};
use fc_core::group::{make_group, GensetKind};

fn bench_length_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("length_table");
    for (m, p, n, kind) in [
        (2u32, 1u32, 4usize, GensetKind::CoxeterB),
        (3, 1, 4, GensetKind::Gm1n),
        (4, 4, 4, GensetKind::Classical),
    ] {
        let spec = make_group(m, p, n, kind).unwrap();
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("G({m},{p},{n})-{kind:?}")),
            &spec,
            |b, spec| b.iter(|| build_length_table(spec, DEFAULT_ELEMENT_CAP).unwrap()),
        );
    }
    group.finish();
}

fn bench_fc_histogram(c: &mut Criterion) {
    let mut group = c.benchmark_group("fc_histogram");
    for (m, p, n, kind) in [
        (5u32, 5u32, 3usize, GensetKind::Classical),
        (3, 3, 4, GensetKind::Affine),
        (1, 1, 6, GensetKind::SymStar),
    ] {
        let spec = make_group(m, p, n, kind).unwrap();
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("G({m},{p},{n})-{kind:?}")),
            &spec,
            |b, spec| b.iter(|| fc_histogram(spec, DEFAULT_ELEMENT_CAP).unwrap()),
        );
    }
    group.finish();
}

fn bench_canonical_words(c: &mut Criterion) {
    let spec = make_group(3, 1, 4, GensetKind::Gm1n).unwrap();
    let table = build_length_table(&spec, DEFAULT_ELEMENT_CAP).unwrap();
    let elements: Vec<_> = table.iter_by_length().cloned().collect();
    c.bench_function("canonical_words/G(3,1,4)-all", |b| {
        b.iter(|| {
            for g in &elements {
                canonical_word(&spec, g).unwrap();
            }
        })
    });
}

criterion_group!(
    benches,
    bench_length_table,
    bench_fc_histogram,
    bench_canonical_words
);
criterion_main!(benches);
