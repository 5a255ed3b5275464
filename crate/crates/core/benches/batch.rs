use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rootcert::batch::{compare_corpus, compare_corpus_seq, par_map, seq_map};
use rootcert::builder::sample_real_rooted;
use rootcert::conjecture::conjecture_check;
use rootcert::rational::rat;
use rootcert::Polynomial;

fn corpus(n: usize, count: u64) -> Vec<Polynomial> {
    (0..count)
        .map(|seed| sample_real_rooted(n, seed, &rat(1, 10)).expect("sampling"))
        .collect()
}

fn certify(c: &mut Criterion) {
    let mut group = c.benchmark_group("compare_corpus");
    group.sample_size(10);
    for n in [4usize, 5] {
        let polys = corpus(n, 64);
        group.bench_with_input(BenchmarkId::new("parallel", n), &polys, |b, p| {
            b.iter(|| compare_corpus(p))
        });
        group.bench_with_input(BenchmarkId::new("sequential", n), &polys, |b, p| {
            b.iter(|| compare_corpus_seq(p))
        });
    }
    group.finish();
}

fn conjecture(c: &mut Criterion) {
    let mut group = c.benchmark_group("conjecture");
    group.sample_size(10);
    let polys = corpus(5, 64);
    group.bench_function("parallel", |b| b.iter(|| par_map(&polys, conjecture_check)));
    group.bench_function("sequential", |b| {
        b.iter(|| seq_map(&polys, conjecture_check))
    });
    group.finish();
}

fn sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("sample_real_rooted");
    group.sample_size(10);
    let seeds: Vec<u64> = (0..32).collect();
    let margin = rat(1, 10);
    group.bench_function("parallel", |b| {
        b.iter(|| par_map(&seeds, |s| sample_real_rooted(5, *s, &margin)))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| seq_map(&seeds, |s| sample_real_rooted(5, *s, &margin)))
    });
    group.finish();
}

criterion_group!(benches, certify, conjecture, sampling);
criterion_main!(benches);
