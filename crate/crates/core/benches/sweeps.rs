//! Sequential versus rayon sweeps over independent exact checks.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dickson_core::dickson::{ff_is_permutation, PrimeFieldElem};
use dickson_core::ode::verify_lemma_third;
use dickson_core::sweep;

fn lemma_item(n: usize) -> bool {
    verify_lemma_third(n).unwrap()
}

fn permutation_item(p: u64) -> usize {
    let mut count = 0;
    for n in 1..=20 {
        for k in 0..=3 {
            for a in 1..p {
                let a = PrimeFieldElem::new(a as i64, p).unwrap();
                count += usize::from(ff_is_permutation(n, k, a).unwrap());
            }
        }
    }
    count
}

const PRIMES: [u64; 15] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];

fn lemma_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("lemma");
    group.sample_size(10);
    for n_max in [16usize, 32, 64] {
        let items: Vec<usize> = (1..=n_max).collect();
        group.bench_with_input(BenchmarkId::new("sequential", n_max), &items, |b, items| {
            b.iter(|| black_box(sweep::map_sequential(items.clone(), lemma_item)))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", n_max), &items, |b, items| {
            b.iter(|| black_box(sweep::map_parallel(items.clone(), lemma_item)))
        });
    }
    group.finish();
}

fn permutation_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("permutation");
    group.sample_size(10);
    let items = PRIMES.to_vec();
    group.bench_function("sequential", |b| {
        b.iter(|| black_box(sweep::map_sequential(items.clone(), permutation_item)))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(sweep::map_parallel(items.clone(), permutation_item)))
    });
    group.finish();
}

criterion_group!(benches, lemma_sweep, permutation_sweep);
criterion_main!(benches);
