use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use teamenum::families::{chain, RandomFormulas, RandomShape};
use teamenum::seeds::build_pair_seeds_with;
use teamenum::{enumerate, reduce, Algorithm, EnumConfig, Execution, ReducedFormula};

const MODES: [Execution; 2] = [Execution::Sequential, Execution::Parallel];

fn brute_filtering(c: &mut Criterion) {
    let rf = reduce(&chain(4).unwrap()).unwrap();
    let mut group = c.benchmark_group("brute_chain4");
    for exec in MODES {
        let mut cfg = EnumConfig::new(Algorithm::Brute).with_max_size(8);
        cfg.execution = exec;
        group.bench_function(BenchmarkId::from_parameter(format!("{exec:?}")), |b| {
            b.iter(|| enumerate(black_box(&rf), &cfg).unwrap().count())
        });
    }
    group.finish();
}

fn pair_seeds(c: &mut Criterion) {
    let mut group = c.benchmark_group("pair_seeds");
    for k in [8, 11] {
        let rf = reduce(&chain(k).unwrap()).unwrap();
        for exec in MODES {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), k), &rf, |b, rf| {
                b.iter(|| build_pair_seeds_with(black_box(rf), exec).unwrap().team_count())
            });
        }
    }
    group.finish();
}

fn formula_sweep(c: &mut Criterion) {
    let formulas: Vec<ReducedFormula> = RandomFormulas::new(7, RandomShape::default())
        .take(64)
        .map(|f| reduce(&f).unwrap())
        .collect();
    let mut group = c.benchmark_group("sweep_64_random");
    for exec in MODES {
        group.bench_function(BenchmarkId::from_parameter(format!("{exec:?}")), |b| {
            b.iter(|| {
                let counts = exec.map(formulas.iter().collect(), |rf| {
                    enumerate(rf, &EnumConfig::new(Algorithm::Orbit).with_max_size(6))
                        .unwrap()
                        .count()
                });
                counts.into_iter().sum::<usize>()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, brute_filtering, pair_seeds, formula_sweep);
criterion_main!(benches);
