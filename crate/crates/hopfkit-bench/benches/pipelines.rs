use criterion::{criterion_group, criterion_main, Criterion};

use hopfkit_bench::{taft3_double, z36_bicharacter};
use hopfkit_core::hopf::verify_hopf;
use hopfkit_core::linalg::rank;
use hopfkit_core::qt::{drinfeld_map_matrix, equivalence_crosscheck, verify_qt};
use hopfkit_core::scalar::CycScalar;
use hopfkit_core::zoo;

fn bench_exact_rank(c: &mut Criterion) {
    let qt = z36_bicharacter();
    let m = drinfeld_map_matrix(&qt);
    c.bench_function("rank_36x36_cyclotomic", |b| b.iter(|| rank(&m)));
}

fn bench_double_construction(c: &mut Criterion) {
    let q = CycScalar::root_of_unity(3, 1);
    let t = zoo::taft(3, &q).unwrap();
    c.bench_function("drinfeld_double_taft3", |b| b.iter(|| zoo::drinfeld_double(&t)));
}

fn bench_verify_dim81(c: &mut Criterion) {
    let d = taft3_double();
    let mut g = c.benchmark_group("dim81");
    g.sample_size(10);
    g.bench_function("verify_hopf", |b| b.iter(|| verify_hopf(&d.h)));
    g.bench_function("verify_qt", |b| b.iter(|| verify_qt(&d)));
    g.finish();
}

fn bench_full_report(c: &mut Criterion) {
    let sw = zoo::sweedler();
    c.bench_function("crosscheck_sweedler", |b| b.iter(|| equivalence_crosscheck(&sw).unwrap()));
    let u = zoo::small_quantum_sl2(3).unwrap();
    let mut g = c.benchmark_group("uqsl2_3");
    g.sample_size(10);
    g.bench_function("crosscheck", |b| b.iter(|| equivalence_crosscheck(&u).unwrap()));
    g.finish();
}

criterion_group!(
    benches,
    bench_exact_rank,
    bench_double_construction,
    bench_verify_dim81,
    bench_full_report
);
criterion_main!(benches);
