use std::hint::black_box;

use charp_bench::{cyclic4, fixed_locus_minors};
use charp_core::groebner::buchberger;
use charp_core::suite::Construction;
use charp_core::{Budget, CheckId, MonomialOrder, Suite};
use criterion::{criterion_group, criterion_main, Criterion};

fn groebner(c: &mut Criterion) {
    let minors = fixed_locus_minors();
    let cyc = cyclic4(5);
    let mut g = c.benchmark_group("buchberger");
    for (name, order) in [("degrevlex", MonomialOrder::DegRevLex), ("lex", MonomialOrder::Lex)] {
        g.bench_function(format!("minors/{name}"), |b| {
            b.iter(|| buchberger(black_box(&minors), order, Budget::default()).unwrap())
        });
        g.bench_function(format!("cyclic4/{name}"), |b| {
            b.iter(|| buchberger(black_box(&cyc), order, Budget::default()).unwrap())
        });
    }
    g.finish();
}

fn kernel(c: &mut Criterion) {
    let d = Construction::builtin().derivation;
    let mut g = c.benchmark_group("graded_kernel");
    for degree in [5u32, 10] {
        g.bench_function(format!("degree {degree}"), |b| {
            b.iter(|| d.graded_kernel(black_box(degree)).unwrap())
        });
    }
    g.finish();
}

fn suite(c: &mut Criterion) {
    let mut g = c.benchmark_group("suite");
    g.bench_function("run_all", |b| {
        b.iter(|| Suite::new(black_box(1), Budget::default()).run_all())
    });
    for id in [CheckId::C7, CheckId::C10] {
        g.bench_function(id.name(), |b| {
            b.iter(|| Suite::new(1, Budget::default()).run(black_box(id)))
        });
    }
    g.finish();
}

criterion_group!(benches, groebner, kernel, suite);
criterion_main!(benches);
