use criterion::{criterion_group, criterion_main, Criterion};
use hitt::ct::build_ct_catalog;
use hitt::tilting::TiltingContext;
use hitt::wide::masod_audit;
use hitt_bench::{eg1, eg1_algebra, eg2, eg2_algebra};

fn catalogs(c: &mut Criterion) {
    let a = eg1_algebra();
    c.bench_function("catalog eg1", |b| b.iter(|| build_ct_catalog(&a, 2, None).unwrap()));
    let a = eg2_algebra();
    c.bench_function("catalog eg2 d=4", |b| b.iter(|| build_ct_catalog(&a, 4, None).unwrap()));
}

fn tilting(c: &mut Criterion) {
    let cat = eg1();
    c.bench_function("support tilting eg1", |b| {
        b.iter(|| TiltingContext::new(&cat).unwrap().enumerate_proper_support_d_tilting(None).unwrap())
    });
}

fn audit(c: &mut Criterion) {
    for (name, cat) in [("masod eg1", eg1()), ("masod eg2", eg2())] {
        let ctx = TiltingContext::new(&cat).unwrap();
        let seqs = cat.d_exact_sequences().unwrap();
        let list = ctx.enumerate_proper_support_d_tilting(None).unwrap();
        c.bench_function(name, |b| b.iter(|| masod_audit(&ctx, &seqs, &list).unwrap()));
    }
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = catalogs, tilting, audit
}
criterion_main!(benches);
