use addprod_bench::{fixtures, random_small};
use addprod_core::addchar::{additive_char_poly, expected_charpoly_signing, SigningMode};
use addprod_core::free::{free_convolution_right_edge, SpectralMeasure};
use addprod_core::poly::certify_real_rooted;
use addprod_core::presets::Preset;
use addprod_core::product::build_ball;
use addprod_core::search::{greedy_descent, RhoProvenance, SearchOptions};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn polynomials(c: &mut Criterion) {
    let mut g = c.benchmark_group("additive_char_poly");
    for (name, s) in fixtures() {
        g.bench_function(name, |b| b.iter(|| additive_char_poly(black_box(&s)).unwrap()));
    }
    g.finish();
    let s = random_small(3);
    c.bench_function("signing_expectation/random", |b| {
        b.iter(|| expected_charpoly_signing(black_box(&s), SigningMode::exact()).unwrap())
    });
    let p = additive_char_poly(&Preset::C3C2C2.sum_graph()).unwrap();
    c.bench_function("sturm_certify/c3c2c2", |b| b.iter(|| certify_real_rooted(black_box(&p)).unwrap()));
}

fn balls(c: &mut Criterion) {
    let s = Preset::T3.sum_graph();
    c.bench_function("ball/t3/radius10", |b| b.iter(|| build_ball(black_box(&s), 10).unwrap()));
}

fn free(c: &mut Criterion) {
    let ms = vec![SpectralMeasure::c4(); 3];
    c.bench_function("free_edge/c4c4c4", |b| b.iter(|| free_convolution_right_edge(black_box(&ms)).unwrap()));
}

fn search(c: &mut Criterion) {
    let s = Preset::T3.sum_graph();
    let opts = SearchOptions::default();
    let mut g = c.benchmark_group("greedy");
    g.sample_size(10);
    g.bench_function("t3/N2", |b| {
        b.iter(|| greedy_descent(black_box(&s), 2, 8f64.sqrt(), RhoProvenance::User, &opts).unwrap())
    });
    g.finish();
}

criterion_group!(benches, polynomials, balls, free, search);
criterion_main!(benches);
