use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use prsk_core::diagrams::level_shapes;
use prsk_core::idempotents::seed;
use prsk_core::schur::{cauchy_check, CauchySetup};
use prsk_core::tableaux::{enumerate_syt, index_to_tableau};
use prsk_core::{Correspondence, CyclotomicNumber, Family, GroupParams, HookPartition, Level};

fn tableaux(c: &mut Criterion) {
    let top = Level::v(4, 4).unwrap();
    let shape = level_shapes(3, top)[0];
    c.bench_function("enumerate_syt V^4_4", |b| b.iter(|| enumerate_syt(3, black_box(top), shape).unwrap()));
    c.bench_function("index_to_tableau V^4_4", |b| {
        b.iter(|| (1..=54).map(|j| index_to_tableau(3, top, shape, black_box(j)).unwrap()).collect::<Vec<_>>())
    });
    let v33 = Level::v(3, 3).unwrap();
    let t = index_to_tableau(3, v33, HookPartition { k: 11, i: 5 }, 17).unwrap();
    c.bench_function("tableau index", |b| b.iter(|| black_box(&t).index()));
}

fn correspondence(c: &mut Criterion) {
    let gp = GroupParams::new(3, 3).unwrap();
    let h = Correspondence::full(gp);
    let all = gp.enumerate(false);
    c.bench_function("h inverse over G_3", |b| b.iter(|| all.iter().map(|&x| h.locate(x).unwrap()).collect::<Vec<_>>()));
    let coords = h.all_coords();
    c.bench_function("h over G_3", |b| b.iter(|| coords.iter().map(|x| h.element(x).unwrap()).collect::<Vec<_>>()));
}

fn arithmetic(c: &mut Criterion) {
    let n = 54;
    let x = &CyclotomicNumber::root_of_unity(n, 27, 5).unwrap() + &CyclotomicNumber::from_integer(n, 3);
    let y = &CyclotomicNumber::root_of_unity(n, 54, 7).unwrap() - &CyclotomicNumber::from_integer(n, 2);
    c.bench_function("cyclotomic mul Q(zeta_54)", |b| b.iter(|| black_box(&x) * black_box(&y)));
    let gp = GroupParams::new(3, 2).unwrap();
    let e = seed(&gp, Family::V, 2, 0).unwrap();
    c.bench_function("group algebra mul G_2", |b| b.iter(|| black_box(&e) * black_box(&e)));
}

fn cauchy(c: &mut Criterion) {
    let setup = CauchySetup { p: 3, num_x: 2, num_y: 2, degree_cap: 12 };
    c.bench_function("cauchy p=3 cap 12", |b| b.iter(|| cauchy_check(black_box(setup)).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = tableaux, correspondence, arithmetic, cauchy
}
criterion_main!(benches);
