use criterion::{black_box, criterion_group, criterion_main, Criterion};

use qha_core::coefficients::{tau_unchecked, unit_coefficient};
use qha_core::cyclic::{build_cocyclic, group_function_algebra, unit_algebra};
use qha_core::quasihopf::{cyclic_group_table, group_algebra, s3_table, sweedler_h4, twisted_dual_group_algebra, z2_cocycle};
use qha_core::{Biclosed, Category, CenterElement, Field, Flavor};

fn axioms(c: &mut Criterion) {
    let f = Field::Rationals;
    let s3 = group_algebra(f, &s3_table()).unwrap();
    let h4 = sweedler_h4(f);
    let tw = twisted_dual_group_algebra(f, &cyclic_group_table(2), &z2_cocycle(f)).unwrap();
    c.bench_function("check_all kS3", |b| b.iter(|| black_box(s3.check_all())));
    c.bench_function("check_all H4", |b| b.iter(|| black_box(h4.check_all())));
    c.bench_function("check_all twisted dual", |b| b.iter(|| black_box(tw.check_all())));
}

fn tau(c: &mut Criterion) {
    let f = Field::Rationals;
    for (name, h, flavor) in [
        ("H4", sweedler_h4(f), Flavor::HopfMu),
        (
            "twisted dual",
            twisted_dual_group_algebra(f, &cyclic_group_table(2), &z2_cocycle(f)).unwrap(),
            Flavor::QuasiTypeI,
        ),
    ] {
        let coeff = unit_coefficient(&h, flavor).unwrap();
        let cat = Category::quasi(h);
        let v = cat.regular_module();
        let vv = cat.tensor(&v, &v).unwrap().module;
        c.bench_function(&format!("tau regular⊗regular {name}"), |b| {
            b.iter(|| black_box(tau_unchecked(&cat, &coeff, &vv).unwrap()))
        });
    }
}

fn cocyclic(c: &mut Criterion) {
    let f = Field::prime(5).unwrap();
    let h = group_algebra(f, &cyclic_group_table(2)).unwrap();
    let coeff = unit_coefficient(&h, Flavor::HopfMu).unwrap();
    let e = CenterElement::new(Category::quasi(h), coeff).unwrap();
    let unit = unit_algebra(e.category()).unwrap();
    let fun = group_function_algebra(e.category(), &cyclic_group_table(2)).unwrap();
    c.bench_function("build_cocyclic A=k n=5", |b| b.iter(|| black_box(build_cocyclic(&e, &unit, 5).unwrap())));
    c.bench_function("build_cocyclic A=k^C2 n=4", |b| b.iter(|| black_box(build_cocyclic(&e, &fun, 4).unwrap())));
    let built = build_cocyclic(&e, &fun, 4).unwrap();
    c.bench_function("cyclic_cohomology A=k^C2 up to 3", |b| {
        b.iter(|| black_box(built.cyclic_cohomology(3).unwrap()))
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = axioms, tau, cocyclic
}
criterion_main!(benches);
