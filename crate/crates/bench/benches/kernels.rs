use criterion::{black_box, criterion_group, criterion_main, Criterion};

use spets_core::induction::{j_to_ef, springer_set_ge1n_constructive};
use spets_core::invariants::{fake_degree, families};
use spets_core::oracle::OracleGroup;
use spets_core::symbols::symbols_for_group;
use spets_core::{enumerate_multipartitions, GroupSpec, Multipartition, SymbolType, Weight};

fn symbols(c: &mut Criterion) {
    let group = GroupSpec::ge1n(3, 4).unwrap();
    let weight = Weight::spetsial(&group);
    c.bench_function("symbols G(3,1,4) type (3,1)", |b| {
        b.iter(|| {
            let syms = symbols_for_group(&group, SymbolType::new(3, 1), &weight).unwrap();
            black_box(syms.iter().filter(|s| s.is_distinguished()).count())
        })
    });
    let geen = GroupSpec::geen(4, 4).unwrap();
    c.bench_function("families G(4,4,4)", |b| {
        b.iter(|| black_box(families(&geen).unwrap().len()))
    });
}

fn fake_degrees(c: &mut Criterion) {
    let group = GroupSpec::ge1n(4, 4).unwrap();
    let orbits = enumerate_multipartitions(&group);
    c.bench_function("fake degrees G(4,1,4)", |b| {
        b.iter(|| {
            for o in &orbits {
                black_box(fake_degree(&group, &o.representative).unwrap());
            }
        })
    });
    let small = GroupSpec::ge1n(2, 3).unwrap();
    let mp = Multipartition::parse("1|1,1", Some(2)).unwrap();
    c.bench_function("oracle G(2,1,3)", |b| {
        b.iter(|| black_box(OracleGroup::new(&small, 5000).unwrap().fake_degree(&mp).unwrap()))
    });
}

fn induction(c: &mut Criterion) {
    let alpha = Multipartition::parse("3,2,2,1|4,3,1|6,5", None).unwrap();
    c.bench_function("j_to_ef G(3,1,27) to G(6,1,27)", |b| {
        b.iter(|| black_box(j_to_ef(&alpha, 2).unwrap()))
    });
    c.bench_function("constructive Springer set G(3,1,4) type (2,1)", |b| {
        b.iter(|| black_box(springer_set_ge1n_constructive(3, 4, SymbolType::new(2, 1)).unwrap()))
    });
}

criterion_group!(benches, symbols, fake_degrees, induction);
criterion_main!(benches);
