use centralizer_bench::{dense, hidden_jordan, random_monic, rational_product};
use centralizer_core::equivalence::{quotient_algebras_isomorphic, verdict_from_reports};
use centralizer_core::factor::{factor, factor_x_pow_m_minus_1};
use centralizer_core::perm::{partitions, permutation_structure_report};
use centralizer_core::structure::structure_report;
use centralizer_core::{smith, Config, FieldSpec, Polynomial};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn smith_normal_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariant_factors");
    for field in [FieldSpec::rationals(), FieldSpec::prime(3).unwrap()] {
        for n in [6, 10, 14] {
            let m = dense(field, n, n as u64);
            group.bench_with_input(BenchmarkId::new(format!("dense/{field}"), n), &m, |b, m| {
                b.iter(|| smith::invariant_factors(black_box(m)).unwrap())
            });
        }
        let j = hidden_jordan(field, &[(0, 4), (1, 3), (0, 2), (1, 2), (2, 1)], 9);
        group.bench_function(BenchmarkId::new(format!("jordan/{field}"), j.n()), |b| {
            b.iter(|| structure_report(black_box(&j)).unwrap())
        });
    }
    group.finish();
}

fn factoring(c: &mut Criterion) {
    let mut group = c.benchmark_group("factor");
    let f = rational_product();
    group.bench_function("rational/degree14", |b| b.iter(|| factor(black_box(&f)).unwrap()));
    let sd = Polynomial::from_ints(FieldSpec::rationals(), &[1, 0, -10, 0, 1]);
    group.bench_function("rational/swinnerton_dyer", |b| b.iter(|| factor(black_box(&sd)).unwrap()));
    for (p, d) in [(2, 64), (101, 32)] {
        let g = random_monic(p, d, 1);
        group.bench_function(format!("F_{p}/degree{d}"), |b| b.iter(|| factor(black_box(&g)).unwrap()));
    }
    for m in [24u64, 60] {
        group.bench_function(format!("x^{m}-1/Q"), |b| {
            b.iter(|| factor_x_pow_m_minus_1(black_box(m), FieldSpec::rationals()).unwrap())
        });
    }
    group.finish();
}

fn decisions(c: &mut Criterion) {
    let mut group = c.benchmark_group("decide");
    let cfg = Config::default();
    let field = FieldSpec::prime(3).unwrap();
    let reports: Vec<_> = partitions(7)
        .iter()
        .map(|l| permutation_structure_report(l, field, &cfg).unwrap())
        .collect();
    group.bench_function("permutation_grid/n7/F_3", |b| {
        b.iter(|| {
            let mut count = 0;
            for a in &reports {
                for r in &reports {
                    count += verdict_from_reports(a, r, &cfg).unwrap().m_equivalent() as usize;
                }
            }
            count
        })
    });
    let q = FieldSpec::rationals();
    let p1 = Polynomial::from_ints(q, &[-2, 0, 1]);
    let p2 = Polynomial::from_ints(q, &[-1, -2, 1]);
    group.bench_function("quadratic_fields", |b| {
        b.iter(|| quotient_algebras_isomorphic(black_box(&p1), 1, black_box(&p2), 1).unwrap())
    });
    let c1 = Polynomial::from_ints(q, &[-2, 0, 0, 1]);
    let c2 = Polynomial::from_ints(q, &[-16, 0, 0, 1]);
    group.bench_function("cubic_fields", |b| {
        b.iter(|| quotient_algebras_isomorphic(black_box(&c1), 2, black_box(&c2), 2).unwrap())
    });
    group.finish();
}

criterion_group!(benches, smith_normal_form, factoring, decisions);
criterion_main!(benches);
