use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use zinbiel2::classify::{census, Relation, DEFAULT_BUDGET};
use zinbiel2::exact_linear::{Field, LinMap, TwoVectorSpace};
use zinbiel2::par;
use zinbiel2::random;
use zinbiel2::unified_product::check_datum_conditions;
use zinbiel2::zinbiel_core::{check_crossed_module, ZinbielTwoAlgebra};

fn modes() -> [(&'static str, bool); 2] {
    [("parallel", false), ("sequential", true)]
}

fn bench_census(c: &mut Criterion) {
    let f = Field::Prime(5);
    let z = ZinbielTwoAlgebra::from_two_vector_space(&LinMap::zero(f, 1, 0));
    let v = TwoVectorSpace::zero_map(f, 0, 1);
    let mut g = c.benchmark_group("census");
    g.sample_size(10);
    for (name, seq) in modes() {
        g.bench_function(BenchmarkId::new("gf5_z01_v01", name), |b| {
            par::set_sequential(seq);
            b.iter(|| census(&z, v.clone(), Relation::Equivalent, DEFAULT_BUDGET).unwrap())
        });
    }
    g.finish();
    par::set_sequential(false);
}

fn bench_axioms(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = Field::Prime(7);
    let e = random::two_algebra(f, 3, 4, &mut rng);
    let z = random::two_algebra(f, 2, 2, &mut rng);
    let d = random::datum(&z, TwoVectorSpace::zero_map(f, 2, 2), random::DatumShape::default(), 0.5, &mut rng);
    let mut g = c.benchmark_group("checks");
    for (name, seq) in modes() {
        par::set_sequential(seq);
        g.bench_function(BenchmarkId::new("crossed_module_3_4", name), |b| b.iter(|| check_crossed_module(&e).unwrap()));
        g.bench_function(BenchmarkId::new("datum_conditions", name), |b| b.iter(|| check_datum_conditions(&d).unwrap()));
    }
    g.finish();
    par::set_sequential(false);
}

criterion_group!(benches, bench_census, bench_axioms);
criterion_main!(benches);
