use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use definetti_bench::{generic_spectrum, scaled_diagram};
use definetti_core::geometry::{convex_hull_2d, fk_image};
use definetti_core::partitions::Partition;
use definetti_core::tensor_oracle::{symmetric_mixture_gap, young_projector, SymmetricState};
use definetti_core::werner::{
    distance_to_twirled, partial_trace_coeffs_lr, partial_trace_coeffs_shifted, twirled_product, TwirlGrid,
    WernerState,
};
use definetti_core::numeric::rat;

fn routes(c: &mut Criterion) {
    let mut g = c.benchmark_group("partial_trace");
    for n in [8usize, 16, 32] {
        let (lambda, n) = scaled_diagram(n);
        g.bench_with_input(BenchmarkId::new("shifted", n), &lambda, |b, l| {
            b.iter(|| partial_trace_coeffs_shifted(black_box(l), n, 4, 3).unwrap())
        });
        if n <= 16 {
            g.bench_with_input(BenchmarkId::new("lr", n), &lambda, |b, l| {
                b.iter(|| partial_trace_coeffs_lr(black_box(l), n, 4, 3).unwrap())
            });
        }
    }
    g.finish();
}

fn twirl_and_distance(c: &mut Criterion) {
    let r = generic_spectrum();
    c.bench_function("twirled_product k=6 d=3", |b| b.iter(|| twirled_product(black_box(&r), 6, 3).unwrap()));
    let (lambda, n) = scaled_diagram(60);
    c.bench_function("distance_to_twirled n=60 k=4", |b| {
        b.iter(|| distance_to_twirled(black_box(&lambda), n, 4, &r).unwrap())
    });
}

fn grid(c: &mut Criterion) {
    let mut g = c.benchmark_group("grid");
    g.sample_size(10);
    g.bench_function("build k=2 d=5 R=60", |b| b.iter(|| TwirlGrid::new(2, 5, 60).unwrap()));
    let grid = TwirlGrid::new(2, 5, 60).unwrap();
    let target = WernerState::new(
        2,
        5,
        vec![(Partition::row_shape(2), rat(2, 5)), (Partition::new(vec![1, 1]).unwrap(), rat(3, 5))],
    )
    .unwrap();
    g.bench_function("minimize k=2 d=5 R=60", |b| b.iter(|| grid.minimize(black_box(&target)).unwrap()));
    g.bench_function("hull f^4 d=3 R=30", |b| {
        b.iter(|| {
            let cloud = fk_image(4, 3, 30, (Partition::row_shape(4), Partition::new(vec![2, 2]).unwrap())).unwrap();
            convex_hull_2d(&cloud.coordinates())
        })
    });
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    let lambda = Partition::new(vec![3, 2]).unwrap();
    g.bench_function("young_projector n=5 d=3", |b| b.iter(|| young_projector(black_box(&lambda), 5, 3).unwrap()));
    let psi = SymmetricState::random(8, 2, 1).unwrap();
    g.bench_function("mixture gap n=8 k=3 d=2", |b| b.iter(|| symmetric_mixture_gap(black_box(&psi), 3).unwrap()));
    g.finish();
}

criterion_group!(benches, routes, twirl_and_distance, grid, oracle);
criterion_main!(benches);
