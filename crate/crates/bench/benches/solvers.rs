use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use omdci::gen::{gen_graph, gen_random_instance, gen_x3c, GraphKind};
use omdci::reduce::{reduce_cohc, reduce_x3c, X3cInstance};
use omdci::{
    find_positive_solution, solve_omdci_max, solve_plus_fpt, solve_plus_fpt_with, FptOptions,
    SolveBudget, Variant,
};

fn fpt(c: &mut Criterion) {
    let sample = X3cInstance::new(2, vec![[1, 3, 5], [2, 5, 6], [2, 4, 6], [1, 2, 4]]).unwrap();
    let (inst, _) = reduce_x3c(&sample);
    c.bench_function("fpt/x3c_sample", |b| {
        b.iter(|| solve_plus_fpt(black_box(&inst)).unwrap())
    });

    let mut group = c.benchmark_group("fpt/threads");
    let (hard, _) = reduce_x3c(&gen_x3c(7, 3, 6, false).unwrap());
    for threads in [1, 2, 4] {
        group.bench_with_input(
            BenchmarkId::from_parameter(threads),
            &threads,
            |b, &threads| {
                b.iter(|| {
                    solve_plus_fpt_with(
                        &hard,
                        FptOptions {
                            threads,
                            max_nodes: None,
                        },
                    )
                    .unwrap()
                })
            },
        );
    }
    group.finish();
}

fn backtracking(c: &mut Criterion) {
    let mut group = c.benchmark_group("omdci_max/random");
    for d in [4, 6, 8] {
        let inst = gen_random_instance(3, Variant::Omdci, d, 2 * d, d, d).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(d), &inst, |b, inst| {
            b.iter(|| solve_omdci_max(inst, SolveBudget::unlimited()).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("cohc/decide");
    for (name, kind) in [
        ("P4", GraphKind::Path(4)),
        ("K1,3", GraphKind::Star(4)),
        ("C5", GraphKind::Cycle(5)),
    ] {
        let (inst, _) = reduce_cohc(&gen_graph(kind).unwrap()).unwrap();
        group.bench_function(name, |b| {
            b.iter(|| find_positive_solution(&inst, SolveBudget::unlimited()).unwrap())
        });
    }
    group.finish();
}

fn reductions(c: &mut Criterion) {
    let g = gen_graph(GraphKind::Complete(12)).unwrap();
    c.bench_function("reduce/cohc_k12", |b| {
        b.iter(|| reduce_cohc(black_box(&g)).unwrap())
    });
    let x = gen_x3c(1, 5, 20, true).unwrap();
    c.bench_function("reduce/x3c_q5_m20", |b| {
        b.iter(|| reduce_x3c(black_box(&x)))
    });
}

criterion_group!(benches, fpt, backtracking, reductions);
criterion_main!(benches);
