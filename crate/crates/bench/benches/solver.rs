use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use cvc_core::bounds::greedy_color_bound;
use cvc_core::graph::articulation_points;
use cvc_core::graph::corpus::{connected_bipartite, connected_gnp};
use cvc_core::{solve_cvc_bb, Graph, SolverConfig, VertexSet};

fn instances() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for seed in [0, 1] {
        let (g, s) = connected_gnp(60, 0.1, seed * 1000, 10_000).expect("connected draw");
        out.push((format!("gnp_60_p0.1_s{s}"), g));
        let (g, s) = connected_bipartite(20, 20, 0.2, seed * 1000, 10_000).expect("connected draw");
        out.push((format!("bip_20x20_p0.2_s{s}"), g));
    }
    out
}

fn solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_cvc_bb");
    group.sample_size(10);
    for (name, g) in instances() {
        for (label, cfg) in [
            ("default", SolverConfig::default()),
            ("rds", SolverConfig { use_russian_doll: true, ..SolverConfig::default() }),
            ("no_reuse", SolverConfig { coloring_reuse: false, ..SolverConfig::default() }),
        ] {
            group
                .bench_with_input(BenchmarkId::new(label, &name), &g, |b, g| b.iter(|| solve_cvc_bb(g, &cfg).unwrap()));
        }
    }
    group.finish();
}

fn primitives(c: &mut Criterion) {
    let (g, _) = connected_gnp(200, 0.03, 7, 10_000).expect("connected draw");
    c.bench_function("articulation_points_200", |b| b.iter(|| articulation_points(&g)));
    let all = VertexSet::full(g.n());
    c.bench_function("greedy_color_bound_200", |b| b.iter(|| greedy_color_bound(&g, &all)));
}

criterion_group!(benches, solver, primitives);
criterion_main!(benches);
