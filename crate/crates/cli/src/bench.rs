use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, ValueEnum};
use cvc_core::graph::is_connected;
use cvc_core::oracle::{brute_force_vc_capped, DEFAULT_CAP};
use cvc_core::{solve_vc_bb, Graph, SolveStatus, SolverConfig};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{code, CliError, CliResult};
use crate::gen::{draw, instance_name, Model};
use crate::parse_seconds;
use crate::solve::{solve_graph, Algo};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchSuite {
    Gnp,
    Bipartite,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchSolver {
    Bb,
    Oracle,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum, default_value_t = BenchSuite::Both)]
    pub suite: BenchSuite,
    /// Vertex count for `gnp`; size of each side for `bipartite`.
    #[arg(long)]
    pub n: usize,
    /// Edge probabilities. Defaults: 0.05 for `gnp`, 0.1,0.2,0.3,0.4,0.5 for `bipartite`.
    #[arg(long, value_delimiter = ',')]
    pub densities: Option<Vec<f64>>,
    #[arg(long, value_delimiter = ',', default_value = "0")]
    pub seeds: Vec<u64>,
    /// Per-run limit in seconds.
    #[arg(long, env = "CVC_TIME_LIMIT", value_parser = parse_seconds)]
    pub time_limit: Option<Duration>,
    #[arg(long, default_value_t = 1)]
    pub repeats: usize,
    #[arg(long, value_delimiter = ',', default_value = "bb")]
    pub solvers: Vec<BenchSolver>,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Instances solved concurrently. 1 gives sequential timing.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

/// One CSV row. Empty cells are written for missing values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub vc: Option<usize>,
    pub cvc: Option<usize>,
    pub solver: String,
    pub time_s: f64,
    pub nodes: Option<u64>,
    pub status: String,
    pub seed: Option<u64>,
}

pub const CSV_HEADER: &str = "name,n,m,vc,cvc,solver,time_s,nodes,status,seed";

pub fn write_csv<W: Write>(out: W, records: &[BenchRecord]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    if records.is_empty() {
        w.write_record(CSV_HEADER.split(',')).map_err(|e| CliError::io(e.to_string()))?;
    }
    for r in records {
        w.serialize(r).map_err(|e| CliError::io(e.to_string()))?;
    }
    w.flush().map_err(|e| CliError::io(e.to_string()))
}

#[derive(Debug, Clone)]
pub struct BenchInstance {
    pub name: String,
    pub graph: Graph,
    pub seed: u64,
}

pub fn instances(args: &BenchArgs) -> CliResult<Vec<BenchInstance>> {
    let mut out = Vec::new();
    let models: &[Model] = match args.suite {
        BenchSuite::Gnp => &[Model::Gnp],
        BenchSuite::Bipartite => &[Model::Bipartite],
        BenchSuite::Both => &[Model::Gnp, Model::Bipartite],
    };
    for &model in models {
        let densities = match (&args.densities, model) {
            (Some(d), _) => d.clone(),
            (None, Model::Gnp) => vec![0.05],
            (None, Model::Bipartite) => vec![0.1, 0.2, 0.3, 0.4, 0.5],
        };
        for &p in &densities {
            if !(0.0..=1.0).contains(&p) {
                return Err(CliError::usage(format!("density {p} is not in [0, 1]")));
            }
            for &seed in &args.seeds {
                out.push(BenchInstance {
                    name: instance_name(model, args.n, args.n, p, seed),
                    graph: draw(model, args.n, args.n, p, seed),
                    seed,
                });
            }
        }
    }
    Ok(out)
}

/// Stable-set side of the table: exhaustive when small, else the branch and
/// bound without connectivity pruning. `None` when that run times out.
pub fn vertex_cover_number(g: &Graph, time_limit: Option<Duration>) -> Option<usize> {
    if g.n() <= DEFAULT_CAP {
        return brute_force_vc_capped(g, DEFAULT_CAP).ok();
    }
    let cfg = SolverConfig { time_limit, ..SolverConfig::default() };
    let rep = solve_vc_bb(g, &cfg).ok()?;
    (rep.status == SolveStatus::Optimal).then_some(rep.cover_size)
}

fn bench_instance(inst: &BenchInstance, args: &BenchArgs) -> Vec<BenchRecord> {
    let g = &inst.graph;
    let row = |solver: &str| BenchRecord {
        name: inst.name.clone(),
        n: g.n(),
        m: g.m(),
        vc: None,
        cvc: None,
        solver: solver.to_string(),
        time_s: 0.0,
        nodes: None,
        status: String::new(),
        seed: Some(inst.seed),
    };
    let solver_name = |s: BenchSolver| match s {
        BenchSolver::Bb => "bb",
        BenchSolver::Oracle => "oracle",
    };
    if g.n() == 0 || !is_connected(g) {
        log::info!("{} is disconnected; skipped", inst.name);
        return args
            .solvers
            .iter()
            .map(|&s| BenchRecord { status: "disconnected".into(), ..row(solver_name(s)) })
            .collect();
    }
    let vc = vertex_cover_number(g, args.time_limit);
    let cfg = SolverConfig { time_limit: args.time_limit, ..SolverConfig::default() };
    let mut records = Vec::new();
    for &solver in &args.solvers {
        let mut rec = BenchRecord { vc, ..row(solver_name(solver)) };
        if solver == BenchSolver::Oracle && g.n() > DEFAULT_CAP {
            rec.status = "skipped".into();
            records.push(rec);
            continue;
        }
        let algo = if solver == BenchSolver::Bb { Algo::Bb } else { Algo::Oracle };
        let mut total = 0.0;
        let mut node_counts = Vec::new();
        let mut last = None;
        for _ in 0..args.repeats {
            match solve_graph(&inst.name, g, algo, &cfg) {
                Ok(out) => {
                    total += out.time_s;
                    node_counts.push(out.nodes);
                    last = Some(out);
                }
                Err(e) => {
                    rec.status = format!("error: {e}");
                    break;
                }
            }
        }
        if let Some(out) = last.filter(|_| node_counts.len() == args.repeats) {
            rec.cvc = Some(out.cvc);
            rec.time_s = (total / args.repeats as f64 * 1e6).round() / 1e6;
            rec.nodes = node_counts.iter().max().copied();
            rec.status = out.status.to_string();
            if node_counts.iter().any(|&c| c != node_counts[0]) {
                log::warn!("{}: node counts differ across repeats: {node_counts:?}", inst.name);
                rec.status = format!("{}_nodes_mismatch", out.status);
            }
        }
        records.push(rec);
    }
    records
}

pub fn bench(args: &BenchArgs) -> CliResult<Vec<BenchRecord>> {
    if args.repeats == 0 || args.jobs == 0 {
        return Err(CliError::usage("--repeats and --jobs must be positive"));
    }
    if args.solvers.is_empty() || args.seeds.is_empty() {
        return Err(CliError::usage("--solvers and --seeds must not be empty"));
    }
    let list = instances(args)?;
    let pool =
        rayon::ThreadPoolBuilder::new().num_threads(args.jobs).build().map_err(|e| CliError::io(e.to_string()))?;
    let rows: Vec<Vec<BenchRecord>> = pool.install(|| list.par_iter().map(|inst| bench_instance(inst, args)).collect());
    Ok(rows.into_iter().flatten().collect())
}

pub fn run(args: &BenchArgs) -> CliResult<i32> {
    let file = match &args.out {
        Some(path) => Some(File::create(path).map_err(|e| CliError::io(format!("{}: {e}", path.display())))?),
        None => None,
    };
    let records = bench(args)?;
    match file {
        Some(f) => write_csv(f, &records)?,
        None => write_csv(std::io::stdout(), &records)?,
    }
    Ok(code::OK)
}
