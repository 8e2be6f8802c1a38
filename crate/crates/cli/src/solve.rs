use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, ValueEnum};
use cvc_core::{
    brute_force_cvc, check_cvc, russian_doll_solve, solve_cvc_bb, Graph, SolveStatus, SolverConfig, VertexSet,
};
use serde::Serialize;

use crate::bench::{write_csv, BenchRecord};
use crate::error::{code, CliError, CliResult};
use crate::{parse_seconds, read_graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Bb,
    Rds,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// DIMACS file, or `-` for stdin.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Algo::Bb)]
    pub algo: Algo,
    /// Seconds; the best cover found so far is reported when it expires.
    #[arg(long, env = "CVC_TIME_LIMIT", value_parser = parse_seconds)]
    pub time_limit: Option<Duration>,
    #[arg(long)]
    pub no_warm_start: bool,
    #[arg(long)]
    pub no_bipartite_bound: bool,
    #[arg(long)]
    pub no_coloring_reuse: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Machine-readable solve result. Vertices are 1-based as in DIMACS.
#[derive(Debug, Clone, Serialize)]
pub struct SolveOutput {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub solver: &'static str,
    pub cvc: usize,
    pub cover: Vec<usize>,
    pub nodes: u64,
    pub time_s: f64,
    pub status: &'static str,
    /// Largest possible stable-set side; `n - cvc` when optimal.
    pub best_bound: usize,
}

impl SolveArgs {
    pub fn config(&self) -> SolverConfig {
        SolverConfig {
            time_limit: self.time_limit,
            use_russian_doll: self.algo == Algo::Rds,
            use_bipartite_bound: !self.no_bipartite_bound,
            coloring_reuse: !self.no_coloring_reuse,
            warm_start: !self.no_warm_start,
        }
    }
}

pub fn solve_graph(name: &str, g: &Graph, algo: Algo, cfg: &SolverConfig) -> CliResult<SolveOutput> {
    let started = Instant::now();
    let (cover, nodes, status, best_bound): (VertexSet, u64, SolveStatus, usize) = match algo {
        Algo::Oracle => {
            let (cover, size) = brute_force_cvc(g)?;
            (cover, 0, SolveStatus::Optimal, g.n() - size)
        }
        Algo::Bb => {
            let rep = solve_cvc_bb(g, cfg)?;
            (rep.cover, rep.node_count, rep.status, rep.best_bound)
        }
        Algo::Rds => {
            let rep = russian_doll_solve(g, cfg)?;
            (rep.cover, rep.node_count, rep.status, rep.best_bound)
        }
    };
    let time_s = started.elapsed().as_secs_f64();
    if !check_cvc(g, &cover).is_valid() {
        return Err(CliError { code: code::VERIFY, message: format!("{name}: solver returned an invalid cover") });
    }
    Ok(SolveOutput {
        name: name.to_string(),
        n: g.n(),
        m: g.m(),
        solver: match algo {
            Algo::Bb => "bb",
            Algo::Rds => "rds",
            Algo::Oracle => "oracle",
        },
        cvc: cover.len(),
        cover: cover.iter().map(|v| v + 1).collect(),
        nodes,
        time_s,
        status: status.as_str(),
        best_bound,
    })
}

pub fn run(args: &SolveArgs) -> CliResult<i32> {
    let g = read_graph(&args.input)?;
    let name = args.input.file_stem().map_or("stdin".into(), |s| s.to_string_lossy().into_owned());
    let out = solve_graph(&name, &g, args.algo, &args.config())?;
    match args.format {
        Format::Text => {
            println!("instance: {} (n={}, m={})", out.name, out.n, out.m);
            println!("cvc: {}", out.cvc);
            let cover: Vec<String> = out.cover.iter().map(|v| v.to_string()).collect();
            println!("cover: {}", cover.join(" "));
            println!("nodes: {}", out.nodes);
            println!("time_s: {:.6}", out.time_s);
            println!("status: {}", out.status);
        }
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
        Format::Csv => {
            let record = BenchRecord {
                name: out.name.clone(),
                n: out.n,
                m: out.m,
                vc: None,
                cvc: Some(out.cvc),
                solver: out.solver.to_string(),
                time_s: (out.time_s * 1e6).round() / 1e6,
                nodes: Some(out.nodes),
                status: out.status.to_string(),
                seed: None,
            };
            write_csv(std::io::stdout(), &[record])?;
        }
    }
    Ok(if out.status == SolveStatus::TimeLimit.as_str() { code::TIME_LIMIT } else { code::OK })
}
