use std::fs;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use cvc_core::graph::{bipartite_random, gnp_random, is_connected, write_dimacs};
use cvc_core::Graph;

use crate::error::{code, CliError, CliResult};
use crate::{density_tag, parse_probability};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Gnp,
    Bipartite,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub model: Model,
    /// Vertex count; the left side for `bipartite`.
    #[arg(long)]
    pub n: usize,
    /// Right side size, required for `bipartite`.
    #[arg(long)]
    pub n2: Option<usize>,
    #[arg(long, value_parser = parse_probability)]
    pub p: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Reject disconnected draws and retry with seed + 1, seed + 2, ...
    #[arg(long)]
    pub connected: bool,
    #[arg(long, default_value_t = 1000)]
    pub max_reseeds: u64,
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
}

/// File stem for a generated instance, e.g. `G_gnp_100_005_s1`.
pub fn instance_name(model: Model, n: usize, n2: usize, p: f64, seed: u64) -> String {
    match model {
        Model::Gnp => format!("G_gnp_{n}_{}_s{seed}", density_tag(p)),
        Model::Bipartite => format!("G_bip_{n}x{n2}_{}_s{seed}", density_tag(p)),
    }
}

pub fn draw(model: Model, n: usize, n2: usize, p: f64, seed: u64) -> Graph {
    match model {
        Model::Gnp => gnp_random(n, p, seed),
        Model::Bipartite => bipartite_random(n, n2, p, seed).graph,
    }
}

/// Draws an instance, reseeding while disconnected if asked. Returns the
/// graph and the seed that produced it.
pub fn generate(args: &GenArgs) -> CliResult<(Graph, u64)> {
    let n2 = match (args.model, args.n2) {
        (Model::Bipartite, Some(n2)) => n2,
        (Model::Bipartite, None) => return Err(CliError::usage("--model bipartite needs --n2")),
        (Model::Gnp, Some(_)) => return Err(CliError::usage("--n2 only applies to --model bipartite")),
        (Model::Gnp, None) => 0,
    };
    if args.n + n2 == 0 {
        return Err(CliError::usage("instance must have at least one vertex"));
    }
    let mut seed = args.seed;
    loop {
        let g = draw(args.model, args.n, n2, args.p, seed);
        if !args.connected || is_connected(&g) {
            return Ok((g, seed));
        }
        if seed - args.seed >= args.max_reseeds {
            return Err(CliError::input(format!(
                "no connected instance for seeds {}..={seed} (raise --max-reseeds)",
                args.seed
            )));
        }
        log::info!("seed {seed} gave a disconnected graph, trying {}", seed + 1);
        seed += 1;
    }
}

pub fn run(args: &GenArgs) -> CliResult<i32> {
    let (g, seed) = generate(args)?;
    let n2 = args.n2.unwrap_or(0);
    let name = instance_name(args.model, args.n, n2, args.p, seed);
    let generator = match args.model {
        Model::Gnp => format!("gnp n={} p={}", args.n, args.p),
        Model::Bipartite => format!("bipartite n1={} n2={n2} p={}", args.n, args.p),
    };
    let mut text = format!("c generator: {generator}\nc seed: {seed}\n");
    if seed != args.seed {
        text.push_str(&format!("c requested seed: {}\n", args.seed));
    }
    text.push_str(&write_dimacs(&g));
    fs::create_dir_all(&args.out).map_err(|e| CliError::io(format!("{}: {e}", args.out.display())))?;
    let path = args.out.join(format!("{name}.col"));
    fs::write(&path, text).map_err(|e| CliError::io(format!("{}: {e}", path.display())))?;
    println!("{}", path.display());
    Ok(code::OK)
}
