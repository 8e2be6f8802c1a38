use std::fs;
use std::path::PathBuf;

use clap::{Args, ValueEnum};
use cvc_core::mip::{build_parb, build_pstp, build_qr, default_roots, rooted_bidirected, write_lp, PSTP_CAP};
use cvc_core::Graph;

use crate::error::{code, CliError, CliResult};
use crate::read_graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Formulation {
    /// Two-root arborescence formulation.
    Parb,
    /// Subset-row (spanning tree) formulation; small graphs only.
    Pstp,
    /// Spanning arborescence rows of one root, without cover variables.
    Qr,
}

#[derive(Debug, Args)]
pub struct EmitArgs {
    /// DIMACS file, or `-` for stdin.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Formulation::Parb)]
    pub formulation: Formulation,
    /// Root vertex (1-based). Defaults to a vertex of maximum degree.
    #[arg(long)]
    pub root: Option<usize>,
    /// Second root (1-based), a neighbor of the root. Defaults to the root's
    /// neighbor of maximum degree.
    #[arg(long)]
    pub root2: Option<usize>,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn to_index(g: &Graph, v: usize, flag: &str) -> CliResult<usize> {
    if v == 0 || v > g.n() {
        return Err(CliError::input(format!("{flag} {v} is not a vertex (vertices are 1..={})", g.n())));
    }
    Ok(v - 1)
}

/// Picks `(r, r1)` from the flags, filling gaps with the defaults. Indices
/// are 0-based.
pub fn choose_roots(g: &Graph, root: Option<usize>, root2: Option<usize>) -> CliResult<(usize, usize)> {
    let (dr, _) = default_roots(g).ok_or_else(|| CliError::input("graph needs at least one edge"))?;
    let r = match root {
        Some(v) => to_index(g, v, "--root")?,
        None => dr,
    };
    let neighbors = g.neighbors(r);
    let r1 = match root2 {
        Some(v) => to_index(g, v, "--root2")?,
        None => *neighbors
            .iter()
            .max_by_key(|&&w| (g.degree(w), std::cmp::Reverse(w)))
            .ok_or_else(|| CliError::input(format!("root {} has no neighbors", r + 1)))?,
    };
    if !g.has_edge(r, r1) {
        let valid: Vec<String> = neighbors.iter().map(|w| (w + 1).to_string()).collect();
        return Err(CliError::input(format!(
            "--root2 {} is not adjacent to root {}; valid choices: {}",
            r1 + 1,
            r + 1,
            valid.join(", ")
        )));
    }
    Ok((r, r1))
}

pub fn emit_text(g: &Graph, args: &EmitArgs) -> CliResult<String> {
    let model = match args.formulation {
        Formulation::Parb => {
            let (r, r1) = choose_roots(g, args.root, args.root2)?;
            build_parb(g, r, r1)?
        }
        Formulation::Pstp => {
            if g.n() > PSTP_CAP {
                return Err(CliError::input(format!(
                    "the subset-row formulation has one row per dense vertex subset; refusing n = {} above the cap of {PSTP_CAP}",
                    g.n()
                )));
            }
            build_pstp(g)?
        }
        Formulation::Qr => {
            let r = match args.root {
                Some(v) => to_index(g, v, "--root")?,
                None => default_roots(g).map_or(0, |(r, _)| r),
            };
            build_qr(&rooted_bidirected(g, r)?)?
        }
    };
    Ok(write_lp(&model))
}

pub fn run(args: &EmitArgs) -> CliResult<i32> {
    let g = read_graph(&args.input)?;
    let text = emit_text(&g, args)?;
    match &args.out {
        Some(path) => fs::write(path, text).map_err(|e| CliError::io(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(code::OK)
}
