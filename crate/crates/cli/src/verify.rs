use clap::{Args, ValueEnum};
use cvc_core::graph::corpus::{connected_corpus, CorpusSpec, Instance};
use cvc_core::graph::write_dimacs;
use cvc_core::mip::{
    build_digraph, build_parb_on, default_roots, parb_counterexample_for, pstp_counterexample, MipModel, RootedDigraph,
    PARB_VERIFY_CAP, PSTP_CAP,
};
use cvc_core::{brute_force_cvc, check_cvc, solve_cvc_bb, Graph, SolverConfig};

use crate::error::{code, CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Two-root formulation against the definition, every vertex subset.
    Parb,
    /// Subset-row formulation against the definition, every vertex subset.
    Pstp,
    /// Branch and bound (plain and Russian doll) against brute force.
    Bb,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    pub suite: Suite,
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    #[arg(long, default_value_t = 100)]
    pub instances: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct Failure {
    pub instance: String,
    pub graph: Graph,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    /// Failing instance with the fewest vertices, then edges.
    pub fn minimal(&self) -> Option<&Failure> {
        self.failures.iter().min_by_key(|f| (f.graph.n(), f.graph.m()))
    }
}

pub type ParbBuilder<'a> = dyn Fn(&Graph, &RootedDigraph) -> cvc_core::Result<MipModel> + 'a;

pub fn corpus(max_n: usize, instances: usize, seed: u64) -> Vec<Instance> {
    connected_corpus(&CorpusSpec::mixed(instances, 2, max_n, seed))
}

/// Checks a two-root model built by `builder` at the default roots of every instance.
pub fn parb_suite(corpus: &[Instance], builder: &ParbBuilder) -> SuiteReport {
    let mut failures = Vec::new();
    for inst in corpus {
        let g = &inst.graph;
        let (r, r1) = default_roots(g).expect("corpus graphs have edges");
        let outcome =
            build_digraph(g, r, r1).and_then(|dg| builder(g, &dg).and_then(|m| parb_counterexample_for(g, &dg, &m)));
        let detail = match outcome {
            Ok(None) => continue,
            Ok(Some(cx)) => format!(
                "roots ({}, {}): subset {:?} is_cvc={} but formulation says {:?}",
                r + 1,
                r1 + 1,
                cx.subset.iter().map(|v| v + 1).collect::<Vec<_>>(),
                cx.is_cvc,
                cx.in_formulation
            ),
            Err(e) => e.to_string(),
        };
        failures.push(Failure { instance: inst.name.clone(), graph: g.clone(), detail });
    }
    SuiteReport { suite: "parb", checked: corpus.len(), failures }
}

pub fn pstp_suite(corpus: &[Instance]) -> SuiteReport {
    let mut failures = Vec::new();
    for inst in corpus {
        let detail = match pstp_counterexample(&inst.graph) {
            Ok(None) => continue,
            Ok(Some(cx)) => format!(
                "subset {:?} is_cvc={} but formulation says {:?}",
                cx.subset.iter().map(|v| v + 1).collect::<Vec<_>>(),
                cx.is_cvc,
                cx.in_formulation
            ),
            Err(e) => e.to_string(),
        };
        failures.push(Failure { instance: inst.name.clone(), graph: inst.graph.clone(), detail });
    }
    SuiteReport { suite: "pstp", checked: corpus.len(), failures }
}

pub fn bb_suite(corpus: &[Instance]) -> SuiteReport {
    let plain = SolverConfig::default();
    let rds = SolverConfig { use_russian_doll: true, ..SolverConfig::default() };
    let mut failures = Vec::new();
    for inst in corpus {
        let g = &inst.graph;
        let check = || -> cvc_core::Result<Option<String>> {
            let (_, opt) = brute_force_cvc(g)?;
            for (label, cfg) in [("bb", &plain), ("rds", &rds)] {
                let rep = solve_cvc_bb(g, cfg)?;
                if rep.cover_size != opt || !check_cvc(g, &rep.cover).is_valid() {
                    return Ok(Some(format!("{label} found {} but the optimum is {opt}", rep.cover_size)));
                }
            }
            Ok(None)
        };
        let detail = match check() {
            Ok(None) => continue,
            Ok(Some(d)) => d,
            Err(e) => e.to_string(),
        };
        failures.push(Failure { instance: inst.name.clone(), graph: g.clone(), detail });
    }
    SuiteReport { suite: "bb", checked: corpus.len(), failures }
}

/// Prints a summary line and, on failure, the smallest counterexample as
/// DIMACS. Returns whether the suite passed.
pub fn print_report(report: &SuiteReport) -> bool {
    match report.minimal() {
        None => {
            println!("PASS {}: {} instances", report.suite, report.checked);
            true
        }
        Some(f) => {
            println!(
                "FAIL {}: {} of {} instances failed; smallest counterexample {}: {}",
                report.suite,
                report.failures.len(),
                report.checked,
                f.instance,
                f.detail
            );
            print!("c counterexample {}\nc {}\n{}", f.instance, f.detail, write_dimacs(&f.graph));
            false
        }
    }
}

pub fn run(args: &VerifyArgs) -> CliResult<i32> {
    if args.max_n < 2 {
        return Err(CliError::usage("--max-n must be at least 2"));
    }
    if args.instances == 0 {
        return Err(CliError::usage("--instances must be positive"));
    }
    let run_suite = |suite: Suite| -> CliResult<SuiteReport> {
        Ok(match suite {
            Suite::Parb => {
                if args.max_n > PARB_VERIFY_CAP {
                    return Err(CliError::usage(format!(
                        "--max-n above {PARB_VERIFY_CAP} is too large for the parb suite"
                    )));
                }
                parb_suite(&corpus(args.max_n, args.instances, args.seed), &|g, dg| build_parb_on(g, dg))
            }
            Suite::Pstp => {
                if args.max_n > PSTP_CAP {
                    return Err(CliError::usage(format!("--max-n above {PSTP_CAP} is too large for the pstp suite")));
                }
                pstp_suite(&corpus(args.max_n, args.instances, args.seed))
            }
            Suite::Bb => bb_suite(&corpus(args.max_n, args.instances, args.seed)),
            Suite::All => unreachable!(),
        })
    };
    let suites = match args.suite {
        Suite::All => vec![Suite::Parb, Suite::Pstp, Suite::Bb],
        s => vec![s],
    };
    let mut ok = true;
    for s in suites {
        ok &= print_report(&run_suite(s)?);
    }
    Ok(if ok { code::OK } else { code::VERIFY })
}
