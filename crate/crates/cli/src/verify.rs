//! `fdom verify`: brute-force cross-checks with a JSON summary on stdout.

use std::path::PathBuf;

use clap::{Args, ValueEnum};
use fdom::domination::{is_filtration_dominated, is_strongly_dominated};
use fdom::oracle::verify_collapse;
use fdom::oracle::{
    brute_force_filtration_dominated, brute_force_strong_dominator, brute_force_strongly_dominated_by,
    RandomGraphConfig,
};
use fdom::{collapse_once, io, BifilteredGraph, EdgeOrder, Exec, Mode, OrderKind};
use serde::Serialize;

use crate::report::write_atomic;
use crate::{input, CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Oracle {
    /// Grid brute force against the strong and full domination tests.
    Domination,
    /// Betti tables before and after collapse, both modes, all orders.
    Homology,
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Oracle::Domination)]
    pub oracle: Oracle,
    /// Number of random instances (ignored with --edges).
    #[arg(long, default_value_t = 200)]
    pub instances: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Check this graph instead of a random corpus.
    #[arg(long, value_name = "FILE")]
    pub edges: Option<PathBuf>,
    /// Compare --edges against this reduced graph (homology oracle only).
    #[arg(long, value_name = "FILE", requires = "edges")]
    pub reduced: Option<PathBuf>,
    /// Where the first failing instance is written.
    #[arg(long, value_name = "FILE", default_value = "fdom-counterexample.txt")]
    pub counterexample: PathBuf,
}

#[derive(Serialize)]
struct Summary {
    version: &'static str,
    oracle: Oracle,
    seed: u64,
    instances: usize,
    checks: usize,
    passed: bool,
    failure: Option<String>,
    counterexample: Option<PathBuf>,
}

/// Outcome for one instance: number of checks and the first failure.
struct Outcome {
    checks: usize,
    failure: Option<String>,
}

fn check_domination(graph: &BifilteredGraph) -> Outcome {
    let mut checks = 0;
    for e in graph.edge_iter() {
        checks += 1;
        let full = is_filtration_dominated(graph, e.u, e.v).expect("edge of graph");
        let strong = is_strongly_dominated(graph, e.u, e.v).expect("edge of graph");
        let expected = brute_force_filtration_dominated(graph, e);
        let failure = if full != expected {
            Some(format!("edge ({},{}): full test says {full}, brute force {expected}", e.u, e.v))
        } else if let Some(v) = strong.filter(|&v| !brute_force_strongly_dominated_by(graph, e, v) || !full) {
            Some(format!("edge ({},{}): reported strong dominator {v} is not one", e.u, e.v))
        } else if strong.is_none() && brute_force_strong_dominator(graph, e).is_some() {
            Some(format!("edge ({},{}): strong dominator missed", e.u, e.v))
        } else {
            None
        };
        if failure.is_some() {
            return Outcome { checks, failure };
        }
    }
    Outcome { checks, failure: None }
}

fn check_pair(original: &BifilteredGraph, reduced: &BifilteredGraph, what: &str) -> CliResult<Option<String>> {
    let report = verify_collapse(original, reduced).map_err(|e| match e {
        fdom::Error::SimplexBudget { .. } => CliError::Budget(e.to_string()),
        e => CliError::Failed(e.to_string()),
    })?;
    Ok(report.discrepancy.map(|d| {
        format!(
            "{what}: {} rank in dimension {} at ({}, {}) is {} before and {} after",
            d.kind, d.dimension, d.grade.s, d.grade.t, d.original, d.reduced
        )
    }))
}

fn check_homology(graph: &BifilteredGraph, seed: u64) -> CliResult<Outcome> {
    let mut checks = 0;
    for mode in [Mode::Strong, Mode::Full] {
        for kind in OrderKind::ALL {
            checks += 1;
            let (reduced, _) = collapse_once(graph, &EdgeOrder::new(kind, seed), mode);
            if let Some(f) = check_pair(graph, &reduced, &format!("{mode} {kind}"))? {
                return Ok(Outcome { checks, failure: Some(f) });
            }
        }
    }
    Ok(Outcome { checks, failure: None })
}

pub fn run(args: &VerifyArgs) -> CliResult {
    if args.reduced.is_some() && args.oracle != Oracle::Homology {
        return Err(CliError::Usage("--reduced requires --oracle homology".into()));
    }
    let corpus = match &args.edges {
        Some(path) => vec![input::read_edges(path)?],
        None => {
            let config = match args.oracle {
                Oracle::Domination => RandomGraphConfig::default(),
                Oracle::Homology => RandomGraphConfig::with_max_vertices(8),
            };
            config.corpus(args.seed, args.instances)
        }
    };

    let mut checks = 0;
    let mut failure = None;
    if let Some(path) = &args.reduced {
        let reduced = input::read_edges(path)?;
        checks = 1;
        if let Some(f) = check_pair(&corpus[0], &reduced, "reduced graph")? {
            failure = Some((f, reduced));
        }
    } else {
        let outcomes: Vec<CliResult<Outcome>> = Exec::default().map_slice(&corpus, |g| match args.oracle {
            Oracle::Domination => Ok(check_domination(g)),
            Oracle::Homology => check_homology(g, args.seed),
        });
        for (graph, outcome) in corpus.iter().zip(outcomes) {
            let outcome = outcome?;
            checks += outcome.checks;
            if let Some(f) = outcome.failure {
                failure = Some((f, graph.clone()));
                break;
            }
        }
    }

    let counterexample = match &failure {
        Some((_, graph)) => {
            write_atomic(&args.counterexample, |w| io::write_edge_list(graph, w).map_err(Into::into))?;
            Some(args.counterexample.clone())
        }
        None => None,
    };
    let summary = Summary {
        version: fdom::VERSION,
        oracle: args.oracle,
        seed: args.seed,
        instances: corpus.len(),
        checks,
        passed: failure.is_none(),
        failure: failure.as_ref().map(|(f, _)| f.clone()),
        counterexample,
    };
    println!("{}", serde_json::to_string_pretty(&summary).map_err(anyhow::Error::from)?);
    match failure {
        Some((f, _)) => Err(CliError::Failed(format!("verification failed: {f}"))),
        None => Ok(()),
    }
}
