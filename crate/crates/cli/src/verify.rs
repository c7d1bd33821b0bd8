use crate::input::read_graph;
use crate::{Corpus, Failure, Format, VerifyArgs, EXIT_BOUND, EXIT_INPUT, EXIT_VERIFY_FAILED};
use idpoly::{labeled_graphs, random_corpus, verify_identity, Graph, IdentityKind, Limits, Outcome, Report};
use rayon::prelude::*;
use serde::Serialize;
use std::io::Write;

#[derive(Serialize)]
struct ReportRecord<'a> {
    command: &'static str,
    identity: &'a str,
    instance: &'a str,
    status: &'static str,
    value: Option<&'a str>,
    witness: Option<WitnessRecord<'a>>,
}

#[derive(Serialize)]
struct WitnessRecord<'a> {
    location: Option<&'a str>,
    lhs: &'a str,
    rhs: &'a str,
}

#[derive(Serialize)]
struct Summary {
    command: &'static str,
    identities: usize,
    reports: usize,
    passed: usize,
    skipped: usize,
    failed: usize,
}

/// All labeled simple graphs with at most `max_n` vertices.
pub fn exhaustive_corpus(max_n: usize) -> Vec<(String, Graph)> {
    (0..=max_n)
        .flat_map(|n| labeled_graphs(n).map(move |(mask, g)| (format!("n={n}/e={mask:#x}"), g)))
        .collect()
}

fn corpus(args: &VerifyArgs, limits: &Limits) -> Result<Vec<(String, Graph)>, Failure> {
    let too_big = |n: usize| {
        Failure::new(
            EXIT_BOUND,
            format!("corpus graphs with {n} vertices exceed the brute-force limit {}", limits.brute_force),
        )
    };
    match args.corpus {
        Corpus::Exhaustive => {
            if args.max_n > limits.brute_force || args.max_n > 8 {
                return Err(too_big(args.max_n));
            }
            Ok(exhaustive_corpus(args.max_n))
        }
        Corpus::Random => {
            if args.n > limits.brute_force {
                return Err(too_big(args.n));
            }
            let graphs = random_corpus(args.n, args.prob, args.seed, args.count)?;
            Ok(graphs
                .into_iter()
                .enumerate()
                .map(|(k, g)| (format!("random#{k}(n={},seed={})", args.n, args.seed), g))
                .collect())
        }
        Corpus::Files => {
            if args.inputs.is_empty() {
                return Err(Failure::new(EXIT_INPUT, "--corpus files needs --input PATH"));
            }
            args.inputs
                .iter()
                .map(|p| Ok((p.display().to_string(), read_graph(p)?)))
                .collect()
        }
    }
}

pub(crate) fn scope(name: &str) -> Result<Vec<IdentityKind>, Failure> {
    if name == "all" {
        return Ok(IdentityKind::ALL.to_vec());
    }
    name.split(',')
        .map(|s| s.trim().parse::<IdentityKind>().map_err(|e| Failure::new(EXIT_INPUT, e.to_string())))
        .collect()
}

/// Every report for one graph, in (kind, parameter) order.
pub fn reports_for(kinds: &[IdentityKind], g: &Graph, instance: &str, limits: &Limits) -> Vec<Report> {
    kinds
        .iter()
        .flat_map(|k| k.instances(g))
        .map(|id| verify_identity(&id, g, instance, limits))
        .collect()
}

pub(crate) fn run(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let limits = Limits::default();
    let kinds = scope(&args.scope)?;
    let graphs = corpus(args, &limits)?;
    let reports: Vec<Vec<Report>> = graphs
        .par_iter()
        .map(|(name, g)| reports_for(&kinds, g, name, &limits))
        .collect();

    let (mut passed, mut skipped, mut failed) = (0, 0, 0);
    for r in reports.iter().flatten() {
        match r.outcome {
            Outcome::Passed => passed += 1,
            Outcome::HypothesisUnmet(_) => skipped += 1,
            Outcome::Failed(_) => failed += 1,
        }
        match args.format {
            Format::Text => writeln!(out, "{r}")?,
            Format::Machine => writeln!(out, "{}", serde_json::to_string(&record(r)).unwrap())?,
        }
    }
    let summary = Summary {
        command: "verify",
        identities: kinds.len(),
        reports: passed + skipped + failed,
        passed,
        skipped,
        failed,
    };
    match args.format {
        Format::Text => writeln!(
            out,
            "summary: identities={} reports={} passed={} skipped={} failed={}",
            summary.identities, summary.reports, passed, skipped, failed
        )?,
        Format::Machine => writeln!(out, "{}", serde_json::to_string(&summary).unwrap())?,
    }
    Ok(if failed == 0 { 0 } else { EXIT_VERIFY_FAILED })
}

fn record(r: &Report) -> ReportRecord<'_> {
    let (status, witness) = match &r.outcome {
        Outcome::Passed => ("pass", None),
        Outcome::HypothesisUnmet(_) => ("skip", None),
        Outcome::Failed(w) => (
            "fail",
            Some(WitnessRecord {
                location: w.location.as_deref(),
                lhs: &w.lhs,
                rhs: &w.rhs,
            }),
        ),
    };
    ReportRecord {
        command: "verify",
        identity: &r.identity,
        instance: &r.instance,
        status,
        value: r.value.as_deref(),
        witness,
    }
}
