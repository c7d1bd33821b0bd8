use crate::compute::parse_algorithm;
use crate::input::read_graph;
use crate::{BenchArgs, Failure, Format, EXIT_INPUT};
use idpoly::{generate, id_recursive_with, random_corpus, Algorithm, FamilySpec, Graph, Limits, PivotStrategy};
use serde::Serialize;
use std::io::Write;
use std::time::Instant;

#[derive(Serialize)]
struct BenchRecord<'a> {
    command: &'static str,
    instance: &'a str,
    algorithm: &'static str,
    n: usize,
    status: &'static str,
    reason: Option<String>,
    coefficients: Option<Vec<String>>,
    time_ms: Option<f64>,
    memo_entries: Option<usize>,
}

fn instances(args: &BenchArgs) -> Result<Vec<(String, Graph)>, Failure> {
    if !args.inputs.is_empty() {
        return args
            .inputs
            .iter()
            .map(|p| Ok((p.display().to_string(), read_graph(p)?)))
            .collect();
    }
    match args.family.as_ref().map(|f| f.spec()).transpose()?.flatten() {
        Some(FamilySpec::Random { n, prob, seed }) => Ok(random_corpus(n, prob, seed, args.count)?
            .into_iter()
            .enumerate()
            .map(|(k, g)| (format!("random#{k}(n={n},seed={seed})"), g))
            .collect()),
        Some(spec) => Ok(vec![(spec.to_string(), generate(&spec)?)]),
        None => Err(Failure::new(EXIT_INPUT, "bench needs --family or --input")),
    }
}

pub(crate) fn run(args: &BenchArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let algs = args
        .alg
        .split(',')
        .map(|s| parse_algorithm(s.trim()))
        .collect::<Result<Vec<Algorithm>, _>>()?;
    let limits = Limits::default();
    let graphs = instances(args)?;

    if args.format == Format::Text {
        writeln!(out, "{:<28} {:<20} {:>5} {:>12} {:>10}  status", "instance", "algorithm", "n", "time_ms", "memo")?;
    }
    for (name, g) in &graphs {
        for &alg in &algs {
            let row = bench_one(alg, g, name, &limits);
            match args.format {
                Format::Machine => writeln!(out, "{}", serde_json::to_string(&row).unwrap())?,
                Format::Text => {
                    let time = row.time_ms.map_or("-".to_string(), |t| format!("{t:.3}"));
                    let memo = row.memo_entries.map_or("-".to_string(), |m| m.to_string());
                    let status = match &row.reason {
                        Some(why) => format!("skipped ({why})"),
                        None => "ok".to_string(),
                    };
                    writeln!(out, "{:<28} {:<20} {:>5} {:>12} {:>10}  {status}", name, alg.name(), g.n(), time, memo)?;
                }
            }
        }
    }
    Ok(())
}

fn bench_one<'a>(alg: Algorithm, g: &Graph, name: &'a str, limits: &Limits) -> BenchRecord<'a> {
    let mut row = BenchRecord {
        command: "bench",
        instance: name,
        algorithm: alg.name(),
        n: g.n(),
        status: "skipped",
        reason: None,
        coefficients: None,
        time_ms: None,
        memo_entries: None,
    };
    if alg.size_limit(limits).is_some_and(|l| g.n() > l) {
        row.reason = Some(format!("n={} above limit", g.n()));
        return row;
    }
    if !g.is_loop_free() && !alg.accepts_loops() {
        row.reason = Some("loops present".into());
        return row;
    }
    let start = Instant::now();
    let poly = if alg == Algorithm::Recursive {
        let run = id_recursive_with(g, PivotStrategy::MaxDegree);
        row.memo_entries = Some(run.memo_entries);
        Ok(run.polynomial)
    } else {
        alg.run(g, limits)
    };
    let time_ms = start.elapsed().as_secs_f64() * 1e3;
    match poly {
        Ok(p) => {
            row.status = "ok";
            row.coefficients = Some(p.to_decimal_strings());
            row.time_ms = Some(time_ms);
        }
        Err(e) => row.reason = Some(e.to_string()),
    }
    row
}
