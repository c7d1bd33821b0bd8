use crate::{ComputeArgs, Failure, Format, EXIT_INPUT, EXIT_MISMATCH};
use idpoly::{Algorithm, Graph, Limits, Polynomial};
use serde::Serialize;
use std::io::Write;
use std::time::Instant;

/// One machine-readable output line.
#[derive(Debug, Serialize)]
pub(crate) struct Record<'a> {
    pub command: &'a str,
    pub instance: &'a str,
    pub algorithm: &'a str,
    pub n: usize,
    pub coefficients: Vec<String>,
    /// Lowest degree with a nonzero coefficient; null for the zero polynomial.
    pub id_number: Option<usize>,
    /// `id(G, 1)` as a decimal string.
    pub mis_count: String,
    pub time_ms: f64,
}

pub(crate) fn limits_with(max_n: Option<usize>) -> Limits {
    match max_n {
        Some(m) => Limits {
            brute_force: m,
            subset_sum: m,
        },
        None => Limits::default(),
    }
}

pub(crate) fn parse_algorithm(name: &str) -> Result<Algorithm, Failure> {
    name.parse::<Algorithm>()
        .map_err(|e| Failure::new(EXIT_INPUT, e.to_string()))
}

/// Runs `alg` on `g`, rejecting loop-bearing inputs for the simple-graph
/// algorithms before any work is done.
pub(crate) fn timed(alg: Algorithm, g: &Graph, limits: &Limits) -> Result<(Polynomial, f64), Failure> {
    if !g.is_loop_free() && !alg.accepts_loops() {
        return Err(Failure::new(
            EXIT_MISMATCH,
            format!("{alg} needs a loop-free graph; use brute or recursive"),
        ));
    }
    let start = Instant::now();
    let p = alg.run(g, limits)?;
    Ok((p, start.elapsed().as_secs_f64() * 1e3))
}

pub(crate) fn run(args: &ComputeArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let alg = parse_algorithm(&args.alg)?;
    let (g, instance) = args.input.load()?;
    let limits = limits_with(args.max_n);
    let (p, time_ms) = timed(alg, &g, &limits)?;
    let record = Record {
        command: "compute",
        instance: &instance,
        algorithm: alg.name(),
        n: g.n(),
        coefficients: p.to_decimal_strings(),
        id_number: p.lowest_degree(),
        mis_count: p.evaluate_int(1).to_string(),
        time_ms,
    };
    match args.format {
        Format::Machine => writeln!(out, "{}", serde_json::to_string(&record).unwrap())?,
        Format::Text => {
            writeln!(out, "instance:    {}", record.instance)?;
            writeln!(out, "vertices:    {}", record.n)?;
            writeln!(out, "algorithm:   {}", record.algorithm)?;
            writeln!(out, "id(G,x)      = {p}")?;
            writeln!(out, "coefficients: {:?}", record.coefficients)?;
            match record.id_number {
                Some(i) => writeln!(out, "independent domination number: {i}")?,
                None => writeln!(out, "independent domination number: none (no valid set)")?,
            }
            writeln!(out, "maximal independent sets: {}", record.mis_count)?;
            writeln!(out, "time: {:.3} ms", record.time_ms)?;
        }
    }
    Ok(())
}
