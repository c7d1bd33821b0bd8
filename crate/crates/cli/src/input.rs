use crate::{Failure, GenerateArgs, EXIT_INPUT};
use clap::Args;
use idpoly::edge_list::write_edge_list;
use idpoly::{generate as build, parse_edge_list, FamilySpec, Graph};
use std::io::Write;
use std::path::{Path, PathBuf};

/// `--family KIND` with its size parameters.
#[derive(Debug, Clone, Default, Args)]
pub struct FamilyArgs {
    /// edgeless, complete, complete-bipartite, path, cycle, star or random.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// First part size of a complete bipartite graph.
    #[arg(long)]
    pub p: Option<usize>,
    /// Second part size of a complete bipartite graph.
    #[arg(long)]
    pub q: Option<usize>,
    /// Edge probability of a random graph.
    #[arg(long, default_value_t = 0.5)]
    pub prob: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl FamilyArgs {
    pub fn spec(&self) -> Result<Option<FamilySpec>, Failure> {
        let Some(kind) = self.family.as_deref() else {
            return Ok(None);
        };
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| Failure::new(EXIT_INPUT, format!("--family {kind} needs --{name}")))
        };
        let spec = match kind {
            "edgeless" => FamilySpec::Edgeless { n: need(self.n, "n")? },
            "complete" => FamilySpec::Complete { n: need(self.n, "n")? },
            "complete-bipartite" => FamilySpec::CompleteBipartite {
                p: need(self.p, "p")?,
                q: need(self.q, "q")?,
            },
            "path" => FamilySpec::Path { n: need(self.n, "n")? },
            "cycle" => FamilySpec::Cycle { n: need(self.n, "n")? },
            "star" => FamilySpec::Star { n: need(self.n, "n")? },
            "random" => FamilySpec::Random {
                n: need(self.n, "n")?,
                prob: self.prob,
                seed: self.seed,
            },
            other => {
                return Err(Failure::new(EXIT_INPUT, format!("unknown family {other:?}")));
            }
        };
        spec.validate()?;
        Ok(Some(spec))
    }
}

/// Exactly one of `--input PATH` or a family.
#[derive(Debug, Clone, Default, Args)]
pub struct InputArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub family: FamilyArgs,
}

impl InputArgs {
    /// The graph and a short instance label.
    pub fn load(&self) -> Result<(Graph, String), Failure> {
        match (&self.input, self.family.spec()?) {
            (Some(path), None) => Ok((read_graph(path)?, path.display().to_string())),
            (None, Some(spec)) => Ok((build(&spec)?, spec.to_string())),
            (Some(_), Some(_)) => Err(Failure::new(
                EXIT_INPUT,
                "give either --input or --family, not both",
            )),
            (None, None) => Err(Failure::new(EXIT_INPUT, "no input: use --input or --family")),
        }
    }
}

pub fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))?;
    parse_edge_list(&text)
        .map_err(|e| Failure::new(EXIT_INPUT, format!("{}: {e}", path.display())))
}

pub fn generate(args: &GenerateArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let spec = args
        .family
        .spec()?
        .ok_or_else(|| Failure::new(EXIT_INPUT, "generate needs --family"))?;
    let edges = spec.edge_sequence()?;
    let text = write_edge_list(spec.vertex_count(), &edges, &[]);
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}
