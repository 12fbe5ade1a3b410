//! Argument definitions and the five subcommands.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ecclab::catalog::{build_family, FamilySpec};
use ecclab::eccentric::{eccentric_graph, eccentricity_matrix};
use ecclab::matrix::{determinant, MAX_MATRIX_SIDE};
use ecclab::product::{cartesian_product_capped, kronecker_product_graph_capped, ProductIndexMap, DEFAULT_PRODUCT_CAP};
use ecclab::tree::random_tree;
use ecclab::Graph;

use crate::checks::{run_suite, CheckOptions, Suite};
use crate::document::GraphDocument;
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "ecclab", version, about = "Eccentric graphs, eccentricity matrices and their checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a named family graph as a JSON document.
    Gen(GenArgs),
    /// Eccentric graph or eccentricity matrix of a graph document.
    Ecc(EccArgs),
    /// Cartesian or Kronecker product of graph documents.
    Product(ProductArgs),
    /// Run a check suite and write a JSON report.
    Check(CheckArgs),
    /// Exact determinant of the eccentricity matrix.
    Det(DetArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Star,
    DoubleStar,
    Complete,
    CompleteBipartite,
    HGraph,
    Grid,
    Hypercube,
    RandomTree,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    pub family: Family,
    pub params: Vec<usize>,
    /// Seed for `random-tree`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct EccArgs {
    pub input: PathBuf,
    /// Emit the eccentricity matrix (decimal strings).
    #[arg(long, conflicts_with = "graph")]
    pub matrix: bool,
    /// Emit the eccentric graph (default).
    #[arg(long)]
    pub graph: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProductKind {
    Cartesian,
    Kronecker,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    #[arg(required = true, num_args = 2..)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_enum)]
    pub kind: ProductKind,
    /// Largest allowed number of product vertices.
    #[arg(long, default_value_t = DEFAULT_PRODUCT_CAP)]
    pub cap: usize,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub suite: Suite,
    /// Enumerate every labeled tree up to this many vertices.
    #[arg(long)]
    pub trees_max_n: Option<usize>,
    /// Number of seeded random cases.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, env = "ECCLAB_JOBS")]
    pub jobs: Option<usize>,
    /// Where to write the JSON report; defaults to `<suite>-report.json`.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Adds one synthetic failing case, to exercise the failure path.
    #[arg(long, hide = true)]
    pub inject_failure: bool,
}

#[derive(Debug, Args)]
pub struct DetArgs {
    pub input: PathBuf,
}

/// Runs a parsed command and returns its exit code.
pub fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::Ecc(a) => ecc(a),
        Command::Product(a) => product(a),
        Command::Check(a) => check(a),
        Command::Det(a) => det(a),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

/// Builds the family graph and its display name.
pub fn generate(family: Family, params: &[usize], seed: u64) -> Result<(Graph, String), CliError> {
    let want = |k: usize| -> Result<(), CliError> {
        if params.len() == k {
            Ok(())
        } else {
            Err(CliError::Usage(format!("{family:?} takes {k} parameter(s), got {}", params.len())))
        }
    };
    let (spec, name) = match family {
        Family::RandomTree => {
            want(1)?;
            let t = random_tree(params[0], seed)?;
            return Ok((t.into_graph(), format!("T_{} (seed {seed})", params[0])));
        }
        Family::Path => (want(1).map(|_| FamilySpec::Path(params[0]))?, format!("P_{}", params[0])),
        Family::Cycle => (want(1).map(|_| FamilySpec::Cycle(params[0]))?, format!("C_{}", params[0])),
        Family::Star => (want(1).map(|_| FamilySpec::Star(params[0]))?, format!("S_{}", params[0])),
        Family::Complete => (want(1).map(|_| FamilySpec::Complete(params[0]))?, format!("K_{}", params[0])),
        Family::HGraph => (want(1).map(|_| FamilySpec::HGraph(params[0]))?, format!("H_{}", params[0])),
        Family::Hypercube => (want(1).map(|_| FamilySpec::Hypercube(params[0]))?, format!("Q_{}", params[0])),
        Family::DoubleStar => {
            want(2)?;
            (FamilySpec::DoubleStar(params[0], params[1]), format!("S_{{{},{}}}", params[0], params[1]))
        }
        Family::CompleteBipartite => {
            want(2)?;
            (FamilySpec::CompleteBipartite(params[0], params[1]), format!("K_{{{},{}}}", params[0], params[1]))
        }
        Family::Grid => {
            want(2)?;
            (FamilySpec::Grid(params[0], params[1]), format!("P_{} x P_{}", params[0], params[1]))
        }
    };
    Ok((build_family(spec)?, name))
}

fn gen(a: GenArgs) -> Result<u8, CliError> {
    let (g, name) = generate(a.family, &a.params, a.seed)?;
    emit(&GraphDocument::from_graph(&g, Some(name)).to_json(), a.output.as_deref())?;
    Ok(0)
}

fn ecc(a: EccArgs) -> Result<u8, CliError> {
    let doc = GraphDocument::load(&a.input)?;
    let g = doc.to_graph()?;
    let text = if a.matrix {
        if a.format == Format::Dot {
            return Err(CliError::Usage("matrices are only written as JSON".into()));
        }
        let m = eccentricity_matrix(&g)?;
        serde_json::to_string(&m.to_decimal_rows()).expect("strings serialize")
    } else {
        let e = eccentric_graph(&g)?;
        let mut out = GraphDocument::from_graph(&e, doc.name.as_ref().map(|n| format!("E({n})")));
        out.labels = doc.labels.clone();
        match a.format {
            Format::Json => out.to_json(),
            Format::Dot => out.to_dot(),
        }
    };
    emit(&text, a.output.as_deref())?;
    Ok(0)
}

fn product(a: ProductArgs) -> Result<u8, CliError> {
    let docs: Vec<GraphDocument> = a.inputs.iter().map(|p| GraphDocument::load(p)).collect::<Result<_, _>>()?;
    let graphs: Vec<Graph> = docs.iter().map(GraphDocument::to_graph).collect::<Result<_, _>>()?;
    let sizes: Vec<usize> = graphs.iter().map(Graph::num_vertices).collect();
    let map = ProductIndexMap::new(&sizes)?;
    if map.len() > a.cap {
        return Err(CliError::Input(format!("product has {} vertices, above the cap of {}", map.len(), a.cap)));
    }
    let g = match a.kind {
        ProductKind::Cartesian => {
            let refs: Vec<&Graph> = graphs.iter().collect();
            cartesian_product_capped(&refs, a.cap)?.0
        }
        ProductKind::Kronecker => {
            let mut acc = graphs[0].clone();
            for g in &graphs[1..] {
                acc = kronecker_product_graph_capped(&acc, g, a.cap)?;
            }
            acc
        }
    };
    let names: Vec<String> =
        docs.iter().enumerate().map(|(i, d)| d.name.clone().unwrap_or_else(|| format!("G{}", i + 1))).collect();
    let op = if a.kind == ProductKind::Cartesian { " □ " } else { " × " };
    let mut doc = GraphDocument::from_graph(&g, Some(names.join(op)));
    // vertex i is the row-major tuple, first factor most significant
    doc.labels = Some(
        (0..map.len())
            .map(|i| {
                let t: Vec<String> = map.decode(i).iter().map(usize::to_string).collect();
                format!("({})", t.join(","))
            })
            .collect(),
    );
    emit(&doc.to_json(), a.output.as_deref())?;
    Ok(0)
}

fn check(a: CheckArgs) -> Result<u8, CliError> {
    let jobs = a
        .jobs
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let opts = CheckOptions {
        trees_max_n: a.trees_max_n,
        samples: a.samples,
        seed: a.seed,
        jobs,
        inject_failure: a.inject_failure,
    };
    let report = run_suite(a.suite, &opts)?;
    let path = a.report.unwrap_or_else(|| PathBuf::from(format!("{}-report.json", a.suite.name())));
    let json = serde_json::to_string_pretty(&report).expect("reports serialize");
    std::fs::write(&path, json + "\n")
        .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    println!("{}", report.summary());
    println!("  report: {}", path.display());
    Ok(if report.passed() { 0 } else { 1 })
}

fn det(a: DetArgs) -> Result<u8, CliError> {
    let g = GraphDocument::load(&a.input)?.to_graph()?;
    if g.num_vertices() > MAX_MATRIX_SIDE {
        return Err(CliError::Input(format!("matrix side is capped at {MAX_MATRIX_SIDE}")));
    }
    let d = determinant(&eccentricity_matrix(&g)?)?;
    // exact decimal, nothing else on stdout
    print!("{d}");
    Ok(0)
}
