//! The `homcount` command line. [`run`] parses arguments, executes one
//! subcommand and returns the process exit code: 0 on success, 1 for usage
//! and configuration mistakes, 2 when data fails to load or validate.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::dataset::{
    find_tud_name, gen_bipartite_er, gen_csl, load_paulus, parse_tud, paulus_from_str, write_tud, BipartiteConfig,
    CslConfig, DatasetBundle, PaulusConfig, PAULUS_FIXTURE,
};
use crate::embed::{default_phis, embed_dataset, read_embedding, write_embedding, EmbedConfig, FamilySpec};
use crate::error::{Error, Result};
use crate::eval::{bench_runtime, cross_validate, cross_validate_matrix, tree_scaling, CvConfig, LogRegConfig};
use crate::graph::Graph;
use crate::hom::{self, Algorithm, PhiFunction, VertexWeights};
use crate::pattern::{
    enumerate_cycles, enumerate_paths, enumerate_stars, enumerate_trees, load_custom_patterns, parse_graph_blocks,
    Pattern,
};

#[derive(Debug, Parser)]
#[command(name = "homcount", version, about = "Homomorphism counts and graph embeddings")]
struct Cli {
    /// Seed for every random choice (generators, permutations, folds).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for embedding and cross-validation (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List a pattern catalog as JSON.
    Patterns(PatternsArgs),
    /// Count homomorphisms from one pattern into one graph.
    Hom(HomArgs),
    /// Generate a synthetic dataset in TU format.
    Gen(GenArgs),
    /// Write the embedding matrix of a dataset as CSV plus a JSON sidecar.
    Embed(EmbedArgs),
    /// Cross-validate the classifier on embeddings.
    Eval(EvalArgs),
    /// Time embedding and training, or check linear scaling of tree counts.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum CatalogKind {
    Trees,
    Cycles,
    Stars,
    Paths,
    Custom,
}

#[derive(Debug, Args)]
struct PatternsArgs {
    #[arg(long, value_enum, default_value = "trees")]
    family: CatalogKind,
    #[arg(long, default_value_t = 6)]
    max_size: usize,
    /// Pattern file for `--family custom`.
    #[arg(long, required_if_eq("family", "custom"))]
    file: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum AlgorithmArg {
    Auto,
    Brute,
    Tree,
    Cycle,
    Treedec,
}

#[derive(Debug, Args)]
struct HomArgs {
    /// `edge`, `triangle`, `cycle:K`, `path:K`, `star:LEAVES` or `file:PATH`.
    #[arg(long)]
    pattern: String,
    /// Target graph in block format (vertex count, then `u v` lines).
    #[arg(long)]
    graph: PathBuf,
    /// Optional vertex weights, one non-negative real per line.
    #[arg(long)]
    weights: Option<PathBuf>,
    /// Report the (weighted) homomorphism density instead of the count.
    #[arg(long)]
    density: bool,
    #[arg(long, value_enum, default_value = "auto")]
    algorithm: AlgorithmArg,
    /// Also write a JSON record with the resolved configuration.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum GeneratorKind {
    Csl,
    Bipartite,
    Paulus,
}

#[derive(Debug, Args)]
struct GeneratorArgs {
    /// CSL cycle length.
    #[arg(long, default_value_t = 41)]
    num_vertices: usize,
    /// CSL skip lengths, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = crate::dataset::DEFAULT_CSL_SKIPS)]
    skips: Vec<usize>,
    /// Relabelled copies per class (CSL and Paulus).
    #[arg(long, default_value_t = 15)]
    copies: usize,
    #[arg(long, default_value_t = 200)]
    num_graphs: usize,
    #[arg(long, default_value_t = 40)]
    min_vertices: usize,
    #[arg(long, default_value_t = 100)]
    max_vertices: usize,
    #[arg(long, default_value_t = 0.2)]
    p_bipartite: f64,
    #[arg(long, default_value_t = 0.1)]
    p_er: f64,
    /// Adjacency-matrix file replacing the built-in Paulus graphs.
    #[arg(long)]
    paulus_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(value_enum)]
    kind: GeneratorKind,
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    generator: GeneratorArgs,
}

#[derive(Debug, Args)]
#[group(id = "source", required = true, multiple = false)]
struct SourceArgs {
    /// Directory holding one TU-format dataset.
    #[arg(long, group = "source")]
    dataset: Option<PathBuf>,
    /// Generate the dataset in memory instead of reading it.
    #[arg(long, group = "source", value_enum)]
    generate: Option<GeneratorKind>,
}

#[derive(Debug, Args)]
struct EmbedOptions {
    /// `tree:K`, `cycle:K` (plural forms accepted) or `custom:PATH`.
    #[arg(long, default_value = "tree:6", value_parser = parse_family)]
    family: FamilySpec,
    /// Comma-separated encodings (`one`, `x0`, `x1`, ...); default picks
    /// `one` plus every feature coordinate.
    #[arg(long, default_value = "default", value_parser = parse_phis)]
    phi: PhiChoice,
    #[arg(long)]
    density: bool,
    #[arg(long)]
    log1p: bool,
}

#[derive(Debug, Args)]
struct EmbedArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[command(flatten)]
    generator: GeneratorArgs,
    #[command(flatten)]
    embed: EmbedOptions,
    /// CSV destination; the sidecar goes next to it with a `.json` extension.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct ClassifierArgs {
    #[arg(long, default_value_t = 10)]
    folds: usize,
    #[arg(long, default_value_t = 10)]
    repeats: usize,
    #[arg(long, default_value_t = 1e-3)]
    l2: f64,
    #[arg(long, default_value_t = 0.1)]
    lr: f64,
    #[arg(long, default_value_t = 500)]
    epochs: usize,
}

impl ClassifierArgs {
    fn config(&self) -> CvConfig {
        CvConfig {
            folds: self.folds,
            repeats: self.repeats,
            classifier: LogRegConfig {
                l2: self.l2,
                learning_rate: self.lr,
                epochs: self.epochs,
            },
        }
    }
}

#[derive(Debug, Args)]
#[group(id = "eval_source", required = true, multiple = false)]
struct EvalSourceArgs {
    #[arg(long, group = "eval_source")]
    dataset: Option<PathBuf>,
    #[arg(long, group = "eval_source", value_enum)]
    generate: Option<GeneratorKind>,
    /// Embedding CSV written by `embed`.
    #[arg(long, group = "eval_source")]
    embedding: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[command(flatten)]
    source: EvalSourceArgs,
    #[command(flatten)]
    generator: GeneratorArgs,
    #[command(flatten)]
    embed: EmbedOptions,
    #[command(flatten)]
    classifier: ClassifierArgs,
    /// Report destination (JSON); standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(id = "bench_source", required = true, multiple = false)]
struct BenchSourceArgs {
    #[arg(long, group = "bench_source")]
    dataset: Option<PathBuf>,
    #[arg(long, group = "bench_source", value_enum)]
    generate: Option<GeneratorKind>,
    /// Time tree counting on random graphs of doubling size instead.
    #[arg(long, group = "bench_source")]
    scaling: bool,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[command(flatten)]
    source: BenchSourceArgs,
    #[command(flatten)]
    generator: GeneratorArgs,
    #[command(flatten)]
    embed: EmbedOptions,
    #[command(flatten)]
    classifier: ClassifierArgs,
    /// Smallest graph of the scaling run.
    #[arg(long, default_value_t = 20_000)]
    base_vertices: usize,
    #[arg(long, default_value_t = 3)]
    doublings: usize,
    #[arg(long, default_value_t = 4.0)]
    avg_degree: f64,
    #[arg(long, default_value_t = 3)]
    trials: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Debug)]
enum PhiChoice {
    Default,
    Explicit(Vec<PhiFunction>),
}

fn parse_family(s: &str) -> std::result::Result<FamilySpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_phis(s: &str) -> std::result::Result<PhiChoice, String> {
    if s == "default" {
        return Ok(PhiChoice::Default);
    }
    s.split(',')
        .map(|t| match t.trim() {
            "one" => Ok(PhiFunction::ConstantOne),
            other => other
                .strip_prefix('x')
                .and_then(|i| i.parse().ok())
                .map(PhiFunction::coordinate)
                .ok_or_else(|| format!("unknown encoding {other:?}; use one or x<index>")),
        })
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(PhiChoice::Explicit)
}

fn embed_config(options: &EmbedOptions) -> EmbedConfig {
    EmbedConfig {
        family: options.family.clone(),
        phis: match &options.phi {
            PhiChoice::Default => None,
            PhiChoice::Explicit(list) => Some(list.clone()),
        },
        density: options.density,
        log1p: options.log1p,
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit code. Errors are reported on standard error.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be positive");
            return 1;
        }
        // A pool may already exist when run is called twice in one process.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Config(_) | Error::Parameter(_) => 1,
        _ => 2,
    }
}

fn execute(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Patterns(args) => patterns(args),
        Command::Hom(args) => hom_cmd(args),
        Command::Gen(args) => gen(args, cli.seed),
        Command::Embed(args) => embed(args, cli.seed),
        Command::Eval(args) => eval(args, cli.seed),
        Command::Bench(args) => bench(args, cli.seed),
    }
}

fn write_json(path: Option<&Path>, value: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value)?;
    match path {
        Some(p) => std::fs::write(p, text + "\n").map_err(|e| Error::io(p, e)),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn patterns(args: &PatternsArgs) -> Result<()> {
    let list = match args.family {
        CatalogKind::Trees => enumerate_trees(args.max_size)?,
        CatalogKind::Cycles => enumerate_cycles(args.max_size)?,
        CatalogKind::Stars => enumerate_stars(args.max_size)?,
        CatalogKind::Paths => enumerate_paths(args.max_size)?,
        CatalogKind::Custom => load_custom_patterns(args.file.as_deref().expect("clap enforces --file"))?,
    };
    let records: Vec<_> = list.iter().map(Pattern::to_record).collect();
    write_json(
        args.out.as_deref(),
        &json!({
            "config": { "family": args.family, "max_size": args.max_size, "file": args.file },
            "count": records.len(),
            "patterns": records,
        }),
    )
}

fn parse_pattern(spec: &str) -> Result<Pattern> {
    let size = |arg: &str| {
        arg.parse::<usize>()
            .map_err(|_| Error::Config(format!("pattern size {arg:?} is not an integer")))
    };
    match spec.split_once(':') {
        None if spec == "edge" => Pattern::path(2),
        None if spec == "triangle" => Pattern::cycle(3),
        Some(("cycle", k)) => Pattern::cycle(size(k)?),
        Some(("path", k)) => Pattern::path(size(k)?),
        Some(("star", k)) => Pattern::star(size(k)?),
        Some(("file", path)) => {
            let mut list = load_custom_patterns(Path::new(path))?;
            if list.len() != 1 {
                return Err(Error::Config(format!(
                    "{path} holds {} patterns; expected exactly one",
                    list.len()
                )));
            }
            let p = list.pop().unwrap();
            // Trees and cycles get their dedicated counters.
            if p.graph().is_tree() {
                Pattern::tree(p.graph().clone())
            } else {
                Ok(p)
            }
        }
        _ => Err(Error::Config(format!(
            "unknown pattern {spec:?}; use edge, triangle, cycle:K, path:K, star:K or file:PATH"
        ))),
    }
}

fn read_single_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut graphs = parse_graph_blocks(&text, path)?;
    match graphs.len() {
        1 => Ok(graphs.pop().unwrap()),
        n => Err(Error::Validation(format!(
            "{} holds {n} graphs; expected exactly one",
            path.display()
        ))),
    }
}

fn read_weights(path: &Path) -> Result<Vec<f64>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            l.trim()
                .parse::<f64>()
                .map_err(|_| Error::format(path, i + 1, format!("cannot parse weight {:?}", l.trim())))
        })
        .collect()
}

fn hom_cmd(args: &HomArgs) -> Result<()> {
    let pattern = parse_pattern(&args.pattern)?;
    let graph = read_single_graph(&args.graph)?;
    let weights = match &args.weights {
        None => VertexWeights::Unit,
        Some(path) => {
            let w = read_weights(path)?;
            crate::graph::WeightedGraph::new(graph.clone(), w.clone())?;
            VertexWeights::Real(w)
        }
    };
    let algorithm = match args.algorithm {
        AlgorithmArg::Auto => hom::algorithm_for(&pattern),
        AlgorithmArg::Brute => Algorithm::Brute,
        AlgorithmArg::Tree => Algorithm::Tree,
        AlgorithmArg::Cycle => Algorithm::Cycle,
        AlgorithmArg::Treedec => Algorithm::TreeDecomposition,
    };
    let (text, value) = if args.density {
        let d = hom::density(&pattern, &graph, &weights)?;
        (format!("{d}"), json!(d))
    } else {
        let v = hom::hom_with(algorithm, &pattern, &graph, &weights)?;
        let value = match v.exact() {
            // JSON numbers cannot carry u128 faithfully.
            Some(x) => json!(x.to_string()),
            None => json!(v.as_f64()),
        };
        (v.to_string(), value)
    };
    println!("{text}");
    if let Some(out) = &args.out {
        write_json(
            Some(out),
            &json!({
                "config": {
                    "pattern": args.pattern,
                    "graph": args.graph,
                    "weights": args.weights,
                    "density": args.density,
                    "algorithm": format!("{algorithm:?}"),
                },
                "value": value,
            }),
        )?;
    }
    Ok(())
}

/// Runs a generator and returns the bundle with its resolved settings.
fn generate(kind: GeneratorKind, args: &GeneratorArgs, seed: u64) -> Result<(DatasetBundle, Value)> {
    match kind {
        GeneratorKind::Csl => {
            let config = CslConfig {
                num_vertices: args.num_vertices,
                skips: args.skips.clone(),
                copies_per_class: args.copies,
            };
            let bundle = gen_csl(&config, seed)?;
            Ok((bundle, json!({ "kind": kind, "params": config, "seed": seed })))
        }
        GeneratorKind::Bipartite => {
            let config = BipartiteConfig {
                num_graphs: args.num_graphs,
                min_vertices: args.min_vertices,
                max_vertices: args.max_vertices,
                p_bipartite: args.p_bipartite,
                p_er: args.p_er,
            };
            let bundle = gen_bipartite_er(&config, seed)?;
            Ok((bundle, json!({ "kind": kind, "params": config, "seed": seed })))
        }
        GeneratorKind::Paulus => {
            let config = PaulusConfig {
                copies_per_class: args.copies,
            };
            let bundle = match &args.paulus_file {
                Some(path) => load_paulus(path, &config, seed)?,
                None => paulus_from_str(PAULUS_FIXTURE, Path::new("paulus25.txt"), &config, seed)?,
            };
            Ok((
                bundle,
                json!({ "kind": kind, "params": config, "file": args.paulus_file, "seed": seed }),
            ))
        }
    }
}

const GENERATOR_RECORD: &str = "generator.json";

fn gen(args: &GenArgs, seed: u64) -> Result<()> {
    let (bundle, record) = generate(args.kind, &args.generator, seed)?;
    write_tud(&bundle, &args.out)?;
    write_json(Some(&args.out.join(GENERATOR_RECORD)), &record)?;
    eprintln!(
        "wrote {} graphs ({} classes) as {} to {}",
        bundle.len(),
        bundle.num_classes(),
        bundle.name(),
        args.out.display()
    );
    Ok(())
}

/// Loads `--dataset` or runs `--generate`; the JSON describes where the
/// data came from.
fn load_source(
    dataset: Option<&Path>,
    generate_kind: Option<GeneratorKind>,
    generator: &GeneratorArgs,
    seed: u64,
) -> Result<(DatasetBundle, Value)> {
    if let Some(kind) = generate_kind {
        let (bundle, record) = generate(kind, generator, seed)?;
        return Ok((bundle, json!({ "generated": record })));
    }
    let dir = dataset.expect("clap requires one source");
    let name = find_tud_name(dir)?;
    let bundle = parse_tud(dir, &name)?;
    let record_path = dir.join(GENERATOR_RECORD);
    let generator_record = if record_path.exists() {
        let text = std::fs::read_to_string(&record_path).map_err(|e| Error::io(&record_path, e))?;
        serde_json::from_str(&text)?
    } else {
        Value::Null
    };
    Ok((
        bundle,
        json!({ "dataset": dir, "name": name, "generator": generator_record }),
    ))
}

fn resolved_phis(config: &EmbedConfig, bundle: &DatasetBundle) -> Vec<String> {
    config
        .phis
        .clone()
        .unwrap_or_else(|| default_phis(bundle.feature_dim()))
        .iter()
        .map(PhiFunction::id)
        .collect()
}

fn embed(args: &EmbedArgs, seed: u64) -> Result<()> {
    let (bundle, source) = load_source(
        args.source.dataset.as_deref(),
        args.source.generate,
        &args.generator,
        seed,
    )?;
    let config = embed_config(&args.embed);
    let matrix = embed_dataset(&bundle, &config)?;
    let echo = json!({
        "source": source,
        "embed": config,
        "phis": resolved_phis(&config, &bundle),
        "seed": seed,
    });
    write_embedding(&matrix, bundle.labels(), &args.out, &echo)?;
    eprintln!(
        "embedded {} graphs into {} columns at {}",
        matrix.num_rows(),
        matrix.num_cols(),
        args.out.display()
    );
    Ok(())
}

fn summary(report: &crate::eval::CvReport) -> String {
    format!(
        "accuracy {:.4} ± {:.4} over {} folds (seed {}, {:.2} s)",
        report.mean,
        report.stddev,
        report.fold_accuracies.len(),
        report.seed,
        report.wall_time_seconds
    )
}

fn eval(args: &EvalArgs, seed: u64) -> Result<()> {
    let cv = args.classifier.config();
    let report = if let Some(path) = &args.source.embedding {
        let (rows, labels) = read_embedding(path)?;
        let sidecar = path.with_extension("json");
        let meta: Value = match std::fs::read_to_string(&sidecar) {
            Ok(text) => serde_json::from_str(&text)?,
            Err(_) => Value::Null,
        };
        let mut report = cross_validate_matrix(&rows, &labels, &cv, seed)?;
        report.config = json!({
            "embedding": path,
            "embedding_config": meta.get("config").cloned().unwrap_or(Value::Null),
            "cv": cv,
        });
        report
    } else {
        let (bundle, source) = load_source(
            args.source.dataset.as_deref(),
            args.source.generate,
            &args.generator,
            seed,
        )?;
        let config = embed_config(&args.embed);
        let mut report = cross_validate(&bundle, &config, &cv, seed)?;
        report.config["source"] = source;
        report.config["phis"] = json!(resolved_phis(&config, &bundle));
        report
    };
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    eprintln!("{}", summary(&report));
    write_json(args.out.as_deref(), &serde_json::to_value(&report)?)
}

fn bench(args: &BenchArgs, seed: u64) -> Result<()> {
    if args.source.scaling {
        let max_size = match &args.embed.family {
            FamilySpec::Tree { max_size } => *max_size,
            other => {
                return Err(Error::Config(format!(
                    "the scaling run counts tree patterns, not {other}"
                )))
            }
        };
        let report = tree_scaling(
            args.base_vertices,
            args.doublings,
            args.avg_degree,
            max_size,
            args.trials,
            seed,
        )?;
        for (p, r) in report.points.iter().skip(1).zip(&report.normalised_ratios) {
            eprintln!(
                "|V| = {:>8}, |E| = {:>8}: {:.4} s (normalised ratio {:.2})",
                p.num_vertices, p.num_edges, p.seconds, r
            );
        }
        let value = json!({
            "config": {
                "base_vertices": args.base_vertices,
                "doublings": args.doublings,
                "avg_degree": args.avg_degree,
                "trials": args.trials,
                "family": args.embed.family,
                "seed": seed,
            },
            "scaling": report,
        });
        return write_json(args.out.as_deref(), &value);
    }
    let (bundle, source) = load_source(
        args.source.dataset.as_deref(),
        args.source.generate,
        &args.generator,
        seed,
    )?;
    let config = embed_config(&args.embed);
    let report = bench_runtime(&bundle, &config, &args.classifier.config(), seed)?;
    eprintln!(
        "{}: embed {:.3} s, train {:.3} s",
        report.dataset, report.embed_seconds, report.train_seconds
    );
    let mut value = serde_json::to_value(&report)?;
    value["config"]["source"] = source;
    write_json(args.out.as_deref(), &value)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pattern_specs() {
        assert_eq!(parse_pattern("edge").unwrap().size(), 2);
        assert_eq!(parse_pattern("triangle").unwrap().size(), 3);
        assert_eq!(parse_pattern("cycle:5").unwrap().size(), 5);
        assert_eq!(parse_pattern("star:3").unwrap().size(), 4);
        assert!(matches!(parse_pattern("wheel:5"), Err(Error::Config(_))));
    }

    #[test]
    fn phi_lists() {
        assert!(matches!(parse_phis("default"), Ok(PhiChoice::Default)));
        match parse_phis("one,x2").unwrap() {
            PhiChoice::Explicit(list) => assert_eq!(list, vec![PhiFunction::ConstantOne, PhiFunction::coordinate(2)]),
            PhiChoice::Default => panic!(),
        }
        assert!(parse_phis("y").is_err());
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run(["homcount", "frobnicate"]), 1);
        assert_eq!(run(["homcount", "eval", "--generate", "csl", "--dataset", "x"]), 1);
        assert_eq!(run(["homcount", "patterns", "--family", "trees", "--max-size", "1"]), 1);
    }
}
