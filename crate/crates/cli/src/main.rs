use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use vtgap::expansion::{ratio_string, SearchOptions};
use vtgap::graph::file::{from_json, to_json};
use vtgap::spectrum::normalized_spectrum;
use vtgap::symmetry::automorphism::DEFAULT_ORBIT_BUDGET;
use vtgap::symmetry::{automorphism_group_with, condition4_check, vertex_orbits};
use vtgap::verifier::corpus::{builtin_corpus, run_corpus};
use vtgap::verifier::output::{reports_to_csv, reports_to_json, sig15};
use vtgap::{
    bvn_decompose, cheeger_sandwich_check, expansion_profile, verify_cover, BoundReport, Exec, Multigraph,
    Permutation, VertexSet, VerifyOptions,
};

mod family;

#[derive(Parser)]
#[command(name = "vtgap", version, about = "Spectral bounds for vertex-transitive graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Largest vertex count for exhaustive subset search.
    #[arg(long, global = true, default_value_t = 24, value_parser = clap::value_parser!(u64).range(1..=63))]
    budget_subsets: u64,
    /// Largest vertex count for full automorphism group enumeration.
    #[arg(long, global = true, default_value_t = 16, value_parser = clap::value_parser!(u64).range(1..))]
    budget_aut: u64,
    /// Largest group order for subgroup computations.
    #[arg(long, global = true, default_value_t = 5040, value_parser = clap::value_parser!(u64).range(1..))]
    budget_group: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads [default: available parallelism].
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    /// Write output here instead of stdout.
    #[arg(short = 'o', long = "output", global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph file for a named family or a Cayley graph.
    Gen {
        #[arg(long, required_unless_present = "corpus_dir", conflicts_with = "corpus_dir")]
        family: Option<String>,
        /// Connection multiset for group families, e.g. "+1,-1" or "[1 0 2],s0".
        #[arg(long, allow_hyphen_values = true)]
        connection: Option<String>,
        /// Write every built-in corpus graph into this directory.
        #[arg(long)]
        corpus_dir: Option<PathBuf>,
    },
    /// Normalized adjacency spectrum.
    Spectrum { file: PathBuf },
    /// Exact edge and vertex isoperimetric constants with the Cheeger check.
    Cheeger { file: PathBuf },
    /// Automorphism group, orbits and subgroup conditions.
    Aut { file: PathBuf },
    /// Decompose the adjacency matrix into permutations.
    Bvn { file: PathBuf },
    /// Check the spectral interval on one or more graphs.
    Verify {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Check every graph in a directory, or the built-in corpus.
    Corpus {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

enum Outcome {
    Ok,
    Violation,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match vtgap::par::with_workers(cli.global.workers(), || run(&cli)) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Violation) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

impl Global {
    fn workers(&self) -> usize {
        match self.workers {
            Some(k) => k as usize,
            None => std::thread::available_parallelism().map_or(1, |k| k.get()),
        }
    }

    /// `--budget-aut`, floored at the library's orbit-search default.
    fn orbit_budget(&self) -> usize {
        (self.budget_aut as usize).max(DEFAULT_ORBIT_BUDGET)
    }

    fn exec(&self) -> Exec {
        if self.workers() > 1 {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }

    fn verify_options(&self) -> VerifyOptions {
        VerifyOptions {
            subset_budget: self.budget_subsets as usize,
            orbit_budget: self.orbit_budget(),
            exec: self.exec(),
        }
    }

    fn emit(&self, text: &str) -> Result<()> {
        let text = if text.ends_with('\n') { text.to_owned() } else { format!("{text}\n") };
        match &self.output {
            Some(path) => fs::write(path, text).with_context(|| format!("writing output file {}", path.display())),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }

    fn json_only(&self, command: &str) -> Result<()> {
        if self.format == Format::Csv {
            bail!("{command}: csv output is not available, use --format json");
        }
        Ok(())
    }
}

fn read_graph(path: &Path) -> Result<Multigraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading graph file {}", path.display()))?;
    from_json(&text).with_context(|| format!("parsing graph file {}", path.display()))
}

fn to_json_pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| e.into_error())?)?)
}

fn run(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Gen { family, connection, corpus_dir } => {
            if let Some(dir) = corpus_dir {
                export_corpus(dir)?;
            } else {
                let family = family.as_deref().expect("clap requires --family");
                let graph = family::build(family, connection.as_deref())
                    .with_context(|| format!("gen: building family {family}"))?;
                g.emit(&to_json(&graph))?;
            }
        }
        Command::Spectrum { file } => spectrum(g, file).with_context(|| format!("spectrum of {}", file.display()))?,
        Command::Cheeger { file } => cheeger(g, file).with_context(|| format!("cheeger on {}", file.display()))?,
        Command::Aut { file } => aut(g, file).with_context(|| format!("aut on {}", file.display()))?,
        Command::Bvn { file } => bvn(g, file).with_context(|| format!("bvn on {}", file.display()))?,
        Command::Verify { files } => {
            let mut reports = Vec::with_capacity(files.len());
            for file in files {
                let graph = read_graph(file)?;
                let id = file.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                let report = vtgap::verify_spectral_bound(&id, &graph, &g.verify_options())
                    .with_context(|| format!("verify on {}", file.display()))?;
                reports.push(report);
            }
            return report_all(g, &reports, files.len() == 1);
        }
        Command::Corpus { dir } => {
            let entries = match dir {
                Some(dir) => read_dir_graphs(dir)?,
                None => builtin_corpus().into_iter().map(|e| (e.id, e.graph)).collect(),
            };
            let mut opts = g.verify_options();
            opts.exec = Exec::Parallel;
            let mut reports = Vec::with_capacity(entries.len());
            for (result, (id, _)) in run_corpus(&entries, &opts).into_iter().zip(&entries) {
                reports.push(result.with_context(|| format!("corpus: verifying {id}"))?);
            }
            return report_all(g, &reports, false);
        }
    }
    Ok(Outcome::Ok)
}

fn export_corpus(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating corpus directory {}", dir.display()))?;
    for e in builtin_corpus() {
        let path = dir.join(format!("{}.json", e.id));
        fs::write(&path, to_json(&e.graph) + "\n").with_context(|| format!("writing graph file {}", path.display()))?;
    }
    Ok(())
}

/// Every `*.json` file in `dir`, sorted by name, with the file stem as id.
fn read_dir_graphs(dir: &Path) -> Result<Vec<(String, Multigraph)>> {
    let listing = fs::read_dir(dir).with_context(|| format!("listing corpus directory {}", dir.display()))?;
    let mut paths = Vec::new();
    for entry in listing {
        let path = entry.with_context(|| format!("listing corpus directory {}", dir.display()))?.path();
        if path.extension().is_some_and(|e| e == "json") {
            paths.push(path);
        }
    }
    paths.sort();
    paths
        .into_iter()
        .map(|p| Ok((p.file_stem().unwrap_or_default().to_string_lossy().into_owned(), read_graph(&p)?)))
        .collect()
}

fn report_all(g: &Global, reports: &[BoundReport], single: bool) -> Result<Outcome> {
    let text = match g.format {
        Format::Csv => reports_to_csv(reports),
        Format::Json if single => vtgap::verifier::output::report_to_json(&reports[0]),
        Format::Json => reports_to_json(reports),
    };
    g.emit(&text)?;
    let mut outcome = Outcome::Ok;
    for r in reports {
        if let Some(reason) = &r.incomplete_reason {
            eprintln!("warning: {} incomplete: {reason}", r.graph_id);
        }
        if r.is_failure() {
            eprintln!(
                "VIOLATION: {}: lambda_min = {:e}, lambda2 = {:e}, interval [{:?}, {:?}], pass_lower = {:?}, pass_lower_edge_variant = {:?}, pass_upper = {:?}",
                r.graph_id, r.lambda_min, r.lambda2, r.lower_bound, r.upper_bound, r.pass_lower, r.pass_lower_edge_variant, r.pass_upper
            );
            outcome = Outcome::Violation;
        }
    }
    Ok(outcome)
}

#[derive(Serialize)]
struct SpectrumOutput {
    n: usize,
    d: u64,
    eigenvalues: Vec<f64>,
    multiplicities: Vec<(f64, usize)>,
    lambda2: f64,
    lambda_min: f64,
    max_residual: f64,
}

fn spectrum(g: &Global, file: &Path) -> Result<()> {
    let graph = read_graph(file)?;
    let d = graph.validate_regular()?;
    let s = normalized_spectrum(&graph, d)?;
    match g.format {
        Format::Json => g.emit(&to_json_pretty(&SpectrumOutput {
            n: graph.n(),
            d,
            eigenvalues: s.eigenvalues.iter().copied().map(sig15).collect(),
            multiplicities: s.multiplicities().into_iter().map(|(x, m)| (sig15(x), m)).collect(),
            lambda2: sig15(s.lambda2),
            lambda_min: sig15(s.lambda_min),
            max_residual: sig15(s.max_residual),
        })),
        Format::Csv => g.emit(&csv_text(
            &["index", "eigenvalue"],
            s.eigenvalues.iter().enumerate().map(|(i, x)| vec![i.to_string(), sig15(*x).to_string()]),
        )?),
    }
}

fn set_string(s: &VertexSet) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct CheegerOutput {
    n: usize,
    d: u64,
    h_edge: String,
    h_vertex: String,
    witness_edge: VertexSet,
    witness_vertex: VertexSet,
    lambda2: f64,
    sandwich_lower: f64,
    sandwich_middle: f64,
    sandwich_upper: f64,
    sandwich_holds: bool,
}

fn cheeger(g: &Global, file: &Path) -> Result<()> {
    let graph = read_graph(file)?;
    let d = graph.validate_regular()?;
    let opts = SearchOptions { max_vertices: g.budget_subsets as usize, exec: g.exec() };
    let p = expansion_profile(&graph, opts)?;
    let s = normalized_spectrum(&graph, d)?;
    let c = cheeger_sandwich_check(&p, &s, d);
    if let Some(msg) = c.diagnostic() {
        eprintln!("warning: {msg}");
    }
    let out = CheegerOutput {
        n: graph.n(),
        d,
        h_edge: ratio_string(&p.h_edge),
        h_vertex: ratio_string(&p.h_vertex),
        witness_edge: p.witness_edge,
        witness_vertex: p.witness_vertex,
        lambda2: sig15(s.lambda2),
        sandwich_lower: sig15(c.lower),
        sandwich_middle: sig15(c.middle),
        sandwich_upper: sig15(c.upper),
        sandwich_holds: c.holds,
    };
    match g.format {
        Format::Json => g.emit(&to_json_pretty(&out)),
        Format::Csv => g.emit(&csv_text(
            &["n", "d", "h_edge", "h_vertex", "witness_edge", "witness_vertex", "lambda2", "sandwich_holds"],
            [vec![
                out.n.to_string(),
                out.d.to_string(),
                out.h_edge.clone(),
                out.h_vertex.clone(),
                set_string(&out.witness_edge),
                set_string(&out.witness_vertex),
                out.lambda2.to_string(),
                out.sandwich_holds.to_string(),
            ]],
        )?),
    }
}

#[derive(Serialize)]
struct AutOutput {
    n: usize,
    orbits: Vec<VertexSet>,
    vertex_transitive: bool,
    order: Option<usize>,
    generators: Option<Vec<Permutation>>,
    transitivity_order: Option<usize>,
    condition1: Option<bool>,
    condition1_subgroup_order: Option<usize>,
    condition4: Option<bool>,
    notes: Vec<String>,
}

fn aut(g: &Global, file: &Path) -> Result<()> {
    g.json_only("aut")?;
    let graph = read_graph(file)?;
    let budget = g.budget_aut as usize;
    let orbits = vertex_orbits(&graph, g.orbit_budget())?;
    let mut out = AutOutput {
        n: graph.n(),
        vertex_transitive: orbits.len() == 1,
        orbits,
        order: None,
        generators: None,
        transitivity_order: None,
        condition1: None,
        condition1_subgroup_order: None,
        condition4: None,
        notes: Vec::new(),
    };
    match automorphism_group_with(&graph, budget) {
        Ok(group) => {
            out.order = Some(group.order());
            out.generators = Some(group.generators().to_vec());
            out.condition4 = Some(condition4_check(&group, &graph));
            if group.is_transitive() {
                out.transitivity_order = Some(group.transitivity_order()?);
                let cap = g.budget_group as usize;
                match group.condition1_holds_with(cap).and_then(|c1| Ok((c1, group.descend_to_condition1_with(cap)?))) {
                    Ok((c1, h)) => {
                        out.condition1 = Some(c1);
                        out.condition1_subgroup_order = Some(h.order());
                    }
                    Err(e) => out.notes.push(format!("subgroup analysis skipped: {e}")),
                }
            }
        }
        Err(e @ vtgap::Error::TooLarge { .. }) => out.notes.push(format!("group enumeration skipped: {e}")),
        Err(e) => return Err(e.into()),
    }
    g.emit(&to_json_pretty(&out))
}

#[derive(Serialize)]
struct BvnOutput {
    n: usize,
    d: u64,
    thetas: Vec<Permutation>,
}

fn bvn(g: &Global, file: &Path) -> Result<()> {
    g.json_only("bvn")?;
    let graph = read_graph(file)?;
    let d = graph.validate_regular()?;
    let cover = bvn_decompose(&graph, d)?;
    if let Err(v) = verify_cover(&graph, &cover) {
        bail!("decomposition failed its own check: {v}");
    }
    g.emit(&to_json_pretty(&BvnOutput { n: graph.n(), d, thetas: cover.thetas }))
}
