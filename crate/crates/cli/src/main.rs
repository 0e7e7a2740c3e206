//! `dlmkit`: distance-Laplacian spectra, graph families, enumeration and
//! classification checks from the command line.

mod render;

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use dlmkit_core::enumerate::{
    enumerate_all, enumerate_connected, ingest_graph6_stream, EnumerateError, IngestOptions,
};
use dlmkit_core::families::{expected_class, FamilyError, FamilyParams, FamilySpec};
use dlmkit_core::graph::{parse_graph6, to_graph6, Graph, Graph6Error, GraphError};
use dlmkit_core::spectra::SpectraError;
use dlmkit_core::verify::{
    classify_sweep, ds_check, property_suite, remark45, verify_formulas, Corpus, PropertyConfig,
    SweepOptions, VerifyError, VerifyReport, DEFAULT_SEED, FORMULA_DEFAULT_MAX_N,
};

#[derive(Parser, Debug)]
#[command(name = "dlmkit", version, about = "Exact distance-Laplacian spectra and classification checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the spectrum of each input graph.
    Spectrum(SpectrumArgs),
    /// Emit every connected graph on n vertices as graph6.
    Enumerate(EnumerateArgs),
    /// Emit the graph6 code of a named family member.
    Family(FamilyArgs),
    /// Run a verification and report pass or fail.
    Verify(VerifyArgs),
    /// List groups of graphs sharing a distance-Laplacian spectrum.
    Cospectral(CorpusArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    /// Distance Laplacian.
    Dl,
    /// Combinatorial Laplacian.
    L,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Default)]
struct FamilyFlags {
    /// Part sizes for complete-multipartite, comma separated.
    #[arg(long, value_delimiter = ',')]
    parts: Option<Vec<usize>>,
    /// First parameter of j-graph.
    #[arg(long)]
    a: Option<usize>,
    /// Second parameter of j-graph.
    #[arg(long)]
    b: Option<usize>,
}

#[derive(Args, Debug)]
#[command(group = clap::ArgGroup::new("input").multiple(false))]
struct SpectrumArgs {
    /// Inline graph6 code.
    #[arg(long, group = "input")]
    g6: Option<String>,
    /// File with one graph6 code per line; `-` reads stdin.
    #[arg(long, group = "input")]
    file: Option<PathBuf>,
    /// Family tag, e.g. k2-join-empty.
    #[arg(long, group = "input")]
    family: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    params: FamilyFlags,
    #[arg(long, value_enum, default_value = "dl")]
    matrix: MatrixKind,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Skip disconnected graphs read from a file.
    #[arg(long)]
    connected_only: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Include disconnected graphs.
    #[arg(long)]
    all: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// Family tag, or `classified` for the expected m = n-3 class.
    #[arg(long, alias = "family")]
    name: String,
    #[arg(long)]
    n: Option<usize>,
    #[command(flatten)]
    params: FamilyFlags,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    #[arg(long)]
    n: usize,
    /// graph6 corpus instead of the built-in enumeration; `-` reads stdin.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Drop disconnected graphs from the corpus instead of rejecting them.
    #[arg(long)]
    connected_only: bool,
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(subcommand)]
    kind: VerifyKind,
}

#[derive(Subcommand, Debug)]
enum VerifyKind {
    /// The m = n-3 class at order n against the six families.
    Thm33(CorpusArgs),
    /// The explicit class lists at n = 4 and n = 5.
    Remark45(CommonArgs),
    /// Closed-form spectra of the classified families.
    Formulas(FormulaArgs),
    /// Property suites over small enumerated graphs.
    Properties(PropertyArgs),
    /// No classified member has a cospectral mate.
    Cospectral(CorpusArgs),
}

#[derive(Args, Debug)]
struct CommonArgs {
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FormulaArgs {
    #[arg(long, default_value_t = FORMULA_DEFAULT_MAX_N)]
    max_n: usize,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args, Debug)]
struct PropertyArgs {
    /// Largest order enumerated by any suite.
    #[arg(long, alias = "n", default_value_t = PropertyConfig::default().max_n)]
    max_n: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Samples per sampled suite.
    #[arg(long, default_value_t = PropertyConfig::default().samples)]
    samples: usize,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Parse(String),
    #[error("verification failed")]
    Failed,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Failed => 1,
            CliError::Usage(_) | CliError::Input(_) => 2,
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<Graph6Error> for CliError {
    fn from(e: Graph6Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<SpectraError> for CliError {
    fn from(e: SpectraError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<EnumerateError> for CliError {
    fn from(e: EnumerateError) -> Self {
        match e {
            EnumerateError::Parse { .. } => CliError::Parse(e.to_string()),
            EnumerateError::OutOfRange(_) => CliError::Usage(e.to_string()),
            EnumerateError::WrongOrder { .. } | EnumerateError::Io(_) => CliError::Input(e.to_string()),
        }
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Enumerate(inner) => inner.into(),
            VerifyError::OutOfRange { .. } | VerifyError::Family(_) => CliError::Usage(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !matches!(e, CliError::Failed) {
                eprintln!("dlmkit: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Spectrum(args) => cmd_spectrum(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Family(args) => cmd_family(args),
        Command::Verify(args) => cmd_verify(args.kind),
        Command::Cospectral(args) => cmd_cospectral(args),
    }
}

fn output(path: Option<&PathBuf>) -> Result<Box<dyn Write>, CliError> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn input(path: &PathBuf) -> Result<Box<dyn BufRead>, CliError> {
    if path.as_os_str() == "-" {
        Ok(Box::new(BufReader::new(io::stdin())))
    } else {
        let f = File::open(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        Ok(Box::new(BufReader::new(f)))
    }
}

fn family_spec(tag: &str, n: Option<usize>, flags: &FamilyFlags) -> Result<FamilySpec, CliError> {
    let params = FamilyParams { n, parts: flags.parts.clone(), a: flags.a, b: flags.b };
    Ok(FamilySpec::from_tag(tag, &params)?)
}

fn read_graphs(reader: Box<dyn BufRead>, options: IngestOptions) -> Result<Vec<Graph>, CliError> {
    ingest_graph6_stream(reader, options)
        .map(|g| g.map_err(CliError::from))
        .collect()
}

fn cmd_spectrum(args: SpectrumArgs) -> Result<(), CliError> {
    let graphs = if let Some(code) = &args.g6 {
        vec![parse_graph6(code.trim())?]
    } else if let Some(tag) = &args.family {
        vec![family_spec(tag, args.n, &args.params)?.build()?]
    } else {
        let path = args.file.clone().unwrap_or_else(|| PathBuf::from("-"));
        let options = IngestOptions { connected_only: args.connected_only, expected_order: args.n };
        read_graphs(input(&path)?, options)?
    };

    let mut rendered = Vec::with_capacity(graphs.len());
    for g in &graphs {
        rendered.push(render::spectrum_of(g, args.matrix == MatrixKind::Dl)?);
    }
    let mut out = output(args.out.as_ref())?;
    render::write_spectra(&mut out, &rendered, args.format)?;
    out.flush()?;
    Ok(())
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    let graphs = if args.all { enumerate_all(args.n)? } else { enumerate_connected(args.n)? };
    let mut out = output(args.out.as_ref())?;
    for g in &graphs {
        writeln!(out, "{}", to_graph6(g))?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_family(args: FamilyArgs) -> Result<(), CliError> {
    let graphs: Vec<Graph> = if args.name == "classified" {
        let n = args.n.ok_or_else(|| CliError::Usage("--n is required for the classified list".into()))?;
        expected_class(n)?.iter().map(FamilySpec::build).collect::<Result<_, _>>()?
    } else {
        vec![family_spec(&args.name, args.n, &args.params)?.build()?]
    };
    let mut out = output(args.out.as_ref())?;
    for g in &graphs {
        writeln!(out, "{}", to_graph6(g))?;
    }
    out.flush()?;
    Ok(())
}

fn corpus(args: &CorpusArgs) -> Result<Corpus, CliError> {
    match &args.file {
        None => Ok(Corpus::BuiltIn(args.n)),
        Some(path) => {
            let options = IngestOptions { connected_only: args.connected_only, expected_order: Some(args.n) };
            let graphs = read_graphs(input(path)?, options)?;
            if graphs.is_empty() {
                return Err(CliError::Input(format!("{}: no graphs", path.display())));
            }
            Ok(Corpus::Graphs { n: args.n, graphs })
        }
    }
}

fn verdict(passed: bool) -> Result<(), CliError> {
    if passed {
        Ok(())
    } else {
        Err(CliError::Failed)
    }
}

fn cmd_verify(kind: VerifyKind) -> Result<(), CliError> {
    match kind {
        VerifyKind::Thm33(args) => {
            let report = classify_sweep(corpus(&args)?, &SweepOptions::from_env(args.workers))?;
            let mut out = output(args.out.as_ref())?;
            render::write_classification(&mut out, std::slice::from_ref(&report), args.format)?;
            out.flush()?;
            verdict(report.passed())
        }
        VerifyKind::Remark45(args) => {
            let reports = remark45(&SweepOptions::from_env(args.workers))?;
            let mut out = output(args.out.as_ref())?;
            render::write_classification(&mut out, &reports, args.format)?;
            out.flush()?;
            verdict(reports.iter().all(|r| r.passed()))
        }
        VerifyKind::Formulas(args) => {
            let report = verify_formulas(args.max_n)?;
            write_report(&report, &args.common)
        }
        VerifyKind::Properties(args) => {
            let config = PropertyConfig {
                max_n: args.max_n,
                samples: args.samples,
                seed: args.seed,
                workers: args.common.workers,
            };
            let report = property_suite(&config)?;
            write_report(&report, &args.common)
        }
        VerifyKind::Cospectral(args) => {
            let report = ds_check(corpus(&args)?, &SweepOptions::from_env(args.workers))?;
            let common = CommonArgs { workers: args.workers, format: args.format, out: args.out };
            write_report(&report.report, &common)
        }
    }
}

fn write_report(report: &VerifyReport, args: &CommonArgs) -> Result<(), CliError> {
    let mut out = output(args.out.as_ref())?;
    render::write_report(&mut out, report, args.format)?;
    out.flush()?;
    verdict(report.passed())
}

fn cmd_cospectral(args: CorpusArgs) -> Result<(), CliError> {
    let report = ds_check(corpus(&args)?, &SweepOptions::from_env(args.workers))?;
    let mut out = output(args.out.as_ref())?;
    render::write_groups(&mut out, &report, args.format)?;
    out.flush()?;
    verdict(report.passed())
}
