use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufRead, BufReader, Read, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ngcolor::io::{write_edge_list, Graph6Reader, StreamError};
use ngcolor::verify::{default_workers, sweep_orders, VerifyError};
use ngcolor::{
    build, check_theorems, evaluate_graph, export_dot, parse_edge_list, parse_graph6, sweep_stream,
    write_graph6, ConstructionError, FamilySpec, FormatError, Graph, VariantKind,
};

/// Exit status when a bound is violated.
const EXIT_VIOLATION: u8 = 1;
// clap exits with 2 on usage errors.
const EXIT_IO: u8 = 3;
const EXIT_MALFORMED: u8 = 4;
const EXIT_INVALID: u8 = 5;

#[derive(Parser)]
#[command(
    name = "ngcolor",
    version,
    about = "Exact distance-based chromatic numbers and Nordhaus-Gaddum checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the parameter profile and bound checks of each input graph.
    Compute(ComputeArgs),
    /// Build a named graph family.
    Construct(ConstructArgs),
    /// Check every bound over all labeled graphs of an order, or a graph6 stream.
    Sweep(SweepArgs),
    /// Convert between graph formats.
    Convert(ConvertArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Proper,
    TwoProper,
    Injective,
    Square,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Graph6,
    EdgeList,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Graph6,
    EdgeList,
    Dot,
}

#[derive(Args)]
struct ComputeArgs {
    /// A graph6 record; may be repeated.
    #[arg(long = "g6", value_name = "RECORD")]
    g6: Vec<String>,
    /// Read graphs from a file (`-` for standard input).
    #[arg(long, value_name = "PATH")]
    input: Option<String>,
    /// Format of `--input`.
    #[arg(long, value_enum, default_value = "graph6")]
    format: InputFormat,
    /// Variants to print; may be repeated.
    #[arg(long = "variant", value_enum)]
    variants: Vec<VariantArg>,
    /// Print every variant (the default).
    #[arg(long)]
    all: bool,
    /// Emit one JSON document per graph instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConstructArgs {
    /// Family name: path, cycle, complete, empty, complete-bipartite,
    /// multipartite, h-graph, h-odd, h-even, g-injective, f-square.
    family: String,
    /// Integer parameters of the family.
    params: Vec<String>,
    /// Emit graph6 (the default).
    #[arg(long = "g6", group = "out")]
    g6: bool,
    /// Emit a DOT document with layout labels.
    #[arg(long, group = "out")]
    dot: bool,
    /// Emit an edge list.
    #[arg(long, group = "out")]
    edge_list: bool,
    /// Emit the complement of the constructed graph.
    #[arg(long)]
    complement: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Order `N` or inclusive range `A-B` of labeled graphs to enumerate.
    #[arg(long, value_name = "N|A-B", value_parser = parse_order_range, conflicts_with = "stream", required_unless_present = "stream")]
    order: Option<RangeInclusive<usize>>,
    /// graph6 stream to sweep instead (`-` for standard input).
    #[arg(long, value_name = "PATH")]
    stream: Option<String>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long)]
    workers: Option<usize>,
    /// Emit the summaries as a JSON array.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ConvertArgs {
    #[arg(long, value_enum)]
    from: InputFormat,
    #[arg(long, value_enum)]
    to: OutputFormat,
    /// Input file (`-` or omitted for standard input).
    #[arg(long, value_name = "PATH")]
    input: Option<String>,
}

fn parse_order_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid order '{t}'"))
    };
    match s.split_once('-') {
        Some((a, b)) => Ok(num(a)?..=num(b)?),
        None => {
            let n = num(s)?;
            Ok(n..=n)
        }
    }
}

#[derive(Debug)]
enum CliError {
    Io(String, io::Error),
    Malformed(String),
    Invalid(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(..) => EXIT_IO,
            CliError::Malformed(_) => EXIT_MALFORMED,
            CliError::Invalid(_) => EXIT_INVALID,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "cannot read {path}: {e}"),
            CliError::Malformed(m) => write!(f, "malformed graph: {m}"),
            CliError::Invalid(m) => write!(f, "{m}"),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Malformed(e.to_string())
    }
}

impl From<StreamError> for CliError {
    fn from(e: StreamError) -> Self {
        match e {
            StreamError::Io(e) => CliError::Io("input".into(), e),
            other => CliError::Malformed(other.to_string()),
        }
    }
}

impl From<ConstructionError> for CliError {
    fn from(e: ConstructionError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Stream(s) => s.into(),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

fn open_input(path: Option<&str>) -> Result<Box<dyn BufRead>, CliError> {
    match path {
        None | Some("-") => Ok(Box::new(BufReader::new(io::stdin()))),
        Some(p) => File::open(p)
            .map(|f| Box::new(BufReader::new(f)) as Box<dyn BufRead>)
            .map_err(|e| CliError::Io(p.to_string(), e)),
    }
}

fn read_to_string(path: Option<&str>) -> Result<String, CliError> {
    let mut text = String::new();
    open_input(path)?
        .read_to_string(&mut text)
        .map_err(|e| CliError::Io(path.unwrap_or("-").to_string(), e))?;
    Ok(text)
}

fn read_graphs(path: Option<&str>, format: InputFormat) -> Result<Vec<Graph>, CliError> {
    match format {
        InputFormat::Graph6 => Ok(Graph6Reader::new(open_input(path)?)
            .map(|r| r.map(|(_, g)| g))
            .collect::<Result<_, _>>()?),
        InputFormat::EdgeList => Ok(vec![parse_edge_list(&read_to_string(path)?)?]),
    }
}

fn selected_variants(args: &ComputeArgs) -> Vec<VariantKind> {
    let all = args.all || args.variants.is_empty() || args.variants.contains(&VariantArg::All);
    VariantKind::ALL
        .into_iter()
        .filter(|k| {
            all || args.variants.iter().any(|v| match v {
                VariantArg::Proper => *k == VariantKind::Proper,
                VariantArg::TwoProper => *k == VariantKind::TwoProper,
                VariantArg::Injective => *k == VariantKind::Injective,
                VariantArg::Square => *k == VariantKind::Square,
                VariantArg::All => true,
            })
        })
        .collect()
}

fn compute(args: &ComputeArgs, out: &mut String) -> Result<bool, CliError> {
    let mut graphs = args
        .g6
        .iter()
        .map(|r| parse_graph6(r))
        .collect::<Result<Vec<_>, _>>()?;
    if let Some(path) = &args.input {
        graphs.extend(read_graphs(Some(path), args.format)?);
    }
    if graphs.is_empty() {
        return Err(CliError::Invalid(
            "no input graphs; use --g6 or --input".into(),
        ));
    }
    let variants = selected_variants(args);
    let mut clean = true;
    for g in &graphs {
        let witness = write_graph6(g).map_err(CliError::from)?;
        let profile = evaluate_graph(g);
        let report = check_theorems(&profile);
        clean &= report.all_hold();
        if args.json {
            let doc = serde_json::json!({
                "graph6": witness,
                "profile": profile,
                "report": report,
            });
            let _ = writeln!(out, "{doc}");
            continue;
        }
        let _ = writeln!(out, "graph {witness}");
        let _ = writeln!(out, "order {}", profile.order);
        let _ = writeln!(out, "parameter\tgraph\tcomplement");
        for kind in &variants {
            let _ = writeln!(
                out,
                "{}\t{}\t{}",
                kind.name(),
                profile.graph.value(*kind),
                profile.complement.value(*kind)
            );
        }
        let (g_deg, c_deg) = (&profile.graph.degrees, &profile.complement.degrees);
        let _ = writeln!(
            out,
            "max-degree\t{}\t{}",
            g_deg.max_degree, c_deg.max_degree
        );
        let _ = writeln!(
            out,
            "min-degree\t{}\t{}",
            g_deg.min_degree, c_deg.min_degree
        );
        out.push_str("check\tside\tapplicable\texception\tholds\tbound\tattained\tslack\textremal\twitness\n");
        out.push_str(&report.to_text(&witness));
        out.push('\n');
    }
    Ok(clean)
}

fn emit(g: &Graph, format: OutputFormat, labels: Option<&[String]>) -> Result<String, CliError> {
    Ok(match format {
        OutputFormat::Graph6 => write_graph6(g)? + "\n",
        OutputFormat::EdgeList => write_edge_list(g),
        OutputFormat::Dot => export_dot(g, labels),
    })
}

fn construct(args: &ConstructArgs) -> Result<String, CliError> {
    let spec = FamilySpec::parse(&args.family, &args.params)?;
    let mut g = build(&spec)?;
    if args.complement {
        g = g.complement();
    }
    let format = if args.dot {
        OutputFormat::Dot
    } else if args.edge_list {
        OutputFormat::EdgeList
    } else {
        OutputFormat::Graph6
    };
    emit(&g, format, Some(&spec.vertex_labels()))
}

fn sweep(args: &SweepArgs, out: &mut String) -> Result<bool, CliError> {
    let workers = args.workers.unwrap_or_else(default_workers);
    let summaries = match (&args.order, &args.stream) {
        (Some(range), _) => sweep_orders(range.clone(), workers)?,
        (None, Some(path)) => sweep_stream(open_input(Some(path))?, workers)?,
        (None, None) => unreachable!("clap requires --order or --stream"),
    };
    let graphs: u64 = summaries.iter().map(|s| s.graph_count).sum();
    let violations: u64 = summaries.iter().map(|s| s.violation_count()).sum();
    if args.json {
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&summaries).expect("summary serializes")
        );
    } else {
        for s in &summaries {
            out.push_str(&s.to_text());
        }
        let _ = writeln!(out, "total: {graphs} graphs, {violations} violations");
    }
    Ok(violations == 0)
}

fn convert(args: &ConvertArgs) -> Result<String, CliError> {
    let mut out = String::new();
    for g in read_graphs(args.input.as_deref(), args.from)? {
        out.push_str(&emit(&g, args.to, None)?);
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let mut out = String::new();
    let clean = match &cli.command {
        Command::Compute(a) => compute(a, &mut out)?,
        Command::Construct(a) => {
            out = construct(a)?;
            true
        }
        Command::Sweep(a) => sweep(a, &mut out)?,
        Command::Convert(a) => {
            out = convert(a)?;
            true
        }
    };
    Ok((out, clean))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, clean)) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(EXIT_IO);
            }
            if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VIOLATION)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
