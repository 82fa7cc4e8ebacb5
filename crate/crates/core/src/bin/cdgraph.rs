use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use cdgraph::catalog::{all_fixtures, load_fixture, FixtureKind};
use cdgraph::chargraph::build_graph;
use cdgraph::degrees::{character_degrees, DegreeMultiset};
use cdgraph::graphkit::{SimpleGraph, MAX_VERTICES};
use cdgraph::permgroup::{PermGroup, DEFAULT_ORDER_CAP};
use cdgraph::spectrum::{char_poly, spectrum_summary};
use cdgraph::theorems::{analyze, screen_solvable_feasibility, AnalysisInput, AnalysisReport, Solvability};
use cdgraph::Error;

#[derive(Parser)]
#[command(name = "cdgraph", version, about = "Character degree graphs and their structural checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline: group, degrees, graph, checks.
    Analyze(RunArgs),
    /// Necessary conditions for a graph to come from a solvable group.
    Screen(RunArgs),
    /// Character degrees of a permutation group.
    Degrees(RunArgs),
    /// Characteristic polynomial and eigenvalue summary of the graph.
    Spectrum(RunArgs),
    /// List fixtures, or print one.
    Catalog {
        name: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Analyze every input file in a directory.
    ///
    /// Files are picked by extension: `.group`, `.degrees`, `.graph` (edge
    /// list) and `.json` (graph JSON). Output follows file name order.
    Batch {
        dir: PathBuf,
        #[arg(long, value_enum, default_value_t = SolvableArg::Auto)]
        solvable: SolvableArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
        max_group_order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Cycle-notation generators, group JSON, or a file holding either.
    #[arg(long, group = "source")]
    group: Option<String>,
    /// Comma list or JSON array of degrees, or a file.
    #[arg(long, group = "source")]
    degrees: Option<String>,
    /// Edge list such as "3-5;2;17", or a file.
    #[arg(long, group = "source")]
    graph: Option<String>,
    /// Graph JSON, or a file.
    #[arg(long, group = "source")]
    graph_json: Option<String>,
    #[arg(long, group = "source")]
    fixture: Option<String>,
    /// Defaults to `auto` for groups and `unknown` otherwise.
    #[arg(long, value_enum)]
    solvable: Option<SolvableArg>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_ORDER_CAP)]
    max_group_order: usize,
    #[arg(long, default_value_t = MAX_VERTICES)]
    max_vertices: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolvableArg {
    True,
    False,
    Auto,
    Unknown,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

/// Failure modes mapped to exit codes 2 and 3.
enum Failure {
    Input(String),
    Limit(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_resource_limit() {
            Failure::Limit(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Limit(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Limit(m) => m,
        }
    }
}

/// Rendered output and exit code.
type Outcome = Result<(String, u8), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, result) = match cli.command {
        Command::Analyze(a) => (a.out.clone(), run_analyze(&a)),
        Command::Screen(a) => (a.out.clone(), run_screen(&a)),
        Command::Degrees(a) => (a.out.clone(), run_degrees(&a)),
        Command::Spectrum(a) => (a.out.clone(), run_spectrum(&a)),
        Command::Catalog { name, format, out } => (out, run_catalog(name.as_deref(), format)),
        Command::Batch { dir, solvable, format, max_group_order, out } => {
            (out, run_batch(&dir, solvable, format, max_group_order))
        }
    };
    match result {
        Ok((text, code)) => {
            if let Err(e) = emit(&text, out.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> std::io::Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

/// An inline value, or the contents of the file it names.
fn read_source(value: &str) -> Result<String, Failure> {
    let path = Path::new(value);
    if path.is_file() {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{value}: {e}")))
    } else {
        Ok(value.to_string())
    }
}

fn check_vertices(g: &SimpleGraph, cap: usize) -> Result<(), Failure> {
    if g.n() > cap {
        return Err(Error::GraphTooLarge { n: g.n(), cap }.into());
    }
    Ok(())
}

fn resolve_input(a: &RunArgs) -> Result<AnalysisInput, Failure> {
    let input = if let Some(v) = &a.group {
        let text = read_source(v)?;
        let group = PermGroup::parse(&text, a.max_group_order)?;
        AnalysisInput::Group { group, description: text.trim().to_string() }
    } else if let Some(v) = &a.degrees {
        AnalysisInput::Degrees(DegreeMultiset::parse(&read_source(v)?)?)
    } else if let Some(v) = &a.graph {
        AnalysisInput::Graph(SimpleGraph::parse_edge_list(read_source(v)?.trim())?)
    } else if let Some(v) = &a.graph_json {
        AnalysisInput::Graph(SimpleGraph::parse_json(&read_source(v)?)?)
    } else if let Some(name) = &a.fixture {
        load_fixture(name)?.input(a.max_group_order)?
    } else {
        return Err(Failure::Input(
            "one of --group, --degrees, --graph, --graph-json or --fixture is required".into(),
        ));
    };
    if let AnalysisInput::Graph(g) = &input {
        check_vertices(g, a.max_vertices)?;
    }
    Ok(input)
}

fn solvability(arg: Option<SolvableArg>, input: &AnalysisInput) -> Solvability {
    let is_group = matches!(input, AnalysisInput::Group { .. });
    match arg {
        Some(SolvableArg::True) => Solvability::Solvable,
        Some(SolvableArg::False) => Solvability::Nonsolvable,
        Some(SolvableArg::Unknown) => Solvability::Unknown,
        Some(SolvableArg::Auto) => Solvability::Auto,
        None if is_group => Solvability::Auto,
        None => Solvability::Unknown,
    }
}

fn input_graph(input: &AnalysisInput, max_vertices: usize) -> Result<SimpleGraph, Failure> {
    let g = match input {
        AnalysisInput::Group { group, .. } => build_graph(&character_degrees(group)?)?.to_simple_graph(),
        AnalysisInput::Degrees(d) => build_graph(d)?.to_simple_graph(),
        AnalysisInput::Graph(g) => g.clone(),
    };
    check_vertices(&g, max_vertices)?;
    Ok(g)
}

fn render(report: &AnalysisReport, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json_string(),
        Format::Dot => report.to_dot(),
    }
}

fn run_analyze(a: &RunArgs) -> Outcome {
    let input = resolve_input(a)?;
    let solvability = match (&a.fixture, a.solvable) {
        (Some(name), None) => load_fixture(name)?.solvability(),
        _ => solvability(a.solvable, &input),
    };
    let report = analyze(&input, solvability)?;
    Ok((render(&report, a.format), u8::from(report.failed())))
}

fn run_screen(a: &RunArgs) -> Outcome {
    let input = resolve_input(a)?;
    let g = input_graph(&input, a.max_vertices)?;
    let report = screen_solvable_feasibility(&g)?;
    Ok((render(&report, a.format), u8::from(report.failed())))
}

fn run_degrees(a: &RunArgs) -> Outcome {
    let d = match resolve_input(a)? {
        AnalysisInput::Group { group, .. } => character_degrees(&group)?,
        AnalysisInput::Degrees(d) => d,
        AnalysisInput::Graph(_) => return Err(Failure::Input("degrees needs a group or degree input".into())),
    };
    let text = match a.format {
        Format::Text => d.to_string(),
        Format::Json => serde_json::to_string_pretty(&d).expect("degrees serialize"),
        Format::Dot => return Err(Failure::Input("degrees has no DOT output".into())),
    };
    Ok((text, 0))
}

fn run_spectrum(a: &RunArgs) -> Outcome {
    let g = input_graph(&resolve_input(a)?, a.max_vertices)?;
    let p = char_poly(&g);
    let max_abs = (0..g.n()).map(|v| g.degree(v)).max().unwrap_or(0) as i64;
    let summary = spectrum_summary(&p, max_abs);
    let text = match a.format {
        Format::Text => {
            let ints: Vec<String> = summary
                .integer_eigenvalues
                .iter()
                .map(|&(l, m)| if m == 1 { l.to_string() } else { format!("{l} (×{m})") })
                .collect();
            let mut lines = vec![
                format!("characteristic polynomial: {p}"),
                format!("distinct eigenvalues: {}", summary.distinct_count),
                format!("integer eigenvalues: {}", if ints.is_empty() { "none".into() } else { ints.join(", ") }),
            ];
            if summary.has_irrational_part {
                lines.push(format!("irrational eigenvalues: {} with multiplicity", summary.irrational_multiplicity));
            }
            lines.join("\n")
        }
        Format::Json => serde_json::to_string_pretty(&json!({
            "polynomial": p.to_json(),
            "display": p.to_string(),
            "summary": summary,
        }))
        .expect("spectrum serializes"),
        Format::Dot => return Err(Failure::Input("spectrum has no DOT output".into())),
    };
    Ok((text, 0))
}

fn run_catalog(name: Option<&str>, format: Format) -> Outcome {
    if let Some(name) = name {
        return Ok((load_fixture(name)?.to_json(), 0));
    }
    let fixtures = all_fixtures()?;
    let kind = |k: FixtureKind| match k {
        FixtureKind::Group => "group",
        FixtureKind::DegreeSet => "degree-set",
        FixtureKind::RawGraph => "raw-graph",
    };
    let text = match format {
        Format::Json => serde_json::to_string_pretty(
            &fixtures
                .iter()
                .map(|f| json!({ "name": f.name, "kind": f.kind, "description": f.description }))
                .collect::<Vec<_>>(),
        )
        .expect("catalog serializes"),
        _ => fixtures
            .iter()
            .map(|f| format!("{:<26}{:<12}{}", f.name, kind(f.kind), f.description))
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok((text, 0))
}

fn batch_input(path: &Path, cap: usize) -> Result<AnalysisInput, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Ok(match path.extension().and_then(|e| e.to_str()) {
        Some("group") => AnalysisInput::Group {
            group: PermGroup::parse(&text, cap)?,
            description: text.trim().to_string(),
        },
        Some("degrees") => AnalysisInput::Degrees(DegreeMultiset::parse(&text)?),
        Some("graph") => AnalysisInput::Graph(SimpleGraph::parse_edge_list(text.trim())?),
        Some("json") => AnalysisInput::Graph(SimpleGraph::parse_json(&text)?),
        _ => unreachable!("filtered by extension"),
    })
}

/// `auto` on a non-group batch input falls back to `unknown`.
fn batch_solvability(arg: SolvableArg, input: &AnalysisInput) -> Solvability {
    match (arg, input) {
        (SolvableArg::Auto, AnalysisInput::Group { .. }) => Solvability::Auto,
        (SolvableArg::Auto, _) => Solvability::Unknown,
        _ => solvability(Some(arg), input),
    }
}

fn run_batch(dir: &Path, solvable: SolvableArg, format: Format, cap: usize) -> Outcome {
    if format == Format::Dot {
        return Err(Failure::Input("batch has no DOT output".into()));
    }
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.is_file()
                && matches!(p.extension().and_then(|e| e.to_str()), Some("group" | "degrees" | "graph" | "json"))
        })
        .collect();
    paths.sort();

    let results: Vec<Result<AnalysisReport, Failure>> = paths
        .par_iter()
        .map(|p| {
            let input = batch_input(p, cap)?;
            Ok(analyze(&input, batch_solvability(solvable, &input))?)
        })
        .collect();

    let mut code = 0u8;
    let mut text_parts = Vec::new();
    let mut json_parts = Vec::new();
    for (path, result) in paths.iter().zip(results) {
        let file = path.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        match result {
            Ok(report) => {
                code = code.max(u8::from(report.failed()));
                text_parts.push(format!("== {file} ==\n{}", report.to_text()));
                let value: Value = serde_json::to_value(&report).expect("report serializes");
                json_parts.push(json!({ "file": file, "report": value }));
            }
            Err(f) => {
                code = code.max(f.code());
                eprintln!("error: {file}: {}", f.message());
                text_parts.push(format!("== {file} ==\nerror: {}", f.message()));
                json_parts.push(json!({ "file": file, "error": f.message(), "exit_code": f.code() }));
            }
        }
    }
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&json_parts).expect("batch serializes"),
        _ => text_parts.join("\n\n"),
    };
    Ok((text, code))
}
