use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dynchroma::json::{
    order_from_json, order_to_json, ColNumberJson, ColorReportJson, ColoringJson, ExactReportJson,
    GraphJson, OrderReportJson, ReportJson,
};
use dynchroma::meta::{load_sidecar, sidecar_path, Sidecar};
use dynchroma::{parse_dimacs, parse_edge_list, write_dimacs, GenSpec, Structure};
use dynchroma_core::{
    exact_chi_r, exact_col_t, exact_col_t_bruteforce, greedy_r_dynamic, min_backreach_order,
    order_width, product_order, reverse_peo_order, subdivision_order, theorem_bound,
    verify_r_dynamic, ChiOptions, ChiOutcome, ColNumberResult, Coloring, Graph, LinearOrder,
    OrderError, VerificationReport, DEFAULT_BRUTEFORCE_CAP, DEFAULT_DP_CAP, DEFAULT_NODE_BUDGET,
};
use serde::Serialize;

/// r-dynamic colorings from strong coloring number orders.
#[derive(Parser)]
#[command(name = "dynchroma", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a spec such as `subdivide:complete:5:1`.
    Generate {
        /// Generator spec.
        #[arg(long = "gen")]
        spec: String,
        /// Default seed for `_` seeds in the spec.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; structure goes to `<out>.meta.json`.
        #[arg(long)]
        out: Option<PathBuf>,
        /// `text` writes DIMACS, `json` writes {"n", "edges"}.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute a vertex order and report its reach widths.
    Order {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = Strategy::MinBackreach)]
        strategy: Strategy,
        /// Reach radius.
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// Vertex cap for the exact strategies.
        #[arg(long)]
        cap: Option<usize>,
        /// Also write the order as a JSON array here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the greedy r-dynamic coloring along an order and verify it.
    Color {
        #[command(flatten)]
        input: Input,
        /// Order file (JSON array); otherwise `--strategy` computes one at t = 2.
        #[arg(long)]
        order: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Strategy::MinBackreach, conflicts_with = "order")]
        strategy: Strategy,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Vertex cap for the exact strategies.
        #[arg(long)]
        cap: Option<usize>,
        /// Also write the coloring JSON here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exact r-dynamic chromatic number by branch and bound.
    Exact {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Maximum number of color assignments.
        #[arg(long, env = "DYNCHROMA_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Largest palette to try (default Δ² + 1).
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Verify a coloring file; exits 1 when it is not r-dynamic.
    Check {
        #[command(flatten)]
        input: Input,
        /// Coloring file {"colors": [...], "palette": d}.
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Graph file: DIMACS (.col), JSON (.json) or an edge list.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Generator spec instead of a file.
    #[arg(long = "gen")]
    spec: Option<String>,
    /// Default seed for `_` seeds in the spec.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Strategy {
    ExactDp,
    ExactBrute,
    ReversePeo,
    Product,
    Subdivision,
    MinBackreach,
    Natural,
}

impl Strategy {
    fn name(self) -> &'static str {
        match self {
            Strategy::ExactDp => "exact-dp",
            Strategy::ExactBrute => "exact-brute",
            Strategy::ReversePeo => "reverse-peo",
            Strategy::Product => "product",
            Strategy::Subdivision => "subdivision",
            Strategy::MinBackreach => "min-backreach",
            Strategy::Natural => "natural",
        }
    }
}

enum Failure {
    Verification,
    Usage(String),
    Exhausted(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        match self {
            Failure::Verification => ExitCode::from(1),
            Failure::Usage(message) => {
                eprintln!("error: {message}");
                ExitCode::from(2)
            }
            Failure::Exhausted(message) => {
                eprintln!("error: {message}");
                ExitCode::from(3)
            }
        }
    }
}

fn usage(err: impl ToString) -> Failure {
    Failure::Usage(err.to_string())
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}

fn looks_like_dimacs(text: &str) -> bool {
    text.lines()
        .map(str::trim_start)
        .find(|l| !l.is_empty())
        .is_some_and(|l| l.starts_with("p ") || l.starts_with("c ") || l == "c")
}

fn parse_graph(path: &Path, text: &str) -> Result<Graph, Failure> {
    let extension = path.extension().and_then(|e| e.to_str()).unwrap_or("");
    let graph = match extension {
        "json" => {
            let json: GraphJson = serde_json::from_str(text).map_err(usage)?;
            Graph::try_from(&json).map_err(usage)?
        }
        "col" | "dimacs" => parse_dimacs(text).map_err(usage)?,
        _ if looks_like_dimacs(text) => parse_dimacs(text).map_err(usage)?,
        _ => parse_edge_list(text).map_err(usage)?,
    };
    Ok(graph)
}

fn load(input: &Input) -> Result<(Graph, Option<Structure>), Failure> {
    if let Some(spec) = &input.spec {
        let generated = spec
            .parse::<GenSpec>()
            .and_then(|s| s.build(input.seed))
            .map_err(usage)?;
        return Ok((generated.graph, generated.structure));
    }
    let path = input.input.as_ref().expect("clap enforces one input");
    let graph = parse_graph(path, &read(path)?)?;
    let structure = load_sidecar(path, &graph).map_err(usage)?;
    Ok((graph, structure))
}

fn cap_error(err: OrderError) -> Failure {
    match err {
        OrderError::CapExceeded { .. } => Failure::Exhausted(err.to_string()),
        other => usage(other),
    }
}

fn compute_order(
    strategy: Strategy,
    graph: &Graph,
    structure: Option<&Structure>,
    t: usize,
    cap: Option<usize>,
) -> Result<ColNumberResult, Failure> {
    let missing = |family: &str| {
        usage(format!(
            "strategy {} needs {family} structure (use --gen or a .meta.json sidecar)",
            strategy.name()
        ))
    };
    let order = match strategy {
        Strategy::ExactDp => return exact_col_t(graph, t, cap.unwrap_or(DEFAULT_DP_CAP)).map_err(cap_error),
        Strategy::ExactBrute => {
            return exact_col_t_bruteforce(graph, t, cap.unwrap_or(DEFAULT_BRUTEFORCE_CAP)).map_err(cap_error)
        }
        Strategy::ReversePeo => match structure {
            Some(Structure::KTree(kt)) => reverse_peo_order(kt).map_err(usage)?,
            _ => return Err(missing("k-tree")),
        },
        Strategy::Product => match structure {
            Some(Structure::Product(lp)) => {
                let base = reverse_peo_order(&lp.base).map_err(usage)?;
                product_order(lp, &base).map_err(usage)?
            }
            _ => return Err(missing("layered product")),
        },
        Strategy::Subdivision => match structure {
            Some(Structure::Subdivision(sg)) => subdivision_order(sg),
            _ => return Err(missing("subdivision")),
        },
        Strategy::MinBackreach => min_backreach_order(graph, t),
        Strategy::Natural => LinearOrder::identity(graph.vertex_count()),
    };
    ColNumberResult::upper_bound(graph, order, t).map_err(usage)
}

fn generate(spec: &str, seed: u64, out: Option<&Path>, format: Format) -> Result<(), Failure> {
    let generated = spec.parse::<GenSpec>().and_then(|s| s.build(seed)).map_err(usage)?;
    let text = match format {
        Format::Text => write_dimacs(&generated.graph),
        Format::Json => to_json(&GraphJson::from(&generated.graph)) + "\n",
    };
    match out {
        Some(path) => {
            write(path, &text)?;
            if let Some(structure) = &generated.structure {
                write(&sidecar_path(path), &(to_json(&Sidecar::from(structure)) + "\n"))?;
            }
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn order_cmd(
    input: &Input,
    strategy: Strategy,
    t: usize,
    cap: Option<usize>,
    out: Option<&Path>,
    format: Format,
) -> Result<(), Failure> {
    let (graph, structure) = load(input)?;
    let result = compute_order(strategy, &graph, structure.as_ref(), t, cap)?;
    let report = OrderReportJson {
        strategy: strategy.name().into(),
        t,
        order: order_to_json(&result.witness),
        width: order_width(&graph, &result.witness, t),
        width_2: order_width(&graph, &result.witness, 2),
        col: ColNumberJson::from(&result),
    };
    if let Some(path) = out {
        write(path, &(serde_json::to_string(&report.order).expect("array") + "\n"))?;
    }
    match format {
        Format::Json => println!("{}", to_json(&report)),
        Format::Text => {
            println!("strategy: {}", report.strategy);
            println!("order: {:?}", report.order);
            println!("width (t = {t}): {}", report.width);
            println!("width (t = 2): {}", report.width_2);
            println!("col_{t} {} {}", if result.is_exact() { "=" } else { "<=" }, result.value);
        }
    }
    Ok(())
}

fn render_report(report: &VerificationReport, coloring: &Coloring) -> String {
    let mut text = String::new();
    for &(u, v) in &report.proper_violations {
        writeln!(text, "edge {u}-{v}: both endpoints colored {}", coloring.color(u)).unwrap();
    }
    for d in &report.dynamic_violations {
        writeln!(
            text,
            "vertex {}: sees {} color(s) {:?}, requires {}",
            d.vertex,
            d.seen.len(),
            d.seen,
            d.required
        )
        .unwrap();
    }
    writeln!(text, "r = {}: {}", report.r, if report.ok { "ok" } else { "NOT r-dynamic" }).unwrap();
    text
}

#[allow(clippy::too_many_arguments)]
fn color_cmd(
    input: &Input,
    order_path: Option<&Path>,
    strategy: Strategy,
    r: usize,
    cap: Option<usize>,
    out: Option<&Path>,
    format: Format,
) -> Result<(), Failure> {
    let (graph, structure) = load(input)?;
    let (order, source) = match order_path {
        Some(path) => {
            let sequence: Vec<usize> = serde_json::from_str(&read(path)?).map_err(usage)?;
            let order = order_from_json(sequence).map_err(usage)?;
            (order, path.display().to_string())
        }
        None => {
            let result = compute_order(strategy, &graph, structure.as_ref(), 2, cap)?;
            (result.witness, strategy.name().to_owned())
        }
    };
    if order.len() != graph.vertex_count() {
        return Err(usage(OrderError::SizeMismatch {
            order: order.len(),
            graph: graph.vertex_count(),
        }));
    }
    let width_2 = order_width(&graph, &order, 2);
    let (coloring, _) = greedy_r_dynamic(&graph, &order, r);
    let report = verify_r_dynamic(&graph, &coloring, r).map_err(usage)?;
    let bound = if r == 0 { width_2 } else { theorem_bound(width_2, r) };
    let json = ColorReportJson {
        r,
        order_source: source,
        width_2,
        bound,
        palette: coloring.palette_size(),
        coloring: ColoringJson::from(&coloring),
        verification: ReportJson::from(&report),
    };
    if let Some(path) = out {
        write(path, &(to_json(&json.coloring) + "\n"))?;
    }
    match format {
        Format::Json => println!("{}", to_json(&json)),
        Format::Text => {
            println!("order: {}", json.order_source);
            println!("2-reach width: {width_2}");
            println!("palette: {} (bound {bound})", json.palette);
            println!("colors: {:?}", coloring.colors());
            print!("{}", render_report(&report, &coloring));
        }
    }
    if report.ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn exact_cmd(input: &Input, r: usize, budget: u64, cap: Option<usize>, format: Format) -> Result<(), Failure> {
    let (graph, _) = load(input)?;
    let outcome = exact_chi_r(&graph, r, &ChiOptions { color_cap: cap, node_budget: budget });
    let json = ExactReportJson::new(r, &outcome);
    match format {
        Format::Json => println!("{}", to_json(&json)),
        Format::Text => match &outcome {
            ChiOutcome::Exact { value, coloring } => {
                println!("chi_{r} = {value}");
                println!("colors: {:?}", coloring.colors());
            }
            ChiOutcome::Unknown { lower, upper, .. } => println!("{lower} <= chi_{r} <= {upper} (budget exhausted)"),
            ChiOutcome::LowerBoundOnly { lower } => println!("chi_{r} >= {lower} (color cap reached)"),
        },
    }
    match outcome {
        ChiOutcome::Exact { .. } => Ok(()),
        ChiOutcome::Unknown { .. } => Err(Failure::Exhausted(format!("node budget of {budget} exhausted"))),
        ChiOutcome::LowerBoundOnly { .. } => Err(Failure::Exhausted("color cap reached".into())),
    }
}

fn check_cmd(input: &Input, coloring_path: &Path, r: usize, format: Format) -> Result<(), Failure> {
    let (graph, _) = load(input)?;
    let json: ColoringJson = serde_json::from_str(&read(coloring_path)?).map_err(usage)?;
    let coloring = Coloring::try_from(json).map_err(usage)?;
    let report = verify_r_dynamic(&graph, &coloring, r).map_err(usage)?;
    match format {
        Format::Json => println!("{}", to_json(&ReportJson::from(&report))),
        Format::Text => print!("{}", render_report(&report, &coloring)),
    }
    if report.ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Generate { spec, seed, out, format } => generate(spec, *seed, out.as_deref(), *format),
        Command::Order { input, strategy, t, cap, out, format } => {
            order_cmd(input, *strategy, *t, *cap, out.as_deref(), *format)
        }
        Command::Color { input, order, strategy, r, cap, out, format } => {
            color_cmd(input, order.as_deref(), *strategy, *r, *cap, out.as_deref(), *format)
        }
        Command::Exact { input, r, budget, cap, format } => exact_cmd(input, *r, *budget, *cap, *format),
        Command::Check { input, coloring, r, format } => check_cmd(input, coloring, *r, *format),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => failure.exit(),
    }
}
