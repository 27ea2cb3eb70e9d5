use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rookgon::cache::Cache;
use rookgon::divisor::{is_winnable, v_reduce, Divisor};
use rookgon::gonality::{k_gonality, GonalityOptions, GonalityResult};
use rookgon::graph::{complete_graph, rook_graph, MultiGraph};
use rookgon::rank::RankOracle;
use rookgon::scramble::{
    scramble_order, set_a_avoidance, star_scramble, t_star_scramble, thm56_avoidance,
    uniform_scramble, validate_scramble, OrderReport, Scramble,
};
use rookgon::suite::{run_suite, ClaimStatus, SuiteOptions};
use rookgon::symmetry::rook_symmetry;
use rookgon::table::{emit_table, Record, RecordKind, TableFormat};
use rookgon::{Error, VertexSet};

#[derive(Parser)]
#[command(name = "rookgon", version, about = "Chip-firing gonality and scramble orders on rook graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Worker threads for parallel searches (results do not depend on it).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for randomised checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Report cache directory (falls back to $ROOKGON_CACHE).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Include wall-clock times in reports; disables the cache.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Graph generators.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// The v-reduced divisor equivalent to a divisor.
    Reduce {
        #[command(flatten)]
        host: Host,
        #[command(flatten)]
        divisor: DivisorArg,
        /// Base vertex.
        #[arg(long, default_value_t = 0)]
        vertex: usize,
    },
    /// Rank of a divisor, or a check that it is at least K.
    Rank {
        #[command(flatten)]
        host: Host,
        #[command(flatten)]
        divisor: DivisorArg,
        /// Only check rank >= K and report a theft that defeats it.
        #[arg(long)]
        at_least: Option<i64>,
    },
    /// Whether a divisor is equivalent to an effective one.
    Winnable {
        #[command(flatten)]
        host: Host,
        #[command(flatten)]
        divisor: DivisorArg,
    },
    /// Smallest degree of a divisor with rank at least K on a rook graph.
    Gonality {
        /// Rook dimensions, e.g. 3,4.
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        k: i64,
        /// Highest degree to search.
        #[arg(long)]
        cap: Option<i64>,
        #[arg(long, value_enum, default_value_t = Toggle::On)]
        symmetry: Toggle,
        /// Skip degrees below this known lower bound.
        #[arg(long)]
        lower_bound: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Scramble orders and avoidance constructions.
    #[command(subcommand)]
    Scramble(ScrambleCommand),
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "smoke")]
        suite: String,
        /// Wall-clock budget; claims that would not fit are skipped.
        #[arg(long)]
        budget_secs: Option<f64>,
    },
}

#[derive(Subcommand)]
enum GraphCommand {
    /// Print a rook graph (or a complete graph with one dimension) as JSON.
    Gen {
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<usize>,
    },
}

#[derive(Subcommand)]
enum ScrambleCommand {
    /// Hitting number, minimum egg cut and order of a scramble.
    Order {
        #[arg(long, value_enum, conflicts_with = "file")]
        family: Option<Family>,
        #[arg(long, value_delimiter = ',')]
        dims: Vec<usize>,
        /// Egg size for the uniform family.
        #[arg(long)]
        k: Option<usize>,
        /// Scramble JSON: {"host": <graph or dims>, "eggs": [[...], ...]}.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Explicit avoidance sets.
    Avoidance {
        #[arg(long, value_enum)]
        construction: Construction,
        /// n,m for the staircase; n for the diagonal set.
        #[arg(long, value_delimiter = ',', required = true)]
        params: Vec<usize>,
    },
}

#[derive(Args)]
struct Host {
    /// Rook dimensions; a single value gives the complete graph.
    #[arg(long, value_delimiter = ',', conflicts_with = "graph")]
    dims: Vec<usize>,
    /// Graph JSON file.
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct DivisorArg {
    /// Chips per vertex, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
    divisor: Vec<i64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Toggle {
    On,
    Off,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Family {
    Star,
    Uniform,
    Tstar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// Staircase set of size m+1 for the star scramble on n x m.
    #[value(alias = "staircase")]
    Thm56,
    /// Avoidance set on n x n x n with n+2 components of size n-1.
    #[value(name = "setA", alias = "diagonal")]
    SetA,
}

/// A failure with its exit status: 1 for failed claims, 2 for bad input.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn graph_for(dims: &[usize]) -> rookgon::Result<MultiGraph> {
    match dims {
        [n] => complete_graph(*n),
        _ => rook_graph(dims),
    }
}

fn load_host(host: &Host) -> CliResult<MultiGraph> {
    match (&host.graph, host.dims.is_empty()) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).map_err(Error::from)?;
            Ok(serde_json::from_str(&text).map_err(Error::from)?)
        }
        (None, false) => Ok(graph_for(&host.dims)?),
        (None, true) => Err(usage("give --dims or --graph")),
    }
}

fn to_json<T: Serialize>(value: &T) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(value).map_err(Error::from)? + "\n")
}

fn write_out(path: Option<&Path>, text: &str) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::from(e).into()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Runs `compute` through the cache unless timings were requested.
fn cached<T, F>(g: &Global, request: &impl Serialize, compute: F) -> CliResult<T>
where
    T: Serialize + serde::de::DeserializeOwned,
    F: FnOnce() -> rookgon::Result<T>,
{
    match Cache::configured(g.cache_dir.as_deref()).filter(|_| !g.timings) {
        Some(cache) => {
            let key = Cache::key(request)?;
            let (v, hit) = cache.get_or_compute(&key, compute)?;
            log::info!("cache {} {key}", if hit { "hit" } else { "miss" });
            Ok(v)
        }
        None => Ok(compute()?),
    }
}

#[derive(Serialize)]
struct GonalityRequest<'a> {
    command: &'static str,
    dims: &'a [usize],
    k: i64,
    cap: Option<i64>,
    symmetry: bool,
    lower_bound: Option<i64>,
}

#[derive(Serialize)]
struct OrderRequest {
    command: &'static str,
    scramble: String,
}

#[derive(Serialize)]
struct RankReport {
    rank: Option<i64>,
    at_least: Option<i64>,
    holds: Option<bool>,
    counterexample: Option<Divisor>,
}

#[derive(Serialize)]
struct AvoidanceReport {
    construction: &'static str,
    params: Vec<usize>,
    dims: Vec<usize>,
    size: usize,
    vertices: VertexSet,
    coordinates: Vec<Vec<usize>>,
    components: Vec<usize>,
    egg_size: usize,
    egg_free: bool,
}

fn run(cli: Cli) -> CliResult<()> {
    let g = &cli.global;
    let out = g.output.as_deref();
    match cli.command {
        Command::Graph(GraphCommand::Gen { dims }) => write_out(out, &to_json(&graph_for(&dims)?)?),
        Command::Reduce { host, divisor, vertex } => {
            let graph = load_host(&host)?;
            let r = v_reduce(&graph, &Divisor::new(divisor.divisor), vertex)?;
            write_out(out, &to_json(&r)?)
        }
        Command::Winnable { host, divisor } => {
            let graph = load_host(&host)?;
            let d = Divisor::new(divisor.divisor).checked_for(&graph)?;
            write_out(out, &to_json(&serde_json::json!({ "winnable": is_winnable(&graph, &d) }))?)
        }
        Command::Rank { host, divisor, at_least } => {
            let graph = load_host(&host)?;
            let d = Divisor::new(divisor.divisor).checked_for(&graph)?;
            let mut oracle = RankOracle::new(&graph);
            let report = match at_least {
                Some(k) => {
                    let check = oracle.verify_rank_at_least(&d, k);
                    RankReport {
                        rank: None,
                        at_least: Some(k),
                        holds: Some(check.holds),
                        counterexample: check.counterexample,
                    }
                }
                None => RankReport { rank: Some(oracle.rank(&d)), at_least: None, holds: None, counterexample: None },
            };
            write_out(out, &to_json(&report)?)?;
            if report.holds == Some(false) {
                return Err(Failure { code: 1, message: "rank check failed".into() });
            }
            Ok(())
        }
        Command::Gonality { dims, k, cap, symmetry, lower_bound, format } => {
            let graph = rook_graph(&dims)?;
            let use_sym = matches!(symmetry, Toggle::On);
            let request = GonalityRequest { command: "gonality", dims: &dims, k, cap, symmetry: use_sym, lower_bound };
            let result: GonalityResult = cached(g, &request, || {
                let opts = GonalityOptions {
                    degree_cap: cap,
                    symmetry: if use_sym { Some(rook_symmetry(&dims)?) } else { None },
                    lower_bound,
                };
                let mut r = k_gonality(&graph, k, &opts)?;
                if !g.timings {
                    r.wall_time_ms = None;
                }
                Ok(r)
            })?;
            let text = match format {
                Format::Json => to_json(&result)?,
                Format::Csv => emit_table(RecordKind::Gonality, &[Record::Gonality(result)], TableFormat::Csv)?,
            };
            write_out(out, &text)
        }
        Command::Scramble(ScrambleCommand::Order { family, dims, k, file, format }) => {
            let s = match (family, file) {
                (_, Some(path)) => {
                    let text = std::fs::read_to_string(path).map_err(Error::from)?;
                    serde_json::from_str::<Scramble>(&text).map_err(Error::from)?
                }
                (Some(Family::Tstar), None) => t_star_scramble(),
                (Some(Family::Star), None) => match dims[..] {
                    [n, m] => star_scramble(n, m)?,
                    _ => return Err(usage("the star family needs --dims N,M")),
                },
                (Some(Family::Uniform), None) => {
                    let k = k.ok_or_else(|| usage("the uniform family needs --k"))?;
                    uniform_scramble(&rook_graph(&dims)?, k)?
                }
                (None, None) => return Err(usage("give --family or --file")),
            };
            let violations = validate_scramble(&s);
            if !violations.is_empty() {
                return Err(usage(format!("invalid scramble: {}", to_json(&violations)?.trim())));
            }
            let request = OrderRequest { command: "scramble-order", scramble: s.digest() };
            let report: OrderReport = cached(g, &request, || {
                let mut r = scramble_order(&s)?;
                if !g.timings {
                    r.wall_time_ms = None;
                }
                Ok(r)
            })?;
            let text = match format {
                Format::Json => to_json(&report)?,
                Format::Csv => emit_table(RecordKind::Order, &[Record::Order(report)], TableFormat::Csv)?,
            };
            write_out(out, &text)
        }
        Command::Scramble(ScrambleCommand::Avoidance { construction, params }) => {
            let (name, set, dims, egg_size) = match (construction, &params[..]) {
                (Construction::Thm56, &[n, m]) => ("thm56", thm56_avoidance(n, m)?, vec![n, m], n - 1),
                (Construction::SetA, &[n]) => ("setA", set_a_avoidance(n)?, vec![n, n, n], n),
                (Construction::Thm56, _) => return Err(usage("thm56 takes --params N,M")),
                (Construction::SetA, _) => return Err(usage("setA takes --params N")),
            };
            let host = rook_graph(&dims)?;
            // the staircase must avoid every egg; set A must avoid every connected n-set
            let egg_free = rookgon::connected_subsets(&host, egg_size).all(|e| !e.is_subset(set));
            let report = AvoidanceReport {
                construction: name,
                params: params.clone(),
                size: set.len(),
                vertices: set,
                coordinates: set.iter().map(|v| host.coords(v).unwrap_or_default()).collect(),
                components: host.components(set).iter().map(|c| c.len()).collect(),
                dims,
                egg_size,
                egg_free,
            };
            write_out(out, &to_json(&report)?)?;
            if !egg_free {
                return Err(Failure { code: 1, message: "construction contains an egg".into() });
            }
            Ok(())
        }
        Command::Verify { suite, budget_secs } => {
            let opts = SuiteOptions { budget_secs, seed: g.seed, threads: None, timings: g.timings };
            let report = run_suite(&suite, &opts)?;
            write_out(out, &to_json(&report)?)?;
            let failed = report.count(ClaimStatus::Fail);
            eprintln!(
                "{}: {} passed, {} failed, {} skipped",
                report.suite,
                report.count(ClaimStatus::Pass),
                failed,
                report.count(ClaimStatus::Skipped)
            );
            if failed > 0 {
                return Err(Failure { code: 1, message: format!("{failed} claim(s) failed") });
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    if let Some(t) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
