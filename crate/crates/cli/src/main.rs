//! domchain: exact domination-chain computation on small graphs, family
//! generation, induced-containment checks, corpus scans, witness
//! searches, and built-in verification suites.
//!
//! Exit codes: 0 success, 1 usage or spec-grammar error, 2 computation
//! or input failure (messages name the source and line), 3 a verify
//! suite failed or hit a cap.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand};
use domchain_core::{
    bipartite_ramsey_search, bound_profile, bound_profile_exhaustive_connected, emit_graph6,
    full_report, ramsey_witness_search, EmpiricalBound, FamilySpec, ForbiddenFamily, Parameter,
    ParameterReport, RamseyError, ScanResult,
};
use rayon::prelude::*;

mod render;
mod sources;
mod suites;

use render::OutputFormat;
use sources::Loaded;

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_COMPUTE: i32 = 2;
const EXIT_VERIFY: i32 = 3;

const SPEC_HINT: &str =
    "family specs look like P7, C5, K4, E3, K2,3, K1,4*, K5*, CK4, BS3^2, F4, or 3xK2";

#[derive(Parser)]
#[command(
    name = "domchain",
    version,
    about = "Exact domination, independence, and irredundance numbers on small graphs",
    after_help = "Graphs are read as graph6, one per line, unless --edges is given. \
                  With no file arguments a command reads standard input. The \
                  DOMCHAIN_MAX_ORDER environment variable overrides the default \
                  input capacity of 24 vertices (hard maximum 32)."
)]
struct Cli {
    /// Output format; verify always prints plain text.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the nine-parameter report for each input graph.
    Compute(ComputeArgs),
    /// Build a named family member and print its graph6 line.
    Gen(GenArgs),
    /// Check input graphs for induced copies of forbidden families.
    Hfree(HfreeArgs),
    /// Profile a parameter over the family-free connected members of a corpus.
    Scan(ScanArgs),
    /// Search for extremal witnesses below a clique/stable or block threshold.
    Ramsey(RamseyArgs),
    /// Re-derive the library's frozen claims; exits 3 if any suite fails.
    Verify(VerifyArgs),
}

#[derive(clap::Args)]
struct ComputeArgs {
    /// Input files; standard input when none are given.
    files: Vec<PathBuf>,
    /// Comma-separated value columns to emit instead of the full report
    /// (keys: ir,gamma,i,alpha,Gamma,IR,OIR,IS,IRS; case-sensitive).
    #[arg(long, value_delimiter = ',')]
    params: Vec<String>,
    /// Treat each source as one whitespace edge list ("n m" header line,
    /// then one "u v" line per edge) instead of graph6 lines.
    #[arg(long)]
    edges: bool,
}

#[derive(clap::Args)]
struct GenArgs {
    /// Family spec, e.g. P7, K1,4*, CK5, BS3^2.
    spec: String,
    /// Also print the parameter report for the generated graph.
    #[arg(long)]
    report: bool,
}

#[derive(clap::Args)]
struct HfreeArgs {
    /// Forbidden family member; repeat for multi-member families.
    #[arg(long = "forbid", required = true)]
    forbid: Vec<String>,
    /// Input files; standard input when none are given.
    files: Vec<PathBuf>,
    /// Treat each source as one edge list instead of graph6 lines.
    #[arg(long)]
    edges: bool,
}

#[derive(clap::Args)]
struct ScanArgs {
    /// Parameter to profile (one key, e.g. alpha).
    #[arg(long)]
    param: String,
    /// Forbidden family member; repeat for multi-member families.
    #[arg(long = "forbid", required = true)]
    forbid: Vec<String>,
    /// Corpus files; standard input when none are given.
    files: Vec<PathBuf>,
    /// Treat each source as one edge list instead of graph6 lines.
    #[arg(long)]
    edges: bool,
    /// Scan every connected labeled graph up to this order instead of a
    /// corpus (supported up to 7).
    #[arg(long, conflicts_with = "files")]
    exhaustive_order: Option<usize>,
}

#[derive(clap::Args)]
struct RamseyArgs {
    /// Clique target for the two-colour search (use with --stable).
    #[arg(long, requires = "stable", conflicts_with = "block")]
    clique: Option<usize>,
    /// Stable-set target for the two-colour search (use with --clique).
    #[arg(long, requires = "clique", conflicts_with = "block")]
    stable: Option<usize>,
    /// Block size for the bipartite pattern search.
    #[arg(long)]
    block: Option<usize>,
    /// Largest order the two-colour search visits (exhaustive to 6,
    /// sampled above, hard cap 11).
    #[arg(long, default_value_t = 6)]
    order_cap: usize,
    /// Largest side the pattern search visits (hard cap 5).
    #[arg(long, default_value_t = 5)]
    side_cap: usize,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Suite to run; repeatable, comma lists allowed. Default: all.
    #[arg(long = "suite", value_enum, value_delimiter = ',')]
    suite: Vec<suites::Suite>,
    /// Exhaustive-audit ceiling (chain and saturation support up to 6,
    /// the inequality audits up to 7).
    #[arg(long, default_value_t = 6)]
    max_order: usize,
    /// Family size range for the oracles suite, inclusive, e.g. 2..6.
    #[arg(long, default_value = "2..6")]
    n: String,
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            std::process::exit(if err.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("--jobs must be at least 1");
            std::process::exit(EXIT_USAGE);
        }
        // Only the first initialization can win; later failures are moot.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global();
    }
    let format = cli.format;
    let code = match cli.command {
        Command::Compute(args) => run_compute(args, format),
        Command::Gen(args) => run_gen(args, format),
        Command::Hfree(args) => run_hfree(args, format),
        Command::Scan(args) => run_scan(args, format),
        Command::Ramsey(args) => run_ramsey(args, format),
        Command::Verify(args) => run_verify(args),
    };
    std::process::exit(code);
}

fn parse_params(raw: &[String]) -> Result<Vec<Parameter>, String> {
    raw.iter()
        .map(|s| {
            Parameter::from_str(s).map_err(|_| {
                format!(
                    "unknown parameter {s:?}; the keys are ir, gamma, i, alpha, Gamma, \
                     IR, OIR, IS, IRS (case-sensitive)"
                )
            })
        })
        .collect()
}

fn parse_family(specs: &[String]) -> Result<ForbiddenFamily, String> {
    let mut members = Vec::new();
    for raw in specs {
        members.push(FamilySpec::from_str(raw).map_err(|e| format!("{e}\n{SPEC_HINT}"))?);
    }
    let label = specs.join("+");
    ForbiddenFamily::from_specs(label, members).map_err(|e| e.to_string())
}

fn run_compute(args: ComputeArgs, format: OutputFormat) -> i32 {
    let params = match parse_params(&args.params) {
        Ok(p) => p,
        Err(msg) => {
            eprintln!("{msg}");
            return EXIT_USAGE;
        }
    };
    let loaded = match sources::load(&args.files, args.edges, sources::capacity()) {
        Ok(l) => l,
        Err(msg) => {
            eprintln!("{msg}");
            return EXIT_COMPUTE;
        }
    };
    let outcomes: Vec<Result<(String, ParameterReport), (String, String)>> = loaded
        .par_iter()
        .map(|entry| match entry {
            Loaded::Ok { origin, graph } => full_report(graph)
                .map(|report| (origin.clone(), report))
                .map_err(|e| (origin.clone(), e.to_string())),
            Loaded::Failed { origin, message } => Err((origin.clone(), message.clone())),
        })
        .collect();
    let mut failures = 0usize;
    let mut rows: Vec<(String, ParameterReport)> = Vec::new();
    for outcome in outcomes {
        match outcome {
            Ok(row) => rows.push(row),
            Err((origin, message)) => {
                eprintln!("{origin}: {message}");
                failures += 1;
            }
        }
    }
    let borrowed: Vec<(String, &ParameterReport)> =
        rows.iter().map(|(o, r)| (o.clone(), r)).collect();
    if !borrowed.is_empty() {
        render::emit(&render::render_reports(&borrowed, &params, format));
    }
    if failures > 0 {
        EXIT_COMPUTE
    } else {
        EXIT_OK
    }
}

fn run_gen(args: GenArgs, format: OutputFormat) -> i32 {
    let spec = match FamilySpec::from_str(&args.spec) {
        Ok(spec) => spec,
        Err(e) => {
            eprintln!("{e}");
            eprintln!("{SPEC_HINT}");
            return EXIT_USAGE;
        }
    };
    let graph = match spec.build() {
        Ok(g) => g,
        Err(e) => {
            eprintln!("{e}");
            return EXIT_USAGE;
        }
    };
    render::emitln(&emit_graph6(&graph));
    if args.report {
        match full_report(&graph) {
            Ok(report) => {
                let rows = vec![(spec.to_string(), &report)];
                render::emit(&render::render_reports(&rows, &[], format));
            }
            Err(e) => {
                eprintln!("{spec}: {e}");
                return EXIT_COMPUTE;
            }
        }
    }
    EXIT_OK
}

fn run_hfree(args: HfreeArgs, format: OutputFormat) -> i32 {
    let family = match parse_family(&args.forbid) {
        Ok(f) => f,
        Err(msg) => {
            eprintln!("{msg}");
            return EXIT_USAGE;
        }
    };
    let loaded = match sources::load(&args.files, args.edges, sources::capacity()) {
        Ok(l) => l,
        Err(msg) => {
            eprintln!("{msg}");
            return EXIT_COMPUTE;
        }
    };
    struct Row {
        origin: String,
        graph6: String,
        member: Option<(String, domchain_core::VertexSet)>,
    }
    let outcomes: Vec<Result<Row, (String, String)>> = loaded
        .par_iter()
        .map(|entry| match entry {
            Loaded::Ok { origin, graph } => family
                .find_member_in(graph)
                .map(|hit| Row {
                    origin: origin.clone(),
                    graph6: emit_graph6(graph),
                    member: hit.map(|h| (h.member_label, h.witness)),
                })
                .map_err(|e| (origin.clone(), e.to_string())),
            Loaded::Failed { origin, message } => Err((origin.clone(), message.clone())),
        })
        .collect();
    let mut failures = 0usize;
    let mut rows = Vec::new();
    for outcome in outcomes {
        match outcome {
            Ok(row) => rows.push(row),
            Err((origin, message)) => {
                eprintln!("{origin}: {message}");
                failures += 1;
            }
        }
    }
    match format {
        OutputFormat::Json => {
            for row in &rows {
                match &row.member {
                    Some((label, witness)) => render::emitln(&format!(
                        "{{\"graph\":{},\"free\":false,\"member\":{},\"witness\":{}}}",
                        render::json_str(&row.graph6),
                        render::json_str(label),
                        render::witness_json(*witness)
                    )),
                    None => render::emitln(&format!(
                        "{{\"graph\":{},\"free\":true,\"member\":null,\"witness\":null}}",
                        render::json_str(&row.graph6)
                    )),
                }
            }
        }
        OutputFormat::Csv => {
            if !rows.is_empty() {
                render::emitln("graph,free,member,witness");
                for row in &rows {
                    match &row.member {
                        Some((label, witness)) => render::emitln(&format!(
                            "{},false,{label},{}",
                            row.graph6,
                            render::witness_cell(*witness)
                        )),
                        None => render::emitln(&format!("{},true,,", row.graph6)),
                    }
                }
            }
        }
        OutputFormat::Table => {
            if !rows.is_empty() {
                let mut table = vec![vec![
                    "graph".to_string(),
                    "free".to_string(),
                    "member".to_string(),
                    "witness".to_string(),
                ]];
                for row in &rows {
                    let (free, member, witness) = match &row.member {
                        Some((label, w)) => {
                            ("no".to_string(), label.clone(), render::witness_cell(*w))
                        }
                        None => ("yes".to_string(), String::new(), String::new()),
                    };
                    table.push(vec![row.origin.clone(), free, member, witness]);
                }
                render::emit(&render::tabulate(&table));
            }
        }
    }
    if failures > 0 {
        EXIT_COMPUTE
    } else {
        EXIT_OK
    }
}

fn render_scan(result: &ScanResult, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut out = serde_json::to_string(result).expect("scan results serialize");
            out.push('\n');
            out
        }
        OutputFormat::Csv => {
            let mut out = String::from("order,max,witness\n");
            for (order, value) in &result.maxima {
                let witness = result.witnesses.get(order).map(String::as_str).unwrap_or("");
                out.push_str(&format!("{order},{value},{witness}\n"));
            }
            out
        }
        OutputFormat::Table => {
            let mut out = format!(
                "# largest {} over {}-free connected graphs, by order\n",
                result.parameter, result.family
            );
            let mut table = vec![vec![
                "order".to_string(),
                "max".to_string(),
                "witness".to_string(),
            ]];
            for (order, value) in &result.maxima {
                let witness = result.witnesses.get(order).cloned().unwrap_or_default();
                table.push(vec![order.to_string(), value.to_string(), witness]);
            }
            out.push_str(&render::tabulate(&table));
            out
        }
    }
}

fn run_scan(args: ScanArgs, format: OutputFormat) -> i32 {
    let param = match parse_params(std::slice::from_ref(&args.param)) {
        Ok(p) => p[0],
        Err(msg) => {
            eprintln!("{msg}");
            return EXIT_USAGE;
        }
    };
    let family = match parse_family(&args.forbid) {
        Ok(f) => f,
        Err(msg) => {
            eprintln!("{msg}");
            return EXIT_USAGE;
        }
    };
    let scanned = if let Some(max_order) = args.exhaustive_order {
        bound_profile_exhaustive_connected(max_order, &family, param)
    } else {
        let loaded = match sources::load(&args.files, args.edges, sources::capacity()) {
            Ok(l) => l,
            Err(msg) => {
                eprintln!("{msg}");
                return EXIT_COMPUTE;
            }
        };
        let mut corpus = Vec::with_capacity(loaded.len());
        let mut failures = 0usize;
        for entry in &loaded {
            match entry {
                Loaded::Ok { graph, .. } => corpus.push(graph.clone()),
                Loaded::Failed { origin, message } => {
                    eprintln!("{origin}: {message}");
                    failures += 1;
                }
            }
        }
        if failures > 0 {
            return EXIT_COMPUTE;
        }
        bound_profile(&corpus, &family, param)
    };
    match scanned {
        Ok(result) => {
            render::emit(&render_scan(&result, format));
            EXIT_OK
        }
        Err(RamseyError::OrderCap { order, max }) => {
            eprintln!("--exhaustive-order {order} is above the supported maximum {max}");
            EXIT_USAGE
        }
        Err(e) => {
            eprintln!("scan failed: {e}");
            EXIT_COMPUTE
        }
    }
}

fn render_bound(bound: &EmpiricalBound, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut out = serde_json::to_string(bound).expect("bounds serialize");
            out.push('\n');
            out
        }
        OutputFormat::Csv => {
            let witness = bound.witness_graph6.as_deref().unwrap_or("");
            let order =
                bound.witness_order.map(|o| o.to_string()).unwrap_or_default();
            format!(
                "symbol,observed,exact,witness_order,witness\n{},{},{},{order},{witness}\n",
                bound.symbol, bound.observed, bound.exact
            )
        }
        OutputFormat::Table => {
            let mut out = format!(
                "{} {} {}\n",
                bound.symbol,
                if bound.exact { "=" } else { ">=" },
                bound.observed
            );
            match (&bound.witness_graph6, bound.witness_order) {
                (Some(g6), Some(order)) => {
                    out.push_str(&format!("largest witness: {g6} (order {order})\n"));
                }
                _ => out.push_str("no witness stored\n"),
            }
            out
        }
    }
}

fn run_ramsey(args: RamseyArgs, format: OutputFormat) -> i32 {
    let searched = match (args.clique, args.stable, args.block) {
        (Some(m), Some(n), None) => {
            if m == 0 || n == 0 {
                eprintln!("--clique and --stable must be at least 1");
                return EXIT_USAGE;
            }
            ramsey_witness_search(m, n, args.order_cap)
        }
        (None, None, Some(n)) => {
            if n == 0 {
                eprintln!("--block must be at least 1");
                return EXIT_USAGE;
            }
            bipartite_ramsey_search(n, args.side_cap)
        }
        _ => {
            eprintln!("pick one search: --clique M --stable N, or --block N");
            return EXIT_USAGE;
        }
    };
    match searched {
        Ok(bound) => {
            render::emit(&render_bound(&bound, format));
            EXIT_OK
        }
        Err(RamseyError::OrderCap { order, max }) => {
            eprintln!("--order-cap {order} is above the supported maximum {max}");
            EXIT_USAGE
        }
        Err(RamseyError::SideCap { side, max }) => {
            eprintln!("--side-cap {side} is above the supported maximum {max}");
            EXIT_USAGE
        }
        Err(e) => {
            eprintln!("search failed: {e}");
            EXIT_COMPUTE
        }
    }
}

fn parse_range(raw: &str) -> Result<(u32, u32), String> {
    let parsed = match raw.split_once("..") {
        Some((lo, hi)) => lo
            .trim()
            .parse::<u32>()
            .ok()
            .zip(hi.trim().parse::<u32>().ok()),
        None => raw.trim().parse::<u32>().ok().map(|n| (n, n)),
    };
    let (lo, hi) = parsed.ok_or_else(|| format!("cannot parse {raw:?} as a range like 2..6"))?;
    if lo < 1 || hi < lo {
        return Err(format!("range {raw:?} must satisfy 1 <= lo <= hi"));
    }
    if hi > 8 {
        return Err(format!("range {raw:?} reaches past 8; larger families get too slow"));
    }
    Ok((lo, hi))
}

fn run_verify(args: VerifyArgs) -> i32 {
    let n_range = match parse_range(&args.n) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("{msg}");
            return EXIT_USAGE;
        }
    };
    if args.max_order == 0 {
        eprintln!("--max-order must be at least 1");
        return EXIT_USAGE;
    }
    let mut selected: Vec<suites::Suite> = Vec::new();
    let requested =
        if args.suite.is_empty() { suites::ALL_SUITES.to_vec() } else { args.suite };
    for suite in requested {
        if !selected.contains(&suite) {
            selected.push(suite);
        }
    }
    let mut passed = 0usize;
    let total = selected.len();
    for suite in selected {
        let outcome = suites::run_suite(suite, args.max_order, n_range);
        render::emitln(&format!(
            "suite {}: {}",
            outcome.name,
            if outcome.passed { "pass" } else { "FAIL" }
        ));
        for line in &outcome.lines {
            render::emitln(&format!("  {line}"));
        }
        if outcome.passed {
            passed += 1;
        }
    }
    render::emitln(&format!("verify: {passed}/{total} suites passed"));
    if passed == total {
        EXIT_OK
    } else {
        EXIT_VERIFY
    }
}
