use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ikforge::catalog;
use ikforge::enumerate::{generate_with, ProfilePair};
use ikforge::graph6;
use ikforge::pipeline::{self, Config, Selection};
use ikforge::planarity::DEFAULT_BUDGET;
use ikforge::reduction::{reduce, rule, verdict};
use ikforge::store::store_closure;

#[derive(Parser)]
#[command(name = "ikforge", version)]
#[command(about = "Enumerate and certify bipartite intrinsically knotted graphs with 22 edges")]
struct Cli {
    /// Directory for reports, certificates and closures
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads
    #[arg(long, global = true, env = "IKFORGE_THREADS")]
    threads: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Expansion cap for minor searches
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    All,
    Main3,
    Deg6,
    Families,
    Lemmas,
    Minimality,
}

impl From<Target> for Selection {
    fn from(t: Target) -> Self {
        match t {
            Target::All => Selection::All,
            Target::Main3 => Selection::Main3,
            Target::Deg6 => Selection::Deg6,
            Target::Families => Selection::Families,
            Target::Lemmas => Selection::Lemmas,
            Target::Minimality => Selection::Minimality,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run verification checks
    Verify {
        #[arg(value_enum, default_value_t = Target::All)]
        target: Target,
    },
    /// Print every connected candidate for one profile pair as graph6
    Enumerate {
        /// e.g. `--profile A=3,1,1 B=3,1,1`
        #[arg(long, num_args = 1..=2, required = true)]
        profile: Vec<String>,
    },
    /// Compute the ∇Y/Y∇ family of a catalog graph or graph6 string
    Closure {
        #[arg(long)]
        seed: String,
    },
    /// Delete two vertices and reduce
    Reduce {
        /// graph6 string
        #[arg(long)]
        graph: String,
        /// Two vertex indices, `i,j`
        #[arg(long)]
        pair: String,
    },
    /// Show a named graph
    Catalog { name: String },
}

const USAGE: u8 = 2;

/// Prints a line; a closed pipe downstream is not an error.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if n == 0 {
            return usage("--threads must be positive");
        }
    }
    match &cli.command {
        Command::Verify { target } => verify(&cli, (*target).into()),
        command => {
            if let Some(n) = cli.threads {
                // only fails if a global pool already exists
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            match command {
                Command::Enumerate { profile } => enumerate(&cli, profile),
                Command::Closure { seed } => closure(&cli, seed),
                Command::Reduce { graph, pair } => reduce_cmd(&cli, graph, pair),
                Command::Catalog { name } => catalog_cmd(&cli, name),
                Command::Verify { .. } => unreachable!(),
            }
        }
    }
}

fn verify(cli: &Cli, selection: Selection) -> ExitCode {
    let config = Config {
        threads: cli.threads,
        budget: cli.budget,
    };
    let report = match pipeline::run(selection, &config) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    if let Some(dir) = &cli.out {
        if let Err(e) = pipeline::write_outputs(&report, dir) {
            eprintln!("error: writing outputs: {e}");
            return ExitCode::FAILURE;
        }
    }
    match cli.format {
        Format::Json => out!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
        Format::Text => out!("{}", report.render_text().trim_end()),
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn enumerate(cli: &Cli, profile: &[String]) -> ExitCode {
    let parts: Vec<&str> = profile.iter().map(String::as_str).collect();
    let pair = match ProfilePair::parse_selector(&parts) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let mut graphs = Vec::new();
    let stats = generate_with(&pair, |g| {
        let s = graph6::encode(g.graph()).expect("candidates are simple");
        if cli.format == Format::Text {
            out!("{s}");
        }
        graphs.push(s);
    });
    if cli.format == Format::Json {
        let out = json!({ "profile": pair.to_string(), "count": graphs.len(), "stats": stats, "graphs": graphs });
        out!("{out}");
    }
    ExitCode::SUCCESS
}

fn closure(cli: &Cli, seed: &str) -> ExitCode {
    let c = match pipeline::closure_of(seed) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    if let Some(dir) = &cli.out {
        let name: String = seed.chars().filter(|c| c.is_ascii_alphanumeric()).collect();
        if let Err(e) = store_closure(&dir.join(format!("closure_{name}.jsonl")), &c) {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    let members: Vec<String> = c
        .members
        .iter()
        .map(|m| graph6::encode(&m.graph).unwrap_or_else(|_| format!("{:?}", m.graph.edges())))
        .collect();
    match cli.format {
        Format::Json => {
            let out = json!({
                "seed": seed,
                "members": members.len(),
                "simplified_moves": c.simplified_moves,
                "graphs": members,
            });
            out!("{out}");
        }
        Format::Text => {
            out!("{} members", members.len());
            for m in members {
                out!("{m}");
            }
        }
    }
    ExitCode::SUCCESS
}

fn parse_pair(s: &str) -> Option<(usize, usize)> {
    let (a, b) = s.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

fn reduce_cmd(cli: &Cli, g6: &str, pair: &str) -> ExitCode {
    let g = match graph6::decode(g6) {
        Ok(g) => g,
        Err(e) => return usage(format!("bad graph6: {e}")),
    };
    let Some((a, b)) = parse_pair(pair) else {
        return usage(format!("bad pair {pair:?}, expected i,j"));
    };
    let r = match reduce(&g, a, b) {
        Ok(r) => r,
        Err(e) => return usage(e),
    };
    let v = verdict(&r);
    match cli.format {
        Format::Json => {
            let out = json!({
                "pair": [a, b],
                "edge_count": r.edge_count,
                "verdict": v,
                "rule": rule(&r),
                "breakdown": r.breakdown,
                "trace": r.trace,
                "trace_digest": r.trace_digest(),
            });
            out!("{out}");
        }
        Format::Text => {
            out!("edge_count {}", r.edge_count);
            out!("verdict {v:?}");
            out!("predicted {}", r.breakdown.predicted);
            out!("trace_digest {}", r.trace_digest());
        }
    }
    ExitCode::SUCCESS
}

fn catalog_cmd(cli: &Cli, name: &str) -> ExitCode {
    let entry = match catalog::named(name) {
        Ok(e) => e,
        Err(e) => return usage(e),
    };
    let g6 = graph6::encode(&entry.graph).expect("catalog graphs are simple");
    match cli.format {
        Format::Json => {
            let out = json!({
                "name": entry.name,
                "graph6": g6,
                "order": entry.graph.order(),
                "edges": entry.graph.edge_count(),
                "provenance": entry.provenance,
            });
            out!("{out}");
        }
        Format::Text => {
            out!("{g6}");
            out!("{} vertices, {} edges", entry.graph.order(), entry.graph.edge_count());
        }
    }
    ExitCode::SUCCESS
}
