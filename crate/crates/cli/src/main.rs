use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use copwin::graph::emit_graph6;
use copwin::harness::{
    enumerate_connected_graphs, graphs_from_arg, parse_check_list, write_report, InputSource, RunConfig, DEFAULT_K_MAX,
    WORKERS_ENV,
};
use copwin::solver::{best_robber_policy, cop_number, simulate_game, solve, CopNumber, SolveTable};
use copwin::strategies::{freeze_edge_strategy, rk2_guard_strategy, ScriptedStrategy};
use copwin::traps::{enumerate_traps, find_connected_trap, TrapSearchResult};
use copwin::Graph;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "copwin", version, about = "Cops and robbers on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cop number of each input graph.
    Copnum {
        /// graph6 string, file of graph6 lines or edge list, or `-` for stdin.
        input: String,
        #[arg(long = "kmax", default_value_t = DEFAULT_K_MAX)]
        k_max: usize,
        #[arg(long)]
        lenient: bool,
    },
    /// Every trap (u; x1, x2) of each input graph.
    Traps {
        input: String,
        #[arg(long)]
        lenient: bool,
    },
    /// A connected trap, or the K1/K2/C5 classification, for connected 2K2-free graphs.
    FindTrap {
        input: String,
        #[arg(long)]
        lenient: bool,
    },
    /// Run a verification suite and write a JSON-lines report.
    Verify {
        /// Comma-separated checks, e.g. THEOREM_MAIN,PT_BOUND(5), or ALL.
        #[arg(long)]
        checks: String,
        /// Enumerate connected labeled graphs up to this order.
        #[arg(long, conflicts_with = "input", required_unless_present = "input")]
        n_max: Option<usize>,
        #[arg(long, default_value_t = 1, requires = "n_max")]
        n_min: usize,
        /// graph6 lines or one edge list; `-` for stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, env = WORKERS_ENV)]
        workers: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also export one CSV row per (graph, check).
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long = "kmax", default_value_t = DEFAULT_K_MAX)]
        k_max: usize,
        /// Accept nonzero graph6 padding and skip malformed lines.
        #[arg(long)]
        lenient: bool,
    },
    /// Play a scripted cop strategy against the optimal robber.
    Simulate {
        #[arg(long, value_enum)]
        strategy: StrategyKind,
        #[arg(long, default_value_t = 3)]
        r: usize,
        /// Cop-turn limit; defaults to 2n for freeze and 2nr for rk2.
        #[arg(long)]
        cap: Option<usize>,
        input: String,
        #[arg(long)]
        lenient: bool,
    },
    /// List connected labeled graphs on n vertices as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyKind {
    Freeze,
    Rk2,
}

/// Exit status with a message for standard error.
struct Failure(u8, String);

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_USAGE, e.to_string())
}

fn load(input: &str, lenient: bool) -> Result<Vec<Graph>, Failure> {
    graphs_from_arg(input, !lenient).map_err(usage)
}

fn label(g: &Graph) -> String {
    if g.is_empty() {
        "(empty)".into()
    } else {
        emit_graph6(g)
    }
}

fn copnum(input: &str, k_max: usize, lenient: bool) -> Result<u8, Failure> {
    if k_max == 0 {
        return Err(usage("--kmax must be at least 1"));
    }
    let mut status = 0;
    for g in load(input, lenient)? {
        match cop_number(&g, k_max) {
            Ok(c @ CopNumber::Exactly(k)) => {
                let t = solve(&g, k).ok().as_ref().and_then(SolveTable::capture_time);
                println!("{}\t{c}\tcapture_time={}", label(&g), t.map_or("-".into(), |t| t.to_string()));
            }
            Ok(c) => println!("{}\t{c}", label(&g)),
            Err(e) => {
                eprintln!("{}: {e}", label(&g));
                status = EXIT_FAIL;
            }
        }
    }
    Ok(status)
}

fn traps(input: &str, lenient: bool) -> Result<u8, Failure> {
    for g in load(input, lenient)? {
        let all = enumerate_traps(&g);
        println!("{}\t{} traps", label(&g), all.len());
        for w in all {
            println!("  {w}");
        }
    }
    Ok(0)
}

fn find_trap(input: &str, lenient: bool) -> Result<u8, Failure> {
    let mut status = 0;
    for g in load(input, lenient)? {
        match find_connected_trap(&g) {
            Ok(TrapSearchResult::Witness(w)) => println!("{}\t{w}", label(&g)),
            Ok(other) => println!("{}\t{other:?}", label(&g)),
            Err(e) => {
                eprintln!("{}: {e}", label(&g));
                status = EXIT_FAIL;
            }
        }
    }
    Ok(status)
}

fn simulate(kind: StrategyKind, r: usize, cap: Option<usize>, input: &str, lenient: bool) -> Result<u8, Failure> {
    let mut status = 0;
    for g in load(input, lenient)? {
        let (mut script, default_cap): (Box<dyn ScriptedStrategy>, usize) = match kind {
            StrategyKind::Freeze => (Box::new(freeze_edge_strategy(&g).map_err(usage)?), 2 * g.n()),
            StrategyKind::Rk2 => (Box::new(rk2_guard_strategy(&g, r).map_err(usage)?), 2 * g.n() * r),
        };
        let cap = cap.unwrap_or(default_cap);
        let table = solve(&g, script.cop_count()).map_err(usage)?;
        let mut robber = best_robber_policy(&table);
        let trace =
            simulate_game(&g, script.as_mut(), &mut robber, cap).map_err(|e| Failure(EXIT_FAIL, e.to_string()))?;
        println!("{}", label(&g));
        for (i, s) in trace.positions.iter().enumerate() {
            let who = if i == 0 {
                "placement".to_string()
            } else if i % 2 == 1 {
                format!("cops {}", i / 2 + 1)
            } else {
                format!("robber {}", i / 2)
            };
            println!("  {who:<12} cops {:?} robber {}", s.cops, s.robber);
        }
        println!("  phases {:?}", script.phases());
        match trace.captured_at {
            Some(t) if script.invariant_breaks() == 0 => println!("  captured at cop turn {t}"),
            Some(t) => {
                println!("  captured at cop turn {t}, invariant broke {} times", script.invariant_breaks());
                status = EXIT_FAIL;
            }
            None => {
                println!("  no capture within {cap} cop turns");
                status = EXIT_FAIL;
            }
        }
    }
    Ok(status)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Copnum { input, k_max, lenient } => copnum(&input, k_max, lenient),
        Command::Traps { input, lenient } => traps(&input, lenient),
        Command::FindTrap { input, lenient } => find_trap(&input, lenient),
        Command::Verify { checks, n_max, n_min, input, workers, out, csv, k_max, lenient } => {
            let checks = parse_check_list(&checks).map_err(usage)?;
            let source = match (input, n_max) {
                (Some(path), _) => InputSource::File(path),
                (None, Some(n_max)) => InputSource::Enumerate { n_min, n_max },
                (None, None) => return Err(usage("one of --input or --n-max is required")),
            };
            let mut config = RunConfig::new(source, checks);
            if let Some(w) = workers {
                config.workers = w;
            }
            config.k_max = k_max;
            config.strict = !lenient;
            config.output = out;
            config.csv = csv;
            let summary = write_report(&config).map_err(usage)?;
            for t in &summary.checks {
                log::info!("{}: {} pass, {} fail, {} skipped, {} error", t.check, t.pass, t.fail, t.skipped, t.error);
            }
            Ok(if summary.failures() > 0 { EXIT_FAIL } else { 0 })
        }
        Command::Simulate { strategy, r, cap, input, lenient } => simulate(strategy, r, cap, &input, lenient),
        Command::Enumerate { n } => {
            for g in enumerate_connected_graphs(n).map_err(usage)? {
                println!("{}", emit_graph6(&g));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("copwin: {msg}");
            ExitCode::from(code)
        }
    }
}
