use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use turanbench::chromatic::ChromaticProfile;
use turanbench::graph6;
use turanbench::named::parse_graph;
use turanbench::report::{
    build_construction, default_variant, verify, Mode, Variant, Verdict, VerifyOptions,
};
use turanbench::search::{brute_force_ex_with, hill_climb_with, ClimbOptions, SearchOptions};
use turanbench::subgraph::{contains, count_copies};
use turanbench::Error;

const EXIT_USAGE: u8 = 2;
const EXIT_CAPACITY: u8 = 3;
const EXIT_ANOMALY: u8 = 4;
const EXIT_INTERNAL: u8 = 5;

/// Generalized Turán workbench. Graphs are graph6 strings or the names
/// K5, K2x3, K2^3, C5, P4, T7,2.
#[derive(Parser)]
#[command(name = "turanbench", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number, smallest class size, class-size profiles and pair family of F.
    Analyze {
        #[arg(short = 'F', long)]
        forbidden: String,
    },
    /// Print an F-free construction on n vertices as graph6.
    Construct {
        #[arg(short = 'F', long)]
        forbidden: String,
        #[arg(long)]
        n: usize,
        /// theorem, kbar, star or turan (default: chosen from F).
        #[arg(long)]
        variant: Option<Variant>,
        /// Class size for kbar (default: smallest color class of F).
        #[arg(long)]
        s: Option<usize>,
    },
    /// Copies of H in each host (from -G or one graph per stdin line).
    Count {
        #[arg(short = 'H', long)]
        pattern: String,
        #[arg(short = 'G', long)]
        host: Option<String>,
    },
    /// Whether each host contains F (from -G or one graph per stdin line).
    Contains {
        #[arg(short = 'F', long)]
        forbidden: String,
        #[arg(short = 'G', long)]
        host: Option<String>,
    },
    /// Compare the construction for F against the oracle.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(short = 'H', long)]
        pattern: String,
        #[arg(short = 'F', long)]
        forbidden: String,
        /// exact, heuristic or skip.
        #[arg(long, default_value = "exact")]
        mode: Mode,
        #[arg(long)]
        variant: Option<Variant>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
        #[arg(long, default_value_t = 4)]
        restarts: usize,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Allow exhaustive search above 10 vertices.
        #[arg(long)]
        allow_large: bool,
    },
    /// Exact ex(n, H, F) with all extremal graphs.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(short = 'H', long)]
        pattern: String,
        #[arg(short = 'F', long)]
        forbidden: String,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        #[arg(long)]
        allow_large: bool,
    },
    /// Local search lower bound for ex(n, H, F).
    Climb {
        #[arg(long)]
        n: usize,
        #[arg(short = 'H', long)]
        pattern: String,
        #[arg(short = 'F', long)]
        forbidden: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
        #[arg(long, default_value_t = 4)]
        restarts: usize,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Capacity(_) => EXIT_CAPACITY,
            Error::InternalInvariant(_) => EXIT_INTERNAL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Error::from(e).into()
    }
}

fn hosts(host: Option<String>) -> Result<Vec<String>, Failure> {
    match host {
        Some(h) => Ok(vec![h]),
        None => {
            let mut out = Vec::new();
            for line in io::stdin().lock().lines() {
                let line = line?;
                if !line.trim().is_empty() {
                    out.push(line);
                }
            }
            Ok(out)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let json = cli.json;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Analyze { forbidden } => {
            let f = parse_graph(&forbidden)?;
            let p = ChromaticProfile::compute(&f)?;
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&p).expect("profile serializes")
                )?;
            } else {
                writeln!(out, "chi {}", p.chi)?;
                writeln!(out, "sigma {}", p.sigma)?;
                for sizes in &p.class_size_profiles {
                    let s: Vec<String> = sizes.iter().map(|x| x.to_string()).collect();
                    writeln!(out, "classes {}", s.join(" "))?;
                }
                for d in &p.pair_family {
                    writeln!(out, "pair {d}")?;
                }
            }
        }
        Command::Construct {
            forbidden,
            n,
            variant,
            s,
        } => {
            let f = parse_graph(&forbidden)?;
            let p = ChromaticProfile::compute(&f)?;
            let variant = match variant {
                Some(v) => v,
                None => default_variant(&f, &p)?,
            };
            let c = build_construction(variant, &f, &p, n, s)?;
            if contains(&c.graph, &f) {
                return Err(Error::InternalInvariant(format!(
                    "{variant} construction on {n} vertices contains F"
                ))
                .into());
            }
            let g6 = graph6::encode(&c.graph)?;
            if json {
                let v = serde_json::json!({
                    "variant": variant,
                    "descriptor": c.descriptor,
                    "graph6": g6,
                    "forbidden_free": true,
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "{g6}")?;
                eprintln!("{variant} construction on {n} vertices is F-free");
            }
        }
        Command::Count { pattern, host } => {
            let h = parse_graph(&pattern)?;
            for g in hosts(host)? {
                let c = count_copies(&h, &parse_graph(&g)?);
                if json {
                    writeln!(
                        out,
                        "{}",
                        serde_json::json!({ "host": g.trim(), "count": c.to_string() })
                    )?;
                } else {
                    writeln!(out, "{c}")?;
                }
            }
        }
        Command::Contains { forbidden, host } => {
            let f = parse_graph(&forbidden)?;
            for g in hosts(host)? {
                let c = contains(&parse_graph(&g)?, &f);
                if json {
                    writeln!(
                        out,
                        "{}",
                        serde_json::json!({ "host": g.trim(), "contains": c })
                    )?;
                } else {
                    writeln!(out, "{c}")?;
                }
            }
        }
        Command::Verify {
            n,
            pattern,
            forbidden,
            mode,
            variant,
            s,
            seed,
            max_steps,
            restarts,
            checkpoint,
            allow_large,
        } => {
            let h = parse_graph(&pattern)?;
            let f = parse_graph(&forbidden)?;
            let opts = VerifyOptions {
                mode,
                variant,
                s,
                search: SearchOptions {
                    allow_large,
                    checkpoint,
                    chunk: None,
                },
                climb: ClimbOptions {
                    steps: max_steps,
                    restarts,
                    seed,
                    start: None,
                },
            };
            let report = verify(n, &h, &f, &opts)?;
            if json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                write!(out, "{}", report.render_text())?;
            }
            if report.verdict == Verdict::ConstructionBelowOracle {
                eprintln!(
                    "anomaly: construction has {} copies, oracle found {}",
                    report.construction_value,
                    report.oracle_value.as_ref().expect("oracle ran")
                );
                return Ok(EXIT_ANOMALY);
            }
        }
        Command::Search {
            n,
            pattern,
            forbidden,
            checkpoint,
            allow_large,
        } => {
            let h = parse_graph(&pattern)?;
            let f = parse_graph(&forbidden)?;
            let opts = SearchOptions {
                allow_large,
                checkpoint,
                chunk: None,
            };
            let r = brute_force_ex_with(n, &h, &f, &opts)?;
            if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&r).expect("result serializes")
                )?;
            } else {
                writeln!(out, "optimum {}", r.optimum)?;
                writeln!(out, "enumerated {}", r.graphs_enumerated)?;
                writeln!(out, "ffree {}", r.ffree_count)?;
                writeln!(out, "constructions-checked {}", r.constructions_checked)?;
                if r.degenerate {
                    writeln!(out, "warning H contains F")?;
                }
                for w in &r.witnesses {
                    writeln!(out, "witness {w}")?;
                }
            }
        }
        Command::Climb {
            n,
            pattern,
            forbidden,
            seed,
            max_steps,
            restarts,
        } => {
            let h = parse_graph(&pattern)?;
            let f = parse_graph(&forbidden)?;
            let opts = ClimbOptions {
                steps: max_steps,
                restarts,
                seed,
                start: None,
            };
            let r = hill_climb_with(n, &h, &f, &opts)?;
            let g6 = graph6::encode(&r.graph)?;
            if json {
                let v = serde_json::json!({
                    "count": r.count.to_string(),
                    "graph6": g6,
                    "restart": r.restart,
                    "accepted_moves": r.accepted_moves,
                });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "count {}", r.count)?;
                writeln!(out, "graph {g6}")?;
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
