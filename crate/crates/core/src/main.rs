use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use oriented_star::harness::{
    self, lower_bound_check, render_table_csv, render_table_text, SourceSet, VerifyOptions,
    WitnessVariant, DEFAULT_SAMPLES,
};
use oriented_star::oracle::{diameter, distance, DiameterMode, Orientation};
use oriented_star::routing::{classic_route, oriented_route};
use oriented_star::{arc_direction, classify, neighbors, Check, Error, Perm, Scheme};

#[derive(Debug, Parser)]
#[command(
    name = "ostar",
    version,
    about = "Routing and diameter tools for oriented star graphs"
)]
struct Cli {
    /// Orientation scheme: fujita or day-tripathi.
    #[arg(long, global = true, default_value = "fujita", value_parser = parse_scheme)]
    scheme: Scheme,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Worker threads for parallel sweeps (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Shorthand for --format json.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the neighbours of a node with the arc direction on each link.
    Neighbors { perm: String },
    /// Print the value classes of a node relative to a target.
    Classify { source: String, target: String },
    /// Route from source to target.
    Route {
        source: String,
        target: String,
        /// Use the undirected greedy router.
        #[arg(long)]
        classic: bool,
        /// Print one line per hop.
        #[arg(long)]
        trace: bool,
    },
    /// Exact shortest-path distance by BFS.
    Distance {
        source: String,
        target: String,
        #[arg(long)]
        directed: bool,
    },
    /// Exact diameter by BFS.
    Diameter {
        n: usize,
        #[arg(long)]
        directed: bool,
        /// exhaustive or orbit (default: exhaustive up to n=7, orbit beyond).
        #[arg(long, value_parser = parse_mode)]
        mode: Option<DiameterMode>,
    },
    /// Sweep node pairs and check every routing bound.
    Verify {
        n: usize,
        /// Comma-separated check names, or "all".
        #[arg(long, default_value = "all")]
        checks: String,
        /// Use every source even where the two-orbit reduction applies.
        #[arg(long)]
        full: bool,
        /// Samples for sampled checks.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
    /// Diameter table for a range of orders, e.g. 3..8, 3-8 or 6.
    Table {
        range: String,
        #[arg(long, value_parser = parse_mode)]
        mode: Option<DiameterMode>,
    },
    /// Print the lower-bound witness permutation.
    Witness {
        n: usize,
        /// odd-default or even-refined (default: by n).
        #[arg(long, value_parser = parse_variant)]
        variant: Option<WitnessVariant>,
        /// Also measure the witness distance and the diameter.
        #[arg(long)]
        check: bool,
    },
}

fn parse_scheme(s: &str) -> Result<Scheme, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_mode(s: &str) -> Result<DiameterMode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_variant(s: &str) -> Result<WitnessVariant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, Error> {
    let bad = || Error::Argument(format!("invalid range {s:?}"));
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
    let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once("..") {
        (num(a)?, num(b)?)
    } else if let Some((a, b)) = s.split_once('-') {
        (num(a)?, num(b)?)
    } else {
        let n = num(s)?;
        (n, n)
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvariantViolation(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn perm(s: &str) -> Result<Perm, Failure> {
    Ok(s.parse::<Perm>()?)
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

fn no_csv(what: &str) -> Failure {
    Failure::Usage(format!("csv output is not available for {what}"))
}

/// Runs one command; `Ok(false)` means a check failed.
fn run(cli: &Cli) -> Result<bool, Failure> {
    let format = if cli.json { Format::Json } else { cli.format };
    let scheme = cli.scheme;
    match &cli.command {
        Command::Neighbors { perm: p } => {
            let u = perm(p)?;
            #[derive(Serialize)]
            struct Row {
                link: usize,
                node: Perm,
                direction: String,
            }
            let mut rows = Vec::new();
            for (link, v) in neighbors(&u) {
                let direction = arc_direction(&u, link, scheme)?.to_string();
                rows.push(Row {
                    link,
                    node: v,
                    direction,
                });
            }
            match format {
                Format::Json => println!("{}", json(&rows)),
                Format::Csv => {
                    println!("link,node,direction");
                    for r in &rows {
                        println!("{},{},{}", r.link, r.node, r.direction);
                    }
                }
                Format::Text => {
                    for r in &rows {
                        println!("{} {} {}", r.link, r.node, r.direction);
                    }
                }
            }
        }
        Command::Classify { source, target } => {
            let sets = classify(&perm(source)?, &perm(target)?)?;
            match format {
                Format::Json => println!("{}", json(&sets)),
                Format::Csv => return Err(no_csv("classify")),
                Format::Text => println!("{sets}"),
            }
        }
        Command::Route {
            source,
            target,
            classic,
            trace,
        } => {
            let (s, t) = (perm(source)?, perm(target)?);
            let route = if *classic {
                classic_route(&s, &t)?
            } else {
                oriented_route(&s, &t, scheme)?
            };
            match format {
                Format::Json => println!("{}", json(&route)),
                Format::Csv => return Err(no_csv("route")),
                Format::Text if *trace => print!("{}", route.render_text()),
                Format::Text => {
                    let path: Vec<String> = route.nodes().iter().map(Perm::to_string).collect();
                    println!("length={} path={}", route.length, path.join(" "));
                }
            }
        }
        Command::Distance {
            source,
            target,
            directed,
        } => {
            let orientation = Orientation::new(*directed, scheme);
            match distance(&perm(source)?, &perm(target)?, orientation)? {
                Some(d) => match format {
                    Format::Json => println!("{}", json(&d)),
                    _ => println!("{d}"),
                },
                None => {
                    println!("unreachable");
                    return Ok(false);
                }
            }
        }
        Command::Diameter { n, directed, mode } => {
            let mode = mode.unwrap_or_else(|| harness::default_mode(*n));
            let d = diameter(*n, Orientation::new(*directed, scheme), mode)?;
            match format {
                Format::Json => println!("{}", json(&d)),
                Format::Csv => return Err(no_csv("diameter")),
                Format::Text => println!(
                    "n={} scheme={} directed={} diameter={} witness={}->{}",
                    d.n, scheme, directed, d.value, d.witness.0, d.witness.1
                ),
            }
            return Ok(d.unreachable == 0);
        }
        Command::Verify {
            n,
            checks,
            full,
            samples,
        } => {
            let opts = VerifyOptions {
                n: *n,
                scheme,
                checks: Check::parse_list(checks, scheme)?,
                sources: if *full {
                    SourceSet::All
                } else {
                    SourceSet::default_for(*n)
                },
                samples: *samples,
                seed: cli.seed,
            };
            let report = harness::verify(&opts)?;
            match format {
                Format::Json => println!("{}", json(&report)),
                Format::Csv => print!("{}", report.render_csv()),
                Format::Text => print!("{}", report.render_text()),
            }
            return Ok(report.passed());
        }
        Command::Table { range, mode } => {
            let rows = harness::table(parse_range(range)?, *mode)?;
            match format {
                Format::Json => {
                    for r in &rows {
                        println!("{}", serde_json::to_string(r).expect("serializable"));
                    }
                }
                Format::Csv => print!("{}", render_table_csv(&rows)),
                Format::Text => print!("{}", render_table_text(&rows)),
            }
        }
        Command::Witness { n, variant, check } => {
            let variant = variant.unwrap_or_else(|| WitnessVariant::for_order(*n));
            let w = harness::witness(*n, variant)?;
            if !*check {
                match format {
                    Format::Json => println!("{}", json(&w)),
                    _ => println!("{w}"),
                }
                return Ok(true);
            }
            let report = lower_bound_check(*n)?;
            match format {
                Format::Json => println!("{}", json(&report)),
                Format::Csv => return Err(no_csv("witness")),
                Format::Text => println!("{}", report.render_text()),
            }
            return Ok(report.passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
