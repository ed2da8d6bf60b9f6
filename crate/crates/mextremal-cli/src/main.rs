//! Command-line surface for the mextremal library.
//!
//! Exit codes: 0 on success, 1 on domain errors (bad graphs, unsatisfiable
//! preconditions, missing files), 2 on usage errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use mextremal::bounds::{self, Rat};
use mextremal::coloring::{chromatic_number, Partition};
use mextremal::constructions::{
    builtin_gadget_t3, checkerboard_gadget, cycle_pattern, gadget_coloring, graph_h,
    graph_h_prime, lower_bound_family, mono_gadget, t1, t2, GadgetSpec, GadgetVerdict,
    VerifyMode,
};
use mextremal::extremal::{max_edges_avoiding_with, mex_exact_with, SearchOptions};
use mextremal::io;
use mextremal::pipeline::{build_pprime, find_pprime, FindOptions, FindOutcome, PPrimeSpec};
use mextremal::reduced::reduced_max_matching;
use mextremal::{contains_colored, hom_exists, ColoredMultigraph};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "mextremal",
    version,
    about = "Exact searches and constructions for multicolor extremal graph problems"
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Cap on worker threads (falls back to MEXTREMAL_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number of the underlying simple graph.
    Chi { graph: PathBuf },
    /// Reduced maximum matching number M with a witness partition.
    Redmm { graph: PathBuf },
    /// Density bounds derived from chi and M.
    Bounds {
        graph: PathBuf,
        /// View the graph with this many colors (at least the file's r).
        #[arg(long)]
        r: Option<usize>,
    },
    /// Largest T with all color classes of size >= T avoiding the patterns.
    Mex {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Forbidden pattern files.
        #[arg(required = true)]
        patterns: Vec<PathBuf>,
        /// Stop refining after this many search nodes.
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Largest total edge count avoiding the patterns.
    Maxedges {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(required = true)]
        patterns: Vec<PathBuf>,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Look for a copy of the pattern in the host.
    Contains { host: PathBuf, pattern: PathBuf },
    /// Look for a colored homomorphism from the pattern into the target.
    Hom { pattern: PathBuf, target: PathBuf },
    /// Blow every vertex up into an independent set of size s.
    Blowup {
        graph: PathBuf,
        #[arg(long)]
        s: usize,
    },
    /// Emit one of the construction families.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Check that all s-subset side pairs of a bipartite coloring span every
    /// color.
    #[command(name = "verify-gadget")]
    VerifyGadget {
        graph: PathBuf,
        #[arg(long)]
        s: usize,
        /// Enumerate every subset pair (the default).
        #[arg(long, conflicts_with = "trials")]
        exact: bool,
        /// Sample this many subset pairs instead.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Hunt for the matching-plus-full-multiplicity target in a host.
    Pipeline {
        host: PathBuf,
        #[arg(long)]
        k: usize,
        /// Comma-separated colors of the matching edges, e.g. `1,2`.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        matching: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        rounds: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Fixed partition, classes separated by `;`, vertices by `,`.
        #[arg(long)]
        partition: Option<String>,
    },
    /// Compare the construction density with the refined upper bound.
    Tightness {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// The r-colored lower-bound family on (k-1)*r*m vertices.
    Family {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
    },
    /// Complete k-partite host with a random gadget between each part pair.
    H {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Extend a host by a red clique on 2m vertices, fully joined in red.
    Hprime {
        graph: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        red: usize,
    },
    /// Bicolored triangle: double edge plus two red edges.
    T1,
    /// Bicolored triangle: double edge, one red edge, one blue edge.
    T2,
    /// Bicolored cycle with the given color word (R/B letters).
    Cycle {
        #[arg(long)]
        length: usize,
        #[arg(long)]
        colors: String,
    },
    /// Colored complete bipartite gadget.
    Gadget(GadgetArgs),
}

#[derive(Args)]
struct GadgetArgs {
    #[arg(long, required_unless_present = "builtin")]
    t: Option<usize>,
    #[arg(long, required_unless_present = "builtin")]
    r: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Use a deterministic builtin instead of a random coloring.
    #[arg(long, value_enum)]
    builtin: Option<Builtin>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Builtin {
    /// The t = 3, r = 2 permutation-complement coloring.
    Perm3,
    /// All edges in color 1 (negative control).
    Mono,
    /// Two colors by parity of the side indices.
    Checker,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads.or_else(|| {
        std::env::var("MEXTREMAL_THREADS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    if let Some(t) = threads {
        // Ignore failure: the pool may already be initialized in tests.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t.max(1))
            .build_global();
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

/// Renders a library error with its variant name for greppable messages.
fn domain_err(e: mextremal::Error) -> String {
    format!("[{}] {e}", e.name())
}

fn read_graph(path: &Path) -> Result<ColoredMultigraph, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    io::parse_auto(&text).map_err(|e| format!("{}: {}", path.display(), domain_err(e)))
}

fn read_patterns(paths: &[PathBuf]) -> Result<Vec<ColoredMultigraph>, String> {
    paths.iter().map(|p| read_graph(p)).collect()
}

fn emit_graph(g: &ColoredMultigraph, format: Format) {
    match format {
        Format::Text => print!("{}", io::serialize_text(g)),
        Format::Json => println!("{}", io::serialize_json(g)),
    }
}

fn graph_value(g: &ColoredMultigraph) -> Value {
    json!({ "n": g.n(), "r": g.r(), "edges": g.all_edges() })
}

fn rat_value(x: Rat) -> Value {
    json!({
        "num": *x.numer(),
        "den": *x.denom(),
        "decimal": bounds::to_f64(x),
    })
}

fn run(cli: &Cli) -> Result<(), String> {
    let format = cli.format;
    match &cli.command {
        Command::Chi { graph } => {
            let g = read_graph(graph)?;
            let chi = chromatic_number(&g).map_err(domain_err)?;
            match format {
                Format::Text => println!("chi = {chi}"),
                Format::Json => println!(
                    "{}",
                    json!({ "schema": "mextremal/chi/v1", "chi": chi })
                ),
            }
            Ok(())
        }
        Command::Redmm { graph } => {
            let g = read_graph(graph)?;
            let res = reduced_max_matching(&g).map_err(domain_err)?;
            match format {
                Format::Text => {
                    println!("M = {}", res.m);
                    println!("partition = {:?}", res.partition.classes());
                    for e in &res.matching.edges {
                        println!("matching: classes ({}, {}) color {}", e.a, e.b, e.color);
                    }
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": "mextremal/redmm/v1",
                        "m": res.m,
                        "partition": res.partition.classes(),
                        "matching": res.matching.edges,
                    })
                ),
            }
            Ok(())
        }
        Command::Bounds { graph, r } => {
            let g = read_graph(graph)?;
            let rep = bounds::report(&g, *r).map_err(domain_err)?;
            match format {
                Format::Text => {
                    println!("r            = {}", rep.r);
                    println!("chi          = {}", rep.chi);
                    println!("M            = {}", rep.m);
                    println!(
                        "trivial upper = {} ({:.6})",
                        bounds::format_rational(rep.trivial_upper),
                        bounds::to_f64(rep.trivial_upper)
                    );
                    println!(
                        "refined upper = {} ({:.6})",
                        bounds::format_rational(rep.theorem_upper),
                        bounds::to_f64(rep.theorem_upper)
                    );
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": "mextremal/bounds/v1",
                        "r": rep.r,
                        "chi": rep.chi,
                        "m": rep.m,
                        "trivial_upper": rat_value(rep.trivial_upper),
                        "theorem_upper": rat_value(rep.theorem_upper),
                    })
                ),
            }
            Ok(())
        }
        Command::Mex {
            n,
            r,
            patterns,
            node_limit,
        } => {
            let pats = read_patterns(patterns)?;
            let opts = SearchOptions {
                node_limit: *node_limit,
                ..Default::default()
            };
            let res = mex_exact_with(*n, *r, &pats, &opts).map_err(domain_err)?;
            report_search("mex", res, format);
            Ok(())
        }
        Command::Maxedges {
            n,
            r,
            patterns,
            node_limit,
        } => {
            let pats = read_patterns(patterns)?;
            let opts = SearchOptions {
                node_limit: *node_limit,
                ..Default::default()
            };
            let res =
                max_edges_avoiding_with(*n, *r, &pats, &opts).map_err(domain_err)?;
            report_search("maxedges", res, format);
            Ok(())
        }
        Command::Contains { host, pattern } => {
            let h = read_graph(host)?;
            let p = read_graph(pattern)?;
            let found = contains_colored(&h, &p).map_err(domain_err)?;
            match format {
                Format::Text => match &found {
                    Some(e) => println!("found: {:?}", e.map),
                    None => println!("none"),
                },
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": "mextremal/contains/v1",
                        "found": found.is_some(),
                        "map": found.as_ref().map(|e| &e.map),
                    })
                ),
            }
            Ok(())
        }
        Command::Hom { pattern, target } => {
            let p = read_graph(pattern)?;
            let t = read_graph(target)?;
            let found = hom_exists(&p, &t).map_err(domain_err)?;
            match format {
                Format::Text => match &found {
                    Some(w) => println!("found: {:?}", w.map),
                    None => println!("none"),
                },
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": "mextremal/hom/v1",
                        "found": found.is_some(),
                        "map": found.as_ref().map(|w| &w.map),
                    })
                ),
            }
            Ok(())
        }
        Command::Blowup { graph, s } => {
            if *s < 1 {
                return Err("blow-up factor must be at least 1".into());
            }
            let g = read_graph(graph)?;
            emit_graph(&g.blow_up(*s), format);
            Ok(())
        }
        Command::Construct { what } => {
            let g = construct(what)?;
            emit_graph(&g, format);
            Ok(())
        }
        Command::VerifyGadget {
            graph,
            s,
            exact: _,
            trials,
            seed,
        } => {
            let g = read_graph(graph)?;
            let mode = match trials {
                Some(t) => VerifyMode::Sampled {
                    trials: *t,
                    seed: *seed,
                },
                None => VerifyMode::Exact,
            };
            let verdict =
                mextremal::constructions::verify_gadget(&g, *s, mode).map_err(domain_err)?;
            match format {
                Format::Text => match &verdict {
                    GadgetVerdict::Pass => println!("pass"),
                    GadgetVerdict::Fail { rows, cols } => {
                        println!("fail: rows {rows:?} cols {cols:?}")
                    }
                },
                Format::Json => {
                    let (pass, rows, cols) = match &verdict {
                        GadgetVerdict::Pass => (true, None, None),
                        GadgetVerdict::Fail { rows, cols } => {
                            (false, Some(rows.clone()), Some(cols.clone()))
                        }
                    };
                    println!(
                        "{}",
                        json!({
                            "schema": "mextremal/verify-gadget/v1",
                            "pass": pass,
                            "rows": rows,
                            "cols": cols,
                        })
                    );
                }
            }
            Ok(())
        }
        Command::Pipeline {
            host,
            k,
            matching,
            rounds,
            seed,
            partition,
        } => {
            let h = read_graph(host)?;
            let spec =
                PPrimeSpec::new(*k, matching.clone(), h.r()).map_err(domain_err)?;
            let parsed = match partition {
                Some(text) => Some(parse_partition(text, h.n())?),
                None => None,
            };
            let opts = FindOptions {
                partition: parsed,
                rounds: *rounds,
                seed: *seed,
            };
            let (outcome, trace) = find_pprime(&h, &spec, &opts).map_err(domain_err)?;
            let found = match &outcome {
                FindOutcome::Found(e) => Some(e.map.clone()),
                FindOutcome::Exhausted => None,
            };
            match format {
                Format::Text => {
                    match &found {
                        Some(map) => println!("found: {map:?}"),
                        None => println!("not found within {rounds} rounds"),
                    }
                    println!("target: {:?}", build_pprime(&spec).all_edges());
                    println!("partition source: {:?}", trace.source);
                    println!("rounds run: {}", trace.rounds.len());
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": "mextremal/pipeline/v1",
                        "found": found.is_some(),
                        "map": found,
                        "trace": serde_json::to_value(&trace).expect("trace serializes"),
                    })
                ),
            }
            Ok(())
        }
        Command::Tightness { r, k, m } => {
            let rep = bounds::tightness_check(*r, *k, *m).map_err(domain_err)?;
            match format {
                Format::Text => {
                    println!(
                        "construction lower = {} ({:.6})",
                        bounds::format_rational(rep.construction_lower),
                        bounds::to_f64(rep.construction_lower)
                    );
                    println!(
                        "refined upper      = {} ({:.6})",
                        bounds::format_rational(rep.theorem_upper),
                        bounds::to_f64(rep.theorem_upper)
                    );
                    println!(
                        "gap ratio          = {} ({:.4})",
                        bounds::format_rational(rep.gap_ratio),
                        bounds::to_f64(rep.gap_ratio)
                    );
                    println!("holds              = {}", rep.holds);
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "schema": "mextremal/tightness/v1",
                        "r": rep.r,
                        "k": rep.k,
                        "m": rep.m,
                        "construction_lower": rat_value(rep.construction_lower),
                        "theorem_upper": rat_value(rep.theorem_upper),
                        "trivial_upper": rat_value(rep.trivial_upper),
                        "gap_ratio": rat_value(rep.gap_ratio),
                        "holds": rep.holds,
                    })
                ),
            }
            Ok(())
        }
    }
}

fn report_search(name: &str, res: mextremal::extremal::MexResult, format: Format) {
    match format {
        Format::Text => {
            println!("T = {}", res.value);
            println!(
                "exhaustive = {}, nodes = {}",
                res.exhaustive, res.nodes_explored
            );
            print!("{}", io::serialize_text(&res.witness));
        }
        Format::Json => println!(
            "{}",
            json!({
                "schema": format!("mextremal/{name}/v1"),
                "value": res.value,
                "exhaustive": res.exhaustive,
                "nodes_explored": res.nodes_explored,
                "witness": graph_value(&res.witness),
            })
        ),
    }
}

fn construct(cmd: &ConstructCmd) -> Result<ColoredMultigraph, String> {
    match cmd {
        ConstructCmd::Family { r, k, m } => Ok(lower_bound_family(*r, *k, *m)
            .map_err(domain_err)?
            .graph),
        ConstructCmd::H { r, k, t, seed } => {
            if *k < 2 || *t < 1 {
                return Err("need k >= 2 and t >= 1".into());
            }
            Ok(graph_h(*r, *k, *t, *seed))
        }
        ConstructCmd::Hprime { graph, m, red } => {
            if *m < 1 {
                return Err("need m >= 1".into());
            }
            let h = read_graph(graph)?;
            graph_h_prime(&h, *m, *red).map_err(domain_err)
        }
        ConstructCmd::T1 => Ok(t1()),
        ConstructCmd::T2 => Ok(t2()),
        ConstructCmd::Cycle { length, colors } => {
            cycle_pattern(*length, colors).map_err(domain_err)
        }
        ConstructCmd::Gadget(args) => match args.builtin {
            Some(Builtin::Perm3) => Ok(builtin_gadget_t3()),
            Some(Builtin::Mono) => {
                let t = args.t.ok_or("builtin mono needs --t")?;
                let r = args.r.ok_or("builtin mono needs --r")?;
                Ok(mono_gadget(t, r))
            }
            Some(Builtin::Checker) => {
                let t = args.t.ok_or("builtin checker needs --t")?;
                Ok(checkerboard_gadget(t))
            }
            None => {
                let t = args.t.expect("clap enforces --t");
                let r = args.r.expect("clap enforces --r");
                let spec = GadgetSpec::new(t, r, 1, args.seed).map_err(domain_err)?;
                Ok(gadget_coloring(&spec))
            }
        },
    }
}

fn parse_partition(text: &str, n: usize) -> Result<Partition, String> {
    let classes: Result<Vec<Vec<usize>>, String> = text
        .split(';')
        .map(|class| {
            class
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| format!("invalid vertex {s:?} in partition"))
                })
                .collect()
        })
        .collect();
    Partition::new(classes?, n).map_err(domain_err)
}
