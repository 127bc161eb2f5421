use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gsq_core::chordality::{is_chordal, ChordalityCertificate};
use gsq_core::corpus::{
    parse_text, write_dot, write_edge_list, write_graph6, CorpusSpec, Format, Highlight,
};
use gsq_core::error::Error;
use gsq_core::graph::Graph;
use gsq_core::harness::{
    check_table, mine_obstructions, verify_corpus, verify_graphs, MineTarget, TheoremId,
};
use gsq_core::patterns::{check_sufficient_chordalsq, find_claw, find_f4, find_p5a};
use gsq_core::witnesses::{extract_flower, extract_sprout};

const EXIT_VIOLATED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_FALSIFIED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "gsq",
    version,
    about = "Chordality of graph squares and line-graph squares"
)]
struct Cli {
    /// Format of graph input and output
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::G6)]
    format: FormatArg,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for `verify`; 0 uses every core
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    G6,
    Edges,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::G6 => Format::G6,
            FormatArg::Edges => Format::Edges,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    G6,
    Edges,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SquareKind {
    Square,
    Lgsquare,
}

#[derive(Subcommand)]
enum Command {
    /// Decide chordality; prints a perfect elimination ordering or a hole
    CheckChordal { file: PathBuf },
    /// The k-th power of each input graph
    Square {
        #[arg(short = 'k', default_value_t = 2)]
        k: usize,
        file: PathBuf,
    },
    /// The line graph of each input graph
    Linegraph { file: PathBuf },
    /// Forbidden patterns and the sufficient conditions for a chordal square
    Classify { file: PathBuf },
    /// Flower (square) or sprout (lgsquare) behind a hole of the square
    Witness {
        kind: SquareKind,
        file: PathBuf,
        /// Print DOT with the witness highlighted
        #[arg(long)]
        dot: bool,
    },
    /// Run theorem checks over a corpus
    Verify(VerifyArgs),
    /// Minimal graphs whose square is not chordal
    Mine {
        kind: SquareKind,
        #[arg(long)]
        nmax: usize,
    },
    /// Re-encode graphs
    Convert {
        #[arg(long, value_enum)]
        to: OutputFormat,
        file: PathBuf,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// All graphs with up to N vertices
    #[arg(long, value_name = "N", group = "corpus")]
    exhaustive: Option<usize>,
    /// COUNT random graphs G(N, P)
    #[arg(long, num_args = 3, value_names = ["N", "P", "COUNT"], group = "corpus")]
    random: Option<Vec<String>>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Graphs read from a file in the `--format` format
    #[arg(long, value_name = "PATH", group = "corpus")]
    file: Option<PathBuf>,
    /// Keep connected graphs only
    #[arg(long)]
    connected: bool,
    /// Comma separated theorem ids, or `all`
    #[arg(long, default_value = "all")]
    theorems: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = check_table() {
        eprintln!("gsq: {e}");
        return ExitCode::from(EXIT_FALSIFIED);
    }
    let mut out = io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("gsq: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn read_graphs(file: &PathBuf, format: Format) -> Result<Vec<Graph>> {
    let mut text = String::new();
    if file.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text =
            std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    }
    let graphs = parse_text(&text, format)?;
    if graphs.is_empty() {
        bail!("no graph in {}", file.display());
    }
    Ok(graphs)
}

fn encode(g: &Graph, to: OutputFormat) -> Result<String> {
    Ok(match to {
        OutputFormat::G6 => write_graph6(g)? + "\n",
        OutputFormat::Edges => write_edge_list(g),
        OutputFormat::Dot => write_dot(g, None),
    })
}

fn output_format(f: FormatArg) -> OutputFormat {
    match f {
        FormatArg::G6 => OutputFormat::G6,
        FormatArg::Edges => OutputFormat::Edges,
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8> {
    let format = Format::from(cli.format);
    match &cli.command {
        Command::CheckChordal { file } => {
            let mut code = 0;
            for g in read_graphs(file, format)? {
                let cert = is_chordal(&g);
                match &cert {
                    ChordalityCertificate::Chordal { peo } => {
                        if cli.json {
                            writeln!(out, "{}", json!({"chordal": true, "peo": peo}))?;
                        } else {
                            writeln!(out, "chordal; elimination order: {}", join(peo))?;
                        }
                    }
                    ChordalityCertificate::NotChordal { hole } => {
                        code = EXIT_VIOLATED;
                        if cli.json {
                            writeln!(
                                out,
                                "{}",
                                json!({"chordal": false, "hole": hole.vertices()})
                            )?;
                        } else {
                            writeln!(out, "not chordal; hole: {}", join(hole.vertices()))?;
                        }
                    }
                }
            }
            Ok(code)
        }
        Command::Square { k, file } => {
            for g in read_graphs(file, format)? {
                write!(out, "{}", encode(&g.power(*k)?, output_format(cli.format))?)?;
            }
            Ok(0)
        }
        Command::Linegraph { file } => {
            for g in read_graphs(file, format)? {
                let map = g.line_graph();
                if cli.json {
                    let edges: Vec<[usize; 2]> =
                        map.edge_of_vertex.iter().map(|&(a, b)| [a, b]).collect();
                    let graph = match cli.format {
                        FormatArg::G6 => Value::from(write_graph6(&map.lg)?),
                        FormatArg::Edges => Value::from(write_edge_list(&map.lg)),
                    };
                    writeln!(out, "{}", json!({"graph": graph, "edge_of_vertex": edges}))?;
                } else {
                    write!(out, "{}", encode(&map.lg, output_format(cli.format))?)?;
                }
            }
            Ok(0)
        }
        Command::Classify { file } => {
            for g in read_graphs(file, format)? {
                let report = classify(&g)?;
                if cli.json {
                    writeln!(out, "{report}")?;
                } else {
                    for (key, value) in report.as_object().expect("object") {
                        writeln!(out, "{key}: {value}")?;
                    }
                }
            }
            Ok(0)
        }
        Command::Witness { kind, file, dot } => {
            let mut code = 0;
            for g in read_graphs(file, format)? {
                code = code.max(witness(&g, *kind, *dot, cli.json, out)?);
            }
            Ok(code)
        }
        Command::Verify(args) => verify(cli, args, out),
        Command::Mine { kind, nmax } => {
            let target = match kind {
                SquareKind::Square => MineTarget::Square,
                SquareKind::Lgsquare => MineTarget::LgSquare,
            };
            let found = mine_obstructions(target, *nmax)?;
            if cli.json {
                let items: Vec<Value> = found
                    .iter()
                    .map(|g| Ok(json!({"graph6": write_graph6(g)?, "dot": write_dot(g, None)})))
                    .collect::<Result<_>>()?;
                writeln!(out, "{}", serde_json::to_string_pretty(&items)?)?;
            } else {
                for g in &found {
                    writeln!(out, "{}", write_graph6(g)?)?;
                    write!(out, "{}", write_dot(g, None))?;
                }
                eprintln!(
                    "{} minimal obstructions with at most {nmax} vertices",
                    found.len()
                );
            }
            Ok(0)
        }
        Command::Convert { to, file } => {
            for g in read_graphs(file, format)? {
                write!(out, "{}", encode(&g, *to)?)?;
            }
            Ok(0)
        }
    }
}

fn classify(g: &Graph) -> Result<Value> {
    let optional = |r: std::result::Result<Value, Error>| match r {
        Ok(v) => Ok(v),
        Err(Error::TooLarge { .. }) => Ok(Value::Null),
        Err(e) => Err(e),
    };
    let f4 = optional(find_f4(g).map(|found| {
        found
            .iter()
            .map(|f| {
                json!({
                    "u": f.u,
                    "w": f.w,
                    "suspended_by": f.suspended_by,
                    "suspended": f.suspended_by.is_some(),
                })
            })
            .collect()
    }))?;
    let sufficient = optional(check_sufficient_chordalsq(g).map(|r| Value::from(r.applicable)))?;
    let lg2 = g.line_graph().lg.square();
    Ok(json!({
        "order": g.order(),
        "size": g.size(),
        "chordal": is_chordal(g).is_chordal(),
        "claw_free": find_claw(g).is_none(),
        "p5a_free": find_p5a(g).is_none(),
        "f4": f4,
        "sufficient_chordalsq": sufficient,
        "square_chordal": is_chordal(&g.square()).is_chordal(),
        "line_graph_square_chordal": is_chordal(&lg2).is_chordal(),
    }))
}

fn witness(
    g: &Graph,
    kind: SquareKind,
    dot: bool,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<u8> {
    let target = match kind {
        SquareKind::Square => g.square(),
        SquareKind::Lgsquare => g.line_graph().lg.square(),
    };
    let hole = match is_chordal(&target) {
        ChordalityCertificate::Chordal { peo } => {
            if as_json {
                writeln!(out, "{}", json!({"chordal": true, "peo": peo}))?;
            } else if dot {
                write!(out, "{}", write_dot(g, None))?;
            } else {
                writeln!(
                    out,
                    "chordal; elimination order of the square: {}",
                    join(&peo)
                )?;
            }
            return Ok(0);
        }
        ChordalityCertificate::NotChordal { hole } => hole.into_vec(),
    };
    match kind {
        SquareKind::Square => {
            let f = match extract_flower(g, &hole) {
                Ok(f) => f,
                Err(e @ Error::InternalContradiction(_)) => return falsified(g, e, out),
                Err(e) => return Err(e.into()),
            };
            if as_json {
                writeln!(
                    out,
                    "{}",
                    json!({"chordal": false, "hole": hole, "flower": f})
                )?;
            } else if dot {
                write!(out, "{}", write_dot(g, Some(Highlight::Flower(&f))))?;
            } else {
                writeln!(out, "hole of the square: {}", join(&hole))?;
                writeln!(out, "unwithered flower of size {}", f.size())?;
                writeln!(out, "  U: {}", join(&f.u))?;
                writeln!(out, "  W: {}", join(&f.w))?;
                writeln!(out, "  cycle: {}", join(&f.cycle))?;
                writeln!(out, "  pending: {}", join(&f.pending))?;
            }
        }
        SquareKind::Lgsquare => {
            let s = match extract_sprout(g, &hole) {
                Ok(s) => s,
                Err(e @ Error::InternalContradiction(_)) => return falsified(g, e, out),
                Err(e) => return Err(e.into()),
            };
            if as_json {
                writeln!(
                    out,
                    "{}",
                    json!({"chordal": false, "hole": hole, "sprout": s})
                )?;
            } else if dot {
                write!(out, "{}", write_dot(g, Some(Highlight::Sprout(&s))))?;
            } else {
                let edges = |v: &[(usize, usize)]| {
                    v.iter()
                        .map(|(a, b)| format!("{a}-{b}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                writeln!(out, "hole of the line-graph square: {}", join(&hole))?;
                writeln!(out, "fertile sprout of size {}", s.size())?;
                writeln!(out, "  U: {}", edges(&s.u_edges))?;
                writeln!(out, "  W: {}", edges(&s.w_edges))?;
                writeln!(out, "  cycle: {}", edges(&s.cycle))?;
                writeln!(out, "  pending: {}", edges(&s.pending))?;
            }
        }
    }
    Ok(EXIT_VIOLATED)
}

/// Reports a failed constructive step and the graph it failed on.
fn falsified(g: &Graph, e: Error, out: &mut dyn Write) -> Result<u8> {
    eprintln!("gsq: {e}");
    writeln!(out, "{}", write_graph6(g)?)?;
    Ok(EXIT_FALSIFIED)
}

fn verify(cli: &Cli, args: &VerifyArgs, out: &mut dyn Write) -> Result<u8> {
    let mut spec = if let Some(n) = args.exhaustive {
        CorpusSpec::exhaustive(n)
    } else if let Some(r) = &args.random {
        let n = r[0].parse().context("N must be a count")?;
        let p = r[1].parse().context("P must be a probability")?;
        let count = r[2].parse().context("COUNT must be a count")?;
        CorpusSpec::random(n, p, count, args.seed)
    } else if let Some(path) = &args.file {
        CorpusSpec::file(path, Format::from(cli.format))
    } else {
        bail!("one of --exhaustive, --random or --file is required");
    };
    if args.connected {
        spec = spec.connected();
    }
    let ids = TheoremId::parse_list(&args.theorems)?;
    let run = match &args.file {
        Some(path) if path.as_os_str() == "-" => {
            let mut graphs = read_graphs(path, Format::from(cli.format))?;
            if args.connected {
                graphs.retain(Graph::is_connected);
            }
            verify_graphs(&spec, &graphs, &ids, cli.jobs)?
        }
        _ => verify_corpus(&spec, &ids, cli.jobs)?,
    };
    let report = &run.report;
    if cli.json {
        writeln!(out, "{}", report.to_json())?;
    } else {
        writeln!(out, "{} graphs", report.graphs)?;
        for t in &report.theorems {
            writeln!(
                out,
                "{:<18} holds {:>6}  vacuous {:>6}  counterexamples {:>3}  skipped {:>6}",
                t.id.name(),
                t.holds,
                t.vacuous,
                t.counterexamples,
                t.skipped
            )?;
        }
    }
    for (id, time) in &run.elapsed {
        eprintln!("{:<18} {:.3} s", id.name(), time.as_secs_f64());
    }
    if !report.unverified.is_empty() {
        for u in &report.unverified {
            eprintln!("gsq: counterexample did not re-verify: {u}");
        }
    }
    if report.counterexamples.is_empty() {
        return Ok(0);
    }
    for c in &report.counterexamples {
        eprintln!("gsq: {} falsified on {}: {}", c.theorem, c.graph6, c.detail);
        if !cli.json {
            writeln!(out, "{}", c.graph6)?;
        }
    }
    Ok(EXIT_FALSIFIED)
}
