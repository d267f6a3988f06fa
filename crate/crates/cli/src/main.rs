use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use qbmg_core::binary::{find_hourglasses, is_binary_explainable, polygon_counterexample};
use qbmg_core::generate::{random_coloring, random_qbmg, random_tree, QbmgParams};
use qbmg_core::lrt::{is_least_resolved, minimize};
use qbmg_core::oracle::{brute_force_is_binary_explainable, brute_force_is_qbmg, TREE_CAP};
use qbmg_core::two_color::{check_axiom_with_limit, DEFAULT_WITNESS_LIMIT};
use qbmg_core::{
    bmg_of, parse_newick, qbmg_of, recognize_bmg, recognize_qbmg, write_newick, AxiomTag,
    ColoredDigraph, Error, Explanation, LeafColoring, Verdict,
};

#[derive(Parser)]
#[command(name = "qbmg", version, about = "Quasi-best match graphs: construction, recognition and analysis")]
struct Cli {
    /// Worker threads for parallel library code (default: all cores).
    #[arg(long, global = true, env = "QBMG_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Io {
    /// Input file, `-` for stdin.
    input: PathBuf,
    /// Output file (default: stdout).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Recognize a graph and print an explanation bundle.
    Recognize {
        #[command(flatten)]
        io: Io,
        /// Require a BMG (trivial truncation).
        #[arg(long, conflicts_with = "binary")]
        bmg: bool,
        /// Require an explanation over a binary tree.
        #[arg(long)]
        binary: bool,
        /// Also write a verdict file that `oracle-check` can replay.
        #[arg(long)]
        verdict: Option<PathBuf>,
    },
    /// Graph of an explanation bundle.
    QbmgOf(Io),
    /// BMG of a Newick tree whose leaves carry `[&color=…]` comments.
    BmgOf {
        #[command(flatten)]
        io: Io,
        /// Comma-separated palette; defaults to the colors used.
        #[arg(long, value_delimiter = ',')]
        colors: Vec<String>,
    },
    /// Check the two-colored axioms; prints a JSON report array.
    Axioms {
        #[command(flatten)]
        io: Io,
        /// Axioms to check (default: all).
        #[arg(long = "axiom", value_parser = parse_axiom)]
        axioms: Vec<AxiomTag>,
        /// Report every witness instead of the first few.
        #[arg(long)]
        all_witnesses: bool,
    },
    /// Binary-explainability verdict with explanation or hourglasses.
    Binary(Io),
    /// Least-resolved explanation from a bundle or a graph.
    Lrt(Io),
    /// Generate instances.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        /// Output file (default: stdout).
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Replay verdict or graph files against the brute-force oracle.
    OracleCheck {
        /// Verdict files written by `recognize --verdict`, or graph files.
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Largest instance handed to the oracle.
        #[arg(long, default_value_t = TREE_CAP)]
        cap: usize,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Random tree in Newick.
    RandomTree {
        #[arg(long, default_value_t = 10)]
        leaves: usize,
        #[arg(long, default_value_t = 0.3)]
        polytomy: f64,
        /// Color the leaves with this many colors.
        #[arg(long)]
        colors: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Random qBMG in graph JSON.
    RandomQbmg {
        #[arg(long, default_value_t = 10)]
        leaves: usize,
        #[arg(long, default_value_t = 3)]
        colors: usize,
        #[arg(long, default_value_t = 0.3)]
        polytomy: f64,
        /// Probability that a limit stays at the root.
        #[arg(long, default_value_t = 0.7)]
        keep_root: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the generating explanation bundle.
        #[arg(long)]
        explanation: Option<PathBuf>,
    },
    /// The 4k-gon that is a qBMG but not binary-explainable.
    Polygon {
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Qbmg,
    Bmg,
    Binary,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Qbmg => "qbmg",
            Kind::Bmg => "bmg",
            Kind::Binary => "binary",
        }
    }
}

fn parse_axiom(s: &str) -> std::result::Result<AxiomTag, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Exit status of a command that ran to completion.
enum Outcome {
    Accept,
    Reject(String),
}

/// Errors that are verdicts rather than failures.
fn rejection(e: &Error) -> Option<String> {
    match e {
        Error::NotQbmg | Error::NotTwoQbmg | Error::ImproperColoring | Error::TooManyColors(_) => Some(e.to_string()),
        Error::AxiomViolation(r) => Some(format!("axiom {} fails", r.axiom)),
        _ => None,
    }
}

fn read(path: &Path) -> Result<String> {
    let mut s = String::new();
    if path == Path::new("-") {
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
    } else {
        s = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    }
    Ok(s)
}

fn write(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("writing stdout"),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn read_graph(path: &Path) -> Result<ColoredDigraph> {
    ColoredDigraph::from_json(&read(path)?).with_context(|| format!("parsing graph {}", path.display()))
}

fn recognize(g: &ColoredDigraph, kind: Kind) -> Result<std::result::Result<Explanation, String>> {
    let verdict = match kind {
        Kind::Qbmg => recognize_qbmg(g)?,
        Kind::Bmg => recognize_bmg(g)?,
        Kind::Binary => {
            return Ok(match is_binary_explainable(g)? {
                Some(e) => Ok(e),
                None if !g.is_properly_colored() => Err("improper coloring".into()),
                None => Err("not binary-explainable".into()),
            })
        }
    };
    Ok(match verdict {
        Verdict::Accepted(e) => Ok(e),
        Verdict::Rejected(r) => Err(r.reason().to_string()),
    })
}

fn cmd_recognize(io: &Io, kind: Kind, verdict: Option<&Path>) -> Result<Outcome> {
    let g = read_graph(&io.input)?;
    let result = recognize(&g, kind)?;
    if let Some(p) = verdict {
        let doc = json!({
            "accepted": result.is_ok(),
            "graph": serde_json::from_str::<Value>(&g.to_json())?,
            "kind": kind.name(),
        });
        write(Some(p), &pretty(&doc))?;
    }
    match result {
        Ok(e) => {
            write(io.output.as_deref(), &e.to_json())?;
            Ok(Outcome::Accept)
        }
        Err(reason) => Ok(Outcome::Reject(reason)),
    }
}

fn cmd_qbmg_of(io: &Io) -> Result<Outcome> {
    let e = Explanation::from_json(&read(&io.input)?).context("parsing explanation bundle")?;
    write(io.output.as_deref(), &qbmg_of(&e).to_json())?;
    Ok(Outcome::Accept)
}

fn cmd_bmg_of(io: &Io, colors: &[String]) -> Result<Outcome> {
    let parsed = parse_newick(&read(&io.input)?).context("parsing Newick")?;
    let leaves = parsed.tree.leaf_labels();
    if let Some(x) = leaves.iter().find(|x| !parsed.colors.contains_key(*x)) {
        bail!("leaf `{x}` has no [&color=…] comment");
    }
    let palette: Vec<qbmg_core::Color> = if colors.is_empty() {
        parsed.colors.values().cloned().collect::<std::collections::BTreeSet<_>>().into_iter().collect()
    } else {
        colors.iter().map(qbmg_core::Color::new).collect()
    };
    if let Some((x, c)) = parsed.colors.iter().find(|(_, c)| !palette.contains(c)) {
        bail!("leaf `{x}` has color `{c}` outside the palette");
    }
    let coloring = LeafColoring::new(parsed.colors.clone(), palette);
    write(io.output.as_deref(), &bmg_of(&parsed.tree, &coloring)?.to_json())?;
    Ok(Outcome::Accept)
}

fn cmd_axioms(io: &Io, axioms: &[AxiomTag], all: bool) -> Result<Outcome> {
    let g = read_graph(&io.input)?;
    if g.palette().len() > 2 {
        return Ok(Outcome::Reject(format!("{} colors; the axioms concern two-colored graphs", g.palette().len())));
    }
    let tags = if axioms.is_empty() { AxiomTag::ALL.to_vec() } else { axioms.to_vec() };
    let limit = if all { None } else { Some(DEFAULT_WITNESS_LIMIT) };
    let reports: Vec<_> = tags.iter().map(|&t| check_axiom_with_limit(&g, t, limit)).collect();
    write(io.output.as_deref(), &pretty(&serde_json::to_value(&reports)?))?;
    match reports.iter().filter(|r| !r.satisfied()).map(|r| r.axiom.to_string()).collect::<Vec<_>>() {
        failed if failed.is_empty() => Ok(Outcome::Accept),
        failed => Ok(Outcome::Reject(format!("violated: {}", failed.join(", ")))),
    }
}

fn cmd_binary(io: &Io) -> Result<Outcome> {
    let g = read_graph(&io.input)?;
    let e = is_binary_explainable(&g)?;
    let hourglasses: Vec<Value> = find_hourglasses(&g)
        .into_iter()
        .map(|h| json!([h.x, h.x_prime, h.y, h.y_prime]))
        .collect();
    let doc = json!({
        "binary_explainable": e.is_some(),
        "explanation": e.as_ref().map(Explanation::to_json_value),
        "hourglasses": hourglasses,
    });
    write(io.output.as_deref(), &pretty(&doc))?;
    Ok(match e {
        Some(_) => Outcome::Accept,
        None => Outcome::Reject("not binary-explainable".into()),
    })
}

fn cmd_lrt(io: &Io) -> Result<Outcome> {
    let text = read(&io.input)?;
    let doc: Value = serde_json::from_str(&text).context("parsing JSON")?;
    let e = if doc.get("tree").is_some() {
        Explanation::from_json_value(doc).context("parsing explanation bundle")?
    } else {
        let g = ColoredDigraph::from_json(&text).context("parsing graph")?;
        match recognize_qbmg(&g)? {
            Verdict::Accepted(e) => e,
            Verdict::Rejected(r) => return Ok(Outcome::Reject(r.reason().to_string())),
        }
    };
    let m = minimize(&e)?;
    debug_assert!(is_least_resolved(&m));
    write(io.output.as_deref(), &m.to_json())?;
    Ok(Outcome::Accept)
}

fn cmd_gen(kind: &GenKind, output: Option<&Path>) -> Result<Outcome> {
    let text = match *kind {
        GenKind::RandomTree { leaves, polytomy, colors, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let t = random_tree(leaves, polytomy, &mut rng)?;
            let coloring = colors.map(|k| random_coloring(&t, k, &mut rng)).transpose()?;
            format!("{}\n", write_newick(&t, coloring.as_ref()))
        }
        GenKind::RandomQbmg { leaves, colors, polytomy, keep_root, seed, ref explanation } => {
            let p = QbmgParams { leaves, colors, polytomy, keep_root };
            let (e, g) = random_qbmg(p, &mut ChaCha8Rng::seed_from_u64(seed))?;
            if let Some(path) = explanation {
                write(Some(path), &e.to_json())?;
            }
            g.to_json()
        }
        GenKind::Polygon { k } => polygon_counterexample(k)?.to_json(),
    };
    write(output, &text)?;
    Ok(Outcome::Accept)
}

/// One claim to replay: a graph, a kind, and the claimed verdict.
struct Claim {
    graph: ColoredDigraph,
    kind: Kind,
    accepted: bool,
}

fn claims_of(text: &str) -> Result<Vec<Claim>> {
    let doc: Value = serde_json::from_str(text).context("parsing JSON")?;
    let items = match doc {
        Value::Array(items) => items,
        other => vec![other],
    };
    let mut out = Vec::new();
    for item in items {
        if let Some(g) = item.get("graph") {
            let graph = ColoredDigraph::from_json(&g.to_string())?;
            let kind = match item.get("kind").and_then(Value::as_str) {
                Some("qbmg") | None => Kind::Qbmg,
                Some("binary") => Kind::Binary,
                Some("bmg") => Kind::Bmg,
                Some(k) => bail!("unknown verdict kind `{k}`"),
            };
            let accepted = item
                .get("accepted")
                .and_then(Value::as_bool)
                .ok_or_else(|| anyhow!("verdict without boolean `accepted`"))?;
            out.push(Claim { graph, kind, accepted });
        } else {
            // a bare graph: replay what the fast path says now
            let graph = ColoredDigraph::from_json(&item.to_string())?;
            for kind in [Kind::Qbmg, Kind::Binary] {
                let accepted = recognize(&graph, kind)?.is_ok();
                out.push(Claim { graph: graph.clone(), kind, accepted });
            }
        }
    }
    Ok(out)
}

fn oracle(g: &ColoredDigraph, kind: Kind, cap: usize) -> Result<bool> {
    Ok(match kind {
        Kind::Qbmg => brute_force_is_qbmg(g, cap)?,
        // BMGs are exactly the qBMGs without color sinks
        Kind::Bmg => g.is_color_sink_free() && brute_force_is_qbmg(g, cap)?,
        Kind::Binary => brute_force_is_binary_explainable(g, cap)?,
    })
}

fn cmd_oracle_check(files: &[PathBuf], cap: usize, output: Option<&Path>) -> Result<Outcome> {
    let mut checked = 0;
    let mut skipped = 0;
    let mut divergences = Vec::new();
    for f in files {
        let claims = claims_of(&read(f)?).with_context(|| format!("reading claims from {}", f.display()))?;
        for (i, c) in claims.iter().enumerate() {
            if c.graph.vertex_count() == 0 || c.graph.vertex_count() > cap.min(TREE_CAP) {
                skipped += 1;
                continue;
            }
            let truth = oracle(&c.graph, c.kind, cap)?;
            checked += 1;
            if truth != c.accepted {
                divergences.push(json!({
                    "claimed": c.accepted,
                    "file": f.display().to_string(),
                    "index": i,
                    "kind": c.kind.name(),
                    "oracle": truth,
                }));
            }
        }
    }
    let n = divergences.len();
    let doc = json!({ "checked": checked, "divergences": divergences, "skipped": skipped });
    write(output, &pretty(&doc))?;
    Ok(if n == 0 { Outcome::Accept } else { Outcome::Reject(format!("{n} divergences")) })
}

fn run(cli: Cli) -> Result<Outcome> {
    if let Some(n) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    let res = match &cli.command {
        Command::Recognize { io, bmg, binary, verdict } => {
            let kind = if *bmg {
                Kind::Bmg
            } else if *binary {
                Kind::Binary
            } else {
                Kind::Qbmg
            };
            cmd_recognize(io, kind, verdict.as_deref())
        }
        Command::QbmgOf(io) => cmd_qbmg_of(io),
        Command::BmgOf { io, colors } => cmd_bmg_of(io, colors),
        Command::Axioms { io, axioms, all_witnesses } => cmd_axioms(io, axioms, *all_witnesses),
        Command::Binary(io) => cmd_binary(io),
        Command::Lrt(io) => cmd_lrt(io),
        Command::Gen { kind, output } => cmd_gen(kind, output.as_deref()),
        Command::OracleCheck { files, cap } => cmd_oracle_check(files, *cap, None),
    };
    match res {
        Err(e) => match e.downcast_ref::<Error>().and_then(rejection) {
            Some(reason) => Ok(Outcome::Reject(reason)),
            None => Err(e),
        },
        ok => ok,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Accept) => ExitCode::SUCCESS,
        Ok(Outcome::Reject(reason)) => {
            eprintln!("rejected: {reason}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
