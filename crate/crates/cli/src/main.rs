//! `lgp`: command-line front end for labeled graph products and the string
//! problems solved on them.
//!
//! Exit status: 0 on success (including "no match" answers), 1 when the
//! input is well formed but the request cannot be answered, 2 on usage,
//! I/O or parse errors.

mod report;

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lgp_core::oracle::{self, BruteRepeat};
use lgp_core::reductions::GadgetRegion;
use lgp_core::{
    build_product, lcsp_general, lrsp_general, lrsp_undirected_paths, lrsp_undirected_walks, msp_general, msp_star,
    ov_to_lrsp, parse_graph_with, parse_pattern, product_size, smlg, smlg_to_lrsp, Label, LabelSyntax, LabeledGraph,
    MsValue, OVInstance, PathCase, ReductionOutput,
};
use serde_json::json;

use report::Report;

#[derive(Parser)]
#[command(name = "lgp", version, about = "Labeled direct products and string problems on labeled graphs")]
struct Cli {
    /// Read and print labels as letters a..z instead of integers 0..25.
    #[arg(long, global = true)]
    chars: bool,
    /// Print the result as a single JSON object.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Materialize G1 ⊗ G2 as a graph file.
    Product {
        g1: PathBuf,
        g2: PathBuf,
        /// Write "<index> <left> <right>" per product vertex here instead of
        /// appending the mapping to stdout as comment lines.
        #[arg(long)]
        map: Option<PathBuf>,
    },
    /// Vertex and edge counts of G1 ⊗ G2, without building it.
    Size { g1: PathBuf, g2: PathBuf },
    /// Find a walk spelling the pattern.
    Smlg { graph: PathBuf, pattern: PathBuf },
    /// Longest string spelled by walks in both graphs.
    Lcsp { g1: PathBuf, g2: PathBuf },
    /// Matching statistics of every vertex of G1 against G2.
    Msp { g1: PathBuf, g2: PathBuf },
    /// Longest common string starting at V1 in G1 and at V2 in G2.
    MspStar { g1: PathBuf, g2: PathBuf, v1: usize, v2: usize },
    /// Longest string spelled by two distinct walks of a directed graph.
    Lrsp { graph: PathBuf },
    /// Longest repeated string of an undirected graph.
    LrspUndirected {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Occurrences::Walks)]
        occurrences: Occurrences,
    },
    /// Generate the Orthogonal Vectors hardness instance for LRSP.
    GenOv {
        /// Vectors per side (random instances).
        #[arg(long, required_unless_present = "file")]
        n: Option<usize>,
        /// Dimension (random instances).
        #[arg(long, required_unless_present = "file")]
        d: Option<usize>,
        #[arg(long, conflicts_with = "file")]
        seed: Option<u64>,
        /// Vector file: one 0/1 row per vector, A, a blank line, then B.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Generate the pattern-matching hardness instance for LRSP.
    GenSmlgLrsp {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Brute-force reference answers for tiny inputs.
    Oracle {
        #[arg(long, value_enum)]
        problem: OracleProblem,
        /// Largest string length explored; defaults to the number of
        /// equal-label vertex pairs plus one, which decides infinity.
        #[arg(long)]
        bound: Option<usize>,
        /// Input files: G (lrsp), G1 G2 (lcsp, msp) or G PATTERN (smlg).
        inputs: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Occurrences {
    Walks,
    Paths,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleProblem {
    Lrsp,
    Lcsp,
    Msp,
    Smlg,
}

enum CliError {
    Usage(String),
    Io(PathBuf, io::Error),
    Input(PathBuf, lgp_core::Error),
    Domain(lgp_core::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(e) if !e.is_parse_error() => 1,
            _ => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Input(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<lgp_core::Error> for CliError {
    fn from(e: lgp_core::Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn write(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

struct Ctx {
    syntax: LabelSyntax,
}

impl Ctx {
    fn graph(&self, path: &Path) -> CliResult<LabeledGraph> {
        parse_graph_with(&read(path)?, self.syntax).map_err(|e| CliError::Input(path.to_path_buf(), e))
    }

    fn pattern(&self, path: &Path) -> CliResult<Vec<Label>> {
        parse_pattern(&read(path)?, self.syntax).map_err(|e| CliError::Input(path.to_path_buf(), e))
    }

    fn report(&self, command: &str) -> Report {
        Report::new(self.syntax, command)
    }
}

fn run(cli: Cli) -> CliResult<String> {
    let ctx = Ctx { syntax: if cli.chars { LabelSyntax::Letter } else { LabelSyntax::Integer } };
    let report = match cli.command {
        Command::Product { g1, g2, map } => product(&ctx, &g1, &g2, map.as_deref())?,
        Command::Size { g1, g2 } => {
            let est = product_size(&ctx.graph(&g1)?, &ctx.graph(&g2)?)?;
            let mut r = ctx.report("size");
            r.line(format!("V={} E={}", est.vertex_count, est.edge_count));
            r.field("vertices", est.vertex_count);
            r.field("edges", est.edge_count);
            r
        }
        Command::Smlg { graph, pattern } => {
            let (g, p) = (ctx.graph(&graph)?, ctx.pattern(&pattern)?);
            let mut r = ctx.report("smlg");
            match smlg(&g, &p)? {
                Some(occ) => r.occurrence(&occ.string, &occ.walk),
                None => r.no_match(),
            }
            r
        }
        Command::Lcsp { g1, g2 } => {
            let ans = lcsp_general(&ctx.graph(&g1)?, &ctx.graph(&g2)?)?;
            let mut r = ctx.report("lcsp");
            r.common(&ans);
            r
        }
        Command::Msp { g1, g2 } => {
            let ms = msp_general(&ctx.graph(&g1)?, &ctx.graph(&g2)?)?;
            let mut r = ctx.report("msp");
            r.matching_statistics(&ms.values.into_iter().enumerate().collect::<Vec<_>>());
            r
        }
        Command::MspStar { g1, g2, v1, v2 } => {
            let value = msp_star(&ctx.graph(&g1)?, &ctx.graph(&g2)?, v1, v2)?;
            let mut r = ctx.report("msp-star");
            r.matching_statistics(&[(v1, value)]);
            r
        }
        Command::Lrsp { graph } => {
            let ans = lrsp_general(&ctx.graph(&graph)?)?;
            let mut r = ctx.report("lrsp");
            r.repeat(&ans);
            r
        }
        Command::LrspUndirected { graph, occurrences } => {
            let g = ctx.graph(&graph)?;
            let mut r = ctx.report("lrsp-undirected");
            match occurrences {
                Occurrences::Walks => r.repeat(&lrsp_undirected_walks(&g)?),
                Occurrences::Paths => {
                    let (case, m) = lrsp_undirected_paths(&g)?;
                    let case = match case {
                        PathCase::Path => "path",
                        PathCase::Tree => "tree",
                    };
                    r.line(format!("CASE {case}"));
                    r.field("case", case);
                    r.longest_match(&m);
                }
            }
            r
        }
        Command::GenOv { n, d, seed, file } => {
            let inst = match file {
                Some(path) => {
                    let inst = OVInstance::parse(&read(&path)?).map_err(|e| CliError::Input(path.clone(), e))?;
                    if n.is_some_and(|n| n != inst.n()) || d.is_some_and(|d| d != inst.d()) {
                        return Err(CliError::Usage(format!(
                            "{}: holds n={} d={}, which contradicts --n/--d",
                            path.display(),
                            inst.n(),
                            inst.d()
                        )));
                    }
                    inst
                }
                None => random_ov(n.expect("required by clap"), d.expect("required by clap"), seed.unwrap_or(0))?,
            };
            reduction(&ctx, "gen-ov", &ov_to_lrsp(&inst)?)
        }
        Command::GenSmlgLrsp { graph, pattern } => {
            let out = smlg_to_lrsp(&ctx.graph(&graph)?, &ctx.pattern(&pattern)?)?;
            reduction(&ctx, "gen-smlg-lrsp", &out)
        }
        Command::Oracle { problem, bound, inputs } => run_oracle(&ctx, problem, bound, &inputs)?,
    };
    Ok(report.render(cli.json))
}

fn product(ctx: &Ctx, g1: &Path, g2: &Path, map: Option<&Path>) -> CliResult<Report> {
    let (g1, g2) = (ctx.graph(g1)?, ctx.graph(g2)?);
    let p = build_product(&g1, &g2)?;
    let labels = (0..p.vertex_count()).map(|x| p.label(x)).collect();
    let graph = LabeledGraph::new(true, g1.sigma().min(g2.sigma()), labels, p.edges().collect())?;
    let text = graph.to_text_with(ctx.syntax);
    let mapping: Vec<String> =
        p.vertices().iter().enumerate().map(|(i, v)| format!("{i} {} {}", v.left, v.right)).collect();

    let mut r = ctx.report("product");
    r.line(text.trim_end());
    match map {
        Some(path) => write(path, &mapping.iter().map(|l| format!("{l}\n")).collect::<String>())?,
        None => mapping.iter().for_each(|l| r.line(format!("# {l}"))),
    }
    r.field("graph", text);
    r.field("vertices", p.vertex_count());
    r.field("edges", p.edge_count());
    r.field("mapping", p.vertices().iter().enumerate().map(|(i, v)| json!([i, v.left, v.right])).collect::<Vec<_>>());
    Ok(r)
}

fn random_ov(n: usize, d: usize, seed: u64) -> CliResult<OVInstance> {
    if n == 0 || d == 0 {
        return Err(CliError::Usage("--n and --d must be positive".into()));
    }
    if d < 64 && (n as u64) > (1u64 << d) {
        return Err(CliError::Usage(format!("cannot draw {n} distinct vectors of dimension {d}")));
    }
    Ok(lgp_core::random::ov_instance(&mut lgp_core::random::rng(seed), n, d, 0.5))
}

fn reduction(ctx: &Ctx, command: &str, out: &ReductionOutput) -> Report {
    let text = out.graph.to_text_with(ctx.syntax);
    let mut r = ctx.report(command);
    r.line(format!("# threshold={}", out.threshold));
    if let Some(k) = out.k {
        r.line(format!("# k={k}"));
        r.field("k", k);
    }
    for GadgetRegion { name, vertices } in &out.regions {
        r.line(format!("# region {name} {}..{}", vertices.start, vertices.end));
    }
    r.line(text.trim_end());
    r.field("threshold", out.threshold);
    r.field("graph", text);
    r.field(
        "regions",
        out.regions
            .iter()
            .map(|g| json!({ "name": g.name, "start": g.vertices.start, "end": g.vertices.end }))
            .collect::<Vec<_>>(),
    );
    r
}

fn run_oracle(ctx: &Ctx, problem: OracleProblem, bound: Option<usize>, inputs: &[PathBuf]) -> CliResult<Report> {
    let expect = |k: usize, what: &str| {
        if inputs.len() == k {
            Ok(())
        } else {
            Err(CliError::Usage(format!("oracle: expected {what}, got {} file(s)", inputs.len())))
        }
    };
    let mut r = ctx.report("oracle");
    match problem {
        OracleProblem::Lrsp => {
            expect(1, "one graph")?;
            let g = ctx.graph(&inputs[0])?;
            r.field("problem", "lrsp");
            match oracle::brute_lrsp_classify(&g)? {
                BruteRepeat::Finite(len) => {
                    r.line(format!("LEN {len}"));
                    r.field("kind", "finite");
                    r.field("length", len);
                }
                BruteRepeat::NonFinite => {
                    let kind = if oracle::brute_infinite_check(&g) { "INFINITE" } else { "UNBOUNDED" };
                    r.line(kind);
                    r.field("kind", kind.to_ascii_lowercase());
                }
            }
        }
        OracleProblem::Lcsp | OracleProblem::Msp => {
            expect(2, "two graphs")?;
            let (g1, g2) = (ctx.graph(&inputs[0])?, ctx.graph(&inputs[1])?);
            let decisive = oracle::naive_pair_count(&g1, &g2) + 1;
            let b = bound.unwrap_or(decisive);
            // Reaching the default bound proves an infinite answer; reaching
            // a user bound only says "at least".
            let show = |v: usize| match (v == b, bound.is_none()) {
                (true, true) => MsValue::Infinite.to_string(),
                (true, false) => format!(">={v}"),
                _ => v.to_string(),
            };
            if let OracleProblem::Lcsp = problem {
                let v = oracle::brute_lcsp(&g1, &g2, b);
                r.line(format!("LEN {}", show(v)));
                r.field("problem", "lcsp");
                r.field("length", show(v));
            } else {
                let values = oracle::brute_msp(&g1, &g2, b);
                for (v, &x) in values.iter().enumerate() {
                    r.line(format!("MS {v} {}", show(x)));
                }
                r.field("problem", "msp");
                r.field("ms", values.iter().map(|&x| show(x)).collect::<Vec<_>>());
            }
        }
        OracleProblem::Smlg => {
            expect(2, "a graph and a pattern")?;
            let (g, p) = (ctx.graph(&inputs[0])?, ctx.pattern(&inputs[1])?);
            let found = oracle::brute_smlg(&g, &p);
            r.line(if found { "MATCH" } else { "NO-MATCH" });
            r.field("problem", "smlg");
            r.field("match", found);
        }
    }
    Ok(r)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("lgp: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
