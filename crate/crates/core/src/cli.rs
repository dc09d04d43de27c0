//! The `wmp` command-line front end.
//!
//! Exit codes: 0 on success, 1 on a negative verdict when the matching
//! `--fail-on-*` flag is given (or a failed sweep), 2 on usage, parse or
//! size errors.

use std::fs;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::classifier::{classify, explain, Classification};
use crate::error::Error;
use crate::expr::parse_expr;
use crate::graph::Graph;
use crate::graph6::{encode_graph6, parse_graph6};
use crate::kozen::{iso_via_product, max_clique, PRODUCT_ISO_MAX};
use crate::patterns::catalog;
use crate::perfection::{is_perfect_oracle, HoleWitness};
use crate::products::{tensor_product, weak_modular_product};
use crate::sweep::{sweep, SweepReport};

/// Default cap on the vertex count handed to the exponential oracle.
pub const DEFAULT_ORACLE_MAX: usize = 42;

#[derive(Debug, Parser)]
#[command(
    name = "wmp",
    version,
    about = "Weak modular products: construction, perfection and isomorphism",
    after_help = "Graph arguments are expressions such as \"C5\", \"K2+E1\", \"3*K2\", \"K2,3\", \
                  \"paw\", or @FILE to read graph6 from a file."
)]
pub struct Cli {
    /// Emit one JSON record per result instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    /// Order, size and adjacency lists.
    Text,
    Graph6,
    /// One `u v` line per edge.
    Edges,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build the weak modular product of two graphs.
    Product {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the tensor product of two graphs.
    Tensor {
        left: String,
        right: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the complement of a graph.
    Complement {
        graph: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether the weak modular product of two graphs is perfect.
    Classify {
        left: String,
        right: String,
        #[arg(long)]
        fail_on_imperfect: bool,
    },
    /// Search for an odd hole or antihole in a graph, or in the product of two graphs.
    Oracle {
        graph: String,
        right: Option<String>,
        /// Refuse graphs with more vertices than this.
        #[arg(long, default_value_t = DEFAULT_ORACLE_MAX)]
        max_vertices: usize,
        #[arg(long)]
        fail_on_imperfect: bool,
    },
    /// Test two graphs for isomorphism via a maximum clique in their product.
    Iso {
        left: String,
        right: String,
        #[arg(long)]
        fail_on_noniso: bool,
    },
    /// Check the classifier against the oracle on all pairs of small graphs.
    Sweep {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Worker threads (defaults to all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// List the named pattern graphs.
    Catalog,
}

enum Failure {
    /// Maps to exit code 2.
    Usage(String),
    /// The reader went away, as in `wmp catalog | head`.
    BrokenPipe,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            Failure::BrokenPipe
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

/// Reads a graph argument: an expression, or `@path` naming a graph6 file.
pub fn load_graph(arg: &str) -> Result<Graph, String> {
    if let Some(path) = arg.strip_prefix('@') {
        let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| format!("{path}: no graph6 line"))?;
        parse_graph6(line).map_err(|e| format!("{path}: {e}"))
    } else {
        parse_expr(arg).map_err(|e| format!("{arg:?}: {e}"))
    }
}

fn load(arg: &str) -> Result<Graph, Failure> {
    load_graph(arg).map_err(Failure::Usage)
}

fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => encode_graph6(g) + "\n",
        Format::Edges => g.edges().map(|(u, v)| format!("{u} {v}\n")).collect(),
        Format::Text => {
            let mut s = format!("order {} edges {}\n", g.order(), g.edge_count());
            for v in 0..g.order() {
                let nbrs: Vec<String> = g.neighbors(v).iter().map(|u| u.to_string()).collect();
                s += &format!("{v}: {}\n", nbrs.join(" "));
            }
            s
        }
    }
}

#[derive(Serialize)]
struct PairRecord<'a> {
    left: &'a str,
    right: &'a str,
    verdict: crate::classifier::Verdict,
    case: Option<u8>,
    orientation: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<&'a HoleWitness>,
}

fn pair_record<'a>(left: &'a str, right: &'a str, c: &Classification) -> PairRecord<'a> {
    PairRecord {
        left,
        right,
        verdict: c.verdict,
        case: c.case.map(|k| k.number()),
        orientation: c.orientation.map(|o| o.z()),
        witness: None,
    }
}

fn json_line(out: &mut dyn Write, value: &impl Serialize) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string(value).expect("records serialize")
    )
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::BrokenPipe) => 0,
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Product {
            left,
            right,
            format,
        }
        | Command::Tensor {
            left,
            right,
            format,
        } => {
            let (g, h) = (load(left)?, load(right)?);
            let p = if matches!(cli.command, Command::Product { .. }) {
                weak_modular_product(&g, &h)?
            } else {
                tensor_product(&g, &h)?
            };
            if cli.json {
                json_line(
                    out,
                    &json!({
                        "left": left,
                        "right": right,
                        "order": p.order(),
                        "edges": p.edge_count(),
                        "graph6": encode_graph6(&p),
                    }),
                )?;
            } else {
                write!(out, "{}", render(&p, *format))?;
            }
            Ok(0)
        }
        Command::Complement { graph, format } => {
            let c = load(graph)?.complement();
            if cli.json {
                json_line(out, &json!({ "graph": graph, "graph6": encode_graph6(&c) }))?;
            } else {
                write!(out, "{}", render(&c, *format))?;
            }
            Ok(0)
        }
        Command::Classify {
            left,
            right,
            fail_on_imperfect,
        } => {
            let (g, h) = (load(left)?, load(right)?);
            let c = classify(&g, &h);
            if cli.json {
                json_line(out, &pair_record(left, right, &c))?;
            } else {
                match c.case {
                    Some(case) => writeln!(
                        out,
                        "{} case {} z={}",
                        c.verdict,
                        case,
                        c.orientation.map_or(0, |o| o.z())
                    )?,
                    None => writeln!(out, "{}", c.verdict)?,
                }
                writeln!(out, "{}", explain(&c))?;
            }
            Ok(i32::from(*fail_on_imperfect && !c.is_perfect()))
        }
        Command::Oracle {
            graph,
            right,
            max_vertices,
            fail_on_imperfect,
        } => {
            let g = load(graph)?;
            let target = match right {
                Some(r) => weak_modular_product(&g, &load(r)?)?.into_graph(),
                None => g,
            };
            if target.order() > *max_vertices {
                return Err(Failure::Usage(format!(
                    "oracle input has {} vertices, above the --max-vertices cap of {max_vertices}",
                    target.order()
                )));
            }
            let v = is_perfect_oracle(&target);
            if cli.json {
                match right {
                    Some(r) => {
                        let record = PairRecord {
                            left: graph,
                            right: r,
                            verdict: if v.perfect {
                                crate::classifier::Verdict::Perfect
                            } else {
                                crate::classifier::Verdict::Imperfect
                            },
                            case: None,
                            orientation: None,
                            witness: v.witness.as_ref(),
                        };
                        json_line(out, &record)?;
                    }
                    None => json_line(
                        out,
                        &json!({ "graph": graph, "perfect": v.perfect, "witness": v.witness }),
                    )?,
                }
            } else {
                match &v.witness {
                    None => writeln!(out, "PERFECT")?,
                    Some(w) => {
                        let cycle: Vec<String> = w.cycle.iter().map(|x| x.to_string()).collect();
                        writeln!(out, "IMPERFECT")?;
                        writeln!(
                            out,
                            "odd {} of length {}: {}",
                            match w.kind {
                                crate::perfection::HoleKind::Hole => "hole",
                                crate::perfection::HoleKind::Antihole => "antihole",
                            },
                            w.cycle.len(),
                            cycle.join(" ")
                        )?;
                    }
                }
            }
            Ok(i32::from(*fail_on_imperfect && !v.perfect))
        }
        Command::Iso {
            left,
            right,
            fail_on_noniso,
        } => {
            let (g, h) = (load(left)?, load(right)?);
            let n = g.order();
            let (mapping, detail) = match iso_via_product(&g, &h) {
                Ok(Some(w)) => (Some(w.mapping), format!("clique number {n} = n")),
                Ok(None) => {
                    let omega = max_clique(weak_modular_product(&g, &h)?.graph()).size;
                    (None, format!("clique number {omega} < n = {n}"))
                }
                Err(Error::SizeMismatch { left, right }) => {
                    (None, format!("orders differ ({left} vs {right})"))
                }
                Err(Error::SizeOutOfRange { got, .. }) => {
                    return Err(Failure::Usage(format!(
                        "order {got} too large for product isomorphism (max {PRODUCT_ISO_MAX})"
                    )))
                }
                Err(e) => return Err(e.into()),
            };
            if cli.json {
                json_line(
                    out,
                    &json!({
                        "left": left,
                        "right": right,
                        "isomorphic": mapping.is_some(),
                        "mapping": mapping,
                        "detail": detail,
                    }),
                )?;
            } else if let Some(m) = &mapping {
                writeln!(out, "ISOMORPHIC ({detail})")?;
                let pairs: Vec<String> = m
                    .iter()
                    .enumerate()
                    .map(|(x, y)| format!("{x}->{y}"))
                    .collect();
                writeln!(out, "{}", pairs.join(" "))?;
            } else {
                writeln!(out, "NOT ISOMORPHIC ({detail})")?;
            }
            Ok(i32::from(*fail_on_noniso && mapping.is_none()))
        }
        Command::Sweep { max_n, threads } => {
            let report = match threads {
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(*t)
                    .build()
                    .map_err(|e| Failure::Usage(e.to_string()))?
                    .install(|| sweep(*max_n))?,
                None => sweep(*max_n)?,
            };
            write_sweep(out, &report, cli.json)?;
            Ok(i32::from(!report.passed()))
        }
        Command::Catalog => {
            for p in catalog() {
                if cli.json {
                    json_line(
                        out,
                        &json!({
                            "name": p.name,
                            "order": p.graph.order(),
                            "edges": p.graph.edge_count(),
                            "graph6": encode_graph6(&p.graph),
                        }),
                    )?;
                } else {
                    writeln!(
                        out,
                        "{:<12} order {} edges {} {}",
                        p.name,
                        p.graph.order(),
                        p.graph.edge_count(),
                        encode_graph6(&p.graph)
                    )?;
                }
            }
            Ok(0)
        }
    }
}

fn write_sweep(out: &mut dyn Write, r: &SweepReport, as_json: bool) -> std::io::Result<()> {
    let label = |row: usize| {
        if row < 10 {
            (row + 1).to_string()
        } else {
            "none".to_string()
        }
    };
    let describe = |o: &crate::sweep::PairOutcome| {
        format!(
            "{} x {}: classifier {} oracle {}",
            encode_graph6(&o.left),
            encode_graph6(&o.right),
            o.classification.verdict,
            if o.oracle.perfect {
                "PERFECT"
            } else {
                "IMPERFECT"
            }
        )
    };
    if as_json {
        let rows: Vec<_> = (0..11)
            .map(|row| {
                json!({
                    "case": label(row),
                    "oracle_perfect": r.counts[row][0],
                    "oracle_imperfect": r.counts[row][1],
                })
            })
            .collect();
        let mismatches: Vec<String> = r.mismatches.iter().map(describe).collect();
        return json_line(
            out,
            &json!({
                "max_n": r.max_n,
                "classes": r.classes,
                "pairs": r.pairs,
                "counts": rows,
                "mismatches": mismatches,
                "asymmetric": r.asymmetric.len(),
                "invalid_witnesses": r.invalid_witnesses,
                "passed": r.passed(),
            }),
        );
    }
    writeln!(
        out,
        "sweep max-n {}: {} classes, {} ordered pairs",
        r.max_n, r.classes, r.pairs
    )?;
    writeln!(
        out,
        "{:<6}{:>16}{:>18}",
        "case", "oracle-perfect", "oracle-imperfect"
    )?;
    for (row, c) in r.counts.iter().enumerate() {
        writeln!(out, "{:<6}{:>16}{:>18}", label(row), c[0], c[1])?;
    }
    writeln!(out, "mismatches: {}", r.mismatches.len())?;
    for o in &r.mismatches {
        writeln!(out, "  {}", describe(o))?;
    }
    writeln!(out, "asymmetric: {}", r.asymmetric.len())?;
    writeln!(out, "invalid witnesses: {}", r.invalid_witnesses)?;
    writeln!(out, "{}", if r.passed() { "PASS" } else { "FAIL" })
}
