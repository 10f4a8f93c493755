//! Command-line front end.
//!
//! ```text
//! domgraph reconfig --family complete --n 3 --stats
//! domgraph count --family path --n-max 6 --sums
//! domgraph verify --suite all --max-n 12
//! domgraph export --product corona:path:3,complete:1 --k 4 --format dot
//! ```
//!
//! Exit status is 0 on success, 1 on domain errors (sizes, caps, numerical
//! failures) and 2 on usage errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::counting::{ladder_order, order_sequence, triangle, SeqFamily};
use crate::domination::Enumerator;
use crate::error::Error;
use crate::export;
use crate::graph::{Family, Graph};
use crate::reconfig::{ReconfigGraph, HAMILTONIAN_MAX_ORDER};
use crate::verify::{verify_suite, Suite, VerifyOptions};

#[derive(Parser, Debug)]
#[command(
    name = "domgraph",
    version,
    about = "Dominating sets and k-dominating reconfiguration graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph and print it
    Family(GraphArgs),
    /// List the dominating sets of size at most k
    Dominating(ReconfigArgs),
    /// Build D_k(G) and print it or its structural summary
    Reconfig(ReconfigArgs),
    /// Dominating-set counts: a sequence family or a single graph
    Count(CountArgs),
    /// Cross-check the counting formulas against enumeration
    Verify(VerifyArgs),
    /// Write a graph, or D_k(G) when --k is given, in a machine format
    Export(ExportArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
    Table,
}

#[derive(Args, Debug)]
struct Source {
    /// Graph family: path, cycle, complete or empty
    #[arg(long)]
    family: Option<String>,
    /// Number of vertices for --family
    #[arg(long)]
    n: Option<usize>,
    /// Product expression, e.g. join:complete:2,cycle:3 or ladder:4
    #[arg(long, conflicts_with_all = ["family", "n", "input"])]
    product: Option<String>,
    /// Graph JSON file ({"n": 3, "edges": [[1,2],[2,3]]})
    #[arg(long, conflicts_with_all = ["family", "n"])]
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Sink {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct GraphArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    sink: Sink,
}

#[derive(Args, Debug)]
struct ReconfigArgs {
    #[command(flatten)]
    source: Source,
    /// Size bound; defaults to the number of vertices
    #[arg(long)]
    k: Option<usize>,
    /// Print the structural summary instead of the node list
    #[arg(long)]
    stats: bool,
    #[command(flatten)]
    sink: Sink,
}

#[derive(Args, Debug)]
struct CountArgs {
    #[command(flatten)]
    source: Source,
    /// Roll the path, cycle or ladder sequence up to this n
    #[arg(long, conflicts_with_all = ["n", "product", "input"])]
    n_max: Option<usize>,
    /// Only the orders |V(D_n(G_n))|, not the full triangle
    #[arg(long, requires = "n_max")]
    sums: bool,
    #[command(flatten)]
    sink: Sink,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: Suite,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    /// Seed for the random connected graphs of the parity suite
    #[arg(long, default_value_t = 0x5eed)]
    seed: u64,
    #[command(flatten)]
    sink: Sink,
}

#[derive(Args, Debug)]
struct ExportArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    sink: Sink,
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> Outcome<T> {
    Err(Failure::Usage(msg.into()))
}

/// Parses `args` (program name first), runs the command and returns the exit
/// status. Output goes to `stdout` unless `--output` names a file.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(text.as_bytes())
            } else {
                stderr.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let (sink, result) = match cli.command {
        Command::Family(a) => (a.sink.output.clone(), family(&a)),
        Command::Dominating(a) => (a.sink.output.clone(), dominating(&a)),
        Command::Reconfig(a) => (a.sink.output.clone(), reconfig(&a)),
        Command::Count(a) => (a.sink.output.clone(), count(&a)),
        Command::Verify(a) => (a.sink.output.clone(), verify(&a)),
        Command::Export(a) => (a.sink.output.clone(), export_cmd(&a)),
    };
    let text = match result {
        Ok(text) => text,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 2;
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            return 1;
        }
    };
    let written = match sink {
        Some(path) => std::fs::write(&path, &text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write output: {e}")),
    };
    match written {
        Ok(()) => 0,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn parse_family(name: &str) -> Outcome<Family> {
    name.parse().map_err(Failure::Usage)
}

fn parse_factor(spec: &str) -> Outcome<Graph> {
    let Some((name, n)) = spec.split_once(':') else {
        return usage(format!("product factor `{spec}` must be family:n"));
    };
    let n: usize = n
        .parse()
        .map_err(|_| Failure::Usage(format!("bad vertex count in `{spec}`")))?;
    Ok(Graph::family(parse_family(name)?, n)?)
}

/// `join:A,B`, `corona:A,B`, `cartesian:A,B` with factors `family:n`, or `ladder:n`.
fn parse_product(expr: &str) -> Outcome<Graph> {
    let Some((op, rest)) = expr.split_once(':') else {
        return usage(format!(
            "product `{expr}` must be op:factor,factor or ladder:n"
        ));
    };
    if op == "ladder" {
        let n: usize = rest
            .parse()
            .map_err(|_| Failure::Usage(format!("bad ladder size in `{expr}`")))?;
        return Ok(Graph::ladder(n)?);
    }
    let Some((a, b)) = rest.split_once(',') else {
        return usage(format!(
            "product `{expr}` needs two comma-separated factors"
        ));
    };
    let (g, h) = (parse_factor(a)?, parse_factor(b)?);
    Ok(match op {
        "join" => g.join(&h)?,
        "corona" => g.corona(&h)?,
        "cartesian" => g.cartesian(&h)?,
        other => {
            return usage(format!(
                "unknown product `{other}` (expected join, corona, cartesian or ladder)"
            ))
        }
    })
}

fn load_graph(s: &Source) -> Outcome<Graph> {
    if let Some(expr) = &s.product {
        return parse_product(expr);
    }
    if let Some(path) = &s.input {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))?;
        return Ok(Graph::from_json_str(&text)?);
    }
    match (&s.family, s.n) {
        (Some(name), Some(n)) => Ok(Graph::family(parse_family(name)?, n)?),
        (Some(_), None) => usage("--family needs --n"),
        _ => usage("give a graph with --family and --n, --product or --input"),
    }
}

fn graph_table(g: &Graph) -> String {
    let degrees: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut out = String::new();
    let _ = writeln!(out, "vertices   {}", g.n());
    let _ = writeln!(out, "edges      {}", g.edge_count());
    let _ = writeln!(out, "min degree {}", degrees.iter().min().unwrap_or(&0));
    let _ = writeln!(out, "max degree {}", degrees.iter().max().unwrap_or(&0));
    let _ = writeln!(out, "connected  {}", yes_no(g.is_connected()));
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{} -- {}", u + 1, v + 1);
    }
    out
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn graph_csv(g: &Graph) -> String {
    let mut out = String::from("u,v\n");
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{},{}", u + 1, v + 1);
    }
    out
}

fn family(a: &GraphArgs) -> Outcome<String> {
    let g = load_graph(&a.source)?;
    Ok(match a.sink.format.unwrap_or(Format::Table) {
        Format::Table => graph_table(&g),
        Format::Json => export::graph_json(&g) + "\n",
        Format::Dot => export::graph_dot(&g),
        Format::Csv => graph_csv(&g),
    })
}

fn build(a: &ReconfigArgs) -> Outcome<(Graph, ReconfigGraph)> {
    let g = load_graph(&a.source)?;
    let k = a.k.unwrap_or(g.n());
    let r = ReconfigGraph::build_with(&Enumerator::default(), &g, k)?;
    Ok((g, r))
}

fn dominating(a: &ReconfigArgs) -> Outcome<String> {
    if a.stats {
        return usage("--stats applies to reconfig");
    }
    let (g, r) = build(a)?;
    let family = r.nodes();
    Ok(match a.sink.format.unwrap_or(Format::Table) {
        Format::Json => export::family_json(family) + "\n",
        Format::Csv => {
            let counts: Vec<BigUint> = family.by_card().iter().map(|&c| BigUint::from(c)).collect();
            export::counts_csv(g.n(), &counts)
        }
        Format::Table => {
            let mut out = String::new();
            for s in family.iter() {
                let _ = writeln!(out, "{s}");
            }
            let _ = writeln!(out, "{} dominating sets of size <= {}", family.len(), r.k());
            out
        }
        Format::Dot => return usage("dominating supports json, csv and table"),
    })
}

fn stats_table(r: &ReconfigGraph) -> Outcome<String> {
    let mut rows: Vec<(&str, String)> = Vec::new();
    let (x, y) = r.bipartition();
    rows.push(("order", r.order().to_string()));
    rows.push(("size", r.size().to_string()));
    rows.push(("parts", format!("{}/{}", x.len(), y.len())));
    match r.degree_extremes() {
        Ok((lo, hi)) => {
            rows.push(("δ", lo.to_string()));
            rows.push(("Δ", hi.to_string()));
            rows.push(("regular", yes_no(r.is_regular()?).into()));
        }
        Err(_) => {
            let note = if r.below_domination() {
                "k below γ(G)"
            } else {
                "empty"
            };
            rows.push(("δ", note.into()));
            rows.push(("Δ", note.into()));
        }
    }
    rows.push(("components", r.connected_components().count.to_string()));
    rows.push(("bipartite", yes_no(r.edges_cross_parity()).into()));
    rows.push(("euler", r.euler_status().name().into()));
    let ham = if r.order() <= HAMILTONIAN_MAX_ORDER {
        yes_no(r.is_hamiltonian()?).to_string()
    } else {
        format!("not checked (order > {HAMILTONIAN_MAX_ORDER})")
    };
    rows.push(("hamiltonian", ham));
    let mut out = String::new();
    for (key, value) in rows {
        let _ = writeln!(out, "{key:<12}{value}");
    }
    Ok(out)
}

#[derive(Serialize)]
struct StatsJson {
    base_n: usize,
    k: usize,
    order: usize,
    size: usize,
    parts: [usize; 2],
    min_degree: Option<usize>,
    max_degree: Option<usize>,
    components: usize,
    regular: Option<bool>,
    bipartite: bool,
    euler: &'static str,
    hamiltonian: Option<bool>,
}

fn stats_json(r: &ReconfigGraph) -> Outcome<String> {
    let (x, y) = r.bipartition();
    let extremes = r.degree_extremes().ok();
    let doc = StatsJson {
        base_n: r.base_n(),
        k: r.k(),
        order: r.order(),
        size: r.size(),
        parts: [x.len(), y.len()],
        min_degree: extremes.map(|e| e.0),
        max_degree: extremes.map(|e| e.1),
        components: r.connected_components().count,
        regular: r.is_regular().ok(),
        bipartite: r.edges_cross_parity(),
        euler: r.euler_status().name(),
        hamiltonian: if r.order() <= HAMILTONIAN_MAX_ORDER {
            Some(r.is_hamiltonian()?)
        } else {
            None
        },
    };
    Ok(serde_json::to_string_pretty(&doc).expect("stats are always serialisable") + "\n")
}

fn reconfig(a: &ReconfigArgs) -> Outcome<String> {
    let (_, r) = build(a)?;
    let format = a.sink.format.unwrap_or(Format::Table);
    if a.stats {
        return match format {
            Format::Table => stats_table(&r),
            Format::Json => stats_json(&r),
            _ => usage("--stats supports json and table"),
        };
    }
    Ok(match format {
        Format::Json => export::reconfig_json(&r) + "\n",
        Format::Dot => export::reconfig_dot(&r),
        Format::Table => {
            let mut out = String::new();
            for (i, s) in r.nodes().iter().enumerate() {
                let nbrs: Vec<String> = r.neighbors(i).iter().map(|j| j.to_string()).collect();
                let _ = writeln!(out, "{i:>6}  {:<24} {}", s.to_string(), nbrs.join(" "));
            }
            out
        }
        Format::Csv => return usage("reconfig supports json, dot and table"),
    })
}

#[derive(Serialize)]
struct SequenceJson<'a> {
    family: &'a str,
    first_n: usize,
    orders: Vec<String>,
}

fn sequence_output(
    name: &str,
    first_n: usize,
    values: &[BigUint],
    format: Format,
) -> Outcome<String> {
    Ok(match format {
        Format::Table => {
            let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            parts.join(",") + "\n"
        }
        Format::Csv => export::sequence_csv(name, first_n, values),
        Format::Json => {
            let doc = SequenceJson {
                family: name,
                first_n,
                orders: values.iter().map(|v| v.to_string()).collect(),
            };
            serde_json::to_string(&doc).expect("sequences are always serialisable") + "\n"
        }
        Format::Dot => return usage("count supports json, csv and table"),
    })
}

fn count(a: &CountArgs) -> Outcome<String> {
    let format = a.sink.format.unwrap_or(Format::Table);
    let Some(n_max) = a.n_max else {
        let g = load_graph(&a.source)?;
        let counts = Enumerator::default().count_by_cardinality(&g)?;
        return Ok(match format {
            Format::Csv => export::counts_csv(g.n(), &counts),
            Format::Json => {
                let v: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
                serde_json::to_string(&v).expect("counts are always serialisable") + "\n"
            }
            Format::Table => {
                let mut out = String::new();
                for (j, c) in counts.iter().enumerate() {
                    let _ = writeln!(out, "{j:>3}  {c}");
                }
                let _ = writeln!(out, "total {}", counts.iter().sum::<BigUint>());
                out
            }
            Format::Dot => return usage("count supports json, csv and table"),
        });
    };
    let Some(name) = a.source.family.as_deref() else {
        return usage("--n-max needs --family path, cycle or ladder");
    };
    if n_max == 0 {
        return Err(Error::InvalidSize("--n-max must be at least 1".into()).into());
    }
    if name == "ladder" {
        if !a.sums {
            return usage("ladders have no counting triangle; add --sums");
        }
        return sequence_output(name, 1, &ladder_order(n_max)?, format);
    }
    let family: SeqFamily = name.parse().map_err(Failure::Usage)?;
    if a.sums {
        return sequence_output(name, 1, &order_sequence(family, n_max)?, format);
    }
    let table = triangle(family, n_max)?;
    Ok(match format {
        Format::Csv => export::triangle_csv(&table),
        Format::Json => {
            let rows: Vec<Vec<String>> = table
                .rows()
                .map(|(_, r)| r.iter().map(|c| c.to_string()).collect())
                .collect();
            serde_json::to_string(&rows).expect("rows are always serialisable") + "\n"
        }
        Format::Table => {
            let width = table
                .rows()
                .flat_map(|(_, r)| r.iter().map(|c| c.to_string().len()))
                .max()
                .unwrap_or(1);
            let mut out = String::new();
            for (n, row) in table.rows() {
                let cells: Vec<String> = row[1..].iter().map(|c| format!("{c:>width$}")).collect();
                let _ = writeln!(out, "{n:>3} | {}", cells.join(" "));
            }
            out
        }
        Format::Dot => return usage("count supports json, csv and table"),
    })
}

fn verify(a: &VerifyArgs) -> Outcome<String> {
    let opts = VerifyOptions {
        max_n: a.max_n,
        seed: a.seed,
        ..VerifyOptions::new(a.max_n)
    };
    let report = verify_suite(a.suite, &opts)?;
    Ok(match a.sink.format.unwrap_or(Format::Table) {
        Format::Table => report.to_table(),
        Format::Json => report.to_json() + "\n",
        _ => return usage("verify supports json and table"),
    })
}

fn export_cmd(a: &ExportArgs) -> Outcome<String> {
    let g = load_graph(&a.source)?;
    let format = a.sink.format.unwrap_or(Format::Json);
    let Some(k) = a.k else {
        return Ok(match format {
            Format::Json => export::graph_json(&g) + "\n",
            Format::Dot => export::graph_dot(&g),
            Format::Csv => graph_csv(&g),
            Format::Table => graph_table(&g),
        });
    };
    let r = ReconfigGraph::build_with(&Enumerator::default(), &g, k)?;
    Ok(match format {
        Format::Json => export::reconfig_json(&r) + "\n",
        Format::Dot => export::reconfig_dot(&r),
        Format::Csv => {
            let mut out = String::from("a,b\n");
            for (i, j) in r.edges() {
                let _ = writeln!(out, "{i},{j}");
            }
            out
        }
        Format::Table => return usage("export writes json, dot or csv; use reconfig for tables"),
    })
}
