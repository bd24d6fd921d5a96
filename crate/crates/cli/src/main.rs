//! `chromratio`: command-line front end for the library.
//!
//! Exit codes: 0 success, 1 bad input or usage, 2 a result failed
//! re-verification, 3 a conjecture or claimed fact was contradicted.

mod input;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use chromratio::asymptotics::{
    entropy, f_bound_curves, maximize_phi, min_product_binom, min_product_brute_force, phi,
    stationarity_residual, RateParams, ERDOS_LOWER_RATE,
};
use chromratio::conjectures::{
    check_mult_rdc, check_rdc, check_weak_mult_rdc, converse_implication_quadruples,
    diagonal_rate_report, empirical_rates, implication_quadruples, summarize, ConjectureVerdict,
    Status, DEFAULT_S_MAX,
};
use chromratio::extremal::{
    f_exact, f_lower_profile, f_lower_search, f_table_csv, f_table_from_json, f_table_to_json,
    verify_f_table, FRecord, Strategy, DEFAULT_F_TABLE_JSON,
};
use chromratio::graph::{
    chromatic_bounds, clique_number, greedy_erdos_coloring, independence_number, is_proper_coloring,
};
use chromratio::ramsey::{
    derive_small_table, erdos_szekeres_bound, paley_witness_bound, ramsey_exact_small,
    recurrence_closure, BoundsTable, RamseyValue,
};
use chromratio::{Error, Graph};

use output::Format;

const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Parser)]
#[command(
    name = "chromratio",
    version,
    about = "Chromatic number to clique number ratios and small Ramsey numbers"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Search node budget.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Ramsey bounds table (JSON); the built-in table when absent.
    #[arg(long, global = true, env = "CHROMRATIO_TABLE")]
    table: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Override δ in the rate function (default 0.14/e).
    #[arg(long, global = true)]
    delta: Option<f64>,
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and colorings of a single graph.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Small Ramsey numbers and the bounds table.
    #[command(subcommand)]
    Ramsey(RamseyCmd),
    /// Maximum of the rate function and the diagonal constant.
    Constants {
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Evaluate the rate function and its stationarity residual at x.
    Phi {
        #[arg(long)]
        x: f64,
    },
    /// Least s t with C(s+t, t) >= n, from the central binomial rule and by brute force.
    Minprod {
        #[arg(long)]
        n: u64,
    },
    /// The extremal ratio f(n).
    #[command(subcommand)]
    F(FCmd),
    /// Diagonal-type Ramsey conjectures against the bounds table.
    #[command(subcommand)]
    Conjecture(ConjectureCmd),
    /// Plot data.
    #[command(subcommand)]
    Report(ReportCmd),
}

#[derive(Args)]
struct GraphArg {
    #[arg(long, help = input::NAMED_HELP)]
    graph: Option<String>,
    /// File holding graph6 or a JSON edge list.
    #[arg(long, conflicts_with = "graph")]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GraphCmd {
    Stats(GraphArg),
    Color(GraphArg),
    Greedy {
        #[command(flatten)]
        graph: GraphArg,
        /// Stop extracting independent sets once fewer vertices remain.
        #[arg(long, default_value_t = 1)]
        m0: usize,
    },
}

#[derive(Subcommand)]
enum RamseyCmd {
    Small {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        #[arg(long, default_value_t = 64)]
        n_max: usize,
    },
    Bound {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
    },
    /// Lower bound certified by the Paley graph on q vertices.
    Paley {
        #[arg(long)]
        q: usize,
    },
    Table {
        /// Close under the two-term recurrence.
        #[arg(long)]
        closure: bool,
        /// Build the table from computation alone, trusting no external data.
        #[arg(long, conflicts_with = "closure")]
        derive: bool,
    },
}

#[derive(Subcommand)]
enum FCmd {
    Exact {
        #[arg(long)]
        n: usize,
        /// Emit the table for 1..=n instead of one record.
        #[arg(long)]
        all: bool,
        /// Permit n = 9.
        #[arg(long)]
        allow_nine: bool,
    },
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "hybrid")]
        strategy: Strategy,
    },
    Verify {
        /// f-table JSON; the built-in table when absent.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    Curve {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = ERDOS_LOWER_RATE)]
        lower_rate: f64,
        /// Defaults to the maximum of the rate function.
        #[arg(long)]
        upper_rate: Option<f64>,
    },
}

#[derive(Args)]
struct Scan {
    #[arg(long, default_value_t = DEFAULT_S_MAX)]
    s_max: u32,
}

#[derive(Subcommand)]
enum ConjectureCmd {
    Rdc(Scan),
    Mult(Scan),
    WeakMult(Scan),
    /// Scan nested pairs for a product bound without the matching sum bound.
    Implication {
        #[arg(long, default_value_t = 60)]
        n: u32,
    },
    /// Growth rates log2 R(s,t) / sqrt(s t) read off the table.
    Rates,
    /// Off-diagonal rates against the diagonal rate at k = ceil(sqrt(s t)).
    #[command(alias = "fact23")]
    DiagonalRate,
}

#[derive(Subcommand)]
enum ReportCmd {
    /// Per-n CSV of f lower bounds against the envelope.
    Envelope {
        #[arg(long)]
        n_max: u64,
        /// f-table JSON; the built-in table when absent.
        #[arg(long)]
        f_table: Option<PathBuf>,
    },
}

enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Verification(_) => Failure::Verification(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

struct Outcome {
    body: String,
    code: u8,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome { body, code: 0 }
    }
}

type Run = Result<Outcome, Failure>;

struct Ctx {
    g: Global,
}

impl Ctx {
    fn params(&self) -> Result<RateParams, Failure> {
        Ok(match self.g.delta {
            Some(d) => RateParams::new(d)?,
            None => RateParams::default(),
        })
    }

    fn table(&self) -> Result<BoundsTable, Failure> {
        Ok(match &self.g.table {
            Some(p) => BoundsTable::load(p)?,
            None => BoundsTable::default_table(),
        })
    }

    fn graph(&self, arg: &GraphArg) -> Result<Graph, Failure> {
        Ok(match (&arg.graph, &arg.input) {
            (Some(spec), _) => input::parse_graph(spec, self.g.seed)?,
            (None, Some(path)) => input::read_graph(path)?,
            (None, None) => return Err(Failure::Input("pass --graph or --input".into())),
        })
    }

    /// JSON or flattened text; CSV is offered only by tabular commands.
    fn emit<T: Serialize>(&self, value: &T) -> Result<String, Failure> {
        match self.g.format {
            Format::Json => Ok(output::json(value)),
            Format::Text => Ok(output::text(value)),
            Format::Csv => Err(Failure::Input(
                "csv output is not available for this command".into(),
            )),
        }
    }
}

fn run(ctx: &Ctx, command: &Command) -> Run {
    match command {
        Command::Graph(cmd) => run_graph(ctx, cmd),
        Command::Ramsey(cmd) => run_ramsey(ctx, cmd),
        Command::Constants { tol } => {
            let report = maximize_phi(&ctx.params()?, *tol)?;
            Ok(Outcome::ok(ctx.emit(&report)?))
        }
        Command::Phi { x } => {
            let params = ctx.params()?;
            let body = json!({
                "x": x,
                "delta": params.delta,
                "entropy": entropy(*x)?,
                "phi": phi(*x, &params)?,
                "residual": stationarity_residual(*x, &params)?,
            });
            Ok(Outcome::ok(ctx.emit(&body)?))
        }
        Command::Minprod { n } => {
            let (k, st) = min_product_binom(*n)?;
            let brute = min_product_brute_force(*n);
            let body = json!({ "n": n, "k": k, "st_min": st, "brute_force_min": brute, "agree": st == brute });
            Ok(Outcome::ok(ctx.emit(&body)?))
        }
        Command::F(cmd) => run_f(ctx, cmd),
        Command::Conjecture(cmd) => run_conjecture(ctx, cmd),
        Command::Report(ReportCmd::Envelope { n_max, f_table }) => {
            envelope(ctx, *n_max, f_table.as_ref())
        }
    }
}

fn run_graph(ctx: &Ctx, cmd: &GraphCmd) -> Run {
    match cmd {
        GraphCmd::Stats(arg) => {
            let g = ctx.graph(arg)?;
            let omega = clique_number(&g);
            let alpha = independence_number(&g);
            let chi = chromatic_bounds(&g, ctx.g.budget);
            if !omega.validate(&g) || !alpha.validate(&g) || chi.upper < omega.value {
                return Err(Failure::Verification(
                    "invariant witnesses failed to re-verify".into(),
                ));
            }
            let body = json!({
                "n": g.n(),
                "edges": g.edge_count(),
                "graph6": g.to_graph6(),
                "omega": omega.value,
                "clique": omega.vertex_set().map(|s| s.to_vec()),
                "alpha": alpha.value,
                "independent_set": alpha.vertex_set().map(|s| s.to_vec()),
                "chi_lower": chi.lower,
                "chi_upper": chi.upper,
                "chi_exact": chi.exact,
            });
            Ok(Outcome::ok(ctx.emit(&body)?))
        }
        GraphCmd::Color(arg) => {
            let g = ctx.graph(arg)?;
            let chi = chromatic_bounds(&g, ctx.g.budget);
            if !is_proper_coloring(&g, &chi.coloring)? {
                return Err(Failure::Verification("coloring is not proper".into()));
            }
            let body = json!({
                "chi_lower": chi.lower,
                "chi_upper": chi.upper,
                "exact": chi.exact,
                "nodes": chi.nodes,
                "coloring": chi.coloring.colors,
            });
            Ok(Outcome::ok(ctx.emit(&body)?))
        }
        GraphCmd::Greedy { graph, m0 } => {
            let g = ctx.graph(graph)?;
            let (coloring, stats) = greedy_erdos_coloring(&g, *m0)?;
            let proper = is_proper_coloring(&g, &coloring)?;
            let bound = stats.color_bound();
            if !proper || stats.colors_used > bound {
                return Err(Failure::Verification(format!(
                    "greedy coloring: proper = {proper}, {} colors against bound {bound}",
                    stats.colors_used
                )));
            }
            let body = json!({ "stats": stats, "bound": bound, "coloring": coloring.colors });
            Ok(Outcome::ok(ctx.emit(&body)?))
        }
    }
}

fn table_csv(table: &BoundsTable) -> String {
    output::csv(
        &["s", "t", "lower", "upper", "source"],
        table.records().map(|r| {
            vec![
                r.s.to_string(),
                r.t.to_string(),
                r.lower.to_string(),
                if r.upper == u64::MAX {
                    String::new()
                } else {
                    r.upper.to_string()
                },
                format!("\"{}\"", r.source.replace('"', "\"\"")),
            ]
        }),
    )
}

fn run_ramsey(ctx: &Ctx, cmd: &RamseyCmd) -> Run {
    match cmd {
        RamseyCmd::Small { s, t, n_max } => {
            let out = ramsey_exact_small(*s, *t, *n_max, ctx.g.budget)?;
            if let Some(w) = &out.witness {
                if !w.verify(*s, *t) {
                    return Err(Failure::Verification(
                        "witness coloring fails to verify".into(),
                    ));
                }
            }
            let (exact, lower, upper) = match out.value {
                RamseyValue::Exact(v) => (true, v, Some(v)),
                RamseyValue::Interval { lower, upper } => (false, lower, upper),
            };
            let body = json!({
                "s": s,
                "t": t,
                "exact": exact,
                "lower": lower,
                "upper": upper,
                "witness_red": out.witness.as_ref().map(|w| w.red.to_graph6()),
                "witness_blue": out.witness.as_ref().map(|w| w.blue.to_graph6()),
                "nodes": out.nodes,
                "level_counts": out.level_counts,
                "budget_exhausted": out.budget_exhausted,
            });
            Ok(Outcome::ok(ctx.emit(&body)?))
        }
        RamseyCmd::Bound { s, t } => {
            let table = ctx.table()?;
            let body = json!({
                "s": s,
                "t": t,
                "erdos_szekeres": erdos_szekeres_bound(*s, *t)?,
                "table": table.query(*s, *t),
                "table_hash": table.hash(),
            });
            Ok(Outcome::ok(ctx.emit(&body)?))
        }
        RamseyCmd::Paley { q } => {
            let b = paley_witness_bound(*q)?;
            let body = json!({ "q": b.q, "s": b.s, "t": b.t, "lower": b.lower });
            Ok(Outcome::ok(ctx.emit(&body)?))
        }
        RamseyCmd::Table { closure, derive } => {
            let table = if *derive {
                derive_small_table(ctx.g.budget)?
            } else if *closure {
                recurrence_closure(&ctx.table()?)?
            } else {
                ctx.table()?
            };
            let body = match ctx.g.format {
                Format::Json => table.to_json_string(),
                Format::Csv => table_csv(&table),
                Format::Text => {
                    let mut s = format!("# sha256 {}\n", table.hash());
                    for r in table.records() {
                        s.push_str(&format!(
                            "R({},{}) in [{}, {}]  {}\n",
                            r.s, r.t, r.lower, r.upper, r.source
                        ));
                    }
                    s
                }
            };
            Ok(Outcome::ok(body))
        }
    }
}

fn load_f_table(file: Option<&PathBuf>) -> Result<Vec<FRecord>, Failure> {
    Ok(match file {
        Some(p) => f_table_from_json(&std::fs::read_to_string(p).map_err(Error::from)?)?,
        None => f_table_from_json(DEFAULT_F_TABLE_JSON)?,
    })
}

fn record_json(r: &FRecord) -> serde_json::Value {
    json!({
        "n": r.n,
        "value": r.value.to_string(),
        "chi": r.value.num,
        "omega": r.value.den,
        "witness_graph6": r.witness.to_graph6(),
        "exhaustive": r.exhaustive,
        "search_meta": r.search_meta,
    })
}

fn run_f(ctx: &Ctx, cmd: &FCmd) -> Run {
    match cmd {
        FCmd::Exact { n, all, allow_nine } => {
            if *all {
                let rows = (1..=*n)
                    .map(|k| f_exact(k, ctx.g.budget, *allow_nine))
                    .collect::<Result<Vec<_>, _>>()?;
                verify_f_table(&rows)?;
                let body = match ctx.g.format {
                    Format::Csv => f_table_csv(&rows),
                    Format::Json => f_table_to_json(&rows),
                    Format::Text => output::text(&rows.iter().map(record_json).collect::<Vec<_>>()),
                };
                return Ok(Outcome::ok(body));
            }
            let r = f_exact(*n, ctx.g.budget, *allow_nine)?;
            Ok(Outcome::ok(ctx.emit(&record_json(&r))?))
        }
        FCmd::Search { n, strategy } => {
            let r = f_lower_search(*n, *strategy, ctx.g.seed, ctx.g.budget)?;
            verify_f_table(std::slice::from_ref(&r))?;
            Ok(Outcome::ok(ctx.emit(&record_json(&r))?))
        }
        FCmd::Verify { file } => {
            let rows = load_f_table(file.as_ref())?;
            verify_f_table(&rows)?;
            let body = json!({ "rows": rows.len(), "verified": true });
            Ok(Outcome::ok(ctx.emit(&body)?))
        }
        FCmd::Curve {
            n,
            lower_rate,
            upper_rate,
        } => {
            let upper = match upper_rate {
                Some(m) => *m,
                None => maximize_phi(&ctx.params()?, 1e-10)?.phi_max_sq.sqrt(),
            };
            let e = f_bound_curves(*n, *lower_rate, upper)?;
            let body = json!({
                "n": e.n,
                "lower_rate": lower_rate,
                "upper_rate": upper,
                "lower": e.lower,
                "upper": e.upper,
            });
            Ok(Outcome::ok(ctx.emit(&body)?))
        }
    }
}

fn verdicts_out(ctx: &Ctx, verdicts: &[ConjectureVerdict]) -> Run {
    let summary = summarize(verdicts);
    let body = match ctx.g.format {
        Format::Json => {
            let mut s: String = verdicts.iter().map(|v| v.to_json_line() + "\n").collect();
            s.push_str(&serde_json::to_string(&json!({ "summary": summary })).expect("serializes"));
            s.push('\n');
            s
        }
        Format::Csv => output::csv(
            &["s1", "t1", "s2", "t2", "status", "confirmed"],
            verdicts.iter().map(|v| {
                let status = serde_json::to_value(v.status).expect("serializes");
                vec![
                    v.instance.lhs.0.to_string(),
                    v.instance.lhs.1.to_string(),
                    v.instance.rhs.0.to_string(),
                    v.instance.rhs.1.to_string(),
                    status.as_str().unwrap_or_default().to_string(),
                    v.confirmed.to_string(),
                ]
            }),
        ),
        Format::Text => {
            let mut s = String::new();
            for v in verdicts.iter().filter(|v| v.status != Status::Consistent) {
                s.push_str(&format!(
                    "{:?}: R{:?} <= R{:?}  {:?}\n",
                    v.status, v.instance.lhs, v.instance.rhs, v.evidence
                ));
            }
            s.push_str(&format!(
                "instances {}  consistent {}  confirmed {}  violated {}  undecidable {}\n",
                summary.total,
                summary.consistent,
                summary.confirmed,
                summary.violated,
                summary.undecidable
            ));
            s
        }
    };
    Ok(Outcome {
        body,
        code: if summary.violated > 0 { 3 } else { 0 },
    })
}

fn run_conjecture(ctx: &Ctx, cmd: &ConjectureCmd) -> Run {
    match cmd {
        ConjectureCmd::Rdc(scan) => verdicts_out(ctx, &check_rdc(&ctx.table()?, scan.s_max)),
        ConjectureCmd::Mult(scan) => verdicts_out(ctx, &check_mult_rdc(&ctx.table()?, scan.s_max)),
        ConjectureCmd::WeakMult(scan) => {
            verdicts_out(ctx, &check_weak_mult_rdc(&ctx.table()?, scan.s_max))
        }
        ConjectureCmd::Implication { n } => {
            if *n == 0 {
                return Err(Failure::Input("n must be >= 1".into()));
            }
            let found = implication_quadruples(*n);
            let body = json!({
                "n": n,
                "counterexample": found.map(|(s1, t1, s2, t2)| json!({ "lhs": [s1, t1], "rhs": [s2, t2] })),
                "converse_counterexample": converse_implication_quadruples(*n),
            });
            Ok(Outcome {
                body: ctx.emit(&body)?,
                code: if found.is_some() { 3 } else { 0 },
            })
        }
        ConjectureCmd::Rates => Ok(Outcome::ok(ctx.emit(&empirical_rates(&ctx.table()?))?)),
        ConjectureCmd::DiagonalRate => {
            let report = diagonal_rate_report(&ctx.table()?);
            let violated = report.rows.iter().any(|r| r.status == Status::Violated);
            Ok(Outcome {
                body: ctx.emit(&report)?,
                code: if violated { 3 } else { 0 },
            })
        }
    }
}

fn envelope(ctx: &Ctx, n_max: u64, f_table: Option<&PathBuf>) -> Run {
    if n_max < 2 {
        return Err(Failure::Input("n_max must be >= 2".into()));
    }
    if ctx.g.format == Format::Text {
        return Err(Failure::Input("envelope report is csv or json".into()));
    }
    let rows = load_f_table(f_table)?;
    verify_f_table(&rows)?;
    let upper = maximize_phi(&ctx.params()?, 1e-10)?.phi_max_sq.sqrt();
    let searched = f_lower_profile(n_max.min(64) as usize, ctx.g.seed, ctx.g.budget)?;
    let mut out = Vec::new();
    for n in 2..=n_max {
        let e = f_bound_curves(n, ERDOS_LOWER_RATE, upper)?;
        let rec = rows
            .iter()
            .chain(&searched)
            .find(|r| r.n as u64 == n)
            .cloned();
        out.push((n, rec, e));
    }
    let body = match ctx.g.format {
        Format::Json => output::json(
            &out.iter()
                .map(|(n, r, e)| {
                    json!({
                        "n": n,
                        "f_lower": r.as_ref().map(|r| r.value.to_f64()),
                        "exhaustive": r.as_ref().map(|r| r.exhaustive),
                        "envelope_lower": e.lower,
                        "envelope_upper": e.upper,
                    })
                })
                .collect::<Vec<_>>(),
        ),
        _ => output::csv(
            &[
                "n",
                "f_lower",
                "exhaustive",
                "f_normalized",
                "envelope_lower",
                "envelope_upper",
            ],
            out.iter().map(|(n, r, e)| {
                let log = (*n as f64).log2();
                let (f, ex, norm) = match r {
                    Some(r) => {
                        let f = r.value.to_f64();
                        (
                            format!("{f:.6}"),
                            r.exhaustive.to_string(),
                            format!("{:.6}", f * log * log / *n as f64),
                        )
                    }
                    None => (String::new(), String::new(), String::new()),
                };
                vec![
                    n.to_string(),
                    f,
                    ex,
                    norm,
                    format!("{:.6}", e.lower),
                    format!("{:.6}", e.upper),
                ]
            }),
        ),
    };
    Ok(Outcome::ok(body))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.global.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: cannot start {threads} worker threads: {e}");
            return ExitCode::from(1);
        }
    }
    let ctx = Ctx { g: cli.global };
    match run(&ctx, &cli.command) {
        Ok(out) => {
            print!("{}", out.body);
            ExitCode::from(out.code)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
