//! Command-line front end.
//!
//! Exit codes: 0 success, 1 the command ran but found a discrepancy (invalid
//! coloring, mismatching sweep rows, timeout), 2 usage, input or I/O error.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::coloring::is_r_dynamic;
use crate::error::{Error, Result};
use crate::formulas::{
    construct_coloring, degree_claims, predict, repair_coloring, Family, Instance, PredictedValue,
};
use crate::graph::{self, Graph};
use crate::io::{read_coloring, read_graph, write_coloring, write_graph};
use crate::product::lex_product;
use crate::solver::{
    brute_force_chi_r, chi_r_profile, exact_chi_r, greedy_upper_bound, SolveError, SolverConfig,
    DEFAULT_BUDGET,
};
use crate::sweep::{emit_report, sweep, RSpan, ReportFormat, Span, SweepConfig, DEFAULT_EXACT_CAP};

/// Overrides the default per-solve budget (seconds) when no flag is given.
pub const BUDGET_ENV: &str = "RDC_BUDGET_SECS";

#[derive(Debug, Parser)]
#[command(name = "rdyn", version, about = "r-dynamic chromatic numbers of lexicographic products")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated graph as JSON.
    Gen(GenArgs),
    /// Write the lexicographic product G1[G2].
    Product {
        #[arg(long)]
        g1: PathBuf,
        #[arg(long)]
        g2: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check whether a coloring is r-dynamic.
    Check {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
        #[arg(long)]
        r: usize,
    },
    /// Compute chi_r of a graph.
    Chi {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        #[arg(long)]
        witness: Option<PathBuf>,
        #[arg(long)]
        budget_secs: Option<u64>,
        /// Disable quota forecasting in the exact search.
        #[arg(long)]
        no_forecast: bool,
        #[arg(long, default_value_t = crate::solver::DEFAULT_BRUTE_CAP)]
        brute_cap: usize,
    },
    /// Print the closed-form prediction for a family member.
    Predict {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        r: usize,
    },
    /// Write the explicit coloring for a family member and validate it.
    Construct {
        #[command(flatten)]
        instance: InstanceArgs,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: PathBuf,
        /// Use the corrected top-range palette instead of the printed one.
        #[arg(long)]
        repair: bool,
    },
    /// Sweep a family over parameter ranges and report agreement.
    Verify(VerifyArgs),
    /// Print chi_r for r = 1..=max degree.
    Profile {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = crate::solver::DEFAULT_PROFILE_CAP)]
        cap: usize,
        #[arg(long)]
        budget_secs: Option<u64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Exact,
    Brute,
    Greedy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenFamily {
    Path,
    Star,
    DoubleStar,
    TripleStar,
    Cycle,
    Complete,
    PathStar,
    PathDoubleStar,
    PathTripleStar,
    CompletePath,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: GenFamily,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Vertex count for single graphs, inner path length for complete-path.
    #[arg(long, alias = "t", alias = "p")]
    n: Option<usize>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct InstanceArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    /// Path length for complete-path, cycle length, or clique size.
    #[arg(long, alias = "t", alias = "p")]
    n: Option<usize>,
}

impl InstanceArgs {
    fn instance(&self) -> Result<Instance> {
        Instance::new(self.family, self.l, self.m, self.n)
    }
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    l: Option<Span>,
    #[arg(long)]
    m: Option<Span>,
    /// Range of path length (complete-path), cycle length or clique size.
    #[arg(long, alias = "t", alias = "p")]
    n: Option<Span>,
    /// Explicit r range, e.g. 1..3.
    #[arg(long, conflicts_with = "r_max")]
    r: Option<RSpan>,
    /// `auto` (1..=Δ per instance) or an upper bound N meaning 1..N.
    #[arg(long)]
    r_max: Option<String>,
    #[arg(long)]
    budget_secs: Option<u64>,
    #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
    exact_cap: usize,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    no_forecast: bool,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    md: Option<PathBuf>,
    /// Print the report to stdout in this format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Markdown)]
    print: ReportFormat,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn budget(flag: Option<u64>) -> Result<Duration> {
    if let Some(secs) = flag {
        return Ok(Duration::from_secs(secs));
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(Duration::from_secs)
            .map_err(|_| Error::InvalidParameter(format!("{BUDGET_ENV}={v} is not an integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Gen(args) => {
            let g = generate(&args)?;
            write_graph(&args.out, &g)?;
            println!("order={} size={}", g.order(), g.size());
            Ok(0)
        }
        Command::Product { g1, g2, out } => {
            let g = lex_product(&read_graph(&g1)?, &read_graph(&g2)?);
            write_graph(&out, &g)?;
            println!("order={} size={}", g.order(), g.size());
            Ok(0)
        }
        Command::Check { graph, coloring, r } => {
            let g = read_graph(&graph)?;
            let c = read_coloring(&coloring)?;
            let verdict = is_r_dynamic(&g, &c, r)?;
            if verdict.is_valid() {
                println!("valid: {r}-dynamic with {} colors", c.palette_size());
                Ok(0)
            } else {
                println!("invalid: {} violations", verdict.violations.len());
                for v in &verdict.violations {
                    println!("  {v}");
                }
                Ok(1)
            }
        }
        Command::Chi {
            graph,
            r,
            method,
            witness,
            budget_secs,
            no_forecast,
            brute_cap,
        } => {
            let g = read_graph(&graph)?;
            let config = SolverConfig {
                budget: Some(budget(budget_secs)?),
                forecast: !no_forecast,
                brute_cap,
                ..SolverConfig::default()
            };
            let (k, coloring, nodes) = match method {
                Method::Greedy => {
                    let (k, c) = greedy_upper_bound(&g, r).map_err(Error::from)?;
                    (k, c, 0)
                }
                Method::Brute => {
                    let res = brute_force_chi_r(&g, r, config.brute_cap).map_err(Error::from)?;
                    (res.chi_r, res.witness, res.nodes_explored)
                }
                Method::Exact => match exact_chi_r(&g, r, &config) {
                    Ok(res) => (res.chi_r, res.witness, res.nodes_explored),
                    Err(SolveError::Timeout {
                        budget,
                        nodes_explored,
                        lower,
                        upper,
                    }) => {
                        println!("chi_r=timeout");
                        eprintln!(
                            "budget {}s exhausted after {nodes_explored} nodes; chi_r in [{lower}, {upper}]",
                            budget.as_secs()
                        );
                        return Ok(1);
                    }
                    Err(SolveError::Invalid(e)) => return Err(e.into()),
                },
            };
            println!("chi_r={k}");
            eprintln!("nodes_explored={nodes}");
            if let Some(path) = witness {
                write_coloring(&path, &coloring)?;
            }
            Ok(0)
        }
        Command::Predict { instance, r } => {
            let instance = instance.instance()?;
            let p = predict(&instance, r)?;
            println!("instance: {instance}");
            println!("case_id={}", p.case_id);
            match &p.value {
                PredictedValue::Exact { value } => println!("kind=exact value={value}"),
                PredictedValue::LowerBoundOnly { value } => println!("kind=lower-bound value={value}"),
                PredictedValue::Parametric { base, hypothesis } => {
                    println!("kind=parametric base={base} (+ unspecified offset)");
                    if let Some(h) = hypothesis {
                        println!("hypothesis={} [{}; {}]", h.value, h.formula, h.provenance);
                    }
                }
                PredictedValue::Uncovered => println!("kind=uncovered"),
            }
            if let Some(b) = &p.lower_bound {
                println!("lower_bound={} ({})", b.value, b.case_id);
            }
            if let Some(d) = degree_claims(&instance) {
                println!("claimed_min_degree={} claimed_max_degree={}", d.min, d.max);
            }
            for note in &p.notes {
                println!("note: {note}");
            }
            Ok(0)
        }
        Command::Construct {
            instance,
            r,
            out,
            repair,
        } => {
            let instance = instance.instance()?;
            let coloring = if repair {
                repair_coloring(&instance, r)?
            } else {
                construct_coloring(&instance, r)?
            };
            let Some(coloring) = coloring else {
                println!("not-constructive");
                return Ok(1);
            };
            write_coloring(&out, &coloring)?;
            let verdict = is_r_dynamic(&instance.graph()?, &coloring, r)?;
            if verdict.is_valid() {
                println!("valid colors={}", coloring.palette_size());
                Ok(0)
            } else {
                println!(
                    "invalid colors={} violations={}",
                    coloring.palette_size(),
                    verdict.violations.len()
                );
                for v in verdict.violations.iter().take(10) {
                    println!("  {v}");
                }
                Ok(1)
            }
        }
        Command::Verify(args) => verify(args),
        Command::Profile {
            graph,
            cap,
            budget_secs,
        } => {
            let g = read_graph(&graph)?;
            let config = SolverConfig {
                budget: Some(budget(budget_secs)?),
                profile_cap: cap,
                ..SolverConfig::default()
            };
            match chi_r_profile(&g, &config) {
                Ok(profile) => {
                    for (r, chi) in profile {
                        println!("r={r} chi_r={chi}");
                    }
                    Ok(0)
                }
                Err(SolveError::Timeout { .. }) => {
                    println!("timeout");
                    Ok(1)
                }
                Err(SolveError::Invalid(e)) => Err(e.into()),
            }
        }
    }
}

fn generate(args: &GenArgs) -> Result<Graph> {
    let n = || {
        args.n
            .ok_or_else(|| Error::InvalidParameter("--n is required for this family".into()))
    };
    let family = match args.family {
        GenFamily::Path => return graph::path(n()?),
        GenFamily::Star => return graph::star(n()?),
        GenFamily::DoubleStar => return graph::double_star(n()?),
        GenFamily::TripleStar => return graph::triple_star(n()?),
        GenFamily::Cycle => Family::Cycle,
        GenFamily::Complete => Family::Complete,
        GenFamily::PathStar => Family::PathStar,
        GenFamily::PathDoubleStar => Family::PathDoubleStar,
        GenFamily::PathTripleStar => Family::PathTripleStar,
        GenFamily::CompletePath => Family::CompletePath,
    };
    Instance::new(family, args.l, args.m, args.n)?.graph()
}

fn verify(args: VerifyArgs) -> Result<i32> {
    let r = match (args.r, args.r_max.as_deref()) {
        (Some(r), _) => r,
        (None, None | Some("auto")) => RSpan::Auto,
        (None, Some(max)) => {
            let max: usize = max
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("--r-max {max}: expected auto or N")))?;
            if max == 0 {
                return Err(Error::InvalidR(0));
            }
            RSpan::Fixed(Span::new(1, max))
        }
    };
    let mut config = SweepConfig::new(args.family, r);
    config.l = args.l;
    config.m = args.m;
    config.n = args.n;
    config.budget_secs = budget(args.budget_secs)?.as_secs();
    config.exact_cap = args.exact_cap;
    config.jobs = args.jobs;
    config.seed = args.seed;
    config.forecast = !args.no_forecast;

    let report = sweep(&config)?;
    for (path, format) in [
        (&args.csv, ReportFormat::Csv),
        (&args.json, ReportFormat::Json),
        (&args.md, ReportFormat::Markdown),
    ] {
        if let Some(path) = path {
            emit_report(&report, format, path)?;
        }
    }
    let text = match args.print {
        ReportFormat::Csv => crate::sweep::render_csv(&report)?,
        ReportFormat::Json => crate::sweep::render_json(&report)?,
        ReportFormat::Markdown => crate::sweep::render_markdown(&report),
    };
    print!("{text}");
    let discrepancies = report.discrepancies();
    eprintln!("rows={} discrepancies={discrepancies}", report.rows.len());
    Ok(if discrepancies == 0 { 0 } else { 1 })
}
