use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;

use ggp_cli::format::{render, Style};
use ggp_cli::json::export_json;
use ggp_cli::table::{read_cached, write_atomic, write_table};
use ggp_cli::{bench, exit, CliError};
use ggp_core::csoperator::{eigensolve, eigensolve_specialized};
use ggp_core::families::{build_by_recurrence, jack_row, Direction};
use ggp_core::scalar::parse_rational;
use ggp_core::verify::{run_suite, Feed, Suite, SuiteConfig};
use ggp_core::{LabeledGegenbauer, Method, Rational};

#[derive(Parser)]
#[command(name = "ggp", version, about = "Exact A2 generalized Gegenbauer polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct and print one polynomial P_{m,n}.
    Gen(GenArgs),
    /// Run a verification suite; exit 1 if any check fails.
    Verify(VerifyArgs),
    /// Write one JSON file per (m, n) with m + n <= max degree.
    Table(TableArgs),
    /// Time the construction methods.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Eigensolver,
    Recurrence,
    Twin,
    Genfunc,
}

impl MethodArg {
    fn method(self) -> Method {
        match self {
            MethodArg::Eigensolver => Method::Eigensolver,
            MethodArg::Recurrence => Method::Recurrence,
            MethodArg::Twin => Method::TwinRecurrence,
            MethodArg::Genfunc => Method::GenFunc,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FeedArg {
    Eigensolver,
    Recurrence,
    Twin,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Latex,
}

fn kappa_value(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    /// Specialize to a rational kappa, e.g. 1/2.
    #[arg(long, value_parser = kappa_value, allow_hyphen_values = true, conflicts_with = "symbolic")]
    kappa: Option<Rational>,
    /// Keep kappa symbolic (the default).
    #[arg(long)]
    symbolic: bool,
    /// Allow kappa <= 0 (resonances are then reported as poles).
    #[arg(long)]
    allow_nonpositive_kappa: bool,
    #[arg(long, value_enum, default_value = "eigensolver")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Table directory consulted for symbolic eigensolver results.
    #[arg(long, env = "GGP_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
    suite: String,
    /// Polynomial checks over m + n <= d; the A1 check over 1 <= m <= d.
    #[arg(long, allow_hyphen_values = true, default_value_t = 8)]
    max_degree: i64,
    /// Identity grid bounds.
    #[arg(long, allow_hyphen_values = true, default_value_t = 10)]
    m_max: i64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 10)]
    n_max: i64,
    /// Construction feeding the polynomial checks.
    #[arg(long, value_enum, default_value = "eigensolver")]
    method: FeedArg,
    /// Write the full report as JSON.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, allow_hyphen_values = true)]
    max_degree: i64,
    #[arg(long, env = "GGP_CACHE_DIR")]
    out: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, allow_hyphen_values = true)]
    max_degree: i64,
    /// Methods to time; repeatable. Default: eigensolver and recurrence.
    #[arg(long, value_enum)]
    method: Vec<MethodArg>,
}

fn bound(name: &str, v: i64) -> Result<u32, CliError> {
    u32::try_from(v).map_err(|_| CliError::Usage(format!("{name} must be a nonnegative integer, got {v}")))
}

fn jobs(j: Option<usize>) -> Result<Option<usize>, CliError> {
    match j {
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".into())),
        j => Ok(j),
    }
}

fn in_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn build_symbolic(args: &GenArgs, m: u32, n: u32) -> LabeledGegenbauer {
    match args.method.method() {
        Method::Eigensolver => args
            .cache_dir
            .as_deref()
            .and_then(|dir| read_cached(dir, m, n))
            .unwrap_or_else(|| eigensolve(m, n)),
        Method::Recurrence => build_by_recurrence(m, n, Direction::LowerN),
        Method::TwinRecurrence => build_by_recurrence(m, n, Direction::LowerM),
        Method::GenFunc => jack_row(m).swap_remove(m as usize),
    }
}

fn cmd_gen(args: GenArgs) -> Result<u8, CliError> {
    let m = bound("--m", args.m)?;
    let n = bound("--n", args.n)?;
    if matches!(args.method, MethodArg::Genfunc) && n > 0 {
        return Err(CliError::Usage("the genfunc method only builds n = 0".into()));
    }
    let p = match &args.kappa {
        None => build_symbolic(&args, m, n),
        Some(r) => {
            if !r.is_positive() && !args.allow_nonpositive_kappa {
                return Err(ggp_core::Error::NonPositiveKappa(r.clone()).into());
            }
            match args.method.method() {
                Method::Eigensolver => eigensolve_specialized(m, n, r, true)?,
                _ => build_symbolic(&args, m, n).specialize(r)?,
            }
        }
    };
    let mut text = match args.format {
        FormatArg::Text => render(&p.poly, Style::Text),
        FormatArg::Latex => render(&p.poly, Style::Latex),
        FormatArg::Json => export_json(&p),
    };
    text.push('\n');
    match &args.out {
        Some(path) => {
            write_atomic(path, &text)?;
        }
        None => print!("{text}"),
    }
    Ok(exit::OK)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CliError> {
    let suite = Suite::from_name(&args.suite).expect("validated by clap");
    let mut config = SuiteConfig::new(suite)
        .max_degree(bound("--max-degree", args.max_degree)?)
        .grid(bound("--m-max", args.m_max)?, bound("--n-max", args.n_max)?)
        .feed(match args.method {
            FeedArg::Eigensolver => Feed::Eigensolver,
            FeedArg::Recurrence => Feed::Recurrence,
            FeedArg::Twin => Feed::TwinRecurrence,
        });
    config.jobs = jobs(args.jobs)?;
    let report = run_suite(&config);
    for r in report.results.iter().filter(|r| !r.passed()) {
        println!("FAIL {} {:?}: {}", r.check_name, r.indices, r.residual_description);
    }
    println!(
        "{}: {} checks, {} passed, {} failed",
        report.suite_name, report.summary.total, report.summary.passed, report.summary.failed
    );
    if let Some(path) = &args.report {
        let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
        text.push('\n');
        write_atomic(path, &text)?;
    }
    Ok(if report.all_passed() {
        exit::OK
    } else {
        exit::VERIFICATION_FAILED
    })
}

fn cmd_table(args: TableArgs) -> Result<u8, CliError> {
    let d = bound("--max-degree", args.max_degree)?;
    let dir = args
        .out
        .ok_or_else(|| CliError::Usage("--out or GGP_CACHE_DIR is required".into()))?;
    let summary = in_pool(jobs(args.jobs)?, || write_table(&dir, d))?;
    println!(
        "{}: {} written, {} unchanged",
        dir.display(),
        summary.written,
        summary.unchanged
    );
    Ok(exit::OK)
}

fn cmd_bench(args: BenchArgs) -> Result<u8, CliError> {
    let d = bound("--max-degree", args.max_degree)?;
    let methods: Vec<Method> = if args.method.is_empty() {
        vec![Method::Eigensolver, Method::Recurrence]
    } else {
        args.method.iter().map(|m| m.method()).collect()
    };
    let rows = bench::run(d, &methods);
    print!("{}", bench::render(&rows, &methods));
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    let outcome = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Table(a) => cmd_table(a),
        Command::Bench(a) => cmd_bench(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("ggp: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
