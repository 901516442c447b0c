//! `quartered`: generate, count, verify, benchmark and render tiling regions.
//!
//! Exit codes: 0 success, 1 verification or consistency failure, 2 invalid
//! input.

mod bench;
mod input;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use quartered::engines::{count, EngineChoice};
use quartered::render::{ascii_graph, ascii_region, svg_graph, svg_region};
use quartered::verify::{run_all, run_suite, Suite, SuiteOptions, VerifySuiteReport};

use input::{Built, Family, Params};

#[derive(Debug)]
pub enum CliError {
    /// Bad flags, parameters or input files.
    Invalid(String),
    /// A verification or engine-consistency failure.
    Failed(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Invalid(_) => 2,
        }
    }
}

impl From<quartered::Error> for CliError {
    fn from(e: quartered::Error) -> Self {
        use quartered::Error::*;
        match e {
            EngineDisagreement { .. } | NonIntegral(_) => CliError::Failed(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "quartered", version, about = "Exact domino tiling counts for Aztec diamond quarters")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a region or graph family member as JSON
    Gen {
        family: Family,
        #[command(flatten)]
        params: Params,
        /// Also print an ASCII rendering after the JSON
        #[arg(long)]
        ascii: bool,
    },
    /// Count perfect matchings (domino tilings)
    Count {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "auto", value_parser = parse_engine)]
        engine: EngineChoice,
        /// Confirm the result with a second engine
        #[arg(long)]
        crosscheck: bool,
    },
    /// Run verification suites
    Verify {
        /// Suite name or `all`
        suite: String,
        #[arg(long)]
        max_order: Option<u32>,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = SuiteOptions::default().seed)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Time engines on instance sets and print CSV
    Bench(bench::BenchArgs),
    /// Render a region or graph as ASCII or SVG
    Render {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
    },
}

#[derive(clap::Args, Debug)]
struct Source {
    /// Region or graph JSON file, `-` for stdin
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    #[arg(long)]
    family: Option<Family>,
    #[command(flatten)]
    params: Params,
}

impl Source {
    fn load(&self) -> Result<Built, CliError> {
        match (&self.input, self.family) {
            (Some(path), _) => input::load(path),
            (None, Some(family)) => input::build(family, &self.params),
            (None, None) => Err(CliError::Invalid("either --input or --family is required".into())),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
    Pretty,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum RenderFormat {
    Ascii,
    Svg,
}

pub(crate) fn parse_engine(s: &str) -> Result<EngineChoice, String> {
    s.parse().map_err(|e: quartered::Error| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err((out, e)) => {
            print!("{out}");
            match &e {
                CliError::Invalid(msg) | CliError::Failed(msg) => eprintln!("error: {msg}"),
            }
            ExitCode::from(e.code())
        }
    }
}

/// Runs one command, returning its stdout. Failures may still carry output
/// (a failing verification report is printed before exiting with 1).
fn run(command: Command) -> Result<String, (String, CliError)> {
    let bare = |e: CliError| (String::new(), e);
    match command {
        Command::Gen { family, params, ascii } => {
            let built = input::build(family, &params).map_err(bare)?;
            let mut out = built.to_json();
            out.push('\n');
            if ascii {
                out.push_str(&render_ascii(&built));
            }
            Ok(out)
        }
        Command::Count {
            source,
            engine,
            crosscheck,
        } => {
            let g = source.load().map_err(bare)?.graph();
            let n = count(&g, engine, crosscheck).map_err(|e| bare(e.into()))?;
            Ok(format!("{n}\n"))
        }
        Command::Verify {
            suite,
            max_order,
            max_n,
            samples,
            seed,
            format,
        } => {
            let opts = SuiteOptions {
                max_order,
                max_n,
                samples,
                seed,
            };
            let (reports, single) = if suite == "all" {
                (run_all(&opts), false)
            } else {
                let s: Suite = suite.parse().map_err(|e: quartered::Error| bare(e.into()))?;
                (vec![run_suite(s, &opts)], true)
            };
            let out = format_reports(&reports, single, format);
            match reports.iter().find(|r| !r.ok) {
                None => Ok(out),
                Some(r) => {
                    let case = r.cases.iter().find(|c| !c.ok).map_or("?", |c| c.id.as_str());
                    Err((out, CliError::Failed(format!("suite {} failed at case {case}", r.suite))))
                }
            }
        }
        Command::Bench(args) => bench::run(&args),
        Command::Render { source, format } => {
            let built = source.load().map_err(bare)?;
            Ok(match format {
                RenderFormat::Ascii => render_ascii(&built),
                RenderFormat::Svg => match &built {
                    Built::Region(r) => svg_region(r),
                    Built::Graph(g) => svg_graph(g),
                },
            })
        }
    }
}

fn render_ascii(built: &Built) -> String {
    match built {
        Built::Region(r) => ascii_region(r),
        Built::Graph(g) => ascii_graph(g),
    }
}

fn format_reports(reports: &[VerifySuiteReport], single: bool, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = if single {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(reports)
            }
            .expect("serializable");
            s.push('\n');
            s
        }
        ReportFormat::Csv => {
            let mut s = String::from("suite,case,expected,actual,ok\n");
            for r in reports {
                for c in &r.cases {
                    let _ = writeln!(
                        s,
                        "{},{},{},{},{}", r.suite,
                        csv_field(&c.id),
                        csv_field(&c.expected),
                        csv_field(&c.actual),
                        c.ok
                    );
                }
            }
            s
        }
        ReportFormat::Pretty => {
            let mut s = String::new();
            for r in reports {
                let passed = r.cases.iter().filter(|c| c.ok).count();
                let _ = writeln!(
                    s,
                    "{:<14} {:>4}/{:<4} {}  ({:.1} ms)",
                    r.suite,
                    passed,
                    r.cases.len(),
                    if r.ok { "ok" } else { "FAILED" },
                    r.wall_time.as_secs_f64() * 1e3
                );
                for c in r.cases.iter().filter(|c| !c.ok) {
                    let _ = writeln!(s, "    {}: expected {}, got {}", c.id, c.expected, c.actual);
                }
            }
            s
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
