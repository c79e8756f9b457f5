use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ado::batch::{builtin_jobs, compute_report, parse_table, run_jobs, PipelineChoice};
use ado::report::{Report, Variable};
use ado::ring::Color;
use ado::selfcheck::{self, Level};

#[derive(Parser)]
#[command(
    name = "ado",
    about = "Colored Alexander invariants of braid closures",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the invariant of one braid word.
    Compute(ComputeArgs),
    /// Evaluate the built-in knot table, or rows from a file
    /// (`name; n; N; braid-word` per line).
    Table(TableArgs),
    /// Run the internal consistency suite.
    Selfcheck {
        /// Add four-strand words and an N = 4 spot check.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Args)]
struct ComputeArgs {
    /// Braid word: nonzero integers, whitespace or comma separated.
    /// Positive k is the generator σ_k, negative its inverse.
    #[arg(required = true, allow_negative_numbers = true)]
    word: Vec<String>,

    /// Number of strands; inferred from the word when omitted.
    #[arg(short = 'n', long = "strands")]
    strands: Option<usize>,

    /// Label used in output.
    #[arg(long, default_value = "knot")]
    name: String,

    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct TableArgs {
    /// Optional table file; the built-in table is used when omitted.
    file: Option<PathBuf>,

    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CommonArgs {
    /// Color N ≥ 2 of the invariant.
    #[arg(short = 'N', long = "color", default_value_t = 2)]
    color: u32,

    /// Which evaluation pipeline to use.
    #[arg(long, value_enum, default_value_t = PipelineArg::Both)]
    pipeline: PipelineArg,

    /// Variable for the printed polynomial (x = t^{-2}).
    #[arg(long, value_enum, default_value_t = VarArg::T)]
    var: VarArg,

    /// Emit the result as JSON instead of text.
    #[arg(long)]
    json: bool,

    /// Also evaluate numerically at these colors λ, with t = exp(iπλ/N).
    #[arg(long = "lambda", value_delimiter = ',', allow_negative_numbers = true)]
    lambdas: Vec<f64>,

    /// Upper bound on the number of tensor basis states N^n.
    #[arg(long, default_value_t = 4096)]
    cap: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum PipelineArg {
    Direct,
    Lawrence,
    Both,
}

impl From<PipelineArg> for PipelineChoice {
    fn from(p: PipelineArg) -> Self {
        match p {
            PipelineArg::Direct => PipelineChoice::Direct,
            PipelineArg::Lawrence => PipelineChoice::Lawrence,
            PipelineArg::Both => PipelineChoice::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VarArg {
    T,
    X,
}

impl From<VarArg> for Variable {
    fn from(v: VarArg) -> Self {
        match v {
            VarArg::T => Variable::T,
            VarArg::X => Variable::X,
        }
    }
}

const EXIT_USAGE: u8 = 1;
const EXIT_COMPUTE: u8 = 2;
const EXIT_SELFCHECK: u8 = 3;

fn emit_text(report: &Report, common: &CommonArgs) {
    println!(
        "{} (n={}, N={}, e={}, pipeline={}): {}",
        report.name,
        report.n,
        report.color.n(),
        report.e,
        report.pipeline,
        report.display_value(common.var.into()),
    );
    for &lambda in &common.lambdas {
        let (v, ill) = report.eval_at(lambda);
        let note = if ill { "  (ill-conditioned)" } else { "" };
        println!("  lambda={lambda}: {:.12}{:+.12}i{note}", v.re, v.im);
    }
}

fn validate_color(color: u32) -> Result<Color, u8> {
    if color < 2 {
        eprintln!("error: the color N must be at least 2");
        return Err(EXIT_USAGE);
    }
    Ok(Color(color))
}

fn cmd_compute(args: &ComputeArgs) -> Result<(), u8> {
    let color = validate_color(args.common.color)?;
    let text = args.word.join(" ");
    let report = compute_report(
        color,
        &args.name,
        &text,
        args.strands,
        args.common.pipeline.into(),
        args.common.cap,
    )
    .map_err(|e| {
        eprintln!("error: {e}");
        EXIT_COMPUTE
    })?;
    if args.common.json {
        println!("{}", serde_json::to_string(&report.to_json()).unwrap());
    } else {
        emit_text(&report, &args.common);
        if report.pipeline == "both" {
            println!("  pipelines agree: yes");
        }
    }
    Ok(())
}

fn cmd_table(args: &TableArgs) -> Result<(), u8> {
    let common = &args.common;
    let jobs = match &args.file {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                eprintln!("error: cannot read {}: {e}", path.display());
                EXIT_USAGE
            })?;
            parse_table(&text).map_err(|e| {
                eprintln!("error: {e}");
                EXIT_USAGE
            })?
        }
        None => builtin_jobs(validate_color(common.color)?),
    };
    let results = run_jobs(&jobs, common.pipeline.into(), common.cap);
    let mut failed = false;
    let mut json_rows = Vec::new();
    for (job, res) in jobs.iter().zip(results) {
        match res {
            Ok(report) => {
                if common.json {
                    json_rows.push(report.to_json());
                } else {
                    emit_text(&report, common);
                }
            }
            Err(e) => {
                eprintln!("error: {}: {e}", job.name);
                failed = true;
            }
        }
    }
    if common.json {
        println!(
            "{}",
            serde_json::to_string(&serde_json::Value::Array(json_rows)).unwrap()
        );
    }
    if failed {
        Err(EXIT_COMPUTE)
    } else {
        Ok(())
    }
}

fn cmd_selfcheck(full: bool) -> Result<(), u8> {
    let level = if full { Level::Full } else { Level::Fast };
    let mut failed = false;
    for outcome in selfcheck::run(level) {
        match &outcome.result {
            Ok(()) => println!("ok   {:<24} {:.2?}", outcome.name, outcome.elapsed),
            Err(e) => {
                println!("FAIL {:<24} {:.2?}  {e}", outcome.name, outcome.elapsed);
                failed = true;
            }
        }
    }
    if failed {
        Err(EXIT_SELFCHECK)
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not usage errors
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match &cli.command {
        Command::Compute(args) => cmd_compute(args),
        Command::Table(args) => cmd_table(args),
        Command::Selfcheck { full } => cmd_selfcheck(*full),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}
