//! Command-line front end: compute family tables, run the verification
//! suite, list the family catalog.
//!
//! Exit codes: 0 success; 2 some identity fails under every reading (a
//! finding, not a crash); 64 usage error (unknown subcommand, family or
//! check id); 65 invalid rational or index syntax; 66 pole or degenerate
//! parameters; 74 I/O error.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polybe::families::{FamilySpec, FamilyTag, XArg};
use polybe::harness::{self, HarnessConfig};
use polybe::polylog::{MultiIndex, ParamTriple};
use polybe::{Error, Rational};

const EX_OK: u8 = 0;
const EX_FINDING: u8 = 2;
const EX_USAGE: u8 = 64;
const EX_DATA: u8 = 65;
const EX_PARAMS: u8 = 66;
const EX_IO: u8 = 74;

#[derive(Parser)]
#[command(name = "polybe", version, about = "Exact poly-Bernoulli / poly-Euler family tables and identity verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a family value table.
    Compute(ComputeArgs),
    /// Run the identity verification suite and write a JSON report.
    Verify(VerifyArgs),
    /// List the family catalog with defining generating functions.
    ListFamilies,
}

#[derive(Args)]
struct ComputeArgs {
    /// Family tag (see `list-families`).
    #[arg(long)]
    family: String,
    /// Comma-separated upper indices, e.g. `2` or `1,2,-1`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    k: String,
    #[arg(long = "n-max", default_value_t = 8)]
    n_max: usize,
    /// ln a, as a rational.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    alpha: String,
    /// ln b, as a rational.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    beta: String,
    /// ln c, as a rational.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    gamma: String,
    /// Rational sample point, or `sym` for a symbolic-x table.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    x: String,
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    y: String,
    /// Hurwitz shift parameter.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    a: String,
    /// Depth of the symmetrized-dcal construction.
    #[arg(long, default_value_t = 2)]
    r: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Run every registered check (the default).
    #[arg(long, conflicts_with = "id")]
    all: bool,
    /// Run a single check by id, e.g. `thm5.1`.
    #[arg(long)]
    id: Option<String>,
    /// Engine truncation order recorded in the report.
    #[arg(long, default_value_t = 12)]
    order: usize,
    #[arg(long = "n-max", default_value_t = 8)]
    n_max: usize,
    /// Recorded for bookkeeping; the grids are deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Run checks serially (the report is identical either way).
    #[arg(long)]
    serial: bool,
    /// Report path (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Latex,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EX_OK,
                _ => EX_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match cli.command {
        Command::Compute(args) => cmd_compute(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::ListFamilies => cmd_list_families(),
    };
    ExitCode::from(code)
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::ParseRational(_) | Error::DivisionByZero => EX_DATA,
        Error::PoleParameter(_)
        | Error::DegenerateParameter(_)
        | Error::SingularSeries(_)
        | Error::NonDivisible { .. } => EX_PARAMS,
        Error::EmptyIndex | Error::UnsupportedDepth(_) => EX_USAGE,
    }
}

fn fail(err: &Error) -> u8 {
    eprintln!("error: {}", err);
    exit_code_for(err)
}

fn parse_rational(label: &str, s: &str) -> Result<Rational, u8> {
    Rational::from_str(s).map_err(|e| {
        eprintln!("error: invalid rational for --{}: {}", label, e);
        EX_DATA
    })
}

fn parse_index(s: &str) -> Result<MultiIndex, u8> {
    let entries: Result<Vec<i64>, _> = s.split(',').map(|p| p.trim().parse::<i64>()).collect();
    let entries = entries.map_err(|_| {
        eprintln!("error: invalid index list `{}` for --k (expected comma-separated integers)", s);
        EX_DATA
    })?;
    MultiIndex::new(entries).map_err(|e| fail(&e))
}

fn cmd_compute(args: &ComputeArgs) -> u8 {
    let tag = match FamilyTag::from_str(&args.family) {
        Ok(t) => t,
        Err(e) => return fail(&e),
    };
    let k = match parse_index(&args.k) {
        Ok(k) => k,
        Err(code) => return code,
    };
    let params = match (
        parse_rational("alpha", &args.alpha),
        parse_rational("beta", &args.beta),
        parse_rational("gamma", &args.gamma),
    ) {
        (Ok(a), Ok(b), Ok(c)) => ParamTriple::new(a, b, c),
        (Err(c), _, _) | (_, Err(c), _) | (_, _, Err(c)) => return c,
    };
    let x = if args.x == "sym" {
        XArg::Symbolic
    } else {
        match parse_rational("x", &args.x) {
            Ok(v) => XArg::Value(v),
            Err(c) => return c,
        }
    };
    let y = match parse_rational("y", &args.y) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let a = match parse_rational("a", &args.a) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let spec = FamilySpec {
        tag,
        k,
        params,
        x,
        y,
        a,
        r: args.r,
        n_max: args.n_max,
    };
    let table = match spec.compute() {
        Ok(t) => t,
        Err(e) => return fail(&e),
    };
    let rendered = match args.format {
        Format::Csv => render::csv(&table),
        Format::Json => render::json(&table),
        Format::Latex => render::latex(&table),
    };
    emit(&rendered, args.out.as_deref())
}

fn cmd_verify(args: &VerifyArgs) -> u8 {
    let cfg = HarnessConfig {
        n_max: args.n_max,
        order: args.order,
        seed: args.seed,
        parallel: !args.serial,
        enlargement_ceiling: 2,
    };
    let report = match harness::run(&cfg, args.id.as_deref()) {
        Some(r) => r,
        None => {
            eprintln!(
                "error: unknown check id `{}`; known ids: {}",
                args.id.as_deref().unwrap_or(""),
                harness::check_ids().join(", ")
            );
            return EX_USAGE;
        }
    };
    let json = report.to_json();
    let code = emit(&json, args.out.as_deref());
    if code != EX_OK {
        return code;
    }
    eprintln!(
        "verified: {} passing cases, {} failing cases across {} check entries",
        report.summary.pass,
        report.summary.fail,
        report.checks.len()
    );
    if report.every_identity_has_passing_variant() {
        let failing = report.statement_failures();
        if !failing.is_empty() {
            eprintln!(
                "as-written readings failing (a passing reading exists for each): {}",
                failing.join(", ")
            );
        }
        EX_OK
    } else {
        eprintln!("finding: some identity fails under every reading");
        EX_FINDING
    }
}

fn cmd_list_families() -> u8 {
    println!("{:<22} {:<18} {}", "family", "gf-id", "generating function / definition");
    for tag in FamilyTag::ALL {
        println!(
            "{:<22} {:<18} {}",
            tag.as_str(),
            tag.reference(),
            tag.generating_function()
        );
    }
    EX_OK
}

fn emit(content: &str, out: Option<&std::path::Path>) -> u8 {
    match out {
        None => {
            println!("{}", content);
            EX_OK
        }
        Some(path) => match std::fs::write(path, format!("{}\n", content)) {
            Ok(()) => EX_OK,
            Err(e) => {
                eprintln!("error: cannot write {}: {}", path.display(), e);
                EX_IO
            }
        },
    }
}
