use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use esemig_cli::commands::{self, EnumerateArgs, GalleryOutput};
use esemig_cli::format::MagmaFile;
use esemig_cli::suite::{self, SuiteConfig};
use esemig_cli::{CliError, CliResult, EXIT_FAIL, EXIT_PASS};
use esemig_core::battery::Verdict;
use esemig_core::enumerate::{Method, Mode, RAW_LIMIT_DEFAULT};
use esemig_core::rational::{Sampling, DEFAULT_BUDGET};
use serde::Serialize;

/// Finite semigroups with a joined second operation.
#[derive(Parser)]
#[command(name = "esemig", version)]
struct Cli {
    /// Add wall-clock timing to reports.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Left,
    Right,
    TwoSided,
    Identical,
    Josemig,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Left => Mode::Left,
            ModeArg::Right => Mode::Right,
            ModeArg::TwoSided => Mode::TwoSided,
            ModeArg::Identical => Mode::Identical,
            ModeArg::Josemig => Mode::Josemig,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    RawTable,
    ViaF,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::RawTable => Method::RawTable,
            MethodArg::ViaF => Method::ViaF,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse a structure file and print it in canonical form.
    Parse {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Classify one operation of a file as a semigroup.
    Classify {
        path: PathBuf,
        /// Operation name; defaults to the first.
        #[arg(long)]
        op: Option<String>,
    },
    /// Check the join laws of a two-operation file.
    Verify {
        path: PathBuf,
        #[arg(long)]
        e: Option<String>,
        #[arg(long, value_enum, default_value = "two-sided")]
        mode: ModeArg,
    },
    /// Enumerate every second operation on a gallery base.
    Enumerate {
        /// Gallery builder, e.g. `cyclic(3)` or `klein_group`.
        #[arg(long)]
        group: String,
        #[arg(long)]
        e: Option<String>,
        #[arg(long, value_enum, default_value = "identical")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
        #[arg(long, default_value_t = RAW_LIMIT_DEFAULT)]
        raw_limit: usize,
        /// Allow raw scans of order 4.
        #[arg(long)]
        long_run: bool,
        /// Include every table in the report.
        #[arg(long)]
        dump: bool,
    },
    /// Build the e-congruence quotient and check the isomorphism with e(.)S.
    Quotient {
        path: PathBuf,
        #[arg(long)]
        e: Option<String>,
    },
    /// Factor the group through the left joiner map.
    Factorize {
        path: PathBuf,
        #[arg(long)]
        e: Option<String>,
    },
    /// Run every acceptance criterion.
    Suite {
        #[arg(long, default_value_t = 3)]
        order_max: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = RAW_LIMIT_DEFAULT)]
        raw_limit: usize,
    },
    /// Print a gallery structure as a file, or its sampled report.
    Gallery {
        builder: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Writes to stdout, ignoring a reader that has gone away.
fn emit(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes()).and_then(|_| out.flush());
}

fn print_json(v: &impl Serialize) {
    emit(&format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("serializable")
    ));
}

fn print_file(f: &MagmaFile, format: Format) {
    match format {
        Format::Json => emit(&format!("{}\n", f.to_json())),
        Format::Text => emit(&f.to_text()),
    }
}

fn exit_for(v: Verdict) -> i32 {
    if v == Verdict::Fail {
        EXIT_FAIL
    } else {
        EXIT_PASS
    }
}

fn run(cli: Cli) -> CliResult<i32> {
    let start = Instant::now();
    let timing = |ms: &mut Option<u64>| {
        if cli.timing {
            *ms = Some(start.elapsed().as_millis() as u64);
        }
    };
    let mut report = match cli.command {
        Command::Parse { path, format } => {
            let f = MagmaFile::load(&path)?;
            print_file(&f, format);
            return Ok(EXIT_PASS);
        }
        Command::Classify { path, op } => commands::classify_file(&path, op.as_deref())?,
        Command::Verify { path, e, mode } => {
            commands::verify_file(&path, e.as_deref(), mode.into())?
        }
        Command::Enumerate {
            group,
            e,
            mode,
            method,
            raw_limit,
            long_run,
            dump,
        } => commands::enumerate(&EnumerateArgs {
            group: &group,
            e: e.as_deref(),
            mode: mode.into(),
            method: method.into(),
            raw_limit,
            long_run,
            dump,
        })?,
        Command::Quotient { path, e } => commands::quotient_file(&path, e.as_deref())?,
        Command::Factorize { path, e } => commands::factorize_file(&path, e.as_deref())?,
        Command::Suite {
            order_max,
            budget,
            seed,
            raw_limit,
        } => {
            let config = SuiteConfig {
                order_max,
                budget,
                seed,
                raw_limit,
                timing: cli.timing,
            };
            let r = suite::run(&config)?;
            print_json(&r);
            return Ok(exit_for(r.verdict));
        }
        Command::Gallery {
            builder,
            format,
            budget,
            seed,
        } => match commands::gallery(&builder, Sampling { seed, budget })? {
            GalleryOutput::File(f) => {
                print_file(&f, format);
                return Ok(EXIT_PASS);
            }
            GalleryOutput::Report(r) => *r,
        },
    };
    timing(&mut report.timing_ms);
    print_json(&report);
    Ok(exit_for(report.verdict))
}

fn configure_workers() -> Result<(), CliError> {
    if let Ok(v) = std::env::var("ESEMIG_WORKERS") {
        let n: usize = v
            .parse()
            .map_err(|_| CliError::Usage(format!("ESEMIG_WORKERS must be a number, got `{v}`")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = configure_workers()
        .and_then(|_| run(cli))
        .unwrap_or_else(|e| {
            eprintln!("esemig: {e}");
            print_json(&serde_json::json!({ "error": e.record() }));
            e.exit_code()
        });
    ExitCode::from(code as u8)
}
