use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cycloribbon_cli::checks::{self, Scope};
use cycloribbon_cli::commands::{self, Kind};
use cycloribbon_cli::config::{parse_block, resolve_guard, Format, RunConfig, GUARD_ENV};
use cycloribbon_cli::CliError;

/// Simple and projective modules of the 0-Hecke and 0-Ariki-Koike-Shoji
/// algebras: enumeration, tables and verification.
#[derive(Parser)]
#[command(name = "cycloribbon", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Size n of the algebra.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Number of colors r.
    #[arg(long, global = true)]
    r: Option<usize>,
    /// Restrict to one block, given by its color evaluation e1,e2,…
    #[arg(long, global = true)]
    block: Option<String>,
    /// Output format; JSON is always written under --out.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Largest block dimension to build (overridden by the environment variable CYCLORIBBON_GUARD).
    #[arg(long, global = true)]
    guard: Option<usize>,
    /// Number of worker threads for the block fan-out (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Directory to write output files into.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List canonical labels, one per line, followed by their count.
    Enumerate {
        /// `[N R] KIND`, KIND one of cycloribbons, anticycloribbons,
        /// simples, projectives, blocks; N and R may be given as --n, --r.
        #[arg(num_args = 1..=3, required = true)]
        args: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Compute a table.
    Compute {
        #[command(subcommand)]
        table: Table,
        #[command(flatten)]
        common: Common,
    },
    /// Recompute the reference tables and/or run the property suites.
    Verify {
        #[arg(value_enum)]
        scope: Scope,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum Table {
    /// Induction product of two simple modules, given by cycloribbons.
    Induct { left: String, right: String },
    /// Restrictions of a simple module at one cut or at every cut.
    Restrict {
        simple: String,
        #[arg(long)]
        at: Option<usize>,
    },
    /// q-Cartan matrix, block by block.
    Cartan,
    /// Decomposition matrix, block by block.
    Decomp,
    /// Ext-quiver, block by block.
    Quiver,
}

fn config(c: &Common) -> Result<RunConfig, CliError> {
    let cfg = RunConfig {
        n: c.n,
        r: c.r,
        block: c.block.as_deref().map(parse_block).transpose()?,
        format: c.format,
        guard: resolve_guard(c.guard)?,
        jobs: c.jobs,
        out: c.out.clone(),
    };
    cfg.validate()?;
    Ok(cfg)
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Enumerate { args, common } => {
            let (kind, sizes) = args.split_last().expect("at least one argument");
            let kind = Kind::from_str(kind, true).map_err(|_| CliError::BadInput(format!("unknown kind {kind:?}")))?;
            let mut common = common;
            match sizes {
                [] => {}
                [n, r] => {
                    let num =
                        |s: &String| s.parse::<usize>().map_err(|_| CliError::BadInput(format!("{s:?} is not a size")));
                    common.n = Some(num(n)?);
                    common.r = Some(num(r)?);
                }
                _ => return Err(CliError::BadInput("expected `enumerate [N R] KIND`".into())),
            }
            commands::enumerate(kind, &config(&common)?)
        }
        Command::Compute { table, common } => {
            let cfg = config(&common)?;
            let rendered = match table {
                Table::Induct { left, right } => commands::induct(&left, &right)?,
                Table::Restrict { simple, at } => commands::restrict(&simple, at)?,
                Table::Cartan => commands::cartan(&cfg)?,
                Table::Decomp => commands::decomp(&cfg)?,
                Table::Quiver => commands::quiver(&cfg)?,
            };
            rendered.emit(&cfg)
        }
        Command::Verify { scope, common } => {
            let cfg = config(&common)?;
            let report = checks::verify(scope, &cfg);
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            let text = report.render();
            print!("{text}");
            report.status().map(|()| String::new())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|()| out.flush()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if let CliError::Guard(_) = e {
                eprintln!("hint: raise --guard or set {GUARD_ENV}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
