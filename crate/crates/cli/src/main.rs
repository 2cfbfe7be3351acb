use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use lampart::commands::{self, IndexMode, DEFAULT_VERIFY_ORDER};
use lampart::remark;
use lampart::Format;
use lampart_core::RhoVariant;

#[derive(Parser)]
#[command(
    name = "lampart",
    version,
    about = "Unique-largest-part partitions: expand, verify, tabulate"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write to this file instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OrderArgs {
    /// Truncation order N (series are computed modulo q^(N+1))
    #[arg(value_name = "N", conflicts_with = "order")]
    order_pos: Option<usize>,

    #[arg(long)]
    order: Option<usize>,
}

impl OrderArgs {
    fn get(&self, default: usize) -> usize {
        self.order.or(self.order_pos).unwrap_or(default)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print coefficients of a family's generating function or of a
    /// q-expression such as "1/(q;q)" or "(-q^2,-q^4;q^6)"
    Expand {
        target: String,
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare the closed form with direct counting; exits 1 on any mismatch
    Verify {
        /// A variant name or "all"
        variant: String,
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Values and witness partitions for every family at an even n
    Table {
        n: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare the published MOD3/MOD6 terms under each index hypothesis
    RemarkCheck {
        #[command(flatten)]
        order: OrderArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Write a family's sequence as a b-file
    BfileExport {
        variant: RhoVariant,
        #[command(flatten)]
        order: OrderArgs,
        /// Whether b-file index k stands for n = k or n = 2k
        #[arg(long, value_enum, default_value_t = IndexMode::N)]
        index: IndexMode,
        /// Write to this file instead of standard output
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compare a local b-file with a family's coefficients
    BfileCompare {
        variant: RhoVariant,
        path: PathBuf,
        /// Expansion order; defaults to twice the last b-file index
        #[arg(long)]
        order: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn emit(text: &str, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Expand { target, order, out } => {
            let text = commands::expand(&target, order.get(DEFAULT_VERIFY_ORDER), out.format)?;
            emit(&text, out.output.as_ref())?;
        }
        Command::Verify {
            variant,
            order,
            out,
        } => {
            let result = commands::verify(&variant, order.get(DEFAULT_VERIFY_ORDER), out.format)?;
            emit(&result.text, out.output.as_ref())?;
            return Ok(result.success);
        }
        Command::Table { n, out } => {
            emit(&commands::table(n, out.format)?, out.output.as_ref())?;
        }
        Command::RemarkCheck { order, out } => {
            let text = commands::remark_check(order.get(remark::DEFAULT_ORDER), out.format)?;
            emit(&text, out.output.as_ref())?;
        }
        Command::BfileExport {
            variant,
            order,
            index,
            output,
        } => {
            let bfile = commands::bfile_export(variant, order.get(DEFAULT_VERIFY_ORDER), index);
            match output {
                Some(path) => bfile.write(&path)?,
                None => emit(&bfile.render(), None)?,
            }
        }
        Command::BfileCompare {
            variant,
            path,
            order,
            out,
        } => {
            let text = commands::bfile_compare(variant, &path, order, out.format)?;
            emit(&text, out.output.as_ref())?;
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
