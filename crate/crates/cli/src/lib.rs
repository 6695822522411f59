//! Command-line front end for `quadbent-core`.
//!
//! Exit codes: 0 when everything requested holds, 1 when a verification
//! failed, 2 for usage errors and resource gates. Output goes to stdout in
//! the requested format, diagnostics to stderr. The thread count comes from
//! `--jobs` or the `QUADBENT_JOBS` environment variable (default: all
//! cores); output does not depend on it.

mod analysis;
pub mod cache;
mod commands;
pub mod format;
pub mod record;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};

use quadbent_core::{FieldContext, ModulusSpec};

pub use format::Format;
pub use record::AnalysisRecord;
pub use verify::Suite;

#[derive(Debug, Parser)]
#[command(name = "quadbent", version, about = "Bent components, spectra and 2-adic invariants of binomials over GF(2^n)")]
pub struct Cli {
    /// Extension degree.
    #[arg(long, global = true)]
    pub n: Option<u32>,
    /// Defining polynomial as a bit mask, e.g. 0x43 (default: least irreducible).
    #[arg(long, global = true, value_parser = parse_int)]
    pub modulus: Option<u64>,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Worker threads; 0 means all cores.
    #[arg(long, global = true, env = "QUADBENT_JOBS")]
    pub jobs: Option<usize>,
    /// Directory holding the analysis cache.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    /// Lift the default resource gates.
    #[arg(long, global = true)]
    pub long_run: bool,
    #[arg(long, global = true, hide = true, value_enum)]
    pub inject_fault: Option<Fault>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fault {
    /// Flip one bit of the antilog table.
    FieldTable,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Field parameters for GF(2^n).
    Field,
    /// Full analysis of x^d1 + x^d2 (or x^d1 alone).
    Analyze {
        #[arg(long, value_parser = parse_int)]
        d1: u64,
        #[arg(long, value_parser = parse_int)]
        d2: Option<u64>,
        /// Skip the equivalence witness search.
        #[arg(long)]
        no_witness: bool,
    },
    /// Exhaustive search over binomials, one pair per doubling orbit;
    /// prints a record for every maximal hit.
    Search {
        /// Only exponents of 2-adic weight at most this.
        #[arg(long)]
        max_weight: Option<u32>,
    },
    /// l(n), the least Frobenius-orbit dimension over field generators.
    Ell {
        #[arg(long, value_enum, default_value = "auto")]
        method: EllChoice,
    },
    /// l(n) for a range of even n against the published table.
    Table1 {
        #[arg(long, default_value_t = 4)]
        from: u32,
        #[arg(long, default_value_t = 16)]
        to: u32,
    },
    /// nu, minimizer set, gcd ledger and the valuation law for a binomial.
    Stick {
        #[arg(long, value_parser = parse_int)]
        d1: u64,
        #[arg(long, value_parser = parse_int)]
        d2: Option<u64>,
    },
    /// 2-adic Gauss sums and the Stickelberger congruence.
    Gauss {
        /// A single character index (default: all).
        #[arg(long)]
        j: Option<u64>,
        /// Precision exponent (default: n + 2).
        #[arg(long)]
        kappa: Option<u32>,
    },
    /// Verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EllChoice {
    /// Both methods when brute force is within its gate, else the lattice.
    Auto,
    Brute,
    Lattice,
    Both,
}

fn parse_int(s: &str) -> std::result::Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid integer {s:?}: {e}"))
}

/// Shared state handed to every command.
#[derive(Debug)]
pub(crate) struct Env {
    pub n: Option<u32>,
    pub modulus: Option<u64>,
    pub format: Format,
    pub cache: Option<PathBuf>,
    pub long_run: bool,
    pub fault: Option<Fault>,
}

impl Env {
    pub fn n(&self) -> Result<u32> {
        match self.n {
            Some(n) => Ok(n),
            None => bail!("--n is required for this command"),
        }
    }

    pub fn ctx(&self) -> Result<FieldContext> {
        let spec = self.modulus.map_or(ModulusSpec::Default, ModulusSpec::Explicit);
        let ctx = FieldContext::make(self.n()?, spec)?;
        Ok(match self.fault {
            Some(Fault::FieldTable) => ctx.with_corrupted_table(5),
            None => ctx,
        })
    }
}

/// Output of one command: stdout bytes, stderr bytes, whether every check
/// held.
pub(crate) struct Outcome {
    pub out: Vec<u8>,
    pub err: Vec<u8>,
}

fn dispatch(cli: Cli, o: &mut Outcome) -> Result<bool> {
    let env = Env {
        n: cli.n,
        modulus: cli.modulus,
        format: cli.format,
        cache: cli.cache,
        long_run: cli.long_run,
        fault: cli.inject_fault,
    };
    match cli.command {
        Command::Field => commands::field(&env, o),
        Command::Analyze { d1, d2, no_witness } => analysis::analyze(&env, o, d1, d2, !no_witness),
        Command::Search { max_weight } => analysis::search(&env, o, max_weight),
        Command::Ell { method } => commands::ell(&env, o, method),
        Command::Table1 { from, to } => commands::table1(&env, o, from, to),
        Command::Stick { d1, d2 } => commands::stick(&env, o, d1, d2),
        Command::Gauss { j, kappa } => commands::gauss(&env, o, j, kappa),
        Command::Verify { suite } => verify::verify(&env, o, suite),
    }
}

fn describe(e: &anyhow::Error) -> String {
    match e.downcast_ref::<quadbent_core::Error>() {
        Some(quadbent_core::Error::ResourceGate { what, n }) => {
            format!("{what} at n={n} is above the default resource gate; rerun with --long-run to allow it")
        }
        _ => format!("{e:#}"),
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    2
                }
            };
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.unwrap_or(0)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker pool: {e}");
            return 2;
        }
    };
    let (outcome, result) = pool.install(move || {
        let mut o = Outcome { out: Vec::new(), err: Vec::new() };
        let r = dispatch(cli, &mut o);
        (o, r)
    });
    let _ = out.write_all(&outcome.out);
    let _ = err.write_all(&outcome.err);
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {}", describe(&e));
            2
        }
    }
}
