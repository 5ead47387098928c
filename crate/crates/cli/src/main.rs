use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;
mod render;

use commands::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "modrep",
    version,
    about = "Exact computations for representations of PSL(2,Z)"
)]
struct Cli {
    /// Emit a JSON envelope (default).
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,

    /// Emit plain text instead of JSON.
    #[arg(long, global = true)]
    text: bool,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension of the simple locus for a dimension vector "(a1,a2,a3;b1,b2)".
    Dim { alpha: String },

    /// Largest component dimension of the simple locus in dimension n.
    Maxdim { n: u64 },

    /// All admissible dimension vectors with |alpha| = n.
    Enumerate { n: u64 },

    /// Build an explicit module from one of the standard families.
    Family {
        #[command(subcommand)]
        family: FamilyCmd,
    },

    /// Test a module for simplicity. SOURCE is a JSON file, inline JSON, or "-" for stdin.
    CheckSimple { source: String },

    /// Minimal codimension of the non-simple locus, with a witness decomposition.
    Codim { alpha: String },

    /// Number of maximally iterated extensions, computed three ways.
    MieCount { alpha: String },

    /// Upper-triangular involution from a sign pattern and free entries.
    ///
    /// ENTRIES lists 1-based positions with values, e.g. "1,2=2;2,3=w".
    /// Free positions that are not listed are set to 0.
    Involution {
        #[arg(allow_hyphen_values = true)]
        pattern: String,
        #[arg(default_value = "", allow_hyphen_values = true)]
        entries: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },

    /// Centralizer dimension of a diagonal X with multiplicities "a1,a2,a3".
    Stabilizer { multiplicities: String },

    /// Dimension data for iterated extensions with a given sign pattern.
    IndSummary {
        alpha: String,
        #[arg(allow_hyphen_values = true)]
        pattern: String,
    },

    /// Generating-function coefficient tables.
    Series {
        #[arg(long, value_enum)]
        which: Which,
        /// Truncation order.
        #[arg(long, env = "MODREP_ORDER", default_value_t = 20)]
        order: usize,
        /// Dimension vector, required for --which mie.
        #[arg(long)]
        alpha: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum FamilyCmd {
    /// One-dimensional module: X = w^POWER, Y = SIGN.
    OneDim {
        power: u8,
        #[arg(allow_hyphen_values = true)]
        sign: String,
    },
    /// Two-dimensional family M_s with X-eigenvalues 1, w^POWER.
    M {
        #[arg(allow_hyphen_values = true)]
        s: String,
        power: u8,
    },
    /// Two-dimensional family N_t with X-eigenvalues 1, w^POWER.
    N {
        #[arg(allow_hyphen_values = true)]
        t: String,
        power: u8,
    },
    /// Three-dimensional module with parameters l1 l2 l3, (l1 l2 l3)^2 = 1.
    Three {
        #[arg(allow_hyphen_values = true)]
        l1: String,
        #[arg(allow_hyphen_values = true)]
        l2: String,
        #[arg(allow_hyphen_values = true)]
        l3: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Method {
    Forward,
    Closed,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Which {
    Maxdim,
    Modular,
    Mie,
}

fn dispatch(command: &Command) -> Result<commands::Outcome, Failure> {
    match command {
        Command::Dim { alpha } => commands::dim(alpha),
        Command::Maxdim { n } => commands::maxdim(*n),
        Command::Enumerate { n } => commands::enumerate(*n),
        Command::Family { family } => match family {
            FamilyCmd::OneDim { power, sign } => commands::family_one_dim(*power, sign),
            FamilyCmd::M { s, power } => commands::family_two_dim("m", s, *power),
            FamilyCmd::N { t, power } => commands::family_two_dim("n", t, *power),
            FamilyCmd::Three { l1, l2, l3 } => commands::family_three(l1, l2, l3),
        },
        Command::CheckSimple { source } => commands::check_simple(source),
        Command::Codim { alpha } => commands::codim(alpha),
        Command::MieCount { alpha } => commands::mie_count(alpha),
        Command::Involution {
            pattern,
            entries,
            method,
        } => commands::involution(pattern, entries, *method),
        Command::Stabilizer { multiplicities } => commands::stabilizer(multiplicities),
        Command::IndSummary { alpha, pattern } => commands::ind_summary(alpha, pattern),
        Command::Series {
            which,
            order,
            alpha,
        } => commands::series(*which, *order, alpha.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match dispatch(&cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    let as_text = cli.text && !cli.json;
    let body = if as_text {
        render::text(&outcome)
    } else {
        render::json(&outcome)
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if let Some(msg) = &outcome.internal_failure {
        eprintln!("error: {msg}");
        return ExitCode::from(1);
    }
    ExitCode::SUCCESS
}
