mod commands;
mod envelope;
mod table;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ganita::prosody::Half;

use commands::{ComposeArgs, IrrArgs, ScanArgs, ScanFormat, SolveArgs, SurdArgs, SurdOp};

/// Exact varga-prakrti solving, surd arithmetic and arya scansion.
#[derive(Parser)]
#[command(name = "ganita", version)]
struct Cli {
    /// Print the machine-readable JSON envelope.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve N*a^2 + k = b^2.
    Solve {
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        k: String,
        /// Largest a searched.
        #[arg(long, default_value = "1000000")]
        bound: String,
        /// List every solution with a <= bound.
        #[arg(long)]
        all: bool,
        /// Square-multiplier mode: b - sqrt(N)*a = m.
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
    },
    /// Compose two solutions.
    Compose {
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        /// a,b,k
        #[arg(long, allow_hyphen_values = true)]
        s1: String,
        /// a,b,k
        #[arg(long, allow_hyphen_values = true)]
        s2: String,
        /// Divide the roots by sqrt(k).
        #[arg(long)]
        unit: bool,
        /// Compose with itself up to this many times to reach integers.
        #[arg(long)]
        promote: Option<String>,
    },
    /// Certify whether sqrt(N) is irrational.
    Irr {
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        /// Refute sqrt(N) = p/q.
        #[arg(long, allow_hyphen_values = true)]
        refute: Option<String>,
        #[arg(long, default_value = "1000000")]
        bound: String,
        #[arg(long, default_value = "3")]
        steps: String,
        /// Show the growth contradiction even when direct evaluation suffices.
        #[arg(long)]
        force_growth: bool,
    },
    /// Quadratic surd arithmetic.
    Surd {
        op: OpArg,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        expr2: Option<String>,
        #[arg(long, default_value = "20")]
        digits: String,
    },
    /// Scan and validate an arya verse.
    Scan {
        #[arg(long, value_enum)]
        format: FormatArg,
        #[arg(long)]
        file: Option<PathBuf>,
        /// Half assumed when IAST input is a single hemistich.
        #[arg(long, value_enum)]
        half: Option<HalfArg>,
        text: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    Add,
    Mul,
    Norm,
    #[value(name = "sum18-38")]
    Sum1838,
    Eval,
}

#[derive(Clone, Copy, ValueEnum)]
enum HalfArg {
    First,
    Second,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Lg,
    Iast,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Solve { n, k, bound, all, m } => commands::solve(&SolveArgs { n, k, bound, all, m }),
        Command::Compose { n, s1, s2, unit, promote } => commands::compose(&ComposeArgs {
            n,
            s1,
            s2,
            unit,
            promote,
        }),
        Command::Irr { n, refute, bound, steps, force_growth } => commands::irr(&IrrArgs {
            n,
            refute,
            bound,
            steps,
            force_growth,
        }),
        Command::Surd { op, expr, expr2, digits } => commands::surd_cmd(&SurdArgs {
            op: match op {
                OpArg::Add => SurdOp::Add,
                OpArg::Mul => SurdOp::Mul,
                OpArg::Norm => SurdOp::Norm,
                OpArg::Sum1838 => SurdOp::Sum1838,
                OpArg::Eval => SurdOp::Eval,
            },
            expr,
            expr2,
            digits,
        }),
        Command::Scan { format, file, half, text } => commands::scan(&ScanArgs {
            format: match format {
                FormatArg::Lg => ScanFormat::Lg,
                FormatArg::Iast => ScanFormat::Iast,
            },
            half: half.map(|h| match h {
                HalfArg::First => Half::First,
                HalfArg::Second => Half::Second,
            }),
            file,
            text,
        }),
    };
    let env = outcome.unwrap_or_else(|e| e);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(env.render(cli.json).as_bytes());
    env.exit.into()
}
