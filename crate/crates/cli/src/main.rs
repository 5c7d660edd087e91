use clap::{Args, Parser, Subcommand};
use qsusy_cli::config::{parse_rational, parse_spin, ConfigError, SuiteConfig};
use qsusy_cli::report::{Format, Report};
use qsusy_cli::suites::{eval_report, run_suite, superfield_view, uq_view, EvalCommandError, FieldView, Suite, UqView};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact verification of semi-Hopf supersymmetry algebras, U_q(sl2) and N=1 superspace.
///
/// Exit codes: 0 when every gated check passes, 1 when a gated check fails,
/// 2 for invalid input or configuration, 3 when the report cannot be written.
#[derive(Parser, Debug)]
#[command(name = "qsusy", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Options,
}

#[derive(Args, Debug)]
struct Options {
    /// Number of supersymmetries N.
    #[arg(long, global = true, default_value_t = 2)]
    n_susy: u8,
    /// Comma-separated spins for representation checks.
    #[arg(long, global = true, default_value = "1/2,1,3/2", value_delimiter = ',')]
    spin: Vec<String>,
    /// Largest word degree searched for the quantum Lie basis.
    #[arg(long, global = true, default_value_t = 2)]
    max_degree: usize,
    /// Specialise q to the rational p/r instead of computing symbolically.
    #[arg(long, global = true, value_name = "P/R")]
    q_value: Option<String>,
    /// Killing normalisation <H,H>, with q_r = q^<H,H>.
    #[arg(long, global = true, default_value_t = 1)]
    killing_hh: u32,
    /// Gauge coupling g for numeric Lagrangian coefficients.
    #[arg(long = "g", global = true, value_name = "P/R")]
    coupling: Option<String>,
    /// Vacuum angle for numeric Lagrangian coefficients.
    #[arg(long, global = true, value_name = "P/R")]
    theta: Option<String>,
    /// Omit the timestamp and per-check durations so reports are byte-stable.
    #[arg(long, global = true)]
    no_timestamp: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Report destination; defaults to $QSUSY_OUT_DIR/<name>.<ext>, else stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a verification suite.
    Check {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Quantum-group data: representations, R-matrices, metric, quantum Lie algebra, Casimir ratios.
    Uq {
        #[arg(value_enum)]
        view: UqView,
    },
    /// Superspace expansions and Lagrangian verification.
    Super {
        #[command(subcommand)]
        action: SuperAction,
    },
    /// Evaluate an expression to normal form.
    Eval {
        expr: String,
        /// Gate the exit code on EXPR and this expression having equal normal forms.
        #[arg(long)]
        equals: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum SuperAction {
    Expand {
        #[arg(long, value_enum, default_value_t = FieldView::Chiral)]
        kind: FieldView,
    },
    Verify,
}

fn build_config(o: &Options) -> Result<SuiteConfig, ConfigError> {
    let two_j = o.spin.iter().map(|s| parse_spin(s)).collect::<Result<Vec<_>, _>>()?;
    let opt = |v: &Option<String>| v.as_deref().map(parse_rational).transpose();
    Ok(SuiteConfig {
        n_susy: o.n_susy,
        two_j,
        max_degree: o.max_degree,
        killing_hh: o.killing_hh,
        q_value: opt(&o.q_value)?,
        coupling: opt(&o.coupling)?,
        theta: opt(&o.theta)?,
    })
}

fn emit(mut report: Report, o: &Options) -> ExitCode {
    if o.no_timestamp {
        report.strip_timing();
    } else {
        report.stamp();
    }
    let target = o.output.clone().or_else(|| {
        std::env::var_os("QSUSY_OUT_DIR").map(|d| PathBuf::from(d).join(format!("{}.{}", report.suite, o.format.extension())))
    });
    match target {
        Some(path) => {
            if let Err(e) = report.write_to(o.format, &path) {
                eprintln!("error: {e}");
                return ExitCode::from(3);
            }
            eprintln!("report written to {}", path.display());
        }
        None => print!("{}", report.render(o.format)),
    }
    ExitCode::from(report.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = match build_config(&cli.opts) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let result = match &cli.command {
        Command::Check { suite } => run_suite(*suite, &cfg).map_err(EvalCommandError::from),
        Command::Uq { view } => uq_view(*view, &cfg).map_err(EvalCommandError::from),
        Command::Super { action: SuperAction::Expand { kind } } => superfield_view(*kind, &cfg).map_err(EvalCommandError::from),
        Command::Super { action: SuperAction::Verify } => run_suite(Suite::Superspace, &cfg).map_err(EvalCommandError::from),
        Command::Eval { expr, equals } => eval_report(expr, equals.as_deref(), &cfg),
    };
    match result {
        Ok(report) => emit(report, &cli.opts),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
