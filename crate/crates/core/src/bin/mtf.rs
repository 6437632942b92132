//! `mtf`: command-line front end for the minitwistor invariants.
//!
//! Exit codes: 0 on success, 2 for invalid input, 3 when an internal
//! invariant fails.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use minitwistor::catalog::{marked_classes_cached, u1_classes_from, U1Relation};
use minitwistor::conic_bundle::schedule_from;
use minitwistor::report::{
    render_catalog, render_deform_check, render_delta, render_equation, render_family,
    render_fibonacci, render_schedule, AnalyzeReport, Format,
};
use minitwistor::tables::{delta_table, fibonacci_table, involutive_table, lebrun_table};
use minitwistor::{ConformalInvariant, Error, MarkedSequence, MinitwistorModel, Result, SequenceInvariants, Sign};

#[derive(Parser, Debug)]
#[command(name = "mtf", version, about = "Invariants of circle subgroups of torus actions on nCP^2")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,

    /// Conformal invariants: the n interior values, or all n+2 from 0 to inf.
    #[arg(long, global = true)]
    lambda: Option<String>,

    /// Sign of the leading coefficient, +1 or -1.
    #[arg(long = "c", global = true, allow_hyphen_values = true, default_value = "+1")]
    c: String,

    /// Directory for catalog caches.
    #[arg(long, global = true, env = "MTF_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Latex,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Latex => Format::Latex,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassesArg {
    Marked,
    U1,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RelationArg {
    Blocks,
    Collapsed,
}

impl From<RelationArg> for U1Relation {
    fn from(r: RelationArg) -> U1Relation {
        match r {
            RelationArg::Blocks => U1Relation::BlockMultiset,
            RelationArg::Collapsed => U1Relation::CollapsedWord,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableArg {
    Delta,
    Fibonacci,
    Lebrun,
    Involutive,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full report for one marked sequence.
    Analyze {
        #[arg(long)]
        seq: String,
    },
    /// The defining equation of the minitwistor space.
    Equation {
        #[arg(long)]
        seq: String,
    },
    /// All marked sequences for n, grouped by reversal or by circle action.
    Catalog {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = ClassesArg::Marked)]
        classes: ClassesArg,
        #[arg(long, value_enum, default_value_t = RelationArg::Blocks)]
        relation: RelationArg,
    },
    /// Regenerate a reference table and check it against the stored copy.
    Tables {
        #[arg(value_enum)]
        which: TableArg,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Circle-action relation for the delta table.
        #[arg(long, value_enum, default_value_t = RelationArg::Blocks)]
        relation: RelationArg,
    },
    /// Deformability criterion and deformed discriminant.
    DeformCheck {
        #[arg(long)]
        seq: String,
    },
    /// Blow-up schedule eliminating the base locus near C_1.
    Schedule {
        #[arg(long)]
        seq: String,
    },
}

fn lambdas_for(cli: &Cli, n: usize) -> Result<Option<ConformalInvariant>> {
    cli.lambda
        .as_deref()
        .map(|s| ConformalInvariant::parse(n, s))
        .transpose()
}

fn run(cli: &Cli) -> Result<String> {
    let format: Format = cli.format.into();
    let c: Sign = cli.c.parse()?;
    match &cli.command {
        Command::Analyze { seq } => {
            let seq: MarkedSequence = seq.parse()?;
            let lam = lambdas_for(cli, seq.n())?;
            AnalyzeReport::build(&seq, lam.as_ref(), c)?.render(format)
        }
        Command::Equation { seq } => {
            let seq: MarkedSequence = seq.parse()?;
            let lam = lambdas_for(cli, seq.n())?;
            render_equation(&MinitwistorModel::for_sequence(&seq, lam.as_ref(), c)?, format)
        }
        Command::Catalog { n, classes, relation } => {
            let rel: U1Relation = (*relation).into();
            let rel_name = match relation {
                RelationArg::Blocks => "blocks",
                RelationArg::Collapsed => "collapsed",
            };
            let marked = marked_classes_cached(*n, cli.cache_dir.as_deref())?;
            match classes {
                ClassesArg::Marked => render_catalog(*n, "marked", rel_name, &marked, format),
                ClassesArg::U1 => {
                    let (u1, _) = u1_classes_from(&marked, rel)?;
                    render_catalog(*n, "u1", rel_name, &u1, format)
                }
            }
        }
        Command::Tables { which, n_max, n, relation } => match which {
            TableArg::Delta => render_delta(&delta_table(n_max.or(*n).unwrap_or(5), (*relation).into())?, format),
            TableArg::Fibonacci => render_fibonacci(&fibonacci_table(n_max.or(*n).unwrap_or(7))?, format),
            TableArg::Lebrun => {
                let n = n.or(*n_max).unwrap_or(4);
                render_family("lebrun", n, &lebrun_table(n)?, format)
            }
            TableArg::Involutive => {
                let n = n.or(*n_max).unwrap_or(7);
                render_family("involutive", n, &involutive_table(n)?, format)
            }
        },
        Command::DeformCheck { seq } => {
            let inv = SequenceInvariants::compute(&seq.parse()?)?;
            render_deform_check(&inv, format)
        }
        Command::Schedule { seq } => {
            let inv = SequenceInvariants::compute(&seq.parse()?)?;
            render_schedule(&schedule_from(&inv)?, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Invariant(_) | Error::Json(_) => 3,
                Error::Io(_) => 2,
                _ if e.is_input_error() => 2,
                _ => 3,
            };
            ExitCode::from(code)
        }
    }
}
