//! Command line front end for subgroup permutation codes.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use chebcode::genfile::{self, GenFileError};
use chebcode::sweep::{self, SweepConfig};
use chebcode_core::camwu::counterexample_demo;
use chebcode_core::gadgets::InstanceError;
use chebcode_core::group::{schreier_sims, GeneratorSet, GroupError};
use chebcode_core::minweight::{
    min_nonzero_weight_with_guards, Guards, Method, MinWeightError,
};
use chebcode_core::naesat::{parse_dimacs, solve_nae_bruteforce, CnfFormula, SearchLimitError};
use chebcode_core::perm::ParseError;
use chebcode_core::reduction::{build_generators, VerifyError};
use chebcode_core::Permutation;

#[derive(Parser)]
#[command(
    name = "chebcode",
    about = "Subgroup permutation codes under the Chebyshev metric",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Turn a DIMACS CNF formula into subgroup generators.
    Reduce {
        /// DIMACS CNF input file.
        input: PathBuf,
        /// Write the generator file here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact minimum nonzero weight of the group in a generator file.
    Minweight {
        /// Generator file.
        input: PathBuf,
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: Method,
        /// Override the enumeration-size guard.
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Is there a non-identity element of weight at most the bound?
    Decide {
        /// Generator file.
        input: PathBuf,
        #[arg(long)]
        bound: u32,
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: Method,
        /// Override the enumeration-size guard.
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Test membership of a permutation in the group of a generator file.
    Member {
        /// Generator file.
        input: PathBuf,
        /// Element in cycle notation, e.g. "(1,3,2)(5,6)".
        element: String,
    },
    /// Order of the group in a generator file.
    Order {
        /// Generator file.
        input: PathBuf,
    },
    /// Exact not-all-equal satisfiability of a DIMACS CNF formula.
    Naesat {
        /// DIMACS CNF input file.
        input: PathBuf,
    },
    /// Cross-check satisfiability against group minimum weight on seeded
    /// random formulas.
    VerifyTheorem {
        /// Largest variable count to sample (2..=12).
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(2..=12))]
        vars: u32,
        /// Largest clause count to sample.
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        clauses: u32,
        #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u32).range(1..))]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Walk through the counterexample to the clause-block reduction.
    CamwuDemo,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: chebcode_core::minweight::MethodParseError| e.to_string())
}

/// Failures mapped onto exit codes: 2 parse/format, 3 invalid instance,
/// 4 guard exceeded.
enum CliError {
    Parse(String),
    Instance(String),
    Guard(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Instance(_) => 3,
            CliError::Guard(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Instance(m) | CliError::Guard(m) => m,
        }
    }
}

impl From<chebcode_core::naesat::DimacsError> for CliError {
    fn from(e: chebcode_core::naesat::DimacsError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<GenFileError> for CliError {
    fn from(e: GenFileError) -> Self {
        match e {
            GenFileError::Group(g) => g.into(),
            other => CliError::Parse(other.to_string()),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded { .. } | GroupError::TooManyGenerators(_) => {
                CliError::Guard(e.to_string())
            }
            other => CliError::Instance(other.to_string()),
        }
    }
}

impl From<InstanceError> for CliError {
    fn from(e: InstanceError) -> Self {
        CliError::Instance(e.to_string())
    }
}

impl From<MinWeightError> for CliError {
    fn from(e: MinWeightError) -> Self {
        match e {
            MinWeightError::Group(g) => g.into(),
            MinWeightError::TooManyGenerators { .. } | MinWeightError::OrderTooLarge { .. } => {
                CliError::Guard(e.to_string())
            }
        }
    }
}

impl From<SearchLimitError> for CliError {
    fn from(e: SearchLimitError) -> Self {
        CliError::Guard(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Instance(i) => i.into(),
            VerifyError::TooManyVariables { .. } => CliError::Guard(e.to_string()),
        }
    }
}

/// Writes a line to stdout, exiting quietly if the reading end has gone
/// away (e.g. piped into `head`). Stdout is line buffered, so every
/// completed line is already delivered by the time we bail.
fn emit(args: std::fmt::Arguments) {
    use std::io::Write;
    if std::io::stdout().write_fmt(args).is_err() {
        std::process::exit(0);
    }
}

macro_rules! outln {
    ($($arg:tt)*) => { emit(format_args!("{}\n", format_args!($($arg)*))) };
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn read_formula(path: &Path) -> Result<CnfFormula, CliError> {
    Ok(parse_dimacs(&read_file(path)?)?)
}

fn read_generators(path: &Path) -> Result<GeneratorSet, CliError> {
    let gs = genfile::parse(&read_file(path)?)?;
    if gs.dropped_identities() > 0 {
        eprintln!(
            "warning: dropped {} identity generator(s) from {}",
            gs.dropped_identities(),
            path.display()
        );
    }
    Ok(gs)
}

fn guards_with(cap: Option<u64>) -> Guards {
    let mut guards = Guards::default();
    if let Some(max_order) = cap {
        guards.max_order = max_order;
    }
    guards
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Reduce { input, output } => {
            let formula = read_formula(&input)?;
            let reduction = build_generators(&formula)?;
            let text = genfile::render_reduction(&reduction);
            match output {
                Some(path) => {
                    std::fs::write(&path, &text)
                        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
                    outln!("degree={}", reduction.degree());
                    outln!("generators={}", reduction.generators().len());
                    outln!("output={}", path.display());
                }
                None => emit(format_args!("{text}")),
            }
        }
        Command::Minweight { input, method, cap } => {
            let gs = read_generators(&input)?;
            match min_nonzero_weight_with_guards(&gs, method, &guards_with(cap))? {
                Some(result) => {
                    outln!("minweight={}", result.weight);
                    outln!("witness={}", result.witness);
                    outln!("method={}", result.method);
                }
                None => {
                    outln!("minweight=none");
                    outln!("witness=none");
                }
            }
        }
        Command::Decide { input, bound, method, cap } => {
            let gs = read_generators(&input)?;
            let min = min_nonzero_weight_with_guards(&gs, method, &guards_with(cap))?;
            let yes = min.map(|r| r.weight.0 <= bound).unwrap_or(false);
            outln!("{}", if yes { "YES" } else { "NO" });
        }
        Command::Member { input, element } => {
            let gs = read_generators(&input)?;
            let p: Permutation = element.parse()?;
            let chain = schreier_sims(&gs);
            outln!("member={}", chain.contains(&p)?);
        }
        Command::Order { input } => {
            let gs = read_generators(&input)?;
            outln!("order={}", schreier_sims(&gs).order());
        }
        Command::Naesat { input } => {
            let formula = read_formula(&input)?;
            match solve_nae_bruteforce(&formula)? {
                Some(assignment) => {
                    outln!("SAT");
                    outln!("assignment={assignment}");
                }
                None => outln!("UNSAT"),
            }
        }
        Command::VerifyTheorem { vars, clauses, trials, seed } => {
            let config = SweepConfig { max_vars: vars, max_clauses: clauses, trials, seed };
            let outcomes = sweep::run(&config)?;
            let mut consistent = 0u32;
            for t in &outcomes {
                if t.report.consistent {
                    consistent += 1;
                }
                outln!(
                    "trial={} vars={} clauses={} nae={} minweight={} expected={} consistent={}",
                    t.index,
                    t.formula.num_vars(),
                    t.formula.num_clauses(),
                    if t.report.nae_satisfiable { "sat" } else { "unsat" },
                    t.report.min_weight,
                    t.report.expected_weight,
                    t.report.consistent
                );
            }
            outln!("consistent={consistent}/{}", outcomes.len());
        }
        Command::CamwuDemo => {
            let report = counterexample_demo();
            outln!("formula={}", report.formula);
            outln!("degree={}", report.degree);
            outln!(
                "nae={}",
                if report.nae_satisfiable { "sat" } else { "unsat" }
            );
            outln!("element=gc g1 g1'");
            outln!("element_cycles={}", report.element);
            outln!("matches_shifted_product={}", report.matches_shifted_product);
            outln!("element_weight={}", report.element_weight);
            outln!("element_in_group={}", report.element_in_group);
            outln!("group_order={}", report.group_order);
            outln!("group_min_weight={}", report.group_min_weight);
            outln!("group_min_witness={}", report.group_min_witness);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}
