//! circdet: exact determinants of recurrence-generated circulant matrices.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use circdet_core::{Eq2Variant, Error as CoreError, FamilyTag, Rat, RecurrenceSpec};

#[derive(Parser)]
#[command(
    name = "circdet",
    version,
    about = "Exact determinants of circulant matrices built from linear recurrences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a determinant by one method or all applicable methods.
    Det(DetArgs),
    /// Run the deterministic cross-validation suites.
    Verify(VerifyArgs),
    /// Time the methods against each other.
    Bench(BenchArgs),
    /// Print the first terms of a recurrence.
    Seq(SeqArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Lemma,
    Bareiss,
    Spectral,
    Closed,
    All,
}

#[derive(Args)]
pub struct SpecArgs {
    /// Built-in family: fibonacci, lucas, jacobsthal, jacobsthal-lucas,
    /// tribonacci, geometric:RATIO or second-order:p,q,a,b.
    #[arg(long, conflicts_with_all = ["coeffs", "init"])]
    family: Option<String>,

    /// Recurrence coefficients c_1,...,c_m (integers or fractions like 3/2).
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        requires = "init"
    )]
    coeffs: Option<Vec<Rat>>,

    /// Initial terms a_1,...,a_m.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        requires = "coeffs"
    )]
    init: Option<Vec<Rat>>,
}

impl SpecArgs {
    /// Resolve into a validated spec plus the family tag when one was named.
    pub fn resolve(&self) -> Result<(RecurrenceSpec, Option<FamilyTag>), CliError> {
        match (&self.family, &self.coeffs, &self.init) {
            (Some(name), None, None) => {
                let tag = parse_family(name)?;
                let spec = tag.spec().map_err(CliError::Core)?;
                Ok((spec, Some(tag)))
            }
            (None, Some(coeffs), Some(init)) => {
                let spec =
                    RecurrenceSpec::new(coeffs.clone(), init.clone()).map_err(CliError::Core)?;
                Ok((spec, None))
            }
            _ => Err(CliError::Usage(
                "specify either --family NAME or both --coeffs and --init".into(),
            )),
        }
    }
}

fn parse_family(name: &str) -> Result<FamilyTag, CliError> {
    let lower = name.to_ascii_lowercase();
    if let Some(ratio) = lower.strip_prefix("geometric:") {
        let r: Rat = ratio.parse().map_err(|e| CliError::Usage(format!("{e}")))?;
        return Ok(FamilyTag::Geometric(r));
    }
    if let Some(params) = lower.strip_prefix("second-order:") {
        let parts: Vec<&str> = params.split(',').collect();
        if parts.len() != 4 {
            return Err(CliError::Usage(
                "second-order:p,q,a,b needs exactly four values".into(),
            ));
        }
        let mut vals = Vec::with_capacity(4);
        for p in parts {
            vals.push(
                p.parse::<Rat>()
                    .map_err(|e| CliError::Usage(format!("{e}")))?,
            );
        }
        let b = vals.pop().expect("4 values");
        let a = vals.pop().expect("3 values");
        let q = vals.pop().expect("2 values");
        let p = vals.pop().expect("1 value");
        return Ok(FamilyTag::SecondOrder { p, q, a, b });
    }
    match lower.as_str() {
        "fibonacci" => Ok(FamilyTag::Fibonacci),
        "lucas" => Ok(FamilyTag::Lucas),
        "jacobsthal" => Ok(FamilyTag::Jacobsthal),
        "jacobsthal-lucas" => Ok(FamilyTag::JacobsthalLucas),
        "tribonacci" => Ok(FamilyTag::Tribonacci),
        other => Err(CliError::Usage(format!(
            "unknown family `{other}` (expected fibonacci, lucas, jacobsthal, \
             jacobsthal-lucas, tribonacci, geometric:RATIO or second-order:p,q,a,b)"
        ))),
    }
}

#[derive(Args)]
pub struct DetArgs {
    #[command(flatten)]
    spec: SpecArgs,

    /// Matrix order.
    #[arg(long)]
    n: usize,

    /// Method to run; defaults to `all` for n <= 16, otherwise the closed
    /// form when one exists, else the elimination oracle.
    #[arg(long, value_enum)]
    method: Option<MethodArg>,

    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,

    /// Spectral precision in bits (>= 53).
    #[arg(long, default_value_t = 128)]
    precision: u32,

    /// Relative tolerance for the spectral crosscheck.
    #[arg(long = "rel-tol", default_value_t = 1e-9)]
    rel_tol: f64,
}

#[derive(Args)]
pub struct VerifyArgs {
    /// Random non-degenerate specs to test.
    #[arg(long, default_value_t = 200)]
    trials: usize,

    /// Largest matrix order in the randomized suites (capped at 16).
    #[arg(long = "n-max", default_value_t = 12)]
    n_max: usize,

    /// Largest recurrence order for random specs (capped at 5).
    #[arg(long = "m-max", default_value_t = 4)]
    m_max: usize,

    /// Only exercise the built-in families (skips the randomized suites).
    #[arg(long = "families-only", default_value_t = false)]
    families_only: bool,

    /// Which reading of the second-order formula to verify: `pa` matches the
    /// oracle, `qa` demonstrates the known mismatch.
    #[arg(long = "eq2-variant", default_value = "pa")]
    eq2_variant: Eq2Variant,

    /// Seed; flag overrides the CIRCDET_SEED environment variable, which
    /// overrides the default of 42.
    #[arg(long)]
    seed: Option<u64>,

    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,

    #[arg(long, default_value_t = 128)]
    precision: u32,

    #[arg(long = "rel-tol", default_value_t = 1e-9)]
    rel_tol: f64,
}

#[derive(Args)]
pub struct BenchArgs {
    #[command(flatten)]
    spec: SpecArgs,

    /// Orders to time, comma separated.
    #[arg(long = "n-list", value_delimiter = ',', required_unless_present = "n")]
    n_list: Option<Vec<usize>>,

    /// Single order (alternative to --n-list).
    #[arg(long)]
    n: Option<usize>,

    #[arg(long, value_enum, default_value = "all")]
    method: MethodArg,

    /// Repetitions per (method, n); the median is reported.
    #[arg(long, default_value_t = 5)]
    reps: usize,

    /// Refuse the reduction formula when (n-1)^(m-1) exceeds this.
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,

    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,

    #[arg(long, default_value_t = 128)]
    precision: u32,

    #[arg(long = "rel-tol", default_value_t = 1e-9)]
    rel_tol: f64,
}

#[derive(Args)]
pub struct SeqArgs {
    #[command(flatten)]
    spec: SpecArgs,

    /// How many terms to print.
    #[arg(long)]
    count: usize,

    #[arg(long, value_enum, default_value = "plain")]
    format: FormatArg,
}

/// CLI-level failures, each with a stable exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(CoreError),
    /// Cross-method disagreement (also used for verify failures).
    Mismatch(String),
    BudgetExceeded {
        n: usize,
        m: usize,
        cost: u64,
        budget: u64,
    },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Mismatch(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                CoreError::LengthMismatch { .. }
                | CoreError::EmptySpec
                | CoreError::ZeroLeadingCoefficient
                | CoreError::InvalidFamilyParams(_) => 3,
                CoreError::OrderTooSmall { .. } => 4,
                CoreError::DegenerateAlpha1 => 5,
                CoreError::StructureViolation { .. } => 6,
                CoreError::PrecisionTooLow(_) => 7,
                CoreError::DegenerateAlpha | CoreError::ZeroRatio => 8,
                CoreError::IndexOutOfRange { .. } => 9,
            },
            CliError::BudgetExceeded { .. } => 10,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Usage(m) => format!("usage error: {m}"),
            CliError::Core(e) => format!("error: {e}"),
            CliError::Mismatch(m) => format!("mismatch: {m}"),
            CliError::BudgetExceeded { n, m, cost, budget } => format!(
                "refused: reduction formula at n={n}, m={m} needs {cost} inner \
                 determinants, over the budget of {budget} (raise --budget to force)"
            ),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Det(args) => commands::cmd_det(&args),
        Command::Verify(args) => commands::cmd_verify(&args),
        Command::Bench(args) => commands::cmd_bench(&args),
        Command::Seq(args) => commands::cmd_seq(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("circdet: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
