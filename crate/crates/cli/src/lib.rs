//! `semirep`: Green's relations and irreducible representations of finite
//! semigroups from the command line.
//!
//! Reports go to standard output as JSON, a short summary to standard error.
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 internal
//! inconsistency.

pub mod input;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use semirep_core::cmp::{left_schutzenberger, right_schutzenberger};
use semirep_core::green::jclass_data;
use semirep_core::{all_irreducibles, apex_of, chop, green_structure, Error, Field, Module, SearchConfig, Semigroup};
use serde::Serialize;

use crate::input::InputError;

#[derive(Debug, Parser)]
#[command(name = "semirep", version, about = "Representations of finite semigroups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Right,
    Left,
}

#[derive(Debug, clap::Args)]
pub struct FieldArgs {
    /// Q or Fp:<prime>
    #[arg(long, value_parser = parse_field)]
    pub field: Field,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Green's relations, J-order and sandwich matrices
    Analyze { file: PathBuf },
    /// All simple modules with their action matrices
    Irreps {
        file: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Schützenberger monomial representation of one regular J-class
    Schutz {
        file: PathBuf,
        #[arg(long)]
        jclass: usize,
        #[arg(long, value_enum, default_value = "right")]
        side: SideArg,
    },
    /// Composition factors of the regular module
    Chop {
        file: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
    },
    /// Every invariant check, one line each
    Verify {
        file: PathBuf,
        #[command(flatten)]
        field: FieldArgs,
    },
}

fn parse_field(text: &str) -> Result<Field, String> {
    text.parse::<Field>().map_err(|e| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Input(InputError),
    Core(Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Failure {
        Failure::Input(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Input(_) => 2,
            Failure::Core(e) if e.is_input_error() => 2,
            Failure::Core(e) if e.is_internal() => 3,
            Failure::Core(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Input(e) => format!("input error: {e}"),
            Failure::Core(e) if e.is_input_error() => format!("input error: {e}"),
            Failure::Core(e) => format!("error: {e}"),
        }
    }
}

struct Outcome {
    json: String,
    summary: Vec<String>,
    code: i32,
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn analyze(s: &Semigroup) -> Result<Outcome, Failure> {
    let green = green_structure(s)?;
    let data = green
        .regular_classes()
        .into_iter()
        .map(|j| jclass_data(s, &green, j))
        .collect::<Result<Vec<_>, _>>()?;
    let a = report::analysis(s, &green, &data);
    let summary = vec![format!(
        "{} elements, {} J-classes ({} regular), {} idempotents",
        s.size(),
        green.j_class_count(),
        data.len(),
        green.idempotents.len()
    )];
    Ok(Outcome {
        json: to_json(&a),
        summary,
        code: 0,
    })
}

fn irreps(s: &Semigroup, args: &FieldArgs) -> Result<Outcome, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let c = all_irreducibles(s, args.field, &SearchConfig::default(), &mut rng)?;
    let r = report::irreps(&c, args.seed);
    let dims: Vec<String> = c.reports.iter().map(|r| r.simple_dim.to_string()).collect();
    let summary = vec![format!(
        "{} simple modules over {} (dimensions {})",
        c.reports.len(),
        args.field,
        dims.join(", ")
    )];
    Ok(Outcome {
        json: to_json(&r),
        summary,
        code: 0,
    })
}

fn schutz(s: &Semigroup, j: usize, side: SideArg) -> Result<Outcome, Failure> {
    let green = green_structure(s)?;
    if j >= green.j_class_count() {
        return Err(Error::UnknownJClass(j).into());
    }
    let jd = jclass_data(s, &green, j)?;
    let rep = match side {
        SideArg::Right => right_schutzenberger(s, &jd)?,
        SideArg::Left => left_schutzenberger(s, &jd)?,
    };
    let summary = vec![format!("J-class {j}: {0}x{0} monomial matrices over G of order {1}", rep.size, jd.group.len())];
    Ok(Outcome {
        json: to_json(&report::schutz(&jd, &rep)),
        summary,
        code: 0,
    })
}

fn chop_regular(s: &Semigroup, args: &FieldArgs) -> Result<Outcome, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let green = green_structure(s)?;
    let regular = Module::regular(s, args.field);
    let factors = chop(&regular, &SearchConfig::default(), &mut rng)?;
    let apexes = factors
        .iter()
        .map(|f| if f.annihilated { Ok(None) } else { apex_of(&f.module, s, &green).map(Some) })
        .collect::<Result<Vec<_>, _>>()?;
    let r = report::chop(args.field.to_string(), args.seed, regular.dim(), &factors, &apexes);
    let summary = vec![format!(
        "{} distinct composition factors of the {}-dimensional regular module over {}",
        r.distinct_factors,
        regular.dim(),
        args.field
    )];
    Ok(Outcome {
        json: to_json(&r),
        summary,
        code: 0,
    })
}

fn verify(s: &Semigroup, args: &FieldArgs) -> Result<Outcome, Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let checks = semirep_core::verify::verify(s, args.field, &SearchConfig::default(), &mut rng)?;
    let passed = checks.iter().all(|c| c.passed);
    let summary = checks
        .iter()
        .map(|c| {
            let verdict = if c.passed { "PASS" } else { "FAIL" };
            if c.detail.is_empty() {
                format!("{verdict} {}", c.name)
            } else {
                format!("{verdict} {} ({})", c.name, c.detail)
            }
        })
        .collect();
    let r = report::Verify {
        field: args.field.to_string(),
        seed: args.seed,
        passed,
        checks: checks.iter().map(report::CheckRef).collect(),
    };
    Ok(Outcome {
        json: to_json(&r),
        summary,
        code: if passed { 0 } else { 1 },
    })
}

fn dispatch(cli: &Cli) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Analyze { file } => analyze(&input::load(file)?),
        Command::Irreps { file, field } => irreps(&input::load(file)?, field),
        Command::Schutz { file, jclass, side } => schutz(&input::load(file)?, *jclass, *side),
        Command::Chop { file, field } => chop_regular(&input::load(file)?, field),
        Command::Verify { file, field } => verify(&input::load(file)?, field),
    }
}

/// Runs one command line (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => {
            let _ = writeln!(out, "{}", outcome.json);
            for line in outcome.summary {
                let _ = writeln!(err, "{line}");
            }
            outcome.code
        }
        Err(f) => {
            let _ = writeln!(err, "{}", f.message());
            f.exit_code()
        }
    }
}
