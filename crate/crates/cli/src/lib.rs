//! Library side of the `intseq` command-line tool.
//!
//! `main` only parses arguments and forwards to [`execute`]; everything else
//! lives here so tests can drive commands without spawning a process.

pub mod bench;
pub mod report;

use clap::{Args, Parser, Subcommand};
use intseq::{
    dominant_root, enumerate_real_roots, root_via_shift, DriverError, DriverOptions, Family, Mode,
    Poly, PolyError, RootEstimate, SequenceError, Shift, Status, Vector,
};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::bench::{worked_examples, run_bench, BenchCase};
use crate::report::{Document, EstimateRecord, Row};

pub const EXIT_OK: i32 = 0;
pub const EXIT_TIE: i32 = 2;
pub const EXIT_MAX_ITERS: i32 = 3;
pub const EXIT_DEGENERATE_SEED: i32 = 4;
pub const EXIT_ESTIMATOR_MISMATCH: i32 = 5;
pub const EXIT_USAGE: i32 = 64;

/// Extra significant digits the driver stabilizes beyond the places printed.
pub(crate) const GUARD_DIGITS: usize = 3;

#[derive(Debug, Parser)]
#[command(
    name = "intseq",
    version,
    about = "Real roots of monic integer polynomials from integer sequences"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the integer sequences and their cross ratios.
    Sequences {
        #[command(flatten)]
        common: CommonArgs,
        /// Affine shift `a,b` applied to the companion matrix (aI + bR).
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
        /// Starting vector `s1,...,sm` (default: first basis vector).
        #[arg(long, allow_hyphen_values = true)]
        seed: Option<String>,
        /// Last index to print.
        #[arg(long, default_value_t = 10)]
        steps: usize,
    },
    /// Estimate the root made dominant by the shift (default: no shift).
    Root {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<String>,
    },
    /// List every verified real root, ascending.
    Roots {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Time the integer pipeline against a floating-point solver.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Coefficients including the leading 1, e.g. `1,2,-1` for x^2 + 2x - 1.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
    /// Decimal places for printed ratios and roots.
    #[arg(long, default_value_t = 12)]
    pub digits: usize,
    #[arg(long, default_value_t = 10_000)]
    pub max_iters: usize,
    /// Emit a JSON document instead of a table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, allow_hyphen_values = true, required_unless_present = "corpus")]
    pub poly: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub shift: Option<String>,
    /// Built-in corpus; `paper` runs the three worked examples.
    #[arg(long, value_parser = ["paper"], conflicts_with = "poly")]
    pub corpus: Option<String>,
    #[arg(long, default_value_t = 12)]
    pub digits: usize,
    /// Timed repetitions per method; the median is reported.
    #[arg(long, default_value_t = 5)]
    pub runs: usize,
    #[arg(long, default_value_t = 10_000)]
    pub max_iters: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot parse {what} `{input}`: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Driver(#[from] DriverError),
    #[error("{0}")]
    Config(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Driver(DriverError::EstimatorMismatch { .. }) => EXIT_ESTIMATOR_MISMATCH,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Sequences,
    Root,
    Roots,
    Bench,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Output {
    Table,
    Json,
}

/// A fully parsed and validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: CommandKind,
    /// Empty for `bench --corpus`.
    pub polynomials: Vec<Poly>,
    pub shift: Option<Shift>,
    pub seed: Option<Vector>,
    pub steps: usize,
    pub digits: usize,
    pub output: Output,
    pub max_iters: usize,
    pub runs: usize,
}

fn parse_list(what: &'static str, input: &str) -> Result<Vec<BigInt>, CliError> {
    input
        .split(',')
        .map(|t| {
            t.trim().parse::<BigInt>().map_err(|e| CliError::Parse {
                what,
                input: input.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

pub fn parse_poly(input: &str) -> Result<Poly, CliError> {
    Ok(Poly::from_coefficients(
        &parse_list("polynomial", input)?,
        true,
    )?)
}

pub fn parse_shift(input: &str) -> Result<Shift, CliError> {
    match parse_list("shift", input)?.as_slice() {
        [a, b] => Ok(Shift::new(a.clone(), b.clone())?),
        _ => Err(CliError::Parse {
            what: "shift",
            input: input.to_string(),
            reason: "expected exactly two integers `a,b`".to_string(),
        }),
    }
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let output = |json: bool| if json { Output::Json } else { Output::Table };
        let shift = |s: &Option<String>| s.as_deref().map(parse_shift).transpose();
        let base = |command, common: &CommonArgs| -> Result<RunConfig, CliError> {
            Ok(RunConfig {
                command,
                polynomials: vec![parse_poly(&common.poly)?],
                shift: None,
                seed: None,
                steps: 0,
                digits: common.digits,
                output: output(common.json),
                max_iters: common.max_iters,
                runs: 1,
            })
        };
        let cfg = match &cli.command {
            Command::Sequences {
                common,
                shift: s,
                seed,
                steps,
            } => {
                let mut cfg = base(CommandKind::Sequences, common)?;
                cfg.shift = shift(s)?;
                cfg.steps = *steps;
                if let Some(seed) = seed {
                    cfg.seed = Some(Vector::new(parse_list("seed", seed)?));
                }
                cfg
            }
            Command::Root { common, shift: s } => {
                let mut cfg = base(CommandKind::Root, common)?;
                cfg.shift = shift(s)?;
                cfg
            }
            Command::Roots { common } => base(CommandKind::Roots, common)?,
            Command::Bench(b) => RunConfig {
                command: CommandKind::Bench,
                polynomials: b
                    .poly
                    .as_deref()
                    .map(parse_poly)
                    .transpose()?
                    .into_iter()
                    .collect(),
                shift: shift(&b.shift)?,
                seed: None,
                steps: 0,
                digits: b.digits,
                output: output(b.json),
                max_iters: b.max_iters,
                runs: b.runs,
            },
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.max_iters == 0 {
            return Err(CliError::Config("--max-iters must be positive".into()));
        }
        if self.command == CommandKind::Bench && self.runs == 0 {
            return Err(CliError::Config("--runs must be positive".into()));
        }
        if let (Some(seed), Some(p)) = (&self.seed, self.polynomials.first()) {
            if seed.dim() != p.degree() {
                return Err(CliError::Config(format!(
                    "seed has {} components but the polynomial has degree {}",
                    seed.dim(),
                    p.degree()
                )));
            }
        }
        Ok(())
    }

    fn driver_options(&self) -> DriverOptions {
        DriverOptions {
            target_digits: self.digits + GUARD_DIGITS,
            max_iters: self.max_iters,
            ..Default::default()
        }
    }

    fn poly(&self) -> &Poly {
        &self.polynomials[0]
    }

    fn document(&self, command: &str) -> Document {
        Document {
            command: command.to_string(),
            polynomial: self.poly().to_string(),
            shift: self.shift.as_ref().map(ToString::to_string),
            seed: None,
            rows: Vec::new(),
            estimates: Vec::new(),
        }
    }
}

/// Text to print and the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub exit_code: i32,
    /// The text is a diagnostic rather than a result.
    pub is_error: bool,
}

fn record(e: &RootEstimate, places: usize) -> EstimateRecord {
    EstimateRecord {
        value: e.decimal(places),
        exact: format!("{}/{}", e.value.numer(), e.value.denom()),
        digits: e.decimal_digits,
        status: e.status.to_string(),
        iterations: e.iterations,
        shift: e.shift_used.to_string(),
        inverted: e.inverted,
    }
}

fn status_exit(status: Status) -> i32 {
    match status {
        Status::Converged => EXIT_OK,
        Status::TieDetected => EXIT_TIE,
        Status::MaxItersExceeded => EXIT_MAX_ITERS,
        Status::DegenerateSeed => EXIT_DEGENERATE_SEED,
    }
}

fn emit(cfg: &RunConfig, doc: &Document, exit_code: i32) -> Outcome {
    let text = match cfg.output {
        Output::Table => doc.render_table(),
        Output::Json => doc.to_json() + "\n",
    };
    Outcome {
        text,
        exit_code,
        is_error: false,
    }
}

/// Builds the sequences document: rows `0..=steps` with exact terms and
/// cross ratios rendered to `digits` places (`inf` on a zero denominator).
pub fn sequences_document(cfg: &RunConfig) -> Result<Document, CliError> {
    let p = cfg.poly();
    let seed = cfg
        .seed
        .clone()
        .unwrap_or_else(|| Vector::basis(p.degree()));
    let shift = cfg.shift.clone().unwrap_or_else(Shift::identity);
    let mut family = Family::shifted(p, &shift, seed.clone(), Mode::Exact)?.retain_history();
    while family.index() < cfg.steps {
        family.step();
    }
    let m = p.degree();
    let mut rows = Vec::with_capacity(cfg.steps + 1);
    for j in 0..=cfg.steps {
        let terms = (1..=m)
            .map(|i| family.term(i, j).map(ToString::to_string))
            .collect::<Result<Vec<_>, _>>()?;
        let ratios = (1..m)
            .map(|i| match family.cross_ratio(i, j) {
                Ok(c) => Ok(c.decimal(cfg.digits)),
                Err(SequenceError::ZeroDenominator) => Ok("inf".to_string()),
                Err(e) => Err(e),
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(Row { j, terms, ratios });
    }
    let mut doc = cfg.document("sequences");
    doc.seed = Some(seed.components().iter().map(ToString::to_string).collect());
    doc.rows = rows;
    Ok(doc)
}

/// One root: the dominant one, or the one the shift makes dominant. Zero
/// roots are deflated before an unshifted run.
pub fn root_estimate(cfg: &RunConfig) -> Result<RootEstimate, CliError> {
    let opts = cfg.driver_options();
    if let Some(shift) = &cfg.shift {
        return Ok(root_via_shift(cfg.poly(), shift, &opts)?);
    }
    let mut p = cfg.poly().clone();
    while p.constant_term().is_zero() && p.degree() > 1 {
        p = p.deflate_zero_root()?;
    }
    if p.constant_term().is_zero() {
        // Only x itself is left: every root was zero.
        return Ok(root_via_shift(&p, &Shift::identity(), &opts)?);
    }
    Ok(dominant_root(&p, &opts)?)
}

pub fn execute(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cfg.command {
        CommandKind::Sequences => Ok(emit(cfg, &sequences_document(cfg)?, EXIT_OK)),
        CommandKind::Root => {
            let e = root_estimate(cfg)?;
            let mut doc = cfg.document("root");
            doc.estimates.push(record(&e, cfg.digits));
            Ok(emit(cfg, &doc, status_exit(e.status)))
        }
        CommandKind::Roots => {
            let roots = enumerate_real_roots(cfg.poly(), &cfg.driver_options());
            let mut doc = cfg.document("roots");
            doc.estimates = roots.iter().map(|e| record(e, cfg.digits)).collect();
            Ok(emit(cfg, &doc, EXIT_OK))
        }
        CommandKind::Bench => {
            let cases = if cfg.polynomials.is_empty() {
                worked_examples()
            } else {
                let shift = cfg.shift.clone().unwrap_or_else(Shift::identity);
                vec![BenchCase {
                    poly: cfg.poly().clone(),
                    shift,
                }]
            };
            let report = run_bench(&cases, cfg.digits, cfg.runs, cfg.max_iters);
            let text = match cfg.output {
                Output::Table => report.render_table(),
                Output::Json => {
                    serde_json::to_string_pretty(&report).expect("report is plain data") + "\n"
                }
            };
            Ok(Outcome {
                text,
                exit_code: EXIT_OK,
                is_error: false,
            })
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let is_error = e.use_stderr();
            let exit_code = if is_error { EXIT_USAGE } else { EXIT_OK };
            return Outcome {
                text: e.render().to_string(),
                exit_code,
                is_error,
            };
        }
    };
    match RunConfig::from_cli(&cli).and_then(|cfg| execute(&cfg)) {
        Ok(outcome) => outcome,
        Err(e) => Outcome {
            text: format!("error: {e}\n"),
            exit_code: e.exit_code(),
            is_error: true,
        },
    }
}
