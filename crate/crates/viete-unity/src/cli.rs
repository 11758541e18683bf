//! Command-line front end: every estimator and report as a subcommand with
//! reproducible, scriptable output. Data goes to stdout, diagnostics to
//! stderr; exit codes are 0 (success), 1 (computation or check failure) and
//! 2 (usage error).

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use crate::checks::run_all_checks;
use crate::error::Result;
use crate::estimators::{arctan_sum_quarter_pi, pi_from_unity, ratio_b, viete_product_pi};
use crate::precision::{BigReal, PrecisionContext, RenderMode};
use crate::report::{
    emit, figure1_series, precision_study, render_ck_expression, table1, OutputFormat, ReportRow,
    MAX_EXPRESSION_K,
};
use crate::sequence::EvalMode;

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormatArg {
    Csv,
    Tsv,
    Markdown,
}

impl From<FormatArg> for OutputFormat {
    fn from(value: FormatArg) -> Self {
        match value {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Tsv => OutputFormat::Tsv,
            FormatArg::Markdown => OutputFormat::Markdown,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    Naive,
    Stable,
}

impl From<ModeArg> for EvalMode {
    fn from(value: ModeArg) -> Self {
        match value {
            ModeArg::Naive => EvalMode::Naive,
            ModeArg::Stable => EvalMode::Stable,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodArg {
    Viete,
    ArctanSum,
    Unity,
}

/// Parsed and validated command line.
#[derive(Parser, Debug)]
#[command(
    name = "viete",
    version,
    about = "Nested-radical recurrences, cancellation-safe evaluation, and pi estimators at arbitrary precision"
)]
pub struct CliConfig {
    /// Working mantissa precision in bits (minimum 16).
    #[arg(long, global = true, default_value_t = 256)]
    pub precision_bits: u32,

    /// Output format for tabular subcommands.
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,

    /// Residual evaluation for table and series: the stable recurrence or
    /// the literal subtraction.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Stable)]
    pub mode: ModeArg,

    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Subcommand, Debug)]
pub enum CliCommand {
    /// Convergence rows: c_k, eps_k and the scaled error 2^{k+1} eps_k.
    Table {
        #[arg(long, default_value_t = 4)]
        k_min: u32,
        #[arg(long, default_value_t = 15)]
        k_max: u32,
        /// Fractional digits, truncated.
        #[arg(long, default_value_t = 20)]
        digits: usize,
    },
    /// Evolution of a_k, b_k and c_k for k = 1..=K.
    Series {
        #[arg(long = "K")]
        count: u32,
        #[arg(long, default_value_t = 20)]
        digits: usize,
    },
    /// One pi estimate: the product (--K), the arctangent sum (--K), or the
    /// scaled unity error term (--k, --m).
    Pi {
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long = "K")]
        depth: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value_t = 20)]
        digits: usize,
    },
    /// Successive ratio b_{k+1} / b_k.
    Ratio {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 20)]
        digits: usize,
    },
    /// Naive-vs-stable relative errors of b_k against a 4x-precision oracle.
    Study {
        #[arg(long = "K")]
        count: u32,
        /// Comma-separated working precisions, each at least 16.
        #[arg(long, value_delimiter = ',', required = true)]
        bits: Vec<u32>,
    },
    /// Closed expression for c_k over square roots of twos.
    Expr {
        #[arg(long)]
        k: u32,
    },
    /// Run the bundled invariant suite; exits 0 only if every check passes.
    Check,
}

fn usage_error(message: String) -> clap::Error {
    CliConfig::command().error(ErrorKind::ValueValidation, message)
}

/// Parse and validate an argument vector.
pub fn parse_args<I, T>(argv: I) -> std::result::Result<CliConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = CliConfig::try_parse_from(argv)?;
    validate(&config)?;
    Ok(config)
}

fn check_digits(digits: usize, precision_bits: u32) -> std::result::Result<(), clap::Error> {
    if digits < 1 {
        return Err(usage_error("--digits must be at least 1".into()));
    }
    let ctx = PrecisionContext::new(precision_bits)
        .expect("precision already validated against the minimum");
    if BigReal::one()
        .to_decimal(digits, RenderMode::Truncate, &ctx)
        .is_err()
    {
        return Err(usage_error(format!(
            "insufficient precision for requested digits: {digits} digits need more than {precision_bits} bits"
        )));
    }
    Ok(())
}

fn validate(config: &CliConfig) -> std::result::Result<(), clap::Error> {
    if config.precision_bits < PrecisionContext::MIN_PRECISION_BITS {
        return Err(usage_error(format!(
            "--precision-bits must be at least {}",
            PrecisionContext::MIN_PRECISION_BITS
        )));
    }
    match &config.command {
        CliCommand::Table {
            k_min,
            k_max,
            digits,
        } => {
            if *k_min < 1 {
                return Err(usage_error("--k-min must be at least 1".into()));
            }
            if k_max < k_min {
                return Err(usage_error("--k-max must be at least --k-min".into()));
            }
            check_digits(*digits, config.precision_bits)?;
        }
        CliCommand::Series { count, digits } => {
            if *count < 1 {
                return Err(usage_error("--K must be at least 1".into()));
            }
            check_digits(*digits, config.precision_bits)?;
        }
        CliCommand::Pi {
            method,
            depth,
            k,
            m,
            digits,
        } => {
            match method {
                MethodArg::Unity => {
                    if k.is_none() {
                        return Err(usage_error("--method unity requires --k".into()));
                    }
                    if depth.is_some() {
                        return Err(usage_error("--K does not apply to --method unity".into()));
                    }
                }
                MethodArg::Viete | MethodArg::ArctanSum => {
                    if depth.is_none() {
                        return Err(usage_error("this method requires --K".into()));
                    }
                    if k.is_some() {
                        return Err(usage_error("--k applies only to --method unity".into()));
                    }
                }
            }
            if let Some(value) = depth.or(*k) {
                if value < 1 {
                    return Err(usage_error("the depth index must be at least 1".into()));
                }
            }
            if *m < 1 {
                return Err(usage_error("--m must be at least 1".into()));
            }
            check_digits(*digits, config.precision_bits)?;
        }
        CliCommand::Ratio { k, digits } => {
            if *k < 1 {
                return Err(usage_error("--k must be at least 1".into()));
            }
            check_digits(*digits, config.precision_bits)?;
        }
        CliCommand::Study { count, bits } => {
            if *count < 1 {
                return Err(usage_error("--K must be at least 1".into()));
            }
            for &b in bits {
                if b < PrecisionContext::MIN_PRECISION_BITS {
                    return Err(usage_error(format!(
                        "--bits entries must be at least {}",
                        PrecisionContext::MIN_PRECISION_BITS
                    )));
                }
            }
        }
        CliCommand::Expr { k } => {
            if *k < 1 || *k > MAX_EXPRESSION_K {
                return Err(usage_error(format!(
                    "--k must lie in 1..={MAX_EXPRESSION_K}"
                )));
            }
        }
        CliCommand::Check => {}
    }
    Ok(())
}

struct RatioRow {
    k: u32,
    ratio: BigReal,
}

impl ReportRow for RatioRow {
    fn header() -> &'static [&'static str] {
        &["k", "b_ratio"]
    }

    fn cells(&self, digits: usize, ctx: &PrecisionContext) -> Result<Vec<String>> {
        Ok(vec![
            self.k.to_string(),
            self.ratio.to_decimal(digits, RenderMode::Truncate, ctx)?,
        ])
    }
}

/// Execute a validated configuration; returns the exit code and the stdout
/// text. Computation errors are written to stderr and yield exit code 1.
pub fn run(config: &CliConfig) -> (i32, String) {
    match try_run(config) {
        Ok(outcome) => outcome,
        Err(err) => {
            eprintln!("error: {err}");
            (1, String::new())
        }
    }
}

fn try_run(config: &CliConfig) -> Result<(i32, String)> {
    let ctx = PrecisionContext::new(config.precision_bits)?;
    let mode = EvalMode::from(config.mode);
    let format = OutputFormat::from(config.format);
    match &config.command {
        CliCommand::Table {
            k_min,
            k_max,
            digits,
        } => {
            let rows = table1(*k_min, *k_max, *digits, &ctx, mode)?;
            Ok((0, emit(&rows, format, *digits, &ctx)?))
        }
        CliCommand::Series { count, digits } => {
            let points = figure1_series(*count, &ctx, mode);
            Ok((0, emit(&points, format, *digits, &ctx)?))
        }
        CliCommand::Pi {
            method,
            depth,
            k,
            m,
            digits,
        } => {
            let estimate = match method {
                MethodArg::Viete => viete_product_pi(depth.expect("validated"), &ctx),
                MethodArg::ArctanSum => arctan_sum_quarter_pi(depth.expect("validated"), &ctx),
                MethodArg::Unity => pi_from_unity(k.expect("validated"), *m, &ctx),
            };
            Ok((0, emit(&[estimate], format, *digits, &ctx)?))
        }
        CliCommand::Ratio { k, digits } => {
            let row = RatioRow {
                k: *k,
                ratio: ratio_b(*k, &ctx),
            };
            Ok((0, emit(&[row], format, *digits, &ctx)?))
        }
        CliCommand::Study { count, bits } => {
            let rows = precision_study(*count, bits)?;
            Ok((0, emit(&rows, format, 20, &ctx)?))
        }
        CliCommand::Expr { k } => {
            let mut text = render_ck_expression(*k)?;
            text.push('\n');
            Ok((0, text))
        }
        CliCommand::Check => {
            let outcomes = run_all_checks();
            let mut text = String::new();
            let mut all_passed = true;
            for outcome in &outcomes {
                all_passed &= outcome.passed;
                let verdict = if outcome.passed { "PASS" } else { "FAIL" };
                text.push_str(&format!("{verdict} {}: {}\n", outcome.name, outcome.detail));
            }
            Ok((if all_passed { 0 } else { 1 }, text))
        }
    }
}
