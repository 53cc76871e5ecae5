//! Command-line pipelines.
//!
//! Every command reads exact JSON, works in certified arithmetic, and
//! writes a deterministic JSON report: same flags, same seed, same bytes.
//!
//! Exit codes: 0 success (verify: all axioms pass; detect: special
//! structure found), 1 negative verdict (failed axioms, bounded-below
//! dichotomy), 2 input or precondition error, 3 undecided-dominated run.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::config::{EnumMode, GroupSpec, RunConfig};
use crate::error::{Error, Result};
use crate::json as enc;
use crate::rigidity::dichotomy_report;
use crate::torsion::{apply_cv_to_tuple, scan_ideal, scan_sampled, ScanReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_UNDECIDED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "padic-rigidity",
    about = "Exact p-adic formal-group arithmetic and torsion rigidity scans",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args)]
pub struct CommonOpts {
    /// The prime p.
    #[arg(long, default_value_t = 3)]
    pub p: u64,

    /// Scalar precision N: residues are tracked mod p^N.
    #[arg(long, default_value_t = 12)]
    pub precision: u32,

    /// Total-degree window bound D for stored series.
    #[arg(long, default_value_t = 16)]
    pub degree: usize,

    /// Torsion level bound K.
    #[arg(long, default_value_t = 2)]
    pub level: u32,

    /// Group model: multiplicative | standard | path to a params .json.
    #[arg(long, default_value = "multiplicative")]
    pub group: String,

    /// Tuple gathering: exhaustive | sample | auto.
    #[arg(long, default_value = "auto")]
    pub mode: String,

    /// Enumeration cap; sampling draws this many tuples.
    #[arg(long, default_value_t = 1_000_000)]
    pub cap: u64,

    /// Seed for every randomized step.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Report file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl CommonOpts {
    fn config(&self) -> Result<RunConfig> {
        let config = RunConfig {
            prime: self.p,
            precision: self.precision,
            degree_bound: self.degree,
            level_bound: self.level,
            group: GroupSpec::parse(&self.group)?,
            mode: EnumMode::parse(&self.mode)?,
            cap: self.cap,
            seed: self.seed,
        };
        config.validate()?;
        Ok(config)
    }
}

#[derive(Subcommand)]
pub enum Command {
    /// Build the group law and requested endomorphism series.
    LtBuild(LtBuildArgs),
    /// Check the formal-group axioms on random endomorphism pairs.
    Verify(VerifyArgs),
    /// Classify torsion tuples against a valuation threshold.
    Scan(ScanArgs),
    /// Run the full dichotomy: special structure or a valuation bound.
    Detect(DetectArgs),
    /// Per-level minimum-valuation profile of an ideal.
    Profile(ProfileArgs),
    /// Apply a change of variables to a series or to torsion tuples.
    Changevars(ChangevarsArgs),
}

#[derive(Args)]
pub struct LtBuildArgs {
    #[command(flatten)]
    pub common: CommonOpts,

    /// Integer a-values whose endomorphisms [a] to emit; repeatable.
    #[arg(long = "a", allow_negative_numbers = true)]
    pub a_values: Vec<i64>,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: CommonOpts,

    /// Random (a, b) pairs per axiom family.
    #[arg(long, default_value_t = 50)]
    pub trials: u32,
}

#[derive(Args)]
pub struct ScanArgs {
    #[command(flatten)]
    pub common: CommonOpts,

    /// Ideal JSON file: {"generators": [series, ...]}.
    #[arg(long = "in")]
    pub input: PathBuf,

    /// Valuation threshold as a rational "num/den".
    #[arg(long, default_value = "1/1")]
    pub epsilon: String,
}

#[derive(Args)]
pub struct DetectArgs {
    #[command(flatten)]
    pub common: CommonOpts,

    /// Ideal JSON file: {"generators": [series, ...]}.
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Args)]
pub struct ProfileArgs {
    #[command(flatten)]
    pub common: CommonOpts,

    /// Ideal JSON file: {"generators": [series, ...]}.
    #[arg(long = "in")]
    pub input: PathBuf,

    /// Valuation threshold as a rational "num/den".
    #[arg(long, default_value = "1/1")]
    pub epsilon: String,
}

#[derive(Args)]
pub struct ChangevarsArgs {
    #[command(flatten)]
    pub common: CommonOpts,

    /// Change-of-variables JSON file.
    #[arg(long)]
    pub cv: PathBuf,

    /// Input JSON: a series document or {"p", "tuples": [...]}.
    #[arg(long = "in")]
    pub input: PathBuf,
}

fn emit(out: &Option<PathBuf>, value: &Value) -> Result<()> {
    let text = enc::to_canonical_string(value);
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{}", text),
    }
    Ok(())
}

fn load_json(path: &Path) -> Result<Value> {
    enc::parse_json(&std::fs::read_to_string(path)?)
}

fn run_scan(config: &RunConfig, args_in: &Path, epsilon: &str) -> Result<(ScanReport, bool)> {
    let group = config.build_group()?;
    let generators = enc::ideal_from_json(&load_json(args_in)?)?;
    let epsilon = enc::parse_rat(epsilon)?;
    match config.mode {
        EnumMode::Exhaustive => scan_ideal(
            &group,
            &generators,
            epsilon,
            config.level_bound,
            config.cap,
        )
        .map(|r| (r, false)),
        EnumMode::Sample => scan_sampled(
            &group,
            &generators,
            epsilon,
            config.level_bound,
            config.cap,
            config.seed,
        )
        .map(|r| (r, true)),
        EnumMode::Auto => match scan_ideal(
            &group,
            &generators,
            epsilon,
            config.level_bound,
            config.cap,
        ) {
            Ok(r) => Ok((r, false)),
            Err(Error::EnumerationTooLarge { .. }) => scan_sampled(
                &group,
                &generators,
                epsilon,
                config.level_bound,
                config.cap,
                config.seed,
            )
            .map(|r| (r, true)),
            Err(e) => Err(e),
        },
    }
}

fn cmd_lt_build(args: &LtBuildArgs) -> Result<u8> {
    let config = args.common.config()?;
    let group = config.build_group()?;
    let law = enc::series_to_json(group.group_law());
    let mut brackets = Vec::new();
    for &a in &args.a_values {
        brackets.push((a, enc::series_to_json(&group.bracket_int(a)?)));
    }
    match &args.common.out {
        Some(dir) => {
            std::fs::create_dir_all(dir)?;
            std::fs::write(dir.join("law.json"), enc::to_canonical_string(&law))?;
            for (a, series) in &brackets {
                std::fs::write(
                    dir.join(format!("bracket_{}.json", a)),
                    enc::to_canonical_string(series),
                )?;
            }
        }
        None => {
            let combined = json!({
                "law": law,
                "brackets": brackets
                    .iter()
                    .map(|(a, s)| json!({ "a": a, "series": s }))
                    .collect::<Vec<_>>(),
            });
            emit(&None, &combined)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs) -> Result<u8> {
    let config = args.common.config()?;
    let group = config.build_group()?;
    let report = group.verify_axioms(args.trials, config.seed)?;
    emit(
        &args.common.out,
        &enc::axiom_report_to_json(&group, args.trials, config.seed, &report),
    )?;
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_scan(args: &ScanArgs) -> Result<u8> {
    let config = args.common.config()?;
    let (report, sampled) = run_scan(&config, &args.input, &args.epsilon)?;
    let mut value = enc::scan_report_to_json(&report);
    value
        .as_object_mut()
        .unwrap()
        .insert("sampled".into(), json!(sampled));
    emit(&args.common.out, &value)?;
    Ok(if report.undecided_majority() { EXIT_UNDECIDED } else { EXIT_OK })
}

fn cmd_profile(args: &ProfileArgs) -> Result<u8> {
    let config = args.common.config()?;
    let (report, sampled) = run_scan(&config, &args.input, &args.epsilon)?;
    let mut value = enc::profile_to_json(&report);
    value
        .as_object_mut()
        .unwrap()
        .insert("sampled".into(), json!(sampled));
    emit(&args.common.out, &value)?;
    Ok(if report.undecided_majority() { EXIT_UNDECIDED } else { EXIT_OK })
}

fn cmd_detect(args: &DetectArgs) -> Result<u8> {
    let config = args.common.config()?;
    let group = config.build_group()?;
    let generators = enc::ideal_from_json(&load_json(&args.input)?)?;
    let report = dichotomy_report(&group, &generators, config.level_bound, config.cap)?;
    emit(&args.common.out, &enc::dichotomy_to_json(&report))?;
    if report.undecided_majority() {
        return Ok(EXIT_UNDECIDED);
    }
    Ok(match report.outcome {
        crate::rigidity::DichotomyOutcome::SpecialFound(_) => EXIT_OK,
        crate::rigidity::DichotomyOutcome::BoundedBelow { .. } => EXIT_NEGATIVE,
    })
}

fn cmd_changevars(args: &ChangevarsArgs) -> Result<u8> {
    let _ = args.common.config()?;
    let cv = enc::cv_from_json(&load_json(&args.cv)?)?;
    let input = load_json(&args.input)?;
    let output = if input.get("terms").is_some() {
        let series = enc::series_from_json(&input)?;
        enc::series_to_json(&cv.apply_to_series(&series)?)
    } else if input.get("generators").is_some() {
        let moved = enc::ideal_from_json(&input)?
            .iter()
            .map(|g| cv.apply_to_series(g))
            .collect::<Result<Vec<_>>>()?;
        enc::ideal_to_json(&moved)
    } else if input.get("tuples").is_some() {
        let tuples = enc::tuples_from_json(&input)?;
        let moved = tuples
            .iter()
            .map(|t| apply_cv_to_tuple(&cv, t))
            .collect::<Result<Vec<_>>>()?;
        enc::tuples_to_json(cv.prime(), &moved)
    } else {
        return Err(Error::InvalidInput(
            "input must be a series, ideal, or tuples document".into(),
        ));
    };
    emit(&args.common.out, &output)?;
    Ok(EXIT_OK)
}

/// Dispatch a parsed command line; errors print to stderr and map to the
/// input-error exit code.
pub fn run(cli: Cli) -> u8 {
    let outcome = match &cli.command {
        Command::LtBuild(args) => cmd_lt_build(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Scan(args) => cmd_scan(args),
        Command::Detect(args) => cmd_detect(args),
        Command::Profile(args) => cmd_profile(args),
        Command::Changevars(args) => cmd_changevars(args),
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            EXIT_INPUT
        }
    }
}
