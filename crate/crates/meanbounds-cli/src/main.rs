//! Command-line front end for the meanbounds engine.
//!
//! Four subcommands: `bounds` prints the two-sided interval for a gap
//! ratio, `classify` reports the monotonicity verdict at a plane point or
//! an admissible inner-order range, `verify` runs one of the named
//! verification suites, and `sweep` exports the classification grid as
//! CSV. Exit codes: 0 on success, 1 for usage or verification failure,
//! 2 when the requested parameters fall outside every covered case.

use clap::{Args, Parser, Subcommand, ValueEnum};
use meanbounds::{
    admissible_t_range, bound_case, classification_rule, classify_gap_ratio,
    classify_slope_quotient, gap_ratio_bounds, general_ratio_bounds, suite_admissible,
    suite_alzer_qiu, suite_gap_ratio, suite_general_ratio, suite_kouba, suite_quotient_rule,
    suite_regions, suite_trif, suite_unit_power, suite_wu_debnath, BoundPair, Error,
    ExponentTriple, MonotonicityClass, QuadExponents, RQPoint, SampleConfig, SuiteSummary,
    DEFAULT_SEED,
};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "meanbounds",
    version,
    about = "Bounds, classification and verification sweeps for power-mean gap ratios"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the two-sided bounds for a gap ratio at the given exponents
    Bounds(BoundsArgs),
    /// Classify a plane point, or print an admissible inner-order range
    Classify(ClassifyArgs),
    /// Run a named verification suite and report its findings
    Verify(VerifyArgs),
    /// Export the monotonicity classification grid as CSV
    Sweep(SweepArgs),
}

#[derive(Args)]
struct BoundsArgs {
    /// Smaller outer exponent
    #[arg(long, allow_negative_numbers = true)]
    s: f64,
    /// Larger outer exponent
    #[arg(long, allow_negative_numbers = true)]
    t: f64,
    /// Common power applied to the means
    #[arg(long, allow_negative_numbers = true)]
    p: f64,
    /// Largest exponent; switches to the four-exponent ratio record
    #[arg(long, allow_negative_numbers = true)]
    r: Option<f64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum KernelChoice {
    /// Slope quotient of the two gaps
    G,
    /// Gap ratio itself
    F,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Ratio of the two gap scales
    #[arg(long, allow_negative_numbers = true, requires = "q")]
    r: Option<f64>,
    /// Common outer power over the larger scale
    #[arg(long, allow_negative_numbers = true, requires = "r")]
    q: Option<f64>,
    /// Which kernel the verdict describes
    #[arg(long, value_enum, default_value = "g")]
    function: KernelChoice,
    /// Print the admissible inner-order range at this outer exponent
    /// instead of classifying a point
    #[arg(long, conflicts_with_all = ["r", "q", "function"], allow_negative_numbers = true)]
    aq: Option<f64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Target {
    Thm31,
    Thm33,
    Cor32,
    WuDebnath,
    AlzerQiu,
    Trif,
    Kouba,
    Regions,
    Aq,
    Lhr,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run
    #[arg(long, value_enum)]
    target: Target,
    /// Sampling seed; overrides the MEANBOUNDS_SEED environment variable
    #[arg(long)]
    seed: Option<u64>,
    /// Sample count per sweep
    #[arg(long)]
    samples: Option<usize>,
    /// Violation slack
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
    r_min: f64,
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    r_max: f64,
    #[arg(long, default_value_t = 51)]
    r_steps: usize,
    #[arg(long, default_value_t = -2.0, allow_negative_numbers = true)]
    q_min: f64,
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    q_max: f64,
    #[arg(long, default_value_t = 51)]
    q_steps: usize,
    /// Output CSV path
    #[arg(long, default_value = "sweep.csv")]
    output: PathBuf,
}

/// Outcomes that map onto the exit-code contract: usage problems exit
/// with 1, parameters outside every covered case with 2.
enum Failure {
    Usage(String),
    NotCovered(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            // a malformed run configuration is a usage error, every other
            // library rejection means the parameters are not covered
            Error::InvalidConfig(_) => Failure::Usage(e.to_string()),
            _ => Failure::NotCovered(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code: u8 = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Bounds(args) => cmd_bounds(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Sweep(args) => cmd_sweep(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::NotCovered(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn bound_record(case: &str, b: &BoundPair) -> String {
    format!(
        "case={case} lower={} upper={} lower_strict={} upper_strict={} sharp={}",
        b.lower, b.upper, b.lower_strict, b.upper_strict, b.sharp
    )
}

fn cmd_bounds(args: &BoundsArgs) -> Result<ExitCode, Failure> {
    if let Some(r) = args.r {
        let quad = QuadExponents::new(r, args.s, args.t, args.p)?;
        let bounds = general_ratio_bounds(&quad)?;
        println!("{}", bound_record("general", &bounds));
    } else {
        let exps = ExponentTriple::new(args.s, args.t, args.p)?;
        let bounds = gap_ratio_bounds(&exps)?;
        let tag = bound_case(&exps).case;
        println!("{}", bound_record(&tag.to_string(), &bounds));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(args: &ClassifyArgs) -> Result<ExitCode, Failure> {
    if let Some(q) = args.aq {
        let range = admissible_t_range(q)?;
        println!("A_q = {range}");
        return Ok(ExitCode::SUCCESS);
    }
    let (Some(r), Some(q)) = (args.r, args.q) else {
        return Err(Failure::Usage(
            "classify needs either --r and --q, or --aq".to_string(),
        ));
    };
    let point = RQPoint::new(r, q)?;
    let class = match args.function {
        KernelChoice::G => classify_slope_quotient(&point),
        KernelChoice::F => classify_gap_ratio(&point),
    };
    println!("class={class:?}");
    let rule = if class == MonotonicityClass::Unknown {
        "no certified verdict at this point".to_string()
    } else {
        classification_rule(&point)
    };
    println!("rule={rule}");
    Ok(ExitCode::SUCCESS)
}

fn resolve_seed(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var("MEANBOUNDS_SEED") {
        Ok(raw) => raw.parse().map_err(|_| {
            Failure::Usage(format!(
                "MEANBOUNDS_SEED must be an unsigned integer, got {raw:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<ExitCode, Failure> {
    let mut cfg = SampleConfig {
        seed: resolve_seed(args.seed)?,
        ..SampleConfig::default()
    };
    if let Some(samples) = args.samples {
        cfg.samples = samples;
    }
    if let Some(tol) = args.tol {
        cfg.tolerance = tol;
    }
    let run: fn(&SampleConfig) -> meanbounds::Result<SuiteSummary> = match args.target {
        Target::Thm31 => suite_gap_ratio,
        Target::Thm33 => suite_general_ratio,
        Target::Cor32 => suite_unit_power,
        Target::WuDebnath => suite_wu_debnath,
        Target::AlzerQiu => suite_alzer_qiu,
        Target::Trif => suite_trif,
        Target::Kouba => suite_kouba,
        Target::Regions => suite_regions,
        Target::Aq => suite_admissible,
        Target::Lhr => suite_quotient_rule,
    };
    let summary = run(&cfg)?;
    print!("{}", render_summary(&summary, &cfg));
    if summary.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(1))
    }
}

fn render_summary(summary: &SuiteSummary, cfg: &SampleConfig) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "target={}", summary.target);
    let _ = writeln!(out, "seed={}", summary.seed);
    let _ = writeln!(out, "samples={}", cfg.samples);
    let _ = writeln!(out, "tolerance={:e}", cfg.tolerance);
    for part in &summary.parts {
        let _ = writeln!(
            out,
            "part=\"{}\" checked={} violations={} worst_margin={:e}",
            part.label, part.report.checked, part.report.violations, part.report.worst_margin
        );
    }
    let agg = summary.aggregate();
    let _ = writeln!(out, "checked={}", agg.checked);
    let _ = writeln!(out, "violations={}", agg.violations);
    let _ = writeln!(out, "worst_margin={:e}", agg.worst_margin);
    let _ = writeln!(out, "min_observed={}", agg.min_observed);
    let _ = writeln!(out, "max_observed={}", agg.max_observed);
    if let Some(w) = agg.witness_min {
        let _ = writeln!(out, "witness_min={w}");
    }
    if let Some(w) = agg.witness_max {
        let _ = writeln!(out, "witness_max={w}");
    }
    out
}

fn class_token(class: MonotonicityClass) -> &'static str {
    match class {
        MonotonicityClass::Increasing => "inc",
        MonotonicityClass::Decreasing => "dec",
        MonotonicityClass::Constant => "const",
        MonotonicityClass::Neither => "neither",
        MonotonicityClass::Unknown => "unknown",
    }
}

// the convex form hits representable decimals exactly (the default grid
// is pure tenths), where min + i * span / denom would smear them with
// rounding noise
fn grid(min: f64, max: f64, steps: usize) -> impl Iterator<Item = f64> {
    let denom = (steps - 1) as f64;
    (0..steps).map(move |i| {
        let w = i as f64;
        (min * (denom - w) + max * w) / denom
    })
}

fn cmd_sweep(args: &SweepArgs) -> Result<ExitCode, Failure> {
    for (name, min, max, steps) in [
        ("r", args.r_min, args.r_max, args.r_steps),
        ("q", args.q_min, args.q_max, args.q_steps),
    ] {
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(Failure::Usage(format!(
                "{name} range must be finite with min < max, got [{min}, {max}]"
            )));
        }
        if steps < 2 {
            return Err(Failure::Usage(format!(
                "{name}-steps must be at least 2, got {steps}"
            )));
        }
    }
    let mut csv = String::from("r,q,class_g,class_f\n");
    let mut rows = 0usize;
    for r in grid(args.r_min, args.r_max, args.r_steps) {
        for q in grid(args.q_min, args.q_max, args.q_steps) {
            let (g, f) = if r == 0.0 || r == 1.0 || q == 0.0 {
                ("excluded", "excluded")
            } else {
                // construction cannot fail off the excluded lines
                let point = RQPoint::new(r, q)?;
                (
                    class_token(classify_slope_quotient(&point)),
                    class_token(classify_gap_ratio(&point)),
                )
            };
            let _ = writeln!(csv, "{r},{q},{g},{f}");
            rows += 1;
        }
    }
    std::fs::write(&args.output, csv)
        .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", args.output.display())))?;
    println!("rows={rows} output={}", args.output.display());
    Ok(ExitCode::SUCCESS)
}
