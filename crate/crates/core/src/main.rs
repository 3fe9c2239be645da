use std::fs::OpenOptions;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use codeaut::cli::{self, CodeSource, SurveyConfig};
use codeaut::code::{CodeJson, LinearCode};
use codeaut::families::CodeFamily;
use codeaut::verify::Tier;

/// Binary linear codes, their automorphism groups and cyclicity.
///
/// Coordinates are 0-indexed. Grid position (i, j) of an a x b grid is
/// coordinate i*b + j; wreath coordinates are mixed-radix with the first
/// degree varying fastest.
#[derive(Parser, Debug)]
#[command(name = "codeaut", version)]
struct Args {
    /// TOML file with default caps and budgets.
    #[arg(long, global = true, env = "CODEAUT_CONFIG")]
    config: Option<PathBuf>,
    /// Largest 2^k enumerated for spectra, distances and the automorphism search.
    #[arg(long, global = true, env = "CODEAUT_CAP")]
    cap: Option<u64>,
    /// Largest group order enumerated when looking for a regular cycle.
    #[arg(long, global = true, env = "CODEAUT_ELEMENT_CAP")]
    element_cap: Option<u64>,
    /// Seconds allowed per automorphism search.
    #[arg(long, global = true, env = "CODEAUT_TIME_BUDGET")]
    time_budget: Option<f64>,
    #[arg(long, global = true, env = "CODEAUT_WORKERS")]
    workers: Option<usize>,
    /// Append JSON lines here instead of printing them.
    #[arg(long, global = true, env = "CODEAUT_OUT")]
    out: Option<PathBuf>,
    /// Seed for the choice of primitive root in GF(2^m).
    #[arg(long, global = true, env = "CODEAUT_SEED")]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a code as JSON, e.g. `construct c0 3 4` or `construct k 3,3`.
    Construct {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        family: Vec<String>,
    },
    /// Parameters, automorphism group and cyclicity of a family or a code JSON file.
    Analyze {
        #[arg(num_args = 0.., conflicts_with = "json")]
        family: Vec<String>,
        /// Read the code from a JSON file ({"n", "k", "basis"}).
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Cyclotomic cosets and irreducible factors of X^N - 1.
    Factor { n: usize },
    /// Every cyclic code of odd length N.
    Enumerate { n: usize },
    /// Analyze every cyclic code of prime length P.
    SurveyPrime { p: usize },
    /// Run the verification criteria.
    VerifyPaper {
        #[arg(long, default_value = "fast")]
        tier: String,
    },
}

fn config(args: &Args) -> codeaut::Result<SurveyConfig> {
    let mut cfg = match &args.config {
        Some(path) => SurveyConfig::load(path)?,
        None => SurveyConfig::default(),
    };
    if let Some(v) = args.cap {
        cfg.enumeration_cap = v;
    }
    if let Some(v) = args.element_cap {
        cfg.element_cap = v;
    }
    if let Some(v) = args.time_budget {
        cfg.time_budget = Some(v);
    }
    if let Some(v) = args.workers {
        cfg.workers = v;
    }
    if let Some(v) = &args.out {
        cfg.out = Some(v.clone());
    }
    if let Some(v) = args.seed {
        cfg.seed = v;
    }
    cfg.validate()?;
    Ok(cfg)
}

/// JSON lines go to `--out` (appended) or stdout.
fn emit_lines(cfg: &SurveyConfig, lines: &[String]) -> io::Result<()> {
    let mut sink: Box<dyn Write> = match &cfg.out {
        Some(path) => Box::new(OpenOptions::new().create(true).append(true).open(path)?),
        None => Box::new(io::stdout().lock()),
    };
    for l in lines {
        writeln!(sink, "{l}")?;
    }
    sink.flush()
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn run(args: Args) -> Result<ExitCode, Box<dyn std::error::Error>> {
    let cfg = config(&args)?;
    match args.command {
        Command::Construct { family } => {
            let family = CodeFamily::from_args(&family)?;
            println!("{}", pretty(&cli::cmd_construct(&family)?));
        }
        Command::Analyze { family, json } => {
            let source = match json {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)?;
                    let parsed: CodeJson = serde_json::from_str(&text)?;
                    CodeSource::Code {
                        label: path.display().to_string(),
                        code: LinearCode::from_json(&parsed)?,
                    }
                }
                None => CodeSource::Family(CodeFamily::from_args(&family)?),
            };
            let record = cli::cmd_analyze(&source, &cfg)?;
            emit_lines(&cfg, &[record.to_json_line()])?;
        }
        Command::Factor { n } => println!("{}", pretty(&cli::cmd_factor(n, cfg.seed)?)),
        Command::Enumerate { n } => println!("{}", pretty(&cli::cmd_enumerate(n)?)),
        Command::SurveyPrime { p } => {
            let records = cli::cmd_survey_prime(p, &cfg)?;
            let lines: Vec<String> = records.iter().map(|r| r.to_json_line()).collect();
            emit_lines(&cfg, &lines)?;
            eprint!("{}", cli::summary_table(&records));
        }
        Command::VerifyPaper { tier } => {
            let tier: Tier = tier.parse()?;
            let report = cli::cmd_verify_paper(tier, &cfg);
            for c in &report.criteria {
                eprintln!("{}", c.summary_line());
            }
            let lines: Vec<String> = report
                .criteria
                .iter()
                .map(|c| serde_json::to_string(c).expect("serializable"))
                .collect();
            emit_lines(&cfg, &lines)?;
            if !report.passed {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
