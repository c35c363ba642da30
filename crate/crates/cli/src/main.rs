use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tangle_core::corpus;
use tangle_core::dehn::{dehn_params_from_system, standardize, system_from_dehn_params, DehnParams};
use tangle_core::detector::{detect_infinity_tangle, make_dense, replay, Verdict};
use tangle_core::mapping::{apply_word, parse_word, reduce_waves_by_twists};
use tangle_core::oracle::is_epsilon_bridge_system;
use tangle_core::schema::{self, Case};
use tangle_core::{curve_from_arc, straight_bridge_arcs, ArcSystem, Component, Label, TangleError};

#[derive(Parser)]
#[command(
    name = "tangle",
    version,
    about = "Decide whether a rational 3-tangle is the trivial tangle"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full detector and print the verdict.
    Detect(Input),
    /// Remove waves with half twists.
    Reduce(Input),
    /// Apply band replacements until the system is dense.
    MakeDense(Input),
    /// Twist about the disk boundaries to minimise total weight.
    Standardize(Input),
    /// Apply the word and print the resulting system.
    Twist(Input),
    /// Print Dehn parameters, or build a system from them with `--params`.
    Coords {
        #[command(flatten)]
        input: Input,
        /// Nine comma-separated integers `p1,q1,t1,p2,q2,t2,p3,q3,t3`.
        #[arg(long, allow_hyphen_values = true)]
        params: Option<String>,
    },
    /// Compare the detector with the meridian check and replay its trace.
    OracleCheck(Input),
    /// Write a seeded corpus of labelled cases.
    GenerateCorpus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 12)]
        max_len: usize,
        /// Directory for one `.case` file per case; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
enum TraceLevel {
    None,
    Summary,
    Full,
}

#[derive(Args)]
struct Input {
    /// Start from a named base system.
    #[arg(long, value_enum, conflicts_with = "system")]
    base: Option<BaseArg>,
    /// Start from a system or case file.
    #[arg(long)]
    system: Option<PathBuf>,
    /// Twist word applied to the starting system.
    #[arg(long, allow_hyphen_values = true)]
    word: Option<String>,
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_steps: u64,
    #[arg(long, value_enum, default_value_t = TraceLevel::Summary)]
    trace: TraceLevel,
    /// Also write the full trace to this file.
    #[arg(long)]
    trace_file: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BaseArg {
    Straight,
}

fn load(input: &Input) -> anyhow::Result<ArcSystem> {
    let start = match (&input.system, input.base) {
        (Some(path), _) => read_system(path)?,
        (None, Some(BaseArg::Straight)) | (None, None) => straight_bridge_arcs(),
    };
    Ok(match &input.word {
        Some(w) => apply_word(&start, &parse_word(w)?),
        None => start,
    })
}

fn read_system(path: &Path) -> anyhow::Result<ArcSystem> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let kind: Value = serde_json::from_str(&text).map_err(|e| TangleError::Schema(e.to_string()))?;
    match kind.get("schema").and_then(Value::as_str) {
        Some("case") => Ok(Case::from_json(&text)?.system()?),
        _ => Ok(schema::system_from_json(&text)?),
    }
}

fn verdict_code(v: Verdict) -> u8 {
    if v.is_trivial() {
        0
    } else {
        1
    }
}

fn emit(kind: &str, body: &Value) -> anyhow::Result<()> {
    let text = schema::to_json(kind, body)?;
    let mut out = std::io::stdout().lock();
    match writeln!(out, "{text}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

/// Arcs are replaced by the boundaries of their neighbourhoods.
fn as_multicurve(s: &ArcSystem) -> anyhow::Result<ArcSystem> {
    let components = s
        .components
        .iter()
        .enumerate()
        .map(|(i, c)| match c {
            Component::Arc { .. } => curve_from_arc(c, Label::Curve(i as u32)),
            Component::Closed { .. } => Ok(c.clone()),
        })
        .collect::<Result<_, _>>()?;
    Ok(ArcSystem { components })
}

fn write_atomic(path: &Path, text: &str) -> anyhow::Result<()> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn parse_params(text: &str) -> anyhow::Result<DehnParams> {
    let v: Vec<i64> = text
        .split(',')
        .map(|x| x.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| TangleError::Input(format!("bad parameter list: {e}")))?;
    let Ok(v) = <[i64; 9]>::try_from(v) else {
        bail!(TangleError::Input("expected nine parameters".into()));
    };
    Ok(DehnParams::from_tuple(v)?)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Detect(input) => {
            let s = load(&input)?;
            let d = detect_infinity_tangle(&s, input.max_steps as usize)?;
            if let Some(path) = &input.trace_file {
                write_atomic(path, &schema::to_json("trace", &d.trace)?)?;
            }
            let mut body = json!({ "verdict": d.verdict, "steps": d.trace.len() });
            if input.trace == TraceLevel::Full {
                body["trace"] = serde_json::to_value(&d.trace)?;
            }
            if input.trace >= TraceLevel::Summary {
                body["result"] = serde_json::to_value(&d.result)?;
            }
            emit("detection", &body)?;
            Ok(verdict_code(d.verdict))
        }
        Command::Reduce(input) => {
            let rep = reduce_waves_by_twists(&load(&input)?, input.max_steps as usize)?;
            let mut body = json!({ "steps": rep.steps.len(), "result": rep.result });
            if input.trace == TraceLevel::Full {
                body["trace"] = serde_json::to_value(&rep.steps)?;
            }
            emit("reduction", &body)?;
            Ok(0)
        }
        Command::MakeDense(input) => {
            let (dense, steps) = make_dense(&load(&input)?, input.max_steps as usize)?;
            let mut body = json!({ "steps": steps.len(), "result": dense });
            if input.trace == TraceLevel::Full {
                body["trace"] = serde_json::to_value(&steps)?;
            }
            emit("dense", &body)?;
            Ok(0)
        }
        Command::Standardize(input) => {
            let st = standardize(&load(&input)?)?;
            emit("standardized", &json!({ "twists": st.twists, "result": st.system }))?;
            Ok(0)
        }
        Command::Twist(input) => {
            let s = load(&input)?.reduce_to_minimal_position();
            emit("system", &serde_json::to_value(&s)?)?;
            Ok(0)
        }
        Command::Coords { input, params } => {
            match params {
                Some(text) => {
                    let s = system_from_dehn_params(&parse_params(&text)?)?;
                    emit("system", &serde_json::to_value(&s)?)?;
                }
                None => {
                    let d = dehn_params_from_system(&as_multicurve(&load(&input)?)?)?;
                    emit("coords", &json!({ "params": d.to_tuple() }))?;
                }
            }
            Ok(0)
        }
        Command::OracleCheck(input) => {
            let s = load(&input)?;
            let d = detect_infinity_tangle(&s, input.max_steps as usize)?;
            let oracle = is_epsilon_bridge_system(&s.reduce_to_minimal_position());
            let replayed = replay(&s, &d.trace, input.max_steps as usize)?;
            let agree = oracle == d.verdict.is_trivial() && replayed == d.verdict;
            emit(
                "oracle_check",
                &json!({ "verdict": d.verdict, "oracle_trivial": oracle, "replayed": replayed, "agree": agree }),
            )?;
            if !agree {
                return Err(TangleError::PaperViolation("detector and oracle disagree".into()).into());
            }
            Ok(verdict_code(d.verdict))
        }
        Command::GenerateCorpus {
            seed,
            count,
            max_len,
            out,
        } => {
            let cases = corpus::generate(seed, count, max_len)?;
            match out {
                Some(dir) => {
                    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
                    for c in &cases {
                        write_atomic(&dir.join(format!("{}.case", c.name)), &c.to_json()?)?;
                    }
                    emit("corpus", &json!({ "seed": seed, "count": cases.len(), "dir": dir }))?;
                }
                None => emit("corpus", &serde_json::to_value(&cases)?)?,
            }
            Ok(0)
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<TangleError>() {
        Some(TangleError::StepBudget(_)) => 3,
        Some(TangleError::PaperViolation(_)) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
