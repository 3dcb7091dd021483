mod checks;
mod d4;
mod selftest;
mod target;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use mvlab::crystal::{crystal_graph, generate};
use mvlab::exec::Exec;
use mvlab::io::{bz_to_json, set_from_json, set_to_json, to_pretty, BzJson, SetJson};
use mvlab::polytope::BZDatum;

use crate::checks::Selector;
use crate::target::Target;

#[derive(Parser)]
#[command(name = "mvlab", version, about = "Exact computations with MV polytopes")]
struct Cli {
    /// Enable root systems and foldings outside the supported table.
    #[arg(long, global = true)]
    experimental: bool,
    /// Run sweeps on the calling thread only.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Root system, e.g. A2, D4, or a folding such as C2@A3.
    #[arg(long = "rs")]
    root_system: String,
    /// Number of Kashiwara steps from the trivial polytope.
    #[arg(long, default_value_t = 3)]
    depth: usize,
    /// Output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Generate all polytopes up to a depth.
    Generate {
        #[command(flatten)]
        cfg: RunConfig,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check a theorem, the AM conjecture, the crystal axioms or the validators.
    Check {
        #[arg(value_enum)]
        selector: Selector,
        #[command(flatten)]
        cfg: RunConfig,
        /// Read the polytopes from a set file instead of generating them.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Pair folded polytopes with their σ-invariant covers.
    Fold {
        #[command(flatten)]
        cfg: RunConfig,
        /// Set file on either the folded or the cover root system.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Recompute the D4 example in which M″ is not edge-valid.
    D4Example {
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Consistency checks of the preprojective algebra and its modules.
    PreprojSelftest {
        #[arg(long = "rs", default_value = "D4")]
        root_system: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Crystal graph in DOT format.
    CrystalGraph {
        #[command(flatten)]
        cfg: RunConfig,
    },
}

#[derive(Serialize)]
struct FoldPair {
    folded: BzJson,
    cover: BzJson,
}

#[derive(Serialize)]
struct FoldOutput {
    folding: String,
    cover: String,
    pairs: Vec<FoldPair>,
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn read_set(path: &Path) -> anyhow::Result<SetJson> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn corpus(target: &Target, cfg: &RunConfig, input: Option<&Path>, exec: Exec) -> anyhow::Result<Vec<BZDatum>> {
    match input {
        Some(path) => {
            let set = read_set(path)?;
            Ok(set_from_json(target.crystal().root_system(), &set)?)
        }
        None => Ok(generate(target.crystal(), cfg.depth, exec)?),
    }
}

/// Returns `true` when the command found no mathematical violation.
fn run(cli: Cli) -> anyhow::Result<bool> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match cli.command {
        Command::Generate { cfg, format } => {
            let target = Target::parse(&cfg.root_system, cli.experimental)?;
            let set = generate(target.crystal(), cfg.depth, exec)?;
            let text = match format {
                Format::Json => to_pretty(&set_to_json(&cfg.root_system, &set))?,
                Format::Dot => crystal_graph(target.crystal(), &set, exec)?,
            };
            emit(cfg.out.as_deref(), &text)?;
            eprintln!("{} depth {}: {} polytopes", cfg.root_system, cfg.depth, set.len());
            Ok(true)
        }
        Command::Check { selector, cfg, input } => {
            let target = Target::parse(&cfg.root_system, cli.experimental)?;
            let set = corpus(&target, &cfg, input.as_deref(), exec)?;
            let report = checks::run(&target, &cfg.root_system, cfg.depth, &set, selector, exec)?;
            emit(cfg.out.as_deref(), &to_pretty(&report)?)?;
            eprintln!(
                "{:?} on {} depth {}: {} checked, {} violations",
                selector,
                cfg.root_system,
                cfg.depth,
                report.checked,
                report.violations.len()
            );
            if let Some(holds) = report.containment_holds {
                eprintln!("containment AM ⊆ f̃ on every violator: {holds}");
            }
            Ok(report.clean())
        }
        Command::Fold { cfg, input } => {
            let target = Target::parse(&cfg.root_system, cli.experimental)?;
            let Some(ctx) = target.folded() else {
                bail!(mvlab::Error::InvalidInput(format!("{} is not a folding such as C2@A3", cfg.root_system)));
            };
            let pairs: Vec<(BZDatum, BZDatum)> = match input {
                None => generate(ctx, cfg.depth, exec)?
                    .into_iter()
                    .map(|m| ctx.unfold(&m).map(|c| (m, c)))
                    .collect::<mvlab::Result<_>>()?,
                Some(path) => {
                    let set = read_set(&path)?;
                    if set.root_system == ctx.cover().name() {
                        set_from_json(ctx.cover(), &set)?
                            .into_iter()
                            .map(|c| ctx.fold(&c).map(|m| (m, c)))
                            .collect::<mvlab::Result<_>>()?
                    } else {
                        let folded = SetJson { root_system: ctx.folded().name().to_string(), ..set };
                        set_from_json(ctx.folded(), &folded)?
                            .into_iter()
                            .map(|m| ctx.unfold(&m).map(|c| (m, c)))
                            .collect::<mvlab::Result<_>>()?
                    }
                }
            };
            let output = FoldOutput {
                folding: ctx.name().to_string(),
                cover: ctx.cover().name().to_string(),
                pairs: pairs.iter().map(|(m, c)| FoldPair { folded: bz_to_json(m), cover: bz_to_json(c) }).collect(),
            };
            emit(cfg.out.as_deref(), &to_pretty(&output)?)?;
            eprintln!("{}: {} folded/cover pairs", ctx.name(), pairs.len());
            Ok(true)
        }
        Command::D4Example { out } => {
            let report = d4::run(exec)?;
            for item in &report.items {
                let mark = if item.ok() { "ok" } else { "MISMATCH" };
                eprintln!("{:<40} expected {:>3}  got {:>3}  {mark}", item.name, item.expected, item.actual);
            }
            let [fp, am, upper] = report.side_by_side;
            eprintln!("at γ0 = {:?}:  M′ = {fp}   M̃ = {am}   M″ = {upper}", report.gamma0);
            if let Some(path) = out {
                emit(Some(&path), &to_pretty(&report)?)?;
            }
            Ok(report.ok())
        }
        Command::PreprojSelftest { root_system, out } => {
            let report = selftest::run(&root_system, cli.experimental, exec)?;
            eprintln!("Λ({}) has dimension {}", report.root_system, report.dimension);
            for line in &report.lines {
                eprintln!("{:<55} {:>5} checked  {}", line.name, line.checked, if line.passed { "ok" } else { "FAILED" });
            }
            if let Some(path) = out {
                emit(Some(&path), &to_pretty(&report)?)?;
            }
            Ok(report.ok())
        }
        Command::CrystalGraph { cfg } => {
            let target = Target::parse(&cfg.root_system, cli.experimental)?;
            let set = generate(target.crystal(), cfg.depth, exec)?;
            emit(cfg.out.as_deref(), &crystal_graph(target.crystal(), &set, exec)?)?;
            Ok(true)
        }
    }
}

fn configure_threads() -> anyhow::Result<()> {
    let Ok(value) = std::env::var("MVLAB_THREADS") else {
        return Ok(());
    };
    let threads: usize = value.parse().with_context(|| format!("MVLAB_THREADS={value} is not a number"))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    #[cfg(not(feature = "parallel"))]
    let _ = threads;
    Ok(())
}

fn is_usage(err: &anyhow::Error) -> bool {
    use mvlab::Error as E;
    match err.downcast_ref::<E>() {
        Some(E::UnsupportedType(_) | E::Parse(_) | E::InvalidInput(_) | E::UseFolding(_) | E::RootSystemMismatch(..)) => {
            true
        }
        Some(_) => false,
        None => true,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = configure_threads().and_then(|()| run(cli));
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(if is_usage(&err) { 2 } else { 1 })
        }
    }
}
