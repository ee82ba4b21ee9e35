//! `contingent`: command-line front end for the contingency-logic workbench.
//!
//! Exit status: 0 for success (true, valid up to the bound, derivation ok),
//! 1 for a negative verdict (false, countermodel, rejected derivation),
//! 2 for usage, I/O and parse errors, 3 when a size bound is exceeded.

mod config;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand};
use contingent::proof::{check_derivation, parse_derivation, ProofError, SchemaName};
use contingent::search::{
    find_countermodel, search_formula, Mode, SearchError, SearchReport, DEFAULT_SEED,
};
use contingent::semantics::{check_property, eval, truth_set, SemanticsError};
use contingent::suite::{self, ItemResult, SuiteConfig};
use contingent::transform::{complement_model, star_translate, supplementation, TransformError};
use contingent::{fixtures, parse, parse_model, write_model, Atom, Model, PropertySet};

use config::{Config, Format};

const OK: u8 = 0;
const REJECT: u8 = 1;
const USAGE: u8 = 2;
const BOUND: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "contingent",
    version,
    about = "Contingency logic over finite neighborhood models"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Print truth sets, per-check details and timings.
    #[arg(long, short, global = true)]
    verbose: bool,
    /// Seed for sampled searches and the suite.
    #[arg(long, global = true, env = "CONTINGENT_SEED")]
    seed: Option<u64>,
    /// TOML file with defaults for seed, format and bounds.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Leave `elapsed_ms` out of machine output so reruns compare equal.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a formula in a model, at one state or at all of them.
    Eval {
        model: PathBuf,
        formula: String,
        state: Option<String>,
    },
    /// Report which of the properties m, c, n, z a model's frame has.
    Props { model: PathBuf },
    /// Check a derivation file.
    Check { derivation: PathBuf },
    /// Search a frame class for a countermodel to a schema or formula.
    Search(SearchArgs),
    /// Apply a transform to a model, or translate a formula.
    #[command(subcommand)]
    Transform(TransformCmd),
    /// Run the shipped fixture checks.
    #[command(subcommand)]
    Fixtures(FixturesCmd),
}

#[derive(Debug, Args)]
struct SearchArgs {
    /// Schema name (dEqu, dM, dC, dN, sdM, dM', dC', M, C, N, Z) or a formula.
    target: String,
    /// Frame class, as property letters (e.g. `mc`); empty for all frames.
    #[arg(long, default_value = "")]
    props: String,
    /// Largest frame size.
    #[arg(long)]
    max: Option<usize>,
    /// Sweep every frame up to the bound (the default).
    #[arg(long, conflicts_with = "sample")]
    exhaustive: bool,
    /// Sample this many frames of exactly `--max` states instead.
    #[arg(long, value_name = "N")]
    sample: Option<usize>,
    /// Atoms substituted for phi, psi, chi.
    #[arg(long, value_delimiter = ',', default_value = "p,q,r")]
    atoms: Vec<String>,
    /// Where to write a countermodel.
    #[arg(long, default_value = "countermodel.txt")]
    out: PathBuf,
}

#[derive(Debug, Subcommand)]
enum TransformCmd {
    /// Superset closure of every neighborhood collection.
    Supplement {
        model: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Close every neighborhood collection under complements.
    Complement {
        model: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Translate an L(D) formula into L(B).
    Star { formula: String },
}

#[derive(Debug, Subcommand)]
enum FixturesCmd {
    /// Run every acceptance criterion.
    RunAll,
    /// Run the numbered validity and invalidity items (all when none given).
    Items { items: Vec<String> },
    /// Write the shipped model and derivation files into a directory.
    Export { dir: PathBuf },
}

struct Ctx {
    format: Format,
    verbose: bool,
    timing: bool,
    seed: u64,
    config: Config,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    let bound = err.chain().any(|cause| {
        cause
            .downcast_ref::<SearchError>()
            .is_some_and(SearchError::is_bound_exceeded)
            || matches!(
                cause.downcast_ref::<SemanticsError>(),
                Some(
                    SemanticsError::BoundExceeded { .. }
                        | SemanticsError::SampleBoundExceeded { .. }
                )
            )
            || matches!(
                cause.downcast_ref::<TransformError>(),
                Some(TransformError::FrameTooLarge(_))
            )
    });
    if bound {
        BOUND
    } else {
        USAGE
    }
}

fn run(cli: Cli) -> Result<u8> {
    let config = match &cli.global.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    let ctx = Ctx {
        format: cli.global.format.or(config.format).unwrap_or(Format::Human),
        verbose: cli.global.verbose,
        timing: !cli.global.no_timing,
        seed: cli.global.seed.or(config.seed).unwrap_or(DEFAULT_SEED),
        config,
    };
    match cli.command {
        Command::Eval {
            model,
            formula,
            state,
        } => cmd_eval(&ctx, &model, &formula, state.as_deref()),
        Command::Props { model } => cmd_props(&ctx, &model),
        Command::Check { derivation } => cmd_check(&ctx, &derivation),
        Command::Search(args) => cmd_search(&ctx, &args),
        Command::Transform(t) => cmd_transform(&t),
        Command::Fixtures(f) => cmd_fixtures(&ctx, &f),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_model(path: &Path) -> Result<Model> {
    let text = read(path)?;
    parse_model(&text).map_err(|e| anyhow!("{}:{}: {}", path.display(), e.line, e.message))
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_eval(ctx: &Ctx, path: &Path, text: &str, state: Option<&str>) -> Result<u8> {
    let model = load_model(path)?;
    let formula = parse(text).with_context(|| format!("formula `{text}`"))?;
    if formula.has_metavars() {
        return Err(anyhow!("formula `{text}` contains metavariables"));
    }
    let frame = model.frame();
    let states: Vec<String> = match state {
        Some(s) => {
            frame.state_index(s)?;
            vec![s.to_string()]
        }
        None => frame.states().to_vec(),
    };
    let mut all_true = true;
    for s in &states {
        let value = eval(&model, s, &formula)?;
        all_true &= value;
        match (ctx.format, state.is_some()) {
            (Format::Machine, _) => println!("state={s} value={value}"),
            (Format::Human, true) => println!("{value}"),
            (Format::Human, false) => println!("{s}: {value}"),
        }
    }
    if ctx.verbose {
        let set = frame.format_set(truth_set(&model, &formula));
        match ctx.format {
            Format::Machine => println!("truth_set={set}"),
            Format::Human => println!("truth set of {formula}: {set}"),
        }
    }
    Ok(if all_true { OK } else { REJECT })
}

fn class_label(model: &Model) -> &'static str {
    let frame = model.frame();
    let has = |letters: &str| check_property(frame, PropertySet::parse(letters).unwrap());
    if has("mcn") {
        "filter"
    } else if has("mc") {
        "quasi-filter"
    } else {
        "neither filter nor quasi-filter"
    }
}

fn cmd_props(ctx: &Ctx, path: &Path) -> Result<u8> {
    let model = load_model(path)?;
    let flags: Vec<String> = ["m", "c", "n", "z"]
        .iter()
        .map(|p| {
            format!(
                "{p}={}",
                check_property(model.frame(), PropertySet::parse(p).unwrap())
            )
        })
        .collect();
    match ctx.format {
        Format::Machine => println!(
            "{} class={}",
            flags.join(" "),
            class_label(&model).replace(' ', "-")
        ),
        Format::Human => {
            println!("{}", flags.join(" "));
            println!("{}", class_label(&model));
        }
    }
    Ok(OK)
}

fn cmd_check(ctx: &Ctx, path: &Path) -> Result<u8> {
    let text = read(path)?;
    let derivation = parse_derivation(&text)
        .map_err(|e| anyhow!("{}:{}: {}", path.display(), e.line, e.message))?;
    match check_derivation(&derivation) {
        Ok(report) => {
            match ctx.format {
                Format::Machine => println!(
                    "verdict=ok system={} lines={} status={}",
                    report.system,
                    report.lines,
                    report.status.to_string().replace(' ', "-")
                ),
                Format::Human => println!("{report}"),
            }
            Ok(OK)
        }
        Err(err @ (ProofError::UnknownSystem(_) | ProofError::UnknownSchema(_))) => {
            Err(anyhow!("{}: {err}", path.display()))
        }
        Err(err) => {
            match (ctx.format, err.line()) {
                (Format::Machine, Some(line)) => {
                    println!("verdict=reject line={line} reason=\"{err}\"")
                }
                (Format::Machine, None) => println!("verdict=reject reason=\"{err}\""),
                (Format::Human, _) => println!("rejected: {err}"),
            }
            Ok(REJECT)
        }
    }
}

fn cmd_search(ctx: &Ctx, args: &SearchArgs) -> Result<u8> {
    let props = PropertySet::parse(&args.props)
        .ok_or_else(|| anyhow!("--props takes letters from `mcnz`, got `{}`", args.props))?;
    let max = args.max.or(ctx.config.search.max).unwrap_or(2);
    let mode = match args.sample {
        Some(count) => Mode::Sample {
            count,
            seed: ctx.seed,
        },
        None => Mode::Exhaustive,
    };
    let report: SearchReport = match args.target.parse::<SchemaName>() {
        Ok(schema) => {
            let atoms = args
                .atoms
                .iter()
                .map(|a| Atom::new(a.trim()))
                .collect::<Result<Vec<_>, _>>()?;
            find_countermodel(schema, &atoms, props, max, mode)?
        }
        Err(_) => {
            let formula = parse(&args.target).with_context(|| {
                format!("`{}` is neither a schema name nor a formula", args.target)
            })?;
            search_formula(&formula, props, max, mode)?
        }
    };
    match ctx.format {
        Format::Machine => println!("{}", report.machine_line(ctx.timing)),
        Format::Human => {
            print!("{}", report.render_human());
            if ctx.verbose {
                println!("elapsed:  {} ms", report.elapsed.as_millis());
            }
        }
    }
    match report.witness() {
        None => Ok(OK),
        Some(w) => {
            let text = format!(
                "# countermodel: {} is false at {}\n{}",
                report.formula,
                w.state_name(),
                write_model(&w.model)
            );
            fs::write(&args.out, text)
                .with_context(|| format!("writing {}", args.out.display()))?;
            if ctx.format == Format::Human {
                println!("countermodel written to {}", args.out.display());
            }
            Ok(REJECT)
        }
    }
}

fn cmd_transform(t: &TransformCmd) -> Result<u8> {
    match t {
        TransformCmd::Supplement { model, out } => {
            let m = supplementation(&load_model(model)?);
            write_or_print(out.as_deref(), &write_model(&m))?;
        }
        TransformCmd::Complement { model, out } => {
            let m = complement_model(&load_model(model)?);
            write_or_print(out.as_deref(), &write_model(&m))?;
        }
        TransformCmd::Star { formula } => {
            let f = parse(formula).with_context(|| format!("formula `{formula}`"))?;
            println!("{}", star_translate(&f)?);
        }
    }
    Ok(OK)
}

fn suite_config(ctx: &Ctx) -> SuiteConfig {
    let defaults = SuiteConfig::default();
    let section = &ctx.config.suite;
    SuiteConfig {
        seed: ctx.seed,
        samples: section.samples.unwrap_or(defaults.samples),
        models: section.models.unwrap_or(defaults.models),
        mutations: section.mutations.unwrap_or(defaults.mutations),
    }
}

fn report_items(ctx: &Ctx, results: &[ItemResult]) -> u8 {
    for r in results {
        match ctx.format {
            Format::Machine => println!("{}", r.machine_line(ctx.timing)),
            Format::Human => {
                println!("{}", r.human_line());
                if ctx.verbose || !r.passed {
                    for d in &r.detail {
                        println!("    {d}");
                    }
                }
            }
        }
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    if ctx.format == Format::Human {
        println!("{} of {} passed", results.len() - failed, results.len());
    }
    if failed == 0 {
        OK
    } else {
        REJECT
    }
}

fn cmd_fixtures(ctx: &Ctx, cmd: &FixturesCmd) -> Result<u8> {
    let cfg = suite_config(ctx);
    match cmd {
        FixturesCmd::RunAll => Ok(report_items(ctx, &suite::run_all(&cfg))),
        FixturesCmd::Items { items } => {
            let names: Vec<&str> = if items.is_empty() {
                suite::ITEMS.to_vec()
            } else {
                items.iter().map(String::as_str).collect()
            };
            if let Some(bad) = names.iter().find(|n| !suite::ITEMS.contains(n)) {
                return Err(anyhow!("unknown item `{bad}`; items are i through xi"));
            }
            let results: Vec<ItemResult> = names.iter().map(|n| suite::run_item(n, &cfg)).collect();
            Ok(report_items(ctx, &results))
        }
        FixturesCmd::Export { dir } => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let files = [
                ("item_v.model", fixtures::ITEM_V),
                ("item_vi.model", fixtures::ITEM_VI),
                ("item_vii.model", fixtures::ITEM_VII),
                ("c_frame.model", fixtures::C_FRAME),
                ("dc_to_dc_prime.proof", fixtures::DC_TO_DC_PRIME),
                ("dc_prime_to_dc.proof", fixtures::DC_PRIME_TO_DC),
                ("dm_to_dm_prime.proof", fixtures::DM_TO_DM_PRIME),
                ("dm_prime_to_dm.proof", fixtures::DM_PRIME_TO_DM),
            ];
            for (name, text) in files {
                let path = dir.join(name);
                fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
                if ctx.verbose {
                    println!("{}", path.display());
                }
            }
            Ok(OK)
        }
    }
}
