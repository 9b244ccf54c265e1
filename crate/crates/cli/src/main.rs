use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use spinparity_core::sweep::{
    all_presets, emit_svg, preset, regression_snapshot, run_configs, ChartStyle, SnapshotOutcome,
    SweepError, PRESET_NAMES,
};
use spinparity_core::{MixtureWeights, Scenario, Side, SweepConfig, SweepRange, SweepVariable, Table};

const EXIT_CONFIG: u8 = 1;
const EXIT_PARTIAL: u8 = 2;
const EXIT_SNAPSHOT: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "spinparity", version, about = "Spin-parity correlation sweeps for Dirac bi-spinors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a custom sweep.
    Sweep(SweepArgs),
    /// Run every preset into a directory.
    All(AllArgs),
    /// List the presets.
    List,
    /// Run a named preset (fig1, fig2a, ..., fig5).
    #[command(external_subcommand)]
    Preset(Vec<String>),
}

#[derive(Args, Debug, Default)]
struct OutputArgs {
    /// CSV output file (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// SVG chart output file.
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Snapshot file to compare the CSV against.
    #[arg(long)]
    snapshot: Option<PathBuf>,
    /// Write the snapshot instead of comparing.
    #[arg(long, requires = "snapshot")]
    bless: bool,
    /// Qubit measured by the discord in charts and CP differences (1 = parity, 2 = spin).
    #[arg(long, default_value_t = 1)]
    side: u8,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long)]
    scenario: String,
    #[arg(long)]
    var: String,
    #[arg(long)]
    from: f64,
    #[arg(long)]
    to: f64,
    #[arg(long, default_value_t = 101)]
    points: usize,
    /// Fixed parameter, `key=value`; repeatable.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    set: Vec<String>,
    /// Mixture weights `a00,a01,a10,a11`.
    #[arg(long)]
    weights: Option<String>,
    /// Series label written to the CSV.
    #[arg(long)]
    label: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Parser, Debug)]
#[command(name = "spinparity <preset>", no_binary_name = true)]
struct PresetArgs {
    name: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct AllArgs {
    /// Directory receiving `<preset>.csv` and `<preset>.svg`.
    #[arg(long)]
    out: PathBuf,
    /// Directory of `<preset>.csv` snapshots.
    #[arg(long)]
    snapshot: Option<PathBuf>,
    #[arg(long, requires = "snapshot")]
    bless: bool,
    #[arg(long, default_value_t = 1)]
    side: u8,
}

/// Failure categories, mapped onto exit codes.
enum Failure {
    Config(String),
    Snapshot(String),
}

impl From<SweepError> for Failure {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::SnapshotMissing { .. } | SweepError::SnapshotMismatch { .. } => {
                Failure::Snapshot(e.to_string())
            }
            other => Failure::Config(other.to_string()),
        }
    }
}

fn side_of(i: u8) -> Result<Side, Failure> {
    Side::from_index(i).ok_or_else(|| Failure::Config(format!("--side must be 1 or 2, got {i}")))
}

fn parse_set(items: &[String], config: &mut SweepConfig) -> Result<(), Failure> {
    for item in items {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Failure::Config(format!("--set expects key=value, got '{item}'")))?;
        let value: f64 = v
            .trim()
            .parse()
            .map_err(|_| Failure::Config(format!("--set {k}: '{v}' is not a number")))?;
        config.fixed.insert(k.trim().to_string(), value);
    }
    Ok(())
}

fn parse_weights(s: &str) -> Result<MixtureWeights, Failure> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| Failure::Config(format!("--weights: cannot parse '{s}'")))?;
    let arr: [f64; 4] = parts
        .try_into()
        .map_err(|_| Failure::Config("--weights expects four comma-separated values".into()))?;
    MixtureWeights::new(arr).map_err(|e| Failure::Config(format!("--weights: {e}")))
}

fn build_sweep(args: &SweepArgs) -> Result<SweepConfig, Failure> {
    let scenario: Scenario = args.scenario.parse()?;
    let variable: SweepVariable = args.var.parse()?;
    let mut config = SweepConfig::new(scenario, variable, SweepRange::new(args.from, args.to, args.points));
    if let Some(l) = &args.label {
        config.label = l.clone();
    }
    parse_set(&args.set, &mut config)?;
    if let Some(w) = &args.weights {
        config.weights = Some(parse_weights(w)?);
    }
    config.discord_side = side_of(args.output.side)?;
    config.validate()?;
    Ok(config)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Failure::Config(format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, contents).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))
}

/// Writes CSV/SVG and checks the snapshot; returns the number of error rows.
fn emit(table: &Table, title: &str, side: Side, out: &OutputArgs) -> Result<usize, Failure> {
    let csv = table.to_csv();
    match &out.out {
        Some(p) => write_file(p, &csv)?,
        None => std::io::stdout()
            .write_all(csv.as_bytes())
            .map_err(|e| Failure::Config(format!("stdout: {e}")))?,
    }
    if let Some(p) = &out.svg {
        let style = ChartStyle { title: title.to_string(), discord_side: side, ..ChartStyle::default() };
        write_file(p, &emit_svg(table, &style)?)?;
    }
    if let Some(p) = &out.snapshot {
        match regression_snapshot(p, &csv, out.bless)? {
            SnapshotOutcome::Blessed => log::info!("blessed {}", p.display()),
            SnapshotOutcome::Matched => log::info!("snapshot {} matches", p.display()),
        }
    }
    Ok(table.error_count())
}

fn run_named(args: &[String]) -> Result<usize, Failure> {
    let args = PresetArgs::try_parse_from(args).map_err(|e| Failure::Config(e.to_string()))?;
    let mut p = preset(&args.name).ok_or_else(|| {
        Failure::Config(format!("unknown preset '{}'; available: {}", args.name, PRESET_NAMES.join(", ")))
    })?;
    let side = side_of(args.output.side)?;
    for c in &mut p.configs {
        c.discord_side = side;
    }
    let table = run_configs(&p.configs)?;
    emit(&table, p.title, side, &args.output)
}

fn run_all(args: &AllArgs) -> Result<usize, Failure> {
    let side = side_of(args.side)?;
    let mut errors = 0;
    let mut snapshot_failures = Vec::new();
    for mut p in all_presets() {
        for c in &mut p.configs {
            c.discord_side = side;
        }
        let table = run_configs(&p.configs)?;
        let out = OutputArgs {
            out: Some(args.out.join(format!("{}.csv", p.name))),
            svg: Some(args.out.join(format!("{}.svg", p.name))),
            snapshot: args.snapshot.as_ref().map(|d| d.join(format!("{}.csv", p.name))),
            bless: args.bless,
            side: args.side,
        };
        match emit(&table, p.title, side, &out) {
            Ok(n) => errors += n,
            Err(Failure::Snapshot(msg)) => snapshot_failures.push(msg),
            Err(e) => return Err(e),
        }
    }
    if !snapshot_failures.is_empty() {
        return Err(Failure::Snapshot(snapshot_failures.join("\n")));
    }
    Ok(errors)
}

fn configure_threads() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("SPINPARITY_THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .ok()
            .filter(|n| *n > 0)
            .ok_or_else(|| Failure::Config(format!("SPINPARITY_THREADS must be a positive integer, got '{v}'")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Config(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<usize, Failure> {
    configure_threads()?;
    match cli.command {
        Command::List => {
            for p in all_presets() {
                println!("{:<6} {}", p.name, p.title);
            }
            Ok(0)
        }
        Command::Sweep(args) => {
            let config = build_sweep(&args)?;
            let table = run_configs(std::slice::from_ref(&config))?;
            let title = format!("{} sweep over {}", config.scenario, config.variable);
            emit(&table, &title, config.discord_side, &args.output)
        }
        Command::All(args) => run_all(&args),
        Command::Preset(args) => run_named(&args),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(0) => ExitCode::SUCCESS,
        Ok(n) => {
            eprintln!("warning: {n} sweep point(s) failed; see the status column");
            ExitCode::from(EXIT_PARTIAL)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_CONFIG)
        }
        Err(Failure::Snapshot(msg)) => {
            eprintln!("snapshot check failed: {msg}");
            ExitCode::from(EXIT_SNAPSHOT)
        }
    }
}
