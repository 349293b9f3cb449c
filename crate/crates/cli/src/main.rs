//! Command-line front end: config ingestion, subcommands, CSV/markdown
//! emission.
//!
//! Exit codes: 0 success, 2 usage, 3 config, 4 domain/envelope, 5 I/O.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use heli_feas::{
    discrepancies_markdown, dump_config, inventory_report, parse_config, reproduce_tables,
    sections_per_tree, sweep, DimsPreset, Error, OutputFormat, RunConfig, Scenario, StemDims,
    SweepRow,
};

mod report;

use report::{render_inventory, render_single_row};

const CONFIG_ENV_VAR: &str = "HELIFEAS_CONFIG";

#[derive(Parser)]
#[command(
    name = "heli-feas",
    version,
    about = "Techno-economic feasibility engine for helicopter-based selective logging"
)]
struct Cli {
    /// Config file path; falls back to $HELIFEAS_CONFIG, then to built-in
    /// defaults (the published study setup).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one helicopter-species-scenario-distance combination.
    Evaluate {
        /// Helicopter and condition, e.g. CH47:used-old.
        #[arg(long)]
        heli: String,
        /// Species id, e.g. ipe.
        #[arg(long)]
        species: String,
        /// scenario1, scenario2 or <dbh>x<height> (e.g. 80x25).
        #[arg(long)]
        dims: String,
        /// Target distance in km.
        #[arg(long)]
        distance: f64,
        /// csv or markdown (defaults to the config's output format).
        #[arg(long)]
        format: Option<String>,
    },
    /// Evaluate the configured grid and emit one CSV row per scenario.
    Sweep {
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce the reference tables plus the discrepancy report.
    Tables {
        /// Output directory (defaults to the config's [output] dir).
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Print the harvest inventory and rotation report.
    Inventory {
        /// csv or markdown (defaults to the config's output format).
        #[arg(long)]
        format: Option<String>,
    },
    /// Print the effective configuration.
    DumpConfig,
}

enum CliError {
    Engine(Error),
    Io(PathBuf, std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Engine(Error::Config(_)) => 3,
            CliError::Engine(_) => 4,
            CliError::Io(..) => 5,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Io(path, e) => write!(f, "i/o error on {}: {e}", path.display()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn load_config(path: &Option<PathBuf>) -> Result<RunConfig, CliError> {
    let path = match path {
        Some(p) => Some(p.clone()),
        None => std::env::var_os(CONFIG_ENV_VAR).map(PathBuf::from),
    };
    match path {
        None => Ok(RunConfig::default()),
        Some(p) => {
            let text =
                std::fs::read_to_string(&p).map_err(|e| CliError::Io(p.clone(), e))?;
            Ok(parse_config(&text)?)
        }
    }
}

fn parse_format(cfg: &RunConfig, flag: &Option<String>) -> Result<OutputFormat, CliError> {
    match flag {
        None => Ok(cfg.output.format),
        Some(s) => Ok(OutputFormat::parse(s)?),
    }
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn run(cli: Cli) -> Result<(), CliError> {
    let cfg = load_config(&cli.config)?;
    match cli.command {
        Command::Evaluate { heli, species, dims, distance, format } => {
            let format = parse_format(&cfg, &format)?;
            let (helicopter, condition) = heli.split_once(':').map_or_else(
                || (heli.clone(), single_condition(&cfg, &heli)),
                |(h, c)| (h.to_string(), Ok(c.to_string())),
            );
            let scenario = Scenario {
                helicopter,
                condition: condition?,
                species,
                dims: DimsPreset::parse(&dims)?,
                distance_km: distance,
            };
            let ctx = cfg.context();
            let row = heli_feas::evaluate(&ctx, &scenario)?;
            print!("{}", render_single_row(&row, format));
            Ok(())
        }
        Command::Sweep { out } => {
            let ctx = cfg.context();
            let rows: Vec<SweepRow> = sweep(&ctx, &cfg.grid);
            let rendered = heli_feas::render::render_sweep(&rows, cfg.output.format);
            match out {
                Some(path) => write_file(&path, &rendered)?,
                None => print!("{rendered}"),
            }
            Ok(())
        }
        Command::Tables { out_dir } => {
            let bundle = reproduce_tables(&cfg)?;
            let dir = out_dir.unwrap_or_else(|| PathBuf::from(&cfg.output.dir));
            std::fs::create_dir_all(&dir).map_err(|e| CliError::Io(dir.clone(), e))?;
            for (name, content) in &bundle.files {
                write_file(&dir.join(name), content)?;
            }
            let md = discrepancies_markdown(&cfg, &bundle.discrepancies);
            write_file(&dir.join("discrepancies.md"), &md)?;
            println!(
                "wrote {} tables and discrepancies.md ({} entries) to {}",
                bundle.files.len(),
                bundle.discrepancies.len(),
                dir.display()
            );
            Ok(())
        }
        Command::Inventory { format } => {
            let format = parse_format(&cfg, &format)?;
            let area = cfg.harvest_area()?;
            let ctx = cfg.context();
            // the achievable ride ceiling: best rounded rides over the
            // catalog at the harvest radius
            let rides = cfg
                .helicopters
                .iter()
                .filter_map(|h| heli_feas::rides_per_day(h, cfg.radius_km, &cfg.envelope).ok())
                .map(|r| r.rounded)
                .max()
                .unwrap_or(0);
            let report = inventory_report(&area, &cfg.species, &cfg.distribution, rides)?;
            // section-per-ride interpretation on the first catalog airframe
            let heli = cfg.helicopters.first().ok_or_else(|| {
                Error::Config("inventory needs at least one helicopter".into())
            })?;
            let mut sections = Vec::new();
            for (label, dims) in
                [("scenario1", StemDims::scenario1()), ("scenario2", StemDims::scenario2())]
            {
                for sp in &cfg.species {
                    let n = sections_per_tree(heli, sp, dims, &cfg.envelope, ctx.mode)?;
                    sections.push((label, sp.id.clone(), n));
                }
            }
            print!("{}", render_inventory(&report, heli, &sections, format));
            Ok(())
        }
        Command::DumpConfig => {
            print!("{}", dump_config(&cfg));
            Ok(())
        }
    }
}

/// A bare helicopter id resolves only when exactly one condition is priced.
fn single_condition(cfg: &RunConfig, heli: &str) -> Result<String, Error> {
    let spec = cfg
        .helicopters
        .iter()
        .find(|h| h.id == heli)
        .ok_or_else(|| Error::Config(format!("unknown helicopter '{heli}'")))?;
    match spec.acquisition_prices.as_slice() {
        [(condition, _)] => Ok(condition.clone()),
        _ => Err(Error::Config(format!(
            "helicopter {heli} has several acquisition prices; use {heli}:<condition>"
        ))),
    }
}
