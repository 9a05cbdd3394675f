//! `unfriend` command-line front end.

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use unfriend::calibration::calibrate;
use unfriend::config::parse_config;
use unfriend::montecarlo::{reference_grid, run_grid, simulate, GridCell, RunOptions};
use unfriend::report::{self, RunMetadata};
use unfriend::{Error, SimParams};

/// Exit status when inputs are rejected (bad flags, config, or parameters).
const EXIT_INVALID: u8 = 2;
/// Exit status when a run started but did not complete every cell.
const EXIT_FAILED: u8 = 1;

#[derive(Parser)]
#[command(
    name = "unfriend",
    version,
    about = "Monte Carlo audit of peer-effect estimates under homophilous tie dissolution"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the built-in 60-cell reference grid.
    ReplicateTable1 {
        /// Comma-separated reference rows (1-60) to run instead of all of them.
        #[arg(long, value_delimiter = ',')]
        rows: Vec<usize>,
        /// Population size.
        #[arg(long, default_value_t = SimParams::default().n)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run a grid described by a configuration file.
    Run {
        config: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Simulate one small two-wave network and export it.
    SampleNetwork {
        /// Population size.
        #[arg(long, default_value_t = 120)]
        n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Output prefix: writes PREFIX.nodes.csv and PREFIX.edges.csv, or PREFIX.dot.
        #[arg(long, default_value = "sample")]
        out: PathBuf,
    },
    /// Score the candidate conventions against the reference rows.
    Calibrate {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Replications per candidate cell.
        #[arg(long, default_value_t = 200)]
        reps: usize,
        #[arg(long)]
        threads: Option<usize>,
        /// Report path; printed to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// Master seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Replications per cell.
    #[arg(long)]
    reps: Option<usize>,
    /// Worker threads (default: available parallelism).
    #[arg(long)]
    threads: Option<usize>,
    /// Output CSV; the metadata sidecar goes next to it with a `.meta` suffix.
    #[arg(long, default_value = "results.csv")]
    out: PathBuf,
    /// Also write long-format plot data to this path.
    #[arg(long)]
    plot_data: Option<PathBuf>,
    /// Suppress the progress line and the summary table.
    #[arg(long)]
    quiet: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Dot,
}

enum Failure {
    Invalid(Error),
    Runtime(Error),
    Cells(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParam { .. } | Error::Config { .. } | Error::NoCells => Failure::Invalid(e),
            other => Failure::Runtime(other),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::ReplicateTable1 { rows, n, common } => replicate_table1(&rows, n, &common),
        Command::Run { config, common } => run_config(&config, &common),
        Command::SampleNetwork { n, seed, format, out } => sample_network(n, seed, format, &out),
        Command::Calibrate {
            seed,
            reps,
            threads,
            out,
        } => run_calibration(seed, reps, threads, out.as_deref()),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAILED)
        }
        Err(Failure::Cells(failed)) => {
            eprintln!("error: {failed} cell(s) did not complete; see the status column");
            ExitCode::from(EXIT_FAILED)
        }
    }
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn replicate_table1(rows: &[usize], n: usize, common: &Common) -> Result<(), Failure> {
    if let Some(&bad) = rows.iter().find(|&&r| !(1..=60).contains(&r)) {
        return Err(Error::param("rows", format!("row {bad} outside 1..=60")).into());
    }
    let mut base = SimParams {
        n,
        ..SimParams::default()
    };
    apply_overrides(&mut base, common);
    let cells: Vec<GridCell> = reference_grid(&base)
        .into_iter()
        .filter(|c| rows.is_empty() || rows.contains(&(c.index + 1)))
        .collect();
    for cell in &cells {
        cell.params.clone().validate()?;
    }
    execute("replicate-table1", &cells, common.threads, common)
}

fn run_config(path: &Path, common: &Common) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Runtime(Error::io(path, e)))?;
    let mut config = parse_config(&text).map_err(|e| match e {
        Error::Config { line, message } => Failure::Invalid(Error::Config {
            line,
            message: format!("{}: {message}", path.display()),
        }),
        other => other.into(),
    })?;
    apply_overrides(&mut config.base, common);
    let cells = config.cells()?;
    execute("run", &cells, common.threads.or(config.threads), common)
}

fn apply_overrides(base: &mut SimParams, common: &Common) {
    if let Some(seed) = common.seed {
        base.master_seed = seed;
    }
    if let Some(reps) = common.reps {
        base.replications = reps;
    }
}

fn progress_printer(quiet: bool) -> impl Fn(usize, usize) + Sync {
    let last = AtomicUsize::new(usize::MAX);
    move |done, total| {
        if quiet {
            return;
        }
        let pct = done * 100 / total.max(1);
        if last.swap(pct, Ordering::Relaxed) != pct {
            let mut err = std::io::stderr().lock();
            let _ = write!(err, "\rreplications {done}/{total} ({pct}%)");
            if done == total {
                let _ = writeln!(err);
            }
        }
    }
}

fn execute(command: &str, cells: &[GridCell], threads: Option<usize>, common: &Common) -> Result<(), Failure> {
    let threads = threads.unwrap_or_else(default_threads);
    // fail before a long run rather than after it
    std::fs::File::create(&common.out).map_err(|e| Failure::Runtime(Error::io(&common.out, e)))?;
    let progress = progress_printer(common.quiet);
    let opts = RunOptions {
        threads: Some(threads),
        progress: Some(&progress),
    };
    let started = Instant::now();
    let results = run_grid(cells, &opts)?;
    let elapsed = started.elapsed().as_secs_f64();

    let mut csv = Vec::new();
    report::write_grid_csv(&mut csv, cells, &results)?;
    report::write_file(&common.out, &csv)?;
    if let Some(path) = &common.plot_data {
        let mut plot = Vec::new();
        report::write_plot_data(&mut plot, cells, &results)?;
        report::write_file(path, &plot)?;
    }

    let failed = results.iter().filter(|r| r.is_err()).count();
    let meta = metadata(command, cells, threads, failed, elapsed);
    report::write_file(&report::sidecar_path(&common.out), meta.render().as_bytes())?;
    if meta.below_recommended_minimum() && !common.quiet {
        eprintln!(
            "warning: replications below recommended minimum ({} < {})",
            meta.replications,
            report::RECOMMENDED_MIN_REPLICATIONS
        );
    }
    if !common.quiet {
        print!("{}", report::render_table(cells, &results));
    }
    if failed > 0 {
        return Err(Failure::Cells(failed));
    }
    Ok(())
}

fn metadata(command: &str, cells: &[GridCell], threads: usize, failed: usize, elapsed: f64) -> RunMetadata {
    let first = &cells[0].params;
    let mut formation_eta0: Vec<f64> = Vec::new();
    for cell in cells {
        if !formation_eta0.contains(&cell.params.eta0_form) {
            formation_eta0.push(cell.params.eta0_form);
        }
    }
    RunMetadata {
        command: command.to_string(),
        seed: first.master_seed,
        replications: first.replications,
        threads,
        n: first.n,
        cells: cells.len(),
        failed_cells: failed,
        formation_eta0,
        options: first.model,
        wall_time_secs: elapsed,
    }
}

/// Parameters of the illustrative two-wave network.
fn sample_params(n: usize, seed: u64) -> SimParams {
    SimParams {
        n,
        eta0_form: -2.5,
        eta1_form: 0.05,
        eta0_ret: 1.0,
        eta1_ret: 0.05,
        shock_sd: 5.0,
        b1: 0.0,
        replications: 1,
        master_seed: seed,
        ..SimParams::default()
    }
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(suffix);
    PathBuf::from(name)
}

fn sample_network(n: usize, seed: u64, format: Format, out: &Path) -> Result<(), Failure> {
    let params = sample_params(n, seed).validate()?;
    let sim = simulate(&params, 0, 0)?;
    match format {
        Format::Csv => {
            let mut nodes = Vec::new();
            report::write_nodes_csv(&mut nodes, &sim)?;
            report::write_file(&with_suffix(out, ".nodes.csv"), &nodes)?;
            let mut edges = Vec::new();
            report::write_edges_csv(&mut edges, &sim)?;
            report::write_file(&with_suffix(out, ".edges.csv"), &edges)?;
        }
        Format::Dot => {
            report::write_file(&with_suffix(out, ".dot"), report::render_dot(&sim)?.as_bytes())?;
        }
    }
    Ok(())
}

fn run_calibration(seed: u64, reps: usize, threads: Option<usize>, out: Option<&Path>) -> Result<(), Failure> {
    if reps == 0 {
        return Err(Error::param("reps", "must be at least 1").into());
    }
    let base = SimParams {
        master_seed: seed,
        ..SimParams::default()
    };
    let progress = progress_printer(false);
    let opts = RunOptions {
        threads: Some(threads.unwrap_or_else(default_threads)),
        progress: Some(&progress),
    };
    let calibration = calibrate(&base, reps, &opts)?;
    let text = calibration.render();
    match out {
        Some(path) => report::write_file(path, text.as_bytes())?,
        None => print!("{text}"),
    }
    Ok(())
}
