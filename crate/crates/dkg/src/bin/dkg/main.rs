//! Command-line front door: parameter parsing, sweep execution, CSV/JSON
//! emission for every survey table and figure, and the verification suite.

mod output;
mod params;

use clap::{Parser, Subcommand};
use dkg::config::Parity;
use dkg::figures::{self, FigureId};
use dkg::oscillator::{self, Branch, OscillatorSpec};
use dkg::scattering::{self, ScatterInput};
use dkg::{coulomb, verify, AngularState, DunklConfig, Error};
use output::{Cell, Format, Table};
use params::{parse_index_range, parse_sweep, PhysicsArgs};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use std::process::ExitCode;

/// Spectra, wavefunctions and pair creation of the d-dimensional
/// Dunkl-Klein-Gordon equation.
///
/// Outputs are CSV (default) or JSON with a metadata header echoing every
/// parameter; floats carry 12 significant digits. All quantities are in
/// natural units (hbar = c = 1) with e² = 1/137 where nucleus charge
/// numbers are reported. DKG_THREADS caps sweep concurrency.
#[derive(Parser)]
#[command(name = "dkg", version)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Re-run a JSON config produced by --dump-config
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Write the parsed run configuration as JSON and exit
    #[arg(long, global = true)]
    dump_config: Option<PathBuf>,

    /// Output path (stdout when omitted)
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Subcommand, Serialize, Deserialize, Clone)]
#[serde(tag = "name", rename_all = "kebab-case")]
enum Command {
    /// Oscillator energies over a range of n.
    ///
    /// Columns: n, energy, energy_negative, energy_nonrel
    OscSpectrum {
        #[command(flatten)]
        phys: PhysicsArgs,
        /// quantum numbers, "0..10" (inclusive) or a single value
        #[arg(long, default_value = "0..10")]
        n: String,
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
    },
    /// Radial oscillator profile at one n.
    ///
    /// Columns: rho, radial (C = 1), density (measure-normalized |R|²)
    OscProfile {
        #[command(flatten)]
        phys: PhysicsArgs,
        #[arg(long, default_value_t = 2)]
        n: u32,
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        #[arg(long, default_value_t = 1.0)]
        omega: f64,
        /// grid points on (0, rho_max]
        #[arg(long, default_value_t = 2000)]
        points: usize,
        /// override of the default rho_max = 4(2n + b)
        #[arg(long)]
        rho_max: Option<f64>,
    },
    /// Coulomb bound energies over a range of n.
    ///
    /// Columns: n, energy (quoted branch), energy_ascending, delta, kappa
    CoulombSpectrum {
        #[command(flatten)]
        phys: PhysicsArgs,
        #[arg(long, default_value = "0..5")]
        n: String,
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        #[arg(long, default_value_t = 1.0)]
        ze2: f64,
    },
    /// Coulomb bound energy against a Ze² sweep at fixed n.
    ///
    /// Columns: ze2, energy (quoted branch), energy_ascending
    CoulombSweep {
        #[command(flatten)]
        phys: PhysicsArgs,
        #[arg(long, default_value_t = 0)]
        n: u32,
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        /// sweep "start..stop:steps"
        #[arg(long, default_value = "0.1..1:50")]
        ze2: String,
    },
    /// Pair-creation probability and density against a Ze² sweep.
    ///
    /// Columns: ze2, beta_tilde, probability, density
    PairCreation {
        #[command(flatten)]
        phys: PhysicsArgs,
        #[arg(long, default_value_t = 1.0)]
        m: f64,
        /// propagating energy, |E| > m
        #[arg(long, default_value_t = 2.0)]
        energy: f64,
        /// sweep "start..stop:steps"
        #[arg(long)]
        ze2: String,
    },
    /// Critical nucleus charges.
    ///
    /// One row per configuration; --table (or no flags) emits the survey
    /// grid d ∈ 3..6, ell ∈ {1,2,3}, mu ∈ {+0.4, 0, -0.4}.
    /// Columns: d, ell, mu, z_critical, z_over_137, z_reduced_over_137
    CriticalCharge {
        #[arg(long)]
        d: Option<usize>,
        /// angular number on every axis
        #[arg(long)]
        l: Option<f64>,
        /// Dunkl parameter on every axis
        #[arg(long)]
        mu: Option<f64>,
        /// emit the full survey grid
        #[arg(long, default_value_t = false)]
        table: bool,
    },
    /// Dataset behind one survey figure.
    ///
    /// Columns: x, y, series
    Figure {
        /// figure id F1..F8
        #[arg(long)]
        id: String,
    },
    /// Oracle-vs-closed-form verification suite; nonzero exit on any
    /// tolerance breach.
    Verify {
        /// smaller eigensolver grids (quick smoke run)
        #[arg(long, default_value_t = false)]
        fast: bool,
    },
}

#[derive(Serialize, Deserialize, Clone)]
struct RunConfig {
    command: Command,
    output: Option<String>,
    format: Format,
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("DKG_THREADS") {
        if let Ok(count) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(count)
                .build_global();
        }
    }
    let cli = Cli::parse();

    let run = match build_run_config(&cli) {
        Ok(run) => run,
        Err(err) => return report(err),
    };

    if let Some(path) = &cli.dump_config {
        let json = serde_json::to_string_pretty(&run).expect("config serializes");
        if let Err(io) = std::fs::write(path, json + "\n") {
            eprintln!("error: cannot write config: {io}");
            return ExitCode::from(1);
        }
        return ExitCode::SUCCESS;
    }

    match execute(&run) {
        Ok(Outcome::Table(table)) => {
            let dest = run.output.as_deref();
            if let Err(io) = table.write(dest, run.format) {
                eprintln!("error: cannot write output: {io}");
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Ok(Outcome::Verify(pass)) => {
            if pass {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: verification suite reported a tolerance breach");
                ExitCode::from(2)
            }
        }
        Err(err) => report(err),
    }
}

fn report(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(if err.is_validation() { 1 } else { 2 })
}

fn build_run_config(cli: &Cli) -> Result<RunConfig, Error> {
    if let Some(path) = &cli.config {
        let text = std::fs::read_to_string(path).map_err(|io| {
            Error::InvalidParameter(format!("cannot read {}: {io}", path.display()))
        })?;
        let mut run: RunConfig = serde_json::from_str(&text)
            .map_err(|e| Error::InvalidParameter(format!("malformed config: {e}")))?;
        // command-line overrides still apply on top of a loaded config
        if let Some(out) = &cli.output {
            run.output = Some(out.display().to_string());
        }
        return Ok(run);
    }
    let command = cli
        .command
        .clone()
        .ok_or_else(|| Error::InvalidParameter("no command given (see --help)".into()))?;
    Ok(RunConfig {
        command,
        output: cli.output.as_ref().map(|p| p.display().to_string()),
        format: cli.format,
    })
}

enum Outcome {
    Table(Table),
    Verify(bool),
}

fn execute(run: &RunConfig) -> Result<Outcome, Error> {
    match &run.command {
        Command::OscSpectrum { phys, n, m, omega } => {
            osc_spectrum(phys, n, *m, *omega).map(Outcome::Table)
        }
        Command::OscProfile {
            phys,
            n,
            m,
            omega,
            points,
            rho_max,
        } => osc_profile(phys, *n, *m, *omega, *points, *rho_max).map(Outcome::Table),
        Command::CoulombSpectrum { phys, n, m, ze2 } => {
            coulomb_spectrum(phys, n, *m, *ze2).map(Outcome::Table)
        }
        Command::CoulombSweep { phys, n, m, ze2 } => {
            coulomb_sweep(phys, *n, *m, ze2).map(Outcome::Table)
        }
        Command::PairCreation {
            phys,
            m,
            energy,
            ze2,
        } => pair_creation(phys, *m, *energy, ze2).map(Outcome::Table),
        Command::CriticalCharge { d, l, mu, table } => {
            critical_charge(*d, *l, *mu, *table).map(Outcome::Table)
        }
        Command::Figure { id } => figure(id).map(Outcome::Table),
        Command::Verify { fast } => run_verify(*fast).map(Outcome::Verify),
    }
}

fn osc_spectrum(phys: &PhysicsArgs, n: &str, m: f64, omega: f64) -> Result<Table, Error> {
    let (config, ang) = phys.build()?;
    dkg::config::validate(&config, &ang)?;
    let spec = OscillatorSpec::new(config, ang, m, omega)?;
    let range = parse_index_range(n)?;
    let mut table = Table::new(
        "osc-spectrum",
        vec!["n", "energy", "energy_negative", "energy_nonrel"],
    );
    table.echo(phys);
    table.meta("n", n);
    table.meta("m", &m.to_string());
    table.meta("omega", &omega.to_string());
    for n in range {
        table.row(vec![
            Cell::Int(n as i64),
            Cell::Float(oscillator::energy(&spec, n, Branch::Positive)?),
            Cell::Float(oscillator::energy(&spec, n, Branch::Negative)?),
            Cell::Float(oscillator::energy_nonrel(&spec, n)),
        ]);
    }
    Ok(table)
}

fn osc_profile(
    phys: &PhysicsArgs,
    n: u32,
    m: f64,
    omega: f64,
    points: usize,
    rho_max: Option<f64>,
) -> Result<Table, Error> {
    let (config, ang) = phys.build()?;
    dkg::config::validate(&config, &ang)?;
    let spec = OscillatorSpec::new(config, ang, m, omega)?;
    if points < 2 {
        return Err(Error::InvalidParameter("need at least 2 grid points".into()));
    }
    let rho_max = rho_max.unwrap_or(4.0 * (2.0 * n as f64 + spec.kummer_b()));
    let grid: Vec<f64> = (1..=points)
        .map(|i| rho_max * i as f64 / points as f64)
        .collect();
    let profile = oscillator::density_profile(&spec, n, &grid)?;
    let mut table = Table::new("osc-profile", vec!["rho", "radial", "density"]);
    table.echo(phys);
    table.meta("n", &n.to_string());
    table.meta("m", &m.to_string());
    table.meta("omega", &omega.to_string());
    table.meta("rho_max", &rho_max.to_string());
    table.meta("norm_constant", &format!("{:.12e}", profile.norm_constant));
    for (i, &rho) in grid.iter().enumerate() {
        table.row(vec![
            Cell::Float(rho),
            Cell::Float(oscillator::radial_wavefunction(&spec, n, rho)?),
            Cell::Float(profile.values[i]),
        ]);
    }
    Ok(table)
}

fn coulomb_spectrum(phys: &PhysicsArgs, n: &str, m: f64, ze2: f64) -> Result<Table, Error> {
    let (config, ang) = phys.build()?;
    dkg::config::validate(&config, &ang)?;
    let spec = coulomb::CoulombSpec::new(config, ang, m, ze2)?;
    let range = parse_index_range(n)?;
    let mut table = Table::new(
        "coulomb-spectrum",
        vec!["n", "energy", "energy_ascending", "delta", "kappa"],
    );
    table.echo(phys);
    table.meta("n", n);
    table.meta("m", &m.to_string());
    table.meta("ze2", &ze2.to_string());
    table.meta(
        "branch_note",
        "energy uses the quoted (n - 1/2 - Delta)^2 denominator; energy_ascending \
         the eigensolver-matching (n + 1/2 + Delta)^2 form",
    );
    for n in range {
        let state = coulomb::bound_state(&spec, n)?;
        table.row(vec![
            Cell::Int(n as i64),
            Cell::Float(coulomb::energy(&spec, n)?),
            Cell::Float(state.energy),
            Cell::Float(state.delta),
            Cell::Float(state.kappa_b),
        ]);
    }
    Ok(table)
}

fn coulomb_sweep(phys: &PhysicsArgs, n: u32, m: f64, ze2: &str) -> Result<Table, Error> {
    let (config, ang) = phys.build()?;
    dkg::config::validate(&config, &ang)?;
    let sweep = parse_sweep(ze2)?;
    let rows: Result<Vec<_>, Error> = sweep
        .par_iter()
        .map(|&z| {
            let spec = coulomb::CoulombSpec::new(config.clone(), ang.clone(), m, z)?;
            Ok(vec![
                Cell::Float(z),
                Cell::Float(coulomb::energy(&spec, n)?),
                Cell::Float(coulomb::energy_ascending(&spec, n)?),
            ])
        })
        .collect();
    let mut table = Table::new("coulomb-sweep", vec!["ze2", "energy", "energy_ascending"]);
    table.echo(phys);
    table.meta("n", &n.to_string());
    table.meta("m", &m.to_string());
    table.meta("ze2_sweep", ze2);
    for row in rows? {
        table.row(row);
    }
    Ok(table)
}

fn pair_creation(phys: &PhysicsArgs, m: f64, energy: f64, ze2: &str) -> Result<Table, Error> {
    let (config, ang) = phys.build()?;
    dkg::config::validate(&config, &ang)?;
    let sweep = parse_sweep(ze2)?;
    let rows: Result<Vec<_>, Error> = sweep
        .par_iter()
        .map(|&z| {
            let input = ScatterInput::new(config.clone(), ang.clone(), m, z, energy)?;
            let result = scattering::scatter(&input)?;
            Ok(vec![
                Cell::Float(z),
                Cell::Float(result.beta_tilde),
                Cell::Float(result.probability),
                Cell::Float(result.density),
            ])
        })
        .collect();
    let mut table = Table::new(
        "pair-creation",
        vec!["ze2", "beta_tilde", "probability", "density"],
    );
    table.echo(phys);
    table.meta("m", &m.to_string());
    table.meta("energy", &energy.to_string());
    table.meta("ze2_sweep", ze2);
    table.meta("vartheta", &format!("{}", scattering::vartheta(&config)));
    for row in rows? {
        table.row(row);
    }
    Ok(table)
}

fn critical_charge(
    d: Option<usize>,
    l: Option<f64>,
    mu: Option<f64>,
    table_mode: bool,
) -> Result<Table, Error> {
    let mut table = Table::new(
        "critical-charge",
        vec![
            "d",
            "ell",
            "mu",
            "z_critical",
            "z_over_137",
            "z_reduced_over_137",
        ],
    );
    table.meta(
        "ell_convention",
        "ell on all d-1 axes; z_reduced uses the single-integer closed form",
    );
    let emit = |table: &mut Table, d: usize, ell: f64, mu: f64| -> Result<(), Error> {
        let config = DunklConfig::uniform(d, mu, Parity::Plus)?;
        let ang = AngularState::from_ell(&vec![ell; d - 1])?;
        let z = scattering::critical_charge_unchecked(&config, &ang);
        table.row(vec![
            Cell::Int(d as i64),
            Cell::Float(ell),
            Cell::Float(mu),
            Cell::Float(z.general),
            Cell::Float(z.general / dkg::INVERSE_FINE_STRUCTURE),
            match z.reduced_mu_zero {
                Some(reduced) => Cell::Float(reduced / dkg::INVERSE_FINE_STRUCTURE),
                None => Cell::Empty,
            },
        ]);
        Ok(())
    };
    if table_mode || (d.is_none() && l.is_none() && mu.is_none()) {
        for ell in [1.0, 2.0, 3.0] {
            for d in 3..=6 {
                for mu in [0.4, 0.0, -0.4] {
                    emit(&mut table, d, ell, mu)?;
                }
            }
        }
    } else {
        let d = d.ok_or_else(|| Error::InvalidParameter("--d required".into()))?;
        let ell = l.ok_or_else(|| Error::InvalidParameter("--l required".into()))?;
        emit(&mut table, d, ell, mu.unwrap_or(0.0))?;
    }
    Ok(table)
}

fn figure(id: &str) -> Result<Table, Error> {
    let id: FigureId = id.parse()?;
    let dataset = figures::figure_data(id)?;
    let mut table = Table::new("figure", vec!["x", "y", "series"]);
    for (key, value) in &dataset.metadata {
        table.meta(key, value);
    }
    table.meta("x_label", dataset.x_label);
    table.meta("y_label", dataset.y_label);
    for point in &dataset.points {
        table.row(vec![
            Cell::Float(point.x),
            Cell::Float(point.y),
            Cell::Text(point.series.clone()),
        ]);
    }
    Ok(table)
}

fn run_verify(fast: bool) -> Result<bool, Error> {
    let report = if fast {
        verify::VerifyReport {
            oscillator: verify::run_oscillator_suite(1200)?,
            coulomb: verify::run_coulomb_suite(1500)?,
            bogoliubov: verify::run_bogoliubov_suite()?,
            special_functions: verify::run_special_function_suite()?,
        }
    } else {
        verify::run_full()?
    };
    print!("{report}");
    Ok(report.all_pass())
}
