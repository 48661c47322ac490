//! Command-line front end: parse flags and an optional flat config file into
//! a validated run configuration, execute one analysis mode, and emit
//! deterministic CSV/JSON/SVG artifacts.
//!
//! Modes: `rh` (jump conditions and velocity branches), `classify`
//! (equilibrium spectra and the monotonicity verdict), `profile` (shoot the
//! connecting orbit), `loop` (frictionless homoclinic loop), `phase` (loop
//! plus orbit in one dataset), `sweep-mu` and `sweep-vacuum` (parameter
//! sweeps). Exit status is 0 on success, 1 on a numerical/solver failure,
//! and 2 on a usage error. Output files are named from the parameters, never
//! from the clock, and identical configurations produce byte-identical
//! files. Nothing is left behind on failure: artifacts are computed fully in
//! memory before the first write, and already-written files are removed if a
//! later write fails.

mod config_file;
mod emit;
mod svg;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::experiments::{
    sweep_vacuum, sweep_viscosity, SweepBase, SweepOutcome, SweepRowOutcome, SweepSpec,
    SweepVariable,
};
use crate::integrator::{profile_fields, shoot_heteroclinic, FieldRow, Profile, ShootOptions};
use crate::model::{FluidParams, ProfileConstants};
use crate::phase_plane::{
    equilibrium_report, classify_monotonicity, find_equilibria, find_inflection_p0,
    homoclinic_loop, HomoclinicLoop,
};
use crate::rankine_hugoniot::{
    check_profile_hypotheses, lax_classify, rh_residuals, rh_velocity_branches,
    select_admissible_branch, sonic_classify, BranchVelocities, EndState, ShockData,
};
use config_file::ConfigFile;

/// Data formats the emitters understand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EmitFormat {
    Csv,
    Json,
    Svg,
}

const DEFAULT_LOOP_SAMPLES: usize = 512;

/// Config-file keys the parser accepts; anything else is rejected by name.
const KNOWN_KEYS: [&str; 17] = [
    "gamma",
    "k",
    "mu",
    "s",
    "rho-minus",
    "rho-plus",
    "mass-flux",
    "bernoulli",
    "mu-list",
    "rho-plus-list",
    "samples",
    "stride",
    "out-dir",
    "format",
    "tol",
    "perturbation",
    "y-max",
];

#[derive(Parser, Debug)]
#[command(
    name = "qhd-profiles",
    version,
    about = "Traveling-wave profiles for 1-D quantum hydrodynamics with nonlinear viscosity",
    after_help = "Numeric parameters may also come from --config (flat `key = value` lines, \
                  `#` comments, keys named like the flags); command-line flags win."
)]
struct CliArgs {
    /// Directory for emitted files [default: .]
    #[arg(long, global = true, value_name = "DIR")]
    out_dir: Option<PathBuf>,
    /// Output format, repeatable [default: csv]
    #[arg(long = "format", global = true, value_enum, value_name = "FMT")]
    format: Vec<EmitFormat>,
    /// Flat key = value config file supplying defaults for any parameter
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Integrator error tolerance [default: 1e-10]
    #[arg(long, global = true, value_name = "TOL", allow_negative_numbers = true)]
    tol: Option<f64>,
    /// Shooting offset from the saddle [default: 1e-6 * P_saddle]
    #[arg(long, global = true, value_name = "DELTA", allow_negative_numbers = true)]
    perturbation: Option<f64>,
    /// Abandon shooting past this profile length [default: 1e4]
    #[arg(long, global = true, value_name = "Y", allow_negative_numbers = true)]
    y_max: Option<f64>,
    /// Keep every Nth profile sample in outputs [default: 1]
    #[arg(long, global = true, value_name = "N")]
    stride: Option<usize>,
    #[command(subcommand)]
    mode: ModeArgs,
}

/// Physical parameters; every mode reads the subset it needs, so one config
/// file can serve all modes.
#[derive(Args, Debug, Default)]
struct PhysicalArgs {
    /// Adiabatic exponent (>= 1; exactly 1 selects the isothermal law)
    #[arg(long, allow_negative_numbers = true)]
    gamma: Option<f64>,
    /// Dispersion coefficient (> 0)
    #[arg(long, allow_negative_numbers = true)]
    k: Option<f64>,
    /// Viscosity coefficient (> 0; the loop geometry ignores it)
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// Wave speed (nonzero)
    #[arg(long, allow_negative_numbers = true)]
    s: Option<f64>,
    /// Upstream density, the y -> -inf end state
    #[arg(long, allow_negative_numbers = true)]
    rho_minus: Option<f64>,
    /// Downstream density, the y -> +inf end state
    #[arg(long, allow_negative_numbers = true)]
    rho_plus: Option<f64>,
    /// Co-moving mass flux A (with --bernoulli, replaces the density pair)
    #[arg(long, allow_negative_numbers = true)]
    mass_flux: Option<f64>,
    /// Bernoulli constant B (with --mass-flux, replaces the density pair)
    #[arg(long, allow_negative_numbers = true)]
    bernoulli: Option<f64>,
}

#[derive(Args, Debug, Default)]
struct SubArgs {
    #[command(flatten)]
    phys: PhysicalArgs,
    /// Loop sample count for `loop` and `phase` [default: 512]
    #[arg(long, value_name = "N")]
    samples: Option<usize>,
    /// Comma-separated viscosity values for `sweep-mu`
    #[arg(long, value_delimiter = ',', value_name = "LIST", allow_negative_numbers = true)]
    mu_list: Option<Vec<f64>>,
    /// Comma-separated downstream densities for `sweep-vacuum`
    #[arg(long, value_delimiter = ',', value_name = "LIST", allow_negative_numbers = true)]
    rho_plus_list: Option<Vec<f64>>,
}

#[derive(Subcommand, Debug)]
enum ModeArgs {
    /// Solve the jump conditions: both velocity branches, the admissible
    /// selection, and Lax/sonic classification
    Rh(SubArgs),
    /// Equilibrium spectra and the monotone/oscillatory verdict, without
    /// integrating
    Classify(SubArgs),
    /// Shoot the connecting orbit and emit the (y, P, Q, rho, u) table
    Profile(SubArgs),
    /// Sample the frictionless homoclinic loop and report its endpoints
    Loop(SubArgs),
    /// Loop plus connecting orbit in one phase-plane dataset
    Phase(SubArgs),
    /// Viscosity sweep at fixed end states
    SweepMu(SubArgs),
    /// Downstream-density sweep toward vacuum at fixed viscosity
    SweepVacuum(SubArgs),
}

/// How the shock is specified: an end-state pair, or the profile constants
/// directly.
#[derive(Debug, Clone, Copy, PartialEq)]
enum ShockInput {
    EndStates {
        gamma: f64,
        s: f64,
        rho_minus: f64,
        rho_plus: f64,
    },
    Constants {
        gamma: f64,
        s: f64,
        mass_flux: f64,
        bernoulli: f64,
    },
}

#[derive(Debug, Clone, PartialEq)]
enum Mode {
    Rh {
        gamma: f64,
        s: f64,
        rho_minus: f64,
        rho_plus: f64,
    },
    Classify {
        input: ShockInput,
        mu: f64,
        k: f64,
    },
    Profile {
        input: ShockInput,
        mu: f64,
        k: f64,
        opts: ShootOptions,
    },
    Loop {
        input: ShockInput,
        mu: f64,
        k: f64,
        samples: usize,
    },
    Phase {
        input: ShockInput,
        mu: f64,
        k: f64,
        samples: usize,
        opts: ShootOptions,
    },
    SweepMu {
        base: SweepBase,
        rho_plus: f64,
        values: Vec<f64>,
        opts: ShootOptions,
    },
    SweepVacuum {
        base: SweepBase,
        mu: f64,
        values: Vec<f64>,
        opts: ShootOptions,
    },
}

/// A fully validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    mode: Mode,
    out_dir: PathBuf,
    formats: Vec<EmitFormat>,
    stride: usize,
}

/// What an argument list asks for: a run, or an informational text
/// (help/version) that exits successfully without running anything.
#[derive(Debug)]
pub enum Invocation {
    Run(RunConfig),
    Info(String),
}

/// Parses command-line tokens plus the optional `--config` file into a
/// validated configuration. Flags override file values; unknown config keys
/// are rejected by name.
pub fn parse_config<I, T>(args: I) -> Result<Invocation>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match CliArgs::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err)
            if err.kind() == ErrorKind::DisplayHelp
                || err.kind() == ErrorKind::DisplayVersion =>
        {
            return Ok(Invocation::Info(err.render().to_string()));
        }
        Err(err) => return Err(Error::usage(err.render().to_string())),
    };

    let file = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| {
                Error::usage(format!("cannot read config file `{}`: {e}", path.display()))
            })?;
            let file = ConfigFile::parse(&text)?;
            if let Some(unknown) = file.keys().find(|k| !KNOWN_KEYS.contains(k)) {
                return Err(Error::usage(format!(
                    "unknown config key `{unknown}` in `{}`",
                    path.display()
                )));
            }
            file
        }
        None => ConfigFile::default(),
    };

    let formats = resolve_formats(&cli.format, &file)?;
    let stride = match cli.stride {
        Some(n) => n,
        None => file.get_usize("stride")?.unwrap_or(1),
    };
    if stride == 0 {
        return Err(Error::usage("`stride` must be at least 1"));
    }
    let opts = shoot_options(&cli, &file)?;
    let mode = build_mode(&cli.mode, &file, opts)?;
    let out_dir = match cli.out_dir {
        Some(dir) => dir,
        None => file
            .get("out-dir")
            .map(PathBuf::from)
            .unwrap_or_else(|| PathBuf::from(".")),
    };

    if matches!(mode, Mode::Rh { .. } | Mode::Classify { .. })
        && formats.contains(&EmitFormat::Svg)
    {
        return Err(Error::usage(
            "svg output is not available for `rh` and `classify`: there is no curve to plot",
        ));
    }

    Ok(Invocation::Run(RunConfig {
        mode,
        out_dir,
        formats,
        stride,
    }))
}

fn resolve_formats(flags: &[EmitFormat], file: &ConfigFile) -> Result<Vec<EmitFormat>> {
    let mut formats: Vec<EmitFormat> = if !flags.is_empty() {
        flags.to_vec()
    } else if let Some(raw) = file.get("format") {
        raw.split(',')
            .map(|item| match item.trim() {
                "csv" => Ok(EmitFormat::Csv),
                "json" => Ok(EmitFormat::Json),
                "svg" => Ok(EmitFormat::Svg),
                other => Err(Error::usage(format!(
                    "config key `format` has unknown value `{other}` (expected csv, json, svg)"
                ))),
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        vec![EmitFormat::Csv]
    };
    // Canonical order and no duplicates, so emission order is stable no
    // matter how the flags were spelled.
    let mut ordered = Vec::new();
    for fmt in [EmitFormat::Csv, EmitFormat::Json, EmitFormat::Svg] {
        if formats.contains(&fmt) {
            ordered.push(fmt);
        }
    }
    formats = ordered;
    Ok(formats)
}

fn shoot_options(cli: &CliArgs, file: &ConfigFile) -> Result<ShootOptions> {
    let mut opts = ShootOptions::default();
    if let Some(tol) = merge_f64(cli.tol, file, "tol")? {
        opts.tol = tol;
    }
    opts.perturbation = merge_f64(cli.perturbation, file, "perturbation")?;
    if let Some(y_max) = merge_f64(cli.y_max, file, "y-max")? {
        opts.y_max = y_max;
    }
    Ok(opts)
}

fn merge_f64(flag: Option<f64>, file: &ConfigFile, key: &'static str) -> Result<Option<f64>> {
    match flag {
        Some(v) => Ok(Some(v)),
        None => file.get_f64(key),
    }
}

fn require(value: Option<f64>, key: &'static str) -> Result<f64> {
    value.ok_or_else(|| {
        Error::usage(format!(
            "missing required parameter `{key}`: pass --{key} or set `{key}` in the config file"
        ))
    })
}

fn build_mode(mode: &ModeArgs, file: &ConfigFile, opts: ShootOptions) -> Result<Mode> {
    let sub = match mode {
        ModeArgs::Rh(sub)
        | ModeArgs::Classify(sub)
        | ModeArgs::Profile(sub)
        | ModeArgs::Loop(sub)
        | ModeArgs::Phase(sub)
        | ModeArgs::SweepMu(sub)
        | ModeArgs::SweepVacuum(sub) => sub,
    };
    let phys = &sub.phys;
    let gamma = merge_f64(phys.gamma, file, "gamma")?;
    let k = merge_f64(phys.k, file, "k")?;
    let mu = merge_f64(phys.mu, file, "mu")?;
    let s = merge_f64(phys.s, file, "s")?;
    let rho_minus = merge_f64(phys.rho_minus, file, "rho-minus")?;
    let rho_plus = merge_f64(phys.rho_plus, file, "rho-plus")?;
    let mass_flux = merge_f64(phys.mass_flux, file, "mass-flux")?;
    let bernoulli = merge_f64(phys.bernoulli, file, "bernoulli")?;
    let samples = match sub.samples {
        Some(n) => Some(n),
        None => file.get_usize("samples")?,
    }
    .unwrap_or(DEFAULT_LOOP_SAMPLES);
    if samples < 2 {
        return Err(Error::usage("`samples` must be at least 2"));
    }

    let shock_input = || -> Result<ShockInput> {
        let gamma = require(gamma, "gamma")?;
        let s = require(s, "s")?;
        let have_states = rho_minus.is_some() || rho_plus.is_some();
        let have_constants = mass_flux.is_some() || bernoulli.is_some();
        if have_states && have_constants {
            return Err(Error::usage(
                "conflicting shock parameterizations: give either --rho-minus/--rho-plus \
                 or --mass-flux/--bernoulli, not both",
            ));
        }
        if have_constants {
            return Ok(ShockInput::Constants {
                gamma,
                s,
                mass_flux: require(mass_flux, "mass-flux")?,
                bernoulli: require(bernoulli, "bernoulli")?,
            });
        }
        Ok(ShockInput::EndStates {
            gamma,
            s,
            rho_minus: require(rho_minus, "rho-minus")?,
            rho_plus: require(rho_plus, "rho-plus")?,
        })
    };

    match mode {
        ModeArgs::Rh(_) => Ok(Mode::Rh {
            gamma: require(gamma, "gamma")?,
            s: require(s, "s")?,
            rho_minus: require(rho_minus, "rho-minus")?,
            rho_plus: require(rho_plus, "rho-plus")?,
        }),
        ModeArgs::Classify(_) => Ok(Mode::Classify {
            input: shock_input()?,
            mu: require(mu, "mu")?,
            k: require(k, "k")?,
        }),
        ModeArgs::Profile(_) => Ok(Mode::Profile {
            input: shock_input()?,
            mu: require(mu, "mu")?,
            k: require(k, "k")?,
            opts,
        }),
        ModeArgs::Loop(_) => Ok(Mode::Loop {
            input: shock_input()?,
            // The loop is a property of the frictionless system; mu only
            // has to be a valid fluid parameter.
            mu: mu.unwrap_or(1.0),
            k: require(k, "k")?,
            samples,
        }),
        ModeArgs::Phase(_) => Ok(Mode::Phase {
            input: shock_input()?,
            mu: require(mu, "mu")?,
            k: require(k, "k")?,
            samples,
            opts,
        }),
        ModeArgs::SweepMu(sub) => {
            let values = match &sub.mu_list {
                Some(list) => Some(list.clone()),
                None => file.get_f64_list("mu-list")?,
            }
            .ok_or_else(|| {
                Error::usage(
                    "missing required parameter `mu-list`: pass --mu-list or set `mu-list` \
                     in the config file",
                )
            })?;
            Ok(Mode::SweepMu {
                base: SweepBase {
                    gamma: require(gamma, "gamma")?,
                    k: require(k, "k")?,
                    s: require(s, "s")?,
                    rho_minus: require(rho_minus, "rho-minus")?,
                },
                rho_plus: require(rho_plus, "rho-plus")?,
                values,
                opts,
            })
        }
        ModeArgs::SweepVacuum(sub) => {
            let values = match &sub.rho_plus_list {
                Some(list) => Some(list.clone()),
                None => file.get_f64_list("rho-plus-list")?,
            }
            .ok_or_else(|| {
                Error::usage(
                    "missing required parameter `rho-plus-list`: pass --rho-plus-list or set \
                     `rho-plus-list` in the config file",
                )
            })?;
            Ok(Mode::SweepVacuum {
                base: SweepBase {
                    gamma: require(gamma, "gamma")?,
                    k: require(k, "k")?,
                    s: require(s, "s")?,
                    rho_minus: require(rho_minus, "rho-minus")?,
                },
                mu: require(mu, "mu")?,
                values,
                opts,
            })
        }
    }
}

/// One output file, computed fully in memory before anything is written.
struct Artifact {
    name: String,
    bytes: Vec<u8>,
}

/// Executes the configured mode and writes its artifacts, returning the
/// paths written. On a failed write, everything already written is removed.
pub fn run(config: &RunConfig) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(&config.out_dir).map_err(|e| {
        Error::usage(format!(
            "cannot create output directory `{}`: {e}",
            config.out_dir.display()
        ))
    })?;
    let artifacts = compute_artifacts(config)?;
    let mut written: Vec<PathBuf> = Vec::new();
    for artifact in &artifacts {
        let path = config.out_dir.join(&artifact.name);
        if let Err(e) = fs::write(&path, &artifact.bytes) {
            let _ = fs::remove_file(&path);
            for earlier in &written {
                let _ = fs::remove_file(earlier);
            }
            return Err(Error::Io(e));
        }
        written.push(path);
    }
    Ok(written)
}

/// Full command-line entry point: parse, run, report, and map errors to the
/// documented exit statuses (0 success, 1 solver failure, 2 usage).
pub fn run_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match parse_config(args) {
        Ok(Invocation::Info(text)) => {
            print!("{text}");
            0
        }
        Ok(Invocation::Run(config)) => match run(&config) {
            Ok(paths) => {
                for path in &paths {
                    println!("wrote {}", path.display());
                }
                0
            }
            Err(err) => {
                eprintln!("error: {err}");
                if err.is_usage() {
                    2
                } else {
                    1
                }
            }
        },
        Err(err) => {
            eprintln!("{err}");
            2
        }
    }
}

fn compute_artifacts(config: &RunConfig) -> Result<Vec<Artifact>> {
    match &config.mode {
        Mode::Rh {
            gamma,
            s,
            rho_minus,
            rho_plus,
        } => rh_artifacts(*gamma, *s, *rho_minus, *rho_plus, &config.formats),
        Mode::Classify { input, mu, k } => classify_artifacts(input, *mu, *k, &config.formats),
        Mode::Profile {
            input,
            mu,
            k,
            opts,
        } => profile_artifacts(input, *mu, *k, opts, &config.formats, config.stride),
        Mode::Loop {
            input,
            mu,
            k,
            samples,
        } => loop_artifacts(input, *mu, *k, *samples, &config.formats),
        Mode::Phase {
            input,
            mu,
            k,
            samples,
            opts,
        } => phase_artifacts(input, *mu, *k, *samples, opts, &config.formats, config.stride),
        Mode::SweepMu {
            base,
            rho_plus,
            values,
            opts,
        } => {
            let spec = SweepSpec::new(
                *base,
                SweepVariable::Mu {
                    values: values.clone(),
                    rho_plus: *rho_plus,
                },
                *opts,
            )?;
            let outcome = sweep_viscosity(&spec)?;
            let label = format!(
                "sweep-mu-{}_rp{}_mu{}",
                base_label(base),
                num(*rho_plus),
                join_nums(values)
            );
            sweep_artifacts(&outcome, &label, "mu", &config.formats, config.stride)
        }
        Mode::SweepVacuum {
            base,
            mu,
            values,
            opts,
        } => {
            let spec = SweepSpec::new(
                *base,
                SweepVariable::RhoPlus {
                    values: values.clone(),
                    mu: *mu,
                },
                *opts,
            )?;
            let outcome = sweep_vacuum(&spec)?;
            let label = format!(
                "sweep-vacuum-{}_mu{}_rp{}",
                base_label(base),
                num(*mu),
                join_nums(values)
            );
            sweep_artifacts(&outcome, &label, "rp", &config.formats, config.stride)
        }
    }
}

/// Shortest exact decimal form of a parameter for use in file names.
fn num(v: f64) -> String {
    format!("{v}")
}

fn join_nums(values: &[f64]) -> String {
    values.iter().map(|v| num(*v)).collect::<Vec<_>>().join("_")
}

fn base_label(base: &SweepBase) -> String {
    format!(
        "g{}_k{}_s{}_rm{}",
        num(base.gamma),
        num(base.k),
        num(base.s),
        num(base.rho_minus)
    )
}

fn input_label(input: &ShockInput) -> String {
    match input {
        ShockInput::EndStates {
            gamma,
            s,
            rho_minus,
            rho_plus,
        } => format!(
            "g{}_s{}_rm{}_rp{}",
            num(*gamma),
            num(*s),
            num(*rho_minus),
            num(*rho_plus)
        ),
        ShockInput::Constants {
            gamma,
            s,
            mass_flux,
            bernoulli,
        } => format!(
            "g{}_s{}_mf{}_bn{}",
            num(*gamma),
            num(*s),
            num(*mass_flux),
            num(*bernoulli)
        ),
    }
}

fn input_json(input: &ShockInput, mu: Option<f64>, k: Option<f64>) -> Value {
    let mut obj = match input {
        ShockInput::EndStates {
            gamma,
            s,
            rho_minus,
            rho_plus,
        } => json!({
            "gamma": gamma,
            "s": s,
            "rho_minus": rho_minus,
            "rho_plus": rho_plus,
        }),
        ShockInput::Constants {
            gamma,
            s,
            mass_flux,
            bernoulli,
        } => json!({
            "gamma": gamma,
            "s": s,
            "mass_flux": mass_flux,
            "bernoulli": bernoulli,
        }),
    };
    let map = obj.as_object_mut().expect("inputs are an object");
    if let Some(mu) = mu {
        map.insert("mu".to_string(), json!(mu));
    }
    if let Some(k) = k {
        map.insert("k".to_string(), json!(k));
    }
    obj
}

/// Builds the shock for either parameterization. The constants path locates
/// the two positive roots of the field first.
fn build_shock(input: &ShockInput, params: &FluidParams) -> Result<ShockData> {
    match *input {
        ShockInput::EndStates {
            gamma,
            s,
            rho_minus,
            rho_plus,
        } => select_admissible_branch(rho_minus, rho_plus, s, gamma),
        ShockInput::Constants {
            gamma,
            s,
            mass_flux,
            bernoulli,
        } => {
            let c = ProfileConstants::new(mass_flux, bernoulli, s)?;
            let roots = find_equilibria(&c, params, None)?;
            ShockData::from_profile_constants(&c, gamma, roots)
        }
    }
}

/// Keeps every `stride`-th row, always retaining the final one.
fn thin<T: Copy>(items: &[T], stride: usize) -> Vec<T> {
    if stride <= 1 || items.len() <= 2 {
        return items.to_vec();
    }
    let mut out: Vec<T> = items.iter().copied().step_by(stride).collect();
    if (items.len() - 1) % stride != 0 {
        out.push(*items.last().expect("non-empty by the len check"));
    }
    out
}

fn rh_artifacts(
    gamma: f64,
    s: f64,
    rho_minus: f64,
    rho_plus: f64,
    formats: &[EmitFormat],
) -> Result<Vec<Artifact>> {
    let branches = rh_velocity_branches(rho_minus, rho_plus, s, gamma)?;
    let classify_branch = |b: &BranchVelocities| -> Result<Option<&'static str>> {
        let left = EndState::new(rho_minus, b.u_minus)?;
        let right = EndState::new(rho_plus, b.u_plus)?;
        Ok(lax_classify(&left, &right, s, gamma)?.map(|f| f.as_str()))
    };
    let family_plus = classify_branch(&branches.plus_branch)?;
    let family_minus = classify_branch(&branches.minus_branch)?;
    let selected = select_admissible_branch(rho_minus, rho_plus, s, gamma)?;
    let selected_is_plus =
        (selected.left().u() - branches.plus_branch.u_minus).abs() <= f64::EPSILON.sqrt();
    let sonic_left = sonic_classify(&selected.left(), gamma)?;
    let sonic_right = sonic_classify(&selected.right(), gamma)?;
    let residuals = rh_residuals(&selected.left(), &selected.right(), s, gamma)?;
    let c = selected.constants();

    let label = format!(
        "rh-g{}_s{}_rm{}_rp{}",
        num(gamma),
        num(s),
        num(rho_minus),
        num(rho_plus)
    );
    let mut artifacts = Vec::new();
    for format in formats {
        match format {
            EmitFormat::Csv => {
                let row = |name: &str, b: &BranchVelocities, family: Option<&str>, sel: bool| {
                    vec![
                        name.to_string(),
                        emit::fmt_f64(b.u_minus),
                        emit::fmt_f64(b.u_plus),
                        family.unwrap_or("").to_string(),
                        sel.to_string(),
                    ]
                };
                let rows = vec![
                    row(
                        "plus",
                        &branches.plus_branch,
                        family_plus,
                        selected_is_plus,
                    ),
                    row(
                        "minus",
                        &branches.minus_branch,
                        family_minus,
                        !selected_is_plus,
                    ),
                ];
                artifacts.push(Artifact {
                    name: format!("{label}.csv"),
                    bytes: emit::csv_document("branch,u_minus,u_plus,family,selected", &rows),
                });
            }
            EmitFormat::Json => {
                let branch_json = |b: &BranchVelocities, family: Option<&str>| {
                    json!({
                        "u_minus": b.u_minus,
                        "u_plus": b.u_plus,
                        "family": family,
                    })
                };
                let doc = json!({
                    "inputs": { "gamma": gamma, "s": s, "rho_minus": rho_minus, "rho_plus": rho_plus },
                    "d": branches.d,
                    "branches": {
                        "plus": branch_json(&branches.plus_branch, family_plus),
                        "minus": branch_json(&branches.minus_branch, family_minus),
                    },
                    "selected": {
                        "branch": if selected_is_plus { "plus" } else { "minus" },
                        "family": selected.family().as_str(),
                        "u_minus": selected.left().u(),
                        "u_plus": selected.right().u(),
                        "mass_flux": c.mass_flux(),
                        "bernoulli": c.bernoulli(),
                        "p_minus": selected.p_minus(),
                        "p_plus": selected.p_plus(),
                        "sonicity_left": sonic_left.as_str(),
                        "sonicity_right": sonic_right.as_str(),
                        "residuals": [residuals.0, residuals.1],
                    },
                });
                artifacts.push(Artifact {
                    name: format!("{label}.json"),
                    bytes: emit::json_document(&doc)?,
                });
            }
            EmitFormat::Svg => unreachable!("rejected at parse time"),
        }
    }
    Ok(artifacts)
}

fn classify_artifacts(
    input: &ShockInput,
    mu: f64,
    k: f64,
    formats: &[EmitFormat],
) -> Result<Vec<Artifact>> {
    let gamma = match input {
        ShockInput::EndStates { gamma, .. } | ShockInput::Constants { gamma, .. } => *gamma,
    };
    let params = FluidParams::new(gamma, mu, k)?;
    let shock = build_shock(input, &params)?;
    let hypotheses = check_profile_hypotheses(&shock)?;
    let verdict = classify_monotonicity(&shock, &params)?;
    let c = shock.constants();
    let attracting_p = shock.p_minus().min(shock.p_plus());
    let saddle_p = shock.p_minus().max(shock.p_plus());
    let reports = [
        equilibrium_report(attracting_p, &c, &params)?,
        equilibrium_report(saddle_p, &c, &params)?,
    ];

    let label = format!("classify-{}_mu{}_k{}", input_label(input), num(mu), num(k));
    let mut artifacts = Vec::new();
    for format in formats {
        match format {
            EmitFormat::Csv => {
                let rows: Vec<Vec<String>> = reports
                    .iter()
                    .map(|r| {
                        vec![
                            emit::fmt_f64(r.p_eq),
                            r.kind.as_str().to_string(),
                            emit::fmt_f64(r.eigenvalues.0.re),
                            emit::fmt_f64(r.eigenvalues.0.im),
                            emit::fmt_f64(r.eigenvalues.1.re),
                            emit::fmt_f64(r.eigenvalues.1.im),
                            verdict.as_str().to_string(),
                        ]
                    })
                    .collect();
                artifacts.push(Artifact {
                    name: format!("{label}.csv"),
                    bytes: emit::csv_document(
                        "P,kind,lambda1_re,lambda1_im,lambda2_re,lambda2_im,monotonicity",
                        &rows,
                    ),
                });
            }
            EmitFormat::Json => {
                let equilibria: Vec<Value> = reports
                    .iter()
                    .map(|r| {
                        json!({
                            "P": r.p_eq,
                            "kind": r.kind.as_str(),
                            "eigenvalues": [
                                { "re": r.eigenvalues.0.re, "im": r.eigenvalues.0.im },
                                { "re": r.eigenvalues.1.re, "im": r.eigenvalues.1.im },
                            ],
                            "unstable_direction": r.unstable_eigvec.map(|v| json!([v[0], v[1]])),
                            "stable_direction": r.stable_eigvec.map(|v| json!([v[0], v[1]])),
                        })
                    })
                    .collect();
                let doc = json!({
                    "inputs": input_json(input, Some(mu), Some(k)),
                    "direction": hypotheses.direction.as_str(),
                    "attracting_sonicity": hypotheses.attracting_sonicity.as_str(),
                    "subsonic_condition": hypotheses.subsonic_condition,
                    "signed_speed_condition": hypotheses.signed_speed_condition,
                    "sufficient_condition": hypotheses.sufficient_condition(),
                    "monotonicity": verdict.as_str(),
                    "equilibria": equilibria,
                });
                artifacts.push(Artifact {
                    name: format!("{label}.json"),
                    bytes: emit::json_document(&doc)?,
                });
            }
            EmitFormat::Svg => unreachable!("rejected at parse time"),
        }
    }
    Ok(artifacts)
}

fn profile_csv(rows: &[FieldRow]) -> Vec<u8> {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                emit::fmt_f64(r.y),
                emit::fmt_f64(r.p),
                emit::fmt_f64(r.q),
                emit::fmt_f64(r.rho),
                emit::fmt_f64(r.u),
            ]
        })
        .collect();
    emit::csv_document("y,P,Q,rho,u", &cells)
}

fn profile_samples_json(rows: &[FieldRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|r| {
                json!({
                    "y": r.y,
                    "P": r.p,
                    "Q": r.q,
                    "rho": r.rho,
                    "u": r.u,
                })
            })
            .collect(),
    )
}

fn profile_svg(rows: &[FieldRow], title: &str) -> Result<Vec<u8>> {
    let series = [svg::Series {
        label: "rho".to_string(),
        points: rows.iter().map(|r| (r.y, r.rho)).collect(),
        closed: false,
    }];
    let axes = svg::Axes {
        title: title.to_string(),
        x_label: "y".to_string(),
        y_label: "rho".to_string(),
    };
    Ok(svg::render(&series, &axes)?.into_bytes())
}

fn profile_summary_json(profile: &Profile, rows: &[FieldRow]) -> Value {
    json!({
        "classification": profile.classification().as_str(),
        "extrema_count": profile.extrema_count(),
        "converged": profile.converged(),
        "terminal_error": profile.terminal_error(),
        "samples": profile_samples_json(rows),
    })
}

fn profile_artifacts(
    input: &ShockInput,
    mu: f64,
    k: f64,
    opts: &ShootOptions,
    formats: &[EmitFormat],
    stride: usize,
) -> Result<Vec<Artifact>> {
    let gamma = match input {
        ShockInput::EndStates { gamma, .. } | ShockInput::Constants { gamma, .. } => *gamma,
    };
    let params = FluidParams::new(gamma, mu, k)?;
    let shock = build_shock(input, &params)?;
    let profile = shoot_heteroclinic(&shock, &params, opts)?;
    let rows = thin(&profile_fields(&profile)?, stride);

    let label = format!("profile-{}_mu{}_k{}", input_label(input), num(mu), num(k));
    let mut artifacts = Vec::new();
    for format in formats {
        match format {
            EmitFormat::Csv => artifacts.push(Artifact {
                name: format!("{label}.csv"),
                bytes: profile_csv(&rows),
            }),
            EmitFormat::Json => {
                let mut doc = profile_summary_json(&profile, &rows);
                doc.as_object_mut()
                    .expect("summary is an object")
                    .insert("inputs".to_string(), input_json(input, Some(mu), Some(k)));
                artifacts.push(Artifact {
                    name: format!("{label}.json"),
                    bytes: emit::json_document(&doc)?,
                });
            }
            EmitFormat::Svg => artifacts.push(Artifact {
                name: format!("{label}.svg"),
                bytes: profile_svg(&rows, "wave profile")?,
            }),
        }
    }
    Ok(artifacts)
}

/// Computes the loop, its inflection point, and shared loop geometry.
fn compute_loop(
    input: &ShockInput,
    params: &FluidParams,
    samples: usize,
) -> Result<(ShockData, HomoclinicLoop, f64)> {
    let shock = build_shock(input, params)?;
    let c = shock.constants();
    let lp = homoclinic_loop(&c, params, samples)?;
    let attracting_p = shock.p_minus().min(shock.p_plus());
    let p0 = find_inflection_p0(&c, params, attracting_p, lp.p_saddle)?;
    Ok((shock, lp, p0))
}

fn loop_csv(lp: &HomoclinicLoop) -> Vec<u8> {
    let rows: Vec<Vec<String>> = lp
        .samples
        .iter()
        .map(|s| {
            vec![
                emit::fmt_f64(s.p),
                emit::fmt_f64(s.q_upper),
                emit::fmt_f64(s.q_lower),
            ]
        })
        .collect();
    emit::csv_document("P,Q_upper,Q_lower", &rows)
}

fn loop_json(lp: &HomoclinicLoop, p0: f64, attracting_p: f64) -> Value {
    json!({
        "p_star": lp.p_star,
        "p_saddle": lp.p_saddle,
        "p_attracting": attracting_p,
        "p_inflection": p0,
        "samples": Value::Array(
            lp.samples
                .iter()
                .map(|s| json!({ "P": s.p, "Q_upper": s.q_upper, "Q_lower": s.q_lower }))
                .collect(),
        ),
    })
}

/// The loop as one closed polyline: upper branch left to right, then lower
/// branch back.
fn loop_series(lp: &HomoclinicLoop) -> svg::Series {
    let mut points: Vec<(f64, f64)> = lp.samples.iter().map(|s| (s.p, s.q_upper)).collect();
    points.extend(lp.samples.iter().rev().map(|s| (s.p, s.q_lower)));
    svg::Series {
        label: "loop".to_string(),
        points,
        closed: true,
    }
}

fn loop_artifacts(
    input: &ShockInput,
    mu: f64,
    k: f64,
    samples: usize,
    formats: &[EmitFormat],
) -> Result<Vec<Artifact>> {
    let gamma = match input {
        ShockInput::EndStates { gamma, .. } | ShockInput::Constants { gamma, .. } => *gamma,
    };
    let params = FluidParams::new(gamma, mu, k)?;
    let (shock, lp, p0) = compute_loop(input, &params, samples)?;
    let attracting_p = shock.p_minus().min(shock.p_plus());

    let label = format!("loop-{}_k{}_n{}", input_label(input), num(k), samples);
    let mut artifacts = Vec::new();
    for format in formats {
        match format {
            EmitFormat::Csv => artifacts.push(Artifact {
                name: format!("{label}.csv"),
                bytes: loop_csv(&lp),
            }),
            EmitFormat::Json => {
                let mut doc = loop_json(&lp, p0, attracting_p);
                doc.as_object_mut()
                    .expect("loop doc is an object")
                    .insert("inputs".to_string(), input_json(input, None, Some(k)));
                artifacts.push(Artifact {
                    name: format!("{label}.json"),
                    bytes: emit::json_document(&doc)?,
                });
            }
            EmitFormat::Svg => {
                let axes = svg::Axes {
                    title: "homoclinic loop".to_string(),
                    x_label: "P".to_string(),
                    y_label: "Q".to_string(),
                };
                artifacts.push(Artifact {
                    name: format!("{label}.svg"),
                    bytes: svg::render(&[loop_series(&lp)], &axes)?.into_bytes(),
                });
            }
        }
    }
    Ok(artifacts)
}

fn phase_artifacts(
    input: &ShockInput,
    mu: f64,
    k: f64,
    samples: usize,
    opts: &ShootOptions,
    formats: &[EmitFormat],
    stride: usize,
) -> Result<Vec<Artifact>> {
    let gamma = match input {
        ShockInput::EndStates { gamma, .. } | ShockInput::Constants { gamma, .. } => *gamma,
    };
    let params = FluidParams::new(gamma, mu, k)?;
    let (shock, lp, p0) = compute_loop(input, &params, samples)?;
    let attracting_p = shock.p_minus().min(shock.p_plus());
    let profile = shoot_heteroclinic(&shock, &params, opts)?;
    let orbit: Vec<(f64, f64)> = thin(profile.trajectory().points(), stride)
        .iter()
        .map(|pt| (pt.p, pt.q))
        .collect();

    let label = format!(
        "phase-{}_mu{}_k{}_n{}",
        input_label(input),
        num(mu),
        num(k),
        samples
    );
    let mut artifacts = Vec::new();
    for format in formats {
        match format {
            EmitFormat::Csv => {
                let mut rows: Vec<Vec<String>> = Vec::new();
                for s in &lp.samples {
                    rows.push(vec![
                        "loop".to_string(),
                        emit::fmt_f64(s.p),
                        emit::fmt_f64(s.q_upper),
                    ]);
                }
                for s in lp.samples.iter().rev() {
                    rows.push(vec![
                        "loop".to_string(),
                        emit::fmt_f64(s.p),
                        emit::fmt_f64(s.q_lower),
                    ]);
                }
                for &(p, q) in &orbit {
                    rows.push(vec![
                        "wave".to_string(),
                        emit::fmt_f64(p),
                        emit::fmt_f64(q),
                    ]);
                }
                artifacts.push(Artifact {
                    name: format!("{label}.csv"),
                    bytes: emit::csv_document("curve,P,Q", &rows),
                });
            }
            EmitFormat::Json => {
                let doc = json!({
                    "inputs": input_json(input, Some(mu), Some(k)),
                    "loop": loop_json(&lp, p0, attracting_p),
                    "wave": {
                        "classification": profile.classification().as_str(),
                        "extrema_count": profile.extrema_count(),
                        "converged": profile.converged(),
                        "terminal_error": profile.terminal_error(),
                        "samples": Value::Array(
                            orbit.iter().map(|&(p, q)| json!({ "P": p, "Q": q })).collect(),
                        ),
                    },
                });
                artifacts.push(Artifact {
                    name: format!("{label}.json"),
                    bytes: emit::json_document(&doc)?,
                });
            }
            EmitFormat::Svg => {
                let series = [
                    loop_series(&lp),
                    svg::Series {
                        label: "wave".to_string(),
                        points: orbit.clone(),
                        closed: false,
                    },
                ];
                let axes = svg::Axes {
                    title: "phase plane".to_string(),
                    x_label: "P".to_string(),
                    y_label: "Q".to_string(),
                };
                artifacts.push(Artifact {
                    name: format!("{label}.svg"),
                    bytes: svg::render(&series, &axes)?.into_bytes(),
                });
            }
        }
    }
    Ok(artifacts)
}

const SWEEP_CSV_HEADER: &str = "mu,rho_plus,u_minus,u_plus,sqrt_neg_fprime,sound_speed_attracting,\
attracting_sonicity,classification,lambda1_re,lambda1_im,lambda2_re,lambda2_im,extrema_count,\
converged,note";

fn sweep_report_csv(outcome: &SweepOutcome) -> Vec<u8> {
    let rows: Vec<Vec<String>> = outcome
        .report
        .rows()
        .iter()
        .map(|row| match row {
            SweepRowOutcome::Analyzed(r) => vec![
                emit::fmt_f64(r.mu),
                emit::fmt_f64(r.rho_plus),
                emit::fmt_f64(r.u_minus),
                emit::fmt_f64(r.u_plus),
                emit::fmt_f64(r.sqrt_neg_fprime),
                emit::fmt_f64(r.sound_speed_attracting),
                r.attracting_sonicity.as_str().to_string(),
                r.classification.as_str().to_string(),
                emit::fmt_f64(r.eigenvalues.0.re),
                emit::fmt_f64(r.eigenvalues.0.im),
                emit::fmt_f64(r.eigenvalues.1.re),
                emit::fmt_f64(r.eigenvalues.1.im),
                r.extrema_count.map(|n| n.to_string()).unwrap_or_default(),
                r.converged.to_string(),
                r.shot_failure.clone().unwrap_or_default(),
            ],
            SweepRowOutcome::Rejected {
                mu,
                rho_plus,
                reason,
            } => {
                let mut cells = vec![emit::fmt_f64(*mu), emit::fmt_f64(*rho_plus)];
                cells.extend(std::iter::repeat(String::new()).take(11));
                cells.push("false".to_string());
                cells.push(reason.clone());
                cells
            }
        })
        .collect();
    emit::csv_document(SWEEP_CSV_HEADER, &rows)
}

fn sweep_report_json(outcome: &SweepOutcome) -> Value {
    let base = outcome.report.base();
    let rows: Vec<Value> = outcome
        .report
        .rows()
        .iter()
        .map(|row| match row {
            SweepRowOutcome::Analyzed(r) => json!({
                "status": "analyzed",
                "mu": r.mu,
                "rho_plus": r.rho_plus,
                "u_minus": r.u_minus,
                "u_plus": r.u_plus,
                "sqrt_neg_fprime": r.sqrt_neg_fprime,
                "sound_speed_attracting": r.sound_speed_attracting,
                "attracting_sonicity": r.attracting_sonicity.as_str(),
                "classification": r.classification.as_str(),
                "eigenvalues": [
                    { "re": r.eigenvalues.0.re, "im": r.eigenvalues.0.im },
                    { "re": r.eigenvalues.1.re, "im": r.eigenvalues.1.im },
                ],
                "extrema_count": r.extrema_count,
                "converged": r.converged,
                "shot_failure": r.shot_failure,
            }),
            SweepRowOutcome::Rejected {
                mu,
                rho_plus,
                reason,
            } => json!({
                "status": "rejected",
                "mu": mu,
                "rho_plus": rho_plus,
                "reason": reason,
            }),
        })
        .collect();
    json!({
        "base": {
            "gamma": base.gamma,
            "k": base.k,
            "s": base.s,
            "rho_minus": base.rho_minus,
        },
        "rows": rows,
    })
}

/// Emits the sweep report plus one profile artifact per converged row. The
/// report itself is tabular, so it only exists in csv/json; svg output means
/// per-row profile plots.
fn sweep_artifacts(
    outcome: &SweepOutcome,
    label: &str,
    varied_token: &str,
    formats: &[EmitFormat],
    stride: usize,
) -> Result<Vec<Artifact>> {
    let mut artifacts = Vec::new();
    for format in formats {
        match format {
            EmitFormat::Csv => artifacts.push(Artifact {
                name: format!("{label}.csv"),
                bytes: sweep_report_csv(outcome),
            }),
            EmitFormat::Json => artifacts.push(Artifact {
                name: format!("{label}.json"),
                bytes: emit::json_document(&sweep_report_json(outcome))?,
            }),
            EmitFormat::Svg => {}
        }
    }
    for (idx, (row, profile)) in outcome
        .report
        .rows()
        .iter()
        .zip(&outcome.profiles)
        .enumerate()
    {
        let Some(profile) = profile else { continue };
        let SweepRowOutcome::Analyzed(row) = row else {
            continue;
        };
        let varied_value = if varied_token == "mu" {
            row.mu
        } else {
            row.rho_plus
        };
        let row_label = format!(
            "{label}-row{}_{}{}",
            idx + 1,
            varied_token,
            num(varied_value)
        );
        let rows = thin(&profile_fields(profile)?, stride);
        for format in formats {
            match format {
                EmitFormat::Csv => artifacts.push(Artifact {
                    name: format!("{row_label}.csv"),
                    bytes: profile_csv(&rows),
                }),
                EmitFormat::Json => {
                    let mut doc = profile_summary_json(profile, &rows);
                    let map = doc.as_object_mut().expect("summary is an object");
                    map.insert("mu".to_string(), json!(row.mu));
                    map.insert("rho_plus".to_string(), json!(row.rho_plus));
                    artifacts.push(Artifact {
                        name: format!("{row_label}.json"),
                        bytes: emit::json_document(&doc)?,
                    });
                }
                EmitFormat::Svg => {
                    let title = format!("wave profile, {varied_token} = {}", num(varied_value));
                    artifacts.push(Artifact {
                        name: format!("{row_label}.svg"),
                        bytes: profile_svg(&rows, &title)?,
                    });
                }
            }
        }
    }
    Ok(artifacts)
}
