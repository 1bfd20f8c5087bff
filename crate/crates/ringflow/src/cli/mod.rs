//! Command-line front end: flag/file configuration, subcommand dispatch,
//! CSV and SVG output.
//!
//! Precedence is flags over config-file entries over baseline defaults.
//! The config file is flat `key = value` text with the same keys as the
//! long flags. Every CSV starts with a comment line echoing the resolved
//! configuration; feeding those tokens back through [`parse_config`]
//! reproduces the identical [`RunConfig`].

pub mod csv;
pub mod svg;

use std::fmt;
use std::fs;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use crate::analytic::{phi_integral_approx, phi_sum_approx, stepwise_flows, AnalyticError};
use crate::experiments::{
    run_heatmap, run_node_study, run_scaling_fixed_area, run_scaling_fixed_spacing, AreaSpacing,
    AxisSpec, MethodSet, SweepParam,
};
use crate::flow_opt::solve_max_lifetime;
use crate::ring_model::{build_profile, Normalization, SystemParams};
use crate::util::rel_diff;

pub use csv::{csv_string, emit_csv, format_value, OutputTable};
pub use svg::{ramp_color, render_heatmap_svg, svg_string};

/// Relative disagreement between the LP and exact depletion rates that is
/// treated as an internal inconsistency (exit code 2).
const CONSISTENCY_TOL: f64 = 1e-6;

#[derive(Clone, Debug)]
pub enum CliError {
    /// Bad flags, bad file keys, or out-of-domain values. Exit code 1.
    Validation(String),
    /// I/O failure reading config or writing output. Exit code 1.
    Io(String),
    /// The solution routes disagree beyond tolerance. Exit code 2.
    Internal(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "{m}"),
            CliError::Internal(m) => write!(f, "internal inconsistency: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

fn validation<E: fmt::Display>(e: E) -> CliError {
    CliError::Validation(e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Solve,
    Study,
    Heatmap,
    Scaling,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Solve => "solve",
            CommandKind::Study => "study",
            CommandKind::Heatmap => "heatmap",
            CommandKind::Scaling => "scaling",
        }
    }
}

/// Spacing rule for the scaling subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AreaMode {
    /// Fixed spacing d = 1 while rings are added.
    Spacing,
    /// Constant coverage: d = 1/(N + 0.5).
    Area,
    /// Constant coverage with the alternative rule d = 1/N.
    AreaCaption,
}

impl AreaMode {
    fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "spacing" => Ok(AreaMode::Spacing),
            "area" => Ok(AreaMode::Area),
            "area-caption" => Ok(AreaMode::AreaCaption),
            other => Err(CliError::Validation(format!(
                "unknown area mode '{other}' (expected spacing, area, or area-caption)"
            ))),
        }
    }

    fn name(self) -> &'static str {
        match self {
            AreaMode::Spacing => "spacing",
            AreaMode::Area => "area",
            AreaMode::AreaCaption => "area-caption",
        }
    }
}

fn parse_normalization(s: &str) -> Result<Normalization, CliError> {
    match s {
        "paper-verbatim" => Ok(Normalization::PaperVerbatim),
        "unit-density" => Ok(Normalization::UnitDensity),
        other => Err(CliError::Validation(format!(
            "unknown normalization '{other}' (expected paper-verbatim or unit-density)"
        ))),
    }
}

fn parse_methods(s: &str) -> Result<MethodSet, CliError> {
    let mut methods = MethodSet {
        lp: false,
        exact: false,
        sum: false,
        integral: false,
    };
    for part in s.split(',') {
        match part.trim() {
            "lp" => methods.lp = true,
            "exact" => methods.exact = true,
            "sum" => methods.sum = true,
            "integral" => methods.integral = true,
            other => {
                return Err(CliError::Validation(format!(
                    "unknown method '{other}' (expected lp, exact, sum, integral)"
                )))
            }
        }
    }
    if !methods.any() {
        return Err(CliError::Validation("at least one method must be selected".into()));
    }
    Ok(methods)
}

fn methods_string(m: MethodSet) -> String {
    let mut parts = Vec::new();
    if m.lp {
        parts.push("lp");
    }
    if m.exact {
        parts.push("exact");
    }
    if m.sum {
        parts.push("sum");
    }
    if m.integral {
        parts.push("integral");
    }
    parts.join(",")
}

fn parse_axis(s: &str) -> Result<AxisSpec, CliError> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != 4 {
        return Err(CliError::Validation(format!(
            "axis spec '{s}' must have the form name:lo:hi:count"
        )));
    }
    let param = SweepParam::parse(parts[0]).ok_or_else(|| {
        CliError::Validation(format!(
            "unknown axis parameter '{}' (expected alpha, beta, gamma, lambda, n)",
            parts[0]
        ))
    })?;
    let lo: f64 = parts[1]
        .parse()
        .map_err(|_| CliError::Validation(format!("bad axis bound '{}'", parts[1])))?;
    let hi: f64 = parts[2]
        .parse()
        .map_err(|_| CliError::Validation(format!("bad axis bound '{}'", parts[2])))?;
    let count: usize = parts[3]
        .parse()
        .map_err(|_| CliError::Validation(format!("bad axis count '{}'", parts[3])))?;
    AxisSpec::linspace(param, lo, hi, count).map_err(validation)
}

/// Fully resolved run configuration.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: CommandKind,
    pub params: SystemParams,
    pub x_axis: Option<AxisSpec>,
    pub y_axis: Option<AxisSpec>,
    pub methods: MethodSet,
    pub out_prefix: String,
    pub svg: bool,
    pub area_mode: AreaMode,
}

impl RunConfig {
    /// Canonical token list that reproduces this configuration exactly.
    pub fn canonical_args(&self) -> Vec<String> {
        let p = &self.params;
        let mut args = vec![
            self.command.name().to_string(),
            "--alpha".into(),
            p.alpha.to_string(),
            "--beta".into(),
            p.beta.to_string(),
            "--gamma".into(),
            p.gamma.to_string(),
            "--lambda".into(),
            p.lambda.to_string(),
            "--n".into(),
            p.n_rings.to_string(),
            "--d".into(),
            p.spacing.to_string(),
            "--normalization".into(),
            p.normalization.to_string(),
            "--method".into(),
            methods_string(self.methods),
            "--out".into(),
            self.out_prefix.clone(),
        ];
        if let Some(x) = &self.x_axis {
            args.push("--x".into());
            args.push(x.spec_string());
        }
        if let Some(y) = &self.y_axis {
            args.push("--y".into());
            args.push(y.spec_string());
        }
        if self.svg {
            args.push("--svg".into());
        }
        if self.command == CommandKind::Scaling {
            args.push("--area-mode".into());
            args.push(self.area_mode.name().into());
        }
        args
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "ringflow",
    version,
    about = "Max-lifetime and min-power information-flow schedules for a \
             line-of-nodes sensor network model"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one instance and report the depletion rate by every route.
    Solve(CommonArgs),
    /// Per-node transmission tables while one parameter is varied (--x).
    Study(CommonArgs),
    /// Depletion-rate grid over two parameters (--x, --y).
    Heatmap(CommonArgs),
    /// Depletion rate against ring count (--x n:..), one table per
    /// companion value (--y).
    Scaling(CommonArgs),
}

#[derive(Args, Debug)]
struct CommonArgs {
    /// Information density exponent.
    #[arg(long)]
    alpha: Option<f64>,
    /// Compression ratio in (0, 1].
    #[arg(long)]
    beta: Option<f64>,
    /// Capacity exponent.
    #[arg(long)]
    gamma: Option<f64>,
    /// Transmission power exponent (> 1).
    #[arg(long)]
    lambda: Option<f64>,
    /// Number of rings.
    #[arg(long)]
    n: Option<usize>,
    /// Ring spacing.
    #[arg(long)]
    d: Option<f64>,
    /// paper-verbatim or unit-density.
    #[arg(long)]
    normalization: Option<String>,
    /// Comma-separated subset of lp,exact,sum,integral.
    #[arg(long)]
    method: Option<String>,
    /// Axis spec name:lo:hi:count.
    #[arg(long)]
    x: Option<String>,
    /// Axis spec name:lo:hi:count.
    #[arg(long)]
    y: Option<String>,
    /// Output path prefix.
    #[arg(long)]
    out: Option<String>,
    /// Also render the heatmap as SVG.
    #[arg(long)]
    svg: bool,
    /// Scaling spacing rule: spacing, area, or area-caption.
    #[arg(long = "area-mode")]
    area_mode: Option<String>,
    /// Flat key = value configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Default)]
struct FileConfig {
    alpha: Option<f64>,
    beta: Option<f64>,
    gamma: Option<f64>,
    lambda: Option<f64>,
    n: Option<usize>,
    d: Option<f64>,
    normalization: Option<String>,
    method: Option<String>,
    x: Option<String>,
    y: Option<String>,
    out: Option<String>,
    svg: Option<bool>,
    area_mode: Option<String>,
}

fn parse_file(text: &str) -> Result<FileConfig, CliError> {
    let mut cfg = FileConfig::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::Validation(format!(
                "config line {}: expected 'key = value', got '{line}'",
                lineno + 1
            )));
        };
        let key = key.trim();
        let value = value.trim().to_string();
        let bad_num = |k: &str, v: &str| {
            CliError::Validation(format!("config key '{k}': cannot parse '{v}' as a number"))
        };
        match key {
            "alpha" => cfg.alpha = Some(value.parse().map_err(|_| bad_num(key, &value))?),
            "beta" => cfg.beta = Some(value.parse().map_err(|_| bad_num(key, &value))?),
            "gamma" => cfg.gamma = Some(value.parse().map_err(|_| bad_num(key, &value))?),
            "lambda" => cfg.lambda = Some(value.parse().map_err(|_| bad_num(key, &value))?),
            "n" => cfg.n = Some(value.parse().map_err(|_| bad_num(key, &value))?),
            "d" => cfg.d = Some(value.parse().map_err(|_| bad_num(key, &value))?),
            "normalization" => cfg.normalization = Some(value),
            "method" => cfg.method = Some(value),
            "x" => cfg.x = Some(value),
            "y" => cfg.y = Some(value),
            "out" => cfg.out = Some(value),
            "svg" => {
                cfg.svg = Some(value.parse().map_err(|_| {
                    CliError::Validation("config key 'svg': expected true or false".to_string())
                })?)
            }
            "area-mode" => cfg.area_mode = Some(value),
            other => {
                return Err(CliError::Validation(format!(
                    "unknown config key '{other}'"
                )))
            }
        }
    }
    Ok(cfg)
}

/// Parse a token list (and optional config-file text) into a resolved
/// configuration. Flags override file entries, which override the
/// baseline parameter values.
pub fn parse_config(tokens: &[String], file: Option<&str>) -> Result<RunConfig, CliError> {
    let argv = std::iter::once("ringflow".to_string()).chain(tokens.iter().cloned());
    let cli = Cli::try_parse_from(argv).map_err(|e| CliError::Validation(e.to_string()))?;
    resolve(cli, file)
}

fn resolve(cli: Cli, file_text: Option<&str>) -> Result<RunConfig, CliError> {
    let (command, args) = match cli.command {
        Command::Solve(a) => (CommandKind::Solve, a),
        Command::Study(a) => (CommandKind::Study, a),
        Command::Heatmap(a) => (CommandKind::Heatmap, a),
        Command::Scaling(a) => (CommandKind::Scaling, a),
    };

    let file = match (file_text, &args.config) {
        (Some(text), _) => parse_file(text)?,
        (None, Some(path)) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
            parse_file(&text)?
        }
        (None, None) => FileConfig::default(),
    };

    let baseline = SystemParams::baseline();
    let params = SystemParams {
        alpha: args.alpha.or(file.alpha).unwrap_or(baseline.alpha),
        beta: args.beta.or(file.beta).unwrap_or(baseline.beta),
        gamma: args.gamma.or(file.gamma).unwrap_or(baseline.gamma),
        lambda: args.lambda.or(file.lambda).unwrap_or(baseline.lambda),
        n_rings: args.n.or(file.n).unwrap_or(baseline.n_rings),
        spacing: args.d.or(file.d).unwrap_or(baseline.spacing),
        normalization: match args.normalization.or(file.normalization) {
            Some(s) => parse_normalization(&s)?,
            None => baseline.normalization,
        },
    };
    params.validate().map_err(validation)?;

    let methods = match args.method.or(file.method) {
        Some(s) => parse_methods(&s)?,
        None => MethodSet::all(),
    };
    let x_axis = match args.x.or(file.x) {
        Some(s) => Some(parse_axis(&s)?),
        None => None,
    };
    let y_axis = match args.y.or(file.y) {
        Some(s) => Some(parse_axis(&s)?),
        None => None,
    };
    let out_prefix = args.out.or(file.out).unwrap_or_else(|| "ringflow".into());
    let svg = args.svg || file.svg.unwrap_or(false);
    let area_mode_given = args.area_mode.is_some() || file.area_mode.is_some();
    let area_mode = match args.area_mode.or(file.area_mode) {
        Some(s) => AreaMode::parse(&s)?,
        None => AreaMode::Spacing,
    };

    // Structural validation per subcommand.
    match command {
        CommandKind::Solve => {
            if x_axis.is_some() || y_axis.is_some() {
                return Err(CliError::Validation(
                    "solve takes no axis specs; use study, heatmap, or scaling".into(),
                ));
            }
        }
        CommandKind::Study => {
            if x_axis.is_none() {
                return Err(CliError::Validation(
                    "study requires --x name:lo:hi:count for the varied parameter".into(),
                ));
            }
            if y_axis.is_some() {
                return Err(CliError::Validation("study takes only --x".into()));
            }
        }
        CommandKind::Heatmap => {
            let (Some(x), Some(y)) = (&x_axis, &y_axis) else {
                return Err(CliError::Validation(
                    "heatmap requires both --x and --y axis specs".into(),
                ));
            };
            if x.param == y.param {
                return Err(CliError::Validation(format!(
                    "heatmap axes must differ; both sweep {}",
                    x.param.name()
                )));
            }
            if x.count < 2 || y.count < 2 {
                return Err(CliError::Validation(
                    "heatmap axes need at least 2 samples each".into(),
                ));
            }
            if !methods.lp {
                return Err(CliError::Validation(
                    "heatmap cells are LP-based; the method set must include lp".into(),
                ));
            }
        }
        CommandKind::Scaling => {
            let Some(x) = &x_axis else {
                return Err(CliError::Validation(
                    "scaling requires --x n:lo:hi:count".into(),
                ));
            };
            if x.param != SweepParam::Rings {
                return Err(CliError::Validation(
                    "the scaling x axis must sweep n (ring count)".into(),
                ));
            }
            let expected = match area_mode {
                AreaMode::Spacing => SweepParam::Beta,
                AreaMode::Area | AreaMode::AreaCaption => SweepParam::Gamma,
            };
            if let Some(y) = &y_axis {
                if y.param != expected {
                    return Err(CliError::Validation(format!(
                        "scaling in {} mode varies {} on the y axis, got {}",
                        area_mode.name(),
                        expected.name(),
                        y.param.name()
                    )));
                }
            }
        }
    }
    if svg && command != CommandKind::Heatmap {
        return Err(CliError::Validation("--svg applies only to heatmap".into()));
    }
    if area_mode_given && command != CommandKind::Scaling {
        return Err(CliError::Validation(
            "--area-mode applies only to scaling".into(),
        ));
    }

    // Default scaling companion axis: the baseline value of the expected
    // parameter as a single point.
    let y_axis = if command == CommandKind::Scaling && y_axis.is_none() {
        let (param, value) = match area_mode {
            AreaMode::Spacing => (SweepParam::Beta, params.beta),
            AreaMode::Area | AreaMode::AreaCaption => (SweepParam::Gamma, params.gamma),
        };
        Some(AxisSpec::linspace(param, value, value, 1).map_err(validation)?)
    } else {
        y_axis
    };

    Ok(RunConfig {
        command,
        params,
        x_axis,
        y_axis,
        methods,
        out_prefix,
        svg,
        area_mode,
    })
}

/// Depletion rate of one instance by every requested route.
#[derive(Clone, Copy, Debug, Default)]
pub struct SolveReport {
    pub phi_lp: Option<f64>,
    pub phi_exact: Option<f64>,
    pub phi_sum: Option<f64>,
    pub phi_integral: Option<f64>,
    pub analytic_valid: Option<bool>,
}

fn io_err<E: fmt::Display>(e: E) -> CliError {
    CliError::Io(e.to_string())
}

/// Verify LP/exact agreement wherever the equal-depletion construction is
/// feasible; disagreements are internal inconsistencies.
fn check_consistency(phi_lp: f64, phi_exact: f64, valid: bool, context: &str) -> Result<(), CliError> {
    if valid && rel_diff(phi_lp, phi_exact) > CONSISTENCY_TOL {
        return Err(CliError::Internal(format!(
            "{context}: LP gives {phi_lp}, exact form gives {phi_exact} \
             although the analytic schedule is feasible"
        )));
    }
    Ok(())
}

fn run_solve(config: &RunConfig) -> Result<(), CliError> {
    let profile = build_profile(&config.params).map_err(validation)?;
    let mut report = SolveReport::default();
    if config.methods.lp {
        report.phi_lp = Some(solve_max_lifetime(&profile).map_err(validation)?.phi);
    }
    if config.methods.exact {
        let analytic = stepwise_flows(&profile);
        report.phi_exact = Some(analytic.phi);
        report.analytic_valid = Some(analytic.valid);
    }
    if config.methods.sum {
        report.phi_sum = Some(phi_sum_approx(&config.params).map_err(validation)?);
    }
    if config.methods.integral {
        report.phi_integral = match phi_integral_approx(&config.params) {
            Ok(v) => Some(v),
            Err(AnalyticError::UnsupportedBranch { .. })
            | Err(AnalyticError::DegenerateParameters(_)) => None,
            Err(e) => return Err(validation(e)),
        };
    }
    if let (Some(lp), Some(exact), Some(valid)) =
        (report.phi_lp, report.phi_exact, report.analytic_valid)
    {
        check_consistency(lp, exact, valid, "solve")?;
    }

    let path = PathBuf::from(format!("{}_solve.csv", config.out_prefix));
    emit_csv(&OutputTable::Solve(&report), config, &path).map_err(io_err)?;
    for (name, value) in [
        ("phi_lp", report.phi_lp),
        ("phi_exact", report.phi_exact),
        ("phi_sum", report.phi_sum),
        ("phi_integral", report.phi_integral),
    ] {
        if let Some(v) = value {
            println!("{name} = {}", format_value(v));
        }
    }
    println!("wrote {}", path.display());
    Ok(())
}

fn run_study(config: &RunConfig) -> Result<(), CliError> {
    let axis = config.x_axis.as_ref().expect("validated");
    let tables =
        run_node_study(&config.params, axis.param, &axis.values).map_err(validation)?;
    for table in &tables {
        let (param, value) = table.varied.expect("study tables are tagged");
        let params = table.params;
        let profile = build_profile(&params).map_err(validation)?;
        let analytic = stepwise_flows(&profile);
        check_consistency(
            table.phi,
            analytic.phi,
            analytic.valid,
            &format!("study at {param} = {value}"),
        )?;
        let path = PathBuf::from(format!(
            "{}_study_{}_{}.csv",
            config.out_prefix, param, value
        ));
        emit_csv(&OutputTable::Study(table), config, &path).map_err(io_err)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn run_heatmap_cmd(config: &RunConfig) -> Result<(), CliError> {
    let x = config.x_axis.as_ref().expect("validated");
    let y = config.y_axis.as_ref().expect("validated");
    let grid = run_heatmap(&config.params, x, y).map_err(validation)?;
    for (yi, row) in grid.cells.iter().enumerate() {
        for (xi, cell) in row.iter().enumerate() {
            check_consistency(
                cell.phi_lp,
                cell.phi_exact,
                cell.analytic_valid,
                &format!(
                    "heatmap cell {} = {}, {} = {}",
                    x.param, x.values[xi], y.param, y.values[yi]
                ),
            )?;
        }
    }
    let path = PathBuf::from(format!("{}_heatmap.csv", config.out_prefix));
    emit_csv(&OutputTable::Heatmap(&grid), config, &path).map_err(io_err)?;
    println!("wrote {}", path.display());
    if config.svg {
        let svg_path = PathBuf::from(format!("{}_heatmap.svg", config.out_prefix));
        render_heatmap_svg(&grid, None, &svg_path).map_err(io_err)?;
        println!("wrote {}", svg_path.display());
    }
    Ok(())
}

fn run_scaling(config: &RunConfig) -> Result<(), CliError> {
    let x = config.x_axis.as_ref().expect("validated");
    let y = config.y_axis.as_ref().expect("validated");
    let n_values: Vec<usize> = x.values.iter().map(|&v| v.round() as usize).collect();
    let tables = match config.area_mode {
        AreaMode::Spacing => {
            run_scaling_fixed_spacing(&config.params, &n_values, &y.values, config.methods)
        }
        AreaMode::Area => run_scaling_fixed_area(
            &config.params,
            &n_values,
            &y.values,
            config.methods,
            AreaSpacing::OuterRadius,
        ),
        AreaMode::AreaCaption => run_scaling_fixed_area(
            &config.params,
            &n_values,
            &y.values,
            config.methods,
            AreaSpacing::Inverse,
        ),
    }
    .map_err(validation)?;
    for table in &tables {
        for row in &table.rows {
            if let (Some(lp), Some(exact)) = (row.phi_lp, row.phi_exact) {
                let mut p = table.base;
                p.n_rings = row.n;
                p.spacing = row.d;
                let profile = build_profile(&p).map_err(validation)?;
                let analytic = stepwise_flows(&profile);
                check_consistency(
                    lp,
                    exact,
                    analytic.valid,
                    &format!("scaling row N = {}", row.n),
                )?;
            }
        }
        let (param, value) = table.variant;
        let path = PathBuf::from(format!(
            "{}_scaling_{}_{}.csv",
            config.out_prefix, param, value
        ));
        emit_csv(&OutputTable::Scaling(table), config, &path).map_err(io_err)?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

/// Execute a resolved configuration.
pub fn execute(config: &RunConfig) -> Result<(), CliError> {
    match config.command {
        CommandKind::Solve => run_solve(config),
        CommandKind::Study => run_study(config),
        CommandKind::Heatmap => run_heatmap_cmd(config),
        CommandKind::Scaling => run_scaling(config),
    }
}

/// Top-level entry point: parse, execute, map errors to exit codes
/// (0 success, 1 validation/I-O, 2 internal inconsistency).
pub fn run_cli(tokens: &[String]) -> i32 {
    let argv = std::iter::once("ringflow".to_string()).chain(tokens.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return 0;
        }
        Err(e) => {
            eprint!("{e}");
            return 1;
        }
    };
    let config = match resolve(cli, None) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return match e {
                CliError::Internal(_) => 2,
                _ => 1,
            };
        }
    };
    match execute(&config) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Internal(_) => 2,
                _ => 1,
            }
        }
    }
}
