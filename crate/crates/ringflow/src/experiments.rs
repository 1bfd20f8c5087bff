//! Parameter sweeps: per-node transmission studies, depletion-rate
//! heatmaps, and ring-count scaling tables comparing the LP, exact, and
//! approximate routes.

use std::fmt;

use crate::analytic::{
    phi_exact, phi_integral_approx, phi_sum_approx, stepwise_flows, AnalyticError,
};
use crate::flow_opt::{
    classify_flows, default_classification_tol, solve_max_lifetime, FlowError, FlowSolution,
};
use crate::ring_model::{build_profile, ParamError, SystemParams};
use crate::util::least_squares_slope;

#[derive(Clone, Debug)]
pub enum ExpError {
    Param(ParamError),
    Flow(FlowError),
    Analytic(AnalyticError),
    BadAxis(String),
    NonPositiveData,
    TooFewPoints(usize),
}

impl fmt::Display for ExpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpError::Param(e) => write!(f, "{e}"),
            ExpError::Flow(e) => write!(f, "{e}"),
            ExpError::Analytic(e) => write!(f, "{e}"),
            ExpError::BadAxis(msg) => write!(f, "bad axis: {msg}"),
            ExpError::NonPositiveData => write!(f, "log-log fit requires positive data"),
            ExpError::TooFewPoints(n) => write!(f, "log-log fit requires 3 points, got {n}"),
        }
    }
}

impl std::error::Error for ExpError {}

impl From<ParamError> for ExpError {
    fn from(e: ParamError) -> Self {
        ExpError::Param(e)
    }
}

impl From<FlowError> for ExpError {
    fn from(e: FlowError) -> Self {
        ExpError::Flow(e)
    }
}

impl From<AnalyticError> for ExpError {
    fn from(e: AnalyticError) -> Self {
        ExpError::Analytic(e)
    }
}

/// Parameter that a sweep may vary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepParam {
    Alpha,
    Beta,
    Gamma,
    Lambda,
    Rings,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::Alpha => "alpha",
            SweepParam::Beta => "beta",
            SweepParam::Gamma => "gamma",
            SweepParam::Lambda => "lambda",
            SweepParam::Rings => "n",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        match name {
            "alpha" => Some(SweepParam::Alpha),
            "beta" => Some(SweepParam::Beta),
            "gamma" => Some(SweepParam::Gamma),
            "lambda" => Some(SweepParam::Lambda),
            "n" => Some(SweepParam::Rings),
            _ => None,
        }
    }
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Evenly spaced sample values for one parameter. `lo`, `hi` and `count`
/// are retained so a spec can be serialized back to its textual form.
#[derive(Clone, Debug, PartialEq)]
pub struct AxisSpec {
    pub param: SweepParam,
    pub lo: f64,
    pub hi: f64,
    pub count: usize,
    pub values: Vec<f64>,
}

impl AxisSpec {
    pub fn linspace(param: SweepParam, lo: f64, hi: f64, count: usize) -> Result<Self, ExpError> {
        if count == 0 {
            return Err(ExpError::BadAxis("count must be at least 1".into()));
        }
        if count == 1 && lo != hi {
            return Err(ExpError::BadAxis(
                "a single-point axis requires lo == hi".into(),
            ));
        }
        if !lo.is_finite() || !hi.is_finite() {
            return Err(ExpError::BadAxis("non-finite axis bound".into()));
        }
        let mut values = Vec::with_capacity(count);
        if count == 1 {
            values.push(lo);
        } else {
            let step = (hi - lo) / (count as f64 - 1.0);
            for k in 0..count {
                values.push(lo + step * k as f64);
            }
        }
        Ok(AxisSpec {
            param,
            lo,
            hi,
            count,
            values,
        })
    }

    /// Textual form `name:lo:hi:count`, parseable by the CLI.
    pub fn spec_string(&self) -> String {
        format!("{}:{}:{}:{}", self.param, self.lo, self.hi, self.count)
    }
}

/// Apply one swept value to a parameter set.
pub fn apply_param(
    base: &SystemParams,
    param: SweepParam,
    value: f64,
) -> Result<SystemParams, ExpError> {
    let mut p = *base;
    match param {
        SweepParam::Alpha => p.alpha = value,
        SweepParam::Beta => p.beta = value,
        SweepParam::Gamma => p.gamma = value,
        SweepParam::Lambda => p.lambda = value,
        SweepParam::Rings => {
            let rounded = value.round();
            if (value - rounded).abs() > 1e-9 || rounded < 1.0 {
                return Err(ExpError::BadAxis(format!(
                    "ring count must be a positive integer, got {value}"
                )));
            }
            p.n_rings = rounded as usize;
        }
    }
    p.validate()?;
    Ok(p)
}

/// One heatmap cell: both depletion-rate routes plus structural flags.
#[derive(Clone, Copy, Debug)]
pub struct GridCell {
    pub phi_lp: f64,
    pub phi_exact: f64,
    pub log10_phi: f64,
    /// Whether the LP vertex itself is direct+stepwise only (informational;
    /// optima are not unique).
    pub structure_ok: bool,
    /// Whether the equal-depletion construction is feasible here.
    pub analytic_valid: bool,
}

/// Full two-parameter sweep; `cells[yi][xi]` corresponds to
/// `y.values[yi]`, `x.values[xi]`.
#[derive(Clone, Debug)]
pub struct SweepGrid {
    pub base: SystemParams,
    pub x: AxisSpec,
    pub y: AxisSpec,
    pub cells: Vec<Vec<GridCell>>,
}

impl SweepGrid {
    pub fn cell_at(&self, x_value: f64, y_value: f64) -> Option<&GridCell> {
        let xi = self.x.values.iter().position(|&v| v == x_value)?;
        let yi = self.y.values.iter().position(|&v| v == y_value)?;
        Some(&self.cells[yi][xi])
    }

    pub fn min_max_log10(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for row in &self.cells {
            for cell in row {
                lo = lo.min(cell.log10_phi);
                hi = hi.max(cell.log10_phi);
            }
        }
        (lo, hi)
    }
}

/// Two-parameter sweep of the maximum-lifetime solution.
pub fn run_heatmap(
    base: &SystemParams,
    x: &AxisSpec,
    y: &AxisSpec,
) -> Result<SweepGrid, ExpError> {
    if x.param == y.param {
        return Err(ExpError::BadAxis(format!(
            "both axes sweep {}",
            x.param.name()
        )));
    }
    if x.count < 2 || y.count < 2 {
        return Err(ExpError::BadAxis("heatmap axes need at least 2 samples".into()));
    }
    let mut cells = Vec::with_capacity(y.values.len());
    for &yv in &y.values {
        let mut row = Vec::with_capacity(x.values.len());
        for &xv in &x.values {
            let params = apply_param(&apply_param(base, y.param, yv)?, x.param, xv)?;
            let profile = build_profile(&params)?;
            let lp = solve_max_lifetime(&profile)?;
            let analytic = stepwise_flows(&profile);
            let structure = classify_flows(&lp, default_classification_tol(&profile));
            row.push(GridCell {
                phi_lp: lp.phi,
                phi_exact: analytic.phi,
                log10_phi: lp.phi.log10(),
                structure_ok: structure.is_direct_stepwise_only,
                analytic_valid: analytic.valid,
            });
        }
        cells.push(row);
    }
    Ok(SweepGrid {
        base: *base,
        x: x.clone(),
        y: y.clone(),
        cells,
    })
}

/// One row of a per-node transmission study.
#[derive(Clone, Copy, Debug)]
pub struct NodeStudyRow {
    pub j: usize,
    pub rel_pos: f64,
    pub info_direct: f64,
    pub info_stepwise: f64,
    pub info_other: f64,
    pub info_total: f64,
    pub power_direct: f64,
    pub power_stepwise: f64,
    pub power_total: f64,
    pub depl_direct: f64,
    pub depl_stepwise: f64,
    pub depl_total: f64,
}

/// Per-node table for one parameter setting.
#[derive(Clone, Debug)]
pub struct NodeStudyTable {
    pub params: SystemParams,
    pub varied: Option<(SweepParam, f64)>,
    pub phi: f64,
    pub rows: Vec<NodeStudyRow>,
}

/// Tabulate any flow schedule node by node.
pub fn node_study_table(
    solution: &FlowSolution,
    varied: Option<(SweepParam, f64)>,
) -> NodeStudyTable {
    let profile = &solution.profile;
    let n = profile.n();
    let mut rows = Vec::with_capacity(n);
    for j in 1..=n {
        let nf = &solution.per_node[j - 1];
        let power_total = solution.node_power(j);
        let capacity = profile.capacity(j);
        rows.push(NodeStudyRow {
            j,
            rel_pos: j as f64 / n as f64,
            info_direct: nf.direct_info,
            info_stepwise: nf.stepwise_info,
            info_other: nf.other_info,
            info_total: nf.direct_info + nf.stepwise_info + nf.other_info,
            power_direct: nf.direct_power,
            power_stepwise: nf.stepwise_power,
            power_total,
            depl_direct: nf.direct_power / capacity,
            depl_stepwise: nf.stepwise_power / capacity,
            depl_total: nf.depletion_rate,
        });
    }
    NodeStudyTable {
        params: profile.params,
        varied,
        phi: solution.phi,
        rows,
    }
}

/// Solve the maximum-lifetime schedule at each value of the varied
/// parameter and tabulate it per node.
pub fn run_node_study(
    base: &SystemParams,
    varied: SweepParam,
    values: &[f64],
) -> Result<Vec<NodeStudyTable>, ExpError> {
    let mut tables = Vec::with_capacity(values.len());
    for &value in values {
        let params = apply_param(base, varied, value)?;
        let profile = build_profile(&params)?;
        let solution = solve_max_lifetime(&profile)?;
        tables.push(node_study_table(&solution, Some((varied, value))));
    }
    Ok(tables)
}

/// Which of the four depletion-rate routes a scaling study evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MethodSet {
    pub lp: bool,
    pub exact: bool,
    pub sum: bool,
    pub integral: bool,
}

impl MethodSet {
    pub fn all() -> Self {
        MethodSet {
            lp: true,
            exact: true,
            sum: true,
            integral: true,
        }
    }

    pub fn any(&self) -> bool {
        self.lp || self.exact || self.sum || self.integral
    }
}

impl Default for MethodSet {
    fn default() -> Self {
        MethodSet::all()
    }
}

/// One ring count in a scaling study. `None` marks a route that was not
/// requested or, for the integral approximation, is undefined at these
/// exponents.
#[derive(Clone, Copy, Debug)]
pub struct ScalingRow {
    pub n: usize,
    pub d: f64,
    pub phi_lp: Option<f64>,
    pub phi_exact: Option<f64>,
    pub phi_sum: Option<f64>,
    pub phi_integral: Option<f64>,
}

/// Scaling study for one value of the companion parameter.
#[derive(Clone, Debug)]
pub struct ScalingTable {
    pub base: SystemParams,
    pub variant: (SweepParam, f64),
    pub rows: Vec<ScalingRow>,
}

/// Spacing rule for constant-coverage scaling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AreaSpacing {
    /// `d = 1/(N + 0.5)`: the outer radius `(N + 1/2) d` is exactly
    /// constant. The default.
    OuterRadius,
    /// `d = 1/N`, provided for comparison.
    Inverse,
}

fn scaling_row(params: &SystemParams, methods: MethodSet) -> Result<ScalingRow, ExpError> {
    let mut row = ScalingRow {
        n: params.n_rings,
        d: params.spacing,
        phi_lp: None,
        phi_exact: None,
        phi_sum: None,
        phi_integral: None,
    };
    if methods.lp {
        let profile = build_profile(params)?;
        row.phi_lp = Some(solve_max_lifetime(&profile)?.phi);
    }
    if methods.exact {
        let profile = build_profile(params)?;
        row.phi_exact = Some(phi_exact(&profile));
    }
    if methods.sum {
        row.phi_sum = Some(phi_sum_approx(params)?);
    }
    if methods.integral {
        row.phi_integral = match phi_integral_approx(params) {
            Ok(v) => Some(v),
            // Undefined branch or degenerate constants: absent, not fatal.
            Err(AnalyticError::UnsupportedBranch { .. })
            | Err(AnalyticError::DegenerateParameters(_)) => None,
            Err(e) => return Err(e.into()),
        };
    }
    Ok(row)
}

/// Depletion rate against ring count at fixed spacing `d = 1`, one table
/// per compression value.
pub fn run_scaling_fixed_spacing(
    base: &SystemParams,
    n_values: &[usize],
    beta_values: &[f64],
    methods: MethodSet,
) -> Result<Vec<ScalingTable>, ExpError> {
    let mut tables = Vec::with_capacity(beta_values.len());
    for &beta in beta_values {
        let mut params = apply_param(base, SweepParam::Beta, beta)?;
        params.spacing = 1.0;
        let mut rows = Vec::with_capacity(n_values.len());
        for &n in n_values {
            let mut p = params;
            p.n_rings = n;
            p.validate()?;
            rows.push(scaling_row(&p, methods)?);
        }
        tables.push(ScalingTable {
            base: params,
            variant: (SweepParam::Beta, beta),
            rows,
        });
    }
    Ok(tables)
}

/// Depletion rate against ring count at constant coverage area, one table
/// per capacity exponent.
pub fn run_scaling_fixed_area(
    base: &SystemParams,
    n_values: &[usize],
    gamma_values: &[f64],
    methods: MethodSet,
    spacing_rule: AreaSpacing,
) -> Result<Vec<ScalingTable>, ExpError> {
    let mut tables = Vec::with_capacity(gamma_values.len());
    for &gamma in gamma_values {
        let params = apply_param(base, SweepParam::Gamma, gamma)?;
        let mut rows = Vec::with_capacity(n_values.len());
        for &n in n_values {
            let mut p = params;
            p.n_rings = n;
            p.spacing = match spacing_rule {
                AreaSpacing::OuterRadius => 1.0 / (n as f64 + 0.5),
                AreaSpacing::Inverse => 1.0 / n as f64,
            };
            p.validate()?;
            rows.push(scaling_row(&p, methods)?);
        }
        tables.push(ScalingTable {
            base: params,
            variant: (SweepParam::Gamma, gamma),
            rows,
        });
    }
    Ok(tables)
}

/// Ordinary least-squares slope of `log y` against `log x`.
pub fn fit_loglog_slope(xs: &[f64], ys: &[f64]) -> Result<f64, ExpError> {
    if xs.len() != ys.len() || xs.len() < 3 {
        return Err(ExpError::TooFewPoints(xs.len().min(ys.len())));
    }
    if xs.iter().chain(ys).any(|&v| v <= 0.0 || !v.is_finite()) {
        return Err(ExpError::NonPositiveData);
    }
    let lx: Vec<f64> = xs.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|v| v.ln()).collect();
    Ok(least_squares_slope(&lx, &ly))
}
