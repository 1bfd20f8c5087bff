//! Closed-form solution of the maximum-lifetime schedule and its
//! approximations.
//!
//! When the optimal schedule uses only direct and stepwise transmission and
//! every node depletes at the same rate `phi`, the stepwise flows satisfy a
//! first-order recurrence that forward substitution solves exactly. The
//! sequences involved are
//!
//! ```text
//! p_j   = c_j / (b_j k_t) * (j d)^(-lambda)
//! q_j   = (1 - j^(-lambda)) / b_j
//! w_j   = p_j phi - a_j
//! phi_j = prod_{k=2..j} b_k / (1 - k^(-lambda))     (phi_1 = 1)
//! ```
//!
//! and the depletion rate itself is the ratio `phi = (a.phi_seq) /
//! (p.phi_seq)`. Whether the resulting flows are actually feasible
//! (nonnegative) is reported, not assumed; the LP route is authoritative
//! when they are not.
//!
//! Index convention: `p`, `q`, `w`, `phi_seq` are stored 0-based, entry
//! `j - 1` holding the value for ring `j`. The stepwise flow vector `y` is
//! padded so that `y[j]` is literally the flow from ring `j` to ring
//! `j - 1`; `y[0]`, `y[1]` and `y[n + 1]` are zero (ring 1's outflow to the
//! sink counts as direct transmission).

use std::fmt;

use crate::ring_model::{build_profile, NodeProfile, ParamError, SystemParams};
use crate::util::least_squares_slope;

#[derive(Clone, Debug, PartialEq)]
pub enum AnalyticError {
    Param(ParamError),
    NodeIndexOutOfRange { j: usize, n: usize },
    /// The integral approximation is printed only for `1 + gamma - lambda
    /// >= 0`.
    UnsupportedBranch { one_plus_gamma_minus_lambda: f64 },
    /// A printed constant of the integral approximation divides by zero at
    /// these exponents.
    DegenerateParameters(String),
    BetaNotBelowOne(f64),
    /// `beta^n_lo` is not small enough for the high-compression asymptote.
    InsufficientCompressionDecay { beta: f64, n_lo: usize },
    EmptyRange,
    NonConstantCompression,
}

impl fmt::Display for AnalyticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalyticError::Param(e) => write!(f, "{e}"),
            AnalyticError::NodeIndexOutOfRange { j, n } => {
                write!(f, "ring index {j} outside 1..={n}")
            }
            AnalyticError::UnsupportedBranch {
                one_plus_gamma_minus_lambda,
            } => write!(
                f,
                "integral approximation undefined for 1 + gamma - lambda = \
                 {one_plus_gamma_minus_lambda} < 0"
            ),
            AnalyticError::DegenerateParameters(which) => {
                write!(f, "integral approximation constant degenerate: {which}")
            }
            AnalyticError::BetaNotBelowOne(b) => {
                write!(f, "high-compression asymptote requires beta < 1, got {b}")
            }
            AnalyticError::InsufficientCompressionDecay { beta, n_lo } => write!(
                f,
                "beta^n_lo = {:.3e} is not below 1e-6; the asymptote has not set in",
                beta.powi(*n_lo as i32)
            ),
            AnalyticError::EmptyRange => write!(f, "need at least two ring counts"),
            AnalyticError::NonConstantCompression => {
                write!(f, "specialized form requires a constant compression ratio")
            }
        }
    }
}

impl std::error::Error for AnalyticError {}

impl From<ParamError> for AnalyticError {
    fn from(e: ParamError) -> Self {
        AnalyticError::Param(e)
    }
}

/// Relative tolerance, scaled by the total information rate, below which a
/// slightly negative flow still counts as feasible.
const VALIDITY_REL_TOL: f64 = 1e-9;

/// Exact equal-depletion solution of one profile.
#[derive(Clone, Debug)]
pub struct AnalyticSolution {
    pub p: Vec<f64>,
    pub q: Vec<f64>,
    pub w: Vec<f64>,
    /// `phi_seq[j-1]` is the product `phi_j`.
    pub phi_seq: Vec<f64>,
    /// Padded stepwise flows; see the module doc for the convention.
    pub y: Vec<f64>,
    /// Exact system depletion rate.
    pub phi: f64,
    /// True when all stepwise and direct flows are nonnegative, i.e. the
    /// equal-depletion construction is a genuine schedule.
    pub valid: bool,
    pub infeasibility_reason: Option<String>,
}

impl AnalyticSolution {
    /// Stepwise flows `y_2 .. y_N` as a slice (empty when N = 1).
    pub fn stepwise_entries(&self) -> &[f64] {
        let n = self.y.len() - 2;
        &self.y[2..n + 1]
    }

    /// Direct flow from ring `j` to the sink implied by the stepwise flows.
    pub fn direct_flow(&self, profile: &NodeProfile, j: usize) -> f64 {
        profile.compression(j) * (profile.info_rate(j) + self.y[j + 1]) - self.y[j]
    }

    /// Power drawn by ring `j` under this schedule.
    pub fn node_power(&self, profile: &NodeProfile, j: usize) -> f64 {
        let stepwise = if j >= 2 {
            self.y[j] * profile.cost(j - 1, j)
        } else {
            0.0
        };
        stepwise + self.direct_flow(profile, j) * profile.cost(0, j)
    }

    /// Residual of the terminal identity `-q_N y_N = w_N`. Zero in exact
    /// arithmetic. Measured against the magnitude of the two sides or,
    /// when both vanish (all-direct optima have `w = 0` identically), the
    /// power-balance scale `p_N phi` that their cancellation came from.
    pub fn terminal_residual(&self) -> f64 {
        let n = self.p.len();
        let lhs = -self.q[n - 1] * self.y[n];
        let rhs = self.w[n - 1];
        let scale = lhs
            .abs()
            .max(rhs.abs())
            .max((self.p[n - 1] * self.phi).abs());
        if scale == 0.0 {
            0.0
        } else {
            (lhs - rhs).abs() / scale
        }
    }

    /// Residual of the opposite anchor `y_2 = w_1` (ring 1's power
    /// balance), on the same scale convention as
    /// [`terminal_residual`](Self::terminal_residual). Together the two
    /// certify that `phi` closes the recurrence from both ends.
    pub fn anchor_residual(&self) -> f64 {
        if self.p.len() < 2 {
            return 0.0;
        }
        let scale = self.y[2]
            .abs()
            .max(self.w[0].abs())
            .max((self.p[0] * self.phi).abs());
        if scale == 0.0 {
            0.0
        } else {
            (self.y[2] - self.w[0]).abs() / scale
        }
    }
}

/// The `p`, `q`, `w` sequences at a given depletion rate.
pub fn pqw(profile: &NodeProfile, phi: f64) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let n = profile.n();
    let lambda = profile.params.lambda;
    let d = profile.params.spacing;
    let mut p = Vec::with_capacity(n);
    let mut q = Vec::with_capacity(n);
    let mut w = Vec::with_capacity(n);
    for j in 1..=n {
        let jf = j as f64;
        let pj = profile.capacity(j) / (profile.compression(j) * profile.k_t)
            * (jf * d).powf(-lambda);
        let qj = (1.0 - jf.powf(-lambda)) / profile.compression(j);
        p.push(pj);
        q.push(qj);
        w.push(pj * phi - profile.info_rate(j));
    }
    (p, q, w)
}

/// The cumulative products `phi_j`.
pub fn phi_sequence(profile: &NodeProfile) -> Vec<f64> {
    let n = profile.n();
    let lambda = profile.params.lambda;
    let mut seq = Vec::with_capacity(n);
    let mut prod = 1.0;
    seq.push(prod);
    for j in 2..=n {
        let jf = j as f64;
        prod *= profile.compression(j) / (1.0 - jf.powf(-lambda));
        seq.push(prod);
    }
    seq
}

/// Exact depletion rate `(a . phi_seq) / (p . phi_seq)`.
pub fn phi_exact(profile: &NodeProfile) -> f64 {
    let seq = phi_sequence(profile);
    let (p, _, _) = pqw(profile, 0.0);
    let mut num = 0.0;
    let mut den = 0.0;
    for j in 1..=profile.n() {
        num += profile.info_rate(j) * seq[j - 1];
        den += p[j - 1] * seq[j - 1];
    }
    num / den
}

/// Solve the equal-depletion system and test its feasibility.
/// Infeasibility is a reported state, not an error.
///
/// The recurrence `y_{j+1} = w_j + q_j y_j` is evaluated from its terminal
/// equation `y_N = -w_N / q_N` downward. Upward evaluation amplifies
/// rounding by `prod q_j` (about `(1/beta)^N`), which at `beta = 0.5`,
/// `N = 20` already costs eight digits; the downward direction contracts
/// errors by the same factor. Both orders solve the same bidiagonal
/// system, and `phi` makes them consistent.
pub fn stepwise_flows(profile: &NodeProfile) -> AnalyticSolution {
    let n = profile.n();
    let phi = phi_exact(profile);
    let (p, q, w) = pqw(profile, phi);
    let phi_seq = phi_sequence(profile);

    let mut y = vec![0.0; n + 2];
    if n >= 2 {
        y[n] = -w[n - 1] / q[n - 1];
        for j in (2..n).rev() {
            y[j] = (y[j + 1] - w[j - 1]) / q[j - 1];
        }
    }

    let tol = VALIDITY_REL_TOL * profile.total_info_rate();
    let mut valid = true;
    let mut reason = None;
    for (j, &flow) in y.iter().enumerate().take(n + 1).skip(2) {
        if flow < -tol {
            valid = false;
            reason = Some(format!("stepwise flow y_{j} = {flow:.6e} is negative"));
            break;
        }
    }
    if valid {
        for j in 1..=n {
            let direct = profile.compression(j) * (profile.info_rate(j) + y[j + 1]) - y[j];
            if direct < -tol {
                valid = false;
                reason = Some(format!(
                    "direct flow from ring {j} = {direct:.6e} is negative"
                ));
                break;
            }
        }
    }

    AnalyticSolution {
        p,
        q,
        w,
        phi_seq,
        y,
        phi,
        valid,
        infeasibility_reason: reason,
    }
}

/// Power spent by ring `j` in the minimum-total-power schedule, where all
/// information marches inward one ring at a time:
/// `t_1 * sum_{m=j..N} a_m * prod_{l=j..m} b_l`.
pub fn min_power_node(profile: &NodeProfile, j: usize) -> Result<f64, AnalyticError> {
    let n = profile.n();
    if j < 1 || j > n {
        return Err(AnalyticError::NodeIndexOutOfRange { j, n });
    }
    let t1 = profile.unit_hop_cost();
    let mut prod = 1.0;
    let mut sum = 0.0;
    for m in j..=n {
        prod *= profile.compression(m);
        sum += profile.info_rate(m) * prod;
    }
    Ok(t1 * sum)
}

/// Specialization of [`min_power_node`] for constant compression:
/// `t_1 * sum_{m=0..N-j} a_{j+m} beta^(m+1)`.
pub fn min_power_node_const_compression(
    profile: &NodeProfile,
    j: usize,
) -> Result<f64, AnalyticError> {
    let n = profile.n();
    if j < 1 || j > n {
        return Err(AnalyticError::NodeIndexOutOfRange { j, n });
    }
    let beta = profile.compression(1);
    if profile.b.iter().any(|&b| b != beta) {
        return Err(AnalyticError::NonConstantCompression);
    }
    let t1 = profile.unit_hop_cost();
    let mut sum = 0.0;
    for m in 0..=(n - j) {
        sum += profile.info_rate(j + m) * beta.powi(m as i32 + 1);
    }
    Ok(t1 * sum)
}

/// Closed form for constant compression and uniform sensor density
/// (`a_j = j a_1`).
pub fn min_power_node_uniform(n: usize, j: usize, beta: f64, t1: f64, a1: f64) -> f64 {
    let nf = n as f64;
    let jf = j as f64;
    if beta < 1.0 {
        let om = 1.0 - beta;
        beta * t1 * a1 / (om * om)
            * (beta + jf * om - beta.powi((n - j) as i32 + 1) * (om * nf + 1.0))
    } else {
        t1 * a1 / 2.0 * (nf * (nf + 1.0) - jf * (jf - 1.0))
    }
}

/// Minimum total transmission power over all nodes:
/// `t_1 * sum_j a_j * sum_{m=1..j} prod_{l=m..j} b_l`.
pub fn min_power_total(profile: &NodeProfile) -> f64 {
    let t1 = profile.unit_hop_cost();
    let mut total = 0.0;
    for j in 1..=profile.n() {
        let mut prod = 1.0;
        let mut hops = 0.0;
        for m in (1..=j).rev() {
            prod *= profile.compression(m);
            hops += prod;
        }
        total += profile.info_rate(j) * hops;
    }
    t1 * total
}

/// Which proxy for the cumulative product `1/Q(j)` the summation
/// approximation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumApproxForm {
    /// `exp(-j^(1-lambda)/(lambda-1))`, the default.
    Exponential,
    /// The printed second-order expansion `1 - u + u^2/2` of the same
    /// exponential.
    Polynomial,
}

/// Summation approximation of the depletion rate:
/// `beta d^lambda (sum j^gamma / sum j^alpha) * (sum j^alpha beta^j E_j) /
/// (sum j^(gamma-lambda) beta^j E_j)`.
///
/// `E_j` approximates the inverse product `1/Q(j)` up to a constant that
/// cancels in the ratio. Its exponent is negative: `Q(j) ~ Q_0
/// exp(+j^(1-lambda)/(lambda-1))`, so the inverse carries the opposite
/// sign.
pub fn phi_sum_approx(params: &SystemParams) -> Result<f64, AnalyticError> {
    phi_sum_approx_with(params, SumApproxForm::Exponential)
}

pub fn phi_sum_approx_with(
    params: &SystemParams,
    form: SumApproxForm,
) -> Result<f64, AnalyticError> {
    params.validate()?;
    let n = params.n_rings;
    let lambda = params.lambda;
    let beta = params.beta;
    let proxy = |j: f64| -> f64 {
        let u = j.powf(1.0 - lambda) / (lambda - 1.0);
        match form {
            SumApproxForm::Exponential => (-u).exp(),
            SumApproxForm::Polynomial => 1.0 - u + 0.5 * u * u,
        }
    };
    let mut sum_alpha = 0.0;
    let mut sum_gamma = 0.0;
    let mut num = 0.0;
    let mut den = 0.0;
    for j in 1..=n {
        let jf = j as f64;
        let weight = beta.powi(j as i32) * proxy(jf);
        sum_alpha += jf.powf(params.alpha);
        sum_gamma += jf.powf(params.gamma);
        num += jf.powf(params.alpha) * weight;
        den += jf.powf(params.gamma - lambda) * weight;
    }
    Ok(beta * params.spacing.powf(lambda) * (sum_gamma / sum_alpha) * num / den)
}

/// Integral approximation of the depletion rate, valid in the
/// low-compression regime (`beta^N` close to 1) and printed for
/// `1 + gamma - lambda >= 0` only. The two branches are selected by the
/// sign of `1 + gamma - lambda` with equality tolerance 1e-12.
pub fn phi_integral_approx(params: &SystemParams) -> Result<f64, AnalyticError> {
    params.validate()?;
    let alpha = params.alpha;
    let beta = params.beta;
    let gamma = params.gamma;
    let lambda = params.lambda;
    let n = params.n_rings as f64;
    let nt = n + 0.5;

    let branch_sign = 1.0 + gamma - lambda;
    if branch_sign < -1e-12 {
        return Err(AnalyticError::UnsupportedBranch {
            one_plus_gamma_minus_lambda: branch_sign,
        });
    }
    if gamma + 1.0 == 0.0 {
        return Err(AnalyticError::DegenerateParameters("gamma + 1 = 0".into()));
    }
    if alpha + 2.0 == 0.0 {
        return Err(AnalyticError::DegenerateParameters("alpha + 2 = 0".into()));
    }
    let c2_den = (lambda - 1.0) * (alpha - lambda + 2.0);
    if c2_den.abs() < 1e-12 {
        return Err(AnalyticError::DegenerateParameters(
            "alpha - lambda + 2 = 0".into(),
        ));
    }

    let c1 = (alpha + 1.0) / (alpha + 2.0);
    let c2 = (alpha + 1.0) / c2_den;
    let base = beta * (nt * params.spacing).powf(lambda) / (gamma + 1.0);
    let common = 1.0 - c1 * (1.0 - beta.powi(params.n_rings as i32))
        - c2 * nt.powf(1.0 - lambda);

    let branch = if branch_sign.abs() <= 1e-12 {
        let lm = lambda - 1.0;
        let c5 = 1.0 / (lm * lm);
        let c6 = 1.0 / (4.0 * lm * lm * lm);
        let c7 = -2f64.powf(lambda - 1.0) / (lm * lm)
            + 4f64.powf(lambda - 2.0) / (lm * lm * lm)
            + 2f64.ln();
        1.0 / (nt.ln() + c5 * nt.powf(1.0 - lambda) - c6 * nt.powf(2.0 - 2.0 * lambda) - c7)
    } else {
        let c3_den = (lambda - 1.0) * (gamma - 2.0 * lambda + 2.0);
        if c3_den.abs() < 1e-12 {
            return Err(AnalyticError::DegenerateParameters(
                "gamma - 2 lambda + 2 = 0".into(),
            ));
        }
        let c3 = (gamma - lambda + 1.0) / c3_den;
        let c4 = 1.0 - (gamma - lambda + 1.0) * 2f64.powf(-2.0 + 2.0 * lambda - gamma) / c3_den;
        (gamma - lambda + 1.0)
            / (1.0 - c3 * nt.powf(1.0 - lambda) - c4 * nt.powf(-gamma + lambda - 1.0))
    };

    Ok(base * common * branch)
}

/// Least-squares slope of `log phi_exact` against `log N` over the integer
/// range `n_lo ..= n_hi`. In the high-compression regime this approaches
/// `gamma - alpha`.
pub fn high_compression_slope(
    params: &SystemParams,
    n_lo: usize,
    n_hi: usize,
) -> Result<f64, AnalyticError> {
    params.validate()?;
    if params.beta >= 1.0 {
        return Err(AnalyticError::BetaNotBelowOne(params.beta));
    }
    if n_hi <= n_lo {
        return Err(AnalyticError::EmptyRange);
    }
    if params.beta.powi(n_lo as i32) >= 1e-6 {
        return Err(AnalyticError::InsufficientCompressionDecay {
            beta: params.beta,
            n_lo,
        });
    }
    let mut xs = Vec::with_capacity(n_hi - n_lo + 1);
    let mut ys = Vec::with_capacity(n_hi - n_lo + 1);
    for n in n_lo..=n_hi {
        let mut p = *params;
        p.n_rings = n;
        let profile = build_profile(&p)?;
        xs.push((n as f64).ln());
        ys.push(phi_exact(&profile).ln());
    }
    Ok(least_squares_slope(&xs, &ys))
}
