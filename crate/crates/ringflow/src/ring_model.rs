//! Node parameter sequences and transmission costs for the line-of-nodes
//! model.
//!
//! Ring index `j` is 1-based throughout; the sink is node 0 and carries no
//! profile entry. All sequences stored in [`NodeProfile`] are plain vectors
//! indexed `j - 1`; the 1-based accessor methods are the preferred way to
//! read them.

use std::f64::consts::PI;
use std::fmt;

/// How the information/capacity density normalizers `k_a`, `k_c` compute
/// the covered area.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    /// Area factor `pi * N^2 * (d + 1/2)^2`. Reproduces the reference
    /// figures and is the default.
    PaperVerbatim,
    /// Area factor `pi * ((N + 1/2) * d)^2`, i.e. the disk of outer radius
    /// `(N + 1/2) d` that the rings actually cover. Gives unit information
    /// and capacity density by construction.
    UnitDensity,
}

impl fmt::Display for Normalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Normalization::PaperVerbatim => write!(f, "paper-verbatim"),
            Normalization::UnitDensity => write!(f, "unit-density"),
        }
    }
}

/// The six scalar knobs of the model plus the normalization mode.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SystemParams {
    /// Information density exponent: `a_j ~ j^alpha`.
    pub alpha: f64,
    /// Compression ratio applied by every node, in `(0, 1]`.
    pub beta: f64,
    /// Capacity exponent: `c_j ~ j^gamma`.
    pub gamma: f64,
    /// Transmission power exponent, strictly greater than 1.
    pub lambda: f64,
    /// Number of rings `N`.
    pub n_rings: usize,
    /// Ring spacing `d` in normalized distance units.
    pub spacing: f64,
    pub normalization: Normalization,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ParamError {
    BetaOutOfRange(f64),
    LambdaNotAboveOne(f64),
    ZeroRings,
    NonPositiveSpacing(f64),
    NonFinite(&'static str),
    SelfTransmission(usize),
    NodeIndexOutOfRange { index: usize, n_rings: usize },
}

impl fmt::Display for ParamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamError::BetaOutOfRange(b) => {
                write!(f, "compression ratio beta must lie in (0, 1], got {b}")
            }
            ParamError::LambdaNotAboveOne(l) => {
                write!(f, "transmission exponent lambda must exceed 1, got {l}")
            }
            ParamError::ZeroRings => write!(f, "ring count N must be at least 1"),
            ParamError::NonPositiveSpacing(d) => {
                write!(f, "ring spacing d must be positive, got {d}")
            }
            ParamError::NonFinite(name) => write!(f, "parameter {name} must be finite"),
            ParamError::SelfTransmission(i) => {
                write!(f, "node {i} cannot transmit to itself")
            }
            ParamError::NodeIndexOutOfRange { index, n_rings } => {
                write!(f, "node index {index} outside 0..={n_rings}")
            }
        }
    }
}

impl std::error::Error for ParamError {}

impl SystemParams {
    /// Baseline parameter set: alpha = beta = gamma = 1, lambda = 2,
    /// N = 20, d = 1.
    pub fn baseline() -> Self {
        SystemParams {
            alpha: 1.0,
            beta: 1.0,
            gamma: 1.0,
            lambda: 2.0,
            n_rings: 20,
            spacing: 1.0,
            normalization: Normalization::PaperVerbatim,
        }
    }

    pub fn validate(&self) -> Result<(), ParamError> {
        if !self.alpha.is_finite() {
            return Err(ParamError::NonFinite("alpha"));
        }
        if !self.gamma.is_finite() {
            return Err(ParamError::NonFinite("gamma"));
        }
        if !self.beta.is_finite() || self.beta <= 0.0 || self.beta > 1.0 {
            return Err(ParamError::BetaOutOfRange(self.beta));
        }
        // The closed forms and both approximations divide by lambda - 1.
        if !self.lambda.is_finite() || self.lambda <= 1.0 {
            return Err(ParamError::LambdaNotAboveOne(self.lambda));
        }
        if self.n_rings == 0 {
            return Err(ParamError::ZeroRings);
        }
        if !self.spacing.is_finite() || self.spacing <= 0.0 {
            return Err(ParamError::NonPositiveSpacing(self.spacing));
        }
        Ok(())
    }

    fn area_factor(&self) -> f64 {
        let n = self.n_rings as f64;
        match self.normalization {
            Normalization::PaperVerbatim => PI * n * n * (self.spacing + 0.5) * (self.spacing + 0.5),
            Normalization::UnitDensity => {
                let r = (n + 0.5) * self.spacing;
                PI * r * r
            }
        }
    }
}

/// Scale factors `(k_a, k_c)` that normalize total information rate and
/// total capacity to the covered area.
pub fn normalizers(params: &SystemParams) -> Result<(f64, f64), ParamError> {
    params.validate()?;
    let area = params.area_factor();
    let sum_alpha: f64 = (1..=params.n_rings)
        .map(|j| (j as f64).powf(params.alpha))
        .sum();
    let sum_gamma: f64 = (1..=params.n_rings)
        .map(|j| (j as f64).powf(params.gamma))
        .sum();
    Ok((area / sum_alpha, area / sum_gamma))
}

/// Power cost per unit information for a transmission from node `j` to
/// node `i`, `(d * |i - j|)^lambda` with unit cost scale.
///
/// Self-transmission (`i == j`) is rejected: such flows are prohibited by
/// the model.
pub fn transmission_cost(i: usize, j: usize, params: &SystemParams) -> Result<f64, ParamError> {
    params.validate()?;
    if i == j {
        return Err(ParamError::SelfTransmission(i));
    }
    for &idx in &[i, j] {
        if idx > params.n_rings {
            return Err(ParamError::NodeIndexOutOfRange {
                index: idx,
                n_rings: params.n_rings,
            });
        }
    }
    let hops = i.abs_diff(j) as f64;
    Ok((params.spacing * hops).powf(params.lambda))
}

/// Fully instantiated per-node sequences: information rates `a`, compression
/// ratios `b`, capacities `c`, plus the scale constants they were built from.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeProfile {
    pub params: SystemParams,
    /// `a[j-1] = k_a * j^alpha`, information per time originating at ring j.
    pub a: Vec<f64>,
    /// `b[j-1] = beta`, compression applied to everything ring j sends.
    pub b: Vec<f64>,
    /// `c[j-1] = k_c * j^gamma`, remaining energy capacity of ring j.
    pub c: Vec<f64>,
    pub k_a: f64,
    pub k_c: f64,
    /// Cost scale for transmissions; fixed to 1.
    pub k_t: f64,
}

impl NodeProfile {
    pub fn n(&self) -> usize {
        self.a.len()
    }

    /// Information rate of ring `j` (1-based).
    pub fn info_rate(&self, j: usize) -> f64 {
        self.a[j - 1]
    }

    /// Compression ratio of ring `j` (1-based).
    pub fn compression(&self, j: usize) -> f64 {
        self.b[j - 1]
    }

    /// Remaining capacity of ring `j` (1-based).
    pub fn capacity(&self, j: usize) -> f64 {
        self.c[j - 1]
    }

    /// Transmission cost from node `j` to node `i`, both 0-based up to `N`,
    /// `i != j`. Unlike [`transmission_cost`] this honors the profile's own
    /// cost scale `k_t`.
    pub fn cost(&self, i: usize, j: usize) -> f64 {
        debug_assert_ne!(i, j, "self-transmission has no cost");
        let hops = i.abs_diff(j) as f64;
        self.k_t * (self.params.spacing * hops).powf(self.params.lambda)
    }

    /// Cost of a single-hop transmission between adjacent nodes.
    pub fn unit_hop_cost(&self) -> f64 {
        self.k_t * self.params.spacing.powf(self.params.lambda)
    }

    /// Sum of all information rates.
    pub fn total_info_rate(&self) -> f64 {
        self.a.iter().sum()
    }

    /// Whether any node compresses, which forbids flows directed away from
    /// the sink.
    pub fn forward_only(&self) -> bool {
        self.b.iter().any(|&b| b < 1.0)
    }
}

/// Instantiate the power-law sequences for the given parameters.
pub fn build_profile(params: &SystemParams) -> Result<NodeProfile, ParamError> {
    let (k_a, k_c) = normalizers(params)?;
    let n = params.n_rings;
    let mut a = Vec::with_capacity(n);
    let mut b = Vec::with_capacity(n);
    let mut c = Vec::with_capacity(n);
    for j in 1..=n {
        let jf = j as f64;
        a.push(k_a * jf.powf(params.alpha));
        b.push(params.beta);
        c.push(k_c * jf.powf(params.gamma));
    }
    Ok(NodeProfile {
        params: *params,
        a,
        b,
        c,
        k_a,
        k_c,
        k_t: 1.0,
    })
}
