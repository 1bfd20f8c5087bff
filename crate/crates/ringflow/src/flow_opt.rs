//! Translation of a node profile into the two linear programs and back.
//!
//! Variables are the admissible information flows `x[i][j]` (from ring `j`
//! to receiver `i`), ordered sender-major: for each `j = 1..N`, receivers
//! `i = 0..N` in increasing order. Flows to oneself never exist, and when
//! any node compresses (`beta < 1`) flows directed away from the sink are
//! dropped entirely. The maximum-lifetime program appends the depletion
//! bound `phi` as the last variable.

use std::fmt;

use crate::analytic::AnalyticSolution;
use crate::ring_model::{NodeProfile, ParamError};
use crate::simplex::{solve_lp, LpError, LpProblem, LpStatus};

#[derive(Clone, Debug)]
pub enum FlowError {
    Param(ParamError),
    Lp(LpError),
    /// The flow programs are always feasible and bounded; any other solver
    /// outcome indicates a bug upstream.
    UnexpectedStatus(LpStatus),
}

impl fmt::Display for FlowError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FlowError::Param(e) => write!(f, "{e}"),
            FlowError::Lp(e) => write!(f, "{e}"),
            FlowError::UnexpectedStatus(s) => {
                write!(f, "solver returned {s} on a feasible bounded flow program")
            }
        }
    }
}

impl std::error::Error for FlowError {}

impl From<ParamError> for FlowError {
    fn from(e: ParamError) -> Self {
        FlowError::Param(e)
    }
}

impl From<LpError> for FlowError {
    fn from(e: LpError) -> Self {
        FlowError::Lp(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjectiveKind {
    MaxLifetime,
    MinTotalPower,
}

/// Per-node decomposition of an optimal flow matrix. Ring 1's outflow to
/// the sink is a single hop and counts as direct, never stepwise.
#[derive(Clone, Debug)]
pub struct NodeFlows {
    pub direct_info: f64,
    pub stepwise_info: f64,
    pub other_info: f64,
    pub direct_power: f64,
    pub stepwise_power: f64,
    pub depletion_rate: f64,
}

/// A solved flow schedule plus the profile it was solved for.
#[derive(Clone, Debug)]
pub struct FlowSolution {
    pub profile: NodeProfile,
    /// `x[i][j]` is the information rate from ring `j` to node `i`;
    /// row 0 is the sink, column 0 is unused.
    pub x: Vec<Vec<f64>>,
    /// System depletion rate: the optimum for max-lifetime, the induced
    /// worst-node rate for min-power.
    pub phi: f64,
    pub per_node: Vec<NodeFlows>,
    pub objective_kind: ObjectiveKind,
    pub total_power: f64,
    /// Simplex pivots spent solving the instance (0 for constructed
    /// solutions).
    pub lp_iterations: usize,
}

impl FlowSolution {
    pub fn n(&self) -> usize {
        self.profile.n()
    }

    /// Total outflow of ring `j`.
    pub fn node_outflow(&self, j: usize) -> f64 {
        (0..=self.n()).filter(|&i| i != j).map(|i| self.x[i][j]).sum()
    }

    /// Total inflow into ring `j` from other rings.
    pub fn node_inflow(&self, j: usize) -> f64 {
        (1..=self.n()).filter(|&i| i != j).map(|i| self.x[j][i]).sum()
    }

    /// Transmission power drawn by ring `j`.
    pub fn node_power(&self, j: usize) -> f64 {
        (0..=self.n())
            .filter(|&i| i != j)
            .map(|i| self.x[i][j] * self.profile.cost(i, j))
            .sum()
    }

    /// Largest violation of per-node conservation,
    /// `|outflow_j - b_j (a_j + inflow_j)|` over all rings.
    pub fn max_conservation_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for j in 1..=self.n() {
            let expected = self.profile.compression(j)
                * (self.profile.info_rate(j) + self.node_inflow(j));
            worst = worst.max((self.node_outflow(j) - expected).abs());
        }
        worst
    }

    /// Total information arriving at the sink.
    pub fn sink_inflow(&self) -> f64 {
        (1..=self.n()).map(|j| self.x[0][j]).sum()
    }
}

/// Structural classification of a flow matrix.
#[derive(Clone, Copy, Debug)]
pub struct StructureReport {
    pub is_direct_stepwise_only: bool,
    /// Largest flow on any link that is neither direct nor stepwise.
    pub max_other_mass: f64,
}

/// Admissible (receiver, sender) pairs in variable order.
pub fn admissible_pairs(profile: &NodeProfile) -> Vec<(usize, usize)> {
    let n = profile.n();
    let forward_only = profile.forward_only();
    let mut pairs = Vec::new();
    for j in 1..=n {
        for i in 0..=n {
            if i == j {
                continue;
            }
            if forward_only && i > j {
                continue;
            }
            pairs.push((i, j));
        }
    }
    pairs
}

fn conservation_rows(
    profile: &NodeProfile,
    pairs: &[(usize, usize)],
    num_vars: usize,
) -> (Vec<Vec<f64>>, Vec<f64>) {
    let n = profile.n();
    let mut matrix = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);
    for j in 1..=n {
        let mut row = vec![0.0; num_vars];
        for (idx, &(i, sender)) in pairs.iter().enumerate() {
            if sender == j {
                row[idx] += 1.0;
            }
            if i == j {
                row[idx] -= profile.compression(j);
            }
        }
        matrix.push(row);
        rhs.push(profile.compression(j) * profile.info_rate(j));
    }
    (matrix, rhs)
}

/// Maximum-lifetime program: minimize `phi` subject to conservation and
/// `sum_i (t_ij / c_j) x_ij <= phi` for every ring.
pub fn build_max_lifetime_lp(profile: &NodeProfile) -> LpProblem {
    let pairs = admissible_pairs(profile);
    let num_vars = pairs.len() + 1;
    let phi_idx = pairs.len();

    let mut objective = vec![0.0; num_vars];
    objective[phi_idx] = 1.0;

    let (eq_matrix, eq_rhs) = conservation_rows(profile, &pairs, num_vars);

    let n = profile.n();
    let mut ineq_matrix = Vec::with_capacity(n);
    for j in 1..=n {
        let mut row = vec![0.0; num_vars];
        for (idx, &(i, sender)) in pairs.iter().enumerate() {
            if sender == j {
                row[idx] = profile.cost(i, j) / profile.capacity(j);
            }
        }
        row[phi_idx] = -1.0;
        ineq_matrix.push(row);
    }
    let ineq_rhs = vec![0.0; n];

    LpProblem {
        objective,
        eq_matrix,
        eq_rhs,
        ineq_matrix,
        ineq_rhs,
    }
}

/// Minimum-total-power program: minimize `sum t_ij x_ij` subject to
/// conservation only.
pub fn build_min_power_lp(profile: &NodeProfile) -> LpProblem {
    let pairs = admissible_pairs(profile);
    let num_vars = pairs.len();
    let objective: Vec<f64> = pairs.iter().map(|&(i, j)| profile.cost(i, j)).collect();
    let (eq_matrix, eq_rhs) = conservation_rows(profile, &pairs, num_vars);
    LpProblem {
        objective,
        eq_matrix,
        eq_rhs,
        ineq_matrix: Vec::new(),
        ineq_rhs: Vec::new(),
    }
}

fn matrix_from_vars(profile: &NodeProfile, pairs: &[(usize, usize)], vars: &[f64]) -> Vec<Vec<f64>> {
    let n = profile.n();
    let mut x = vec![vec![0.0; n + 1]; n + 1];
    for (idx, &(i, j)) in pairs.iter().enumerate() {
        x[i][j] = vars[idx];
    }
    x
}

fn tabulate(profile: &NodeProfile, x: &[Vec<f64>]) -> (Vec<NodeFlows>, f64) {
    let n = profile.n();
    let mut per_node = Vec::with_capacity(n);
    let mut total_power = 0.0;
    for j in 1..=n {
        let direct_info = x[0][j];
        let stepwise_info = if j >= 2 { x[j - 1][j] } else { 0.0 };
        let outflow: f64 = (0..=n).filter(|&i| i != j).map(|i| x[i][j]).sum();
        let other_info = outflow - direct_info - stepwise_info;
        let direct_power = direct_info * profile.cost(0, j);
        let stepwise_power = if j >= 2 {
            stepwise_info * profile.cost(j - 1, j)
        } else {
            0.0
        };
        let node_power: f64 = (0..=n)
            .filter(|&i| i != j)
            .map(|i| x[i][j] * profile.cost(i, j))
            .sum();
        total_power += node_power;
        per_node.push(NodeFlows {
            direct_info,
            stepwise_info,
            other_info,
            direct_power,
            stepwise_power,
            depletion_rate: node_power / profile.capacity(j),
        });
    }
    (per_node, total_power)
}

fn solve(profile: &NodeProfile, kind: ObjectiveKind) -> Result<FlowSolution, FlowError> {
    profile.params.validate()?;
    let problem = match kind {
        ObjectiveKind::MaxLifetime => build_max_lifetime_lp(profile),
        ObjectiveKind::MinTotalPower => build_min_power_lp(profile),
    };
    let solution = solve_lp(&problem)?;
    if solution.status != LpStatus::Optimal {
        return Err(FlowError::UnexpectedStatus(solution.status));
    }
    let pairs = admissible_pairs(profile);
    let x = matrix_from_vars(profile, &pairs, &solution.x);
    let (per_node, total_power) = tabulate(profile, &x);
    let phi = match kind {
        ObjectiveKind::MaxLifetime => solution.x[pairs.len()],
        ObjectiveKind::MinTotalPower => per_node
            .iter()
            .map(|nf| nf.depletion_rate)
            .fold(0.0f64, f64::max),
    };
    Ok(FlowSolution {
        profile: profile.clone(),
        x,
        phi,
        per_node,
        objective_kind: kind,
        total_power,
        lp_iterations: solution.iterations,
    })
}

pub fn solve_max_lifetime(profile: &NodeProfile) -> Result<FlowSolution, FlowError> {
    solve(profile, ObjectiveKind::MaxLifetime)
}

pub fn solve_min_power(profile: &NodeProfile) -> Result<FlowSolution, FlowError> {
    solve(profile, ObjectiveKind::MinTotalPower)
}

/// Default tolerance for structural classification, scale-free in the
/// total information rate.
pub fn default_classification_tol(profile: &NodeProfile) -> f64 {
    1e-6 * profile.total_info_rate()
}

/// Report whether a solution moves information only directly to the sink
/// or to the adjacent inward ring.
pub fn classify_flows(solution: &FlowSolution, tol: f64) -> StructureReport {
    let n = solution.n();
    let mut max_other = 0.0f64;
    for j in 1..=n {
        for i in 0..=n {
            if i == j || i == 0 || i == j - 1 {
                continue;
            }
            max_other = max_other.max(solution.x[i][j]);
        }
    }
    StructureReport {
        is_direct_stepwise_only: max_other <= tol,
        max_other_mass: max_other,
    }
}

/// Materialize the equal-depletion construction as a flow schedule:
/// stepwise flows `y_j` plus the implied direct remainders.
pub fn analytic_flow_solution(profile: &NodeProfile, analytic: &AnalyticSolution) -> FlowSolution {
    let n = profile.n();
    let mut x = vec![vec![0.0; n + 1]; n + 1];
    for j in 1..=n {
        if j >= 2 {
            x[j - 1][j] = analytic.y[j];
        }
        x[0][j] += analytic.direct_flow(profile, j);
    }
    let (per_node, total_power) = tabulate(profile, &x);
    FlowSolution {
        profile: profile.clone(),
        x,
        phi: analytic.phi,
        per_node,
        objective_kind: ObjectiveKind::MaxLifetime,
        total_power,
        lp_iterations: 0,
    }
}

/// Express a flow schedule as a point of the maximum-lifetime program's
/// variable space, in [`admissible_pairs`] order with `phi` last.
pub fn lifetime_lp_point(profile: &NodeProfile, solution: &FlowSolution) -> Vec<f64> {
    let pairs = admissible_pairs(profile);
    let mut point = Vec::with_capacity(pairs.len() + 1);
    for &(i, j) in &pairs {
        point.push(solution.x[i][j]);
    }
    point.push(solution.phi);
    point
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytic::stepwise_flows;
    use crate::ring_model::{build_profile, Normalization, SystemParams};
    use crate::util::rel_diff;
    use std::f64::consts::PI;

    fn params(alpha: f64, beta: f64, gamma: f64, lambda: f64, n: usize, d: f64) -> SystemParams {
        SystemParams {
            alpha,
            beta,
            gamma,
            lambda,
            n_rings: n,
            spacing: d,
            normalization: Normalization::PaperVerbatim,
        }
    }

    fn baseline(n: usize) -> NodeProfile {
        build_profile(&params(1.0, 1.0, 1.0, 2.0, n, 1.0)).unwrap()
    }

    fn custom(a: &[f64], beta: f64, c: &[f64], lambda: f64) -> NodeProfile {
        NodeProfile {
            params: params(1.0, beta, 1.0, lambda, a.len(), 1.0),
            a: a.to_vec(),
            b: vec![beta; a.len()],
            c: c.to_vec(),
            k_a: 1.0,
            k_c: 1.0,
            k_t: 1.0,
        }
    }

    #[test]
    fn lifetime_lp_shape_without_compression() {
        let p = build_max_lifetime_lp(&baseline(2));
        assert_eq!(p.objective.len(), 5); // x01 x21 x02 x12 + phi
        assert_eq!(p.eq_matrix.len(), 2);
        assert_eq!(p.ineq_matrix.len(), 2);
    }

    #[test]
    fn lifetime_lp_shape_with_compression_drops_backward_vars() {
        let profile = build_profile(&params(1.0, 0.5, 1.0, 2.0, 2, 1.0)).unwrap();
        let p = build_max_lifetime_lp(&profile);
        assert_eq!(p.objective.len(), 4); // x01 x02 x12 + phi
        assert_eq!(
            admissible_pairs(&profile),
            vec![(0, 1), (0, 2), (1, 2)]
        );
    }

    #[test]
    fn lifetime_lp_single_ring() {
        let profile = baseline(1);
        let p = build_max_lifetime_lp(&profile);
        assert_eq!(p.objective.len(), 2);
        assert_eq!(p.eq_matrix, vec![vec![1.0, 0.0]]);
        let b1a1 = profile.compression(1) * profile.info_rate(1);
        assert!((p.eq_rhs[0] - b1a1).abs() < 1e-12);
        assert_eq!(p.ineq_matrix.len(), 1);
        assert!((p.ineq_matrix[0][0] - 1.0 / profile.capacity(1)).abs() < 1e-15);
        assert_eq!(p.ineq_matrix[0][1], -1.0);
    }

    #[test]
    fn solve_single_ring_baseline_phi_is_one() {
        let sol = solve_max_lifetime(&baseline(1)).unwrap();
        assert!(rel_diff(sol.phi, 1.0) < 1e-9);
    }

    #[test]
    fn solve_two_ring_baseline_matches_hand_solution() {
        let profile = baseline(2);
        let sol = solve_max_lifetime(&profile).unwrap();
        assert!(rel_diff(sol.phi, 2.2) < 1e-9);
        assert!(rel_diff(sol.x[1][2], 3.6 * PI) < 1e-9);
        assert!(rel_diff(sol.x[0][2], 2.4 * PI) < 1e-9);
        assert!(rel_diff(sol.x[0][1], 6.6 * PI) < 1e-9);
        // Both nodes deplete at exactly phi.
        for nf in &sol.per_node {
            assert!(rel_diff(nf.depletion_rate, 2.2) < 1e-9);
        }
        // The returned vertex satisfies the program it came from.
        let problem = build_max_lifetime_lp(&profile);
        let point = lifetime_lp_point(&profile, &sol);
        let rep = crate::simplex::residuals(&problem, &point).unwrap();
        assert!(rep.max_eq_residual <= 1e-9);
        assert!(rep.max_ineq_violation <= 1e-9);
        assert!(rep.min_variable >= -1e-9);
    }

    #[test]
    fn solve_three_ring_baseline() {
        let sol = solve_max_lifetime(&baseline(3)).unwrap();
        assert!(rel_diff(sol.phi, 49.0 / 13.0) < 1e-9);
    }

    #[test]
    fn min_power_three_rings_charges_unit_chain() {
        // Every unit travels j unit hops when beta = 1.
        let profile = baseline(3);
        let sol = solve_min_power(&profile).unwrap();
        let expected: f64 = (1..=3).map(|j| profile.info_rate(j) * j as f64).sum();
        assert!(rel_diff(sol.total_power, expected) < 1e-9);
    }

    #[test]
    fn min_power_uniform_profile_worked_example() {
        let profile = custom(&[1.0, 2.0, 3.0], 1.0, &[1.0; 3], 2.0);
        let sol = solve_min_power(&profile).unwrap();
        assert!(rel_diff(sol.total_power, 14.0) < 1e-9);
        // Node 1 relays everything: power 6 * t1 * a1.
        let node1 = sol.node_power(1);
        assert!(rel_diff(node1, 6.0) < 1e-9);
    }

    #[test]
    fn min_power_with_compression_routes_through_neighbor() {
        let profile = custom(&[1.0, 2.0], 0.5, &[1.0; 2], 2.0);
        let sol = solve_min_power(&profile).unwrap();
        assert!(rel_diff(sol.total_power, 2.0) < 1e-9);
    }

    #[test]
    fn min_power_single_ring() {
        let profile = custom(&[3.0], 0.5, &[1.0], 2.0);
        let sol = solve_min_power(&profile).unwrap();
        assert!(rel_diff(sol.total_power, 0.5 * 3.0) < 1e-12);
    }

    #[test]
    fn classification_of_two_ring_optimum() {
        let profile = baseline(2);
        let sol = solve_max_lifetime(&profile).unwrap();
        let report = classify_flows(&sol, default_classification_tol(&profile));
        assert!(report.is_direct_stepwise_only);
    }

    #[test]
    fn classification_flags_skip_flows() {
        let profile = baseline(3);
        let mut sol = solve_max_lifetime(&profile).unwrap();
        sol.x[1][3] = 1.0;
        let report = classify_flows(&sol, 1e-9);
        assert!(!report.is_direct_stepwise_only);
        assert_eq!(report.max_other_mass, 1.0);
    }

    #[test]
    fn classification_single_ring_is_vacuous() {
        let profile = baseline(1);
        let sol = solve_max_lifetime(&profile).unwrap();
        let report = classify_flows(&sol, 0.0);
        assert!(report.is_direct_stepwise_only);
        assert_eq!(report.max_other_mass, 0.0);
    }

    #[test]
    fn conservation_and_sink_balance() {
        for &beta in &[1.0, 0.5] {
            let profile = build_profile(&params(1.0, beta, 1.0, 2.0, 8, 1.0)).unwrap();
            let sol = solve_max_lifetime(&profile).unwrap();
            assert!(sol.max_conservation_residual() < 1e-8);
            if beta == 1.0 {
                assert!(
                    (sol.sink_inflow() - profile.total_info_rate()).abs() < 1e-8,
                    "sink balance violated"
                );
            }
        }
    }

    #[test]
    fn depletion_bound_holds_per_node() {
        let sol = solve_max_lifetime(&baseline(12)).unwrap();
        for nf in &sol.per_node {
            assert!(nf.depletion_rate <= sol.phi + 1e-8);
        }
    }

    #[test]
    fn spacing_rescales_phi_by_d_to_lambda() {
        for &lambda in &[1.5, 2.0, 3.0] {
            let unit = solve_max_lifetime(
                &build_profile(&params(1.0, 1.0, 1.0, lambda, 6, 1.0)).unwrap(),
            )
            .unwrap();
            for &d in &[0.05, 0.5] {
                let scaled = solve_max_lifetime(
                    &build_profile(&params(1.0, 1.0, 1.0, lambda, 6, d)).unwrap(),
                )
                .unwrap();
                assert!(
                    rel_diff(scaled.phi, d.powf(lambda) * unit.phi) < 1e-8,
                    "lambda={lambda} d={d}"
                );
            }
        }
    }

    #[test]
    fn analytic_point_is_lp_feasible_and_optimal_here() {
        let profile = baseline(5);
        let lp = solve_max_lifetime(&profile).unwrap();
        let analytic = stepwise_flows(&profile);
        assert!(analytic.valid);
        let constructed = analytic_flow_solution(&profile, &analytic);
        let point = lifetime_lp_point(&profile, &constructed);
        let problem = build_max_lifetime_lp(&profile);
        let rep = crate::simplex::scaled_residuals(&problem, &point).unwrap();
        assert!(rep.max_eq_residual < 1e-8);
        assert!(rep.max_ineq_violation < 1e-8);
        assert!(rep.min_variable > -1e-9);
        assert!(rel_diff(constructed.phi, lp.phi) < 1e-6);
    }

    #[test]
    fn repeated_solves_are_bitwise_identical() {
        let profile = baseline(7);
        let a = solve_max_lifetime(&profile).unwrap();
        let b = solve_max_lifetime(&profile).unwrap();
        assert_eq!(a.lp_iterations, b.lp_iterations);
        assert_eq!(a.phi.to_bits(), b.phi.to_bits());
        assert_eq!(a.x, b.x);
    }
}
