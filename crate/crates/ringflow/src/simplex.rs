//! Dense two-phase primal simplex for small linear programs.
//!
//! Problems are given in the form
//!
//! ```text
//! minimize    objective . x
//! subject to  eq_matrix   x  = eq_rhs
//!             ineq_matrix x <= ineq_rhs
//!             x >= 0
//! ```
//!
//! The solver works on the full tableau. Rows are scaled to unit max-norm
//! before solving (the cost data of the flow problems spans many orders of
//! magnitude); the reported solution is in original units. Pricing is
//! Dantzig's rule, switching permanently to Bland's rule after
//! `3 * (rows + cols)` pivots so that degenerate instances cannot cycle.
//! Ratio-test ties are broken by lowest row index, which makes every solve
//! deterministic.

use std::fmt;

/// Pivot elements smaller than this are treated as zero.
pub const PIVOT_TOL: f64 = 1e-10;
/// Primal feasibility tolerance, applied to row-scaled data.
pub const FEASIBILITY_TOL: f64 = 1e-9;
/// Reduced-cost tolerance at termination.
pub const OPTIMALITY_TOL: f64 = 1e-9;

/// Dense linear program in canonical form. All variables are bounded below
/// by zero.
#[derive(Clone, Debug, PartialEq)]
pub struct LpProblem {
    pub objective: Vec<f64>,
    pub eq_matrix: Vec<Vec<f64>>,
    pub eq_rhs: Vec<f64>,
    pub ineq_matrix: Vec<Vec<f64>>,
    pub ineq_rhs: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

impl fmt::Display for LpStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpStatus::Optimal => write!(f, "optimal"),
            LpStatus::Infeasible => write!(f, "infeasible"),
            LpStatus::Unbounded => write!(f, "unbounded"),
        }
    }
}

/// Solved state. `x` and `objective_value` are meaningful only when
/// `status == Optimal`; otherwise `x` is empty and the objective is NaN.
#[derive(Clone, Debug)]
pub struct LpSolution {
    pub x: Vec<f64>,
    pub objective_value: f64,
    pub status: LpStatus,
    pub iterations: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub enum LpError {
    Malformed(String),
    /// The pivot limit was exhausted; indicates a solver defect, not a
    /// property of the input.
    IterationLimit { iterations: usize },
    DimensionMismatch { expected: usize, got: usize },
}

impl fmt::Display for LpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LpError::Malformed(msg) => write!(f, "malformed problem: {msg}"),
            LpError::IterationLimit { iterations } => {
                write!(f, "simplex failed to terminate after {iterations} pivots")
            }
            LpError::DimensionMismatch { expected, got } => {
                write!(f, "solution has {got} entries, problem has {expected} variables")
            }
        }
    }
}

impl std::error::Error for LpError {}

impl LpProblem {
    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn num_rows(&self) -> usize {
        self.eq_matrix.len() + self.ineq_matrix.len()
    }

    fn validate(&self) -> Result<(), LpError> {
        let n = self.objective.len();
        if n == 0 {
            return Err(LpError::Malformed("no variables".into()));
        }
        if self.eq_matrix.len() != self.eq_rhs.len() {
            return Err(LpError::Malformed(format!(
                "{} equality rows but {} right-hand sides",
                self.eq_matrix.len(),
                self.eq_rhs.len()
            )));
        }
        if self.ineq_matrix.len() != self.ineq_rhs.len() {
            return Err(LpError::Malformed(format!(
                "{} inequality rows but {} right-hand sides",
                self.ineq_matrix.len(),
                self.ineq_rhs.len()
            )));
        }
        for row in self.eq_matrix.iter().chain(self.ineq_matrix.iter()) {
            if row.len() != n {
                return Err(LpError::Malformed(format!(
                    "constraint row has {} coefficients, expected {n}",
                    row.len()
                )));
            }
            if row.iter().any(|v| !v.is_finite()) {
                return Err(LpError::Malformed("non-finite constraint coefficient".into()));
            }
        }
        if self.objective.iter().any(|v| !v.is_finite())
            || self.eq_rhs.iter().any(|v| !v.is_finite())
            || self.ineq_rhs.iter().any(|v| !v.is_finite())
        {
            return Err(LpError::Malformed("non-finite problem data".into()));
        }
        Ok(())
    }
}

/// Constraint slacks of a candidate point, recomputed directly from the
/// original problem data.
#[derive(Clone, Copy, Debug)]
pub struct ResidualReport {
    pub max_eq_residual: f64,
    pub max_ineq_violation: f64,
    pub min_variable: f64,
}

/// Raw residuals of `x` against the problem, in original units.
pub fn residuals(problem: &LpProblem, x: &[f64]) -> Result<ResidualReport, LpError> {
    problem.validate()?;
    if x.len() != problem.num_vars() {
        return Err(LpError::DimensionMismatch {
            expected: problem.num_vars(),
            got: x.len(),
        });
    }
    report(problem, x, false)
}

/// Residuals with every constraint row normalized to unit max-norm, the
/// same scale the solver's feasibility tolerance refers to.
pub fn scaled_residuals(problem: &LpProblem, x: &[f64]) -> Result<ResidualReport, LpError> {
    problem.validate()?;
    if x.len() != problem.num_vars() {
        return Err(LpError::DimensionMismatch {
            expected: problem.num_vars(),
            got: x.len(),
        });
    }
    report(problem, x, true)
}

fn report(problem: &LpProblem, x: &[f64], scaled: bool) -> Result<ResidualReport, LpError> {
    let row_scale = |row: &[f64]| -> f64 {
        if !scaled {
            return 1.0;
        }
        let m = row.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        if m > 0.0 {
            m
        } else {
            1.0
        }
    };
    let mut max_eq = 0.0f64;
    for (row, &rhs) in problem.eq_matrix.iter().zip(&problem.eq_rhs) {
        let lhs: f64 = row.iter().zip(x).map(|(a, b)| a * b).sum();
        max_eq = max_eq.max((lhs - rhs).abs() / row_scale(row));
    }
    let mut max_ineq = 0.0f64;
    for (row, &rhs) in problem.ineq_matrix.iter().zip(&problem.ineq_rhs) {
        let lhs: f64 = row.iter().zip(x).map(|(a, b)| a * b).sum();
        max_ineq = max_ineq.max((lhs - rhs).max(0.0) / row_scale(row));
    }
    let min_variable = x.iter().fold(f64::INFINITY, |acc, &v| acc.min(v));
    Ok(ResidualReport {
        max_eq_residual: max_eq,
        max_ineq_violation: max_ineq,
        min_variable: if x.is_empty() { 0.0 } else { min_variable },
    })
}

struct Tableau {
    /// Constraint rows over all columns (structural, slack, artificial).
    rows: Vec<Vec<f64>>,
    rhs: Vec<f64>,
    /// Basic variable of each row.
    basis: Vec<usize>,
    /// Reduced costs of the phase-1 objective (sum of artificials).
    cost1: Vec<f64>,
    /// Reduced costs of the real objective, maintained through both phases.
    cost2: Vec<f64>,
    /// First artificial column; columns at or beyond this index never enter.
    artificial_start: usize,
    iterations: usize,
    bland_after: usize,
    hard_cap: usize,
}

impl Tableau {
    fn pivot(&mut self, leave_row: usize, enter_col: usize) {
        let piv = self.rows[leave_row][enter_col];
        let inv = 1.0 / piv;
        for v in self.rows[leave_row].iter_mut() {
            *v *= inv;
        }
        self.rhs[leave_row] *= inv;
        self.rows[leave_row][enter_col] = 1.0;

        let pivot_row = self.rows[leave_row].clone();
        let pivot_rhs = self.rhs[leave_row];
        for r in 0..self.rows.len() {
            if r == leave_row {
                continue;
            }
            let factor = self.rows[r][enter_col];
            if factor != 0.0 {
                for (v, p) in self.rows[r].iter_mut().zip(&pivot_row) {
                    *v -= factor * p;
                }
                self.rows[r][enter_col] = 0.0;
                self.rhs[r] -= factor * pivot_rhs;
            }
        }
        for cost in [&mut self.cost1, &mut self.cost2] {
            let factor = cost[enter_col];
            if factor != 0.0 {
                for (v, p) in cost.iter_mut().zip(&pivot_row) {
                    *v -= factor * p;
                }
                cost[enter_col] = 0.0;
            }
        }
        self.basis[leave_row] = enter_col;
        self.iterations += 1;
    }

    /// Entering column for the given cost row, or None at optimality.
    fn entering(&self, phase_one: bool) -> Option<usize> {
        let cost = if phase_one { &self.cost1 } else { &self.cost2 };
        if self.iterations >= self.bland_after {
            // Bland: lowest improving index.
            (0..self.artificial_start).find(|&j| cost[j] < -OPTIMALITY_TOL)
        } else {
            // Dantzig: most negative reduced cost, lowest index on ties.
            let mut best = None;
            let mut best_cost = -OPTIMALITY_TOL;
            for (j, &c) in cost.iter().take(self.artificial_start).enumerate() {
                if c < best_cost {
                    best_cost = c;
                    best = Some(j);
                }
            }
            best
        }
    }

    /// Leaving row by minimum ratio, lowest row index on ties. None means
    /// the entering direction is unbounded.
    fn leaving(&self, enter_col: usize) -> Option<usize> {
        let mut best: Option<(usize, f64)> = None;
        for r in 0..self.rows.len() {
            let coef = self.rows[r][enter_col];
            if coef > PIVOT_TOL {
                let ratio = self.rhs[r].max(0.0) / coef;
                match best {
                    Some((_, best_ratio)) if ratio >= best_ratio => {}
                    _ => best = Some((r, ratio)),
                }
            }
        }
        best.map(|(r, _)| r)
    }

    fn run_phase(&mut self, phase_one: bool) -> Result<PhaseEnd, LpError> {
        loop {
            if self.iterations > self.hard_cap {
                return Err(LpError::IterationLimit {
                    iterations: self.iterations,
                });
            }
            let Some(enter) = self.entering(phase_one) else {
                return Ok(PhaseEnd::Converged);
            };
            let Some(leave) = self.leaving(enter) else {
                return Ok(PhaseEnd::Unbounded);
            };
            self.pivot(leave, enter);
        }
    }
}

enum PhaseEnd {
    Converged,
    Unbounded,
}

/// Solve the program. Infeasible and unbounded instances are reported
/// through [`LpSolution::status`]; `Err` is reserved for malformed input
/// and solver failure.
pub fn solve_lp(problem: &LpProblem) -> Result<LpSolution, LpError> {
    problem.validate()?;

    let n = problem.num_vars();
    let m_eq = problem.eq_matrix.len();
    let m_ineq = problem.ineq_matrix.len();
    let m = m_eq + m_ineq;

    // Assemble scaled rows: structural columns followed by one slack column
    // per inequality. Scaling divides each row and its rhs by the max-norm
    // of the structural coefficients.
    let num_slack = m_ineq;
    let width = n + num_slack;
    let mut rows: Vec<Vec<f64>> = Vec::with_capacity(m);
    let mut rhs: Vec<f64> = Vec::with_capacity(m);
    let mut is_eq_row: Vec<bool> = Vec::with_capacity(m);

    for (row, &b) in problem.eq_matrix.iter().zip(&problem.eq_rhs) {
        let scale = row.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        let scale = if scale > 0.0 { scale } else { 1.0 };
        let mut full = vec![0.0; width];
        for (dst, src) in full.iter_mut().zip(row) {
            *dst = src / scale;
        }
        rows.push(full);
        rhs.push(b / scale);
        is_eq_row.push(true);
    }
    for (k, (row, &b)) in problem.ineq_matrix.iter().zip(&problem.ineq_rhs).enumerate() {
        let scale = row.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        let scale = if scale > 0.0 { scale } else { 1.0 };
        let mut full = vec![0.0; width];
        for (dst, src) in full.iter_mut().zip(row) {
            *dst = src / scale;
        }
        full[n + k] = 1.0;
        rows.push(full);
        rhs.push(b / scale);
        is_eq_row.push(false);
    }

    // Make every right-hand side nonnegative.
    for r in 0..m {
        if rhs[r] < 0.0 {
            for v in rows[r].iter_mut() {
                *v = -*v;
            }
            rhs[r] = -rhs[r];
        }
    }
    let rhs_scale = rhs.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));

    // Initial basis: the slack where it survived with coefficient +1,
    // otherwise a fresh artificial column.
    let mut basis = vec![usize::MAX; m];
    let mut artificial_rows: Vec<usize> = Vec::new();
    for r in 0..m {
        if !is_eq_row[r] {
            let slack_col = n + (r - m_eq);
            if rows[r][slack_col] > 0.0 {
                basis[r] = slack_col;
                continue;
            }
        }
        artificial_rows.push(r);
    }
    let artificial_start = width;
    let total = width + artificial_rows.len();
    for row in rows.iter_mut() {
        row.resize(total, 0.0);
    }
    for (k, &r) in artificial_rows.iter().enumerate() {
        rows[r][artificial_start + k] = 1.0;
        basis[r] = artificial_start + k;
    }

    // Reduced cost rows. Phase 1 prices the artificials at 1: subtracting
    // each artificial row folds the basis in. Phase 2 prices the original
    // objective; its initial basis (slacks and artificials) has zero cost.
    let mut cost1 = vec![0.0; total];
    for &r in &artificial_rows {
        for (c, v) in cost1.iter_mut().zip(&rows[r]) {
            *c -= v;
        }
    }
    for (k, _) in artificial_rows.iter().enumerate() {
        cost1[artificial_start + k] = 0.0;
    }
    let mut cost2 = vec![0.0; total];
    cost2[..n].copy_from_slice(&problem.objective);
    // Row scaling leaves the objective row untouched, but pricing works
    // better when the columns it compares are on a common scale; normalize
    // by the largest cost magnitude.
    let cost_scale = cost2.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    let cost_scale = if cost_scale > 0.0 { cost_scale } else { 1.0 };
    for v in cost2.iter_mut() {
        *v /= cost_scale;
    }

    let mut tab = Tableau {
        rows,
        rhs,
        basis,
        cost1,
        cost2,
        artificial_start,
        iterations: 0,
        bland_after: 3 * (m + n),
        hard_cap: 100 * (m + n) + 10_000,
    };

    // Phase 1: minimize the sum of artificials.
    if !artificial_rows.is_empty() {
        match tab.run_phase(true)? {
            PhaseEnd::Converged => {}
            // The phase-1 objective is bounded below by zero; an unbounded
            // ray here means the tableau lost feasibility numerically.
            PhaseEnd::Unbounded => {
                return Err(LpError::Malformed(
                    "phase 1 became unbounded; numerical breakdown".into(),
                ))
            }
        }
        let infeasibility: f64 = tab
            .basis
            .iter()
            .zip(&tab.rhs)
            .filter(|(&b, _)| b >= artificial_start)
            .map(|(_, &v)| v.max(0.0))
            .sum();
        if infeasibility > FEASIBILITY_TOL * (1.0 + rhs_scale) * 10.0 {
            return Ok(LpSolution {
                x: Vec::new(),
                objective_value: f64::NAN,
                status: LpStatus::Infeasible,
                iterations: tab.iterations,
            });
        }
        // Drive remaining artificials out of the basis; rows that cannot
        // pivot on any real column are redundant and dropped.
        let mut r = 0;
        while r < tab.rows.len() {
            if tab.basis[r] >= artificial_start {
                let enter = (0..artificial_start)
                    .find(|&j| tab.rows[r][j].abs() > PIVOT_TOL);
                match enter {
                    Some(j) => tab.pivot(r, j),
                    None => {
                        tab.rows.remove(r);
                        tab.rhs.remove(r);
                        tab.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
        for row in tab.rows.iter_mut() {
            row.truncate(artificial_start);
        }
        tab.cost1.truncate(artificial_start);
        tab.cost2.truncate(artificial_start);
    }

    // Phase 2 on the real objective.
    match tab.run_phase(false)? {
        PhaseEnd::Converged => {}
        PhaseEnd::Unbounded => {
            return Ok(LpSolution {
                x: Vec::new(),
                objective_value: f64::NAN,
                status: LpStatus::Unbounded,
                iterations: tab.iterations,
            });
        }
    }

    let mut x = vec![0.0; n];
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < n {
            x[b] = tab.rhs[r];
        }
    }
    let objective_value: f64 = problem.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
    Ok(LpSolution {
        x,
        objective_value,
        status: LpStatus::Optimal,
        iterations: tab.iterations,
    })
}
